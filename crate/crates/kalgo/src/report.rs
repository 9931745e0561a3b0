//! Evaluation run records and their CSV/JSON serializations.
//!
//! Both formats carry the same flat field set in a fixed order, so golden
//! reports are byte-stable and the two encodings always agree on values.
//! Fields that do not apply to a given run are empty in CSV and `null` in
//! JSON; an infinite PSNR (zero MSE) is recorded as an absent value.

use serde::{Deserialize, Serialize};

use crate::metrics::QualityReport;

/// One evaluated image: identification, parameter echo, and metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub input: String,
    pub method: String,
    pub matrix_size: Option<u32>,
    pub k: Option<u32>,
    pub mode: Option<String>,
    pub density: Option<f64>,
    pub salt_fraction: Option<f64>,
    pub seed: Option<u64>,
    pub mse: Option<f64>,
    /// Absent when the MSE is zero (infinite PSNR).
    pub psnr: Option<f64>,
    pub changed_pixels: Option<u64>,
    pub tp: Option<u64>,
    pub fp: Option<u64>,
    #[serde(rename = "fn")]
    pub false_neg: Option<u64>,
    pub tn: Option<u64>,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub f1: Option<f64>,
    pub output: String,
}

impl RunRecord {
    /// Record with every optional field absent.
    pub fn new(input: impl Into<String>, method: impl Into<String>) -> Self {
        Self {
            input: input.into(),
            method: method.into(),
            matrix_size: None,
            k: None,
            mode: None,
            density: None,
            salt_fraction: None,
            seed: None,
            mse: None,
            psnr: None,
            changed_pixels: None,
            tp: None,
            fp: None,
            false_neg: None,
            tn: None,
            precision: None,
            recall: None,
            f1: None,
            output: String::new(),
        }
    }

    /// Copies metrics from a quality report into the record.
    pub fn with_quality(mut self, report: &QualityReport) -> Self {
        self.mse = Some(report.mse);
        self.psnr = if report.psnr.is_finite() {
            Some(report.psnr)
        } else {
            None
        };
        self.changed_pixels = Some(report.changed_pixels);
        if let Some(c) = report.confusion {
            self.tp = Some(c.true_pos);
            self.fp = Some(c.false_pos);
            self.false_neg = Some(c.false_neg);
            self.tn = Some(c.true_neg);
            self.precision = Some(c.precision());
            self.recall = Some(c.recall());
            self.f1 = Some(c.f1());
        }
        self
    }
}

/// Report serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

/// Serializes records with a header row and one line per record.
pub fn to_csv(records: &[RunRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.serialize(record).expect("CSV serialization");
    }
    String::from_utf8(writer.into_inner().expect("CSV flush")).expect("CSV is UTF-8")
}

pub fn from_csv(data: &str) -> Result<Vec<RunRecord>, csv::Error> {
    csv::Reader::from_reader(data.as_bytes())
        .deserialize()
        .collect()
}

/// Serializes records as a pretty-printed JSON array with keys in record
/// field order.
pub fn to_json(records: &[RunRecord]) -> String {
    let mut out = serde_json::to_string_pretty(records).expect("JSON serialization");
    out.push('\n');
    out
}

pub fn from_json(data: &str) -> Result<Vec<RunRecord>, serde_json::Error> {
    serde_json::from_str(data)
}

pub fn render(records: &[RunRecord], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => to_csv(records),
        ReportFormat::Json => to_json(records),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::image::GrayImage;
    use crate::metrics::quality_report;

    fn sample_records() -> Vec<RunRecord> {
        let clean = GrayImage::new(2, 1, vec![0, 255]);
        let noisy = GrayImage::new(2, 1, vec![10, 255]);
        let truth = crate::binarize::binarize(&clean);
        vec![
            RunRecord::new("clean.pgm", "evaluate")
                .with_quality(&quality_report(&clean, &clean, Some(&truth))),
            RunRecord::new("noisy.pgm", "evaluate")
                .with_quality(&quality_report(&noisy, &clean, Some(&truth))),
        ]
    }

    #[test]
    fn csv_round_trip_is_lossless() {
        let records = sample_records();
        assert_eq!(from_csv(&to_csv(&records)).unwrap(), records);
    }

    #[test]
    fn json_round_trip_is_lossless() {
        let records = sample_records();
        assert_eq!(from_json(&to_json(&records)).unwrap(), records);
    }

    #[test]
    fn infinite_psnr_is_recorded_as_absent() {
        let records = sample_records();
        assert_eq!(records[0].psnr, None);
        assert!(records[1].psnr.is_some());
    }

    #[test]
    fn csv_header_matches_field_order() {
        let csv = to_csv(&sample_records());
        let header = csv.lines().next().unwrap();
        assert_eq!(
            header,
            "input,method,matrix_size,k,mode,density,salt_fraction,seed,mse,psnr,\
             changed_pixels,tp,fp,fn,tn,precision,recall,f1,output"
        );
    }

    #[test]
    fn csv_and_json_agree_on_values() {
        let records = sample_records();
        assert_eq!(
            from_csv(&to_csv(&records)).unwrap(),
            from_json(&to_json(&records)).unwrap()
        );
    }
}
