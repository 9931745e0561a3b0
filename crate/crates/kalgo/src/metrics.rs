//! Fidelity metrics against clean references and ink-detection statistics
//! against ground-truth binarizations.

use crate::binarize::binarize;
use crate::image::{BinaryImage, GrayImage};

/// Confusion counts over ink (bit 1) as the positive class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Confusion {
    pub true_pos: u64,
    pub false_pos: u64,
    pub false_neg: u64,
    pub true_neg: u64,
}

impl Confusion {
    /// `tp / (tp + fp)`, or 0 when nothing was predicted as ink.
    pub fn precision(&self) -> f64 {
        ratio(self.true_pos, self.true_pos + self.false_pos)
    }

    /// `tp / (tp + fn)`, or 0 when the truth contains no ink.
    pub fn recall(&self) -> f64 {
        ratio(self.true_pos, self.true_pos + self.false_neg)
    }

    /// Harmonic mean of precision and recall, or 0 when both are 0.
    pub fn f1(&self) -> f64 {
        let p = self.precision();
        let r = self.recall();
        if p + r == 0.0 {
            0.0
        } else {
            2.0 * p * r / (p + r)
        }
    }

    pub fn total(&self) -> u64 {
        self.true_pos + self.false_pos + self.false_neg + self.true_neg
    }
}

fn ratio(num: u64, denom: u64) -> f64 {
    if denom == 0 {
        0.0
    } else {
        num as f64 / denom as f64
    }
}

/// Combined evaluation result for one candidate image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QualityReport {
    pub mse: f64,
    /// `f64::INFINITY` when `mse` is zero.
    pub psnr: f64,
    pub changed_pixels: u64,
    pub confusion: Option<Confusion>,
}

fn assert_same_dimensions(a: &GrayImage, b: &GrayImage) {
    assert!(
        a.same_dimensions(b),
        "dimension mismatch: {}x{} vs {}x{}",
        a.width(),
        a.height(),
        b.width(),
        b.height()
    );
}

/// Mean squared error, accumulated in exact integer arithmetic before the
/// final division. Panics on a dimension mismatch.
pub fn mse(a: &GrayImage, b: &GrayImage) -> f64 {
    assert_same_dimensions(a, b);
    let sum: u64 = a
        .pixels()
        .iter()
        .zip(b.pixels())
        .map(|(&x, &y)| {
            let d = x as i64 - y as i64;
            (d * d) as u64
        })
        .sum();
    sum as f64 / a.len() as f64
}

/// Peak signal-to-noise ratio in decibels against an 8-bit peak of 255;
/// `f64::INFINITY` for identical images.
pub fn psnr(a: &GrayImage, b: &GrayImage) -> f64 {
    let mse = mse(a, b);
    if mse == 0.0 {
        f64::INFINITY
    } else {
        10.0 * (255.0 * 255.0 / mse).log10()
    }
}

/// Number of positions where the two images differ.
pub fn changed_pixels(a: &GrayImage, b: &GrayImage) -> u64 {
    assert_same_dimensions(a, b);
    a.pixels()
        .iter()
        .zip(b.pixels())
        .filter(|(x, y)| x != y)
        .count() as u64
}

/// Per-pixel confusion counts of `pred` against `truth`, ink (bit 1) being
/// the positive class. Panics on a dimension mismatch.
pub fn binary_confusion(pred: &BinaryImage, truth: &BinaryImage) -> Confusion {
    assert!(
        pred.width() == truth.width() && pred.height() == truth.height(),
        "dimension mismatch: {}x{} vs {}x{}",
        pred.width(),
        pred.height(),
        truth.width(),
        truth.height()
    );
    let mut c = Confusion {
        true_pos: 0,
        false_pos: 0,
        false_neg: 0,
        true_neg: 0,
    };
    for (&p, &t) in pred.bits().iter().zip(truth.bits()) {
        match (p, t) {
            (1, 1) => c.true_pos += 1,
            (1, 0) => c.false_pos += 1,
            (0, 1) => c.false_neg += 1,
            _ => c.true_neg += 1,
        }
    }
    c
}

/// Evaluates a candidate against a clean reference; when a ground truth is
/// supplied, the candidate's own binarization is scored against it.
pub fn quality_report(
    candidate: &GrayImage,
    clean: &GrayImage,
    truth: Option<&BinaryImage>,
) -> QualityReport {
    QualityReport {
        mse: mse(candidate, clean),
        psnr: psnr(candidate, clean),
        changed_pixels: changed_pixels(candidate, clean),
        confusion: truth.map(|t| binary_confusion(&binarize(candidate), t)),
    }
}
