//! Command-line front end: single-image filtering and binarization, noise
//! injection, and corpus evaluation reports.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use kalgo::{
    add_salt_pepper, binarize, k_filter, load_pgm, median_filter, quality_report, save_pgm,
    BinaryImage, FilterMode, FilterParams, GrayImage, NoiseSpec, PgmError, PgmFormat,
};
use kalgo::report::{render, ReportFormat, RunRecord};

#[derive(Parser)]
#[command(
    name = "kalgo",
    version,
    about = "Document image preprocessing: conditional median filtering and mean-threshold binarization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Order-independent filtering over the original image.
    Buffered,
    /// Sequential in-place sweep where replacements feed later windows.
    PaperLiteral,
}

impl From<Mode> for FilterMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Buffered => FilterMode::Buffered,
            Mode::PaperLiteral => FilterMode::PaperLiteral,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Remove isolated impulse noise with the K-gated median filter
    Denoise {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_parser = parse_matrix_size, default_value_t = 2)]
        matrix_size: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Mode::Buffered)]
        mode: Mode,
    },
    /// Apply the unconditional median filter
    Median {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_parser = parse_matrix_size, default_value_t = 2)]
        matrix_size: u32,
    },
    /// Threshold at the global mean intensity
    Binarize { input: PathBuf, output: PathBuf },
    /// Denoise then binarize in one pass
    Pipeline {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_parser = parse_matrix_size, default_value_t = 2)]
        matrix_size: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Inject seeded salt-and-pepper noise
    Noise {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_parser = parse_probability)]
        density: f64,
        #[arg(long, value_parser = parse_probability, default_value_t = 0.5)]
        salt_fraction: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Score candidate images against a clean reference
    Evaluate {
        /// Clean reference image
        clean: PathBuf,
        /// Candidate images to score, reported in argument order
        #[arg(required = true)]
        candidates: Vec<PathBuf>,
        /// Ground-truth binarization as a PGM holding only 0 and 255
        #[arg(long)]
        truth: Option<PathBuf>,
        /// Report destination
        #[arg(long)]
        report: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

fn parse_matrix_size(s: &str) -> Result<u32, String> {
    let value: u32 = s.parse().map_err(|_| format!("invalid integer {s:?}"))?;
    FilterParams::new(value, 0)
        .map(|p| p.matrix_size())
        .map_err(|e| e.to_string())
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let value: f64 = s.parse().map_err(|_| format!("invalid number {s:?}"))?;
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(format!("{value} is not within [0, 1]"))
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: PgmError },
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    /// 1 for I/O and parse failures, 2 for inconsistent inputs.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Read { .. } | CliError::Write { .. } | CliError::Parse { .. } => 1,
            CliError::Invalid(_) => 2,
        }
    }
}

fn read_image(path: &Path) -> Result<GrayImage, CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    load_pgm(&bytes).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

/// Reads a ground-truth binarization: every pixel must be 0 (ink) or 255
/// (background).
fn read_truth(path: &Path) -> Result<BinaryImage, CliError> {
    let img = read_image(path)?;
    let bits = img
        .pixels()
        .iter()
        .map(|&v| match v {
            0 => Ok(1),
            255 => Ok(0),
            other => Err(CliError::Invalid(format!(
                "{}: ground truth must contain only 0 and 255, found {other}",
                path.display()
            ))),
        })
        .collect::<Result<Vec<u8>, _>>()?;
    Ok(BinaryImage::new(img.width(), img.height(), bits))
}

/// Writes through a temporary file in the destination directory so a
/// failure never leaves a partial output behind.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let to_write_err = |source: std::io::Error| CliError::Write {
        path: path.to_owned(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::Builder::new()
        .prefix(".kalgo-")
        .tempfile_in(dir)
        .map_err(to_write_err)?;
    tmp.write_all(bytes).map_err(to_write_err)?;
    tmp.persist(path)
        .map_err(|e| to_write_err(e.error))
        .map(|_| ())
}

fn write_image(path: &Path, img: &GrayImage) -> Result<(), CliError> {
    write_atomic(path, &save_pgm(img, PgmFormat::Binary))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Denoise {
            input,
            output,
            matrix_size,
            k,
            mode,
        } => {
            let img = read_image(&input)?;
            let params = FilterParams::new(matrix_size, k).expect("validated by clap");
            write_image(&output, &k_filter(&img, &params, mode.into()))
        }
        Command::Median {
            input,
            output,
            matrix_size,
        } => {
            let img = read_image(&input)?;
            write_image(&output, &median_filter(&img, matrix_size))
        }
        Command::Binarize { input, output } => {
            let img = read_image(&input)?;
            write_image(&output, &binarize(&img).render())
        }
        Command::Pipeline {
            input,
            output,
            matrix_size,
            k,
        } => {
            let img = read_image(&input)?;
            let params = FilterParams::new(matrix_size, k).expect("validated by clap");
            let filtered = k_filter(&img, &params, FilterMode::Buffered);
            write_image(&output, &binarize(&filtered).render())
        }
        Command::Noise {
            input,
            output,
            density,
            salt_fraction,
            seed,
        } => {
            let img = read_image(&input)?;
            let spec = NoiseSpec::new(density, salt_fraction, seed).expect("validated by clap");
            write_image(&output, &add_salt_pepper(&img, &spec))
        }
        Command::Evaluate {
            clean,
            candidates,
            truth,
            report,
            format,
        } => {
            let clean_img = read_image(&clean)?;
            let truth_img = match &truth {
                Some(path) => {
                    let t = read_truth(path)?;
                    if t.width() != clean_img.width() || t.height() != clean_img.height() {
                        return Err(CliError::Invalid(format!(
                            "{}: truth dimensions {}x{} do not match {} ({}x{})",
                            path.display(),
                            t.width(),
                            t.height(),
                            clean.display(),
                            clean_img.width(),
                            clean_img.height()
                        )));
                    }
                    Some(t)
                }
                None => None,
            };
            let mut records = Vec::with_capacity(candidates.len());
            for candidate in &candidates {
                let img = read_image(candidate)?;
                if !img.same_dimensions(&clean_img) {
                    return Err(CliError::Invalid(format!(
                        "{}: dimensions {}x{} do not match {} ({}x{})",
                        candidate.display(),
                        img.width(),
                        img.height(),
                        clean.display(),
                        clean_img.width(),
                        clean_img.height()
                    )));
                }
                let quality = quality_report(&img, &clean_img, truth_img.as_ref());
                records.push(
                    RunRecord::new(candidate.display().to_string(), "evaluate")
                        .with_quality(&quality),
                );
            }
            let format = match format {
                Format::Csv => ReportFormat::Csv,
                Format::Json => ReportFormat::Json,
            };
            write_atomic(&report, render(&records, format).as_bytes())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kalgo: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
