//! Document image preprocessing for OCR front ends.
//!
//! Implements the K-Algorithm, a two-step cleanup method for scanned
//! documents: a conditional median filter that replaces a pixel only when
//! the count of minimum-intensity values in its neighborhood equals the
//! parameter `K`, followed by global mean-threshold binarization. A plain
//! median filter, a seeded salt-and-pepper noise injector, and quality
//! metrics (MSE/PSNR, ink confusion statistics) are included so the two
//! filters can be compared on the same inputs.

pub mod binarize;
pub mod error;
pub mod filters;
pub mod image;
pub mod metrics;
pub mod noise;
pub mod pgm;
pub mod report;

pub use binarize::{binarize, k_algorithm, mean_intensity, Threshold};
pub use error::ParamError;
pub use filters::{k_filter, median_filter, neighborhood, FilterMode, FilterParams, Window};
pub use image::{BinaryImage, GrayImage};
pub use metrics::{
    binary_confusion, changed_pixels, mse, psnr, quality_report, Confusion, QualityReport,
};
pub use noise::{add_salt_pepper, NoiseSpec};
pub use pgm::{load_pgm, save_pgm, PgmError, PgmFormat};
