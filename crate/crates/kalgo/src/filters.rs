//! Neighborhood extraction, the baseline median filter, and the
//! conditional (K-gated) median filter.
//!
//! The window parameter follows the `Matrix_Size` convention: offsets span
//! `-(matrix_size / 2) ..= +(matrix_size / 2)`, so the window side is
//! `matrix_size + 1` and the value 2 denotes a 3x3 window. Borders are
//! handled by clipping: neighbors outside the image are skipped, never
//! padded, so edge windows are smaller than interior ones.

use crate::error::ParamError;
use crate::image::GrayImage;

/// Window geometry and isolation-count gate for [`k_filter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterParams {
    matrix_size: u32,
    k: u32,
}

impl FilterParams {
    /// Validates that `matrix_size` is an even integer >= 2.
    ///
    /// Odd values would make the `matrix_size / 2` offset bounds
    /// asymmetric, so they are rejected outright.
    pub fn new(matrix_size: u32, k: u32) -> Result<Self, ParamError> {
        if matrix_size < 2 || !matrix_size.is_multiple_of(2) {
            return Err(ParamError::MatrixSize(matrix_size));
        }
        Ok(Self { matrix_size, k })
    }

    pub fn matrix_size(&self) -> u32 {
        self.matrix_size
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Offset radius: the window spans `-radius ..= +radius` in both axes.
    pub fn radius(&self) -> u32 {
        self.matrix_size / 2
    }
}

impl Default for FilterParams {
    /// 3x3 window with an isolation count of one.
    fn default() -> Self {
        Self { matrix_size: 2, k: 1 }
    }
}

/// Whether replacements are visible to later windows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterMode {
    /// Every window reads the original image; output order-independent.
    Buffered,
    /// Column-by-column in-place sweep (x outer, y inner) where each
    /// replacement is observed by all later windows. Inherently sequential.
    PaperLiteral,
}

/// Clipped neighborhood intensities for one pixel, in row-major scan
/// order of the neighborhood. Always contains at least the center pixel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    values: Vec<u8>,
}

impl Window {
    /// Panics on an empty value list; neighborhoods always include the
    /// center pixel so this is unreachable through [`neighborhood`].
    pub fn new(values: Vec<u8>) -> Self {
        assert!(!values.is_empty(), "window must contain at least one value");
        Self { values }
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }

    /// Element at 0-based index `len / 2` of the ascending-sorted values:
    /// the true median for odd lengths, the upper median for even ones.
    pub fn median(&self) -> u8 {
        let mut sorted = self.values.clone();
        sorted.sort_unstable();
        sorted[sorted.len() / 2]
    }

    /// Multiplicity of the minimum value; always >= 1.
    pub fn count_min(&self) -> usize {
        let min = *self.values.iter().min().expect("window is non-empty");
        self.values.iter().filter(|&&v| v == min).count()
    }
}

fn assert_matrix_size(matrix_size: u32) {
    assert!(
        matrix_size >= 2 && matrix_size.is_multiple_of(2),
        "matrix size must be an even integer >= 2, got {matrix_size}"
    );
}

/// Collects the clipped neighborhood of `(x, y)`, including the center
/// pixel. Panics if the center is out of bounds or `matrix_size` is
/// invalid.
pub fn neighborhood(img: &GrayImage, x: u32, y: u32, matrix_size: u32) -> Window {
    assert_matrix_size(matrix_size);
    assert!(
        x < img.width() && y < img.height(),
        "window center ({x}, {y}) out of bounds for {}x{} image",
        img.width(),
        img.height()
    );
    let radius = (matrix_size / 2) as i64;
    let (w, h) = (img.width() as i64, img.height() as i64);
    let (cx, cy) = (x as i64, y as i64);
    let mut values = Vec::with_capacity(((matrix_size + 1) * (matrix_size + 1)) as usize);
    for dy in -radius..=radius {
        let ny = cy + dy;
        if ny < 0 || ny >= h {
            continue;
        }
        for dx in -radius..=radius {
            let nx = cx + dx;
            if nx < 0 || nx >= w {
                continue;
            }
            values.push(img.get(nx as u32, ny as u32));
        }
    }
    Window::new(values)
}

/// Unconditional median filter: every output pixel is the median of its
/// clipped neighborhood in the original image.
pub fn median_filter(img: &GrayImage, matrix_size: u32) -> GrayImage {
    assert_matrix_size(matrix_size);
    let mut pixels = Vec::with_capacity(img.len());
    for y in 0..img.height() {
        for x in 0..img.width() {
            pixels.push(neighborhood(img, x, y, matrix_size).median());
        }
    }
    GrayImage::new(img.width(), img.height(), pixels)
}

/// Conditional median filter: a pixel is replaced by its neighborhood
/// median only when the count of minimum-intensity values in the window
/// equals `params.k`; otherwise it is left unchanged.
pub fn k_filter(img: &GrayImage, params: &FilterParams, mode: FilterMode) -> GrayImage {
    match mode {
        FilterMode::Buffered => {
            let mut pixels = Vec::with_capacity(img.len());
            for y in 0..img.height() {
                for x in 0..img.width() {
                    let window = neighborhood(img, x, y, params.matrix_size());
                    let value = if window.count_min() == params.k() as usize {
                        window.median()
                    } else {
                        img.get(x, y)
                    };
                    pixels.push(value);
                }
            }
            GrayImage::new(img.width(), img.height(), pixels)
        }
        FilterMode::PaperLiteral => {
            let mut out = img.clone();
            for x in 0..out.width() {
                for y in 0..out.height() {
                    let window = neighborhood(&out, x, y, params.matrix_size());
                    if window.count_min() == params.k() as usize {
                        out.set(x, y, window.median());
                    }
                }
            }
            out
        }
    }
}
