//! Python bindings for the kalgo preprocessing library.
//!
//! Exposes the image containers, both filters, binarization, noise
//! injection, and the quality metrics as a `kalgo_py` extension module.
//! All heavy work happens in Rust; images cross the boundary as `bytes`.

use pyo3::exceptions::{PyIndexError, PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyBytes, PyDict};

use kalgo::{FilterMode, FilterParams, NoiseSpec, PgmFormat};

fn parse_format(format: &str) -> PyResult<PgmFormat> {
    match format {
        "ascii" => Ok(PgmFormat::Ascii),
        "binary" => Ok(PgmFormat::Binary),
        other => Err(PyValueError::new_err(format!(
            "format must be \"ascii\" or \"binary\", got {other:?}"
        ))),
    }
}

fn parse_mode(mode: &str) -> PyResult<FilterMode> {
    match mode {
        "buffered" => Ok(FilterMode::Buffered),
        "paper-literal" | "paper_literal" => Ok(FilterMode::PaperLiteral),
        other => Err(PyValueError::new_err(format!(
            "mode must be \"buffered\" or \"paper-literal\", got {other:?}"
        ))),
    }
}

fn filter_params(matrix_size: u32, k: u32) -> PyResult<FilterParams> {
    FilterParams::new(matrix_size, k).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn check_same_dimensions(a: &kalgo::GrayImage, b: &kalgo::GrayImage) -> PyResult<()> {
    if a.same_dimensions(b) {
        Ok(())
    } else {
        Err(PyValueError::new_err(format!(
            "dimension mismatch: {}x{} vs {}x{}",
            a.width(),
            a.height(),
            b.width(),
            b.height()
        )))
    }
}

/// 8-bit grayscale image, row-major, 0 = black and 255 = white.
#[pyclass(name = "GrayImage")]
struct PyGrayImage {
    inner: kalgo::GrayImage,
}

#[pymethods]
impl PyGrayImage {
    #[new]
    fn new(width: u32, height: u32, pixels: Vec<u8>) -> PyResult<Self> {
        if width < 1 || height < 1 {
            return Err(PyValueError::new_err("dimensions must be >= 1"));
        }
        if pixels.len() != width as usize * height as usize {
            return Err(PyValueError::new_err(format!(
                "expected {} pixels for a {width}x{height} image, got {}",
                width as usize * height as usize,
                pixels.len()
            )));
        }
        Ok(Self {
            inner: kalgo::GrayImage::new(width, height, pixels),
        })
    }

    /// Image with every pixel set to `value`.
    #[staticmethod]
    fn filled(width: u32, height: u32, value: u8) -> PyResult<Self> {
        if width < 1 || height < 1 {
            return Err(PyValueError::new_err("dimensions must be >= 1"));
        }
        Ok(Self {
            inner: kalgo::GrayImage::filled(width, height, value),
        })
    }

    /// Parse a P2 or P5 PGM byte string.
    #[staticmethod]
    fn from_pgm(data: Vec<u8>) -> PyResult<Self> {
        kalgo::load_pgm(&data)
            .map(|inner| Self { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Read a PGM file from disk.
    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let data = std::fs::read(path)
            .map_err(|e| PyIOError::new_err(format!("cannot read {path}: {e}")))?;
        Self::from_pgm(data)
    }

    /// Serialize as canonical PGM bytes; `format` is "ascii" or "binary".
    #[pyo3(signature = (format = "binary"))]
    fn to_pgm<'py>(&self, py: Python<'py>, format: &str) -> PyResult<Bound<'py, PyBytes>> {
        let bytes = kalgo::save_pgm(&self.inner, parse_format(format)?);
        Ok(PyBytes::new(py, &bytes))
    }

    /// Write a canonical PGM file to disk.
    #[pyo3(signature = (path, format = "binary"))]
    fn save(&self, path: &str, format: &str) -> PyResult<()> {
        let bytes = kalgo::save_pgm(&self.inner, parse_format(format)?);
        std::fs::write(path, bytes)
            .map_err(|e| PyIOError::new_err(format!("cannot write {path}: {e}")))
    }

    #[getter]
    fn width(&self) -> u32 {
        self.inner.width()
    }

    #[getter]
    fn height(&self) -> u32 {
        self.inner.height()
    }

    /// Row-major pixel data as bytes.
    fn pixels<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        PyBytes::new(py, self.inner.pixels())
    }

    fn get_pixel(&self, x: u32, y: u32) -> PyResult<u8> {
        if x >= self.inner.width() || y >= self.inner.height() {
            return Err(PyIndexError::new_err(format!(
                "pixel ({x}, {y}) out of bounds for {}x{} image",
                self.inner.width(),
                self.inner.height()
            )));
        }
        Ok(self.inner.get(x, y))
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .extract::<PyRef<'_, Self>>()
            .map(|o| o.inner == self.inner)
            .unwrap_or(false)
    }

    fn __repr__(&self) -> String {
        format!("GrayImage({}x{})", self.inner.width(), self.inner.height())
    }
}

/// Two-valued image: 0 = white/background, 1 = black/ink.
#[pyclass(name = "BinaryImage")]
struct PyBinaryImage {
    inner: kalgo::BinaryImage,
}

#[pymethods]
impl PyBinaryImage {
    #[new]
    fn new(width: u32, height: u32, bits: Vec<u8>) -> PyResult<Self> {
        if width < 1 || height < 1 {
            return Err(PyValueError::new_err("dimensions must be >= 1"));
        }
        if bits.len() != width as usize * height as usize {
            return Err(PyValueError::new_err(format!(
                "expected {} bits for a {width}x{height} image, got {}",
                width as usize * height as usize,
                bits.len()
            )));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(PyValueError::new_err("bits must be 0 or 1"));
        }
        Ok(Self {
            inner: kalgo::BinaryImage::new(width, height, bits),
        })
    }

    #[getter]
    fn width(&self) -> u32 {
        self.inner.width()
    }

    #[getter]
    fn height(&self) -> u32 {
        self.inner.height()
    }

    /// Row-major logical values as bytes of 0 and 1.
    fn bits<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        PyBytes::new(py, self.inner.bits())
    }

    /// Number of ink pixels.
    fn ink_count(&self) -> usize {
        self.inner.ink_count()
    }

    /// Map to a viewable grayscale image: 0 -> 255, 1 -> 0.
    fn render(&self) -> PyGrayImage {
        PyGrayImage {
            inner: self.inner.render(),
        }
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .extract::<PyRef<'_, Self>>()
            .map(|o| o.inner == self.inner)
            .unwrap_or(false)
    }

    fn __repr__(&self) -> String {
        format!(
            "BinaryImage({}x{}, ink={})",
            self.inner.width(),
            self.inner.height(),
            self.inner.ink_count()
        )
    }
}

/// Unconditional median filter over a clipped neighborhood.
#[pyfunction]
#[pyo3(signature = (img, matrix_size = 2))]
fn median_filter(img: &PyGrayImage, matrix_size: u32) -> PyResult<PyGrayImage> {
    filter_params(matrix_size, 0)?;
    Ok(PyGrayImage {
        inner: kalgo::median_filter(&img.inner, matrix_size),
    })
}

/// Conditional median filter: replaces a pixel only when the count of
/// minimum-intensity values in its window equals `k`.
#[pyfunction]
#[pyo3(signature = (img, matrix_size = 2, k = 1, mode = "buffered"))]
fn k_filter(img: &PyGrayImage, matrix_size: u32, k: u32, mode: &str) -> PyResult<PyGrayImage> {
    let params = filter_params(matrix_size, k)?;
    Ok(PyGrayImage {
        inner: kalgo::k_filter(&img.inner, &params, parse_mode(mode)?),
    })
}

/// Exact mean intensity used as the binarization threshold.
#[pyfunction]
fn mean_intensity(img: &PyGrayImage) -> f64 {
    kalgo::mean_intensity(&img.inner).value()
}

/// Global mean thresholding; ties go to white (bit 0).
#[pyfunction]
fn binarize(img: &PyGrayImage) -> PyBinaryImage {
    PyBinaryImage {
        inner: kalgo::binarize(&img.inner),
    }
}

/// Conditional median filtering followed by mean-threshold binarization.
#[pyfunction]
#[pyo3(signature = (img, matrix_size = 2, k = 1))]
fn k_algorithm(img: &PyGrayImage, matrix_size: u32, k: u32) -> PyResult<PyBinaryImage> {
    let params = filter_params(matrix_size, k)?;
    Ok(PyBinaryImage {
        inner: kalgo::k_algorithm(&img.inner, &params),
    })
}

/// Seeded salt-and-pepper corruption; deterministic per seed.
#[pyfunction]
#[pyo3(signature = (img, density, salt_fraction = 0.5, seed = 0))]
fn add_salt_pepper(
    img: &PyGrayImage,
    density: f64,
    salt_fraction: f64,
    seed: u64,
) -> PyResult<PyGrayImage> {
    let spec = NoiseSpec::new(density, salt_fraction, seed)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(PyGrayImage {
        inner: kalgo::add_salt_pepper(&img.inner, &spec),
    })
}

/// Mean squared error between two same-sized images.
#[pyfunction]
fn mse(a: &PyGrayImage, b: &PyGrayImage) -> PyResult<f64> {
    check_same_dimensions(&a.inner, &b.inner)?;
    Ok(kalgo::mse(&a.inner, &b.inner))
}

/// Peak signal-to-noise ratio in dB; `inf` for identical images.
#[pyfunction]
fn psnr(a: &PyGrayImage, b: &PyGrayImage) -> PyResult<f64> {
    check_same_dimensions(&a.inner, &b.inner)?;
    Ok(kalgo::psnr(&a.inner, &b.inner))
}

/// Number of positions where the two images differ.
#[pyfunction]
fn changed_pixels(a: &PyGrayImage, b: &PyGrayImage) -> PyResult<u64> {
    check_same_dimensions(&a.inner, &b.inner)?;
    Ok(kalgo::changed_pixels(&a.inner, &b.inner))
}

/// Ink confusion statistics of `pred` against `truth` as a dict with keys
/// tp, fp, fn, tn, precision, recall, f1.
#[pyfunction]
fn binary_confusion<'py>(
    py: Python<'py>,
    pred: &PyBinaryImage,
    truth: &PyBinaryImage,
) -> PyResult<Bound<'py, PyDict>> {
    if pred.inner.width() != truth.inner.width() || pred.inner.height() != truth.inner.height() {
        return Err(PyValueError::new_err(format!(
            "dimension mismatch: {}x{} vs {}x{}",
            pred.inner.width(),
            pred.inner.height(),
            truth.inner.width(),
            truth.inner.height()
        )));
    }
    let c = kalgo::binary_confusion(&pred.inner, &truth.inner);
    let dict = PyDict::new(py);
    dict.set_item("tp", c.true_pos)?;
    dict.set_item("fp", c.false_pos)?;
    dict.set_item("fn", c.false_neg)?;
    dict.set_item("tn", c.true_neg)?;
    dict.set_item("precision", c.precision())?;
    dict.set_item("recall", c.recall())?;
    dict.set_item("f1", c.f1())?;
    Ok(dict)
}

#[pymodule]
fn kalgo_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyGrayImage>()?;
    m.add_class::<PyBinaryImage>()?;
    m.add_function(wrap_pyfunction!(median_filter, m)?)?;
    m.add_function(wrap_pyfunction!(k_filter, m)?)?;
    m.add_function(wrap_pyfunction!(mean_intensity, m)?)?;
    m.add_function(wrap_pyfunction!(binarize, m)?)?;
    m.add_function(wrap_pyfunction!(k_algorithm, m)?)?;
    m.add_function(wrap_pyfunction!(add_salt_pepper, m)?)?;
    m.add_function(wrap_pyfunction!(mse, m)?)?;
    m.add_function(wrap_pyfunction!(psnr, m)?)?;
    m.add_function(wrap_pyfunction!(changed_pixels, m)?)?;
    m.add_function(wrap_pyfunction!(binary_confusion, m)?)?;
    Ok(())
}
