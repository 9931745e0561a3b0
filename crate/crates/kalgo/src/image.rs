//! Grayscale and binary image containers.
//!
//! Both types are immutable values once constructed (the crate mutates
//! pixel data only through explicit copies), so sharing them across
//! threads for reading is safe.

/// 8-bit grayscale raster, row-major, `0` = darkest and `255` = brightest.
///
/// Coordinates are `(x, y)` with `x` the column, `y` the row and the
/// origin at the top-left corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl GrayImage {
    /// Builds an image from row-major pixel data.
    ///
    /// Panics if either dimension is zero or `pixels.len() != width * height`.
    pub fn new(width: u32, height: u32, pixels: Vec<u8>) -> Self {
        assert!(width >= 1 && height >= 1, "image dimensions must be >= 1");
        assert_eq!(
            pixels.len(),
            width as usize * height as usize,
            "pixel buffer length must equal width * height"
        );
        Self { width, height, pixels }
    }

    /// An image with every pixel set to `value`.
    pub fn filled(width: u32, height: u32, value: u8) -> Self {
        assert!(width >= 1 && height >= 1, "image dimensions must be >= 1");
        Self {
            width,
            height,
            pixels: vec![value; width as usize * height as usize],
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    /// Total pixel count.
    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    pub fn is_empty(&self) -> bool {
        false // dimensions are >= 1 by construction
    }

    /// Row-major pixel data.
    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    /// Intensity at column `x`, row `y`. Panics when out of bounds.
    #[inline]
    pub fn get(&self, x: u32, y: u32) -> u8 {
        assert!(
            x < self.width && y < self.height,
            "pixel ({x}, {y}) out of bounds for {}x{} image",
            self.width,
            self.height
        );
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    /// Sets the intensity at column `x`, row `y`. Panics when out of bounds.
    #[inline]
    pub fn set(&mut self, x: u32, y: u32, value: u8) {
        assert!(
            x < self.width && y < self.height,
            "pixel ({x}, {y}) out of bounds for {}x{} image",
            self.width,
            self.height
        );
        self.pixels[y as usize * self.width as usize + x as usize] = value;
    }

    pub fn same_dimensions(&self, other: &GrayImage) -> bool {
        self.width == other.width && self.height == other.height
    }
}

/// Two-valued image using the ink-oriented encoding: `0` = white/background,
/// `1` = black/ink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryImage {
    width: u32,
    height: u32,
    bits: Vec<u8>,
}

impl BinaryImage {
    /// Builds a binary image from row-major logical values.
    ///
    /// Panics if either dimension is zero, the buffer length does not match,
    /// or any value is outside `{0, 1}`.
    pub fn new(width: u32, height: u32, bits: Vec<u8>) -> Self {
        assert!(width >= 1 && height >= 1, "image dimensions must be >= 1");
        assert_eq!(
            bits.len(),
            width as usize * height as usize,
            "bit buffer length must equal width * height"
        );
        assert!(
            bits.iter().all(|&b| b <= 1),
            "binary image values must be 0 or 1"
        );
        Self { width, height, bits }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    /// Row-major logical values, each `0` or `1`.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Bit at column `x`, row `y`. Panics when out of bounds.
    #[inline]
    pub fn get(&self, x: u32, y: u32) -> u8 {
        assert!(
            x < self.width && y < self.height,
            "pixel ({x}, {y}) out of bounds for {}x{} image",
            self.width,
            self.height
        );
        self.bits[y as usize * self.width as usize + x as usize]
    }

    /// Number of ink (`1`) pixels.
    pub fn ink_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// Maps the logical values to viewable intensities: `0` -> 255 (white),
    /// `1` -> 0 (black).
    pub fn render(&self) -> GrayImage {
        let pixels = self
            .bits
            .iter()
            .map(|&b| if b == 0 { 255 } else { 0 })
            .collect();
        GrayImage::new(self.width, self.height, pixels)
    }
}
