//! Portable graymap (PGM) reader and writer.
//!
//! Supports the ASCII `P2` and binary `P5` encodings with `#` comments in
//! the header. The writer emits a canonical layout (magic line, one
//! `width height` line, `255` maxval line, then samples) so outputs are
//! byte-stable and suitable for golden-file comparison. Inputs with a
//! maxval other than 255 are rescaled to the full 8-bit range.

use thiserror::Error;

use crate::image::GrayImage;

/// Output encoding for [`save_pgm`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgmFormat {
    /// Plain text samples (`P2`).
    Ascii,
    /// One raw byte per sample (`P5`).
    Binary,
}

/// Parse failures, each carrying the byte offset or token that caused it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PgmError {
    #[error("unknown magic number {token:?} at byte {offset} (expected \"P2\" or \"P5\")")]
    BadMagic { token: String, offset: usize },
    #[error("missing {expected} at byte {offset}: unexpected end of input")]
    UnexpectedEof { expected: &'static str, offset: usize },
    #[error("invalid {expected} token {token:?} at byte {offset}")]
    BadToken {
        expected: &'static str,
        token: String,
        offset: usize,
    },
    #[error("maxval {maxval} at byte {offset} is outside the supported range [1, 255]")]
    BadMaxval { maxval: u32, offset: usize },
    #[error("image dimensions {width}x{height} at byte {offset} must be at least 1x1")]
    BadDimensions {
        width: u32,
        height: u32,
        offset: usize,
    },
    #[error("sample {sample} at byte {offset} exceeds maxval {maxval}")]
    SampleOutOfRange {
        sample: u32,
        maxval: u32,
        offset: usize,
    },
    #[error("truncated pixel data at byte {offset}: expected {expected} samples, found {found}")]
    TruncatedData {
        expected: usize,
        found: usize,
        offset: usize,
    },
}

fn is_pgm_whitespace(b: u8) -> bool {
    matches!(b, b' ' | b'\t' | b'\n' | b'\r' | 0x0b | 0x0c)
}

/// Header tokenizer: whitespace-separated tokens with `#` comments running
/// to end of line.
struct Tokenizer<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Tokenizer<'a> {
    fn new(data: &'a [u8]) -> Self {
        Self { data, pos: 0 }
    }

    fn skip_whitespace_and_comments(&mut self) {
        while self.pos < self.data.len() {
            let b = self.data[self.pos];
            if is_pgm_whitespace(b) {
                self.pos += 1;
            } else if b == b'#' {
                while self.pos < self.data.len() && self.data[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
    }

    /// Next token and the byte offset where it starts.
    fn next_token(&mut self, expected: &'static str) -> Result<(&'a str, usize), PgmError> {
        self.skip_whitespace_and_comments();
        if self.pos >= self.data.len() {
            return Err(PgmError::UnexpectedEof {
                expected,
                offset: self.pos,
            });
        }
        let start = self.pos;
        while self.pos < self.data.len()
            && !is_pgm_whitespace(self.data[self.pos])
            && self.data[self.pos] != b'#'
        {
            self.pos += 1;
        }
        let raw = &self.data[start..self.pos];
        let token = std::str::from_utf8(raw).map_err(|_| PgmError::BadToken {
            expected,
            token: String::from_utf8_lossy(raw).into_owned(),
            offset: start,
        })?;
        Ok((token, start))
    }

    fn next_u32(&mut self, expected: &'static str) -> Result<(u32, usize), PgmError> {
        let (token, offset) = self.next_token(expected)?;
        let value = token.parse::<u32>().map_err(|_| PgmError::BadToken {
            expected,
            token: token.to_owned(),
            offset,
        })?;
        Ok((value, offset))
    }
}

/// Rescales a sample from `[0, maxval]` to `[0, 255]`, rounding half up.
fn rescale(sample: u32, maxval: u32) -> u8 {
    if maxval == 255 {
        sample as u8
    } else {
        ((sample * 510 + maxval) / (2 * maxval)) as u8
    }
}

/// Parses a `P2` or `P5` PGM byte stream.
pub fn load_pgm(data: &[u8]) -> Result<GrayImage, PgmError> {
    let mut t = Tokenizer::new(data);

    let (magic, magic_offset) = t.next_token("magic number")?;
    let format = match magic {
        "P2" => PgmFormat::Ascii,
        "P5" => PgmFormat::Binary,
        _ => {
            return Err(PgmError::BadMagic {
                token: magic.to_owned(),
                offset: magic_offset,
            })
        }
    };

    let (width, dim_offset) = t.next_u32("width")?;
    let (height, _) = t.next_u32("height")?;
    if width == 0 || height == 0 {
        return Err(PgmError::BadDimensions {
            width,
            height,
            offset: dim_offset,
        });
    }
    let (maxval, maxval_offset) = t.next_u32("maxval")?;
    if !(1..=255).contains(&maxval) {
        return Err(PgmError::BadMaxval {
            maxval,
            offset: maxval_offset,
        });
    }

    let count = width as usize * height as usize;
    let mut pixels = Vec::with_capacity(count);

    match format {
        PgmFormat::Ascii => {
            for found in 0..count {
                let (sample, offset) = match t.next_u32("pixel sample") {
                    Ok(ok) => ok,
                    Err(PgmError::UnexpectedEof { offset, .. }) => {
                        return Err(PgmError::TruncatedData {
                            expected: count,
                            found,
                            offset,
                        })
                    }
                    Err(e) => return Err(e),
                };
                if sample > maxval {
                    return Err(PgmError::SampleOutOfRange {
                        sample,
                        maxval,
                        offset,
                    });
                }
                pixels.push(rescale(sample, maxval));
            }
        }
        PgmFormat::Binary => {
            // Exactly one whitespace byte separates the maxval from the raster.
            if t.pos >= data.len() {
                return Err(PgmError::TruncatedData {
                    expected: count,
                    found: 0,
                    offset: t.pos,
                });
            }
            if !is_pgm_whitespace(data[t.pos]) {
                return Err(PgmError::BadToken {
                    expected: "whitespace after maxval",
                    token: String::from_utf8_lossy(&data[t.pos..t.pos + 1]).into_owned(),
                    offset: t.pos,
                });
            }
            let raster_start = t.pos + 1;
            let raster = &data[raster_start.min(data.len())..];
            if raster.len() < count {
                return Err(PgmError::TruncatedData {
                    expected: count,
                    found: raster.len(),
                    offset: data.len(),
                });
            }
            for (i, &byte) in raster[..count].iter().enumerate() {
                let sample = byte as u32;
                if sample > maxval {
                    return Err(PgmError::SampleOutOfRange {
                        sample,
                        maxval,
                        offset: raster_start + i,
                    });
                }
                pixels.push(rescale(sample, maxval));
            }
        }
    }

    Ok(GrayImage::new(width, height, pixels))
}

/// Serializes an image in the canonical layout. Round-trips through
/// [`load_pgm`] bit-for-bit on the pixel array.
pub fn save_pgm(img: &GrayImage, format: PgmFormat) -> Vec<u8> {
    let mut out = Vec::new();
    let magic = match format {
        PgmFormat::Ascii => "P2",
        PgmFormat::Binary => "P5",
    };
    out.extend_from_slice(format!("{magic}\n{} {}\n255\n", img.width(), img.height()).as_bytes());
    match format {
        PgmFormat::Ascii => {
            for row in img.pixels().chunks(img.width() as usize) {
                let line = row
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                out.extend_from_slice(line.as_bytes());
                out.push(b'\n');
            }
        }
        PgmFormat::Binary => out.extend_from_slice(img.pixels()),
    }
    out
}
