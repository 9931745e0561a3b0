//! Shared fixtures and the independent filter oracle used by the
//! integration suites.

#![allow(dead_code)]

use kalgo::{BinaryImage, GrayImage};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random image with the given dimensions.
pub fn random_image(rng: &mut ChaCha8Rng, width: u32, height: u32) -> GrayImage {
    let pixels = (0..width as usize * height as usize)
        .map(|_| (rng.next_u32() & 0xff) as u8)
        .collect();
    GrayImage::new(width, height, pixels)
}

/// Straight-line re-statement of the conditional filter rule, kept
/// independent of the library's window machinery: for every pixel, gather
/// the in-bounds neighbors by brute force, then apply
/// `median if count_min == k else original`.
pub fn oracle_k_filter(img: &GrayImage, matrix_size: u32, k: u32) -> GrayImage {
    let radius = (matrix_size / 2) as i64;
    let (w, h) = (img.width() as i64, img.height() as i64);
    let mut out = Vec::with_capacity(img.len());
    for y in 0..h {
        for x in 0..w {
            let mut values = Vec::new();
            for dy in -radius..=radius {
                for dx in -radius..=radius {
                    let (nx, ny) = (x + dx, y + dy);
                    if (0..w).contains(&nx) && (0..h).contains(&ny) {
                        values.push(img.get(nx as u32, ny as u32));
                    }
                }
            }
            let min = *values.iter().min().unwrap();
            let occurrences = values.iter().filter(|&&v| v == min).count();
            let pixel = if occurrences == k as usize {
                let mut sorted = values;
                sorted.sort();
                sorted[sorted.len() / 2]
            } else {
                img.get(x as u32, y as u32)
            };
            out.push(pixel);
        }
    }
    GrayImage::new(img.width(), img.height(), out)
}

/// A dark stroke description: start pixel, per-step delta, length.
#[derive(Debug, Clone, Copy)]
pub struct Stroke {
    pub x0: u32,
    pub y0: u32,
    pub dx: i32,
    pub dy: i32,
    pub len: u32,
}

impl Stroke {
    pub fn pixels(&self) -> Vec<(u32, u32)> {
        (0..self.len)
            .map(|i| {
                (
                    (self.x0 as i32 + self.dx * i as i32) as u32,
                    (self.y0 as i32 + self.dy * i as i32) as u32,
                )
            })
            .collect()
    }
}

/// White field with the stroke pixels set to 0.
pub fn stroke_image(width: u32, height: u32, stroke: &Stroke) -> GrayImage {
    let mut img = GrayImage::filled(width, height, 255);
    for (x, y) in stroke.pixels() {
        img.set(x, y, 0);
    }
    img
}

/// Synthetic 128x128 document: programmatic text-like rules, stems, and
/// diagonals drawn in black on white, together with its ink ground truth.
pub fn synthetic_document() -> (GrayImage, BinaryImage) {
    let (w, h) = (128u32, 128u32);
    let mut img = GrayImage::filled(w, h, 255);
    let mut bits = vec![0u8; (w * h) as usize];
    let mut draw = |img: &mut GrayImage, x: u32, y: u32| {
        img.set(x, y, 0);
        bits[(y * w + x) as usize] = 1;
    };

    // horizontal rules
    for y in [20, 36, 52, 68, 84, 100] {
        for x in 12..116 {
            draw(&mut img, x, y);
        }
    }
    // vertical stems hanging from the rules
    for x in [24, 44, 64, 84, 104] {
        for y in 21..30 {
            draw(&mut img, x, y);
        }
        for y in 53..62 {
            draw(&mut img, x, y);
        }
    }
    // diagonal flourishes
    for i in 0..20 {
        draw(&mut img, 20 + i, 124 - i);
        draw(&mut img, 70 + i, 105 + i.min(20));
    }

    (img, BinaryImage::new(w, h, bits))
}

/// Twenty pepper positions on a 64x64 field, pairwise Chebyshev distance
/// >= 3, including the four corners to exercise window clipping.
pub fn isolated_pepper_positions() -> Vec<(u32, u32)> {
    let mut points = vec![(0, 0), (63, 0), (0, 63), (63, 63)];
    for i in 0..4u32 {
        for j in 0..4u32 {
            points.push((10 + 12 * i, 10 + 12 * j));
        }
    }
    assert_eq!(points.len(), 20);
    for (i, &(ax, ay)) in points.iter().enumerate() {
        for &(bx, by) in &points[i + 1..] {
            let chebyshev = ax.abs_diff(bx).max(ay.abs_diff(by));
            assert!(chebyshev >= 3, "fixture violates its own separation rule");
        }
    }
    points
}
