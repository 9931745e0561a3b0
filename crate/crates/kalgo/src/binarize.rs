//! Global mean-threshold binarization and the composed two-step pipeline.

use crate::filters::{k_filter, FilterMode, FilterParams};
use crate::image::{BinaryImage, GrayImage};

/// Global threshold held in exact integer-sum-over-count form.
///
/// Comparisons use the exact rational value, so no pixel is misclassified
/// by premature rounding of the mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    sum: u64,
    count: u64,
}

impl Threshold {
    /// Mean intensity as a real number, for display and reporting.
    pub fn value(&self) -> f64 {
        self.sum as f64 / self.count as f64
    }

    /// Whether `intensity >= mean`, evaluated exactly: ties go to white.
    pub fn is_white(&self, intensity: u8) -> bool {
        intensity as u128 * self.count as u128 >= self.sum as u128
    }
}

/// Exact arithmetic mean of all pixel intensities.
pub fn mean_intensity(img: &GrayImage) -> Threshold {
    let sum = img.pixels().iter().map(|&v| v as u64).sum();
    Threshold {
        sum,
        count: img.len() as u64,
    }
}

/// Thresholds at the global mean: pixels at or above it become white (0),
/// pixels below it become black (1).
pub fn binarize(img: &GrayImage) -> BinaryImage {
    let threshold = mean_intensity(img);
    let bits = img
        .pixels()
        .iter()
        .map(|&v| if threshold.is_white(v) { 0 } else { 1 })
        .collect();
    BinaryImage::new(img.width(), img.height(), bits)
}

/// The full two-step pipeline: buffered conditional median filtering, then
/// mean-threshold binarization.
pub fn k_algorithm(img: &GrayImage, params: &FilterParams) -> BinaryImage {
    binarize(&k_filter(img, params, FilterMode::Buffered))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn mean_of_two_extremes() {
        let img = GrayImage::new(2, 1, vec![0, 255]);
        assert_eq!(mean_intensity(&img).value(), 127.5);
    }

    #[test]
    fn mean_of_constant_image() {
        let img = GrayImage::filled(4, 3, 42);
        assert_eq!(mean_intensity(&img).value(), 42.0);
    }

    #[test]
    fn mean_of_four_values() {
        let img = GrayImage::new(4, 1, vec![10, 20, 30, 40]);
        assert_eq!(mean_intensity(&img).value(), 25.0);
    }

    #[test]
    fn binarize_splits_at_mean() {
        // mean 150: 100 -> black, 200 -> white
        let img = GrayImage::new(2, 1, vec![100, 200]);
        assert_eq!(binarize(&img).bits(), &[1, 0]);
    }

    #[test]
    fn binarize_constant_ties_to_white() {
        let img = GrayImage::filled(3, 3, 90);
        assert!(binarize(&img).bits().iter().all(|&b| b == 0));
    }

    #[test]
    fn binarize_two_by_two() {
        // mean 191.25
        let img = GrayImage::new(2, 2, vec![0, 255, 255, 255]);
        assert_eq!(binarize(&img).bits(), &[1, 0, 0, 0]);
    }

    #[test]
    fn k_algorithm_cleans_isolated_dot_to_all_white() {
        let mut img = GrayImage::filled(5, 5, 255);
        img.set(2, 2, 0);
        let out = k_algorithm(&img, &FilterParams::default());
        assert!(out.bits().iter().all(|&b| b == 0));
    }

    #[test]
    fn k_algorithm_with_zero_k_equals_binarize() {
        let img = GrayImage::new(3, 2, vec![10, 200, 40, 90, 250, 0]);
        let params = FilterParams::new(2, 0).unwrap();
        assert_eq!(k_algorithm(&img, &params), binarize(&img));
    }

    #[test]
    fn two_valued_image_binarizes_to_ink_at_zeros() {
        let img = GrayImage::new(3, 1, vec![0, 255, 255]);
        let params = FilterParams::new(2, 0).unwrap();
        assert_eq!(k_algorithm(&img, &params).bits(), &[1, 0, 0]);
    }

    fn arb_image() -> impl Strategy<Value = GrayImage> {
        (1u32..=12, 1u32..=12).prop_flat_map(|(w, h)| {
            proptest::collection::vec(any::<u8>(), (w * h) as usize)
                .prop_map(move |px| GrayImage::new(w, h, px))
        })
    }

    proptest! {
        #[test]
        fn affine_maps_preserve_the_partition(
            (img, a, c) in (1u32..=10, 1u32..=10).prop_flat_map(|(w, h)| {
                (
                    proptest::collection::vec(0u8..=60, (w * h) as usize)
                        .prop_map(move |px| GrayImage::new(w, h, px)),
                    1u8..=4,
                    0u8..=15,
                )
            })
        ) {
            let mapped = GrayImage::new(
                img.width(),
                img.height(),
                img.pixels()
                    .iter()
                    .map(|&v| (v as u16 * a as u16 + c as u16) as u8)
                    .collect(),
            );
            prop_assert_eq!(binarize(&mapped), binarize(&img));
        }

        #[test]
        fn binarize_then_render_round_trips(
            bits in proptest::collection::vec(0u8..=1, 2..=64)
        ) {
            // force both values so the mean falls strictly between 0 and 255
            let mut bits = bits;
            bits[0] = 0;
            let last = bits.len() - 1;
            bits[last] = 1;
            let b = BinaryImage::new(bits.len() as u32, 1, bits);
            prop_assert_eq!(binarize(&b.render()), b);
        }

        #[test]
        fn output_alphabet_and_dimensions(img in arb_image()) {
            let out = binarize(&img);
            prop_assert_eq!(out.width(), img.width());
            prop_assert_eq!(out.height(), img.height());
            prop_assert!(out.bits().iter().all(|&b| b <= 1));
        }
    }
}
