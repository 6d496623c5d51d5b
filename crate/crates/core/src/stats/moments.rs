use super::sample::compensated_sum;
use super::SortedSample;
use crate::{lit, Float};

/// The eight-row summary: five-number positions, mean and shape moments.
///
/// Moments are population (`1/n`) central moments. Skewness is `m3 / m2^1.5`
/// and kurtosis is the non-excess `m4 / m2^2`; both are `None` when the
/// sample has zero variance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats<T> {
    pub n: usize,
    pub min: T,
    pub q1: T,
    pub median: T,
    pub mean: T,
    pub q3: T,
    pub max: T,
    pub skewness: Option<T>,
    pub kurtosis: Option<T>,
}

impl<T: Float> SummaryStats<T> {
    /// True when skewness and kurtosis are undefined.
    pub fn degenerate_variance(&self) -> bool {
        self.skewness.is_none()
    }
}

pub fn summary<T: Float>(s: &SortedSample<T>) -> SummaryStats<T> {
    let n = T::from(s.len()).unwrap();
    let mean = s.mean();
    let moment = |f: fn(T) -> T| compensated_sum(s.values().iter().map(|&x| f(x - mean))) / n;
    let m2 = moment(|d| d * d);
    let m3 = moment(|d| d * d * d);
    let m4 = moment(|d| (d * d) * (d * d));
    let (skewness, kurtosis) = if m2 > T::zero() {
        (Some(m3 / m2.powf(lit(1.5))), Some(m4 / (m2 * m2)))
    } else {
        (None, None)
    };
    SummaryStats {
        n: s.len(),
        min: s.min(),
        q1: s.quantile_unchecked(lit(0.25)),
        median: s.quantile_unchecked(lit(0.5)),
        mean,
        q3: s.quantile_unchecked(lit(0.75)),
        max: s.max(),
        skewness,
        kurtosis,
    }
}
