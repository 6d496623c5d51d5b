use super::SortedSample;
use crate::{lit, Float};

/// Default minimum of `2 * depth` for a level to be kept.
pub const DEFAULT_STOP_COUNT: usize = 5;

/// Letter values (M, F, E, D, ...) with their depths.
///
/// Level 0 is the median, so `lower[0] == upper[0]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LetterValueSet<T> {
    pub depths: Vec<f64>,
    pub lower: Vec<T>,
    pub upper: Vec<T>,
}

impl<T: Float> LetterValueSet<T> {
    /// Number of retained levels, including the median.
    pub fn levels(&self) -> usize {
        self.depths.len()
    }

    pub fn level(&self, k: usize) -> (T, T) {
        (self.lower[k], self.upper[k])
    }

    /// The outermost retained pair.
    pub fn deepest(&self) -> (T, T) {
        self.level(self.levels() - 1)
    }

    /// Observations strictly outside the deepest retained letter values.
    pub fn outliers(&self, s: &SortedSample<T>) -> Vec<T> {
        let (lo, hi) = self.deepest();
        s.values()
            .iter()
            .copied()
            .filter(|&x| x < lo || x > hi)
            .collect()
    }
}

/// Letter values with the default stop count.
pub fn letter_values<T: Float>(s: &SortedSample<T>) -> LetterValueSet<T> {
    letter_values_with_stop(s, DEFAULT_STOP_COUNT)
}

/// Depths follow `d1 = (1+n)/2`, `d_{k+1} = (1 + floor(d_k))/2`; a level is
/// kept while `2 * d_k >= stop_count` and the depth still shrinks.
pub fn letter_values_with_stop<T: Float>(
    s: &SortedSample<T>,
    stop_count: usize,
) -> LetterValueSet<T> {
    let n = s.len();
    let median = s.median();
    let mut set = LetterValueSet {
        depths: vec![(1.0 + n as f64) / 2.0],
        lower: vec![median],
        upper: vec![median],
    };
    let mut depth = set.depths[0];
    loop {
        let next = (1.0 + depth.floor()) / 2.0;
        if next >= depth || 2.0 * next < stop_count as f64 {
            break;
        }
        let (lo, hi) = at_depth(s.values(), next);
        set.depths.push(next);
        set.lower.push(lo);
        set.upper.push(hi);
        depth = next;
    }
    set
}

/// Letter values at a (possibly half-integer) depth, counted from each end.
fn at_depth<T: Float>(x: &[T], depth: f64) -> (T, T) {
    let n = x.len();
    let (a, b) = (depth.floor() as usize, depth.ceil() as usize);
    if a == b {
        (x[a - 1], x[n - a])
    } else {
        let half = lit::<T>(0.5);
        ((x[a - 1] + x[b - 1]) * half, (x[n - a] + x[n - b]) * half)
    }
}
