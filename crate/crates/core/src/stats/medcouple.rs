//! Medcouple: the median, over all pairs `x_i <= m <= x_j`, of
//! `((x_j - m) - (m - x_i)) / (x_j - x_i)`.
//!
//! Pairs where both points equal the median `m` use the index rule: among
//! `k` tied values, the pair `(i, j)` (1-based within the tie block) scores
//! `-1`, `0` or `+1` as `i + j - 1` is less than, equal to or greater than `k`.
//! The median over an even number of kernel values is the mean of the two
//! middle ones.

use std::cmp::Ordering;

use super::SortedSample;
use crate::{lit, Float};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Medcouple<T> {
    /// Always in `[-1, 1]`.
    pub value: T,
    /// Set when every observation is equal; `value` is then 0.
    pub degenerate: bool,
}

/// Kernel matrix over `upper` (values `>= m`, descending, shifted by `-m`)
/// and `lower` (values `<= m`, descending, shifted by `-m`).
///
/// Rows and columns are both non-increasing, which the selection relies on.
struct Kernel<T> {
    upper: Vec<T>,
    lower: Vec<T>,
}

impl<T: Float> Kernel<T> {
    fn new(s: &SortedSample<T>) -> Self {
        let x = s.values();
        let n = x.len();
        let m = mid(x[(n - 1) / 2], x[n / 2]);
        let desc = s.values().iter().rev();
        let upper = desc.clone().filter(|&&x| x >= m).map(|&x| x - m).collect();
        let lower = desc.filter(|&&x| x <= m).map(|&x| x - m).collect();
        Self { upper, lower }
    }

    fn rows(&self) -> usize {
        self.upper.len()
    }

    fn cols(&self) -> usize {
        self.lower.len()
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> T {
        let (a, b) = (self.upper[i], self.lower[j]);
        if a == b {
            // both are ties at the median
            let p = self.rows() as i64;
            match (p - 1 - i as i64 - j as i64).cmp(&0) {
                Ordering::Greater => T::one(),
                Ordering::Equal => T::zero(),
                Ordering::Less => -T::one(),
            }
        } else {
            (a + b) / (a - b)
        }
    }

    /// The `k`-th largest kernel value (0-based).
    fn kth_largest(&self, k: usize) -> T {
        let (p, q) = (self.rows(), self.cols());
        let k = k as i64;
        let mut left = vec![0i64; p];
        let mut right = vec![q as i64 - 1; p];
        let mut left_total = 0i64;
        let mut right_total = (p * q) as i64;

        while right_total - left_total > p as i64 {
            let mut row_medians: Vec<(T, i64)> = (0..p)
                .filter(|&i| left[i] <= right[i])
                .map(|i| {
                    let mid = (left[i] + right[i]) / 2;
                    (self.at(i, mid as usize), right[i] - left[i] + 1)
                })
                .collect();
            let pivot = weighted_median(&mut row_medians);

            // greater[i]: last column in row i whose value exceeds the pivot
            let mut greater = vec![0i64; p];
            let mut j = 0usize;
            for i in (0..p).rev() {
                while j < q && self.at(i, j) > pivot {
                    j += 1;
                }
                greater[i] = j as i64 - 1;
            }
            // at_least[i]: number of leading columns in row i that are >= pivot
            let mut at_least = vec![0i64; p];
            let mut j = q as i64 - 1;
            for (i, slot) in at_least.iter_mut().enumerate() {
                while j >= 0 && self.at(i, j as usize) < pivot {
                    j -= 1;
                }
                *slot = j + 1;
            }

            let greater_total = greater.iter().sum::<i64>() + p as i64;
            let at_least_total = at_least.iter().sum::<i64>();
            if k < greater_total {
                right = greater;
                right_total = greater_total;
            } else if k >= at_least_total {
                left = at_least;
                left_total = at_least_total;
            } else {
                return pivot;
            }
        }

        let mut rest: Vec<T> = (0..p)
            .flat_map(|i| (left[i]..=right[i]).map(move |j| (i, j as usize)))
            .map(|(i, j)| self.at(i, j))
            .collect();
        let idx = (k - left_total) as usize;
        rest.select_nth_unstable_by(idx, |a, b| b.partial_cmp(a).unwrap());
        rest[idx]
    }
}

fn weighted_median<T: Float>(items: &mut [(T, i64)]) -> T {
    items.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let total: i64 = items.iter().map(|&(_, w)| w).sum();
    let mut acc = 0;
    for &(v, w) in items.iter() {
        acc += w;
        if 2 * acc >= total {
            return v;
        }
    }
    items[items.len() - 1].0
}

fn degenerate<T: Float>(s: &SortedSample<T>) -> Option<Medcouple<T>> {
    (s.min() == s.max()).then(|| Medcouple {
        value: T::zero(),
        degenerate: true,
    })
}

fn mid<T: Float>(a: T, b: T) -> T {
    (a + b) / lit(2.0)
}

/// Medcouple in `O(n log n)` by weighted-median selection on the sorted
/// kernel matrix.
pub fn medcouple<T: Float>(s: &SortedSample<T>) -> Medcouple<T> {
    if let Some(mc) = degenerate(s) {
        return mc;
    }
    let kernel = Kernel::new(s);
    let total = kernel.rows() * kernel.cols();
    // descending ranks of the two middle elements
    let (hi_rank, lo_rank) = ((total - 1) / 2, total / 2);
    let value = if hi_rank == lo_rank {
        kernel.kth_largest(hi_rank)
    } else {
        mid(kernel.kth_largest(hi_rank), kernel.kth_largest(lo_rank))
    };
    Medcouple {
        value,
        degenerate: false,
    }
}

/// Medcouple by full `O(n^2)` enumeration of the kernel.
pub fn medcouple_naive<T: Float>(s: &SortedSample<T>) -> Medcouple<T> {
    if let Some(mc) = degenerate(s) {
        return mc;
    }
    let kernel = Kernel::new(s);
    let mut all: Vec<T> = (0..kernel.rows())
        .flat_map(|i| (0..kernel.cols()).map(move |j| (i, j)))
        .map(|(i, j)| kernel.at(i, j))
        .collect();
    all.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = all.len();
    let value = if n % 2 == 1 {
        all[n / 2]
    } else {
        mid(all[n / 2 - 1], all[n / 2])
    };
    Medcouple {
        value,
        degenerate: false,
    }
}
