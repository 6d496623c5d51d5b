use crate::{lit, Error, Float, Result};

/// A validated, ascending sample of finite values.
///
/// Non-finite inputs are dropped at construction; the number dropped is kept
/// for diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct SortedSample<T> {
    values: Vec<T>,
    dropped: usize,
}

impl<T: Float> SortedSample<T> {
    /// Sorts `raw` after dropping NaN and infinite entries.
    pub fn new(raw: impl IntoIterator<Item = T>) -> Result<Self> {
        let mut dropped = 0;
        let mut values: Vec<T> = raw
            .into_iter()
            .filter(|x| {
                let keep = x.is_finite();
                if !keep {
                    dropped += 1;
                }
                keep
            })
            .collect();
        if values.is_empty() {
            return Err(Error::EmptySample { dropped });
        }
        values.sort_by(|a, b| a.partial_cmp(b).expect("finite values are totally ordered"));
        Ok(Self { values, dropped })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of non-finite inputs dropped during construction.
    pub fn dropped(&self) -> usize {
        self.dropped
    }

    pub fn min(&self) -> T {
        self.values[0]
    }

    pub fn max(&self) -> T {
        self.values[self.values.len() - 1]
    }

    pub fn range(&self) -> T {
        self.max() - self.min()
    }

    pub fn median(&self) -> T {
        self.quantile_unchecked(lit(0.5))
    }

    pub fn mean(&self) -> T {
        let n = T::from(self.len()).unwrap();
        compensated_sum(self.values.iter().copied()) / n
    }

    /// Sample standard deviation with the `1/(n-1)` divisor; zero for `n == 1`.
    pub fn std_dev(&self) -> T {
        let n = self.len();
        if n < 2 {
            return T::zero();
        }
        let mean = self.mean();
        let ss = compensated_sum(self.values.iter().map(|&x| (x - mean) * (x - mean)));
        (ss / T::from(n - 1).unwrap()).sqrt()
    }

    /// Interquartile range `Q3 - Q1` (no whisker factor folded in).
    pub fn iqr(&self) -> T {
        self.quantile_unchecked(lit(0.75)) - self.quantile_unchecked(lit(0.25))
    }

    /// Type-7 quantile: linear interpolation at index `h = (n-1)p`.
    pub fn quantile(&self, p: T) -> Result<T> {
        if !(p >= T::zero() && p <= T::one()) {
            return Err(Error::InvalidProbability(p.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(self.quantile_unchecked(p))
    }

    pub(crate) fn quantile_unchecked(&self, p: T) -> T {
        let x = &self.values;
        let h = T::from(x.len() - 1).unwrap() * p;
        let lo = h.floor();
        let i = lo.to_usize().unwrap_or(0).min(x.len() - 1);
        if i + 1 >= x.len() {
            return x[x.len() - 1];
        }
        let frac = h - lo;
        let (a, b) = (x[i], x[i + 1]);
        // clamp keeps the result monotone across interpolation segments
        (a + frac * (b - a)).max(a).min(b)
    }
}

/// Neumaier-compensated sum.
pub(crate) fn compensated_sum<T: Float>(terms: impl IntoIterator<Item = T>) -> T {
    let (mut sum, mut carry) = (T::zero(), T::zero());
    for t in terms {
        let next = sum + t;
        carry = carry
            + if sum.abs() >= t.abs() {
                (sum - next) + t
            } else {
                (t - next) + sum
            };
        sum = next;
    }
    sum + carry
}

/// Free-function form of [`SortedSample::quantile`].
pub fn quantile<T: Float>(s: &SortedSample<T>, p: T) -> Result<T> {
    s.quantile(p)
}
