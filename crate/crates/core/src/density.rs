//! Histogram binning and Gaussian kernel density estimation.

use crate::stats::SortedSample;
use crate::{lit, Error, Float, Result};

/// Default number of grid points for density curves.
pub const DEFAULT_GRID_SIZE: usize = 512;

/// How to choose histogram bins.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BinRule<T> {
    /// `k = ceil(1 + log2 n)`.
    Sturges,
    /// Width `3.5 * sd * n^(-1/3)`.
    Scott,
    /// Width `2 * IQR * n^(-1/3)`.
    FreedmanDiaconis,
    ExplicitCount(usize),
    ExplicitWidth(T),
}

impl<T: Float> BinRule<T> {
    pub fn validate(&self) -> Result<()> {
        match *self {
            BinRule::ExplicitCount(0) => {
                Err(Error::InvalidBinRule("bin count must be >= 1".into()))
            }
            BinRule::ExplicitWidth(h) if !(h > T::zero() && h.is_finite()) => Err(
                Error::InvalidBinRule(format!("bin width must be positive, got {h}")),
            ),
            _ => Ok(()),
        }
    }
}

/// Equal-width bins over `[min, max]`; the last bin is closed on both sides.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram<T> {
    pub edges: Vec<T>,
    pub counts: Vec<usize>,
    /// `count / (n * width)` per bin.
    pub densities: Vec<T>,
}

impl<T: Float> Histogram<T> {
    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn width(&self, bin: usize) -> T {
        self.edges[bin + 1] - self.edges[bin]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// A density estimate evaluated on an ascending grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityCurve<T> {
    pub grid: Vec<T>,
    pub density: Vec<T>,
    pub bandwidth: T,
}

impl<T: Float> DensityCurve<T> {
    /// Trapezoidal integral over the grid.
    pub fn integral(&self) -> T {
        self.grid
            .windows(2)
            .zip(self.density.windows(2))
            .map(|(x, y)| (x[1] - x[0]) * (y[0] + y[1]) * lit(0.5))
            .sum()
    }

    /// Index of the (first) largest ordinate.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (i, &y) in self.density.iter().enumerate() {
            if y > self.density[best] {
                best = i;
            }
        }
        best
    }

    pub fn peak(&self) -> T {
        self.density[self.argmax()]
    }
}

/// Sturges' bin count for a sample of size `n`, computed in integers.
pub fn sturges_count(n: usize) -> usize {
    assert!(n >= 1, "sample size must be positive");
    // 1 + ceil(log2 n)
    let ceil_log2 = if n == 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    };
    1 + ceil_log2
}

pub fn sturges_bins<T: Float>(s: &SortedSample<T>) -> usize {
    sturges_count(s.len())
}

/// `3.5 * sd / cbrt(n)`.
pub fn scott_width<T: Float>(sd: T, n: usize) -> T {
    lit::<T>(3.5) * sd / T::from(n).unwrap().cbrt()
}

/// `2 * iqr / cbrt(n)`.
pub fn fd_width<T: Float>(iqr: T, n: usize) -> T {
    lit::<T>(2.0) * iqr / T::from(n).unwrap().cbrt()
}

fn require_two<T: Float>(s: &SortedSample<T>) -> Result<()> {
    if s.len() < 2 {
        return Err(Error::TooFewObservations {
            needed: 2,
            got: s.len(),
        });
    }
    Ok(())
}

/// Scott's rule on the sample standard deviation (`1/(n-1)` divisor).
pub fn scott_bandwidth<T: Float>(s: &SortedSample<T>) -> Result<T> {
    require_two(s)?;
    let sd = s.std_dev();
    if sd <= T::zero() {
        return Err(Error::DegenerateVariance);
    }
    Ok(scott_width(sd, s.len()))
}

/// Freedman–Diaconis rule; falls back to Scott's rule when the IQR is zero.
pub fn fd_bandwidth<T: Float>(s: &SortedSample<T>) -> Result<T> {
    require_two(s)?;
    let iqr = s.iqr();
    if iqr > T::zero() {
        Ok(fd_width(iqr, s.len()))
    } else {
        scott_bandwidth(s)
    }
}

pub fn histogram<T: Float>(s: &SortedSample<T>, rule: BinRule<T>) -> Result<Histogram<T>> {
    rule.validate()?;
    let n = s.len();
    let nf = T::from(n).unwrap();
    let (lo, hi) = (s.min(), s.max());
    let range = hi - lo;

    if range <= T::zero() {
        let half = lit::<T>(0.5);
        return Ok(Histogram {
            edges: vec![lo - half, lo + half],
            counts: vec![n],
            densities: vec![T::one()],
        });
    }

    let count_for_width = |h: T| (range / h).ceil().to_usize().unwrap_or(1).max(1);
    let k = match rule {
        BinRule::Sturges => sturges_count(n),
        BinRule::Scott => count_for_width(scott_bandwidth(s)?),
        BinRule::FreedmanDiaconis => count_for_width(fd_bandwidth(s)?),
        BinRule::ExplicitCount(k) => k,
        BinRule::ExplicitWidth(h) => count_for_width(h),
    };

    let kf = T::from(k).unwrap();
    let mut edges: Vec<T> = (0..k)
        .map(|i| lo + range * T::from(i).unwrap() / kf)
        .collect();
    edges.push(hi);

    let mut counts = vec![0usize; k];
    for &x in s.values() {
        let mut idx = ((x - lo) / range * kf)
            .floor()
            .to_usize()
            .unwrap_or(0)
            .min(k - 1);
        while idx > 0 && x < edges[idx] {
            idx -= 1;
        }
        while idx + 1 < k && x >= edges[idx + 1] {
            idx += 1;
        }
        counts[idx] += 1;
    }

    let densities = counts
        .iter()
        .enumerate()
        .map(|(i, &c)| T::from(c).unwrap() / (nf * (edges[i + 1] - edges[i])))
        .collect();
    Ok(Histogram {
        edges,
        counts,
        densities,
    })
}

fn check_bandwidth<T: Float>(h: T) -> Result<()> {
    if h > T::zero() && h.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidBandwidth(h.to_f64().unwrap_or(f64::NAN)))
    }
}

/// Gaussian KDE evaluated at a single point.
pub fn kde_at<T: Float>(s: &SortedSample<T>, h: T, x: T) -> T {
    let norm = (T::TAU().sqrt() * h * T::from(s.len()).unwrap()).recip();
    let half = lit::<T>(0.5);
    let sum: T = s
        .values()
        .iter()
        .map(|&xi| {
            let u = (x - xi) / h;
            (-half * u * u).exp()
        })
        .sum();
    sum * norm
}

/// Gaussian KDE on a uniform grid over `[min - 3h, max + 3h]`.
pub fn kde<T: Float>(s: &SortedSample<T>, h: T, grid_size: usize) -> Result<DensityCurve<T>> {
    check_bandwidth(h)?;
    let pad = lit::<T>(3.0) * h;
    kde_between(s, h, s.min() - pad, s.max() + pad, grid_size)
}

/// Gaussian KDE on a uniform grid over `[lo, hi]`, endpoints included.
pub fn kde_between<T: Float>(
    s: &SortedSample<T>,
    h: T,
    lo: T,
    hi: T,
    grid_size: usize,
) -> Result<DensityCurve<T>> {
    check_bandwidth(h)?;
    if grid_size < 2 {
        return Err(Error::InvalidGrid(grid_size));
    }
    let last = T::from(grid_size - 1).unwrap();
    let grid: Vec<T> = (0..grid_size)
        .map(|i| {
            if i + 1 == grid_size {
                hi
            } else {
                lo + (hi - lo) * T::from(i).unwrap() / last
            }
        })
        .collect();
    let density = grid.iter().map(|&x| kde_at(s, h, x)).collect();
    Ok(DensityCurve {
        grid,
        density,
        bandwidth: h,
    })
}
