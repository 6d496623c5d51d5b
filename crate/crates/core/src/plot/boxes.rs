//! Classical, notched and medcouple-adjusted boxplots.

use super::geometry::{PanelGeometry, PanelKind, Point, Primitive, Style};
use crate::stats::{Medcouple, SortedSample};
use crate::{lit, Float};

/// Fence multiplier applied to `Q3 - Q1`.
pub const WHISKER_FACTOR: f64 = 1.5;

const NOTCH_CONSTANT: f64 = 1.57;

/// Quartiles, fences, whiskers and outliers of one boxplot.
///
/// `iqr` is the plain `Q3 - Q1`. Whiskers end at the most extreme
/// observation between the fence and the box; when no observation lies
/// there the whisker has zero length and ends on the box.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxStats<T> {
    pub q1: T,
    pub q2: T,
    pub q3: T,
    pub iqr: T,
    pub fence_lo: T,
    pub fence_hi: T,
    pub whisker_lo: T,
    pub whisker_hi: T,
    /// Unclamped `(low, high)` notch limits.
    pub notch: Option<(T, T)>,
    /// Observations strictly outside the fences, ascending.
    pub outliers: Vec<T>,
}

impl<T: Float> BoxStats<T> {
    /// Outliers above the upper fence.
    pub fn upper_outliers(&self) -> usize {
        self.outliers.iter().filter(|&&x| x > self.fence_hi).count()
    }

    pub fn lower_outliers(&self) -> usize {
        self.outliers.iter().filter(|&&x| x < self.fence_lo).count()
    }

    /// Notch limits clamped to `[q1, q3]` for drawing.
    pub fn drawn_notch(&self) -> Option<(T, T)> {
        self.notch
            .map(|(lo, hi)| (lo.max(self.q1).min(self.q2), hi.min(self.q3).max(self.q2)))
    }
}

/// Box with fences `q1 - lower * iqr` and `q3 + upper * iqr`.
fn with_fences<T: Float>(s: &SortedSample<T>, lower: T, upper: T) -> BoxStats<T> {
    let q1 = s.quantile_unchecked(lit(0.25));
    let q2 = s.quantile_unchecked(lit(0.5));
    let q3 = s.quantile_unchecked(lit(0.75));
    let iqr = q3 - q1;
    let fence_lo = q1 - lower * iqr;
    let fence_hi = q3 + upper * iqr;

    let x = s.values();
    let whisker_lo = x
        .iter()
        .copied()
        .find(|&v| v >= fence_lo)
        .filter(|&v| v <= q1)
        .unwrap_or(q1);
    let whisker_hi = x
        .iter()
        .rev()
        .copied()
        .find(|&v| v <= fence_hi)
        .filter(|&v| v >= q3)
        .unwrap_or(q3);
    let outliers = x
        .iter()
        .copied()
        .filter(|&v| v < fence_lo || v > fence_hi)
        .collect();

    BoxStats {
        q1,
        q2,
        q3,
        iqr,
        fence_lo,
        fence_hi,
        whisker_lo,
        whisker_hi,
        notch: None,
        outliers,
    }
}

/// Tukey boxplot with fences at 1.5 IQR beyond the quartiles.
pub fn classical_box<T: Float>(s: &SortedSample<T>) -> BoxStats<T> {
    let k = lit(WHISKER_FACTOR);
    with_fences(s, k, k)
}

/// `1.57 * iqr / sqrt(n)`.
pub fn notch_half_width<T: Float>(iqr: T, n: usize) -> T {
    lit::<T>(NOTCH_CONSTANT) * iqr / T::from(n).unwrap().sqrt()
}

/// Classical box plus a median notch `q2 ± 1.57 iqr / sqrt(n)`.
pub fn notched_box<T: Float>(s: &SortedSample<T>) -> BoxStats<T> {
    let mut b = classical_box(s);
    let hw = notch_half_width(b.iqr, s.len());
    b.notch = Some((b.q2 - hw, b.q2 + hw));
    b
}

/// Skew-adjusted fences: for `mc >= 0` the multipliers are
/// `1.5 e^{-4 mc}` (lower) and `1.5 e^{3 mc}` (upper); for `mc < 0`,
/// `1.5 e^{-3 mc}` and `1.5 e^{4 mc}`.
pub fn adjusted_box<T: Float>(s: &SortedSample<T>, mc: &Medcouple<T>) -> BoxStats<T> {
    let k = lit::<T>(WHISKER_FACTOR);
    let m = mc.value;
    let (lo_exp, hi_exp) = if m >= T::zero() {
        (lit::<T>(-4.0) * m, lit::<T>(3.0) * m)
    } else {
        (lit::<T>(-3.0) * m, lit::<T>(4.0) * m)
    };
    with_fences(s, k * lo_exp.exp(), k * hi_exp.exp())
}

/// Geometry for any of the three box variants.
pub fn box_geom<T: Float>(kind: PanelKind, b: &BoxStats<T>) -> PanelGeometry<T> {
    let mut g = PanelGeometry::new(kind);
    let (bottom, top) = (0.3, 0.7);

    g.push(Primitive::Segment {
        from: Point::new(b.whisker_lo, 0.5),
        to: Point::new(b.q1, 0.5),
        style: Style::Whisker,
    });
    g.push(Primitive::Segment {
        from: Point::new(b.q3, 0.5),
        to: Point::new(b.whisker_hi, 0.5),
        style: Style::Whisker,
    });
    for w in [b.whisker_lo, b.whisker_hi] {
        g.push(Primitive::Segment {
            from: Point::new(w, 0.4),
            to: Point::new(w, 0.6),
            style: Style::Whisker,
        });
    }

    match b.drawn_notch() {
        Some((lo, hi)) => {
            let (waist_lo, waist_hi) = (0.4, 0.6);
            g.push(Primitive::Polygon {
                points: vec![
                    Point::new(b.q1, bottom),
                    Point::new(lo, bottom),
                    Point::new(b.q2, waist_lo),
                    Point::new(hi, bottom),
                    Point::new(b.q3, bottom),
                    Point::new(b.q3, top),
                    Point::new(hi, top),
                    Point::new(b.q2, waist_hi),
                    Point::new(lo, top),
                    Point::new(b.q1, top),
                ],
                style: Style::Body,
            });
            g.push(Primitive::Segment {
                from: Point::new(b.q2, waist_lo),
                to: Point::new(b.q2, waist_hi),
                style: Style::Median,
            });
        }
        None => {
            g.push(Primitive::Rect {
                x0: b.q1,
                x1: b.q3,
                y0: bottom,
                y1: top,
                style: Style::Body,
            });
            g.push(Primitive::Segment {
                from: Point::new(b.q2, bottom),
                to: Point::new(b.q2, top),
                style: Style::Median,
            });
        }
    }

    for &x in &b.outliers {
        g.push(Primitive::Marker {
            at: Point::new(x, 0.5),
            style: Style::Outlier,
        });
    }
    g.outliers = b.outliers.clone();
    g
}
