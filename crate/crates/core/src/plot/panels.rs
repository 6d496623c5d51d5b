use statrs::distribution::{ContinuousCDF, StudentsT};

use super::geometry::{PanelGeometry, PanelKind, Point, Primitive, Style};
use crate::density::{self, BinRule, DensityCurve, DEFAULT_GRID_SIZE};
use crate::stats::{LetterValueSet, SortedSample};
use crate::{lit, Error, Float, Result};

/// Largest half-width of any silhouette, in transverse units.
const HALF_WIDTH: f64 = 0.45;

/// Transverse half-width ratio between successive letter-value boxes.
pub const LV_WIDTH_DECAY: f64 = 0.75;

fn ratio<T: Float>(num: T, den: T) -> f64 {
    if den > T::zero() {
        (num / den).to_f64().unwrap_or(0.0)
    } else {
        0.0
    }
}

/// Density over the data range, mirrored about the midline.
fn mirrored_density<T: Float>(curve: &DensityCurve<T>) -> Primitive<T> {
    let peak = curve.peak();
    let offsets: Vec<f64> = curve
        .density
        .iter()
        .map(|&f| HALF_WIDTH * ratio(f, peak))
        .collect();
    let upper = curve
        .grid
        .iter()
        .zip(&offsets)
        .map(|(&x, &d)| Point::new(x, 0.5 + d));
    let lower = curve
        .grid
        .iter()
        .zip(&offsets)
        .rev()
        .map(|(&x, &d)| Point::new(x, 0.5 - d));
    Primitive::Polygon {
        points: upper.chain(lower).collect(),
        style: Style::Density,
    }
}

fn data_range_density<T: Float>(s: &SortedSample<T>, h: T) -> Result<DensityCurve<T>> {
    density::kde_between(s, h, s.min(), s.max(), DEFAULT_GRID_SIZE)
}

/// Histogram bars with the density estimate overlaid on the same vertical scale.
pub fn histogram_geom<T: Float>(
    s: &SortedSample<T>,
    rule: BinRule<T>,
    h: T,
) -> Result<PanelGeometry<T>> {
    let hist = density::histogram(s, rule)?;
    let curve = data_range_density(s, h)?;
    let top = hist
        .densities
        .iter()
        .chain(&curve.density)
        .fold(T::zero(), |m, &d| m.max(d));
    let height = 0.9;

    let mut g = PanelGeometry::new(PanelKind::Histogram);
    for (i, &d) in hist.densities.iter().enumerate() {
        g.push(Primitive::Rect {
            x0: hist.edges[i],
            x1: hist.edges[i + 1],
            y0: 0.0,
            y1: height * ratio(d, top),
            style: Style::Body,
        });
    }
    g.push(Primitive::Polyline {
        points: curve
            .grid
            .iter()
            .zip(&curve.density)
            .map(|(&x, &f)| Point::new(x, height * ratio(f, top)))
            .collect(),
        style: Style::Density,
    });
    Ok(g)
}

/// Mirrored KDE silhouette over the data range, inner IQR box and median marker.
pub fn violin_geom<T: Float>(s: &SortedSample<T>, h: T) -> Result<PanelGeometry<T>> {
    let curve = data_range_density(s, h)?;
    let mut g = PanelGeometry::new(PanelKind::Violin);
    g.push(mirrored_density(&curve));
    g.push(Primitive::Rect {
        x0: s.quantile_unchecked(lit(0.25)),
        x1: s.quantile_unchecked(lit(0.75)),
        y0: 0.45,
        y1: 0.55,
        style: Style::Body,
    });
    g.push(Primitive::Marker {
        at: Point::new(s.median(), 0.5),
        style: Style::Median,
    });
    Ok(g)
}

/// Folded-ECDF width profile `(x, 2 min(F, 1 - F))` with `F(x_(i)) = i/n`
/// (ties take the rank of their last occurrence) and the median inserted
/// at full width 1. Observations equal to the median are absorbed into it.
pub fn box_percentile_profile<T: Float>(s: &SortedSample<T>) -> Vec<(T, f64)> {
    let x = s.values();
    let n = x.len();
    let m = s.median();
    let mut out = Vec::new();
    let mut inserted = false;
    for (i, &v) in x.iter().enumerate() {
        if i + 1 < n && x[i + 1] == v {
            continue;
        }
        if v >= m && !inserted {
            out.push((m, 1.0));
            inserted = true;
        }
        if v == m {
            continue;
        }
        let f = (i + 1) as f64 / n as f64;
        out.push((v, 2.0 * f.min(1.0 - f)));
    }
    out
}

fn interpolate_width<T: Float>(profile: &[(T, f64)], at: T) -> f64 {
    for w in profile.windows(2) {
        let ((x0, w0), (x1, w1)) = (w[0], w[1]);
        if at >= x0 && at <= x1 {
            return if x1 > x0 {
                w0 + (w1 - w0) * ratio(at - x0, x1 - x0)
            } else {
                w0.max(w1)
            };
        }
    }
    profile.first().map_or(0.0, |p| p.1)
}

/// Box whose width follows the folded empirical CDF, with quartile segments.
pub fn box_percentile_geom<T: Float>(s: &SortedSample<T>) -> Result<PanelGeometry<T>> {
    if s.len() < 2 {
        return Err(Error::TooFewObservations {
            needed: 2,
            got: s.len(),
        });
    }
    let profile = box_percentile_profile(s);
    let upper = profile
        .iter()
        .map(|&(x, w)| Point::new(x, 0.5 + HALF_WIDTH * w));
    let lower = profile
        .iter()
        .rev()
        .map(|&(x, w)| Point::new(x, 0.5 - HALF_WIDTH * w));

    let mut g = PanelGeometry::new(PanelKind::BoxPercentile);
    g.push(Primitive::Polygon {
        points: upper.chain(lower).collect(),
        style: Style::Body,
    });
    for (p, style) in [
        (0.25, Style::Outline),
        (0.5, Style::Median),
        (0.75, Style::Outline),
    ] {
        let q = s.quantile_unchecked(lit(p));
        let d = HALF_WIDTH * interpolate_width(&profile, q);
        g.push(Primitive::Segment {
            from: Point::new(q, 0.5 - d),
            to: Point::new(q, 0.5 + d),
            style,
        });
    }
    Ok(g)
}

/// Nested boxes, deepest (widest span, narrowest) first; level 0 is a
/// zero-width box on the median.
pub fn letter_value_geom<T: Float>(
    s: &SortedSample<T>,
    lv: &LetterValueSet<T>,
) -> PanelGeometry<T> {
    let mut g = PanelGeometry::new(PanelKind::LetterValue);
    for k in (0..lv.levels()).rev() {
        let (lo, hi) = lv.level(k);
        let d = HALF_WIDTH * LV_WIDTH_DECAY.powi(k as i32);
        g.push(Primitive::Rect {
            x0: lo,
            x1: hi,
            y0: 0.5 - d,
            y1: 0.5 + d,
            style: if k == 0 { Style::Median } else { Style::Body },
        });
    }
    g.outliers = lv.outliers(s);
    for &x in &g.outliers.clone() {
        g.push(Primitive::Marker {
            at: Point::new(x, 0.5),
            style: Style::Outlier,
        });
    }
    g
}

/// Density silhouette, one short line per observation and a long mean line.
pub fn bean_geom<T: Float>(s: &SortedSample<T>, h: T) -> Result<PanelGeometry<T>> {
    let curve = data_range_density(s, h)?;
    let mut g = PanelGeometry::new(PanelKind::Bean);
    g.push(mirrored_density(&curve));
    for &x in s.values() {
        g.push(Primitive::Segment {
            from: Point::new(x, 0.42),
            to: Point::new(x, 0.58),
            style: Style::Observation,
        });
    }
    let mean = s.mean();
    g.push(Primitive::Segment {
        from: Point::new(mean, 0.5 - HALF_WIDTH),
        to: Point::new(mean, 0.5 + HALF_WIDTH),
        style: Style::Mean,
    });
    Ok(g)
}

/// Statistics behind the mean-centred box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanBoxStats<T> {
    pub mean: T,
    pub sd: T,
    /// 95% Student-t interval for the mean.
    pub ci_lo: T,
    pub ci_hi: T,
    /// `mean ± 2 sd`.
    pub whisker_lo: T,
    pub whisker_hi: T,
}

pub fn mean_box_stats<T: Float>(s: &SortedSample<T>) -> Result<MeanBoxStats<T>> {
    let n = s.len();
    if n < 2 {
        return Err(Error::TooFewObservations { needed: 2, got: n });
    }
    let t = StudentsT::new(0.0, 1.0, (n - 1) as f64)
        .expect("positive degrees of freedom")
        .inverse_cdf(0.975);
    let (mean, sd) = (s.mean(), s.std_dev());
    let half = lit::<T>(t) * sd / T::from(n).unwrap().sqrt();
    let spread = lit::<T>(2.0) * sd;
    Ok(MeanBoxStats {
        mean,
        sd,
        ci_lo: mean - half,
        ci_hi: mean + half,
        whisker_lo: mean - spread,
        whisker_hi: mean + spread,
    })
}

/// Mean-centred box (95% CI of the mean) with `±2 sd` whiskers; both are
/// clamped to the data range for drawing.
pub fn mean_box_geom<T: Float>(s: &SortedSample<T>) -> Result<PanelGeometry<T>> {
    let st = mean_box_stats(s)?;
    let clamp = |v: T| v.max(s.min()).min(s.max());
    let (lo, hi) = (clamp(st.ci_lo), clamp(st.ci_hi));
    let (wlo, whi) = (clamp(st.whisker_lo), clamp(st.whisker_hi));

    let mut g = PanelGeometry::new(PanelKind::MeanBox);
    g.push(Primitive::Segment {
        from: Point::new(wlo, 0.5),
        to: Point::new(lo, 0.5),
        style: Style::Whisker,
    });
    g.push(Primitive::Segment {
        from: Point::new(hi, 0.5),
        to: Point::new(whi, 0.5),
        style: Style::Whisker,
    });
    g.push(Primitive::Rect {
        x0: lo,
        x1: hi,
        y0: 0.3,
        y1: 0.7,
        style: Style::Body,
    });
    g.push(Primitive::Segment {
        from: Point::new(st.mean, 0.3),
        to: Point::new(st.mean, 0.7),
        style: Style::Mean,
    });
    Ok(g)
}

/// One tick per observation.
pub fn rug_geom<T: Float>(s: &SortedSample<T>) -> PanelGeometry<T> {
    let mut g = PanelGeometry::new(PanelKind::Rug);
    for &x in s.values() {
        g.push(Primitive::Segment {
            from: Point::new(x, 0.15),
            to: Point::new(x, 0.85),
            style: Style::Tick,
        });
    }
    g
}
