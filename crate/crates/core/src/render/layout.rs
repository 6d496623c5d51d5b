use crate::plot::{rug_geom, PanelGeometry, PanelKind};
use crate::stats::SortedSample;
use crate::{lit, Error, Float, Result};

/// Axis padding on each side, as a fraction of the data range.
pub const AXIS_PAD_FRACTION: f64 = 0.02;

/// Pad used when every observation is equal.
const DEGENERATE_PAD: f64 = 0.5;

/// Canvas size and spacing, in abstract pixels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Canvas {
    pub width: f64,
    pub height: f64,
    pub margin_left: f64,
    pub margin_right: f64,
    pub margin_top: f64,
    pub margin_bottom: f64,
    pub panel_gap: f64,
    pub rug_height: f64,
}

impl Default for Canvas {
    fn default() -> Self {
        Self::new(900.0, 1200.0)
    }
}

impl Canvas {
    pub fn new(width: f64, height: f64) -> Self {
        Self {
            width,
            height,
            margin_left: 200.0,
            margin_right: 30.0,
            margin_top: 30.0,
            margin_bottom: 60.0,
            panel_gap: 12.0,
            rug_height: 40.0,
        }
    }

    pub fn plot_left(&self) -> f64 {
        self.margin_left
    }

    pub fn plot_right(&self) -> f64 {
        self.width - self.margin_right
    }

    pub fn plot_top(&self) -> f64 {
        self.margin_top
    }

    pub fn plot_bottom(&self) -> f64 {
        self.height - self.margin_bottom
    }
}

/// Ordered panels sharing one data axis, with the rug in the middle.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureLayout<T> {
    pub panels: Vec<PanelGeometry<T>>,
    pub axis_range: (T, T),
    /// Sample median, drawn as one line through every panel.
    pub median_guide: T,
    pub canvas: Canvas,
    bands: Vec<(f64, f64)>,
}

impl<T: Float> FigureLayout<T> {
    /// Position of the rug panel.
    pub fn rug_index(&self) -> usize {
        self.panels
            .iter()
            .position(|p| p.kind == PanelKind::Rug)
            .expect("layout always inserts a rug")
    }

    /// `(scale, offset)` with `pixel = scale * value + offset`, shared by all panels.
    pub fn x_map(&self) -> (f64, f64) {
        let lo = self.axis_range.0.to_f64().unwrap();
        let hi = self.axis_range.1.to_f64().unwrap();
        let c = &self.canvas;
        let scale = (c.plot_right() - c.plot_left()) / (hi - lo);
        (scale, c.plot_left() - lo * scale)
    }

    pub fn x_pixel(&self, v: T) -> f64 {
        let (scale, offset) = self.x_map();
        let px = scale * v.to_f64().unwrap() + offset;
        px.clamp(self.canvas.plot_left(), self.canvas.plot_right())
    }

    /// `(top, bottom)` pixel rows of panel `i`.
    pub fn band(&self, i: usize) -> (f64, f64) {
        self.bands[i]
    }

    /// Pixel row of transverse coordinate `t` in panel `i` (t = 1 at the top).
    pub fn y_pixel(&self, i: usize, t: f64) -> f64 {
        let (top, bottom) = self.bands[i];
        bottom - t * (bottom - top)
    }
}

/// Assembles panels in the given order and inserts a rug at the middle
/// index `floor(m / 2)`, where `m` counts the non-rug panels.
pub fn layout<T: Float>(
    panels: Vec<PanelGeometry<T>>,
    s: &SortedSample<T>,
    canvas: Canvas,
) -> Result<FigureLayout<T>> {
    let mut panels: Vec<_> = panels
        .into_iter()
        .filter(|p| p.kind != PanelKind::Rug)
        .collect();
    if panels.is_empty() {
        return Err(Error::EmptyFigure);
    }
    for (i, p) in panels.iter().enumerate() {
        if panels[..i].iter().any(|q| q.kind == p.kind) {
            return Err(Error::DuplicatePanel(p.kind.name()));
        }
    }
    panels.insert(panels.len() / 2, rug_geom(s));

    let range = s.range();
    let pad = if range > T::zero() {
        range * lit(AXIS_PAD_FRACTION)
    } else {
        lit(DEGENERATE_PAD)
    };
    let axis_range = (s.min() - pad, s.max() + pad);

    for (i, p) in panels.iter().enumerate() {
        let inside = p
            .data_extent()
            .is_none_or(|(lo, hi)| lo >= axis_range.0 && hi <= axis_range.1);
        if !inside || !p.transverse_in_unit() {
            return Err(Error::OutOfRange { panel: i });
        }
    }

    let bands = bands(&canvas, &panels)?;
    Ok(FigureLayout {
        panels,
        axis_range,
        median_guide: s.median(),
        canvas,
        bands,
    })
}

fn bands<T: Float>(c: &Canvas, panels: &[PanelGeometry<T>]) -> Result<Vec<(f64, f64)>> {
    let values = [
        c.width,
        c.height,
        c.margin_left,
        c.margin_right,
        c.margin_top,
        c.margin_bottom,
        c.panel_gap,
        c.rug_height,
    ];
    if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::InvalidCanvas(
            "dimensions must be finite and non-negative".into(),
        ));
    }
    if c.plot_right() <= c.plot_left() {
        return Err(Error::InvalidCanvas(format!(
            "width {} leaves no plot area",
            c.width
        )));
    }
    let regular = panels.iter().filter(|p| p.kind != PanelKind::Rug).count() as f64;
    let gaps = c.panel_gap * (panels.len() - 1) as f64;
    let free = c.plot_bottom() - c.plot_top() - gaps - c.rug_height;
    if free <= 0.0 {
        return Err(Error::InvalidCanvas(format!(
            "height {} leaves no room for panels",
            c.height
        )));
    }
    let each = free / regular;

    let mut top = c.plot_top();
    let mut out = Vec::with_capacity(panels.len());
    for p in panels {
        let h = if p.kind == PanelKind::Rug {
            c.rug_height
        } else {
            each
        };
        out.push((top, top + h));
        top += h + c.panel_gap;
    }
    Ok(out)
}
