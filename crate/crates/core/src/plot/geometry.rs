use std::fmt;
use std::str::FromStr;

use crate::Float;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PanelKind {
    Histogram,
    NotchedBox,
    AdjustedBox,
    ClassicalBox,
    Violin,
    BoxPercentile,
    LetterValue,
    Bean,
    MeanBox,
    Rug,
}

impl PanelKind {
    pub const ALL: [PanelKind; 10] = [
        PanelKind::Histogram,
        PanelKind::NotchedBox,
        PanelKind::AdjustedBox,
        PanelKind::ClassicalBox,
        PanelKind::Violin,
        PanelKind::BoxPercentile,
        PanelKind::LetterValue,
        PanelKind::Bean,
        PanelKind::MeanBox,
        PanelKind::Rug,
    ];

    /// Short name used on the command line and in SVG class names.
    pub fn name(self) -> &'static str {
        match self {
            PanelKind::Histogram => "hist",
            PanelKind::NotchedBox => "notched",
            PanelKind::AdjustedBox => "adjusted",
            PanelKind::ClassicalBox => "classical",
            PanelKind::Violin => "violin",
            PanelKind::BoxPercentile => "bpp",
            PanelKind::LetterValue => "lv",
            PanelKind::Bean => "bean",
            PanelKind::MeanBox => "meanbox",
            PanelKind::Rug => "rug",
        }
    }

    /// Human-readable panel title.
    pub fn label(self) -> &'static str {
        match self {
            PanelKind::Histogram => "histogram + density",
            PanelKind::NotchedBox => "notched boxplot",
            PanelKind::AdjustedBox => "adjusted boxplot",
            PanelKind::ClassicalBox => "boxplot",
            PanelKind::Violin => "violin plot",
            PanelKind::BoxPercentile => "box-percentile plot",
            PanelKind::LetterValue => "letter-value boxplot",
            PanelKind::Bean => "bean plot",
            PanelKind::MeanBox => "mean box (shifting-boxplot approximation)",
            PanelKind::Rug => "rug",
        }
    }
}

impl fmt::Display for PanelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PanelKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PanelKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown panel `{s}`"))
    }
}

/// Visual role of a primitive; the renderer maps roles to styling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Body,
    Outline,
    Density,
    Median,
    Mean,
    Whisker,
    Tick,
    Observation,
    Outlier,
}

impl Style {
    pub fn name(self) -> &'static str {
        match self {
            Style::Body => "body",
            Style::Outline => "outline",
            Style::Density => "density",
            Style::Median => "median",
            Style::Mean => "mean",
            Style::Whisker => "whisker",
            Style::Tick => "tick",
            Style::Observation => "observation",
            Style::Outlier => "outlier",
        }
    }
}

/// `x` along the shared data axis, `y` across the panel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point<T> {
    pub x: T,
    pub y: f64,
}

impl<T> Point<T> {
    pub fn new(x: T, y: f64) -> Self {
        Self { x, y }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Primitive<T> {
    Rect {
        x0: T,
        x1: T,
        y0: f64,
        y1: f64,
        style: Style,
    },
    Polygon {
        points: Vec<Point<T>>,
        style: Style,
    },
    Polyline {
        points: Vec<Point<T>>,
        style: Style,
    },
    Segment {
        from: Point<T>,
        to: Point<T>,
        style: Style,
    },
    Marker {
        at: Point<T>,
        style: Style,
    },
}

impl<T: Float> Primitive<T> {
    pub fn style(&self) -> Style {
        match self {
            Primitive::Rect { style, .. }
            | Primitive::Polygon { style, .. }
            | Primitive::Polyline { style, .. }
            | Primitive::Segment { style, .. }
            | Primitive::Marker { style, .. } => *style,
        }
    }

    /// Every point of the primitive, in drawing order.
    pub fn points(&self) -> Vec<Point<T>> {
        match self {
            Primitive::Rect { x0, x1, y0, y1, .. } => {
                vec![Point::new(*x0, *y0), Point::new(*x1, *y1)]
            }
            Primitive::Polygon { points, .. } | Primitive::Polyline { points, .. } => {
                points.clone()
            }
            Primitive::Segment { from, to, .. } => vec![*from, *to],
            Primitive::Marker { at, .. } => vec![*at],
        }
    }
}

/// Drawing primitives for one plot variant.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelGeometry<T> {
    pub kind: PanelKind,
    pub primitives: Vec<Primitive<T>>,
    /// Values drawn as individual markers.
    pub outliers: Vec<T>,
}

impl<T: Float> PanelGeometry<T> {
    pub fn new(kind: PanelKind) -> Self {
        Self {
            kind,
            primitives: Vec::new(),
            outliers: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, p: Primitive<T>) {
        self.primitives.push(p);
    }

    /// All data-axis coordinates, in primitive order.
    pub fn data_coords(&self) -> Vec<T> {
        self.primitives
            .iter()
            .flat_map(|p| p.points())
            .map(|p| p.x)
            .collect()
    }

    /// `(min, max)` over every data-axis coordinate.
    pub fn data_extent(&self) -> Option<(T, T)> {
        let xs = self.data_coords();
        let first = *xs.first()?;
        Some(
            xs.iter()
                .fold((first, first), |(lo, hi), &x| (lo.min(x), hi.max(x))),
        )
    }

    /// True when every transverse coordinate lies in `[0, 1]`.
    pub fn transverse_in_unit(&self) -> bool {
        self.primitives
            .iter()
            .flat_map(|p| p.points())
            .all(|p| (0.0..=1.0).contains(&p.y))
    }
}
