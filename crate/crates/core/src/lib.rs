//! Robust and classical summaries of skewed univariate samples, and a
//! synchronized multi-panel SVG figure built from them.
//!
//! The pipeline is:
//!
//! 1. [`SortedSample`] validates and sorts raw input (dropping NaN/inf).
//! 2. [`stats`] computes order statistics, moments, the medcouple and letter values.
//! 3. [`density`] bins the data and evaluates Gaussian kernel density estimates.
//! 4. [`plot`] turns a sample into backend-independent [`PanelGeometry`] in data coordinates.
//! 5. [`render`] lays the panels out on one shared data axis and emits SVG.
//!
//! Everything is generic over the scalar type through [`Float`]; the
//! aliases at the crate root fix it to `f64` (or `f32` with the `32` suffix).
//!
//! ```
//! use skewviz_core::{Sample, stats};
//!
//! let s = Sample::new(vec![1.0, 2.0, 3.0, 4.0, 10.0]).unwrap();
//! let summary = stats::summary(&s);
//! assert_eq!(summary.median, 3.0);
//! assert_eq!(stats::medcouple(&s).value, 0.0);
//! ```

pub mod density;
mod error;
pub mod plot;
pub mod render;
pub mod stats;

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::float::FloatConst;

pub use density::{BinRule, DensityCurve, Histogram};
pub use error::{Error, Result};
pub use plot::{BoxStats, PanelGeometry, PanelKind, Primitive, Style};
pub use render::{Canvas, FigureLayout};
pub use stats::{LetterValueSet, Medcouple, SortedSample, SummaryStats};

/// Scalar bound used throughout the crate.
pub trait Float:
    num_traits::Float + FloatConst + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
}

impl<T> Float for T where
    T: num_traits::Float + FloatConst + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
}

/// Converts an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn lit<T: Float>(x: f64) -> T {
    T::from(x).expect("f64 constant representable in scalar type")
}

pub type Sample = SortedSample<f64>;
pub type Sample32 = SortedSample<f32>;
pub type Summary = SummaryStats<f64>;
pub type Summary32 = SummaryStats<f32>;
pub type Boxplot = BoxStats<f64>;
pub type Boxplot32 = BoxStats<f32>;
pub type LetterValues = LetterValueSet<f64>;
pub type Density = DensityCurve<f64>;
pub type Bins = Histogram<f64>;
pub type Panel = PanelGeometry<f64>;
pub type Panel32 = PanelGeometry<f32>;
pub type Figure = FigureLayout<f64>;
pub type Figure32 = FigureLayout<f32>;
