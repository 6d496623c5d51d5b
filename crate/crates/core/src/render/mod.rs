//! Synchronized figure layout and SVG output.

mod layout;
mod svg;

pub use layout::{layout, Canvas, FigureLayout, AXIS_PAD_FRACTION};
pub use svg::{emit_svg, fmt3};
