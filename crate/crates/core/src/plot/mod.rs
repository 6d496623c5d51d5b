//! Backend-independent geometry for each plot variant.
//!
//! Data-axis coordinates are in data units; transverse coordinates are
//! panel-local in `[0, 1]` with 0.5 as the midline.

mod boxes;
mod geometry;
mod panels;

pub use boxes::{
    adjusted_box, box_geom, classical_box, notch_half_width, notched_box, BoxStats, WHISKER_FACTOR,
};
pub use geometry::{PanelGeometry, PanelKind, Point, Primitive, Style};
pub use panels::{
    bean_geom, box_percentile_geom, box_percentile_profile, histogram_geom, letter_value_geom,
    mean_box_geom, mean_box_stats, rug_geom, violin_geom, MeanBoxStats, LV_WIDTH_DECAY,
};
