//! Command-line front end: reads a numeric column (or generates a gamma
//! demo sample), prints the summary table and writes the synchronized SVG.

pub mod config;
pub mod demo;
mod error;
pub mod ingest;
mod run;
pub mod table;

pub use config::{Cli, RunConfig};
pub use error::CliError;
pub use run::{build_panels, figure_svg, load, resolve_bandwidth, run};
