use std::fs;
use std::io::Write;

use skewviz_core::density::{fd_bandwidth, scott_bandwidth};
use skewviz_core::plot::{
    adjusted_box, bean_geom, box_geom, box_percentile_geom, classical_box, histogram_geom,
    letter_value_geom, mean_box_geom, notched_box, violin_geom,
};
use skewviz_core::render::{emit_svg, layout};
use skewviz_core::stats::{letter_values, medcouple, summary};
use skewviz_core::{BinRule, Canvas, Error, Panel, PanelKind, Sample};

use crate::config::{BandwidthSpec, RunConfig, Source};
use crate::demo::demo_sample;
use crate::ingest::ingest;
use crate::table::render_table;
use crate::CliError;

/// Bandwidth used when the sample has no spread to estimate one from.
const FALLBACK_BANDWIDTH: f64 = 1.0;

/// Loads the sample named by `config`, reporting dropped values on `diag`.
pub fn load(config: &RunConfig, diag: &mut impl Write) -> Result<Sample, CliError> {
    match &config.source {
        Source::Gamma { shape, n } => demo_sample(*shape, *n, config.seed),
        Source::File { path, column } => {
            let got = ingest(path, column.as_ref())?;
            if got.dropped() > 0 {
                let _ = writeln!(
                    diag,
                    "skewviz: dropped {} missing/non-finite value(s) from {}",
                    got.dropped(),
                    path.display()
                );
            }
            Ok(got.sample)
        }
    }
}

pub fn resolve_bandwidth(s: &Sample, spec: BandwidthSpec) -> Result<f64, CliError> {
    let estimated = match spec {
        BandwidthSpec::Fixed(h) => return Ok(h),
        BandwidthSpec::Scott => scott_bandwidth(s),
        BandwidthSpec::FreedmanDiaconis => fd_bandwidth(s),
    };
    match estimated {
        Ok(h) => Ok(h),
        Err(Error::DegenerateVariance | Error::TooFewObservations { .. }) => Ok(FALLBACK_BANDWIDTH),
        Err(e) => Err(e.into()),
    }
}

/// Builds the geometry for each requested panel, in order.
pub fn build_panels(
    s: &Sample,
    kinds: &[PanelKind],
    bandwidth: f64,
    bins: BinRule<f64>,
) -> Result<Vec<Panel>, CliError> {
    kinds
        .iter()
        .map(|&kind| {
            let g = match kind {
                PanelKind::Histogram => histogram_geom(s, bins, bandwidth)?,
                PanelKind::NotchedBox => box_geom(kind, &notched_box(s)),
                PanelKind::ClassicalBox => box_geom(kind, &classical_box(s)),
                PanelKind::AdjustedBox => box_geom(kind, &adjusted_box(s, &medcouple(s))),
                PanelKind::Violin => violin_geom(s, bandwidth)?,
                PanelKind::BoxPercentile => box_percentile_geom(s)?,
                PanelKind::LetterValue => letter_value_geom(s, &letter_values(s)),
                PanelKind::Bean => bean_geom(s, bandwidth)?,
                PanelKind::MeanBox => mean_box_geom(s)?,
                PanelKind::Rug => skewviz_core::plot::rug_geom(s),
            };
            Ok(g)
        })
        .collect()
}

/// The SVG document for `s` with the given options.
pub fn figure_svg(
    s: &Sample,
    kinds: &[PanelKind],
    bandwidth: BandwidthSpec,
    bins: BinRule<f64>,
    canvas: Canvas,
) -> Result<String, CliError> {
    let h = resolve_bandwidth(s, bandwidth)?;
    let panels = build_panels(s, kinds, h, bins)?;
    Ok(emit_svg(&layout(panels, s, canvas)?))
}

/// Prints the summary table to `out` and, unless `stats_only`, writes the figure.
pub fn run(
    config: &RunConfig,
    out: &mut impl Write,
    diag: &mut impl Write,
) -> Result<(), CliError> {
    let s = load(config, diag)?;
    let _ = out.write_all(render_table(&summary(&s)).as_bytes());
    if config.stats_only {
        return Ok(());
    }
    let svg = figure_svg(
        &s,
        &config.panels,
        config.bandwidth,
        config.bins,
        config.canvas,
    )?;
    fs::write(&config.out, svg).map_err(|source| CliError::Write {
        path: config.out.clone(),
        source,
    })?;
    let _ = writeln!(diag, "skewviz: wrote {}", config.out.display());
    Ok(())
}
