use std::path::PathBuf;
use std::str::FromStr;

use clap::Parser;
use skewviz_core::{BinRule, Canvas, PanelKind};

use crate::CliError;

/// Panels drawn when `--panels` is not given; the rug goes in the middle.
pub const DEFAULT_PANELS: [PanelKind; 6] = [
    PanelKind::Histogram,
    PanelKind::NotchedBox,
    PanelKind::Violin,
    PanelKind::MeanBox,
    PanelKind::AdjustedBox,
    PanelKind::BoxPercentile,
];

pub const DEFAULT_SEED: u64 = 42;

/// Summary table and synchronized figure for one numeric column.
#[derive(Debug, Parser)]
#[command(name = "skewviz", version)]
pub struct Cli {
    /// Input file: one number per line, or a comma/tab-delimited table.
    pub input: Option<PathBuf>,

    /// Column to read from a delimited file: header name or 1-based index.
    #[arg(short, long)]
    pub column: Option<String>,

    /// Where to write the SVG figure.
    #[arg(short, long, default_value = "skewviz.svg")]
    pub out: PathBuf,

    /// Comma-separated panels from hist,notched,classical,adjusted,violin,bpp,lv,bean,meanbox.
    #[arg(short, long)]
    pub panels: Option<String>,

    /// KDE bandwidth: scott, fd, or a positive number.
    #[arg(short, long, default_value = "scott")]
    pub bandwidth: String,

    /// Histogram bins: sturges, scott, fd, or a positive integer count.
    #[arg(long, default_value = "sturges")]
    pub bins: String,

    #[arg(long, default_value_t = 900.0)]
    pub width: f64,

    #[arg(long, default_value_t = 1200.0)]
    pub height: f64,

    /// Print the summary table and skip the figure.
    #[arg(long)]
    pub stats_only: bool,

    /// Generate data instead of reading a file, e.g. `gamma:0.5,100`.
    #[arg(long, value_name = "gamma:SHAPE,N")]
    pub demo: Option<String>,

    /// Seed for --demo.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ColumnSelector {
    Name(String),
    /// 1-based.
    Index(usize),
}

impl FromStr for ColumnSelector {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(CliError::Usage("empty column selector".into()));
        }
        if s.bytes().all(|b| b.is_ascii_digit()) {
            match s.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(ColumnSelector::Index(i)),
                _ => Err(CliError::Usage(format!(
                    "column index must be >= 1, got {s}"
                ))),
            }
        } else {
            Ok(ColumnSelector::Name(s.to_owned()))
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    File {
        path: PathBuf,
        column: Option<ColumnSelector>,
    },
    Gamma {
        shape: f64,
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BandwidthSpec {
    Scott,
    FreedmanDiaconis,
    Fixed(f64),
}

impl FromStr for BandwidthSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "scott" => Ok(BandwidthSpec::Scott),
            "fd" => Ok(BandwidthSpec::FreedmanDiaconis),
            other => match other.parse::<f64>() {
                Ok(h) if h > 0.0 && h.is_finite() => Ok(BandwidthSpec::Fixed(h)),
                _ => Err(CliError::Usage(format!(
                    "bandwidth must be scott, fd or a positive number, got `{other}`"
                ))),
            },
        }
    }
}

pub fn parse_bins(s: &str) -> Result<BinRule<f64>, CliError> {
    match s.trim() {
        "sturges" => Ok(BinRule::Sturges),
        "scott" => Ok(BinRule::Scott),
        "fd" => Ok(BinRule::FreedmanDiaconis),
        other => match other.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(BinRule::ExplicitCount(k)),
            _ => Err(CliError::Usage(format!(
                "bins must be sturges, scott, fd or a positive integer, got `{other}`"
            ))),
        },
    }
}

pub fn parse_panels(s: &str) -> Result<Vec<PanelKind>, CliError> {
    let mut out = Vec::new();
    for name in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let kind: PanelKind = name.parse().map_err(CliError::Usage)?;
        if kind == PanelKind::Rug {
            return Err(CliError::Usage(
                "the rug is always drawn; do not list it".into(),
            ));
        }
        if out.contains(&kind) {
            return Err(CliError::Usage(format!("panel `{name}` listed twice")));
        }
        out.push(kind);
    }
    if out.is_empty() {
        return Err(CliError::Usage("no panels requested".into()));
    }
    Ok(out)
}

/// `gamma:<shape>,<n>`.
pub fn parse_demo(s: &str) -> Result<Source, CliError> {
    let bad = || CliError::Usage(format!("demo spec must look like gamma:0.5,100, got `{s}`"));
    let rest = s.trim().strip_prefix("gamma:").ok_or_else(bad)?;
    let (shape, n) = rest.split_once(',').ok_or_else(bad)?;
    let shape: f64 = shape.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if !(shape > 0.0 && shape.is_finite()) || n == 0 {
        return Err(CliError::Usage(format!(
            "demo needs shape > 0 and n >= 1, got `{s}`"
        )));
    }
    Ok(Source::Gamma { shape, n })
}

/// Validated run parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub source: Source,
    pub panels: Vec<PanelKind>,
    pub bandwidth: BandwidthSpec,
    pub bins: BinRule<f64>,
    pub out: PathBuf,
    pub canvas: Canvas,
    pub stats_only: bool,
    pub seed: u64,
}

impl RunConfig {
    /// Config for reading `path` with every other option at its default.
    pub fn for_file(path: impl Into<PathBuf>) -> Self {
        Self {
            source: Source::File {
                path: path.into(),
                column: None,
            },
            panels: DEFAULT_PANELS.to_vec(),
            bandwidth: BandwidthSpec::Scott,
            bins: BinRule::Sturges,
            out: PathBuf::from("skewviz.svg"),
            canvas: Canvas::default(),
            stats_only: false,
            seed: DEFAULT_SEED,
        }
    }
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, Self::Error> {
        let source = match (cli.input, cli.demo) {
            (Some(_), Some(_)) => {
                return Err(CliError::Usage(
                    "give either an input file or --demo, not both".into(),
                ))
            }
            (None, None) => return Err(CliError::Usage("no input file or --demo given".into())),
            (None, Some(demo)) => {
                if cli.column.is_some() {
                    return Err(CliError::Usage("--column needs an input file".into()));
                }
                parse_demo(&demo)?
            }
            (Some(path), None) => Source::File {
                path,
                column: cli.column.as_deref().map(str::parse).transpose()?,
            },
        };
        for (name, v) in [("width", cli.width), ("height", cli.height)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Usage(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(RunConfig {
            source,
            panels: match cli.panels {
                Some(p) => parse_panels(&p)?,
                None => DEFAULT_PANELS.to_vec(),
            },
            bandwidth: cli.bandwidth.parse()?,
            bins: parse_bins(&cli.bins)?,
            out: cli.out,
            canvas: Canvas::new(cli.width, cli.height),
            stats_only: cli.stats_only,
            seed: cli.seed,
        })
    }
}
