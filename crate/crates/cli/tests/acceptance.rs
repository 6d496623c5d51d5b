//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#[path = "../../core/tests/common/oracle.rs"]
mod oracle;

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewviz::config::{BandwidthSpec, DEFAULT_PANELS, DEFAULT_SEED};
use skewviz::demo::demo_sample;
use skewviz::ingest::ingest;
use skewviz::table::ROW_LABELS;
use skewviz::{build_panels, figure_svg, resolve_bandwidth};
use skewviz_core::density::{fd_width, kde, scott_bandwidth, scott_width, sturges_count};
use skewviz_core::plot::{adjusted_box, classical_box, notch_half_width, notched_box};
use skewviz_core::render::{fmt3, layout};
use skewviz_core::stats::{letter_values, letter_values_with_stop, medcouple, quantile, summary};
use skewviz_core::{BinRule, Canvas, Primitive, Sample};

type Check = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

struct Gen(ChaCha8Rng);

impl Gen {
    fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.0.next_u64() % (hi - lo + 1) as u64) as usize
    }

    fn normal(&mut self) -> f64 {
        let u = self.unit().max(f64::MIN_POSITIVE);
        (-2.0 * u.ln()).sqrt() * (std::f64::consts::TAU * self.unit()).cos()
    }

    /// Mix of skewed, symmetric and heavily tied samples.
    fn sample(&mut self, n: usize) -> Vec<f64> {
        match self.range(0, 2) {
            0 => (0..n).map(|_| self.normal().exp()).collect(),
            1 => (0..n).map(|_| 10.0 * self.normal() - 3.0).collect(),
            _ => (0..n).map(|_| (self.unit() * 6.0).floor()).collect(),
        }
    }

    fn integers(&mut self, n: usize) -> Vec<f64> {
        (0..n)
            .map(|_| (self.normal().exp() * 100.0).round())
            .collect()
    }
}

fn sample(x: &[f64]) -> Sample {
    Sample::new(x.to_vec()).unwrap()
}

fn rel_err(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn c1_medcouple_oracle() -> Outcome {
    let mut g = Gen::new(1);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let n = g.range(3, 200);
        let x = g.sample(n);
        let got = medcouple(&sample(&x)).value;
        worst = worst.max((got - oracle::medcouple(&x)).abs());
    }
    let took = start.elapsed();
    outcome(
        worst <= 1e-12 && took < Duration::from_secs(30),
        format!(
            "max |diff| = {worst:e} over 1000 samples, {:.2} s",
            took.as_secs_f64()
        ),
    )
}

fn c2_medcouple_invariance() -> Outcome {
    let mut g = Gen::new(2);
    let mut failures = Vec::new();
    let mut worst_general = 0.0f64;
    for i in 0..200 {
        let n = g.range(3, 200);
        // integer data under dyadic scale and integer shift: every step is exact
        let x = g.integers(n);
        let a = 2f64.powi(g.range(0, 12) as i32 - 6);
        let b = g.range(0, 20_000) as f64 - 10_000.0;
        let y: Vec<f64> = x.iter().map(|v| a * v + b).collect();
        let mc = medcouple(&sample(&x)).value;
        if medcouple(&sample(&y)).value != mc {
            failures.push(format!("affine #{i}"));
        }

        let r = g.sample(n);
        let (a, b) = (0.01 + 100.0 * g.unit(), 1000.0 * (g.unit() - 0.5));
        let moved: Vec<f64> = r.iter().map(|v| a * v + b).collect();
        let mr = medcouple(&sample(&r)).value;
        worst_general = worst_general.max((medcouple(&sample(&moved)).value - mr).abs());

        let neg: Vec<f64> = r.iter().map(|v| -v).collect();
        if medcouple(&sample(&neg)).value != -mr {
            failures.push(format!("negation #{i}"));
        }
    }
    if worst_general > 1e-12 {
        failures.push(format!("general affine |diff| {worst_general:e}"));
    }
    for (i, x) in mirrored(3).iter().enumerate() {
        if medcouple(&sample(x)).value != 0.0 {
            failures.push(format!("mirrored #{i}"));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "200 dyadic-affine, 200 negated, 200 mirrored; general affine max |diff| = {worst_general:e}{}",
            if failures.is_empty() { String::new() } else { format!("; failed: {failures:?}") }
        ),
    )
}

/// 200 samples symmetric about their median: half integer-centred
/// with dyadic offsets, half real offsets mirrored about zero.
fn mirrored(seed: u64) -> Vec<Vec<f64>> {
    let mut g = Gen::new(seed);
    (0..200)
        .map(|i| {
            let k = g.range(1, 100);
            let centre = if i % 2 == 0 {
                g.range(0, 2000) as f64 - 1000.0
            } else {
                0.0
            };
            let mut x = Vec::with_capacity(2 * k + 1);
            for _ in 0..k {
                let d = if i % 2 == 0 {
                    g.range(0, 4000) as f64 / 8.0
                } else {
                    g.normal().abs() * 50.0
                };
                x.push(centre + d);
                x.push(centre - d);
            }
            if g.range(0, 1) == 1 {
                x.push(centre);
            }
            x
        })
        .collect()
}

fn c3_adjusted_reduction() -> Outcome {
    let mut checked = 0;
    let mut mismatched = 0;
    for x in mirrored(4) {
        let s = sample(&x);
        let mc = medcouple(&s);
        if mc.value != 0.0 {
            continue;
        }
        checked += 1;
        let (a, c) = (adjusted_box(&s, &mc), classical_box(&s));
        if a.fence_lo.to_bits() != c.fence_lo.to_bits()
            || a.fence_hi.to_bits() != c.fence_hi.to_bits()
        {
            mismatched += 1;
        }
    }
    outcome(
        checked == 200 && mismatched == 0,
        format!("{checked} samples with MC = 0, {mismatched} fence mismatches"),
    )
}

fn c4_fewer_outliers() -> Outcome {
    let mut fewer = 0;
    let (mut total_c, mut total_a) = (0, 0);
    for seed in 0..100 {
        let s = demo_sample(0.5, 500, seed).unwrap();
        let classical = classical_box(&s).upper_outliers();
        let adjusted = adjusted_box(&s, &medcouple(&s)).upper_outliers();
        total_c += classical;
        total_a += adjusted;
        if adjusted < classical {
            fewer += 1;
        }
    }
    outcome(
        fewer >= 95,
        format!("adjusted flags fewer in {fewer}/100 (upper outliers: classical {total_c}, adjusted {total_a})"),
    )
}

fn c5_notch() -> Outcome {
    let mut g = Gen::new(5);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let n = g.range(2, 500);
        let x = g.sample(n);
        let b = notched_box(&sample(&x));
        let (lo, hi) = b.notch.unwrap();
        let iqr = oracle::quantile7(&x, 0.75) - oracle::quantile7(&x, 0.25);
        let expected = 1.57 * iqr / (n as f64).sqrt();
        worst = worst.max(
            ((hi - lo) / 2.0 - expected)
                .abs()
                .max(((hi + lo) / 2.0 - b.q2).abs()),
        );
    }
    let big = notch_half_width(1.0, 4446);
    outcome(
        worst <= 1e-12 && big < 0.024,
        format!("max |diff| = {worst:e}; half-width at n = 4446, IQR = 1: {big:.6}"),
    )
}

fn c6_kde() -> Outcome {
    let mut g = Gen::new(6);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut worst_shift = 0.0f64;
    for _ in 0..100 {
        let n = g.range(2, 300);
        let mut x = g.sample(n);
        x[0] += 1.0;
        let s = sample(&x);
        let h = scott_bandwidth(&s).unwrap() * 2f64.powf(4.0 * g.unit() - 2.0);
        let c = kde(&s, h, 512).unwrap();
        let area = oracle::trapezoid(&c.grid, &c.density);
        lo = lo.min(area);
        hi = hi.max(area);

        let shift = 200.0 * (g.unit() - 0.5);
        let moved = sample(&x.iter().map(|v| v + shift).collect::<Vec<_>>());
        let cm = kde(&moved, h, 512).unwrap();
        for (a, b) in c.density.iter().zip(&cm.density) {
            worst_shift = worst_shift.max((a - b).abs());
        }
    }
    outcome(
        lo >= 0.98 && hi <= 1.001 && worst_shift <= 1e-12,
        format!("integrals in [{lo:.6}, {hi:.6}]; shift max |diff| = {worst_shift:e}"),
    )
}

fn c7_rules() -> Outcome {
    let (k, scott, fd) = (
        sturges_count(1024),
        scott_width(1.0, 1000),
        fd_width(1.0, 1000),
    );
    outcome(
        k == 11 && scott == 0.35 && fd == 0.2,
        format!("sturges(1024) = {k}, scott(1, 1000) = {scott}, fd(1, 1000) = {fd}"),
    )
}

fn c8_moments() -> Outcome {
    let mut g = Gen::new(8);
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let n = g.range(2, 400);
        let mut x = g.sample(n);
        x[0] += 0.5;
        let st = summary(&sample(&x));
        let (skew, kurt) = oracle::moments(&x);
        worst = worst
            .max(rel_err(st.skewness.unwrap(), skew))
            .max(rel_err(st.kurtosis.unwrap(), kurt));
    }
    let st = summary(&demo_sample(0.5, 100_000, DEFAULT_SEED).unwrap());
    let (skew, kurt) = (st.skewness.unwrap(), st.kurtosis.unwrap());
    let target_skew = 2.0 / 0.5f64.sqrt();
    let skew_off = (skew - target_skew).abs() / target_skew;
    let kurt_off = (kurt - 15.0).abs() / 15.0;
    outcome(
        worst <= 1e-12 && skew_off <= 0.10 && kurt_off <= 0.15,
        format!(
            "max rel diff = {worst:e}; gamma(0.5) seed {DEFAULT_SEED}: skewness {skew:.4} ({:.1}% off), kurtosis {kurt:.3} ({:.1}% off)",
            100.0 * skew_off,
            100.0 * kurt_off
        ),
    )
}

fn c9_letter_values() -> Outcome {
    let mut mismatches = Vec::new();
    for n in 1..=100usize {
        let x: Vec<f64> = (0..n).map(|i| ((i * i * 7 + 3 * i) % 31) as f64).collect();
        let got = letter_values_with_stop(&sample(&x), 5);
        let (depths, lower, upper) = oracle::letter_values(&x, 5);
        if got.depths != depths || got.lower != lower || got.upper != upper {
            mismatches.push(n);
        }
    }
    let mut g = Gen::new(9);
    let mut broken = 0;
    for _ in 0..200 {
        let n = g.range(1, 500);
        let s = sample(&g.sample(n));
        let lv = letter_values(&s);
        let m = quantile(&s, 0.5).unwrap();
        let nested = lv.level(0) == (m, m)
            && (1..lv.levels()).all(|k| {
                let ((lo, hi), (plo, phi)) = (lv.level(k), lv.level(k - 1));
                lo <= plo && phi <= hi
            });
        if !nested {
            broken += 1;
        }
    }
    outcome(
        mismatches.is_empty() && broken == 0,
        format!("oracle mismatches at n = {mismatches:?}; nesting failures {broken}/200"),
    )
}

fn attr(n: roxmltree::Node, name: &str) -> f64 {
    n.attribute(name).unwrap().parse().unwrap()
}

fn c10_synchronization() -> Outcome {
    let s = demo_sample(0.5, 100, DEFAULT_SEED).unwrap();
    let canvas = Canvas::default();
    let svg = figure_svg(
        &s,
        &DEFAULT_PANELS,
        BandwidthSpec::Scott,
        BinRule::Sturges,
        canvas,
    )
    .unwrap();
    let doc = match roxmltree::Document::parse(&svg) {
        Ok(d) => d,
        Err(e) => return outcome(false, format!("malformed SVG: {e}")),
    };

    // same geometry the document was built from
    let h = resolve_bandwidth(&s, BandwidthSpec::Scott).unwrap();
    let fig = layout(
        build_panels(&s, &DEFAULT_PANELS, h, BinRule::Sturges).unwrap(),
        &s,
        canvas,
    )
    .unwrap();

    let groups: Vec<_> = doc
        .descendants()
        .filter(|n| n.attribute("data-map").is_some())
        .collect();
    let maps: Vec<(f64, f64)> = groups
        .iter()
        .map(|g| {
            let mut it = g
                .attribute("data-map")
                .unwrap()
                .split(' ')
                .map(|t| t.parse::<f64>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    let (scale, offset) = maps[0];
    let same = maps
        .iter()
        .all(|&(a, b)| rel_err(a, scale) <= 1e-6 && rel_err(b, offset) <= 1e-6);

    let mut worst = 0.0f64;
    let mut count = 0usize;
    for (g, panel) in groups.iter().zip(&fig.panels) {
        let elems: Vec<_> = g
            .children()
            .filter(|n| {
                n.attribute("id")
                    .is_some_and(|id| id.starts_with("skewviz-"))
            })
            .collect();
        if elems.len() != panel.primitives.len() {
            return outcome(
                false,
                format!("panel {} element count mismatch", panel.kind),
            );
        }
        for (e, prim) in elems.iter().zip(&panel.primitives) {
            let pixels: Vec<(f64, f64)> = match prim {
                Primitive::Rect { x0, x1, .. } => {
                    let (lo, hi) = (x0.min(*x1), x0.max(*x1));
                    vec![(attr(*e, "x"), lo), (attr(*e, "x") + attr(*e, "width"), hi)]
                }
                _ => {
                    let xs: Vec<f64> = match e.tag_name().name() {
                        "line" => vec![attr(*e, "x1"), attr(*e, "x2")],
                        "circle" => vec![attr(*e, "cx")],
                        _ => e
                            .attribute("points")
                            .unwrap()
                            .split(' ')
                            .map(|p| p.split(',').next().unwrap().parse().unwrap())
                            .collect(),
                    };
                    xs.into_iter()
                        .zip(prim.points().iter().map(|p| p.x))
                        .collect()
                }
            };
            for (px, d) in pixels {
                worst = worst.max((px - (scale * d + offset)).abs());
                count += 1;
            }
        }
    }

    let guide = doc
        .descendants()
        .find(|n| n.attribute("id") == Some("skewviz-median"))
        .unwrap();
    let expected_guide = fmt3(scale * quantile(&s, 0.5).unwrap() + offset);
    let guide_ok = guide.attribute("x1") == Some(expected_guide.as_str())
        && guide.attribute("x2") == Some(expected_guide.as_str());

    let kinds: Vec<&str> = groups
        .iter()
        .map(|g| g.attribute("data-kind").unwrap())
        .collect();
    let rug_ok = kinds.len() == 7 && kinds[DEFAULT_PANELS.len() / 2] == "rug";

    // three-decimal output: a point is off by at most 5e-4, a rect's right edge by 1e-3
    outcome(
        same && worst <= 1e-3 + 1e-9 && guide_ok && rug_ok,
        format!(
            "{} panels share map ({scale:e}, {offset:e}): {same}; {count} coordinates, max residual {worst:.1e} px; median guide {guide_ok}; order {kinds:?}",
            maps.len()
        ),
    )
}

fn c11_end_to_end() -> Outcome {
    let dir = std::env::temp_dir().join(format!("skewviz-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("demo.svg");
    let start = Instant::now();
    let run = Command::new(env!("CARGO_BIN_EXE_skewviz"))
        .args(["--demo", "gamma:0.5,100", "-o"])
        .arg(&out)
        .output()
        .unwrap();
    let took = start.elapsed();
    let stdout = String::from_utf8_lossy(&run.stdout);
    let rows: Vec<&str> = stdout.lines().filter(|l| !l.starts_with('#')).collect();
    let labels_ok = rows.len() == 8
        && rows
            .iter()
            .zip(ROW_LABELS)
            .all(|(r, l)| r.starts_with(l) && r[l.len()..].trim().parse::<f64>().is_ok());
    let svg_ok = std::fs::read_to_string(&out).ok().is_some_and(|t| {
        roxmltree::Document::parse(&t).is_ok_and(|d| d.root_element().has_tag_name("svg"))
    });
    let _ = std::fs::remove_dir_all(&dir);
    outcome(
        run.status.success() && labels_ok && svg_ok && took < Duration::from_secs(1),
        format!(
            "exit {:?}, {} table rows, well-formed SVG {svg_ok}, {:.0} ms",
            run.status.code(),
            rows.len(),
            took.as_secs_f64() * 1000.0
        ),
    )
}

/// Printed table values per scene and band, in row order.
const TABLE: [(&str, &str, [&str; 8]); 9] = [
    (
        "sanfrancisco",
        "hh",
        [
            "1.45e-4", "3.48e-3", "5.53e-3", "6.64e-3", "8.62e-3", "0.04", "1.84", "9.34",
        ],
    ),
    (
        "sanfrancisco",
        "hv",
        [
            "1.04e-4", "5.04e-4", "7.64e-4", "8.91e-4", "1.13e-3", "3.83e-3", "1.56", "6.60",
        ],
    ),
    (
        "sanfrancisco",
        "vv",
        [
            "8.92e-4", "0.01", "0.02", "0.02", "0.03", "0.13", "1.57", "7.49",
        ],
    ),
    (
        "deathvalley",
        "hh",
        [
            "0.72", "0.44", "0.63", "0.65", "0.83", "2.32", "0.72", "3.62",
        ],
    ),
    (
        "deathvalley",
        "hv",
        [
            "0.03", "0.13", "0.18", "0.18", "0.22", "0.48", "0.66", "3.77",
        ],
    ),
    (
        "deathvalley",
        "vv",
        [
            "0.27", "0.92", "1.18", "1.23", "1.49", "3.15", "0.62", "3.64",
        ],
    ),
    (
        "niigata",
        "hh",
        [
            "1.15e-4", "0.02", "0.05", "0.10", "0.11", "1.42", "3.74", "23.37",
        ],
    ),
    (
        "niigata",
        "hv",
        [
            "5.37e-7", "1.97e-3", "4.54e-3", "0.01", "0.01", "0.04", "1.92", "7.78",
        ],
    ),
    (
        "niigata",
        "vv",
        [
            "9.22e-5", "0.02", "0.06", "0.12", "0.15", "2.20", "4.13", "32.12",
        ],
    ),
];

/// `v` formatted like `printed`: same decimals, scientific when `printed` is.
fn like(printed: &str, v: f64) -> String {
    match printed.split_once('e') {
        Some((m, _)) => format!("{v:.*e}", m.len() - m.find('.').map_or(m.len(), |p| p + 1)),
        None => format!(
            "{v:.*}",
            printed.len() - printed.find('.').map_or(printed.len(), |p| p + 1)
        ),
    }
}

fn c12_table_regression() -> Outcome {
    let Some(dir) = std::env::var_os("SKEWVIZ_TABLE1_DIR").map(PathBuf::from) else {
        return outcome(true, "vacuous: no scene extracts (set SKEWVIZ_TABLE1_DIR to a directory of <scene>_<band>.txt)");
    };
    let mut misses = Vec::new();
    for (scene, band, row) in TABLE {
        let path: PathBuf = Path::new(&dir).join(format!("{scene}_{band}.txt"));
        let s = match ingest(&path, None) {
            Ok(got) => got.sample,
            Err(e) => {
                misses.push(format!("{scene}/{band}: {e}"));
                continue;
            }
        };
        let st = summary(&s);
        let got = [
            st.min,
            st.q1,
            st.median,
            st.mean,
            st.q3,
            st.max,
            st.skewness.unwrap_or(f64::NAN),
            st.kurtosis.unwrap_or(f64::NAN),
        ];
        for ((label, printed), v) in ROW_LABELS.iter().zip(row).zip(got) {
            if like(printed, v) != printed {
                misses.push(format!(
                    "{scene}/{band} {label}: {} vs {printed}",
                    like(printed, v)
                ));
            }
        }
    }
    outcome(
        misses.is_empty(),
        format!("{} mismatches {misses:?}", misses.len()),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 12] = [
        ("medcouple matches the O(n^2) oracle", c1_medcouple_oracle),
        ("medcouple invariances", c2_medcouple_invariance),
        (
            "adjusted fences reduce to classical at MC = 0",
            c3_adjusted_reduction,
        ),
        (
            "adjusted boxplot flags fewer skewed outliers",
            c4_fewer_outliers,
        ),
        ("notch half-width", c5_notch),
        ("KDE normalization and shift equivariance", c6_kde),
        ("bin and bandwidth rule values", c7_rules),
        ("moments vs oracle and gamma(0.5) shape", c8_moments),
        ("letter values vs oracle and nesting", c9_letter_values),
        ("panel synchronization", c10_synchronization),
        ("end-to-end demo run", c11_end_to_end),
        ("summary table regression", c12_table_regression),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let r = check();
        if !r.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {}",
            i + 1,
            if r.pass { "PASS" } else { "FAIL" },
            r.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
