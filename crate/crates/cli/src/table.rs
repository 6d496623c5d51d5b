//! The eight-row summary table.

use std::fmt::Write;

use skewviz_core::Summary;

pub const ROW_LABELS: [&str; 8] = [
    "Min",
    "1st Quartile",
    "Median",
    "Mean",
    "3rd Quartile",
    "Max",
    "Skewness",
    "Kurtosis",
];

/// Six significant digits; fixed-point unless the magnitude is below 1e-3
/// (or at least 1e6), where scientific notation is used.
pub fn format_value(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let mag = v.abs();
    if !(1e-3..1e6).contains(&mag) {
        let s = format!("{v:.5e}");
        let (mantissa, exp) = s
            .split_once('e')
            .expect("scientific format has an exponent");
        return format!("{}e{exp}", trim_zeros(mantissa));
    }
    let decimals = (5 - mag.log10().floor() as i32).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_owned()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn cell(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".into(), format_value)
}

pub fn render_table(s: &Summary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# n = {}; population (1/n) moments; kurtosis is non-excess (m4/m2^2)",
        s.n
    );
    let cells = [
        Some(s.min),
        Some(s.q1),
        Some(s.median),
        Some(s.mean),
        Some(s.q3),
        Some(s.max),
        s.skewness,
        s.kurtosis,
    ];
    for (label, v) in ROW_LABELS.iter().zip(cells) {
        let _ = writeln!(out, "{label:<14}{}", cell(v));
    }
    out
}
