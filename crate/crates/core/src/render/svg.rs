use std::fmt::Write;

use super::FigureLayout;
use crate::plot::{Point, Primitive, Style};
use crate::Float;

/// Fixed three-decimal formatting; never emits `-0.000`.
pub fn fmt3(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_owned()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn paint(style: Style, closed: bool) -> &'static str {
    match (style, closed) {
        (Style::Body, _) => r##"fill="#d9d9d9" stroke="#333333" stroke-width="1.000""##,
        (Style::Density, true) => {
            r##"fill="#9ecae1" fill-opacity="0.600" stroke="#08306b" stroke-width="1.000""##
        }
        (Style::Density, false) => r##"fill="none" stroke="#08306b" stroke-width="1.500""##,
        (Style::Outline, _) => r##"fill="none" stroke="#333333" stroke-width="1.000""##,
        (Style::Median, true) => r##"fill="#ffffff" stroke="#000000" stroke-width="2.000""##,
        (Style::Median, false) => r##"fill="none" stroke="#000000" stroke-width="2.000""##,
        (Style::Mean, _) => {
            r##"fill="none" stroke="#000000" stroke-width="2.000" stroke-dasharray="4 2""##
        }
        (Style::Whisker, _) => r##"fill="none" stroke="#333333" stroke-width="1.000""##,
        (Style::Tick, _) => r##"fill="none" stroke="#000000" stroke-width="0.800""##,
        (Style::Observation, _) => {
            r##"fill="none" stroke="#000000" stroke-opacity="0.350" stroke-width="1.000""##
        }
        (Style::Outlier, _) => r##"fill="none" stroke="#000000" stroke-width="1.000""##,
    }
}

struct Writer<'a, T> {
    fig: &'a FigureLayout<T>,
    out: String,
}

impl<T: Float> Writer<'_, T> {
    fn point(&self, panel: usize, p: Point<T>) -> (String, String) {
        (
            fmt3(self.fig.x_pixel(p.x)),
            fmt3(self.fig.y_pixel(panel, p.y)),
        )
    }

    fn points(&self, panel: usize, pts: &[Point<T>]) -> String {
        pts.iter()
            .map(|&p| {
                let (x, y) = self.point(panel, p);
                format!("{x},{y}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn primitive(&mut self, panel: usize, idx: usize, prim: &Primitive<T>) {
        let id = format!("skewviz-{}-{idx}", self.fig.panels[panel].kind.name());
        let class = prim.style().name();
        let line = match prim {
            Primitive::Rect {
                x0,
                x1,
                y0,
                y1,
                style,
            } => {
                let (a, b) = (self.fig.x_pixel(*x0), self.fig.x_pixel(*x1));
                let (c, d) = (self.fig.y_pixel(panel, *y0), self.fig.y_pixel(panel, *y1));
                let (x, w) = (a.min(b), (b - a).abs());
                let (y, h) = (c.min(d), (d - c).abs());
                format!(
                    r#"<rect id="{id}" class="{class}" x="{}" y="{}" width="{}" height="{}" {}/>"#,
                    fmt3(x),
                    fmt3(y),
                    fmt3(w),
                    fmt3(h),
                    paint(*style, true)
                )
            }
            Primitive::Polygon { points, style } => format!(
                r#"<polygon id="{id}" class="{class}" points="{}" {}/>"#,
                self.points(panel, points),
                paint(*style, true)
            ),
            Primitive::Polyline { points, style } => format!(
                r#"<polyline id="{id}" class="{class}" points="{}" {}/>"#,
                self.points(panel, points),
                paint(*style, false)
            ),
            Primitive::Segment { from, to, style } => {
                let ((x1, y1), (x2, y2)) = (self.point(panel, *from), self.point(panel, *to));
                format!(
                    r#"<line id="{id}" class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {}/>"#,
                    paint(*style, false)
                )
            }
            Primitive::Marker { at, style } => {
                let (cx, cy) = self.point(panel, *at);
                format!(
                    r#"<circle id="{id}" class="{class}" cx="{cx}" cy="{cy}" r="2.500" {}/>"#,
                    paint(*style, true)
                )
            }
        };
        self.out.push_str("    ");
        self.out.push_str(&line);
        self.out.push('\n');
    }

    fn panels(&mut self) {
        let (scale, offset) = self.fig.x_map();
        for (i, panel) in self.fig.panels.iter().enumerate() {
            let (top, bottom) = self.fig.band(i);
            let _ = writeln!(
                self.out,
                r#"  <g id="skewviz-panel-{kind}" class="panel" data-index="{i}" data-kind="{kind}" data-map="{scale:e} {offset:e}">"#,
                kind = panel.kind.name(),
            );
            let _ = writeln!(
                self.out,
                "    <title>{}</title>",
                escape(panel.kind.label())
            );
            self.label(panel.kind.label(), (top + bottom) / 2.0);
            for (k, prim) in panel.primitives.iter().enumerate() {
                self.primitive(i, k, prim);
            }
            self.out.push_str("  </g>\n");
        }
    }

    /// Panel title in the left margin; a parenthesized suffix goes on a second line.
    fn label(&mut self, text: &str, mid: f64) {
        let x = fmt3(self.fig.canvas.plot_left() - 10.0);
        let lines: Vec<&str> = match text.split_once(" (") {
            Some((head, _)) => vec![head, &text[head.len() + 1..]],
            None => vec![text],
        };
        let first = mid - 7.0 * (lines.len() - 1) as f64;
        let _ = write!(
            self.out,
            r#"    <text x="{x}" y="{}" font-size="12.000" text-anchor="end" dominant-baseline="middle">"#,
            fmt3(first)
        );
        for (i, line) in lines.iter().enumerate() {
            let (dy, size) = if i == 0 { (0.0, 12.0) } else { (14.0, 10.0) };
            let _ = write!(
                self.out,
                r#"<tspan x="{x}" dy="{}" font-size="{}">{}</tspan>"#,
                fmt3(dy),
                fmt3(size),
                escape(line)
            );
        }
        self.out.push_str("</text>\n");
    }

    fn axis(&mut self) {
        let c = self.fig.canvas;
        let y = c.plot_bottom() + 8.0;
        let lo = self.fig.axis_range.0.to_f64().unwrap();
        let hi = self.fig.axis_range.1.to_f64().unwrap();
        self.out
            .push_str("  <g id=\"skewviz-axis\" class=\"axis\">\n");
        let _ = writeln!(
            self.out,
            r##"    <line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="#000000" stroke-width="1.000"/>"##,
            fmt3(c.plot_left()),
            fmt3(c.plot_right()),
            y = fmt3(y)
        );
        let (ticks, step) = nice_ticks(lo, hi, 6);
        let (scale, offset) = self.fig.x_map();
        for t in ticks {
            let x = fmt3(scale * t + offset);
            let _ = writeln!(
                self.out,
                r##"    <line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="#000000" stroke-width="1.000"/>"##,
                fmt3(y),
                fmt3(y + 5.0)
            );
            let _ = writeln!(
                self.out,
                r#"    <text x="{x}" y="{}" font-size="11.000" text-anchor="middle">{}</text>"#,
                fmt3(y + 18.0),
                tick_label(t, step)
            );
        }
        self.out.push_str("  </g>\n");
    }

    fn median_guide(&mut self) {
        let x = fmt3(self.fig.x_pixel(self.fig.median_guide));
        let top = self.fig.band(0).0;
        let bottom = self.fig.band(self.fig.panels.len() - 1).1;
        let _ = writeln!(
            self.out,
            r##"  <line id="skewviz-median" class="median-guide" x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="#c0392b" stroke-width="1.500"/>"##,
            fmt3(top),
            fmt3(bottom)
        );
    }
}

/// Ticks at multiples of a 1-2-5 step covering `[lo, hi]`.
fn nice_ticks(lo: f64, hi: f64, target: usize) -> (Vec<f64>, f64) {
    let raw = (hi - lo) / target as f64;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .into_iter()
        .map(|m| m * mag)
        .find(|&s| s >= raw)
        .unwrap_or(10.0 * mag);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    ((first..=last).map(|k| k as f64 * step).collect(), step)
}

fn tick_label(v: f64, step: f64) -> String {
    if !(1e-3..1e6).contains(&step) {
        return format!("{v:.2e}");
    }
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    let s = format!("{v:.decimals$}");
    if s.starts_with('-') && s.trim_start_matches(['-', '0', '.']).is_empty() {
        s[1..].to_owned()
    } else {
        s
    }
}

/// Serializes the figure as a standalone SVG 1.1 document.
///
/// Output is a pure function of the layout: coordinates use three decimals
/// and elements are written in panel/primitive order.
pub fn emit_svg<T: Float>(fig: &FigureLayout<T>) -> String {
    let c = fig.canvas;
    let mut w = Writer {
        fig,
        out: String::new(),
    };
    w.out
        .push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        w.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{wd}" height="{ht}" viewBox="0 0 {wd} {ht}" font-family="sans-serif">"#,
        wd = fmt3(c.width),
        ht = fmt3(c.height)
    );
    let _ = writeln!(
        w.out,
        r##"  <rect x="0.000" y="0.000" width="{}" height="{}" fill="#ffffff"/>"##,
        fmt3(c.width),
        fmt3(c.height)
    );
    w.panels();
    w.axis();
    w.median_guide();
    w.out.push_str("</svg>\n");
    w.out
}
