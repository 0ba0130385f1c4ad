//! Static SVG charts of sweep results and outcome histograms.
//!
//! Output is a pure function of the input: coordinates are printed at fixed
//! precision and elements are emitted in data order.

use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::table::SweepResult;
use crate::circuits::Model;
use crate::error::{Error, Result};
use crate::statevec::{bitstring, Distribution, ShotCounts};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlotKind {
    FidelityVsQubits,
    ErrorVsQubits,
    FreqVsQubits,
    StateHistogram,
}

impl PlotKind {
    pub const ALL: [PlotKind; 4] = [
        PlotKind::FidelityVsQubits,
        PlotKind::ErrorVsQubits,
        PlotKind::FreqVsQubits,
        PlotKind::StateHistogram,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PlotKind::FidelityVsQubits => "fidelity_vs_qubits",
            PlotKind::ErrorVsQubits => "error_vs_qubits",
            PlotKind::FreqVsQubits => "freq_vs_qubits",
            PlotKind::StateHistogram => "state_histogram",
        }
    }
}

impl fmt::Display for PlotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PlotKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PlotKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::param(format!("unknown plot kind `{s}`")))
    }
}

/// Data accepted by [`figure`].
#[derive(Debug, Clone, Copy)]
pub enum PlotInput<'a> {
    Results(&'a [SweepResult]),
    Counts(&'a ShotCounts),
    Probabilities(&'a Distribution),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bar {
    pub label: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    Lines(Vec<Series>),
    Bars(Vec<Bar>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub body: Body,
}

fn model_name(m: Model) -> &'static str {
    match m {
        Model::Jc => "Jaynes-Cummings",
        Model::Ising => "Ising",
    }
}

fn per_model(results: &[SweepResult], y: impl Fn(&SweepResult) -> f64) -> Vec<Series> {
    Model::ALL
        .iter()
        .filter_map(|&m| {
            let mut points: Vec<(f64, f64)> = results
                .iter()
                .filter(|r| r.model == m)
                .map(|r| (r.qubits as f64, y(r)))
                .collect();
            points.sort_by(|a, b| a.0.total_cmp(&b.0));
            (!points.is_empty()).then(|| Series { label: model_name(m).into(), points })
        })
        .collect()
}

/// One point per width, taken from the first row that has a value.
fn per_width(results: &[SweepResult], label: &str, y: impl Fn(&SweepResult) -> Option<f64>) -> Option<Series> {
    let mut points: Vec<(f64, f64)> = Vec::new();
    for r in results {
        if let Some(v) = y(r) {
            let x = r.qubits as f64;
            if !points.iter().any(|p| p.0 == x) {
                points.push((x, v));
            }
        }
    }
    points.sort_by(|a, b| a.0.total_cmp(&b.0));
    (!points.is_empty()).then(|| Series { label: label.into(), points })
}

fn histogram(width: usize, values: Vec<f64>) -> Figure {
    Figure {
        title: "Measured state frequencies".into(),
        x_label: "outcome".into(),
        y_label: "frequency".into(),
        body: Body::Bars(
            values
                .into_iter()
                .enumerate()
                .map(|(i, value)| Bar { label: bitstring(i, width), value })
                .collect(),
        ),
    }
}

/// Chart model for `input` drawn as `kind`.
pub fn figure(input: PlotInput<'_>, kind: PlotKind) -> Result<Figure> {
    let mismatch = || Error::param(format!("{kind} cannot be drawn from this input"));
    match (input, kind) {
        (PlotInput::Results([]), _) => Err(Error::param("nothing to plot")),
        (PlotInput::Results(rows), PlotKind::FidelityVsQubits) => Ok(Figure {
            title: "Fidelity vs. qubit count".into(),
            x_label: "qubits".into(),
            y_label: "fidelity (%)".into(),
            body: Body::Lines(per_model(rows, |r| r.fidelity_pct)),
        }),
        (PlotInput::Results(rows), PlotKind::ErrorVsQubits) => Ok(Figure {
            title: "Cumulative error vs. qubit count".into(),
            x_label: "qubits".into(),
            y_label: "error exponent E".into(),
            body: Body::Lines(per_model(rows, |r| r.error_total)),
        }),
        (PlotInput::Results(rows), PlotKind::FreqVsQubits) => {
            let series: Vec<Series> = [
                per_width(rows, "theoretical", |r| r.freq_theory_ghz),
                per_width(rows, "hardware", |r| r.freq_hw_ghz),
            ]
            .into_iter()
            .flatten()
            .collect();
            if series.is_empty() {
                return Err(Error::param("no frequency values to plot"));
            }
            Ok(Figure {
                title: "Qubit frequency vs. qubit count".into(),
                x_label: "qubits".into(),
                y_label: "frequency (GHz)".into(),
                body: Body::Lines(series),
            })
        }
        (PlotInput::Counts(c), PlotKind::StateHistogram) => {
            if c.total_shots == 0 {
                return Err(Error::param("nothing to plot"));
            }
            let n = c.total_shots as f64;
            Ok(histogram(c.width, c.dense().into_iter().map(|k| k as f64 / n).collect()))
        }
        (PlotInput::Probabilities(d), PlotKind::StateHistogram) => {
            Ok(histogram(d.width(), d.probs().to_vec()))
        }
        _ => Err(mismatch()),
    }
}

pub fn render_plot(input: PlotInput<'_>, kind: PlotKind) -> Result<String> {
    Ok(figure(input, kind)?.to_svg())
}

pub fn emit_plot(input: PlotInput<'_>, kind: PlotKind, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let svg = render_plot(input, kind)?;
    std::fs::write(path, svg).map_err(|e| Error::io(path, e))
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 64.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"];

/// Tick positions covering `[lo, hi]` with a 1-2-5 step, and the decimals
/// needed to print them.
fn ticks(lo: f64, hi: f64) -> (Vec<f64>, usize) {
    let (lo, hi) = if hi > lo { (lo, hi) } else { (lo - 1.0, hi + 1.0) };
    let raw = (hi - lo) / 8.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag);
    let first = (lo / step).floor() as i64;
    let last = (hi / step).ceil() as i64;
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    ((first..=last).map(|k| k as f64 * step).collect(), decimals)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        LEFT + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - TOP - BOTTOM)
    }
}

impl Figure {
    pub fn to_svg(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="28" text-anchor="middle" font-size="16">{}</text>"#,
            (LEFT + WIDTH - RIGHT) / 2.0,
            escape(&self.title)
        );
        match &self.body {
            Body::Lines(series) => self.draw_lines(&mut s, series),
            Body::Bars(bars) => self.draw_bars(&mut s, bars),
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            (LEFT + WIDTH - RIGHT) / 2.0,
            HEIGHT - 18.0,
            escape(&self.x_label)
        );
        let cy = (TOP + HEIGHT - BOTTOM) / 2.0;
        let _ = writeln!(
            s,
            r#"<text x="22" y="{cy:.2}" text-anchor="middle" transform="rotate(-90 22 {cy:.2})">{}</text>"#,
            escape(&self.y_label)
        );
        s.push_str("</svg>\n");
        s
    }

    fn axes(&self, s: &mut String, f: &Frame, yt: &(Vec<f64>, usize)) {
        for &t in &yt.0 {
            let y = f.py(t);
            let _ = writeln!(
                s,
                r##"<line x1="{LEFT:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#e0e0e0"/>"##,
                WIDTH - RIGHT
            );
            let _ = writeln!(
                s,
                r#"<text class="ytick" x="{:.2}" y="{:.2}" text-anchor="end">{t:.*}</text>"#,
                LEFT - 6.0,
                y + 4.0,
                yt.1
            );
        }
        let base = HEIGHT - BOTTOM;
        let _ = writeln!(
            s,
            r#"<line x1="{LEFT:.2}" y1="{base:.2}" x2="{:.2}" y2="{base:.2}" stroke="black"/>"#,
            WIDTH - RIGHT
        );
        let _ = writeln!(
            s,
            r#"<line x1="{LEFT:.2}" y1="{TOP:.2}" x2="{LEFT:.2}" y2="{base:.2}" stroke="black"/>"#
        );
    }

    fn draw_lines(&self, s: &mut String, series: &[Series]) {
        let pts = || series.iter().flat_map(|se| se.points.iter());
        let (xmin, xmax) = pts().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| (a.min(p.0), b.max(p.0)));
        let (ymin, ymax) = pts().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| (a.min(p.1), b.max(p.1)));
        let xt = ticks(xmin, xmax);
        let yt = ticks(ymin, ymax);
        let f = Frame {
            x0: xt.0[0],
            x1: *xt.0.last().unwrap(),
            y0: yt.0[0],
            y1: *yt.0.last().unwrap(),
        };
        self.axes(s, &f, &yt);
        let base = HEIGHT - BOTTOM;
        for &t in &xt.0 {
            let x = f.px(t);
            let _ = writeln!(
                s,
                r#"<line x1="{x:.2}" y1="{base:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#,
                base + 5.0
            );
            let _ = writeln!(
                s,
                r#"<text class="xtick" x="{x:.2}" y="{:.2}" text-anchor="middle">{t:.*}</text>"#,
                base + 18.0,
                xt.1
            );
        }
        for (i, se) in series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            if se.points.len() > 1 {
                let path: Vec<String> = se
                    .points
                    .iter()
                    .map(|&(x, y)| format!("{:.2},{:.2}", f.px(x), f.py(y)))
                    .collect();
                let _ = writeln!(
                    s,
                    r#"<polyline class="series" fill="none" stroke="{color}" stroke-width="2" points="{}"/>"#,
                    path.join(" ")
                );
            }
            for &(x, y) in &se.points {
                let _ = writeln!(
                    s,
                    r#"<circle class="marker" cx="{:.2}" cy="{:.2}" r="3.5" fill="{color}"/>"#,
                    f.px(x),
                    f.py(y)
                );
            }
            let ly = TOP + 10.0 + 20.0 * i as f64;
            let lx = WIDTH - RIGHT + 16.0;
            let _ = writeln!(
                s,
                r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/>"#,
                lx + 20.0
            );
            let _ = writeln!(
                s,
                r#"<text class="legend" x="{:.2}" y="{:.2}">{}</text>"#,
                lx + 26.0,
                ly + 4.0,
                escape(&se.label)
            );
        }
    }

    fn draw_bars(&self, s: &mut String, bars: &[Bar]) {
        let ymax = bars.iter().map(|b| b.value).fold(0.0, f64::max);
        let yt = ticks(0.0, if ymax > 0.0 { ymax } else { 1.0 });
        let f = Frame {
            x0: 0.0,
            x1: bars.len() as f64,
            y0: 0.0,
            y1: *yt.0.last().unwrap(),
        };
        self.axes(s, &f, &yt);
        let slot = f.px(1.0) - f.px(0.0);
        let base = HEIGHT - BOTTOM;
        for (i, b) in bars.iter().enumerate() {
            let x = f.px(i as f64) + 0.2 * slot;
            let top = f.py(b.value);
            let _ = writeln!(
                s,
                r#"<rect class="bar" data-label="{}" x="{x:.2}" y="{top:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
                escape(&b.label),
                0.6 * slot,
                base - top,
                PALETTE[0]
            );
            let _ = writeln!(
                s,
                r#"<text class="xtick" x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                x + 0.3 * slot,
                base + 18.0,
                escape(&b.label)
            );
        }
    }
}
