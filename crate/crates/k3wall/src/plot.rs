//! SVG diagrams of the (α,β)-plane: walls, ν = 0 curves, vertical lines and
//! hole markers.
//!
//! All geometry stays exact until path emission; coordinates are printed with
//! a fixed 12-significant-digit decimal policy, so identical specs render to
//! identical bytes.

use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::walls::{Hole, NuZeroCurve, NumericalWall, WallKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StyleHint {
    pub color: String,
    pub dashed: bool,
}

impl StyleHint {
    pub fn solid(color: &str) -> Self {
        StyleHint {
            color: color.into(),
            dashed: false,
        }
    }

    pub fn dashed(color: &str) -> Self {
        StyleHint {
            color: color.into(),
            dashed: true,
        }
    }
}

#[derive(Debug, Clone)]
pub enum PlotElement {
    Wall {
        wall: NumericalWall,
        label: String,
        style: StyleHint,
    },
    NuCurve {
        curve: NuZeroCurve,
        label: String,
        style: StyleHint,
    },
    HoleMarker {
        hole: Hole,
        label: String,
    },
    VerticalLine {
        beta: Rat,
        label: String,
        style: StyleHint,
    },
}

#[derive(Debug, Clone)]
pub struct PlotSpec {
    beta_min: f64,
    beta_max: f64,
    alpha_max: f64,
    samples_per_curve: u32,
    elements: Vec<PlotElement>,
}

impl PlotSpec {
    pub fn new(
        beta_range: (&Rat, &Rat),
        alpha_max: &Rat,
        samples_per_curve: u32,
        elements: Vec<PlotElement>,
    ) -> Result<Self> {
        if beta_range.0 >= beta_range.1 {
            return Err(Error::Plot("beta range is empty".into()));
        }
        if alpha_max <= &Rat::from_integer(0.into()) {
            return Err(Error::Plot("alpha_max must be positive".into()));
        }
        if samples_per_curve < 16 {
            return Err(Error::Plot(format!(
                "samples_per_curve must be at least 16, got {samples_per_curve}"
            )));
        }
        Ok(PlotSpec {
            beta_min: rat_f64(beta_range.0),
            beta_max: rat_f64(beta_range.1),
            alpha_max: rat_f64(alpha_max),
            samples_per_curve,
            elements,
        })
    }
}

fn rat_f64(r: &Rat) -> f64 {
    r.to_f64().expect("rational fits in f64 for plotting")
}

/// Fixed 12-significant-digit decimal rendering; trailing zeros trimmed.
fn fmt_sig(v: f64) -> String {
    if v == 0.0 || v.abs() < 1e-300 {
        return "0".into();
    }
    let sci = format!("{:.11e}", v);
    let (mantissa, exponent) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exponent.parse().expect("exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = exp + 1;
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat('0').take((-point) as usize));
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        out.extend(std::iter::repeat('0').take(point as usize - digits.len()));
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    if out == "-0" {
        out = "0".into();
    }
    out
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 60.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 44.0;

struct Frame {
    beta_min: f64,
    beta_span: f64,
    alpha_max: f64,
}

impl Frame {
    fn x(&self, beta: f64) -> f64 {
        MARGIN_LEFT + (beta - self.beta_min) / self.beta_span * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
    }

    fn y(&self, alpha: f64) -> f64 {
        HEIGHT - MARGIN_BOTTOM - alpha / self.alpha_max * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    }

    fn visible(&self, beta: f64, alpha: f64) -> bool {
        beta >= self.beta_min
            && beta <= self.beta_min + self.beta_span
            && alpha >= 0.0
            && alpha <= self.alpha_max
    }
}

fn polyline(frame: &Frame, points: &[(f64, f64)], style: &StyleHint, out: &mut String) {
    // split at invisible samples so clipped sections vanish silently
    let mut run: Vec<(f64, f64)> = Vec::new();
    let mut runs: Vec<Vec<(f64, f64)>> = Vec::new();
    for &(beta, alpha) in points {
        if frame.visible(beta, alpha) {
            run.push((beta, alpha));
        } else if !run.is_empty() {
            runs.push(std::mem::take(&mut run));
        }
    }
    if !run.is_empty() {
        runs.push(run);
    }
    for run in runs {
        if run.len() < 2 {
            continue;
        }
        let coords: Vec<String> = run
            .iter()
            .map(|&(b, a)| format!("{},{}", fmt_sig(frame.x(b)), fmt_sig(frame.y(a))))
            .collect();
        let dash = if style.dashed {
            " stroke-dasharray=\"6,4\""
        } else {
            ""
        };
        out.push_str(&format!(
            "  <polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.6\"{} points=\"{}\"/>\n",
            style.color,
            dash,
            coords.join(" ")
        ));
    }
}

fn text_label(frame: &Frame, beta: f64, alpha: f64, label: &str, color: &str, out: &mut String) {
    if label.is_empty() || !frame.visible(beta, alpha) {
        return;
    }
    out.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"13\" fill=\"{}\">{}</text>\n",
        fmt_sig(frame.x(beta) + 5.0),
        fmt_sig(frame.y(alpha) - 5.0),
        color,
        xml_escape(label)
    ));
}

/// Renders the spec as a standalone SVG 1.1 document.
pub fn render_svg(spec: &PlotSpec) -> Result<String> {
    let frame = Frame {
        beta_min: spec.beta_min,
        beta_span: spec.beta_max - spec.beta_min,
        alpha_max: spec.alpha_max,
    };
    let samples = spec.samples_per_curve as usize;

    let mut body = String::new();

    // window frame and axes
    body.push_str(&format!(
        "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\" stroke=\"#444444\"/>\n",
        fmt_sig(MARGIN_LEFT),
        fmt_sig(MARGIN_TOP),
        fmt_sig(WIDTH - MARGIN_LEFT - MARGIN_RIGHT),
        fmt_sig(HEIGHT - MARGIN_TOP - MARGIN_BOTTOM),
    ));
    if spec.beta_min < 0.0 && spec.beta_max > 0.0 {
        let x0 = frame.x(0.0);
        body.push_str(&format!(
            "  <line x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\" stroke=\"#bbbbbb\"/>\n",
            fmt_sig(MARGIN_TOP),
            fmt_sig(HEIGHT - MARGIN_BOTTOM),
            x = fmt_sig(x0),
        ));
    }
    for (value, anchor) in [(spec.beta_min, "start"), (spec.beta_max, "end")] {
        body.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"{}\" fill=\"#222222\">β={}</text>\n",
            fmt_sig(frame.x(value)),
            fmt_sig(HEIGHT - MARGIN_BOTTOM + 16.0),
            anchor,
            fmt_sig(value)
        ));
    }
    body.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\" fill=\"#222222\">α={}</text>\n",
        fmt_sig(MARGIN_LEFT - 6.0),
        fmt_sig(MARGIN_TOP + 10.0),
        fmt_sig(spec.alpha_max)
    ));

    for element in &spec.elements {
        match element {
            PlotElement::Wall { wall, label, style } => match wall.kind() {
                WallKind::Semicircle { center, radius_sq } => {
                    let c = rat_f64(center);
                    let r = rat_f64(radius_sq).sqrt();
                    let pts: Vec<(f64, f64)> = (0..=samples)
                        .map(|i| {
                            let theta = std::f64::consts::PI * i as f64 / samples as f64;
                            (c + r * theta.cos(), r * theta.sin())
                        })
                        .collect();
                    polyline(&frame, &pts, style, &mut body);
                    text_label(&frame, c, r.min(frame.alpha_max), label, &style.color, &mut body);
                }
                WallKind::Vertical { beta } => {
                    let b = rat_f64(beta);
                    let pts = [(b, 0.0), (b, frame.alpha_max)];
                    polyline(&frame, &pts, style, &mut body);
                    text_label(&frame, b, frame.alpha_max * 0.9, label, &style.color, &mut body);
                }
                WallKind::Degenerate => {}
            },
            PlotElement::NuCurve { curve, label, style } => {
                if let Some(position) = curve.vertical_position() {
                    let b = rat_f64(&position);
                    let pts = [(b, 0.0), (b, frame.alpha_max)];
                    polyline(&frame, &pts, style, &mut body);
                    text_label(&frame, b, frame.alpha_max * 0.8, label, &style.color, &mut body);
                    continue;
                }
                let mut pts = Vec::with_capacity(samples + 1);
                let mut label_anchor: Option<(f64, f64)> = None;
                for i in 0..=samples {
                    let beta_f =
                        spec.beta_min + (spec.beta_max - spec.beta_min) * i as f64 / samples as f64;
                    // exact quadric solved in floats only here, at sampling
                    let qb = bigint_f64(&curve.quad_beta);
                    let qa = bigint_f64(&curve.quad_alpha);
                    let lb = bigint_f64(&curve.lin_beta);
                    let k = bigint_f64(&curve.constant);
                    let alpha_sq = -(qb * beta_f * beta_f + lb * beta_f + k) / qa;
                    if alpha_sq > 0.0 {
                        let alpha = alpha_sq.sqrt();
                        if frame.visible(beta_f, alpha) {
                            label_anchor = Some((beta_f, alpha));
                        }
                        pts.push((beta_f, alpha));
                    } else {
                        pts.push((beta_f, -1.0));
                    }
                }
                polyline(&frame, &pts, style, &mut body);
                if let Some((b, a)) = label_anchor {
                    text_label(&frame, b, a, label, &style.color, &mut body);
                }
            }
            PlotElement::HoleMarker { hole, label } => {
                let beta = rat_f64(hole.point.beta());
                let alpha = rat_f64(hole.point.alpha_sq()).sqrt();
                if frame.visible(beta, alpha) {
                    body.push_str(&format!(
                        "  <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"white\" stroke=\"#111111\" stroke-width=\"1.4\"/>\n",
                        fmt_sig(frame.x(beta)),
                        fmt_sig(frame.y(alpha))
                    ));
                    text_label(&frame, beta, alpha, label, "#111111", &mut body);
                }
            }
            PlotElement::VerticalLine { beta, label, style } => {
                let b = rat_f64(beta);
                let pts = [(b, 0.0), (b, frame.alpha_max)];
                polyline(&frame, &pts, style, &mut body);
                text_label(&frame, b, frame.alpha_max * 0.85, label, &style.color, &mut body);
            }
        }
    }

    Ok(format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n\
         {}</svg>\n",
        fmt_sig(WIDTH),
        fmt_sig(HEIGHT),
        fmt_sig(WIDTH),
        fmt_sig(HEIGHT),
        body
    ))
}

fn bigint_f64(value: &crate::exact::Int) -> f64 {
    value.to_f64().expect("coefficient fits in f64 for plotting")
}
