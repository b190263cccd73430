//! SVG scatter of unassembled against assembled area, with the
//! parameter-free `y = sqrt(3) x` line drawn dashed through the origin.

use std::fmt::Write as _;

use serde::Serialize;

use crate::empirical::ValidationReport;
use crate::error::{Error, Result};
use crate::model::SQRT_3;

const MARGIN_LEFT: f64 = 90.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 70.0;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlotPoint {
    pub assembled: f64,
    pub unassembled: f64,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlotSpec {
    pub width_px: u32,
    pub height_px: u32,
    pub points: Vec<PlotPoint>,
    pub reference_slope: f64,
}

impl PlotSpec {
    pub fn new(points: Vec<PlotPoint>) -> Self {
        Self {
            width_px: 800,
            height_px: 600,
            points,
            reference_slope: SQRT_3,
        }
    }

    pub fn from_report(report: &ValidationReport) -> Self {
        Self::new(
            report
                .rows
                .iter()
                .map(|r| PlotPoint {
                    assembled: r.assembled.value,
                    unassembled: r.unassembled.value,
                    label: format!("N={}", r.pieces),
                })
                .collect(),
        )
    }

    /// Axis ranges and the data-to-pixel mapping.
    pub fn frame(&self) -> Result<PlotFrame> {
        if self.points.is_empty() {
            return Err(Error::domain("nothing to plot"));
        }
        if self.width_px as f64 <= MARGIN_LEFT + MARGIN_RIGHT
            || self.height_px as f64 <= MARGIN_TOP + MARGIN_BOTTOM
        {
            return Err(Error::domain("canvas too small"));
        }
        for p in &self.points {
            if !(p.assembled.is_finite() && p.unassembled.is_finite())
                || p.assembled < 0.0
                || p.unassembled < 0.0
            {
                return Err(Error::domain(format!(
                    "point `{}` is not a non-negative area pair",
                    p.label
                )));
            }
        }
        let x_data = self.points.iter().map(|p| p.assembled).fold(0.0, f64::max);
        let (x_max, x_step) = nice_axis(x_data);
        let y_data = self
            .points
            .iter()
            .map(|p| p.unassembled)
            .fold(self.reference_slope * x_max, f64::max);
        let (y_max, y_step) = nice_axis(y_data);
        Ok(PlotFrame {
            x_max,
            x_step,
            y_max,
            y_step,
            left: MARGIN_LEFT,
            top: MARGIN_TOP,
            width: self.width_px as f64 - MARGIN_LEFT - MARGIN_RIGHT,
            height: self.height_px as f64 - MARGIN_TOP - MARGIN_BOTTOM,
        })
    }

    /// Deterministic SVG document.
    pub fn render_svg(&self) -> Result<String> {
        let f = self.frame()?;
        let mut s = String::new();
        let (w, h) = (self.width_px, self.height_px);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="13">"#
        );
        let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);

        // gridlines and ticks
        let (x0, y0) = f.to_px(0.0, 0.0);
        let (x1, y1) = f.to_px(f.x_max, f.y_max);
        for i in 0..=f.x_ticks() {
            let v = i as f64 * f.x_step;
            let (px, _) = f.to_px(v, 0.0);
            let _ = writeln!(
                s,
                r##"<line x1="{px:.2}" y1="{y1:.2}" x2="{px:.2}" y2="{y0:.2}" stroke="#e0e0e0"/>"##
            );
            let _ = writeln!(
                s,
                r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                y0 + 18.0,
                tick_label(v)
            );
        }
        for i in 0..=f.y_ticks() {
            let v = i as f64 * f.y_step;
            let (_, py) = f.to_px(0.0, v);
            let _ = writeln!(
                s,
                r##"<line x1="{x0:.2}" y1="{py:.2}" x2="{x1:.2}" y2="{py:.2}" stroke="#e0e0e0"/>"##
            );
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                x0 - 8.0,
                py + 4.0,
                tick_label(v)
            );
        }
        let _ = writeln!(
            s,
            r#"<polyline points="{x0:.2},{y1:.2} {x0:.2},{y0:.2} {x1:.2},{y0:.2}" fill="none" stroke="black"/>"#
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">Assembled area (cm²)</text>"#,
            0.5 * (x0 + x1),
            h as f64 - 20.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" transform="rotate(-90 {:.2} {:.2})">Unassembled area (cm²)</text>"#,
            24.0,
            0.5 * (y0 + y1),
            24.0,
            0.5 * (y0 + y1)
        );

        // reference line, clipped to the plot box
        let x_end = f.x_max.min(f.y_max / self.reference_slope);
        let (lx, ly) = f.to_px(x_end, self.reference_slope * x_end);
        let _ = writeln!(
            s,
            r#"<line class="reference" x1="{x0:.2}" y1="{y0:.2}" x2="{lx:.2}" y2="{ly:.2}" stroke="black" stroke-width="1.5" stroke-dasharray="8 6"/>"#
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">A_s = {:.4} A_a</text>"#,
            lx - 6.0,
            ly + 16.0,
            self.reference_slope
        );

        for p in &self.points {
            let (px, py) = f.to_px(p.assembled, p.unassembled);
            let _ = writeln!(
                s,
                r##"<circle class="point" cx="{px:.2}" cy="{py:.2}" r="5" fill="#1f77b4"><title>{}</title></circle>"##,
                escape(&p.label)
            );
            let _ = writeln!(
                s,
                r##"<text x="{:.2}" y="{:.2}" font-size="11" fill="#444">{}</text>"##,
                px + 7.0,
                py - 7.0,
                escape(&p.label)
            );
        }
        s.push_str("</svg>\n");
        Ok(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlotFrame {
    pub x_max: f64,
    pub x_step: f64,
    pub y_max: f64,
    pub y_step: f64,
    left: f64,
    top: f64,
    width: f64,
    height: f64,
}

impl PlotFrame {
    /// Data coordinates (cm², cm²) to SVG pixels; y grows downward.
    pub fn to_px(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.left + self.width * x / self.x_max,
            self.top + self.height * (1.0 - y / self.y_max),
        )
    }

    fn x_ticks(&self) -> usize {
        (self.x_max / self.x_step).round() as usize
    }

    fn y_ticks(&self) -> usize {
        (self.y_max / self.y_step).round() as usize
    }
}

/// Rounds `max` up to a multiple of a 1-2-5 step giving at most 8 ticks.
fn nice_axis(max: f64) -> (f64, f64) {
    if max <= 0.0 {
        return (1.0, 0.2);
    }
    let raw = max / 8.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag);
    let n = (max / step).ceil().max(1.0);
    (n * step, step)
}

fn tick_label(v: f64) -> String {
    if v.fract() == 0.0 {
        format!("{v:.0}")
    } else {
        let s = format!("{v:.3}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
