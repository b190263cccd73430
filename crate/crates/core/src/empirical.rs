//! Hand measurements of real puzzles, their areas with propagated
//! uncertainty, and the comparison against the closed-form prediction.

use std::fmt::{self, Write as _};
use std::io;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{ellipse_area, rectangle_area};
use crate::model::SQRT_3;

pub const DEFAULT_SIGMA_ASSEMBLED: f64 = 0.2;
pub const DEFAULT_SIGMA_SPREAD: f64 = 0.5;

pub const MEASUREMENT_CSV_HEADER: [&str; 6] =
    ["n", "x_a_cm", "y_a_cm", "x_s_cm", "y_s_cm", "spread_shape"];

/// How the loose pieces were arranged, which decides the area formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpreadShape {
    Ellipse,
    Rectangle,
}

impl SpreadShape {
    pub fn as_str(self) -> &'static str {
        match self {
            SpreadShape::Ellipse => "ellipse",
            SpreadShape::Rectangle => "rectangle",
        }
    }
}

impl fmt::Display for SpreadShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpreadShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ellipse" => Ok(SpreadShape::Ellipse),
            "rectangle" => Ok(SpreadShape::Rectangle),
            other => Err(Error::domain(format!(
                "spread_shape must be `ellipse` or `rectangle`, got `{other}`"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MeasurementRecord {
    pub pieces: u64,
    pub x_a: f64,
    pub y_a: f64,
    pub x_s: f64,
    pub y_s: f64,
    pub spread_shape: SpreadShape,
    pub sigma_a: f64,
    pub sigma_s: f64,
}

impl MeasurementRecord {
    /// Record with the default per-dimension uncertainties.
    pub fn new(
        pieces: u64,
        x_a: f64,
        y_a: f64,
        x_s: f64,
        y_s: f64,
        spread_shape: SpreadShape,
    ) -> Result<Self> {
        let rec = Self {
            pieces,
            x_a,
            y_a,
            x_s,
            y_s,
            spread_shape,
            sigma_a: DEFAULT_SIGMA_ASSEMBLED,
            sigma_s: DEFAULT_SIGMA_SPREAD,
        };
        rec.validate()?;
        Ok(rec)
    }

    pub fn with_sigmas(mut self, sigma_a: f64, sigma_s: f64) -> Result<Self> {
        self.sigma_a = sigma_a;
        self.sigma_s = sigma_s;
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        if self.pieces == 0 {
            return Err(Error::domain("piece count must be at least 1"));
        }
        for (name, v) in [
            ("x_a", self.x_a),
            ("y_a", self.y_a),
            ("x_s", self.x_s),
            ("y_s", self.y_s),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::domain(format!("{name} must be positive, got {v}")));
            }
        }
        for (name, v) in [("sigma_a", self.sigma_a), ("sigma_s", self.sigma_s)] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::domain(format!(
                    "{name} must be non-negative, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// The nine measured puzzles, verbatim.
pub fn builtin_dataset() -> Vec<MeasurementRecord> {
    use SpreadShape::{Ellipse, Rectangle};
    const ROWS: [(u64, f64, f64, f64, f64, SpreadShape); 9] = [
        (1008, 50.2, 69.0, 83.0, 85.0, Ellipse),
        (252, 26.6, 34.4, 45.0, 46.5, Ellipse),
        (9, 15.6, 21.4, 25.9, 23.3, Ellipse),
        (500, 50.8, 50.9, 78.4, 74.8, Ellipse),
        (1026, 67.8, 48.9, 88.0, 86.8, Ellipse),
        (27, 296.8, 14.6, 107.2, 92.0, Ellipse),
        (2000, 99.1, 68.6, 123.1, 131.0, Ellipse),
        (1000, 50.8, 68.5, 112.0, 69.0, Rectangle),
        (1000, 99.3, 33.0, 132.4, 57.5, Rectangle),
    ];
    ROWS.iter()
        .map(|&(n, xa, ya, xs, ys, shape)| MeasurementRecord {
            pieces: n,
            x_a: xa,
            y_a: ya,
            x_s: xs,
            y_s: ys,
            spread_shape: shape,
            sigma_a: DEFAULT_SIGMA_ASSEMBLED,
            sigma_s: DEFAULT_SIGMA_SPREAD,
        })
        .collect()
}

/// Parses measurement CSV. Errors carry the 1-based line number.
pub fn read_csv<R: io::Read>(reader: R) -> Result<Vec<MeasurementRecord>> {
    let mut r = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = r
        .headers()
        .map_err(|e| Error::Parse {
            line: 1,
            message: e.to_string(),
        })?
        .clone();
    if headers.iter().ne(MEASUREMENT_CSV_HEADER) {
        return Err(Error::Parse {
            line: 1,
            message: format!("expected header `{}`", MEASUREMENT_CSV_HEADER.join(",")),
        });
    }
    let mut out = Vec::new();
    for record in r.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let parse_err = |message: String| Error::Parse { line, message };
        let dim = |i: usize| -> Result<f64> {
            record[i]
                .parse::<f64>()
                .map_err(|e| parse_err(format!("{}: {e}", MEASUREMENT_CSV_HEADER[i])))
        };
        let pieces = record[0]
            .parse::<u64>()
            .map_err(|e| parse_err(format!("n: {e}")))?;
        let shape = record[5]
            .parse::<SpreadShape>()
            .map_err(|e| parse_err(e.to_string()))?;
        let rec = MeasurementRecord::new(pieces, dim(1)?, dim(2)?, dim(3)?, dim(4)?, shape)
            .map_err(|e| parse_err(e.to_string()))?;
        out.push(rec);
    }
    Ok(out)
}

pub fn write_csv<W: io::Write>(records: &[MeasurementRecord], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let err = |e: csv::Error| Error::domain(format!("writing measurement csv: {e}"));
    w.write_record(MEASUREMENT_CSV_HEADER).map_err(err)?;
    for r in records {
        w.write_record([
            r.pieces.to_string(),
            r.x_a.to_string(),
            r.y_a.to_string(),
            r.x_s.to_string(),
            r.y_s.to_string(),
            r.spread_shape.to_string(),
        ])
        .map_err(err)?;
    }
    w.flush()
        .map_err(|e| Error::domain(format!("writing measurement csv: {e}")))?;
    Ok(())
}

/// Value with a one-standard-deviation uncertainty.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AreaEstimate {
    pub value: f64,
    pub sigma: f64,
}

impl AreaEstimate {
    pub fn relative_sigma(&self) -> f64 {
        self.sigma / self.value
    }
}

/// First-order uncertainty of `k * x * y` for independent errors on `x` and `y`.
fn product_estimate(value: f64, x: f64, y: f64, sigma: f64) -> AreaEstimate {
    AreaEstimate {
        value,
        sigma: value * (sigma / x).hypot(sigma / y),
    }
}

pub fn assembled_area(rec: &MeasurementRecord) -> AreaEstimate {
    product_estimate(rec.x_a * rec.y_a, rec.x_a, rec.y_a, rec.sigma_a)
}

pub fn unassembled_area_measured(rec: &MeasurementRecord) -> AreaEstimate {
    // Record invariants guarantee positive dimensions.
    let value = match rec.spread_shape {
        SpreadShape::Ellipse => ellipse_area(rec.x_s, rec.y_s),
        SpreadShape::Rectangle => rectangle_area(rec.x_s, rec.y_s),
    }
    .expect("validated record has positive dimensions");
    product_estimate(value, rec.x_s, rec.y_s, rec.sigma_s)
}

/// Measured spread ratio `A_s / A_a`; relative uncertainties add in quadrature.
pub fn ratio(rec: &MeasurementRecord) -> AreaEstimate {
    let a = assembled_area(rec);
    let s = unassembled_area_measured(rec);
    let value = s.value / a.value;
    AreaEstimate {
        value,
        sigma: value * a.relative_sigma().hypot(s.relative_sigma()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SlopeFit {
    pub value: f64,
    pub stderr: f64,
}

/// Least squares `y = m x` with the intercept pinned at zero.
///
/// The standard error uses the residual variance with `n - 1` degrees of
/// freedom.
pub fn fit_slope_origin(points: &[(f64, f64)]) -> Result<SlopeFit> {
    if points.len() < 2 {
        return Err(Error::domain("through-origin fit needs at least 2 points"));
    }
    let sxx: f64 = points.iter().map(|(x, _)| x * x).sum();
    if sxx <= 0.0 || sxx.is_nan() {
        return Err(Error::domain("through-origin fit needs a nonzero x"));
    }
    let sxy: f64 = points.iter().map(|(x, y)| x * y).sum();
    let value = sxy / sxx;
    let rss: f64 = points.iter().map(|(x, y)| (y - value * x).powi(2)).sum();
    let dof = (points.len() - 1) as f64;
    Ok(SlopeFit {
        value,
        stderr: (rss / dof / sxx).sqrt(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub pieces: u64,
    pub spread_shape: SpreadShape,
    pub assembled: AreaEstimate,
    pub unassembled: AreaEstimate,
    pub ratio: AreaEstimate,
    pub predicted_unassembled: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub rows: Vec<ReportRow>,
    /// Diagnostic only: the model has no free parameter.
    pub slope: SlopeFit,
    pub sqrt3: f64,
}

/// Compares each record with the prediction. A single record is fitted as
/// an exact line through it, with zero standard error.
pub fn validate(records: &[MeasurementRecord]) -> Result<ValidationReport> {
    if records.is_empty() {
        return Err(Error::domain("nothing to validate"));
    }
    let rows: Vec<ReportRow> = records
        .iter()
        .map(|rec| {
            let assembled = assembled_area(rec);
            let unassembled = unassembled_area_measured(rec);
            let predicted = SQRT_3 * assembled.value;
            ReportRow {
                pieces: rec.pieces,
                spread_shape: rec.spread_shape,
                assembled,
                unassembled,
                ratio: ratio(rec),
                predicted_unassembled: predicted,
                residual: unassembled.value - predicted,
            }
        })
        .collect();
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.assembled.value, r.unassembled.value))
        .collect();
    let slope = if points.len() == 1 {
        let (x, y) = points[0];
        SlopeFit {
            value: y / x,
            stderr: 0.0,
        }
    } else {
        fit_slope_origin(&points)?
    };
    Ok(ValidationReport {
        rows,
        slope,
        sqrt3: SQRT_3,
    })
}

impl ValidationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable") + "\n"
    }

    /// Aligned text table; areas to 0.1 cm², ratios to 4 decimals.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:>5}  {:<9}  {:>17}  {:>17}  {:>10}  {:>9}  {:>15}",
            "N", "shape", "A_a (cm2)", "A_s meas (cm2)", "sqrt3*A_a", "residual", "A_s/A_a"
        );
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:>5}  {:<9}  {:>17}  {:>17}  {:>10.1}  {:>9.1}  {:>15}",
                r.pieces,
                r.spread_shape.as_str(),
                format!("{:.1} +/- {:.1}", r.assembled.value, r.assembled.sigma),
                format!("{:.1} +/- {:.1}", r.unassembled.value, r.unassembled.sigma),
                r.predicted_unassembled,
                r.residual,
                format!("{:.4} +/- {:.4}", r.ratio.value, r.ratio.sigma),
            );
        }
        let _ = writeln!(s);
        let _ = writeln!(
            s,
            "predicted ratio (no free parameters): sqrt(3) = {:.4}",
            self.sqrt3
        );
        let _ = writeln!(
            s,
            "through-origin slope (diagnostic):    {:.4} +/- {:.4}",
            self.slope.value, self.slope.stderr
        );
        s
    }
}
