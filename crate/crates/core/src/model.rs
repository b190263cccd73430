//! Closed-form spread-area model.
//!
//! Each piece is treated as a square of area `A_a / N`. Randomly oriented
//! squares are replaced by their circumscribed circles (diameter = square
//! diagonal), and those circles are assumed to pack on a hexagonal lattice
//! where every circle owns one third of a hexagon of edge `d`. Multiplying
//! the per-piece share by `N` gives the unassembled area, and the piece count
//! cancels: `A_s = sqrt(3) * A_a`.

use serde::Serialize;

use crate::error::{ensure_positive, Error, Result};

pub const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Relative tolerance used when cross-checking `width * height` against a
/// separately supplied area.
const AREA_CROSSCHECK_RTOL: f64 = 1e-9;

/// A puzzle as printed on its box: piece count and finished size.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PuzzleSpec {
    pieces: u64,
    assembled_width: Option<f64>,
    assembled_height: Option<f64>,
    assembled_area: f64,
}

impl PuzzleSpec {
    pub fn from_area(pieces: u64, assembled_area: f64) -> Result<Self> {
        check_pieces(pieces)?;
        ensure_positive("assembled area", assembled_area)?;
        Ok(Self {
            pieces,
            assembled_width: None,
            assembled_height: None,
            assembled_area,
        })
    }

    pub fn from_dims(pieces: u64, width: f64, height: f64) -> Result<Self> {
        check_pieces(pieces)?;
        ensure_positive("assembled width", width)?;
        ensure_positive("assembled height", height)?;
        Ok(Self {
            pieces,
            assembled_width: Some(width),
            assembled_height: Some(height),
            assembled_area: width * height,
        })
    }

    /// Accepts any combination of area and dimensions. When both are present
    /// they must agree to within 1e-9 relative.
    pub fn new(
        pieces: u64,
        area: Option<f64>,
        width: Option<f64>,
        height: Option<f64>,
    ) -> Result<Self> {
        match (area, width, height) {
            (Some(a), None, None) => Self::from_area(pieces, a),
            (None, Some(w), Some(h)) => Self::from_dims(pieces, w, h),
            (Some(a), Some(w), Some(h)) => {
                let spec = Self::from_dims(pieces, w, h)?;
                ensure_positive("assembled area", a)?;
                let rel = (spec.assembled_area - a).abs() / a;
                if rel > AREA_CROSSCHECK_RTOL {
                    return Err(Error::domain(format!(
                        "area {a} disagrees with {w} x {h} = {}",
                        spec.assembled_area
                    )));
                }
                Ok(spec)
            }
            _ => Err(Error::domain(
                "need either an area or both width and height",
            )),
        }
    }

    pub fn pieces(&self) -> u64 {
        self.pieces
    }

    pub fn assembled_area(&self) -> f64 {
        self.assembled_area
    }

    pub fn assembled_width(&self) -> Option<f64> {
        self.assembled_width
    }

    pub fn assembled_height(&self) -> Option<f64> {
        self.assembled_height
    }
}

fn check_pieces(pieces: u64) -> Result<()> {
    if pieces == 0 {
        Err(Error::domain("piece count must be at least 1"))
    } else {
        Ok(())
    }
}

/// Every intermediate quantity of the derivation, in cm and cm².
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ModelBreakdown {
    pub piece_area: f64,
    pub piece_edge: f64,
    pub circle_diameter: f64,
    pub hexagon_area: f64,
    pub per_piece_spread_area: f64,
    pub unassembled_area: f64,
}

/// Area of one square piece, `A_a / N`.
pub fn piece_area(assembled_area: f64, pieces: u64) -> Result<f64> {
    ensure_positive("assembled area", assembled_area)?;
    check_pieces(pieces)?;
    Ok(assembled_area / pieces as f64)
}

/// Diagonal of the square piece, i.e. the diameter of its circumscribed circle.
pub fn circumscribed_diameter(assembled_area: f64, pieces: u64) -> Result<f64> {
    Ok((2.0 * piece_area(assembled_area, pieces)?).sqrt())
}

/// Area of a regular hexagon with edge `diameter`.
pub fn hexagon_area(diameter: f64) -> Result<f64> {
    ensure_positive("diameter", diameter)?;
    Ok(1.5 * SQRT_3 * diameter * diameter)
}

/// One third of the hexagon: the floor space attributed to each piece.
pub fn per_piece_spread_area(diameter: f64) -> Result<f64> {
    Ok(hexagon_area(diameter)? / 3.0)
}

/// Predicted unassembled area. Deliberately takes no piece count.
pub fn unassembled_area(assembled_area: f64) -> Result<f64> {
    ensure_positive("assembled area", assembled_area)?;
    Ok(SQRT_3 * assembled_area)
}

pub fn model_breakdown(spec: &PuzzleSpec) -> Result<ModelBreakdown> {
    let area = spec.assembled_area();
    let piece_area = piece_area(area, spec.pieces())?;
    let circle_diameter = circumscribed_diameter(area, spec.pieces())?;
    let hexagon_area = hexagon_area(circle_diameter)?;
    Ok(ModelBreakdown {
        piece_area,
        piece_edge: piece_area.sqrt(),
        circle_diameter,
        hexagon_area,
        per_piece_spread_area: hexagon_area / 3.0,
        unassembled_area: unassembled_area(area)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TableFit {
    pub fits: bool,
    pub table_area: f64,
    pub required_area: f64,
    /// Table area minus required area; negative when the pieces do not fit.
    pub margin: f64,
}

pub fn table_fits(spec: &PuzzleSpec, table_width: f64, table_height: f64) -> Result<TableFit> {
    ensure_positive("table width", table_width)?;
    ensure_positive("table height", table_height)?;
    let table_area = table_width * table_height;
    let required_area = unassembled_area(spec.assembled_area())?;
    Ok(TableFit {
        fits: table_area >= required_area,
        table_area,
        required_area,
        margin: table_area - required_area,
    })
}
