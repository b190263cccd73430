use std::fmt;
use std::fmt::Write as _;
use std::io;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, squares_overlap, OrientedSquare, Point2};

pub const LAYOUT_CSV_HEADER: [&str; 5] = ["idx", "cx_cm", "cy_cm", "edge_cm", "rot_rad"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Hex,
    GreedyRadial,
    Grid,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Hex => "hex",
            Strategy::GreedyRadial => "greedy-radial",
            Strategy::Grid => "grid",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hex" => Ok(Strategy::Hex),
            "greedy-radial" => Ok(Strategy::GreedyRadial),
            "grid" => Ok(Strategy::Grid),
            other => Err(Error::domain(format!("unknown strategy `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub strategy: Strategy,
    pub seed: u64,
}

/// Non-overlapping arrangement of equal square pieces.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Layout {
    pieces: Vec<OrientedSquare>,
    piece_edge: f64,
    provenance: Provenance,
}

impl Layout {
    /// Builds a layout from generator output. Callers guarantee non-overlap.
    pub(crate) fn from_parts(
        pieces: Vec<OrientedSquare>,
        piece_edge: f64,
        provenance: Provenance,
    ) -> Self {
        debug_assert!(!pieces.is_empty());
        Self {
            pieces,
            piece_edge,
            provenance,
        }
    }

    /// Validated constructor: checks equal edges and runs a full pairwise
    /// overlap audit.
    pub fn new(pieces: Vec<OrientedSquare>, provenance: Provenance) -> Result<Self> {
        let Some(first) = pieces.first() else {
            return Err(Error::domain("layout needs at least one piece"));
        };
        let edge = first.edge();
        if pieces.iter().any(|p| p.edge() != edge) {
            return Err(Error::domain(
                "all pieces in a layout share one edge length",
            ));
        }
        if let Some((i, j)) = find_overlap(&pieces) {
            return Err(Error::domain(format!("pieces {i} and {j} overlap")));
        }
        Ok(Self::from_parts(pieces, edge, provenance))
    }

    pub fn pieces(&self) -> &[OrientedSquare] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn piece_edge(&self) -> f64 {
        self.piece_edge
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn centers(&self) -> Vec<Point2> {
        self.pieces.iter().map(|p| p.center()).collect()
    }

    pub fn corners(&self) -> Vec<Point2> {
        self.pieces.iter().flat_map(|p| p.corners()).collect()
    }

    /// Writes `idx,cx_cm,cy_cm,edge_cm,rot_rad` rows. Floats use the shortest
    /// representation that round-trips exactly.
    pub fn write_csv<W: io::Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let csv_err = |e: csv::Error| Error::domain(format!("writing layout csv: {e}"));
        w.write_record(LAYOUT_CSV_HEADER).map_err(csv_err)?;
        for (i, p) in self.pieces.iter().enumerate() {
            let c = p.center();
            w.write_record([
                i.to_string(),
                c.x.to_string(),
                c.y.to_string(),
                p.edge().to_string(),
                p.rotation().to_string(),
            ])
            .map_err(csv_err)?;
        }
        w.flush()
            .map_err(|e| Error::domain(format!("writing layout csv: {e}")))?;
        Ok(())
    }

    /// Reads a layout written by [`Layout::write_csv`]. The result is audited
    /// for overlaps like any other externally supplied layout.
    pub fn read_csv<R: io::Read>(reader: R, provenance: Provenance) -> Result<Self> {
        let mut r = csv::Reader::from_reader(reader);
        let headers = r
            .headers()
            .map_err(|e| Error::Parse {
                line: 1,
                message: e.to_string(),
            })?
            .clone();
        if headers.iter().ne(LAYOUT_CSV_HEADER) {
            return Err(Error::Parse {
                line: 1,
                message: format!("expected header `{}`", LAYOUT_CSV_HEADER.join(",")),
            });
        }
        let mut pieces = Vec::new();
        for record in r.records() {
            let record = record.map_err(|e| Error::Parse {
                line: e.position().map_or(0, |p| p.line()),
                message: e.to_string(),
            })?;
            let line = record.position().map_or(0, |p| p.line());
            let field = |i: usize| -> Result<f64> {
                record[i].trim().parse::<f64>().map_err(|e| Error::Parse {
                    line,
                    message: format!("{}: {e}", LAYOUT_CSV_HEADER[i]),
                })
            };
            let sq = OrientedSquare::new(Point2::new(field(1)?, field(2)?), field(3)?, field(4)?)
                .map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            pieces.push(sq);
        }
        Self::new(pieces, provenance)
    }

    /// SVG with each piece as a rotated rect and the convex hull of all
    /// corners as a dashed outline. Output is byte-deterministic.
    pub fn to_svg(&self) -> String {
        let corners = self.corners();
        let (mut lo, mut hi) = (corners[0], corners[0]);
        for c in &corners {
            lo = Point2::new(lo.x.min(c.x), lo.y.min(c.y));
            hi = Point2::new(hi.x.max(c.x), hi.y.max(c.y));
        }
        let margin = self.piece_edge;
        let (w, h) = (hi.x - lo.x + 2.0 * margin, hi.y - lo.y + 2.0 * margin);
        let scale = 800.0 / w.max(h);
        let stroke = 0.02 * self.piece_edge;

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="{:.4} {:.4} {:.4} {:.4}">"#,
            w * scale,
            h * scale,
            lo.x - margin,
            -(hi.y + margin),
            w,
            h
        );
        let _ = writeln!(
            s,
            r#"<title>{} layout, {} pieces, seed {}</title>"#,
            self.provenance.strategy,
            self.len(),
            self.provenance.seed
        );
        let _ = writeln!(s, r#"<g transform="scale(1,-1)">"#);
        let half = 0.5 * self.piece_edge;
        for p in &self.pieces {
            let c = p.center();
            let _ = writeln!(
                s,
                r##"<rect x="{:.4}" y="{:.4}" width="{:.4}" height="{:.4}" transform="rotate({:.4} {:.4} {:.4})" fill="#c8d7e8" stroke="#34495e" stroke-width="{:.4}"/>"##,
                c.x - half,
                c.y - half,
                self.piece_edge,
                self.piece_edge,
                p.rotation().to_degrees(),
                c.x,
                c.y,
                stroke
            );
        }
        if let Ok(hull) = convex_hull(&corners) {
            let mut pts: Vec<String> = hull
                .vertices()
                .iter()
                .map(|v| format!("{:.4},{:.4}", v.x, v.y))
                .collect();
            pts.push(pts[0].clone());
            let _ = writeln!(
                s,
                r##"<polyline points="{}" fill="none" stroke="#c0392b" stroke-width="{:.4}" stroke-dasharray="{:.4} {:.4}"/>"##,
                pts.join(" "),
                2.0 * stroke,
                0.3 * self.piece_edge,
                0.2 * self.piece_edge
            );
        }
        s.push_str("</g>\n</svg>\n");
        s
    }
}

/// Reports the first overlapping pair, by brute force over all pairs.
pub fn find_overlap(pieces: &[OrientedSquare]) -> Option<(usize, usize)> {
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            if squares_overlap(&pieces[i], &pieces[j]) {
                return Some((i, j));
            }
        }
    }
    None
}
