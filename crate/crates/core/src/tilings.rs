//! The eleven Archimedean tilings as lattice-periodic vertex sets.
//!
//! Every tiling has unit edges, its largest polygon has a horizontal edge and
//! a vertex sits at the origin. The basis and translates of each tiling are
//! the only geometric input; `k`, `det(Λ)` and the Blichfeldt coefficient
//! are computed from them and compared with independently recorded values
//! by [`TilingRecord::validate`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::lattice::Lattice2;
use crate::periodic::PeriodicSet;
use crate::point::Point;
use crate::qfield::QuadNum;
use crate::regions::{BBox, Boundary, ConvexPolygon};
use crate::report::ExactValue;
use crate::Error;

/// One of the eleven Archimedean tilings, named by its vertex figure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TilingId {
    /// (4⁴)
    Square,
    /// (3⁶)
    Triangular,
    /// (6³)
    Hexagonal,
    /// (3³.4²)
    ElongatedTriangular,
    /// (3.6.3.6)
    Trihexagonal,
    /// (3².4.3.4)
    SnubSquare,
    /// (4.8²)
    TruncatedSquare,
    /// (3⁴.6)
    SnubHexagonal,
    /// (3.12²)
    TruncatedHexagonal,
    /// (3.4.6.4)
    Rhombitrihexagonal,
    /// (4.6.12)
    TruncatedTrihexagonal,
}

impl TilingId {
    pub const ALL: [TilingId; 11] = [
        TilingId::Square,
        TilingId::Triangular,
        TilingId::Hexagonal,
        TilingId::ElongatedTriangular,
        TilingId::Trihexagonal,
        TilingId::SnubSquare,
        TilingId::TruncatedSquare,
        TilingId::SnubHexagonal,
        TilingId::TruncatedHexagonal,
        TilingId::Rhombitrihexagonal,
        TilingId::TruncatedTrihexagonal,
    ];

    /// The vertex figure written out in full, e.g. `"4.8.8"`.
    pub fn cli_name(self) -> &'static str {
        match self {
            TilingId::Square => "4.4.4.4",
            TilingId::Triangular => "3.3.3.3.3.3",
            TilingId::Hexagonal => "6.6.6",
            TilingId::ElongatedTriangular => "3.3.3.4.4",
            TilingId::Trihexagonal => "3.6.3.6",
            TilingId::SnubSquare => "3.3.4.3.4",
            TilingId::TruncatedSquare => "4.8.8",
            TilingId::SnubHexagonal => "3.3.3.3.6",
            TilingId::TruncatedHexagonal => "3.12.12",
            TilingId::Rhombitrihexagonal => "3.4.6.4",
            TilingId::TruncatedTrihexagonal => "4.6.12",
        }
    }

    fn notation(self) -> &'static str {
        match self {
            TilingId::Square => "(4⁴)",
            TilingId::Triangular => "(3⁶)",
            TilingId::Hexagonal => "(6³)",
            TilingId::ElongatedTriangular => "(3³.4²)",
            TilingId::Trihexagonal => "(3.6.3.6)",
            TilingId::SnubSquare => "(3².4.3.4)",
            TilingId::TruncatedSquare => "(4.8²)",
            TilingId::SnubHexagonal => "(3⁴.6)",
            TilingId::TruncatedHexagonal => "(3.12²)",
            TilingId::Rhombitrihexagonal => "(3.4.6.4)",
            TilingId::TruncatedTrihexagonal => "(4.6.12)",
        }
    }

    /// Number of polygons (and of edges) at every vertex.
    pub fn vertex_degree(self) -> usize {
        self.cli_name().split('.').count()
    }
}

impl fmt::Display for TilingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.notation())
    }
}

impl FromStr for TilingId {
    type Err = Error;

    /// Accepts the written-out vertex figure (`"4.8.8"`) or the compact
    /// notation (`"(4.8²)"`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        TilingId::ALL
            .into_iter()
            .find(|id| id.cli_name() == t || id.notation() == t)
            .ok_or_else(|| Error::UnknownTiling(s.to_string()))
    }
}

/// Basis columns and translates of one tiling, as coordinate expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingData {
    pub b1: [String; 2],
    pub b2: [String; 2],
    pub translates: Vec<[String; 2]>,
}

fn pt(c: &[String; 2]) -> Result<Point, Error> {
    Point::parse(&c[0], &c[1])
}

impl TilingData {
    pub fn build(&self) -> Result<PeriodicSet, Error> {
        let lattice = Lattice2::new(pt(&self.b1)?, pt(&self.b2)?)?;
        let translates = self.translates.iter().map(pt).collect::<Result<Vec<_>, _>>()?;
        PeriodicSet::new(lattice, &translates)
    }
}

fn data(b1: [&str; 2], b2: [&str; 2], translates: &[[&str; 2]]) -> TilingData {
    let own = |c: [&str; 2]| [c[0].to_string(), c[1].to_string()];
    TilingData { b1: own(b1), b2: own(b2), translates: translates.iter().map(|&c| own(c)).collect() }
}

const HEXAGON: [[&str; 2]; 6] = [
    ["0", "0"],
    ["1", "0"],
    ["0", "r3"],
    ["1", "r3"],
    ["3/2", "1/2*r3"],
    ["-1/2", "1/2*r3"],
];

/// Basis and translates of a tiling.
pub fn tiling_data(id: TilingId) -> TilingData {
    match id {
        TilingId::Square => data(["1", "0"], ["0", "1"], &[["0", "0"]]),
        TilingId::Triangular => data(["1", "0"], ["1/2", "1/2*r3"], &[["0", "0"]]),
        TilingId::Hexagonal => data(["3/2", "1/2*r3"], ["0", "r3"], &[["0", "0"], ["1", "0"]]),
        TilingId::ElongatedTriangular => {
            data(["1 + 1/2*r3", "1/2"], ["0", "1"], &[["0", "0"], ["1", "0"]])
        }
        TilingId::Trihexagonal => {
            data(["1", "r3"], ["0", "2*r3"], &[["0", "0"], ["1", "0"], ["3/2", "1/2*r3"]])
        }
        TilingId::SnubSquare => data(
            ["1 + r3", "0"],
            ["1/2 + 1/2*r3", "1/2 + 1/2*r3"],
            &[["0", "0"], ["r3", "0"], ["1/2*r3", "1/2"], ["1/2*r3", "-1/2"]],
        ),
        TilingId::TruncatedSquare => data(
            ["1 + r2", "0"],
            ["0", "1 + r2"],
            &[["0", "0"], ["1", "0"], ["1 + 1/2*r2", "1/2*r2"], ["1 + 1/2*r2", "-1/2*r2"]],
        ),
        TilingId::SnubHexagonal => data(["1/2", "3/2*r3"], ["2", "-r3"], &HEXAGON),
        TilingId::TruncatedHexagonal => data(
            ["3/2 + r3", "1 + 1/2*r3"],
            ["0", "2 + r3"],
            &[
                ["0", "0"],
                ["1", "0"],
                ["1 + 1/2*r3", "1/2"],
                ["1 + 1/2*r3", "-1/2"],
                ["3/2 + 1/2*r3", "1/2 + 1/2*r3"],
                ["3/2 + 1/2*r3", "-1/2 - 1/2*r3"],
            ],
        ),
        TilingId::Rhombitrihexagonal => {
            data(["3/2 + 1/2*r3", "-1/2 - 1/2*r3"], ["0", "1 + r3"], &HEXAGON)
        }
        TilingId::TruncatedTrihexagonal => data(
            ["3 + r3", "0"],
            ["3/2 + 1/2*r3", "3/2 + 3/2*r3"],
            &[
                ["0", "0"],
                ["1", "0"],
                ["0", "2 + r3"],
                ["1", "2 + r3"],
                ["1 + 1/2*r3", "1/2"],
                ["-1/2*r3", "1/2"],
                ["1 + 1/2*r3", "3/2 + r3"],
                ["-1/2*r3", "3/2 + r3"],
                ["3/2 + 1/2*r3", "1/2 + 1/2*r3"],
                ["-1/2 - 1/2*r3", "1/2 + 1/2*r3"],
                ["3/2 + 1/2*r3", "3/2 + 1/2*r3"],
                ["-1/2 - 1/2*r3", "3/2 + 1/2*r3"],
            ],
        ),
    }
}

/// Recorded `(k, det(Λ), k/det(Λ))` of a tiling, used only for checking.
pub fn expected_invariants(id: TilingId) -> (usize, &'static str, &'static str) {
    match id {
        TilingId::Square => (1, "1", "1"),
        TilingId::Triangular => (1, "1/2*r3", "2/3*r3"),
        TilingId::Hexagonal => (2, "3/2*r3", "4/9*r3"),
        TilingId::ElongatedTriangular => (2, "1 + 1/2*r3", "8 - 4*r3"),
        TilingId::Trihexagonal => (3, "2*r3", "1/2*r3"),
        TilingId::SnubSquare => (4, "2 + r3", "8 - 4*r3"),
        TilingId::TruncatedSquare => (4, "3 + 2*r2", "12 - 8*r2"),
        TilingId::SnubHexagonal => (6, "7/2*r3", "4/7*r3"),
        TilingId::TruncatedHexagonal => (6, "6 + 7/2*r3", "28*r3 - 48"),
        TilingId::Rhombitrihexagonal => (6, "3 + 2*r3", "4*r3 - 6"),
        TilingId::TruncatedTrihexagonal => (12, "9 + 6*r3", "8/3*r3 - 4"),
    }
}

/// A tiling's vertex set with its derived invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingRecord {
    pub id: TilingId,
    pub set: PeriodicSet,
    pub k: usize,
    pub det: QuadNum,
    pub coefficient: QuadNum,
}

/// The record of a tiling.
pub fn catalog(id: TilingId) -> TilingRecord {
    TilingRecord::from_data(id, &tiling_data(id)).expect("built-in tiling data is well formed")
}

/// All eleven records in the order of [`TilingId::ALL`].
pub fn all_records() -> Vec<TilingRecord> {
    TilingId::ALL.into_iter().map(catalog).collect()
}

impl TilingRecord {
    pub fn from_data(id: TilingId, data: &TilingData) -> Result<Self, Error> {
        let set = data.build()?;
        let k = set.k();
        let det = set.lattice().determinant();
        let coefficient = set.density();
        Ok(TilingRecord { id, set, k, det, coefficient })
    }

    /// Compares the derived quantities with the recorded ones and checks
    /// that every vertex has the expected number of unit-distance
    /// neighbours and none closer. Returns one message per failed check.
    pub fn validate(&self) -> Vec<String> {
        let mut failures = Vec::new();
        let (k, det, coef) = expected_invariants(self.id);
        let det: QuadNum = det.parse().expect("recorded value");
        let coef: QuadNum = coef.parse().expect("recorded value");
        if self.k != k {
            failures.push(format!("{}: k = {}, expected {k}", self.id, self.k));
        }
        if self.det != det {
            failures.push(format!("{}: det = {}, expected {det}", self.id, self.det));
        }
        if self.coefficient != coef {
            failures.push(format!("{}: coefficient = {}, expected {coef}", self.id, self.coefficient));
        }
        if &self.coefficient * &self.det != QuadNum::from_int(self.k as i64) {
            failures.push(format!("{}: coefficient * det != k", self.id));
        }
        if !self.set.contains_origin() {
            failures.push(format!("{}: no vertex at the origin", self.id));
        }
        let want = self.id.vertex_degree();
        for v in self.set.classes() {
            let (degree, too_close) = self.neighbourhood(v);
            if degree != want || too_close > 0 {
                failures.push(format!(
                    "{}: vertex {v} has {degree} unit neighbours and {too_close} closer points, expected {want} and 0",
                    self.id
                ));
            }
        }
        failures
    }

    /// Unit-distance neighbours of `v` and points at distance below one.
    fn neighbourhood(&self, v: &Point) -> (usize, usize) {
        let one = QuadNum::one();
        let around = ConvexPolygon::rect(&v.x - &one, &v.y - &one, &v.x + &one, &v.y + &one)
            .expect("unit box");
        let mut degree = 0;
        let mut close = 0;
        for p in self.set.enumerate_in_polygon(&around, Boundary::Closed) {
            let d = (&p - v).norm_sq();
            if d == one {
                degree += 1;
            } else if !d.is_zero() && d < one {
                close += 1;
            }
        }
        (degree, close)
    }

    /// Tiling vertices in the closed window, sorted.
    pub fn vertices_in_window(&self, window: &BBox) -> Result<Vec<Point>, Error> {
        Ok(self.set.enumerate_in_polygon(&window_polygon(window)?, Boundary::Closed))
    }

    /// Unit edges with at least one endpoint in the closed window. Each edge
    /// is listed once, as `(p, q)` with `p < q`, in sorted order.
    pub fn edges_in_window(&self, window: &BBox) -> Result<Vec<(Point, Point)>, Error> {
        let inner = self.vertices_in_window(window)?;
        let one = QuadNum::one();
        let padded = BBox {
            min_x: &window.min_x - &one,
            max_x: &window.max_x + &one,
            min_y: &window.min_y - &one,
            max_y: &window.max_y + &one,
        };
        let outer = self.vertices_in_window(&padded)?;
        let outer_f: Vec<(f64, f64)> = outer.iter().map(Point::to_f64).collect();
        let mut edges = BTreeSet::new();
        for p in &inner {
            let (px, py) = p.to_f64();
            for (q, &(qx, qy)) in outer.iter().zip(&outer_f) {
                if (px - qx).abs() > 1.001 || (py - qy).abs() > 1.001 {
                    continue;
                }
                if (q - p).norm_sq() == one {
                    edges.insert(if p < q { (p.clone(), q.clone()) } else { (q.clone(), p.clone()) });
                }
            }
        }
        Ok(edges.into_iter().collect())
    }

    pub fn table_row(&self) -> CatalogRow {
        CatalogRow {
            id: self.id.to_string(),
            name: self.id.cli_name(),
            k: self.k,
            det: ExactValue::new(&self.det),
            coefficient: ExactValue::new(&self.coefficient),
            bound: format!("floor(vol(D) * ({})) + 1", self.coefficient),
            criterion: self.set.criterion_check(),
        }
    }
}

fn window_polygon(w: &BBox) -> Result<ConvexPolygon, Error> {
    if w.min_x >= w.max_x || w.min_y >= w.max_y {
        return Err(Error::InvalidWindow(format!(
            "[{}, {}] x [{}, {}] has no interior",
            w.min_x, w.max_x, w.min_y, w.max_y
        )));
    }
    ConvexPolygon::rect(w.min_x.clone(), w.min_y.clone(), w.max_x.clone(), w.max_y.clone())
}

/// Vertices of a tiling in the closed window.
pub fn vertices_in_window(id: TilingId, window: &BBox) -> Result<Vec<Point>, Error> {
    catalog(id).vertices_in_window(window)
}

/// Unit edges of a tiling touching the closed window.
pub fn edges_in_window(id: TilingId, window: &BBox) -> Result<Vec<(Point, Point)>, Error> {
    catalog(id).edges_in_window(window)
}

/// One row of the Blichfeldt-type table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogRow {
    pub id: String,
    pub name: &'static str,
    pub k: usize,
    pub det: ExactValue,
    pub coefficient: ExactValue,
    pub bound: String,
    pub criterion: bool,
}

/// Rows for all eleven tilings.
pub fn table() -> Vec<CatalogRow> {
    all_records().iter().map(TilingRecord::table_row).collect()
}
