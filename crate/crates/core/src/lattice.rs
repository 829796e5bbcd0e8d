//! Full-rank planar lattices `B·Z²`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::point::Point;
use crate::qfield::{QuadNum, Rat};
use crate::regions::ConvexPolygon;
use crate::Error;

/// The lattice spanned by the columns `b1`, `b2` of a basis matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice2 {
    b1: Point,
    b2: Point,
    /// `b1.x·b2.y − b1.y·b2.x`, nonzero.
    signed_det: QuadNum,
    inv_det: QuadNum,
}

/// Coordinates of a point relative to the basis: `p = alpha·b1 + beta·b2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticeCoords {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub alpha: QuadNum,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub beta: QuadNum,
}

impl LatticeCoords {
    pub fn is_integral(&self) -> bool {
        self.alpha.is_integer() && self.beta.is_integer()
    }

    pub fn as_point(&self) -> Point {
        Point::new(self.alpha.clone(), self.beta.clone())
    }
}

impl Lattice2 {
    pub fn new(b1: Point, b2: Point) -> Result<Self, Error> {
        let signed_det = b1.cross(&b2);
        let inv_det = signed_det.inverse().map_err(|_| Error::DegenerateLattice)?;
        Ok(Lattice2 { b1, b2, signed_det, inv_det })
    }

    /// The integer lattice Z².
    pub fn integer() -> Self {
        Lattice2::new(Point::from_ints(1, 0), Point::from_ints(0, 1)).expect("unit basis")
    }

    pub fn b1(&self) -> &Point {
        &self.b1
    }

    pub fn b2(&self) -> &Point {
        &self.b2
    }

    pub fn signed_determinant(&self) -> &QuadNum {
        &self.signed_det
    }

    /// `|det B|`, the area of a fundamental cell.
    pub fn determinant(&self) -> QuadNum {
        self.signed_det.abs()
    }

    /// Exact Cramer solve of `B·t = p`.
    pub fn coords(&self, p: &Point) -> LatticeCoords {
        let alpha = &(&p.x * &self.b2.y - &p.y * &self.b2.x) * &self.inv_det;
        let beta = &(&self.b1.x * &p.y - &self.b1.y * &p.x) * &self.inv_det;
        LatticeCoords { alpha, beta }
    }

    /// `alpha·b1 + beta·b2`.
    pub fn point_at(&self, alpha: &QuadNum, beta: &QuadNum) -> Point {
        &self.b1.scale(alpha) + &self.b2.scale(beta)
    }

    pub fn point_at_coords(&self, c: &LatticeCoords) -> Point {
        self.point_at(&c.alpha, &c.beta)
    }

    /// `m·b1 + n·b2` for integers.
    pub fn lattice_point(&self, m: &BigInt, n: &BigInt) -> Point {
        let m = QuadNum::from_rat(Rat::from_bigint(m.clone()));
        let n = QuadNum::from_rat(Rat::from_bigint(n.clone()));
        self.point_at(&m, &n)
    }

    pub fn member(&self, p: &Point) -> bool {
        self.coords(p).is_integral()
    }

    /// Representative of `p + Λ` in the half-open cell `{m1·b1 + m2·b2 : 0 <= m_i < 1}`.
    pub fn canonical_rep(&self, p: &Point) -> Point {
        let c = self.coords(p);
        self.point_at(&c.alpha.fract(), &c.beta.fract())
    }

    /// Canonical representative together with its coordinates in `[0, 1)²`.
    pub fn canonical_coords(&self, p: &Point) -> LatticeCoords {
        let c = self.coords(p);
        LatticeCoords { alpha: c.alpha.fract(), beta: c.beta.fract() }
    }

    /// The closed parallelogram `0, b1, b1 + b2, b2`, counter-clockwise.
    pub fn fundamental_cell(&self) -> ConvexPolygon {
        let o = Point::origin();
        let far = &self.b1 + &self.b2;
        let verts = if self.signed_det.sign() > 0 {
            vec![o, self.b1.clone(), far, self.b2.clone()]
        } else {
            vec![o, self.b2.clone(), far, self.b1.clone()]
        };
        ConvexPolygon::new(verts).expect("full-rank cell is strictly convex")
    }

    /// Same lattice with basis `{b1 + b2, b2}`.
    pub fn sheared(&self) -> Lattice2 {
        Lattice2::new(&self.b1 + &self.b2, self.b2.clone()).expect("unimodular change of basis")
    }
}
