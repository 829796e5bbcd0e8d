//! Discrete lattice-periodic sets `v_1 + Λ ∪ … ∪ v_k + Λ`.

use std::collections::HashSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::lattice::{Lattice2, LatticeCoords};
use crate::point::Point;
use crate::qfield::{QuadNum, Rat};
use crate::regions::{Boundary, ConvexPolygon};
use crate::Error;

/// A finite union of translates of one lattice, stored minimally: one
/// canonical representative per class, no two classes congruent mod Λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicSet {
    lattice: Lattice2,
    classes: Vec<Point>,
    coords: Vec<LatticeCoords>,
}

impl PeriodicSet {
    /// Reduces every translate into the half-open cell, drops repeats and
    /// orders the classes by their `(alpha, beta)` coordinates.
    pub fn new(lattice: Lattice2, translates: &[Point]) -> Result<Self, Error> {
        if translates.is_empty() {
            return Err(Error::EmptyTranslates);
        }
        let mut seen = HashSet::new();
        let mut coords: Vec<LatticeCoords> = translates
            .iter()
            .map(|t| lattice.canonical_coords(t))
            .filter(|c| seen.insert(c.clone()))
            .collect();
        coords.sort();
        let classes = coords.iter().map(|c| lattice.point_at_coords(c)).collect();
        Ok(PeriodicSet { lattice, classes, coords })
    }

    /// The lattice itself (one class, the origin).
    pub fn from_lattice(lattice: Lattice2) -> Self {
        PeriodicSet::new(lattice, &[Point::origin()]).expect("nonempty")
    }

    pub fn lattice(&self) -> &Lattice2 {
        &self.lattice
    }

    pub fn classes(&self) -> &[Point] {
        &self.classes
    }

    /// Class representatives in lattice coordinates, each in `[0, 1)²`.
    pub fn class_coords(&self) -> &[LatticeCoords] {
        &self.coords
    }

    /// Number of classes.
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn contains_origin(&self) -> bool {
        self.classes.iter().any(Point::is_origin)
    }

    /// Membership of an arbitrary point.
    pub fn member(&self, p: &Point) -> bool {
        let c = self.lattice.canonical_coords(p);
        self.coords.contains(&c)
    }

    /// `V − V`: classes of all `v_i − v_j`.
    pub fn difference_set(&self) -> PeriodicSet {
        let diffs: Vec<Point> = self
            .classes
            .iter()
            .flat_map(|a| self.classes.iter().map(move |b| a - b))
            .collect();
        PeriodicSet::new(self.lattice.clone(), &diffs).expect("k >= 1")
    }

    /// `V ∪ (−V)`.
    pub fn symmetric_union(&self) -> PeriodicSet {
        let pts: Vec<Point> = self.classes.iter().flat_map(|v| [v.clone(), -v]).collect();
        PeriodicSet::new(self.lattice.clone(), &pts).expect("k >= 1")
    }

    /// Class-set equality; both sets must use the identical basis.
    pub fn set_equals(&self, other: &PeriodicSet) -> Result<bool, Error> {
        if self.lattice.b1() != other.lattice.b1() || self.lattice.b2() != other.lattice.b2() {
            return Err(Error::LatticeMismatch);
        }
        Ok(self.coords == other.coords)
    }

    /// Whether `V − V = V ∪ (−V)`.
    pub fn criterion_check(&self) -> bool {
        self.difference_set()
            .set_equals(&self.symmetric_union())
            .expect("same lattice")
    }

    /// The same criterion checked pairwise: every `v_i − v_j` lies in some
    /// `±v_t + Λ`.
    pub fn criterion_pairwise(&self) -> bool {
        self.classes.iter().all(|a| {
            self.classes.iter().all(|b| {
                let d = a - b;
                self.classes.iter().any(|t| {
                    self.lattice.member(&(&d - t)) || self.lattice.member(&(&d + t))
                })
            })
        })
    }

    /// `k / det(Λ)`, points per unit area.
    pub fn density(&self) -> QuadNum {
        self.lattice
            .determinant()
            .inverse()
            .expect("full rank")
            .scale(&Rat::from_int(self.k() as i64))
    }

    /// All points of the set in `D` (closed) or its interior (open),
    /// lexicographically sorted.
    pub fn enumerate_in_polygon(&self, d: &ConvexPolygon, boundary: Boundary) -> Vec<Point> {
        let shape: Vec<LatticeCoords> = d.vertices().iter().map(|v| self.lattice.coords(v)).collect();
        let per_class: Vec<Vec<Point>> = self
            .coords
            .par_iter()
            .zip(self.classes.par_iter())
            .map(|(c, v)| {
                let (m_lo, m_hi) = integer_span(shape.iter().map(|s| &s.alpha), &c.alpha);
                let (n_lo, n_hi) = integer_span(shape.iter().map(|s| &s.beta), &c.beta);
                let mut found = Vec::new();
                let mut m = m_lo;
                while m <= m_hi {
                    let mut n = n_lo.clone();
                    while n <= n_hi {
                        let p = v + &self.lattice.lattice_point(&m, &n);
                        if d.contains(&p, boundary) {
                            found.push(p);
                        }
                        n += 1;
                    }
                    m += 1;
                }
                found
            })
            .collect();
        let mut all: Vec<Point> = per_class.into_iter().flatten().collect();
        all.sort();
        all
    }
}

/// Integers `m` with `min(vals) <= offset + m <= max(vals)`.
fn integer_span<'a>(vals: impl Iterator<Item = &'a QuadNum>, offset: &QuadNum) -> (BigInt, BigInt) {
    let vals: Vec<&QuadNum> = vals.collect();
    let lo = vals.iter().copied().min().expect("polygon has vertices");
    let hi = vals.iter().copied().max().expect("polygon has vertices");
    ((lo - offset).ceil(), (hi - offset).floor())
}
