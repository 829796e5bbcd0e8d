//! Blichfeldt, Minkowski-type, covering and difference-body checks.
//!
//! The count `g(z) = #((z + D) ∩ V)` is Λ-periodic, so every translate
//! search runs over one closed fundamental cell. In lattice coordinates that
//! cell is the unit square `S`, and `z' ∈ v' − D'` exactly when `v ∈ z + D`.
//! The search arranges the polygons `v' − D'` for every window point `v'`
//! whose polygon meets `S` (see [`crate::arrangement`]):
//!
//! * for closed `D`, `g` is upper semicontinuous and its maximum sits on an
//!   arrangement vertex;
//! * the minimum over closed `D` is attained on an open face, and for open
//!   `D` possibly also on a vertex, so both candidate sets are evaluated.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::Arrangement2;
use crate::lattice::Lattice2;
use crate::periodic::PeriodicSet;
use crate::point::Point;
use crate::qfield::{QuadNum, Rat};
use crate::regions::{Boundary, ConvexPolygon, PolygonJson};
use crate::report::{ExactPoint, ExactValue, Status};
use crate::Error;

/// Name of the face enumeration used by minimum searches.
pub const FACE_METHOD: &str = "vertical slab decomposition";

/// A translate `z` together with the points of `V` in `z + D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountWitness {
    pub z: Point,
    pub count: usize,
    pub points: Vec<Point>,
}

/// Size of the arrangement behind a translate search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub method: &'static str,
    pub window_points: usize,
    pub segments: usize,
    pub vertices: usize,
    pub face_samples: usize,
}

/// Arrangement of all `v' − D'` meeting the unit cell, in lattice coordinates.
pub struct TranslateSearch<'a> {
    set: &'a PeriodicSet,
    shape: ConvexPolygon,
    arrangement: Arrangement2,
}

impl<'a> TranslateSearch<'a> {
    pub fn new(set: &'a PeriodicSet, d: &ConvexPolygon, with_faces: bool) -> Self {
        let lattice = set.lattice();
        let local = ConvexPolygon::from_vertices(
            d.vertices().iter().map(|v| lattice.coords(v).as_point()).collect(),
        )
        .expect("a linear bijection keeps the polygon strictly convex");
        let bb = local.bbox();
        let reflected = local.reflect();
        let one = QuadNum::one();
        let mut polygons = Vec::new();
        for c in set.class_coords() {
            // v'.x ranges over [min_x, 1 + max_x] so that v' − D' meets S
            let (m_lo, m_hi) = ((&bb.min_x - &c.alpha).ceil(), (&(&one + &bb.max_x) - &c.alpha).floor());
            let (n_lo, n_hi) = ((&bb.min_y - &c.beta).ceil(), (&(&one + &bb.max_y) - &c.beta).floor());
            let mut m = m_lo;
            while m <= m_hi {
                let mut n = n_lo.clone();
                while n <= n_hi {
                    let v = Point::new(&c.alpha + &int(&m), &c.beta + &int(&n));
                    polygons.push(reflected.translate(&v));
                    n += 1;
                }
                m += 1;
            }
        }
        let arrangement = Arrangement2::build(polygons, with_faces);
        TranslateSearch { set, shape: d.clone(), arrangement }
    }

    pub fn stats(&self) -> SearchStats {
        SearchStats {
            method: FACE_METHOD,
            window_points: self.arrangement.polygons.len(),
            segments: self.arrangement.segments.len(),
            vertices: self.arrangement.vertices.len(),
            face_samples: self.arrangement.face_samples.len(),
        }
    }

    /// Largest closed count, attained at an arrangement vertex.
    pub fn maximum(&self) -> Result<CountWitness, Error> {
        let counts: Vec<usize> = self
            .arrangement
            .vertices
            .par_iter()
            .map(|z| self.arrangement.count_at(z, Boundary::Closed))
            .collect();
        let best = *counts.iter().max().expect("the cell corners are always vertices");
        let candidates = self.arrangement.vertices.iter().zip(&counts).filter(|(_, &c)| c == best);
        self.witness(candidates.map(|(z, _)| z), best, Boundary::Closed)
    }

    /// Smallest count over all translates; needs face samples.
    pub fn minimum(&self, boundary: Boundary) -> Result<CountWitness, Error> {
        let mut cands: Vec<(&Point, usize)> =
            self.arrangement.face_samples.iter().map(|f| (&f.point, f.count)).collect();
        if boundary == Boundary::Open {
            let at_vertices: Vec<usize> = self
                .arrangement
                .vertices
                .par_iter()
                .map(|z| self.arrangement.count_at(z, Boundary::Open))
                .collect();
            cands.extend(self.arrangement.vertices.iter().zip(at_vertices));
        }
        let best = cands
            .iter()
            .map(|c| c.1)
            .min()
            .ok_or_else(|| Error::Internal("arrangement produced no face samples".into()))?;
        self.witness(cands.into_iter().filter(|c| c.1 == best).map(|c| c.0), best, boundary)
    }

    fn lattice(&self) -> &Lattice2 {
        self.set.lattice()
    }

    fn witness<'p>(
        &self,
        local: impl Iterator<Item = &'p Point>,
        count: usize,
        boundary: Boundary,
    ) -> Result<CountWitness, Error> {
        let z = local
            .map(|zl| self.lattice().point_at(&zl.x, &zl.y))
            .min()
            .expect("at least one candidate");
        let points = self.set.enumerate_in_polygon(&self.shape.translate(&z), boundary);
        if points.len() != count {
            return Err(Error::Internal(format!(
                "arrangement count {count} disagrees with enumeration {} at z = {z}",
                points.len()
            )));
        }
        Ok(CountWitness { z, count, points })
    }
}

fn int(n: &BigInt) -> QuadNum {
    QuadNum::from_rat(Rat::from_bigint(n.clone()))
}

fn require_positive_area(d: &ConvexPolygon) -> Result<(), Error> {
    if d.area().sign() <= 0 {
        return Err(Error::NonPositive("polygon area"));
    }
    Ok(())
}

/// `⌊vol · k / det(Λ)⌋ + 1`.
pub fn blichfeldt_bound(set: &PeriodicSet, vol: &QuadNum) -> Result<u64, Error> {
    if vol.sign() <= 0 {
        return Err(Error::NonPositive("volume"));
    }
    let b: BigInt = (vol * &set.density()).floor() + 1;
    b.to_u64().ok_or_else(|| Error::Internal(format!("bound {b} does not fit in 64 bits")))
}

/// A translate of closed `D` holding as many points of `V` as possible.
pub fn max_translate_count(set: &PeriodicSet, d: &ConvexPolygon) -> Result<CountWitness, Error> {
    require_positive_area(d)?;
    TranslateSearch::new(set, d, false).maximum()
}

/// A translate of `D` holding as few points of `V` as possible.
pub fn min_translate_count(
    set: &PeriodicSet,
    d: &ConvexPolygon,
    boundary: Boundary,
) -> Result<CountWitness, Error> {
    require_positive_area(d)?;
    TranslateSearch::new(set, d, true).minimum(boundary)
}

/// `det(Λ) / k`: no region of smaller area covers the plane with `V`.
pub fn covering_volume_bound(set: &PeriodicSet) -> QuadNum {
    set.density().inverse().expect("density is positive")
}

/// The fundamental cell scaled about the origin by `1 − eps`.
pub fn shrunk_cell(lattice: &Lattice2, eps: &Rat) -> Result<ConvexPolygon, Error> {
    let factor = QuadNum::from_rat(&Rat::one() - eps);
    lattice.fundamental_cell().scale(&factor)
}

/// Cells `P` of `{b1, b2}` and `Q` of `{b1 + b2, b2}`, both scaled by `s`.
pub fn canonical_cells(lattice: &Lattice2, s: &Rat) -> Result<(ConvexPolygon, ConvexPolygon), Error> {
    let factor = QuadNum::from_rat(s.clone());
    Ok((
        lattice.fundamental_cell().scale(&factor)?,
        lattice.sheared().fundamental_cell().scale(&factor)?,
    ))
}

/// Largest of `1/10, 1/100, 1/1000` with `⌊(1 − ε)² k⌋ = k − 1`.
pub fn tightness_epsilon(k: usize) -> Option<Rat> {
    let k_rat = Rat::from_int(k as i64);
    [10, 100, 1000].into_iter().map(|d| Rat::new(1, d)).find(|eps| {
        let s = &Rat::one() - eps;
        (&(&s * &s) * &k_rat).floor() == BigInt::from(k) - 1
    })
}

fn ensure_ell(ell: u64) -> Result<(), Error> {
    if ell < 1 {
        return Err(Error::InvalidEll);
    }
    Ok(())
}

fn status(hypotheses: bool, conclusions: bool) -> Status {
    match (hypotheses, conclusions) {
        (false, _) => Status::HypothesisNotMet,
        (true, true) => Status::Verified,
        (true, false) => Status::Falsified,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlichfeldtReport {
    pub area: ExactValue,
    pub density: ExactValue,
    pub bound: u64,
    pub max_count: usize,
    pub witness: ExactPoint,
    pub points: Vec<ExactPoint>,
    pub search: SearchStats,
    pub status: Status,
}

/// Some translate of closed `D` must hold `blichfeldt_bound` points.
pub fn blichfeldt_check(set: &PeriodicSet, d: &ConvexPolygon) -> Result<BlichfeldtReport, Error> {
    require_positive_area(d)?;
    let area = d.area();
    let bound = blichfeldt_bound(set, &area)?;
    let search = TranslateSearch::new(set, d, false);
    let w = search.maximum()?;
    Ok(BlichfeldtReport {
        area: ExactValue::new(&area),
        density: ExactValue::new(&set.density()),
        bound,
        max_count: w.count,
        witness: (&w.z).into(),
        points: w.points.iter().map(ExactPoint::from).collect(),
        search: search.stats(),
        status: status(true, w.count as u64 >= bound),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TightnessReport {
    pub k: usize,
    pub epsilon: String,
    pub area: ExactValue,
    pub bound: u64,
    pub max_count: usize,
    pub witness: ExactPoint,
    pub tight: bool,
}

/// For the shrunk cell the bound is exactly `k` and no translate holds more.
pub fn tightness_check(set: &PeriodicSet) -> Result<TightnessReport, Error> {
    let k = set.k();
    let eps = tightness_epsilon(k)
        .ok_or_else(|| Error::Internal(format!("no admissible epsilon for k = {k}")))?;
    let d = shrunk_cell(set.lattice(), &eps)?;
    let area = d.area();
    let bound = blichfeldt_bound(set, &area)?;
    let w = max_translate_count(set, &d)?;
    Ok(TightnessReport {
        k,
        epsilon: eps.to_string(),
        area: ExactValue::new(&area),
        bound,
        max_count: w.count,
        witness: (&w.z).into(),
        tight: bound == k as u64 && w.count == k,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MinkowskiReport {
    pub ell: u64,
    pub o_symmetric: bool,
    pub area: ExactValue,
    pub required_area: ExactValue,
    pub area_ok: bool,
    pub hypotheses_hold: bool,
    pub difference_count: usize,
    pub difference_required: u64,
    pub part_i_ok: bool,
    pub criterion: bool,
    pub set_count: Option<usize>,
    pub set_required: u64,
    pub part_ii_ok: Option<bool>,
    pub status: Status,
}

/// An o-symmetric `K` of area at least `4ℓ·det(Λ)/k` holds `2ℓ + 1` points
/// of `V − V`, and `ℓ + 1` points of `V` when `V − V = V ∪ (−V)`.
pub fn minkowski_check(set: &PeriodicSet, k: &ConvexPolygon, ell: u64) -> Result<MinkowskiReport, Error> {
    ensure_ell(ell)?;
    let area = k.area();
    let required = covering_volume_bound(set).scale(&Rat::from_int(4 * ell as i64));
    let o_symmetric = k.is_o_symmetric();
    let area_ok = area >= required;
    let hypotheses_hold = o_symmetric && area_ok;

    let difference_count = set.difference_set().enumerate_in_polygon(k, Boundary::Closed).len();
    let part_i_ok = difference_count as u64 > 2 * ell;
    let criterion = set.criterion_check();
    let set_count = criterion.then(|| set.enumerate_in_polygon(k, Boundary::Closed).len());
    let part_ii_ok = set_count.map(|c| c as u64 > ell);

    Ok(MinkowskiReport {
        ell,
        o_symmetric,
        area: ExactValue::new(&area),
        required_area: ExactValue::new(&required),
        area_ok,
        hypotheses_hold,
        difference_count,
        difference_required: 2 * ell + 1,
        part_i_ok,
        criterion,
        set_count,
        set_required: ell + 1,
        part_ii_ok,
        status: status(hypotheses_hold, part_i_ok && part_ii_ok.unwrap_or(true)),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CoveringReport {
    pub boundary: Boundary,
    pub covering: bool,
    pub min_count: usize,
    /// A translate `z` with the fewest points of `V` in `z − D`; when the
    /// count is zero, `z` is a point outside `D + V`.
    pub least_covered: ExactPoint,
    pub area: ExactValue,
    pub volume_bound: ExactValue,
    pub area_ok: bool,
    pub search: SearchStats,
    pub status: Status,
}

/// Decides `D + V = R²` through `min_translate_count(V, −D) ≥ 1`.
pub fn covering_check(set: &PeriodicSet, d: &ConvexPolygon, boundary: Boundary) -> Result<CoveringReport, Error> {
    require_positive_area(d)?;
    let search = TranslateSearch::new(set, &d.reflect(), true);
    let w = search.minimum(boundary)?;
    let area = d.area();
    let bound = covering_volume_bound(set);
    let covering = w.count >= 1;
    let area_ok = area >= bound;
    Ok(CoveringReport {
        boundary,
        covering,
        min_count: w.count,
        least_covered: (&w.z).into(),
        area: ExactValue::new(&area),
        volume_bound: ExactValue::new(&bound),
        area_ok,
        search: search.stats(),
        status: status(covering, area_ok),
    })
}

/// Whether `D + V = R²`. A covering with area below `det(Λ)/k` is
/// reported as [`Error::Falsified`].
pub fn is_covering(set: &PeriodicSet, d: &ConvexPolygon, boundary: Boundary) -> Result<bool, Error> {
    let r = covering_check(set, d, boundary)?;
    if r.status == Status::Falsified {
        return Err(Error::Falsified(format!(
            "covering region of area {} below det/k = {}",
            r.area.exact, r.volume_bound.exact
        )));
    }
    Ok(r.covering)
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem5Report {
    pub ell: u64,
    pub area_sum: ExactValue,
    pub required_area: ExactValue,
    pub area_ok: bool,
    pub max_count_d1: usize,
    pub max_count_d2: usize,
    pub max_counts_ok: bool,
    pub hypotheses_hold: bool,
    pub difference_body: PolygonJson,
    pub conclusion_min: usize,
    pub conclusion_witness: ExactPoint,
    pub conclusion_ok: bool,
    /// Fewest points of `V` itself in a translate of `D1 − D2`.
    pub set_min: usize,
    pub set_min_witness: ExactPoint,
    pub search: SearchStats,
    pub status: Status,
}

/// If `area(D1) + area(D2) > ℓ·det(Λ)/k` and no translate of either `D_i`
/// holds more than `ℓ` points, every translate of `D1 − D2` holds at least
/// `ℓ` points of `V − V`. All sets are closed.
pub fn theorem5_verify(
    set: &PeriodicSet,
    d1: &ConvexPolygon,
    d2: &ConvexPolygon,
    ell: u64,
) -> Result<Theorem5Report, Error> {
    ensure_ell(ell)?;
    require_positive_area(d1)?;
    require_positive_area(d2)?;
    let area_sum = &d1.area() + &d2.area();
    let required = covering_volume_bound(set).scale(&Rat::from_int(ell as i64));
    let area_ok = area_sum > required;
    let max1 = max_translate_count(set, d1)?.count;
    let max2 = max_translate_count(set, d2)?.count;
    let max_counts_ok = max1 as u64 <= ell && max2 as u64 <= ell;
    let hypotheses_hold = area_ok && max_counts_ok;

    let body = d1.difference_body(d2);
    let diff = set.difference_set();
    let search = TranslateSearch::new(&diff, &body, true);
    let conclusion = search.minimum(Boundary::Closed)?;
    let conclusion_ok = conclusion.count as u64 >= ell;
    let own = min_translate_count(set, &body, Boundary::Closed)?;

    Ok(Theorem5Report {
        ell,
        area_sum: ExactValue::new(&area_sum),
        required_area: ExactValue::new(&required),
        area_ok,
        max_count_d1: max1,
        max_count_d2: max2,
        max_counts_ok,
        hypotheses_hold,
        difference_body: body.to_json(),
        conclusion_min: conclusion.count,
        conclusion_witness: (&conclusion.z).into(),
        conclusion_ok,
        set_min: own.count,
        set_min_witness: (&own.z).into(),
        search: search.stats(),
        status: status(hypotheses_hold, conclusion_ok),
    })
}
