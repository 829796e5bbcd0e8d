//! Exact arrangement of polygon boundaries clipped to the unit square.
//!
//! Translate-count searches work in lattice coordinates, where one closed
//! fundamental cell is the unit square `S = [0, 1]²`. The arrangement holds
//!
//! * every polygon edge that meets `S`, plus the four edges of `S`;
//! * every vertex in `S`: polygon corners, corners of `S`, and all pairwise
//!   edge intersections;
//! * one sample point strictly inside every face, found by a vertical slab
//!   decomposition: between consecutive vertex abscissae no two edges cross
//!   inside `S`, so every face piece spans its slab and meets the slab's
//!   midline. Midpoints between consecutive edge intercepts on that line
//!   sample every face.
//!
//! Counts at face samples are propagated along each midline: crossing a
//! lower-chain edge upwards enters its polygon, crossing an upper-chain edge
//! leaves it.

use std::cmp::Ordering;
use std::collections::HashSet;

use rayon::prelude::*;

use crate::point::Point;
use crate::qfield::{QuadNum, Rat};
use crate::regions::{Boundary, ConvexPolygon};

const FILTER_EPS: f64 = 1e-7;

#[derive(Clone, Copy, Debug)]
struct FBox {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl FBox {
    fn of(pts: &[&Point]) -> FBox {
        let mut b = FBox { x0: f64::INFINITY, x1: f64::NEG_INFINITY, y0: f64::INFINITY, y1: f64::NEG_INFINITY };
        for p in pts {
            let (x, y) = p.to_f64();
            b.x0 = b.x0.min(x);
            b.x1 = b.x1.max(x);
            b.y0 = b.y0.min(y);
            b.y1 = b.y1.max(y);
        }
        b.x0 -= FILTER_EPS;
        b.y0 -= FILTER_EPS;
        b.x1 += FILTER_EPS;
        b.y1 += FILTER_EPS;
        b
    }

    fn overlaps(&self, o: &FBox) -> bool {
        self.x0 <= o.x1 && o.x0 <= self.x1 && self.y0 <= o.y1 && o.y0 <= self.y1
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        self.x0 <= x && x <= self.x1 && self.y0 <= y && y <= self.y1
    }
}

const UNIT_BOX: FBox = FBox { x0: -FILTER_EPS, x1: 1.0 + FILTER_EPS, y0: -FILTER_EPS, y1: 1.0 + FILTER_EPS };

/// A boundary edge of one of the arranged polygons (or of the window).
#[derive(Clone, Debug)]
pub struct Segment {
    pub start: Point,
    pub end: Point,
    /// Index of the owning polygon; `None` for window edges.
    pub owner: Option<usize>,
    /// Count change when the segment is crossed upwards.
    delta: i64,
    fbox: FBox,
}

impl Segment {
    fn new(start: Point, end: Point, owner: Option<usize>) -> Self {
        let dx = (&end.x - &start.x).sign();
        let delta = if owner.is_none() { 0 } else { dx as i64 };
        let fbox = FBox::of(&[&start, &end]);
        Segment { start, end, owner, delta, fbox }
    }

    fn is_vertical(&self) -> bool {
        self.start.x == self.end.x
    }

    fn x_range(&self) -> (&QuadNum, &QuadNum) {
        if self.start.x <= self.end.x {
            (&self.start.x, &self.end.x)
        } else {
            (&self.end.x, &self.start.x)
        }
    }

    /// Ordinate at abscissa `x`; the segment must not be vertical.
    fn y_at(&self, x: &QuadNum) -> QuadNum {
        let dx = &self.end.x - &self.start.x;
        let dy = &self.end.y - &self.start.y;
        let t = (x - &self.start.x).checked_div(&dx).expect("non-vertical segment");
        &self.start.y + &(&t * &dy)
    }
}

/// A point strictly inside a face, with the number of polygons covering it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSample {
    pub point: Point,
    pub count: usize,
}

/// Arrangement of the boundaries of `polygons`, restricted to `[0, 1]²`.
#[derive(Clone, Debug)]
pub struct Arrangement2 {
    pub polygons: Vec<ConvexPolygon>,
    pub segments: Vec<Segment>,
    pub vertices: Vec<Point>,
    pub face_samples: Vec<FaceSample>,
    poly_boxes: Vec<FBox>,
}

fn unit_square_corners() -> [Point; 4] {
    [Point::from_ints(0, 0), Point::from_ints(1, 0), Point::from_ints(1, 1), Point::from_ints(0, 1)]
}

fn in_unit_square(p: &Point) -> bool {
    let (x, y) = p.to_f64();
    if !UNIT_BOX.contains(x, y) {
        return false;
    }
    let zero = QuadNum::zero();
    let one = QuadNum::one();
    zero <= p.x && p.x <= one && zero <= p.y && p.y <= one
}

/// Intersection point of two non-parallel closed segments, if any.
fn intersect(s1: &Segment, s2: &Segment) -> Option<Point> {
    if !s1.fbox.overlaps(&s2.fbox) {
        return None;
    }
    let r = &s1.end - &s1.start;
    let s = &s2.end - &s2.start;
    let denom = r.cross(&s);
    let sd = denom.sign();
    if sd == 0 {
        return None;
    }
    let qp = &s2.start - &s1.start;
    let t_num = qp.cross(&s);
    let u_num = qp.cross(&r);
    let within = |num: &QuadNum| num.sign() * sd >= 0 && (&denom - num).sign() * sd >= 0;
    if !within(&t_num) || !within(&u_num) {
        return None;
    }
    let t = t_num.checked_div(&denom).expect("nonzero denominator");
    Some(&s1.start + &r.scale(&t))
}

impl Arrangement2 {
    /// Builds the arrangement. Face samples are computed only when
    /// `with_faces` is set.
    pub fn build(polygons: Vec<ConvexPolygon>, with_faces: bool) -> Self {
        let poly_boxes: Vec<FBox> = polygons
            .iter()
            .map(|p| FBox::of(&p.vertices().iter().collect::<Vec<_>>()))
            .collect();

        let mut segments: Vec<Segment> = Vec::new();
        for (j, poly) in polygons.iter().enumerate() {
            if !poly_boxes[j].overlaps(&UNIT_BOX) {
                continue;
            }
            for (a, b) in poly.edges() {
                let seg = Segment::new(a.clone(), b.clone(), Some(j));
                if seg.fbox.overlaps(&UNIT_BOX) {
                    segments.push(seg);
                }
            }
        }
        let corners = unit_square_corners();
        for i in 0..4 {
            segments.push(Segment::new(corners[i].clone(), corners[(i + 1) % 4].clone(), None));
        }

        let mut vertex_set: HashSet<Point> = corners.iter().cloned().collect();
        for poly in &polygons {
            for v in poly.vertices() {
                if in_unit_square(v) {
                    vertex_set.insert(v.clone());
                }
            }
        }
        let crossings: Vec<Vec<Point>> = (0..segments.len())
            .into_par_iter()
            .map(|i| {
                ((i + 1)..segments.len())
                    .filter_map(|j| intersect(&segments[i], &segments[j]))
                    .filter(in_unit_square)
                    .collect()
            })
            .collect();
        vertex_set.extend(crossings.into_iter().flatten());
        let mut vertices: Vec<Point> = vertex_set.into_iter().collect();
        vertices.sort();

        let mut arr = Arrangement2 { polygons, segments, vertices, face_samples: Vec::new(), poly_boxes };
        if with_faces {
            arr.face_samples = arr.sample_faces();
        }
        arr
    }

    /// Number of polygons containing `z`.
    pub fn count_at(&self, z: &Point, boundary: Boundary) -> usize {
        let (x, y) = z.to_f64();
        self.polygons
            .iter()
            .zip(&self.poly_boxes)
            .filter(|(poly, fb)| fb.contains(x, y) && poly.contains(z, boundary))
            .count()
    }

    fn sample_faces(&self) -> Vec<FaceSample> {
        let mut xs: Vec<QuadNum> = self.vertices.iter().map(|v| v.x.clone()).collect();
        xs.sort();
        xs.dedup();
        let half = Rat::new(1, 2);
        let slabs: Vec<Vec<FaceSample>> = xs
            .par_windows(2)
            .map(|w| {
                let (x0, x1) = (&w[0], &w[1]);
                let mid = (x0 + x1).scale(&half);
                let fm = mid.to_f64();
                let zero = QuadNum::zero();
                let one = QuadNum::one();
                let mut hits: Vec<(QuadNum, i64)> = self
                    .segments
                    .iter()
                    .filter(|s| !s.is_vertical() && s.fbox.x0 <= fm && fm <= s.fbox.x1)
                    .filter(|s| {
                        let (lo, hi) = s.x_range();
                        lo <= x0 && hi >= x1
                    })
                    .map(|s| (s.y_at(&mid), s.delta))
                    .filter(|(y, _)| &zero <= y && y <= &one)
                    .collect();
                hits.sort_by(|a, b| a.0.cmp(&b.0));
                // group equal intercepts
                let mut levels: Vec<(QuadNum, i64)> = Vec::new();
                for (y, d) in hits {
                    match levels.last_mut() {
                        Some((ly, ld)) if (*ly).cmp(&y) == Ordering::Equal => *ld += d,
                        _ => levels.push((y, d)),
                    }
                }
                let mut out = Vec::with_capacity(levels.len().saturating_sub(1));
                let mut count: Option<i64> = None;
                for pair in levels.windows(2) {
                    let point = Point::new(mid.clone(), pair[0].0.midpoint(&pair[1].0));
                    let c = match count {
                        None => self.count_at(&point, Boundary::Open) as i64,
                        Some(c) => c + pair[0].1,
                    };
                    debug_assert_eq!(c as usize, self.count_at(&point, Boundary::Open));
                    count = Some(c);
                    out.push(FaceSample { point, count: c as usize });
                }
                out
            })
            .collect();
        slabs.into_iter().flatten().collect()
    }
}
