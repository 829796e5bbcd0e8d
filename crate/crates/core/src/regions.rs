//! Exact closed convex polygons.

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::point::Point;
use crate::qfield::{QuadNum, Rat};
use crate::Error;

/// Whether a region includes its boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Closed,
    Open,
}

/// A strictly convex polygon with counter-clockwise vertices.
///
/// The vertex list starts at the lowest (then leftmost) vertex, so two
/// polygons with the same vertex set compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

/// Exact axis-aligned bounding box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BBox {
    pub min_x: QuadNum,
    pub max_x: QuadNum,
    pub min_y: QuadNum,
    pub max_y: QuadNum,
}

impl BBox {
    pub fn of<'a>(pts: impl IntoIterator<Item = &'a Point>) -> Option<BBox> {
        let mut it = pts.into_iter();
        let first = it.next()?;
        let mut b = BBox {
            min_x: first.x.clone(),
            max_x: first.x.clone(),
            min_y: first.y.clone(),
            max_y: first.y.clone(),
        };
        for p in it {
            if p.x < b.min_x {
                b.min_x = p.x.clone();
            }
            if p.x > b.max_x {
                b.max_x = p.x.clone();
            }
            if p.y < b.min_y {
                b.min_y = p.y.clone();
            }
            if p.y > b.max_y {
                b.max_y = p.y.clone();
            }
        }
        Some(b)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.min_x <= p.x && p.x <= self.max_x && self.min_y <= p.y && p.y <= self.max_y
    }
}

fn lowest_first(mut v: Vec<Point>) -> Vec<Point> {
    let start = (0..v.len())
        .min_by(|&i, &j| v[i].y.cmp(&v[j].y).then_with(|| v[i].x.cmp(&v[j].x)))
        .unwrap_or(0);
    v.rotate_left(start);
    v
}

/// Half-plane index used for polar ordering of edge directions.
fn half(v: &Point) -> u8 {
    let sy = v.y.sign();
    if sy > 0 || (sy == 0 && v.x.sign() > 0) {
        0
    } else {
        1
    }
}

/// Polar-angle order of nonzero vectors, angles taken in `[0, 2π)`.
fn polar_cmp(u: &Point, v: &Point) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| 0.cmp(&u.cross(v).sign()))
}

impl ConvexPolygon {
    /// Validates a counter-clockwise, strictly convex vertex list.
    pub fn new(vertices: Vec<Point>) -> Result<Self, Error> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!("{n} vertices, need at least 3")));
        }
        let distinct: HashSet<&Point> = vertices.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidPolygon("duplicate vertices".into()));
        }
        for i in 0..n {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % n];
            for (j, c) in vertices.iter().enumerate() {
                if j == i || j == (i + 1) % n {
                    continue;
                }
                if Point::orient(a, b, c) <= 0 {
                    return Err(Error::InvalidPolygon(format!(
                        "not strictly convex and counter-clockwise at edge {a} -> {b}"
                    )));
                }
            }
        }
        Ok(ConvexPolygon { vertices: lowest_first(vertices) })
    }

    /// Accepts either orientation.
    pub fn from_vertices(mut vertices: Vec<Point>) -> Result<Self, Error> {
        if vertices.len() >= 3 && signed_area2(&vertices).sign() < 0 {
            vertices.reverse();
        }
        Self::new(vertices)
    }

    /// Convex hull of a point set; collinear and interior points are dropped.
    pub fn hull(points: &[Point]) -> Result<Self, Error> {
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() < 3 {
            return Err(Error::InvalidPolygon("hull needs three distinct points".into()));
        }
        let mut lower: Vec<Point> = Vec::new();
        for p in &pts {
            while lower.len() >= 2 && Point::orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<Point> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2 && Point::orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        if lower.len() < 3 {
            return Err(Error::InvalidPolygon("points are collinear".into()));
        }
        Self::new(lower)
    }

    /// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
    pub fn rect(x0: QuadNum, y0: QuadNum, x1: QuadNum, y1: QuadNum) -> Result<Self, Error> {
        Self::new(vec![
            Point::new(x0.clone(), y0.clone()),
            Point::new(x1.clone(), y0),
            Point::new(x1, y1.clone()),
            Point::new(x0, y1),
        ])
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as `(start, end)` pairs in counter-clockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> QuadNum {
        signed_area2(&self.vertices).scale(&Rat::new(1, 2))
    }

    pub fn contains(&self, p: &Point, boundary: Boundary) -> bool {
        self.edges().all(|(a, b)| {
            let s = Point::orient(a, b, p);
            match boundary {
                Boundary::Closed => s >= 0,
                Boundary::Open => s > 0,
            }
        })
    }

    pub fn bbox(&self) -> BBox {
        BBox::of(&self.vertices).expect("nonempty")
    }

    pub fn translate(&self, z: &Point) -> ConvexPolygon {
        ConvexPolygon { vertices: self.vertices.iter().map(|v| v + z).collect() }
    }

    /// Scaling about the origin by `s > 0`.
    pub fn scale(&self, s: &QuadNum) -> Result<ConvexPolygon, Error> {
        if s.sign() <= 0 {
            return Err(Error::NonPositive("scale factor"));
        }
        Ok(ConvexPolygon { vertices: self.vertices.iter().map(|v| v.scale(s)).collect() })
    }

    /// `−D`.
    pub fn reflect(&self) -> ConvexPolygon {
        ConvexPolygon { vertices: lowest_first(self.vertices.iter().map(|v| -v).collect()) }
    }

    pub fn is_o_symmetric(&self) -> bool {
        let set: HashSet<&Point> = self.vertices.iter().collect();
        self.vertices.iter().all(|v| set.contains(&-v))
    }

    /// `A + B` by merging the edge sequences in polar order; parallel edges
    /// are fused so the result stays strictly convex.
    pub fn minkowski_sum(&self, other: &ConvexPolygon) -> ConvexPolygon {
        let ea = edge_vectors(&self.vertices);
        let eb = edge_vectors(&other.vertices);
        let (mut i, mut j) = (0, 0);
        let mut cur = &self.vertices[0] + &other.vertices[0];
        let mut out = Vec::with_capacity(ea.len() + eb.len());
        while i < ea.len() || j < eb.len() {
            out.push(cur.clone());
            let step = if i == ea.len() {
                j += 1;
                eb[j - 1].clone()
            } else if j == eb.len() {
                i += 1;
                ea[i - 1].clone()
            } else {
                match polar_cmp(&ea[i], &eb[j]) {
                    Ordering::Less => {
                        i += 1;
                        ea[i - 1].clone()
                    }
                    Ordering::Greater => {
                        j += 1;
                        eb[j - 1].clone()
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        &ea[i - 1] + &eb[j - 1]
                    }
                }
            };
            cur = &cur + &step;
        }
        ConvexPolygon::new(out).expect("Minkowski sum of convex polygons is convex")
    }

    /// `A − B = A + (−B)`.
    pub fn difference_body(&self, other: &ConvexPolygon) -> ConvexPolygon {
        self.minkowski_sum(&other.reflect())
    }

    pub fn to_json(&self) -> PolygonJson {
        PolygonJson {
            vertices: self.vertices.iter().map(|v| [v.x.to_string(), v.y.to_string()]).collect(),
        }
    }
}

fn signed_area2(v: &[Point]) -> QuadNum {
    let n = v.len();
    (0..n).fold(QuadNum::zero(), |acc, i| acc + v[i].cross(&v[(i + 1) % n]))
}

fn edge_vectors(v: &[Point]) -> Vec<Point> {
    let n = v.len();
    (0..n).map(|i| &v[(i + 1) % n] - &v[i]).collect()
}

/// File form of a polygon: `{"vertices": [["<expr>", "<expr>"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub vertices: Vec<[String; 2]>,
}

impl PolygonJson {
    /// Either orientation is accepted; the polygon must be strictly convex.
    pub fn to_polygon(&self) -> Result<ConvexPolygon, Error> {
        let pts = self
            .vertices
            .iter()
            .map(|[x, y]| Point::parse(x, y))
            .collect::<Result<Vec<_>, _>>()?;
        ConvexPolygon::from_vertices(pts)
    }

    pub fn parse(text: &str) -> Result<ConvexPolygon, Error> {
        let json: PolygonJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidPolygon(format!("malformed polygon JSON: {e}")))?;
        json.to_polygon()
    }
}
