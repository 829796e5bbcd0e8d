use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::qfield::{QuadNum, Rat};
use crate::Error;

/// A point (or vector) of the plane with coordinates in Q(√2, √3).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Point {
    pub x: QuadNum,
    pub y: QuadNum,
}

impl Point {
    pub fn new(x: QuadNum, y: QuadNum) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Self::default()
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(QuadNum::from_int(x), QuadNum::from_int(y))
    }

    /// Parses two coordinate expressions.
    pub fn parse(x: &str, y: &str) -> Result<Self, Error> {
        Ok(Point::new(x.parse()?, y.parse()?))
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `self × other`, the z-component of the cross product.
    pub fn cross(&self, other: &Point) -> QuadNum {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Point) -> QuadNum {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn norm_sq(&self) -> QuadNum {
        self.dot(self)
    }

    pub fn scale(&self, s: &QuadNum) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    pub fn scale_rat(&self, s: &Rat) -> Point {
        Point::new(self.x.scale(s), self.y.scale(s))
    }

    /// Sign of `(b - a) × (c - a)`: +1 for a left turn.
    pub fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
        (b - a).cross(&(c - a)).sign()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, r: &Point) -> Point {
        Point::new(&self.x + &r.x, &self.y + &r.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, r: &Point) -> Point {
        Point::new(&self.x - &r.x, &self.y - &r.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, r: Point) -> Point {
        &self + &r
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, r: Point) -> Point {
        &self - &r
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        -&self
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic by exact `(x, y)`.
impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}
