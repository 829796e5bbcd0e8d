//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;

use lattice_periodic::{Boundary, ConvexPolygon, PeriodicSet, Point, QuadNum, Rat};

pub const FIXED_BITS: u32 = 256;

/// `floor(sqrt(n) · 2^bits)` by integer Newton iteration from above.
pub fn fixed_sqrt(n: u32, bits: u32) -> BigInt {
    let target = BigInt::from(n) << (2 * bits as usize);
    let mut x = BigInt::from(4u32) << bits as usize;
    loop {
        let next = (&x + &target / &x) >> 1usize;
        if next >= x {
            return x;
        }
        x = next;
    }
}

/// 256-bit fixed-point evaluation of `a + b√2 + c√3 + d√6`.
pub struct FixedOracle {
    roots: [BigInt; 4],
}

impl Default for FixedOracle {
    fn default() -> Self {
        FixedOracle {
            roots: [
                BigInt::from(1u32) << FIXED_BITS as usize,
                fixed_sqrt(2, FIXED_BITS),
                fixed_sqrt(3, FIXED_BITS),
                fixed_sqrt(6, FIXED_BITS),
            ],
        }
    }
}

impl FixedOracle {
    /// Scaled value and an absolute error bound, both in units of `2^-256`.
    pub fn eval(&self, x: &QuadNum) -> (BigInt, BigInt) {
        let mut sum = BigInt::zero();
        let mut err = BigInt::from(4u32);
        for (coef, root) in x.coefficients().into_iter().zip(&self.roots) {
            let num = coef.numer();
            let den = coef.denom();
            sum += (&num * root).div_floor(&den);
            err += num.abs().div_ceil(&den) + 1;
        }
        (sum, err)
    }

    /// The sign when the fixed-point value is decisive.
    pub fn sign(&self, x: &QuadNum) -> Option<i32> {
        let (v, err) = self.eval(x);
        if v > err {
            Some(1)
        } else if -&v > err {
            Some(-1)
        } else {
            None
        }
    }

    /// The floor when no integer lies within the error bound.
    pub fn floor(&self, x: &QuadNum) -> Option<BigInt> {
        let (v, err) = self.eval(x);
        let unit = BigInt::from(1u32) << FIXED_BITS as usize;
        let (lo, hi) = ((&v - &err).div_floor(&unit), (&v + &err).div_floor(&unit));
        (lo == hi).then_some(lo)
    }
}

/// A random element with small coefficients; some coefficients vanish.
pub fn random_quad<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> QuadNum {
    let mut c = || {
        if rng.gen_bool(0.3) {
            Rat::zero()
        } else {
            Rat::new(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
        }
    };
    QuadNum::new(c(), c(), c(), c())
}

/// `r − q` where `q` is a 30-bit rational approximation of a surd `r`; tiny
/// but nonzero.
pub fn near_zero<R: Rng>(rng: &mut R) -> QuadNum {
    let roots = [QuadNum::sqrt2(), QuadNum::sqrt3(), QuadNum::sqrt6()];
    let r = &roots[rng.gen_range(0..3)];
    let m: i64 = rng.gen_range(1..=9);
    let x = r.scale(&Rat::from_int(m));
    let den = 1i64 << 30;
    let approx = (x.to_f64() * den as f64).round() as i64 + rng.gen_range(-1..=1);
    &x - &QuadNum::from_rat(Rat::new(approx, den))
}

/// A convex polygon whose vertices are `p/4 + (q/4)·r` with `r` one of
/// `1, √2, √3`; the hull of 3 to 7 random points.
pub fn random_polygon<R: Rng>(rng: &mut R) -> ConvexPolygon {
    loop {
        let n = rng.gen_range(3..=7);
        let coord = |rng: &mut R| {
            let root = match rng.gen_range(0..3) {
                0 => QuadNum::one(),
                1 => QuadNum::sqrt2(),
                _ => QuadNum::sqrt3(),
            };
            let a = QuadNum::frac(rng.gen_range(-4..=4), 4);
            let b = root.scale(&Rat::new(rng.gen_range(-2..=2), 4));
            &a + &b
        };
        let pts: Vec<Point> = (0..n).map(|_| Point::new(coord(rng), coord(rng))).collect();
        if let Ok(p) = ConvexPolygon::hull(&pts) {
            return p;
        }
    }
}

/// An axis-parallel rectangle with corners on the `1/8` grid.
pub fn random_eighth_rect<R: Rng>(rng: &mut R) -> ConvexPolygon {
    let x0 = rng.gen_range(-8..=4);
    let y0 = rng.gen_range(-8..=4);
    let w = rng.gen_range(1..=12);
    let h = rng.gen_range(1..=12);
    ConvexPolygon::rect(QuadNum::frac(x0, 8), QuadNum::frac(y0, 8), QuadNum::frac(x0 + w, 8), QuadNum::frac(y0 + h, 8))
        .unwrap()
}

/// Counts of `#((z + D) ∩ V)` for `z = B·(i/pitch, j/pitch)`,
/// `0 <= i, j <= pitch`, by direct point tests.
pub struct GridOracle {
    points: Vec<(Point, (f64, f64))>,
}

impl GridOracle {
    /// Collects every point of `V` that any translate `z + D` with `z` in the
    /// closed fundamental cell can reach.
    pub fn new(set: &PeriodicSet, d: &ConvexPolygon) -> Self {
        let l = set.lattice();
        let corners = [
            Point::origin(),
            l.b1().clone(),
            l.b2().clone(),
            l.b1() + l.b2(),
        ];
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for c in &corners {
            for v in d.vertices() {
                let (x, y) = (c + v).to_f64();
                x0 = x0.min(x);
                x1 = x1.max(x);
                y0 = y0.min(y);
                y1 = y1.max(y);
            }
        }
        let (x0, x1, y0, y1) = (x0 - 0.5, x1 + 0.5, y0 - 0.5, y1 + 0.5);
        // lattice coordinates of the box corners bound the index range
        let (b1, b2) = (l.b1().to_f64(), l.b2().to_f64());
        let det = b1.0 * b2.1 - b1.1 * b2.0;
        let to_coords = |x: f64, y: f64| ((x * b2.1 - y * b2.0) / det, (b1.0 * y - b1.1 * x) / det);
        let cs = [to_coords(x0, y0), to_coords(x1, y0), to_coords(x0, y1), to_coords(x1, y1)];
        let m_lo = cs.iter().map(|c| c.0).fold(f64::MAX, f64::min).floor() as i64 - 2;
        let m_hi = cs.iter().map(|c| c.0).fold(f64::MIN, f64::max).ceil() as i64 + 2;
        let n_lo = cs.iter().map(|c| c.1).fold(f64::MAX, f64::min).floor() as i64 - 2;
        let n_hi = cs.iter().map(|c| c.1).fold(f64::MIN, f64::max).ceil() as i64 + 2;
        let mut points = Vec::new();
        for v in set.classes() {
            for m in m_lo..=m_hi {
                for n in n_lo..=n_hi {
                    let p = v + &(&l.b1().scale(&QuadNum::from_int(m)) + &l.b2().scale(&QuadNum::from_int(n)));
                    let f = p.to_f64();
                    if f.0 >= x0 && f.0 <= x1 && f.1 >= y0 && f.1 <= y1 {
                        points.push((p, f));
                    }
                }
            }
        }
        GridOracle { points }
    }

    /// Count at one translate; floats decide unless a point is within
    /// `1e-9` of an edge line, where the exact orientation is used.
    pub fn count(&self, d: &ConvexPolygon, z: &Point, boundary: Boundary) -> usize {
        let verts: Vec<Point> = d.vertices().iter().map(|v| v + z).collect();
        let fv: Vec<(f64, f64)> = verts.iter().map(Point::to_f64).collect();
        let n = verts.len();
        let (bx0, bx1) = fv.iter().fold((f64::MAX, f64::MIN), |a, p| (a.0.min(p.0), a.1.max(p.0)));
        let (by0, by1) = fv.iter().fold((f64::MAX, f64::MIN), |a, p| (a.0.min(p.1), a.1.max(p.1)));
        let mut count = 0;
        'points: for (p, (px, py)) in &self.points {
            if *px < bx0 - 1e-6 || *px > bx1 + 1e-6 || *py < by0 - 1e-6 || *py > by1 + 1e-6 {
                continue;
            }
            for i in 0..n {
                let (a, b) = (fv[i], fv[(i + 1) % n]);
                let cr = (b.0 - a.0) * (py - a.1) - (b.1 - a.1) * (px - a.0);
                let s = if cr > 1e-9 {
                    1
                } else if cr < -1e-9 {
                    -1
                } else {
                    Point::orient(&verts[i], &verts[(i + 1) % n], p)
                };
                let inside = match boundary {
                    Boundary::Closed => s >= 0,
                    Boundary::Open => s > 0,
                };
                if !inside {
                    continue 'points;
                }
            }
            count += 1;
        }
        count
    }

    /// `(min, max)` over the grid of translates.
    pub fn extremes(&self, set: &PeriodicSet, d: &ConvexPolygon, boundary: Boundary, pitch: i64) -> (usize, usize) {
        let l = set.lattice();
        let mut lo = usize::MAX;
        let mut hi = 0;
        for i in 0..=pitch {
            for j in 0..=pitch {
                let z = l.point_at(&QuadNum::frac(i, pitch), &QuadNum::frac(j, pitch));
                let c = self.count(d, &z, boundary);
                lo = lo.min(c);
                hi = hi.max(c);
            }
        }
        (lo, hi)
    }
}
