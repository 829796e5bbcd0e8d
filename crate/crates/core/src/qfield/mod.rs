//! Exact arithmetic in the real field Q(√2, √3).
//!
//! Every element is stored as `a + b√2 + c√3 + d√6` with rational
//! coefficients. Since `1, √2, √3, √6` are linearly independent over Q the
//! representation is unique, so equality and hashing are structural and a
//! value is zero iff all four coefficients are.
//!
//! Signs are decided by refining a dyadic enclosure of the real value. The
//! refinement stops, at the latest, once the enclosure is narrower than the
//! norm bound `|N(x)| / M³`, where `N(x)` is the product of the four Galois
//! conjugates and `M` bounds their absolute values. A certified `f64` filter
//! answers the easy cases first; it never changes a result.

mod dyadic;
mod parse;
mod rat;

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use dyadic::{Dyadic, DyadicInterval};
pub use parse::parse;
pub use rat::Rat;

use crate::Error;

/// An element `a + b√2 + c√3 + d√6` of Q(√2, √3).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadNum {
    a: Rat,
    b: Rat,
    c: Rat,
    d: Rat,
}

/// Field operation selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Applies `op` to `x` and `y` (`y` is ignored for [`ArithOp::Neg`]).
pub fn arith(x: &QuadNum, y: &QuadNum, op: ArithOp) -> QuadNum {
    match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Neg => -x,
    }
}

const SQRT2_F: f64 = std::f64::consts::SQRT_2;
const SQRT3_F: f64 = 1.732_050_807_568_877_2;
const SQRT6_F: f64 = 2.449_489_742_783_178;

impl QuadNum {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        QuadNum { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(a: Rat) -> Self {
        QuadNum { a, ..Default::default() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_int(n))
    }

    /// `num / den`; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rat(Rat::new(num, den))
    }

    pub fn sqrt2() -> Self {
        QuadNum { b: Rat::one(), ..Default::default() }
    }

    pub fn sqrt3() -> Self {
        QuadNum { c: Rat::one(), ..Default::default() }
    }

    pub fn sqrt6() -> Self {
        QuadNum { d: Rat::one(), ..Default::default() }
    }

    /// Rational coefficients `[a, b, c, d]` of `a + b√2 + c√3 + d√6`.
    pub fn coefficients(&self) -> [&Rat; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// The rational value, if the irrational parts vanish.
    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    /// True iff the value is a rational integer.
    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.a.is_integer()
    }

    pub fn scale(&self, r: &Rat) -> Self {
        QuadNum { a: &self.a * r, b: &self.b * r, c: &self.c * r, d: &self.d * r }
    }

    /// √2 ↦ −√2.
    pub fn conj2(&self) -> Self {
        QuadNum { a: self.a.clone(), b: -&self.b, c: self.c.clone(), d: -&self.d }
    }

    /// √3 ↦ −√3.
    pub fn conj3(&self) -> Self {
        QuadNum { a: self.a.clone(), b: self.b.clone(), c: -&self.c, d: -&self.d }
    }

    /// √2 ↦ −√2 and √3 ↦ −√3.
    pub fn conj23(&self) -> Self {
        QuadNum { a: self.a.clone(), b: -&self.b, c: -&self.c, d: self.d.clone() }
    }

    /// Product of the four Galois conjugates; always rational.
    pub fn norm(&self) -> Rat {
        let y = self * &self.conj2();
        let n = &y * &y.conj3();
        debug_assert!(n.is_rational());
        n.a
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rat(self.a.recip().expect("nonzero")));
        }
        // x * conj2(x) lies in Q(√3); multiplying by its √3-conjugate gives N(x).
        let y = self * &self.conj2();
        let y_bar = y.conj3();
        let n = (&y * &y_bar).a;
        let n_inv = n.recip().ok_or(Error::DivisionByZero)?;
        Ok((&self.conj2() * &y_bar).scale(&n_inv))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * SQRT2_F + self.c.to_f64() * SQRT3_F
            + self.d.to_f64() * SQRT6_F
    }

    /// Certified floating evaluation: `Some(sign)` when the `f64` value is
    /// provably far enough from zero.
    fn float_sign(&self) -> Option<i32> {
        let terms = [
            self.a.to_f64(),
            self.b.to_f64() * SQRT2_F,
            self.c.to_f64() * SQRT3_F,
            self.d.to_f64() * SQRT6_F,
        ];
        let magnitude: f64 = terms.iter().map(|t| t.abs()).sum();
        if !magnitude.is_finite() || magnitude < 1e-280 {
            return None;
        }
        let value: f64 = terms.iter().sum();
        // Accumulated relative error is below 2^-50 of the magnitude.
        let err = magnitude * (2f64).powi(-40);
        if value > err {
            Some(1)
        } else if value < -err {
            Some(-1)
        } else {
            None
        }
    }

    /// Exact sign: −1, 0 or +1.
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if self.is_rational() {
            return self.a.signum();
        }
        if let Some(s) = self.float_sign() {
            return s;
        }
        self.refined_sign()
    }

    /// Sign by dyadic refinement alone, bypassing the float filter.
    pub fn refined_sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let bound = self.separation_bound();
        let mut bits = 64u32;
        loop {
            let iv = self.enclosure(bits);
            if iv.lo.mantissa.is_positive() {
                return 1;
            }
            if iv.hi.mantissa.is_negative() {
                return -1;
            }
            // A nonzero value satisfies |x| >= bound, so an enclosure this
            // narrow that still straddles zero is impossible.
            assert!(
                iv.width() >= bound,
                "sign refinement reached the norm bound without separating {self}"
            );
            bits *= 2;
        }
    }

    /// `|N(x)| / M³`, a lower bound on `|x|` for nonzero `x`.
    pub fn separation_bound(&self) -> Rat {
        let m = &(&(&self.a.abs() + &(&self.b.abs() * &Rat::new(3, 2)))
            + &(&self.c.abs() * &Rat::new(7, 4)))
            + &(&self.d.abs() * &Rat::new(5, 2));
        let m3 = &(&m * &m) * &m;
        &self.norm().abs() * &m3.recip().expect("nonzero value has positive bound")
    }

    /// Dyadic enclosure on the grid `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> DyadicInterval {
        let den = [&self.a, &self.b, &self.c, &self.d]
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(&r.denom()));
        let int = |r: &Rat| r.numer() * (&den / r.denom());
        let (a, b, c, d) = (int(&self.a), int(&self.b), int(&self.c), int(&self.d));
        let mut lo = &a << bits as usize;
        let mut hi = lo.clone();
        for (coef, radicand) in [(b, 2u32), (c, 3), (d, 6)] {
            if coef.is_zero() {
                continue;
            }
            let s = scaled_isqrt(radicand, bits);
            let s1 = &s + 1;
            if coef.is_positive() {
                lo += &coef * &s;
                hi += &coef * &s1;
            } else {
                lo += &coef * &s1;
                hi += &coef * &s;
            }
        }
        DyadicInterval::from_scaled(lo.div_floor(&den), hi.div_ceil(&den), bits)
    }

    /// An enclosure of width at most `tol`. Panics if `tol <= 0`.
    pub fn approx(&self, tol: &Dyadic) -> DyadicInterval {
        assert!(tol.is_positive(), "approx tolerance must be positive");
        let tol_r = tol.to_rat();
        let mut bits = (2 - tol.exponent).max(8) as u32;
        loop {
            let iv = self.enclosure(bits);
            if iv.width() <= tol_r {
                return iv;
            }
            bits += 16;
        }
    }

    /// The unique integer `n` with `n <= x < n + 1`.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.a.floor();
        }
        let v = self.to_f64();
        let mut n = if v.is_finite() && v.abs() < 1e15 {
            BigInt::from(v.floor() as i64)
        } else {
            let iv = self.approx(&Dyadic::pow2_neg(1));
            iv.lo.to_rat().floor()
        };
        loop {
            let nq = QuadNum::from_rat(Rat::from_bigint(n.clone()));
            if (self - &nq).sign() < 0 {
                n -= 1;
            } else if (self - &(nq + QuadNum::one())).sign() >= 0 {
                n += 1;
            } else {
                return n;
            }
        }
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// `x - floor(x)`, in `[0, 1)`.
    pub fn fract(&self) -> Self {
        self - &QuadNum::from_rat(Rat::from_bigint(self.floor()))
    }

    /// `(self + other) / 2`.
    pub fn midpoint(&self, other: &Self) -> Self {
        (self + other).scale(&Rat::new(1, 2))
    }
}

thread_local! {
    static ISQRT_CACHE: RefCell<HashMap<(u32, u32), BigInt>> = RefCell::new(HashMap::new());
}

/// `floor(sqrt(radicand) * 2^bits)`.
fn scaled_isqrt(radicand: u32, bits: u32) -> BigInt {
    ISQRT_CACHE.with(|cache| {
        cache
            .borrow_mut()
            .entry((radicand, bits))
            .or_insert_with(|| (BigInt::from(radicand) << (2 * bits as usize)).sqrt())
            .clone()
    })
}

impl Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, r: &QuadNum) -> QuadNum {
        QuadNum { a: &self.a + &r.a, b: &self.b + &r.b, c: &self.c + &r.c, d: &self.d + &r.d }
    }
}

impl Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, r: &QuadNum) -> QuadNum {
        QuadNum { a: &self.a - &r.a, b: &self.b - &r.b, c: &self.c - &r.c, d: &self.d - &r.d }
    }
}

impl Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, r: &QuadNum) -> QuadNum {
        if self.is_rational() {
            return r.scale(&self.a);
        }
        if r.is_rational() {
            return self.scale(&r.a);
        }
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&r.a, &r.b, &r.c, &r.d);
        let two = Rat::from_int(2);
        let three = Rat::from_int(3);
        let six = Rat::from_int(6);
        let a = &(&(a1 * a2) + &(&two * &(b1 * b2))) + &(&(&three * &(c1 * c2)) + &(&six * &(d1 * d2)));
        let b = &(&(a1 * b2) + &(b1 * a2)) + &(&three * &(&(c1 * d2) + &(d1 * c2)));
        let c = &(&(a1 * c2) + &(c1 * a2)) + &(&two * &(&(b1 * d2) + &(d1 * b2)));
        let d = &(&(a1 * d2) + &(d1 * a2)) + &(&(b1 * c2) + &(c1 * b2));
        QuadNum { a, b, c, d }
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadNum {
            type Output = QuadNum;
            fn $m(self, rhs: QuadNum) -> QuadNum {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $m(self, rhs: &QuadNum) -> QuadNum {
                (&self).$m(rhs)
            }
        }
        impl $tr<QuadNum> for &QuadNum {
            type Output = QuadNum;
            fn $m(self, rhs: QuadNum) -> QuadNum {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for QuadNum {
    fn from(n: i64) -> Self {
        QuadNum::from_int(n)
    }
}

impl From<Rat> for QuadNum {
    fn from(r: Rat) -> Self {
        QuadNum::from_rat(r)
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordering of the real values.
impl Ord for QuadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        if self.is_rational() && other.is_rational() {
            return self.a.cmp(&other.a);
        }
        (self - other).sign().cmp(&0)
    }
}

/// Canonical form `a + b*r2 + c*r3 + d*r6`, zero terms omitted; the
/// output parses back to the same value.
impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (coef, radical) in [(&self.a, ""), (&self.b, "r2"), (&self.c, "r3"), (&self.d, "r6")] {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.signum() < 0;
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = coef.abs();
            if radical.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == Rat::one() {
                f.write_str(radical)?;
            } else {
                write!(f, "{mag}*{radical}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadNum({self})")
    }
}

impl FromStr for QuadNum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse(s)
    }
}

impl QuadNum {
    /// Integer value, if this is a rational integer that fits `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.a.numer().to_i64()
        } else {
            None
        }
    }
}
