use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rat;

/// `mantissa * 2^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub mantissa: BigInt,
    pub exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: impl Into<BigInt>, exponent: i64) -> Self {
        Dyadic { mantissa: mantissa.into(), exponent }
    }

    /// `2^-bits`.
    pub fn pow2_neg(bits: u32) -> Self {
        Dyadic::new(1, -(bits as i64))
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn to_rat(&self) -> Rat {
        if self.exponent >= 0 {
            Rat::from_bigint(&self.mantissa << self.exponent as usize)
        } else {
            Rat::from_bigints(self.mantissa.clone(), BigInt::one() << (-self.exponent) as usize)
                .expect("power of two is nonzero")
        }
    }

    pub fn to_f64(&self) -> f64 {
        let m = self.mantissa.to_f64().unwrap_or(f64::NAN);
        m * 2f64.powi(self.exponent.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    /// Decimal rendering with `places` fractional digits, rounded half away
    /// from zero. Integer arithmetic only, so the text is reproducible.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = BigInt::from(10u32).pow(places as u32);
        let (num, den) = if self.exponent >= 0 {
            (&self.mantissa << self.exponent as usize, BigInt::one())
        } else {
            (self.mantissa.clone(), BigInt::one() << (-self.exponent) as usize)
        };
        let neg = num.is_negative();
        let scaled: BigInt = num.abs() * &scale * 2 + &den;
        let q = scaled.div_floor(&(den * 2));
        let (int_part, frac_part) = q.div_rem(&scale);
        let mut s = String::new();
        if neg && !q.is_zero() {
            s.push('-');
        }
        s.push_str(&int_part.to_string());
        if places > 0 {
            s.push('.');
            s.push_str(&format!("{:0>width$}", frac_part.to_string(), width = places));
        }
        s
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

/// A closed interval `[lo, hi]` with dyadic endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl DyadicInterval {
    /// Both endpoints share the scale `2^-bits`.
    pub(crate) fn from_scaled(lo: BigInt, hi: BigInt, bits: u32) -> Self {
        debug_assert!(lo <= hi);
        DyadicInterval {
            lo: Dyadic::new(lo, -(bits as i64)),
            hi: Dyadic::new(hi, -(bits as i64)),
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi.to_rat() - &self.lo.to_rat()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.mantissa.is_positive() && !self.hi.mantissa.is_negative()
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.lo.to_rat() <= *x && *x <= self.hi.to_rat()
    }

    pub fn midpoint(&self) -> Dyadic {
        let e = self.lo.exponent.min(self.hi.exponent);
        let align = |d: &Dyadic| &d.mantissa << (d.exponent - e) as usize;
        Dyadic::new(align(&self.lo) + align(&self.hi), e - 1)
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64()
    }
}
