//! Serializable report values: exact text plus a tagged decimal.

use std::fmt::Display;

use serde::{Serialize, Serializer};

use crate::point::Point;
use crate::qfield::{Dyadic, QuadNum};

/// Tolerance used for every reported decimal: `2^-20`.
pub const DECIMAL_TOL_BITS: u32 = 20;

pub(crate) fn ser_display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// An exact value in the coordinate grammar with a decimal approximation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactValue {
    pub exact: String,
    pub decimal: String,
    pub tolerance: String,
}

impl ExactValue {
    pub fn new(x: &QuadNum) -> Self {
        ExactValue {
            exact: x.to_string(),
            decimal: decimal(x),
            tolerance: format!("2^-{DECIMAL_TOL_BITS}"),
        }
    }
}

impl From<&QuadNum> for ExactValue {
    fn from(x: &QuadNum) -> Self {
        ExactValue::new(x)
    }
}

/// Six-place decimal of the midpoint of a `2^-20` enclosure.
pub fn decimal(x: &QuadNum) -> String {
    x.approx(&Dyadic::pow2_neg(DECIMAL_TOL_BITS)).midpoint().to_decimal(6)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactPoint {
    pub x: ExactValue,
    pub y: ExactValue,
}

impl From<&Point> for ExactPoint {
    fn from(p: &Point) -> Self {
        ExactPoint { x: ExactValue::new(&p.x), y: ExactValue::new(&p.y) }
    }
}

/// Outcome of a theorem check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Hypotheses hold and every conclusion was confirmed.
    Verified,
    /// A hypothesis fails, so nothing is asserted.
    HypothesisNotMet,
    /// Hypotheses hold but a conclusion fails.
    Falsified,
}
