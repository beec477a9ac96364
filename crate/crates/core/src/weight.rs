//! Scalar kernels behind the Sombor index: the edge weight `f(x, y) = √(x² + y²)`
//! and the two gap functions used to reason about edge swaps.
//!
//! `gap(a, b, x) = f(x, a) − f(x, b)` for `b > a` is negative and strictly
//! increasing in `x`. `promotion_gap(a, x) = f(a, x) − f(x, 1)` for `a > 1` is
//! positive, strictly decreasing in `x`, and equals `−gap(1, a, x)`.
//!
//! Both gaps are evaluated in conjugate form, `(a² − b²) / (f(x, a) + f(x, b))`,
//! which avoids the cancellation of subtracting two nearly equal roots when `x`
//! is large and makes the negation identity hold bit-for-bit.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("degree must be at least 1, got {0}")]
    NonPositiveDegree(i64),
    #[error("gap requires b > a, got a = {a}, b = {b}")]
    UnorderedGap { a: u32, b: u32 },
    #[error("promotion gap requires a > 1, got a = {0}")]
    TrivialPromotion(u32),
}

/// A vertex degree. Always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Degree(u32);

impl Degree {
    pub const ONE: Degree = Degree(1);

    pub fn new(value: u32) -> Result<Self, WeightError> {
        if value == 0 {
            Err(WeightError::NonPositiveDegree(0))
        } else {
            Ok(Degree(value))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_pendant(self) -> bool {
        self.0 == 1
    }
}

impl TryFrom<u32> for Degree {
    type Error = WeightError;
    fn try_from(value: u32) -> Result<Self, Self::Error> {
        Degree::new(value)
    }
}

impl TryFrom<i64> for Degree {
    type Error = WeightError;
    fn try_from(value: i64) -> Result<Self, Self::Error> {
        match u32::try_from(value) {
            Ok(v) if v >= 1 => Ok(Degree(v)),
            _ => Err(WeightError::NonPositiveDegree(value)),
        }
    }
}

impl From<Degree> for u32 {
    fn from(d: Degree) -> u32 {
        d.0
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `√(x² + y²)` on raw degrees. The integer sum is exact, so the result is the
/// correctly rounded root.
#[inline]
pub(crate) fn raw_edge_weight(x: u32, y: u32) -> f64 {
    let (x, y) = (u64::from(x), u64::from(y));
    ((x * x + y * y) as f64).sqrt()
}

#[inline]
pub(crate) fn raw_gap(a: u32, b: u32, x: u32) -> f64 {
    let (a2, b2) = (f64::from(a) * f64::from(a), f64::from(b) * f64::from(b));
    (a2 - b2) / (raw_edge_weight(x, a) + raw_edge_weight(x, b))
}

/// The Sombor edge weight `√(x² + y²)`. Symmetric in its arguments.
pub fn edge_weight(x: Degree, y: Degree) -> f64 {
    raw_edge_weight(x.0, y.0)
}

/// `f(x, a) − f(x, b)` for `b > a`.
pub fn gap(a: Degree, b: Degree, x: Degree) -> Result<f64, WeightError> {
    if b <= a {
        return Err(WeightError::UnorderedGap { a: a.0, b: b.0 });
    }
    Ok(raw_gap(a.0, b.0, x.0))
}

/// `√(a² + x²) − √(x² + 1)` for `a > 1`: the change in index when a pendant
/// neighbour of a degree-`x` vertex is promoted to degree `a`, ignoring the
/// new pendant edges.
pub fn promotion_gap(a: Degree, x: Degree) -> Result<f64, WeightError> {
    if a.0 <= 1 {
        return Err(WeightError::TrivialPromotion(a.0));
    }
    Ok(-raw_gap(1, a.0, x.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: u32) -> Degree {
        Degree::new(v).unwrap()
    }

    #[test]
    fn edge_weight_examples() {
        assert_eq!(edge_weight(d(3), d(4)), 5.0);
        assert!((edge_weight(d(1), d(1)) - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert!((edge_weight(d(2), d(3)) - 13f64.sqrt()).abs() < 1e-15);
        assert!((edge_weight(d(2), d(3)) - 3.605_551_275_4).abs() < 1e-10);
    }

    #[test]
    fn rejects_zero_and_negative_degrees() {
        assert_eq!(Degree::new(0), Err(WeightError::NonPositiveDegree(0)));
        assert_eq!(Degree::try_from(-3i64), Err(WeightError::NonPositiveDegree(-3)));
        assert!(Degree::try_from(7i64).is_ok());
    }

    #[test]
    fn gap_examples() {
        let g = gap(d(1), d(2), d(3)).unwrap();
        assert!((g - (10f64.sqrt() - 13f64.sqrt())).abs() < 1e-14);
        assert!((g + 0.443_273_615).abs() < 1e-9);

        // f(x,1) − f(x,2) ≈ (1 − 4) / 2x for large x.
        let far = gap(d(1), d(2), d(1_000_000)).unwrap();
        assert!(far < 0.0 && far > -1e-5);
        assert!((far + 1.5e-6).abs() < 1e-12);
    }

    #[test]
    fn gap_rejects_unordered() {
        assert_eq!(gap(d(2), d(2), d(1)), Err(WeightError::UnorderedGap { a: 2, b: 2 }));
        assert!(gap(d(3), d(2), d(1)).is_err());
    }

    #[test]
    fn promotion_gap_examples() {
        let h32 = promotion_gap(d(3), d(2)).unwrap();
        assert!((h32 - (13f64.sqrt() - 5f64.sqrt())).abs() < 1e-14);
        assert!((h32 - 1.369_483_298).abs() < 1e-9);

        let h34 = promotion_gap(d(3), d(4)).unwrap();
        assert!((h34 - (5.0 - 17f64.sqrt())).abs() < 1e-14);
        assert!((h34 - 0.876_894_374).abs() < 1e-9);
        assert!(h34 < h32);
    }

    #[test]
    fn promotion_gap_rejects_a_of_one() {
        assert_eq!(promotion_gap(d(1), d(5)), Err(WeightError::TrivialPromotion(1)));
    }

    #[test]
    fn negation_identity_is_exact() {
        for a in 2..=60 {
            for x in 1..=60 {
                let h = promotion_gap(d(a), d(x)).unwrap();
                let g = gap(d(1), d(a), d(x)).unwrap();
                assert_eq!(h + g, 0.0);
            }
        }
    }

    #[test]
    fn conjugate_form_matches_direct_subtraction() {
        for a in 1..30 {
            for b in (a + 1)..31 {
                for x in 1..40 {
                    let direct = raw_edge_weight(x, a) - raw_edge_weight(x, b);
                    assert!((raw_gap(a, b, x) - direct).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn degree_serde_rejects_zero() {
        assert!(serde_json::from_str::<Degree>("0").is_err());
        assert_eq!(serde_json::from_str::<Degree>("4").unwrap(), d(4));
    }
}
