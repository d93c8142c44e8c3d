//! Classical closed intervals `[lo, hi]` with `lo <= hi`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IntervalError {
    #[error("malformed interval: lo ({lo}) > hi ({hi})")]
    MalformedInterval { lo: f64, hi: f64 },
}

/// A proper interval: a connected closed subset of the reals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self, IntervalError> {
        if lo <= hi {
            Ok(Interval { lo, hi })
        } else {
            Err(IntervalError::MalformedInterval { lo, hi })
        }
    }

    /// Degenerate interval `[v, v]`.
    pub fn point(v: f64) -> Self {
        Interval { lo: v, hi: v }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn center(&self) -> f64 {
        (self.hi + self.lo) / 2.0
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Set inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo + other.lo,
            hi: self.hi + other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo - other.hi,
            hi: self.hi - other.lo,
        }
    }

    /// Classical interval product: min/max over the four endpoint products.
    pub fn mul_classical(&self, other: &Interval) -> Interval {
        let products = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ];
        let lo = products.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = products.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval { lo, hi }
    }

    /// Scaling by a nonnegative real keeps the endpoint order; a negative
    /// factor swaps endpoints.
    pub fn scale(&self, alpha: f64) -> Interval {
        if alpha >= 0.0 {
            Interval {
                lo: alpha * self.lo,
                hi: alpha * self.hi,
            }
        } else {
            Interval {
                lo: alpha * self.hi,
                hi: alpha * self.lo,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(iv(1.0, 3.0).lo(), 1.0);
        assert_eq!(iv(1.0, 3.0).hi(), 3.0);
        assert!(iv(2.0, 2.0).is_point());
        assert!(matches!(
            Interval::new(3.0, 1.0),
            Err(IntervalError::MalformedInterval { .. })
        ));
    }

    #[test]
    fn add_sub() {
        assert_eq!(iv(1.0, 2.0).add(&iv(3.0, 5.0)), iv(4.0, 7.0));
        // x - x is not zero in classical interval arithmetic
        assert_eq!(iv(1.0, 2.0).sub(&iv(1.0, 2.0)), iv(-1.0, 1.0));
        assert_eq!(iv(0.0, 0.0).sub(&iv(2.0, 3.0)), iv(-3.0, -2.0));
    }

    #[test]
    fn mul_matches_brute_force() {
        let cases = [
            ((1.0, 2.0), (3.0, 4.0)),
            ((-1.0, 2.0), (-3.0, 4.0)),
            ((-2.0, -1.0), (3.0, 4.0)),
            ((-5.0, -2.0), (-4.0, -3.0)),
            ((0.0, 0.0), (-1.0, 1.0)),
        ];
        for ((a, b), (c, d)) in cases {
            let x = iv(a, b);
            let y = iv(c, d);
            let got = x.mul_classical(&y);
            // independent brute force over a fine sample of both operands
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            let n = 100;
            for i in 0..=n {
                for j in 0..=n {
                    let u = a + (b - a) * i as f64 / n as f64;
                    let v = c + (d - c) * j as f64 / n as f64;
                    lo = lo.min(u * v);
                    hi = hi.max(u * v);
                }
            }
            assert!((got.lo() - lo).abs() < 1e-9, "{got:?} vs [{lo},{hi}]");
            assert!((got.hi() - hi).abs() < 1e-9, "{got:?} vs [{lo},{hi}]");
        }
        assert_eq!(iv(1.0, 2.0).mul_classical(&iv(3.0, 4.0)), iv(3.0, 8.0));
        assert_eq!(iv(-1.0, 2.0).mul_classical(&iv(-3.0, 4.0)), iv(-6.0, 8.0));
        assert_eq!(iv(-2.0, -1.0).mul_classical(&iv(3.0, 4.0)), iv(-8.0, -3.0));
    }
}
