//! The completed space of interval classes as a 2-dimensional normed
//! vector space over the reals.
//!
//! An element is stored as an unconstrained coordinate pair `(p, q)`.
//! `p <= q` encodes the proper class `([p, q], 0)`, `p > q` the improper
//! class `(0, [-p, -q])`, and `p == q` the real point `p`. In this chart
//! addition, negation, scaling and pair reduction are all componentwise.

use crate::interval::Interval;
use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of the completed interval space, in raw coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GElement {
    pub p: f64,
    pub q: f64,
}

/// The three canonical classes of a completed element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SignClass {
    Positive,
    Negative,
    Point(f64),
}

/// Canonical form: the unique `(A, 0)`, `(0, A)` or real representative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Canonical {
    Positive(Interval),
    Negative(Interval),
    Point(f64),
}

/// Result of comparing two elements through the sign of their difference.
/// A nonzero real difference is neither positive nor negative, so the
/// order is partial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GOrder {
    GreaterEq,
    LessEq,
    Equal,
    Incomparable,
}

impl GElement {
    pub fn new(p: f64, q: f64) -> Self {
        GElement { p, q }
    }

    pub fn zero() -> Self {
        GElement { p: 0.0, q: 0.0 }
    }

    /// The real point `v`, i.e. the class of the degenerate interval.
    pub fn point(v: f64) -> Self {
        GElement { p: v, q: v }
    }

    /// Embed a proper interval as the class `(A, 0)`.
    pub fn from_proper(a: &Interval) -> Self {
        GElement {
            p: a.lo(),
            q: a.hi(),
        }
    }

    /// The class `(0, A)`, the additive inverse of `(A, 0)`.
    pub fn from_negative(a: &Interval) -> Self {
        GElement {
            p: -a.lo(),
            q: -a.hi(),
        }
    }

    /// Reduce a formal difference `(x, y)` of proper intervals to its class.
    pub fn from_pair(x: &Interval, y: &Interval) -> Self {
        GElement {
            p: x.lo() - y.lo(),
            q: x.hi() - y.hi(),
        }
    }

    pub fn add(&self, other: &GElement) -> GElement {
        GElement {
            p: self.p + other.p,
            q: self.q + other.q,
        }
    }

    /// Group inverse.
    pub fn neg(&self) -> GElement {
        GElement {
            p: -self.p,
            q: -self.q,
        }
    }

    /// The completed subtraction `x ∖ y`, an honest group operation
    /// (unlike classical interval subtraction).
    pub fn sub(&self, other: &GElement) -> GElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, alpha: f64) -> GElement {
        GElement {
            p: alpha * self.p,
            q: alpha * self.q,
        }
    }

    /// Endpoint swap `(p, q) -> (q, p)`; an involutive group homomorphism
    /// exchanging proper and improper classes.
    pub fn dual(&self) -> GElement {
        GElement {
            p: self.q,
            q: self.p,
        }
    }

    /// Length of the underlying interval in either canonical form.
    pub fn length(&self) -> f64 {
        (self.q - self.p).abs()
    }

    /// Signed center: `c(A)` for proper classes, `-c(A)` for improper ones.
    pub fn center(&self) -> f64 {
        (self.p + self.q) / 2.0
    }

    /// The norm `l(X) + |c(X)|`.
    pub fn norm(&self) -> f64 {
        self.length() + self.center().abs()
    }

    pub fn sign(&self) -> SignClass {
        if self.p < self.q {
            SignClass::Positive
        } else if self.p > self.q {
            SignClass::Negative
        } else {
            SignClass::Point(self.p)
        }
    }

    /// Partial order from the sign of the difference.
    pub fn cmp_partial(&self, other: &GElement) -> GOrder {
        match self.sub(other).sign() {
            SignClass::Positive => GOrder::GreaterEq,
            SignClass::Negative => GOrder::LessEq,
            SignClass::Point(0.0) => GOrder::Equal,
            SignClass::Point(_) => GOrder::Incomparable,
        }
    }

    /// Coefficients `(u, v)` on the basis `{X1, X2} = {(0,1), (1,1)}`,
    /// so that `u*X1 + v*X2` reconstructs the element exactly.
    pub fn basis_decompose(&self) -> (f64, f64) {
        (self.q - self.p, self.p)
    }

    pub fn from_basis(u: f64, v: f64) -> GElement {
        GElement { p: v, q: u + v }
    }

    pub fn to_canonical(&self) -> Canonical {
        match self.sign() {
            SignClass::Positive => {
                Canonical::Positive(Interval::new(self.p, self.q).expect("p < q"))
            }
            SignClass::Negative => {
                Canonical::Negative(Interval::new(-self.p, -self.q).expect("-p < -q"))
            }
            SignClass::Point(v) => Canonical::Point(v),
        }
    }

    /// The canonical underlying interval, ignoring the class sign.
    /// Points map to degenerate intervals.
    pub fn canonical_interval(&self) -> Interval {
        match self.to_canonical() {
            Canonical::Positive(a) | Canonical::Negative(a) => a,
            Canonical::Point(v) => Interval::point(v),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0.0 && self.q == 0.0
    }

    /// Canonical-interval inclusion, meaningful for same-sign elements.
    pub fn interval_subset_of(&self, other: &GElement) -> bool {
        self.canonical_interval()
            .is_subset_of(&other.canonical_interval())
    }
}

/// Format a float with 12 significant digits, rendered as a plain decimal.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(11 - mag);
    let rounded = (x * factor).round() / factor;
    format!("{rounded}")
}

impl fmt::Display for GElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_canonical() {
            Canonical::Positive(a) => {
                write!(f, "[{},{}]", fmt_sig12(a.lo()), fmt_sig12(a.hi()))
            }
            Canonical::Negative(a) => {
                write!(f, "dual[{},{}]", fmt_sig12(a.lo()), fmt_sig12(a.hi()))
            }
            Canonical::Point(v) => write!(f, "{}", fmt_sig12(v)),
        }
    }
}
