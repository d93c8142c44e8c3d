//! The 4-dimensional commutative associative algebra whose product
//! linearizes interval multiplication.
//!
//! In the basis `{e1, e2, e3, e4}` the product is
//! `x * y = (x1*y1 + x4*y4, x2*y2 + x3*y3, x3*y2 + x2*y3, x4*y1 + x1*y4)`,
//! with unit `e1 + e2`. The algebra splits as a direct sum of the ideals
//! `I1 = span{e1, e4}` and `I2 = span{e2, e3}`.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum A4Error {
    #[error("element is not invertible (discriminant {discriminant} within tolerance {tolerance})")]
    NotInvertible { discriminant: f64, tolerance: f64 },
    #[error("element does not match any canonical image shape: {0}")]
    BadShape(A4Element),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct A4Element {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealMembership {
    I1,
    I2,
    Neither,
    Zero,
}

/// Outcome of the partial order on canonical image shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum A4Order {
    LessEq,
    Incomparable,
}

/// The three canonical image shapes the partial order is defined on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    /// (x1, x2, 0, 0), x1, x2 >= 0
    Proper,
    /// (0, x2, x3, 0), x2, x3 >= 0
    Straddle,
    /// (0, 0, x3, x4), x3, x4 >= 0
    NegativeProper,
}

pub const E1: A4Element = A4Element::new(1.0, 0.0, 0.0, 0.0);
pub const E2: A4Element = A4Element::new(0.0, 1.0, 0.0, 0.0);
pub const E3: A4Element = A4Element::new(0.0, 0.0, 1.0, 0.0);
pub const E4: A4Element = A4Element::new(0.0, 0.0, 0.0, 1.0);

impl A4Element {
    pub const fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        A4Element { x1, x2, x3, x4 }
    }

    pub const fn zero() -> Self {
        A4Element::new(0.0, 0.0, 0.0, 0.0)
    }

    /// The multiplicative unit `e1 + e2`.
    pub const fn unit() -> Self {
        A4Element::new(1.0, 1.0, 0.0, 0.0)
    }

    pub fn add(&self, other: &A4Element) -> A4Element {
        A4Element::new(
            self.x1 + other.x1,
            self.x2 + other.x2,
            self.x3 + other.x3,
            self.x4 + other.x4,
        )
    }

    pub fn neg(&self) -> A4Element {
        self.scale(-1.0)
    }

    pub fn sub(&self, other: &A4Element) -> A4Element {
        self.add(&other.neg())
    }

    pub fn scale(&self, alpha: f64) -> A4Element {
        A4Element::new(
            alpha * self.x1,
            alpha * self.x2,
            alpha * self.x3,
            alpha * self.x4,
        )
    }

    pub fn mul(&self, other: &A4Element) -> A4Element {
        A4Element::new(
            self.x1 * other.x1 + self.x4 * other.x4,
            self.x2 * other.x2 + self.x3 * other.x3,
            self.x3 * other.x2 + self.x2 * other.x3,
            self.x4 * other.x1 + self.x1 * other.x4,
        )
    }

    /// `(x1^2 - x4^2) * (x2^2 - x3^2)`; nonzero exactly on the group of units.
    pub fn discriminant(&self) -> f64 {
        (self.x1 * self.x1 - self.x4 * self.x4) * (self.x2 * self.x2 - self.x3 * self.x3)
    }

    pub fn is_invertible(&self, tolerance: f64) -> bool {
        self.discriminant().abs() > tolerance
    }

    pub fn inverse(&self, tolerance: f64) -> Result<A4Element, A4Error> {
        if !self.is_invertible(tolerance) {
            return Err(A4Error::NotInvertible {
                discriminant: self.discriminant(),
                tolerance,
            });
        }
        let d1 = self.x1 * self.x1 - self.x4 * self.x4;
        let d2 = self.x2 * self.x2 - self.x3 * self.x3;
        // solving the two 2x2 blocks of x*y = e1 + e2 gives minus signs on
        // the third and fourth components
        Ok(A4Element::new(
            self.x1 / d1,
            self.x2 / d2,
            -self.x3 / d2,
            -self.x4 / d1,
        ))
    }

    pub fn ideal_member(&self) -> IdealMembership {
        let in_i1 = self.x2 == 0.0 && self.x3 == 0.0;
        let in_i2 = self.x1 == 0.0 && self.x4 == 0.0;
        match (in_i1, in_i2) {
            (true, true) => IdealMembership::Zero,
            (true, false) => IdealMembership::I1,
            (false, true) => IdealMembership::I2,
            (false, false) => IdealMembership::Neither,
        }
    }

    fn shape(&self) -> Option<Shape> {
        let nn = |v: f64| v >= 0.0;
        if self.x3 == 0.0 && self.x4 == 0.0 && nn(self.x1) && nn(self.x2) {
            Some(Shape::Proper)
        } else if self.x1 == 0.0 && self.x4 == 0.0 && nn(self.x2) && nn(self.x3) {
            Some(Shape::Straddle)
        } else if self.x1 == 0.0 && self.x2 == 0.0 && nn(self.x3) && nn(self.x4) {
            Some(Shape::NegativeProper)
        } else {
            None
        }
    }

    /// Partial order on canonical image shapes. Shape pairs with no
    /// stated rule are reported incomparable rather than extended.
    pub fn leq(&self, other: &A4Element) -> Result<A4Order, A4Error> {
        let sx = self.shape().ok_or(A4Error::BadShape(*self))?;
        let sy = other.shape().ok_or(A4Error::BadShape(*other))?;
        let holds = match (sx, sy) {
            (Shape::Proper, Shape::Proper) => other.x1 <= self.x1 && self.x2 <= other.x2,
            (Shape::Proper, Shape::Straddle) => self.x2 <= other.x2,
            (Shape::Straddle, Shape::Straddle) => self.x3 <= other.x3 && self.x2 <= other.x2,
            (Shape::NegativeProper, Shape::Straddle) => self.x3 <= other.x3,
            (Shape::NegativeProper, Shape::NegativeProper) => {
                self.x3 <= other.x3 && other.x4 <= self.x4
            }
            _ => false,
        };
        Ok(if holds {
            A4Order::LessEq
        } else {
            A4Order::Incomparable
        })
    }
}

impl fmt::Display for A4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::gelement::fmt_sig12;
        write!(
            f,
            "({}, {}, {}, {})",
            fmt_sig12(self.x1),
            fmt_sig12(self.x2),
            fmt_sig12(self.x3),
            fmt_sig12(self.x4)
        )
    }
}
