//! Division in the completed interval space.
//!
//! Invertible divisors admit an exact quotient through `g_inverse`;
//! zero-straddling divisors admit one when a pair of ratio conditions
//! holds, and otherwise a Euclidean quotient/remainder decomposition
//! `y = x • z + r` with a small remainder.

use crate::embed::{bullet, phi_bar, reduce_mod_r};
use crate::gelement::{Canonical, GElement};
use thiserror::Error;

/// Absolute tolerance for the degeneracy test x1 = x2.
pub const DEGENERACY_TOL: f64 = 1e-12;
/// Relative tolerance for reconstruction checks in `div_auto`.
pub const RECONSTRUCT_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DivisionError {
    #[error("divisor is not invertible: its interval straddles 0")]
    NotInvertible,
    #[error("divisor must be a positive class with positive left endpoint")]
    DivisorNotPositive,
    #[error("straddling divisor is centered at 0")]
    CenteredDivisor,
    #[error("exact straddle division impossible: z2 = {z2}, z3 = {z3} must both be nonnegative")]
    RatioConditionFailed { z2: f64, z3: f64 },
    #[error("Euclidean division precondition failed")]
    ConditionFailed,
    #[error("divisor is a point: Euclidean division is degenerate")]
    PointDivisorDegenerate,
    #[error("division by the zero point")]
    DivisionByZeroPoint,
    #[error("no division case applies to these operands")]
    Unsupported,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisionKind {
    ExactInvertible,
    ExactStraddle,
    Euclidean,
    EuclideanStraddle,
}

/// Quotient/remainder pair; exact kinds carry a zero remainder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DivisionResult {
    pub quotient: GElement,
    pub remainder: GElement,
    pub kind: DivisionKind,
}

impl DivisionResult {
    fn exact(quotient: GElement, kind: DivisionKind) -> Self {
        DivisionResult {
            quotient,
            remainder: GElement::zero(),
            kind,
        }
    }
}

/// Multiplicative inverse under the bullet product.
///
/// Reduces the algebra inverse of the embedded representative; on every
/// invertible class this lands on the coordinate reciprocal (1/p, 1/q).
pub fn g_inverse(x: &GElement) -> Result<GElement, DivisionError> {
    match phi_bar(x).inverse(DEGENERACY_TOL) {
        Ok(inv) => Ok(reduce_mod_r(&inv)),
        Err(_) => Err(DivisionError::NotInvertible),
    }
}

/// Exact quotient for a positive-class divisor (Prop 21 shape).
///
/// Returns the coordinate quotient (y1/x1, y2/x2) together with a flag
/// telling whether the existence condition y2/y1 >= x2/x1 held; when it
/// fails the quotient is an improper class but the formula stays total.
pub fn divide_invertible(y: &GElement, x: &GElement) -> Result<(GElement, bool), DivisionError> {
    let divisor_ok = match x.to_canonical() {
        Canonical::Positive(a) => a.lo() > 0.0,
        Canonical::Point(v) => v > 0.0,
        Canonical::Negative(_) => false,
    };
    if !divisor_ok {
        return Err(DivisionError::DivisorNotPositive);
    }
    let quotient = GElement::new(y.p / x.p, y.q / x.q);
    Ok((quotient, quotient.p <= quotient.q))
}

/// Magnitudes (x1, x2) of a strictly straddling positive class ([-x1, x2], 0).
fn straddle_magnitudes(x: &GElement) -> Option<(f64, f64)> {
    match x.to_canonical() {
        Canonical::Positive(a) if a.lo() < 0.0 && a.hi() > 0.0 => Some((-a.lo(), a.hi())),
        _ => None,
    }
}

/// Exact quotient for straddling operands (Props 22/23): solves the 2x2
/// system x1 z2 + x2 z3 = y1, x2 z2 + x1 z3 = y2 and requires z2, z3 >= 0.
pub fn divide_straddle(y: &GElement, x: &GElement) -> Result<GElement, DivisionError> {
    let (x1, x2) = straddle_magnitudes(x).ok_or(DivisionError::Unsupported)?;
    let (y1, y2) = straddle_magnitudes(y).ok_or(DivisionError::Unsupported)?;
    if (x1 - x2).abs() <= DEGENERACY_TOL {
        return Err(DivisionError::CenteredDivisor);
    }
    let d = x1 * x1 - x2 * x2;
    let z2 = (x1 * y1 - x2 * y2) / d;
    let z3 = (x1 * y2 - x2 * y1) / d;
    if z2 < 0.0 || z3 < 0.0 {
        return Err(DivisionError::RatioConditionFailed { z2, z3 });
    }
    Ok(GElement::new(-z3, z2))
}

/// Euclidean division with a point remainder of minimal center (Thm 24).
pub fn euclid_div(y: &GElement, x: &GElement) -> Result<DivisionResult, DivisionError> {
    let xi = match x.to_canonical() {
        Canonical::Positive(a) if a.lo() >= 0.0 => a,
        Canonical::Point(v) if v >= 0.0 => return Err(DivisionError::PointDivisorDegenerate),
        _ => return Err(DivisionError::Unsupported),
    };
    let yi = match y.to_canonical() {
        Canonical::Positive(a) if a.lo() >= 0.0 => a,
        Canonical::Point(v) if v >= 0.0 => crate::interval::Interval::point(v),
        _ => return Err(DivisionError::Unsupported),
    };
    let (x1, x2) = (xi.lo(), xi.hi());
    let (y1, y2) = (yi.lo(), yi.hi());
    if (x2 - x1).abs() <= DEGENERACY_TOL {
        return Err(DivisionError::PointDivisorDegenerate);
    }
    // x1/x2 < y1/y2, cross-multiplied (all quantities nonnegative)
    if x1 * y2 >= x2 * y1 {
        return Err(DivisionError::ConditionFailed);
    }
    let z = (y2 - y1) / (x2 - x1);
    let r = (x2 * y1 - x1 * y2) / (x2 - x1);
    Ok(DivisionResult {
        quotient: GElement::point(z),
        remainder: GElement::point(r),
        kind: DivisionKind::Euclidean,
    })
}

/// Euclidean division with straddling operands (Thm 25 and its mirror).
///
/// The remainder is length-minimal among decompositions whose quotient
/// lies on a half-line through 0 (the shape the closed forms produce);
/// see the module tests for why the restriction matters.
pub fn euclid_div_straddle(y: &GElement, x: &GElement) -> Result<DivisionResult, DivisionError> {
    let (x1, x2) = straddle_magnitudes(x).ok_or(DivisionError::Unsupported)?;
    let (y1, y2) = straddle_magnitudes(y).ok_or(DivisionError::Unsupported)?;
    if x1 <= x2 + DEGENERACY_TOL {
        return Err(DivisionError::ConditionFailed);
    }
    if x1 * y1 > x2 * y2 && x1 * y2 < x2 * y1 {
        // x1/x2 > y2/y1 and x1/x2 < y1/y2: the stated case
        let quotient = GElement::new(-(y2 / x1), 0.0);
        let remainder = GElement::new(-((x1 * y1 - x2 * y2) / x1), 0.0);
        return Ok(DivisionResult {
            quotient,
            remainder,
            kind: DivisionKind::EuclideanStraddle,
        });
    }
    if x1 * y1 < x2 * y2 && x1 * y2 > x2 * y1 {
        // mirror case: swap the roles of y1 and y2 (and of x1, x2 in the
        // remainder denominator)
        let quotient = GElement::new(-(y1 / x2), 0.0);
        let remainder = GElement::new(0.0, (x2 * y2 - x1 * y1) / x2);
        return Ok(DivisionResult {
            quotient,
            remainder,
            kind: DivisionKind::EuclideanStraddle,
        });
    }
    // both ratios on the same side: exact division applies instead
    Err(DivisionError::ConditionFailed)
}

fn close(a: &GElement, b: &GElement, tol: f64) -> bool {
    a.sub(b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

/// Dispatch over the division cases.
pub fn div_auto(y: &GElement, x: &GElement) -> Result<DivisionResult, DivisionError> {
    if x.is_zero() {
        return Err(DivisionError::DivisionByZeroPoint);
    }
    if let Some((x1, x2)) = straddle_magnitudes(x) {
        if straddle_magnitudes(y).is_none() {
            return Err(DivisionError::Unsupported);
        }
        if (x1 - x2).abs() <= DEGENERACY_TOL {
            // symmetric straddling divisor: neither the exact nor the
            // Euclidean case applies
            return Err(DivisionError::Unsupported);
        }
        return match divide_straddle(y, x) {
            Ok(q) => Ok(DivisionResult::exact(q, DivisionKind::ExactStraddle)),
            Err(DivisionError::RatioConditionFailed { .. }) if x1 > x2 => {
                euclid_div_straddle(y, x)
            }
            Err(DivisionError::RatioConditionFailed { .. }) => Err(DivisionError::Unsupported),
            Err(e) => Err(e),
        };
    }
    if let Ok(inv) = g_inverse(x) {
        let q = bullet(y, &inv);
        let reconstructs = close(&bullet(x, &q), y, RECONSTRUCT_TOL);
        if reconstructs && q.p <= q.q {
            return Ok(DivisionResult::exact(q, DivisionKind::ExactInvertible));
        }
        if let Ok(res) = euclid_div(y, x) {
            return Ok(res);
        }
        if reconstructs {
            return Ok(DivisionResult::exact(q, DivisionKind::ExactInvertible));
        }
        return Err(DivisionError::Unsupported);
    }
    // non-invertible but not strictly straddling: a zero endpoint
    Err(DivisionError::Unsupported)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;
    use proptest::prelude::*;

    fn g(p: f64, q: f64) -> GElement {
        GElement::new(p, q)
    }

    fn assert_close(a: &GElement, b: &GElement, tol: f64) {
        assert!(
            close(a, b, tol),
            "expected {a:?} ~ {b:?} (diff norm {})",
            a.sub(b).norm()
        );
    }

    #[test]
    fn g_inverse_examples() {
        let inv = g_inverse(&g(1.0, 2.0)).unwrap();
        assert_eq!(inv, g(1.0, 0.5));
        assert_eq!(bullet(&g(1.0, 2.0), &inv), GElement::point(1.0));

        assert_eq!(g_inverse(&GElement::point(4.0)).unwrap(), GElement::point(0.25));
        assert_eq!(g_inverse(&g(-1.0, 2.0)), Err(DivisionError::NotInvertible));
        assert_eq!(g_inverse(&GElement::zero()), Err(DivisionError::NotInvertible));
    }

    #[test]
    fn g_inverse_covers_every_invertible_class() {
        // a wholly negative interval, an improper class on each side
        for x in [g(-2.0, -1.0), g(1.0, 0.5), g(-1.0, -6.0), g(5.0, 3.0)] {
            let inv = g_inverse(&x).unwrap();
            assert_close(&bullet(&x, &inv), &GElement::point(1.0), 1e-12);
            // the reduced algebra inverse is the coordinate reciprocal
            assert_close(&inv, &g(1.0 / x.p, 1.0 / x.q), 1e-12);
            assert_close(&g_inverse(&inv).unwrap(), &x, 1e-12);
        }
    }

    #[test]
    fn divide_invertible_examples() {
        let (q, proper) = divide_invertible(&g(3.0, 8.0), &g(1.0, 2.0)).unwrap();
        assert_eq!(q, g(3.0, 4.0));
        assert!(proper);
        assert_eq!(bullet(&g(1.0, 2.0), &q), g(3.0, 8.0));

        let (q, proper) = divide_invertible(&g(2.0, 3.0), &GElement::point(2.0)).unwrap();
        assert_eq!(q, g(1.0, 1.5));
        assert!(proper);

        let (q, proper) = divide_invertible(&g(1.0, 2.0), &g(2.0, 3.0)).unwrap();
        assert_close(&q, &g(0.5, 2.0 / 3.0), 1e-15);
        assert!(proper);

        // ratio condition fails: quotient turns improper, flag says so
        let (q, proper) = divide_invertible(&g(1.0, 3.0), &g(1.0, 4.0)).unwrap();
        assert_eq!(q, g(1.0, 0.75));
        assert!(!proper);

        assert_eq!(
            divide_invertible(&g(1.0, 2.0), &g(-1.0, 2.0)),
            Err(DivisionError::DivisorNotPositive)
        );
        assert_eq!(
            divide_invertible(&g(1.0, 2.0), &g(-3.0, -2.0)),
            Err(DivisionError::DivisorNotPositive)
        );
    }

    #[test]
    fn divide_straddle_worked_example() {
        // ([-2,3],0) / ([-4,2],0) = ([-8/12, 2/12], 0)
        let y = g(-2.0, 3.0);
        let x = g(-4.0, 2.0);
        let q = divide_straddle(&y, &x).unwrap();
        assert_close(&q, &g(-8.0 / 12.0, 2.0 / 12.0), 1e-12);
        assert_close(&bullet(&x, &q), &y, 1e-12);
    }

    #[test]
    fn divide_straddle_errors() {
        assert_eq!(
            divide_straddle(&g(-2.0, 3.0), &g(-1.0, 1.0)),
            Err(DivisionError::CenteredDivisor)
        );
        match divide_straddle(&g(-5.0, 1.0), &g(-4.0, 2.0)) {
            Err(DivisionError::RatioConditionFailed { z2, z3 }) => {
                assert!(z2 > 0.0);
                assert!(z3 < 0.0);
            }
            other => panic!("expected ratio failure, got {other:?}"),
        }
    }

    #[test]
    fn euclid_div_worked_example() {
        let y = g(1.0, 3.0);
        let x = g(1.0, 4.0);
        let res = euclid_div(&y, &x).unwrap();
        assert_eq!(res.kind, DivisionKind::Euclidean);
        assert_close(&res.quotient, &GElement::point(2.0 / 3.0), 1e-12);
        assert_close(&res.remainder, &GElement::point(1.0 / 3.0), 1e-12);
        let back = bullet(&x, &res.quotient).add(&res.remainder);
        assert_close(&back, &y, 1e-12);
    }

    #[test]
    fn euclid_div_point_remainder_center_is_minimal() {
        // grid search over candidate point remainders: r is feasible when
        // z1 = (y1-r)/x1 and z2 = (y2-r)/x2 give a nonnegative proper class
        let (x1, x2, y1, y2) = (1.0, 4.0, 1.0, 3.0);
        let res = euclid_div(&g(y1, y2), &g(x1, x2)).unwrap();
        let r_star = res.remainder.center();
        let mut r = -1.0;
        while r < r_star - 1e-6 {
            let z1 = (y1 - r) / x1;
            let z2 = (y2 - r) / x2;
            let feasible = z1 >= 0.0 && z1 <= z2;
            assert!(!feasible, "remainder {r} beats the returned {r_star}");
            r += 1e-3;
        }
    }

    #[test]
    fn euclid_div_errors() {
        assert_eq!(
            euclid_div(&g(1.0, 2.0), &g(1.0, 2.0)),
            Err(DivisionError::ConditionFailed)
        );
        assert_eq!(
            euclid_div(&g(1.0, 2.0), &GElement::point(3.0)),
            Err(DivisionError::PointDivisorDegenerate)
        );
        assert_eq!(
            euclid_div(&g(1.0, 2.0), &g(-1.0, 2.0)),
            Err(DivisionError::Unsupported)
        );
    }

    #[test]
    fn euclid_div_straddle_worked_example() {
        // ([-5,1],0) / ([-4,2],0): Z = ([-1/4,0],0), R = ([-9/2,0],0)
        let y = g(-5.0, 1.0);
        let x = g(-4.0, 2.0);
        let res = euclid_div_straddle(&y, &x).unwrap();
        assert_eq!(res.kind, DivisionKind::EuclideanStraddle);
        assert_close(&res.quotient, &g(-0.25, 0.0), 1e-12);
        assert_close(&res.remainder, &g(-4.5, 0.0), 1e-12);
        let partial = bullet(&x, &res.quotient);
        assert_close(&partial, &g(-0.5, 1.0), 1e-12);
        assert_close(&partial.add(&res.remainder), &y, 1e-12);
    }

    #[test]
    fn euclid_div_straddle_mirror_case() {
        // ratios on the other side: x1*y1 < x2*y2 and x1*y2 > x2*y1
        let y = g(-1.0, 5.0);
        let x = g(-4.0, 2.0);
        let res = euclid_div_straddle(&y, &x).unwrap();
        assert_close(&res.quotient, &g(-0.5, 0.0), 1e-12);
        assert_close(&res.remainder, &g(0.0, 3.0), 1e-12);
        assert_close(&bullet(&x, &res.quotient).add(&res.remainder), &y, 1e-12);
    }

    #[test]
    fn euclid_div_straddle_condition_failures() {
        // x1 < x2: the theorem's hypothesis fails
        assert_eq!(
            euclid_div_straddle(&g(-5.0, 1.0), &g(-2.0, 4.0)),
            Err(DivisionError::ConditionFailed)
        );
        // both ratios on the same side: exact division applies instead
        assert_eq!(
            euclid_div_straddle(&g(-2.0, 3.0), &g(-4.0, 2.0)),
            Err(DivisionError::ConditionFailed)
        );
    }

    #[test]
    fn euclid_div_straddle_remainder_minimal_for_half_line_quotients() {
        // grid search over quotients Z = ([-z3, 0], 0): the closed form
        // picks the largest feasible z3 and hence the shortest remainder
        let (x1, x2, y1, y2) = (4.0, 2.0, 5.0, 1.0);
        let res = euclid_div_straddle(&g(-y1, y2), &g(-x1, x2)).unwrap();
        let l_star = res.remainder.length();
        let mut best = f64::INFINITY;
        let mut z3 = 0.0;
        while z3 <= (y1 / x2).min(y2 / x1) + 1e-9 {
            let r1 = y1 - x2 * z3;
            let r2 = y2 - x1 * z3;
            if r1 >= -1e-12 && r2 >= -1e-12 {
                best = best.min(r1.max(0.0) + r2.max(0.0));
            }
            z3 += 1e-3;
        }
        assert!(l_star <= best + 1e-2, "{l_star} vs grid best {best}");

        // the restriction to half-line quotients matters: a quotient on the
        // other half-line reconstructs the same dividend with a shorter
        // remainder, so minimality is only relative to the chosen shape
        let z = g(0.0, 0.5);
        let r = g(-3.0, 0.0);
        let back = bullet(&g(-x1, x2), &z).add(&r);
        assert_close(&back, &g(-y1, y2), 1e-12);
        assert!(r.length() < l_star);
    }

    #[test]
    fn div_auto_dispatch() {
        let res = div_auto(&g(3.0, 8.0), &g(1.0, 2.0)).unwrap();
        assert_eq!(res.kind, DivisionKind::ExactInvertible);
        assert_eq!(res.quotient, g(3.0, 4.0));
        assert!(res.remainder.is_zero());

        let res = div_auto(&g(-2.0, 3.0), &g(-4.0, 2.0)).unwrap();
        assert_eq!(res.kind, DivisionKind::ExactStraddle);
        assert_close(&res.quotient, &g(-2.0 / 3.0, 1.0 / 6.0), 1e-12);

        let res = div_auto(&g(1.0, 3.0), &g(1.0, 4.0)).unwrap();
        assert_eq!(res.kind, DivisionKind::Euclidean);

        let res = div_auto(&g(-5.0, 1.0), &g(-4.0, 2.0)).unwrap();
        assert_eq!(res.kind, DivisionKind::EuclideanStraddle);
    }

    #[test]
    fn div_auto_errors() {
        assert_eq!(
            div_auto(&g(1.0, 2.0), &GElement::zero()),
            Err(DivisionError::DivisionByZeroPoint)
        );
        // symmetric straddling divisor
        assert_eq!(
            div_auto(&g(-2.0, 3.0), &g(-1.0, 1.0)),
            Err(DivisionError::Unsupported)
        );
        // mixed ratios with x1 < x2: no Euclidean case is stated
        assert_eq!(
            div_auto(&g(-5.0, 1.0), &g(-2.0, 3.0)),
            Err(DivisionError::Unsupported)
        );
    }

    #[test]
    fn div_auto_exact_quotient_for_improper_dividend() {
        // dual inputs divide cleanly through the coordinate reciprocal
        let y = GElement::from_negative(&Interval::new(3.0, 8.0).unwrap());
        let x = GElement::from_negative(&Interval::new(1.0, 2.0).unwrap());
        let res = div_auto(&y, &x).unwrap();
        assert_eq!(res.kind, DivisionKind::ExactInvertible);
        assert_close(&bullet(&x, &res.quotient), &y, 1e-12);
    }

    proptest! {
        #[test]
        fn g_inverse_roundtrip(p in 0.1f64..10.0, q in 0.1f64..10.0, flip in proptest::bool::ANY) {
            let x = if flip { g(-p, -q) } else { g(p, q) };
            let inv = g_inverse(&x).unwrap();
            prop_assert!(close(&bullet(&x, &inv), &GElement::point(1.0), 1e-12));
            prop_assert!(close(&g_inverse(&inv).unwrap(), &x, 1e-12));
        }

        #[test]
        fn divide_invertible_reconstructs_when_proper(
            x1 in 0.1f64..10.0, dx in 0.0f64..10.0,
            y1 in 0.0f64..10.0, dy in 0.0f64..10.0,
        ) {
            let x = g(x1, x1 + dx);
            let y = g(y1, y1 + dy);
            let (q, proper) = divide_invertible(&y, &x).unwrap();
            if proper {
                prop_assert!(close(&bullet(&x, &q), &y, 1e-12));
            }
        }

        #[test]
        fn divide_straddle_reconstructs(
            x1 in 0.1f64..10.0, x2 in 0.1f64..10.0,
            z2 in 0.01f64..5.0, z3 in 0.01f64..5.0,
        ) {
            prop_assume!((x1 - x2).abs() > 1e-3);
            // build the dividend as an exact product so the ratio
            // conditions hold by construction
            let x = g(-x1, x2);
            let y = g(-(x1 * z2 + x2 * z3), x2 * z2 + x1 * z3);
            let q = divide_straddle(&y, &x).unwrap();
            prop_assert!(close(&q, &g(-z3, z2), 1e-9));
            prop_assert!(close(&bullet(&x, &q), &y, 1e-9));
        }

        #[test]
        fn euclid_div_reconstructs(
            x1 in 0.0f64..5.0, dx in 0.1f64..5.0,
            y1 in 0.1f64..5.0, dy in 0.0f64..5.0,
        ) {
            let x = g(x1, x1 + dx);
            let y = g(y1, y1 + dy);
            match euclid_div(&y, &x) {
                Ok(res) => {
                    prop_assert_eq!(res.remainder.length(), 0.0);
                    prop_assert!(res.remainder.center() > -1e-12);
                    let back = bullet(&x, &res.quotient).add(&res.remainder);
                    prop_assert!(close(&back, &y, 1e-9));
                }
                Err(DivisionError::ConditionFailed) if x1 > 0.0 => {
                    // exact division applies: the coordinate quotient is proper
                    let (q, proper) = divide_invertible(&y, &x).unwrap();
                    prop_assert!(proper);
                    prop_assert!(close(&bullet(&x, &q), &y, 1e-9));
                }
                Err(DivisionError::ConditionFailed) => {}
                Err(e) => prop_assert!(false, "unexpected error {:?}", e),
            }
        }

        #[test]
        fn div_auto_reconstructs_all_kinds(
            a in -5.0f64..5.0, b in -5.0f64..5.0,
            c in -5.0f64..5.0, d in -5.0f64..5.0,
        ) {
            let y = g(a, b);
            let x = g(c, d);
            if let Ok(res) = div_auto(&y, &x) {
                let back = bullet(&x, &res.quotient).add(&res.remainder);
                prop_assert!(close(&back, &y, 1e-6), "kind {:?}", res.kind);
            }
        }
    }
}
