//! Bridge between interval classes and the 4-dimensional algebra: the
//! interval embedding, its extension to the completed space, the
//! projection back, and the induced product on interval classes.

use crate::a4::A4Element;
use crate::gelement::{Canonical, GElement};
use crate::interval::Interval;

/// Embed a proper interval. The three cases overlap when an endpoint is
/// zero and agree there; the first matching case wins.
pub fn phi(x: &Interval) -> A4Element {
    let (x1, x2) = (x.lo(), x.hi());
    if x1 >= 0.0 && x2 >= 0.0 {
        A4Element::new(x1, x2, 0.0, 0.0)
    } else if x1 <= 0.0 && x2 >= 0.0 {
        A4Element::new(0.0, x2, -x1, 0.0)
    } else {
        A4Element::new(0.0, 0.0, -x1, -x2)
    }
}

/// Extend the embedding to the completed space: improper classes map to
/// the negated image of their underlying interval.
pub fn phi_bar(x: &GElement) -> A4Element {
    match x.to_canonical() {
        Canonical::Positive(a) => phi(&a),
        Canonical::Negative(a) => phi(&a).neg(),
        Canonical::Point(v) => phi(&Interval::point(v)),
    }
}

/// Project an algebra element back to the completed space along the
/// relation identifying `(t, s, t, s)` translates: the class of
/// `(x1, x2, x3, x4)` is the interval element with coordinates
/// `(x1 - x3, x2 - x4)`.
pub fn reduce_mod_r(x: &A4Element) -> GElement {
    GElement::new(x.x1 - x.x3, x.x2 - x.x4)
}

/// The canonical multiplicative representative of an interval class,
/// a sign chart on the raw coordinates `(p, q)`:
///
/// * `p, q >= 0` -> `(p, q, 0, 0)`
/// * `p <= 0 <= q` -> `(0, q, -p, 0)`
/// * `p, q <= 0` -> `(0, 0, -p, -q)`
/// * `q <= 0 <= p` -> `(p, 0, 0, -q)`
///
/// On proper classes and points this coincides with `phi_bar`. On
/// improper classes it is the relation-equivalent representative the
/// division theory multiplies through (the one with `x_i >= 0` up to the
/// stated signs), not the negated image: the algebra product does not
/// descend to relation classes, and only this representative makes the
/// product of a class with its inverse the point 1.
pub fn multiplicative_image(x: &GElement) -> A4Element {
    let (p, q) = (x.p, x.q);
    if p >= 0.0 && q >= 0.0 {
        A4Element::new(p, q, 0.0, 0.0)
    } else if p <= 0.0 && q >= 0.0 {
        A4Element::new(0.0, q, -p, 0.0)
    } else if p <= 0.0 && q <= 0.0 {
        A4Element::new(0.0, 0.0, -p, -q)
    } else {
        A4Element::new(p, 0.0, 0.0, -q)
    }
}

/// The induced product on interval classes: multiply canonical
/// multiplicative representatives in the algebra, then project back.
pub fn bullet(x: &GElement, y: &GElement) -> GElement {
    reduce_mod_r(&multiplicative_image(x).mul(&multiplicative_image(y)))
}

/// Iterated bullet product; the empty product is the point 1.
pub fn g_pow(x: &GElement, n: u32) -> GElement {
    let mut acc = GElement::point(1.0);
    for _ in 0..n {
        acc = bullet(&acc, x);
    }
    acc
}

/// Interval-level product through the algebra. Equals the classical
/// product unless both factors straddle zero strictly; in that case it
/// returns `[x1*y2 + x2*y1, x2*y2 + x1*y1]`, an envelope containing the
/// classical product.
pub fn mul_envelope(x: &Interval, y: &Interval) -> Interval {
    let strictly_straddles = |i: &Interval| i.lo() < 0.0 && 0.0 < i.hi();
    if strictly_straddles(x) && strictly_straddles(y) {
        let (x1, x2) = (x.lo(), x.hi());
        let (y1, y2) = (y.lo(), y.hi());
        Interval::new(x1 * y2 + x2 * y1, x2 * y2 + x1 * y1)
            .expect("envelope endpoints are ordered for straddling factors")
    } else {
        x.mul_classical(y)
    }
}
