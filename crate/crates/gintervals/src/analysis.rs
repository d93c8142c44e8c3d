//! Metric geometry and calculus on the completed space: ε-balls, the
//! square map q2, polynomial evaluation, and numerical probes for
//! continuity and differentiability.

use crate::embed::{bullet, g_pow};
use crate::gelement::{Canonical, GElement};
use crate::interval::Interval;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("even the smallest tested η violates the continuity bound")]
    ContinuityFailure,
}

/// A 2x2 real matrix acting on (p, q) coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearMap2 {
    pub m: [[f64; 2]; 2],
}

impl LinearMap2 {
    pub fn new(m: [[f64; 2]; 2]) -> Self {
        LinearMap2 { m }
    }

    pub fn apply(&self, h: &GElement) -> GElement {
        GElement::new(
            self.m[0][0] * h.p + self.m[0][1] * h.q,
            self.m[1][0] * h.p + self.m[1][1] * h.q,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeVerdict {
    VanishesLinearly,
    BoundedAway,
    Diverges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeRegion {
    Full,
    /// The wedge 0 < p-offset <= q-offset from the first case of the
    /// non-differentiability proof.
    FirstProofRegion,
}

impl ProbeRegion {
    fn keeps(&self, h: &GElement) -> bool {
        match self {
            ProbeRegion::Full => true,
            ProbeRegion::FirstProofRegion => 0.0 < h.p && h.p <= h.q,
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            ProbeRegion::Full => "full",
            ProbeRegion::FirstProofRegion => "first-region",
        }
    }
}

/// Per-radius suprema of the differentiability difference quotient.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub radii: Vec<f64>,
    pub ratios: Vec<f64>,
    pub region: ProbeRegion,
    pub verdict: ProbeVerdict,
}

impl ProbeReport {
    /// Flat tabular rendering: one `radius ratio region` line per radius.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for (r, q) in self.radii.iter().zip(&self.ratios) {
            out.push_str(&format!("{r:.6e} {q:.6e} {}\n", self.region.tag()));
        }
        out
    }
}

fn canonical_interval_of(x: &GElement) -> Interval {
    match x.to_canonical() {
        Canonical::Positive(a) | Canonical::Negative(a) => a,
        Canonical::Point(v) => Interval::point(v),
    }
}

/// Vertices of the ε-ball parallelogram around x0, in (p, q) coordinates.
pub fn ball_vertices(x0: &GElement, eps: f64) -> [(f64, f64); 4] {
    let (a, b) = (x0.p, x0.q);
    [
        (a - eps, b - eps),
        (a + eps / 2.0, b - eps / 2.0),
        (a + eps, b + eps),
        (a - eps / 2.0, b + eps / 2.0),
    ]
}

pub fn ball_contains(x0: &GElement, eps: f64, x: &GElement) -> bool {
    x.sub(x0).norm() < eps
}

/// The square map: squares of the canonical interval, with the improper
/// classes folded onto the proper ones.
pub fn q2(x: &GElement) -> GElement {
    let k = canonical_interval_of(x);
    let (a, b) = (k.lo(), k.hi());
    if a >= 0.0 {
        GElement::new(a * a, b * b)
    } else if b <= 0.0 {
        GElement::new(b * b, a * a)
    } else {
        GElement::new(0.0, (a * a).max(b * b))
    }
}

/// q2 next to the bullet square, plus the interval-inclusion flag.
pub fn q2_vs_square(x: &GElement) -> (GElement, GElement, bool) {
    let s = q2(x);
    let sq = bullet(x, x);
    let included = s.interval_subset_of(&sq);
    (s, sq, included)
}

/// Σ aᵢ·xⁱ with the constant term on the point 1.
pub fn poly_eval(coeffs: &[f64], x: &GElement) -> GElement {
    let mut acc = GElement::zero();
    for (i, &a) in coeffs.iter().enumerate() {
        acc = acc.add(&g_pow(x, i as u32).scale(a));
    }
    acc
}

/// Uniform samples over the closed radius-r ball parallelogram at x0.
fn sample_ball(x0: &GElement, r: f64, samples: usize, seed: u64) -> Vec<GElement> {
    let mut rng = StdRng::seed_from_u64(seed);
    // edges from the vertex (-r, -r) span the parallelogram
    let e1 = (1.5 * r, 0.5 * r);
    let e2 = (0.5 * r, 1.5 * r);
    (0..samples)
        .map(|_| {
            let u: f64 = rng.gen();
            let v: f64 = rng.gen();
            GElement::new(
                x0.p - r + u * e1.0 + v * e2.0,
                x0.q - r + u * e1.1 + v * e2.1,
            )
        })
        .collect()
}

fn continuity_holds(
    f: &dyn Fn(&GElement) -> GElement,
    x0: &GElement,
    eps: f64,
    eta: f64,
    samples: usize,
    seed: u64,
) -> bool {
    let fx0 = f(x0);
    sample_ball(x0, eta, samples, seed)
        .iter()
        .filter(|x| x.sub(x0).norm() < eta)
        .all(|x| f(x).sub(&fx0).norm() < eps)
}

/// Largest tested η (by bisection over [ε·2⁻²⁰, ε]) such that every
/// sampled X with ∥X∖x0∥ < η satisfies ∥f(X)∖f(x0)∥ < ε.
pub fn continuity_probe(
    f: &dyn Fn(&GElement) -> GElement,
    x0: &GElement,
    eps: f64,
    samples: usize,
    seed: u64,
) -> Result<f64, AnalysisError> {
    assert!(eps > 0.0 && samples >= 1);
    if continuity_holds(f, x0, eps, eps, samples, seed) {
        return Ok(eps);
    }
    let mut lo = eps * 2f64.powi(-20);
    if !continuity_holds(f, x0, eps, lo, samples, seed) {
        return Err(AnalysisError::ContinuityFailure);
    }
    let mut hi = eps;
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if continuity_holds(f, x0, eps, mid, samples, seed) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Matrix of h ↦ 2·x0•h on proper nonnegative differences: diag(2a, 2b).
pub fn candidate_differential_q2(x0: &GElement) -> LinearMap2 {
    let k = canonical_interval_of(x0);
    LinearMap2::new([[2.0 * k.lo(), 0.0], [0.0, 2.0 * k.hi()]])
}

/// The bullet-product candidate L(h) = 2·x0•h of the non-differentiability
/// theorem; chart-dependent, hence not a single matrix.
pub fn bullet_differential(x0: GElement) -> impl Fn(&GElement) -> GElement {
    move |h| bullet(&x0, h).scale(2.0)
}

/// Sup of ∥f(X)∖f(x0)∖L(X∖x0)∥ / ∥X∖x0∥ per radius, with a verdict on
/// how the suprema behave as the radius shrinks.
pub fn differentiability_probe(
    f: &dyn Fn(&GElement) -> GElement,
    x0: &GElement,
    l: &dyn Fn(&GElement) -> GElement,
    radii: &[f64],
    samples: usize,
    seed: u64,
    region: ProbeRegion,
) -> ProbeReport {
    assert!(radii.windows(2).all(|w| w[0] > w[1]) && radii.iter().all(|&r| r > 0.0));
    let fx0 = f(x0);
    let ratios: Vec<f64> = radii
        .iter()
        .map(|&r| {
            let mut worst: f64 = 0.0;
            for x in sample_ball(x0, r, samples, seed) {
                let h = x.sub(x0);
                let n = h.norm();
                if n < r / 2.0 || n > r || !region.keeps(&h) {
                    continue;
                }
                let defect = f(&x).sub(&fx0).sub(&l(&h)).norm() / n;
                worst = worst.max(defect);
            }
            worst
        })
        .collect();
    let verdict = classify(radii, &ratios);
    ProbeReport {
        radii: radii.to_vec(),
        ratios,
        region,
        verdict,
    }
}

fn classify(radii: &[f64], ratios: &[f64]) -> ProbeVerdict {
    if ratios.iter().all(|&q| q <= 1e-12) {
        return ProbeVerdict::VanishesLinearly;
    }
    // 10x growth per decade of shrinkage, with slack for subleading terms
    if ratios.iter().all(|&q| q > 0.0) && log_log_slope(radii, ratios) <= -0.9 {
        return ProbeVerdict::Diverges;
    }
    // least-squares fit of ratio = C·r through the origin
    let num: f64 = radii.iter().zip(ratios).map(|(r, q)| r * q).sum();
    let den: f64 = radii.iter().map(|r| r * r).sum();
    let c = num / den;
    let res: f64 = radii
        .iter()
        .zip(ratios)
        .map(|(r, q)| (q - c * r).powi(2))
        .sum::<f64>()
        .sqrt();
    let scale: f64 = ratios.iter().map(|q| q * q).sum::<f64>().sqrt();
    if res < 0.10 * scale {
        ProbeVerdict::VanishesLinearly
    } else {
        ProbeVerdict::BoundedAway
    }
}

fn log_log_slope(radii: &[f64], ratios: &[f64]) -> f64 {
    let n = radii.len() as f64;
    let xs: Vec<f64> = radii.iter().map(|r| r.ln()).collect();
    let ys: Vec<f64> = ratios.iter().map(|q| q.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    cov / var
}
