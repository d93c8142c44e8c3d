//! Generalized interval arithmetic: the group completion of the interval
//! semigroup, a four-dimensional algebra that linearizes the interval
//! product, exact and Euclidean division, a norm with continuity and
//! differentiability probes, and a simplex solver with interval
//! right-hand sides.

pub mod a4;
pub mod analysis;
pub mod division;
pub mod embed;
pub mod gelement;
pub mod interval;
pub mod lp;
pub mod text;

pub use a4::{A4Element, A4Error, A4Order, IdealMembership};
pub use analysis::{
    ball_contains, ball_vertices, bullet_differential, candidate_differential_q2,
    continuity_probe, differentiability_probe, poly_eval, q2, q2_vs_square, AnalysisError,
    LinearMap2, ProbeRegion, ProbeReport, ProbeVerdict,
};
pub use division::{
    div_auto, divide_invertible, divide_straddle, euclid_div, euclid_div_straddle, g_inverse,
    DivisionError, DivisionKind, DivisionResult,
};
pub use embed::{bullet, g_pow, mul_envelope, multiplicative_image, phi, phi_bar, reduce_mod_r};
pub use gelement::{fmt_sig12, Canonical, GElement, GOrder, SignClass};
pub use interval::{Interval, IntervalError};
pub use text::{eval_expr, parse_gelement, render_gelement, TextError};

pub use lp::{
    outcome_to_json, solve, solve_with_trace, ConstraintForm, LpError, LpOutcome, LpProblem,
    PivotChoice, Tableau,
};
