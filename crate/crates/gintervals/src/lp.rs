//! Simplex solver for linear programs whose right-hand sides are interval
//! classes rather than reals.
//!
//! The constraint matrix and objective stay real; only the right-hand side
//! column lives in the completed interval space. The entering rule is the
//! classical largest-positive-coefficient rule; the leaving rule minimizes
//! the *length* ratio `l(Y_j) / a_jk` over rows with a positive pivot
//! candidate, which keeps every right-hand side a proper (or point) class
//! after the Gauss update `l_j -> a_ik l_j - a_jk l_i`. Ties (in
//! particular the all-point case, where every length is zero) fall back to
//! the center ratio, recovering the classical simplex, then to the row
//! index.

use crate::gelement::GElement;
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

/// Entering-rule threshold: objective coefficients at or below this are
/// treated as nonpositive (optimality).
const COST_TOL: f64 = 1e-9;

/// Leaving-rule threshold: column entries at or below this do not qualify
/// as pivots.
const PIVOT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LpError {
    #[error("constraint matrix, right-hand side and objective dimensions disagree")]
    InconsistentDimensions,
    #[error("right-hand side entry {0} is a negative class or negative point")]
    NegativeRhs(usize),
    #[error("right-hand side entry {0} became a negative class after a pivot")]
    PositivityLost(usize),
    #[error("unsupported optimization sense {0:?} (only \"max\" is accepted)")]
    UnsupportedSense(String),
}

/// Constraint form of a problem: inequalities get slack variables appended
/// to build the initial basis; equalities must arrive with an identity
/// sub-basis already present (no Phase-I search is implemented).
#[derive(Debug, Clone, PartialEq)]
pub enum ConstraintForm {
    Inequalities,
    EqualitiesWithBasis(Vec<usize>),
}

/// A maximization problem `max c.x` subject to `A x <= B` (or `= B`),
/// `x >= 0`, with `B` a column of proper classes or nonnegative points.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    pub a: Vec<Vec<f64>>,
    pub b: Vec<GElement>,
    pub c: Vec<f64>,
    pub form: ConstraintForm,
}

impl LpProblem {
    pub fn inequalities(a: Vec<Vec<f64>>, b: Vec<GElement>, c: Vec<f64>) -> Self {
        LpProblem {
            a,
            b,
            c,
            form: ConstraintForm::Inequalities,
        }
    }

    pub fn equalities_with_basis(
        a: Vec<Vec<f64>>,
        b: Vec<GElement>,
        c: Vec<f64>,
        basis: Vec<usize>,
    ) -> Self {
        LpProblem {
            a,
            b,
            c,
            form: ConstraintForm::EqualitiesWithBasis(basis),
        }
    }

    /// Number of decision variables (before slacks).
    pub fn num_vars(&self) -> usize {
        self.c.len()
    }

    /// Number of constraints.
    pub fn num_constraints(&self) -> usize {
        self.b.len()
    }

    /// Iteration cap used by the command-line front end: generous for
    /// non-degenerate problems, finite under cycling.
    pub fn default_max_iters(&self) -> usize {
        10 * (self.num_vars() + self.num_constraints())
    }

    /// Parse a problem document: `{"objective": [..], "constraints":
    /// [{"coeffs": [..], "rhs": {"lo": r, "hi": r} | {"point": r}}, ..],
    /// "sense": "max"}`.
    pub fn from_json_str(text: &str) -> Result<LpProblem, String> {
        let doc: ProblemDoc = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if doc.sense != "max" {
            return Err(LpError::UnsupportedSense(doc.sense).to_string());
        }
        let mut a = Vec::new();
        let mut b = Vec::new();
        for cons in doc.constraints {
            a.push(cons.coeffs);
            b.push(match cons.rhs {
                RhsDoc::Span { lo, hi } => GElement::new(lo, hi),
                RhsDoc::Point { point } => GElement::point(point),
            });
        }
        Ok(LpProblem::inequalities(a, b, doc.objective))
    }
}

#[derive(Deserialize)]
struct ProblemDoc {
    objective: Vec<f64>,
    constraints: Vec<ConstraintDoc>,
    sense: String,
}

#[derive(Deserialize)]
struct ConstraintDoc {
    coeffs: Vec<f64>,
    rhs: RhsDoc,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RhsDoc {
    Span { lo: f64, hi: f64 },
    Point { point: f64 },
}

/// Outcome of the entering/leaving rule on the current tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotChoice {
    Pivot { row: usize, col: usize },
    NoPositiveCost,
    UnboundedColumn(usize),
}

/// Result of a full solve.
#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal {
        x: Vec<GElement>,
        objective: GElement,
        pivots: usize,
    },
    Unbounded {
        column: usize,
    },
    IterationCap,
}

/// A simplex tableau in canonical form: real coefficient rows, a
/// right-hand-side column of interval classes, a reduced-cost row, and an
/// identity basis.
#[derive(Debug, Clone)]
pub struct Tableau {
    rows: Vec<Vec<f64>>,
    rhs: Vec<GElement>,
    obj: Vec<f64>,
    obj_value: GElement,
    basis: Vec<usize>,
    num_vars: usize,
    iterations: usize,
}

impl Tableau {
    /// Build the initial tableau: slacks appended for inequality form, and
    /// the reduced-cost row priced out against the starting basis.
    pub fn new(problem: &LpProblem) -> Result<Tableau, LpError> {
        let p = problem.b.len();
        let n = problem.c.len();
        if problem.a.len() != p || problem.a.iter().any(|row| row.len() != n) {
            return Err(LpError::InconsistentDimensions);
        }
        for (i, bi) in problem.b.iter().enumerate() {
            if bi.p > bi.q || (bi.p == bi.q && bi.p < 0.0) {
                return Err(LpError::NegativeRhs(i));
            }
        }

        let (rows, obj, basis) = match &problem.form {
            ConstraintForm::Inequalities => {
                let mut rows = Vec::with_capacity(p);
                for (i, arow) in problem.a.iter().enumerate() {
                    let mut row = arow.clone();
                    row.extend((0..p).map(|j| if j == i { 1.0 } else { 0.0 }));
                    rows.push(row);
                }
                let mut obj = problem.c.clone();
                obj.extend(std::iter::repeat_n(0.0, p));
                let basis = (n..n + p).collect();
                (rows, obj, basis)
            }
            ConstraintForm::EqualitiesWithBasis(basis) => {
                if basis.len() != p || basis.iter().any(|&j| j >= n) {
                    return Err(LpError::InconsistentDimensions);
                }
                (problem.a.clone(), problem.c.clone(), basis.clone())
            }
        };

        let mut t = Tableau {
            rows,
            rhs: problem.b.clone(),
            obj,
            obj_value: GElement::zero(),
            basis,
            num_vars: n,
            iterations: 0,
        };
        // Price out basic variables with nonzero cost (a no-op for slack
        // bases) so the objective row holds reduced costs.
        for r in 0..p {
            let cb = t.obj[t.basis[r]];
            if cb != 0.0 {
                for j in 0..t.obj.len() {
                    t.obj[j] -= cb * t.rows[r][j];
                }
                t.obj_value = t.obj_value.add(&t.rhs[r].scale(cb));
            }
        }
        Ok(t)
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// Current objective value (a class: the spread of the optimum is an
    /// interval whenever the right-hand sides are).
    pub fn objective_value(&self) -> GElement {
        self.obj_value
    }

    /// Values of the original decision variables: the right-hand side of
    /// the row a variable is basic in, the zero point otherwise.
    pub fn solution(&self) -> Vec<GElement> {
        let mut x = vec![GElement::zero(); self.num_vars];
        for (r, &j) in self.basis.iter().enumerate() {
            if j < self.num_vars {
                x[j] = self.rhs[r];
            }
        }
        x
    }

    /// Entering rule: largest positive reduced cost (ties to the smallest
    /// index). Leaving rule: smallest length ratio `l(Y_j) / a_jk` over
    /// rows with `a_jk > 0`; ties by center ratio `c(Y_j) / a_jk`, then by
    /// row index.
    pub fn choose_pivot(&self) -> PivotChoice {
        let mut col = None;
        let mut best_cost = COST_TOL;
        for (j, &cj) in self.obj.iter().enumerate() {
            if cj > best_cost {
                best_cost = cj;
                col = Some(j);
            }
        }
        let col = match col {
            Some(j) => j,
            None => return PivotChoice::NoPositiveCost,
        };

        let mut best: Option<(usize, f64, f64)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            let a = row[col];
            if a <= PIVOT_TOL {
                continue;
            }
            let lr = self.rhs[r].length() / a;
            let cr = self.rhs[r].center() / a;
            match best {
                None => best = Some((r, lr, cr)),
                Some((_, blr, bcr)) => {
                    let ltol = 1e-9 * (1.0 + blr.abs().max(lr.abs()));
                    if lr < blr - ltol {
                        best = Some((r, lr, cr));
                    } else if (lr - blr).abs() <= ltol {
                        let ctol = 1e-9 * (1.0 + bcr.abs().max(cr.abs()));
                        if cr < bcr - ctol {
                            best = Some((r, lr, cr));
                        }
                    }
                }
            }
        }
        match best {
            Some((row, _, _)) => PivotChoice::Pivot { row, col },
            None => PivotChoice::UnboundedColumn(col),
        }
    }

    /// One Gauss pivot: the pivot row is rescaled to make the pivot 1,
    /// then every other row `l_j` becomes `a_ik l_j - a_jk l_i` (with
    /// `a_ik = 1` after the rescale), the right-hand sides updating in
    /// class arithmetic. Guards that no right-hand side leaves the proper
    /// cone — a failure here means the leaving rule was violated.
    pub fn pivot_step(&mut self, row: usize, col: usize) -> Result<(), LpError> {
        let pivot = self.rows[row][col];
        assert!(pivot > 0.0, "pivot entry must be positive");

        let inv = 1.0 / pivot;
        for v in self.rows[row].iter_mut() {
            *v *= inv;
        }
        self.rhs[row] = self.rhs[row].scale(inv);

        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row];
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let factor = self.rows[r][col];
            if factor == 0.0 {
                continue;
            }
            for (v, pv) in self.rows[r].iter_mut().zip(&pivot_row) {
                *v -= factor * pv;
            }
            self.rhs[r] = self.rhs[r].sub(&pivot_rhs.scale(factor));
        }
        let cost = self.obj[col];
        for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
            *v -= cost * pv;
        }
        self.obj_value = self.obj_value.add(&pivot_rhs.scale(cost));

        self.basis[row] = col;
        self.iterations += 1;

        for (r, b) in self.rhs.iter().enumerate() {
            if b.p > b.q + 1e-9 * (1.0 + b.norm()) {
                return Err(LpError::PositivityLost(r));
            }
        }
        Ok(())
    }
}

/// Run the simplex loop to optimality, unboundedness or the iteration
/// cap. Deterministic: the pivot rules are tie-broken totally.
pub fn solve(problem: &LpProblem, max_iters: usize) -> Result<LpOutcome, LpError> {
    solve_with_trace(problem, max_iters).map(|(out, _)| out)
}

/// Like [`solve`], additionally returning the `(row, col)` pivot sequence.
pub fn solve_with_trace(
    problem: &LpProblem,
    max_iters: usize,
) -> Result<(LpOutcome, Vec<(usize, usize)>), LpError> {
    let mut t = Tableau::new(problem)?;
    let mut trace = Vec::new();
    loop {
        match t.choose_pivot() {
            PivotChoice::NoPositiveCost => {
                return Ok((
                    LpOutcome::Optimal {
                        x: t.solution(),
                        objective: t.objective_value(),
                        pivots: t.iterations(),
                    },
                    trace,
                ));
            }
            PivotChoice::UnboundedColumn(column) => {
                return Ok((LpOutcome::Unbounded { column }, trace));
            }
            PivotChoice::Pivot { row, col } => {
                if t.iterations() >= max_iters {
                    return Ok((LpOutcome::IterationCap, trace));
                }
                t.pivot_step(row, col)?;
                trace.push((row, col));
            }
        }
    }
}

fn class_json(x: &GElement) -> Value {
    if x.p > x.q {
        json!({ "dual": { "lo": x.q, "hi": x.p } })
    } else {
        json!({ "lo": x.p, "hi": x.q })
    }
}

/// Render an outcome as the documented JSON shape: `{"status",
/// "solution", "objective", "pivots"}`. Both the class optimum and its
/// center are of interest; the center is recoverable from the endpoints.
pub fn outcome_to_json(outcome: &LpOutcome) -> Value {
    match outcome {
        LpOutcome::Optimal {
            x,
            objective,
            pivots,
        } => json!({
            "status": "optimal",
            "solution": x.iter().map(class_json).collect::<Vec<_>>(),
            "objective": class_json(objective),
            "pivots": pivots,
        }),
        LpOutcome::Unbounded { column } => json!({
            "status": "unbounded",
            "column": column,
        }),
        LpOutcome::IterationCap => json!({ "status": "iteration_cap" }),
    }
}
