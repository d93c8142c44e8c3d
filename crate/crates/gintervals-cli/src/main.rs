//! Command-line front end for the generalized interval library: expression
//! evaluation, the two product semantics, exact and Euclidean division,
//! norms, balls, continuity/differentiability probes and the interval
//! simplex.
//!
//! Exit codes: 0 for success (including division or solver outcomes that
//! are themselves data, like a non-invertible divisor or an unbounded
//! program), 1 for domain errors, 2 for parse and I/O errors.

use clap::{Parser, Subcommand, ValueEnum};
use gintervals::{
    ball_vertices, bullet, bullet_differential, continuity_probe, div_auto, divide_straddle,
    euclid_div, euclid_div_straddle, fmt_sig12, g_inverse, lp, parse_gelement,
    poly_eval, render_gelement, DivisionError, DivisionKind, DivisionResult, GElement,
    ProbeRegion, SignClass, TextError,
};
use serde_json::{json, Value};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_DOMAIN: u8 = 1;
const EXIT_PARSE: u8 = 2;

#[derive(Parser)]
#[command(name = "gintervals", version, about = "Generalized interval arithmetic")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Invertibility tolerance: divisors whose endpoints come closer than
    /// this to zero are treated as non-invertible.
    #[arg(long, global = true, default_value_t = 1e-12)]
    inv_tol: f64,
    /// Seed for the sampling-based probes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression over interval classes (+, -, * and parens;
    /// * is the class product).
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Multiply two classes; by default the class product, with
    /// --classical the classical interval product instead.
    Mul {
        #[arg(long)]
        classical: bool,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Divide Y by X.
    Div {
        #[arg(long, value_enum, default_value_t = DivMode::Auto)]
        mode: DivMode,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// The norm of a class.
    Norm {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Vertices of the norm ball of radius EPS around X0.
    Ball {
        #[arg(allow_hyphen_values = true)]
        x0: String,
        eps: f64,
    },
    /// Continuity / differentiability probe of a target map at X0.
    Probe {
        #[arg(value_enum)]
        target: ProbeTarget,
        #[arg(allow_hyphen_values = true)]
        x0: String,
        /// Polynomial coefficients (constant first), for the poly target.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Vec<f64>,
        /// Run the continuity probe at this radius and report the accepted
        /// modulus.
        #[arg(long)]
        eps: Option<f64>,
        /// Radii for the differentiability probe.
        #[arg(long, value_delimiter = ',', default_values_t = vec![1e-1, 1e-2, 1e-3, 1e-4])]
        radii: Vec<f64>,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = RegionArg::Full)]
        region: RegionArg,
    },
    /// Solve a linear program with interval right-hand sides from a JSON
    /// file.
    Lp { path: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DivMode {
    Auto,
    Exact,
    Euclid,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProbeTarget {
    Q2,
    Poly,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RegionArg {
    Full,
    First,
}

fn class_json(x: &GElement) -> Value {
    if x.p > x.q {
        json!({ "dual": { "lo": x.q, "hi": x.p } })
    } else {
        json!({ "lo": x.p, "hi": x.q })
    }
}

fn parse_or_exit(s: &str) -> Result<GElement, u8> {
    parse_gelement(s).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_PARSE
    })
}

fn kind_tag(kind: DivisionKind) -> &'static str {
    match kind {
        DivisionKind::ExactInvertible => "exact-invertible",
        DivisionKind::ExactStraddle => "exact-straddle",
        DivisionKind::Euclidean => "euclidean",
        DivisionKind::EuclideanStraddle => "euclidean-straddle",
    }
}

/// Division outcomes that are data rather than failures.
fn division_status(err: &DivisionError) -> Option<&'static str> {
    match err {
        DivisionError::NotInvertible => Some("not-invertible"),
        DivisionError::ConditionFailed => Some("condition-failed"),
        DivisionError::RatioConditionFailed { .. } => Some("condition-failed"),
        DivisionError::Unsupported => Some("unsupported"),
        _ => None,
    }
}

fn print_division(res: &DivisionResult, as_json: bool) {
    if as_json {
        println!(
            "{}",
            json!({
                "z": class_json(&res.quotient),
                "r": class_json(&res.remainder),
                "kind": kind_tag(res.kind),
            })
        );
    } else {
        println!("Z = {}", render_gelement(&res.quotient));
        println!("R = {}", render_gelement(&res.remainder));
        println!("kind = {}", kind_tag(res.kind));
    }
}

fn report_division(result: Result<DivisionResult, DivisionError>, as_json: bool) -> u8 {
    match result {
        Ok(res) => {
            print_division(&res, as_json);
            EXIT_OK
        }
        Err(e) => match division_status(&e) {
            Some(status) => {
                if as_json {
                    println!("{}", json!({ "status": status, "detail": e.to_string() }));
                } else {
                    println!("status = {status}");
                    println!("detail = {e}");
                }
                EXIT_OK
            }
            None => {
                eprintln!("error: {e}");
                EXIT_DOMAIN
            }
        },
    }
}

fn straddles(x: &GElement) -> bool {
    let (lo, hi) = if x.p <= x.q { (x.p, x.q) } else { (x.q, x.p) };
    lo < 0.0 && hi > 0.0
}

fn run_div(y: &GElement, x: &GElement, mode: DivMode, inv_tol: f64, as_json: bool) -> u8 {
    if x.is_zero() {
        eprintln!("error: division by the zero point");
        return EXIT_DOMAIN;
    }
    match mode {
        DivMode::Auto => report_division(div_auto(y, x), as_json),
        DivMode::Exact => {
            if straddles(x) {
                let exact = divide_straddle(y, x).map(|q| DivisionResult {
                    quotient: q,
                    remainder: GElement::zero(),
                    kind: DivisionKind::ExactStraddle,
                });
                return report_division(exact, as_json);
            }
            if x.p.abs() <= inv_tol || x.q.abs() <= inv_tol || x.p * x.q < 0.0 {
                return report_division(Err(DivisionError::NotInvertible), as_json);
            }
            let exact = g_inverse(x).and_then(|inv| {
                let q = bullet(y, &inv);
                let back = bullet(x, &q);
                if back.sub(y).norm() <= 1e-9 * (1.0 + y.norm()) {
                    Ok(DivisionResult {
                        quotient: q,
                        remainder: GElement::zero(),
                        kind: DivisionKind::ExactInvertible,
                    })
                } else {
                    Err(DivisionError::Unsupported)
                }
            });
            report_division(exact, as_json)
        }
        DivMode::Euclid => {
            let res = if straddles(x) {
                euclid_div_straddle(y, x)
            } else {
                euclid_div(y, x)
            };
            report_division(res, as_json)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_probe(
    target: ProbeTarget,
    x0: &GElement,
    coeffs: &[f64],
    eps: Option<f64>,
    radii: &[f64],
    samples: usize,
    region: RegionArg,
    seed: u64,
    as_json: bool,
) -> u8 {
    let coeffs = coeffs.to_vec();
    let f: Box<dyn Fn(&GElement) -> GElement> = match target {
        ProbeTarget::Q2 => Box::new(|x: &GElement| gintervals::q2(x)),
        ProbeTarget::Poly => {
            if coeffs.is_empty() {
                eprintln!("error: the poly target requires --coeffs");
                return EXIT_PARSE;
            }
            Box::new(move |x: &GElement| poly_eval(&coeffs, x))
        }
    };

    let mut doc = json!({});
    if let Some(eps) = eps {
        match continuity_probe(&*f, x0, eps, samples.max(1), seed) {
            Ok(eta) => {
                if as_json {
                    doc["eta"] = json!(eta);
                } else {
                    println!("eta = {}", fmt_sig12(eta));
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_DOMAIN;
            }
        }
    }

    if matches!(target, ProbeTarget::Q2) {
        let region = match region {
            RegionArg::Full => ProbeRegion::Full,
            RegionArg::First => ProbeRegion::FirstProofRegion,
        };
        let l = bullet_differential(*x0);
        let report =
            gintervals::differentiability_probe(&*f, x0, &l, radii, samples, seed, region);
        if as_json {
            doc["radii"] = json!(report.radii);
            doc["ratios"] = json!(report.ratios);
            doc["region"] = json!(format!("{:?}", report.region));
            doc["verdict"] = json!(format!("{:?}", report.verdict));
        } else {
            print!("{}", report.to_table());
            println!("verdict = {:?}", report.verdict);
        }
    }

    if as_json {
        println!("{doc}");
    }
    EXIT_OK
}

fn run_lp(path: &str, as_json: bool) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {path}: {e}");
            return EXIT_PARSE;
        }
    };
    let problem = match lp::LpProblem::from_json_str(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    match lp::solve(&problem, problem.default_max_iters()) {
        Ok(outcome) => {
            if as_json {
                println!("{}", lp::outcome_to_json(&outcome));
            } else {
                match &outcome {
                    lp::LpOutcome::Optimal {
                        x,
                        objective,
                        pivots,
                    } => {
                        println!("status = optimal");
                        for (i, xi) in x.iter().enumerate() {
                            println!("x{} = {}", i + 1, render_gelement(xi));
                        }
                        println!("objective = {}", render_gelement(objective));
                        println!("pivots = {pivots}");
                    }
                    lp::LpOutcome::Unbounded { column } => {
                        println!("status = unbounded");
                        println!("column = {column}");
                    }
                    lp::LpOutcome::IterationCap => println!("status = iteration-cap"),
                }
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Eval { expr } => match gintervals::eval_expr(&expr) {
            Ok(x) => {
                if cli.json {
                    println!("{}", json!({ "result": class_json(&x) }));
                } else {
                    println!("{}", render_gelement(&x));
                }
                EXIT_OK
            }
            Err(e @ TextError::Parse { .. }) => {
                eprintln!("error: {e}");
                EXIT_PARSE
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_PARSE
            }
        },
        Command::Mul { classical, x, y } => {
            let (x, y) = match (parse_or_exit(&x), parse_or_exit(&y)) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(c), _) | (_, Err(c)) => return c,
            };
            let product = if classical {
                // The classical product is defined on proper intervals.
                if matches!(x.sign(), SignClass::Negative)
                    || matches!(y.sign(), SignClass::Negative)
                {
                    eprintln!("error: the classical product takes proper intervals");
                    return EXIT_DOMAIN;
                }
                let k = x.canonical_interval().mul_classical(&y.canonical_interval());
                GElement::new(k.lo(), k.hi())
            } else {
                bullet(&x, &y)
            };
            if cli.json {
                println!("{}", json!({ "result": class_json(&product) }));
            } else {
                println!("{}", render_gelement(&product));
            }
            EXIT_OK
        }
        Command::Div { mode, y, x } => {
            let (y, x) = match (parse_or_exit(&y), parse_or_exit(&x)) {
                (Ok(y), Ok(x)) => (y, x),
                (Err(c), _) | (_, Err(c)) => return c,
            };
            run_div(&y, &x, mode, cli.inv_tol, cli.json)
        }
        Command::Norm { x } => match parse_or_exit(&x) {
            Ok(x) => {
                if cli.json {
                    println!("{}", json!({ "norm": x.norm() }));
                } else {
                    println!("{}", fmt_sig12(x.norm()));
                }
                EXIT_OK
            }
            Err(c) => c,
        },
        Command::Ball { x0, eps } => {
            let x0 = match parse_or_exit(&x0) {
                Ok(x0) => x0,
                Err(c) => return c,
            };
            if eps <= 0.0 {
                eprintln!("error: the radius must be positive");
                return EXIT_DOMAIN;
            }
            let vs = ball_vertices(&x0, eps);
            if cli.json {
                let vs: Vec<Value> = vs.iter().map(|&(p, q)| json!([p, q])).collect();
                println!("{}", json!({ "vertices": vs }));
            } else {
                for (p, q) in vs {
                    println!("({},{})", fmt_sig12(p), fmt_sig12(q));
                }
            }
            EXIT_OK
        }
        Command::Probe {
            target,
            x0,
            coeffs,
            eps,
            radii,
            samples,
            region,
        } => {
            let x0 = match parse_or_exit(&x0) {
                Ok(x0) => x0,
                Err(c) => return c,
            };
            run_probe(
                target, &x0, &coeffs, eps, &radii, samples, region, cli.seed, cli.json,
            )
        }
        Command::Lp { path } => run_lp(&path, cli.json),
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}
