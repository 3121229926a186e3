//! Command-line front end: `solve`, `check`, `bound`, `family` and `ideal`.
//!
//! [`run`] takes the argument list and returns the exit code with the text
//! for stdout and stderr, so the binary and the tests share one path.

pub mod report;

use std::collections::BTreeMap;
use std::time::Instant;

use abel_core::families::named_instance;
use abel_core::invariant::{find_invariant_curves, AbelEquation, CurveSet};
use abel_core::polysys::{
    build_condinv_system, buchberger, emit_singular, find_invariant_curves_ideal, solve_zero_dim, GroebnerConfig,
};
use abel_core::{format_poly_ext, parse_poly, parse_poly_ext, Degree, Error, QPoly, Rational};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use report::{
    bound_section, param_strings, poly_strings, solve_report, BoundReport, CheckReport, EquationJson, IdealReport,
    InstanceJson, ScalarJson, SCHEMA,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "abel", version, about = "Rational solutions of x' = A(t) x^3 + B(t) x^2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Divisor,
    Ideal,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find every invariant curve, test Darboux integrability and report bounds.
    Solve {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long, value_enum, default_value = "divisor")]
        backend: BackendArg,
        #[arg(long)]
        json: bool,
        /// S-pair budget for the ideal backend.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Evaluate p p' - p B + A for a candidate p.
    Check {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        json: bool,
    },
    /// Upper bound on the number of curves of positive degree.
    Bound {
        #[arg(long)]
        n: usize,
        /// Degree of B; -1 for B = 0.
        #[arg(long = "degB", allow_negative_numbers = true)]
        deg_b: i64,
        #[arg(long)]
        json: bool,
    },
    /// Build a named instance and solve it.
    Family {
        #[arg(long)]
        id: String,
        /// Parameter as name=value with a rational value.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, Rational)>,
        #[arg(long, value_enum, default_value = "divisor")]
        backend: BackendArg,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// The polynomial system in the coefficients of p.
    Ideal {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        /// Degree of p; defaults to the largest admissible degree.
        #[arg(long)]
        m: Option<usize>,
        /// Print a Singular script, or write it to the given file.
        #[arg(long, num_args = 0..=1, default_missing_value = "-", value_name = "FILE")]
        emit_singular: Option<String>,
        #[arg(long, default_value = "r")]
        ring: String,
        /// Also compute the Groebner basis and the solution points.
        #[arg(long)]
        solve: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
}

fn parse_param(s: &str) -> Result<(String, Rational), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let value = v.trim().parse::<Rational>().map_err(|_| format!("`{v}` is not a rational number"))?;
    Ok((k.trim().to_string(), value))
}

/// Exit code, stdout and stderr of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::Domain(_)
            | Error::UnknownInstance(_)
            | Error::ZeroA
            | Error::ZeroCurve
            | Error::MixedRadicals(..) => EXIT_INPUT,
            Error::BudgetExceeded(_) => EXIT_BUDGET,
            _ => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(flag: &str, e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_INPUT, message: format!("{flag}: {e}") }
}

fn parse_equation(a: &str, b: &str) -> Result<AbelEquation, Failure> {
    let a = parse_poly(a).map_err(|e| input_error("--A", e))?;
    let b = parse_poly(b).map_err(|e| input_error("--B", e))?;
    AbelEquation::new(a, b).map_err(|e| input_error("--A", e))
}

fn render<T: Serialize>(value: &T, json: bool, text: impl FnOnce() -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text()
    }
}

/// A curve one backend found must appear in the other when that one is
/// complete. Prefers the divisor result unless only the ideal one is complete.
fn reconcile(div: CurveSet, ideal: CurveSet) -> Result<CurveSet, Failure> {
    let (dp, ip) = (div.polys(), ideal.polys());
    let differ = (div.complete && ip.iter().any(|p| !dp.contains(p))) || (ideal.complete && dp.iter().any(|p| !ip.contains(p)));
    if differ {
        let show = |ps: &[abel_core::QuadPoly]| ps.iter().map(format_poly_ext).collect::<Vec<_>>().join(", ");
        return Err(Failure {
            code: EXIT_MISMATCH,
            message: format!("backends disagree: divisor [{}] vs ideal [{}]", show(&dp), show(&ip)),
        });
    }
    Ok(if ideal.complete && !div.complete { ideal } else { div })
}

/// Runs the chosen backends; `both` fails on any disagreement.
fn curves(eq: &AbelEquation, backend: BackendArg, budget: usize) -> Result<(CurveSet, Vec<String>), Failure> {
    let cfg = GroebnerConfig { budget, ..GroebnerConfig::default() };
    let mut notes = Vec::new();
    let set = match backend {
        BackendArg::Divisor => find_invariant_curves(eq)?,
        BackendArg::Ideal => find_invariant_curves_ideal(eq, &cfg)?,
        BackendArg::Both => {
            let set = reconcile(find_invariant_curves(eq)?, find_invariant_curves_ideal(eq, &cfg)?)?;
            notes.push("divisor and ideal backends agree".to_string());
            set
        }
    };
    if !set.complete && backend == BackendArg::Divisor {
        notes.push("A has factors the divisor backend cannot split; try --backend ideal".to_string());
    }
    Ok((set, notes))
}

fn backend_name(b: BackendArg) -> &'static str {
    match b {
        BackendArg::Divisor => "divisor",
        BackendArg::Ideal => "ideal",
        BackendArg::Both => "both",
    }
}

fn run_command(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Solve { a, b, backend, json, budget } => {
            let start = Instant::now();
            let eq = parse_equation(&a, &b)?;
            let (set, notes) = curves(&eq, backend, budget)?;
            let mut rep = solve_report(&eq, &set, backend_name(backend), notes)?;
            rep.elapsed_us = start.elapsed().as_micros() as u64;
            Ok(render(&rep, json, || rep.to_text()))
        }
        Command::Check { a, b, p, json } => {
            let eq = parse_equation(&a, &b)?;
            let p = parse_poly_ext(&p).map_err(|e| input_error("--p", e))?;
            if p.is_zero() {
                return Err(input_error("--p", Error::ZeroCurve));
            }
            let residual = eq.residual(&p);
            let invariant = residual.is_zero();
            let r = if invariant { eq.a().to_quad().exact_div(&p)?.map(|r| format_poly_ext(&r)) } else { None };
            let rep = CheckReport {
                schema: SCHEMA,
                command: "check".into(),
                equation: EquationJson::new(&eq),
                p: format_poly_ext(&p),
                residual: format_poly_ext(&residual),
                residual_coeffs: residual.coeffs().iter().map(ScalarJson::new).collect(),
                invariant,
                r,
            };
            Ok(render(&rep, json, || rep.to_text()))
        }
        Command::Bound { n, deg_b, json } => {
            if deg_b < -1 {
                return Err(input_error("--degB", "must be -1 (B = 0) or a degree"));
            }
            let d = if deg_b < 0 { Degree::NegInfinity } else { Degree::Finite(deg_b as usize) };
            let sec = bound_section(n, d, 0);
            let rep = BoundReport {
                schema: SCHEMA,
                command: "bound".into(),
                n,
                deg_b,
                bound: sec.theorem_a,
                admissible_degrees: sec.admissible_degrees,
            };
            Ok(render(&rep, json, || {
                let degs: Vec<String> = rep.admissible_degrees.iter().map(ToString::to_string).collect();
                format!("{}\nadmissible degrees: {}\n", rep.bound, if degs.is_empty() { "none".into() } else { degs.join(", ") })
            }))
        }
        Command::Family { id, params, backend, json, budget } => {
            let start = Instant::now();
            let params: BTreeMap<String, Rational> = params.into_iter().collect();
            let inst = named_instance(&id, &params)?;
            let (set, notes) = curves(&inst.eq, backend, budget)?;
            let mut rep = solve_report(&inst.eq, &set, backend_name(backend), notes)?;
            let found = set.polys();
            rep.command = "family".into();
            rep.instance = Some(InstanceJson {
                id: inst.id.clone(),
                params: param_strings(&inst.params),
                advertised: inst.advertised.iter().map(abel_core::format_poly).collect(),
                advertised_found: inst.advertised.iter().all(|p: &QPoly| found.contains(&p.to_quad())),
            });
            rep.elapsed_us = start.elapsed().as_micros() as u64;
            Ok(render(&rep, json, || rep.to_text()))
        }
        Command::Ideal { a, b, m, emit_singular: singular, ring, solve, json, budget } => {
            let eq = parse_equation(&a, &b)?;
            let m = m.unwrap_or_else(|| default_degree(&eq));
            let system = build_condinv_system(&eq, m);
            if let Some(target) = singular {
                let mut script = emit_singular(&system, &ring);
                script.push('\n');
                if target == "-" {
                    return Ok(script);
                }
                std::fs::write(&target, &script)
                    .map_err(|e| Failure { code: EXIT_FAILURE, message: format!("cannot write {target}: {e}") })?;
                return Ok(String::new());
            }
            let mut rep = IdealReport {
                schema: SCHEMA,
                command: "ideal".into(),
                equation: EquationJson::new(&eq),
                m,
                variables: (0..=m).map(|i| format!("x{i}")).collect(),
                generators: poly_strings(&system.generators),
                groebner: None,
                points: None,
                complete_over: None,
            };
            if solve {
                let basis = buchberger(&system, &GroebnerConfig { budget, ..GroebnerConfig::default() })?;
                let sol = solve_zero_dim(&basis)?;
                rep.groebner = basis.groebner.as_deref().map(poly_strings);
                rep.points = Some(sol.points.iter().map(|pt| pt.iter().map(ScalarJson::new).collect()).collect());
                rep.complete_over = Some(sol.complete_over());
            }
            Ok(render(&rep, json, || rep.to_text()))
        }
    }
}

fn default_degree(eq: &AbelEquation) -> usize {
    abel_core::invariant::sharp_degrees(eq.n(), eq.deg_b())
        .into_iter()
        .next_back()
        .unwrap_or(eq.n().div_ceil(2))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match run_command(cli.command) {
        Ok(out) => Outcome::ok(out),
        Err(f) => Outcome::fail(f.code, f.message),
    }
}
