//! `qweyl`: command-line front end.
//!
//! Exit codes: 0 success, 1 a mathematical failure (not central, diverged,
//! invalid map, failed criterion), 2 bad flags or unparsable input.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qweyl::acceptance;
use qweyl::center::{azumaya_test, is_central, theta_inverse, MaxIdealPoint};
use qweyl::exprio::{parse_center, parse_scalar, parse_weyl, ParseError};
use qweyl::hatmap::{hat, hat_endo, transport_limit, PrimeSchedule};
use qweyl::matrep::{build_rep_exact, build_rep_numeric};
use qweyl::morphisms::{lift_phi, lift_psi, AnyEndomorphism, EndoDescriptor, Endomorphism, Validation};
use qweyl::poisson::PoissonContext;
use qweyl::scalars::{ComplexField, CyclotomicField, Ring};
use qweyl::weyl::{RootAlgebra, SymbolicAlgebra, WeylAlgebra};
use qweyl::AlgebraError;

#[derive(Parser)]
#[command(name = "qweyl", version, about = "Quantized Weyl algebras at roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the PBW normal form of an expression.
    Normalize {
        #[arg(long)]
        n: usize,
        /// Work at a primitive l-th root of unity instead of symbolic t.
        #[arg(long)]
        l: Option<u32>,
        expr: String,
    },
    /// Print ab - t ba (or ab - q ba).
    Qcomm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: Option<u32>,
        a: String,
        b: String,
    },
    /// Poisson bracket of two central elements (r_i, s_i allowed).
    Poisson {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        n: usize,
        p: String,
        q: String,
    },
    /// Centrality test and the decomposition in r_i, s_i.
    CenterCheck {
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = 1)]
        n: usize,
        expr: String,
    },
    /// Whether the point (a, b) of the center lies in the Azumaya locus.
    Azumaya {
        #[arg(long)]
        l: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Also build the representation and compute its Burnside span.
        #[arg(long)]
        burnside: bool,
    },
    /// Matrices of the l-dimensional representation at (a, b), as JSON.
    Rep {
        #[arg(long)]
        l: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// An l-th root of a (of b when a = 0) in Q(zeta_l).
        #[arg(long, allow_hyphen_values = true)]
        root: Option<String>,
        /// Use q = zeta^k.
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Floating point construction.
        #[arg(long)]
        numeric: bool,
    },
    /// Descriptor of x -> x, d -> d + F f (phi) or x -> x + f G, d -> d (psi).
    Lift {
        #[arg(long, value_enum)]
        kind: LiftKind,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Relation residuals of an endomorphism descriptor.
    Validate { file: PathBuf },
    /// Limit map of a symbolic endomorphism descriptor.
    Hat {
        file: PathBuf,
        /// Comma-separated primes.
        #[arg(long)]
        primes: Option<String>,
        /// A single center polynomial instead of all coordinates.
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Limit of the transported bracket of two center polynomials.
    Transport {
        #[arg(long)]
        n: usize,
        p: String,
        q: String,
        #[arg(long)]
        primes: Option<String>,
    },
    /// Run the acceptance suite.
    Sweep,
}

#[derive(Clone, Copy, ValueEnum)]
enum LiftKind {
    Phi,
    Psi,
}

enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1, after printing `output`.
    Math { output: String, reason: String },
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(format!("parse error: {e}"))
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn math(output: String, reason: impl std::fmt::Display) -> Failure {
    Failure::Math { output, reason: reason.to_string() }
}

/// Maps library errors: structural ones are usage errors, the rest mathematical.
fn algebra(e: AlgebraError) -> Failure {
    match e {
        AlgebraError::IndexOutOfRange { .. } | AlgebraError::ContextMismatch | AlgebraError::Unsupported(_) => usage(e),
        _ => math(String::new(), e),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn env_max_degree() -> Result<Option<u64>, Failure> {
    match std::env::var("QWEYL_MAX_DEGREE") {
        Ok(s) => s.trim().parse().map(Some).map_err(|_| usage(format!("QWEYL_MAX_DEGREE={s:?} is not an integer"))),
        Err(_) => Ok(None),
    }
}

fn with_env_degree<R: Ring>(e: Endomorphism<R>) -> Result<Endomorphism<R>, Failure> {
    Ok(match env_max_degree()? {
        Some(d) => e.with_max_degree(d),
        None => e,
    })
}

fn schedule(primes: &Option<String>) -> Result<PrimeSchedule, Failure> {
    match primes {
        None => Ok(PrimeSchedule::default()),
        Some(list) => {
            let ps = list
                .split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| usage(format!("bad prime {p:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            PrimeSchedule::new(ps).map_err(usage)
        }
    }
}

fn root_algebra(n: usize, l: u32) -> Result<RootAlgebra, Failure> {
    RootAlgebra::root_of_unity(n, l).map_err(usage)
}

fn read_descriptor(file: &PathBuf) -> Result<EndoDescriptor, Failure> {
    let text = fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", file.display())))
}

fn validation_json<R: Ring>(v: &Validation<R>) -> Value {
    let violations: Vec<Value> =
        v.violations.iter().map(|x| json!({"relation": x.relation, "residual": x.residual.to_text()})).collect();
    json!({"schema": 1, "valid": v.is_valid(), "violations": violations})
}

fn normalize(n: usize, l: Option<u32>, expr: &str) -> Result<String, Failure> {
    Ok(match l {
        None => parse_weyl(expr, &SymbolicAlgebra::symbolic(n))?.to_text(),
        Some(l) => parse_weyl(expr, &root_algebra(n, l)?)?.to_text(),
    })
}

fn qcomm(n: usize, l: Option<u32>, a: &str, b: &str) -> Result<String, Failure> {
    fn go<R: qweyl::exprio::Literals>(alg: &WeylAlgebra<R>, a: &str, b: &str) -> Result<String, Failure> {
        let (a, b) = (parse_weyl(a, alg)?, parse_weyl(b, alg)?);
        Ok(alg.q_commutator(&a, &b).map_err(algebra)?.to_text())
    }
    match l {
        None => go(&SymbolicAlgebra::symbolic(n), a, b),
        Some(l) => go(&root_algebra(n, l)?, a, b),
    }
}

fn poisson(l: u32, n: usize, p: &str, q: &str) -> Result<String, Failure> {
    let ctx = PoissonContext::new(n, l).map_err(usage)?;
    let alg = ctx.algebra();
    let (p, q) = (parse_weyl(p, alg)?, parse_weyl(q, alg)?);
    match ctx.bracket(&p, &q) {
        Ok(b) => {
            let center = theta_inverse(&b, l).map(|c| c.to_text()).unwrap_or_default();
            Ok(format!("{}\n{center}", b.to_text()))
        }
        Err(e @ AlgebraError::NotCentral(_)) => Err(math(String::new(), e)),
        Err(e) => Err(algebra(e)),
    }
}

fn center_check(l: u32, n: usize, expr: &str) -> Result<String, Failure> {
    let alg = root_algebra(n, l)?;
    let a = parse_weyl(expr, &alg)?;
    if !is_central(&a) {
        return Err(math("false".into(), format!("{} is not central", a.to_text())));
    }
    match theta_inverse(&a, l) {
        Ok(p) => Ok(format!("true\n{}", p.to_text())),
        Err(e) => Err(math("false".into(), e)),
    }
}

/// Exact values in Q(zeta_l), else floating point.
enum Point {
    Exact(CyclotomicField, qweyl::scalars::Cyclo, qweyl::scalars::Cyclo),
    Numeric(num_complex::Complex64, num_complex::Complex64),
}

fn point(l: u32, a: &str, b: &str) -> Result<Point, Failure> {
    let field = CyclotomicField::new(l);
    match (parse_scalar(a, field.clone()), parse_scalar(b, field.clone())) {
        (Ok(x), Ok(y)) => Ok(Point::Exact(field, x, y)),
        _ => Ok(Point::Numeric(parse_scalar(a, ComplexField)?, parse_scalar(b, ComplexField)?)),
    }
}

fn azumaya(l: u32, a: &str, b: &str, burnside: bool) -> Result<String, Failure> {
    let pt = point(l, a, b)?;
    let (verdict, rep) = match &pt {
        Point::Exact(field, x, y) => {
            let mip = MaxIdealPoint::Exact { field: field.clone(), a: vec![x.clone()], b: vec![y.clone()] };
            let rep = burnside.then(|| build_rep_exact(field, 1, x, y, None).map(|r| r.burnside_span_dim()));
            (azumaya_test(&mip, l).map_err(usage)?, rep)
        }
        Point::Numeric(x, y) => {
            let mip = MaxIdealPoint::Numeric { a: vec![*x], b: vec![*y] };
            let rep = burnside.then(|| build_rep_numeric(l, 1, *x, *y).map(|r| r.burnside_span_dim()));
            (azumaya_test(&mip, l).map_err(usage)?, rep)
        }
    };
    let mut out = verdict.to_string();
    match rep {
        None => {}
        Some(Ok(dim)) => {
            let full = (l * l) as usize;
            let agree = verdict == (dim == full);
            out.push_str(&format!("\nburnside span {dim} of {full} ({})", if agree { "agrees" } else { "disagrees" }));
            if !agree {
                return Err(math(out, "the Burnside span disagrees with the Azumaya test"));
            }
        }
        Some(Err(e)) => out.push_str(&format!("\nburnside span unavailable: {e}")),
    }
    Ok(out)
}

fn rep(l: u32, a: &str, b: &str, root: &Option<String>, k: u32, numeric: bool) -> Result<String, Failure> {
    let pt = if numeric {
        Point::Numeric(parse_scalar(a, ComplexField)?, parse_scalar(b, ComplexField)?)
    } else {
        point(l, a, b)?
    };
    let json = match pt {
        Point::Exact(field, x, y) => {
            let root = root.as_deref().map(|r| parse_scalar(r, field.clone())).transpose()?;
            build_rep_exact(&field, k, &x, &y, root).map_err(algebra)?.to_json()
        }
        Point::Numeric(x, y) => build_rep_numeric(l, k, x, y).map_err(algebra)?.to_json(),
    };
    Ok(pretty(&json))
}

fn lift(kind: LiftKind, poly: &str) -> Result<String, Failure> {
    let alg = SymbolicAlgebra::symbolic(1);
    let p = parse_weyl(poly, &alg)?;
    let e = match kind {
        LiftKind::Phi => lift_phi(&alg, &p),
        LiftKind::Psi => lift_psi(&alg, &p),
    }
    .map_err(usage)?;
    let d = EndoDescriptor::from_symbolic(&e);
    Ok(pretty(&serde_json::to_value(d).expect("serializable")))
}

fn validate(file: &PathBuf) -> Result<String, Failure> {
    let v = match read_descriptor(file)?.to_endomorphism().map_err(usage)? {
        AnyEndomorphism::Symbolic(e) => validation_json(&e.validate()),
        AnyEndomorphism::Root(e) => validation_json(&e.validate()),
    };
    let out = pretty(&v);
    if v["valid"] == true { Ok(out) } else { Err(math(out, "the map does not preserve the relations")) }
}

fn hat_cmd(file: &PathBuf, primes: &Option<String>, poly: &Option<String>) -> Result<String, Failure> {
    let schedule = schedule(primes)?;
    let e = match read_descriptor(file)?.to_endomorphism().map_err(usage)? {
        AnyEndomorphism::Symbolic(e) => e,
        AnyEndomorphism::Root(_) => return Err(usage("the limit map needs a descriptor with \"param\": \"t\"")),
    };
    let e = with_env_degree(e.validated().map_err(|err| math(String::new(), err))?)?;
    let (v, converged) = match poly {
        Some(p) => {
            let rep = hat(&e, &parse_center(p, e.algebra().n())?, &schedule);
            (rep.to_json(), rep.is_converged())
        }
        None => {
            let rep = hat_endo(&e, &schedule);
            (rep.to_json(), rep.is_converged())
        }
    };
    let out = pretty(&v);
    if converged { Ok(out) } else { Err(math(out, "the limit does not converge")) }
}

fn transport(n: usize, p: &str, q: &str, primes: &Option<String>) -> Result<String, Failure> {
    let schedule = schedule(primes)?;
    let rep = transport_limit(&parse_center(p, n)?, &parse_center(q, n)?, &schedule).map_err(algebra)?;
    let out = pretty(&rep.to_json());
    if rep.is_converged() { Ok(out) } else { Err(math(out, "the limit does not converge")) }
}

fn sweep() -> Result<String, Failure> {
    let outcomes = acceptance::run_all();
    let lines: Vec<String> = outcomes.iter().map(|o| o.line()).collect();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let mut out = lines.join("\n");
    out.push_str(&format!("\n{} of {} criteria passed", outcomes.len() - failed, outcomes.len()));
    if failed == 0 { Ok(out) } else { Err(math(out, format!("{failed} criteria failed"))) }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Normalize { n, l, expr } => normalize(n, l, &expr),
        Command::Qcomm { n, l, a, b } => qcomm(n, l, &a, &b),
        Command::Poisson { l, n, p, q } => poisson(l, n, &p, &q),
        Command::CenterCheck { l, n, expr } => center_check(l, n, &expr),
        Command::Azumaya { l, a, b, burnside } => azumaya(l, &a, &b, burnside),
        Command::Rep { l, a, b, root, k, numeric } => rep(l, &a, &b, &root, k, numeric),
        Command::Lift { kind, poly } => lift(kind, &poly),
        Command::Validate { file } => validate(&file),
        Command::Hat { file, primes, poly } => hat_cmd(&file, &primes, &poly),
        Command::Transport { n, p, q, primes } => transport(n, &p, &q, &primes),
        Command::Sweep => sweep(),
    }
}

/// Prints to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math { output, reason }) => {
            if !output.is_empty() {
                emit(&output);
            }
            eprintln!("{reason}");
            ExitCode::from(1)
        }
    }
}
