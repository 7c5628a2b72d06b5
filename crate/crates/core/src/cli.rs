//! Command-line surface. [`run`] parses arguments, executes one subcommand
//! and returns the exit code with the rendered report, so it can be driven
//! in-process by tests.
//!
//! Exit codes: 0 pass, 1 check failure or violated hypothesis, 2 invalid
//! input.

use std::fs;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dsl::{parse_exppoly, parse_gauss};
use crate::equation::{validate_conditions, EquationSpec, SolutionTuple, SubspaceW, TheoremProfile};
use crate::error::{Error, Result};
use crate::exppoly::{ExpPoly, Frequency};
use crate::json::{
    from_json_str, matrix_doc, vector_doc, GaussDoc, RemainderDoc, SolutionDoc, SpecDoc, TermMapDoc,
};
use crate::linalg::{parse_rational, RatVector, Rational};
use crate::numeric::{self, FitModel, SampleGrid};
use crate::reduction::{default_schedule, full_reduction, levi_civita_closure, max_poly_degree};
use crate::separation::{
    bivariate_expand, coefficient_rank, separate_minimal, verify_membership, verify_with_remainder,
};
use crate::special::{self, GhuryeOlkinSpec, KnMode};

#[derive(Parser, Debug)]
#[command(name = "lcw", version, about = "Exact workbench for generalized Levi-Civita functional equations")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Pin the dimension of DSL inputs.
    #[arg(long, global = true)]
    pub dim: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check invertibility hypotheses of an equation spec.
    Validate {
        #[arg(long)]
        spec: String,
        /// thm2.1 | thm2.2 | thm3.2 | cor4.3 (default: the spec's profile, else thm2.1)
        #[arg(long)]
        profile: Option<String>,
    },
    /// Minimal separated form of the left side.
    Separate {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        solution: String,
    },
    /// Decide whether the left side lies in W for every y.
    Verify {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        solution: String,
        /// Basis element of W (DSL, repeatable); defaults to the solution's
        /// "w" field, else the separated v_k.
        #[arg(long = "w", allow_hyphen_values = true)]
        w: Vec<String>,
        /// JSON document with R(y) generators at sample points.
        #[arg(long)]
        remainder: Option<String>,
    },
    /// Eliminate summands one at a time down to a single summand.
    Reduce {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        solution: String,
        /// Shift for one step, e.g. "1,0" (repeatable; default e_1, e_2, ...).
        #[arg(long = "h", allow_hyphen_values = true)]
        h: Vec<String>,
    },
    /// Named special equations.
    Check(CheckArgs),
    /// Least-squares fit with known frequencies.
    Fit(FitArgs),
    /// Numeric rank residual of the sampled left side.
    Residual {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        solution: String,
        /// Rank n of the right side (default: the exact minimal rank).
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = numeric::DEFAULT_TOLERANCE)]
        tol: f64,
        /// Points per axis of the tensor grid over [-1, 1]^d.
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Smallest translation-invariant space containing f.
    Closure {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Frechet,
    Kakutani,
    Wilson,
    Skitovich,
    GhuryeOlkin,
}

#[derive(clap::Args, Debug)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub kind: CheckKind,
    /// Function(s) in the DSL (frechet, kakutani: one; wilson: one per summand).
    #[arg(long, allow_hyphen_values = true)]
    pub f: Vec<String>,
    /// Difference order m (frechet).
    #[arg(long)]
    pub order: Option<u32>,
    /// Trial shift (frechet, repeatable).
    #[arg(long, allow_hyphen_values = true)]
    pub y: Vec<String>,
    /// Root-of-unity order N (kakutani).
    #[arg(long, default_value_t = 4)]
    pub n: u32,
    /// Sample "z1,z2;h1,h2" (kakutani, repeatable).
    #[arg(long, allow_hyphen_values = true)]
    pub sample: Vec<String>,
    /// Comma-separated α_i (wilson).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Comma-separated β_i (wilson).
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long)]
    pub spec: Option<String>,
    #[arg(long)]
    pub solution: Option<String>,
    /// Degree bound in x for A (ghurye-olkin).
    #[arg(long)]
    pub r: Option<u32>,
    /// Degree bound in y for B (ghurye-olkin).
    #[arg(long)]
    pub s: Option<u32>,
}

#[derive(clap::Args, Debug)]
pub struct FitArgs {
    /// CSV with columns x_1..x_d, re, im.
    #[arg(long)]
    pub csv: Option<String>,
    /// Sample this DSL function instead of reading a CSV.
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
    /// Frequency and degree bound, "λ_1,...,λ_d[:deg]" (repeatable).
    #[arg(long, required = true, allow_hyphen_values = true)]
    pub freq: Vec<String>,
    /// Points per axis when sampling --f.
    #[arg(long, default_value_t = numeric::DEFAULT_POINTS_PER_AXIS)]
    pub grid: usize,
    #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
    pub lo: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub hi: f64,
    /// Largest acceptable RMS residual.
    #[arg(long, default_value_t = numeric::DEFAULT_TOLERANCE)]
    pub tol: f64,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
    pub text: String,
}

impl Outcome {
    /// What the binary prints.
    pub fn rendered(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.report).expect("serializable report")
        } else {
            self.text.clone()
        }
    }
}

struct Report {
    pass: bool,
    body: Value,
    text: String,
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::HypothesisViolation { .. } | Error::MembershipPrecondition(_) => 1,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::SingularMatrix => "singular_matrix",
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::HypothesisViolation { .. } => "hypothesis_violation",
        Error::MembershipPrecondition(_) => "membership_precondition",
        Error::NotTranslationInvariant { .. } => "not_translation_invariant",
        Error::Parse { .. } => "parse",
        Error::DimensionExceeded { .. } => "dimension_exceeded",
        Error::NonFiniteValue(_) => "non_finite_value",
        Error::IllConditioned(_) => "ill_conditioned",
        Error::Underdetermined { .. } => "underdetermined",
        Error::InvalidInput(_) => "invalid_input",
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Separate { .. } => "separate",
        Command::Verify { .. } => "verify",
        Command::Reduce { .. } => "reduce",
        Command::Check(_) => "check",
        Command::Fit(_) => "fit",
        Command::Residual { .. } => "residual",
        Command::Closure { .. } => "closure",
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            Outcome {
                code,
                report: json!({
                    "command": null,
                    "pass": code == 0,
                    "error": {"kind": "usage", "message": e.to_string()},
                }),
                text: e.to_string(),
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let name = command_name(&cli.command);
    match dispatch(cli) {
        Ok(r) => {
            let mut report = json!({"command": name, "pass": r.pass});
            if let (Value::Object(m), Value::Object(extra)) = (&mut report, r.body) {
                m.extend(extra);
            }
            Outcome {
                code: if r.pass { 0 } else { 1 },
                report,
                text: r.text,
            }
        }
        Err(e) => Outcome {
            code: exit_code_for(&e),
            report: json!({
                "command": name,
                "pass": false,
                "error": {"kind": error_kind(&e), "message": e.to_string()},
            }),
            text: format!("error: {e}"),
        },
    }
}

fn load(arg: &str) -> Result<String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).map_err(|e| Error::InvalidInput(format!("{arg}: {e}")))
    }
}

fn load_spec(arg: &str) -> Result<(EquationSpec, Option<TheoremProfile>)> {
    let doc: SpecDoc = from_json_str(&load(arg)?)?;
    Ok((doc.to_spec()?, doc.profile()?))
}

fn load_solution(arg: &str, d: usize) -> Result<(SolutionTuple, Option<Vec<ExpPoly>>)> {
    let doc: SolutionDoc = from_json_str(&load(arg)?)?;
    Ok((doc.to_solution(d)?, doc.w_basis(d)?))
}

fn parse_vector(text: &str) -> Result<RatVector> {
    Ok(RatVector::new(
        text.split(',').map(parse_rational).collect::<Result<Vec<Rational>>>()?,
    ))
}

fn check_len(v: &RatVector, d: usize) -> Result<()> {
    if v.len() == d {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: d, found: v.len() })
    }
}

fn dsl_list(ps: &[ExpPoly]) -> Value {
    json!(ps.iter().map(ExpPoly::to_string).collect::<Vec<_>>())
}

fn dispatch(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Validate { spec, profile } => validate(spec, profile.as_deref()),
        Command::Separate { spec, solution } => separate(spec, solution),
        Command::Verify {
            spec,
            solution,
            w,
            remainder,
        } => verify(spec, solution, w, remainder.as_deref()),
        Command::Reduce { spec, solution, h } => reduce(spec, solution, h),
        Command::Check(args) => check(args, cli.dim),
        Command::Fit(args) => fit(args, cli.dim),
        Command::Residual {
            spec,
            solution,
            rank,
            tol,
            grid,
        } => residual(spec, solution, *rank, *tol, *grid),
        Command::Closure { f } => closure(f, cli.dim),
    }
}

fn validate(spec: &str, profile: Option<&str>) -> Result<Report> {
    let (spec, doc_profile) = load_spec(spec)?;
    let profile = match profile {
        Some(p) => p.parse()?,
        None => doc_profile.unwrap_or(TheoremProfile::Thm21),
    };
    let report = validate_conditions(&spec, profile);
    let mut text = String::new();
    for v in &report.profiles {
        let mark = if v.pass { "pass" } else { "fail" };
        text.push_str(&format!("{:<8} {mark}", v.profile.to_string()));
        if let Some(n) = &v.note {
            text.push_str(&format!("  ({n})"));
        }
        text.push('\n');
    }
    for p in report.differences.iter().filter(|p| p.i < p.j && p.invertible == Some(false)) {
        text.push_str(&format!("c_{} - c_{} is singular\n", p.i + 1, p.j + 1));
    }
    text.push_str(&format!("{}: {}", profile, if report.pass { "PASS" } else { "FAIL" }));
    Ok(Report {
        pass: report.pass,
        body: json!({ "profile": profile.to_string(), "hypotheses": report }),
        text,
    })
}

fn separate(spec: &str, solution: &str) -> Result<Report> {
    let (spec, _) = load_spec(spec)?;
    let (sol, _) = load_solution(solution, spec.d())?;
    let f = bivariate_expand(&spec, &sol)?;
    let sep = separate_minimal(&f);
    let mut text = format!("n = {}\n", sep.n());
    if !sep.denominator.is_one() {
        text.push_str(&format!("({}) * F(x, y) = sum of u_k(y) v_k(x)\n", sep.denominator));
    }
    for (k, (u, v)) in sep.pairs.iter().enumerate() {
        text.push_str(&format!(
            "u{}(y) = {}\nv{}(x) = {}\n",
            k + 1,
            u.to_string_with_var("y"),
            k + 1,
            v
        ));
    }
    let pairs: Vec<Value> = sep
        .pairs
        .iter()
        .map(|(u, v)| json!({"u": u.to_string(), "v": v.to_string()}))
        .collect();
    Ok(Report {
        pass: true,
        body: json!({
            "n": sep.n(),
            "denominator": sep.denominator.to_string(),
            "coefficient_rank": coefficient_rank(&f),
            "lhs": f.to_string(),
            "pairs": pairs,
        }),
        text: text.trim_end().to_string(),
    })
}

fn verify(spec: &str, solution: &str, w_args: &[String], remainder: Option<&str>) -> Result<Report> {
    let (spec, _) = load_spec(spec)?;
    let d = spec.d();
    let (sol, doc_w) = load_solution(solution, d)?;
    let (basis, source) = if !w_args.is_empty() {
        let b = w_args.iter().map(|s| parse_exppoly(s, Some(d))).collect::<Result<Vec<_>>>()?;
        (b, "flag")
    } else if let Some(b) = doc_w {
        (b, "solution")
    } else {
        (separate_minimal(&bivariate_expand(&spec, &sol)?).vs(), "separated")
    };
    let w = SubspaceW::spanned_by(d, basis)?;

    if let Some(path) = remainder {
        let doc: RemainderDoc = from_json_str(&load(path)?)?;
        let samples = doc.to_samples(d)?;
        let verdict = verify_with_remainder(&spec, &sol, &w, &samples)?;
        let mut text = String::new();
        for s in &verdict.samples {
            text.push_str(&format!("y = {}: {}\n", s.y, if s.pass { "inside" } else { "outside" }));
        }
        text.push_str(if verdict.pass { "PASS" } else { "FAIL" });
        return Ok(Report {
            pass: verdict.pass,
            body: json!({
                "w": dsl_list(w.basis()),
                "w_source": source,
                "mode": "remainder",
                "samples": verdict.samples,
            }),
            text,
        });
    }

    let verdict = verify_membership(&spec, &sol, &w)?;
    let mut text = format!("W = span{{{}}}\n", w.basis().iter().map(ExpPoly::to_string).collect::<Vec<_>>().join(", "));
    let failure = verdict.failure.as_ref().map(|f| {
        json!({
            "y_atom": f.y_atom.display_with_var("y"),
            "x_part": f.x_part.to_string(),
            "residual": f.residual.to_string(),
        })
    });
    match &verdict.failure {
        None => text.push_str(&format!("PASS ({} y-atoms checked)", verdict.checked_atoms)),
        Some(f) => text.push_str(&format!(
            "FAIL: coefficient of {} is {}, residual modulo W: {}",
            f.y_atom.display_with_var("y"),
            f.x_part,
            f.residual
        )),
    }
    Ok(Report {
        pass: verdict.pass,
        body: json!({
            "w": dsl_list(w.basis()),
            "w_source": source,
            "mode": "exact",
            "checked_atoms": verdict.checked_atoms,
            "failure": failure,
        }),
        text,
    })
}

fn reduce(spec: &str, solution: &str, h_args: &[String]) -> Result<Report> {
    let (spec, _) = load_spec(spec)?;
    let d = spec.d();
    let (sol, doc_w) = load_solution(solution, d)?;
    let basis = match doc_w {
        Some(b) => b,
        None => separate_minimal(&bivariate_expand(&spec, &sol)?).vs(),
    };
    let w = SubspaceW::spanned_by(d, basis)?;
    let schedule = if h_args.is_empty() {
        default_schedule(d, spec.m())
    } else {
        let hs = h_args.iter().map(|h| parse_vector(h)).collect::<Result<Vec<_>>>()?;
        for h in &hs {
            check_len(h, d)?;
        }
        hs
    };
    let chain = full_reduction(&spec, &sol, &w, &schedule)?;

    let mut text = format!("{:>4}  {:>5}  {:<16} {:>6}  {:>10}\n", "step", "pivot", "h", "dim(W)", "max degree");
    let deg = |s: &SolutionTuple| max_poly_degree(s).map_or("-".to_string(), |k| k.to_string());
    text.push_str(&format!("{:>4}  {:>5}  {:<16} {:>6}  {:>10}\n", 0, "-", "-", w.dim(), deg(&sol)));
    let mut steps = Vec::new();
    for (k, (inst, step)) in chain.iter().enumerate() {
        text.push_str(&format!(
            "{:>4}  {:>5}  {:<16} {:>6}  {:>10}\n",
            k + 1,
            step.eliminated_index + 1,
            step.h.to_string(),
            step.w_out.dim(),
            deg(&inst.sol)
        ));
        let mut sol_doc = SolutionDoc::from_solution(&inst.sol);
        sol_doc.w = Some(inst.w.basis().iter().map(|v| crate::json::PolyDoc::Dsl(v.to_string())).collect());
        steps.push(json!({
            "step": k + 1,
            "pivot": step.eliminated_index + 1,
            "h": vector_doc(&step.h),
            "d": step.d.iter().map(matrix_doc).collect::<Vec<_>>(),
            "w_dim": step.w_out.dim(),
            "max_degree": inst.max_degree(),
            "instance": {
                "spec": SpecDoc::from_spec(&inst.spec, None),
                "solution": sol_doc,
            },
        }));
    }
    text.push_str("PASS: every reduced instance lies in its enlarged subspace");
    Ok(Report {
        pass: true,
        body: json!({ "w_dim": w.dim(), "steps": steps }),
        text,
    })
}

fn one_f(args: &CheckArgs, dim: Option<usize>) -> Result<ExpPoly> {
    match args.f.as_slice() {
        [f] => parse_exppoly(f, dim),
        _ => Err(Error::InvalidInput("exactly one --f is required".into())),
    }
}

fn spec_and_solution(args: &CheckArgs) -> Result<(EquationSpec, SolutionTuple)> {
    let spec = args.spec.as_deref().ok_or_else(|| Error::InvalidInput("--spec is required".into()))?;
    let sol = args
        .solution
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("--solution is required".into()))?;
    let (spec, _) = load_spec(spec)?;
    let (sol, _) = load_solution(sol, spec.d())?;
    Ok((spec, sol))
}

fn check(args: &CheckArgs, dim: Option<usize>) -> Result<Report> {
    let kind = args.kind.to_possible_value().expect("named kind").get_name().to_string();
    let mut r = match args.kind {
        CheckKind::Frechet => check_frechet(args, dim)?,
        CheckKind::Kakutani => check_kakutani(args)?,
        CheckKind::Wilson => check_wilson(args)?,
        CheckKind::Skitovich => {
            let (spec, sol) = spec_and_solution(args)?;
            let v = special::skitovich_check(&spec, &sol)?;
            Report {
                pass: v.pass,
                body: json!({ "difference": v.difference.to_string() }),
                text: if v.pass {
                    "PASS: both sides agree".to_string()
                } else {
                    format!("FAIL: left minus right = {}", v.difference)
                },
            }
        }
        CheckKind::GhuryeOlkin => check_ghurye_olkin(args)?,
    };
    if let Value::Object(m) = &mut r.body {
        m.insert("kind".into(), json!(kind));
    }
    Ok(r)
}

fn check_frechet(args: &CheckArgs, dim: Option<usize>) -> Result<Report> {
    let f = one_f(args, dim)?;
    let order = args.order.ok_or_else(|| Error::InvalidInput("--order is required".into()))?;
    let trials = if args.y.is_empty() {
        vec![RatVector::from_ints(&vec![1; f.dim()])]
    } else {
        args.y.iter().map(|y| parse_vector(y)).collect::<Result<Vec<_>>>()?
    };
    for y in &trials {
        check_len(y, f.dim())?;
    }
    let v = special::frechet_check(&f, order, &trials)?;
    let residual = v.residual.as_ref().map(|(y, r)| json!({"y": vector_doc(y), "value": r.to_string()}));
    let mut text = format!(
        "differences vanish: {}\ndegree below order: {}\n",
        v.differences_vanish, v.degree_below_order
    );
    if let Some((y, r)) = &v.residual {
        text.push_str(&format!("residual at y = {y}: {r}\n"));
    }
    text.push_str(if v.pass { "PASS" } else { "FAIL" });
    Ok(Report {
        pass: v.pass,
        body: json!({
            "order": order,
            "differences_vanish": v.differences_vanish,
            "degree_below_order": v.degree_below_order,
            "residual": residual,
        }),
        text,
    })
}

fn check_kakutani(args: &CheckArgs) -> Result<Report> {
    let f = one_f(args, Some(2))?;
    let samples = if args.sample.is_empty() {
        vec![
            (RatVector::from_ints(&[1, 2]), RatVector::from_ints(&[3, -1])),
            (RatVector::from_ints(&[0, 0]), RatVector::from_ints(&[1, 1])),
        ]
    } else {
        args.sample
            .iter()
            .map(|s| {
                let (z, h) = s
                    .split_once(';')
                    .ok_or_else(|| Error::InvalidInput(format!("sample {s:?} is not \"z1,z2;h1,h2\"")))?;
                Ok((parse_vector(z)?, parse_vector(h)?))
            })
            .collect::<Result<Vec<_>>>()?
    };
    let v = special::kakutani_nagumo_check(&f, args.n, &samples)?;
    let mode = match v.mode {
        KnMode::Exact => "exact",
        KnMode::Float => "float",
    };
    let mut text = format!("mode: {mode}\n");
    if let Some(s) = &v.symbolic_residual {
        text.push_str(&format!("symbolic residual (x1, x2 = z; x3, x4 = h): {s}\n"));
    }
    for (k, ((z, h), r)) in samples.iter().zip(&v.residuals).enumerate() {
        match v.exact_residuals.get(k) {
            Some(e) => text.push_str(&format!("z = {z}, h = {h}: residual = {e}\n")),
            None => text.push_str(&format!("z = {z}, h = {h}: |residual| = {r:.3e}\n")),
        }
    }
    text.push_str(if v.pass { "PASS" } else { "FAIL" });
    Ok(Report {
        pass: v.pass,
        body: json!({
            "n": args.n,
            "mode": mode,
            "symbolic_residual": v.symbolic_residual.as_ref().map(ExpPoly::to_string),
            "exact_residuals": v.exact_residuals.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "residuals": v.residuals,
            "max_residual": v.max_residual,
        }),
        text,
    })
}

fn rational_list(text: Option<&str>, flag: &str) -> Result<Vec<Rational>> {
    let text = text.ok_or_else(|| Error::InvalidInput(format!("--{flag} is required")))?;
    text.split(',').map(parse_rational).collect()
}

fn check_wilson(args: &CheckArgs) -> Result<Report> {
    let alphas = rational_list(args.alpha.as_deref(), "alpha")?;
    let betas = rational_list(args.beta.as_deref(), "beta")?;
    let fs = args.f.iter().map(|f| parse_exppoly(f, Some(1))).collect::<Result<Vec<_>>>()?;
    let v = special::wilson_check(&alphas, &betas, &fs)?;
    let text = match (&v.f, &v.g, &v.mixed) {
        (Some(f), Some(g), _) => format!(
            "f(x) = {}\ng(y) = {}\nf_i polynomial of degree <= {}: {:?}\nPASS",
            f,
            g.to_string_with_var("y"),
            v.bound,
            v.within_bound
        ),
        (_, _, Some((xa, ya, c))) => format!(
            "FAIL: mixed term ({c})*{}*{}",
            xa.display_with_var("x"),
            ya.display_with_var("y")
        ),
        _ => unreachable!("verdict carries a split or a witness"),
    };
    Ok(Report {
        pass: v.pass,
        body: json!({
            "f": v.f.as_ref().map(ExpPoly::to_string),
            "g": v.g.as_ref().map(ExpPoly::to_string),
            "mixed": v.mixed.as_ref().map(|(xa, ya, c)| json!({
                "x_atom": xa.display_with_var("x"),
                "y_atom": ya.display_with_var("y"),
                "coefficient": c.to_string(),
            })),
            "bound": v.bound,
            "within_bound": v.within_bound,
        }),
        text,
    })
}

fn check_ghurye_olkin(args: &CheckArgs) -> Result<Report> {
    let (spec, sol) = spec_and_solution(args)?;
    if !spec.is_normalized() {
        return Err(Error::InvalidInput("ghurye-olkin instances use b_i = I".into()));
    }
    let go = GhuryeOlkinSpec {
        d: spec.d(),
        cs: spec.cs().cloned().collect(),
        r: args.r.ok_or_else(|| Error::InvalidInput("--r is required".into()))?,
        s: args.s.ok_or_else(|| Error::InvalidInput("--s is required".into()))?,
    };
    let v = special::ghurye_olkin_check(&go, &sol)?;
    let text = match (&v.a, &v.b, &v.offending) {
        (Some(a), Some(b), _) => format!(
            "A = {a}\nB = {b}\nall f_i polynomial: {}\nPASS",
            v.all_polynomial()
        ),
        (_, _, Some((xa, ya))) => format!(
            "FAIL: atom {}*{} fits neither A nor B",
            xa.display_with_var("x"),
            ya.display_with_var("y")
        ),
        _ => unreachable!("verdict carries a split or a witness"),
    };
    Ok(Report {
        pass: v.pass,
        body: json!({
            "r": go.r,
            "s": go.s,
            "a": v.a.as_ref().map(|a| a.to_string()),
            "b": v.b.as_ref().map(|b| b.to_string()),
            "offending": v.offending.as_ref().map(|(xa, ya)| json!({
                "x_atom": xa.display_with_var("x"),
                "y_atom": ya.display_with_var("y"),
            })),
            "polynomial": v.polynomial,
        }),
        text,
    })
}

fn parse_freq(text: &str) -> Result<(Frequency, u32)> {
    let (lam, deg) = match text.rsplit_once(':') {
        Some((l, k)) => (
            l,
            k.trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad degree in {text:?}")))?,
        ),
        None => (text, 0),
    };
    let comps = lam.split(',').map(parse_gauss).collect::<Result<Vec<_>>>()?;
    Ok((Frequency(comps), deg))
}

fn fit(args: &FitArgs, dim: Option<usize>) -> Result<Report> {
    let grid = match (&args.csv, &args.f) {
        (Some(path), None) => {
            let file = fs::File::open(path).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?;
            numeric::read_csv(file)?
        }
        (None, Some(f)) => {
            let f = parse_exppoly(f, dim)?;
            let pts = numeric::tensor_grid(f.dim(), args.grid, args.lo, args.hi);
            SampleGrid::sample(&f, pts)?
        }
        _ => return Err(Error::InvalidInput("give exactly one of --csv and --f".into())),
    };
    let (freqs, degs): (Vec<_>, Vec<_>) = args.freq.iter().map(|s| parse_freq(s)).collect::<Result<Vec<_>>>()?.into_iter().unzip();
    let model = FitModel::new(freqs, degs)?;
    let out = numeric::fit(&grid, &model)?;
    let pass = out.residual <= args.tol;
    let unrounded: Vec<Value> = out
        .unrounded
        .iter()
        .map(|u| {
            json!({
                "frequency": u.frequency.components().iter().map(GaussDoc::from_gauss).collect::<Vec<_>>(),
                "monomial": u.monomial.exponents(),
                "re": u.value.re,
                "im": u.value.im,
            })
        })
        .collect();
    let mut text = format!("fit: {}\n", out.poly);
    for u in &out.unrounded {
        let atom = ExpPoly::term(grid.d(), crate::exppoly::ExpScalar::one(), u.monomial.clone(), u.frequency.clone());
        text.push_str(&format!("  + ({:.12} + {:.12}*i)*{}\n", u.value.re, u.value.im, atom));
    }
    text.push_str(&format!(
        "rms residual {:e}, condition {:e}\n{}",
        out.residual,
        out.condition,
        if pass { "PASS" } else { "FAIL" }
    ));
    Ok(Report {
        pass,
        body: json!({
            "points": grid.len(),
            "poly": out.poly.to_string(),
            "terms": TermMapDoc::from_poly(&out.poly),
            "unrounded": unrounded,
            "residual": out.residual,
            "condition": out.condition,
            "tolerance": args.tol,
        }),
        text,
    })
}

fn residual(spec: &str, solution: &str, rank: Option<usize>, tol: f64, grid: Option<usize>) -> Result<Report> {
    let (spec, _) = load_spec(spec)?;
    let (sol, _) = load_solution(solution, spec.d())?;
    let n = match rank {
        Some(n) => n,
        None => separate_minimal(&bivariate_expand(&spec, &sol)?).n(),
    };
    let pts = grid.map(|k| numeric::tensor_grid(spec.d(), k, -1.0, 1.0));
    let r = numeric::equation_residual_exppoly(&spec, &sol, n, pts.as_deref(), tol)?;
    let shown: Vec<String> = r.singular_values.iter().take(n + 3).map(|s| format!("{s:.3e}")).collect();
    let text = format!(
        "rank {n}: residual {:e} (max {:e}, mean {:e})\nleading singular values: {}\n{}",
        r.residual,
        r.max_abs,
        r.mean_abs,
        shown.join(" "),
        if r.pass { "PASS" } else { "FAIL" }
    );
    Ok(Report {
        pass: r.pass,
        body: json!({
            "rank": n,
            "residual": r.residual,
            "max_abs": r.max_abs,
            "mean_abs": r.mean_abs,
            "tolerance": tol,
            "singular_values": r.singular_values,
        }),
        text,
    })
}

fn closure(f: &str, dim: Option<usize>) -> Result<Report> {
    let f = parse_exppoly(f, dim)?;
    let (n, basis) = levi_civita_closure(&f);
    let text = format!(
        "dimension {n}\n{}",
        basis.iter().map(ExpPoly::to_string).collect::<Vec<_>>().join("\n")
    );
    Ok(Report {
        pass: true,
        body: json!({ "dimension": n, "basis": dsl_list(&basis) }),
        text,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lcw(args: &[&str]) -> Outcome {
        run(std::iter::once("lcw").chain(args.iter().copied()))
    }

    #[test]
    fn validate_exit_codes() {
        let spec = r#"{"d": 1, "pairs": [{"c": [[1]]}, {"c": [[2]]}]}"#;
        assert_eq!(lcw(&["validate", "--spec", spec, "--profile", "thm2.2"]).code, 0);
        let bad = r#"{"d": 1, "pairs": [{"c": [[1]]}, {"c": [[1]]}]}"#;
        assert_eq!(lcw(&["validate", "--spec", bad, "--profile", "thm2.2"]).code, 1);
        assert_eq!(lcw(&["validate", "--spec", "{not json"]).code, 2);
        assert_eq!(lcw(&["validate"]).code, 2);
    }

    #[test]
    fn frechet_failure_reports_residual() {
        let out = lcw(&["check", "--kind", "frechet", "--f", "x1^3", "--order", "3"]);
        assert_eq!(out.code, 1);
        assert_eq!(out.report["residual"]["value"], "6");
    }

    #[test]
    fn closure_of_square() {
        let out = lcw(&["closure", "--f", "x1^2"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.report["dimension"], 3);
        assert_eq!(out.report["basis"][0], "x1^2");
    }
}
