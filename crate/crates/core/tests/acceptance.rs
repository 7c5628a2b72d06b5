//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//! Randomized criteria draw from `LCW_SEED` (default 0).

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::Shape;
use lcw::equation::{validate_conditions, CoefficientPair, EquationSpec, SolutionTuple, TheoremProfile};
use lcw::exppoly::{ExpPoly, ExpScalar, Frequency};
use lcw::linalg::{rat, GaussRational, RatMatrix, RatVector};
use lcw::numeric::{default_points, equation_residual_exppoly, fit, tensor_grid, FitModel, SampleGrid};
use lcw::reduction::{folfact_check, full_reduction, max_poly_degree};
use lcw::separation::{bivariate_expand, separate_minimal, verify_membership, SeparatedForm};
use lcw::special::{self, GhuryeOlkinSpec, KnMode};
use rand::Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn g(n: i64) -> GaussRational {
    GaussRational::from_int(n)
}

fn operator_algebra() -> Outcome {
    let mut r = common::rng(1);
    let start = Instant::now();
    for k in 0..200 {
        let d = r.gen_range(1..=2);
        let shape = Shape {
            d,
            max_degree: 6,
            max_frequencies: 4,
            max_terms: 6,
            height: 10,
            formal_scalars: true,
            complex_frequencies: true,
            frequency_pool: common::FREQUENCIES,
        };
        let f = common::exppoly(&mut r, &shape);
        let y = common::vector(&mut r, d, 5);
        let z = common::vector(&mut r, d, 5);
        let lhs = f.translate(&y).unwrap().translate(&z).unwrap();
        ensure!(lhs == f.translate(&(&y + &z)).unwrap(), "translation law fails on instance {k}: {f}");

        let a = common::matrix(&mut r, d, 5);
        let b = common::matrix(&mut r, d, 5);
        let ab = a.mul(&b).unwrap();
        ensure!(
            f.dilate(&a).unwrap().dilate(&b).unwrap() == f.dilate(&ab).unwrap(),
            "dilation law fails on instance {k}: {f}"
        );

        let diff = f.difference(&y, 1).unwrap();
        ensure!(diff == &f.translate(&y).unwrap() - &f, "difference law fails on instance {k}");

        let lambda = common::frequency(&mut r, d, true, common::FREQUENCIES);
        let c = common::nonzero_gauss(&mut r, 10);
        let e = ExpPoly::exp_linear(lambda.components().to_vec()).scale_gauss(&c);
        let expect = e.scale(&ExpScalar::exp(lambda.pair(y.entries())));
        ensure!(e.translate(&y).unwrap() == expect, "eigenfunction law fails on instance {k}");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!("200 instances, 4 laws each, {:.2}s", elapsed.as_secs_f64()))
}

fn frechet_suite() -> Outcome {
    let mut r = common::rng(2);
    for k in 0..100 {
        let d = r.gen_range(1..=2);
        let deg = r.gen_range(0..=6);
        let p = common::polynomial_of_degree(&mut r, d, deg, 10);
        let y = RatVector::new((0..d).map(|_| common::nonzero_rational(&mut r, 7)).collect());
        ensure!(p.difference(&y, deg + 1).unwrap().is_zero(), "instance {k}: Δ^(k+1) p ≠ 0 for {p}");
        ensure!(!p.difference(&y, deg).unwrap().is_zero(), "instance {k}: Δ^k p = 0 for {p} at {y}");
        ensure!(special::frechet_check(&p, deg + 1, std::slice::from_ref(&y)).unwrap().pass, "checker rejects {p}");
    }
    Ok("100 polynomials of degree ≤ 6".into())
}

fn folfact_suite() -> Outcome {
    let mut r = common::rng(3);
    for k in 0..100 {
        let d = r.gen_range(1..=2);
        let f = common::exppoly(
            &mut r,
            &Shape {
                max_frequencies: 2,
                formal_scalars: true,
                ..Shape::polynomial(d, 4)
            },
        );
        let c = common::matrix(&mut r, d, 6);
        let h = common::vector(&mut r, d, 6);
        let kk = common::vector(&mut r, d, 6);
        let v = folfact_check(&f, &c, &h, &kk).unwrap();
        ensure!(v.pass, "instance {k}: {} vs {}", v.left, v.right);
    }
    Ok("100 instances, exact equality".into())
}

/// Coefficient matrix oracle: rows are x-atoms, columns are y-atoms.
fn separation_round_trip() -> Outcome {
    let mut r = common::rng(4);
    let mut worst_fit: f64 = 0.0;
    let mut smallest_gap = f64::INFINITY;
    for k in 0..100 {
        let d = if r.gen_bool(0.7) { 1 } else { 2 };
        let m = r.gen_range(1..=3);
        // The numeric gap needs frequencies that stay apart on the grid.
        let spec = common::general_spec(&mut r, d, m, if d == 1 { 2 } else { 1 }, true);
        let shape = Shape {
            d,
            max_degree: 1,
            max_frequencies: 2,
            max_terms: 3,
            height: 5,
            formal_scalars: false,
            complex_frequencies: true,
            frequency_pool: common::UNIT_FREQUENCIES,
        };
        let sol = common::solution(&mut r, m, &shape);
        let sep = exact_round_trip(k, &spec, &sol)?;

        let n = sep.n();
        let grid = if d == 1 { tensor_grid(1, 40, -2.5, 2.5) } else { default_points(d) };
        let at_n = equation_residual_exppoly(&spec, &sol, n, Some(&grid), 1e-8).unwrap();
        worst_fit = worst_fit.max(at_n.residual);
        ensure!(at_n.residual < 1e-8, "instance {k}: rank-{n} residual {:e}", at_n.residual);
        if n > 0 {
            // Same kernel, one rank lower.
            let below = at_n.singular_values[n - 1..].iter().map(|s| s * s).sum::<f64>().sqrt();
            smallest_gap = smallest_gap.min(below);
            ensure!(below > 1e-4, "instance {k}: rank-{} residual {below:e}", n - 1);
        }
    }
    // Exact checks only, over rational matrices and clustered frequencies.
    for k in 100..200 {
        let d = if r.gen_bool(0.7) { 1 } else { 2 };
        let m = r.gen_range(1..=3);
        let spec = common::general_spec(&mut r, d, m, 3, false);
        let shape = Shape {
            d,
            max_degree: 2,
            max_frequencies: 2,
            max_terms: 3,
            height: 5,
            formal_scalars: false,
            complex_frequencies: true,
            frequency_pool: common::FREQUENCIES,
        };
        let sol = common::solution(&mut r, m, &shape);
        exact_round_trip(k, &spec, &sol)?;
    }
    Ok(format!(
        "200 exact round trips; 100 numeric gaps with max rank-n residual {worst_fit:.1e}, min rank-(n-1) residual {smallest_gap:.1e}"
    ))
}

fn exact_round_trip(k: usize, spec: &EquationSpec, sol: &SolutionTuple) -> Result<SeparatedForm, String> {
    ensure!(validate_conditions(spec, TheoremProfile::Thm21).pass, "generator broke hypotheses");
    let f = bivariate_expand(spec, sol).unwrap();
    let sep = separate_minimal(&f);
    ensure!(sep.reconstructs(&f), "instance {k}: reconstruction differs");
    let w = sep.v_space();
    ensure!(verify_membership(spec, sol, &w).unwrap().pass, "instance {k}: membership fails");
    let oracle = common::plain_coefficient_rank(&f).ok_or("plain coefficients expected")?;
    ensure!(sep.n() == oracle, "instance {k}: n = {} but rank = {oracle}", sep.n());
    Ok(sep)
}

fn reduction_soundness() -> Outcome {
    let mut r = common::rng(5);
    let mut steps = 0;
    for k in 0..50 {
        let d = if r.gen_bool(0.6) { 1 } else { 2 };
        let m = r.gen_range(2..=4);
        let spec = common::normalized_spec(&mut r, d, m, 3);
        let polynomial = k % 2 == 0;
        let shape = if polynomial {
            Shape::polynomial(d, 3)
        } else {
            Shape {
                d,
                max_degree: 1,
                max_frequencies: 2,
                max_terms: 3,
                height: 5,
                formal_scalars: true,
                complex_frequencies: true,
                frequency_pool: common::FREQUENCIES,
            }
        };
        let sol = common::solution(&mut r, m, &shape);
        let w = separate_minimal(&bivariate_expand(&spec, &sol).unwrap()).v_space();
        let schedule: Vec<RatVector> = (0..m - 1).map(|_| common::vector(&mut r, d, 4)).collect();
        let chain = full_reduction(&spec, &sol, &w, &schedule).map_err(|e| format!("instance {k}: {e}"))?;
        ensure!(chain.len() == m - 1, "instance {k}: chain length {}", chain.len());
        ensure!(chain.last().unwrap().0.spec.m() == 1, "instance {k}: did not reach one summand");

        let (mut prev_spec, mut prev_w, mut prev_deg) = (spec.clone(), w.clone(), max_poly_degree(&sol));
        for (inst, step) in &chain {
            steps += 1;
            ensure!(inst.spec.m() + 1 == prev_spec.m(), "instance {k}: summand count");
            let survivors: Vec<_> = prev_spec.cs().skip(1).cloned().collect();
            ensure!(inst.spec.cs().cloned().collect::<Vec<_>>() == survivors, "instance {k}: c_i changed");
            ensure!(verify_membership(&inst.spec, &inst.sol, &inst.w).unwrap().pass, "instance {k}: membership");
            ensure!(step.w_out.dim() <= 2 * prev_w.dim(), "instance {k}: dim(W) grew too fast");
            if polynomial {
                let deg = inst.max_degree();
                if let Some(p) = prev_deg {
                    ensure!(deg.is_none_or(|q| q < p), "instance {k}: degree {p} -> {deg:?}");
                }
                prev_deg = deg;
            }
            prev_spec = inst.spec.clone();
            prev_w = inst.w.clone();
        }
    }
    Ok(format!("50 chains, {steps} reduction steps"))
}

fn special_equations() -> Outcome {
    let sq = ExpPoly::monomial(&[2]);
    let w = special::wilson_check(&[rat(1, 1), rat(1, 1)], &[rat(1, 1), rat(-1, 1)], &[sq.clone(), sq.clone()])
        .unwrap();
    ensure!(w.pass && w.within_bound.iter().all(|&b| b), "wilson quadratic instance");
    ensure!(w.f.as_ref() == Some(&sq.scale_gauss(&g(2))), "wilson f(x)");

    let samples = vec![
        (RatVector::from_ints(&[1, 2]), RatVector::from_ints(&[3, -1])),
        (RatVector::from_ints(&[-2, 5]), RatVector::from_ints(&[1, 4])),
        (RatVector::new(vec![rat(1, 3), rat(0, 1)]), RatVector::new(vec![rat(-1, 2), rat(2, 7)])),
    ];
    let re_z2 = &ExpPoly::monomial(&[2, 0]) - &ExpPoly::monomial(&[0, 2]);
    let kn = special::kakutani_nagumo_check(&re_z2, 4, &samples).unwrap();
    ensure!(kn.mode == KnMode::Exact && kn.pass, "x^2 - y^2 should pass");
    let abs2 = &ExpPoly::monomial(&[2, 0]) + &ExpPoly::monomial(&[0, 2]);
    let kn = special::kakutani_nagumo_check(&abs2, 4, &samples).unwrap();
    ensure!(!kn.pass, "x^2 + y^2 should fail");
    for ((_, h), res) in samples.iter().zip(&kn.exact_residuals) {
        let h2 = &h.entries()[0] * &h.entries()[0] + &h.entries()[1] * &h.entries()[1];
        ensure!(*res == ExpScalar::from_rational(h2.clone()), "residual {res} ≠ |h|^2 = {h2}");
    }

    let pair = |b: i64, c: i64| CoefficientPair {
        b: RatMatrix::scalar(rat(b, 1)),
        c: RatMatrix::scalar(rat(c, 1)),
    };
    let spec = EquationSpec::new(1, vec![pair(1, 1), pair(1, -1)]).unwrap();
    ensure!(
        special::skitovich_check(&spec, &SolutionTuple::new(vec![sq.clone(), sq])).unwrap().pass,
        "skitovich instance"
    );

    let q = ExpPoly::monomial(&[4]);
    let go = GhuryeOlkinSpec {
        d: 1,
        cs: vec![RatMatrix::scalar(rat(1, 1)), RatMatrix::scalar(rat(-1, 1))],
        r: 2,
        s: 2,
    };
    let sol = SolutionTuple::new(vec![q.clone(), q]);
    let v = special::ghurye_olkin_check(&go, &sol).unwrap();
    ensure!(v.pass && v.all_polynomial(), "ghurye-olkin quartic instance");
    let lhs = bivariate_expand(&EquationSpec::normalized(1, go.cs.clone()).unwrap(), &sol).unwrap();
    let (a, b) = (v.a.unwrap(), v.b.unwrap());
    ensure!(a.try_add(&b).unwrap() == lhs, "A + B ≠ left side");
    ensure!(a.atoms().all(|(xa, _, _)| xa.frequency.is_zero() && xa.monomial.degree() <= 2), "A shape");
    ensure!(b.atoms().all(|(_, ya, _)| ya.frequency.is_zero() && ya.monomial.degree() <= 2), "B shape");
    Ok("wilson, kakutani-nagumo (N = 4), skitovich, ghurye-olkin".into())
}

fn numeric_fit() -> Outcome {
    let f = &ExpPoly::exp_linear(vec![g(1)]).scale_gauss(&g(2)) + &ExpPoly::var(1, 0);
    let grid = SampleGrid::sample(&f, tensor_grid(1, 50, 0.0, 1.0)).unwrap();
    let model = FitModel::new(
        vec![Frequency(vec![g(1)]), Frequency(vec![g(0)])],
        vec![0, 1],
    )
    .unwrap();
    let out = fit(&grid, &model).unwrap();
    let expect = [2.0, 0.0, 1.0];
    let mut worst: f64 = 0.0;
    for ((l, a, c), want) in out.coefficients.iter().zip(expect) {
        let _ = (l, a);
        worst = worst.max((c - want).norm());
    }
    let order: Vec<_> = out.coefficients.iter().map(|(l, a, _)| (l.is_zero(), a.degree())).collect();
    ensure!(order == vec![(false, 0), (true, 0), (true, 1)], "unexpected basis order {order:?}");
    ensure!(worst < 1e-8, "coefficient error {worst:e}");
    ensure!(out.residual < 1e-10, "residual {:e}", out.residual);
    ensure!(out.poly == f, "rounded fit {} ≠ {f}", out.poly);
    Ok(format!("max coefficient error {worst:.1e}, residual {:.1e}", out.residual))
}

fn hypothesis_validator() -> Outcome {
    let scalar = |cs: &[i64]| EquationSpec::normalized(1, cs.iter().map(|&c| RatMatrix::scalar(rat(c, 1))).collect()).unwrap();
    let swap = EquationSpec::normalized(
        2,
        vec![RatMatrix::identity(2), RatMatrix::from_ints(&[&[0, 1], &[1, 0]])],
    )
    .unwrap();
    let cases = [(scalar(&[1, 2]), true), (scalar(&[1, 1]), false), (swap, false)];
    for (idx, (spec, ok)) in cases.iter().enumerate() {
        for profile in TheoremProfile::ALL {
            let rep = validate_conditions(spec, profile);
            ensure!(rep.b_invertible == vec![true, true], "case {idx}: b verdicts");
            ensure!(rep.b_identity == vec![true, true], "case {idx}: identity verdicts");
            ensure!(rep.c_invertible == vec![true, true], "case {idx}: c verdicts");
            let pairs: Vec<_> = rep.differences.iter().map(|p| (p.i, p.j, p.invertible)).collect();
            ensure!(pairs == vec![(0, 1, Some(*ok)), (1, 0, Some(*ok))], "case {idx}: c_i - c_j verdicts {pairs:?}");
            ensure!(rep.normalized_differences == rep.differences, "case {idx}: normalized differences");
            ensure!(rep.profiles.iter().all(|v| v.pass == *ok), "case {idx}: profile verdicts");
            ensure!(rep.pass == *ok && rep.requested == profile, "case {idx}: overall verdict");
        }
    }
    Ok("3 specs x 4 profiles".into())
}

fn cli_contract() -> Outcome {
    let mut r = common::rng(9);
    for k in 0..500 {
        let d = r.gen_range(1..=3);
        let shape = Shape {
            d,
            max_degree: 4,
            max_frequencies: 3,
            max_terms: 5,
            height: 12,
            formal_scalars: true,
            complex_frequencies: true,
            frequency_pool: common::FREQUENCIES,
        };
        let f = common::exppoly(&mut r, &shape);
        let text = f.to_string();
        let back = lcw::dsl::parse_exppoly(&text, Some(d)).map_err(|e| format!("value {k}: {text}: {e}"))?;
        ensure!(back == f, "value {k}: {text} parsed as {back}");
        ensure!(back.to_string() == text, "value {k}: printing is not stable");
    }
    let lcw = |args: &[&str]| lcw::cli::run(std::iter::once("lcw").chain(args.iter().copied())).code;
    let spec = r#"{"d": 1, "pairs": [{"c": [[1]]}, {"c": [[2]]}]}"#;
    ensure!(lcw(&["validate", "--spec", spec, "--profile", "thm2.2"]) == 0, "passing invocation");
    ensure!(lcw(&["check", "--kind", "frechet", "--f", "x1^3", "--order", "3"]) == 1, "failing invocation");
    ensure!(lcw(&["closure", "--f", "x1^^2"]) == 2, "malformed invocation");
    Ok("500 print/parse round trips; exit codes 0/1/2".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("operator algebra", operator_algebra),
        ("frechet", frechet_suite),
        ("difference under composition", folfact_suite),
        ("separation round trip", separation_round_trip),
        ("reduction soundness", reduction_soundness),
        ("special equations", special_equations),
        ("numeric fit", numeric_fit),
        ("hypothesis validator", hypothesis_validator),
        ("cli contract", cli_contract),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}) [{secs:.2}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why}) [{secs:.2}s]", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
