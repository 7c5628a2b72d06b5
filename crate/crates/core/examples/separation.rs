// Expand `Σ f_i(b_i x + c_i y)` and split it into `Σ u_k(y) v_k(x)`.

use lcw::dsl::parse_exppoly;
use lcw::equation::{validate_conditions, CoefficientPair, EquationSpec, SolutionTuple, TheoremProfile};
use lcw::linalg::RatMatrix;
use lcw::separation::{bivariate_expand, separate_minimal, verify_membership};

pub fn run_example() -> lcw::Result<()> {
    let spec = EquationSpec::new(
        1,
        vec![
            CoefficientPair {
                b: RatMatrix::from_ints(&[&[1]]),
                c: RatMatrix::from_ints(&[&[1]]),
            },
            CoefficientPair {
                b: RatMatrix::from_ints(&[&[2]]),
                c: RatMatrix::from_ints(&[&[-1]]),
            },
        ],
    )?;
    assert!(validate_conditions(&spec, TheoremProfile::Thm21).pass);

    let sol = SolutionTuple::new(vec![
        parse_exppoly("x1^2 + exp(x1)", Some(1))?,
        parse_exppoly("x1*exp(-x1)", Some(1))?,
    ]);
    let f = bivariate_expand(&spec, &sol)?;
    println!("F(x, y) = {f}");

    let sep = separate_minimal(&f);
    println!("n = {}", sep.n());
    for (k, (u, v)) in sep.us().iter().zip(sep.vs()).enumerate() {
        println!("  u{}(y) = {}    v{}(x) = {}", k + 1, u.to_string_with_var("y"), k + 1, v);
    }
    assert!(sep.reconstructs(&f));

    let verdict = verify_membership(&spec, &sol, &sep.v_space())?;
    println!("membership in span(v): {}", verdict.pass);
    assert!(verdict.pass);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
