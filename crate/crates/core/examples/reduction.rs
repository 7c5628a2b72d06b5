// Eliminate summands one at a time until a single one is left.

use lcw::dsl::parse_exppoly;
use lcw::equation::{EquationSpec, SolutionTuple, SubspaceW};
use lcw::linalg::{rat, RatMatrix};
use lcw::reduction::{default_schedule, full_reduction, max_poly_degree};
use lcw::separation::{bivariate_expand, separate_minimal};

pub fn run_example() -> lcw::Result<()> {
    let spec = EquationSpec::normalized(
        1,
        vec![
            RatMatrix::scalar(rat(1, 1)),
            RatMatrix::scalar(rat(-1, 1)),
            RatMatrix::scalar(rat(2, 1)),
        ],
    )?;
    let sol = SolutionTuple::new(vec![
        parse_exppoly("x1^3", Some(1))?,
        parse_exppoly("2*x1^2 - x1", Some(1))?,
        parse_exppoly("x1^3 + 5", Some(1))?,
    ]);
    let w: SubspaceW = separate_minimal(&bivariate_expand(&spec, &sol)?).v_space();
    println!("m = {}, dim W = {}, degree {:?}", spec.m(), w.dim(), max_poly_degree(&sol));

    let chain = full_reduction(&spec, &sol, &w, &default_schedule(1, spec.m()))?;
    for (inst, step) in &chain {
        println!(
            "h = {}: m = {}, dim W = {}, degree {:?}",
            step.h,
            inst.spec.m(),
            step.w_out.dim(),
            inst.max_degree()
        );
        for (i, g) in inst.sol.f.iter().enumerate() {
            println!("  g{} = {g}", i + 1);
        }
    }
    assert_eq!(chain.last().map(|(inst, _)| inst.spec.m()), Some(1));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
