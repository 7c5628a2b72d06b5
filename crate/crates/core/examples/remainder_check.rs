// Membership in `W + R(y)` where the extra space `R(y)` is only known at a
// few sample points.

use lcw::dsl::parse_exppoly;
use lcw::equation::{EquationSpec, SolutionTuple, SubspaceW};
use lcw::linalg::{rat, RatMatrix, RatVector};
use lcw::separation::{verify_membership, verify_with_remainder};

pub fn run_example() -> lcw::Result<()> {
    let spec = EquationSpec::normalized(1, vec![RatMatrix::scalar(rat(1, 1)), RatMatrix::scalar(rat(2, 1))])?;
    let sol = SolutionTuple::new(vec![parse_exppoly("x1 + exp(x1)", Some(1))?, parse_exppoly("3", Some(1))?]);
    let w = SubspaceW::new(1, vec![parse_exppoly("1", Some(1))?, parse_exppoly("x1", Some(1))?])?;

    let plain = verify_membership(&spec, &sol, &w)?;
    println!("in W alone: {}", plain.pass);

    let r = vec![parse_exppoly("exp(x1)", Some(1))?];
    let samples = vec![
        (RatVector::from_ints(&[0]), r.clone()),
        (RatVector::new(vec![rat(-3, 2)]), r),
        (RatVector::from_ints(&[1]), vec![]),
    ];
    let verdict = verify_with_remainder(&spec, &sol, &w, &samples)?;
    for s in &verdict.samples {
        println!("y = {}: {}{}", s.y, s.pass, s.residual.as_deref().map(|r| format!(" (left over {r})")).unwrap_or_default());
    }

    let not_invariant = vec![(RatVector::from_ints(&[0]), vec![parse_exppoly("x1^2", Some(1))?])];
    if let Err(e) = verify_with_remainder(&spec, &sol, &w, &not_invariant) {
        println!("{e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
