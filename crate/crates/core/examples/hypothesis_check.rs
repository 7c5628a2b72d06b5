// Which theorem hypotheses an equation satisfies, and normalizing `b_i` to
// the identity.

use lcw::dsl::parse_exppoly;
use lcw::equation::{normalize_b_to_identity, validate_conditions, CoefficientPair, EquationSpec, SolutionTuple, TheoremProfile};
use lcw::linalg::RatMatrix;
use lcw::separation::bivariate_expand;

pub fn run_example() -> lcw::Result<()> {
    let spec = EquationSpec::new(
        2,
        vec![
            CoefficientPair {
                b: RatMatrix::from_ints(&[&[2, 0], &[0, 1]]),
                c: RatMatrix::from_ints(&[&[1, 1], &[0, 1]]),
            },
            CoefficientPair {
                b: RatMatrix::identity(2),
                c: RatMatrix::from_ints(&[&[0, 1], &[-1, 0]]),
            },
        ],
    )?;
    let report = validate_conditions(&spec, TheoremProfile::Thm21);
    for v in &report.profiles {
        println!("{}: {}{}", v.profile, v.pass, v.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default());
    }

    let sol = SolutionTuple::new(vec![
        parse_exppoly("x1*x2", Some(2))?,
        parse_exppoly("exp(x1 + x2)", Some(2))?,
    ]);
    let (normal, moved) = normalize_b_to_identity(&spec, &sol)?;
    assert!(normal.is_normalized());
    assert_eq!(bivariate_expand(&spec, &sol)?, bivariate_expand(&normal, &moved)?);
    println!("after normalization thm2.2: {}", validate_conditions(&normal, TheoremProfile::Thm22).pass);

    let degenerate = EquationSpec::normalized(1, vec![RatMatrix::identity(1), RatMatrix::identity(1)])?;
    let bad = validate_conditions(&degenerate, TheoremProfile::Thm22);
    println!("c_1 = c_2: thm2.2 {}", bad.pass);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
