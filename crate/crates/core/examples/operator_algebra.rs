// Translation, dilation and finite differences on exponential polynomials.

use lcw::dsl::parse_exppoly;
use lcw::linalg::{rat, RatMatrix, RatVector};

pub fn run_example() -> lcw::Result<()> {
    let f = parse_exppoly("x1^2*exp(x1 - x2) + 3*x2", Some(2))?;
    let y = RatVector::new(vec![rat(1, 2), rat(-1, 1)]);
    let z = RatVector::from_ints(&[2, 0]);

    let shifted = f.translate(&y)?;
    println!("f          = {f}");
    println!("tau_y f    = {shifted}");

    // group law
    let sum = RatVector::new(y.entries().iter().zip(z.entries()).map(|(a, b)| a + b).collect());
    assert_eq!(shifted.translate(&z)?, f.translate(&sum)?);

    // Δ_y = τ_y − id
    let diff = f.difference(&y, 1)?;
    assert_eq!(diff, shifted.try_sub(&f)?);
    println!("delta_y f  = {diff}");

    let b = RatMatrix::from_ints(&[&[1, 1], &[0, 2]]);
    println!("f(Bx)      = {}", f.dilate(&b)?);

    let p = parse_exppoly("x1^3 - 2*x1*x2", Some(2))?;
    assert!(p.difference(&y, 4)?.is_zero());
    assert!(!p.difference(&y, 3)?.is_zero());
    println!("delta^4 of a cubic vanishes");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
