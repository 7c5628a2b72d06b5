// Numerical rank test for black-box functions: how far the sampled kernel
// `Σ f_i(b_i x + c_i y)` is from rank `n`.

use lcw::equation::EquationSpec;
use lcw::linalg::{rat, RatMatrix};
use lcw::numeric::{default_points, equation_residual, DEFAULT_TOLERANCE};
use num_complex::Complex64;

pub fn run_example() -> lcw::Result<()> {
    let spec = EquationSpec::normalized(1, vec![RatMatrix::scalar(rat(1, 1)), RatMatrix::scalar(rat(-1, 1))])?;
    let pts = default_points(1);

    // cos(x + y) + cos(x − y) = 2 cos x cos y has rank 1
    let cos = |z: &[f64]| Complex64::new(z[0].cos(), 0.0);
    let fs = [cos, cos];
    for n in 0..3 {
        let rep = equation_residual(&spec, &fs, &pts, &pts, n, DEFAULT_TOLERANCE)?;
        println!("n = {n}: residual {:.2e} pass {}", rep.residual, rep.pass);
    }

    // a Gaussian is not an exponential polynomial; its rank does not settle
    let gauss = |z: &[f64]| Complex64::new((-z[0] * z[0]).exp(), 0.0);
    let fs = [gauss, gauss];
    let rep = equation_residual(&spec, &fs, &pts, &pts, 4, DEFAULT_TOLERANCE)?;
    let head: Vec<String> = rep.singular_values.iter().take(8).map(|s| format!("{s:.1e}")).collect();
    println!("gaussian singular values: {}", head.join(" "));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
