// Recover an exponential polynomial from samples when its frequencies are
// known.

use lcw::dsl::parse_exppoly;
use lcw::exppoly::Frequency;
use lcw::linalg::{rat, GaussRational};
use lcw::numeric::{fit, tensor_grid, FitModel, SampleGrid};

pub fn run_example() -> lcw::Result<()> {
    let truth = parse_exppoly("3/2*x1*exp(x1) - 2 + i*exp(-1/2*x1)", Some(1))?;
    let grid = SampleGrid::sample(&truth, tensor_grid(1, 30, -1.0, 1.0))?;

    let model = FitModel::new(
        vec![
            Frequency::zero(1),
            Frequency(vec![GaussRational::from_int(1)]),
            Frequency(vec![GaussRational::real(rat(-1, 2))]),
        ],
        vec![1, 1, 0],
    )?;
    let result = fit(&grid, &model)?;
    println!("fitted   = {}", result.poly);
    println!("residual = {:.2e}, condition = {:.2e}", result.residual, result.condition);
    assert_eq!(result.poly, truth);
    assert!(result.unrounded.is_empty());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
