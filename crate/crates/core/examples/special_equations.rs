// The named special cases: Fréchet, Kakutani–Nagumo, Wilson, Skitovich and
// Ghurye–Olkin.

use lcw::dsl::parse_exppoly;
use lcw::equation::{CoefficientPair, EquationSpec, SolutionTuple};
use lcw::linalg::{rat, RatMatrix, RatVector};
use lcw::special::{
    frechet_check, ghurye_olkin_check, kakutani_nagumo_check, skitovich_check, wilson_check, GhuryeOlkinSpec,
};

pub fn run_example() -> lcw::Result<()> {
    let cubic = parse_exppoly("x1^3 - x1*x2 + 4", Some(2))?;
    let trials = [RatVector::from_ints(&[1, 2]), RatVector::new(vec![rat(-1, 3), rat(1, 2)])];
    let fr = frechet_check(&cubic, 4, &trials)?;
    println!("frechet, order 4: {}", fr.pass);

    let samples = [(RatVector::from_ints(&[1, 0]), RatVector::from_ints(&[1, 1]))];
    let harmonic = kakutani_nagumo_check(&parse_exppoly("x1^2 - x2^2", Some(2))?, 4, &samples)?;
    let not_harmonic = kakutani_nagumo_check(&parse_exppoly("x1^2 + x2^2", Some(2))?, 4, &samples)?;
    println!(
        "kakutani-nagumo: x1^2 - x2^2 {}, x1^2 + x2^2 {} (residual {})",
        harmonic.pass, not_harmonic.pass, not_harmonic.max_residual
    );
    if let Some(r) = &not_harmonic.symbolic_residual {
        println!("  symbolic residual in (z, h): {r}");
    }

    let x2 = parse_exppoly("x1^2", Some(1))?;
    let wilson = wilson_check(
        &[rat(1, 1), rat(1, 1)],
        &[rat(1, 1), rat(-1, 1)],
        &[x2.clone(), x2.clone()],
    )?;
    println!("wilson: {} (degree bound {})", wilson.pass, wilson.bound);
    if let (Some(f), Some(g)) = (&wilson.f, &wilson.g) {
        println!("  f(x) = {f}, g(y) = {}", g.to_string_with_var("y"));
    }

    let spec = EquationSpec::new(
        1,
        vec![
            CoefficientPair {
                b: RatMatrix::from_ints(&[&[1]]),
                c: RatMatrix::from_ints(&[&[1]]),
            },
            CoefficientPair {
                b: RatMatrix::from_ints(&[&[1]]),
                c: RatMatrix::from_ints(&[&[-1]]),
            },
        ],
    )?;
    let sk = skitovich_check(&spec, &SolutionTuple::new(vec![x2.clone(), x2.clone()]))?;
    println!("skitovich with f_i = x^2: {}", sk.pass);

    let go = GhuryeOlkinSpec {
        d: 1,
        cs: vec![RatMatrix::from_ints(&[&[1]]), RatMatrix::from_ints(&[&[-1]]), RatMatrix::from_ints(&[&[2]])],
        r: 2,
        s: 2,
    };
    let quartic = parse_exppoly("x1^4", Some(1))?;
    let sol = SolutionTuple::new(vec![quartic.clone(), quartic.clone(), quartic]);
    let verdict = ghurye_olkin_check(&go, &sol)?;
    println!("ghurye-olkin: {} (all polynomial: {})", verdict.pass, verdict.all_polynomial());
    if let (Some(a), Some(b)) = (&verdict.a, &verdict.b) {
        println!("  A = {a}\n  B = {b}");
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
