// The smallest translation-invariant space holding a function, i.e. the
// minimal `n` in `f(x + y) = Σ u_k(y) v_k(x)`.

use lcw::dsl::parse_exppoly;
use lcw::reduction::levi_civita_closure;

pub fn run_example() -> lcw::Result<()> {
    for text in ["x1^3", "x1*exp(x1) + exp(-x1)", "x1*x2 + exp(x1 - x2)"] {
        let f = parse_exppoly(text, None)?;
        let (n, basis) = levi_civita_closure(&f);
        let shown: Vec<String> = basis.iter().map(ToString::to_string).collect();
        println!("{text}: n = {n}, basis [{}]", shown.join(", "));
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
