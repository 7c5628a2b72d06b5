// Parsing and printing the expression language.

use lcw::dsl::{parse_exppoly, parse_gauss};

pub fn run_example() -> lcw::Result<()> {
    for text in [
        "(x1 + 1)^3",
        "exp(2*x1 - i*x2) * x2 / 4",
        "E(1/2) * x1 + E(-1) - 1",
        "(1 + 2i) * exp(-x1) * x1^2",
    ] {
        let p = parse_exppoly(text, None)?;
        let printed = p.to_string();
        assert_eq!(parse_exppoly(&printed, Some(p.dim()))?, p);
        println!("{text:32} -> {printed}");
    }
    println!("{}", parse_gauss("3/4 - 2i")?);

    match parse_exppoly("x1 + * 2", None) {
        Err(e) => println!("{e}"),
        Ok(p) => println!("unexpected: {p}"),
    }
    match parse_exppoly("x3", Some(2)) {
        Err(e) => println!("{e}"),
        Ok(p) => println!("unexpected: {p}"),
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
