fn main() {
    let json = std::env::args().any(|a| a == "--json");
    let out = lcw::cli::run(std::env::args_os());
    let text = out.rendered(json);
    if out.code == 2 && !json {
        eprintln!("{text}");
    } else {
        println!("{text}");
    }
    std::process::exit(out.code);
}
