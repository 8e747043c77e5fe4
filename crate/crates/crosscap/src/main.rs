use std::io::{stderr, stdin, stdout};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = crosscap::cli::run(
        &argv,
        &mut stdin().lock(),
        &mut stdout().lock(),
        &mut stderr().lock(),
    );
    std::process::exit(code);
}
