use opspectra::cli;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--help" || a == "-h") || args.is_empty() {
        print!("{}", cli::USAGE);
        std::process::exit(if args.is_empty() { 1 } else { 0 });
    }
    let config = match cli::parse(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("run with --help for usage");
            std::process::exit(1);
        }
    };
    match cli::run(&config) {
        Ok(()) => {}
        Err(e @ opspectra::Error::TheoremViolation(_)) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
