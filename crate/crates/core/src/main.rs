use std::io;

fn main() {
    let code = pathbij::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
