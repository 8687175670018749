use std::io::Write;

fn main() {
    let (out, err, code) = classtower::cli::run(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
