use std::io::Write;

fn main() {
    let outcome = genus_forge_cli::run_args(std::env::args_os());
    print!("{}", outcome.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
