use std::io::Write;

fn main() {
    let max_n = std::env::var(hilex_cli::MAX_N_VAR).ok();
    let out = hilex_cli::run(std::env::args_os(), max_n.as_deref());
    std::io::stdout().write_all(out.stdout.as_bytes()).ok();
    if !out.stderr.is_empty() {
        let mut err = std::io::stderr();
        err.write_all(out.stderr.as_bytes()).ok();
        if !out.stderr.ends_with('\n') {
            err.write_all(b"\n").ok();
        }
    }
    std::process::exit(out.code);
}
