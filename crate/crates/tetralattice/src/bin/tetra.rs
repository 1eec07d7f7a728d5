//! Thin command-line entry point; all logic lives in `tetralattice::cli`.

fn main() {
    std::process::exit(tetralattice::cli::run(std::env::args_os()));
}
