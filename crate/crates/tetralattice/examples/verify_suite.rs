//! Run a tagged slice of the identity registry and print the report;
//! pass a filter (tag, entry name or comma list) as the first argument.

use tetralattice::harness::{run_suite, RunOptions};

fn main() -> tetralattice::Result<()> {
    let filter = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "schubert".to_string());
    let report = run_suite(&filter, &RunOptions::default())?;
    print!("{}", report.render_text(true));
    std::process::exit(if report.ok() { 0 } else { 1 });
}
