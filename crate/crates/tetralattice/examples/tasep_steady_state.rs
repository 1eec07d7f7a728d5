//! Stationary distribution of the multispecies TASEP on a ring of 5 sites
//! with species content (2,1,1,1): exact kernel solve, trace formula and the
//! closed form, plus CSV output.

use tetralattice::tasep::{
    steady_closed_form, steady_state_trace, steady_state_vector, write_csv, TasepConfig,
    TasepSector,
};

fn main() -> tetralattice::Result<()> {
    let sector = TasepSector::new(vec![2, 1, 1, 1])?;
    let v = steady_state_vector(&sector)?;
    println!(
        "{} configurations; rotation classes starting with 0 and ending with 3:",
        v.len()
    );
    for (c, p) in v.iter().filter(|(c, _)| c.0[0] == 0 && c.0[4] == 3) {
        println!("  P({c}) = {p}");
    }
    for (text, j) in [("30021", 1), ("31002", 2)] {
        let c = TasepConfig::parse(text, 3)?;
        let trace = steady_state_trace(3, 5, &sector, &c, 6)?;
        let closed = steady_closed_form(3, j, 2, &[2, 1, 1, 1])?;
        println!(
            "P({text}): kernel {}, trace {trace}, closed form {closed}",
            v[&c]
        );
    }
    let mut out = Vec::new();
    write_csv(&v, &mut out)?;
    println!(
        "first CSV lines:\n{}",
        String::from_utf8_lossy(&out)
            .lines()
            .take(4)
            .collect::<Vec<_>>()
            .join("\n")
    );
    Ok(())
}
