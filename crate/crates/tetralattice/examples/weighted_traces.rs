//! Weighted traces of generic-q rank-3 X-operators as truncated formal
//! series, and the vacuum expectation at t = Q = 0.

use tetralattice::exactalg::{indexed_vars, LaurentPoly};
use tetralattice::pfunc::{
    vacuum_expectation, weighted_trace, OperatorWord, TraceKind, TraceWeights,
};
use tetralattice::vertexmodel::Model;

fn main() -> tetralattice::Result<()> {
    let z = indexed_vars("z", 1);
    let w = indexed_vars("w", 1);
    let word = OperatorWord::xs(
        3,
        Model::generic(),
        &[(3, LaurentPoly::var(z[0])), (1, LaurentPoly::var(w[0]))],
    );
    println!("word: {word}");
    for kind in [TraceKind::A, TraceKind::B] {
        let series = weighted_trace(&word, &TraceWeights::standard(3, kind), 2)?;
        println!(
            "type {kind:?} trace to cap 2 has {} terms",
            series.poly().len()
        );
    }
    println!("vacuum expectation: {}", vacuum_expectation(&word)?);
    Ok(())
}
