//! Vacuum expectations of q = 0 X-operator words are Schur polynomials.
//!
//! `⟨Ω| X_2(z1) X_1(z2) |Ω⟩` on the rank-3 triangle equals
//! `z1 · s_(1,1)(z1, z2)`, computed here both on the lattice and by the
//! bialternant formula.

use tetralattice::exactalg::{indexed_vars, LaurentPoly};
use tetralattice::pfunc::{vacuum_expectation, OperatorWord};
use tetralattice::symfun::{schur_bialternant, Partition};
use tetralattice::vertexmodel::Model;

fn main() -> tetralattice::Result<()> {
    let z = indexed_vars("z", 2);
    let word = OperatorWord::xs(
        3,
        Model::q0(),
        &[(2, LaurentPoly::var(z[0])), (1, LaurentPoly::var(z[1]))],
    );
    let lattice = vacuum_expectation(&word)?;
    let closed = &LaurentPoly::var(z[0]) * &schur_bialternant(&Partition::new(vec![1, 1])?, &z)?;
    println!("word            : {word}");
    println!("lattice         : {lattice}");
    println!("z1 * s_(1,1)    : {closed}");
    println!("agree           : {}", lattice == closed);
    Ok(())
}
