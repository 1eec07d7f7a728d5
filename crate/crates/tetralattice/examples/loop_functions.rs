//! q-deformed loop elementary functions from layered Y-operators:
//! the `⟨⟨10010|` example and its q = 0 limit.

use tetralattice::exactalg::{LaurentPoly, VarId};
use tetralattice::pfunc::{dual_expectation, OperatorWord};
use tetralattice::symfun::loop_elementary;

fn main() -> tetralattice::Result<()> {
    let word = OperatorWord::y_columns(5, "z", 3);
    let value = dual_expectation(&[1, 0, 0, 1, 0], &word)?;
    println!("<<10010| Y Y Y |0>> = {value}  ({} terms)", value.len());
    let at_q0 = dual_expectation(&[1, 1], &OperatorWord::y_columns(2, "z", 3))?
        .subs(VarId::q(), &LaurentPoly::zero())?;
    println!("<<11| Y Y Y |0>> at q=0 = {at_q0}");
    println!(
        "loop e_2^(1)           = {}",
        loop_elementary(2, 1, "z", 3, 2)?
    );
    Ok(())
}
