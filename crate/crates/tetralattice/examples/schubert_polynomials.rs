//! Classical and modified Schubert polynomials of S_3, and the twisted
//! divided difference `D_i` acting on a monomial.

use tetralattice::exactalg::LaurentPoly;
use tetralattice::schubert::{modified_divided_difference, schubert_poly, Permutation};

fn main() -> tetralattice::Result<()> {
    for w in Permutation::all(3) {
        println!(
            "{w}  classical: {:<28} modified: {}",
            schubert_poly(&w, false).to_string(),
            schubert_poly(&w, true)
        );
    }
    let f = LaurentPoly::parse("z1^2*z2")?;
    println!("D_1({f}) = {}", modified_divided_difference(1, &f));
    println!("D_2({f}) = {}", modified_divided_difference(2, &f));
    Ok(())
}
