//! Exchange relation `X_1(x) X_2(y) = X_1(y) X_2(x) + (1 − x/y) X_2(y) X_1(x)`
//! of the q = 0 rank-3 X-operators, checked as an operator identity on all
//! states with occupations at most 2.

use tetralattice::exactalg::LaurentPoly;
use tetralattice::fock::OccupationState;
use tetralattice::vertexmodel::{
    apply_word, basis_vector, combine, LatticeOperator, Model, XOperator,
};

fn main() -> tetralattice::Result<()> {
    let (x, y) = (LaurentPoly::parse("x")?, LaurentPoly::parse("y")?);
    let x_over_y = &x * &y.inv_term()?;
    let op = |i, z: &LaurentPoly| XOperator::new(3, i, Model::q0(), z.clone());
    let (x1, x2, y1, y2) = (op(1, &x)?, op(2, &x)?, op(1, &y)?, op(2, &y)?);
    let lhs: [&dyn LatticeOperator; 2] = [&x1, &y2];
    let swapped: [&dyn LatticeOperator; 2] = [&y1, &x2];
    let reversed: [&dyn LatticeOperator; 2] = [&y2, &x1];
    let inputs = OccupationState::all_bounded(3, 2);
    let mut nonzero = 0;
    for s in &inputs {
        let l = apply_word(&lhs, &basis_vector(s.clone()), 4)?;
        let r = combine(&[
            (
                LaurentPoly::one(),
                apply_word(&swapped, &basis_vector(s.clone()), 4)?,
            ),
            (
                &LaurentPoly::one() - &x_over_y,
                apply_word(&reversed, &basis_vector(s.clone()), 4)?,
            ),
        ]);
        assert_eq!(l, r, "relation fails on {s}");
        nonzero += usize::from(!l.is_empty());
    }
    println!(
        "relation holds on {} input states ({nonzero} with nonzero image)",
        inputs.len()
    );
    Ok(())
}
