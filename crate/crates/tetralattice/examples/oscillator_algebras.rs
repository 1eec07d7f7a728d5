//! Defining relations of the q = 0 and generic q-oscillator algebras on
//! truncated Fock spaces, and a single site operator in action.

use tetralattice::fock::{
    apply_site_op, oscillator_relation_check, OccupationState, OscillatorAlgebra, SiteOp,
    SiteOpKind,
};

fn main() -> tetralattice::Result<()> {
    for algebra in [OscillatorAlgebra::Q0, OscillatorAlgebra::Generic] {
        let report = oscillator_relation_check(algebra, 6)?;
        println!(
            "{algebra:?}: {} relations, ok = {}",
            report.checked.len(),
            report.ok()
        );
    }
    let state = OccupationState(vec![0, 2, 1]);
    for kind in [SiteOpKind::APlus, SiteOpKind::AMinus, SiteOpKind::Kdiag] {
        let image = apply_site_op(SiteOp { kind, site: 1 }, &state, 5)?;
        for (s, c) in image {
            println!("{kind:?} on site 1 of {state}: ({c}) {s}");
        }
    }
    Ok(())
}
