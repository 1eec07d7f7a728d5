//! Registry contracts: theorem entries pass, conjectures are evidence-only,
//! filters select the documented slices, and reports are deterministic.

use tetralattice::exactalg::{LaurentPoly, VarId};
use tetralattice::harness::{
    registry, run_suite, schur_corr_instance, select, verify, Class, RunOptions, Status,
};
use tetralattice::symfun::{schur_bialternant, Partition};

#[test]
fn full_suite_has_no_failures() {
    let report = run_suite("all", &RunOptions::default()).unwrap();
    for c in &report.cases {
        let want = if c.class == Class::Conjecture {
            Status::EvidenceOnly
        } else {
            Status::Pass
        };
        assert_eq!(c.status, want, "{}: {:?}", c.name, c.error);
        assert!(c.checked > 0, "{} compared nothing", c.name);
    }
    assert!(report.ok());
}

#[test]
fn conjectures_filter_selects_two_evidence_only_entries() {
    let report = run_suite("conjectures", &RunOptions::default()).unwrap();
    let names: Vec<&str> = report.cases.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["conj_commute", "conj_dd"]);
    assert!(report
        .cases
        .iter()
        .all(|c| c.status == Status::EvidenceOnly));
}

#[test]
fn q0_only_excludes_generic_entries() {
    let q0 = select("q0-only").unwrap();
    assert!(!q0.is_empty());
    assert!(q0.iter().all(|e| !e.tags.contains(&"generic")));
    let generic = select("generic").unwrap();
    assert!(generic.iter().all(|e| !q0.iter().any(|f| f.name == e.name)));
    assert_eq!(q0.len() + generic.len(), registry().len());
}

#[test]
fn schur_correspondence_worked_instance() {
    // n = 3, indices (2,1), one variable per block: z1 · s_(1,1)(z1, z2).
    let inst = schur_corr_instance(3, &[(2, 1), (1, 1)]).unwrap();
    assert!(inst.ok);
    let (z1, z2) = (VarId::indexed("z", 1), VarId::indexed("z", 2));
    let expect = &LaurentPoly::var(z1)
        * &schur_bialternant(&Partition::new(vec![1, 1]).unwrap(), &[z1, z2]).unwrap();
    assert_eq!(inst.lhs, expect.to_string());
    assert_eq!(inst.rhs, expect.to_string());
}

#[test]
fn reports_are_deterministic_for_a_seed() {
    let opts = RunOptions {
        seed: 11,
        threads: 3,
        ..RunOptions::default()
    };
    let a = run_suite("q0", &opts).unwrap().to_json();
    let b = run_suite("q0", &RunOptions { threads: 1, ..opts })
        .unwrap()
        .to_json();
    assert_eq!(a, b);
}

#[test]
fn mutation_breaks_a_generic_entry() {
    let opts = RunOptions {
        mutated: true,
        ..RunOptions::default()
    };
    assert_eq!(
        verify("generic_explicit", &opts).unwrap().status,
        Status::Fail
    );
    assert_eq!(
        verify("generic_explicit", &RunOptions::default())
            .unwrap()
            .status,
        Status::Pass
    );
}

#[test]
fn weighted_trace_lattice_selects_the_corrected_closed_form() {
    use tetralattice::harness::oracles::{weighted_trace_n3, weighted_trace_n3_sign_variant};
    use tetralattice::pfunc::{weighted_trace, OperatorWord, TraceKind, TraceWeights};
    use tetralattice::vertexmodel::Model;
    let (z, w) = (
        vec![LaurentPoly::var(VarId::indexed("z", 1))],
        vec![LaurentPoly::var(VarId::indexed("w", 1))],
    );
    let word = OperatorWord::xs(3, Model::generic(), &[(3, z[0].clone()), (1, w[0].clone())]);
    for kind in [TraceKind::A, TraceKind::B] {
        let weights = TraceWeights::standard(3, kind);
        let caps = weights.caps(2);
        let lattice = weighted_trace(&word, &weights, 2).unwrap();
        let type_b = kind == TraceKind::B;
        assert_eq!(
            lattice.poly(),
            weighted_trace_n3(type_b, &z, &w, &caps).unwrap().poly()
        );
        assert_ne!(
            lattice.poly(),
            weighted_trace_n3_sign_variant(type_b, &z, &w, &caps)
                .unwrap()
                .poly()
        );
    }
}
