//! Property tests for the algebraic invariants of each module.

use std::collections::HashMap;

use num_traits::{One, Zero};
use proptest::prelude::*;

use tetralattice::exactalg::{q_binomial, FormalSeries, LaurentPoly, Monomial, Rational, VarId};
use tetralattice::fock::{pairing, site_action, SiteOpKind};
use tetralattice::pfunc::{plain_trace, OperatorWord};
use tetralattice::schubert::{divided_difference, modified_divided_difference, swap, z};
use tetralattice::symfun::{elementary_at, kostka, schur_bialternant, Partition};
use tetralattice::tasep::{steady_state_vector, TasepSector};
use tetralattice::vertexmodel::Model;

fn zvars(n: usize) -> Vec<VarId> {
    (1..=n).map(z).collect()
}

/// A Laurent polynomial in `z1..z3` with small integer coefficients.
fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=5, prop::array::uniform3(-2i32..=3)), 0..5).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (c, e) in terms {
            let m = Monomial::from_pairs((0..3).map(|k| (z(k + 1), e[k])));
            p += &LaurentPoly::term(Rational::from_integer(c.into()), m);
        }
        p
    })
}

/// A genuine polynomial (nonnegative exponents) in `z1..z3`.
fn polynomial() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_map(|p| {
        let shift = Monomial::from_pairs((1..=3).map(|k| (z(k), 2)));
        p.mul_monomial(&shift)
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn partition_up_to(size: u32, len: usize) -> impl Strategy<Value = Partition> {
    (1..=size).prop_flat_map(move |s| {
        let all: Vec<Partition> = Partition::all_of(s)
            .into_iter()
            .filter(|p| p.length() <= len)
            .collect();
        prop::sample::select(all)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in laurent(), b in laurent(), xs in prop::array::uniform3(1i64..=9)) {
        let point: HashMap<VarId, Rational> = (0..3).map(|k| (z(k + 1), Rational::from_integer(xs[k].into()))).collect();
        let (ea, eb) = (a.eval(&point).unwrap(), b.eval(&point).unwrap());
        prop_assert_eq!((&a * &b).eval(&point).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&point).unwrap(), ea + eb);
    }

    #[test]
    fn q_binomial_at_one_is_binomial(n in 0usize..=9, k in 0usize..=9) {
        prop_assume!(k <= n);
        let v = q_binomial(n, k, &LaurentPoly::one()).unwrap();
        prop_assert_eq!(v, LaurentPoly::int(binomial(n as u64, k as u64) as i64));
    }

    #[test]
    fn pairing_is_orthogonal(m in 0u32..8, m2 in 0u32..8) {
        prop_assert_eq!(pairing(m, m2, false).is_zero(), m != m2);
        prop_assert_eq!(pairing(m, m2, true).is_zero(), m != m2);
    }

    #[test]
    fn generic_site_ops_degenerate_at_q0(m in 0u32..6) {
        let at0 = |kind| site_action(kind, m, 6, (1, 1)).unwrap().map(|(m2, w)| (m2, w.at_zero())).filter(|&(_, w)| w != 0);
        prop_assert_eq!(at0(SiteOpKind::AMinus), at0(SiteOpKind::BMinus));
        prop_assert_eq!(at0(SiteOpKind::Kdiag), at0(SiteOpKind::TProj));
        prop_assert_eq!(at0(SiteOpKind::APlus), at0(SiteOpKind::BPlus));
    }

    #[test]
    fn schur_is_symmetric(lambda in partition_up_to(5, 4), n in 2usize..=4, i in 0usize..3) {
        prop_assume!(lambda.length() <= n && i + 1 < n);
        let vars = zvars(n);
        let s = schur_bialternant(&lambda, &vars).unwrap();
        prop_assert_eq!(s.swap_vars(vars[i], vars[i + 1]), s);
    }

    #[test]
    fn schur_shift_factorizes(lambda in partition_up_to(4, 3), c in 0u32..3) {
        let vars = zvars(3);
        let mut parts = lambda.parts().to_vec();
        parts.resize(3, 0);
        let shifted = Partition::new(parts.iter().map(|p| p + c).collect()).unwrap();
        let prefactor = LaurentPoly::monomial(Monomial::from_pairs(vars.iter().map(|&v| (v, c as i32))));
        prop_assert_eq!(schur_bialternant(&shifted, &vars).unwrap(), &prefactor * &schur_bialternant(&lambda, &vars).unwrap());
    }

    #[test]
    fn twisted_divided_difference_braid_and_square(f in laurent(), i in 1usize..=1) {
        let d = |k: usize, g: &LaurentPoly| modified_divided_difference(k, g);
        prop_assert_eq!(d(i, &d(i + 1, &d(i, &f))), d(i + 1, &d(i, &d(i + 1, &f))));
        prop_assert_eq!(d(i, &d(i, &f)), -d(i, &f));
    }

    #[test]
    fn twisted_leibniz(f in laurent(), g in laurent(), i in 1usize..=2) {
        let lhs = modified_divided_difference(i, &(&f * &g));
        let rhs = &(&(&LaurentPoly::var(z(i + 1)) * &divided_difference(i, &f)) * &g) + &(&swap(i, &f) * &modified_divided_difference(i, &g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divided_difference_kills_symmetric(f in polynomial(), i in 1usize..=2) {
        let sym = &f + &swap(i, &f);
        prop_assert!(divided_difference(i, &sym).is_zero());
    }
}

#[test]
fn kostka_expands_schur() {
    for size in 1..=6u32 {
        for lambda in Partition::all_of(size) {
            let n = lambda.length().clamp(2, 4);
            if lambda.length() > n {
                continue;
            }
            let vars = zvars(n);
            let s = schur_bialternant(&lambda, &vars).unwrap();
            let mut expansion = LaurentPoly::zero();
            for (m, _) in s.terms() {
                let alpha: Vec<u32> = vars.iter().map(|&v| m.exponent(v) as u32).collect();
                let k = kostka(&lambda, &alpha);
                expansion +=
                    &LaurentPoly::term(Rational::from_integer((k as i64).into()), m.clone());
            }
            assert_eq!(expansion, s, "lambda = {:?}", lambda.parts());
        }
    }
}

#[test]
fn elementary_at_ones_is_binomial() {
    for n in 0..=8usize {
        let ones = vec![Rational::one(); n];
        for k in 0..=n {
            assert_eq!(
                elementary_at(k, &ones),
                Rational::from_integer((binomial(n as u64, k as u64) as i64).into())
            );
        }
    }
}

#[test]
fn q_binomial_theorem() {
    // ∏_{k<n} (1 + q^k t) = Σ_k q^{k(k−1)/2} [n k]_q t^k
    let q = LaurentPoly::var(VarId::q());
    let t = LaurentPoly::named("t");
    for n in 0..=6usize {
        let lhs = (0..n).fold(LaurentPoly::one(), |acc, k| {
            &acc * &(&LaurentPoly::one() + &(&q.pow(k as i32).unwrap() * &t))
        });
        let mut rhs = LaurentPoly::zero();
        for k in 0..=n {
            rhs += &(&(&q.pow((k * k.saturating_sub(1) / 2) as i32).unwrap()
                * &q_binomial(n, k, &q).unwrap())
                * &t.pow(k as i32).unwrap());
        }
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn series_truncation_is_consistent() {
    let q = VarId::q();
    let caps = vec![tetralattice::exactalg::Cap::new(vec![q], 5)];
    let one_minus_q = FormalSeries::new(&LaurentPoly::one() - &LaurentPoly::var(q), caps.clone());
    let geometric = FormalSeries::new(
        LaurentPoly::sum(
            (0..=5)
                .map(|k| LaurentPoly::var_pow(q, k))
                .collect::<Vec<_>>()
                .iter(),
        ),
        caps,
    );
    assert!(one_minus_q.mul(&geometric).poly().is_one());
}

#[test]
fn tasep_kernel_is_positive_and_rotation_invariant() {
    for m in [
        vec![1, 1, 1],
        vec![2, 1, 1],
        vec![1, 2, 1],
        vec![2, 1, 1, 1],
        vec![1, 1, 1, 1],
        vec![1, 1, 2, 1],
    ] {
        let sector = TasepSector::new(m.clone()).unwrap();
        let v = steady_state_vector(&sector).unwrap();
        assert!(v.values().all(|x| *x > Rational::zero()), "sector {m:?}");
        assert!(
            v.iter().all(|(c, x)| v.get(&c.rotate()) == Some(x)),
            "sector {m:?}"
        );
    }
}

#[test]
fn plain_trace_is_cyclic() {
    let zs: Vec<LaurentPoly> = (1..=3).map(|k| LaurentPoly::var(z(k))).collect();
    let word = [
        (2usize, zs[0].clone()),
        (0, zs[1].clone()),
        (1, zs[2].clone()),
    ];
    let base = plain_trace(&OperatorWord::xs(2, Model::q0(), &word), 1, 6)
        .unwrap()
        .value;
    for r in 1..word.len() {
        let mut rotated = word.to_vec();
        rotated.rotate_left(r);
        assert_eq!(
            plain_trace(&OperatorWord::xs(2, Model::q0(), &rotated), 1, 6)
                .unwrap()
                .value,
            base,
            "rotation {r}"
        );
    }
}

#[test]
fn generic_model_at_q0_is_rescaled_q0_model() {
    use tetralattice::fock::OccupationState;
    use tetralattice::vertexmodel::{basis_vector, LatticeOperator, XOperator};
    let zv = LaurentPoly::var(z(1));
    for n in 2..=3usize {
        for i in 0..=n {
            let generic = XOperator::new(n, i, Model::generic(), zv.clone()).unwrap();
            let q0 = XOperator::new(n, i, Model::q0(), zv.clone()).unwrap();
            let scale = zv.pow(-(i as i32)).unwrap();
            for s in OccupationState::all_bounded(n * (n - 1) / 2, 2) {
                let mut g = generic.apply(&basis_vector(s.clone()), 4).unwrap();
                for c in g.values_mut() {
                    *c = c.subs(VarId::q(), &LaurentPoly::zero()).unwrap();
                }
                g.retain(|_, c| !c.is_zero());
                let mut r = q0.apply(&basis_vector(s.clone()), 4).unwrap();
                for c in r.values_mut() {
                    *c = &*c * &scale;
                }
                assert_eq!(g, r, "n={n} i={i} state {s}");
            }
        }
    }
}
