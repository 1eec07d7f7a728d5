//! Checks for the generic-`q` model: weighted traces of the rank-3
//! X-operators, the layered `Y`-operators and the commutativity conjecture.

use super::oracles::{
    binary_loop, higher_rank_loop, qfactorial_elementary, vacuum_n3, weighted_trace_n3,
};
use super::{compare_operators, var, Ctx, Instance};
use crate::error::Result;
use crate::exactalg::{LaurentPoly, VarId};
use crate::fock::{apply_site_op, OccupationState, SiteOp, SiteOpKind};
use crate::pfunc::{
    dual_expectation, vacuum_expectation, weighted_trace, OpSpec, OperatorWord, TraceKind,
    TraceWeights,
};
use crate::symfun::loop_elementary;
use crate::vertexmodel::{
    apply_word, basis_vector, combine, FockVector, LatticeOperator, XOperator,
};

/// Truncation cap per site for the weighted traces.
pub const WTRACE_CAP: i32 = 3;

fn spectral(base: &str, k: usize) -> Vec<LaurentPoly> {
    (1..=k).map(|i| var(base, i)).collect()
}

fn rank3_word(ctx: &Ctx, z: &[LaurentPoly], w: &[LaurentPoly]) -> OperatorWord {
    let factors: Vec<(usize, LaurentPoly)> = z
        .iter()
        .map(|x| (3, x.clone()))
        .chain(w.iter().map(|x| (1, x.clone())))
        .collect();
    OperatorWord::xs(3, ctx.generic(), &factors)
}

fn wtrace(ctx: &Ctx, kind: TraceKind) -> Result<Vec<Instance>> {
    let weights = TraceWeights::standard(3, kind);
    let caps = weights.caps(WTRACE_CAP);
    let mut out = Vec::new();
    for m in 0..=3 {
        for n in 0..=3 {
            if m + n == 0 {
                continue;
            }
            let (z, w) = (spectral("z", m), spectral("w", n));
            let lattice = weighted_trace(&rank3_word(ctx, &z, &w), &weights, WTRACE_CAP)?;
            let closed = weighted_trace_n3(kind == TraceKind::B, &z, &w, &caps)?;
            out.push(Instance::compare(
                format!("m={m} n={n} D={WTRACE_CAP}"),
                lattice.poly(),
                closed.poly(),
            ));
        }
    }
    Ok(out)
}

/// Type-A weighted trace.
pub fn wtrace_a(ctx: &Ctx) -> Result<Vec<Instance>> {
    wtrace(ctx, TraceKind::A)
}

/// Type-B weighted trace.
pub fn wtrace_b(ctx: &Ctx) -> Result<Vec<Instance>> {
    wtrace(ctx, TraceKind::B)
}

/// Vacuum expectation (`t = Q = 0`), exact in `q`.
pub fn wtrace_special(ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for m in 0..=3 {
        for n in 0..=3 {
            if m + n == 0 {
                continue;
            }
            let (z, w) = (spectral("z", m), spectral("w", n));
            let lattice = vacuum_expectation(&rank3_word(ctx, &z, &w))?;
            out.push(Instance::compare(
                format!("m={m} n={n}"),
                &lattice,
                &vacuum_n3(&z, &w),
            ));
        }
    }
    Ok(out)
}

fn grid(k: usize, p: usize) -> LaurentPoly {
    LaurentPoly::var(VarId::grid("z", k, p))
}

fn bras(layers: usize, max_total: u32, max_entry: u32) -> Vec<Vec<u32>> {
    OccupationState::all_bounded(layers, max_entry)
        .into_iter()
        .map(|s| s.0)
        .filter(|b| b.iter().sum::<u32>() <= max_total)
        .collect()
}

/// General dual expectations of `Y`-columns.
pub fn qloop_general(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for layers in 1..=3 {
        for n in 1..=3 {
            let word = OperatorWord::y_columns(layers, "z", n);
            for bra in bras(layers, n as u32, n as u32) {
                let lattice = dual_expectation(&bra, &word)?;
                out.push(Instance::compare(
                    format!("bra={bra:?} n={n}"),
                    &lattice,
                    &higher_rank_loop(&bra, n, grid),
                ));
            }
        }
    }
    Ok(out)
}

/// The worked `⟨⟨10010|` example with three columns.
pub fn worked_loop_example() -> LaurentPoly {
    let q = LaurentPoly::var(VarId::q());
    let mut out = LaurentPoly::zero();
    for (a, b) in [(1, 2), (1, 3), (2, 3)] {
        out += &(&grid(a, 1) * &grid(b, 4));
        out += &(&q * &(&grid(a, 4) * &grid(b, 1)));
    }
    out
}

/// Binary bras: permutation sum, the worked example, and the `q = 0`
/// reduction to loop elementary functions.
pub fn qloop_binary(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for layers in 1..=4 {
        for n in 1..=4 {
            let word = OperatorWord::y_columns(layers, "z", n);
            for bra in bras(layers, n as u32, 1) {
                let lattice = dual_expectation(&bra, &word)?;
                out.push(Instance::compare(
                    format!("bra={bra:?} n={n}"),
                    &lattice,
                    &binary_loop(&bra, n, grid),
                ));
            }
        }
    }
    let example = dual_expectation(&[1, 0, 0, 1, 0], &OperatorWord::y_columns(5, "z", 3))?;
    let expect = worked_loop_example();
    out.push(Instance::judged(
        "worked example bra=10010 n=3",
        example.to_string(),
        expect.to_string(),
        example == expect && example.len() == 6,
    ));
    for layers in 1..=4 {
        for n in layers..=4 {
            let lattice =
                dual_expectation(&vec![1; layers], &OperatorWord::y_columns(layers, "z", n))?
                    .subs(VarId::q(), &LaurentPoly::zero())?;
            out.push(Instance::compare(
                format!("q=0, bra=1^{layers} n={n}"),
                &lattice,
                &loop_elementary(layers, 1, "z", n, layers)?,
            ));
        }
    }
    Ok(out)
}

/// Binary bras at equal layer variables give `[m]_q! e_m`.
pub fn qloop_eqvars(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for layers in 1..=4 {
        for n in 1..=4 {
            let z = spectral("z", n);
            let word = OperatorWord {
                factors: z
                    .iter()
                    .map(|zk| OpSpec::YCol {
                        params: vec![zk.clone(); layers],
                    })
                    .collect(),
                model: crate::vertexmodel::Model::generic(),
            };
            for bra in bras(layers, n as u32, 1) {
                let m = bra.iter().sum::<u32>() as usize;
                let lattice = dual_expectation(&bra, &word)?;
                out.push(Instance::compare(
                    format!("bra={bra:?} n={n}"),
                    &lattice,
                    &qfactorial_elementary(m, &z),
                ));
            }
        }
    }
    Ok(out)
}

/// `[X_j(z), X_j(w)] = 0` in the generic model (evidence only).
pub fn conj_commute(ctx: &Ctx) -> Result<Vec<Instance>> {
    let (z, w) = (var("z", 1), var("w", 1));
    let mut out = Vec::new();
    for big_n in 3..=4usize {
        let inputs = OccupationState::all_bounded(big_n * (big_n - 1) / 2, 1);
        for j in 0..=big_n {
            let xz = XOperator::new(big_n, j, ctx.generic(), z.clone())?;
            let xw = XOperator::new(big_n, j, ctx.generic(), w.clone())?;
            let zw: [&dyn LatticeOperator; 2] = [&xz, &xw];
            let wz: [&dyn LatticeOperator; 2] = [&xw, &xz];
            out.push(compare_operators(
                format!("N={big_n} j={j} occ<=1"),
                &inputs,
                |s| apply_word(&zw, &basis_vector(s.clone()), 3),
                |s| apply_word(&wz, &basis_vector(s.clone()), 3),
            )?);
        }
    }
    Ok(out)
}

/// A normally ordered oscillator monomial with a scalar coefficient; the
/// rightmost generator acts first. Sites are `0 = (1,1)`, `1 = (1,2)`,
/// `2 = (2,1)`.
type OscTerm = (LaurentPoly, Vec<(SiteOpKind, usize)>);

/// The rank-3 generic X-operators written out in oscillators.
pub fn explicit_rank3(i: usize, z: &LaurentPoly) -> Result<Vec<OscTerm>> {
    use SiteOpKind::{AMinus as M, APlus as P, Kdiag as K};
    let q = LaurentPoly::var(VarId::q());
    let one = LaurentPoly::one();
    let zi = z.inv_term()?;
    let (a11, a12, a21) = (0, 1, 2);
    Ok(match i {
        0 => vec![
            (one.clone(), vec![]),
            (z.clone(), vec![(P, a11)]),
            (z.pow(2)?, vec![(P, a12), (P, a21)]),
            (z.clone(), vec![(P, a12), (P, a21), (M, a11)]),
            (-(&q * z), vec![(P, a12), (K, a11)]),
            (z.clone(), vec![(P, a21), (K, a11)]),
        ],
        1 => vec![
            (one.clone(), vec![(P, a12), (M, a11), (K, a21)]),
            (z.clone(), vec![(P, a12), (K, a21)]),
            (one.clone(), vec![(K, a11), (K, a21)]),
        ],
        2 => vec![
            (one.clone(), vec![(P, a11), (M, a21), (K, a12)]),
            (zi.clone(), vec![(M, a21), (K, a12)]),
            (one.clone(), vec![(K, a11), (K, a12)]),
        ],
        3 => vec![
            (one.clone(), vec![]),
            (zi.clone(), vec![(P, a11), (M, a12), (M, a21)]),
            (zi.clone(), vec![(M, a11)]),
            (zi.pow(2)?, vec![(M, a12), (M, a21)]),
            (zi.clone(), vec![(M, a12), (K, a11)]),
            (-(&q * &zi), vec![(M, a21), (K, a11)]),
        ],
        _ => {
            return Err(crate::error::Error::OutOfRange(format!(
                "rank-3 X index {i}"
            )))
        }
    })
}

fn apply_osc(terms: &[OscTerm], s: &OccupationState, cutoff: u32) -> Result<FockVector> {
    let mut parts = Vec::new();
    for (c, ops) in terms {
        let mut cur = basis_vector(s.clone());
        for &(kind, site) in ops.iter().rev() {
            let mut next = Vec::new();
            for (st, x) in &cur {
                for (st2, w) in apply_site_op(SiteOp { kind, site }, st, cutoff)? {
                    next.push((x * &w, basis_vector(st2)));
                }
            }
            cur = combine(&next);
        }
        parts.push((c.clone(), cur));
    }
    Ok(combine(&parts))
}

/// Lattice rank-3 generic X-operators against their oscillator forms.
pub fn generic_explicit(ctx: &Ctx) -> Result<Vec<Instance>> {
    let z = var("z", 1);
    let inputs = OccupationState::all_bounded(3, 2);
    let mut out = Vec::new();
    for i in 0..=3 {
        let x = XOperator::new(3, i, ctx.generic(), z.clone())?;
        let osc = explicit_rank3(i, &z)?;
        out.push(compare_operators(
            format!("X_{i}(z), N=3, occ<=2"),
            &inputs,
            |s| x.apply(&basis_vector(s.clone()), 4),
            |s| apply_osc(&osc, s, 4),
        )?);
    }
    Ok(out)
}
