//! Checks for the `q = 0` model: exchange relations, Schur-type vacuum
//! expectations, Kostka numbers, traces and the TASEP, and the lattice
//! realization of the modified Schubert polynomials.

use num_traits::{One, Zero};

use super::oracles::{
    flat, fnr_rhs, gm_rhs, jlp_lhs_parts, jlp_rhs, schur_of_blocks, staircase_parts,
    staircase_prefactor, staircase_prefactor_at, tensor_schur_rhs, unified_rhs, width, Block,
    TensorGroup,
};
use super::{
    blocks_label, compare_operators, cst, points_label, sample_points, var, Ctx, Instance, SAMPLES,
};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Rational, VarId};
use crate::fock::OccupationState;
use crate::pfunc::{plain_trace, vacuum_expectation, OperatorWord};
use crate::schubert::{schubert_along, schubert_poly, z as zvar, Permutation};
use crate::symfun::{block_distributions, kostka, schur_at, Partition};
use crate::tasep::{
    steady_closed_form, steady_state_trace, steady_state_vector, TasepConfig, TasepSector,
};
use crate::vertexmodel::{
    apply_word, basis_vector, combine, FockVector, LatticeOperator, Model, XOperator,
};

fn q0() -> Model {
    Model::q0()
}

fn sites(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Apply `ops` (rightmost first) to `|s⟩`.
fn act(ops: &[XOperator], s: &OccupationState, cutoff: u32) -> Result<FockVector> {
    let refs: Vec<&dyn LatticeOperator> = ops.iter().map(|o| o as &dyn LatticeOperator).collect();
    apply_word(&refs, &basis_vector(s.clone()), cutoff)
}

fn scaled(c: &LaurentPoly, v: FockVector) -> FockVector {
    combine(&[(c.clone(), v)])
}

/// `X_i(x) X_j(y)` compared with its exchanged form.
pub fn zf_relations(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let (x, y) = (var("x", 1), var("y", 1));
    let x_over_y = &x * &y.inv_term()?;
    let mut out = Vec::new();
    for n in 2..=4usize {
        let max = if n <= 3 { 2 } else { 1 };
        let inputs = OccupationState::all_bounded(sites(n), max);
        let cutoff = max + 2;
        for i in 0..=n {
            for j in 0..=n {
                let xi = |z: &LaurentPoly| XOperator::new(n, i, q0(), z.clone());
                let xj = |z: &LaurentPoly| XOperator::new(n, j, q0(), z.clone());
                let lhs_ops = [xi(&x)?, xj(&y)?];
                let swapped = [xi(&y)?, xj(&x)?];
                let reversed = [xj(&y)?, xi(&x)?];
                let lhs = |s: &OccupationState| act(&lhs_ops, s, cutoff);
                let rhs = |s: &OccupationState| -> Result<FockVector> {
                    Ok(match i.cmp(&j) {
                        std::cmp::Ordering::Less => combine(&[
                            (LaurentPoly::one(), act(&swapped, s, cutoff)?),
                            (&LaurentPoly::one() - &x_over_y, act(&reversed, s, cutoff)?),
                        ]),
                        std::cmp::Ordering::Equal => act(&reversed, s, cutoff)?,
                        std::cmp::Ordering::Greater => scaled(&x_over_y, act(&swapped, s, cutoff)?),
                    })
                };
                out.push(compare_operators(
                    format!("n={n} i={i} j={j} occ<={max}"),
                    &inputs,
                    lhs,
                    rhs,
                )?);
            }
        }
    }
    Ok(out)
}

/// Expand blocks `(i, b)` into X-operators with consecutive spectral values.
fn x_ops(
    n: usize,
    model: Model,
    blocks: &[Block],
    values: &[LaurentPoly],
) -> Result<Vec<XOperator>> {
    let mut ops = Vec::new();
    let mut pos = 0;
    for &(i, b) in blocks {
        for v in &values[pos..pos + b] {
            ops.push(XOperator::new(n, i as usize, model, v.clone())?);
        }
        pos += b;
    }
    Ok(ops)
}

fn x_factors(blocks: &[Block], values: &[LaurentPoly]) -> Vec<(usize, LaurentPoly)> {
    let mut out = Vec::new();
    let mut pos = 0;
    for &(i, b) in blocks {
        for v in &values[pos..pos + b] {
            out.push((i as usize, v.clone()));
        }
        pos += b;
    }
    out
}

/// Lattice vacuum expectation of a block word at rational points.
fn lattice_vev_at(n: usize, blocks: &[Block], points: &[Rational]) -> Result<Rational> {
    let values: Vec<LaurentPoly> = points.iter().map(cst).collect();
    let v = vacuum_expectation(&OperatorWord::xs(n, q0(), &x_factors(blocks, &values)))?;
    v.as_constant()
        .ok_or_else(|| Error::Incompatible("vacuum expectation at a point is not a number".into()))
}

/// Reordering of `X_{i_1}(z_1) ⋯ X_{i_m}(z_m)` into `X_{i_m}(w_m) ⋯ X_{i_1}(w_1)`.
pub fn multi_comm(ctx: &Ctx) -> Result<Vec<Instance>> {
    let sets: [(usize, &[Block]); 6] = [
        (2, &[(1, 1), (0, 1)]),
        (3, &[(3, 1), (1, 1)]),
        (3, &[(2, 2), (0, 1)]),
        (3, &[(3, 1), (2, 1), (0, 1)]),
        (4, &[(4, 1), (2, 1)]),
        (4, &[(3, 1), (1, 2)]),
    ];
    let mut out = Vec::new();
    let mut rng = ctx.rng("points");
    for (n, blocks) in sets {
        let sizes: Vec<usize> = blocks.iter().map(|b| b.1).collect();
        let total = width(blocks);
        let m = blocks.len();
        let inputs = OccupationState::all_bounded(sites(n), 1);
        let cutoff = 1 + total as u32;
        for _ in 0..SAMPLES {
            let pts = sample_points(&mut rng, total);
            let values: Vec<LaurentPoly> = pts.iter().map(cst).collect();
            let lhs_ops = x_ops(n, q0(), blocks, &values)?;
            let inv_pre = cst(&staircase_prefactor_at(&sizes, &pts).recip());
            // Right-hand side: one reversed word per distribution.
            let mut terms: Vec<(LaurentPoly, Vec<XOperator>)> = Vec::new();
            for d in block_distributions(&sizes) {
                let mut coeff = Rational::one();
                for k in 0..m {
                    for &a in &d[k] {
                        coeff /= num_traits::pow(pts[a].clone(), m - 1 - k);
                        for dj in &d[..k] {
                            for &b in dj {
                                coeff /= Rational::one() - &pts[a] / &pts[b];
                            }
                        }
                    }
                }
                let mut ops = Vec::new();
                for k in (0..m).rev() {
                    for &a in &d[k] {
                        ops.push(XOperator::new(
                            n,
                            blocks[k].0 as usize,
                            q0(),
                            values[a].clone(),
                        )?);
                    }
                }
                terms.push((cst(&coeff), ops));
            }
            let lhs = |s: &OccupationState| Ok(scaled(&inv_pre, act(&lhs_ops, s, cutoff)?));
            let rhs = |s: &OccupationState| -> Result<FockVector> {
                let parts: Vec<(LaurentPoly, FockVector)> = terms
                    .iter()
                    .map(|(c, ops)| Ok((c.clone(), act(ops, s, cutoff)?)))
                    .collect::<Result<_>>()?;
                Ok(combine(&parts))
            };
            out.push(compare_operators(
                format!(
                    "n={n} i=({}) at {}",
                    blocks_label(blocks),
                    points_label(&pts)
                ),
                &inputs,
                lhs,
                rhs,
            )?);
        }
    }
    Ok(out)
}

/// `X_n(z)|Ω⟩ = zⁿ|Ω⟩` and `⟨Ω|X_0(z) = ⟨Ω|`.
pub fn vac_action(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let z = var("z", 1);
    let mut out = Vec::new();
    for n in 2..=5usize {
        let len = sites(n);
        let top = [XOperator::new(n, n, q0(), z.clone())?];
        let vac = [OccupationState::vacuum(len)];
        out.push(compare_operators(
            format!("X_{n}(z)|vac>, n={n}"),
            &vac,
            |s| act(&top, s, 2),
            |s| Ok(scaled(&z.pow(n as i32)?, basis_vector(s.clone()))),
        )?);
        let bottom = [XOperator::new(n, 0, q0(), z.clone())?];
        let inputs = OccupationState::all_bounded(len, 1);
        let project = |s: &OccupationState| -> Result<FockVector> {
            let v = act(&bottom, s, 2)?;
            Ok(v.into_iter().filter(|(t, _)| t.is_vacuum()).collect())
        };
        let delta = |s: &OccupationState| {
            Ok(if s.is_vacuum() {
                basis_vector(s.clone())
            } else {
                FockVector::new()
            })
        };
        out.push(compare_operators(
            format!("<vac|X_0(z), n={n}, occ<=1"),
            &inputs,
            project,
            delta,
        )?);
    }
    Ok(out)
}

/// One symbolic Schur-correspondence instance for the strictly decreasing
/// block word `blocks = [(i_k, |z_k|)]` of rank `n`.
pub fn schur_corr_instance(n: usize, blocks: &[Block]) -> Result<Instance> {
    let total = width(blocks);
    let ids: Vec<VarId> = (1..=total).map(|k| VarId::indexed("z", k)).collect();
    let values: Vec<LaurentPoly> = ids.iter().map(|&v| LaurentPoly::var(v)).collect();
    let lhs = vacuum_expectation(&OperatorWord::xs(n, q0(), &x_factors(blocks, &values)))?;
    let sizes: Vec<usize> = blocks.iter().map(|b| b.1).collect();
    let rhs =
        &staircase_prefactor(&sizes, &values) * &schur_of_blocks(&staircase_parts(blocks), &ids)?;
    Ok(Instance::compare(
        format!("n={n} i=({})", blocks_label(blocks)),
        &lhs,
        &rhs,
    ))
}

fn decreasing_words(n: usize, max_len: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        let idx: Vec<usize> = (0..=n).collect();
        for mut c in crate::symfun::combinations(&idx, len) {
            c.reverse();
            out.push(c.into_iter().map(|x| x as i64).collect());
        }
    }
    out
}

/// Every strictly decreasing word with `n ≤ 4`, `m ≤ 3`, block sizes `≤ 2`.
pub fn schur_corr(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for word in decreasing_words(n, 3) {
            let m = word.len();
            for mask in 0..(1u32 << m) {
                let blocks: Vec<Block> = word
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| (i, 1 + ((mask >> k) & 1) as usize))
                    .collect();
                out.push(schur_corr_instance(n, &blocks)?);
            }
        }
    }
    Ok(out)
}

/// Grouped words `←X_{m_1}(z_1) X_{n_1}(w_1) ⋯`.
pub fn tensor_schur(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let g = |m: &[Block], n: &[Block]| TensorGroup {
        m: m.to_vec(),
        n: n.to_vec(),
    };
    let sets: Vec<(usize, Vec<TensorGroup>)> = vec![
        (3, vec![g(&[(1, 1), (0, 1)], &[(1, 1), (3, 1)])]),
        (
            3,
            vec![g(&[(0, 1)], &[(1, 1)]), g(&[(2, 1), (1, 1)], &[(3, 1)])],
        ),
        (4, vec![g(&[(2, 2)], &[(3, 1), (4, 1)])]),
        (
            4,
            vec![g(&[(1, 1), (0, 1)], &[(2, 1)]), g(&[(3, 1)], &[(4, 1)])],
        ),
        (3, vec![g(&[], &[(0, 1), (2, 1)])]),
        (2, vec![g(&[(1, 2)], &[(2, 1)])]),
    ];
    let mut out = Vec::new();
    for (n, groups) in sets {
        let word: Vec<Block> = groups
            .iter()
            .flat_map(|gr| gr.m.iter().chain(&gr.n).copied())
            .collect();
        let total = width(&word);
        let ids: Vec<VarId> = (1..=total).map(|k| VarId::indexed("z", k)).collect();
        let values: Vec<LaurentPoly> = ids.iter().map(|&v| LaurentPoly::var(v)).collect();
        let lhs = vacuum_expectation(&OperatorWord::xs(n, q0(), &x_factors(&word, &values)))?;
        let rhs = tensor_schur_rhs(&groups, &ids)?;
        let label: Vec<String> = groups
            .iter()
            .map(|gr| format!("[m=({}) n=({})]", blocks_label(&gr.m), blocks_label(&gr.n)))
            .collect();
        out.push(Instance::compare(
            format!("n={n} {}", label.join(" ")),
            &lhs,
            &rhs,
        ));
    }
    Ok(out)
}

/// Compare the lattice side (divided by the staircase prefactor), the
/// bialternant of the left-hand partition, and the closed-form sum.
fn point_instance(
    label: String,
    n: usize,
    word: &[Block],
    lhs_parts: &[Block],
    points: &[Rational],
    rhs: Rational,
) -> Result<Instance> {
    let sizes: Vec<usize> = word.iter().map(|b| b.1).collect();
    let lattice = lattice_vev_at(n, word, points)? / staircase_prefactor_at(&sizes, points);
    let schur = schur_at(&flat(lhs_parts), points)?;
    let ok = lattice == schur && schur == rhs;
    Ok(Instance::judged(
        format!("{label} at {}", points_label(points)),
        format!("{lattice} (bialternant {schur})"),
        rhs.to_string(),
        ok,
    ))
}

/// Two-group shuffle formula.
pub fn shuffle_jlp(ctx: &Ctx) -> Result<Vec<Instance>> {
    let sets: [(usize, &[Block], &[Block]); 6] = [
        (3, &[(1, 1)], &[(3, 1)]),
        (2, &[(0, 2)], &[(2, 1)]),
        (3, &[(1, 1), (0, 1)], &[(3, 1)]),
        (4, &[(2, 1)], &[(4, 2)]),
        (3, &[(1, 2)], &[(3, 1), (2, 1)]),
        (4, &[(2, 1), (0, 1)], &[(4, 1), (3, 1)]),
    ];
    let mut rng = ctx.rng("points");
    let mut out = Vec::new();
    for (n, m1, m2) in sets {
        let (n1, n2) = (width(m1), width(m2));
        let word: Vec<Block> = m2.iter().chain(m1).copied().collect();
        for _ in 0..SAMPLES {
            let pts = sample_points(&mut rng, n1 + n2);
            // Lattice order: z_2 first; the closed form lists z_1 first.
            let z1z2: Vec<Rational> = pts[n2..].iter().chain(&pts[..n2]).cloned().collect();
            let rhs = jlp_rhs(m1, m2, &z1z2)?;
            out.push(point_instance(
                format!("n={n} m1=({}) m2=({})", blocks_label(m1), blocks_label(m2)),
                n,
                &word,
                &jlp_lhs_parts(m1, m2),
                &pts,
                rhs,
            )?);
        }
    }
    Ok(out)
}

/// `i_1 = n` case.
pub fn fnr(ctx: &Ctx) -> Result<Vec<Instance>> {
    let sets: [(usize, usize, &[Block]); 6] = [
        (2, 1, &[(1, 1)]),
        (3, 1, &[(1, 1), (0, 1)]),
        (3, 2, &[(2, 1)]),
        (4, 1, &[(2, 2), (0, 1)]),
        (4, 2, &[(3, 1), (1, 1)]),
        (3, 1, &[(2, 2)]),
    ];
    let mut rng = ctx.rng("points");
    let mut out = Vec::new();
    for (n, s1, rest) in sets {
        let word: Vec<Block> = std::iter::once((n as i64, s1))
            .chain(rest.iter().copied())
            .collect();
        for _ in 0..SAMPLES {
            let pts = sample_points(&mut rng, width(&word));
            let rhs = fnr_rhs(n as i64, s1, rest, &pts)?;
            out.push(point_instance(
                format!("n={n} i=({})", blocks_label(&word)),
                n,
                &word,
                &staircase_parts(&word),
                &pts,
                rhs,
            )?);
        }
    }
    Ok(out)
}

/// `i_m = 0` case.
pub fn gm(ctx: &Ctx) -> Result<Vec<Instance>> {
    let sets: [(usize, &[Block], usize); 6] = [
        (2, &[(1, 1)], 1),
        (3, &[(3, 1)], 1),
        (2, &[(2, 1), (1, 1)], 1),
        (3, &[(3, 2)], 2),
        (4, &[(4, 1), (2, 1)], 2),
        (3, &[(3, 1), (1, 2)], 1),
    ];
    let mut rng = ctx.rng("points");
    let mut out = Vec::new();
    for (n, head, last) in sets {
        let word: Vec<Block> = head
            .iter()
            .copied()
            .chain(std::iter::once((0, last)))
            .collect();
        for _ in 0..SAMPLES {
            let pts = sample_points(&mut rng, width(&word));
            let rhs = gm_rhs(head, last, &pts)?;
            out.push(point_instance(
                format!("n={n} i=({})", blocks_label(&word)),
                n,
                &word,
                &staircase_parts(&word),
                &pts,
                rhs,
            )?);
        }
    }
    Ok(out)
}

/// `i_1 = n`, `i_m = 0` case.
pub fn unified(ctx: &Ctx) -> Result<Vec<Instance>> {
    let sets: [(usize, usize, &[Block], usize); 6] = [
        (2, 1, &[(1, 1)], 1),
        (3, 1, &[(2, 1)], 1),
        (3, 1, &[(2, 1), (1, 1)], 1),
        (4, 1, &[(2, 2)], 1),
        (3, 2, &[(1, 1)], 1),
        (3, 1, &[(1, 1)], 2),
    ];
    let mut rng = ctx.rng("points");
    let mut out = Vec::new();
    for (n, s1, mid, last) in sets {
        let word: Vec<Block> = std::iter::once((n as i64, s1))
            .chain(mid.iter().copied())
            .chain(std::iter::once((0, last)))
            .collect();
        for _ in 0..SAMPLES {
            let pts = sample_points(&mut rng, width(&word));
            let rhs = unified_rhs(n as i64, s1, mid, last, &pts)?;
            out.push(point_instance(
                format!("n={n} i=({})", blocks_label(&word)),
                n,
                &word,
                &staircase_parts(&word),
                &pts,
                rhs,
            )?);
        }
    }
    Ok(out)
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `⟨Ω|X_{λ_1+m−1, α_1+m−1} ⋯ X_{λ_m, α_m}|Ω⟩ = K_{λ,α}`.
pub fn kostka_3d(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for m in 1..=3usize {
        for size in 1..=5u32 {
            for lambda in Partition::all_of(size) {
                if lambda.length() > m {
                    continue;
                }
                let mut parts = lambda.parts().to_vec();
                parts.resize(m, 0);
                let n = parts[0] as usize + m - 1;
                if n < 2 {
                    continue;
                }
                for alpha in compositions(size, m) {
                    let factors: Vec<(usize, usize)> = (0..m)
                        .map(|k| (parts[k] as usize + m - 1 - k, alpha[k] as usize + m - 1 - k))
                        .collect();
                    let lattice = vacuum_expectation(&OperatorWord::xijs(n, &factors))?;
                    let k = LaurentPoly::from(kostka(&lambda, &alpha) as i64);
                    out.push(Instance::compare(
                        format!("lambda={parts:?} alpha={alpha:?} n={n}"),
                        &lattice,
                        &k,
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn z_at(k: usize) -> LaurentPoly {
    var("z", k)
}

/// `Tr(X_n(z_n) ⋯ X_0(z_0)) = ∏ z_j^j`.
pub fn trace_fact(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 2..=4usize {
        let factors: Vec<(usize, LaurentPoly)> = (0..=n).rev().map(|j| (j, z_at(j))).collect();
        let tr = plain_trace(&OperatorWord::xs(n, q0(), &factors), 1, 6)?;
        let rhs = (0..=n).fold(LaurentPoly::one(), |acc, j| {
            &acc * &LaurentPoly::var_pow(VarId::indexed("z", j), j as i32)
        });
        out.push(Instance::compare(
            format!("n={n} (stabilized at M={})", tr.stabilized_at),
            &tr.value,
            &rhs,
        ));
    }
    Ok(out)
}

/// `Tr(X_n ⋯ X_{k+1} X_{j−1} ⋯ X_0 X_k ⋯ X_j)` as a monomial times
/// `s_{(k+1−j)^{n−k}}(z_0, …, z_{j−1}, z_{k+1}, …, z_n)`.
pub fn tasep_probgen(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 2..=3usize {
        for k in 0..=n {
            for j in 0..=k {
                let order: Vec<usize> = (k + 1..=n)
                    .rev()
                    .chain((0..j).rev())
                    .chain((j..=k).rev())
                    .collect();
                let factors: Vec<(usize, LaurentPoly)> =
                    order.iter().map(|&l| (l, z_at(l))).collect();
                let tr = plain_trace(&OperatorWord::xs(n, q0(), &factors), 1, 6)?;
                let mut mono = LaurentPoly::one();
                for l in k + 1..=n {
                    mono = &mono
                        * &LaurentPoly::var_pow(
                            VarId::indexed("z", l),
                            (l + j) as i32 - k as i32 - 1,
                        );
                }
                for l in 0..=k {
                    mono = &mono * &LaurentPoly::var_pow(VarId::indexed("z", l), l as i32);
                }
                let svars: Vec<VarId> = (0..j)
                    .chain(k + 1..=n)
                    .map(|l| VarId::indexed("z", l))
                    .collect();
                let rect: Vec<Block> = vec![((k + 1 - j) as i64, n - k)];
                let rhs = &mono * &schur_of_blocks(&rect, &svars)?;
                out.push(Instance::compare(
                    format!("n={n} j={j} k={k} (stabilized at M={})", tr.stabilized_at),
                    &tr.value,
                    &rhs,
                ));
            }
        }
    }
    Ok(out)
}

/// Coefficients of the worked three-species example (`ℙ(21003) = 1`).
pub const TASEP_EXAMPLE: [(&str, i64); 12] = [
    ("00123", 24),
    ("00213", 6),
    ("01023", 12),
    ("01203", 17),
    ("02013", 8),
    ("02103", 3),
    ("10023", 4),
    ("10203", 7),
    ("12003", 9),
    ("20013", 6),
    ("20103", 3),
    ("21003", 1),
];

/// The worked example: kernel vector, trace formula, closed forms.
pub fn tasep_example(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let sector = TasepSector::new(vec![2, 1, 1, 1])?;
    let v = steady_state_vector(&sector)?;
    let mut out = Vec::new();
    for (c, x) in TASEP_EXAMPLE {
        let cfg = TasepConfig::parse(c, 3)?;
        let got = v.get(&cfg).cloned().unwrap_or_else(Rational::zero);
        out.push(Instance::compare(
            format!("kernel P({c})"),
            &got,
            &Rational::from_integer(x.into()),
        ));
    }
    let rotation_ok = v.iter().all(|(c, x)| v.get(&c.rotate()) == Some(x));
    out.push(Instance::judged(
        "kernel rotation invariance",
        rotation_ok.to_string(),
        "true",
        rotation_ok,
    ));
    for (c, j, expected) in [("30021", 1usize, 6i64), ("31002", 2, 4)] {
        let cfg = TasepConfig::parse(c, 3)?;
        let tr = steady_state_trace(3, 5, &sector, &cfg, 6)?;
        let closed = steady_closed_form(3, j, 2, &[2, 1, 1, 1])?;
        let ok = tr == closed
            && closed == Rational::from_integer(expected.into())
            && v.get(&cfg) == Some(&tr);
        out.push(Instance::judged(
            format!("trace P({c})"),
            tr.to_string(),
            format!("{closed} (closed form), {expected} (worked example)"),
            ok,
        ));
    }
    Ok(out)
}

fn p(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s).expect("static polynomial")
}

/// The six modified Schubert polynomials of `S_3`, as reference values.
pub fn s3_table() -> Vec<(Permutation, LaurentPoly)> {
    let perm = |v: &[usize]| Permutation::new(v.to_vec()).expect("static permutation");
    let prod = |fs: &[&str]| fs.iter().fold(LaurentPoly::one(), |acc, f| &acc * &p(f));
    vec![
        (
            perm(&[1, 2, 3]),
            prod(&["z3^2", "z2 + z3", "z1 + z2", "z1 + z3", "z1^-2"]),
        ),
        (
            perm(&[1, 3, 2]),
            prod(&[
                "z3",
                "z1^3*z2 + z1^3*z3 + z1^2*z2^2 + z1^2*z2*z3 + z1*z2^3 + z1*z2^2*z3 + z2^3*z3",
                "z1^-2",
            ]),
        ),
        (
            perm(&[2, 1, 3]),
            prod(&[
                "z3",
                "z1*z2^2 + z1*z2*z3 + z1*z3^2 + z2^3 + z2^2*z3 + z2*z3^2 + z3^3",
                "z2^-1",
            ]),
        ),
        (perm(&[2, 3, 1]), prod(&["z2^2", "z1 + z2"])),
        (perm(&[3, 1, 2]), prod(&["z1^2*z3", "z2 + z3", "z2^-1"])),
        (perm(&[3, 2, 1]), p("z1^2*z2")),
    ]
}

/// The `S_3` table and reduced-word independence on `S_4`.
pub fn schubert_table(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (w, expect) in s3_table() {
        out.push(Instance::compare(
            format!("modified S_{w}"),
            &schubert_poly(&w, true),
            &expect,
        ));
    }
    for w in Permutation::all(4) {
        for modified in [true, false] {
            let chains = w.ascent_chains();
            let first = schubert_along(&w, &chains[0], modified)?;
            let mut ok = true;
            for c in &chains[1..] {
                ok &= schubert_along(&w, c, modified)? == first;
            }
            let kind = if modified { "modified" } else { "classical" };
            out.push(Instance::judged(
                format!("{kind} S_{w} along {} reduced words", chains.len()),
                first.to_string(),
                if ok {
                    "all words agree"
                } else {
                    "words disagree"
                },
                ok,
            ));
        }
    }
    Ok(out)
}

/// `⟨Ω|X_{2(w(m)−1)}(z_m) ⋯ X_{2(w(1)−1)}(z_1)|Ω⟩ = ∏ z_k^{m−k} 𝔖̃_w`.
pub fn mock_schubert(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (m, n) in [(2usize, 2usize), (3, 4)] {
        for w in Permutation::all(m) {
            let factors: Vec<(usize, LaurentPoly)> = (1..=m)
                .rev()
                .map(|k| (2 * (w.at(k) - 1), LaurentPoly::var(zvar(k))))
                .collect();
            let lhs = vacuum_expectation(&OperatorWord::xs(n, q0(), &factors))?;
            let pre = (1..=m).fold(LaurentPoly::one(), |acc, k| {
                &acc * &LaurentPoly::var_pow(zvar(k), (m - k) as i32)
            });
            let rhs = &pre * &schubert_poly(&w, true);
            out.push(Instance::compare(format!("m={m} n={n} w={w}"), &lhs, &rhs));
        }
    }
    Ok(out)
}
