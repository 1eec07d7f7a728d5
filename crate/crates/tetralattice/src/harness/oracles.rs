//! Closed-form right-hand sides. Everything here is built from `exactalg`
//! and `symfun` only — never from the lattice — so that a bug in the vertex
//! model cannot validate itself.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactalg::{
    q_binomial, q_factorial, q_pochhammer_series, Cap, FormalSeries, LaurentPoly, Rational, VarId,
};
use crate::symfun::{
    block_distributions, elementary, schur_at, schur_bialternant, schur_general, Partition,
};

/// A block of equal indices: `(index, number of spectral variables)`.
pub type Block = (i64, usize);

/// Flat exponent sequence `(λ_1^{b_1}, …)`.
pub fn flat(blocks: &[Block]) -> Vec<i64> {
    blocks
        .iter()
        .flat_map(|&(l, b)| std::iter::repeat_n(l, b))
        .collect()
}

/// Total number of variables in a block list.
pub fn width(blocks: &[Block]) -> usize {
    blocks.iter().map(|b| b.1).sum()
}

/// Staircase-shifted parts `(i_k − m + k)` of a strictly decreasing index
/// word with `m` blocks (`k` 1-based).
pub fn staircase_parts(indices: &[Block]) -> Vec<Block> {
    let m = indices.len() as i64;
    indices
        .iter()
        .enumerate()
        .map(|(k, &(i, b))| (i - m + 1 + k as i64, b))
        .collect()
}

/// `∏_k z_k^{m−k}` over blocks, for polynomial variables in block order.
pub fn staircase_prefactor(sizes: &[usize], vars: &[LaurentPoly]) -> LaurentPoly {
    let m = sizes.len();
    let mut out = LaurentPoly::one();
    let mut pos = 0;
    for (k, &b) in sizes.iter().enumerate() {
        for v in &vars[pos..pos + b] {
            out = &out * &v.pow((m - 1 - k) as i32).expect("nonnegative power");
        }
        pos += b;
    }
    out
}

/// Same prefactor at rational points.
pub fn staircase_prefactor_at(sizes: &[usize], points: &[Rational]) -> Rational {
    let m = sizes.len();
    let mut out = Rational::one();
    let mut pos = 0;
    for (k, &b) in sizes.iter().enumerate() {
        for x in &points[pos..pos + b] {
            out *= num_traits::pow(x.clone(), m - 1 - k);
        }
        pos += b;
    }
    out
}

fn pick(points: &[Rational], idx: &[usize]) -> Vec<Rational> {
    idx.iter().map(|&i| points[i].clone()).collect()
}

fn prod_pow(points: &[Rational], e: i64) -> Rational {
    points.iter().fold(Rational::one(), |acc, x| {
        acc * if e >= 0 {
            num_traits::pow(x.clone(), e as usize)
        } else {
            num_traits::pow(x.recip(), (-e) as usize)
        }
    })
}

/// `∏_{a∈A, b∈B} 1/(a − b)`.
fn cauchy_difference(a: &[Rational], b: &[Rational]) -> Rational {
    let mut out = Rational::one();
    for x in a {
        for y in b {
            out /= x - y;
        }
    }
    out
}

/// `∏_{a∈A, b∈B} 1/(1 − b/a)`.
fn cauchy_ratio(a: &[Rational], b: &[Rational]) -> Rational {
    let mut out = Rational::one();
    for x in a {
        for y in b {
            out /= Rational::one() - y / x;
        }
    }
    out
}

/// Shuffle formula right-hand side for two decreasing index groups
/// `m1 = ((m_{1,j}, |z_{1,j}|))`, `m2 = ((m_{2,j}, |z_{2,j}|))`; the points
/// list `z_1` then `z_2`:
/// `Σ_{(w_1,w_2)} 1/(w_2 − w_1) · s_{((m_{1,j}−k_1+j)^{|z_{1,j}|})}(w_1)
///   · s_{((m_{2,j}+|z_1|−k_1−k_2+j)^{|z_{2,j}|})}(w_2)`.
pub fn jlp_rhs(m1: &[Block], m2: &[Block], points: &[Rational]) -> Result<Rational> {
    let (k1, k2) = (m1.len() as i64, m2.len() as i64);
    let n1 = width(m1);
    let s1: Vec<Block> = m1
        .iter()
        .enumerate()
        .map(|(j, &(m, b))| (m - k1 + 1 + j as i64, b))
        .collect();
    let s2: Vec<Block> = m2
        .iter()
        .enumerate()
        .map(|(j, &(m, b))| (m + n1 as i64 - k1 - k2 + 1 + j as i64, b))
        .collect();
    let mut total = Rational::zero();
    for d in block_distributions(&[n1, width(m2)]) {
        let (w1, w2) = (pick(points, &d[0]), pick(points, &d[1]));
        total +=
            cauchy_difference(&w2, &w1) * schur_at(&flat(&s1), &w1)? * schur_at(&flat(&s2), &w2)?;
    }
    Ok(total)
}

/// Left-hand partition of the shuffle formula:
/// `((m_{2,j}−k_1−k_2+j)^{…}, (m_{1,j}−k_1+j)^{…})`.
pub fn jlp_lhs_parts(m1: &[Block], m2: &[Block]) -> Vec<Block> {
    let word: Vec<Block> = m2.iter().chain(m1).copied().collect();
    staircase_parts(&word)
}

/// FNR-type right-hand side for `X_n(z_1) X_{i_2}(z_2) ⋯ X_{i_m}(z_m)`:
/// `Σ s_{((i_k−m+k)^{|z_k|})_{k≥2}}(w_{[2,m]}) · w_1^{n+1−m+|z_{[2,m]}|}/(w_1 − w_{[2,m]})`.
pub fn fnr_rhs(n: i64, size1: usize, rest: &[Block], points: &[Rational]) -> Result<Rational> {
    let m = rest.len() as i64 + 1;
    let parts: Vec<Block> = rest
        .iter()
        .enumerate()
        .map(|(j, &(i, b))| (i - m + 2 + j as i64, b))
        .collect();
    let nr = width(rest);
    let mut total = Rational::zero();
    for d in block_distributions(&[size1, nr]) {
        let (w1, wr) = (pick(points, &d[0]), pick(points, &d[1]));
        total += schur_at(&flat(&parts), &wr)?
            * prod_pow(&w1, n + 1 - m + nr as i64)
            * cauchy_difference(&w1, &wr);
    }
    Ok(total)
}

/// GM-type right-hand side for `X_{i_1}(z_1) ⋯ X_{i_{m−1}}(z_{m−1}) X_0(z_m)`:
/// `Σ 1/(w_{[1,m−1]} − w_m) · s_{((i_k−m+k+|z_m|)^{|z_k|})_{k<m}}(w_{[1,m−1]})`.
pub fn gm_rhs(head: &[Block], size_last: usize, points: &[Rational]) -> Result<Rational> {
    let m = head.len() as i64 + 1;
    let parts: Vec<Block> = head
        .iter()
        .enumerate()
        .map(|(j, &(i, b))| (i - m + 1 + j as i64 + size_last as i64, b))
        .collect();
    let mut total = Rational::zero();
    for d in block_distributions(&[width(head), size_last]) {
        let (wa, wm) = (pick(points, &d[0]), pick(points, &d[1]));
        total += cauchy_difference(&wa, &wm) * schur_at(&flat(&parts), &wa)?;
    }
    Ok(total)
}

/// Unified right-hand side for `X_n(z_1) X_{i_2}(z_2) ⋯ X_{i_{m−1}}(z_{m−1}) X_0(z_m)`:
/// `Σ ∏ 1/(1−w_mid/w_1)(1−w_m/w_1)(1−w_m/w_mid) · w_1^{n+1−m} / w_mid
///   · s_{((i_k−m+k+1)^{|z_k|})_{2≤k<m}}(w_mid)`.
pub fn unified_rhs(
    n: i64,
    size1: usize,
    mid: &[Block],
    size_last: usize,
    points: &[Rational],
) -> Result<Rational> {
    let m = mid.len() as i64 + 2;
    let parts: Vec<Block> = mid
        .iter()
        .enumerate()
        .map(|(j, &(i, b))| (i - m + 3 + j as i64, b))
        .collect();
    let mut total = Rational::zero();
    for d in block_distributions(&[size1, width(mid), size_last]) {
        let (w1, wmid, wm) = (
            pick(points, &d[0]),
            pick(points, &d[1]),
            pick(points, &d[2]),
        );
        total += cauchy_ratio(&w1, &wmid)
            * cauchy_ratio(&w1, &wm)
            * cauchy_ratio(&wmid, &wm)
            * prod_pow(&w1, n + 1 - m)
            * prod_pow(&wmid, -1)
            * schur_at(&flat(&parts), &wmid)?;
    }
    Ok(total)
}

/// Schur polynomial of a block sequence in the given variables.
pub fn schur_of_blocks(parts: &[Block], vars: &[VarId]) -> Result<LaurentPoly> {
    let seq = flat(parts);
    if seq.iter().all(|&x| x >= 0) && seq.windows(2).all(|w| w[0] >= w[1]) {
        schur_bialternant(
            &Partition::new(seq.iter().map(|&x| x as u32).collect())?,
            vars,
        )
    } else {
        schur_general(&seq, vars)
    }
}

/// One group of a tensor-Schur word: decreasing `m`-blocks (spectral `z`)
/// followed by increasing `n`-blocks (spectral `w`).
#[derive(Debug, Clone)]
pub struct TensorGroup {
    /// `(m_{i,j}, |z_{i,j}|)`, strictly decreasing.
    pub m: Vec<Block>,
    /// `(n_{i,j}, |w_{i,j}|)`, strictly increasing.
    pub n: Vec<Block>,
}

/// Tensor-Schur right-hand side
/// `∏ z_{i,j}^{k_i−j} ∏ w_{i,j}^{n_{i,j}} ∏_i s_{((m_{i,j}−k_i+j)^{|z_{i,j}|})}(z_i)`.
/// `vars` lists the spectral variables in word order (group by group, `z`
/// blocks then `w` blocks).
pub fn tensor_schur_rhs(groups: &[TensorGroup], vars: &[VarId]) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::one();
    let mut pos = 0;
    for g in groups {
        let k = g.m.len();
        let zsz: Vec<usize> = g.m.iter().map(|b| b.1).collect();
        let zv: Vec<VarId> = vars[pos..pos + width(&g.m)].to_vec();
        pos += zv.len();
        let zp: Vec<LaurentPoly> = zv.iter().map(|&v| LaurentPoly::var(v)).collect();
        out = &out * &staircase_prefactor(&zsz, &zp);
        let parts: Vec<Block> =
            g.m.iter()
                .enumerate()
                .map(|(j, &(m, b))| (m - k as i64 + 1 + j as i64, b))
                .collect();
        out = &out * &schur_of_blocks(&parts, &zv)?;
        for &(nij, b) in &g.n {
            for &v in &vars[pos..pos + b] {
                out = &out * &LaurentPoly::var_pow(v, nij as i32);
            }
            pos += b;
        }
    }
    Ok(out)
}

fn inv_vars(vars: &[LaurentPoly]) -> Vec<LaurentPoly> {
    vars.iter()
        .map(|v| v.inv_term().expect("spectral parameters are monomials"))
        .collect()
}

/// Weighted-trace closed form for `N = 3`,
/// `Tr^{A|B}(X_3(z_1)⋯X_3(z_m) X_1(w_1)⋯X_1(w_n))`, truncated under `caps`:
///
/// type A: `1/((q^n t_{11};Q_{11})_∞ (q^n t_{21};Q_{21})_∞)
///   Σ_i e_i(z^{−1}) e_i(w) Σ_ℓ (−1)^ℓ q^{ℓ(ℓ+1)} [i,ℓ]_{q²} / (q^{2ℓ} t_{12};Q_{12})_∞`,
///
/// type B: `(−q^n t_{11};Q_{11})_∞ (−q^n t_{21};Q_{21})_∞
///   Σ_i e_i(z^{−1}) e_i(w) Σ_ℓ (−1)^ℓ q^{ℓ(ℓ+1)} [i,ℓ]_{q²} (−q^{2ℓ} t_{12};Q_{12})_∞`.
///
/// The inner sums come from expanding `∏_{p=1}^i (1 − q^{2(m+p)})` with the
/// q-binomial theorem and resumming over the occupation `m` of site (1,2).
pub fn weighted_trace_n3(
    type_b: bool,
    z: &[LaurentPoly],
    w: &[LaurentPoly],
    caps: &[Cap],
) -> Result<FormalSeries> {
    let q = LaurentPoly::var(VarId::q());
    let q2 = &q * &q;
    let v = |s: &str| LaurentPoly::var(VarId::new(s));
    let sign = if type_b {
        LaurentPoly::int(-1)
    } else {
        LaurentPoly::one()
    };
    let qn = q.pow(w.len() as i32)?;
    let poch = |a: &LaurentPoly, base: &str| -> Result<FormalSeries> {
        let p = q_pochhammer_series(&(&sign * a), &v(base), caps)?;
        if type_b {
            Ok(p)
        } else {
            p.inverse()
        }
    };
    let pre = poch(&(&qn * &v("t11")), "Q11")?.mul(&poch(&(&qn * &v("t21")), "Q21")?);
    let zi = inv_vars(z);
    let mut sum = FormalSeries::zero(caps.to_vec());
    for i in 0..=z.len().min(w.len()) {
        let e = &elementary(i, &zi) * &elementary(i, w);
        let mut inner = FormalSeries::zero(caps.to_vec());
        for l in 0..=i {
            let coeff = &(&q.pow((l * (l + 1)) as i32)? * &q_binomial(i, l, &q2)?)
                * &LaurentPoly::int(if l % 2 == 0 { 1 } else { -1 });
            let a = &q.pow(2 * l as i32)? * &v("t12");
            inner = inner.add(&poch(&a, "Q12")?.mul_poly(&coeff));
        }
        sum = sum.add(&inner.mul_poly(&e));
    }
    Ok(pre.mul(&sum))
}

/// A sign variant of the weighted-trace closed form (no
/// `(−1)^ℓ`, opposite signs inside the inner Pochhammer symbols). Kept to
/// document the discrepancy; it disagrees with the lattice.
pub fn weighted_trace_n3_sign_variant(
    type_b: bool,
    z: &[LaurentPoly],
    w: &[LaurentPoly],
    caps: &[Cap],
) -> Result<FormalSeries> {
    let q = LaurentPoly::var(VarId::q());
    let q2 = &q * &q;
    let v = |s: &str| LaurentPoly::var(VarId::new(s));
    let qn = q.pow(w.len() as i32)?;
    let pre = if type_b {
        q_pochhammer_series(&-(&qn * &v("t11")), &v("Q11"), caps)?.mul(&q_pochhammer_series(
            &-(&qn * &v("t21")),
            &v("Q21"),
            caps,
        )?)
    } else {
        q_pochhammer_series(&(&qn * &v("t11")), &v("Q11"), caps)?
            .mul(&q_pochhammer_series(&(&qn * &v("t21")), &v("Q21"), caps)?)
            .inverse()?
    };
    let zi = inv_vars(z);
    let mut sum = FormalSeries::zero(caps.to_vec());
    for i in 0..=z.len().min(w.len()) {
        let e = &elementary(i, &zi) * &elementary(i, w);
        let mut inner = FormalSeries::zero(caps.to_vec());
        for l in 0..=i {
            let coeff = &q.pow((l * (l + 1)) as i32)? * &q_binomial(i, l, &q2)?;
            let a = &q.pow(2 * l as i32)? * &v("t12");
            let p = if type_b {
                q_pochhammer_series(&a, &v("Q12"), caps)?
            } else {
                q_pochhammer_series(&-a, &v("Q12"), caps)?.inverse()?
            };
            inner = inner.add(&p.mul_poly(&coeff));
        }
        sum = sum.add(&inner.mul_poly(&e));
    }
    Ok(pre.mul(&sum))
}

/// Degenerate (`t = Q = 0`) case:
/// `(z_1⋯z_m)^{−1} Σ_ℓ ∏_{k≤ℓ}(1 − q^{2k}) e_{m−ℓ}(z) e_ℓ(w)`.
pub fn vacuum_n3(z: &[LaurentPoly], w: &[LaurentPoly]) -> LaurentPoly {
    let q = LaurentPoly::var(VarId::q());
    let q2 = &q * &q;
    let zprod = LaurentPoly::product(z.iter());
    let mut out = LaurentPoly::zero();
    let mut poch = LaurentPoly::one();
    let mut q2k = LaurentPoly::one();
    for l in 0..=z.len().min(w.len()) {
        if l > 0 {
            q2k = &q2k * &q2;
            poch = &poch * &(&LaurentPoly::one() - &q2k);
        }
        out += &(&poch * &(&elementary(z.len() - l, z) * &elementary(l, w)));
    }
    out.div_exact(&zprod).expect("division by a monomial")
}

/// Multi-layer loop sum: over strictly decreasing column positions
/// `m_1^{(j)} > ⋯ > m_{i_j}^{(j)}` per layer `j`, all distinct, weight
/// `∏ z_{m_k^{(j)}}^{(j)} ∏_{p<j} q^{s(j,k,p)}` with `s(j,k,p)` the number of
/// layer-`p` positions to the right of `m_k^{(j)}`.
pub fn higher_rank_loop(
    bra: &[u32],
    n: usize,
    var: impl Fn(usize, usize) -> LaurentPoly,
) -> LaurentPoly {
    let layers = bra.len();
    let q = LaurentPoly::var(VarId::q());
    let mut out = LaurentPoly::zero();
    // positions[j] = chosen columns of layer j.
    fn rec(
        j: usize,
        bra: &[u32],
        n: usize,
        used: &mut Vec<bool>,
        positions: &mut Vec<Vec<usize>>,
        acc: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if j == bra.len() {
            acc.push(positions.clone());
            return;
        }
        for cols in crate::symfun::combinations(&(1..=n).collect::<Vec<_>>(), bra[j] as usize) {
            if cols.iter().any(|&c| used[c]) {
                continue;
            }
            for &c in &cols {
                used[c] = true;
            }
            positions.push(cols.clone());
            rec(j + 1, bra, n, used, positions, acc);
            positions.pop();
            for &c in &cols {
                used[c] = false;
            }
        }
    }
    let mut all = Vec::new();
    rec(
        0,
        bra,
        n,
        &mut vec![false; n + 1],
        &mut Vec::new(),
        &mut all,
    );
    for pos in all {
        let mut term = LaurentPoly::one();
        let mut qexp = 0i32;
        for j in 0..layers {
            for &c in &pos[j] {
                term = &term * &var(c, j + 1);
                for p in 0..j {
                    qexp += pos[p].iter().filter(|&&d| d > c).count() as i32;
                }
            }
        }
        out += &(&term * &q.pow(qexp).expect("nonnegative"));
    }
    out
}

/// Binary-bra loop sum: with `k_1 < ⋯ < k_m` the layers carrying a 1,
/// `Σ_{σ∈S_m} Σ_{j_1<⋯<j_m} q^{inv(σ(k))} z_{j_1}^{(σ(k_1))} ⋯ z_{j_m}^{(σ(k_m))}`.
pub fn binary_loop(
    bra: &[u32],
    n: usize,
    var: impl Fn(usize, usize) -> LaurentPoly,
) -> LaurentPoly {
    let ks: Vec<usize> = bra
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .map(|(i, _)| i + 1)
        .collect();
    let m = ks.len();
    let q = LaurentPoly::var(VarId::q());
    let mut out = LaurentPoly::zero();
    for (perm, _) in crate::symfun::permutations_with_sign(m) {
        let labels: Vec<usize> = perm.iter().map(|&p| ks[p]).collect();
        let inv = (0..m)
            .map(|a| (a + 1..m).filter(|&b| labels[a] > labels[b]).count())
            .sum::<usize>();
        let qp = q.pow(inv as i32).expect("nonnegative");
        for cols in crate::symfun::combinations(&(1..=n).collect::<Vec<_>>(), m) {
            let mut term = qp.clone();
            for (c, &l) in cols.iter().zip(&labels) {
                term = &term * &var(*c, l);
            }
            out += &term;
        }
    }
    out
}

/// `[m]_q! e_m(z_1..z_n)`.
pub fn qfactorial_elementary(m: usize, z: &[LaurentPoly]) -> LaurentPoly {
    &q_factorial(m, &LaurentPoly::var(VarId::q())) * &elementary(m, z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn shuffle_two_singletons_is_bialternant() {
        let pts = [r(2), r(5)];
        let lhs = schur_at(&flat(&jlp_lhs_parts(&[(1, 1)], &[(3, 1)])), &pts).unwrap();
        assert_eq!(jlp_rhs(&[(1, 1)], &[(3, 1)], &pts).unwrap(), lhs);
    }

    #[test]
    fn gm_smallest_case_is_complete_homogeneous() {
        let pts = [r(3), r(7)];
        // s_{(2)}(z1, z2) = h_2.
        assert_eq!(gm_rhs(&[(3, 1)], 1, &pts).unwrap(), r(9 + 21 + 49));
    }

    #[test]
    fn binary_loop_example() {
        let v = |k: usize, p: usize| LaurentPoly::var(VarId::grid("z", k, p));
        let got = binary_loop(&[1, 0, 0, 1, 0], 3, v);
        assert_eq!(got.len(), 6);
        assert_eq!(got, higher_rank_loop(&[1, 0, 0, 1, 0], 3, v));
    }
}
