//! Symmetric-function oracles, independent of the lattice: Schur polynomials
//! by the bialternant formula (symbolic and at rational points), elementary
//! and loop elementary symmetric functions, Kostka numbers by tableau
//! counting, and the block symmetrization formula.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Monomial, Rational, VarId};

/// A partition: weakly decreasing nonnegative parts, trailing zeros dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validate and normalize.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OutOfRange(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// Sum of parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// Staircase block sequence `(λ_1^{b_1}, …, λ_m^{b_m})` as a flat exponent
/// sequence.
pub fn block_sequence(blocks: &[(i64, usize)]) -> Vec<i64> {
    blocks
        .iter()
        .flat_map(|&(l, b)| std::iter::repeat_n(l, b))
        .collect()
}

/// All permutations of `0..n` with their signs (Heap's algorithm order is
/// irrelevant for the sums they feed).
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(k: usize, a: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == a.len() {
            out.push((a.clone(), sign));
            return;
        }
        for i in k..a.len() {
            a.swap(k, i);
            rec(k + 1, a, if i == k { sign } else { -sign }, out);
            a.swap(k, i);
        }
    }
    let mut out = Vec::new();
    rec(0, &mut (0..n).collect(), 1, &mut out);
    out
}

/// Alternant `det(z_i^{e_j})` by Leibniz expansion.
pub fn alternant(exps: &[i64], vars: &[VarId]) -> Result<LaurentPoly> {
    if exps.len() != vars.len() {
        return Err(Error::Incompatible(
            "alternant needs as many exponents as variables".into(),
        ));
    }
    let mut out = LaurentPoly::zero();
    for (perm, sign) in permutations_with_sign(vars.len()) {
        let m = Monomial::from_pairs(
            perm.iter()
                .enumerate()
                .map(|(j, &i)| (vars[i], exps[j] as i32)),
        );
        out += &LaurentPoly::term(Rational::from_integer(sign.into()), m);
    }
    Ok(out)
}

fn shifted(seq: &[i64], n: usize) -> Result<Vec<i64>> {
    if seq.len() > n {
        // Trailing zero parts beyond n variables are harmless; anything else is not.
        if seq[n..].iter().any(|&x| x != 0) {
            return Ok(Vec::new());
        }
    }
    Ok((0..n)
        .map(|j| seq.get(j).copied().unwrap_or(0) + (n - 1 - j) as i64)
        .collect())
}

/// Schur function `s_seq(vars)` for an arbitrary integer sequence by the
/// bialternant `det(z_i^{seq_j+n−j}) / det(z_i^{n−j})`.
///
/// For a partition this is the Schur polynomial; for other sequences it is
/// the sign-normalized straightening (zero on repeated shifted exponents,
/// and zero when more nonzero parts than variables are given).
pub fn schur_general(seq: &[i64], vars: &[VarId]) -> Result<LaurentPoly> {
    let n = vars.len();
    let sh = shifted(seq, n)?;
    if sh.is_empty() && n > 0 {
        return Ok(LaurentPoly::zero());
    }
    if n == 0 {
        return Ok(if seq.iter().all(|&x| x == 0) {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        });
    }
    let num = alternant(&sh, vars)?;
    if num.is_zero() {
        return Ok(num);
    }
    let den = alternant(
        &(0..n).map(|j| (n - 1 - j) as i64).collect::<Vec<_>>(),
        vars,
    )?;
    num.div_exact(&den)
}

/// Schur polynomial `s_λ(vars)` via the bialternant.
pub fn schur_bialternant(lambda: &Partition, vars: &[VarId]) -> Result<LaurentPoly> {
    let seq: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    schur_general(&seq, vars)
}

/// Exact determinant by Gaussian elimination over the rationals.
pub fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &piv;
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    det
}

fn rpow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Schur function of an integer sequence at rational points (bialternant).
pub fn schur_at(seq: &[i64], points: &[Rational]) -> Result<Rational> {
    let n = points.len();
    check_distinct_nonzero(points)?;
    let sh = shifted(seq, n)?;
    if sh.is_empty() && n > 0 {
        return Ok(Rational::zero());
    }
    if n == 0 {
        return Ok(if seq.iter().all(|&x| x == 0) {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    let num: Vec<Vec<Rational>> = points
        .iter()
        .map(|x| sh.iter().map(|&e| rpow(x, e)).collect())
        .collect();
    let den: Vec<Vec<Rational>> = points
        .iter()
        .map(|x| (0..n).map(|j| rpow(x, (n - 1 - j) as i64)).collect())
        .collect();
    Ok(determinant(num) / determinant(den))
}

fn check_distinct_nonzero(points: &[Rational]) -> Result<()> {
    for (a, x) in points.iter().enumerate() {
        if x.is_zero() {
            return Err(Error::DegeneratePoint("evaluation point is zero".into()));
        }
        if points[..a].contains(x) {
            return Err(Error::DegeneratePoint(format!(
                "coincident evaluation points {x}"
            )));
        }
    }
    Ok(())
}

/// `s_λ(1^n)` by the hook-content formula (an oracle independent of the
/// bialternant, which degenerates at equal arguments).
pub fn schur_at_ones(lambda: &Partition, n: usize) -> Rational {
    let parts = lambda.parts();
    let conj: Vec<u32> = (0..parts.first().copied().unwrap_or(0))
        .map(|c| parts.iter().filter(|&&p| p > c).count() as u32)
        .collect();
    let mut num = Rational::one();
    let mut den = Rational::one();
    for (r, &p) in parts.iter().enumerate() {
        for c in 0..p as usize {
            let content = c as i64 - r as i64;
            let hook = (p as i64 - c as i64 - 1) + (conj[c] as i64 - r as i64 - 1) + 1;
            num *= Rational::from_integer((n as i64 + content).into());
            den *= Rational::from_integer(hook.into());
        }
    }
    num / den
}

/// Elementary symmetric polynomial `e_k(vars)`.
pub fn elementary(k: usize, vars: &[LaurentPoly]) -> LaurentPoly {
    // DP over variables: e[j] after processing a prefix.
    let mut e = vec![LaurentPoly::zero(); k + 1];
    e[0] = LaurentPoly::one();
    for v in vars {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * v;
            e[j] += &add;
        }
    }
    e.swap_remove(k)
}

/// Elementary symmetric function at rational points.
pub fn elementary_at(k: usize, vals: &[Rational]) -> Rational {
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for v in vals {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * v;
            e[j] += add;
        }
    }
    e.swap_remove(k)
}

/// Variable `z_i^{(c)}` of the loop grid.
pub fn loop_var(base: &str, i: usize, color: usize) -> LaurentPoly {
    LaurentPoly::var(VarId::grid(base, i, color))
}

fn cyclic_color(a: usize, r: usize, period: usize) -> usize {
    (a - 1 + r) % period + 1
}

/// Loop elementary symmetric function
/// `e_k^{(a)} = Σ_{i_1<…<i_k} z_{i_1}^{(a)} z_{i_2}^{(a+1)} ⋯ z_{i_k}^{(a+k−1)}`
/// over `n` variables, colours taken cyclically in `1..=period`.
pub fn loop_elementary(
    k: usize,
    a: usize,
    base: &str,
    n: usize,
    period: usize,
) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} > n={n}")));
    }
    if a == 0 || a > period {
        return Err(Error::OutOfRange(format!(
            "colour offset {a} outside 1..={period}"
        )));
    }
    fn rec(
        start: usize,
        r: usize,
        k: usize,
        a: usize,
        base: &str,
        n: usize,
        period: usize,
        acc: &LaurentPoly,
        out: &mut LaurentPoly,
    ) {
        if r == k {
            *out += acc;
            return;
        }
        for i in start..=n {
            let next = acc * &loop_var(base, i, cyclic_color(a, r, period));
            rec(i + 1, r + 1, k, a, base, n, period, &next, out);
        }
    }
    let mut out = LaurentPoly::zero();
    rec(1, 0, k, a, base, n, period, &LaurentPoly::one(), &mut out);
    Ok(out)
}

/// Lattice-path evaluation of `e_k^{(a)}`: paths through `n` columns taking
/// either a west step (weight 1) or a north-west step through column `i`
/// that raises the colour (weight `z_i^{(colour)}`), with exactly `k`
/// north-west steps. A transfer DP over columns, independent of the subset
/// sum in [`loop_elementary`].
pub fn loop_elementary_paths(
    k: usize,
    a: usize,
    base: &str,
    n: usize,
    period: usize,
) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} > n={n}")));
    }
    // row[r] = weighted number of partial paths having made r NW steps.
    let mut row = vec![LaurentPoly::zero(); k + 1];
    row[0] = LaurentPoly::one();
    for i in 1..=n {
        let mut next = row.clone();
        for r in 1..=k {
            let step = &row[r - 1] * &loop_var(base, i, cyclic_color(a, r - 1, period));
            next[r] += &step;
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// Kostka number `K_{λ,α}`: semistandard tableaux of shape `λ` and content
/// `α`, counted by successive horizontal strips.
pub fn kostka(lambda: &Partition, alpha: &[u32]) -> u64 {
    if lambda.size() != alpha.iter().sum::<u32>() {
        return 0;
    }
    let target = lambda.parts().to_vec();
    let mut memo: HashMap<(usize, Vec<u32>), u64> = HashMap::new();
    fn rec(
        idx: usize,
        mu: Vec<u32>,
        alpha: &[u32],
        target: &[u32],
        memo: &mut HashMap<(usize, Vec<u32>), u64>,
    ) -> u64 {
        if idx == alpha.len() {
            return u64::from(mu.as_slice() == target);
        }
        if let Some(&v) = memo.get(&(idx, mu.clone())) {
            return v;
        }
        let mut total = 0;
        // Add a horizontal strip of size alpha[idx]: new row r gets nu_r with
        // mu_r ≤ nu_r ≤ min(target_r, mu_{r-1}).
        let rows = target.len();
        let mut nu = mu.clone();
        fn strips(
            r: usize,
            rem: u32,
            mu: &[u32],
            nu: &mut Vec<u32>,
            target: &[u32],
            out: &mut Vec<Vec<u32>>,
        ) {
            if r == target.len() {
                if rem == 0 {
                    out.push(nu.clone());
                }
                return;
            }
            let cap = if r == 0 {
                target[0]
            } else {
                target[r].min(mu[r - 1])
            };
            for add in 0..=rem.min(cap.saturating_sub(mu[r])) {
                nu[r] = mu[r] + add;
                strips(r + 1, rem - add, mu, nu, target, out);
            }
            nu[r] = mu[r];
        }
        let mut cands = Vec::new();
        strips(0, alpha[idx], &mu, &mut nu, target, &mut cands);
        let _ = rows;
        for c in cands {
            total += rec(idx + 1, c, alpha, target, memo);
        }
        memo.insert((idx, mu), total);
        total
    }
    rec(0, vec![0; target.len()], alpha, &target, &mut memo)
}

/// All ordered distributions of `0..total` into labelled blocks of the given
/// sizes (each block an increasing index list).
pub fn block_distributions(sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let total: usize = sizes.iter().sum();
    let mut out = Vec::new();
    fn rec(
        b: usize,
        sizes: &[usize],
        free: &[usize],
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if b == sizes.len() {
            out.push(cur.clone());
            return;
        }
        for pick in combinations(free, sizes[b]) {
            let rest: Vec<usize> = free.iter().copied().filter(|x| !pick.contains(x)).collect();
            cur.push(pick);
            rec(b + 1, sizes, &rest, cur, out);
            cur.pop();
        }
    }
    rec(
        0,
        sizes,
        &(0..total).collect::<Vec<_>>(),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// `k`-subsets of `items` in lexicographic order.
pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Right-hand side of the block symmetrization formula at rational points:
/// `Σ_{(w_1,…,w_m)} ∏_{j<k} 1/(1 − w_k/w_j) · ∏_i w_i^{λ_i}`, summed over
/// redistributions of the points into blocks of the given sizes.
///
/// `blocks[i] = (λ_i, |z_i|)`; `points` lists all variables' values.
pub fn symmetrize_blocks(blocks: &[(i64, usize)], points: &[Rational]) -> Result<Rational> {
    let sizes: Vec<usize> = blocks.iter().map(|b| b.1).collect();
    if sizes.iter().sum::<usize>() != points.len() {
        return Err(Error::Incompatible(
            "block sizes must add up to the number of points".into(),
        ));
    }
    check_distinct_nonzero(points)?;
    let mut total = Rational::zero();
    for dist in block_distributions(&sizes) {
        let mut term = Rational::one();
        for (b, idxs) in dist.iter().enumerate() {
            for &i in idxs {
                term *= rpow(&points[i], blocks[b].0);
            }
        }
        for j in 0..dist.len() {
            for k in j + 1..dist.len() {
                for &a in &dist[j] {
                    for &b in &dist[k] {
                        term /= Rational::one() - &points[b] / &points[a];
                    }
                }
            }
        }
        total += term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::vars::indexed_vars;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn schur_examples() {
        let z = indexed_vars("z", 3);
        assert!(schur_bialternant(&part(&[]), &z[..2]).unwrap().is_one());
        assert_eq!(
            schur_bialternant(&part(&[1]), &z[..2]).unwrap(),
            LaurentPoly::parse("z1 + z2").unwrap()
        );
        assert_eq!(
            schur_bialternant(&part(&[2, 1]), &z[..2]).unwrap(),
            LaurentPoly::parse("z1^2*z2 + z1*z2^2").unwrap()
        );
        assert_eq!(schur_at_ones(&part(&[2, 1]), 3), r(8));
        assert_eq!(schur_at_ones(&part(&[2]), 3), r(6));
        let s21 = schur_bialternant(&part(&[2, 1]), &z).unwrap();
        assert_eq!(s21.len(), 7);
        assert_eq!(s21.terms().map(|(_, c)| c.clone()).sum::<Rational>(), r(8));
    }

    #[test]
    fn non_partition_sequences_straighten() {
        let z = indexed_vars("z", 2);
        // (0,1) + δ = (1,1): repeated, so zero.
        assert!(schur_general(&[0, 1], &z).unwrap().is_zero());
        // (−1,1) + δ = (0,1) = −((1,0)): s = −1.
        assert_eq!(schur_general(&[-1, 1], &z).unwrap(), LaurentPoly::int(-1));
        let pts = [r(2), r(3)];
        assert_eq!(schur_at(&[-1, 1], &pts).unwrap(), r(-1));
        assert_eq!(schur_at(&[2, 1], &pts).unwrap(), r(2 * 2 * 3 + 2 * 3 * 3));
    }

    #[test]
    fn elementary_examples() {
        let z: Vec<LaurentPoly> = indexed_vars("z", 3)
            .into_iter()
            .map(LaurentPoly::var)
            .collect();
        assert!(elementary(0, &z).is_one());
        assert_eq!(
            elementary(2, &z),
            LaurentPoly::parse("z1*z2 + z1*z3 + z2*z3").unwrap()
        );
        assert!(elementary(4, &z).is_zero());
        assert_eq!(elementary_at(1, &[r(1), r(1), r(1), r(1)]), r(4));
    }

    #[test]
    fn loop_elementary_examples() {
        assert!(loop_elementary(0, 1, "lz", 3, 3).unwrap().is_one());
        let e1 = loop_elementary(1, 1, "lz", 2, 2).unwrap();
        assert_eq!(e1, &loop_var("lz", 1, 1) + &loop_var("lz", 2, 1));
        for (k, n) in [(3, 5), (2, 4), (3, 3)] {
            assert_eq!(
                loop_elementary(k, 1, "lz", n, 3).unwrap(),
                loop_elementary_paths(k, 1, "lz", n, 3).unwrap()
            );
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&part(&[2, 1]), &[2, 1]), 1);
        assert_eq!(kostka(&part(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(kostka(&part(&[1, 1]), &[2]), 0);
        assert_eq!(kostka(&part(&[3, 2]), &[1, 1, 1, 1, 1]), 5);
        assert_eq!(kostka(&part(&[2, 1]), &[1, 2]), 1);
    }

    #[test]
    fn symmetrization_examples() {
        assert_eq!(
            symmetrize_blocks(&[(1, 1), (0, 1)], &[r(2), r(3)]).unwrap(),
            r(5)
        );
        let pts = [r(2), r(5), r(7)];
        assert_eq!(symmetrize_blocks(&[(3, 1)], &pts[..1]).unwrap(), r(8));
        assert_eq!(
            symmetrize_blocks(&[(2, 2), (1, 1)], &pts).unwrap(),
            schur_at(&[2, 2, 1], &pts).unwrap()
        );
        assert!(matches!(
            symmetrize_blocks(&[(1, 1), (0, 1)], &[r(2), r(2)]),
            Err(Error::DegeneratePoint(_))
        ));
    }
}
