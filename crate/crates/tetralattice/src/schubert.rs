//! Divided-difference calculus: the ordinary operator `∂_i`, the modified
//! operator `𝒟_i f = (z_{i+1}/z_i)(z_i f − z_{i+1} s_i f)/(z_i − z_{i+1})`,
//! Schubert and modified Schubert polynomials, the expansion of `𝒟`-words in
//! `∂`-words, the Yang–Baxter element `R_i(u) = 1 + (1 − e^u) 𝒟_i`, and a
//! tester for the conjectured `𝒟`-product factorization.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactalg::{Cap, FormalSeries, LaurentPoly, Monomial, Rational, VarId};

/// Variable `z_k` (1-based) shared by all divided-difference code.
pub fn z(k: usize) -> VarId {
    VarId::new(&format!("z{k}"))
}

fn zp(k: usize) -> LaurentPoly {
    LaurentPoly::var(z(k))
}

/// `z_a^{e}`-monomial as a polynomial.
fn zpow(k: usize, e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(z(k), e)
}

/// The transposition `s_i` acting on functions: swaps `z_i` and `z_{i+1}`.
pub fn swap(i: usize, f: &LaurentPoly) -> LaurentPoly {
    f.swap_vars(z(i), z(i + 1))
}

/// Ordinary divided difference `∂_i f = (f − s_i f)/(z_i − z_{i+1})`,
/// computed monomial by monomial (valid for Laurent inputs):
/// `(x^a y^b − x^b y^a)/(x − y) = Σ_{k=0}^{a−b−1} x^{a−1−k} y^{b+k}` for `a > b`.
pub fn divided_difference(i: usize, f: &LaurentPoly) -> LaurentPoly {
    let (x, y) = (z(i), z(i + 1));
    let mut out = LaurentPoly::zero();
    for (m, c) in f.terms() {
        let a = m.exponent(x);
        let b = m.exponent(y);
        if a == b {
            continue;
        }
        let rest: Vec<(VarId, i32)> = m
            .pairs()
            .iter()
            .copied()
            .filter(|&(v, _)| v != x && v != y)
            .collect();
        let (hi, lo, sign) = if a > b {
            (a, b, c.clone())
        } else {
            (b, a, -c.clone())
        };
        for k in 0..(hi - lo) {
            let mono =
                Monomial::from_pairs(rest.iter().copied().chain([(x, hi - 1 - k), (y, lo + k)]));
            out += &LaurentPoly::term(sign.clone(), mono);
        }
    }
    out
}

/// Ordinary divided difference by its defining quotient and exact
/// division — an independent path used to cross-check [`divided_difference`].
pub fn divided_difference_by_quotient(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    (f - &swap(i, f)).div_exact(&(&zp(i) - &zp(i + 1)))
}

/// Modified divided difference `𝒟_i f = (z_{i+1}/z_i)(z_i f − z_{i+1} s_i f)/(z_i − z_{i+1})`,
/// by its defining quotient.
pub fn modified_divided_difference(i: usize, f: &LaurentPoly) -> LaurentPoly {
    let num = &(&zp(i) * f) - &(&zp(i + 1) * &swap(i, f));
    // The numerator is g − s_i g with g = z_i f, so it is always divisible.
    let quot = num
        .div_exact(&(&zp(i) - &zp(i + 1)))
        .expect("z_i f − z_{i+1} s_i f vanishes on z_i = z_{i+1}");
    &quot * &(&zp(i + 1) * &zpow(i, -1))
}

/// `𝒟_i` through the relation `𝒟_i = (z_{i+1}/z_i)(1 + z_{i+1} ∂_i)`.
pub fn modified_via_partial(i: usize, f: &LaurentPoly) -> LaurentPoly {
    let inner = f + &(&zp(i + 1) * &divided_difference(i, f));
    &inner * &(&zp(i + 1) * &zpow(i, -1))
}

/// `𝒟_i` through the middle form `(z_{i+1}/z_i) ∂_i z_i`.
pub fn modified_via_conjugation(i: usize, f: &LaurentPoly) -> LaurentPoly {
    &divided_difference(i, &(&zp(i) * f)) * &(&zp(i + 1) * &zpow(i, -1))
}

/// Apply an operator word written left to right (`ops[0]` acts last).
pub fn apply_written(
    word: &[usize],
    f: &LaurentPoly,
    op: impl Fn(usize, &LaurentPoly) -> LaurentPoly,
) -> LaurentPoly {
    word.iter().rev().fold(f.clone(), |acc, &i| op(i, &acc))
}

/// A permutation in one-line notation, values `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validate a one-line permutation.
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let m = one_line.len();
        let mut seen = vec![false; m + 1];
        for &v in &one_line {
            if v == 0 || v > m || seen[v] {
                return Err(Error::OutOfRange(format!(
                    "{one_line:?} is not a permutation of 1..={m}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    /// Identity of `S_m`.
    pub fn identity(m: usize) -> Self {
        Permutation((1..=m).collect())
    }

    /// Longest element `w₀ = [m, m−1, …, 1]`.
    pub fn longest(m: usize) -> Self {
        Permutation((1..=m).rev().collect())
    }

    /// Product `s_{a_1} ⋯ s_{a_k}` of simple transpositions in `S_m`.
    pub fn from_word(m: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(m);
        for &a in word {
            w = w.times_simple(a)?;
        }
        Ok(w)
    }

    /// One-line notation.
    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// Rank `m`.
    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// Value `w(i)` (1-based).
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Length = number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count())
            .sum()
    }

    /// `w s_i` (swap positions `i`, `i+1`).
    pub fn times_simple(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.0.len() {
            return Err(Error::OutOfRange(format!(
                "s_{i} not in S_{}",
                self.0.len()
            )));
        }
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Ok(Permutation(w))
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Composition `(self ∘ other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    /// All reduced words `(a_1, …, a_k)` with `s_{a_1} ⋯ s_{a_k} = self`,
    /// generated by right-descent recursion, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        if self.length() == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 1..self.0.len() {
            if self.0[i - 1] > self.0[i] {
                let shorter = self.times_simple(i).expect("descent index in range");
                for mut w in shorter.reduced_words() {
                    w.push(i);
                    out.push(w);
                }
            }
        }
        out.sort();
        out
    }

    /// All permutations of `S_m` in lexicographic order.
    pub fn all(m: usize) -> Vec<Permutation> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, m: usize, out: &mut Vec<Permutation>) {
            if cur.len() == m {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=m {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(cur, used, m, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; m + 1], m, &mut out);
        out
    }

    /// Ascent chains from `self` up to `w₀`: sequences `(i_1, …, i_k)` with
    /// `self·s_{i_1}⋯s_{i_k} = w₀`, each step raising the length by one. These
    /// are exactly the reduced words of `self⁻¹ w₀`.
    pub fn ascent_chains(&self) -> Vec<Vec<usize>> {
        self.inverse()
            .compose(&Self::longest(self.size()))
            .reduced_words()
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Whether `s_{a_1} ⋯ s_{a_k}` is reduced in `S_m`.
pub fn is_reduced(m: usize, word: &[usize]) -> bool {
    Permutation::from_word(m, word)
        .map(|w| w.length() == word.len())
        .unwrap_or(false)
}

/// Staircase seed `z_1^{m−1} z_2^{m−2} ⋯ z_{m−1}`.
pub fn staircase(m: usize) -> LaurentPoly {
    LaurentPoly::monomial(Monomial::from_pairs((1..m).map(|k| (z(k), (m - k) as i32))))
}

/// (Modified) Schubert polynomial along a given ascent chain `(i_1, …, i_k)`:
/// `𝔖_w = 𝒪_{i_1} 𝔖_{w s_{i_1}} = 𝒪_{i_1} ⋯ 𝒪_{i_k} 𝔖_{w₀}`.
pub fn schubert_along(w: &Permutation, chain: &[usize], modified: bool) -> Result<LaurentPoly> {
    let m = w.size();
    let mut cur = w.clone();
    for &i in chain {
        let next = cur.times_simple(i)?;
        if next.length() != cur.length() + 1 {
            return Err(Error::NotReduced(chain.to_vec()));
        }
        cur = next;
    }
    if cur != Permutation::longest(m) {
        return Err(Error::Incompatible(format!(
            "chain {chain:?} does not reach w0 from {w}"
        )));
    }
    let seed = staircase(m);
    Ok(if modified {
        apply_written(chain, &seed, modified_divided_difference)
    } else {
        apply_written(chain, &seed, divided_difference)
    })
}

/// (Modified) Schubert polynomial, descending from `w₀` along the
/// lexicographically first ascent chain.
pub fn schubert_poly(w: &Permutation, modified: bool) -> LaurentPoly {
    let chain = w
        .ascent_chains()
        .into_iter()
        .next()
        .expect("every permutation has an ascent chain");
    schubert_along(w, &chain, modified).expect("ascent chains are valid by construction")
}

/// Word `I = (i_1, …, i_k)` with `s_{i_1}⋯s_{i_k}` reduced; the associated
/// operator is `𝒟_I = 𝒟_{i_k} ⋯ 𝒟_{i_1}` (`i_1` acts first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorWordDD {
    m: usize,
    indices: Vec<usize>,
}

impl OperatorWordDD {
    /// Check reducedness in `S_m`.
    pub fn new(m: usize, indices: Vec<usize>) -> Result<Self> {
        if !is_reduced(m, &indices) {
            return Err(Error::NotReduced(indices));
        }
        Ok(OperatorWordDD { m, indices })
    }

    /// Indices `i_1, …, i_k`.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Apply `𝒟_I` to `f`.
    pub fn apply_d(&self, f: &LaurentPoly) -> LaurentPoly {
        self.indices
            .iter()
            .fold(f.clone(), |acc, &i| modified_divided_difference(i, &acc))
    }
}

/// Expansion `𝒟_I = Σ_J c(I,J) ∂_J`, keyed by subword positions (0-based,
/// increasing) of reduced subwords `J`; `∂_J = ∂_{j_ℓ} ⋯ ∂_{j_1}`.
///
/// Built by the recursion
/// `c(I+i, J') = (a + b∂_i) c(I, J') + [J' ends at the new position] · b · s_i c(I, J)`
/// with `a = z_{i+1}/z_i`, `b = z_{i+1}²/z_i`.
pub fn expand_d_in_partial(word: &OperatorWordDD) -> BTreeMap<Vec<usize>, LaurentPoly> {
    let mut coeffs: BTreeMap<Vec<usize>, LaurentPoly> = BTreeMap::new();
    coeffs.insert(Vec::new(), LaurentPoly::one());
    for (pos, &i) in word.indices.iter().enumerate() {
        let a = &zp(i + 1) * &zpow(i, -1);
        let b = &zpow(i + 1, 2) * &zpow(i, -1);
        let mut next = BTreeMap::new();
        for (j, c) in &coeffs {
            let kept = &(&a * c) + &(&b * &divided_difference(i, c));
            if !kept.is_zero() {
                next.insert(j.clone(), kept);
            }
            let mut ext = j.clone();
            ext.push(pos);
            let ext_word: Vec<usize> = ext.iter().map(|&p| word.indices[p]).collect();
            if is_reduced(word.m, &ext_word) {
                let new = &b * &swap(i, c);
                if !new.is_zero() {
                    next.insert(ext, new);
                }
            }
        }
        coeffs = next;
    }
    coeffs
}

/// The expansion grouped by `∂`-operator, keyed by the word as written left
/// to right (so `[i, i+1]` means `∂_i ∂_{i+1}`).
pub fn expansion_by_operator(word: &OperatorWordDD) -> BTreeMap<Vec<usize>, LaurentPoly> {
    let mut out: BTreeMap<Vec<usize>, LaurentPoly> = BTreeMap::new();
    for (pos, c) in expand_d_in_partial(word) {
        let written: Vec<usize> = pos.iter().rev().map(|&p| word.indices[p]).collect();
        *out.entry(written).or_insert_with(LaurentPoly::zero) += &c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Apply an expansion `Σ c ∂_written` (as returned by [`expansion_by_operator`]).
pub fn apply_expansion(exp: &BTreeMap<Vec<usize>, LaurentPoly>, f: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (w, c) in exp {
        out += &(c * &apply_written(w, f, divided_difference));
    }
    out
}

/// The six-term closed form of `𝒟_i 𝒟_{i+1} 𝒟_i`:
/// `(z_{i+2}²/z_i²)(1 + (z_{i+1}+z_{i+2})∂_i + z_{i+2}∂_{i+1} + z_{i+1}z_{i+2}∂_i∂_{i+1}
///  + z_{i+2}²∂_{i+1}∂_i + z_{i+1}z_{i+2}²∂_i∂_{i+1}∂_i)`, keyed as in
/// [`expansion_by_operator`].
pub fn relopprod_closed_form(i: usize) -> BTreeMap<Vec<usize>, LaurentPoly> {
    let pre = &zpow(i + 2, 2) * &zpow(i, -2);
    let (a, b) = (zp(i + 1), zp(i + 2));
    let entries = [
        (vec![], LaurentPoly::one()),
        (vec![i], &a + &b),
        (vec![i + 1], b.clone()),
        (vec![i, i + 1], &a * &b),
        (vec![i + 1, i], &b * &b),
        (vec![i, i + 1, i], &(&a * &b) * &b),
    ];
    entries.into_iter().map(|(k, v)| (k, &pre * &v)).collect()
}

/// Seeded random Laurent polynomial in `z_1..z_m`: `terms` monomials with
/// exponents in `lo..=hi` and integer coefficients in `−5..=5 \ {0}`.
pub fn random_laurent(
    rng: &mut ChaCha8Rng,
    m: usize,
    terms: usize,
    lo: i32,
    hi: i32,
) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for _ in 0..terms {
        let mono = Monomial::from_pairs((1..=m).map(|k| (z(k), rng.gen_range(lo..=hi))));
        let mut c: i64 = rng.gen_range(1..=5);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        out += &LaurentPoly::term(Rational::from_integer(c.into()), mono);
    }
    out
}

/// All monomials in `z_1..z_m` with nonnegative exponents and total degree `≤ d`.
pub fn monomials_up_to(m: usize, d: u32) -> Vec<LaurentPoly> {
    fn rec(k: usize, m: usize, rem: u32, cur: &mut Vec<(VarId, i32)>, out: &mut Vec<LaurentPoly>) {
        if k > m {
            out.push(LaurentPoly::monomial(Monomial::from_pairs(
                cur.iter().copied(),
            )));
            return;
        }
        for e in 0..=rem {
            cur.push((z(k), e as i32));
            rec(k + 1, m, rem - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, m, d, &mut Vec::new(), &mut out);
    out
}

/// `R_i(u) = 1 + (1 − E) 𝒟_i` where `E` stands for `e^u`, acting on
/// polynomials whose coefficients may involve the symbols of `E`.
pub fn apply_r(i: usize, e: &LaurentPoly, f: &LaurentPoly) -> LaurentPoly {
    f + &(&(&LaurentPoly::one() - e) * &modified_divided_difference(i, f))
}

/// Both sides of `R_i(u) R_{i+1}(u+v) R_i(v) = R_{i+1}(v) R_i(u+v) R_{i+1}(u)`
/// applied to `f`, with `e^u`, `e^v` given as polynomials (formal symbols
/// `E_u`, `E_v` with `e^{u+v} = E_u E_v`).
pub fn yb_sides_symbolic(
    i: usize,
    eu: &LaurentPoly,
    ev: &LaurentPoly,
    f: &LaurentPoly,
) -> (LaurentPoly, LaurentPoly) {
    let euv = eu * ev;
    let lhs = apply_r(i, eu, &apply_r(i + 1, &euv, &apply_r(i, ev, f)));
    let rhs = apply_r(i + 1, ev, &apply_r(i, &euv, &apply_r(i + 1, eu, f)));
    (lhs, rhs)
}

/// Series-mode check: `e^u` is the exponential series in the formal symbol
/// `u`, truncated at total degree `degree` in `u, v`. Returns both sides.
pub fn yb_sides_series(
    i: usize,
    u: VarId,
    v: VarId,
    degree: u32,
    f: &LaurentPoly,
) -> (FormalSeries, FormalSeries) {
    let caps = vec![Cap::new(vec![u, v], degree as i32)];
    let exp = |x: &LaurentPoly| -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut term = LaurentPoly::one();
        for k in 1..=degree {
            term = (&term * x).scale(&Rational::new(1.into(), (k as i64).into()));
            acc += &term;
        }
        acc
    };
    let (up, vp) = (LaurentPoly::var(u), LaurentPoly::var(v));
    let eu = exp(&up);
    let ev = exp(&vp);
    let euv = exp(&(&up + &vp));
    let r = |j: usize, e: &LaurentPoly, s: FormalSeries| -> FormalSeries {
        let poly = apply_r(j, e, s.poly());
        FormalSeries::new(poly, caps.clone())
    };
    let start = FormalSeries::new(f.clone(), caps.clone());
    let lhs = r(i, &eu, r(i + 1, &euv, r(i, &ev, start.clone())));
    let rhs = r(i + 1, &ev, r(i, &euv, r(i + 1, &eu, start)));
    (lhs, rhs)
}

/// Written word of the conjectured product
/// `𝒟_i (𝒟_{i+1}𝒟_i) ⋯ (𝒟_{i+n−1} ⋯ 𝒟_i)`.
pub fn staircase_word(n: usize, i: usize) -> Vec<usize> {
    (0..n)
        .flat_map(|r| (0..=r).rev().map(move |s| i + s))
        .collect()
}

/// Reflected index inside the block `z_i, …, z_{i+n}`: `j ↦ n + 2i − j`
/// (this reduces to `n + 2 − j` when `i = 1`).
pub fn reflected(n: usize, i: usize, j: usize) -> usize {
    n + 2 * i - j
}

/// Right-hand side of the conjectured factorization applied to `f`:
/// `∏_{j=i+1}^{n+i} (z_j/z_{j*})^{j−i} · ∂_i(∂_{i+1}∂_i)⋯ · ∏ z_{j*}^{j−i} f`
/// with `j* = reflected(n, i, j)`.
pub fn conjecture_rhs(n: usize, i: usize, f: &LaurentPoly) -> LaurentPoly {
    let mut inner = f.clone();
    let mut pre = LaurentPoly::one();
    for j in i + 1..=n + i {
        let e = (j - i) as i32;
        let r = reflected(n, i, j);
        inner = &inner * &zpow(r, e);
        pre = &pre * &(&zpow(j, e) * &zpow(r, -e));
    }
    &pre * &apply_written(&staircase_word(n, i), &inner, divided_difference)
}

/// Left-hand side `𝒟_i (𝒟_{i+1}𝒟_i) ⋯ f`.
pub fn conjecture_lhs(n: usize, i: usize, f: &LaurentPoly) -> LaurentPoly {
    apply_written(&staircase_word(n, i), f, modified_divided_difference)
}

/// Outcome of the conjectured factorization on a test set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    /// Block size `n`.
    pub n: usize,
    /// Starting index `i`.
    pub i: usize,
    /// Monomial degree bound used.
    pub degree: u32,
    /// Number of test functions.
    pub checked: usize,
    /// First disagreeing input, if any.
    pub counterexample: Option<String>,
}

/// Check the conjectured factorization on all monomials of degree `≤ degree`
/// in `z_1..z_{n+i}` plus `random` seeded random Laurent polynomials.
pub fn conjecture_d_product(
    n: usize,
    i: usize,
    degree: u32,
    random: usize,
    rng: &mut ChaCha8Rng,
) -> ConjectureReport {
    let m = n + i;
    let mut tests = monomials_up_to(m, degree);
    for _ in 0..random {
        tests.push(random_laurent(rng, m, 3, -2, 3));
    }
    let mut counterexample = None;
    for f in &tests {
        if conjecture_lhs(n, i, f) != conjecture_rhs(n, i, f) {
            counterexample = Some(f.to_canonical());
            break;
        }
    }
    ConjectureReport {
        n,
        i,
        degree,
        checked: tests.len(),
        counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ordinary_divided_difference_examples() {
        assert!(divided_difference(1, &p("z1")).is_one());
        assert!(divided_difference(1, &p("z1*z2")).is_zero());
        assert_eq!(divided_difference(1, &p("z1^2")), p("z1 + z2"));
        let f = p("z1^-2*z2^3 + 3*z1*z3 - z2^-1");
        assert_eq!(
            divided_difference(1, &f),
            divided_difference_by_quotient(1, &f).unwrap()
        );
    }

    #[test]
    fn modified_divided_difference_examples() {
        assert_eq!(
            modified_divided_difference(1, &LaurentPoly::one()),
            p("z1^-1*z2")
        );
        let f = p("z1");
        let twice = modified_divided_difference(1, &modified_divided_difference(1, &f));
        assert_eq!(twice, -modified_divided_difference(1, &f));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let f = random_laurent(&mut rng, 3, 4, -2, 3);
            let d = modified_divided_difference(2, &f);
            assert_eq!(d, modified_via_partial(2, &f));
            assert_eq!(d, modified_via_conjugation(2, &f));
        }
    }

    #[test]
    fn permutation_basics() {
        assert_eq!(perm(&[3, 2, 1]).length(), 3);
        assert_eq!(
            perm(&[3, 2, 1]).reduced_words(),
            vec![vec![1, 2, 1], vec![2, 1, 2]]
        );
        assert!(Permutation::new(vec![1, 1]).is_err());
        for w in Permutation::all(4) {
            for word in w.reduced_words() {
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(4, &word).unwrap(), w);
            }
        }
    }

    #[test]
    fn modified_schubert_table_s3() {
        assert_eq!(schubert_poly(&perm(&[3, 2, 1]), true), p("z1^2*z2"));
        assert_eq!(schubert_poly(&perm(&[2, 3, 1]), true), p("z1*z2^2 + z2^3"));
        assert_eq!(
            schubert_poly(&perm(&[3, 1, 2]), true),
            p("z1^2*z3 + z1^2*z2^-1*z3^2")
        );
        let w123 =
            &(&(&p("z3^2") * &p("z2 + z3")) * &(&p("z1 + z2") * &p("z1 + z3"))) * &p("z1^-2");
        assert_eq!(schubert_poly(&perm(&[1, 2, 3]), true), w123);
        assert_eq!(schubert_poly(&perm(&[1, 3, 2]), false), p("z1 + z2"));
        assert!(schubert_poly(&perm(&[1, 2, 3]), false).is_one());
    }

    #[test]
    fn schubert_independent_of_chain() {
        for w in Permutation::all(4) {
            for modified in [false, true] {
                let chains = w.ascent_chains();
                let first = schubert_along(&w, &chains[0], modified).unwrap();
                for c in &chains[1..] {
                    assert_eq!(schubert_along(&w, c, modified).unwrap(), first);
                }
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let single = expansion_by_operator(&OperatorWordDD::new(3, vec![2]).unwrap());
        assert_eq!(single[&vec![]], p("z2^-1*z3"));
        assert_eq!(single[&vec![2]], p("z2^-1*z3^2"));
        let empty = expansion_by_operator(&OperatorWordDD::new(3, vec![]).unwrap());
        assert_eq!(empty.len(), 1);
        assert!(empty[&vec![]].is_one());
        for i in 1..=2 {
            let w = OperatorWordDD::new(i + 2, vec![i, i + 1, i]).unwrap();
            assert_eq!(expansion_by_operator(&w), relopprod_closed_form(i));
        }
        assert!(matches!(
            OperatorWordDD::new(3, vec![1, 1]),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn expansion_sound_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for word in [vec![1, 2, 1], vec![2, 1, 3, 2], vec![1, 3]] {
            let w = OperatorWordDD::new(4, word).unwrap();
            let exp = expansion_by_operator(&w);
            for _ in 0..3 {
                let f = random_laurent(&mut rng, 4, 3, -1, 3);
                assert_eq!(apply_expansion(&exp, &f), w.apply_d(&f));
            }
        }
    }

    #[test]
    fn yang_baxter_modes() {
        let f = p("z1");
        let one = LaurentPoly::one();
        let (l, r) = yb_sides_symbolic(1, &one, &one, &f);
        assert_eq!((l.clone(), r), (f.clone(), f.clone()));
        let (eu, ev) = (LaurentPoly::named("Eu"), LaurentPoly::named("Ev"));
        let g = p("z1^2*z3^-1 + 2*z2");
        let (l, r) = yb_sides_symbolic(1, &eu, &ev, &g);
        assert_eq!(l, r);
        let (l, r) = yb_sides_series(1, VarId::new("u"), VarId::new("v"), 3, &f);
        assert_eq!(l.poly(), r.poly());
    }

    #[test]
    fn conjecture_small_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rep = conjecture_d_product(1, 1, 4, 3, &mut rng);
        assert_eq!(rep.counterexample, None);
        let rep = conjecture_d_product(2, 1, 3, 3, &mut rng);
        assert_eq!(rep.counterexample, None);
    }
}
