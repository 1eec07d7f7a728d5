//! Truncated bosonic Fock spaces on the triangular site set `D_n`, the
//! `q = 0` oscillator (`b⁺`, `b⁻`, `t`) and the `q`-oscillator (`a⁺`, `a⁻`,
//! `k`), together with the dual pairing.
//!
//! A basis vector of `⊗_{D_n} F` is an [`OccupationState`]: one occupation
//! number per site, stored in the canonical site order of
//! [`triangular_sites`]. The same type is reused for the `ℓ` Fock lines of
//! the `Y` columns, where "sites" are simply the lines `1..=ℓ`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{q_pochhammer, LaurentPoly, Monomial, Rational, VarId};

/// A lattice site `(k, ℓ)` with `k, ℓ ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Site {
    /// Row index `k`.
    pub k: usize,
    /// Column index `ℓ`.
    pub l: usize,
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.k, self.l)
    }
}

/// The triangular set `D_n = {(k,ℓ) : k,ℓ ≥ 1, k+ℓ ≤ n}` in canonical order
/// (row-major: increasing `k`, then increasing `ℓ`).
pub fn triangular_sites(n: usize) -> Vec<Site> {
    let mut out = Vec::new();
    for k in 1..n {
        for l in 1..n {
            if k + l <= n {
                out.push(Site { k, l });
            }
        }
    }
    out
}

/// Position of `(k, ℓ)` in [`triangular_sites`]`(n)`, if it lies in `D_n`.
pub fn site_index(n: usize, k: usize, l: usize) -> Option<usize> {
    if k == 0 || l == 0 || k + l > n {
        return None;
    }
    // Rows 1..k-1 contribute (n-1) + (n-2) + ... + (n-k+1) sites.
    let before: usize = (1..k).map(|r| n - r).sum();
    Some(before + l - 1)
}

/// Basis vector of a multi-Fock space: occupation numbers in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OccupationState(pub Vec<u32>);

impl OccupationState {
    /// The vacuum on `len` Fock factors.
    pub fn vacuum(len: usize) -> Self {
        OccupationState(vec![0; len])
    }

    /// Occupation numbers.
    pub fn occ(&self) -> &[u32] {
        &self.0
    }

    /// True for the all-zero state.
    pub fn is_vacuum(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    /// Largest occupation number.
    pub fn max_occupation(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Render as sorted `(k,ℓ): m` pairs for the given site labels.
    pub fn describe(&self, sites: &[Site]) -> String {
        let parts: Vec<String> = sites
            .iter()
            .zip(&self.0)
            .map(|(s, m)| format!("({},{}):{}", s.k, s.l, m))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Every state with `len` factors and all occupations `≤ max`.
    pub fn all_bounded(len: usize, max: u32) -> Vec<OccupationState> {
        let mut out = vec![OccupationState(Vec::with_capacity(len))];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|s| {
                    (0..=max).map(move |m| {
                        let mut v = s.0.clone();
                        v.push(m);
                        OccupationState(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for OccupationState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "|{}>", parts.join(","))
    }
}

/// Oscillator generators acting on a single Fock factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SiteOpKind {
    /// Identity.
    Id,
    /// `b⁺|m⟩ = |m+1⟩`.
    BPlus,
    /// `b⁻|m⟩ = |m−1⟩`, `b⁻|0⟩ = 0`.
    BMinus,
    /// Vacuum projection `t|m⟩ = δ_{m,0}|m⟩`.
    TProj,
    /// `a⁺|m⟩ = |m+1⟩`.
    APlus,
    /// `a⁻|m⟩ = (1 − q^{2m})|m−1⟩`.
    AMinus,
    /// `k|m⟩ = q^m|m⟩`.
    Kdiag,
}

impl SiteOpKind {
    /// True for the kinds of the `q = 0` oscillator algebra.
    pub fn is_q0(self) -> bool {
        matches!(
            self,
            SiteOpKind::BPlus | SiteOpKind::BMinus | SiteOpKind::TProj
        )
    }

    /// True for the kinds of the `q`-oscillator algebra.
    pub fn is_generic(self) -> bool {
        matches!(
            self,
            SiteOpKind::APlus | SiteOpKind::AMinus | SiteOpKind::Kdiag
        )
    }
}

/// A generator placed on a site (index into the canonical site order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SiteOp {
    /// Generator.
    pub kind: SiteOpKind,
    /// Index of the Fock factor acted on.
    pub site: usize,
}

/// Univariate integer polynomial in `q`, dense by exponent. Used for the
/// exact coefficients of single-site actions on the lattice fast path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly(pub Vec<i128>);

impl QPoly {
    /// The constant `c`.
    pub fn constant(c: i128) -> Self {
        QPoly(vec![c])
    }

    /// `c·q^e`.
    pub fn monomial(c: i128, e: usize) -> Self {
        let mut v = vec![0; e + 1];
        v[e] = c;
        QPoly(v)
    }

    /// `1 − q^{2m}`.
    pub fn one_minus_q2m(m: u32) -> Self {
        let mut v = vec![0; 2 * m as usize + 1];
        v[0] += 1;
        v[2 * m as usize] -= 1;
        QPoly(v).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    /// True when every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Product.
    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::default();
        }
        let mut v = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly(v).trimmed()
    }

    /// In-place sum.
    pub fn add_assign(&mut self, other: &QPoly) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), 0);
        }
        for (i, b) in other.0.iter().enumerate() {
            self.0[i] += b;
        }
        let t = std::mem::take(self).trimmed();
        *self = t;
    }

    /// Value at `q = 0`.
    pub fn at_zero(&self) -> i128 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Convert to a [`LaurentPoly`] in the registry variable `q`.
    pub fn to_laurent(&self) -> LaurentPoly {
        let q = VarId::q();
        let mut out = LaurentPoly::zero();
        for (e, &c) in self.0.iter().enumerate() {
            if c != 0 {
                let coeff = Rational::from_integer(num_bigint::BigInt::from(c));
                out += &LaurentPoly::term(coeff, Monomial::var_pow(q, e as i32));
            }
        }
        out
    }
}

/// Action of `kind` on the single-factor state `|m⟩` with truncation `cutoff`.
///
/// Returns `None` for a vanishing result. `site` labels the error only.
pub fn site_action(
    kind: SiteOpKind,
    m: u32,
    cutoff: u32,
    site: (usize, usize),
) -> Result<Option<(u32, QPoly)>> {
    Ok(match kind {
        SiteOpKind::Id => Some((m, QPoly::constant(1))),
        SiteOpKind::BPlus | SiteOpKind::APlus => {
            if m + 1 > cutoff {
                return Err(Error::CutoffExceeded {
                    k: site.0,
                    l: site.1,
                    cutoff,
                });
            }
            Some((m + 1, QPoly::constant(1)))
        }
        SiteOpKind::BMinus => (m > 0).then(|| (m - 1, QPoly::constant(1))),
        SiteOpKind::TProj => (m == 0).then(|| (m, QPoly::constant(1))),
        SiteOpKind::AMinus => (m > 0).then(|| (m - 1, QPoly::one_minus_q2m(m))),
        SiteOpKind::Kdiag => Some((m, QPoly::monomial(1, m as usize))),
    })
}

/// Apply a site operator to a basis state; zero or one resulting term.
pub fn apply_site_op(
    op: SiteOp,
    state: &OccupationState,
    cutoff: u32,
) -> Result<Vec<(OccupationState, LaurentPoly)>> {
    let m = *state.0.get(op.site).ok_or_else(|| {
        Error::OutOfRange(format!(
            "site index {} for a state of length {}",
            op.site,
            state.0.len()
        ))
    })?;
    if m > cutoff {
        return Err(Error::OutOfRange(format!(
            "state occupation {m} above cutoff {cutoff}"
        )));
    }
    Ok(match site_action(op.kind, m, cutoff, (op.site, 0))? {
        None => Vec::new(),
        Some((m2, w)) => {
            let mut s = state.clone();
            s.0[op.site] = m2;
            vec![(s, w.to_laurent())]
        }
    })
}

/// Single-factor pairing `⟨m|m'⟩ = δ_{m,m'} (q²;q²)_m`, or the normalized
/// `⟨⟨m|m'⟩ = δ_{m,m'}`.
pub fn pairing(bra: u32, ket: u32, normalized: bool) -> LaurentPoly {
    if bra != ket {
        return LaurentPoly::zero();
    }
    if normalized {
        return LaurentPoly::one();
    }
    let q2 = LaurentPoly::var_pow(VarId::q(), 2);
    q_pochhammer(&q2, &q2, bra as usize)
}

/// Which oscillator algebra to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OscillatorAlgebra {
    /// `b⁺, b⁻, t`.
    Q0,
    /// `a⁺, a⁻, k`.
    Generic,
}

/// Outcome of [`oscillator_relation_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    /// Relations checked, in order.
    pub checked: Vec<String>,
    /// Relations violated on some state, with the first offending occupation.
    pub violated: Vec<(String, u32)>,
}

impl RelationReport {
    /// True when nothing was violated.
    pub fn ok(&self) -> bool {
        self.violated.is_empty()
    }
}

/// Single-factor vector: coefficients indexed by occupation.
type Vec1 = Vec<(u32, LaurentPoly)>;

fn apply_word1(word: &[SiteOpKind], m: u32, cutoff: u32) -> Result<Vec1> {
    let mut cur: Vec1 = vec![(m, LaurentPoly::one())];
    for &k in word.iter().rev() {
        let mut next = Vec1::new();
        for (m, c) in cur {
            if let Some((m2, w)) = site_action(k, m, cutoff, (1, 1))? {
                next.push((m2, &c * &w.to_laurent()));
            }
        }
        cur = next;
    }
    Ok(cur)
}

fn combine1(
    terms: &[(LaurentPoly, Vec<SiteOpKind>)],
    m: u32,
    cutoff: u32,
) -> Result<std::collections::BTreeMap<u32, LaurentPoly>> {
    let mut acc = std::collections::BTreeMap::new();
    for (c, w) in terms {
        for (m2, v) in apply_word1(w, m, cutoff)? {
            let e = acc.entry(m2).or_insert_with(LaurentPoly::zero);
            *e += &(c * &v);
        }
    }
    acc.retain(|_, v: &mut LaurentPoly| !v.is_zero());
    Ok(acc)
}

/// Verify the defining relations of an oscillator algebra as operator
/// identities on every state `|m⟩` with `m ≤ cutoff − 1`.
pub fn oscillator_relation_check(
    algebra: OscillatorAlgebra,
    cutoff: u32,
) -> Result<RelationReport> {
    use SiteOpKind::*;
    if cutoff < 2 {
        return Err(Error::OutOfRange(
            "oscillator check needs cutoff >= 2".into(),
        ));
    }
    let one = LaurentPoly::one;
    let q = LaurentPoly::var(VarId::q());
    let q2 = &q * &q;
    // Each relation: (name, lhs terms, rhs terms); a term is (scalar, word).
    let relations: Vec<(
        &str,
        Vec<(LaurentPoly, Vec<SiteOpKind>)>,
        Vec<(LaurentPoly, Vec<SiteOpKind>)>,
    )> = match algebra {
        OscillatorAlgebra::Q0 => vec![
            ("t b+ = 0", vec![(one(), vec![TProj, BPlus])], vec![]),
            ("b- t = 0", vec![(one(), vec![BMinus, TProj])], vec![]),
            (
                "b+ b- = 1 - t",
                vec![(one(), vec![BPlus, BMinus])],
                vec![(one(), vec![Id]), (-one(), vec![TProj])],
            ),
            (
                "b- b+ = 1",
                vec![(one(), vec![BMinus, BPlus])],
                vec![(one(), vec![Id])],
            ),
        ],
        OscillatorAlgebra::Generic => vec![
            (
                "k a+ = q a+ k",
                vec![(one(), vec![Kdiag, APlus])],
                vec![(q.clone(), vec![APlus, Kdiag])],
            ),
            (
                "k a- = q^-1 a- k",
                vec![(q.clone(), vec![Kdiag, AMinus])],
                vec![(one(), vec![AMinus, Kdiag])],
            ),
            (
                "a- a+ = 1 - q^2 k^2",
                vec![(one(), vec![AMinus, APlus])],
                vec![(one(), vec![Id]), (-&q2, vec![Kdiag, Kdiag])],
            ),
            (
                "a+ a- = 1 - k^2",
                vec![(one(), vec![APlus, AMinus])],
                vec![(one(), vec![Id]), (-one(), vec![Kdiag, Kdiag])],
            ),
        ],
    };
    let mut report = RelationReport {
        checked: Vec::new(),
        violated: Vec::new(),
    };
    for (name, lhs, rhs) in relations {
        report.checked.push(name.to_string());
        for m in 0..cutoff {
            if combine1(&lhs, m, cutoff)? != combine1(&rhs, m, cutoff)? {
                report.violated.push((name.to_string(), m));
                break;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_set_has_expected_size_and_index() {
        for n in 2..8 {
            let s = triangular_sites(n);
            assert_eq!(s.len(), n * (n - 1) / 2);
            for (i, site) in s.iter().enumerate() {
                assert_eq!(site_index(n, site.k, site.l), Some(i));
            }
        }
        assert_eq!(site_index(3, 2, 2), None);
    }

    #[test]
    fn site_action_examples() {
        assert_eq!(site_action(SiteOpKind::BMinus, 0, 5, (1, 1)).unwrap(), None);
        let (m, w) = site_action(SiteOpKind::Kdiag, 2, 5, (1, 1))
            .unwrap()
            .unwrap();
        assert_eq!((m, w.to_laurent()), (2, LaurentPoly::parse("q^2").unwrap()));
        let (m, w) = site_action(SiteOpKind::AMinus, 1, 5, (1, 1))
            .unwrap()
            .unwrap();
        assert_eq!(
            (m, w.to_laurent()),
            (0, LaurentPoly::parse("1 - q^2").unwrap())
        );
        assert!(matches!(
            site_action(SiteOpKind::BPlus, 3, 3, (1, 2)),
            Err(Error::CutoffExceeded {
                k: 1,
                l: 2,
                cutoff: 3
            })
        ));
    }

    #[test]
    fn pairing_examples() {
        assert!(pairing(3, 3, true).is_one());
        assert_eq!(
            pairing(2, 2, false),
            &LaurentPoly::parse("1 - q^2").unwrap() * &LaurentPoly::parse("1 - q^4").unwrap()
        );
        assert!(pairing(1, 2, false).is_zero());
    }

    #[test]
    fn oscillator_relations_hold() {
        assert!(oscillator_relation_check(OscillatorAlgebra::Q0, 5)
            .unwrap()
            .ok());
        assert!(oscillator_relation_check(OscillatorAlgebra::Generic, 5)
            .unwrap()
            .ok());
    }
}
