//! Stationary distribution of the multispecies TASEP on a periodic chain,
//! computed three ways: the exact kernel of the Markov generator, the trace
//! of a product of lattice operators at unit spectral parameters, and the
//! closed-form Schur specialization for block configurations.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Rational};
use crate::pfunc::{plain_trace, OperatorWord};
use crate::symfun::{schur_at_ones, Partition};
use crate::vertexmodel::Model;

/// A configuration `σ = (σ_1, …, σ_L)` of species labels on the ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TasepConfig(pub Vec<usize>);

impl TasepConfig {
    /// Validate a configuration for `n` species (labels `0..=n`).
    pub fn new(sigma: Vec<usize>, n: usize) -> Result<Self> {
        if sigma.len() < 2 {
            return Err(Error::OutOfRange("a ring needs at least two sites".into()));
        }
        if let Some(&bad) = sigma.iter().find(|&&s| s > n) {
            return Err(Error::OutOfRange(format!(
                "species label {bad} exceeds n={n}"
            )));
        }
        Ok(TasepConfig(sigma))
    }

    /// Parse a digit string such as `"30021"` or a comma list `"3,0,0,2,1"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let labels: Option<Vec<usize>> = if text.contains(',') {
            text.split(',')
                .map(|t| t.trim().parse::<usize>().ok())
                .collect()
        } else {
            text.trim()
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        let labels = labels.ok_or_else(|| Error::Parse(format!("bad configuration `{text}`")))?;
        Self::new(labels, n)
    }

    /// Cyclic rotation by one site to the left.
    pub fn rotate(&self) -> Self {
        let mut v = self.0.clone();
        v.rotate_left(1);
        TasepConfig(v)
    }

    /// Per-species counts `(m_0, …, m_n)`.
    pub fn counts(&self, n: usize) -> Vec<usize> {
        let mut m = vec![0; n + 1];
        for &s in &self.0 {
            m[s] += 1;
        }
        m
    }
}

impl fmt::Display for TasepConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&s| s < 10) {
            for s in &self.0 {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// A sector: multiplicities `(m_0, …, m_n)` of each species.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TasepSector {
    m: Vec<usize>,
}

impl TasepSector {
    /// Sector with the given multiplicities (`n = m.len() − 1`).
    pub fn new(m: Vec<usize>) -> Result<Self> {
        if m.is_empty() || m.iter().sum::<usize>() < 2 {
            return Err(Error::EmptySector);
        }
        Ok(TasepSector { m })
    }

    /// Number of species `n` (labels `0..=n`).
    pub fn species(&self) -> usize {
        self.m.len() - 1
    }

    /// Ring length `L = Σ m_k`.
    pub fn sites(&self) -> usize {
        self.m.iter().sum()
    }

    /// Multiplicities.
    pub fn multiplicities(&self) -> &[usize] {
        &self.m
    }

    /// Whether every species is present.
    pub fn all_species_present(&self) -> bool {
        self.m.iter().all(|&c| c > 0)
    }

    /// Membership test.
    pub fn contains(&self, c: &TasepConfig) -> bool {
        c.0.len() == self.sites() && c.counts(self.species()) == self.m
    }

    /// All configurations of the sector, in lexicographic order.
    pub fn configurations(&self) -> Vec<TasepConfig> {
        fn rec(rem: &mut Vec<usize>, cur: &mut Vec<usize>, len: usize, out: &mut Vec<TasepConfig>) {
            if cur.len() == len {
                out.push(TasepConfig(cur.clone()));
                return;
            }
            for s in 0..rem.len() {
                if rem[s] > 0 {
                    rem[s] -= 1;
                    cur.push(s);
                    rec(rem, cur, len, out);
                    cur.pop();
                    rem[s] += 1;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut self.m.clone(), &mut Vec::new(), self.sites(), &mut out);
        out
    }

    /// The weakly decreasing configuration `n…n (n−1)… 0…0`.
    pub fn sorted_config(&self) -> TasepConfig {
        TasepConfig(
            (0..self.m.len())
                .rev()
                .flat_map(|s| std::iter::repeat_n(s, self.m[s]))
                .collect(),
        )
    }
}

/// Dense exact matrix indexed by sector configurations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    /// Row/column labels.
    pub configs: Vec<TasepConfig>,
    /// Entries `rows[r][c]`.
    pub rows: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    /// Dimension.
    pub fn dim(&self) -> usize {
        self.configs.len()
    }

    /// Column sums (all zero for a Markov generator).
    pub fn column_sums(&self) -> Vec<Rational> {
        (0..self.dim())
            .map(|c| self.rows.iter().map(|r| &r[c]).sum())
            .collect()
    }
}

/// Markov generator `H = Σ_i h_{i,i+1}` (periodic) on a sector, with
/// `h|αβ⟩ = |βα⟩ − |αβ⟩` for `α > β`; `H[σ', σ]` is the rate `σ → σ'`.
pub fn build_generator(n: usize, sites: usize, sector: &TasepSector) -> Result<RationalMatrix> {
    if sector.species() != n || sector.sites() != sites {
        return Err(Error::Incompatible(format!(
            "sector {:?} is not an n={n}, L={sites} sector",
            sector.m
        )));
    }
    let configs = sector.configurations();
    if configs.is_empty() {
        return Err(Error::EmptySector);
    }
    let index: BTreeMap<&TasepConfig, usize> =
        configs.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let dim = configs.len();
    let mut rows = vec![vec![Rational::zero(); dim]; dim];
    for (col, c) in configs.iter().enumerate() {
        for i in 0..sites {
            let j = (i + 1) % sites;
            if c.0[i] > c.0[j] {
                let mut swapped = c.0.clone();
                swapped.swap(i, j);
                let row = index[&TasepConfig(swapped)];
                rows[row][col] += Rational::one();
                rows[col][col] -= Rational::one();
            }
        }
    }
    Ok(RationalMatrix { configs, rows })
}

/// Kernel vector of the generator by fraction-free elimination, scaled so
/// that `normalize_at` has value 1.
pub fn steady_state_kernel(
    gen: &RationalMatrix,
    normalize_at: &TasepConfig,
) -> Result<BTreeMap<TasepConfig, Rational>> {
    let dim = gen.dim();
    let norm_idx = gen
        .configs
        .iter()
        .position(|c| c == normalize_at)
        .ok_or_else(|| Error::Incompatible(format!("{normalize_at} is not in the sector")))?;
    // Clear denominators row by row, then eliminate over the integers.
    let mut a: Vec<Vec<BigInt>> = gen
        .rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| {
                num_integer::Integer::lcm(&acc, x.denom())
            });
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..dim).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..dim {
            for j in c + 1..dim {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
        if r == dim {
            break;
        }
    }
    let nullity = dim - pivots.len();
    if nullity != 1 {
        return Err(Error::KernelDimensionError(nullity));
    }
    let free = (0..dim)
        .find(|c| !pivots.contains(c))
        .expect("one free column");
    let mut x = vec![Rational::zero(); dim];
    x[free] = Rational::one();
    for (row, &pc) in pivots.iter().enumerate().rev() {
        let mut s = Rational::zero();
        for j in pc + 1..dim {
            if !a[row][j].is_zero() {
                s += Rational::from_integer(a[row][j].clone()) * &x[j];
            }
        }
        x[pc] = -s / Rational::from_integer(a[row][pc].clone());
    }
    let scale = x[norm_idx].clone();
    if scale.is_zero() {
        return Err(Error::Incompatible(format!(
            "kernel vanishes at {normalize_at}"
        )));
    }
    Ok(gen
        .configs
        .iter()
        .cloned()
        .zip(x.into_iter().map(|v| v / &scale))
        .collect())
}

/// Steady state of a sector by the kernel method, normalized at the sorted
/// configuration.
pub fn steady_state_vector(sector: &TasepSector) -> Result<BTreeMap<TasepConfig, Rational>> {
    let gen = build_generator(sector.species(), sector.sites(), sector)?;
    steady_state_kernel(&gen, &sector.sorted_config())
}

/// `ℙ(σ) = Tr(X_{σ_1}(1) ⋯ X_{σ_L}(1))` through the q=0 lattice, with
/// truncation cutoffs up to `m_max`.
pub fn steady_state_trace(
    n: usize,
    sites: usize,
    sector: &TasepSector,
    config: &TasepConfig,
    m_max: u32,
) -> Result<Rational> {
    if !sector.contains(config) || sector.species() != n || sector.sites() != sites {
        return Err(Error::Incompatible(format!(
            "{config} is not in sector {:?}",
            sector.m
        )));
    }
    if !sector.all_species_present() {
        return Err(Error::Incompatible(
            "the trace formula needs every species present".into(),
        ));
    }
    let factors: Vec<(usize, LaurentPoly)> =
        config.0.iter().map(|&s| (s, LaurentPoly::one())).collect();
    let word = OperatorWord::xs(n, Model::q0(), &factors);
    let tr = plain_trace(&word, 1, m_max)?;
    tr.value
        .as_constant()
        .ok_or_else(|| Error::Incompatible("trace at unit parameters is not a number".into()))
}

/// Block configuration `(n^{a_n}, …, (k+1)^{a_{k+1}}, (j−1)^{a_{j−1}}, …,
/// 0^{a_0}, k^{a_k}, …, j^{a_j})` for block sizes `a = (a_0, …, a_n)`.
pub fn closed_form_config(n: usize, j: usize, k: usize, sizes: &[usize]) -> Result<TasepConfig> {
    check_closed_form_args(n, j, k, sizes)?;
    let block = |s: usize| std::iter::repeat_n(s, sizes[s]);
    let sigma: Vec<usize> = (k + 1..=n)
        .rev()
        .flat_map(block)
        .chain((0..j).rev().flat_map(block))
        .chain((j..=k).rev().flat_map(block))
        .collect();
    TasepConfig::new(sigma, n)
}

fn check_closed_form_args(n: usize, j: usize, k: usize, sizes: &[usize]) -> Result<()> {
    if sizes.len() != n + 1 {
        return Err(Error::Incompatible(format!(
            "need {} block sizes, got {}",
            n + 1,
            sizes.len()
        )));
    }
    if j > k || k > n {
        return Err(Error::OutOfRange(format!(
            "need j ≤ k ≤ n, got j={j}, k={k}, n={n}"
        )));
    }
    Ok(())
}

/// Closed form `s_{(k+1−j)^{a_{k+1}+…+a_n}}(1^{a_0+…+a_{j−1}+a_{k+1}+…+a_n})`.
pub fn steady_closed_form(n: usize, j: usize, k: usize, sizes: &[usize]) -> Result<Rational> {
    check_closed_form_args(n, j, k, sizes)?;
    let upper: usize = sizes[k + 1..].iter().sum();
    let lower: usize = sizes[..j].iter().sum();
    let lambda = Partition::new(vec![(k + 1 - j) as u32; upper])?;
    Ok(schur_at_ones(&lambda, lower + upper))
}

/// Whether every entry is a positive integer.
pub fn is_positive_integral(v: &BTreeMap<TasepConfig, Rational>) -> bool {
    v.values().all(|x| x.is_integer() && x.is_positive())
}

/// Write a sector vector as CSV with columns `config,value`.
pub fn write_csv<W: Write>(v: &BTreeMap<TasepConfig, Rational>, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Parse(format!("csv: {e}"));
    w.write_record(["config", "value"]).map_err(io)?;
    for (c, x) in v {
        w.write_record([c.to_string(), x.to_string()]).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn two_site_sector_is_uniform() {
        let sec = TasepSector::new(vec![1, 1]).unwrap();
        let g = build_generator(1, 2, &sec).unwrap();
        assert_eq!(g.dim(), 2);
        assert_eq!(g.rows[0][1], r(1));
        assert_eq!(g.rows[1][0], r(1));
        let v = steady_state_vector(&sec).unwrap();
        assert!(v.values().all(|x| *x == r(1)));
    }

    #[test]
    fn single_species_sector() {
        let sec = TasepSector::new(vec![0, 3]).unwrap();
        let g = build_generator(1, 3, &sec).unwrap();
        assert_eq!(g.dim(), 1);
        assert!(g.rows[0][0].is_zero());
        assert_eq!(
            steady_state_vector(&sec)
                .unwrap()
                .values()
                .cloned()
                .collect::<Vec<_>>(),
            vec![r(1)]
        );
        let sec = TasepSector::new(vec![2, 2]).unwrap();
        assert!(steady_state_vector(&sec)
            .unwrap()
            .values()
            .all(|x| *x == r(1)));
    }

    #[test]
    fn three_species_example() {
        let sec = TasepSector::new(vec![2, 1, 1, 1]).unwrap();
        let g = build_generator(3, 5, &sec).unwrap();
        assert_eq!(g.dim(), 60);
        assert!(g.column_sums().iter().all(|x| x.is_zero()));
        let v = steady_state_vector(&sec).unwrap();
        let expect = [
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
        for (c, x) in expect {
            assert_eq!(v[&TasepConfig::parse(c, 3).unwrap()], r(x), "{c}");
        }
        assert!(is_positive_integral(&v));
        for (c, x) in &v {
            assert_eq!(&v[&c.rotate()], x);
        }
    }

    #[test]
    fn closed_forms() {
        let sizes = [2, 1, 1, 1];
        assert_eq!(steady_closed_form(3, 1, 2, &sizes).unwrap(), r(6));
        assert_eq!(
            closed_form_config(3, 1, 2, &sizes).unwrap().to_string(),
            "30021"
        );
        assert_eq!(steady_closed_form(3, 2, 2, &sizes).unwrap(), r(4));
        assert_eq!(
            closed_form_config(3, 2, 2, &sizes).unwrap().to_string(),
            "31002"
        );
        assert_eq!(steady_closed_form(3, 3, 2, &sizes).ok(), None);
        assert_eq!(steady_closed_form(2, 1, 2, &[1, 1, 1]).unwrap(), r(1));
    }

    #[test]
    fn csv_export() {
        let sec = TasepSector::new(vec![1, 1]).unwrap();
        let mut buf = Vec::new();
        write_csv(&steady_state_vector(&sec).unwrap(), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "config,value\n01,1\n10,1\n"
        );
    }
}
