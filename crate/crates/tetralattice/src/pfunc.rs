//! Partition-function evaluators: vacuum and dual-state expectation values,
//! plain traces with stabilization detection, and the weighted traces
//! `Tr^A`, `Tr^B` as truncated formal series.
//!
//! Words are evaluated right to left (ket side first) on the lazily reached
//! basis, so vacuum-rooted computations only touch reachable states.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{q_pochhammer, Cap, FormalSeries, LaurentPoly, VarId};
use crate::fock::{triangular_sites, OccupationState};
use crate::vertexmodel::{
    apply_word, basis_vector, LatticeOperator, Model, XOperator, XijOperator, YColumn,
};

/// One factor of an operator word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpSpec {
    /// `X_i^{(n)}(z)`.
    X {
        /// Rank.
        n: usize,
        /// Bottom-boundary index.
        i: usize,
        /// Spectral parameter.
        z: LaurentPoly,
    },
    /// `X_{i,j}^{(n)}` (`q = 0` model only).
    Xij {
        /// Rank.
        n: usize,
        /// Bottom-boundary index.
        i: usize,
        /// Top-boundary count.
        j: usize,
    },
    /// One column of `Y_ℓ^{(ℓ)}` with per-layer parameters.
    YCol {
        /// Layer parameters `z_k^{(1)}, …, z_k^{(ℓ)}`.
        params: Vec<LaurentPoly>,
    },
}

impl fmt::Display for OpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpSpec::X { n, i, z } => write!(f, "X(n={n},i={i},z={z})"),
            OpSpec::Xij { n, i, j } => write!(f, "Xij(n={n},i={i},j={j})"),
            OpSpec::YCol { params } => {
                let ps: Vec<String> = params.iter().map(|p| p.to_string()).collect();
                write!(f, "Y({})", ps.join(";"))
            }
        }
    }
}

/// An ordered product of lattice operators sharing one model and space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorWord {
    /// Factors, leftmost first.
    pub factors: Vec<OpSpec>,
    /// Vertex model used by `X` factors.
    pub model: Model,
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl OperatorWord {
    /// Word of `X` factors `X_{i_1}(z_1) ⋯ X_{i_m}(z_m)` of rank `n`.
    pub fn xs(n: usize, model: Model, factors: &[(usize, LaurentPoly)]) -> Self {
        OperatorWord {
            factors: factors
                .iter()
                .map(|(i, z)| OpSpec::X {
                    n,
                    i: *i,
                    z: z.clone(),
                })
                .collect(),
            model,
        }
    }

    /// Word of `X_{i,j}` factors of rank `n`.
    pub fn xijs(n: usize, factors: &[(usize, usize)]) -> Self {
        OperatorWord {
            factors: factors
                .iter()
                .map(|&(i, j)| OpSpec::Xij { n, i, j })
                .collect(),
            model: Model::q0(),
        }
    }

    /// Product of `Y_ℓ^{(ℓ)}` columns `k = 1..=cols` over the grid `base`.
    pub fn y_columns(layers: usize, base: &str, cols: usize) -> Self {
        let factors = (1..=cols)
            .map(|k| OpSpec::YCol {
                params: (1..=layers)
                    .map(|p| LaurentPoly::var(VarId::grid(base, k, p)))
                    .collect(),
            })
            .collect();
        OperatorWord {
            factors,
            model: Model::generic(),
        }
    }

    /// Number of Fock factors of the underlying space, checking consistency.
    pub fn space_size(&self) -> Result<usize> {
        let mut size: Option<usize> = None;
        for f in &self.factors {
            let s = match f {
                OpSpec::X { n, .. } | OpSpec::Xij { n, .. } => triangular_sites(*n).len(),
                OpSpec::YCol { params } => params.len(),
            };
            if let OpSpec::Xij { .. } = f {
                if !self.model.is_q0() {
                    return Err(Error::Incompatible(
                        "X_ij factors exist only in the q=0 model".into(),
                    ));
                }
            }
            match size {
                None => size = Some(s),
                Some(t) if t != s => {
                    return Err(Error::Incompatible(format!(
                        "factors act on {t} and {s} Fock factors"
                    )))
                }
                _ => {}
            }
        }
        Ok(size.unwrap_or(0))
    }

    /// Instantiate the factors as lattice operators.
    pub fn operators(&self) -> Result<Vec<Box<dyn LatticeOperator>>> {
        self.space_size()?;
        self.factors
            .iter()
            .map(|f| -> Result<Box<dyn LatticeOperator>> {
                Ok(match f {
                    OpSpec::X { n, i, z } => {
                        Box::new(XOperator::new(*n, *i, self.model, z.clone())?)
                    }
                    OpSpec::Xij { n, i, j } => Box::new(XijOperator {
                        n: *n,
                        i: *i,
                        j: *j,
                    }),
                    OpSpec::YCol { params } => Box::new(YColumn::with_params(params.clone())),
                })
            })
            .collect()
    }

    /// Parse a whitespace-separated word such as
    /// `X(n=3,i=2,z=z1) X(n=3,i=1,z=z2)`, `Xij(n=3,i=1,j=2)` or
    /// `Y(l=5,k=1,base=z)`.
    pub fn parse(text: &str, model: Model) -> Result<Self> {
        let mut factors = Vec::new();
        for tok in text.split_whitespace() {
            let (head, rest) = tok
                .split_once('(')
                .ok_or_else(|| Error::Parse(format!("factor `{tok}` lacks `(`")))?;
            let body = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("factor `{tok}` lacks `)`")))?;
            let mut kv = std::collections::HashMap::new();
            for part in body.split(',') {
                let (k, v) = part
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("bad argument `{part}`")))?;
                kv.insert(k.trim().to_string(), v.trim().to_string());
            }
            let int = |k: &str| -> Result<usize> {
                kv.get(k)
                    .ok_or_else(|| Error::Parse(format!("`{head}` needs `{k}=`")))?
                    .parse()
                    .map_err(|_| Error::Parse(format!("`{k}` must be a nonnegative integer")))
            };
            factors.push(match head {
                "X" => OpSpec::X {
                    n: int("n")?,
                    i: int("i")?,
                    z: LaurentPoly::parse(kv.get("z").map(String::as_str).unwrap_or("1"))?,
                },
                "Xij" => OpSpec::Xij {
                    n: int("n")?,
                    i: int("i")?,
                    j: int("j")?,
                },
                "Y" => {
                    let l = int("l")?;
                    let k = int("k")?;
                    let base = kv.get("base").cloned().unwrap_or_else(|| "z".into());
                    OpSpec::YCol {
                        params: (1..=l)
                            .map(|p| LaurentPoly::var(VarId::grid(&base, k, p)))
                            .collect(),
                    }
                }
                other => return Err(Error::Parse(format!("unknown factor `{other}`"))),
            });
        }
        let word = OperatorWord { factors, model };
        word.space_size()?;
        Ok(word)
    }
}

/// Cutoff sufficient for a vacuum-rooted product of `len` operators.
pub fn auto_cutoff(len: usize) -> u32 {
    len as u32 + 1
}

fn refs(ops: &[Box<dyn LatticeOperator>]) -> Vec<&dyn LatticeOperator> {
    ops.iter().map(|b| b.as_ref()).collect()
}

/// `⟨Ω| word |Ω⟩`.
pub fn vacuum_expectation(word: &OperatorWord) -> Result<LaurentPoly> {
    let size = word.space_size()?;
    dual_expectation(&vec![0; size], word)
}

/// `⟨⟨bra| word |Ω⟩` with the normalized dual basis.
pub fn dual_expectation(bra: &[u32], word: &OperatorWord) -> Result<LaurentPoly> {
    let size = word.space_size()?;
    if bra.len() != size {
        return Err(Error::Incompatible(format!(
            "bra has {} factors, word acts on {size}",
            bra.len()
        )));
    }
    let ops = word.operators()?;
    let v = apply_word(
        &refs(&ops),
        &basis_vector(OccupationState::vacuum(size)),
        auto_cutoff(ops.len()),
    )?;
    Ok(v.get(&OccupationState(bra.to_vec()))
        .cloned()
        .unwrap_or_else(LaurentPoly::zero))
}

/// `⟨⟨s| ops |s⟩` with intermediate cutoff `cutoff`.
pub fn diagonal_element(
    ops: &[Box<dyn LatticeOperator>],
    s: &OccupationState,
    cutoff: u32,
) -> Result<LaurentPoly> {
    let v = apply_word(&refs(ops), &basis_vector(s.clone()), cutoff)?;
    Ok(v.get(s).cloned().unwrap_or_else(LaurentPoly::zero))
}

/// Value of a plain trace with its stabilization cutoff.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceResult {
    /// The stabilized trace.
    pub value: LaurentPoly,
    /// Smallest cutoff `M` with `T(M) = T(M+1)`.
    pub stabilized_at: u32,
}

/// Truncated trace `Σ_{s : occ(s) ≤ m} ⟨s| word |s⟩`; intermediate states may
/// exceed `m` by at most the word length, so no creation is ever dropped.
pub fn truncated_trace(word: &OperatorWord, m: u32) -> Result<LaurentPoly> {
    let size = word.space_size()?;
    let ops = word.operators()?;
    let cutoff = m + ops.len() as u32;
    let mut total = LaurentPoly::zero();
    for s in OccupationState::all_bounded(size, m) {
        total += &diagonal_element(&ops, &s, cutoff)?;
    }
    Ok(total)
}

/// Plain trace `Tr(word)` over `⊗ F`, detected as stable once two
/// consecutive truncations agree.
pub fn plain_trace(word: &OperatorWord, m_start: u32, m_max: u32) -> Result<TraceResult> {
    if !word.model.is_q0() {
        return Err(Error::Incompatible(
            "plain traces are defined for the q=0 model".into(),
        ));
    }
    let size = word.space_size()?;
    let ops = word.operators()?;
    // Accumulate shell by shell: T(M) = T(M-1) + Σ_{max occ = M}.
    let mut prev: Option<LaurentPoly> = None;
    let mut total = LaurentPoly::zero();
    for m in 0..=m_max {
        let cutoff = m_max + ops.len() as u32;
        for s in OccupationState::all_bounded(size, m) {
            if s.max_occupation() == m {
                total += &diagonal_element(&ops, &s, cutoff)?;
            }
        }
        if m >= m_start {
            if let Some(p) = &prev {
                if *p == total {
                    return Ok(TraceResult {
                        value: total,
                        stabilized_at: m - 1,
                    });
                }
            }
            prev = Some(total.clone());
        }
    }
    Err(Error::NotStabilized(m_max))
}

/// Kind of weighted trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TraceKind {
    /// Site weight `t^m/(Q;Q)_m`.
    A,
    /// Site weight `Q^{m(m−1)/2} t^m/(Q;Q)_m`.
    B,
}

/// Per-site weight variables for a weighted trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceWeights {
    /// `t_{j,k}` per site (canonical site order).
    pub t: Vec<VarId>,
    /// `Q_{j,k}` per site.
    pub q: Vec<VarId>,
    /// Trace kind.
    pub kind: TraceKind,
}

impl TraceWeights {
    /// Variables `t{j}{k}`, `Q{j}{k}` on `D_n`.
    pub fn standard(n: usize, kind: TraceKind) -> Self {
        let sites = triangular_sites(n);
        TraceWeights {
            t: sites
                .iter()
                .map(|s| VarId::new(&format!("t{}{}", s.k, s.l)))
                .collect(),
            q: sites
                .iter()
                .map(|s| VarId::new(&format!("Q{}{}", s.k, s.l)))
                .collect(),
            kind,
        }
    }

    /// Caps `{t_s, Q_s} ≤ d`, one group per site.
    pub fn caps(&self, d: i32) -> Vec<Cap> {
        self.t
            .iter()
            .zip(&self.q)
            .map(|(&t, &q)| Cap::new(vec![t, q], d))
            .collect()
    }

    /// The site weight of occupation `m` at site `s` as a capped series.
    pub fn site_weight(&self, s: usize, m: u32, caps: &[Cap]) -> Result<FormalSeries> {
        let t = LaurentPoly::var(self.t[s]);
        let q = LaurentPoly::var(self.q[s]);
        let den = FormalSeries::new(q_pochhammer(&q, &q, m as usize), caps.to_vec()).inverse()?;
        let mut num = t.pow(m as i32)?;
        if self.kind == TraceKind::B {
            num = &num * &q.pow((m * m.saturating_sub(1) / 2) as i32)?;
        }
        Ok(den.mul_poly(&num))
    }
}

/// Multi-weighted trace `Tr^{A|B}_{t,Q}(word)` truncated at total degree `d`
/// in each site's `{t, Q}` group. Occupations above `d` only contribute
/// beyond the caps, so the occupation sum is cut at `d`.
pub fn weighted_trace(word: &OperatorWord, weights: &TraceWeights, d: i32) -> Result<FormalSeries> {
    let size = word.space_size()?;
    if weights.t.len() != size || weights.q.len() != size {
        return Err(Error::Incompatible(
            "one weight pair per site is required".into(),
        ));
    }
    let caps = weights.caps(d);
    let ops = word.operators()?;
    let cutoff = d as u32 + ops.len() as u32;
    // Site weights per occupation, cached.
    let mut site_w: Vec<Vec<FormalSeries>> = Vec::with_capacity(size);
    for s in 0..size {
        site_w.push(
            (0..=d as u32)
                .map(|m| weights.site_weight(s, m, &caps))
                .collect::<Result<_>>()?,
        );
    }
    let mut total = FormalSeries::zero(caps.clone());
    for st in OccupationState::all_bounded(size, d as u32) {
        let x = diagonal_element(&ops, &st, cutoff)?;
        if x.is_zero() {
            continue;
        }
        let mut w = FormalSeries::new(x, caps.clone());
        for (s, &m) in st.0.iter().enumerate() {
            w = w.mul(&site_w[s][m as usize]);
        }
        total = total.add(&w);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q_pochhammer_series;

    fn v(s: &str) -> LaurentPoly {
        LaurentPoly::var(VarId::new(s))
    }

    #[test]
    fn vacuum_expectation_examples() {
        let w = OperatorWord::xs(3, Model::q0(), &[(1, v("z1")), (2, v("z2")), (3, v("z3"))]);
        assert_eq!(
            vacuum_expectation(&w).unwrap(),
            LaurentPoly::parse("z1*z2^2*z3^3").unwrap()
        );
        let empty = OperatorWord {
            factors: vec![],
            model: Model::q0(),
        };
        assert!(vacuum_expectation(&empty).unwrap().is_one());
        let w = OperatorWord::xs(3, Model::q0(), &[(2, v("z1")), (1, v("z2"))]);
        assert_eq!(
            vacuum_expectation(&w).unwrap(),
            LaurentPoly::parse("z1^2*z2").unwrap()
        );
    }

    #[test]
    fn parse_word() {
        let w = OperatorWord::parse("X(n=3,i=2,z=z1) X(n=3,i=1,z=z2)", Model::q0()).unwrap();
        assert_eq!(
            w,
            OperatorWord::xs(3, Model::q0(), &[(2, v("z1")), (1, v("z2"))])
        );
        assert!(OperatorWord::parse("X(n=3,i=2) X(n=4,i=1)", Model::q0()).is_err());
        assert!(OperatorWord::parse("Q(n=3)", Model::q0()).is_err());
    }

    #[test]
    fn trace_examples() {
        let one = LaurentPoly::one();
        let w = OperatorWord::xs(
            3,
            Model::q0(),
            &[(3, v("z3")), (2, v("z2")), (1, v("z1")), (0, v("z0"))],
        );
        assert_eq!(
            plain_trace(&w, 1, 8).unwrap().value,
            LaurentPoly::parse("z1*z2^2*z3^3").unwrap()
        );
        let w = OperatorWord::xs(
            3,
            Model::q0(),
            &[
                (3, one.clone()),
                (0, one.clone()),
                (0, one.clone()),
                (2, one.clone()),
                (1, one),
            ],
        );
        assert_eq!(plain_trace(&w, 1, 8).unwrap().value, LaurentPoly::int(6));
    }

    #[test]
    fn trace_without_all_species_does_not_stabilize() {
        let w = OperatorWord::xs(3, Model::q0(), &[(1, LaurentPoly::one())]);
        assert!(matches!(
            plain_trace(&w, 1, 4),
            Err(Error::NotStabilized(4))
        ));
    }

    #[test]
    fn weighted_trace_of_empty_word_is_a_summation_formula() {
        let empty = OperatorWord {
            factors: vec![],
            model: Model::generic(),
        };
        let t = VarId::new("wt_t");
        let q = VarId::new("wt_Q");
        for kind in [TraceKind::A, TraceKind::B] {
            let weights = TraceWeights {
                t: vec![t],
                q: vec![q],
                kind,
            };
            let caps = weights.caps(3);
            // Single-site space: use a one-line Y column product of length 0.
            let word = OperatorWord {
                factors: vec![OpSpec::YCol {
                    params: vec![LaurentPoly::zero()],
                }],
                ..empty.clone()
            };
            let got = weighted_trace(&word, &weights, 3).unwrap();
            let expect = match kind {
                TraceKind::A => {
                    q_pochhammer_series(&LaurentPoly::var(t), &LaurentPoly::var(q), &caps)
                        .unwrap()
                        .inverse()
                        .unwrap()
                }
                TraceKind::B => {
                    q_pochhammer_series(&-LaurentPoly::var(t), &LaurentPoly::var(q), &caps).unwrap()
                }
            };
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn y_columns_reproduce_binary_loop_example() {
        let w = OperatorWord::y_columns(5, "z", 3);
        let got = dual_expectation(&[1, 0, 0, 1, 0], &w).unwrap();
        let expect = LaurentPoly::parse(
            "z1^(1)*z2^(4) + q*z1^(4)*z2^(1) + z1^(1)*z3^(4) + q*z1^(4)*z3^(1) + z2^(1)*z3^(4) + q*z2^(4)*z3^(1)",
        )
        .unwrap();
        assert_eq!(got, expect);
    }
}
