//! Operator-valued vertex models on the triangular array `D_n`.
//!
//! Each vertex `(k, ℓ)` carries a Fock factor and an L-operator with two
//! binary edges in (`i` from the left, `j` from below) and two out (`a` to
//! the right, `b` upwards). The X-operator `X_i^{(n)}(z)` sums over all edge
//! colourings with bottom boundary `β = (1^i, 0^{n−i})`, free left and top
//! boundaries, and the right boundary of column `ℓ` fixed by `β_{ℓ+1}`.
//!
//! Lattice geometry: the `j` input of `(k, ℓ)` is the `b` output of
//! `(k+1, ℓ)`, or `β_ℓ` when that vertex is outside `D_n`; the `a` output of
//! `(k, ℓ)` is the `i` input of `(k, ℓ+1)`, or `β_{ℓ+1}` when that vertex is
//! outside `D_n`. Column `n` carries no vertex, so its edge passes straight
//! through with colour `β_n`.
//!
//! Evaluation is a transfer contraction, vertex by vertex along
//! anti-diagonals `k+ℓ = n, n−1, …, 2`. Partial configurations are merged
//! whenever their pending edge colours and occupation vectors coincide, so
//! the cost is governed by the number of distinct frontiers rather than the
//! number of colourings. [`apply_x_by_enumeration`] is an independent
//! depth-first enumeration in a different order, used to check that the
//! total is traversal-independent.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, VarId};
use crate::fock::{
    site_action, site_index, triangular_sites, OccupationState, QPoly, Site, SiteOpKind,
};

/// Which L-operator is placed at every vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// Five-vertex model with the `b⁺, b⁻, t` oscillator; `z` enters only as
    /// the top-boundary weight `z^{Σα}`.
    Q0,
    /// Six-vertex model with the `a⁺, a⁻, k` oscillator; `z` enters through
    /// `L(z)` at every vertex.
    Generic,
}

/// A vertex model: the L-operator kind plus the coefficient of `q·k` on the
/// sixth vertex (`−1` in the model; other values only for mutation tests).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Model {
    /// L-operator family.
    pub kind: ModelKind,
    /// Coefficient `c` of the sixth vertex element `c·q·k` (generic only).
    pub sixth_sign: i8,
}

impl Model {
    /// The `q = 0` five-vertex model.
    pub const fn q0() -> Self {
        Model {
            kind: ModelKind::Q0,
            sixth_sign: -1,
        }
    }

    /// The generic-`q` six-vertex model.
    pub const fn generic() -> Self {
        Model {
            kind: ModelKind::Generic,
            sixth_sign: -1,
        }
    }

    /// The generic model with the sign of the `−q·k` vertex flipped.
    pub const fn generic_mutated() -> Self {
        Model {
            kind: ModelKind::Generic,
            sixth_sign: 1,
        }
    }

    /// True for [`ModelKind::Q0`].
    pub fn is_q0(&self) -> bool {
        self.kind == ModelKind::Q0
    }
}

/// An edge colour: 0 (blue) or 1 (red).
pub type EdgeColor = u8;

/// Non-vanishing L-operator elements, keyed by `(i, j, a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexType {
    /// `(0,0,0,0)`: identity.
    Empty,
    /// `(1,1,1,1)`: identity.
    Full,
    /// `(1,0,0,1)`: `b⁺` / `z·a⁺`.
    Create,
    /// `(0,1,1,0)`: `b⁻` / `z⁻¹·a⁻`.
    Annihilate,
    /// `(0,1,0,1)`: `t` / `k`.
    Pass,
    /// `(1,0,1,0)`: absent / `−q·k`.
    Sixth,
}

/// The six vertex types with their edge colours `(i, j, a, b)`.
pub const VERTICES: [((EdgeColor, EdgeColor, EdgeColor, EdgeColor), VertexType); 6] = [
    ((0, 0, 0, 0), VertexType::Empty),
    ((1, 1, 1, 1), VertexType::Full),
    ((1, 0, 0, 1), VertexType::Create),
    ((0, 1, 1, 0), VertexType::Annihilate),
    ((0, 1, 0, 1), VertexType::Pass),
    ((1, 0, 1, 0), VertexType::Sixth),
];

/// One vertex weight: a site operator, a power of the spectral parameter and
/// a `q`-power with an integer coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LElement {
    /// Operator on the vertex's Fock factor.
    pub site_op: SiteOpKind,
    /// Exponent of the spectral parameter.
    pub z_exp: i32,
    /// Scalar `coeff·q^{q_exp}`.
    pub coeff: i8,
    /// Exponent of `q` in the scalar.
    pub q_exp: u8,
}

impl Model {
    /// The weight of a vertex type, or `None` where it vanishes.
    pub fn element(&self, v: VertexType) -> Option<LElement> {
        use SiteOpKind::*;
        let el = |site_op, z_exp, coeff, q_exp| {
            Some(LElement {
                site_op,
                z_exp,
                coeff,
                q_exp,
            })
        };
        match (self.kind, v) {
            (_, VertexType::Empty) | (_, VertexType::Full) => el(Id, 0, 1, 0),
            (ModelKind::Q0, VertexType::Create) => el(BPlus, 0, 1, 0),
            (ModelKind::Q0, VertexType::Annihilate) => el(BMinus, 0, 1, 0),
            (ModelKind::Q0, VertexType::Pass) => el(TProj, 0, 1, 0),
            (ModelKind::Q0, VertexType::Sixth) => None,
            (ModelKind::Generic, VertexType::Create) => el(APlus, 1, 1, 0),
            (ModelKind::Generic, VertexType::Annihilate) => el(AMinus, -1, 1, 0),
            (ModelKind::Generic, VertexType::Pass) => el(Kdiag, 0, 1, 0),
            (ModelKind::Generic, VertexType::Sixth) => el(Kdiag, 0, self.sixth_sign, 1),
        }
    }
}

/// Exact weight of a partial or complete colouring: spectral exponent ↦
/// polynomial in `q` with integer coefficients.
pub type ZqWeight = BTreeMap<i32, QPoly>;

fn weight_mul_elem(w: &ZqWeight, z_shift: i32, f: &QPoly) -> ZqWeight {
    w.iter()
        .map(|(&e, p)| (e + z_shift, p.mul(f)))
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

fn weight_add(acc: &mut ZqWeight, w: &ZqWeight) {
    for (&e, p) in w {
        let slot = acc.entry(e).or_default();
        slot.add_assign(p);
    }
    acc.retain(|_, p| !p.is_zero());
}

/// Evaluate a [`ZqWeight`] at spectral parameter `z` (any Laurent
/// polynomial; negative exponents need `z` to be a single term) with `q`
/// symbolic.
pub fn weight_to_laurent(w: &ZqWeight, z: &LaurentPoly) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for (&e, p) in w {
        out += &(&z.pow(e)? * &p.to_laurent());
    }
    Ok(out)
}

/// Result of applying a lattice operator to one basis state.
pub type StateImage = Vec<(OccupationState, ZqWeight)>;

fn beta(n: usize, i: usize, l: usize) -> EdgeColor {
    // β_ℓ for 1 ≤ ℓ ≤ n.
    debug_assert!(l >= 1 && l <= n);
    u8::from(l <= i)
}

/// Anti-diagonal processing order of the vertices of `D_n`.
fn antidiagonal_order(n: usize) -> Vec<Site> {
    let mut s = triangular_sites(n);
    s.sort_by_key(|site| (std::cmp::Reverse(site.k + site.l), site.k));
    s
}

/// Apply `X_i^{(n)}` to a basis state by transfer contraction.
///
/// Returns output states with exact [`ZqWeight`] coefficients. In the `q = 0`
/// model the spectral exponent is the top-boundary count `Σα`; in the generic
/// model it is the net number of creations minus annihilations.
pub fn apply_x_transfer(
    n: usize,
    i: usize,
    model: Model,
    state: &OccupationState,
    cutoff: u32,
) -> Result<StateImage> {
    if i > n {
        return Err(Error::OutOfRange(format!("X index {i} > rank {n}")));
    }
    let sites = triangular_sites(n);
    if state.0.len() != sites.len() {
        return Err(Error::Incompatible(format!(
            "state has {} factors, D_{n} has {}",
            state.0.len(),
            sites.len()
        )));
    }
    if n < 2 {
        // D_1 is empty; X_i^{(1)} = z^{β_1} (q0) or 1 (generic).
        let mut w = ZqWeight::new();
        let e = if model.is_q0() && n == 1 { i as i32 } else { 0 };
        w.insert(e, QPoly::constant(1));
        return Ok(vec![(state.clone(), w)]);
    }
    // Frontier key: pending `i` outputs and `b` outputs as bitmasks over the
    // canonical site index, plus the occupation vector.
    type Key = (u64, u64, Vec<u32>);
    let mut layer: HashMap<Key, ZqWeight> = HashMap::new();
    let mut seed = ZqWeight::new();
    // In the q0 model the edge of column n reaches the top boundary directly.
    let top_fixed = if model.is_q0() {
        beta(n, i, n) as i32
    } else {
        0
    };
    seed.insert(top_fixed, QPoly::constant(1));
    layer.insert((0, 0, state.0.clone()), seed);
    for site in antidiagonal_order(n) {
        let (k, l) = (site.k, site.l);
        let idx = site_index(n, k, l).expect("site in D_n");
        let below = site_index(n, k + 1, l);
        let right = site_index(n, k, l + 1);
        let mut next: HashMap<Key, ZqWeight> = HashMap::with_capacity(layer.len() * 2);
        for ((imask, bmask, occ), w) in layer {
            let j_in = match below {
                Some(b) => ((bmask >> b) & 1) as u8,
                None => beta(n, i, l),
            };
            let a_out = match right {
                Some(r) => ((imask >> r) & 1) as u8,
                None => beta(n, i, l + 1),
            };
            let imask = right.map_or(imask, |r| imask & !(1u64 << r));
            let bmask = below.map_or(bmask, |b| bmask & !(1u64 << b));
            for &((ii, jj, aa, bb), vt) in &VERTICES {
                if jj != j_in || aa != a_out {
                    continue;
                }
                let Some(el) = model.element(vt) else {
                    continue;
                };
                let Some((m2, f)) = site_action(el.site_op, occ[idx], cutoff, (k, l))? else {
                    continue;
                };
                let f = f.mul(&QPoly::monomial(el.coeff as i128, el.q_exp as usize));
                let mut z_shift = el.z_exp;
                let mut imask2 = imask;
                let mut bmask2 = bmask;
                // Left boundary edges are summed freely and need not be stored.
                if l > 1 && ii == 1 {
                    imask2 |= 1u64 << idx;
                }
                if k > 1 {
                    if bb == 1 {
                        bmask2 |= 1u64 << idx;
                    }
                } else if model.is_q0() {
                    z_shift += bb as i32;
                }
                let mut occ2 = occ.clone();
                occ2[idx] = m2;
                let w2 = weight_mul_elem(&w, z_shift, &f);
                if w2.is_empty() {
                    continue;
                }
                weight_add(next.entry((imask2, bmask2, occ2)).or_default(), &w2);
            }
        }
        layer = next;
    }
    let mut out: BTreeMap<OccupationState, ZqWeight> = BTreeMap::new();
    for ((imask, bmask, occ), w) in layer {
        debug_assert_eq!((imask, bmask), (0, 0), "every internal edge consumed");
        weight_add(out.entry(OccupationState(occ)).or_default(), &w);
    }
    Ok(out.into_iter().filter(|(_, w)| !w.is_empty()).collect())
}

/// Apply `X_i^{(n)}` to a basis state by plain depth-first enumeration of
/// colourings, visiting vertices row by row from the bottom row upwards.
///
/// Independent of [`apply_x_transfer`]; exponential, for cross-checks only.
pub fn apply_x_by_enumeration(
    n: usize,
    i: usize,
    model: Model,
    state: &OccupationState,
    cutoff: u32,
) -> Result<StateImage> {
    let sites = triangular_sites(n);
    let mut order = sites.clone();
    // Bottom row (largest k) first, right to left within a row: both inputs
    // from below and outputs to the right are then decided before use.
    order.sort_by_key(|s| (std::cmp::Reverse(s.k), std::cmp::Reverse(s.l)));
    let mut acc: BTreeMap<OccupationState, ZqWeight> = BTreeMap::new();
    let mut i_col = vec![0u8; sites.len()];
    let mut b_col = vec![0u8; sites.len()];
    struct Ctx<'a> {
        n: usize,
        i: usize,
        model: Model,
        cutoff: u32,
        order: &'a [Site],
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        c: &Ctx<'_>,
        pos: usize,
        occ: &mut Vec<u32>,
        i_col: &mut Vec<u8>,
        b_col: &mut Vec<u8>,
        z_exp: i32,
        f: QPoly,
        acc: &mut BTreeMap<OccupationState, ZqWeight>,
    ) -> Result<()> {
        if pos == c.order.len() {
            let mut z = z_exp;
            if c.model.is_q0() {
                z += (1..c.n)
                    .map(|l| b_col[site_index(c.n, 1, l).unwrap()] as i32)
                    .sum::<i32>();
                z += beta(c.n, c.i, c.n) as i32;
            }
            let mut w = ZqWeight::new();
            w.insert(z, f);
            weight_add(acc.entry(OccupationState(occ.clone())).or_default(), &w);
            return Ok(());
        }
        let Site { k, l } = c.order[pos];
        let idx = site_index(c.n, k, l).unwrap();
        let j_in = site_index(c.n, k + 1, l).map_or(beta(c.n, c.i, l), |b| b_col[b]);
        let a_out = site_index(c.n, k, l + 1).map_or(beta(c.n, c.i, l + 1), |r| i_col[r]);
        for &((ii, jj, aa, bb), vt) in &VERTICES {
            if jj != j_in || aa != a_out {
                continue;
            }
            let Some(el) = c.model.element(vt) else {
                continue;
            };
            let m = occ[idx];
            let Some((m2, g)) = site_action(el.site_op, m, c.cutoff, (k, l))? else {
                continue;
            };
            let g = g.mul(&QPoly::monomial(el.coeff as i128, el.q_exp as usize));
            occ[idx] = m2;
            i_col[idx] = ii;
            b_col[idx] = bb;
            rec(
                c,
                pos + 1,
                occ,
                i_col,
                b_col,
                z_exp + el.z_exp,
                f.mul(&g),
                acc,
            )?;
            occ[idx] = m;
        }
        Ok(())
    }
    if n < 2 {
        return apply_x_transfer(n, i, model, state, cutoff);
    }
    let ctx = Ctx {
        n,
        i,
        model,
        cutoff,
        order: &order,
    };
    let mut occ = state.0.clone();
    rec(
        &ctx,
        0,
        &mut occ,
        &mut i_col,
        &mut b_col,
        0,
        QPoly::constant(1),
        &mut acc,
    )?;
    Ok(acc.into_iter().filter(|(_, w)| !w.is_empty()).collect())
}

/// A vector in the truncated multi-Fock space.
pub type FockVector = BTreeMap<OccupationState, LaurentPoly>;

/// The basis vector `|s⟩`.
pub fn basis_vector(s: OccupationState) -> FockVector {
    let mut v = FockVector::new();
    v.insert(s, LaurentPoly::one());
    v
}

fn add_into(acc: &mut FockVector, s: OccupationState, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    match acc.entry(s) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Linear combination `Σ c_k v_k` of vectors.
pub fn combine(terms: &[(LaurentPoly, FockVector)]) -> FockVector {
    let mut acc = FockVector::new();
    for (c, v) in terms {
        for (s, x) in v {
            add_into(&mut acc, s.clone(), c * x);
        }
    }
    acc
}

/// A lattice operator that can act on Fock vectors.
pub trait LatticeOperator: Send + Sync {
    /// Number of Fock factors acted on.
    fn factors(&self) -> usize;
    /// Image of one basis state.
    fn apply_state(
        &self,
        s: &OccupationState,
        cutoff: u32,
    ) -> Result<Vec<(OccupationState, LaurentPoly)>>;
    /// Human-readable label.
    fn label(&self) -> String;

    /// Linear extension to vectors.
    fn apply(&self, v: &FockVector, cutoff: u32) -> Result<FockVector> {
        let mut acc = FockVector::new();
        for (s, c) in v {
            for (s2, w) in self.apply_state(s, cutoff)? {
                add_into(&mut acc, s2, c * &w);
            }
        }
        Ok(acc)
    }
}

/// `X_i^{(n)}(z)` for a given model and spectral parameter.
///
/// The spectral parameter may be any Laurent polynomial (a variable, a
/// rational point, or `1`). State images are memoized per cutoff.
pub struct XOperator {
    /// Rank.
    pub n: usize,
    /// Bottom-boundary index.
    pub i: usize,
    /// Vertex model.
    pub model: Model,
    /// Spectral parameter.
    pub z: LaurentPoly,
    cache: Mutex<HashMap<(OccupationState, u32), Vec<(OccupationState, LaurentPoly)>>>,
}

impl XOperator {
    /// New X-operator.
    pub fn new(n: usize, i: usize, model: Model, z: LaurentPoly) -> Result<Self> {
        if i > n {
            return Err(Error::OutOfRange(format!("X index {i} > rank {n}")));
        }
        Ok(XOperator {
            n,
            i,
            model,
            z,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// X-operator with a symbolic spectral variable.
    pub fn with_var(n: usize, i: usize, model: Model, z: VarId) -> Result<Self> {
        XOperator::new(n, i, model, LaurentPoly::var(z))
    }
}

impl LatticeOperator for XOperator {
    fn factors(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    fn apply_state(
        &self,
        s: &OccupationState,
        cutoff: u32,
    ) -> Result<Vec<(OccupationState, LaurentPoly)>> {
        let key = (s.clone(), cutoff);
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let img = apply_x_transfer(self.n, self.i, self.model, s, cutoff)?;
        let mut out = Vec::with_capacity(img.len());
        for (s2, w) in img {
            let c = weight_to_laurent(&w, &self.z)?;
            if !c.is_zero() {
                out.push((s2, c));
            }
        }
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(key, out.clone());
        Ok(out)
    }

    fn label(&self) -> String {
        let m = if self.model.is_q0() { "q0" } else { "generic" };
        format!("X(n={},i={},z={},{m})", self.n, self.i, self.z)
    }
}

/// The `z`-independent component `X_{i,j}^{(n)}` of the `q = 0` X-operator,
/// with `X_i^{(n)}(z) = Σ_j z^j X_{i,j}^{(n)}`.
pub struct XijOperator {
    /// Rank.
    pub n: usize,
    /// Bottom-boundary index.
    pub i: usize,
    /// Top-boundary count.
    pub j: usize,
}

impl LatticeOperator for XijOperator {
    fn factors(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    fn apply_state(
        &self,
        s: &OccupationState,
        cutoff: u32,
    ) -> Result<Vec<(OccupationState, LaurentPoly)>> {
        if self.j > self.n {
            return Ok(Vec::new());
        }
        let img = apply_x_transfer(self.n, self.i, Model::q0(), s, cutoff)?;
        Ok(img
            .into_iter()
            .filter_map(|(s2, w)| {
                let c = w.get(&(self.j as i32))?.at_zero();
                (c != 0).then(|| (s2, LaurentPoly::from(c as i64)))
            })
            .collect())
    }

    fn label(&self) -> String {
        format!("Xij(n={},i={},j={})", self.n, self.i, self.j)
    }
}

/// Build `X_i^{(n)}(z)` (see [`XOperator`]).
pub fn build_x_operator(n: usize, i: usize, z: VarId, model: Model) -> Result<XOperator> {
    XOperator::with_var(n, i, model, z)
}

/// Build `X_{i,j}^{(n)}` (see [`XijOperator`]).
pub fn build_x_ij(n: usize, i: usize, j: usize) -> Result<XijOperator> {
    if i > n {
        return Err(Error::OutOfRange(format!("X index {i} > rank {n}")));
    }
    Ok(XijOperator { n, i, j })
}

/// One column of `Y_ℓ^{(ℓ)}`: a vertical line crossing the `ℓ` Fock lines of
/// the layers, entering at the bottom layer `ℓ` with colour 0 and leaving at
/// layer 1.
///
/// Boundary convention: every horizontal output edge is fixed to colour 0,
/// the horizontal inputs are summed. Hence only three local configurations
/// occur: with vertical colour 0 either the empty vertex (identity) or the
/// creation vertex `z_k^{(p)} a⁺_p`, after which the line is red; with
/// vertical colour 1 the pass vertex `k_p`. The column acts as
/// `1 + Σ_p z_k^{(p)} a⁺_p ∏_{r<p} k_r`. This is the unique convention with
/// the three-configuration property that reproduces the `[m]_q! e_m`
/// corollary and the worked `⟨⟨10010|` example.
pub struct YColumn {
    /// Number of layers `ℓ`.
    pub layers: usize,
    /// Spectral parameters `z_k^{(p)}`, `p = 1..=ℓ`.
    pub params: Vec<LaurentPoly>,
}

impl YColumn {
    /// Column `k` with grid variables `base{k}^(p)`.
    pub fn grid(layers: usize, base: &str, k: usize) -> Self {
        let params = (1..=layers)
            .map(|p| LaurentPoly::var(VarId::grid(base, k, p)))
            .collect();
        YColumn { layers, params }
    }

    /// Column with explicit per-layer parameters.
    pub fn with_params(params: Vec<LaurentPoly>) -> Self {
        YColumn {
            layers: params.len(),
            params,
        }
    }
}

impl LatticeOperator for YColumn {
    fn factors(&self) -> usize {
        self.layers
    }

    fn apply_state(
        &self,
        s: &OccupationState,
        cutoff: u32,
    ) -> Result<Vec<(OccupationState, LaurentPoly)>> {
        if s.0.len() != self.layers {
            return Err(Error::Incompatible(format!(
                "state has {} lines, column has {}",
                s.0.len(),
                self.layers
            )));
        }
        let mut out = vec![(s.clone(), LaurentPoly::one())];
        // Creation at layer p (1-based), then k on layers p-1, ..., 1.
        for p in 1..=self.layers {
            let Some((m2, _)) = site_action(SiteOpKind::APlus, s.0[p - 1], cutoff, (p, 0))? else {
                continue;
            };
            let q_exp: u32 = s.0[..p - 1].iter().sum();
            let mut s2 = s.clone();
            s2.0[p - 1] = m2;
            let c = &self.params[p - 1] * &LaurentPoly::var_pow(VarId::q(), q_exp as i32);
            out.push((s2, c));
        }
        Ok(out)
    }

    fn label(&self) -> String {
        let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        format!("Ycol({})", ps.join(","))
    }
}

/// Column factory for `Y_ℓ^{(ℓ)}` over the grid `base{k}^(p)`.
pub fn build_y_operator(layers: usize, base: &str) -> impl Fn(usize) -> YColumn + '_ {
    move |k| YColumn::grid(layers, base, k)
}

/// A finitely supported operator materialized on an explicit set of input
/// states: `action[s]` is the image of `|s⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOperator {
    /// Column images.
    pub action: BTreeMap<OccupationState, FockVector>,
    /// Number of Fock factors.
    pub factors: usize,
}

impl SparseOperator {
    /// Materialize `op` on the given input states.
    pub fn materialize(
        op: &dyn LatticeOperator,
        inputs: &[OccupationState],
        cutoff: u32,
    ) -> Result<Self> {
        let mut action = BTreeMap::new();
        for s in inputs {
            action.insert(s.clone(), op.apply(&basis_vector(s.clone()), cutoff)?);
        }
        Ok(SparseOperator {
            action,
            factors: op.factors(),
        })
    }

    /// Identity on the given states.
    pub fn identity(inputs: &[OccupationState], factors: usize) -> Self {
        SparseOperator {
            action: inputs
                .iter()
                .map(|s| (s.clone(), basis_vector(s.clone())))
                .collect(),
            factors,
        }
    }

    /// Image of a vector supported on materialized inputs.
    pub fn apply(&self, v: &FockVector) -> Result<FockVector> {
        let mut acc = FockVector::new();
        for (s, c) in v {
            let img = self
                .action
                .get(s)
                .ok_or_else(|| Error::Incompatible(format!("operator not materialized on {s}")))?;
            for (s2, x) in img {
                add_into(&mut acc, s2.clone(), c * x);
            }
        }
        Ok(acc)
    }

    /// `self ∘ other`: requires `self` materialized on the image of `other`.
    pub fn compose(&self, other: &SparseOperator) -> Result<SparseOperator> {
        if self.factors != other.factors {
            return Err(Error::Incompatible(
                "operators act on different spaces".into(),
            ));
        }
        let mut action = BTreeMap::new();
        for (s, v) in &other.action {
            action.insert(s.clone(), self.apply(v)?);
        }
        Ok(SparseOperator {
            action,
            factors: self.factors,
        })
    }

    /// `self − other` on the common inputs.
    pub fn difference(&self, other: &SparseOperator) -> SparseOperator {
        let mut action = BTreeMap::new();
        for (s, v) in &self.action {
            let w = other.action.get(s).cloned().unwrap_or_default();
            action.insert(
                s.clone(),
                combine(&[(LaurentPoly::one(), v.clone()), (-LaurentPoly::one(), w)]),
            );
        }
        SparseOperator {
            action,
            factors: self.factors,
        }
    }

    /// True when every materialized image vanishes.
    pub fn is_zero(&self) -> bool {
        self.action.values().all(|v| v.is_empty())
    }

    /// Sorted `(in, out, coefficient)` triples in canonical text form.
    pub fn dump(&self) -> Vec<(String, String, String)> {
        let mut out = Vec::new();
        for (s, v) in &self.action {
            for (s2, c) in v {
                out.push((s.to_string(), s2.to_string(), c.to_canonical()));
            }
        }
        out
    }
}

/// Apply a word of operators (rightmost first) to a vector.
pub fn apply_word(
    word: &[&dyn LatticeOperator],
    v: &FockVector,
    cutoff: u32,
) -> Result<FockVector> {
    let mut cur = v.clone();
    for op in word.iter().rev() {
        cur = op.apply(&cur, cutoff)?;
        if cur.is_empty() {
            break;
        }
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> LaurentPoly {
        LaurentPoly::var(VarId::new("z"))
    }

    fn image(op: &dyn LatticeOperator, s: OccupationState, cutoff: u32) -> FockVector {
        op.apply(&basis_vector(s), cutoff).unwrap()
    }

    #[test]
    fn q0_rank_two_on_vacuum() {
        // D_2 = {(1,1)}: X_0(z)|Ω⟩ = |Ω⟩ + z b⁺|Ω⟩.
        let x = XOperator::new(2, 0, Model::q0(), z()).unwrap();
        let v = image(&x, OccupationState::vacuum(1), 3);
        assert_eq!(v.len(), 2);
        assert!(v[&OccupationState(vec![0])].is_one());
        assert_eq!(v[&OccupationState(vec![1])], z());
    }

    #[test]
    fn generic_rank_three_matches_explicit_operators() {
        // X_1^{(3)}(z) = a⁺₁₂a⁻₁₁k₂₁ + z a⁺₁₂k₂₁ + k₁₁k₂₁, site order (1,1),(1,2),(2,1).
        let x = XOperator::new(3, 1, Model::generic(), z()).unwrap();
        let s = OccupationState(vec![1, 0, 2]);
        let v = image(&x, s, 5);
        let p = |t: &str| LaurentPoly::parse(t).unwrap();
        let mut expect = FockVector::new();
        expect.insert(OccupationState(vec![0, 1, 2]), p("q^2 - q^4"));
        expect.insert(OccupationState(vec![1, 1, 2]), &z() * &p("q^2"));
        expect.insert(OccupationState(vec![1, 0, 2]), p("q^3"));
        assert_eq!(v, expect);
    }

    #[test]
    fn transfer_matches_enumeration() {
        for n in 2..=4 {
            let len = n * (n - 1) / 2;
            for s in OccupationState::all_bounded(len, 1) {
                for i in 0..=n {
                    for model in [Model::q0(), Model::generic()] {
                        let a = apply_x_transfer(n, i, model, &s, 4).unwrap();
                        let b = apply_x_by_enumeration(n, i, model, &s, 4).unwrap();
                        assert_eq!(a, b, "n={n} i={i} {model:?} {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn xij_sum_reconstructs_x() {
        let x = XOperator::new(3, 1, Model::q0(), z()).unwrap();
        for s in OccupationState::all_bounded(3, 1) {
            let lhs = image(&x, s.clone(), 3);
            let terms: Vec<(LaurentPoly, FockVector)> = (0..=3)
                .map(|j| {
                    (
                        z().pow(j as i32).unwrap(),
                        image(&build_x_ij(3, 1, j).unwrap(), s.clone(), 3),
                    )
                })
                .collect();
            assert_eq!(lhs, combine(&terms));
        }
        let v = image(&build_x_ij(3, 3, 3).unwrap(), OccupationState::vacuum(3), 3);
        assert_eq!(v, basis_vector(OccupationState::vacuum(3)));
        assert!(image(&build_x_ij(3, 0, 4).unwrap(), OccupationState::vacuum(3), 3).is_empty());
    }

    #[test]
    fn compose_with_identity() {
        let x = XOperator::new(3, 2, Model::q0(), z()).unwrap();
        let inputs = OccupationState::all_bounded(3, 1);
        let xm = SparseOperator::materialize(&x, &inputs, 4).unwrap();
        let id = SparseOperator::identity(&inputs, 3);
        assert_eq!(xm.compose(&id).unwrap(), xm);
    }

    #[test]
    fn cutoff_is_a_hard_error() {
        let x = XOperator::new(2, 0, Model::q0(), z()).unwrap();
        let r = x.apply(&basis_vector(OccupationState(vec![2])), 2);
        assert!(matches!(r, Err(Error::CutoffExceeded { .. })));
    }

    #[test]
    fn y_column_never_annihilates() {
        let col = YColumn::grid(3, "ycol_t", 1);
        for s in OccupationState::all_bounded(3, 2) {
            for (s2, _) in col.apply_state(&s, 4).unwrap() {
                assert!(s2.0.iter().zip(&s.0).all(|(a, b)| a >= b));
            }
        }
    }
}
