//! Identity-verification registry.
//!
//! Every identity of the theory is a named registry entry with a default
//! parameter grid. An entry computes both sides through independent code
//! paths — the lattice (`vertexmodel`/`pfunc`) on one side, closed forms
//! built from `exactalg`/`symfun` ([`oracles`]) on the other — and compares
//! them exactly, either symbolically or at seeded rational points.
//!
//! Entries run in parallel; the report is ordered by registry key and is
//! byte-identical for a given seed (runtimes are kept out of the JSON unless
//! explicitly requested).

mod checks_dd;
mod checks_generic;
mod checks_q0;
pub mod oracles;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Rational, VarId};
use crate::fock::{triangular_sites, OccupationState};
use crate::vertexmodel::{FockVector, Model};

pub use checks_q0::{s3_table, schur_corr_instance};

/// JSON schema identifier of [`Report`].
pub const REPORT_SCHEMA: &str = "tetralattice-report/1";

/// Verdict of one registry entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Every instance agreed.
    Pass,
    /// Some instance disagreed, or the computation failed.
    Fail,
    /// Conjecture entry with no contradiction on the tested grid.
    EvidenceOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::EvidenceOnly => "evidence-only",
        })
    }
}

/// How the two sides are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Exact equality of polynomials / series / operators.
    Symbolic,
    /// Exact equality at seeded rational points.
    PointEval,
}

/// Whether an entry is a theorem or a conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    /// Proven identity: any disagreement is a failure.
    Theorem,
    /// Conjecture: reported as evidence only, never as proven.
    Conjecture,
}

/// One compared instance: parameters and both sides in canonical text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    /// Parameter description.
    pub params: String,
    /// Left-hand side (lattice / recursion side).
    pub lhs: String,
    /// Right-hand side (closed form / oracle side).
    pub rhs: String,
    /// Agreement.
    pub ok: bool,
}

impl Instance {
    /// Compare two values with canonical `Display` forms.
    pub fn compare<T: PartialEq + fmt::Display>(
        params: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        Instance {
            params: params.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            ok: lhs == rhs,
        }
    }

    /// A pre-judged instance.
    pub fn judged(
        params: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        ok: bool,
    ) -> Self {
        Instance {
            params: params.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            ok,
        }
    }
}

/// Result of one registry entry.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCase {
    /// Registry key.
    pub name: String,
    /// One-line statement of what is checked.
    pub statement: String,
    /// Tags used for suite filtering.
    pub tags: Vec<String>,
    /// Theorem or conjecture.
    pub class: Class,
    /// Comparison mode.
    pub mode: Mode,
    /// The tested parameter grid.
    pub grid: String,
    /// Verdict.
    pub status: Status,
    /// Number of instances compared.
    pub checked: usize,
    /// Number of disagreeing instances.
    pub failed: usize,
    /// Every compared instance.
    pub instances: Vec<Instance>,
    /// Error that aborted the entry, if any.
    pub error: Option<String>,
    /// Wall-clock time (omitted from JSON unless timings are requested).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
    #[serde(skip)]
    elapsed: Duration,
}

impl IdentityCase {
    /// Wall-clock time of the entry.
    pub fn elapsed(&self) -> Duration {
        self.elapsed
    }
}

/// Aggregate counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
pub struct Summary {
    /// Entries run.
    pub total: usize,
    /// Passing theorem entries.
    pub pass: usize,
    /// Failing entries.
    pub fail: usize,
    /// Conjecture entries without contradiction.
    pub evidence_only: usize,
}

/// A suite report.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    /// Schema identifier ([`REPORT_SCHEMA`]).
    pub schema: String,
    /// Suite filter as given.
    pub filter: String,
    /// Sampling seed.
    pub seed: u64,
    /// Whether the generic model's sixth vertex sign was flipped.
    pub mutated: bool,
    /// Per-entry results, ordered by registry key.
    pub cases: Vec<IdentityCase>,
    /// Counts.
    pub summary: Summary,
}

impl Report {
    /// True when no entry failed.
    pub fn ok(&self) -> bool {
        self.summary.fail == 0
    }

    /// Deterministic pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Copy of the report with per-entry runtimes filled in.
    pub fn with_timings(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.cases {
            c.runtime_ms = Some(c.elapsed.as_millis() as u64);
        }
        r
    }

    /// Human-readable table, one line per entry plus failing instances.
    pub fn render_text(&self, timings: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite `{}`  seed {}{}\n",
            self.filter,
            self.seed,
            if self.mutated {
                "  [mutated model]"
            } else {
                ""
            }
        ));
        for c in &self.cases {
            let t = if timings {
                format!("  {:>8.2}s", c.elapsed.as_secs_f64())
            } else {
                String::new()
            };
            out.push_str(&format!(
                "{:<16} {:<14} {:>4}/{:<4}{t}  {}\n",
                c.name,
                c.status.to_string(),
                c.checked - c.failed,
                c.checked,
                c.grid
            ));
            if let Some(e) = &c.error {
                out.push_str(&format!("    error: {e}\n"));
            }
            for i in c.instances.iter().filter(|i| !i.ok).take(3) {
                out.push_str(&format!(
                    "    mismatch at {}\n      lhs = {}\n      rhs = {}\n",
                    i.params, i.lhs, i.rhs
                ));
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} entries: {} pass, {} evidence-only, {} fail\n",
            s.total, s.pass, s.evidence_only, s.fail
        ));
        out
    }
}

/// Per-entry evaluation context.
pub struct Ctx {
    seed: u64,
    mutated: bool,
    name: &'static str,
}

impl Ctx {
    /// Context for entry `name`.
    pub fn new(seed: u64, mutated: bool, name: &'static str) -> Self {
        Ctx {
            seed,
            mutated,
            name,
        }
    }

    /// The generic-`q` model, mutated if requested.
    pub fn generic(&self) -> Model {
        if self.mutated {
            Model::generic_mutated()
        } else {
            Model::generic()
        }
    }

    /// Deterministic generator for sub-stream `salt` of this entry.
    pub fn rng(&self, salt: &str) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ fnv1a(self.name) ^ fnv1a(salt).rotate_left(17))
    }
}

/// 64-bit FNV-1a: a fixed, platform-independent string hash for seeding.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// `k` distinct rationals `a/b` with `a ∈ [2, 97]`, `b ∈ [1, 13]`.
pub fn sample_points(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(k);
    while out.len() < k {
        let x = Rational::new(
            rng.gen_range(2i64..=97).into(),
            rng.gen_range(1i64..=13).into(),
        );
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Number of sample points per parameter set in point-eval entries.
pub const SAMPLES: usize = 3;

/// A registry entry.
pub struct Entry {
    /// Registry key.
    pub name: &'static str,
    /// One-line statement.
    pub statement: &'static str,
    /// Filter tags.
    pub tags: &'static [&'static str],
    /// Theorem or conjecture.
    pub class: Class,
    /// Comparison mode.
    pub mode: Mode,
    /// Default parameter grid.
    pub grid: &'static str,
    run: fn(&Ctx) -> Result<Vec<Instance>>,
}

macro_rules! entry {
    ($name:literal, $tags:expr, $class:ident, $mode:ident, $grid:literal, $statement:literal, $run:path) => {
        Entry {
            name: $name,
            statement: $statement,
            tags: $tags,
            class: Class::$class,
            mode: Mode::$mode,
            grid: $grid,
            run: $run,
        }
    };
}

const Q0: &[&str] = &["q0"];
const Q0_SYM: &[&str] = &["q0", "symfun"];
const Q0_TASEP: &[&str] = &["q0", "tasep"];
const SCHUBERT: &[&str] = &["q0", "schubert"];
const GENERIC: &[&str] = &["generic"];
const Q0_CONJ: &[&str] = &["q0", "schubert", "conjectures"];
const GEN_CONJ: &[&str] = &["generic", "conjectures"];

/// The registry, ordered by key.
pub fn registry() -> Vec<Entry> {
    let mut r = vec![
        entry!("conj_commute", GEN_CONJ, Conjecture, Symbolic, "N=3,4; all j; inputs with occupations <= 1",
            "[X_j(z), X_j(w)] = 0 for the generic-q model", checks_generic::conj_commute),
        entry!("conj_dd", Q0_CONJ, Conjecture, Symbolic, "n<=3, i=1,2; monomials of degree <= 4 plus 4 random Laurent inputs",
            "D-product factorization D_i(D_{i+1}D_i)... = conjugated partial-product", checks_dd::conj_dd),
        entry!("dd_braid", SCHUBERT, Theorem, Symbolic, "m=4; D_i D_{i+1} D_i and commuting pairs on monomials deg<=2 plus random Laurent",
            "braid relations of the modified divided differences", checks_dd::dd_braid),
        entry!("dd_c_recursion", SCHUBERT, Theorem, Symbolic, "all reduced words of length <= 4 in S_4; monomials deg<=2 plus random Laurent",
            "the c(I,J) recursion reproduces D_I as a combination of partial-products", checks_dd::dd_c_recursion),
        entry!("dd_idem", SCHUBERT, Theorem, Symbolic, "m=4, i=1..3; monomials deg<=3 plus random Laurent",
            "D_i^2 = -D_i", checks_dd::dd_idem),
        entry!("dd_leibniz", SCHUBERT, Theorem, Symbolic, "m=3, i=1,2; 6 random Laurent pairs",
            "D_i(fg) = z_{i+1}(d_i f) g + (s_i f)(D_i g)", checks_dd::dd_leibniz),
        entry!("dd_relopprod", SCHUBERT, Theorem, Symbolic, "i=1,2 in S_4; six-term closed form vs recursion and vs action",
            "D_i D_{i+1} D_i as six partial-products with prefactor z_{i+2}^2/z_i^2", checks_dd::dd_relopprod),
        entry!("dd_yb", SCHUBERT, Theorem, Symbolic, "m=3, i=1; formal symbols E_u,E_v on random input; exponential series to degree 3 on z1 and random input",
            "Yang-Baxter relation for R_i(u) = 1 + (1 - e^u) D_i", checks_dd::dd_yb),
        entry!("fnr", Q0_SYM, Theorem, PointEval, "6 parameter sets, n<=4, <=5 variables, 3 points each",
            "vacuum expectation with i_1 = n as a symmetrized Cauchy-type sum", checks_q0::fnr),
        entry!("generic_explicit", GENERIC, Theorem, Symbolic, "N=3, i=0..3, inputs with occupations <= 2",
            "lattice X-operators of the generic model equal their oscillator expansions", checks_generic::generic_explicit),
        entry!("gm", Q0_SYM, Theorem, PointEval, "6 parameter sets, n<=4, <=5 variables, 3 points each",
            "vacuum expectation with i_m = 0 as a symmetrized Cauchy-type sum", checks_q0::gm),
        entry!("kostka_3d", Q0_SYM, Theorem, Symbolic, "all lambda, alpha with |lambda|<=5, m<=3",
            "vacuum expectation of X_{i,j} products equals the Kostka number", checks_q0::kostka_3d),
        entry!("mock_schubert", SCHUBERT, Theorem, Symbolic, "all w in S_2 (n=2) and S_3 (n=4)",
            "lattice vacuum expectation equals prod z_k^{m-k} times the modified Schubert polynomial", checks_q0::mock_schubert),
        entry!("multi_comm", Q0, Theorem, PointEval, "6 index/block sets, n<=4, inputs with occupations <= 1, 3 points each",
            "reordering of X-products with symmetrized rational coefficients", checks_q0::multi_comm),
        entry!("nonneg", SCHUBERT, Theorem, Symbolic, "all w in S_3 and S_4",
            "modified Schubert polynomials have nonnegative coefficients", checks_dd::nonneg),
        entry!("qloop_binary", GENERIC, Theorem, Symbolic, "binary bras with l<=4, n<=4; the worked l=5 example; q=0 loop-elementary reduction",
            "binary dual expectation of Y-columns as a q-weighted sum over permutations", checks_generic::qloop_binary),
        entry!("qloop_eqvars", GENERIC, Theorem, Symbolic, "binary bras with l<=4, n<=4, equal layer variables",
            "binary dual expectation at equal variables is [m]_q! e_m", checks_generic::qloop_eqvars),
        entry!("qloop_general", GENERIC, Theorem, Symbolic, "all bras with l<=3 layers, n<=3 columns",
            "dual expectation of Y-columns as a q-weighted multi-layer loop sum", checks_generic::qloop_general),
        entry!("schubert_table", SCHUBERT, Theorem, Symbolic, "the six elements of S_3; all reduced words of S_4",
            "modified Schubert polynomials of S_3 and reduced-word independence", checks_q0::schubert_table),
        entry!("schur_corr", Q0_SYM, Theorem, Symbolic, "all strictly decreasing index words, 2<=n<=4, m<=3, block sizes <= 2",
            "vacuum expectation of X-products equals prod z_k^{m-k} times a Schur polynomial", checks_q0::schur_corr),
        entry!("shuffle_jlp", Q0_SYM, Theorem, PointEval, "6 parameter sets, n<=4, <=6 variables, 3 points each",
            "shuffle formula for a two-group Schur polynomial", checks_q0::shuffle_jlp),
        entry!("tasep_example", Q0_TASEP, Theorem, Symbolic, "n=3, L=5, sector (2,1,1,1)",
            "exact stationary vector of the worked three-species example", checks_q0::tasep_example),
        entry!("tasep_probgen", Q0_TASEP, Theorem, Symbolic, "2<=n<=3, all 0<=j<=k<=n",
            "reordered full trace as a monomial times a rectangular Schur polynomial", checks_q0::tasep_probgen),
        entry!("tensor_schur", Q0_SYM, Theorem, Symbolic, "6 explicit group sets, n<=4, <=5 variables",
            "vacuum expectation of grouped X-products as a product of Schur polynomials", checks_q0::tensor_schur),
        entry!("trace_fact", Q0_TASEP, Theorem, Symbolic, "2<=n<=4",
            "Tr(X_n(z_n)...X_0(z_0)) = prod z_j^j", checks_q0::trace_fact),
        entry!("unified", Q0_SYM, Theorem, PointEval, "6 parameter sets, n<=4, <=5 variables, 3 points each",
            "vacuum expectation with i_1 = n and i_m = 0 as a three-way symmetrized sum", checks_q0::unified),
        entry!("vac_action", Q0, Theorem, Symbolic, "2<=n<=5; dual check on inputs with occupations <= 1",
            "X_n(z)|vac> = z^n |vac> and <vac| X_0(z) = <vac|", checks_q0::vac_action),
        entry!("wtrace_A", GENERIC, Theorem, Symbolic, "N=3, 0<=m,n<=3, cap D=3 per site",
            "type-A weighted trace of X_3(z)^m X_1(w)^n in closed form", checks_generic::wtrace_a),
        entry!("wtrace_B", GENERIC, Theorem, Symbolic, "N=3, 0<=m,n<=3, cap D=3 per site",
            "type-B weighted trace of X_3(z)^m X_1(w)^n in closed form", checks_generic::wtrace_b),
        entry!("wtrace_special", GENERIC, Theorem, Symbolic, "N=3, 0<=m,n<=3, exact in q",
            "vacuum expectation of X_3(z)^m X_1(w)^n in closed form", checks_generic::wtrace_special),
        entry!("zf_relations", Q0, Theorem, Symbolic, "2<=n<=4, all i,j; inputs with occupations <= 2 (n<=3) or <= 1 (n=4)",
            "exchange relations of the q=0 X-operators", checks_q0::zf_relations),
    ];
    r.sort_by_key(|e| e.name);
    r
}

/// Every tag in use.
pub fn tags() -> BTreeSet<&'static str> {
    let mut t: BTreeSet<&'static str> = registry()
        .iter()
        .flat_map(|e| e.tags.iter().copied())
        .collect();
    t.insert("all");
    t
}

/// Resolve a filter: `all`, a tag (`q0`, `generic`, `schubert`, `tasep`,
/// `symfun`, `conjectures`, with aliases `q0-only` and `schubert-suite`),
/// a registry key, or a comma-separated list of these.
pub fn select(filter: &str) -> Result<Vec<Entry>> {
    let mut wanted: BTreeSet<&'static str> = BTreeSet::new();
    let reg = registry();
    for raw in filter.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let key = match raw {
            "q0-only" => "q0",
            "schubert-suite" => "schubert",
            other => other,
        };
        let hits: Vec<&'static str> = reg
            .iter()
            .filter(|e| key == "all" || e.name == key || e.tags.contains(&key))
            .map(|e| e.name)
            .collect();
        if hits.is_empty() {
            return Err(Error::Parse(format!("unknown suite, tag or entry `{raw}`")));
        }
        wanted.extend(hits);
    }
    if wanted.is_empty() {
        return Err(Error::Parse("empty suite filter".into()));
    }
    Ok(reg
        .into_iter()
        .filter(|e| wanted.contains(e.name))
        .collect())
}

/// Options for running entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    /// Sampling seed.
    pub seed: u64,
    /// Flip the sign of the generic model's sixth vertex.
    pub mutated: bool,
    /// Worker threads (0 = available parallelism).
    pub threads: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 1,
            mutated: false,
            threads: 0,
        }
    }
}

/// Intern every variable the harness uses, in a fixed order, so that the
/// canonical term order (which follows the registry) does not depend on
/// which entry happens to run first.
pub fn prime_variables() {
    for base in ["z", "w", "x", "y"] {
        for k in 0..=8 {
            VarId::indexed(base, k);
        }
    }
    for s in triangular_sites(4) {
        VarId::new(&format!("t{}{}", s.k, s.l));
        VarId::new(&format!("Q{}{}", s.k, s.l));
    }
    for k in 1..=5 {
        for p in 1..=5 {
            VarId::grid("z", k, p);
        }
    }
    for v in ["u", "v", "Eu", "Ev"] {
        VarId::new(v);
    }
}

fn run_entry(e: &Entry, opts: &RunOptions) -> IdentityCase {
    let ctx = Ctx::new(opts.seed, opts.mutated, e.name);
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (e.run)(&ctx)));
    let elapsed = start.elapsed();
    let (instances, error) = match outcome {
        Ok(Ok(v)) => (v, None),
        Ok(Err(err)) => (Vec::new(), Some(err.to_string())),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (Vec::new(), Some(format!("panic: {msg}")))
        }
    };
    let failed = instances.iter().filter(|i| !i.ok).count();
    let status = if error.is_some() || failed > 0 || instances.is_empty() {
        Status::Fail
    } else if e.class == Class::Conjecture {
        Status::EvidenceOnly
    } else {
        Status::Pass
    };
    IdentityCase {
        name: e.name.to_string(),
        statement: e.statement.to_string(),
        tags: e.tags.iter().map(|t| t.to_string()).collect(),
        class: e.class,
        mode: e.mode,
        grid: e.grid.to_string(),
        status,
        checked: instances.len(),
        failed,
        instances,
        error,
        runtime_ms: None,
        elapsed,
    }
}

/// Run one registry entry at its default grid.
pub fn verify(name: &str, opts: &RunOptions) -> Result<IdentityCase> {
    prime_variables();
    let e = registry()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Parse(format!("unknown registry entry `{name}`")))?;
    Ok(run_entry(&e, opts))
}

/// Run every entry matching `filter`, in parallel, and assemble the report
/// in registry order.
pub fn run_suite(filter: &str, opts: &RunOptions) -> Result<Report> {
    prime_variables();
    let entries = select(filter)?;
    let threads = if opts.threads == 0 {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    } else {
        opts.threads
    };
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<IdentityCase>>> = Mutex::new(vec![None; entries.len()]);
    std::thread::scope(|s| {
        for _ in 0..threads.min(entries.len()) {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::SeqCst);
                let Some(e) = entries.get(k) else { break };
                let case = run_entry(e, opts);
                slots.lock().expect("slots poisoned")[k] = Some(case);
            });
        }
    });
    let cases: Vec<IdentityCase> = slots
        .into_inner()
        .expect("slots poisoned")
        .into_iter()
        .map(|c| c.expect("every entry ran"))
        .collect();
    let mut summary = Summary {
        total: cases.len(),
        ..Summary::default()
    };
    for c in &cases {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::EvidenceOnly => summary.evidence_only += 1,
        }
    }
    Ok(Report {
        schema: REPORT_SCHEMA.to_string(),
        filter: filter.to_string(),
        seed: opts.seed,
        mutated: opts.mutated,
        cases,
        summary,
    })
}

// ---------------------------------------------------------------------------
// Shared helpers for the check modules.

/// Variable `base{k}` as a polynomial.
pub(crate) fn var(base: &str, k: usize) -> LaurentPoly {
    LaurentPoly::var(VarId::indexed(base, k))
}

/// Rational constant as a polynomial.
pub(crate) fn cst(x: &Rational) -> LaurentPoly {
    LaurentPoly::constant(x.clone())
}

/// Difference of two Fock vectors.
pub(crate) fn vec_difference(a: &FockVector, b: &FockVector) -> FockVector {
    crate::vertexmodel::combine(&[
        (LaurentPoly::one(), a.clone()),
        (-LaurentPoly::one(), b.clone()),
    ])
}

/// Compare two operators on a set of inputs. The sides are summarized by
/// their number of nonzero matrix elements; on disagreement the first
/// differing column is shown.
pub(crate) fn compare_operators(
    params: String,
    inputs: &[OccupationState],
    lhs: impl Fn(&OccupationState) -> Result<FockVector>,
    rhs: impl Fn(&OccupationState) -> Result<FockVector>,
) -> Result<Instance> {
    let (mut nl, mut nr) = (0usize, 0usize);
    for s in inputs {
        let (a, b) = (lhs(s)?, rhs(s)?);
        nl += a.len();
        nr += b.len();
        if a != b {
            let d = vec_difference(&a, &b);
            let (t, c) = d.iter().next().expect("vectors differ");
            return Ok(Instance::judged(
                params,
                format!(
                    "<{t}| lhs |{s}> = {}",
                    a.get(t)
                        .map(|x| x.to_string())
                        .unwrap_or_else(|| "0".into())
                ),
                format!(
                    "<{t}| rhs |{s}> = {} (difference {c})",
                    b.get(t)
                        .map(|x| x.to_string())
                        .unwrap_or_else(|| "0".into())
                ),
                false,
            ));
        }
    }
    Ok(Instance::judged(
        params,
        format!("{nl} nonzero elements on {} inputs", inputs.len()),
        format!("{nr} nonzero elements on {} inputs", inputs.len()),
        true,
    ))
}

/// Render a block list `[(i, b), …]` as `i^b,…`.
pub(crate) fn blocks_label(blocks: &[(i64, usize)]) -> String {
    blocks
        .iter()
        .map(|(i, b)| {
            if *b == 1 {
                i.to_string()
            } else {
                format!("{i}^{b}")
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Render rational points.
pub(crate) fn points_label(points: &[Rational]) -> String {
    let p: Vec<String> = points.iter().map(|x| x.to_string()).collect();
    format!("({})", p.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_keys_are_unique_and_sorted() {
        let r = registry();
        let names: Vec<&str> = r.iter().map(|e| e.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(names, sorted);
    }

    #[test]
    fn filters() {
        let q0 = select("q0-only").unwrap();
        assert!(q0.iter().all(|e| !e.tags.contains(&"generic")));
        assert!(q0.iter().any(|e| e.name == "schur_corr"));
        let conj = select("conjectures").unwrap();
        assert_eq!(conj.len(), 2);
        assert!(conj.iter().all(|e| e.class == Class::Conjecture));
        assert!(select("no_such_thing").is_err());
        assert_eq!(select("gm,fnr").unwrap().len(), 2);
    }

    #[test]
    fn sampling_is_seeded_and_distinct() {
        let a = sample_points(&mut Ctx::new(7, false, "x").rng("p"), 6);
        let b = sample_points(&mut Ctx::new(7, false, "x").rng("p"), 6);
        assert_eq!(a, b);
        let set: BTreeSet<_> = a.iter().collect();
        assert_eq!(set.len(), 6);
        for x in &a {
            assert!(*x.numer() >= 2.into() && *x.numer() <= 97.into() || x.denom() > &1.into());
        }
    }
}
