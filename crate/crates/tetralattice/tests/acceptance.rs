//! Acceptance run: one pass/fail line per criterion, each with its pinned
//! tolerance and wall-clock limit. Exits non-zero if any criterion fails.
//!
//! Reference values are restated here as literals rather
//! than imported from the library, so a corrupted library constant cannot
//! validate itself.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tetralattice::exactalg::{LaurentPoly, Rational, VarId};
use tetralattice::harness::{run_suite, verify, Class, RunOptions, Status};
use tetralattice::pfunc::{dual_expectation, OperatorWord};
use tetralattice::schubert::{schubert_along, schubert_poly, Permutation};
use tetralattice::tasep::{steady_state_trace, steady_state_vector, TasepConfig, TasepSector};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Run registry entries and require the given status for each.
fn entries(names: &[&str], want: Status, opts: &RunOptions) -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for name in names {
        match verify(name, opts) {
            Ok(case) => {
                ok &= case.status == want;
                parts.push(format!(
                    "{name} {}/{} {}",
                    case.checked - case.failed,
                    case.checked,
                    case.status
                ));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{name}: {e}"));
            }
        }
    }
    outcome(ok, parts.join("; "))
}

fn both(a: Outcome, b: Outcome) -> Outcome {
    outcome(a.ok && b.ok, format!("{}; {}", a.detail, b.detail))
}

fn criterion_1() -> Outcome {
    let coeffs: [(&str, i64); 12] = [
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
    let direct = (|| -> tetralattice::Result<Outcome> {
        let sector = TasepSector::new(vec![2, 1, 1, 1])?;
        let v = steady_state_vector(&sector)?;
        let mut bad = Vec::new();
        for (c, x) in coeffs {
            let got = v.get(&TasepConfig::parse(c, 3)?).cloned();
            if got != Some(Rational::from_integer(x.into())) {
                bad.push(format!("P({c})={got:?}, want {x}"));
            }
        }
        for (c, x) in [("30021", 6i64), ("31002", 4)] {
            let tr = steady_state_trace(3, 5, &sector, &TasepConfig::parse(c, 3)?, 6)?;
            if tr != Rational::from_integer(x.into()) {
                bad.push(format!("trace P({c})={tr}, want {x}"));
            }
        }
        Ok(outcome(
            bad.is_empty(),
            if bad.is_empty() {
                "12 kernel coefficients and 2 trace values exact".to_string()
            } else {
                bad.join(", ")
            },
        ))
    })()
    .unwrap_or_else(|e| outcome(false, e.to_string()));
    both(
        direct,
        entries(
            &["tasep_example", "tasep_probgen"],
            Status::Pass,
            &RunOptions::default(),
        ),
    )
}

fn criterion_2() -> Outcome {
    // Each entry is a product of the listed factors.
    let table: [(&[usize], &[&str]); 6] = [
        (
            &[1, 2, 3],
            &["z3^2", "z2 + z3", "z1 + z2", "z1 + z3", "z1^-2"],
        ),
        (
            &[1, 3, 2],
            &[
                "z3",
                "z1^3*z2 + z1^3*z3 + z1^2*z2^2 + z1^2*z2*z3 + z1*z2^3 + z1*z2^2*z3 + z2^3*z3",
                "z1^-2",
            ],
        ),
        (
            &[2, 1, 3],
            &[
                "z3",
                "z1*z2^2 + z1*z2*z3 + z1*z3^2 + z2^3 + z2^2*z3 + z2*z3^2 + z3^3",
                "z2^-1",
            ],
        ),
        (&[2, 3, 1], &["z2^2", "z1 + z2"]),
        (&[3, 1, 2], &["z1^2*z3", "z2 + z3", "z2^-1"]),
        (&[3, 2, 1], &["z1^2*z2"]),
    ];
    let direct = (|| -> tetralattice::Result<Outcome> {
        let mut bad = Vec::new();
        for (w, factors) in table {
            let w = Permutation::new(w.to_vec())?;
            let mut expect = LaurentPoly::one();
            for f in factors {
                expect = &expect * &LaurentPoly::parse(f)?;
            }
            if schubert_poly(&w, true) != expect {
                bad.push(format!("S_{w}"));
            }
        }
        let mut words = 0;
        for w in Permutation::all(4) {
            let chains = w.ascent_chains();
            let first = schubert_along(&w, &chains[0], true)?;
            for c in &chains[1..] {
                words += 1;
                if schubert_along(&w, c, true)? != first {
                    bad.push(format!("S_{w} word {c:?}"));
                }
            }
        }
        Ok(outcome(
            bad.is_empty(),
            if bad.is_empty() {
                format!("6 S3 entries exact; {words} alternative S4 words agree")
            } else {
                bad.join(", ")
            },
        ))
    })()
    .unwrap_or_else(|e| outcome(false, e.to_string()));
    both(
        direct,
        entries(
            &["schubert_table", "mock_schubert"],
            Status::Pass,
            &RunOptions::default(),
        ),
    )
}

fn criterion_7() -> Outcome {
    let direct = (|| -> tetralattice::Result<Outcome> {
        let g = |k: usize, p: usize| LaurentPoly::var(VarId::grid("z", k, p));
        let q = LaurentPoly::var(VarId::q());
        let mut expect = LaurentPoly::zero();
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            expect += &(&g(a, 1) * &g(b, 4));
            expect += &(&q * &(&g(a, 4) * &g(b, 1)));
        }
        let got = dual_expectation(&[1, 0, 0, 1, 0], &OperatorWord::y_columns(5, "z", 3))?;
        Ok(outcome(
            got == expect && got.len() == 6,
            format!(
                "<<10010| example: {} terms, {}",
                got.len(),
                if got == expect {
                    "term-for-term"
                } else {
                    "MISMATCH"
                }
            ),
        ))
    })()
    .unwrap_or_else(|e| outcome(false, e.to_string()));
    both(
        direct,
        entries(
            &["qloop_binary", "qloop_eqvars", "qloop_general"],
            Status::Pass,
            &RunOptions::default(),
        ),
    )
}

fn criterion_9() -> Outcome {
    let report = match run_suite("conjectures", &RunOptions::default()) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let ok = report.cases.len() == 2
        && report.cases.iter().all(|c| {
            c.class == Class::Conjecture && c.status == Status::EvidenceOnly && c.checked > 0
        });
    let detail: Vec<String> = report
        .cases
        .iter()
        .map(|c| format!("{} {} on {} instances", c.name, c.status, c.checked))
        .collect();
    outcome(ok, detail.join("; "))
}

fn criterion_10() -> Outcome {
    let opts = RunOptions {
        mutated: true,
        ..RunOptions::default()
    };
    let report = match run_suite("all", &opts) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let failing: Vec<&str> = report
        .cases
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| c.name.as_str())
        .collect();
    outcome(
        !failing.is_empty(),
        format!(
            "{} failing under mutation: {}",
            failing.len(),
            failing.join(", ")
        ),
    )
}

fn main() -> ExitCode {
    tetralattice::harness::prime_variables();
    let d = RunOptions::default;
    let criteria: Vec<(u32, &str, &str, u64, Box<dyn Fn() -> Outcome>)> = vec![
        (
            1,
            "TASEP worked example",
            "exact, zero tolerance",
            60,
            Box::new(criterion_1),
        ),
        (
            2,
            "modified Schubert table and S4 word independence",
            "exact",
            10,
            Box::new(criterion_2),
        ),
        (
            3,
            "Schur correspondence, n<=4, m<=3, blocks<=2",
            "exact symbolic",
            300,
            Box::new(move || {
                entries(
                    &["schur_corr", "tensor_schur", "vac_action"],
                    Status::Pass,
                    &d(),
                )
            }),
        ),
        (
            4,
            "Kostka realization, |lambda|<=5, m<=3",
            "exact",
            120,
            Box::new(move || entries(&["kostka_3d"], Status::Pass, &d())),
        ),
        (
            5,
            "shuffle/JLP, FNR, GM, unified at seeded points",
            "exact rational, >=3 points x >=5 sets",
            120,
            Box::new(move || entries(&["shuffle_jlp", "fnr", "gm", "unified"], Status::Pass, &d())),
        ),
        (
            6,
            "ZF algebra, n<=4, symbolic in x, y",
            "exact operator identity",
            300,
            Box::new(move || {
                entries(
                    &["zf_relations", "multi_comm", "trace_fact"],
                    Status::Pass,
                    &d(),
                )
            }),
        ),
        (
            7,
            "q-deformed loop functions",
            "exact, symbolic in q",
            120,
            Box::new(criterion_7),
        ),
        (
            8,
            "weighted traces A/B to cap 3 and vacuum corollary",
            "exact formal series",
            600,
            Box::new(move || {
                entries(
                    &["wtrace_A", "wtrace_B", "wtrace_special", "generic_explicit"],
                    Status::Pass,
                    &d(),
                )
            }),
        ),
        (
            9,
            "conjecture evidence",
            "evidence-only, no counterexample",
            900,
            Box::new(criterion_9),
        ),
        (
            10,
            "mutation sensitivity",
            ">=1 registry failure",
            300,
            Box::new(criterion_10),
        ),
    ];
    let mut all_ok = true;
    for (k, title, tolerance, limit, run) in criteria {
        let t0 = Instant::now();
        let o = run();
        let dt = t0.elapsed();
        let ok = o.ok && dt <= Duration::from_secs(limit);
        all_ok &= ok;
        println!(
            "criterion {k:>2}: {}  {title} [{tolerance}; {:.2}s of {limit}s] -- {}",
            if ok { "PASS" } else { "FAIL" },
            dt.as_secs_f64(),
            o.detail
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
