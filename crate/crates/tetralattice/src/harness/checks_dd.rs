//! Checks for the divided-difference calculus. Operator identities are
//! established by action on all monomials up to a degree bound plus seeded
//! random Laurent polynomials.

use std::collections::BTreeMap;

use rand_chacha::ChaCha8Rng;

use super::{Ctx, Instance};
use crate::error::Result;
use crate::exactalg::{LaurentPoly, VarId};
use crate::schubert::{
    apply_expansion, apply_written, conjecture_d_product, divided_difference,
    expansion_by_operator, is_reduced, modified_divided_difference, modified_via_conjugation,
    modified_via_partial, monomials_up_to, random_laurent, relopprod_closed_form, schubert_poly,
    swap, yb_sides_series, yb_sides_symbolic, z, OperatorWordDD, Permutation,
};

fn test_inputs(m: usize, degree: u32, random: usize, rng: &mut ChaCha8Rng) -> Vec<LaurentPoly> {
    let mut v = monomials_up_to(m, degree);
    for _ in 0..random {
        v.push(random_laurent(rng, m, 3, -2, 2));
    }
    v
}

/// Compare two actions on every input; report the first disagreement.
fn over_inputs(
    params: String,
    inputs: &[LaurentPoly],
    lhs: impl Fn(&LaurentPoly) -> LaurentPoly,
    rhs: impl Fn(&LaurentPoly) -> LaurentPoly,
) -> Instance {
    for f in inputs {
        let (a, b) = (lhs(f), rhs(f));
        if a != b {
            return Instance::judged(
                format!("{params}, f = {f}"),
                a.to_string(),
                b.to_string(),
                false,
            );
        }
    }
    let summary = format!("agree on {} inputs", inputs.len());
    Instance::judged(params, summary.clone(), summary, true)
}

fn dd(word: &[usize], f: &LaurentPoly) -> LaurentPoly {
    apply_written(word, f, modified_divided_difference)
}

/// Braid and far-commutation relations of `𝒟_i` in four variables.
pub fn dd_braid(ctx: &Ctx) -> Result<Vec<Instance>> {
    let inputs = test_inputs(4, 2, 3, &mut ctx.rng("inputs"));
    let mut out = Vec::new();
    for i in 1..=2 {
        out.push(over_inputs(
            format!("D{i} D{} D{i} = D{} D{i} D{}", i + 1, i + 1, i + 1),
            &inputs,
            |f| dd(&[i, i + 1, i], f),
            |f| dd(&[i + 1, i, i + 1], f),
        ));
    }
    out.push(over_inputs(
        "D1 D3 = D3 D1".into(),
        &inputs,
        |f| dd(&[1, 3], f),
        |f| dd(&[3, 1], f),
    ));
    Ok(out)
}

/// `𝒟_i² = −𝒟_i`, and agreement of the three forms of `𝒟_i`.
pub fn dd_idem(ctx: &Ctx) -> Result<Vec<Instance>> {
    let inputs = test_inputs(4, 3, 3, &mut ctx.rng("inputs"));
    let mut out = Vec::new();
    for i in 1..=3 {
        out.push(over_inputs(
            format!("D{i}^2 = -D{i}"),
            &inputs,
            |f| dd(&[i, i], f),
            |f| -modified_divided_difference(i, f),
        ));
        out.push(over_inputs(
            format!("D{i} = (z{}/z{i})(1 + z{} d{i})", i + 1, i + 1),
            &inputs,
            |f| modified_divided_difference(i, f),
            |f| modified_via_partial(i, f),
        ));
        out.push(over_inputs(
            format!("D{i} = (z{}/z{i}) d{i} z{i}", i + 1),
            &inputs,
            |f| modified_divided_difference(i, f),
            |f| modified_via_conjugation(i, f),
        ));
    }
    Ok(out)
}

/// Twisted Leibniz rule.
pub fn dd_leibniz(ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut rng = ctx.rng("inputs");
    let mut out = Vec::new();
    for i in 1..=2 {
        for _ in 0..3 {
            let f = random_laurent(&mut rng, 3, 3, -2, 2);
            let g = random_laurent(&mut rng, 3, 3, -2, 2);
            let lhs = modified_divided_difference(i, &(&f * &g));
            let zi1 = LaurentPoly::var(z(i + 1));
            let rhs = &(&(&zi1 * &divided_difference(i, &f)) * &g)
                + &(&swap(i, &f) * &modified_divided_difference(i, &g));
            out.push(Instance::compare(format!("i={i} f={f} g={g}"), &lhs, &rhs));
        }
    }
    Ok(out)
}

fn expansion_text(e: &BTreeMap<Vec<usize>, LaurentPoly>) -> String {
    let parts: Vec<String> = e.iter().map(|(w, c)| format!("{w:?}: {c}")).collect();
    format!("{{{}}}", parts.join("; "))
}

/// Six-term closed form of `𝒟_i 𝒟_{i+1} 𝒟_i`.
pub fn dd_relopprod(ctx: &Ctx) -> Result<Vec<Instance>> {
    let inputs = test_inputs(4, 2, 3, &mut ctx.rng("inputs"));
    let mut out = Vec::new();
    for i in 1..=2 {
        let rec = expansion_by_operator(&OperatorWordDD::new(4, vec![i, i + 1, i])?);
        let closed = relopprod_closed_form(i);
        out.push(Instance::judged(
            format!("recursion vs closed form, i={i}"),
            expansion_text(&rec),
            expansion_text(&closed),
            rec == closed,
        ));
        out.push(over_inputs(
            format!("closed form acting, i={i}"),
            &inputs,
            |f| dd(&[i, i + 1, i], f),
            |f| apply_expansion(&closed, f),
        ));
    }
    Ok(out)
}

fn reduced_words(m: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 1..m {
                let mut v: Vec<usize> = w.clone();
                v.push(i);
                if is_reduced(m, &v) {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Expansion coefficients from the recursion reproduce `𝒟_I`.
pub fn dd_c_recursion(ctx: &Ctx) -> Result<Vec<Instance>> {
    let inputs = test_inputs(4, 2, 2, &mut ctx.rng("inputs"));
    let mut out = Vec::new();
    for word in reduced_words(4, 4) {
        let w = OperatorWordDD::new(4, word.clone())?;
        let exp = expansion_by_operator(&w);
        out.push(over_inputs(
            format!("I={word:?} ({} terms)", exp.len()),
            &inputs,
            |f| w.apply_d(f),
            |f| apply_expansion(&exp, f),
        ));
    }
    Ok(out)
}

/// Yang–Baxter relation for `R_i(u)`.
pub fn dd_yb(ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut rng = ctx.rng("inputs");
    let (eu, ev) = (
        LaurentPoly::var(VarId::new("Eu")),
        LaurentPoly::var(VarId::new("Ev")),
    );
    let mut fs = vec![LaurentPoly::var(z(1))];
    for _ in 0..3 {
        fs.push(random_laurent(&mut rng, 3, 3, -1, 2));
    }
    let mut out = Vec::new();
    for f in &fs {
        let (l, r) = yb_sides_symbolic(1, &eu, &ev, f);
        out.push(Instance::compare(
            format!("symbols E_u, E_v; f={f}"),
            &l,
            &r,
        ));
    }
    let (l, r) = yb_sides_symbolic(1, &LaurentPoly::one(), &LaurentPoly::one(), &fs[1]);
    out.push(Instance::judged(
        "u=v=0 is the identity",
        l.to_string(),
        r.to_string(),
        l == r && l == fs[1],
    ));
    for f in &fs[..2] {
        let (l, r) = yb_sides_series(1, VarId::new("u"), VarId::new("v"), 3, f);
        out.push(Instance::compare(
            format!("series to degree 3; f={f}"),
            l.poly(),
            r.poly(),
        ));
    }
    Ok(out)
}

/// Nonnegativity of the modified Schubert polynomials.
pub fn nonneg(_ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for m in 3..=4 {
        for w in Permutation::all(m) {
            let s = schubert_poly(&w, true);
            let ok = s.has_nonnegative_coefficients();
            out.push(Instance::judged(
                format!("w={w}"),
                s.to_string(),
                if ok {
                    "nonnegative"
                } else {
                    "has a negative coefficient"
                },
                ok,
            ));
        }
    }
    Ok(out)
}

/// Conjectured `𝒟`-product factorization (evidence only).
pub fn conj_dd(ctx: &Ctx) -> Result<Vec<Instance>> {
    let mut rng = ctx.rng("inputs");
    let mut out = Vec::new();
    for n in 1..=3 {
        for i in 1..=2 {
            let rep = conjecture_d_product(n, i, 4, 4, &mut rng);
            let ok = rep.counterexample.is_none();
            out.push(Instance::judged(
                format!("n={n} i={i} degree<=4"),
                format!("{} inputs checked", rep.checked),
                rep.counterexample
                    .map(|c| format!("counterexample f = {c}"))
                    .unwrap_or_else(|| "no counterexample".into()),
                ok,
            ));
        }
    }
    Ok(out)
}
