//! q-series utilities: q-Pochhammer symbols (finite and truncated infinite),
//! q-integers, q-factorials and q-binomial coefficients.

use super::poly::LaurentPoly;
use super::series::{Cap, FormalSeries};
use crate::error::{Error, Result};

/// Upper bound on the number of factors tried for an infinite product before
/// declaring it non-terminating.
const MAX_PRODUCT_FACTORS: usize = 10_000;

/// Finite q-Pochhammer symbol `(a; base)_n = ∏_{r=0}^{n-1} (1 - a·base^r)`.
///
/// `base` is a polynomial so that `(q²; q²)_m` is expressed directly.
pub fn q_pochhammer(a: &LaurentPoly, base: &LaurentPoly, n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    let mut ar = a.clone();
    for _ in 0..n {
        acc = &acc * &(&LaurentPoly::one() - &ar);
        ar = &ar * base;
    }
    acc
}

/// Infinite q-Pochhammer symbol `(a; base)_∞` truncated under `caps`.
///
/// Precondition: every monomial of `a` has positive degree in a capped
/// group, and the factors `a·base^r` eventually leave the caps. Otherwise the
/// product does not terminate and [`Error::NonTerminating`] is returned.
pub fn q_pochhammer_series(
    a: &LaurentPoly,
    base: &LaurentPoly,
    caps: &[Cap],
) -> Result<FormalSeries> {
    let one = FormalSeries::one(caps.to_vec());
    if a.is_zero() {
        return Ok(one);
    }
    if !one.is_topologically_nilpotent(a) {
        return Err(Error::NonTerminating(format!(
            "`{a}` has a monomial of capped degree zero"
        )));
    }
    let mut acc = one;
    let mut ar = FormalSeries::new(a.clone(), caps.to_vec());
    for _ in 0..MAX_PRODUCT_FACTORS {
        if ar.is_zero() {
            return Ok(acc);
        }
        let factor = FormalSeries::one(caps.to_vec()).sub(&ar);
        acc = acc.mul(&factor);
        ar = ar.mul_poly(base);
    }
    Err(Error::NonTerminating(format!(
        "(`{a}`; `{base}`)_inf needs more than {MAX_PRODUCT_FACTORS} factors"
    )))
}

/// q-integer `[n]_q = 1 + q + … + q^{n-1}`.
pub fn q_integer(n: usize, q: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut p = LaurentPoly::one();
    for _ in 0..n {
        acc += &p;
        p = &p * q;
    }
    acc
}

/// q-factorial `[n]_q! = [1]_q … [n]_q`.
pub fn q_factorial(n: usize, q: &LaurentPoly) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &q_integer(k, q))
}

/// Gaussian binomial `[n choose k]_q`, by the Pascal-type recurrence
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`; a polynomial in `q` with nonnegative
/// integer coefficients.
pub fn q_binomial(n: usize, k: usize, q: &LaurentPoly) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::OutOfRange(format!("q-binomial with k={k} > n={n}")));
    }
    // rows[j] = [m choose j]_q for the current m.
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = vec![LaurentPoly::zero(); m + 1];
        next[0] = LaurentPoly::one();
        next[m] = LaurentPoly::one();
        let mut qj = q.clone();
        for j in 1..m {
            next[j] = &row[j - 1] + &(&qj * &row[j]);
            qj = &qj * q;
        }
        row = next;
    }
    Ok(row[k].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::vars::VarId;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        let q = LaurentPoly::var(VarId::q());
        assert!(q_pochhammer(&p("a"), &q, 0).is_one());
        let q2 = &q * &q;
        assert_eq!(q_pochhammer(&q2, &q2, 2), &p("1 - q^2") * &p("1 - q^4"));
        assert_eq!(q_pochhammer(&p("t"), &p("Q"), 1), p("1 - t"));
    }

    #[test]
    fn pochhammer_series_example() {
        let caps = vec![Cap::new(vec![VarId::new("t"), VarId::new("Q")], 2)];
        let s = q_pochhammer_series(&p("t"), &p("Q"), &caps).unwrap();
        assert_eq!(s.poly(), &p("1 - t - t*Q"));
        assert!(q_pochhammer_series(&LaurentPoly::zero(), &p("Q"), &caps)
            .unwrap()
            .poly()
            .is_one());
    }

    #[test]
    fn q_binomial_examples() {
        let q = LaurentPoly::var(VarId::q());
        assert_eq!(q_binomial(2, 1, &q).unwrap(), p("1 + q"));
        assert!(q_binomial(5, 0, &q).unwrap().is_one());
        assert!(matches!(q_binomial(2, 3, &q), Err(Error::OutOfRange(_))));
    }
}
