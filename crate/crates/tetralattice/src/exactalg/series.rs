//! Truncated formal power series.
//!
//! A [`FormalSeries`] is a Laurent polynomial together with a list of
//! [`Cap`]s. A cap bounds the *total* degree of a group of variables; any term
//! whose degree in a capped group exceeds the bound is discarded eagerly, at
//! construction and after every multiplication. Variables outside every cap
//! behave exactly as in [`LaurentPoly`].

use std::fmt;

use num_traits::{One, Zero};

use super::poly::{LaurentPoly, Monomial};
use super::vars::VarId;
use super::Rational;
use crate::error::{Error, Result};

/// Default total-degree cap used by weighted traces and series identities.
pub const DEFAULT_CAP: i32 = 4;

/// A total-degree bound on a group of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cap {
    /// Variables whose exponents are summed.
    pub vars: Vec<VarId>,
    /// Maximal retained total degree.
    pub max_degree: i32,
}

impl Cap {
    /// Cap on a group of variables.
    pub fn new(vars: Vec<VarId>, max_degree: i32) -> Self {
        let mut vars = vars;
        vars.sort();
        vars.dedup();
        Cap { vars, max_degree }
    }

    /// Degree of `m` in this group.
    pub fn degree(&self, m: &Monomial) -> i64 {
        m.pairs()
            .iter()
            .filter(|(v, _)| self.vars.binary_search(v).is_ok())
            .map(|&(_, e)| e as i64)
            .sum()
    }

    fn admits(&self, m: &Monomial) -> bool {
        self.degree(m) <= self.max_degree as i64
    }
}

/// Laurent polynomial truncated under a set of caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSeries {
    poly: LaurentPoly,
    caps: Vec<Cap>,
}

impl FormalSeries {
    /// Truncate `poly` under `caps`.
    pub fn new(poly: LaurentPoly, caps: Vec<Cap>) -> Self {
        let poly = truncate(&poly, &caps);
        FormalSeries { poly, caps }
    }

    /// The constant one under `caps`.
    pub fn one(caps: Vec<Cap>) -> Self {
        FormalSeries {
            poly: LaurentPoly::one(),
            caps,
        }
    }

    /// The zero series under `caps`.
    pub fn zero(caps: Vec<Cap>) -> Self {
        FormalSeries {
            poly: LaurentPoly::zero(),
            caps,
        }
    }

    /// Underlying truncated polynomial.
    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    /// The caps of this series.
    pub fn caps(&self) -> &[Cap] {
        &self.caps
    }

    /// Re-wrap a polynomial under the same caps.
    pub fn with_poly(&self, poly: LaurentPoly) -> Self {
        FormalSeries::new(poly, self.caps.clone())
    }

    /// True when every monomial of `p` has positive degree in some cap.
    pub fn is_topologically_nilpotent(&self, p: &LaurentPoly) -> bool {
        p.terms()
            .all(|(m, _)| self.caps.iter().any(|c| c.degree(m) > 0))
    }

    /// Sum.
    pub fn add(&self, other: &FormalSeries) -> FormalSeries {
        FormalSeries {
            poly: &self.poly + &other.poly,
            caps: self.caps.clone(),
        }
    }

    /// Difference.
    pub fn sub(&self, other: &FormalSeries) -> FormalSeries {
        FormalSeries {
            poly: &self.poly - &other.poly,
            caps: self.caps.clone(),
        }
    }

    /// Product, truncated.
    pub fn mul(&self, other: &FormalSeries) -> FormalSeries {
        FormalSeries {
            poly: mul_truncated(&self.poly, &other.poly, &self.caps),
            caps: self.caps.clone(),
        }
    }

    /// Product with a plain polynomial, truncated.
    pub fn mul_poly(&self, p: &LaurentPoly) -> FormalSeries {
        FormalSeries {
            poly: mul_truncated(&self.poly, p, &self.caps),
            caps: self.caps.clone(),
        }
    }

    /// Multiplicative inverse.
    ///
    /// The part of degree zero in every cap must be a single invertible term
    /// `c·m`; the rest `u` must be topologically nilpotent, and the inverse is
    /// `(c m)^{-1} Σ_k (-u/(c m))^k`, which terminates under the caps.
    pub fn inverse(&self) -> Result<FormalSeries> {
        let head = self
            .poly
            .filter_terms(|m| self.caps.iter().all(|c| c.degree(m) <= 0));
        let (hm, hc) = head
            .as_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or_else(|| {
                Error::NonTerminating(format!("degree-zero part `{head}` is not a single term"))
            })?;
        if self.caps.iter().any(|c| c.degree(&hm) != 0) {
            return Err(Error::NonTerminating(
                "degree-zero part has negative capped degree".into(),
            ));
        }
        let head_inv = LaurentPoly::term(hc.recip(), hm.inv());
        let tail = &self.poly - &head;
        let u = -&mul_truncated(&tail, &head_inv, &self.caps);
        if !self.is_topologically_nilpotent(&u) {
            return Err(Error::NonTerminating(format!(
                "`{u}` is not nilpotent under the caps"
            )));
        }
        // Geometric series Σ u^k, stopping once u^k truncates to zero.
        let mut acc = LaurentPoly::one();
        let mut power = LaurentPoly::one();
        loop {
            power = mul_truncated(&power, &u, &self.caps);
            if power.is_zero() {
                break;
            }
            acc += &power;
        }
        Ok(FormalSeries {
            poly: mul_truncated(&acc, &head_inv, &self.caps),
            caps: self.caps.clone(),
        })
    }

    /// Substitute variables and re-truncate.
    pub fn substitute(
        &self,
        bindings: &std::collections::HashMap<VarId, LaurentPoly>,
    ) -> Result<FormalSeries> {
        Ok(FormalSeries::new(
            self.poly.substitute(bindings)?,
            self.caps.clone(),
        ))
    }

    /// Scale by a rational.
    pub fn scale(&self, c: &Rational) -> FormalSeries {
        FormalSeries {
            poly: self.poly.scale(c),
            caps: self.caps.clone(),
        }
    }

    /// True when the truncated polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Display for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(", self.poly)?;
        let parts: Vec<String> = self
            .caps
            .iter()
            .map(|c| {
                let names: Vec<String> = c.vars.iter().map(|v| v.name()).collect();
                format!("deg[{}]>{}", names.join(","), c.max_degree)
            })
            .collect();
        write!(f, "{})", parts.join("; "))
    }
}

/// Drop every term exceeding a cap.
pub fn truncate(p: &LaurentPoly, caps: &[Cap]) -> LaurentPoly {
    if caps.is_empty() {
        return p.clone();
    }
    p.filter_terms(|m| caps.iter().all(|c| c.admits(m)))
}

/// Product with eager truncation (pairs whose product exceeds a cap are skipped).
pub fn mul_truncated(a: &LaurentPoly, b: &LaurentPoly, caps: &[Cap]) -> LaurentPoly {
    if caps.is_empty() {
        return a * b;
    }
    let bdeg: Vec<(Vec<i64>, &Monomial, &Rational)> = b
        .terms()
        .map(|(m, c)| (caps.iter().map(|cap| cap.degree(m)).collect(), m, c))
        .collect();
    let mut out = LaurentPoly::zero();
    for (am, ac) in a.terms() {
        let ad: Vec<i64> = caps.iter().map(|cap| cap.degree(am)).collect();
        for (bd, bm, bc) in &bdeg {
            if caps
                .iter()
                .enumerate()
                .all(|(i, cap)| ad[i] + bd[i] <= cap.max_degree as i64)
            {
                let t = LaurentPoly::term(ac * *bc, am.mul(bm));
                out += &t;
            }
        }
    }
    out
}

impl Zero for FormalSeries {
    fn zero() -> Self {
        FormalSeries::zero(Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl std::ops::Add for FormalSeries {
    type Output = FormalSeries;
    fn add(self, rhs: FormalSeries) -> FormalSeries {
        FormalSeries::add(&self, &rhs)
    }
}

impl One for FormalSeries {
    fn one() -> Self {
        FormalSeries::one(Vec::new())
    }
}

impl std::ops::Mul for FormalSeries {
    type Output = FormalSeries;
    fn mul(self, rhs: FormalSeries) -> FormalSeries {
        FormalSeries::mul(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_is_eager() {
        let t = VarId::new("ser_t");
        let cap = Cap::new(vec![t], 2);
        let p = LaurentPoly::parse("1 + ser_t + ser_t^2 + ser_t^3").unwrap();
        let s = FormalSeries::new(p, vec![cap]);
        assert_eq!(
            s.poly(),
            &LaurentPoly::parse("1 + ser_t + ser_t^2").unwrap()
        );
        let sq = s.mul(&s);
        assert_eq!(
            sq.poly(),
            &LaurentPoly::parse("1 + 2*ser_t + 3*ser_t^2").unwrap()
        );
    }

    #[test]
    fn inverse_of_one_minus_t() {
        let t = VarId::new("ser_t");
        let s = FormalSeries::new(
            LaurentPoly::parse("1 - ser_t").unwrap(),
            vec![Cap::new(vec![t], 3)],
        );
        let inv = s.inverse().unwrap();
        assert_eq!(
            inv.poly(),
            &LaurentPoly::parse("1 + ser_t + ser_t^2 + ser_t^3").unwrap()
        );
        assert!(inv.mul(&s).poly().is_one());
    }

    #[test]
    fn inverse_requires_nilpotent_tail() {
        let t = VarId::new("ser_t");
        let s = FormalSeries::new(
            LaurentPoly::parse("1 - ser_u").unwrap(),
            vec![Cap::new(vec![t], 3)],
        );
        assert!(matches!(s.inverse(), Err(Error::NonTerminating(_))));
    }
}
