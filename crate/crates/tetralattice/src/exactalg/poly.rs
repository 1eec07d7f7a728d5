//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! graded lexicographic order over the registry order. No zero coefficient is
//! ever stored, so structural equality is mathematical equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::vars::VarId;
use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector with possibly negative entries, stored sparsely as
/// `(variable, exponent)` pairs sorted by variable with no zero exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarId, i32)>);

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `v^e`.
    pub fn var_pow(v: VarId, e: i32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Build from arbitrary pairs (merged, zero exponents dropped).
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, i32)>) -> Self {
        let mut acc: BTreeMap<VarId, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_insert(0) += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    /// Sorted `(variable, exponent)` pairs.
    pub fn pairs(&self) -> &[(VarId, i32)] {
        &self.0
    }

    /// Exponent of `v` (0 when absent).
    pub fn exponent(&self, v: VarId) -> i32 {
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    /// True for the empty monomial.
    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Product of monomials (exponent addition).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Inverse monomial (negated exponents).
    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    /// `self / other`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    /// `self^k`.
    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Rename variables through `map` (variables absent from `map` unchanged).
    pub fn rename(&self, map: &HashMap<VarId, VarId>) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (*map.get(&v).unwrap_or(&v), e)))
    }

    /// Componentwise minimum with `other` (used to clear denominators).
    pub fn gcd_min(&self, other: &Monomial) -> Monomial {
        let mut pairs = Vec::new();
        let mut vs: Vec<VarId> = self.0.iter().chain(other.0.iter()).map(|p| p.0).collect();
        vs.sort();
        vs.dedup();
        for v in vs {
            let e = self.exponent(v).min(other.exponent(v));
            if e != 0 {
                pairs.push((v, e));
            }
        }
        Monomial(pairs)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent of the
    /// earliest registered variable where the two differ (larger wins).
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            let va = a.get(i).map(|p| p.0);
            let vb = b.get(j).map(|p| p.0);
            let (v, ea, eb) = match (va, vb) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) => (x, a[i].1, 0),
                (None, Some(y)) => (y, 0, b[j].1),
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Less => (x, a[i].1, 0),
                    Ordering::Greater => (y, 0, b[j].1),
                    Ordering::Equal => (x, a[i].1, b[j].1),
                },
            };
            if ea != eb {
                return ea.cmp(&eb);
            }
            if va == Some(v) {
                i += 1;
            }
            if vb == Some(v) {
                j += 1;
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse Laurent polynomial over exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1`.
    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// Constant polynomial.
    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    /// Integer constant.
    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// Rational constant `n/d`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Single term `c * m`.
    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// Monomial with unit coefficient.
    pub fn monomial(m: Monomial) -> Self {
        Self::term(Rational::one(), m)
    }

    /// The variable `v`.
    pub fn var(v: VarId) -> Self {
        Self::monomial(Monomial::var_pow(v, 1))
    }

    /// `v^e` for any integer `e`.
    pub fn var_pow(v: VarId, e: i32) -> Self {
        Self::monomial(Monomial::var_pow(v, e))
    }

    /// Variable by name (interned).
    pub fn named(name: &str) -> Self {
        Self::var(VarId::new(name))
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`LaurentPoly::is_zero`]: no stored terms.
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// True for the constant one.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    /// Iterate terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `m`.
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    /// If the polynomial is a constant, return it.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// If the polynomial is a single term, return it.
    pub fn as_term(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Leading (largest) term.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Trailing (smallest) term.
    pub fn trailing(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next()
    }

    /// Variables occurring in the polynomial, sorted.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self
            .terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|p| p.0))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// True when every coefficient is nonnegative.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Add `c * m * other` into `self` (fused multiply-accumulate).
    pub fn add_scaled(&mut self, other: &LaurentPoly, c: &Rational, m: &Monomial) {
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), oc * c);
        }
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Multiply by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.mul(m), x.clone()))
                .collect(),
        }
    }

    /// Nonnegative or negative integer power (negative powers need a single term).
    pub fn pow(&self, k: i32) -> Result<LaurentPoly> {
        if k < 0 {
            let (m, c) = self
                .as_term()
                .ok_or_else(|| Error::NotInvertible(self.to_string()))?;
            return Ok(LaurentPoly::term(c.recip().pow(-k), m.pow(k)));
        }
        if let Some((m, c)) = self.as_term() {
            return Ok(LaurentPoly::term(c.pow(k), m.pow(k)));
        }
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = k as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a single-term polynomial.
    pub fn inv_term(&self) -> Result<LaurentPoly> {
        self.pow(-1)
    }

    /// Exact quotient `self / den`.
    ///
    /// Both operands are first divided by their monomial content, which makes
    /// them honest polynomials with the divisor coprime to every variable; an
    /// exact Laurent quotient then exists iff an exact polynomial quotient
    /// does, and ordinary leading-term division (graded lex is a well-order on
    /// nonnegative exponents) decides it.
    pub fn div_exact(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        if den.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some((m, c)) = den.as_term() {
            return Ok(self.mul_monomial(&m.inv()).scale(&c.recip()));
        }
        let num_content = self.monomial_content();
        let den_content = den.monomial_content();
        let num = self.mul_monomial(&num_content.inv());
        let den = den.mul_monomial(&den_content.inv());
        let (dlm, dlc) = den.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = num;
        let mut quot = LaurentPoly::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.div(&dlm);
            if qm.pairs().iter().any(|&(_, e)| e < 0) {
                return Err(Error::NotDivisible);
            }
            let qc = rc / &dlc;
            rem.add_scaled(&den, &(-qc.clone()), &qm);
            quot.add_term(qm, qc);
        }
        Ok(quot.mul_monomial(&num_content.div(&den_content)))
    }

    /// Largest monomial dividing every term (componentwise minimum exponent).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        let mut acc = first.clone();
        for m in it {
            acc = acc.gcd_min(m);
        }
        acc
    }

    /// Substitute variables by polynomials (rational constants are constant polynomials).
    pub fn substitute(&self, bindings: &HashMap<VarId, LaurentPoly>) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        let mut cache: HashMap<(VarId, i32), LaurentPoly> = HashMap::new();
        for (m, c) in &self.terms {
            let mut keep = Vec::new();
            let mut factor = LaurentPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                match bindings.get(&v) {
                    None => keep.push((v, e)),
                    Some(val) => {
                        if e < 0 && val.is_zero() {
                            return Err(Error::PoleAtZero(v.name()));
                        }
                        let p = match cache.get(&(v, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = val.pow(e).map_err(|_| Error::NotInvertible(v.name()))?;
                                cache.insert((v, e), p.clone());
                                p
                            }
                        };
                        factor = &factor * &p;
                    }
                }
            }
            out.add_scaled(&factor, &Rational::one(), &Monomial(keep));
        }
        Ok(out)
    }

    /// Substitute a single variable.
    pub fn subs(&self, v: VarId, val: &LaurentPoly) -> Result<LaurentPoly> {
        let mut b = HashMap::new();
        b.insert(v, val.clone());
        self.substitute(&b)
    }

    /// Evaluate at exact rational values; every occurring variable must be bound.
    pub fn eval(&self, point: &HashMap<VarId, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| Error::Incompatible(format!("unbound variable {v}")))?;
                if e < 0 && x.is_zero() {
                    return Err(Error::PoleAtZero(v.name()));
                }
                t *= x.pow(e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Rename variables (e.g. swap `z_i` and `z_{i+1}`).
    pub fn rename(&self, map: &HashMap<VarId, VarId>) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.rename(map), c.clone());
        }
        out
    }

    /// Swap two variables.
    pub fn swap_vars(&self, a: VarId, b: VarId) -> LaurentPoly {
        let mut map = HashMap::new();
        map.insert(a, b);
        map.insert(b, a);
        self.rename(&map)
    }

    /// Keep only terms satisfying `pred`.
    pub fn filter_terms(&self, mut pred: impl FnMut(&Monomial) -> bool) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| pred(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient extraction with respect to one variable: the polynomial
    /// multiplying `v^e`.
    pub fn coeff_of_var_pow(&self, v: VarId, e: i32) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == e {
                let rest = Monomial::from_pairs(m.pairs().iter().copied().filter(|p| p.0 != v));
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Sum of an iterator of polynomials.
    pub fn sum<'a>(it: impl IntoIterator<Item = &'a LaurentPoly>) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for p in it {
            out += p;
        }
        out
    }

    /// Product of an iterator of polynomials.
    pub fn product<'a>(it: impl IntoIterator<Item = &'a LaurentPoly>) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for p in it {
            out = &out * p;
        }
        out
    }

    /// Canonical text: terms in descending graded-lex order, every exponent
    /// explicit, coefficients as `p` or `p/q`.
    pub fn to_canonical(&self) -> String {
        self.to_string()
    }

    /// Parse the canonical text form (also accepts implicit `^1` and `*`-free
    /// coefficient juxtaposition is *not* accepted; use `*`).
    pub fn parse(s: &str) -> Result<LaurentPoly> {
        Parser::new(s).parse_poly()
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono: Vec<String> = m
                .pairs()
                .iter()
                .map(|&(v, e)| format!("{}^{}", v.name(), e))
                .collect();
            if mono.is_empty() {
                f.write_str(&fmt_rational(&a))?;
            } else if a.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LaurentPoly::parse(s)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            s: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at byte {} of `{}`",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.s.len() && (self.s[self.pos] == b'-' || self.s[self.pos] == b'+') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        t.parse::<BigInt>()
            .map_err(|_| self.err("expected integer"))
    }

    fn name(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        if !(self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphabetic())) {
            return Err(self.err("expected variable name"));
        }
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        // Optional grid superscript `^(j)`.
        if self.s[self.pos..].starts_with(b"^(") {
            let save = self.pos;
            self.pos += 2;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if self.pos < self.s.len() && self.s[self.pos] == b')' {
                self.pos += 1;
            } else {
                self.pos = save;
            }
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn factor(&mut self, coeff: &mut Rational, mono: &mut Vec<(VarId, i32)>) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.int()?;
                let mut r = Rational::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.int()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    r = Rational::new(r.numer().clone(), d);
                }
                *coeff *= r;
                Ok(())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let n = self.name()?;
                let mut e = 1i32;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let x = self.int()?;
                    e = i32::try_from(x).map_err(|_| self.err("exponent too large"))?;
                }
                mono.push((VarId::new(&n), e));
                Ok(())
            }
            _ => Err(self.err("expected factor")),
        }
    }

    fn parse_poly(&mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        let mut sign = Rational::one();
        match self.peek() {
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            None => return Err(self.err("empty input")),
            _ => {}
        }
        loop {
            let mut coeff = sign.clone();
            let mut mono = Vec::new();
            self.factor(&mut coeff, &mut mono)?;
            while self.peek() == Some(b'*') {
                self.pos += 1;
                self.factor(&mut coeff, &mut mono)?;
            }
            out.add_term(Monomial::from_pairs(mono), coeff);
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = Rational::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -Rational::one();
                }
                Some(_) => return Err(self.err("unexpected character")),
            }
        }
        Ok(out)
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::int(c)
    }
}

impl From<VarId> for LaurentPoly {
    fn from(v: VarId) -> Self {
        LaurentPoly::var(v)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (small, big) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly::zero();
        for (m, c) in &small.terms {
            out.add_scaled(big, c, m);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let z1 = LaurentPoly::named("z1");
        let z2 = LaurentPoly::named("z2");
        assert_eq!(&(&z1 + &z2) * &(&z1 - &z2), &(&z1 * &z1) - &(&z2 * &z2));
    }

    #[test]
    fn additive_identity() {
        let a = p("3/2*z1^2*z2^-1 - q^1 + 7");
        assert_eq!(&a + &LaurentPoly::zero(), a);
    }

    #[test]
    fn laurent_expansion_by_hand() {
        // (1 + q z1^-1)(1 - q z1^-1) = 1 - q^2 z1^-2
        let a = p("1 + q*z1^-1");
        let b = p("1 - q*z1^-1");
        assert_eq!(&a * &b, p("1 - q^2*z1^-2"));
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(
            p("z1^2 - z2^2").div_exact(&p("z1 - z2")).unwrap(),
            p("z1 + z2")
        );
        let x = p("z1^3*z2^-1 + 5/3*q - z3");
        assert!(x.div_exact(&x).unwrap().is_one());
        assert_eq!(
            p("z1^2 + 1").div_exact(&p("z1 - z2")),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn substitution_examples() {
        let mut b = HashMap::new();
        b.insert(VarId::new("z1"), LaurentPoly::one());
        b.insert(VarId::new("z2"), LaurentPoly::one());
        assert!(p("z1*z2^2").substitute(&b).unwrap().is_one());
        let e = p("z1^-1").subs(VarId::new("z1"), &LaurentPoly::zero());
        assert!(matches!(e, Err(Error::PoleAtZero(_))));
        assert!(p("1 - q^2")
            .subs(VarId::q(), &LaurentPoly::zero())
            .unwrap()
            .is_one());
    }

    #[test]
    fn canonical_text_round_trip() {
        let a = p("-3/2*z1^2*z2^-1 + q^3 - 7/5 + z1^(4)^2");
        let s = a.to_canonical();
        assert_eq!(LaurentPoly::parse(&s).unwrap(), a);
        assert_eq!(LaurentPoly::zero().to_canonical(), "0");
    }

    #[test]
    fn graded_lex_leading_term() {
        let a = p("z1 + z2^2 + 1");
        assert_eq!(
            a.leading().unwrap().0,
            &Monomial::var_pow(VarId::new("z2"), 2)
        );
    }
}
