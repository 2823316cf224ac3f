//! Sparse Laurent polynomials in one or two variables.
//!
//! Coefficients live in `Z` or `Z/2` (tagged at runtime by [`Ring`]); all
//! integer arithmetic is overflow-checked and an overflow is a hard error,
//! never a silent wrap. Exponents may be negative. Terms are kept in a
//! `BTreeMap` keyed by exponent (tuple), so iteration order, `Display`, and
//! JSON serialization are canonical without extra sorting.
//!
//! The JSON form is
//! `{"ring":"int","vars":["v","z"],"terms":[[[0,0],1],[[2,0],-1]]}`
//! with terms sorted lexicographically by exponent tuple; parsing rejects
//! zero coefficients, duplicate exponents, and mod-2 coefficients other
//! than 1, so serialize/parse round-trips are bit-exact.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Coefficient ring tag.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Ring {
    /// Integers with checked arithmetic.
    Int,
    /// The field with two elements; stored coefficients are always 1.
    Mod2,
}

impl Ring {
    fn name(self) -> &'static str {
        match self {
            Ring::Int => "int",
            Ring::Mod2 => "mod2",
        }
    }

    fn parse(s: &str) -> Result<Ring, LaurentError> {
        match s {
            "int" => Ok(Ring::Int),
            "mod2" => Ok(Ring::Mod2),
            other => Err(LaurentError::Json(format!("unknown ring {other:?}"))),
        }
    }
}

/// Errors from polynomial arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("ring mismatch between operands")]
    RingMismatch,
    #[error("variable mismatch between operands")]
    VarMismatch,
    #[error("integer overflow in coefficient arithmetic")]
    Overflow,
    #[error("order/degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("evaluation at 0 hits a negative exponent of {var}")]
    PoleAtZero { var: char },
    #[error("polynomial has no variable named {0}")]
    NoSuchVar(char),
    #[error("exponent scaling factor must be nonzero")]
    ZeroScale,
    #[error("invalid polynomial JSON: {0}")]
    Json(String),
}

type Exp = i64;
type Coeff = i64;

fn coeff_add(ring: Ring, a: Coeff, b: Coeff) -> Result<Coeff, LaurentError> {
    let s = a.checked_add(b).ok_or(LaurentError::Overflow)?;
    Ok(match ring {
        Ring::Int => s,
        Ring::Mod2 => s.rem_euclid(2),
    })
}

fn coeff_mul(ring: Ring, a: Coeff, b: Coeff) -> Result<Coeff, LaurentError> {
    let p = a.checked_mul(b).ok_or(LaurentError::Overflow)?;
    Ok(match ring {
        Ring::Int => p,
        Ring::Mod2 => p.rem_euclid(2),
    })
}

fn normalize_coeff(ring: Ring, c: Coeff) -> Coeff {
    match ring {
        Ring::Int => c,
        Ring::Mod2 => c.rem_euclid(2),
    }
}

/// Laurent polynomial in a single named variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent1 {
    ring: Ring,
    var: char,
    terms: BTreeMap<Exp, Coeff>,
}

/// Laurent polynomial in an ordered pair of named variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent2 {
    ring: Ring,
    vars: [char; 2],
    terms: BTreeMap<(Exp, Exp), Coeff>,
}

impl Laurent1 {
    pub fn zero(ring: Ring, var: char) -> Self {
        Laurent1 { ring, var, terms: BTreeMap::new() }
    }

    pub fn one(ring: Ring, var: char) -> Self {
        Self::monomial(ring, var, 0, 1)
    }

    /// `coeff * var^exp` (normalized; a zero coefficient gives the zero polynomial).
    pub fn monomial(ring: Ring, var: char, exp: Exp, coeff: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        let c = normalize_coeff(ring, coeff);
        if c != 0 {
            terms.insert(exp, c);
        }
        Laurent1 { ring, var, terms }
    }

    pub fn from_terms(
        ring: Ring,
        var: char,
        items: impl IntoIterator<Item = (Exp, Coeff)>,
    ) -> Result<Self, LaurentError> {
        let mut p = Self::zero(ring, var);
        for (e, c) in items {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exp, Coeff)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: Exp) -> Coeff {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    fn add_term(&mut self, exp: Exp, coeff: Coeff) -> Result<(), LaurentError> {
        let cur = self.terms.get(&exp).copied().unwrap_or(0);
        let next = coeff_add(self.ring, cur, normalize_coeff(self.ring, coeff))?;
        if next == 0 {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, next);
        }
        Ok(())
    }

    fn check_compat(&self, other: &Self) -> Result<(), LaurentError> {
        if self.ring != other.ring {
            return Err(LaurentError::RingMismatch);
        }
        if self.var != other.var {
            return Err(LaurentError::VarMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        match self.ring {
            Ring::Mod2 => self.clone(),
            Ring::Int => {
                let mut out = self.clone();
                for c in out.terms.values_mut() {
                    *c = -*c;
                }
                out
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_compat(other)?;
        let mut out = Self::zero(self.ring, self.var);
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                let e = e1.checked_add(e2).ok_or(LaurentError::Overflow)?;
                out.add_term(e, coeff_mul(self.ring, c1, c2)?)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self, LaurentError> {
        let mut out = Self::one(self.ring, self.var);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Least exponent with nonzero coefficient.
    pub fn ord(&self) -> Result<Exp, LaurentError> {
        self.terms.keys().next().copied().ok_or(LaurentError::ZeroPolynomial)
    }

    /// Greatest exponent with nonzero coefficient.
    pub fn deg(&self) -> Result<Exp, LaurentError> {
        self.terms.keys().next_back().copied().ok_or(LaurentError::ZeroPolynomial)
    }

    /// Coefficient of the least-exponent term.
    pub fn leading_low_coeff(&self) -> Result<Coeff, LaurentError> {
        self.terms.values().next().copied().ok_or(LaurentError::ZeroPolynomial)
    }

    /// Substitutes `var -> var^-1`.
    pub fn invert_var(&self) -> Self {
        let terms = self.terms.iter().map(|(&e, &c)| (-e, c)).collect();
        Laurent1 { ring: self.ring, var: self.var, terms }
    }

    pub fn rename_var(&self, new: char) -> Self {
        let mut out = self.clone();
        out.var = new;
        out
    }

    pub fn reduce_mod2(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(&e, &c)| {
                let r = c.rem_euclid(2);
                (r != 0).then_some((e, r))
            })
            .collect();
        Laurent1 { ring: Ring::Mod2, var: self.var, terms }
    }

    /// Multiplies by `coeff * var^exp`.
    pub fn mul_monomial(&self, exp: Exp, coeff: Coeff) -> Result<Self, LaurentError> {
        self.mul(&Self::monomial(self.ring, self.var, exp, coeff))
    }

    /// Widens into a two-variable polynomial; `self.var` takes slot `slot`,
    /// the other slot is `other` with exponent 0 everywhere.
    pub fn widen(&self, other: char, slot: usize) -> Result<Laurent2, LaurentError> {
        if other == self.var {
            return Err(LaurentError::VarMismatch);
        }
        let vars = if slot == 0 { [self.var, other] } else { [other, self.var] };
        let terms = self
            .terms
            .iter()
            .map(|(&e, &c)| (if slot == 0 { (e, 0) } else { (0, e) }, c))
            .collect();
        Ok(Laurent2 { ring: self.ring, vars, terms })
    }

    pub fn to_json_string(&self) -> String {
        let payload = LaurentJson {
            ring: self.ring.name().to_string(),
            vars: vec![self.var],
            terms: self.terms.iter().map(|(&e, &c)| (vec![e], c)).collect(),
        };
        serde_json::to_string(&payload).expect("laurent json")
    }

    pub fn from_json_str(s: &str) -> Result<Self, LaurentError> {
        let payload: LaurentJson =
            serde_json::from_str(s).map_err(|e| LaurentError::Json(e.to_string()))?;
        let ring = Ring::parse(&payload.ring)?;
        if payload.vars.len() != 1 {
            return Err(LaurentError::Json("expected exactly one variable".into()));
        }
        let mut terms = BTreeMap::new();
        for (exps, c) in payload.terms {
            let [e] = exps[..] else {
                return Err(LaurentError::Json("expected one exponent per term".into()));
            };
            validate_json_coeff(ring, c)?;
            if terms.insert(e, c).is_some() {
                return Err(LaurentError::Json(format!("duplicate exponent {e}")));
            }
        }
        Ok(Laurent1 { ring, var: payload.vars[0], terms })
    }
}

impl Laurent2 {
    pub fn zero(ring: Ring, vars: [char; 2]) -> Self {
        Laurent2 { ring, vars, terms: BTreeMap::new() }
    }

    pub fn one(ring: Ring, vars: [char; 2]) -> Self {
        Self::monomial(ring, vars, (0, 0), 1)
    }

    pub fn monomial(ring: Ring, vars: [char; 2], exps: (Exp, Exp), coeff: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        let c = normalize_coeff(ring, coeff);
        if c != 0 {
            terms.insert(exps, c);
        }
        Laurent2 { ring, vars, terms }
    }

    pub fn from_terms(
        ring: Ring,
        vars: [char; 2],
        items: impl IntoIterator<Item = ((Exp, Exp), Coeff)>,
    ) -> Result<Self, LaurentError> {
        let mut p = Self::zero(ring, vars);
        for (e, c) in items {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn vars(&self) -> [char; 2] {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((Exp, Exp), Coeff)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exps: (Exp, Exp)) -> Coeff {
        self.terms.get(&exps).copied().unwrap_or(0)
    }

    fn var_slot(&self, var: char) -> Result<usize, LaurentError> {
        self.vars
            .iter()
            .position(|&v| v == var)
            .ok_or(LaurentError::NoSuchVar(var))
    }

    fn add_term(&mut self, exps: (Exp, Exp), coeff: Coeff) -> Result<(), LaurentError> {
        let cur = self.terms.get(&exps).copied().unwrap_or(0);
        let next = coeff_add(self.ring, cur, normalize_coeff(self.ring, coeff))?;
        if next == 0 {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, next);
        }
        Ok(())
    }

    fn check_compat(&self, other: &Self) -> Result<(), LaurentError> {
        if self.ring != other.ring {
            return Err(LaurentError::RingMismatch);
        }
        if self.vars != other.vars {
            return Err(LaurentError::VarMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        match self.ring {
            Ring::Mod2 => self.clone(),
            Ring::Int => {
                let mut out = self.clone();
                for c in out.terms.values_mut() {
                    *c = -*c;
                }
                out
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_compat(other)?;
        let mut out = Self::zero(self.ring, self.vars);
        for (&(a1, b1), &c1) in &self.terms {
            for (&(a2, b2), &c2) in &other.terms {
                let a = a1.checked_add(a2).ok_or(LaurentError::Overflow)?;
                let b = b1.checked_add(b2).ok_or(LaurentError::Overflow)?;
                out.add_term((a, b), coeff_mul(self.ring, c1, c2)?)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self, LaurentError> {
        let mut out = Self::one(self.ring, self.vars);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Multiplies by `coeff * v0^e0 * v1^e1`.
    pub fn mul_monomial(&self, exps: (Exp, Exp), coeff: Coeff) -> Result<Self, LaurentError> {
        self.mul(&Self::monomial(self.ring, self.vars, exps, coeff))
    }

    /// Least exponent of `var` over all terms.
    pub fn ord_in(&self, var: char) -> Result<Exp, LaurentError> {
        let slot = self.var_slot(var)?;
        self.terms
            .keys()
            .map(|&(a, b)| if slot == 0 { a } else { b })
            .min()
            .ok_or(LaurentError::ZeroPolynomial)
    }

    /// Greatest exponent of `var` over all terms.
    pub fn deg_in(&self, var: char) -> Result<Exp, LaurentError> {
        let slot = self.var_slot(var)?;
        self.terms
            .keys()
            .map(|&(a, b)| if slot == 0 { a } else { b })
            .max()
            .ok_or(LaurentError::ZeroPolynomial)
    }

    /// The coefficient (a polynomial in the other variable) of `var^exp`.
    pub fn coeff_of(&self, var: char, exp: Exp) -> Result<Laurent1, LaurentError> {
        let slot = self.var_slot(var)?;
        let other = self.vars[1 - slot];
        let mut out = Laurent1::zero(self.ring, other);
        for (&(a, b), &c) in &self.terms {
            let (e_var, e_other) = if slot == 0 { (a, b) } else { (b, a) };
            if e_var == exp {
                out.add_term(e_other, c)?;
            }
        }
        Ok(out)
    }

    /// Substitutes `var -> var^k` (k nonzero, possibly negative).
    pub fn scale_exponents(&self, var: char, k: Exp) -> Result<Self, LaurentError> {
        if k == 0 {
            return Err(LaurentError::ZeroScale);
        }
        let slot = self.var_slot(var)?;
        let mut out = Self::zero(self.ring, self.vars);
        for (&(a, b), &c) in &self.terms {
            let e = if slot == 0 { a } else { b };
            let scaled = e.checked_mul(k).ok_or(LaurentError::Overflow)?;
            let key = if slot == 0 { (scaled, b) } else { (a, scaled) };
            out.add_term(key, c)?;
        }
        Ok(out)
    }

    pub fn rename_var(&self, old: char, new: char) -> Result<Self, LaurentError> {
        let slot = self.var_slot(old)?;
        if self.vars[1 - slot] == new {
            return Err(LaurentError::VarMismatch);
        }
        let mut out = self.clone();
        out.vars[slot] = new;
        Ok(out)
    }

    /// Evaluates `var := 1`, collapsing to a polynomial in the other variable.
    pub fn eval_one(&self, var: char) -> Result<Laurent1, LaurentError> {
        let slot = self.var_slot(var)?;
        let other = self.vars[1 - slot];
        let mut out = Laurent1::zero(self.ring, other);
        for (&(a, b), &c) in &self.terms {
            let e_other = if slot == 0 { b } else { a };
            out.add_term(e_other, c)?;
        }
        Ok(out)
    }

    /// Evaluates `var := 0` on the stored terms: positive exponents of `var`
    /// vanish, exponent 0 survives, and a negative exponent is a pole error.
    /// Products must be expanded before calling (`x * (x^-1 + 1)` evaluates
    /// fine because it is stored as `1 + x`).
    pub fn eval_zero(&self, var: char) -> Result<Laurent1, LaurentError> {
        let slot = self.var_slot(var)?;
        let other = self.vars[1 - slot];
        let mut out = Laurent1::zero(self.ring, other);
        for (&(a, b), &c) in &self.terms {
            let (e_var, e_other) = if slot == 0 { (a, b) } else { (b, a) };
            if e_var < 0 {
                return Err(LaurentError::PoleAtZero { var });
            }
            if e_var == 0 {
                out.add_term(e_other, c)?;
            }
        }
        Ok(out)
    }

    pub fn reduce_mod2(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(&e, &c)| {
                let r = c.rem_euclid(2);
                (r != 0).then_some((e, r))
            })
            .collect();
        Laurent2 { ring: Ring::Mod2, vars: self.vars, terms }
    }

    pub fn to_json_string(&self) -> String {
        let payload = LaurentJson {
            ring: self.ring.name().to_string(),
            vars: self.vars.to_vec(),
            terms: self.terms.iter().map(|(&(a, b), &c)| (vec![a, b], c)).collect(),
        };
        serde_json::to_string(&payload).expect("laurent json")
    }

    pub fn from_json_str(s: &str) -> Result<Self, LaurentError> {
        let payload: LaurentJson =
            serde_json::from_str(s).map_err(|e| LaurentError::Json(e.to_string()))?;
        let ring = Ring::parse(&payload.ring)?;
        if payload.vars.len() != 2 {
            return Err(LaurentError::Json("expected exactly two variables".into()));
        }
        let mut terms = BTreeMap::new();
        for (exps, c) in payload.terms {
            let [a, b] = exps[..] else {
                return Err(LaurentError::Json("expected two exponents per term".into()));
            };
            validate_json_coeff(ring, c)?;
            if terms.insert((a, b), c).is_some() {
                return Err(LaurentError::Json(format!("duplicate exponent ({a},{b})")));
            }
        }
        Ok(Laurent2 { ring, vars: [payload.vars[0], payload.vars[1]], terms })
    }
}

fn validate_json_coeff(ring: Ring, c: Coeff) -> Result<(), LaurentError> {
    if c == 0 {
        return Err(LaurentError::Json("zero coefficient in terms".into()));
    }
    if ring == Ring::Mod2 && c != 1 {
        return Err(LaurentError::Json(format!("mod2 coefficient must be 1, got {c}")));
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    ring: String,
    vars: Vec<char>,
    terms: Vec<(Vec<Exp>, Coeff)>,
}

fn fmt_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: Coeff,
    factors: &[(char, Exp)],
) -> fmt::Result {
    let mag = coeff.unsigned_abs();
    if first {
        if coeff < 0 {
            write!(f, "-")?;
        }
    } else if coeff < 0 {
        write!(f, "-")?;
    } else {
        write!(f, "+")?;
    }
    let shown: Vec<&(char, Exp)> = factors.iter().filter(|&&(_, e)| e != 0).collect();
    if shown.is_empty() {
        return write!(f, "{mag}");
    }
    if mag != 1 {
        write!(f, "{mag}")?;
    }
    for &&(v, e) in &shown {
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Laurent1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.terms.iter().enumerate() {
            fmt_term(f, i == 0, c, &[(self.var, e)])?;
        }
        Ok(())
    }
}

impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), &c)) in self.terms.iter().enumerate() {
            fmt_term(f, i == 0, c, &[(self.vars[0], a), (self.vars[1], b)])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l1(items: &[(Exp, Coeff)]) -> Laurent1 {
        Laurent1::from_terms(Ring::Int, 'v', items.iter().copied()).unwrap()
    }

    #[test]
    fn additive_cancellation() {
        let p = l1(&[(1, 1)]);
        let q = l1(&[(1, -1)]);
        assert!(p.add(&q).unwrap().is_zero());
    }

    #[test]
    fn mod2_self_cancellation() {
        let p = Laurent1::from_terms(Ring::Mod2, 'a', [(0, 1), (1, 1)]).unwrap();
        assert!(p.add(&p).unwrap().is_zero());
    }

    #[test]
    fn add_collects_terms() {
        let p = l1(&[(-1, 1), (1, -1)]);
        let q = l1(&[(1, 1)]);
        assert_eq!(p.add(&q).unwrap(), l1(&[(-1, 1)]));
    }

    #[test]
    fn unit_times_inverse() {
        let v = l1(&[(1, 1)]);
        let vinv = l1(&[(-1, 1)]);
        assert_eq!(v.mul(&vinv).unwrap(), Laurent1::one(Ring::Int, 'v'));
    }

    #[test]
    fn square_of_binomial() {
        let p = l1(&[(0, 1), (1, 1)]);
        assert_eq!(p.mul(&p).unwrap(), l1(&[(0, 1), (1, 2), (2, 1)]));
        let m = Laurent1::from_terms(Ring::Mod2, 'a', [(0, 1), (1, 1)]).unwrap();
        assert_eq!(
            m.mul(&m).unwrap(),
            Laurent1::from_terms(Ring::Mod2, 'a', [(0, 1), (2, 1)]).unwrap()
        );
    }

    #[test]
    fn ring_mismatch_rejected() {
        let p = l1(&[(0, 1)]);
        let q = Laurent1::one(Ring::Mod2, 'v');
        assert_eq!(p.add(&q), Err(LaurentError::RingMismatch));
    }

    #[test]
    fn ord_and_deg() {
        let p = l1(&[(-3, 2), (4, 1)]);
        assert_eq!(p.ord().unwrap(), -3);
        assert_eq!(p.deg().unwrap(), 4);
        assert_eq!(Laurent1::zero(Ring::Int, 'v').ord(), Err(LaurentError::ZeroPolynomial));
        let g = Laurent1::from_terms(Ring::Mod2, 'a', [(2, 1), (3, 1), (5, 1)]).unwrap();
        assert_eq!(g.deg().unwrap(), 5);
    }

    #[test]
    fn two_var_substitutions() {
        // v^2 z^2 under v -> v^-2, z -> z^2 becomes v^-4 z^4.
        let p = Laurent2::monomial(Ring::Int, ['v', 'z'], (2, 2), 1);
        let q = p
            .scale_exponents('v', -2)
            .unwrap()
            .scale_exponents('z', 2)
            .unwrap();
        assert_eq!(q, Laurent2::monomial(Ring::Int, ['v', 'z'], (-4, 4), 1));
    }

    #[test]
    fn eval_zero_after_expansion() {
        // x * (x^-1 + 1) is stored as 1 + x, so x := 0 gives 1.
        let x = Laurent2::monomial(Ring::Int, ['a', 'x'], (0, 1), 1);
        let s = Laurent2::from_terms(Ring::Int, ['a', 'x'], [((0, -1), 1), ((0, 0), 1)]).unwrap();
        let prod = x.mul(&s).unwrap();
        let at0 = prod.eval_zero('x').unwrap();
        assert_eq!(at0, Laurent1::one(Ring::Int, 'a'));

        let pole = Laurent2::monomial(Ring::Int, ['a', 'x'], (0, -1), 1);
        assert_eq!(pole.eval_zero('x'), Err(LaurentError::PoleAtZero { var: 'x' }));
    }

    #[test]
    fn eval_one_sums_coefficients() {
        let p = Laurent2::from_terms(
            Ring::Mod2,
            ['a', 'x'],
            [((2, 0), 1), ((2, 1), 1), ((3, 2), 1)],
        )
        .unwrap();
        let q = p.eval_one('x').unwrap();
        assert_eq!(q, Laurent1::from_terms(Ring::Mod2, 'a', [(3, 1)]).unwrap());
    }

    #[test]
    fn mod2_reduction_is_projection() {
        let p = l1(&[(0, 2), (1, 3), (2, -5)]);
        let r = p.reduce_mod2();
        assert_eq!(r, Laurent1::from_terms(Ring::Mod2, 'v', [(1, 1), (2, 1)]).unwrap());
    }

    #[test]
    fn json_round_trip_bit_exact() {
        let p = Laurent2::from_terms(Ring::Int, ['v', 'z'], [((0, 0), 1), ((2, 0), -1), ((2, 2), 1)])
            .unwrap();
        let s = p.to_json_string();
        assert_eq!(
            s,
            r#"{"ring":"int","vars":["v","z"],"terms":[[[0,0],1],[[2,0],-1],[[2,2],1]]}"#
        );
        let q = Laurent2::from_json_str(&s).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.to_json_string(), s);
    }

    #[test]
    fn json_rejects_bad_payloads() {
        assert!(Laurent1::from_json_str(
            r#"{"ring":"int","vars":["v"],"terms":[[[0],0]]}"#
        )
        .is_err());
        assert!(Laurent1::from_json_str(
            r#"{"ring":"mod2","vars":["v"],"terms":[[[0],2]]}"#
        )
        .is_err());
        assert!(Laurent1::from_json_str(
            r#"{"ring":"int","vars":["v"],"terms":[[[0],1],[[0],2]]}"#
        )
        .is_err());
    }

    #[test]
    fn overflow_detected() {
        let big = l1(&[(0, i64::MAX)]);
        assert_eq!(big.add(&big), Err(LaurentError::Overflow));
        assert_eq!(big.mul(&l1(&[(0, 2)])), Err(LaurentError::Overflow));
    }

    #[test]
    fn display_matches_paper_style() {
        let g = Laurent1::from_terms(Ring::Mod2, 'a', [(2, 1), (3, 1), (5, 1)]).unwrap();
        assert_eq!(g.to_string(), "a^2+a^3+a^5");
        let p = Laurent2::from_terms(Ring::Int, ['v', 'z'], [((2, 0), 2), ((4, 0), -1), ((2, 2), 1)])
            .unwrap();
        assert_eq!(p.to_string(), "2v^2+v^2z^2-v^4");
        assert_eq!(Laurent1::zero(Ring::Int, 'v').to_string(), "0");
    }
}
