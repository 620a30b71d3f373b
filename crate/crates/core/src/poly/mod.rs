//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! A polynomial carries its own sorted variable list and only mentions
//! variables that actually occur, so structural equality is polynomial
//! equality. Operations on polynomials over different variable lists work
//! over the union.

mod structured;
mod text;
mod var;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use structured::{StructuredPoly, StructuredTerm};
pub use var::Var;

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Exponents, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(v: Var) -> Self {
        MPoly::monomial(1, &[(v, 1)])
    }

    /// Shorthand for `MPoly::var(Var::named(name))`.
    pub fn named(name: &str) -> Self {
        MPoly::var(Var::named(name))
    }

    /// `coeff · ∏ var^exp`. Repeated variables multiply.
    pub fn monomial(coeff: impl Into<BigInt>, powers: &[(Var, u32)]) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return MPoly::zero();
        }
        let mut merged: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in powers {
            *merged.entry(v.clone()).or_default() += e;
        }
        merged.retain(|_, e| *e > 0);
        let vars: Vec<Var> = merged.keys().cloned().collect();
        let exps: Exponents = merged.values().copied().collect();
        MPoly {
            vars,
            terms: BTreeMap::from([(exps, coeff)]),
        }
    }

    /// Builds from explicit parts, dropping zero coefficients and unused
    /// variables. `vars` need not be sorted but must be distinct.
    pub fn from_terms(
        vars: Vec<Var>,
        terms: impl IntoIterator<Item = (Exponents, BigInt)>,
    ) -> Self {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&a, &b| vars[a].cmp(&vars[b]));
        let sorted_vars: Vec<Var> = order.iter().map(|&i| vars[i].clone()).collect();
        let mut map: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (exps, c) in terms {
            let key: Exponents = order.iter().map(|&i| exps[i]).collect();
            *map.entry(key).or_insert_with(BigInt::zero) += c;
        }
        let mut p = MPoly {
            vars: sorted_vars,
            terms: map,
        };
        p.normalize();
        p
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty() && self.terms.get(&Vec::new()).is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded lexicographic descending order.
    pub fn terms(&self) -> Vec<(&[u32], &BigInt)> {
        let mut out: Vec<(&[u32], &BigInt)> =
            self.terms.iter().map(|(e, c)| (e.as_slice(), c)).collect();
        out.sort_by(|a, b| grlex(b.0, a.0));
        out
    }

    fn var_position(&self, v: &Var) -> Option<usize> {
        self.vars.binary_search(v).ok()
    }

    /// Coefficient of `∏ var^exp` (zero when absent).
    pub fn coefficient(&self, powers: &[(Var, u32)]) -> BigInt {
        let mut exps = vec![0u32; self.vars.len()];
        for (v, e) in powers {
            if *e == 0 {
                continue;
            }
            match self.var_position(v) {
                Some(i) => exps[i] += e,
                None => return BigInt::zero(),
            }
        }
        self.terms.get(&exps).cloned().unwrap_or_default()
    }

    /// Highest exponent of `v` over all terms.
    pub fn degree_in(&self, v: &Var) -> u32 {
        match self.var_position(v) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Drops zero coefficients and variables that no longer occur.
    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return;
        }
        self.vars = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = std::mem::take(&mut self.terms);
        self.terms = terms
            .into_iter()
            .map(|(e, c)| {
                let e = e
                    .into_iter()
                    .zip(&used)
                    .filter(|(_, &u)| u)
                    .map(|(x, _)| x)
                    .collect();
                (e, c)
            })
            .collect();
    }

    /// Re-expresses the terms over `vars`, a sorted superset of ours.
    fn terms_over(&self, vars: &[Var]) -> BTreeMap<Exponents, BigInt> {
        if vars == self.vars.as_slice() {
            return self.terms.clone();
        }
        let slots: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.binary_search(v).expect("superset"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut wide = vec![0u32; vars.len()];
                for (k, &slot) in slots.iter().enumerate() {
                    wide[slot] = e[k];
                }
                (wide, c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &MPoly) -> Vec<Var> {
        if self.vars == other.vars {
            return self.vars.clone();
        }
        let mut vars: Vec<Var> = self.vars.iter().chain(&other.vars).cloned().collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn pow(&self, mut k: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Simultaneous substitution. Unbound variables stay as they are. A
    /// variable bound to zero contributes `0^0 = 1` where it does not occur.
    pub fn substitute(&self, bindings: &BTreeMap<Var, MPoly>) -> MPoly {
        let images: Vec<MPoly> = self
            .vars
            .iter()
            .map(|v| bindings.get(v).cloned().unwrap_or_else(|| MPoly::var(v.clone())))
            .collect();
        let mut powers: Vec<HashMap<u32, MPoly>> = vec![HashMap::new(); self.vars.len()];
        let mut acc: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        let mut acc_vars: Vec<Var> = Vec::new();
        for (exps, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let power = powers[i]
                    .entry(e)
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                term = &term * &power;
                if term.is_zero() {
                    break;
                }
            }
            if term.is_zero() {
                continue;
            }
            if term.vars != acc_vars {
                let vars = {
                    let mut v: Vec<Var> = acc_vars.iter().chain(&term.vars).cloned().collect();
                    v.sort();
                    v.dedup();
                    v
                };
                if vars != acc_vars {
                    acc = MPoly {
                        vars: acc_vars,
                        terms: acc,
                    }
                    .terms_over(&vars);
                    acc_vars = vars;
                }
            }
            for (e, x) in term.terms_over(&acc_vars) {
                *acc.entry(e).or_insert_with(BigInt::zero) += x;
            }
        }
        let mut p = MPoly {
            vars: acc_vars,
            terms: acc,
        };
        p.normalize();
        p
    }

    /// Exact value at a rational point. Every occurring variable must be bound.
    pub fn evaluate(&self, point: &BTreeMap<Var, BigRational>) -> Result<BigRational> {
        let values: Vec<&BigRational> = self
            .vars
            .iter()
            .map(|v| point.get(v).ok_or_else(|| Error::UnboundVariable(v.name())))
            .collect::<Result<_>>()?;
        let mut total = BigRational::zero();
        for (exps, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (value, &e) in values.iter().zip(exps) {
                if e > 0 {
                    term *= num_traits::pow::pow((*value).clone(), e as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Quotient `q` with `self = q · divisor`, or [`Error::NonzeroRemainder`].
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let vars = self.union_vars(divisor);
        let d = divisor.terms_over(&vars);
        let (lead_exp, lead_coeff) = d.last_key_value().map(|(e, c)| (e.clone(), c.clone())).expect("nonzero");
        let mut rest = self.terms_over(&vars);
        let mut quotient: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        while let Some((exp, coeff)) = rest.last_key_value() {
            if exp.iter().zip(&lead_exp).any(|(a, b)| a < b) {
                return Err(Error::NonzeroRemainder);
            }
            if !(coeff % &lead_coeff).is_zero() {
                return Err(Error::NonzeroRemainder);
            }
            let q_coeff = coeff / &lead_coeff;
            let q_exp: Exponents = exp.iter().zip(&lead_exp).map(|(a, b)| a - b).collect();
            for (e, c) in &d {
                let key: Exponents = e.iter().zip(&q_exp).map(|(a, b)| a + b).collect();
                let slot = rest.entry(key.clone()).or_insert_with(BigInt::zero);
                *slot -= c * &q_coeff;
                if slot.is_zero() {
                    rest.remove(&key);
                }
            }
            quotient.insert(q_exp, q_coeff);
        }
        let mut q = MPoly {
            vars,
            terms: quotient,
        };
        q.normalize();
        Ok(q)
    }

    /// Maps every term to a new polynomial and sums the images.
    pub fn map_terms(&self, mut f: impl FnMut(&[(Var, u32)], &BigInt) -> MPoly) -> MPoly {
        let mut total = MPoly::zero();
        for (exps, c) in &self.terms {
            let powers: Vec<(Var, u32)> = self
                .vars
                .iter()
                .zip(exps)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| (v.clone(), e))
                .collect();
            total = &total + &f(&powers, c);
        }
        total
    }

    /// Coefficients of a univariate polynomial in `v`, index = exponent.
    /// Fails if any other variable occurs.
    pub fn univariate_coefficients(&self, v: &Var) -> Option<Vec<BigInt>> {
        if self.vars.iter().any(|w| w != v) {
            return None;
        }
        let mut out = vec![BigInt::zero(); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            out[e.first().copied().unwrap_or(0) as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(v: Var, coeffs: &[BigInt]) -> MPoly {
        MPoly::from_terms(
            vec![v],
            coeffs.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone())),
        )
    }

    /// Canonical text form, e.g. `x^3 + 2*x^2*y - z`.
    pub fn to_text(&self) -> String {
        text::render(self)
    }

    pub fn parse(s: &str) -> Result<MPoly> {
        text::parse(s)
    }

    pub fn to_structured(&self) -> StructuredPoly {
        structured::to_structured(self)
    }

    pub fn from_structured(s: &StructuredPoly) -> Result<MPoly> {
        structured::from_structured(s)
    }
}

/// Graded lexicographic comparison of exponent vectors.
fn grlex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    fn add(self, other: &MPoly) -> MPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let vars = self.union_vars(other);
        let mut terms = self.terms_over(&vars);
        for (e, c) in other.terms_over(&vars) {
            *terms.entry(e).or_insert_with(BigInt::zero) += c;
        }
        let mut p = MPoly { vars, terms };
        p.normalize();
        p
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, other: &MPoly) -> MPoly {
        self + &(-other)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        let vars = self.union_vars(other);
        let a = self.terms_over(&vars);
        let b = other.terms_over(&vars);
        let mut terms: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let mut p = MPoly { vars, terms };
        p.normalize();
        p
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $method(self, other: MPoly) -> MPoly {
                (&self).$method(&other)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, other: &MPoly) -> MPoly {
                (&self).$method(other)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(c)
    }
}

/// Rational helper used by evaluation call sites.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
