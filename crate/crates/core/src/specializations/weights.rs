use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{MPoly, Var};
use crate::xi::label_var;

/// Values for indexed variable families such as `u_λ`, `v_λ`, `x_λ`, `y_λ`
/// or `t_λ`, keyed by family and label: exact rationals, or polynomials
/// for symbolic rebinding.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LabelWeights {
    rational: BTreeMap<Var, BigRational>,
    symbolic: BTreeMap<Var, MPoly>,
}

impl LabelWeights {
    pub fn new() -> Self {
        LabelWeights::default()
    }

    pub fn set(&mut self, family: &str, label: &str, value: BigRational) -> &mut Self {
        let var = label_var(family, label);
        self.symbolic.remove(&var);
        self.rational.insert(var, value);
        self
    }

    pub fn set_symbolic(&mut self, family: &str, label: &str, value: MPoly) -> &mut Self {
        let var = label_var(family, label);
        self.rational.remove(&var);
        self.symbolic.insert(var, value);
        self
    }

    pub fn is_bound(&self, family: &str, label: &str) -> bool {
        let var = label_var(family, label);
        self.rational.contains_key(&var) || self.symbolic.contains_key(&var)
    }

    /// Fails with the first label of `alphabet` without a `family` value.
    pub fn check_total<'a>(
        &self,
        family: &str,
        alphabet: impl IntoIterator<Item = &'a str>,
    ) -> Result<()> {
        match alphabet.into_iter().find(|l| !self.is_bound(family, l)) {
            Some(l) => Err(Error::MissingWeight(label_var(family, l).ascii_name())),
            None => Ok(()),
        }
    }

    /// Substitutes the symbolic bindings; rational ones are applied by
    /// [`LabelWeights::evaluate`].
    pub fn bind(&self, p: &MPoly) -> MPoly {
        p.substitute(&self.symbolic)
    }

    /// Exact value of `p` under all bindings, with `rest` supplying any
    /// remaining variables.
    pub fn evaluate(&self, p: &MPoly, rest: &BTreeMap<Var, BigRational>) -> Result<BigRational> {
        let mut point = rest.clone();
        point.extend(self.rational.iter().map(|(v, r)| (v.clone(), r.clone())));
        self.bind(p).evaluate(&point)
    }
}
