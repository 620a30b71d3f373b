//! Structured (serde) form: variable names plus terms with decimal
//! coefficient strings, in graded lexicographic descending order.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{MPoly, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredPoly {
    pub vars: Vec<String>,
    pub terms: Vec<StructuredTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredTerm {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

pub(super) fn to_structured(p: &MPoly) -> StructuredPoly {
    StructuredPoly {
        vars: p.vars.iter().map(Var::name).collect(),
        terms: p
            .terms()
            .into_iter()
            .map(|(e, c)| StructuredTerm {
                exponents: e.to_vec(),
                coefficient: c.to_string(),
            })
            .collect(),
    }
}

pub(super) fn from_structured(s: &StructuredPoly) -> Result<MPoly> {
    let vars: Vec<Var> = s.vars.iter().map(|n| Var::new(n)).collect::<Result<_>>()?;
    let mut sorted = vars.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != vars.len() {
        return Err(Error::PolyParse {
            pos: 0,
            msg: "duplicate variable".into(),
        });
    }
    let mut terms = Vec::with_capacity(s.terms.len());
    for (i, t) in s.terms.iter().enumerate() {
        if t.exponents.len() != vars.len() {
            return Err(Error::PolyParse {
                pos: i,
                msg: "exponent vector length does not match vars".into(),
            });
        }
        let c: BigInt = t.coefficient.parse().map_err(|_| Error::PolyParse {
            pos: i,
            msg: format!("bad coefficient `{}`", t.coefficient),
        })?;
        terms.push((t.exponents.clone(), c));
    }
    Ok(MPoly::from_terms(vars, terms))
}
