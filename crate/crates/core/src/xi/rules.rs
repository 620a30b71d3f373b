//! Step rules: the coefficients of one elimination step
//! `value(G) = w·value(G₋ₑ) + y·value(G/ₑ) + z·value(G†ₑ)` in a concrete
//! value domain, plus the initial conditions.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use super::labeling::{label_var, EdgeLabeling};
use super::policy::EliminationPolicy;
use crate::error::Result;
use crate::multigraph::{EdgeId, Multigraph};
use crate::poly::MPoly;

pub(crate) trait StepRule {
    type Value: Clone;

    /// Value of the empty graph.
    fn empty(&self) -> Self::Value;
    /// Value of a single vertex.
    fn vertex(&self) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn step(
        &self,
        edge: EdgeId,
        deleted: Self::Value,
        contracted: Self::Value,
        extracted: Self::Value,
    ) -> Self::Value;
}

/// The confluent unlabeled recurrence over `{x, y, z}`.
pub(crate) struct XiRule {
    x: MPoly,
    y: MPoly,
    z: MPoly,
}

impl XiRule {
    pub fn new() -> Self {
        XiRule {
            x: MPoly::named("x"),
            y: MPoly::named("y"),
            z: MPoly::named("z"),
        }
    }
}

impl StepRule for XiRule {
    type Value = MPoly;

    fn empty(&self) -> MPoly {
        MPoly::one()
    }

    fn vertex(&self) -> MPoly {
        self.x.clone()
    }

    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a * b
    }

    fn step(&self, _: EdgeId, deleted: MPoly, contracted: MPoly, extracted: MPoly) -> MPoly {
        &(&deleted + &(&self.y * &contracted)) + &(&self.z * &extracted)
    }
}

/// The confluent labeled recurrence: contraction weighted `y·t_c(e)`,
/// extraction `z·t_c(e)`.
pub(crate) struct XiLabRule {
    x: MPoly,
    factors: BTreeMap<EdgeId, (MPoly, MPoly)>,
}

impl XiLabRule {
    pub fn new(g: &Multigraph, lab: &EdgeLabeling) -> Result<Self> {
        lab.check_total(g)?;
        let y = MPoly::named("y");
        let z = MPoly::named("z");
        let factors = g
            .edge_ids()
            .map(|id| {
                let t = MPoly::var(label_var("t", lab.label(id).expect("checked")));
                (id, (&y * &t, &z * &t))
            })
            .collect();
        Ok(XiLabRule {
            x: MPoly::named("x"),
            factors,
        })
    }
}

impl StepRule for XiLabRule {
    type Value = MPoly;

    fn empty(&self) -> MPoly {
        MPoly::one()
    }

    fn vertex(&self) -> MPoly {
        self.x.clone()
    }

    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a * b
    }

    fn step(&self, edge: EdgeId, deleted: MPoly, contracted: MPoly, extracted: MPoly) -> MPoly {
        let (yt, zt) = &self.factors[&edge];
        &(&deleted + &(yt * &contracted)) + &(zt * &extracted)
    }
}

/// Exact rational coefficients of the recurrence before any confluence
/// restriction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralParams {
    pub w: BigRational,
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

impl GeneralParams {
    pub fn new(w: BigRational, x: BigRational, y: BigRational, z: BigRational) -> Self {
        GeneralParams { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        let r = |v: i64| BigRational::from_integer(v.into());
        GeneralParams::new(r(w), r(x), r(y), r(z))
    }
}

impl StepRule for GeneralParams {
    type Value = BigRational;

    fn empty(&self) -> BigRational {
        BigRational::one()
    }

    fn vertex(&self) -> BigRational {
        self.x.clone()
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn step(&self, _: EdgeId, d: BigRational, c: BigRational, x: BigRational) -> BigRational {
        &self.w * d + &self.y * c + &self.z * x
    }
}

/// Per-label coefficients `(w_λ, y_λ, z_λ)` of the labeled recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledParams {
    pub x: BigRational,
    pub per_label: BTreeMap<String, (BigRational, BigRational, BigRational)>,
}

pub(crate) struct LabeledGeneralRule {
    x: BigRational,
    per_edge: BTreeMap<EdgeId, (BigRational, BigRational, BigRational)>,
}

impl LabeledGeneralRule {
    pub fn new(g: &Multigraph, lab: &EdgeLabeling, params: &LabeledParams) -> Result<Self> {
        lab.check_total(g)?;
        let mut per_edge = BTreeMap::new();
        for id in g.edge_ids() {
            let label = lab.label(id).expect("checked");
            let coeffs = params
                .per_label
                .get(label)
                .ok_or_else(|| crate::Error::MissingWeight(label.to_string()))?;
            per_edge.insert(id, coeffs.clone());
        }
        Ok(LabeledGeneralRule {
            x: params.x.clone(),
            per_edge,
        })
    }
}

impl StepRule for LabeledGeneralRule {
    type Value = BigRational;

    fn empty(&self) -> BigRational {
        BigRational::one()
    }

    fn vertex(&self) -> BigRational {
        self.x.clone()
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn step(&self, edge: EdgeId, d: BigRational, c: BigRational, x: BigRational) -> BigRational {
        let (w, y, z) = &self.per_edge[&edge];
        w * d + y * c + z * x
    }
}

/// Runs the recurrence strictly in the order the policy dictates, with no
/// memoization.
pub(crate) fn eliminate<R: StepRule>(g: &Multigraph, rule: &R, policy: &EliminationPolicy) -> R::Value {
    if g.vertex_count() == 0 {
        return rule.empty();
    }
    if g.edge_count() == 0 {
        let v = rule.vertex();
        let mut acc = v.clone();
        for _ in 1..g.vertex_count() {
            acc = rule.mul(&acc, &v);
        }
        return acc;
    }
    if !g.is_connected() && policy.split_components(g) {
        let mut parts = g.components();
        policy.order_components(g, &mut parts);
        let mut acc = rule.empty();
        for part in &parts {
            acc = rule.mul(&acc, &eliminate(part, rule, policy));
        }
        return acc;
    }
    let e = policy.choose_edge(g);
    let deleted = eliminate(&g.delete_edge(e).expect("edge present"), rule, policy);
    let contracted = eliminate(&g.contract_edge(e).expect("edge present"), rule, policy);
    let extracted = eliminate(&g.extract_edge(e).expect("edge present"), rule, policy);
    rule.step(e, deleted, contracted, extracted)
}
