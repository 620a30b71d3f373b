//! The edge elimination polynomial `ξ` and its labeled variant `ξ_lab`,
//! by memoized recurrence and by subset expansion, plus the unrestricted
//! recurrence with an extra deletion weight `w` used to study confluence.

mod engine;
mod expansion;
mod labeling;
mod policy;
mod rules;

use num_rational::BigRational;

use crate::error::Result;
use crate::multigraph::Multigraph;
use crate::poly::MPoly;

pub use engine::{xi_lab_with_policy, xi_with_policy, CacheStats, MemoMode, XiEngine};
pub use expansion::{xi_expansion, xi_lab_expansion, MAX_EXPANSION_EDGES};
pub use labeling::{label_var, EdgeLabeling};
pub use policy::EliminationPolicy;
pub use rules::{GeneralParams, LabeledParams};

pub(crate) use expansion::mask_tables;
#[allow(unused_imports)]
pub(crate) use labeling::valid_label;

/// `ξ(G; x, y, z)` via the memoized recurrence.
pub fn xi(g: &Multigraph) -> MPoly {
    XiEngine::new().xi(g)
}

/// `ξ_lab(G; x, y, z, t̄)` via the memoized recurrence.
pub fn xi_lab(g: &Multigraph, lab: &EdgeLabeling) -> Result<MPoly> {
    XiEngine::new().xi_lab(g, lab)
}

/// Value of `ξ = w·ξ(G₋ₑ) + y·ξ(G/ₑ) + z·ξ(G†ₑ)` with `ξ(E₁) = x`,
/// `ξ(∅) = 1`, evaluated strictly in policy order. Unless `w = 1` or `z = 0`
/// the result depends on the order.
pub fn xi_general_eval(
    g: &Multigraph,
    params: &GeneralParams,
    policy: &EliminationPolicy,
) -> BigRational {
    rules::eliminate(g, params, policy)
}

/// Labeled counterpart of [`xi_general_eval`] with per-label `(w, y, z)`.
pub fn xi_lab_general_eval(
    g: &Multigraph,
    lab: &EdgeLabeling,
    params: &LabeledParams,
    policy: &EliminationPolicy,
) -> Result<BigRational> {
    let rule = rules::LabeledGeneralRule::new(g, lab, params)?;
    Ok(rules::eliminate(g, &rule, policy))
}

#[cfg(test)]
mod tests;
