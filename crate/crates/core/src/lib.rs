//! Exact computation of the edge elimination polynomial `ξ(G; x, y, z)`, its
//! edge-labeled variant, and the classical graph polynomials obtained from
//! it by substitution.
//!
//! `ξ` is computed two independent ways: by the deletion, contraction and
//! extraction recurrence
//!
//! ```text
//! ξ(G) = ξ(G₋ₑ) + y·ξ(G/ₑ) + z·ξ(G†ₑ),  ξ(G₁ ⊕ G₂) = ξ(G₁)·ξ(G₂),  ξ(E₁) = x,  ξ(∅) = 1
//! ```
//!
//! memoized over canonical forms, and by summing over pairs of edge sets
//! `(A, B)` covering disjoint vertex sets.
//!
//! ```
//! use edgepoly::{xi, Multigraph};
//!
//! let path = Multigraph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
//! assert_eq!(xi(&path).to_text(), "x^3 + 2*x^2*y + x*y^2 + 2*x*z + y*z");
//! ```

pub mod atlas;
pub mod error;
pub mod multigraph;
pub mod poly;
pub mod specializations;
pub mod verify;
pub mod xi;

pub use error::{Error, Result};
pub use multigraph::{graph6, CanonicalKey, Edge, EdgeId, EdgeSubset, Multigraph};
pub use poly::{MPoly, Var};
pub use specializations::{LabelWeights, Specialization};
pub use xi::{
    xi, xi_expansion, xi_general_eval, xi_lab, xi_lab_expansion, EdgeLabeling, EliminationPolicy,
    GeneralParams, MemoMode, XiEngine,
};
