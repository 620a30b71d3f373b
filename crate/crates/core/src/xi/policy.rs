use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::multigraph::{EdgeId, Multigraph};

/// Rule choosing the next edge to eliminate, and whether a disconnected
/// graph is split by the product rule before eliminating.
///
/// Every choice is a pure function of the policy and the graph.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum EliminationPolicy {
    /// Edge with the largest endpoint degree sum; components always split.
    #[default]
    MaxDegreeSum,
    /// First edge of the list present in the graph, otherwise the first
    /// edge; components always split.
    Priority(Vec<EdgeId>),
    /// Pseudo-random edge choice, split decision and component order.
    Seeded(u64),
}

impl EliminationPolicy {
    fn rng(seed: u64, g: &Multigraph) -> ChaCha8Rng {
        let mut h = DefaultHasher::new();
        g.hash(&mut h);
        ChaCha8Rng::seed_from_u64(seed ^ h.finish())
    }

    /// `g` must have at least one edge.
    pub fn choose_edge(&self, g: &Multigraph) -> EdgeId {
        let edges = g.edges();
        assert!(!edges.is_empty(), "no edge to eliminate");
        match self {
            EliminationPolicy::MaxDegreeSum => {
                let deg = g.degrees();
                let mut best = edges[0];
                for e in &edges[1..] {
                    if deg[e.u] + deg[e.v] > deg[best.u] + deg[best.v] {
                        best = *e;
                    }
                }
                best.id
            }
            EliminationPolicy::Priority(order) => order
                .iter()
                .copied()
                .find(|id| g.edge(*id).is_some())
                .unwrap_or(edges[0].id),
            EliminationPolicy::Seeded(seed) => {
                let mut rng = Self::rng(*seed, g);
                edges[rng.gen_range(0..edges.len())].id
            }
        }
    }

    /// Whether to apply the product rule to a disconnected `g` now.
    pub fn split_components(&self, g: &Multigraph) -> bool {
        match self {
            EliminationPolicy::Seeded(seed) => {
                let mut rng = Self::rng(seed.rotate_left(17), g);
                rng.gen_bool(0.5)
            }
            _ => true,
        }
    }

    /// Order in which component factors are multiplied.
    pub fn order_components(&self, g: &Multigraph, parts: &mut [Multigraph]) {
        if let EliminationPolicy::Seeded(seed) = self {
            let mut rng = Self::rng(seed.rotate_left(33), g);
            parts.shuffle(&mut rng);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_choices() {
        let g = Multigraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        for seed in 0..20 {
            let p = EliminationPolicy::Seeded(seed);
            assert_eq!(p.choose_edge(&g), p.choose_edge(&g.clone()));
        }
        let picks: std::collections::BTreeSet<_> = (0..40)
            .map(|s| EliminationPolicy::Seeded(s).choose_edge(&g))
            .collect();
        assert!(picks.len() > 1);
    }

    #[test]
    fn heuristic_and_priority() {
        let g = Multigraph::from_edge_list(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        // all edges touch the degree-3 vertex; first wins ties
        assert_eq!(EliminationPolicy::MaxDegreeSum.choose_edge(&g), EdgeId(0));
        let p4 = Multigraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(EliminationPolicy::MaxDegreeSum.choose_edge(&p4), EdgeId(1));
        let pr = EliminationPolicy::Priority(vec![EdgeId(9), EdgeId(2)]);
        assert_eq!(pr.choose_edge(&p4), EdgeId(2));
        let pr = EliminationPolicy::Priority(vec![EdgeId(9)]);
        assert_eq!(pr.choose_edge(&p4), EdgeId(0));
    }
}
