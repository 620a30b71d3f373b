use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::multigraph::{CanonicalKey, Multigraph};

pub const MAX_GRAPH_VERTICES: usize = 8;

/// One simple graph per isomorphism class on `n` vertices with at most
/// `max_edges` edges, ordered by edge count and then canonical key.
///
/// Level `m + 1` is built by adding every missing edge to every class of
/// level `m` and keeping one graph per canonical key.
pub fn enumerate_graphs(n: usize, max_edges: usize) -> Result<Vec<Multigraph>> {
    if n > MAX_GRAPH_VERTICES {
        return Err(Error::OutOfRange {
            what: "graph vertex count",
            value: n,
            allowed: format!("0..={MAX_GRAPH_VERTICES}"),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let top = max_edges.min(pairs.len());
    let mut level = vec![Multigraph::empty(n)];
    let mut out = level.clone();
    for _ in 0..top {
        let next: BTreeMap<CanonicalKey, Multigraph> = level
            .par_iter()
            .flat_map_iter(|g| {
                let present: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
                pairs
                    .iter()
                    .filter(move |p| !present.contains(p))
                    .map(move |&(u, v)| {
                        let mut edges: Vec<(usize, usize)> =
                            g.edges().iter().map(|e| (e.u, e.v)).collect();
                        edges.push((u, v));
                        let h = Multigraph::from_edge_list(n, &edges).expect("in range");
                        (h.canonical_key(), h)
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = next.into_values().collect();
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        assert_eq!(enumerate_graphs(0, 0).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(2, 1).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(3, 3).unwrap().len(), 4);
        assert_eq!(enumerate_graphs(4, 6).unwrap().len(), 11);
        assert_eq!(enumerate_graphs(5, 10).unwrap().len(), 34);
        assert_eq!(enumerate_graphs(6, 15).unwrap().len(), 156);
        assert_eq!(enumerate_graphs(4, 2).unwrap().len(), 4);
    }

    #[test]
    fn deterministic() {
        let a: Vec<String> = enumerate_graphs(5, 6).unwrap().iter().map(|g| g.to_string()).collect();
        let b: Vec<String> = enumerate_graphs(5, 6).unwrap().iter().map(|g| g.to_string()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_large_orders() {
        assert!(enumerate_graphs(9, 1).is_err());
    }
}
