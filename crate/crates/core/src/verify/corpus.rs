use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::multigraph::{EdgeId, Multigraph};
use crate::xi::EdgeLabeling;

/// Seed of the random part of the corpus.
pub const CORPUS_SEED: u64 = 0x00C0_FFEE;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CorpusKind {
    ConnectedSimple,
    Fixture,
    Random,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub kind: CorpusKind,
    pub graph: Multigraph,
}

/// The verification corpus: every connected simple graph on 1 to 5
/// vertices (31 graphs), six multigraph fixtures and 20 seeded random
/// multigraphs with at most 5 vertices and 8 edges.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = connected_simple(5);
    out.extend(fixtures());
    out.extend(random_multigraphs(CORPUS_SEED, 20, 5, 8));
    out
}

/// One connected simple graph per isomorphism class on `1..=max_n`
/// vertices, by brute force over all edge sets.
pub fn connected_simple(max_n: usize) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut seen = BTreeSet::new();
        let mut found = Vec::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Multigraph::from_edge_list(n, &edges).expect("valid pairs");
            if g.is_connected() && seen.insert(g.canonical_key()) {
                found.push(g);
            }
        }
        found.sort_by_key(|g| (g.edge_count(), g.canonical_key()));
        out.extend(found.into_iter().enumerate().map(|(i, graph)| CorpusEntry {
            name: format!("connected-n{n}-{i}"),
            kind: CorpusKind::ConnectedSimple,
            graph,
        }));
    }
    out
}

pub fn fixtures() -> Vec<CorpusEntry> {
    let list: [(&str, usize, &[(usize, usize)]); 6] = [
        ("loop", 1, &[(0, 0)]),
        ("double-loop", 1, &[(0, 0), (0, 0)]),
        ("parallel-pair", 2, &[(0, 1), (0, 1)]),
        ("parallel-triple", 2, &[(0, 1), (0, 1), (0, 1)]),
        ("loop-edge", 2, &[(0, 0), (0, 1)]),
        ("theta", 3, &[(0, 1), (0, 1), (0, 2), (2, 1)]),
    ];
    list.iter()
        .map(|(name, n, edges)| CorpusEntry {
            name: name.to_string(),
            kind: CorpusKind::Fixture,
            graph: Multigraph::from_edge_list(*n, edges).expect("valid fixture"),
        })
        .collect()
}

/// `count` multigraphs with `1..=max_n` vertices and `0..=max_m` edges,
/// loops and parallel edges allowed.
pub fn random_multigraphs(seed: u64, count: usize, max_n: usize, max_m: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=max_n);
            let m = rng.gen_range(0..=max_m);
            let edges: Vec<_> = (0..m)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            CorpusEntry {
                name: format!("random-{i}"),
                kind: CorpusKind::Random,
                graph: Multigraph::from_edge_list(n, &edges).expect("in range"),
            }
        })
        .collect()
}

/// A labeling drawn from `alphabet`, seeded by `seed`.
pub fn random_labeling(g: &Multigraph, alphabet: &[&str], seed: u64) -> EdgeLabeling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels = g
        .edge_ids()
        .map(|id: EdgeId| (id, alphabet[rng.gen_range(0..alphabet.len())].to_string()))
        .collect();
    EdgeLabeling::new(labels).expect("alphabet labels are valid")
}
