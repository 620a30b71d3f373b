//! Canonical labeling of edge-colored multigraphs by individualization and
//! refinement, with automorphism pruning.
//!
//! A graph is presented as an `n × n` matrix of entries, each entry the
//! sorted multiset of edge colors between two vertices (the diagonal holds
//! loops). Entries are interned to integer codes whose order matches the
//! entry order, so every comparison below is label-independent.
//!
//! The key is the lexicographically largest relabeled matrix reachable in
//! the search tree, prefixed with the interned entry table. It is a
//! relabeling of the input, so equal keys always mean isomorphic graphs.

use std::collections::BTreeMap;

use super::Dsu;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u32>);

impl CanonicalKey {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub key: CanonicalKey,
    /// `perm[v]` is the canonical position of vertex `v`.
    pub perm: Vec<usize>,
}

/// Key of the graph exactly as labeled, with no search. Equal only for
/// identical labeled graphs.
pub(crate) fn exact_key(n: usize, entries: &[Vec<Vec<u32>>]) -> CanonicalKey {
    let (table, codes) = intern(n, entries);
    let mut key = table_prefix(n, &table);
    for i in 0..n {
        for j in i..n {
            key.push(codes[i * n + j]);
        }
    }
    // marks the key as non-canonical so it never equals a canonical one
    key.push(u32::MAX);
    CanonicalKey(key)
}

fn table_prefix(n: usize, table: &BTreeMap<&[u32], u32>) -> Vec<u32> {
    let mut key = vec![n as u32, table.len() as u32];
    for entry in table.keys() {
        key.push(entry.len() as u32);
        key.extend_from_slice(entry);
    }
    key
}

fn intern(n: usize, entries: &[Vec<Vec<u32>>]) -> (BTreeMap<&[u32], u32>, Vec<u32>) {
    let mut table: BTreeMap<&[u32], u32> = BTreeMap::new();
    for row in entries {
        for entry in row {
            if !entry.is_empty() {
                table.insert(entry.as_slice(), 0);
            }
        }
    }
    for (code, slot) in table.values_mut().enumerate() {
        *slot = code as u32 + 1;
    }
    let mut codes = vec![0u32; n * n];
    for (i, row) in entries.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if !entry.is_empty() {
                codes[i * n + j] = table[entry.as_slice()];
            }
        }
    }
    (table, codes)
}

pub(crate) fn canonical_form(n: usize, entries: &[Vec<Vec<u32>>]) -> CanonicalForm {
    let (table, codes) = intern(n, entries);
    let mut search = Search {
        n,
        codes: &codes,
        best: None,
        automorphisms: Vec::new(),
    };
    search.run(vec![(0..n).collect()], &mut Vec::new());
    let (matrix, perm) = match search.best {
        Some(best) => (best.key, best.perm),
        None => (Vec::new(), Vec::new()),
    };

    let mut key = table_prefix(n, &table);
    key.extend(matrix);
    CanonicalForm {
        key: CanonicalKey(key),
        perm,
    }
}

struct Leaf {
    key: Vec<u32>,
    perm: Vec<usize>,
    inverse: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    n: usize,
    codes: &'a [u32],
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn code(&self, a: usize, b: usize) -> u32 {
        self.codes[a * self.n + b]
    }

    /// Splits cells until every vertex in a cell sees the same multiset of
    /// codes into every cell. Sub-cells are ordered by that signature.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let mut cell_of = vec![0usize; self.n];
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut signed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| (self.signature(v, &cells, &cell_of), v))
                    .collect();
                signed.sort();
                let mut start = 0;
                for i in 1..=signed.len() {
                    if i == signed.len() || signed[i].0 != signed[start].0 {
                        next.push(signed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn signature(&self, v: usize, cells: &[Vec<usize>], cell_of: &[usize]) -> Vec<u32> {
        let mut per_cell: Vec<Vec<u32>> = vec![Vec::new(); cells.len()];
        for w in 0..self.n {
            let c = self.code(v, w);
            if c != 0 {
                per_cell[cell_of[w]].push(if w == v { c | 1 << 31 } else { c });
            }
        }
        let mut sig = Vec::new();
        for mut codes in per_cell {
            codes.sort_unstable();
            sig.push(codes.len() as u32);
            sig.extend(codes);
        }
        sig
    }

    /// Returns `Some(depth)` when an automorphism proved everything below
    /// `depth` on the current path redundant.
    fn run(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let cells = self.refine(cells);
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let mut members = cells[target].clone();
        members.sort_unstable();
        let depth = path.len();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if !tried.is_empty() && self.shares_orbit(v, &tried, path) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            let outcome = self.run(child, path);
            path.pop();
            if let Some(d) = outcome {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let n = self.n;
        let mut perm = vec![0; n];
        let mut inverse = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
            inverse[pos] = cell[0];
        }
        let mut key = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                key.push(self.code(inverse[i], inverse[j]));
            }
        }
        let leaf = Leaf {
            key,
            perm,
            inverse,
            path: path.to_vec(),
        };
        match &self.best {
            Some(best) if leaf.key == best.key => {
                let gamma = (0..n).map(|v| best.inverse[leaf.perm[v]]).collect();
                self.automorphisms.push(gamma);
                let common = best
                    .path
                    .iter()
                    .zip(path)
                    .take_while(|(a, b)| a == b)
                    .count();
                Some(common)
            }
            Some(best) if leaf.key < best.key => None,
            _ => {
                self.best = Some(leaf);
                None
            }
        }
    }

    /// Whether `v` lies in the orbit of an already tried sibling under the
    /// automorphisms found so far that fix `path` pointwise.
    fn shares_orbit(&self, v: usize, tried: &[usize], path: &[usize]) -> bool {
        let mut dsu = Dsu::new(self.n);
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (a, &b) in gamma.iter().enumerate() {
                    dsu.union(a, b);
                }
            }
        }
        any && {
            let root = dsu.find(v);
            tried.iter().any(|&u| dsu.find(u) == root)
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::multigraph::Multigraph;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
        Multigraph::from_edge_list(n, pairs).unwrap()
    }

    #[test]
    fn isomorphic_orderings_agree() {
        let a = g(3, &[(0, 1), (1, 2)]);
        let b = g(3, &[(2, 0), (0, 1)]);
        assert_eq!(a.canonical_key(), b.canonical_key());
    }

    #[test]
    fn non_isomorphic_differ() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let k2_e1 = g(3, &[(0, 1)]);
        assert_ne!(p3.canonical_key(), k2_e1.canonical_key());
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_ne!(star.canonical_key(), p4.canonical_key());
    }

    #[test]
    fn multiplicities_and_loops_matter() {
        let single = g(2, &[(0, 1)]);
        let double = g(2, &[(0, 1), (0, 1)]);
        let looped = g(2, &[(0, 1), (0, 0)]);
        let other_loop = g(2, &[(0, 1), (1, 1)]);
        assert_ne!(single.canonical_key(), double.canonical_key());
        assert_ne!(double.canonical_key(), looped.canonical_key());
        assert_eq!(looped.canonical_key(), other_loop.canonical_key());
    }

    #[test]
    fn regular_graphs_are_told_apart() {
        // C6 vs two triangles: same degree sequence, refinement alone is stuck
        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let two_c3 = g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_ne!(c6.canonical_key(), two_c3.canonical_key());
        // K_{3,3} vs prism
        let k33 = g(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        let prism = g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
        assert_ne!(k33.canonical_key(), prism.canonical_key());
    }

    #[test]
    fn symmetric_graphs_finish_quickly() {
        let n = 14;
        let star: Vec<_> = (1..n).map(|i| (0, i)).collect();
        let complete: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for pairs in [star, complete, Vec::new()] {
            let a = g(n, &pairs);
            let perm: Vec<usize> = (0..n).rev().collect();
            assert_eq!(a.canonical_key(), a.permute_vertices(&perm).canonical_key());
        }
    }

    #[test]
    fn petersen_invariant_under_shuffles() {
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let pairs: Vec<_> = outer.into_iter().chain(inner).chain(spokes).collect();
        let pete = g(10, &pairs);
        let key = pete.canonical_key();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..10).collect();
            perm.shuffle(&mut rng);
            assert_eq!(pete.permute_vertices(&perm).canonical_key(), key);
        }
    }

    #[test]
    fn colors_are_respected() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let ab = p3.canonical_form_colored(|e| e.0).key;
        let ba = p3.canonical_form_colored(|e| 1 - e.0).key;
        let aa = p3.canonical_form_colored(|_| 0).key;
        assert_eq!(ab, ba);
        assert_ne!(ab, aa);
    }

    #[test]
    fn perm_maps_to_key_matrix() {
        let gr = g(4, &[(0, 1), (1, 1), (1, 2), (2, 3), (2, 3)]);
        let form = gr.canonical_form_colored(|_| 0);
        let relabeled = gr.permute_vertices(&form.perm);
        assert_eq!(relabeled.canonical_key(), form.key);
    }
}
