//! Finite multigraphs with stable edge identities and the three edge
//! elimination operations (deletion, contraction, extraction).
//!
//! Vertices are dense indices `0..n` and are renumbered after every
//! operation, keeping their relative order. Edge ids never change: an edge
//! that survives an operation keeps its id, so edge labelings stay valid on
//! every derived graph.
//!
//! Loop conventions: contracting a loop removes it (same as deletion), and
//! extracting a loop at `u` removes `u` together with its incident edges.

mod canon;
mod dsu;
pub mod graph6;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{CanonicalForm, CanonicalKey};
pub(crate) use dsu::Dsu;

/// Upper bound on edges for mask-based subset operations.
pub const MAX_SUBSET_EDGES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An edge record. Endpoints are stored with `u <= v`; `u == v` is a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    fn new(id: EdgeId, a: usize, b: usize) -> Self {
        Edge {
            id,
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// A set of edges of a host graph, stored as a bitmask over edge positions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    mask: u64,
}

impl EdgeSubset {
    pub fn empty() -> Self {
        EdgeSubset { mask: 0 }
    }

    /// Builds a subset from a mask over edge positions (bit `i` is the
    /// `i`-th edge of [`Multigraph::edges`]).
    pub fn from_mask(mask: u64) -> Self {
        EdgeSubset { mask }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Builds a graph on `n` vertices with one edge per pair; edge ids are
    /// assigned `0, 1, ...` in sequence order.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, count: n });
                }
            }
            edges.push(Edge::new(EdgeId(i as u32), a, b));
        }
        Ok(Multigraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    fn position(&self, id: EdgeId) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.id == id)
            .ok_or(Error::UnknownEdge(id))
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == v) as usize + (e.v == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// True when no loops and no parallel edges are present.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|e| !e.is_loop() && seen.insert((e.u, e.v)))
    }

    /// `G₋ₑ`: removes the single edge record `id`.
    pub fn delete_edge(&self, id: EdgeId) -> Result<Self> {
        let pos = self.position(id)?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Multigraph { n: self.n, edges })
    }

    /// `G/ₑ`: merges the endpoints of `id`. Other edges between the same
    /// endpoints become loops. A loop is simply removed.
    pub fn contract_edge(&self, id: EdgeId) -> Result<Self> {
        let pos = self.position(id)?;
        let target = self.edges[pos];
        if target.is_loop() {
            return self.delete_edge(id);
        }
        let (keep, gone) = (target.u, target.v);
        let remap = |w: usize| match w.cmp(&gone) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => w - 1,
        };
        let edges = self
            .edges
            .iter()
            .filter(|e| e.id != id)
            .map(|e| Edge::new(e.id, remap(e.u), remap(e.v)))
            .collect();
        Ok(Multigraph {
            n: self.n - 1,
            edges,
        })
    }

    /// `G†ₑ`: the subgraph induced by the vertices not covered by `id`.
    pub fn extract_edge(&self, id: EdgeId) -> Result<Self> {
        let pos = self.position(id)?;
        let target = self.edges[pos];
        let mut removed = vec![false; self.n];
        removed[target.u] = true;
        removed[target.v] = true;
        Ok(self.induced(&removed))
    }

    /// Subgraph induced on the vertices with `removed[v] == false`.
    pub(crate) fn induced(&self, removed: &[bool]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !removed[v] {
                index[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !removed[e.u] && !removed[e.v])
            .map(|e| Edge::new(e.id, index[e.u], index[e.v]))
            .collect();
        Multigraph { n: next, edges }
    }

    /// `G₁ ⊕ G₂`. Vertices of `other` are shifted past ours and its edge ids
    /// past our largest id.
    pub fn disjoint_union(&self, other: &Multigraph) -> Self {
        let id_shift = self.edges.iter().map(|e| e.id.0 + 1).max().unwrap_or(0);
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| {
            Edge::new(EdgeId(e.id.0 + id_shift), e.u + self.n, e.v + self.n)
        }));
        Multigraph {
            n: self.n + other.n,
            edges,
        }
    }

    /// Component index for each vertex and the component count. Components
    /// are numbered by their smallest vertex.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut dsu = Dsu::new(self.n);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        let mut label = vec![usize::MAX; self.n];
        let mut root_label = vec![usize::MAX; self.n];
        let mut count = 0;
        for v in 0..self.n {
            let r = dsu.find(v);
            if root_label[r] == usize::MAX {
                root_label[r] = count;
                count += 1;
            }
            label[v] = root_label[r];
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    /// Splits into connected components, ordered by smallest vertex. Edge
    /// ids are preserved.
    pub fn components(&self) -> Vec<Multigraph> {
        let (label, count) = self.component_labels();
        let mut index = vec![0; self.n];
        let mut parts: Vec<Multigraph> = (0..count).map(|_| Multigraph::empty(0)).collect();
        for v in 0..self.n {
            let part = &mut parts[label[v]];
            index[v] = part.n;
            part.n += 1;
        }
        for e in &self.edges {
            parts[label[e.u]]
                .edges
                .push(Edge::new(e.id, index[e.u], index[e.v]));
        }
        parts
    }

    /// Subset containing the given edge ids.
    pub fn edge_subset(&self, ids: impl IntoIterator<Item = EdgeId>) -> Result<EdgeSubset> {
        self.check_subset_size()?;
        let mut mask = 0u64;
        for id in ids {
            let pos = self.position(id).map_err(|_| Error::ForeignEdge)?;
            mask |= 1 << pos;
        }
        Ok(EdgeSubset { mask })
    }

    pub fn full_subset(&self) -> Result<EdgeSubset> {
        self.check_subset_size()?;
        Ok(EdgeSubset {
            mask: full_mask(self.edges.len()),
        })
    }

    fn check_subset_size(&self) -> Result<()> {
        if self.edges.len() > MAX_SUBSET_EDGES {
            return Err(Error::TooManyEdges {
                edges: self.edges.len(),
                limit: MAX_SUBSET_EDGES,
            });
        }
        Ok(())
    }

    fn check_subset(&self, s: &EdgeSubset) -> Result<()> {
        self.check_subset_size()?;
        if s.mask & !full_mask(self.edges.len()) != 0 {
            return Err(Error::ForeignEdge);
        }
        Ok(())
    }

    /// Number of components of the spanning subgraph `(V, S)`.
    pub fn count_components(&self, s: &EdgeSubset) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.n - self.rank_of_mask(s.mask))
    }

    /// Number of components of `(V(B), B)`.
    pub fn covered_components(&self, b: &EdgeSubset) -> Result<usize> {
        self.check_subset(b)?;
        let support = self.vertex_support(b)?.len();
        Ok(support - self.rank_of_mask(b.mask))
    }

    /// Endpoints of the edges in `s`.
    pub fn vertex_support(&self, s: &EdgeSubset) -> Result<BTreeSet<usize>> {
        self.check_subset(s)?;
        Ok(self
            .masked_edges(s.mask)
            .flat_map(|e| [e.u, e.v])
            .collect())
    }

    pub(crate) fn masked_edges(&self, mask: u64) -> impl Iterator<Item = &Edge> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e)
    }

    /// `r(S) = |V| - k(S)`: the number of edges of `S` in a spanning forest.
    pub(crate) fn rank_of_mask(&self, mask: u64) -> usize {
        let mut dsu = Dsu::new(self.n);
        self.masked_edges(mask)
            .filter(|e| dsu.union(e.u, e.v))
            .count()
    }

    /// Number of components of the whole graph, `k(E)`.
    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    /// Canonical form under vertex relabeling (edge multiplicities and loop
    /// counts respected; edge ids ignored).
    pub fn canonical_key(&self) -> CanonicalKey {
        canon::canonical_form(self.n, &self.entry_matrix(|_| 0)).key
    }

    /// Canonical form where each edge carries the given color; isomorphisms
    /// must preserve colors.
    pub fn canonical_form_colored(&self, color: impl Fn(EdgeId) -> u32) -> CanonicalForm {
        canon::canonical_form(self.n, &self.entry_matrix(color))
    }

    /// Key of this exact labeled graph, without canonicalization.
    pub fn exact_key_colored(&self, color: impl Fn(EdgeId) -> u32) -> CanonicalKey {
        canon::exact_key(self.n, &self.entry_matrix(color))
    }

    /// `n × n` matrix whose `(i, j)` entry is the sorted multiset of colors
    /// of edges joining `i` and `j`.
    fn entry_matrix(&self, color: impl Fn(EdgeId) -> u32) -> Vec<Vec<Vec<u32>>> {
        let mut m = vec![vec![Vec::new(); self.n]; self.n];
        for e in &self.edges {
            let c = color(e.id);
            m[e.u][e.v].push(c);
            if e.u != e.v {
                m[e.v][e.u].push(c);
            }
        }
        for row in &mut m {
            for entry in row.iter_mut() {
                entry.sort_unstable();
            }
        }
        m
    }

    /// Applies a vertex permutation (`perm[old] = new`), keeping edge ids.
    pub fn permute_vertices(&self, perm: &[usize]) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.id, perm[e.u], perm[e.v]))
            .collect();
        Multigraph { n: self.n, edges }
    }

    /// Renames edge ids through `f` and reorders edges by the new ids.
    pub fn relabel_edges(&self, f: impl Fn(EdgeId) -> EdgeId) -> Self {
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge::new(f(e.id), e.u, e.v))
            .collect();
        edges.sort_by_key(|e| e.id);
        Multigraph { n: self.n, edges }
    }

    /// Edge-list text form: `n m` then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "]")
    }
}

pub(crate) fn full_mask(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
        Multigraph::from_edge_list(n, pairs).unwrap()
    }

    fn e(i: u32) -> EdgeId {
        EdgeId(i)
    }

    #[test]
    fn construction() {
        let empty = g(0, &[]);
        assert_eq!((empty.vertex_count(), empty.edge_count()), (0, 0));
        let single = g(1, &[]);
        assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));
        let multi = g(2, &[(0, 1), (0, 1), (0, 0)]);
        assert_eq!(multi.edge_count(), 3);
        assert_eq!(multi.loop_count(), 1);
        assert!(!multi.is_simple());
        assert_eq!(multi.edges()[1].id, e(1));
        assert_eq!(
            Multigraph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, count: 2 })
        );
    }

    #[test]
    fn deletion() {
        let k2 = g(2, &[(0, 1)]);
        assert_eq!(k2.delete_edge(e(0)).unwrap(), Multigraph::empty(2));
        let looped = g(1, &[(0, 0)]);
        assert_eq!(looped.delete_edge(e(0)).unwrap(), Multigraph::empty(1));
        let parallel = g(2, &[(0, 1), (0, 1)]);
        let d = parallel.delete_edge(e(0)).unwrap();
        assert_eq!(d.edge_count(), 1);
        assert_eq!(d.canonical_key(), k2.canonical_key());
        assert_eq!(k2.delete_edge(e(7)), Err(Error::UnknownEdge(e(7))));
    }

    #[test]
    fn contraction() {
        let k2 = g(2, &[(0, 1)]);
        assert_eq!(k2.contract_edge(e(0)).unwrap(), Multigraph::empty(1));

        let parallel = g(2, &[(0, 1), (0, 1)]);
        let c = parallel.contract_edge(e(0)).unwrap();
        assert_eq!(c.vertex_count(), 1);
        assert_eq!(c.loop_count(), 1);
        assert_eq!(c.edges()[0].id, e(1));

        let triangle = g(3, &[(0, 1), (1, 2), (0, 2)]);
        let c = triangle.contract_edge(e(0)).unwrap();
        assert_eq!(c, g(2, &[(0, 1), (0, 1)]).relabel_edges(|i| EdgeId(i.0 + 1)));

        // contracting a loop deletes it
        let looped = g(2, &[(0, 0), (0, 1)]);
        assert_eq!(
            looped.contract_edge(e(0)).unwrap(),
            looped.delete_edge(e(0)).unwrap()
        );
        assert!(k2.contract_edge(e(3)).is_err());
    }

    #[test]
    fn extraction() {
        assert_eq!(g(2, &[(0, 1)]).extract_edge(e(0)).unwrap(), Multigraph::empty(0));
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.extract_edge(e(0)).unwrap(), Multigraph::empty(1));
        assert_eq!(g(1, &[(0, 0)]).extract_edge(e(0)).unwrap(), Multigraph::empty(0));
        // loop extraction removes only its vertex
        let lk = g(3, &[(0, 0), (1, 2), (0, 1)]);
        let x = lk.extract_edge(e(0)).unwrap();
        assert_eq!(x.vertex_count(), 2);
        assert_eq!(x.edges(), &[Edge::new(e(1), 0, 1)]);
    }

    #[test]
    fn union() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(Multigraph::empty(0).disjoint_union(&p3).canonical_key(), p3.canonical_key());
        assert_eq!(
            Multigraph::empty(1).disjoint_union(&Multigraph::empty(1)),
            Multigraph::empty(2)
        );
        let k2 = g(2, &[(0, 1)]);
        let two = k2.disjoint_union(&k2);
        assert_eq!(two, g(4, &[(0, 1), (2, 3)]));
        assert_eq!(two.component_count(), 2);
    }

    #[test]
    fn component_counts() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let none = EdgeSubset::empty();
        let all = p3.full_subset().unwrap();
        assert_eq!(p3.count_components(&none).unwrap(), 3);
        assert_eq!(p3.count_components(&all).unwrap(), 1);
        let lk = g(2, &[(0, 1), (0, 0)]);
        let just_loop = lk.edge_subset([e(1)]).unwrap();
        assert_eq!(lk.count_components(&just_loop).unwrap(), 2);
    }

    #[test]
    fn covered_counts_and_support() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.covered_components(&EdgeSubset::empty()).unwrap(), 0);
        let first = p3.edge_subset([e(0)]).unwrap();
        assert_eq!(p3.covered_components(&first).unwrap(), 1);
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let ends = p4.edge_subset([e(0), e(2)]).unwrap();
        assert_eq!(p4.covered_components(&ends).unwrap(), 2);

        assert!(p3.vertex_support(&EdgeSubset::empty()).unwrap().is_empty());
        assert_eq!(
            p3.vertex_support(&first).unwrap().into_iter().collect::<Vec<_>>(),
            vec![0, 1]
        );
        let looped = g(1, &[(0, 0)]);
        let l = looped.full_subset().unwrap();
        assert_eq!(looped.vertex_support(&l).unwrap().len(), 1);
        assert_eq!(looped.covered_components(&l).unwrap(), 1);

        assert_eq!(p3.edge_subset([e(9)]), Err(Error::ForeignEdge));
        assert_eq!(
            p3.count_components(&EdgeSubset::from_mask(0b100)),
            Err(Error::ForeignEdge)
        );
    }

    #[test]
    fn components_keep_edge_ids() {
        let gr = g(5, &[(3, 4), (0, 2), (2, 2)]);
        let parts = gr.components();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], Multigraph { n: 2, edges: vec![Edge::new(e(1), 0, 1), Edge::new(e(2), 1, 1)] });
        assert_eq!(parts[1], Multigraph::empty(1));
        assert_eq!(parts[2].edges()[0].id, e(0));
    }
}
