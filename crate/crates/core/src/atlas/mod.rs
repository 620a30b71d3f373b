//! Enumeration of small graph families and searches for graphs that `ξ`,
//! or the pair (Tutte, DPT), fails to tell apart.

mod graphs;
mod trees;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::multigraph::{graph6, Multigraph};
use crate::poly::MPoly;
use crate::specializations::{noble_welsh_u, Specialization};
use crate::xi::XiEngine;

pub use graphs::{enumerate_graphs, MAX_GRAPH_VERTICES};
pub use trees::{enumerate_trees, FreeTrees, MAX_TREE_VERTICES};

/// Whether two members agree on each invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerdict {
    pub first: usize,
    pub second: usize,
    pub xi_equal: bool,
    pub tutte_equal: bool,
    pub dpt_equal: bool,
    pub u_equal: bool,
}

/// Pairwise non-isomorphic members sharing one grouping key.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionGroup {
    /// Text form of the shared polynomial(s).
    pub key: String,
    /// graph6 encodings, or edge lists for multigraphs.
    pub members: Vec<String>,
    pub pairs: Vec<PairVerdict>,
}

/// Members and groups per vertex count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSummary {
    pub vertices: usize,
    pub members: usize,
    pub groups: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionReport {
    pub family: String,
    /// The grouping invariant: `xi` or `tutte+dpt`.
    pub grouped_by: String,
    pub levels: Vec<LevelSummary>,
    pub groups: Vec<CollisionGroup>,
}

impl CollisionReport {
    pub fn members_searched(&self) -> usize {
        self.levels.iter().map(|l| l.members).sum()
    }

    /// Pairs inside a `xi` group on which Tutte or DPT differ. Since both
    /// are substitution instances of `ξ`, any such pair is a defect.
    pub fn inconsistent_pairs(&self) -> Vec<(&CollisionGroup, &PairVerdict)> {
        self.all_pairs()
            .filter(|(_, p)| p.xi_equal && !(p.tutte_equal && p.dpt_equal))
            .collect()
    }

    /// Pairs with equal `ξ` that `U` does not separate.
    pub fn u_undistinguished(&self) -> Vec<(&CollisionGroup, &PairVerdict)> {
        self.all_pairs().filter(|(_, p)| p.xi_equal && p.u_equal).collect()
    }

    /// Pairs with equal Tutte and DPT polynomials but different `ξ`.
    pub fn tutte_dpt_candidates(&self) -> Vec<(&CollisionGroup, &PairVerdict)> {
        self.all_pairs()
            .filter(|(_, p)| p.tutte_equal && p.dpt_equal && !p.xi_equal)
            .collect()
    }

    fn all_pairs(&self) -> impl Iterator<Item = (&CollisionGroup, &PairVerdict)> {
        self.groups.iter().flat_map(|g| g.pairs.iter().map(move |p| (g, p)))
    }
}

/// Invariants of one family member.
struct Profile {
    graph: Multigraph,
    xi: MPoly,
    tutte: MPoly,
    dpt: MPoly,
}

fn profiles(family: &[Multigraph], engine: &XiEngine) -> Result<Vec<Profile>> {
    family
        .par_iter()
        .map(|g| {
            let xi = engine.xi(g);
            Ok(Profile {
                tutte: Specialization::Tutte.from_xi(g, &xi)?,
                dpt: Specialization::Dpt.from_xi(g, &xi)?,
                xi,
                graph: g.clone(),
            })
        })
        .collect()
}

fn encode(g: &Multigraph) -> String {
    graph6::encode(g).unwrap_or_else(|_| g.to_string())
}

fn group_report(
    family: &str,
    grouped_by: &str,
    items: &[Profile],
    key: impl Fn(&Profile) -> String + Sync,
) -> Result<CollisionReport> {
    let keys: Vec<String> = items.par_iter().map(&key).collect();
    let mut buckets: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.iter().enumerate() {
        buckets.entry(k).or_default().push(i);
    }
    let mut levels: BTreeMap<usize, LevelSummary> = BTreeMap::new();
    for p in items {
        let n = p.graph.vertex_count();
        levels
            .entry(n)
            .or_insert(LevelSummary {
                vertices: n,
                members: 0,
                groups: 0,
            })
            .members += 1;
    }
    let buckets: Vec<(&str, Vec<usize>)> = buckets.into_iter().filter(|(_, v)| v.len() > 1).collect();
    let groups: Vec<(usize, CollisionGroup)> = buckets
        .par_iter()
        .map(|(k, idx)| {
            let us = idx
                .iter()
                .map(|&i| noble_welsh_u(&items[i].graph))
                .collect::<Result<Vec<_>>>()?;
            let mut pairs = Vec::new();
            for a in 0..idx.len() {
                for b in a + 1..idx.len() {
                    let (pa, pb) = (&items[idx[a]], &items[idx[b]]);
                    pairs.push(PairVerdict {
                        first: a,
                        second: b,
                        xi_equal: pa.xi == pb.xi,
                        tutte_equal: pa.tutte == pb.tutte,
                        dpt_equal: pa.dpt == pb.dpt,
                        u_equal: us[a] == us[b],
                    });
                }
            }
            let group = CollisionGroup {
                key: k.to_string(),
                members: idx.iter().map(|&i| encode(&items[i].graph)).collect(),
                pairs,
            };
            Ok((items[idx[0]].graph.vertex_count(), group))
        })
        .collect::<Result<_>>()?;
    for (n, _) in &groups {
        levels.get_mut(n).expect("level exists").groups += 1;
    }
    Ok(CollisionReport {
        family: family.to_string(),
        grouped_by: grouped_by.to_string(),
        levels: levels.into_values().collect(),
        groups: groups.into_iter().map(|(_, g)| g).collect(),
    })
}

/// Groups `family` (assumed pairwise non-isomorphic) by `ξ` and reports
/// every group of two or more members with Tutte, DPT and `U` verdicts.
pub fn find_xi_collisions(
    family_name: &str,
    family: &[Multigraph],
    engine: &XiEngine,
) -> Result<CollisionReport> {
    let items = profiles(family, engine)?;
    group_report(family_name, "xi", &items, |p| p.xi.to_text())
}

/// Groups `family` by the pair (Tutte, DPT) and records within each group
/// whether `ξ` agrees too.
pub fn search_tutte_dpt(
    family_name: &str,
    family: &[Multigraph],
    engine: &XiEngine,
) -> Result<CollisionReport> {
    let items = profiles(family, engine)?;
    group_report(family_name, "tutte+dpt", &items, |p| {
        format!("T = {}; P = {}", p.tutte.to_text(), p.dpt.to_text())
    })
}

/// All free trees with `1..=max_n` vertices, in order of size.
pub fn trees_up_to(max_n: usize) -> Result<Vec<Multigraph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_trees(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_tree_collisions_up_to_four() {
        let report = find_xi_collisions("trees", &trees_up_to(4).unwrap(), &XiEngine::new()).unwrap();
        assert!(report.groups.is_empty());
        assert_eq!(report.members_searched(), 5);
        assert_eq!(report.levels.len(), 4);
    }

    #[test]
    fn tutte_dpt_search_on_small_trees() {
        let trees = trees_up_to(6).unwrap();
        let report = search_tutte_dpt("trees", &trees, &XiEngine::new()).unwrap();
        assert_eq!(report.members_searched(), 1 + 1 + 1 + 2 + 3 + 6);
        // all trees on n vertices share T = x^(n-1); equal ξ forces equal (T, P)
        for (_, p) in report.all_pairs() {
            assert!(p.tutte_equal);
        }
        let empty = search_tutte_dpt("none", &[], &XiEngine::new()).unwrap();
        assert!(empty.groups.is_empty() && empty.levels.is_empty());
    }

    #[test]
    fn isomorphic_copies_collide() {
        let p3 = Multigraph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let other = Multigraph::from_edge_list(3, &[(0, 2), (2, 1)]).unwrap();
        let report = find_xi_collisions("copies", &[p3, other], &XiEngine::new()).unwrap();
        assert_eq!(report.groups.len(), 1);
        let pair = &report.groups[0].pairs[0];
        assert!(pair.xi_equal && pair.tutte_equal && pair.dpt_equal && pair.u_equal);
        assert_eq!(report.u_undistinguished().len(), 1);
    }
}
