//! Direct evaluation of `ξ` as a sum over pairs of edge sets `(A, B)` whose
//! covered vertex sets are disjoint:
//!
//! ```text
//! ξ(G) = Σ x^(k(A∪B) − k_cov(B)) · y^(|A| + |B| − k_cov(B)) · z^k_cov(B)
//! ```
//!
//! The labeled variant multiplies each term by `∏_{e ∈ A∪B} t_c(e)`.
//!
//! `A` ranges over all edge subsets; `B` only over subsets of the edges that
//! avoid `V(A)`. Rank and support of every mask are tabulated once.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::labeling::{label_var, EdgeLabeling};
use crate::error::{Error, Result};
use crate::multigraph::{full_mask, Dsu, Multigraph};
use crate::poly::{MPoly, Var};

/// Largest edge count the expansion will attempt.
pub const MAX_EXPANSION_EDGES: usize = 24;

pub fn xi_expansion(g: &Multigraph) -> Result<MPoly> {
    let vars = vec![Var::named("x"), Var::named("y"), Var::named("z")];
    Ok(to_poly(vars, expand(g, &[], 0)?))
}

fn to_poly(vars: Vec<Var>, counts: BTreeMap<Vec<u32>, u64>) -> MPoly {
    MPoly::from_terms(vars, counts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
}

pub fn xi_lab_expansion(g: &Multigraph, lab: &EdgeLabeling) -> Result<MPoly> {
    let alphabet: Vec<String> = lab.alphabet_of(g)?.into_iter().collect();
    let label_of: Vec<usize> = g
        .edges()
        .iter()
        .map(|e| {
            let l = lab.label(e.id).expect("checked");
            alphabet.iter().position(|a| a == l).expect("in alphabet")
        })
        .collect();
    let counts = expand(g, &label_of, alphabet.len())?;
    // exponent slots beyond x, y, z are t_<label> in alphabet order
    let mut vars = vec![Var::named("x"), Var::named("y"), Var::named("z")];
    vars.extend(alphabet.iter().map(|l| label_var("t", l)));
    Ok(to_poly(vars, counts))
}

/// Per-mask rank `r(S)` and covered vertex set `V(S)`.
pub(crate) struct MaskTables {
    pub rank: Vec<u8>,
    pub support: Vec<u64>,
}

pub(crate) fn mask_tables(g: &Multigraph) -> Result<MaskTables> {
    let m = g.edge_count();
    if m > MAX_EXPANSION_EDGES {
        return Err(Error::TooManyEdges {
            edges: m,
            limit: MAX_EXPANSION_EDGES,
        });
    }
    if g.vertex_count() > 64 {
        return Err(Error::OutOfRange {
            what: "vertex count",
            value: g.vertex_count(),
            allowed: "at most 64".into(),
        });
    }
    let ends: Vec<u64> = g.edges().iter().map(|e| 1u64 << e.u | 1u64 << e.v).collect();
    let size = 1usize << m;
    let mut support = vec![0u64; size];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        support[mask] = support[mask & (mask - 1)] | ends[low];
    }
    let rank = (0..size)
        .into_par_iter()
        .map(|mask| {
            let mut dsu = Dsu::new(g.vertex_count());
            g.masked_edges(mask as u64)
                .filter(|e| dsu.union(e.u, e.v))
                .count() as u8
        })
        .collect();
    Ok(MaskTables { rank, support })
}

/// Exponent vectors `[x, y, z, t_0, ..]` with multiplicities. `label_of`
/// is empty for the unlabeled sum.
fn expand(
    g: &Multigraph,
    label_of: &[usize],
    label_count: usize,
) -> Result<BTreeMap<Vec<u32>, u64>> {
    let tables = mask_tables(g)?;
    let m = g.edge_count();
    let n = g.vertex_count() as u32;
    let ends: Vec<u64> = g.edges().iter().map(|e| 1u64 << e.u | 1u64 << e.v).collect();
    let all = full_mask(m);
    let mut label_masks = vec![0u64; label_count];
    for (pos, &l) in label_of.iter().enumerate() {
        label_masks[l] |= 1 << pos;
    }

    let counts: HashMap<Vec<u32>, u64> = (0..1u64 << m)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Vec<u32>, u64>, a| {
            let covered_a = tables.support[a as usize];
            let free = (0..m)
                .filter(|&i| ends[i] & covered_a == 0)
                .fold(0u64, |f, i| f | 1 << i)
                & all;
            let rank_a = tables.rank[a as usize] as u32;
            let size_a = a.count_ones();
            // all submasks of `free`, including the empty set
            let mut b = free;
            loop {
                let rank_b = tables.rank[b as usize] as u32;
                let k_all = n - rank_a - rank_b;
                let k_cov = tables.support[b as usize].count_ones() - rank_b;
                let used = size_a + b.count_ones();
                debug_assert!(k_all >= k_cov && used >= k_cov);
                let mut exps = Vec::with_capacity(3 + label_count);
                exps.extend([k_all - k_cov, used - k_cov, k_cov]);
                exps.extend(label_masks.iter().map(|lm| ((a | b) & lm).count_ones()));
                *acc.entry(exps).or_insert(0) += 1;
                if b == 0 {
                    break;
                }
                b = (b - 1) & free;
            }
            acc
        })
        .reduce(HashMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_insert(0) += v;
            }
            x
        });

    Ok(counts.into_iter().collect())
}
