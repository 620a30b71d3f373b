//! Brute-force oracles. None of these touch the `ξ` recurrence, the subset
//! expansion or their helper tables: each enumerates its own definition.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::multigraph::{Edge, Multigraph};
use crate::poly::{MPoly, Var};
use crate::xi::{label_var, EdgeLabeling};

fn subsets(m: usize) -> impl Iterator<Item = u64> {
    assert!(m < 32, "oracle enumeration is for small graphs");
    0..1u64 << m
}

fn chosen(edges: &[Edge], mask: u64) -> impl Iterator<Item = &Edge> {
    edges
        .iter()
        .enumerate()
        .filter(move |(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
}

/// Component count of the spanning subgraph `(V, S)` by flood fill.
fn components(n: usize, edges: &[&Edge]) -> usize {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    count
}

fn rank(n: usize, edges: &[&Edge]) -> u32 {
    (n - components(n, edges)) as u32
}

/// Sums `1 · ∏ vars^exponent` over the given exponent vectors.
fn collect(vars: Vec<Var>, exps: impl IntoIterator<Item = Vec<u32>>) -> MPoly {
    let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for e in exps {
        *terms.entry(e).or_insert_with(|| BigInt::from(0)) += 1;
    }
    MPoly::from_terms(vars, terms)
}

fn var(name: &str) -> Var {
    Var::named(name)
}

/// `Z(G; q, v) = Σ_A q^k(A) v^|A|`.
pub fn oracle_sokal(g: &Multigraph) -> MPoly {
    let n = g.vertex_count();
    let exps = subsets(g.edge_count()).map(|mask| {
        let s: Vec<&Edge> = chosen(g.edges(), mask).collect();
        vec![components(n, &s) as u32, s.len() as u32]
    });
    collect(vec![var("q"), var("v")], exps)
}

/// `Z_lab(G; q, v̄) = Σ_A q^k(A) ∏_{e∈A} v_c(e)`.
pub fn oracle_labeled_sokal(g: &Multigraph, lab: &EdgeLabeling) -> MPoly {
    let n = g.vertex_count();
    let alphabet: Vec<String> = lab.alphabet_of(g).expect("total labeling").into_iter().collect();
    let slot = |e: &Edge| {
        let l = lab.label(e.id).expect("total labeling");
        alphabet.iter().position(|a| a == l).expect("in alphabet")
    };
    let exps = subsets(g.edge_count()).map(|mask| {
        let s: Vec<&Edge> = chosen(g.edges(), mask).collect();
        let mut e = vec![0u32; 1 + alphabet.len()];
        e[0] = components(n, &s) as u32;
        for edge in &s {
            e[1 + slot(edge)] += 1;
        }
        e
    });
    let mut vars = vec![var("q")];
    vars.extend(alphabet.iter().map(|l| label_var("v", l)));
    collect(vars, exps)
}

/// Tutte polynomial by the classical case split: loops give `y·T(G₋ₑ)`,
/// bridges `x·T(G/ₑ)`, other edges `T(G₋ₑ) + T(G/ₑ)`; edgeless graphs give 1.
pub fn oracle_tutte(g: &Multigraph) -> MPoly {
    let Some(e) = g.edges().first().copied() else {
        return MPoly::one();
    };
    let deleted = g.delete_edge(e.id).expect("edge present");
    if e.is_loop() {
        return &MPoly::named("y") * &oracle_tutte(&deleted);
    }
    let contracted = g.contract_edge(e.id).expect("edge present");
    let all: Vec<&Edge> = g.edges().iter().collect();
    let rest: Vec<&Edge> = deleted.edges().iter().collect();
    let is_bridge = components(g.vertex_count(), &rest) > components(g.vertex_count(), &all);
    if is_bridge {
        &MPoly::named("x") * &oracle_tutte(&contracted)
    } else {
        &oracle_tutte(&deleted) + &oracle_tutte(&contracted)
    }
}

/// Edge sets whose members pairwise share no vertex. A loop occupies its
/// single vertex, so two loops at one vertex conflict.
fn matchings(g: &Multigraph) -> impl Iterator<Item = (u64, u64)> + '_ {
    subsets(g.edge_count()).filter_map(move |mask| {
        let mut covered = 0u64;
        for e in chosen(g.edges(), mask) {
            let ends = 1u64 << e.u | 1u64 << e.v;
            if covered & ends != 0 {
                return None;
            }
            covered |= ends;
        }
        Some((mask, covered))
    })
}

/// `Σ_M x^(|V| - |V(M)|) y^|M|` over matchings, loops covering one vertex.
pub fn oracle_matchings(g: &Multigraph) -> MPoly {
    let n = g.vertex_count() as u32;
    let exps = matchings(g).map(|(mask, covered)| vec![n - covered.count_ones(), mask.count_ones()]);
    collect(vec![var("x"), var("y")], exps)
}

/// `Σ_M ∏_{e∈M} t_c(e)`.
pub fn oracle_labeled_matchings(g: &Multigraph, lab: &EdgeLabeling) -> MPoly {
    let alphabet: Vec<String> = lab.alphabet_of(g).expect("total labeling").into_iter().collect();
    let exps = matchings(g).map(|(mask, _)| {
        let mut e = vec![0u32; alphabet.len()];
        for edge in chosen(g.edges(), mask) {
            let l = lab.label(edge.id).expect("total labeling");
            e[alphabet.iter().position(|a| a == l).expect("in alphabet")] += 1;
        }
        e
    });
    collect(alphabet.iter().map(|l| label_var("t", l)).collect(), exps)
}

/// `Σ_M ∏_{e={u,v}∈M} y_e x_u x_v` with edge variables `y_e<id>` and vertex
/// variables `x_<index>`.
pub fn oracle_weighted_matchings(g: &Multigraph) -> MPoly {
    let mut total = MPoly::zero();
    for (mask, _) in matchings(g) {
        let mut term = MPoly::one();
        for e in chosen(g.edges(), mask) {
            let x = |i: usize| MPoly::var(Var::indexed("x", i).expect("numeric"));
            let y = MPoly::var(label_var("y", &format!("e{}", e.id.0)));
            term = &(&(&term * &y) * &x(e.u)) * &x(e.v);
        }
        total = &total + &term;
    }
    total
}

/// Generalized proper colorings with `x` colors of which the first `y`
/// are proper: adjacent vertices (and a looped vertex with itself) may not
/// share a proper color.
pub fn oracle_colorings(g: &Multigraph, x: u32, y: u32) -> u64 {
    assert!(y <= x);
    let n = g.vertex_count();
    if x == 0 {
        return u64::from(n == 0);
    }
    let mut colors = vec![0u32; n];
    let mut count = 0;
    loop {
        let ok = g
            .edges()
            .iter()
            .all(|e| colors[e.u] != colors[e.v] || colors[e.u] >= y);
        count += u64::from(ok);
        // next assignment in base x
        let mut i = 0;
        while i < n && colors[i] + 1 == x {
            colors[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
        colors[i] += 1;
    }
}

/// Induced subgraph on the vertices of `keep` (bit mask), renumbered.
fn induced(g: &Multigraph, keep: u64) -> Multigraph {
    let mut index = vec![usize::MAX; g.vertex_count()];
    let mut n = 0;
    for (v, slot) in index.iter_mut().enumerate() {
        if keep >> v & 1 == 1 {
            *slot = n;
            n += 1;
        }
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| keep >> e.u & 1 == 1 && keep >> e.v & 1 == 1)
        .map(|e| (index[e.u], index[e.v]))
        .collect();
    Multigraph::from_edge_list(n, &edges).expect("renumbered")
}

/// Bivariate chromatic polynomial `Σ_W (x-y)^|W| χ(G - W; y)`: `W` holds the
/// vertices with improper colors, the rest is properly colored from `y`
/// colors. `χ` is the subset sum `Z(·; y, -1)`.
pub fn oracle_dpt(g: &Multigraph) -> MPoly {
    let n = g.vertex_count();
    let improper = &MPoly::named("x") - &MPoly::named("y");
    let mut total = MPoly::zero();
    for w in 0u64..1 << n {
        let rest = induced(g, !w & ((1u64 << n) - 1));
        let chi = oracle_sokal(&rest).substitute(
            &[(var("q"), MPoly::named("y")), (var("v"), MPoly::constant(-1))]
                .into_iter()
                .collect(),
        );
        total = &total + &(&improper.pow(w.count_ones()) * &chi);
    }
    total
}

/// `Σ_C τ^|C|` over vertex sets meeting every edge (a loop needs its vertex).
pub fn oracle_vertex_covers(g: &Multigraph) -> MPoly {
    let n = g.vertex_count();
    let exps = (0u64..1 << n)
        .filter(|c| g.edges().iter().all(|e| c >> e.u & 1 == 1 || c >> e.v & 1 == 1))
        .map(|c| vec![c.count_ones()]);
    collect(vec![var("τ")], exps)
}

/// `Σ_S u^|S|` over vertex sets spanning no edge (a looped vertex never
/// belongs to one).
pub fn oracle_independent_sets(g: &Multigraph) -> MPoly {
    let n = g.vertex_count();
    let exps = (0u64..1 << n)
        .filter(|s| g.edges().iter().all(|e| s >> e.u & 1 == 0 || s >> e.v & 1 == 0))
        .map(|s| vec![s.count_ones()]);
    collect(vec![var("u")], exps)
}

/// Zaslavsky's normal function by its definition.
pub fn oracle_zaslavsky(g: &Multigraph, lab: &EdgeLabeling) -> MPoly {
    let n = g.vertex_count();
    let all: Vec<&Edge> = g.edges().iter().collect();
    let r_all = rank(n, &all);
    let xm = &MPoly::named("x") - &MPoly::one();
    let ym = &MPoly::named("y") - &MPoly::one();
    let mut total = MPoly::zero();
    for mask in subsets(g.edge_count()) {
        let s: Vec<&Edge> = chosen(g.edges(), mask).collect();
        let r = rank(n, &s);
        let mut term = &xm.pow(r_all - r) * &ym.pow(s.len() as u32 - r);
        for (i, e) in g.edges().iter().enumerate() {
            let l = lab.label(e.id).expect("total labeling");
            let family = if mask >> i & 1 == 1 { "x" } else { "y" };
            term = &term * &MPoly::var(label_var(family, l));
        }
        total = &total + &term;
    }
    total
}

/// Chain polynomial in Traldi's form, by its definition.
pub fn oracle_chain(g: &Multigraph, lab: &EdgeLabeling) -> MPoly {
    let n = g.vertex_count();
    let one_minus = &MPoly::one() - &MPoly::named("ω");
    let mut total = MPoly::zero();
    for mask in subsets(g.edge_count()) {
        let s: Vec<&Edge> = chosen(g.edges(), mask).collect();
        let mut term = one_minus.pow(s.len() as u32 - rank(n, &s));
        for (i, e) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 0 {
                let l = lab.label(e.id).expect("total labeling");
                term = &term * &MPoly::var(label_var("u", l));
            }
        }
        total = &total + &term;
    }
    total
}

/// Number of pairs `(A, B)` of disjoint edge sets whose vertex sets are
/// disjoint, by assigning every edge to `A`, `B` or neither.
pub fn count_disjoint_pairs(g: &Multigraph) -> u64 {
    let m = g.edge_count();
    let mut assignment = vec![0u8; m];
    let mut count = 0;
    loop {
        let (mut va, mut vb) = (0u64, 0u64);
        for (e, &side) in g.edges().iter().zip(&assignment) {
            let ends = 1u64 << e.u | 1u64 << e.v;
            match side {
                1 => va |= ends,
                2 => vb |= ends,
                _ => {}
            }
        }
        count += u64::from(va & vb == 0);
        let mut i = 0;
        while i < m && assignment[i] == 2 {
            assignment[i] = 0;
            i += 1;
        }
        if i == m {
            return count;
        }
        assignment[i] += 1;
    }
}
