//! Classical graph polynomials as substitution instances of `ξ` and
//! `ξ_lab`.
//!
//! Unlabeled instances are also available from a precomputed `ξ` through
//! [`Specialization::from_xi`], which is how the atlas derives several
//! invariants from one recurrence run.

mod weights;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::multigraph::{Dsu, Multigraph};
use crate::poly::{MPoly, Var};
use crate::xi::{label_var, mask_tables, xi, xi_lab, EdgeLabeling, XiEngine};

pub use weights::LabelWeights;

fn v(name: &str) -> MPoly {
    MPoly::named(name)
}

fn c(k: i64) -> MPoly {
    MPoly::constant(k)
}

fn bind<'a>(pairs: impl IntoIterator<Item = (&'a str, MPoly)>) -> BTreeMap<Var, MPoly> {
    pairs.into_iter().map(|(n, p)| (Var::named(n), p)).collect()
}

/// Substitutes into the `x, y, z` slots of a `ξ` polynomial.
fn xyz(p: &MPoly, x: MPoly, y: MPoly, z: MPoly) -> MPoly {
    p.substitute(&bind([("x", x), ("y", y), ("z", z)]))
}

/// Replaces every `t_λ^a` by `num(λ)^a · den(λ)^(n_λ - a)`, where `n_λ` is
/// the number of edges labeled `λ`. This multiplies `p` by `∏ den(λ)^n_λ`
/// and substitutes `t_λ = num/den` without leaving the polynomial ring.
fn clear_labels(
    p: &MPoly,
    counts: &BTreeMap<String, u32>,
    num: impl Fn(&str) -> MPoly,
    den: impl Fn(&str) -> MPoly,
) -> MPoly {
    let t_vars: BTreeMap<Var, &str> = counts
        .keys()
        .map(|l| (label_var("t", l), l.as_str()))
        .collect();
    p.map_terms(|powers, coeff| {
        let mut term = MPoly::constant(coeff.clone());
        let mut seen: BTreeMap<&str, u32> = BTreeMap::new();
        for (var, e) in powers {
            match t_vars.get(var) {
                Some(l) => {
                    seen.insert(l, *e);
                }
                None => term = &term * &MPoly::var(var.clone()).pow(*e),
            }
        }
        for (l, &n) in counts {
            let a = seen.get(l.as_str()).copied().unwrap_or(0);
            debug_assert!(a <= n);
            term = &term * &num(l).pow(a);
            term = &term * &den(l).pow(n - a);
        }
        term
    })
}

/// `Z(G; q, v) = ξ(G; q, v, 0)`.
pub fn sokal(g: &Multigraph) -> MPoly {
    Specialization::Sokal.from_xi(g, &xi(g)).expect("total")
}

/// `Z_lab(G; q, v̄) = ξ_lab(G; q, 1, 0, t̄ = v̄)`.
pub fn sokal_labeled(g: &Multigraph, lab: &EdgeLabeling) -> Result<MPoly> {
    let p = xi_lab(g, lab)?;
    let mut b = bind([("x", v("q")), ("y", c(1)), ("z", c(0))]);
    for l in lab.alphabet_of(g)? {
        b.insert(label_var("t", &l), MPoly::var(label_var("v", &l)));
    }
    Ok(p.substitute(&b))
}

/// Tutte polynomial, by dividing `ξ(G; (x-1)(y-1), y-1, 0)` by
/// `(x-1)^k(E) (y-1)^|V|`.
pub fn tutte(g: &Multigraph) -> Result<MPoly> {
    Specialization::Tutte.from_xi(g, &xi(g))
}

/// Chromatic polynomial in `λ` (text name `l`).
pub fn chromatic(g: &Multigraph) -> MPoly {
    Specialization::Chromatic.from_xi(g, &xi(g)).expect("total")
}

/// Generalized matching polynomial `Σ a_i x^(n-2i) y^i = ξ(G; x, 0, y)`.
/// A loop counts as a matching edge covering one vertex.
pub fn matching(g: &Multigraph) -> MPoly {
    Specialization::Matching.from_xi(g, &xi(g)).expect("total")
}

/// Generating matching polynomial `g(G; x) = ξ(G; 1, 0, x)`.
pub fn matching_generating(g: &Multigraph) -> MPoly {
    Specialization::MatchingGen.from_xi(g, &xi(g)).expect("total")
}

/// Defect matching polynomial `μ(G; x) = ξ(G; x, 0, -1)`.
pub fn matching_defect(g: &Multigraph) -> MPoly {
    Specialization::MatchingDefect.from_xi(g, &xi(g)).expect("total")
}

/// Dohmen–Pönitz–Tittmann bivariate chromatic polynomial
/// `P(G; x, y) = ξ(G; x, -1, x - y)`.
pub fn dpt(g: &Multigraph) -> MPoly {
    Specialization::Dpt.from_xi(g, &xi(g)).expect("total")
}

/// Vertex cover polynomial `Σ_C τ^|C|` as `ξ(G; τ+1, -1, τ)`, i.e.
/// `P(G; τ+1, 1)`: the vertices not holding the single proper color form an
/// independent set's complement. A loop forces its vertex into every cover.
pub fn vertex_cover(g: &Multigraph) -> MPoly {
    Specialization::VertexCover.from_xi(g, &xi(g)).expect("total")
}

/// Independence polynomial `Σ_S u^|S|`: the vertex cover polynomial with
/// coefficients reversed over `|V|`.
pub fn independence(g: &Multigraph) -> MPoly {
    Specialization::Independence.from_xi(g, &xi(g)).expect("total")
}

fn reverse_cover(g: &Multigraph, cover: &MPoly) -> MPoly {
    let tau = Var::named("τ");
    let n = g.vertex_count();
    let mut coeffs = cover
        .univariate_coefficients(&tau)
        .unwrap_or_else(|| vec![cover.coefficient(&[])]);
    coeffs.resize(n + 1, BigInt::from(0));
    coeffs.reverse();
    MPoly::from_univariate(Var::named("u"), &coeffs)
}

/// Labeled matching polynomial `Σ_M ∏_{e∈M} t_c(e) = ξ_lab(G; 1, 0, 1, t̄)`.
pub fn heilmann_lieb(g: &Multigraph, lab: &EdgeLabeling) -> Result<MPoly> {
    Ok(xyz(&xi_lab(g, lab)?, c(1), c(0), c(1)))
}

/// Heilmann–Lieb multivariate matching polynomial
/// `Σ_M ∏_{e={u,v}∈M} y_e x_u x_v` over vertex variables `x_0, x_1, ..` and
/// edge variables `y_e0, y_e1, ..`. Bind them with [`LabelWeights`] for a
/// weighted evaluation.
pub fn heilmann_lieb_weighted(g: &Multigraph) -> MPoly {
    let lab = EdgeLabeling::per_edge(g);
    let p = heilmann_lieb(g, &lab).expect("per-edge labeling is total");
    let b: BTreeMap<Var, MPoly> = g
        .edges()
        .iter()
        .map(|e| {
            let l = lab.label(e.id).expect("total");
            let x = |i: usize| MPoly::var(Var::indexed("x", i).expect("numeric index"));
            let weight = &(&MPoly::var(label_var("y", l)) * &x(e.u)) * &x(e.v);
            (label_var("t", l), weight)
        })
        .collect();
    p.substitute(&b)
}

/// Zaslavsky's normal function of the colored graph,
/// `Σ_S ∏_{e∈S} x_c(e) ∏_{e∉S} y_c(e) (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))`,
/// by direct subset summation.
pub fn zaslavsky(g: &Multigraph, lab: &EdgeLabeling) -> Result<MPoly> {
    let (alphabet, label_of) = label_slots(g, lab)?;
    let tables = mask_tables(g)?;
    let r_all = tables.rank[tables.rank.len() - 1] as u32;
    let k = alphabet.len();
    // slots: (x-1), (y-1), x_λ.., y_λ..
    let mut counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (mask, &rank) in tables.rank.iter().enumerate() {
        let rank = rank as u32;
        let size = mask.count_ones();
        let mut e = vec![0u32; 2 + 2 * k];
        e[0] = r_all - rank;
        e[1] = size - rank;
        for (i, &l) in label_of.iter().enumerate() {
            if mask >> i & 1 == 1 {
                e[2 + l] += 1;
            } else {
                e[2 + k + l] += 1;
            }
        }
        *counts.entry(e).or_insert_with(|| BigInt::from(0)) += 1;
    }
    let (xs, ys) = (Var::named("ξx"), Var::named("ξy"));
    let mut vars = vec![xs.clone(), ys.clone()];
    vars.extend(alphabet.iter().map(|l| label_var("x", l)));
    vars.extend(alphabet.iter().map(|l| label_var("y", l)));
    let raw = MPoly::from_terms(vars, counts);
    Ok(raw.substitute(&[(xs, &v("x") - &c(1)), (ys, &v("y") - &c(1))].into_iter().collect()))
}

/// Zaslavsky's function through `ξ_lab(G; x'y', y', 0, t̄)` with
/// `t_λ = x_λ / y_λ`, `x' = x-1`, `y' = y-1`. Denominators are cleared by
/// `∏ y_c(e)` and the prefactor `x'^k(E) y'^|V|` is divided out exactly.
pub fn zaslavsky_via_xi(g: &Multigraph, lab: &EdgeLabeling) -> Result<MPoly> {
    let counts = lab.label_counts(g)?;
    let p = xi_lab(g, lab)?;
    let cleared = clear_labels(
        &p,
        &counts,
        |l| MPoly::var(label_var("x", l)),
        |l| MPoly::var(label_var("y", l)),
    );
    let xp = &v("x") - &c(1);
    let yp = &v("y") - &c(1);
    let sub = xyz(&cleared, &xp * &yp, yp.clone(), c(0));
    let divisor = &xp.pow(g.component_count() as u32) * &yp.pow(g.vertex_count() as u32);
    sub.exact_div(&divisor)
}

/// Chain polynomial in Traldi's form
/// `Σ_S (1-ω)^(|S|-r(S)) ∏_{e∉S} u_c(e)`, by direct subset summation.
pub fn chain(g: &Multigraph, lab: &EdgeLabeling) -> Result<MPoly> {
    let (alphabet, label_of) = label_slots(g, lab)?;
    let tables = mask_tables(g)?;
    let k = alphabet.len();
    let mut counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (mask, &rank) in tables.rank.iter().enumerate() {
        let mut e = vec![0u32; 1 + k];
        e[0] = mask.count_ones() - rank as u32;
        for (i, &l) in label_of.iter().enumerate() {
            if mask >> i & 1 == 0 {
                e[1 + l] += 1;
            }
        }
        *counts.entry(e).or_insert_with(|| BigInt::from(0)) += 1;
    }
    let s = Var::named("ξs");
    let mut vars = vec![s.clone()];
    vars.extend(alphabet.iter().map(|l| label_var("u", l)));
    let raw = MPoly::from_terms(vars, counts);
    Ok(raw.substitute(&[(s, &c(1) - &v("ω"))].into_iter().collect()))
}

/// Chain polynomial through `ξ_lab(G; 1-ω, 1, 0, v̄)` with
/// `v_λ = (1-ω)/u_λ`, cleared by `∏ u_c(e)` and divided by `(1-ω)^|V|`.
pub fn chain_via_xi(g: &Multigraph, lab: &EdgeLabeling) -> Result<MPoly> {
    let counts = lab.label_counts(g)?;
    let p = xi_lab(g, lab)?;
    let one_minus = &c(1) - &v("ω");
    let cleared = clear_labels(&p, &counts, |_| one_minus.clone(), |l| {
        MPoly::var(label_var("u", l))
    });
    let sub = xyz(&cleared, one_minus.clone(), c(1), c(0));
    sub.exact_div(&one_minus.pow(g.vertex_count() as u32))
}

/// Noble–Welsh `U(G; x̄, y) = Σ_A ∏_i x_i^s(i,A) y^(|A|-r(A))`, where
/// `s(i, A)` counts components of `(V, A)` with `i` vertices.
pub fn noble_welsh_u(g: &Multigraph) -> Result<MPoly> {
    let tables = mask_tables(g)?;
    let n = g.vertex_count();
    // slots: x_1..x_n, y
    let mut counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (mask, &rank) in tables.rank.iter().enumerate() {
        let mut dsu = Dsu::new(n);
        for e in g.masked_edges(mask as u64) {
            dsu.union(e.u, e.v);
        }
        let mut sizes = vec![0usize; n];
        for vtx in 0..n {
            sizes[dsu.find(vtx)] += 1;
        }
        let mut e = vec![0u32; n + 1];
        for &s in sizes.iter().filter(|&&s| s > 0) {
            e[s - 1] += 1;
        }
        e[n] = mask.count_ones() - rank as u32;
        *counts.entry(e).or_insert_with(|| BigInt::from(0)) += 1;
    }
    let mut vars: Vec<Var> = (1..=n)
        .map(|i| Var::indexed("x", i).expect("numeric index"))
        .collect();
    vars.push(Var::named("y"));
    Ok(MPoly::from_terms(vars, counts))
}

/// Alphabet in order and the alphabet position of each edge's label.
fn label_slots(g: &Multigraph, lab: &EdgeLabeling) -> Result<(Vec<String>, Vec<usize>)> {
    let alphabet: Vec<String> = lab.alphabet_of(g)?.into_iter().collect();
    let label_of = g
        .edges()
        .iter()
        .map(|e| {
            let l = lab.label(e.id).expect("checked");
            alphabet.iter().position(|a| a == l).expect("in alphabet")
        })
        .collect();
    Ok((alphabet, label_of))
}

/// The named specializations offered by the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Specialization {
    Sokal,
    Tutte,
    Chromatic,
    Matching,
    MatchingGen,
    MatchingDefect,
    Dpt,
    VertexCover,
    Independence,
    HeilmannLieb,
    Zaslavsky,
    Chain,
    NobleWelshU,
}

impl Specialization {
    pub const ALL: [Specialization; 13] = [
        Specialization::Sokal,
        Specialization::Tutte,
        Specialization::Chromatic,
        Specialization::Matching,
        Specialization::MatchingGen,
        Specialization::MatchingDefect,
        Specialization::Dpt,
        Specialization::VertexCover,
        Specialization::Independence,
        Specialization::HeilmannLieb,
        Specialization::Zaslavsky,
        Specialization::Chain,
        Specialization::NobleWelshU,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Specialization::Sokal => "sokal",
            Specialization::Tutte => "tutte",
            Specialization::Chromatic => "chromatic",
            Specialization::Matching => "matching",
            Specialization::MatchingGen => "matching-gen",
            Specialization::MatchingDefect => "matching-defect",
            Specialization::Dpt => "dpt",
            Specialization::VertexCover => "vertex-cover",
            Specialization::Independence => "independence",
            Specialization::HeilmannLieb => "heilmann-lieb",
            Specialization::Zaslavsky => "zaslavsky",
            Specialization::Chain => "chain",
            Specialization::NobleWelshU => "noble-welsh-u",
        }
    }

    /// True for instances of `ξ_lab`. Without an explicit labeling these use
    /// one label per edge.
    pub fn is_labeled(self) -> bool {
        matches!(
            self,
            Specialization::HeilmannLieb | Specialization::Zaslavsky | Specialization::Chain
        )
    }

    /// Derives an unlabeled instance from `ξ(G)`. Labeled instances and
    /// `noble-welsh-u` are not functions of `ξ` and are computed from `g`.
    pub fn from_xi(self, g: &Multigraph, xi: &MPoly) -> Result<MPoly> {
        Ok(match self {
            Specialization::Sokal => xyz(xi, v("q"), v("v"), c(0)),
            Specialization::Tutte => {
                let xp = &v("x") - &c(1);
                let yp = &v("y") - &c(1);
                let sub = xyz(xi, &xp * &yp, yp.clone(), c(0));
                let divisor =
                    &xp.pow(g.component_count() as u32) * &yp.pow(g.vertex_count() as u32);
                sub.exact_div(&divisor)?
            }
            Specialization::Chromatic => xyz(xi, v("λ"), c(-1), c(0)),
            Specialization::Matching => xyz(xi, v("x"), c(0), v("y")),
            Specialization::MatchingGen => xyz(xi, c(1), c(0), v("x")),
            Specialization::MatchingDefect => xyz(xi, v("x"), c(0), c(-1)),
            Specialization::Dpt => xyz(xi, v("x"), c(-1), &v("x") - &v("y")),
            Specialization::VertexCover => xyz(xi, &v("τ") + &c(1), c(-1), v("τ")),
            Specialization::Independence => {
                let cover = Specialization::VertexCover.from_xi(g, xi)?;
                reverse_cover(g, &cover)
            }
            Specialization::NobleWelshU => noble_welsh_u(g)?,
            Specialization::HeilmannLieb | Specialization::Zaslavsky | Specialization::Chain => {
                self.compute(g, None, &XiEngine::new())?
            }
        })
    }

    /// Computes the instance for `g`, using `lab` for labeled instances
    /// (and for `sokal`, which then becomes the labeled Sokal polynomial).
    pub fn compute(
        self,
        g: &Multigraph,
        lab: Option<&EdgeLabeling>,
        engine: &XiEngine,
    ) -> Result<MPoly> {
        let per_edge;
        let lab = match lab {
            Some(l) => Some(l),
            None if self.is_labeled() => {
                per_edge = EdgeLabeling::per_edge(g);
                Some(&per_edge)
            }
            None => None,
        };
        match (self, lab) {
            (Specialization::Sokal, Some(l)) => sokal_labeled(g, l),
            (Specialization::HeilmannLieb, Some(l)) => {
                Ok(xyz(&engine.xi_lab(g, l)?, c(1), c(0), c(1)))
            }
            (Specialization::Zaslavsky, Some(l)) => zaslavsky(g, l),
            (Specialization::Chain, Some(l)) => chain(g, l),
            (Specialization::NobleWelshU, _) => noble_welsh_u(g),
            (s, _) => s.from_xi(g, &engine.xi(g)),
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Specialization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Specialization::ALL
            .into_iter()
            .find(|sp| sp.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "specialization",
                name: s.to_string(),
                allowed: Specialization::ALL.map(Specialization::name).join("|"),
            })
    }
}

#[cfg(test)]
mod tests;
