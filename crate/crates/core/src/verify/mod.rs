//! Independent oracles and the suites that compare them with the
//! recurrence, the expansion and the specializations.

mod checks;
mod corpus;
mod oracles;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::poly::{MPoly, Var};
use crate::specializations as sp;
use crate::xi::{
    xi, xi_expansion, xi_lab, xi_lab_expansion, xi_lab_general_eval, EdgeLabeling,
};

pub use checks::{
    check_confluence, check_labeled_conditions, mixed_condition_instance,
    nonconfluence_witness, order_dependent_instance, proportional_params, witness_graph,
    zero_z_params,
};
pub use corpus::{
    connected_simple, corpus, fixtures, random_labeling, random_multigraphs, CorpusEntry,
    CorpusKind, CORPUS_SEED,
};
pub use oracles::{
    count_disjoint_pairs, oracle_chain, oracle_colorings, oracle_dpt, oracle_independent_sets,
    oracle_labeled_matchings, oracle_labeled_sokal, oracle_matchings, oracle_sokal, oracle_tutte,
    oracle_vertex_covers, oracle_weighted_matchings, oracle_zaslavsky,
};
pub use report::{Counterexample, Outcome, VerifyReport};

/// Label alphabet for the labeled checks.
pub const LABELS: [&str; 3] = ["a", "b", "c"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Recurrence against subset expansion, unlabeled and labeled.
    Expansion,
    /// Order independence of the recurrence.
    Confluence,
    /// Order dependence of the unrestricted recurrence on the witness.
    Nonconfluence,
    /// Every specialization against its oracle.
    Specializations,
    /// Vertex cover and independence polynomials against brute force.
    Derived,
    /// Sufficient conditions for the labeled recurrence.
    Labeled,
    /// Evaluations with a known closed form.
    Boundary,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "expansion",
        "confluence",
        "nonconfluence",
        "specializations",
        "derived",
        "labeled",
        "boundary",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Expansion => "expansion",
            Suite::Confluence => "confluence",
            Suite::Nonconfluence => "nonconfluence",
            Suite::Specializations => "specializations",
            Suite::Derived => "derived",
            Suite::Labeled => "labeled",
            Suite::Boundary => "boundary",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = [
            Suite::Expansion,
            Suite::Confluence,
            Suite::Nonconfluence,
            Suite::Specializations,
            Suite::Derived,
            Suite::Labeled,
            Suite::Boundary,
            Suite::All,
        ];
        all.into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "suite",
                name: s.to_string(),
                allowed: Suite::NAMES.join("|"),
            })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Corpus graphs with more vertices are skipped.
    pub max_vertices: usize,
    /// Random elimination orders per graph.
    pub trials: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_vertices: 5,
            trials: 50,
            seed: 1,
        }
    }
}

/// Per-graph seed mixed from the suite seed and the corpus index.
fn graph_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x2545_F491_4F6C_DD1D) ^ index as u64
}

/// Runs `check` on every selected corpus graph in parallel and merges the
/// outcomes in corpus order.
fn over_corpus(
    suite: &str,
    graphs: &[(usize, CorpusEntry)],
    check: impl Fn(usize, &Multigraph) -> Vec<Outcome> + Sync,
) -> VerifyReport {
    let outcomes: Vec<Vec<Outcome>> = graphs
        .par_iter()
        .map(|(i, entry)| check(*i, &entry.graph))
        .collect();
    VerifyReport {
        suite: suite.to_string(),
        outcomes: outcomes.into_iter().flatten().collect(),
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> VerifyReport {
    let graphs: Vec<(usize, CorpusEntry)> = corpus()
        .into_iter()
        .enumerate()
        .filter(|(_, e)| e.graph.vertex_count() <= opts.max_vertices)
        .collect();
    let seed = opts.seed;
    match suite {
        Suite::All => {
            let mut report = VerifyReport::new("all");
            for s in [
                Suite::Expansion,
                Suite::Confluence,
                Suite::Nonconfluence,
                Suite::Specializations,
                Suite::Derived,
                Suite::Labeled,
                Suite::Boundary,
            ] {
                report.extend(run_suite(s, opts));
            }
            report
        }
        Suite::Expansion => over_corpus("expansion", &graphs, |i, g| {
            expansion_checks(g, &random_labeling(g, &LABELS, graph_seed(seed, i)))
        }),
        Suite::Confluence => over_corpus("confluence", &graphs, |i, g| {
            check_confluence(g, opts.trials, graph_seed(seed, i)).outcomes
        }),
        Suite::Nonconfluence => nonconfluence_witness(seed),
        Suite::Specializations => over_corpus("specializations", &graphs, |i, g| {
            specialization_checks(g, &random_labeling(g, &LABELS, graph_seed(seed, i)))
        }),
        Suite::Derived => over_corpus("derived", &graphs, |_, g| derived_checks(g)),
        Suite::Labeled => {
            let mut report = over_corpus("labeled", &graphs, |i, g| {
                labeled_checks(g, opts.trials, graph_seed(seed, i))
            });
            report.outcomes.extend(mixed_condition_checks(opts.trials, seed));
            report
        }
        Suite::Boundary => over_corpus("boundary", &graphs, |_, g| boundary_checks(g)),
    }
}

pub fn expansion_checks(g: &Multigraph, lab: &EdgeLabeling) -> Vec<Outcome> {
    let mut out = Vec::new();
    out.push(match xi_expansion(g) {
        Ok(e) => Outcome::compare(g, "xi = xi_expansion", &e, &xi(g)),
        Err(e) => failed(g, "xi = xi_expansion", e),
    });
    let labeled = xi_lab(g, lab).and_then(|r| Ok((r, xi_lab_expansion(g, lab)?)));
    out.push(match labeled {
        Ok((r, e)) => Outcome::compare(g, "xi_lab = xi_lab_expansion", &e, &r),
        Err(e) => failed(g, "xi_lab = xi_lab_expansion", e),
    });
    out
}

fn failed(g: &Multigraph, identity: &str, e: Error) -> Outcome {
    Outcome::fail(g, identity, Counterexample::new(g).note(e.to_string()))
}

fn bind(pairs: &[(&str, MPoly)]) -> BTreeMap<Var, MPoly> {
    pairs.iter().map(|(n, p)| (Var::named(n), p.clone())).collect()
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn at(p: &MPoly, point: &[(&str, i64)]) -> BigRational {
    let point = point.iter().map(|(n, v)| (Var::named(n), int(*v))).collect();
    p.evaluate(&point).expect("all variables bound")
}

pub fn specialization_checks(g: &Multigraph, lab: &EdgeLabeling) -> Vec<Outcome> {
    let mut out = Vec::new();
    let xi_g = xi(g);
    let from = |s: sp::Specialization| s.from_xi(g, &xi_g);
    let x = MPoly::named("x");
    let y = MPoly::named("y");
    let c = MPoly::constant;

    let sokal_oracle = oracle_sokal(g);
    out.push(Outcome::compare(g, "sokal", &sokal_oracle, &from(sp::Specialization::Sokal).expect("total")));
    match sp::sokal_labeled(g, lab) {
        Ok(p) => out.push(Outcome::compare(g, "sokal labeled", &oracle_labeled_sokal(g, lab), &p)),
        Err(e) => out.push(failed(g, "sokal labeled", e)),
    }

    match from(sp::Specialization::Tutte) {
        Ok(t) => {
            out.push(Outcome::compare(g, "tutte", &oracle_tutte(g), &t));
            let xm = &x - &c(1);
            let ym = &y - &c(1);
            let lhs = &(&t * &xm.pow(g.component_count() as u32)) * &ym.pow(g.vertex_count() as u32);
            let rhs = sokal_oracle.substitute(&bind(&[("q", &xm * &ym), ("v", ym.clone())]));
            out.push(Outcome::compare(g, "tutte co-reduction", &rhs, &lhs));
        }
        Err(e) => out.push(failed(g, "tutte (exact division)", e)),
    }

    let chromatic = from(sp::Specialization::Chromatic).expect("total");
    let chi_oracle = sokal_oracle.substitute(&bind(&[("q", MPoly::named("λ")), ("v", c(-1))]));
    out.push(Outcome::compare(g, "chromatic = Z(λ,-1)", &chi_oracle, &chromatic));
    for lambda in 0..=4u32 {
        let count = BigRational::from_integer(BigInt::from(oracle_colorings(g, lambda, lambda)));
        out.push(Outcome::compare(
            g,
            format!("chromatic at λ={lambda} = proper colorings"),
            &count,
            &at(&chromatic, &[("λ", lambda as i64)]),
        ));
    }

    let matchings = oracle_matchings(g);
    out.push(Outcome::compare(g, "matching", &matchings, &from(sp::Specialization::Matching).expect("total")));
    let gen = matchings.substitute(&bind(&[("x", c(1)), ("y", x.clone())]));
    out.push(Outcome::compare(g, "matching generating", &gen, &from(sp::Specialization::MatchingGen).expect("total")));
    let defect = matchings.substitute(&bind(&[("y", c(-1))]));
    out.push(Outcome::compare(g, "matching defect", &defect, &from(sp::Specialization::MatchingDefect).expect("total")));

    let dpt = from(sp::Specialization::Dpt).expect("total");
    out.push(Outcome::compare(g, "dpt", &oracle_dpt(g), &dpt));
    for cx in 0..=3u32 {
        for cy in 0..=cx {
            let count = BigRational::from_integer(BigInt::from(oracle_colorings(g, cx, cy)));
            out.push(Outcome::compare(
                g,
                format!("dpt at x={cx}, y={cy} = generalized colorings"),
                &count,
                &at(&dpt, &[("x", cx as i64), ("y", cy as i64)]),
            ));
        }
    }
    let diagonal = dpt.substitute(&bind(&[("y", x.clone())]));
    let chi_x = chromatic.substitute(&bind(&[("λ", x.clone())]));
    out.push(Outcome::compare(g, "dpt(x,x) = chromatic(x)", &chi_x, &diagonal));

    match sp::heilmann_lieb(g, lab) {
        Ok(p) => out.push(Outcome::compare(g, "heilmann-lieb", &oracle_labeled_matchings(g, lab), &p)),
        Err(e) => out.push(failed(g, "heilmann-lieb", e)),
    }
    out.push(Outcome::compare(
        g,
        "heilmann-lieb weighted",
        &oracle_weighted_matchings(g),
        &sp::heilmann_lieb_weighted(g),
    ));

    let zas = oracle_zaslavsky(g, lab);
    for (name, got) in [
        ("zaslavsky subset sum", sp::zaslavsky(g, lab)),
        ("zaslavsky via xi_lab", sp::zaslavsky_via_xi(g, lab)),
    ] {
        out.push(match got {
            Ok(p) => Outcome::compare(g, name, &zas, &p),
            Err(e) => failed(g, name, e),
        });
    }
    let chain = oracle_chain(g, lab);
    for (name, got) in [
        ("chain subset sum", sp::chain(g, lab)),
        ("chain via xi_lab", sp::chain_via_xi(g, lab)),
    ] {
        out.push(match got {
            Ok(p) => Outcome::compare(g, name, &chain, &p),
            Err(e) => failed(g, name, e),
        });
    }
    out
}

pub fn derived_checks(g: &Multigraph) -> Vec<Outcome> {
    let xi_g = xi(g);
    let cover = sp::Specialization::VertexCover.from_xi(g, &xi_g).expect("total");
    let independence = sp::Specialization::Independence.from_xi(g, &xi_g).expect("total");
    let tau = Var::named("τ");
    let u = Var::named("u");
    let n = g.vertex_count();
    let padded = |p: &MPoly, v: &Var| {
        let mut c = p.univariate_coefficients(v).unwrap_or_else(|| vec![p.coefficient(&[])]);
        c.resize(n + 1, BigInt::from(0));
        c
    };
    let mut reversed = padded(&cover, &tau);
    reversed.reverse();
    let reversal_ok = reversed == padded(&independence, &u);
    vec![
        Outcome::compare(g, "vertex cover", &oracle_vertex_covers(g), &cover),
        Outcome::compare(g, "independence", &oracle_independent_sets(g), &independence),
        if reversal_ok {
            Outcome::pass(g, "independence = reversed vertex cover")
        } else {
            Outcome::fail(g, "independence = reversed vertex cover", Counterexample::new(g))
        },
    ]
}

pub fn labeled_checks(g: &Multigraph, trials: usize, seed: u64) -> Vec<Outcome> {
    let lab = random_labeling(g, &LABELS, seed);
    let rename = |mut o: Outcome, name: &str| {
        o.identity = format!("{name}: {}", o.identity);
        o
    };
    let mut out = Vec::new();
    let zero_z = zero_z_params(LABELS, seed);
    out.extend(
        check_labeled_conditions(g, &lab, &zero_z, trials, seed)
            .outcomes
            .into_iter()
            .map(|o| rename(o, "all z = 0")),
    );
    let prop = proportional_params(LABELS, seed.wrapping_add(7));
    out.extend(
        check_labeled_conditions(g, &lab, &prop, trials, seed)
            .outcomes
            .into_iter()
            .map(|o| rename(o, "all w = 1, proportional y, z")),
    );
    out
}

/// The mixed two-component construction, which must be order invariant,
/// and a one-label instance outside both conditions, which must not be.
pub fn mixed_condition_checks(trials: usize, seed: u64) -> Vec<Outcome> {
    let (g, lab, params) = mixed_condition_instance(seed);
    let mut out: Vec<Outcome> = check_labeled_conditions(&g, &lab, &params, trials, seed)
        .outcomes
        .into_iter()
        .map(|mut o| {
            o.identity = format!("mixed conditions on two components: {}", o.identity);
            o
        })
        .collect();

    let (g, lab, params, orders) = order_dependent_instance();
    let values: Vec<BigRational> = orders
        .iter()
        .map(|p| xi_lab_general_eval(&g, &lab, &params, p).expect("total"))
        .collect();
    let identity = "negative control: w = 2, z = 1 depends on the order";
    let detail = format!("e1 first: {}, e2 first: {}", values[0], values[1]);
    out.push(if values[0] != values[1] {
        Outcome::pass(&g, identity).with_detail(detail)
    } else {
        Outcome::fail(&g, identity, Counterexample::new(&g).labels(&lab).note(detail))
    });
    out
}

pub fn boundary_checks(g: &Multigraph) -> Vec<Outcome> {
    let p = xi(g);
    let n = g.vertex_count();
    let m = g.edge_count();
    let x = Var::named("x");
    let power = |b: i64, e: usize| BigRational::from_integer(num_traits::pow(BigInt::from(b), e));
    let pairs = BigRational::from_integer(BigInt::from(count_disjoint_pairs(g)));
    let mut out = Vec::new();
    let restricted = p.substitute(&bind(&[("y", MPoly::zero()), ("z", MPoly::zero())]));
    out.push(Outcome::compare(
        g,
        "xi(x,0,0) = x^|V|",
        &MPoly::var(x.clone()).pow(n as u32),
        &restricted,
    ));
    out.push(Outcome::compare(g, "xi(1,1,0) = 2^|E|", &power(2, m), &at(&p, &[("x", 1), ("y", 1), ("z", 0)])));
    out.push(Outcome::compare(
        g,
        "xi(1,1,1) = #disjoint (A,B)",
        &pairs,
        &at(&p, &[("x", 1), ("y", 1), ("z", 1)]),
    ));
    out.push(Outcome::compare(
        g,
        "[x^|V|] xi = 1",
        &BigInt::from(1),
        &p.coefficient(&[(x, n as u32)]),
    ));
    out
}

#[cfg(test)]
mod tests;
