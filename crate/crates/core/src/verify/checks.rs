use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::oracles::oracle_sokal;
use super::report::{Counterexample, Outcome, VerifyReport};
use crate::multigraph::{EdgeId, Multigraph};
use crate::poly::Var;
use crate::xi::{
    xi, xi_general_eval, xi_lab_general_eval, xi_with_policy, EdgeLabeling, EliminationPolicy,
    GeneralParams, LabeledParams,
};

/// Seed of the `i`-th trial policy.
fn trial_seed(seed: u64, i: usize) -> u64 {
    seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// A small nonzero rational `a/b` with `|a| ≤ 4`, `1 ≤ b ≤ 3`.
pub(crate) fn small_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let mut a = 0;
    while a == 0 {
        a = rng.gen_range(-4i64..=4);
    }
    BigRational::new(a.into(), rng.gen_range(1i64..=3).into())
}

/// Recomputes `ξ(G)` without memoization under `trials` seeded elimination
/// policies and passes iff every result equals the memoized one.
pub fn check_confluence(g: &Multigraph, trials: usize, seed: u64) -> VerifyReport {
    let reference = xi(g);
    let bad = (0..trials).into_par_iter().find_map_first(|i| {
        let s = trial_seed(seed, i);
        let got = xi_with_policy(g, &EliminationPolicy::Seeded(s));
        (got != reference).then(|| (s, got))
    });
    let outcome = match bad {
        None => Outcome::pass(g, format!("confluence ({trials} orders)")),
        Some((s, got)) => Outcome::fail(
            g,
            "confluence",
            Counterexample::new(g)
                .param("policy-seed", s)
                .values(reference.to_text(), got.to_text()),
        ),
    };
    VerifyReport::single("confluence", outcome)
}

/// The path `a - u - v - w` with edges `e0 = {a,u}`, `e1 = {u,v}`,
/// `e2 = {v,w}`, on which eliminating `e1` or `e2` first splits off
/// different pieces.
pub fn witness_graph() -> Multigraph {
    Multigraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).expect("valid")
}

fn r(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Evaluates the unrestricted recurrence on [`witness_graph`] in the two
/// orders `e1, e2` and `e2, e1`: they must differ at `(w,x,y,z) = (2,1,1,1)`
/// and agree at `w = 1` and at `z = 0`. Also checks the `z = 0` value
/// against `w^|E| Z(G; x, y/w)` at five random rational points.
pub fn nonconfluence_witness(seed: u64) -> VerifyReport {
    let g = witness_graph();
    let first = EliminationPolicy::Priority(vec![EdgeId(1), EdgeId(2)]);
    let second = EliminationPolicy::Priority(vec![EdgeId(2), EdgeId(1)]);
    let cases = [
        ("w=2,x=1,y=1,z=1", GeneralParams::from_ints(2, 1, 1, 1), false),
        ("w=1,x=1,y=1,z=1", GeneralParams::from_ints(1, 1, 1, 1), true),
        ("w=2,x=1,y=1,z=0", GeneralParams::from_ints(2, 1, 1, 0), true),
    ];
    let mut report = VerifyReport::new("nonconfluence");
    for (name, params, expect_equal) in cases {
        let a = xi_general_eval(&g, &params, &first);
        let b = xi_general_eval(&g, &params, &second);
        let identity = if expect_equal {
            format!("orders agree at {name}")
        } else {
            format!("orders disagree at {name}")
        };
        let detail = format!("e1 first: {a}, e2 first: {b}");
        let outcome = if (a == b) == expect_equal {
            Outcome::pass(&g, identity).with_detail(detail)
        } else {
            Outcome::fail(
                &g,
                identity,
                Counterexample::new(&g)
                    .param("point", name)
                    .values(a.to_string(), b.to_string()),
            )
        };
        report.push(outcome);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sokal = oracle_sokal(&g);
    let m = g.edge_count();
    for _ in 0..5 {
        let (w, x, y) = (small_rational(&mut rng), small_rational(&mut rng), small_rational(&mut rng));
        let params = GeneralParams::new(w.clone(), x.clone(), y.clone(), BigRational::zero());
        let left = xi_general_eval(&g, &params, &EliminationPolicy::Seeded(rng.gen()));
        let point: BTreeMap<Var, BigRational> =
            [(Var::named("q"), x.clone()), (Var::named("v"), &y / &w)].into_iter().collect();
        let right = num_traits::pow(w.clone(), m) * sokal.evaluate(&point).expect("bound");
        let identity = format!("ξ(x,y,0,w) = w^|E| Z(x,y/w) at w={w}, x={x}, y={y}");
        report.push(if left == right {
            Outcome::pass(&g, identity)
        } else {
            Outcome::fail(
                &g,
                identity,
                Counterexample::new(&g)
                    .param("w", &w)
                    .param("x", &x)
                    .param("y", &y)
                    .values(right.to_string(), left.to_string()),
            )
        });
    }
    report
}

/// Evaluates the labeled recurrence with per-label `(w, y, z)` along the
/// default order and `trials` seeded orders; passes iff all values agree.
pub fn check_labeled_conditions(
    g: &Multigraph,
    lab: &EdgeLabeling,
    params: &LabeledParams,
    trials: usize,
    seed: u64,
) -> VerifyReport {
    let identity = format!("labeled order invariance ({trials} orders)");
    let reference = match xi_lab_general_eval(g, lab, params, &EliminationPolicy::MaxDegreeSum) {
        Ok(v) => v,
        Err(e) => {
            return VerifyReport::single(
                "labeled",
                Outcome::fail(g, identity, Counterexample::new(g).labels(lab).note(e.to_string())),
            )
        }
    };
    let bad = (0..trials).into_par_iter().find_map_first(|i| {
        let s = trial_seed(seed, i);
        let got = xi_lab_general_eval(g, lab, params, &EliminationPolicy::Seeded(s))
            .expect("checked above");
        (got != reference).then(|| (s, got))
    });
    let outcome = match bad {
        None => Outcome::pass(g, identity),
        Some((s, got)) => Outcome::fail(
            g,
            identity,
            Counterexample::new(g)
                .labels(lab)
                .param("policy-seed", s)
                .param("params", format_params(params))
                .values(reference.to_string(), got.to_string()),
        ),
    };
    VerifyReport::single("labeled", outcome)
}

pub(crate) fn format_params(params: &LabeledParams) -> String {
    let mut out = format!("x={}", params.x);
    for (l, (w, y, z)) in &params.per_label {
        out.push_str(&format!("; {l}: w={w}, y={y}, z={z}"));
    }
    out
}

/// Parameters with every `z_λ = 0` and random nonzero `w_λ`, `y_λ`.
pub fn zero_z_params<'a>(alphabet: impl IntoIterator<Item = &'a str>, seed: u64) -> LabeledParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = small_rational(&mut rng);
    let per_label = alphabet
        .into_iter()
        .map(|l| {
            let w = small_rational(&mut rng);
            let y = small_rational(&mut rng);
            (l.to_string(), (w, y, BigRational::zero()))
        })
        .collect();
    LabeledParams { x, per_label }
}

/// Parameters with every `w_λ = 1` and `(y_λ, z_λ) = (y·t_λ, z·t_λ)`, so
/// that `y_λ z_μ = y_μ z_λ` for all labels.
pub fn proportional_params<'a>(
    alphabet: impl IntoIterator<Item = &'a str>,
    seed: u64,
) -> LabeledParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = small_rational(&mut rng);
    let y = small_rational(&mut rng);
    let z = small_rational(&mut rng);
    let per_label = alphabet
        .into_iter()
        .map(|l| {
            let t = small_rational(&mut rng);
            (l.to_string(), (BigRational::one(), &y * &t, &z * &t))
        })
        .collect();
    LabeledParams { x, per_label }
}

/// Two components: a 4-cycle with a chord labeled `a`/`b` under `z = 0`
/// and `w ≠ 1`, and a triangle with a pendant edge labeled `c`/`d` under
/// `w = 1` and proportional `(y, z)` with `z ≠ 0`. Globally neither
/// sufficient condition holds.
pub fn mixed_condition_instance(seed: u64) -> (Multigraph, EdgeLabeling, LabeledParams) {
    let left = Multigraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
        .expect("valid");
    let right = Multigraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).expect("valid");
    let g = left.disjoint_union(&right);
    let labels = ["a", "b", "a", "b", "a", "c", "d", "c", "d"];
    let lab = EdgeLabeling::new(g.edge_ids().zip(labels.iter().map(|s| s.to_string())).collect())
        .expect("valid labels");
    let mut params = zero_z_params(["a", "b"], seed);
    for (_, (w, _, _)) in params.per_label.iter_mut() {
        if w.is_one() {
            *w = r(2);
        }
    }
    let second = proportional_params(["c", "d"], seed.wrapping_add(1));
    params.per_label.extend(second.per_label);
    (g, lab, params)
}

/// The witness path with one label under `(w, y, z) = (2, 1, 1)`: the two
/// orders of the unlabeled witness give different values.
pub fn order_dependent_instance() -> (Multigraph, EdgeLabeling, LabeledParams, [EliminationPolicy; 2]) {
    let g = witness_graph();
    let lab = EdgeLabeling::uniform(&g, "a").expect("valid label");
    let params = LabeledParams {
        x: r(1),
        per_label: [("a".to_string(), (r(2), r(1), r(1)))].into_iter().collect(),
    };
    let orders = [
        EliminationPolicy::Priority(vec![EdgeId(1), EdgeId(2)]),
        EliminationPolicy::Priority(vec![EdgeId(2), EdgeId(1)]),
    ];
    (g, lab, params, orders)
}
