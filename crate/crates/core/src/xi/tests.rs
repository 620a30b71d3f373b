use std::num::NonZeroUsize;

use super::*;
use crate::multigraph::EdgeId;
use crate::poly::Var;

fn g(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edge_list(n, pairs).unwrap()
}

fn p(s: &str) -> MPoly {
    MPoly::parse(s).unwrap()
}

const XI_K2: &str = "x^2 + x*y + z";
const XI_P3: &str = "x^3 + 2*x^2*y + x*y^2 + 2*x*z + y*z";
const XI_LOOP: &str = "x*y + x + z";

#[test]
fn recurrence_small_cases() {
    assert_eq!(xi(&Multigraph::empty(0)), MPoly::one());
    assert_eq!(xi(&Multigraph::empty(1)), p("x"));
    assert_eq!(xi(&Multigraph::empty(3)), p("x^3"));
    assert_eq!(xi(&g(2, &[(0, 1)])), p(XI_K2));
    assert_eq!(xi(&g(3, &[(0, 1), (1, 2)])), p(XI_P3));
    assert_eq!(xi(&g(1, &[(0, 0)])), p(XI_LOOP));
}

#[test]
fn expansion_small_cases() {
    assert_eq!(xi_expansion(&Multigraph::empty(0)).unwrap(), MPoly::one());
    assert_eq!(xi_expansion(&Multigraph::empty(1)).unwrap(), p("x"));
    assert_eq!(xi_expansion(&g(2, &[(0, 1)])).unwrap(), p(XI_K2));
    assert_eq!(xi_expansion(&g(3, &[(0, 1), (1, 2)])).unwrap(), p(XI_P3));
    assert_eq!(xi_expansion(&g(1, &[(0, 0)])).unwrap(), p(XI_LOOP));
}

#[test]
fn product_of_two_edges() {
    let two = g(4, &[(0, 1), (2, 3)]);
    let expected = p("x^4 + 2*x^3*y + x^2*y^2 + 2*x^2*z + 2*x*y*z + z^2");
    assert_eq!(xi(&two), expected);
    assert_eq!(xi_expansion(&two).unwrap(), expected);
}

#[test]
fn memo_modes_agree() {
    let theta = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 1), (2, 3)]);
    let canonical = XiEngine::new().xi(&theta);
    assert_eq!(XiEngine::with_mode(MemoMode::Exact).xi(&theta), canonical);
    assert_eq!(XiEngine::with_mode(MemoMode::Off).xi(&theta), canonical);
    let tiny = XiEngine::with_options(MemoMode::Canonical, NonZeroUsize::new(2));
    assert_eq!(tiny.xi(&theta), canonical);
    assert!(tiny.stats().entries <= 2);
    assert_eq!(xi_expansion(&theta).unwrap(), canonical);
}

#[test]
fn engine_reuses_isomorphic_subgraphs() {
    let engine = XiEngine::new();
    let star = g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
    engine.xi(&star);
    let first = engine.stats();
    assert!(first.hits > 0);
    engine.xi(&star.permute_vertices(&[5, 4, 3, 2, 1, 0]));
    assert_eq!(engine.stats().misses, first.misses);
}

#[test]
fn seeded_policies_agree_without_memo() {
    let gr = g(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 3), (0, 1)]);
    let reference = xi(&gr);
    for seed in 0..30 {
        assert_eq!(xi_with_policy(&gr, &EliminationPolicy::Seeded(seed)), reference);
    }
}

#[test]
fn general_eval_small_cases() {
    let params = GeneralParams::from_ints(2, 1, 1, 1);
    let any = EliminationPolicy::MaxDegreeSum;
    assert_eq!(xi_general_eval(&Multigraph::empty(0), &params, &any), num_rational::BigRational::from_integer(1.into()));
    let k2 = g(2, &[(0, 1)]);
    for policy in [any.clone(), EliminationPolicy::Seeded(3)] {
        assert_eq!(
            xi_general_eval(&k2, &params, &policy),
            num_rational::BigRational::from_integer(4.into())
        );
    }
}

/// Path a-u-v-w with e0 = {a,u}, e1 = {u,v}, e2 = {v,w}.
fn witness() -> Multigraph {
    g(4, &[(0, 1), (1, 2), (2, 3)])
}

#[test]
fn general_eval_depends_on_order() {
    // Both orders expanded by hand from the two-step decomposition with
    // ξ(H1) = ξ(K2) = w+y+z = 4, ξ(H2) = ξ(H1-u) = ξ(H2-w)·x = 1:
    //   e1 first: w·4·(w+y+z) + y·(w·4 + y·4 + z) + z = 32 + 13 + 1 = 46
    //   e2 first: w·(w·4 + y·4 + z) + y·(w·4 + y·4 + z) + z·4 = 26 + 13 + 4 = 43
    let params = GeneralParams::from_ints(2, 1, 1, 1);
    let first = EliminationPolicy::Priority(vec![EdgeId(1), EdgeId(2)]);
    let second = EliminationPolicy::Priority(vec![EdgeId(2), EdgeId(1)]);
    let r = |v: i64| num_rational::BigRational::from_integer(v.into());
    assert_eq!(xi_general_eval(&witness(), &params, &first), r(46));
    assert_eq!(xi_general_eval(&witness(), &params, &second), r(43));
    for params in [GeneralParams::from_ints(1, 1, 1, 1), GeneralParams::from_ints(2, 1, 1, 0)] {
        assert_eq!(
            xi_general_eval(&witness(), &params, &first),
            xi_general_eval(&witness(), &params, &second)
        );
    }
}

#[test]
fn labeled_small_cases() {
    let k2 = g(2, &[(0, 1)]);
    let a = EdgeLabeling::from_sequence(&["a"]).unwrap();
    let expected = p("x^2 + x*y*t_a + z*t_a");
    assert_eq!(xi_lab(&k2, &a).unwrap(), expected);
    assert_eq!(xi_lab_expansion(&k2, &a).unwrap(), expected);

    let p3 = g(3, &[(0, 1), (1, 2)]);
    let ab = EdgeLabeling::from_sequence(&["a", "b"]).unwrap();
    let expected = p("x^3 + x^2*y*t_a + x^2*y*t_b + x*y^2*t_a*t_b + x*z*t_a + x*z*t_b + y*z*t_a*t_b");
    assert_eq!(xi_lab(&p3, &ab).unwrap(), expected);
    assert_eq!(xi_lab_expansion(&p3, &ab).unwrap(), expected);
    let ba = EdgeLabeling::from_sequence(&["b", "a"]).unwrap();
    assert_eq!(xi_lab(&p3, &ba).unwrap(), expected);
}

#[test]
fn labeled_degenerates_to_unlabeled() {
    let gr = g(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 3)]);
    let lab = EdgeLabeling::from_sequence(&["a", "b", "a", "c", "b"]).unwrap();
    let ones = ["a", "b", "c"]
        .iter()
        .map(|l| (label_var("t", l), MPoly::one()))
        .collect();
    let lab_xi = xi_lab(&gr, &lab).unwrap();
    assert_eq!(lab_xi.substitute(&ones), xi(&gr));
    assert_eq!(xi_lab_expansion(&gr, &lab).unwrap(), lab_xi);
    let same = EdgeLabeling::uniform(&gr, "s").unwrap();
    let one = [(label_var("t", "s"), MPoly::one())].into_iter().collect();
    assert_eq!(xi_lab(&gr, &same).unwrap().substitute(&one), xi(&gr));
}

#[test]
fn labeled_engine_keeps_labels_apart() {
    let engine = XiEngine::new();
    let k2 = g(2, &[(0, 1)]);
    let a = engine.xi_lab(&k2, &EdgeLabeling::from_sequence(&["a"]).unwrap()).unwrap();
    let b = engine.xi_lab(&k2, &EdgeLabeling::from_sequence(&["b"]).unwrap()).unwrap();
    assert_ne!(a, b);
    assert_eq!(engine.xi(&k2), p(XI_K2));
}

#[test]
fn unlabeled_edges_are_rejected() {
    let p3 = g(3, &[(0, 1), (1, 2)]);
    let partial = EdgeLabeling::from_sequence(&["a"]).unwrap();
    assert_eq!(xi_lab(&p3, &partial), Err(crate::Error::UnlabeledEdge(EdgeId(1))));
    assert!(xi_lab_expansion(&p3, &partial).is_err());
    assert!(EdgeLabeling::from_sequence(&["a b"]).is_err());
}

#[test]
fn structural_facts() {
    let gr = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
    let poly = xi(&gr);
    let x = Var::named("x");
    assert_eq!(poly.degree_in(&x), 5);
    assert_eq!(poly.coefficient(&[(x, 5)]), 1.into());
    // y = 0 leaves matchings only: z-degree is the matching number
    let no_y = poly.substitute(&[(Var::named("y"), MPoly::zero())].into_iter().collect());
    assert_eq!(no_y.degree_in(&Var::named("z")), 2);
}

#[test]
fn too_many_edges_for_expansion() {
    let pairs: Vec<_> = (0..25).map(|_| (0, 1)).collect();
    assert!(matches!(
        xi_expansion(&g(2, &pairs)),
        Err(crate::Error::TooManyEdges { .. })
    ));
}
