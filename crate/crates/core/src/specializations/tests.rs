use super::*;
use crate::poly::rational;

fn g(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edge_list(n, pairs).unwrap()
}

fn p(s: &str) -> MPoly {
    MPoly::parse(s).unwrap()
}

fn lab(labels: &[&str]) -> EdgeLabeling {
    EdgeLabeling::from_sequence(labels).unwrap()
}

fn k2() -> Multigraph {
    g(2, &[(0, 1)])
}

fn p3() -> Multigraph {
    g(3, &[(0, 1), (1, 2)])
}

fn c3() -> Multigraph {
    g(3, &[(0, 1), (1, 2), (2, 0)])
}

fn single_loop() -> Multigraph {
    g(1, &[(0, 0)])
}

#[test]
fn sokal_examples() {
    assert_eq!(sokal(&k2()), p("q^2 + q*v"));
    assert_eq!(sokal(&p3()), p("q^3 + 2*q^2*v + q*v^2"));
    assert_eq!(sokal(&Multigraph::empty(0)), MPoly::one());
}

#[test]
fn sokal_labeled_examples() {
    assert_eq!(sokal_labeled(&k2(), &lab(&["a"])).unwrap(), p("q^2 + q*v_a"));
    let two = g(4, &[(0, 1), (2, 3)]);
    let expected = &p("q^2 + q*v_a") * &p("q^2 + q*v_b");
    assert_eq!(sokal_labeled(&two, &lab(&["a", "b"])).unwrap(), expected);
    let same = sokal_labeled(&c3(), &lab(&["a", "b", "a"])).unwrap();
    let to_v = ["a", "b"].map(|l| (label_var("v", l), v("v"))).into_iter().collect();
    assert_eq!(same.substitute(&to_v), sokal(&c3()));
}

#[test]
fn tutte_examples() {
    assert_eq!(tutte(&k2()).unwrap(), p("x"));
    assert_eq!(tutte(&c3()).unwrap(), p("x^2 + x + y"));
    assert_eq!(tutte(&p3()).unwrap(), p("x^2"));
    assert_eq!(tutte(&single_loop()).unwrap(), p("y"));
    assert_eq!(tutte(&Multigraph::empty(0)).unwrap(), MPoly::one());
}

#[test]
fn chromatic_examples() {
    assert_eq!(chromatic(&k2()), p("l^2 - l"));
    assert_eq!(chromatic(&p3()).to_text(), "l^3 - 2*l^2 + l");
    assert_eq!(chromatic(&single_loop()), MPoly::zero());
}

#[test]
fn matching_examples() {
    assert_eq!(matching(&k2()), p("x^2 + y"));
    assert_eq!(matching(&p3()), p("x^3 + 2*x*y"));
    assert_eq!(matching_generating(&p3()), p("1 + 2*x"));
    assert_eq!(matching_defect(&p3()), p("x^3 - 2*x"));
    assert_eq!(matching(&c3()), p("x^3 + 3*x*y"));
    assert_eq!(matching(&single_loop()), p("x + y"));
}

#[test]
fn dpt_examples() {
    assert_eq!(dpt(&k2()), p("x^2 - y"));
    assert_eq!(dpt(&p3()), p("x^3 - 2*x*y + y"));
    assert_eq!(dpt(&single_loop()), p("x - y"));
}

#[test]
fn cover_and_independence_examples() {
    assert_eq!(vertex_cover(&k2()), p("tau^2 + 2*tau"));
    assert_eq!(vertex_cover(&p3()), p("tau^3 + 3*tau^2 + tau"));
    assert_eq!(vertex_cover(&Multigraph::empty(1)), p("tau + 1"));
    assert_eq!(independence(&k2()), p("1 + 2*u"));
    assert_eq!(independence(&p3()), p("1 + 3*u + u^2"));
    assert_eq!(independence(&Multigraph::empty(0)), MPoly::one());
    assert_eq!(vertex_cover(&single_loop()), p("tau"));
    assert_eq!(independence(&single_loop()), MPoly::one());
}

#[test]
fn heilmann_lieb_examples() {
    assert_eq!(heilmann_lieb(&k2(), &lab(&["a"])).unwrap(), p("1 + t_a"));
    assert_eq!(heilmann_lieb(&p3(), &lab(&["a", "b"])).unwrap(), p("1 + t_a + t_b"));
    let two = g(4, &[(0, 1), (2, 3)]);
    assert_eq!(
        heilmann_lieb(&two, &lab(&["a", "b"])).unwrap(),
        &p("1 + t_a") * &p("1 + t_b")
    );
    assert_eq!(heilmann_lieb_weighted(&p3()), p("1 + y_e0*x_0*x_1 + y_e1*x_1*x_2"));
}

#[test]
fn weighted_heilmann_lieb_evaluates() {
    let poly = heilmann_lieb_weighted(&p3());
    let mut w = LabelWeights::new();
    w.set("y", "e0", rational(1, 2)).set("y", "e1", rational(3, 1));
    for i in 0..3 {
        w.set("x", &i.to_string(), rational(2, 1));
    }
    // 1 + 1/2·4 + 3·4
    assert_eq!(w.evaluate(&poly, &Default::default()).unwrap(), rational(15, 1));
    assert!(w.check_total("y", ["e0", "e1"]).is_ok());
    assert!(w.check_total("y", ["e2"]).is_err());
}

#[test]
fn zaslavsky_examples() {
    let expected = p("y_a*x - y_a + x_a");
    assert_eq!(zaslavsky(&k2(), &lab(&["a"])).unwrap(), expected);
    assert_eq!(zaslavsky_via_xi(&k2(), &lab(&["a"])).unwrap(), expected);
    let e1 = Multigraph::empty(1);
    let none = EdgeLabeling::from_sequence::<&str>(&[]).unwrap();
    assert_eq!(zaslavsky(&e1, &none).unwrap(), MPoly::one());
    assert_eq!(zaslavsky_via_xi(&e1, &none).unwrap(), MPoly::one());
    let parallel = g(2, &[(0, 1), (0, 1)]);
    let ab = lab(&["a", "b"]);
    assert_eq!(zaslavsky(&parallel, &ab).unwrap(), zaslavsky_via_xi(&parallel, &ab).unwrap());
}

#[test]
fn chain_examples() {
    assert_eq!(chain(&k2(), &lab(&["a"])).unwrap(), p("u_a + 1"));
    assert_eq!(chain(&single_loop(), &lab(&["a"])).unwrap(), p("u_a + 1 - omega"));
    assert_eq!(
        chain(&p3(), &lab(&["a", "b"])).unwrap(),
        p("u_a*u_b + u_a + u_b + 1")
    );
    for (gr, l) in [
        (k2(), lab(&["a"])),
        (single_loop(), lab(&["a"])),
        (c3(), lab(&["a", "b", "a"])),
    ] {
        assert_eq!(chain(&gr, &l).unwrap(), chain_via_xi(&gr, &l).unwrap());
    }
}

#[test]
fn noble_welsh_examples() {
    assert_eq!(noble_welsh_u(&Multigraph::empty(1)).unwrap(), p("x_1"));
    assert_eq!(noble_welsh_u(&k2()).unwrap(), p("x_1^2 + x_2"));
    assert_eq!(noble_welsh_u(&single_loop()).unwrap(), p("x_1 + x_1*y"));
}

#[test]
fn names_round_trip() {
    for s in Specialization::ALL {
        assert_eq!(s.name().parse::<Specialization>().unwrap(), s);
    }
    assert!("tute".parse::<Specialization>().is_err());
}

#[test]
fn compute_matches_direct_functions() {
    let engine = XiEngine::new();
    let gr = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 1)]);
    assert_eq!(
        Specialization::Tutte.compute(&gr, None, &engine).unwrap(),
        tutte(&gr).unwrap()
    );
    let per_edge = EdgeLabeling::per_edge(&gr);
    assert_eq!(
        Specialization::Chain.compute(&gr, None, &engine).unwrap(),
        chain(&gr, &per_edge).unwrap()
    );
    assert_eq!(
        Specialization::Sokal.compute(&gr, Some(&per_edge), &engine).unwrap(),
        sokal_labeled(&gr, &per_edge).unwrap()
    );
}
