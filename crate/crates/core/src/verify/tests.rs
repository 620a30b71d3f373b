use super::*;

#[test]
fn corpus_shape() {
    let all = corpus();
    assert_eq!(all.len(), 57);
    let per_n: Vec<usize> = (1..=5)
        .map(|n| {
            all.iter()
                .filter(|e| e.kind == CorpusKind::ConnectedSimple && e.graph.vertex_count() == n)
                .count()
        })
        .collect();
    assert_eq!(per_n, [1, 1, 2, 6, 21]);
    assert!(all
        .iter()
        .filter(|e| e.kind == CorpusKind::Random)
        .all(|e| e.graph.vertex_count() <= 5 && e.graph.edge_count() <= 8));
    let again: Vec<String> = corpus().iter().map(|e| e.graph.to_string()).collect();
    assert_eq!(again, all.iter().map(|e| e.graph.to_string()).collect::<Vec<_>>());
}

#[test]
fn witness_report() {
    let report = nonconfluence_witness(5);
    assert!(report.passed(), "{report}");
    assert_eq!(report.outcomes.len(), 8);
    assert_eq!(report.outcomes[0].detail.as_deref(), Some("e1 first: 46, e2 first: 43"));
}

#[test]
fn mixed_condition_construction_passes() {
    let out = mixed_condition_checks(20, 3);
    assert!(out.iter().all(|o| o.passed), "{out:?}");
    let (_, _, params) = mixed_condition_instance(3);
    assert!(params.per_label.values().any(|(w, _, _)| *w != int(1)));
    assert!(params.per_label.values().any(|(_, _, z)| *z != int(0)));
}

#[test]
fn labeled_conditions_detect_order_dependence() {
    let (g, lab, params, _) = order_dependent_instance();
    let report = check_labeled_conditions(&g, &lab, &params, 50, 9);
    assert!(!report.passed());
    assert!(report.outcomes[0].counterexample.is_some());
}

#[test]
fn small_suites_pass() {
    let opts = SuiteOptions {
        max_vertices: 3,
        trials: 5,
        seed: 2,
    };
    for suite in [
        Suite::Expansion,
        Suite::Confluence,
        Suite::Specializations,
        Suite::Derived,
        Suite::Labeled,
        Suite::Boundary,
    ] {
        let report = run_suite(suite, &opts);
        assert!(report.passed(), "{report}");
        assert!(!report.outcomes.is_empty());
    }
}

#[test]
fn suite_names_round_trip() {
    for name in Suite::NAMES {
        assert_eq!(name.parse::<Suite>().unwrap().name(), name);
    }
    assert!("everything".parse::<Suite>().is_err());
}

#[test]
fn report_serializes() {
    let report = nonconfluence_witness(1);
    let json = serde_json::to_string(&report).unwrap();
    let back: VerifyReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
}
