use syzygy_core::harness::{run_corpus, CorpusEntry, Reading, RunOptions, Verdict};
use syzygy_core::{parse_polynomial, Ring};

fn entry(name: &str, vars: &[&str], gens: &[&str]) -> CorpusEntry {
    let ring = Ring::with_vars(vars).unwrap();
    let ideal = gens
        .iter()
        .map(|g| parse_polynomial(g, &ring).unwrap())
        .collect();
    CorpusEntry {
        name: name.to_string(),
        ring,
        ideal,
    }
}

#[test]
fn plane_union_line_in_five_variables() {
    // (x, y) ∩ (z, w, v): codim 2, components of dimension 3 and 2
    let e = entry(
        "plane_and_line",
        &["x", "y", "z", "w", "v"],
        &["x*z", "x*w", "x*v", "y*z", "y*w", "y*v"],
    );
    let opts = RunOptions {
        readings: vec![Reading::PIndexed],
        ..RunOptions::default()
    };
    let reports = run_corpus(&[e], &opts).unwrap();
    assert!(
        reports.iter().all(|r| !r.verdict.is_failure()),
        "{reports:#?}"
    );
    for id in ["4.1", "4.2", "4.3a"] {
        let r = reports.iter().find(|r| r.claim == id).unwrap();
        assert_eq!(r.verdict, Verdict::Verified, "{id}");
    }
}

#[test]
fn unit_ideal_is_never_applicable() {
    let e = entry("unit", &["x", "y"], &["1"]);
    let reports = run_corpus(&[e], &RunOptions::default()).unwrap();
    let theorems: Vec<_> = reports
        .iter()
        .filter(|r| !["oracle", "2.1", "2.2"].contains(&r.claim.as_str()))
        .collect();
    assert!(!theorems.is_empty());
    assert!(
        theorems
            .iter()
            .all(|r| r.verdict == Verdict::HypothesisNotMet),
        "{theorems:#?}"
    );
    assert!(reports.iter().all(|r| !r.verdict.is_failure()));
}
