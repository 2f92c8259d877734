//! Cross-checks against invariants computed independently by a computer
//! algebra system and committed as fixtures.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Deserialize;

use kroncover::autos::{automorphism_group_with_cap, inner_automorphisms, AUT_ORDER_CAP};
use kroncover::harness::{load_corpus, run, Check, Config, GroupSpec};
use kroncover::invariant::chief_length;
use kroncover::perm::{all_subgroups, subgroup_classes};

#[derive(Deserialize)]
struct GroupFacts {
    name: String,
    order: u128,
    center: u128,
    aut_order: u128,
    subgroup_classes: usize,
    subgroups: usize,
    normal_subgroups: usize,
    conjugacy_classes: usize,
    chief_length: usize,
    derived: u128,
}

#[derive(Deserialize)]
struct CoveringFacts {
    name: String,
    out_order: u128,
    #[serde(default)]
    skipped: bool,
    #[serde(default)]
    intermediate: usize,
    #[serde(default)]
    covering_pairs: usize,
    #[serde(default)]
    proper_covering_pairs: usize,
    #[serde(default)]
    max_index: u128,
}

fn fixture<T: for<'de> Deserialize<'de>>(name: &str) -> Vec<T> {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn catalog() -> Vec<GroupSpec> {
    load_corpus(&[concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.jsonl")])
        .unwrap()
        .specs
}

#[test]
fn group_invariants_match_reference() {
    let facts: BTreeMap<String, GroupFacts> = fixture::<GroupFacts>("group_oracle.jsonl")
        .into_iter()
        .map(|f| (f.name.clone(), f))
        .collect();
    let specs = catalog();
    assert_eq!(specs.len(), facts.len());
    let failures: Vec<String> = specs
        .par_iter()
        .filter_map(|spec| {
            let f = &facts[&spec.name];
            let g = spec.build().unwrap();
            let inn = inner_automorphisms(&g).unwrap();
            let normal = subgroup_classes(&g, 1000)
                .unwrap()
                .iter()
                .filter(|c| c.conjugates.len() == 1)
                .count();
            let mut got = vec![
                ("order", g.order(), f.order),
                ("center", g.center().unwrap().order(), f.center),
                ("derived", g.derived_subgroup().unwrap().order(), f.derived),
                (
                    "subgroup classes",
                    subgroup_classes(&g, 1000).unwrap().len() as u128,
                    f.subgroup_classes as u128,
                ),
                (
                    "subgroups",
                    all_subgroups(&g, 1000).unwrap().len() as u128,
                    f.subgroups as u128,
                ),
                (
                    "normal subgroups",
                    normal as u128,
                    f.normal_subgroups as u128,
                ),
                (
                    "conjugacy classes",
                    inn.element_orbits().len() as u128,
                    f.conjugacy_classes as u128,
                ),
                (
                    "chief length",
                    chief_length(&inn) as u128,
                    f.chief_length as u128,
                ),
            ];
            if f.aut_order <= AUT_ORDER_CAP {
                let aut = automorphism_group_with_cap(&g, AUT_ORDER_CAP).unwrap();
                got.push(("aut order", aut.order(), f.aut_order));
            }
            let bad: Vec<String> = got
                .into_iter()
                .filter(|(_, a, b)| a != b)
                .map(|(what, a, b)| format!("{}: {what} {a} != {b}", spec.name))
                .collect();
            (!bad.is_empty()).then(|| bad.join("; "))
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn covering_counts_match_reference() {
    let corpus =
        load_corpus(&[concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.jsonl")]).unwrap();
    let cfg = Config {
        checks: vec![Check::Theorem],
        ..Config::default()
    };
    let report = run(&corpus, &cfg);
    let flagged: BTreeMap<&str, &str> = report
        .notices
        .iter()
        .map(|n| (n.group.as_str(), n.message.as_str()))
        .collect();
    let mut seen = 0;
    for f in fixture::<CoveringFacts>("covering_oracle.jsonl") {
        if f.skipped || f.out_order > cfg.max_order {
            let msg = flagged.get(f.name.as_str()).copied().unwrap_or("");
            assert!(
                msg.starts_with("partial") || msg.starts_with("skipped"),
                "{} not flagged",
                f.name
            );
            continue;
        }
        let rows: Vec<_> = report
            .theorem
            .iter()
            .filter(|r| r.group == f.name)
            .collect();
        let auts = rows.iter().map(|r| r.aut_id).max().map_or(0, |m| m + 1);
        let covering: Vec<_> = rows.iter().filter(|r| r.covered).collect();
        assert_eq!(auts, f.intermediate, "{}: intermediate groups", f.name);
        assert_eq!(
            covering.len(),
            f.covering_pairs,
            "{}: covering pairs",
            f.name
        );
        assert_eq!(
            covering.iter().filter(|r| r.index > 1).count(),
            f.proper_covering_pairs,
            "{}: proper covering pairs",
            f.name
        );
        assert_eq!(
            covering.iter().map(|r| r.index).max().unwrap_or(1),
            f.max_index,
            "{}",
            f.name
        );
        seen += 1;
    }
    assert!(seen > 290);
    assert!(report.events.is_empty());
}
