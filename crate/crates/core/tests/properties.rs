//! Structural invariants over randomly chosen corpus groups.

use std::sync::OnceLock;

use proptest::prelude::*;

use kroncover::autos::{automorphism_group, induce, intermediate_aut_groups, restrict, AutGroup};
use kroncover::harness::{load_corpus, GroupSpec};
use kroncover::invariant::{a_chief_series, a_core_set, chief_length, cocore_set, minimal_over};
use kroncover::perm::{quotient, subgroup_classes, ElementSet, PermGroup, Permutation};

fn catalog() -> &'static [GroupSpec] {
    static CATALOG: OnceLock<Vec<GroupSpec>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.jsonl");
        // keep the property runs quick
        load_corpus(&[path])
            .unwrap()
            .specs
            .into_iter()
            .filter(|s| s.order.unwrap() <= 32)
            .collect()
    })
}

fn group(i: usize) -> PermGroup {
    let specs = catalog();
    specs[i % specs.len()].build().unwrap()
}

fn auts(g: &PermGroup) -> Option<Vec<AutGroup>> {
    let aut = automorphism_group(g).ok()?;
    intermediate_aut_groups(&aut, 64).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn permutation_text_round_trip(images in Just((0..9u32).collect::<Vec<_>>()).prop_shuffle()) {
        let p = Permutation::from_images(images).unwrap();
        let q = Permutation::parse(&p.to_string(), 9).unwrap();
        prop_assert_eq!(&p, &q);
        prop_assert!(p.then(&p.inverse()).is_identity());
    }

    #[test]
    fn group_order_matches_element_count(i in 0usize..1000) {
        let g = group(i);
        prop_assert_eq!(g.element_table().unwrap().len() as u128, g.order());
    }

    #[test]
    fn core_and_cocore_bracket_u(i in 0usize..1000, j in 0usize..64, k in 0usize..64) {
        let g = group(i);
        let Some(list) = auts(&g) else { return Ok(()) };
        let a = &list[k % list.len()];
        let classes = subgroup_classes(&g, 1000).unwrap();
        let u = &classes[j % classes.len()].rep;
        let core = a_core_set(a, u);
        let (cocore, _) = cocore_set(a, u);
        prop_assert!(core.is_subset(u));
        prop_assert!(u.is_subset(&cocore));
        prop_assert!(a.is_invariant(&core));
        prop_assert!(a.is_invariant(&cocore));
    }

    #[test]
    fn coverage_is_monotone_in_a(i in 0usize..1000, j in 0usize..64) {
        let g = group(i);
        let Some(list) = auts(&g) else { return Ok(()) };
        let classes = subgroup_classes(&g, 1000).unwrap();
        let u = &classes[j % classes.len()].rep;
        let full = g.order() as usize;
        for a in &list {
            if cocore_set(a, u).0.count() < full {
                continue;
            }
            for b in list.iter().filter(|b| a.is_subgroup_of(b)) {
                prop_assert_eq!(cocore_set(b, u).0.count(), full);
            }
        }
    }

    #[test]
    fn chief_series_is_invariant_and_unrefinable(i in 0usize..1000, k in 0usize..64) {
        let g = group(i);
        let Some(list) = auts(&g) else { return Ok(()) };
        let a = &list[k % list.len()];
        let series = a_chief_series(&g, a).unwrap();
        prop_assert_eq!(series.length(), chief_length(a));
        let t = a.table();
        let sets: Vec<ElementSet> = series.terms().iter().map(|h| a.set_of(h).unwrap()).collect();
        prop_assert_eq!(sets.first().map(|s| s.count()), Some(t.len()));
        prop_assert_eq!(sets.last().map(|s| s.count()), Some(1));
        for w in sets.windows(2) {
            prop_assert!(a.is_invariant(&w[1]));
            // the lower term is the only minimal invariant subgroup between the two
            let mins = minimal_over(a, &w[1], &w[0]);
            prop_assert!(mins.iter().all(|m| *m == w[0]));
        }
    }

    #[test]
    fn quotients_and_induced_actions(i in 0usize..1000, k in 0usize..64) {
        let g = group(i);
        let Some(list) = auts(&g) else { return Ok(()) };
        let a = &list[k % list.len()];
        let mins = minimal_over(a, &a.table().singleton_identity(), &ElementSet::full(a.table().len()));
        let Some(m) = mins.first() else { return Ok(()) };
        let n = a.subgroup(m);
        let (q, epi) = quotient(&g, &n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        for x in g.generators() {
            prop_assert!(q.contains(&epi.image(x)).unwrap());
        }
        let r = restrict(a, &n).unwrap();
        prop_assert!(r.order() <= a.order());
        let bar = induce(a, &n, &epi).unwrap();
        prop_assert!(bar.order() <= a.order());
        // chief length splits across a minimal invariant subgroup
        prop_assert_eq!(chief_length(&bar) + 1, chief_length(a));
    }
}
