//! Conjugacy classes of subgroups by upward cyclic extension.
//!
//! Every subgroup `K > 1` is `<M, g>` for a maximal subgroup `M < K`, so
//! closing each class representative `R` under `<R, g>` for one `g` per
//! right coset of `R` reaches a conjugate of every subgroup.

use rustc_hash::FxHashSet;

use super::elements::{ElementSet, ElementTable};
use super::group::PermGroup;
use crate::error::{Error, Result};

/// Default order cap for exhaustive subgroup enumeration.
pub const SUBGROUP_LATTICE_CAP: u128 = 360;

/// One conjugacy class of subgroups, as element sets of the ambient table.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Lexicographically smallest member of the class.
    pub rep: ElementSet,
    /// Small generating set of `rep`, as element indices.
    pub gens: Vec<usize>,
    /// Every member of the class, sorted.
    pub conjugates: Vec<ElementSet>,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.rep.count()
    }

    pub fn size(&self) -> usize {
        self.conjugates.len()
    }
}

/// Orbit of `set` under conjugation by the elements `gens`.
fn conjugates_of(table: &ElementTable, set: &ElementSet, gens: &[usize]) -> Vec<ElementSet> {
    let mut seen: FxHashSet<ElementSet> = FxHashSet::default();
    let mut orbit = vec![set.clone()];
    seen.insert(set.clone());
    let mut head = 0;
    while head < orbit.len() {
        let cur = orbit[head].clone();
        head += 1;
        for &g in gens {
            let img = table.conj_set(&cur, g);
            if seen.insert(img.clone()) {
                orbit.push(img);
            }
        }
    }
    orbit.sort();
    orbit
}

/// All conjugacy classes of subgroups of `group`, sorted by order and then
/// by representative.
pub fn subgroup_classes(group: &PermGroup, cap: u128) -> Result<Vec<SubgroupClass>> {
    let order = group.order();
    if order > cap {
        return Err(Error::CapExceeded {
            what: "subgroup lattice enumeration",
            size: order,
            cap,
        });
    }
    let table = group.element_table()?;
    let n = table.len();
    let ggens: Vec<usize> = group
        .generators()
        .iter()
        .map(|g| table.index_of(g).expect("generator in table"))
        .collect();

    let trivial = table.singleton_identity();
    let mut seen: FxHashSet<ElementSet> = FxHashSet::default();
    seen.insert(trivial.clone());
    let mut found: Vec<(ElementSet, Vec<usize>, Vec<ElementSet>)> =
        vec![(trivial.clone(), Vec::new(), vec![trivial])];
    let mut head = 0;
    while head < found.len() {
        let (rep, gens) = (found[head].0.clone(), found[head].1.clone());
        head += 1;
        let mut done = rep.clone();
        for g in 0..n {
            if done.contains(g) {
                continue;
            }
            for r in rep.iter() {
                done.insert(table.mul(r, g));
            }
            let k = table.closure(&rep, &gens, &[g]);
            if seen.contains(&k) {
                continue;
            }
            let conj = conjugates_of(table, &k, &ggens);
            for c in &conj {
                seen.insert(c.clone());
            }
            let mut kgens = gens.clone();
            kgens.push(g);
            found.push((k, kgens, conj));
        }
    }

    let mut classes: Vec<SubgroupClass> = found
        .into_iter()
        .map(|(_, _, conjugates)| {
            let rep = conjugates[0].clone();
            let gens = table.small_generating_set(&rep);
            SubgroupClass {
                rep,
                gens,
                conjugates,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.rep.cmp(&b.rep)));
    Ok(classes)
}

/// One representative per conjugacy class of subgroups (default cap).
pub fn subgroups_up_to_conjugacy(group: &PermGroup) -> Result<Vec<PermGroup>> {
    subgroups_up_to_conjugacy_with_cap(group, SUBGROUP_LATTICE_CAP)
}

pub fn subgroups_up_to_conjugacy_with_cap(group: &PermGroup, cap: u128) -> Result<Vec<PermGroup>> {
    let classes = subgroup_classes(group, cap)?;
    let table = group.element_table()?;
    Ok(classes
        .iter()
        .map(|c| group.subgroup_from_set(table, &c.rep))
        .collect())
}

/// Every subgroup, class by class.
pub fn all_subgroups(group: &PermGroup, cap: u128) -> Result<Vec<ElementSet>> {
    Ok(subgroup_classes(group, cap)?
        .into_iter()
        .flat_map(|c| c.conjugates)
        .collect())
}
