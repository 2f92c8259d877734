//! Permutation-group engine.

mod chain;
mod elements;
mod group;
mod permutation;
mod quotient;
mod subgroups;

pub use elements::{ElementSet, ElementTable, MUL_TABLE_CAP};
pub use group::{PermGroup, ELEMENT_CACHE_CAP};
pub use permutation::Permutation;
pub use quotient::{quotient, Epimorphism};
pub use subgroups::{
    all_subgroups, subgroup_classes, subgroups_up_to_conjugacy, subgroups_up_to_conjugacy_with_cap,
    SubgroupClass, SUBGROUP_LATTICE_CAP,
};

use crate::error::Result;

pub fn group_from_generators(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
    PermGroup::new(degree, gens)
}

pub fn contains(g: &PermGroup, p: &Permutation) -> Result<bool> {
    g.contains(p)
}

/// `|G : U|`.
pub fn index(g: &PermGroup, u: &PermGroup) -> Result<u128> {
    g.index_of(u)
}

pub fn center(g: &PermGroup) -> Result<PermGroup> {
    g.center()
}

pub fn normal_closure(g: &PermGroup, seeds: &[Permutation]) -> Result<PermGroup> {
    g.normal_closure(seeds)
}

pub fn derived_subgroup(g: &PermGroup) -> Result<PermGroup> {
    g.derived_subgroup()
}
