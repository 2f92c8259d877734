use std::fmt;
use std::sync::{Arc, OnceLock};

use super::chain::StabChain;
use super::elements::{ElementSet, ElementTable};
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Groups up to this order cache their full element list on demand.
pub const ELEMENT_CACHE_CAP: u128 = 10_000;

/// A permutation group given by generators.
///
/// The stabilizer chain and the element table are built at most once, on
/// first use, and are safe to share between threads.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    known_order: Option<u128>,
    chain: OnceLock<StabChain>,
    table: OnceLock<Option<Arc<ElementTable>>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(Self::from_parts(degree, generators, None))
    }

    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), Some(1))
    }

    /// Generators with a known group order; the chain is then built by the
    /// randomized algorithm, which terminates exactly at that order.
    pub(crate) fn with_order(degree: usize, generators: Vec<Permutation>, order: u128) -> Self {
        Self::from_parts(degree, generators, Some(order))
    }

    fn from_parts(degree: usize, generators: Vec<Permutation>, known_order: Option<u128>) -> Self {
        Self {
            degree,
            generators,
            known_order,
            chain: OnceLock::new(),
            table: OnceLock::new(),
        }
    }

    pub(crate) fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| match self.known_order {
            Some(order) => StabChain::with_order(self.degree, &self.generators, order),
            None => StabChain::new(self.degree, &self.generators),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.chain().strong_generators()
    }

    /// Membership by sifting.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    pub(crate) fn has(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    /// Full element table, available when the order is at most
    /// [`ELEMENT_CACHE_CAP`].
    pub fn element_table(&self) -> Result<&Arc<ElementTable>> {
        self.table
            .get_or_init(|| {
                (self.order() <= ELEMENT_CACHE_CAP)
                    .then(|| Arc::new(ElementTable::new(self.chain().elements())))
            })
            .as_ref()
            .ok_or(Error::CapExceeded {
                what: "element cache",
                size: self.order(),
                cap: ELEMENT_CACHE_CAP,
            })
    }

    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(self.element_table()?.elements())
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.has(g))
    }

    /// Equality as sets of permutations.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// `Err(NotNormal)` carries a witnessing element and conjugator.
    pub fn check_normal_in(&self, g: &PermGroup) -> Result<()> {
        if !self.is_subgroup_of(g) {
            return Err(Error::NotSubgroup(self.first_outside(g)));
        }
        for h in &self.generators {
            for s in g.generators() {
                if !self.has(&h.conjugate_by(s)) {
                    return Err(Error::NotNormal {
                        element: h.to_string(),
                        conjugator: s.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.check_normal_in(g).is_ok()
    }

    fn first_outside(&self, g: &PermGroup) -> String {
        self.generators
            .iter()
            .find(|x| !g.has(x))
            .map(|x| x.to_string())
            .unwrap_or_default()
    }

    /// `|self : sub|`.
    pub fn index_of(&self, sub: &PermGroup) -> Result<u128> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotSubgroup(sub.first_outside(self)));
        }
        Ok(self.order() / sub.order())
    }

    pub fn center(&self) -> Result<PermGroup> {
        let table = self.element_table()?;
        let central: Vec<Permutation> = table
            .elements()
            .iter()
            .filter(|x| self.generators.iter().all(|g| x.then(g) == g.then(x)))
            .cloned()
            .collect();
        let set = table
            .set_of(&central)
            .expect("central elements lie in the group");
        Ok(self.subgroup_from_set(table, &set))
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        for s in seeds {
            if !self.contains(s)? {
                return Err(Error::NotSubgroup(s.to_string()));
            }
        }
        let mut gens: Vec<Permutation> =
            seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        let mut h = PermGroup::new(self.degree, gens.clone())?;
        let mut i = 0;
        while i < gens.len() {
            let x = gens[i].clone();
            for s in &self.generators {
                let c = x.conjugate_by(s);
                if !h.has(&c) {
                    gens.push(c);
                    h = PermGroup::new(self.degree, gens.clone())?;
                }
            }
            i += 1;
        }
        Ok(h)
    }

    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    pub fn conjugate(&self, g: &Permutation) -> PermGroup {
        let gens = self.generators.iter().map(|x| x.conjugate_by(g)).collect();
        Self::from_parts(self.degree, gens, self.known_order)
    }

    /// Subgroup of `self` whose elements are `set` (indices into `table`,
    /// which must be this group's table).
    pub(crate) fn subgroup_from_set(&self, table: &ElementTable, set: &ElementSet) -> PermGroup {
        let gens = table
            .small_generating_set(set)
            .into_iter()
            .map(|i| table.element(i).clone())
            .collect();
        Self::from_parts(self.degree, gens, Some(set.count() as u128))
    }

    pub(crate) fn canonical_coset_rep(&self, g: &Permutation) -> Permutation {
        self.chain().canonical_coset_rep(g)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group<deg {}>(", self.degree)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
