//! A-cores, A-cocores, minimal A-invariant subgroups and A-chief series.
//!
//! Everything here works on element sets of the base group's table; the
//! [`PermGroup`] entry points convert at the boundary.

use rustc_hash::FxHashSet;

use crate::autos::{induce, AutGroup};
use crate::error::{Error, Result};
use crate::perm::{quotient, ElementSet, PermGroup, Permutation};

/// An unrefinable descending series `G = G_0 > ... > G_c = 1` of
/// `A`-invariant subgroups.
#[derive(Clone, Debug)]
pub struct ChiefSeries {
    terms: Vec<PermGroup>,
}

impl ChiefSeries {
    pub fn terms(&self) -> &[PermGroup] {
        &self.terms
    }

    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }
}

/// Outcome of the covering test for one pair `(U, A)`.
#[derive(Clone, Debug)]
pub struct CoveringInstance {
    pub subgroup: PermGroup,
    pub n: u128,
    pub covered: bool,
    /// Smallest element of `G` outside every `U^a`, when not covered.
    pub witness: Option<Permutation>,
    /// `ℓ_A(G/U_A)`.
    pub c: usize,
    pub index: u128,
    pub orbit_len: usize,
    pub core_order: usize,
}

fn require_inner(a: &AutGroup) -> Result<()> {
    if a.contains_inner() {
        Ok(())
    } else {
        Err(Error::Precondition(
            "the automorphism group must contain Inn(G)".into(),
        ))
    }
}

/// Intersection of the `A`-orbit of a subgroup given as an element set.
pub fn a_core_set(a: &AutGroup, u: &ElementSet) -> ElementSet {
    let mut core = u.clone();
    for img in a.orbit_of_set(u) {
        core.intersect_with(&img);
    }
    core
}

/// `U_A`, the largest `A`-invariant subgroup of `U`.
pub fn a_core(u: &PermGroup, a: &AutGroup) -> Result<PermGroup> {
    let set = a.set_of(u)?;
    Ok(a.subgroup(&a_core_set(a, &set)))
}

/// Union of the `A`-orbit of `U`, together with the orbit length.
pub fn cocore_set(a: &AutGroup, u: &ElementSet) -> (ElementSet, usize) {
    let orbit = a.orbit_of_set(u);
    let mut union = ElementSet::empty(u.universe());
    for img in &orbit {
        union.union_with(img);
    }
    (union, orbit.len())
}

pub fn is_a_invariant(h: &PermGroup, a: &AutGroup) -> Result<bool> {
    Ok(a.is_invariant(&a.set_of(h)?))
}

/// Covering test with witness and `c = ℓ_A(G/U_A)`.
pub fn covers(u: &PermGroup, a: &AutGroup) -> Result<CoveringInstance> {
    require_inner(a)?;
    let set = a.set_of(u)?;
    let (union, orbit_len) = cocore_set(a, &set);
    let n = a.table().len();
    let covered = union.count() == n;
    let witness = (!covered).then(|| {
        let x = (0..n).find(|&x| !union.contains(x)).unwrap();
        a.table().element(x).clone()
    });
    let core = a_core_set(a, &set);
    let c = quotient_chief_length(a, &core)?;
    Ok(CoveringInstance {
        subgroup: u.clone(),
        n: a.inn_index().unwrap_or(1),
        covered,
        witness,
        c,
        index: (n / set.count()) as u128,
        orbit_len,
        core_order: core.count(),
    })
}

/// `ℓ_A(G/N)` through the induced group on the quotient.
pub fn quotient_chief_length(a: &AutGroup, n: &ElementSet) -> Result<usize> {
    if n.count() == a.table().len() {
        return Ok(0);
    }
    let g = a.base();
    let nsub = a.subgroup(n);
    let (_, q) = quotient(g, &nsub)?;
    let induced = induce(a, &nsub, &q)?;
    let full = ElementSet::full(induced.table().len());
    let bottom = induced.table().singleton_identity();
    Ok(chief_steps(&induced, &bottom, &full, false).len())
}

/// `A`-orbits of elements, as (orbit id per element, orbits).
struct Orbits {
    id: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

impl Orbits {
    fn new(a: &AutGroup) -> Self {
        let orbits = a.element_orbits();
        let mut id = vec![0; a.table().len()];
        for (k, o) in orbits.iter().enumerate() {
            for &x in o {
                id[x] = k;
            }
        }
        Self { id, orbits }
    }
}

/// Minimal `A`-invariant subgroups `M` with `bottom < M <= top`, sorted by
/// order and then by encoding. `bottom` and `top` must be `A`-invariant.
pub fn minimal_over(a: &AutGroup, bottom: &ElementSet, top: &ElementSet) -> Vec<ElementSet> {
    minimal_over_with(a, &Orbits::new(a), bottom, top)
}

fn minimal_over_with(
    a: &AutGroup,
    orbits: &Orbits,
    bottom: &ElementSet,
    top: &ElementSet,
) -> Vec<ElementSet> {
    let table = a.table();
    let bottom_gens = table.small_generating_set(bottom);
    let mut tried = FxHashSet::default();
    let mut candidates: Vec<ElementSet> = Vec::new();
    for x in top.iter() {
        if bottom.contains(x) || !tried.insert(orbits.id[x]) {
            continue;
        }
        // seeds are elements of prime order modulo `bottom`
        let mut p = 1u64;
        let mut y = x;
        while !bottom.contains(y) {
            y = table.mul(y, x);
            p += 1;
        }
        if !is_prime(p) {
            continue;
        }
        let m = table.closure(bottom, &bottom_gens, &orbits.orbits[orbits.id[x]]);
        if !candidates.contains(&m) {
            candidates.push(m);
        }
    }
    let mut minimal: Vec<ElementSet> = candidates
        .iter()
        .filter(|m| !candidates.iter().any(|o| o != *m && o.is_subset(m)))
        .cloned()
        .collect();
    minimal.sort_by(|x, y| x.count().cmp(&y.count()).then_with(|| x.cmp(y)));
    minimal
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Steps of an `A`-chief series from `bottom` up to `top`, each a minimal
/// invariant subgroup over the previous one. With `last` the largest
/// candidate is taken at every step instead of the smallest.
pub fn chief_steps(
    a: &AutGroup,
    bottom: &ElementSet,
    top: &ElementSet,
    last: bool,
) -> Vec<ElementSet> {
    let orbits = Orbits::new(a);
    let mut steps = Vec::new();
    let mut cur = bottom.clone();
    while cur.count() < top.count() {
        let mut mins = minimal_over_with(a, &orbits, &cur, top);
        cur = if last {
            mins.pop()
        } else {
            mins.into_iter().next()
        }
        .expect("a proper invariant extension exists");
        steps.push(cur.clone());
    }
    steps
}

/// Length of an `A`-chief series between two invariant subgroups.
pub fn relative_length(a: &AutGroup, bottom: &ElementSet, top: &ElementSet) -> usize {
    chief_steps(a, bottom, top, false).len()
}

/// All minimal nontrivial `A`-invariant subgroups of `G`.
pub fn minimal_a_invariant_subgroups(g: &PermGroup, a: &AutGroup) -> Result<Vec<PermGroup>> {
    require_inner(a)?;
    if !g.same_group(a.base()) {
        return Err(Error::Precondition(
            "group does not match the automorphism group".into(),
        ));
    }
    let t = a.table();
    Ok(
        minimal_over(a, &t.singleton_identity(), &ElementSet::full(t.len()))
            .iter()
            .map(|m| a.subgroup(m))
            .collect(),
    )
}

/// An `A`-chief series of `G`, cross-checked against a second series built
/// from different choices.
pub fn a_chief_series(g: &PermGroup, a: &AutGroup) -> Result<ChiefSeries> {
    require_inner(a)?;
    if !g.same_group(a.base()) {
        return Err(Error::Precondition(
            "group does not match the automorphism group".into(),
        ));
    }
    let t = a.table();
    let bottom = t.singleton_identity();
    let top = ElementSet::full(t.len());
    let steps = chief_steps(a, &bottom, &top, false);
    let other = chief_steps(a, &bottom, &top, true);
    if other.len() != steps.len() {
        return Err(Error::Precondition(format!(
            "chief series lengths disagree: {} vs {}",
            steps.len(),
            other.len()
        )));
    }
    let mut terms: Vec<PermGroup> = steps.iter().rev().map(|s| a.subgroup(s)).collect();
    terms.push(a.subgroup(&bottom));
    if steps.is_empty() {
        terms = vec![g.clone()];
    }
    Ok(ChiefSeries { terms })
}

/// `ℓ_A(G)`.
pub fn chief_length(a: &AutGroup) -> usize {
    let t = a.table();
    relative_length(a, &t.singleton_identity(), &ElementSet::full(t.len()))
}
