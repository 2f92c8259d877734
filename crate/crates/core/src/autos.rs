//! Automorphism groups as permutation groups on the elements of the base group.
//!
//! Every automorphism of `G` is stored as a permutation of the indices of
//! `G`'s sorted element table. `Aut(G)`, `Inn(G)` and every intermediate
//! group are then ordinary [`PermGroup`]s and reuse the whole engine.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::{
    all_subgroups, quotient, ElementSet, ElementTable, Epimorphism, PermGroup, Permutation,
};

/// Refuse to build automorphism groups larger than this by default.
pub const AUT_ORDER_CAP: u128 = 50_000;

/// Full pairwise multiplicativity checks up to this base order; sampled above.
pub const FULL_CHECK_ORDER: usize = 2_000;

/// A single automorphism, given by the images of the base group's generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    generator_images: Vec<Permutation>,
}

impl Automorphism {
    pub fn new(generator_images: Vec<Permutation>) -> Self {
        Self { generator_images }
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    /// Reads the generator images off a map on element indices.
    pub fn from_element_map(group: &PermGroup, table: &ElementTable, map: &Permutation) -> Self {
        let generator_images = group
            .generators()
            .iter()
            .map(|g| {
                table
                    .element(map.apply(table.index_of(g).expect("generator in table")))
                    .clone()
            })
            .collect();
        Self { generator_images }
    }

    /// Extends the generator images to a map on all element indices,
    /// failing unless the result is a bijective homomorphism.
    pub fn element_map(&self, group: &PermGroup, table: &ElementTable) -> Result<Permutation> {
        let gens: Vec<usize> = group
            .generators()
            .iter()
            .map(|g| table.index_of(g).expect("generator in table"))
            .collect();
        let imgs = self
            .generator_images
            .iter()
            .map(|p| {
                table
                    .index_of(p)
                    .ok_or_else(|| Error::Precondition(format!("image {p} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        if imgs.len() != gens.len() {
            return Err(Error::Precondition(
                "one image per generator required".into(),
            ));
        }
        let map = extend_to_map(table, &gens, &imgs, table.len()).ok_or_else(|| {
            Error::Precondition("generator images do not define an automorphism".into())
        })?;
        Ok(Permutation::from_images_unchecked(map))
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.generator_images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "g{i} -> {p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Builds the homomorphism sending `gens[i]` to `imgs[i]` on the subgroup
/// generated by `gens`, walking its Cayley graph. Returns `None` on any
/// inconsistency or collision. The result has `u32::MAX` outside the subgroup.
fn extend_to_map(
    table: &ElementTable,
    gens: &[usize],
    imgs: &[usize],
    expect: usize,
) -> Option<Vec<u32>> {
    let n = table.len();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let fx = map[x] as usize;
        for (g, y) in gens.iter().zip(imgs) {
            let xg = table.mul(x, *g);
            let want = table.mul(fx, *y) as u32;
            if map[xg] == u32::MAX {
                if used[want as usize] {
                    return None;
                }
                used[want as usize] = true;
                map[xg] = want;
                queue.push(xg);
            } else if map[xg] != want {
                return None;
            }
        }
    }
    (queue.len() == expect || expect == usize::MAX).then_some(map)
}

/// Conjugacy class id and class size of each element.
pub(crate) fn conjugacy_classes(table: &ElementTable, gens: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = table.len();
    let mut class_of = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        class_of[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &g in gens {
                let y = table.conj(x, g);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    orbit.push(y);
                }
            }
        }
        sizes.push(orbit.len());
    }
    (class_of, sizes)
}

/// A group of automorphisms of a base group `G`.
#[derive(Clone)]
pub struct AutGroup {
    base: Arc<PermGroup>,
    table: Arc<ElementTable>,
    group: PermGroup,
    inner: PermGroup,
    contains_inner: bool,
    inn_index: Option<u128>,
}

impl fmt::Debug for AutGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AutGroup")
            .field("base_order", &self.table.len())
            .field("order", &self.group.order())
            .field("inn_index", &self.inn_index)
            .finish()
    }
}

impl AutGroup {
    fn assemble(base: Arc<PermGroup>, table: Arc<ElementTable>, group: PermGroup) -> Self {
        let inner = inner_group(&base, &table);
        let contains_inner = inner.generators().iter().all(|g| group.has(g));
        let inn_index = contains_inner.then(|| group.order() / inner.order());
        Self {
            base,
            table,
            group,
            inner,
            contains_inner,
            inn_index,
        }
    }

    pub fn base(&self) -> &PermGroup {
        &self.base
    }

    pub fn table(&self) -> &Arc<ElementTable> {
        &self.table
    }

    /// The automorphisms as permutations of element indices.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    /// `Inn(G)` on element indices.
    pub fn inner(&self) -> &PermGroup {
        &self.inner
    }

    pub fn contains_inner(&self) -> bool {
        self.contains_inner
    }

    /// `n = |A : Inn(G)|`, present when `Inn(G) <= A`.
    pub fn inn_index(&self) -> Option<u128> {
        self.inn_index
    }

    /// Generators as element-index permutations.
    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }

    pub fn automorphisms(&self) -> Vec<Automorphism> {
        self.generators()
            .iter()
            .map(|m| Automorphism::from_element_map(&self.base, &self.table, m))
            .collect()
    }

    pub fn contains(&self, a: &Automorphism) -> Result<bool> {
        let map = a.element_map(&self.base, &self.table)?;
        Ok(self.group.has(&map))
    }

    /// Element set of a subgroup of the base group.
    pub fn set_of(&self, h: &PermGroup) -> Result<ElementSet> {
        let gens = h
            .generators()
            .iter()
            .map(|g| {
                self.table
                    .index_of(g)
                    .ok_or_else(|| Error::NotSubgroup(g.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.table.generated(&gens))
    }

    pub fn subgroup(&self, set: &ElementSet) -> PermGroup {
        self.base.subgroup_from_set(&self.table, set)
    }

    /// Orbit of a subgroup (or any element set) under this group.
    pub fn orbit_of_set(&self, set: &ElementSet) -> Vec<ElementSet> {
        let mut seen = rustc_hash::FxHashSet::default();
        seen.insert(set.clone());
        let mut orbit = vec![set.clone()];
        let mut head = 0;
        while head < orbit.len() {
            let cur = orbit[head].clone();
            head += 1;
            for a in self.generators() {
                let img = self.table.map_set(&cur, a);
                if seen.insert(img.clone()) {
                    orbit.push(img);
                }
            }
        }
        orbit
    }

    /// Orbits on elements, each sorted, ordered by smallest member.
    pub fn element_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.table.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orbit = vec![s];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for a in self.generators() {
                    let y = a.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_invariant(&self, set: &ElementSet) -> bool {
        self.generators()
            .iter()
            .all(|a| &self.table.map_set(set, a) == set)
    }

    fn invariance_witness(&self, set: &ElementSet) -> Option<usize> {
        self.generators()
            .iter()
            .position(|a| &self.table.map_set(set, a) != set)
    }

    /// Whether `self <= other` as groups of maps on the same base.
    pub fn is_subgroup_of(&self, other: &AutGroup) -> bool {
        self.group.is_subgroup_of(&other.group)
    }
}

fn inner_group(base: &PermGroup, table: &ElementTable) -> PermGroup {
    let gens: Vec<Permutation> = base
        .generators()
        .iter()
        .map(|g| {
            let gi = table.index_of(g).expect("generator in table");
            Permutation::from_images_unchecked(
                (0..table.len()).map(|x| table.conj(x, gi) as u32).collect(),
            )
        })
        .filter(|p| !p.is_identity())
        .collect();
    let center = (0..table.len())
        .filter(|&x| {
            base.generators().iter().all(|g| {
                table.mul(x, table.index_of(g).unwrap()) == table.mul(table.index_of(g).unwrap(), x)
            })
        })
        .count();
    PermGroup::with_order(table.len().max(1), gens, (table.len() / center) as u128)
}

/// `Inn(G)`, the conjugation maps.
pub fn inner_automorphisms(g: &PermGroup) -> Result<AutGroup> {
    let table = g.element_table()?.clone();
    let inner = inner_group(g, &table);
    Ok(AutGroup::assemble(Arc::new(g.clone()), table, inner))
}

/// `Aut(G)` with the default cap.
pub fn automorphism_group(g: &PermGroup) -> Result<AutGroup> {
    automorphism_group_with_cap(g, AUT_ORDER_CAP)
}

/// `Aut(G)` by backtracking over generator images.
///
/// The image of the first generator is only tried on conjugacy class
/// representatives, which finds one automorphism per coset of `Inn(G)` in
/// each relevant orbit; together with `Inn(G)` these generate `Aut(G)`.
pub fn automorphism_group_with_cap(g: &PermGroup, cap: u128) -> Result<AutGroup> {
    let table = g.element_table()?.clone();
    let n = table.len();
    let base = Arc::new(g.clone());
    if n == 1 {
        let trivial = PermGroup::trivial(1);
        return Ok(AutGroup::assemble(base, table, trivial));
    }
    let ggens: Vec<usize> = g
        .generators()
        .iter()
        .map(|x| table.index_of(x).unwrap())
        .collect();
    let (class_of, class_size) = conjugacy_classes(&table, &ggens);
    let fingerprint = |x: usize| (table.order_of(x), class_size[class_of[x]]);

    let xs = table.small_generating_set(&ElementSet::full(n));
    let candidates: Vec<Vec<usize>> = xs
        .iter()
        .enumerate()
        .map(|(j, &x)| {
            let fp = fingerprint(x);
            let mut seen_class = vec![false; class_size.len()];
            (0..n)
                .filter(|&y| fingerprint(y) == fp)
                .filter(|&y| {
                    if j > 0 {
                        return true;
                    }
                    let c = class_of[y];
                    !std::mem::replace(&mut seen_class[c], true)
                })
                .collect()
        })
        .collect();

    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut aut_order: u128 = 0;
    let mut images = Vec::with_capacity(xs.len());
    let mut overflow = false;
    search(&table, &xs, &candidates, &mut images, &mut |map: Vec<
        u32,
    >| {
        aut_order += class_size[class_of[map[xs[0]] as usize]] as u128;
        found.push(map);
        if aut_order > cap {
            overflow = true;
        }
        !overflow
    });
    if overflow {
        return Err(Error::CapExceeded {
            what: "automorphism group order",
            size: aut_order,
            cap,
        });
    }

    for map in &found {
        verify_multiplicative(&table, map)?;
    }

    let inner = inner_group(g, &table);
    let mut gens: Vec<Permutation> = inner.generators().to_vec();
    let mut current = PermGroup::with_order(n, gens.clone(), inner.order());
    for map in found {
        let p = Permutation::from_images_unchecked(map);
        if !current.has(&p) {
            gens.push(p);
            current = PermGroup::new(n, gens.clone())?;
        }
    }
    let group = PermGroup::with_order(n, gens, aut_order);
    debug_assert_eq!(group.order(), aut_order);
    Ok(AutGroup::assemble(base, table, group))
}

/// Depth-first search over generator images; `emit` returns false to stop.
fn search(
    table: &ElementTable,
    xs: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    emit: &mut dyn FnMut(Vec<u32>) -> bool,
) -> bool {
    let j = images.len();
    if j == xs.len() {
        let map = extend_to_map(table, xs, images, table.len()).expect("checked at the last level");
        return emit(map);
    }
    for &y in &candidates[j] {
        images.push(y);
        // the partial map must be an injective homomorphism on <x_0..x_j>
        let ok = extend_to_map(table, &xs[..=j], images, usize::MAX)
            .map(|m| j + 1 < xs.len() || m.iter().all(|&v| v != u32::MAX))
            .unwrap_or(false);
        if ok && !search(table, xs, candidates, images, emit) {
            images.pop();
            return false;
        }
        images.pop();
    }
    true
}

/// Checks `f(ab) = f(a) f(b)`: on all pairs for small groups, on a fixed
/// pseudorandom sample of pairs otherwise.
fn verify_multiplicative(table: &ElementTable, map: &[u32]) -> Result<()> {
    let n = table.len();
    let bad = || Error::Precondition("constructed map is not multiplicative".into());
    if n <= FULL_CHECK_ORDER {
        for a in 0..n {
            for b in 0..n {
                if map[table.mul(a, b)] as usize != table.mul(map[a] as usize, map[b] as usize) {
                    return Err(bad());
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..20_000 {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if map[table.mul(a, b)] as usize != table.mul(map[a] as usize, map[b] as usize) {
                return Err(bad());
            }
        }
    }
    Ok(())
}

/// Every `A` with `Inn(G) <= A <= Aut(G)`, as preimages of the subgroups of
/// `Aut(G)/Inn(G)`. Each result carries its index `n`.
pub fn intermediate_aut_groups(aut: &AutGroup, cap: u128) -> Result<Vec<AutGroup>> {
    if !aut.contains_inner {
        return Err(Error::Precondition(
            "the ambient group must contain Inn(G)".into(),
        ));
    }
    let out_order = aut.inn_index.unwrap_or(1);
    if out_order > cap {
        return Err(Error::CapExceeded {
            what: "outer automorphism group order",
            size: out_order,
            cap,
        });
    }
    let (out, epi) = quotient(aut.group(), aut.inner())?;
    let out_table = out.element_table()?;
    let mut result = Vec::new();
    for sub in all_subgroups(&out, cap)? {
        let lifts = out_table
            .small_generating_set(&sub)
            .into_iter()
            .map(|i| lift(&epi, out_table.element(i)));
        let mut gens: Vec<Permutation> = aut.inner().generators().to_vec();
        gens.extend(lifts);
        let order = aut.inner().order() * sub.count() as u128;
        let group = PermGroup::with_order(aut.table.len().max(1), gens, order);
        result.push(AutGroup {
            base: aut.base.clone(),
            table: aut.table.clone(),
            group,
            inner: aut.inner.clone(),
            contains_inner: true,
            inn_index: Some(sub.count() as u128),
        });
    }
    Ok(result)
}

/// A preimage of an element of the (regular) coset-action quotient.
fn lift(epi: &Epimorphism, q: &Permutation) -> Permutation {
    epi.coset_representatives()[q.apply(0)].clone()
}

/// `A|_N` for an `A`-invariant subgroup `N`, acting on `N`'s own elements.
pub fn restrict(a: &AutGroup, n: &PermGroup) -> Result<AutGroup> {
    let set = a.set_of(n)?;
    if let Some(i) = a.invariance_witness(&set) {
        return Err(Error::NotInvariant(i));
    }
    let ntable = n.element_table()?.clone();
    let to_n: Vec<u32> = (0..a.table.len())
        .map(|x| {
            if set.contains(x) {
                ntable.index_of(a.table.element(x)).unwrap() as u32
            } else {
                u32::MAX
            }
        })
        .collect();
    let gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|m| {
            Permutation::from_images_unchecked(
                ntable
                    .elements()
                    .iter()
                    .map(|x| to_n[m.apply(a.table.index_of(x).unwrap())])
                    .collect(),
            )
        })
        .filter(|p| !p.is_identity())
        .collect();
    let group = PermGroup::new(ntable.len().max(1), gens)?;
    Ok(AutGroup::assemble(Arc::new(n.clone()), ntable, group))
}

/// `A|_{G/N}` on the elements of the quotient `q.target()`.
pub fn induce(a: &AutGroup, n: &PermGroup, q: &Epimorphism) -> Result<AutGroup> {
    if !q.kernel().same_group(n) || !q.source().same_group(a.base()) {
        return Err(Error::Precondition(
            "epimorphism does not match (G, N)".into(),
        ));
    }
    let set = a.set_of(n)?;
    if let Some(i) = a.invariance_witness(&set) {
        return Err(Error::NotInvariant(i));
    }
    let target = q.target();
    let qtable = target.element_table()?.clone();
    // a representative of each quotient element, as a base-group index
    let reps: Vec<usize> = qtable
        .elements()
        .iter()
        .map(|sigma| {
            let r = &q.coset_representatives()[sigma.apply(0)];
            a.table.index_of(r).expect("coset representative lies in G")
        })
        .collect();
    let gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|m| {
            Permutation::from_images_unchecked(
                reps.iter()
                    .map(|&r| {
                        let img = q.image(a.table.element(m.apply(r)));
                        qtable.index_of(&img).unwrap() as u32
                    })
                    .collect(),
            )
        })
        .filter(|p| !p.is_identity())
        .collect();
    let group = PermGroup::new(qtable.len().max(1), gens)?;
    let induced = AutGroup::assemble(Arc::new(target.clone()), qtable, group);
    if a.contains_inner && !induced.contains_inner {
        return Err(Error::Precondition("induced group misses Inn(G/N)".into()));
    }
    Ok(induced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v4() -> PermGroup {
        PermGroup::from_cycles(4, &["(0 1)(2 3)", "(0 2)(1 3)"]).unwrap()
    }
    fn s3() -> PermGroup {
        PermGroup::from_cycles(3, &["(0 1 2)", "(0 1)"]).unwrap()
    }
    fn a5() -> PermGroup {
        PermGroup::from_cycles(5, &["(0 1 2 3 4)", "(0 1 2)"]).unwrap()
    }

    /// Brute force over all pairs of images of two generators.
    fn brute_aut_order(g: &PermGroup) -> usize {
        let t = g.element_table().unwrap();
        let gens: Vec<usize> = g
            .generators()
            .iter()
            .map(|x| t.index_of(x).unwrap())
            .collect();
        assert_eq!(gens.len(), 2);
        let mut count = 0;
        for y0 in 0..t.len() {
            for y1 in 0..t.len() {
                if extend_to_map(t, &gens, &[y0, y1], t.len()).is_some() {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn aut_orders() {
        assert_eq!(automorphism_group(&v4()).unwrap().order(), 6);
        assert_eq!(brute_aut_order(&v4()), 6);
        let s = automorphism_group(&s3()).unwrap();
        assert_eq!(s.order(), 6);
        assert_eq!(s.inn_index(), Some(1));
        assert_eq!(brute_aut_order(&s3()), 6);
        let a = automorphism_group(&a5()).unwrap();
        assert_eq!(a.order(), 120);
        assert_eq!(brute_aut_order(&a5()), 120);
        assert_eq!(a.inn_index(), Some(2));
    }

    #[test]
    fn inner_orders() {
        assert_eq!(inner_automorphisms(&v4()).unwrap().order(), 1);
        assert_eq!(inner_automorphisms(&s3()).unwrap().order(), 6);
        let q8 = PermGroup::from_cycles(8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(inner_automorphisms(&q8).unwrap().order(), 4);
        assert_eq!(automorphism_group(&q8).unwrap().order(), 24);
    }

    #[test]
    fn intermediate_groups() {
        let aut = automorphism_group(&v4()).unwrap();
        let mut ns: Vec<u128> = intermediate_aut_groups(&aut, 360)
            .unwrap()
            .iter()
            .map(|a| a.inn_index().unwrap())
            .collect();
        ns.sort();
        assert_eq!(ns, vec![1, 2, 2, 2, 3, 6]);
        let aut = automorphism_group(&s3()).unwrap();
        assert_eq!(intermediate_aut_groups(&aut, 360).unwrap().len(), 1);
        let aut = automorphism_group(&a5()).unwrap();
        let ns: Vec<u128> = intermediate_aut_groups(&aut, 360)
            .unwrap()
            .iter()
            .map(|a| a.inn_index().unwrap())
            .collect();
        assert_eq!(ns, vec![1, 2]);
    }

    #[test]
    fn restrict_examples() {
        let aut = automorphism_group(&v4()).unwrap();
        assert_eq!(restrict(&aut, &v4()).unwrap().order(), 6);
        let inn = inner_automorphisms(&s3()).unwrap();
        let a3 = PermGroup::from_cycles(3, &["(0 1 2)"]).unwrap();
        assert_eq!(restrict(&inn, &a3).unwrap().order(), 2);
        assert_eq!(restrict(&inn, &PermGroup::trivial(3)).unwrap().order(), 1);
        let c2 = PermGroup::from_cycles(4, &["(0 1)(2 3)"]).unwrap();
        assert!(matches!(restrict(&aut, &c2), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn induce_examples() {
        let inn = inner_automorphisms(&s3()).unwrap();
        let a3 = PermGroup::from_cycles(3, &["(0 1 2)"]).unwrap();
        let (_, q) = quotient(&s3(), &a3).unwrap();
        let ind = induce(&inn, &a3, &q).unwrap();
        assert_eq!(ind.order(), 1);
        assert_eq!(ind.inn_index(), Some(1));

        let a4 = PermGroup::from_cycles(4, &["(0 1 2)", "(0 1)(2 3)"]).unwrap();
        let inn = inner_automorphisms(&a4).unwrap();
        let (_, q) = quotient(&a4, &v4()).unwrap();
        let ind = induce(&inn, &v4(), &q).unwrap();
        assert!(ind.order() <= 2);
        assert!(ind.inn_index().unwrap() <= inn.inn_index().unwrap());

        let (_, q) = quotient(&s3(), &s3()).unwrap();
        let inn = inner_automorphisms(&s3()).unwrap();
        assert_eq!(induce(&inn, &s3(), &q).unwrap().order(), 1);
    }

    #[test]
    fn automorphism_round_trip() {
        let aut = automorphism_group(&a5()).unwrap();
        for a in aut.automorphisms() {
            let m = a.element_map(aut.base(), aut.table()).unwrap();
            assert!(aut.group().has(&m));
            assert!(aut.contains(&a).unwrap());
        }
        let bogus = Automorphism::new(vec![
            Permutation::parse("(0 1 2)", 5).unwrap(),
            Permutation::parse("(0 1 2)", 5).unwrap(),
        ]);
        assert!(bogus.element_map(aut.base(), aut.table()).is_err());
    }

    #[test]
    fn cap_refusal() {
        let c2_4 = PermGroup::from_cycles(8, &["(0 1)", "(2 3)", "(4 5)", "(6 7)"]).unwrap();
        assert!(matches!(
            automorphism_group_with_cap(&c2_4, 1000),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(automorphism_group(&c2_4).unwrap().order(), 20160);
    }
}
