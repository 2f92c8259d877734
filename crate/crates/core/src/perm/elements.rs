//! Element-level view of a small group: a sorted element list, index lookup,
//! optional multiplication table and bitsets of element indices.

use std::cmp::Ordering;
use std::fmt;

use rustc_hash::FxHashMap;

use super::permutation::Permutation;

/// Groups up to this order get a full multiplication table.
pub const MUL_TABLE_CAP: usize = 2048;

/// A set of element indices of some ambient [`ElementTable`].
///
/// Ordering is the lexicographic order of the sorted index lists, which is
/// the "smallest encoding" order used for tie-breaking throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: Vec<u64>,
    len: usize,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            words: vec![0; universe.div_ceil(64)],
            len: universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns true if `i` was not already present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }

    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Sorted elements of a group together with fast index arithmetic.
pub struct ElementTable {
    elements: Vec<Permutation>,
    index: FxHashMap<Permutation, u32>,
    mul: Option<Vec<u32>>,
    inv: Vec<u32>,
    orders: Vec<u32>,
}

impl ElementTable {
    pub(crate) fn new(mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let n = elements.len();
        let index: FxHashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inv = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let mul = (n <= MUL_TABLE_CAP).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.then(b)]);
                }
            }
            t
        });
        Self {
            elements,
            index,
            mul,
            inv,
            orders,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// The identity is the lexicographically smallest permutation.
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mul {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].then(&self.elements[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn order_of(&self, a: usize) -> u64 {
        self.orders[a] as u64
    }

    /// `g⁻¹ x g` on indices.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn singleton_identity(&self) -> ElementSet {
        let mut s = ElementSet::empty(self.len());
        s.insert(0);
        s
    }

    /// Subgroup generated by `base` (assumed closed) and `extra`.
    pub fn closure(&self, base: &ElementSet, base_gens: &[usize], extra: &[usize]) -> ElementSet {
        let mut set = base.clone();
        let gens: Vec<usize> = base_gens.iter().chain(extra).copied().collect();
        let mut queue: Vec<usize> = set.iter().collect();
        let mut head = 0;
        for &e in extra {
            if set.insert(e) {
                queue.push(e);
            }
        }
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    pub fn generated(&self, gens: &[usize]) -> ElementSet {
        self.closure(&self.singleton_identity(), &[], gens)
    }

    /// Image of a set under conjugation by the element `g`.
    pub fn conj_set(&self, set: &ElementSet, g: usize) -> ElementSet {
        let mut out = ElementSet::empty(self.len());
        for x in set.iter() {
            out.insert(self.conj(x, g));
        }
        out
    }

    /// Image of a set under a permutation of element indices.
    pub fn map_set(&self, set: &ElementSet, map: &Permutation) -> ElementSet {
        let mut out = ElementSet::empty(self.len());
        for x in set.iter() {
            out.insert(map.apply(x));
        }
        out
    }

    /// A small generating set for the subgroup `set`, chosen greedily by
    /// descending element order (ties broken by index).
    pub fn small_generating_set(&self, set: &ElementSet) -> Vec<usize> {
        let mut candidates: Vec<usize> = set.iter().filter(|&i| i != 0).collect();
        candidates.sort_by_key(|&i| (std::cmp::Reverse(self.orders[i]), i));
        let mut gens = Vec::new();
        let mut current = self.singleton_identity();
        let target = set.count();
        for c in candidates {
            if current.count() == target {
                break;
            }
            if !current.contains(c) {
                current = self.closure(&current, &gens, &[c]);
                gens.push(c);
            }
        }
        gens
    }

    pub fn set_of<'a>(
        &self,
        perms: impl IntoIterator<Item = &'a Permutation>,
    ) -> Option<ElementSet> {
        let mut s = ElementSet::empty(self.len());
        for p in perms {
            s.insert(self.index_of(p)?);
        }
        Some(s)
    }
}

impl fmt::Debug for ElementTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ElementTable")
            .field("len", &self.elements.len())
            .field("mul_table", &self.mul.is_some())
            .finish()
    }
}
