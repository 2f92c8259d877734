use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::Result;

/// The natural map `G -> G/N`, realised through the action of `G` on the
/// right cosets of `N`.
#[derive(Clone)]
pub struct Epimorphism {
    source: Arc<PermGroup>,
    target: Arc<PermGroup>,
    kernel: Arc<PermGroup>,
    generator_images: Vec<Permutation>,
    coset_reps: Vec<Permutation>,
    coset_index: FxHashMap<Permutation, u32>,
}

impl Epimorphism {
    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    /// Image of an arbitrary element of the source.
    pub fn image(&self, g: &Permutation) -> Permutation {
        let images = self
            .coset_reps
            .iter()
            .map(|r| self.coset_of(&r.then(g)))
            .collect();
        Permutation::from_images_unchecked(images)
    }

    fn coset_of(&self, g: &Permutation) -> u32 {
        self.coset_index[&self.kernel.canonical_coset_rep(g)]
    }

    /// Index of the coset `N g` among the points of the target.
    pub fn coset_point(&self, g: &Permutation) -> usize {
        self.coset_of(g) as usize
    }

    /// Lexicographically least representatives of the cosets, by point.
    pub fn coset_representatives(&self) -> &[Permutation] {
        &self.coset_reps
    }
}

impl fmt::Debug for Epimorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Epimorphism")
            .field("source", &self.source)
            .field("target", &self.target)
            .finish()
    }
}

/// `G/N` as a permutation group on the cosets of `N`, with the natural map.
pub fn quotient(g: &PermGroup, n: &PermGroup) -> Result<(PermGroup, Epimorphism)> {
    n.check_normal_in(g)?;
    let id = Permutation::identity(g.degree());
    let start = n.canonical_coset_rep(&id);
    let mut reps = vec![start.clone()];
    let mut index: FxHashMap<Permutation, u32> = FxHashMap::default();
    index.insert(start, 0);
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head].clone();
        head += 1;
        for s in g.generators() {
            let c = n.canonical_coset_rep(&r.then(s));
            if !index.contains_key(&c) {
                index.insert(c.clone(), reps.len() as u32);
                reps.push(c);
            }
        }
    }
    let degree = reps.len();
    let generator_images: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|s| {
            Permutation::from_images_unchecked(
                reps.iter()
                    .map(|r| index[&n.canonical_coset_rep(&r.then(s))])
                    .collect(),
            )
        })
        .collect();
    let target = PermGroup::with_order(degree, generator_images.clone(), degree as u128);
    let epi = Epimorphism {
        source: Arc::new(g.clone()),
        target: Arc::new(target.clone()),
        kernel: Arc::new(n.clone()),
        generator_images,
        coset_reps: reps,
        coset_index: index,
    };
    Ok((target, epi))
}
