//! Stabilizer chains.
//!
//! The base is always the contiguous prefix `0, 1, .., L-1` of the point set.
//! Levels whose basic orbit is a single point cost almost nothing, and the
//! prefix property means the stabilizer at level `i` fixes every point below
//! `i`, which is what makes [`StabChain::canonical_coset_rep`] a greedy walk.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use super::permutation::Permutation;

#[derive(Clone, Debug)]
struct Level {
    orbit: Vec<u32>,
    pos: FxHashMap<u32, u32>,
    /// `reps[k]` maps the base point of this level to `orbit[k]`.
    reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
}

impl Level {
    fn trivial(point: usize, degree: usize) -> Self {
        let id = Permutation::identity(degree);
        let mut pos = FxHashMap::default();
        pos.insert(point as u32, 0);
        Self {
            orbit: vec![point as u32],
            pos,
            reps: vec![id.clone()],
            inv_reps: vec![id],
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    strong_gens: Vec<Permutation>,
    /// Smallest moved point of each strong generator.
    depth: Vec<usize>,
    levels: Vec<Level>,
}

pub(crate) enum Sift {
    Member,
    /// Residue that fixes the base points before `level` but is not a member.
    Residue {
        residue: Permutation,
        level: usize,
    },
}

impl StabChain {
    fn empty(degree: usize) -> Self {
        Self {
            degree,
            strong_gens: Vec::new(),
            depth: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Deterministic Schreier-Sims.
    pub(crate) fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = Self::empty(degree);
        for g in gens {
            if !g.is_identity() && !chain.strong_gens.contains(g) {
                chain.push_strong_gen(g.clone());
            }
        }
        chain.rebuild_orbits(0);
        chain.complete();
        chain
    }

    /// Randomized Schreier-Sims that stops once the chain reaches `order`.
    ///
    /// Falls back to the deterministic algorithm if the target is not reached
    /// in a generous number of rounds (e.g. the stated order was wrong).
    pub(crate) fn with_order(degree: usize, gens: &[Permutation], order: u128) -> Self {
        let mut chain = Self::empty(degree);
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
        // Product-replacement state.
        let mut state: Vec<Permutation> = gens
            .iter()
            .cycle()
            .take(gens.len().max(10))
            .cloned()
            .collect();
        let mut acc = Permutation::identity(degree);
        for _ in 0..50 {
            product_replacement_step(&mut state, &mut acc, &mut rng);
        }
        for g in &gens {
            if let Sift::Residue { residue, .. } = chain.sift(g, 0) {
                chain.push_strong_gen(residue);
                chain.rebuild_orbits(0);
            }
        }
        let mut failures = 0;
        while chain.order() < order {
            product_replacement_step(&mut state, &mut acc, &mut rng);
            match chain.sift(&acc, 0) {
                Sift::Member => {
                    failures += 1;
                    if failures > 2_000 {
                        let mut det = Self::empty(degree);
                        for g in &gens {
                            det.push_strong_gen(g.clone());
                        }
                        det.rebuild_orbits(0);
                        det.complete();
                        return det;
                    }
                }
                Sift::Residue { residue, .. } => {
                    failures = 0;
                    chain.push_strong_gen(residue);
                    chain.rebuild_orbits(0);
                }
            }
        }
        debug_assert_eq!(chain.order(), order);
        chain
    }

    fn push_strong_gen(&mut self, g: Permutation) {
        let d = g
            .smallest_moved_point()
            .expect("identity is never a strong generator");
        while self.levels.len() <= d {
            let p = self.levels.len();
            self.levels.push(Level::trivial(p, self.degree));
        }
        self.strong_gens.push(g);
        self.depth.push(d);
    }

    /// Recomputes basic orbits for every level `>= from`.
    fn rebuild_orbits(&mut self, from: usize) {
        for i in from..self.levels.len() {
            let gens: Vec<usize> = (0..self.strong_gens.len())
                .filter(|&k| self.depth[k] >= i)
                .collect();
            let id = Permutation::identity(self.degree);
            let mut level = Level::trivial(i, self.degree);
            let mut head = 0;
            while head < level.orbit.len() {
                let p = level.orbit[head] as usize;
                let rep = level.reps[head].clone();
                for &k in &gens {
                    let s = &self.strong_gens[k];
                    let q = s.apply(p) as u32;
                    if !level.pos.contains_key(&q) {
                        let r = rep.then(s);
                        level.pos.insert(q, level.orbit.len() as u32);
                        level.orbit.push(q);
                        level.inv_reps.push(r.inverse());
                        level.reps.push(r);
                    }
                }
                head += 1;
            }
            if level.orbit.len() == 1 {
                level.reps[0] = id;
            }
            self.levels[i] = level;
        }
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            match self.first_failing_schreier_gen(lvl) {
                None => i -= 1,
                Some((residue, _)) => {
                    let d = residue.smallest_moved_point().unwrap();
                    self.push_strong_gen(residue);
                    self.rebuild_orbits(lvl + 1);
                    i = d + 1;
                }
            }
        }
    }

    fn first_failing_schreier_gen(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        if level.orbit.len() == 1 {
            return None;
        }
        for (k, &p) in level.orbit.iter().enumerate() {
            for (g, s) in self.strong_gens.iter().enumerate() {
                if self.depth[g] < lvl {
                    continue;
                }
                let q = s.apply(p as usize) as u32;
                let qk = level.pos[&q] as usize;
                let sg = level.reps[k].then(s).then(&level.inv_reps[qk]);
                if sg.is_identity() {
                    continue;
                }
                if let Sift::Residue { residue, level } = self.sift(&sg, lvl + 1) {
                    return Some((residue, level));
                }
            }
        }
        None
    }

    /// Sifts `g` through the levels starting at `from`; `g` must fix `0..from`.
    pub(crate) fn sift(&self, g: &Permutation, from: usize) -> Sift {
        let mut h = g.clone();
        for i in from..self.levels.len() {
            let p = h.apply(i);
            if p == i {
                continue;
            }
            match self.levels[i].pos.get(&(p as u32)) {
                None => {
                    return Sift::Residue {
                        residue: h,
                        level: i,
                    }
                }
                Some(&k) => h = h.then(&self.levels[i].inv_reps[k as usize]),
            }
        }
        if h.is_identity() {
            Sift::Member
        } else {
            let level = self.levels.len();
            Sift::Residue { residue: h, level }
        }
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        matches!(self.sift(g, 0), Sift::Member)
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub(crate) fn strong_generators(&self) -> &[Permutation] {
        &self.strong_gens
    }

    /// Base points with nontrivial basic orbits.
    pub(crate) fn base(&self) -> Vec<usize> {
        (0..self.levels.len())
            .filter(|&i| self.levels[i].orbit.len() > 1)
            .collect()
    }

    /// Lexicographically smallest element of the right coset `N g`, where `N`
    /// is the group of this chain.
    pub(crate) fn canonical_coset_rep(&self, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels {
            if level.orbit.len() == 1 {
                continue;
            }
            let mut best = 0usize;
            let mut best_img = usize::MAX;
            for (k, &q) in level.orbit.iter().enumerate() {
                let img = h.apply(q as usize);
                if img < best_img {
                    best_img = img;
                    best = k;
                }
            }
            if best != 0 {
                h = level.reps[best].then(&h);
            }
        }
        h
    }

    /// All elements, in no particular order.
    pub(crate) fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            if level.orbit.len() == 1 {
                continue;
            }
            let mut next = Vec::with_capacity(out.len() * level.reps.len());
            for x in &out {
                for u in &level.reps {
                    next.push(x.then(u));
                }
            }
            out = next;
        }
        out
    }
}

fn product_replacement_step(
    state: &mut [Permutation],
    acc: &mut Permutation,
    rng: &mut ChaCha8Rng,
) {
    let n = state.len();
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n);
    while n > 1 && j == i {
        j = rng.gen_range(0..n);
    }
    if rng.gen_bool(0.5) {
        state[i] = state[i].then(&state[j]);
        *acc = acc.then(&state[i]);
    } else {
        state[i] = state[j].then(&state[i]);
        *acc = state[i].then(acc);
    }
}
