//! Subgroups of direct powers `T^k`: supports, diagonals, Goursat
//! decompositions and the orbit/block report on the simple factors.
//!
//! Coordinates are 0-based: factor `i` of `T^k` acts on the points
//! `i*d .. (i+1)*d` where `d` is the degree of `T`.

use crate::autos::{automorphism_group, inner_automorphisms, AutGroup, Automorphism};
use crate::error::{Error, Result};
use crate::invariant::{cocore_set, minimal_over};
use crate::perm::{ElementSet, PermGroup, Permutation};

/// `T^k` on `k` disjoint copies of `T`'s points.
#[derive(Clone, Debug)]
pub struct PowerStructure {
    t: PermGroup,
    k: usize,
    product: PermGroup,
}

impl PowerStructure {
    pub fn new(t: &PermGroup, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("need at least one factor".into()));
        }
        let d = t.degree();
        let gens = (0..k)
            .flat_map(|i| t.generators().iter().map(move |g| embed(g, i, d, k)))
            .collect();
        let order = t.order().checked_pow(k as u32).ok_or(Error::CapExceeded {
            what: "power order",
            size: u128::MAX,
            cap: u128::MAX,
        })?;
        Ok(Self {
            t: t.clone(),
            k,
            product: PermGroup::with_order(d * k, gens, order),
        })
    }

    pub fn t(&self) -> &PermGroup {
        &self.t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn product(&self) -> &PermGroup {
        &self.product
    }

    fn d(&self) -> usize {
        self.t.degree()
    }

    /// The `i`-th factor embedding `T -> T^k`.
    pub fn embed(&self, x: &Permutation, i: usize) -> Permutation {
        embed(x, i, self.d(), self.k)
    }

    /// The element `(x_0, ..., x_{k-1})`.
    pub fn tuple(&self, xs: &[Permutation]) -> Permutation {
        let d = self.d();
        let mut images = Vec::with_capacity(d * self.k);
        for (i, x) in xs.iter().enumerate() {
            images.extend(x.images().iter().map(|&p| p + (i * d) as u32));
        }
        Permutation::from_images_unchecked(images)
    }

    /// The coordinate `x_i` of an element of `T^k`.
    pub fn coordinate(&self, x: &Permutation, i: usize) -> Permutation {
        x.restrict_block(i * self.d(), self.d())
    }

    /// Keeps the coordinates in `delta` and sets the others to 1.
    fn keep(&self, x: &Permutation, delta: &[usize]) -> Permutation {
        let id = Permutation::identity(self.d());
        let xs: Vec<Permutation> = (0..self.k)
            .map(|i| {
                if delta.contains(&i) {
                    self.coordinate(x, i)
                } else {
                    id.clone()
                }
            })
            .collect();
        self.tuple(&xs)
    }

    /// Whether `x` preserves every block and lies in `T` on each.
    fn in_power(&self, x: &Permutation) -> bool {
        let d = self.d();
        x.degree() == d * self.k
            && (0..self.k).all(|i| {
                (i * d..(i + 1) * d).all(|p| (x.apply(p) / d) == i)
                    && self.t.has(&self.coordinate(x, i))
            })
    }

    fn check_delta(&self, delta: &[usize]) -> Result<()> {
        match delta.iter().find(|&&i| i >= self.k) {
            Some(i) => Err(Error::Precondition(format!(
                "factor index {i} out of range 0..{}",
                self.k
            ))),
            None => Ok(()),
        }
    }

    /// Image of `U` under the projection to the coordinates `delta`,
    /// realised inside `T^k`.
    pub fn project(&self, u: &PermGroup, delta: &[usize]) -> PermGroup {
        let gens = u
            .generators()
            .iter()
            .map(|g| self.keep(g, delta))
            .filter(|p| !p.is_identity())
            .collect();
        PermGroup::new(self.d() * self.k, gens).expect("degree matches")
    }

    /// The diagonal `{(x^{phi_j})_{j in delta} : x in T}`, one map per
    /// coordinate in `delta`, identity elsewhere.
    pub fn diagonal(&self, delta: &[usize], maps: &[Automorphism]) -> Result<PermGroup> {
        self.check_delta(delta)?;
        if maps.len() != delta.len() {
            return Err(Error::Precondition(
                "one automorphism per coordinate required".into(),
            ));
        }
        let id = Permutation::identity(self.d());
        let gens = (0..self.t.generators().len())
            .map(|g| {
                let mut xs = vec![id.clone(); self.k];
                for (j, phi) in delta.iter().zip(maps) {
                    xs[*j] = phi.generator_images()[g].clone();
                }
                self.tuple(&xs)
            })
            .collect();
        let order = if delta.is_empty() { 1 } else { self.t.order() };
        Ok(PermGroup::with_order(self.d() * self.k, gens, order))
    }
}

fn embed(x: &Permutation, i: usize, d: usize, k: usize) -> Permutation {
    let images = (0..d * k)
        .map(|p| {
            if p / d == i {
                (x.apply(p - i * d) + i * d) as u32
            } else {
                p as u32
            }
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `T_Δ`, the elements supported on the coordinates in `delta`.
pub fn support_subgroup(p: &PowerStructure, delta: &[usize]) -> Result<PermGroup> {
    p.check_delta(delta)?;
    let mut delta = delta.to_vec();
    delta.sort_unstable();
    delta.dedup();
    let gens = delta
        .iter()
        .flat_map(|&i| p.t.generators().iter().map(move |g| p.embed(g, i)))
        .collect();
    Ok(PermGroup::with_order(
        p.d() * p.k,
        gens,
        p.t.order().pow(delta.len() as u32),
    ))
}

/// Whether the `i`-th coordinate projection of `U` is onto `T`.
pub fn projection_full(u: &PermGroup, p: &PowerStructure, i: usize) -> Result<bool> {
    p.check_delta(&[i])?;
    let gens = u.generators().iter().map(|g| p.coordinate(g, i)).collect();
    Ok(PermGroup::new(p.d(), gens)?.order() == p.t.order())
}

/// A tuple `(phi_j)` with `H = {(x^{phi_j})_j}`, normalised so the first
/// coordinate of `delta` carries the identity; `None` if `H` is not a
/// full diagonal of `T_Δ`.
pub fn is_diagonal(
    h: &PermGroup,
    p: &PowerStructure,
    delta: &[usize],
) -> Result<Option<Vec<Automorphism>>> {
    p.check_delta(delta)?;
    for g in h.generators() {
        if !p.in_power(g)
            || (0..p.k).any(|i| !delta.contains(&i) && !p.coordinate(g, i).is_identity())
        {
            return Err(Error::NotSubgroup(format!("{g} is not in T_Δ")));
        }
    }
    if delta.is_empty() || h.order() != p.t.order() {
        return Ok(None);
    }
    for &j in delta {
        if !projection_full(h, p, j)? {
            return Ok(None);
        }
    }
    let first = delta[0];
    let elements = h.elements()?;
    let tgens = p.t.generators();
    let lifts: Vec<&Permutation> = tgens
        .iter()
        .map(|t| {
            elements
                .iter()
                .find(|x| &p.coordinate(x, first) == t)
                .expect("projection is onto")
        })
        .collect();
    Ok(Some(
        delta
            .iter()
            .map(|&j| Automorphism::new(lifts.iter().map(|x| p.coordinate(x, j)).collect()))
            .collect(),
    ))
}

/// `U = D_1 x ... x D_t` with each `D_i` a full diagonal of `T_{Δ_i}`.
#[derive(Clone, Debug)]
pub struct GoursatDecomposition {
    /// Parts sorted internally and by smallest member.
    pub partition: Vec<Vec<usize>>,
    /// For each part, `D_i` and its normalised automorphism tuple.
    pub diagonals: Vec<(PermGroup, Vec<Automorphism>)>,
}

impl GoursatDecomposition {
    pub fn t(&self) -> usize {
        self.partition.len()
    }
}

/// Goursat decomposition of a subdirect subgroup of `T^k` via pairwise
/// projections; `None` if `U` is not a product of full diagonals.
pub fn goursat_decompose(
    u: &PermGroup,
    p: &PowerStructure,
) -> Result<Option<GoursatDecomposition>> {
    for g in u.generators() {
        if !p.in_power(g) {
            return Err(Error::NotSubgroup(format!("{g} is not in T^k")));
        }
    }
    for i in 0..p.k {
        if !projection_full(u, p, i)? {
            return Err(Error::Precondition(format!(
                "projection onto factor {i} is not onto T"
            )));
        }
    }
    let t = p.t.order();
    let mut part_of: Vec<usize> = (0..p.k).collect();
    for i in 0..p.k {
        for j in i + 1..p.k {
            let o = p.project(u, &[i, j]).order();
            if o == t {
                let (a, b) = (part_of[i], part_of[j]);
                for x in part_of.iter_mut() {
                    if *x == b {
                        *x = a;
                    }
                }
            } else if o != t * t {
                return Ok(None);
            }
        }
    }
    let mut partition: Vec<Vec<usize>> = Vec::new();
    for i in 0..p.k {
        match partition
            .iter_mut()
            .find(|part| part_of[part[0]] == part_of[i])
        {
            Some(part) => part.push(i),
            None => partition.push(vec![i]),
        }
    }
    if t.checked_pow(partition.len() as u32) != Some(u.order()) {
        return Ok(None);
    }
    let mut diagonals = Vec::new();
    for part in &partition {
        let d = p.project(u, part);
        if !d.generators().iter().all(|g| u.has(g)) {
            return Ok(None);
        }
        match is_diagonal(&d, p, part)? {
            Some(maps) => diagonals.push((d, maps)),
            None => return Ok(None),
        }
    }
    Ok(Some(GoursatDecomposition {
        partition,
        diagonals,
    }))
}

/// Number of `Aut(T)`-orbits on the elements of `T`.
pub fn aut_class_count(t: &PermGroup) -> Result<usize> {
    Ok(automorphism_group(t)?.element_orbits().len())
}

/// Orbit structure of `G` on the simple factors of `L = T^k`, with the
/// three inequalities on `(r, s, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub k: usize,
    pub r: usize,
    pub s: usize,
    pub m: usize,
    pub n: u128,
    /// Factor indices in each `G`-orbit.
    pub blocks: Vec<Vec<usize>>,
    pub r_le_n: bool,
    pub m_le_r: bool,
    pub s_le_r: bool,
    /// Produced with the covering precondition skipped.
    pub relaxed: bool,
}

impl BlockReport {
    pub fn all_hold(&self) -> bool {
        self.r_le_n && self.m_le_r && self.s_le_r
    }
}

/// The simple direct factors of a nonabelian minimal normal `L`, as element
/// sets of `L`'s own table. `None` unless `L = T^k` with `T` nonabelian simple.
fn simple_factors(l: &PermGroup) -> Result<Option<Vec<PermGroup>>> {
    let inn = inner_automorphisms(l)?;
    let table = inn.table().clone();
    let mins = minimal_over(
        &inn,
        &table.singleton_identity(),
        &ElementSet::full(table.len()),
    );
    let order = mins.first().map_or(1, |m| m.count());
    if order <= 1 || mins.iter().any(|m| m.count() != order) {
        return Ok(None);
    }
    let k = mins.len();
    if (order as u128).checked_pow(k as u32) != Some(l.order()) {
        return Ok(None);
    }
    let factors: Vec<PermGroup> = mins.iter().map(|m| inn.subgroup(m)).collect();
    if factors[0].derived_subgroup()?.order() != factors[0].order() {
        return Ok(None);
    }
    Ok(Some(factors))
}

/// Orbits of `G` on the simple factors of the minimal `A`-invariant `L`, and
/// the checks `r <= n`, `m <= r`, `s <= r`. With `relaxed`, the covering,
/// `G = UL` and minimality preconditions are skipped.
pub fn block_report(
    u: &PermGroup,
    a: &AutGroup,
    l: &PermGroup,
    relaxed: bool,
) -> Result<BlockReport> {
    let g = a.base();
    let table = a.table();
    let lset = a.set_of(l)?;
    if !a.is_invariant(&lset) {
        return Err(Error::Precondition("L is not A-invariant".into()));
    }
    if is_abelian(l) {
        return Err(Error::Precondition(
            "abelian L handled by the n-bound, not block analysis".into(),
        ));
    }
    let uset = a.set_of(u)?;
    if !relaxed {
        if !a.contains_inner() {
            return Err(Error::Precondition(
                "the automorphism group must contain Inn(G)".into(),
            ));
        }
        let top = ElementSet::full(table.len());
        if !minimal_over(a, &table.singleton_identity(), &top).contains(&lset) {
            return Err(Error::Precondition(
                "L is not a minimal A-invariant subgroup".into(),
            ));
        }
        if lset.is_subset(&uset) {
            return Err(Error::Precondition("L <= U: degenerate branch".into()));
        }
        let mut meet = uset.clone();
        meet.intersect_with(&lset);
        if uset.count() * lset.count() / meet.count() != table.len() {
            return Err(Error::Precondition("G != UL".into()));
        }
        if cocore_set(a, &uset).0.count() != table.len() {
            return Err(Error::Precondition(
                "U does not cover G: no nondegenerate instance".into(),
            ));
        }
    }
    let factors = simple_factors(l)?.ok_or_else(|| {
        Error::Precondition("L is not a power of a nonabelian simple group".into())
    })?;
    let k = factors.len();
    let fsets: Vec<ElementSet> = factors.iter().map(|f| a.set_of(f)).collect::<Result<_>>()?;
    let ggens: Vec<usize> = g
        .generators()
        .iter()
        .map(|x| table.index_of(x).unwrap())
        .collect();
    let mut block_of = vec![usize::MAX; k];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if block_of[start] != usize::MAX {
            continue;
        }
        let b = blocks.len();
        block_of[start] = b;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let f = orbit[head];
            head += 1;
            for &x in &ggens {
                let img = table.conj_set(&fsets[f], x);
                let j = fsets
                    .iter()
                    .position(|s| s == &img)
                    .expect("G permutes the factors");
                if block_of[j] == usize::MAX {
                    block_of[j] = b;
                    orbit.push(j);
                }
            }
        }
        orbit.sort_unstable();
        blocks.push(orbit);
    }
    let r = blocks.len();
    let s = blocks.iter().map(Vec::len).max().unwrap_or(1);
    if !relaxed && r * s != k {
        return Err(Error::Precondition(
            "G-orbits on the factors have unequal sizes".into(),
        ));
    }
    let m = aut_class_count(&factors[0])?;
    let n = a.inn_index().unwrap_or(1);
    Ok(BlockReport {
        k,
        r,
        s,
        m,
        n,
        blocks,
        r_le_n: r as u128 <= n,
        m_le_r: m <= r,
        s_le_r: s <= r,
        relaxed,
    })
}

fn is_abelian(g: &PermGroup) -> bool {
    let gens = g.generators();
    gens.iter()
        .all(|x| gens.iter().all(|y| x.then(y) == y.then(x)))
}
