//! Permutation groups backed by a base and strong generating set.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on the number of elements any brute-force routine will
/// enumerate.
pub const DEFAULT_ELEMENT_CAP: u64 = 100_000;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    orbit: Vec<u32>,
    /// `transversal[b] = u` with `u(base) = b`, paired with `u⁻¹`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

/// Base and strong generating set, built by deterministic Schreier–Sims.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl Bsgs {
    fn new(degree: usize) -> Self {
        Bsgs {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
        }
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels
            .iter()
            .fold(1u64, |acc, l| acc.saturating_mul(l.orbit.len() as u64))
    }

    fn level_generators(&self, level: usize) -> impl Iterator<Item = &Permutation> {
        let fixed: Vec<u32> = self.levels[..level].iter().map(|l| l.base).collect();
        self.strong
            .iter()
            .filter(move |s| fixed.iter().all(|&b| s.apply(b) == b))
    }

    fn recompute_level(&mut self, level: usize) {
        let base = self.levels[level].base;
        let gens: Vec<Permutation> = self.level_generators(level).cloned().collect();
        let mut transversal: Vec<Option<(Permutation, Permutation)>> = vec![None; self.degree];
        let id = Permutation::identity(self.degree);
        transversal[base as usize] = Some((id.clone(), id));
        let mut orbit = vec![base];
        let mut head = 0;
        while head < orbit.len() {
            let b = orbit[head];
            head += 1;
            let ub = transversal[b as usize].as_ref().unwrap().0.clone();
            for s in &gens {
                let c = s.apply(b);
                if transversal[c as usize].is_none() {
                    let uc = s.compose_unchecked(&ub);
                    let inv = uc.inverse();
                    transversal[c as usize] = Some((uc, inv));
                    orbit.push(c);
                }
            }
        }
        self.levels[level].orbit = orbit;
        self.levels[level].transversal = transversal;
    }

    /// Sifts `g` through the levels starting at `from`. Returns the residue
    /// and the level at which sifting stopped (`levels.len()` if it passed
    /// every level).
    fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply(level.base);
            match &level.transversal[b as usize] {
                None => return (h, l),
                Some((_, u_inv)) => h = u_inv.compose_unchecked(&h),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip(g, 0).0.is_identity()
    }

    fn add_strong(&mut self, h: Permutation, level: usize) {
        if level == self.levels.len() {
            let base = h
                .first_moved_point()
                .expect("non-identity residue moves a point");
            self.levels.push(Level {
                base,
                orbit: vec![],
                transversal: vec![],
            });
        }
        self.strong.push(h);
        for l in 0..=level {
            self.recompute_level(l);
        }
    }

    /// Adds `g` to the group and restores the strong generating property.
    /// Returns whether the group grew.
    fn extend(&mut self, g: &Permutation) -> bool {
        let (h, j) = self.strip(g, 0);
        if h.is_identity() {
            return false;
        }
        self.add_strong(h, j);
        let mut level = j as isize;
        while level >= 0 {
            let l = level as usize;
            match self.find_missing_schreier_generator(l) {
                Some((h, jj)) => {
                    self.add_strong(h, jj);
                    level = jj as isize;
                }
                None => level -= 1,
            }
        }
        true
    }

    fn find_missing_schreier_generator(&self, l: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[l];
        let gens: Vec<&Permutation> = self.level_generators(l).collect();
        for &b in &level.orbit {
            let ub = &level.transversal[b as usize].as_ref().unwrap().0;
            for s in &gens {
                let sb = s.apply(b);
                let usb_inv = &level.transversal[sb as usize].as_ref().unwrap().1;
                let y = usb_inv.compose_unchecked(&s.compose_unchecked(ub));
                let (h, jj) = self.strip(&y, l + 1);
                if !h.is_identity() {
                    return Some((h, jj));
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug)]
struct ElementTable {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

/// A permutation group on `{0, .., degree-1}`.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    bsgs: Bsgs,
    table: OnceLock<ElementTable>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// Builds the group generated by `gens`.
    pub fn new(gens: Vec<Permutation>) -> Result<Self> {
        let degree = gens.first().ok_or(Error::NoGenerators)?.degree();
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, bad.degree()));
        }
        Ok(Self::from_generators_unchecked(degree, gens))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators_unchecked(degree, vec![])
    }

    fn from_generators_unchecked(degree: usize, mut gens: Vec<Permutation>) -> Self {
        gens.retain(|g| !g.is_identity());
        gens.sort();
        gens.dedup();
        let mut bsgs = Bsgs::new(degree);
        for g in &gens {
            bsgs.extend(g);
        }
        PermGroup {
            degree,
            generators: gens,
            bsgs,
            table: OnceLock::new(),
        }
    }

    /// Subgroup generated by a collection of elements, keeping only those
    /// needed to grow the group so the generating set stays small.
    pub fn generated_by<'a, I>(degree: usize, elements: I) -> Self
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut bsgs = Bsgs::new(degree);
        let mut gens = Vec::new();
        for g in elements {
            if bsgs.extend(g) {
                gens.push(g.clone());
            }
        }
        Self::from_generators_unchecked(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn bsgs(&self) -> &Bsgs {
        &self.bsgs
    }

    pub fn order(&self) -> u64 {
        self.bsgs.order()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.bsgs.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Uniformly random element, drawn from the transversals.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = self.identity();
        for level in &self.bsgs.levels {
            let b = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.compose_unchecked(&level.transversal[b as usize].as_ref().unwrap().0);
        }
        g
    }

    fn table(&self, cap: u64) -> Result<&ElementTable> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        Ok(self.table.get_or_init(|| self.enumerate()))
    }

    /// Breadth-first closure from the identity, multiplying on the right by
    /// the sorted generators.
    fn enumerate(&self) -> ElementTable {
        let id = self.identity();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::with_capacity(self.order() as usize);
        index.insert(id, 0u32);
        let mut head = 0;
        while head < elements.len() {
            for s in &self.generators {
                let h = elements[head].compose_unchecked(s);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len() as u32);
                    elements.push(h);
                }
            }
            head += 1;
        }
        ElementTable { elements, index }
    }

    /// All elements in deterministic breadth-first order, identity first.
    pub fn elements(&self) -> Result<&[Permutation]> {
        self.elements_with_cap(DEFAULT_ELEMENT_CAP)
    }

    pub fn elements_with_cap(&self, cap: u64) -> Result<&[Permutation]> {
        Ok(&self.table(cap)?.elements)
    }

    /// Position of `g` in [`PermGroup::elements`].
    pub fn index_of(&self, g: &Permutation) -> Result<Option<usize>> {
        Ok(self
            .table(DEFAULT_ELEMENT_CAP)?
            .index
            .get(g)
            .map(|&i| i as usize))
    }

    pub(crate) fn index_unchecked(&self, g: &Permutation) -> usize {
        self.table
            .get()
            .expect("elements enumerated")
            .index[g] as usize
    }

    /// Smallest normal subgroup of `self` containing `seed`.
    pub fn normal_closure(&self, seed: &[Permutation]) -> Result<PermGroup> {
        for s in seed {
            if !self.contains(s) {
                return Err(Error::NotMember);
            }
        }
        let mut bsgs = Bsgs::new(self.degree);
        let mut gens: Vec<Permutation> = Vec::new();
        for s in seed {
            if bsgs.extend(s) {
                gens.push(s.clone());
            }
        }
        let mut i = 0;
        while i < gens.len() {
            for s in &self.generators {
                let c = s.conjugate_by(&gens[i]);
                if bsgs.extend(&c) {
                    gens.push(c);
                }
            }
            i += 1;
        }
        Ok(Self::from_generators_unchecked(self.degree, gens))
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g)
            && g.generators
                .iter()
                .all(|s| self.generators.iter().all(|n| self.contains(&s.conjugate_by(n))))
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                // a⁻¹ b⁻¹ a b
                let c = a
                    .inverse()
                    .compose_unchecked(&b.inverse())
                    .compose_unchecked(a)
                    .compose_unchecked(b);
                comms.push(c);
            }
        }
        self.normal_closure(&comms)
            .expect("commutators of generators are members")
    }

    /// `G, G', G'', ...` ending at the first repeated term.
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            if last.order() == 1 {
                break;
            }
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    /// Number of derived-series steps needed to reach the trivial group,
    /// or `None` when the group is not solvable.
    pub fn derived_length(&self) -> Option<usize> {
        let series = self.derived_series();
        (series.last().unwrap().order() == 1).then(|| series.len() - 1)
    }

    pub fn centralizer_order(&self, x: &Permutation) -> Result<u64> {
        if !self.contains(x) {
            return Err(Error::NotMember);
        }
        Ok(self
            .elements()?
            .iter()
            .filter(|g| g.commutes_with(x))
            .count() as u64)
    }

    /// Action of `self` on the cosets of the normal subgroup `n`.
    pub fn coset_action(&self, n: &PermGroup) -> Result<CosetActionImage> {
        if !n.is_normal_in(self) {
            return Err(Error::NotNormal);
        }
        let elements = self.elements()?;
        let n_elems = n.elements()?;
        let mut coset_of = vec![u32::MAX; elements.len()];
        let mut section = Vec::new();
        for gi in 0..elements.len() {
            if coset_of[gi] != u32::MAX {
                continue;
            }
            let c = section.len() as u32;
            section.push(gi as u32);
            for m in n_elems {
                let idx = self.index_unchecked(&m.compose_unchecked(&elements[gi]));
                coset_of[idx] = c;
            }
        }
        let images = self
            .generators
            .iter()
            .map(|s| {
                let imgs = section
                    .iter()
                    .map(|&r| coset_of[self.index_unchecked(&s.compose_unchecked(&elements[r as usize]))])
                    .collect();
                Permutation::from_images(imgs).expect("coset action is a permutation")
            })
            .collect();
        let conj = self
            .generators
            .iter()
            .map(|s| {
                let imgs = section
                    .iter()
                    .map(|&r| coset_of[self.index_unchecked(&s.conjugate_by(&elements[r as usize]))])
                    .collect();
                Permutation::from_images(imgs).expect("conjugation permutes cosets")
            })
            .collect();
        Ok(CosetActionImage {
            coset_of,
            section,
            generator_images: images,
            conjugation_images: conj,
            quotient: OnceLock::new(),
        })
    }
}

/// Image of the action of `G` on the cosets of a normal subgroup `N`.
///
/// Cosets are numbered in order of first appearance in `G.elements()`, so
/// coset 0 is `N` itself.
#[derive(Clone, Debug)]
pub struct CosetActionImage {
    coset_of: Vec<u32>,
    section: Vec<u32>,
    generator_images: Vec<Permutation>,
    conjugation_images: Vec<Permutation>,
    quotient: OnceLock<PermGroup>,
}

impl CosetActionImage {
    pub fn num_cosets(&self) -> usize {
        self.section.len()
    }

    /// Coset index of the element at position `element` in `G.elements()`.
    pub fn coset_of(&self, element: usize) -> usize {
        self.coset_of[element] as usize
    }

    /// Position in `G.elements()` of the representative of a coset.
    pub fn section(&self, coset: usize) -> usize {
        self.section[coset] as usize
    }

    /// `G/N` as a permutation group on the cosets. Built on first use since
    /// its degree is `|G/N|`.
    pub fn quotient(&self) -> &PermGroup {
        self.quotient.get_or_init(|| {
            let degree = self.num_cosets().max(1);
            PermGroup::from_generators_unchecked(degree, self.generator_images.clone())
        })
    }

    /// Orbits of the cosets under conjugation by `G`, i.e. the conjugacy
    /// classes of `G/N`. Each orbit is sorted; orbits are ordered by their
    /// smallest coset.
    pub fn conjugacy_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.num_cosets();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let c = orbit[head];
                head += 1;
                for s in &self.conjugation_images {
                    let d = s.apply(c as u32) as usize;
                    if !seen[d] {
                        seen[d] = true;
                        orbit.push(d);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// `|C_{G/N}(Nx)|` for the coset with the given index.
    pub fn centralizer_order(&self, coset: usize) -> u64 {
        let orbit = self
            .conjugacy_orbits()
            .into_iter()
            .find(|o| o.binary_search(&coset).is_ok())
            .expect("every coset lies in an orbit");
        (self.num_cosets() / orbit.len()) as u64
    }
}
