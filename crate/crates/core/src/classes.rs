//! Conjugacy classes, power maps and class-algebra structure constants.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Conjugacy classes of a group, in canonical order: by element order,
/// then class size, then smallest element. Class 0 is the identity.
#[derive(Clone, Debug)]
pub struct ClassData {
    group: PermGroup,
    classes: Vec<Vec<u32>>,
    reps: Vec<Permutation>,
    class_of: Vec<u32>,
    sizes: Vec<u64>,
    element_orders: Vec<u64>,
    inverse_class: Vec<usize>,
    /// `power_maps[i][k]` is the class of `rep_i^k` for `k < ord(rep_i)`.
    power_maps: Vec<Vec<usize>>,
    structure: OnceLock<StructureConstants>,
    parallel: bool,
}

/// `a(i, j, k)`: the coefficient of `Ĉ_k` in `Ĉ_i Ĉ_j`, i.e. the number of
/// pairs `(x, y) ∈ C_i × C_j` with `xy = z` for a fixed `z ∈ C_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    r: usize,
    a: Vec<u64>,
}

impl StructureConstants {
    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.a[(i * self.r + j) * self.r + k]
    }

    pub fn num_classes(&self) -> usize {
        self.r
    }
}

impl ClassData {
    pub fn new(group: PermGroup) -> Result<Self> {
        Self::with_options(group, true)
    }

    /// `parallel` controls whether structure constants are computed on the
    /// rayon pool; the result is identical either way.
    pub fn with_options(group: PermGroup, parallel: bool) -> Result<Self> {
        let elements = group.elements()?;
        let n = elements.len();
        let gens = group.generators().to_vec();
        let mut raw_class = vec![u32::MAX; n];
        let mut orbits: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let id = orbits.len() as u32;
            raw_class[start] = id;
            let mut orbit = vec![start as u32];
            let mut head = 0;
            while head < orbit.len() {
                let y = &elements[orbit[head] as usize];
                head += 1;
                for s in &gens {
                    let c = group.index_unchecked(&s.conjugate_by(y));
                    if raw_class[c] == u32::MAX {
                        raw_class[c] = id;
                        orbit.push(c as u32);
                    }
                }
            }
            orbits.push(orbit);
        }
        let mut keyed: Vec<(u64, u64, Permutation, Vec<u32>)> = orbits
            .into_iter()
            .map(|mut orbit| {
                orbit.sort_unstable_by(|&a, &b| elements[a as usize].cmp(&elements[b as usize]));
                let rep = elements[orbit[0] as usize].clone();
                (rep.order(), orbit.len() as u64, rep, orbit)
            })
            .collect();
        keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));

        let mut class_of = vec![0u32; n];
        let mut classes = Vec::with_capacity(keyed.len());
        let mut reps = Vec::with_capacity(keyed.len());
        let mut sizes = Vec::with_capacity(keyed.len());
        let mut element_orders = Vec::with_capacity(keyed.len());
        for (ci, (ord, size, rep, members)) in keyed.into_iter().enumerate() {
            for &m in &members {
                class_of[m as usize] = ci as u32;
            }
            classes.push(members);
            reps.push(rep);
            sizes.push(size);
            element_orders.push(ord);
        }
        let lookup = |p: &Permutation| class_of[group.index_unchecked(p)] as usize;
        let inverse_class = reps.iter().map(|r| lookup(&r.inverse())).collect();
        let power_maps = reps
            .iter()
            .zip(&element_orders)
            .map(|(r, &o)| {
                let mut pw = Permutation::identity(group.degree());
                (0..o)
                    .map(|_| {
                        let c = lookup(&pw);
                        pw = pw.compose_unchecked(r);
                        c
                    })
                    .collect()
            })
            .collect();
        Ok(ClassData {
            group,
            classes,
            reps,
            class_of,
            sizes,
            element_orders,
            inverse_class,
            power_maps,
            structure: OnceLock::new(),
            parallel,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn group_order(&self) -> u64 {
        self.class_of.len() as u64
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn rep(&self, i: usize) -> &Permutation {
        &self.reps[i]
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn size(&self, i: usize) -> u64 {
        self.sizes[i]
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.element_orders[i]
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.element_orders
    }

    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }

    pub fn inverse_classes(&self) -> &[usize] {
        &self.inverse_class
    }

    /// Element indices (into `group().elements()`) of class `i`, sorted by
    /// the permutation order.
    pub fn members(&self, i: usize) -> &[u32] {
        &self.classes[i]
    }

    /// Class of the element at position `idx` of `group().elements()`.
    #[inline]
    pub fn class_of_index(&self, idx: usize) -> usize {
        self.class_of[idx] as usize
    }

    pub fn class_of(&self, x: &Permutation) -> Option<usize> {
        self.group
            .index_of(x)
            .ok()
            .flatten()
            .map(|i| self.class_of[i] as usize)
    }

    /// Class of `rep_i^k`; `k` may be negative.
    pub fn power_map(&self, i: usize, k: i64) -> usize {
        let o = self.element_orders[i] as i64;
        self.power_maps[i][k.rem_euclid(o) as usize]
    }

    pub fn power_maps(&self) -> &[Vec<usize>] {
        &self.power_maps
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.element_orders.iter().fold(1, |acc, o| acc.lcm(o))
    }

    /// Labels such as `1a`, `2a`, `4b`: element order plus a letter giving
    /// the position among classes of that order.
    pub fn labels(&self) -> Vec<String> {
        let mut seen = std::collections::HashMap::new();
        self.element_orders
            .iter()
            .map(|&o| {
                let n = seen.entry(o).or_insert(0usize);
                let label = format!("{o}{}", letter(*n));
                *n += 1;
                label
            })
            .collect()
    }

    /// Classes whose elements lie in `sub`.
    pub fn classes_inside(&self, sub: &PermGroup) -> Vec<usize> {
        (0..self.num_classes())
            .filter(|&i| sub.contains(&self.reps[i]))
            .collect()
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        self.structure.get_or_init(|| self.compute_structure_constants())
    }

    fn compute_structure_constants(&self) -> StructureConstants {
        let r = self.num_classes();
        let elements = self.group.elements().expect("enumerated at construction");
        let block = |i: usize| -> Vec<u64> {
            let mut out = vec![0u64; r * r];
            for x in &self.classes[i] {
                let x_inv = elements[*x as usize].inverse();
                for (k, z) in self.reps.iter().enumerate() {
                    let y = x_inv.compose_unchecked(z);
                    let j = self.class_of[self.group.index_unchecked(&y)] as usize;
                    out[j * r + k] += 1;
                }
            }
            out
        };
        let blocks: Vec<Vec<u64>> = if self.parallel {
            (0..r).into_par_iter().map(block).collect()
        } else {
            (0..r).map(block).collect()
        };
        StructureConstants {
            r,
            a: blocks.concat(),
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u64 {
        self.structure_constants().get(i, j, k)
    }

    /// `{k : a(i, j, k) > 0}`, the classes met by the product set `C_i C_j`.
    pub fn class_product_support(&self, i: usize, j: usize) -> BTreeSet<usize> {
        let sc = self.structure_constants();
        (0..self.num_classes())
            .filter(|&k| sc.get(i, j, k) > 0)
            .collect()
    }
}

fn letter(n: usize) -> String {
    let alphabet = b"abcdefghijklmnopqrstuvwxyz";
    if n < 26 {
        (alphabet[n] as char).to_string()
    } else {
        format!("{}{}", alphabet[n % 26] as char, n / 26)
    }
}
