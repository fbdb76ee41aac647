//! Irreducible character tables by the Burnside–Dixon method.
//!
//! Central characters `ω_χ(C_j) = |C_j| χ(g_j) / χ(1)` are the common
//! eigenvectors of the class matrices `(M_i)_{jk} = a(i, j, k)`. They are
//! found over a prime field `F_p` with `p ≡ 1 (mod exp G)` by splitting
//! `F_p^r` with seeded random combinations of the `M_i`. Degrees follow
//! from `χ(1)² = |G| / Σ_j ω_j ω_{j'} / |C_j|`, and each value `χ(g)` is
//! lifted to `Z[ζ_e]` from the eigenvalue multiplicities of `g`, read off
//! by a discrete Fourier transform over the powers of `g`.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::ClassData;
use crate::cyclotomic::{multiply_terms, CycAccumulator, Cyclotomic, Terms};
use crate::error::{Error, Result};
use crate::modp::{is_prime, Fp};

/// Seed used when the caller does not choose one.
pub const DEFAULT_SEED: u64 = 0x05EE_D0FC_1A55;

/// Random combinations tried on one block before giving up.
pub const SPLIT_RETRIES: usize = 64;

/// One irreducible character: exact values per class, plus the same values
/// as sparse root-of-unity sums for bulk identities.
#[derive(Clone, Debug)]
pub struct Character {
    values: Vec<Cyclotomic>,
    terms: Vec<Terms>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl Eq for Character {}

impl Character {
    pub(crate) fn from_values(values: Vec<Cyclotomic>) -> Self {
        let terms = values
            .iter()
            .map(|v| {
                assert!(v.is_integral());
                v.terms().collect()
            })
            .collect();
        Character { values, terms }
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn degree(&self) -> u64 {
        self.values[0].to_integer().expect("degree is an integer") as u64
    }
}

/// Class-wise data a character table is stated over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableHeader {
    pub group: String,
    pub order: u64,
    pub exponent: u32,
    pub class_sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    pub power_maps: Vec<Vec<usize>>,
}

impl TableHeader {
    pub fn from_classes(group: impl Into<String>, cd: &ClassData) -> Self {
        TableHeader {
            group: group.into(),
            order: cd.group_order(),
            exponent: cd.exponent() as u32,
            class_sizes: cd.sizes().to_vec(),
            element_orders: cd.element_orders().to_vec(),
            power_maps: cd.power_maps().to_vec(),
        }
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn power_map(&self, i: usize, k: i64) -> usize {
        let o = self.element_orders[i] as i64;
        self.power_maps[i][k.rem_euclid(o) as usize]
    }

    pub fn inverse_class(&self, i: usize) -> usize {
        self.power_map(i, -1)
    }

    pub fn centralizer_order(&self, i: usize) -> u64 {
        self.order / self.class_sizes[i]
    }
}

/// Character table: one row per irreducible character, one column per
/// class, values in `Q(ζ_e)` with `e` the exponent of the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    header: TableHeader,
    rows: Vec<Character>,
}

impl CharTable {
    pub(crate) fn from_parts(header: TableHeader, rows: Vec<Character>) -> Self {
        CharTable { header, rows }
    }

    pub fn header(&self) -> &TableHeader {
        &self.header
    }

    pub fn order(&self) -> u64 {
        self.header.order
    }

    pub fn conductor(&self) -> u32 {
        self.header.exponent
    }

    pub fn num_classes(&self) -> usize {
        self.header.num_classes()
    }

    pub fn rows(&self) -> &[Character] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> &Character {
        &self.rows[r]
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.rows[row].values[class]
    }

    pub(crate) fn terms(&self, row: usize, class: usize) -> &Terms {
        &self.rows[row].terms[class]
    }

    pub fn degree(&self, row: usize) -> u64 {
        self.rows[row].degree()
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.rows.len()).map(|r| self.degree(r)).collect()
    }

    /// Classes on which `χ(g) = χ(1)`.
    pub fn kernel(&self, row: usize) -> BTreeSet<usize> {
        let d = &self.rows[row].values[0];
        (0..self.num_classes())
            .filter(|&c| &self.rows[row].values[c] == d)
            .collect()
    }

    /// Whether every class in `classes` lies in the kernel of `row`.
    pub fn kernel_contains(&self, row: usize, classes: &[usize]) -> bool {
        let d = &self.rows[row].values[0];
        classes.iter().all(|&c| &self.rows[row].values[c] == d)
    }

    /// `(1/|G|) Σ_i |C_i| a_i conj(b_i)` for class functions given as
    /// sparse root sums in conductor `e`.
    pub(crate) fn inner_product_terms(&self, a: &[Terms], b: &[Terms]) -> Cyclotomic {
        let mut acc = CycAccumulator::new(self.conductor());
        for ((x, y), &s) in a.iter().zip(b).zip(&self.header.class_sizes) {
            acc.add_product(s as i128, x, y, true);
        }
        acc.finish(self.order() as i128)
    }

    pub fn inner_product(&self, r1: usize, r2: usize) -> Cyclotomic {
        self.inner_product_terms(&self.rows[r1].terms, &self.rows[r2].terms)
    }

    /// Pointwise product of two rows.
    pub fn product_row(&self, r1: usize, r2: usize) -> Vec<Cyclotomic> {
        let e = self.conductor();
        (0..self.num_classes())
            .map(|c| Cyclotomic::from_terms(e, multiply_terms(e, self.terms(r1, c), self.terms(r2, c)), 1))
            .collect()
    }

    /// `(1/|G|) Σ |C_i| v_i conj(v_i)`; `None` only if the class function
    /// is malformed and the result is not rational.
    pub fn norm(&self, v: &[Cyclotomic]) -> Option<Ratio<i64>> {
        let mut acc = Cyclotomic::zero(self.conductor());
        for (x, &s) in v.iter().zip(&self.header.class_sizes) {
            acc = &acc + &x.abs_square().scale(s as i64);
        }
        acc.div_int(self.order() as i64).to_rational()
    }

    /// Index of the row equal to the given class function, if any.
    pub fn find_row(&self, v: &[Cyclotomic]) -> Option<usize> {
        self.rows.iter().position(|r| r.values.as_slice() == v)
    }

    /// Checks that the rows form the irreducible characters of a group
    /// with this header. Returns every violation found.
    /// Power maps send classes to classes of the right order, and values
    /// satisfy `χ(g^k) = σ_k(χ(g))` for `k` prime to `ord(g)`.
    fn power_map_violations(&self, out: &mut Vec<String>) {
        let h = &self.header;
        let r = self.num_classes();
        if h.power_maps.len() != r || h.element_orders.len() != r {
            out.push("power maps or element orders missing".into());
            return;
        }
        for (i, pm) in h.power_maps.iter().enumerate() {
            let o = h.element_orders[i];
            if o == 0 || pm.len() as u64 != o || pm.iter().any(|&c| c >= r) {
                out.push(format!("power map of class {i} is malformed"));
                continue;
            }
            for (k, &c) in pm.iter().enumerate() {
                let k = k as u64;
                if h.element_orders[c] != o / k.gcd(&o) {
                    out.push(format!("power map sends class {i} to class {c} of the wrong order for k = {k}"));
                }
                if k.gcd(&o) != 1 {
                    continue;
                }
                for (row, ch) in self.rows.iter().enumerate() {
                    let v = &ch.values[i];
                    let e = (v.conductor() as u64).lcm(&o);
                    let Ok(e32) = u32::try_from(e) else {
                        out.push(format!("conductor overflow at class {i}"));
                        return;
                    };
                    let j = (0..e).map(|m| k + m * o).find(|j| j.gcd(&e) == 1).unwrap_or(1);
                    if v.embed(e32).galois(j as u32) != ch.values[c] {
                        out.push(format!("row {row}: value on class {c} is not the Galois image of class {i} for k = {k}"));
                    }
                }
            }
        }
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let r = self.num_classes();
        let n = self.order();
        let h = &self.header;
        if h.class_sizes.iter().sum::<u64>() != n {
            out.push(format!("class sizes sum to {} != |G| = {n}", h.class_sizes.iter().sum::<u64>()));
        }
        if self.rows.len() != r || r == 0 {
            out.push(format!("{} rows for {r} classes", self.rows.len()));
            return out;
        }
        if h.class_sizes.first() != Some(&1) || h.element_orders.first() != Some(&1) {
            out.push("class 0 is not the identity class".into());
        }
        for (row, ch) in self.rows.iter().enumerate() {
            if ch.values.len() != r {
                out.push(format!("row {row} has {} values for {r} classes", ch.values.len()));
                return out;
            }
        }
        if self.rows[0].values.iter().any(|v| v != &Cyclotomic::one(1)) {
            out.push("row 0 is not the principal character".into());
        }
        self.power_map_violations(&mut out);
        let mut sum_sq = 0u128;
        for row in 0..r {
            match self.rows[row].values[0].to_integer() {
                Some(d) if d > 0 => {
                    sum_sq += (d as u128) * (d as u128);
                    if !n.is_multiple_of(d as u64) {
                        out.push(format!("degree {d} of row {row} does not divide {n}"));
                    }
                }
                _ => out.push(format!("row {row} has a non-positive or non-integer degree")),
            }
        }
        if out.iter().any(|v| v.contains("degree")) {
            return out;
        }
        if sum_sq != n as u128 {
            out.push(format!("sum of squared degrees {sum_sq} != |G| = {n}"));
        }
        // column orthogonality: Σ_χ χ(g_i) conj χ(g_j) = δ_ij |C_G(g_i)|
        let e = self.conductor();
        for i in 0..r {
            for j in i..r {
                let mut acc = CycAccumulator::new(e);
                for ch in &self.rows {
                    acc.add_product(1, &ch.terms[i], &ch.terms[j], true);
                }
                let got = acc.finish(1);
                let want = if i == j { h.centralizer_order(i) as i64 } else { 0 };
                if got != Cyclotomic::from_int(e, want) {
                    out.push(format!(
                        "column orthogonality fails for classes ({i}, {j}): got {got}, want {want}"
                    ));
                }
            }
        }
        for a in 0..r {
            for b in a..r {
                let got = self.inner_product(a, b);
                let want = (a == b) as i64;
                if got != Cyclotomic::from_int(e, want) {
                    out.push(format!("row orthogonality fails for rows ({a}, {b}): got {got}"));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invariant(v.join("; ")))
        }
    }

    /// `|G|² a(i, j, k)` from the character formula
    /// `a(i,j,k) = |C_i||C_j|/|G| Σ_χ χ(g_i)χ(g_j) conj χ(g_k) / χ(1)`.
    pub fn structure_constant_from_characters(&self, i: usize, j: usize, k: usize) -> Cyclotomic {
        let e = self.conductor();
        let n = self.order() as i128;
        let mut acc = CycAccumulator::new(e);
        for (row, ch) in self.rows.iter().enumerate() {
            let w = n / self.degree(row) as i128;
            let ij = multiply_terms(e, &ch.terms[i], &ch.terms[j]);
            acc.add_product(w, &ij, &ch.terms[k], true);
        }
        let si = self.header.class_sizes[i] as i128;
        let sj = self.header.class_sizes[j] as i128;
        acc.finish(n * n).scale((si * sj) as i64)
    }

    /// Rows sorted with the principal character first, then by degree and
    /// lexicographically by values.
    pub(crate) fn sort_rows(&mut self) {
        let one = Cyclotomic::one(1);
        self.rows.sort_by(|a, b| {
            let pa = !a.values.iter().all(|v| v == &one);
            let pb = !b.values.iter().all(|v| v == &one);
            (pa, a.degree(), &a.values).cmp(&(pb, b.degree(), &b.values))
        });
    }
}

/// Re-expresses a root sum of conductor `from` in conductor `to`.
pub(crate) fn embed_terms(terms: &[(u32, i64)], from: u32, to: u32) -> Terms {
    assert_eq!(to % from, 0, "conductor {from} does not divide {to}");
    let step = to / from;
    terms.iter().map(|&(k, c)| (k * step, c)).collect()
}

/// For each class of `cd_n`, the class of `cd_g` containing it.
pub fn fusion_map(cd_g: &ClassData, cd_n: &ClassData) -> Result<Vec<usize>> {
    cd_n.reps()
        .iter()
        .map(|r| cd_g.class_of(r).ok_or(Error::NotMember))
        .collect()
}

/// Multiplicities `⟨χ_N, θ⟩` of every `θ ∈ Irr(N)` in the restriction of
/// row `row` of `t_g`, listed as `(θ index, multiplicity)` for nonzero
/// multiplicities.
pub fn restrict_and_decompose(
    t_g: &CharTable,
    t_n: &CharTable,
    fusion: &[usize],
    row: usize,
) -> Result<Vec<(usize, u64)>> {
    let e = t_g.conductor();
    let en = t_n.conductor();
    let restricted: Vec<Terms> = fusion.iter().map(|&c| t_g.terms(row, c).clone()).collect();
    let mut out = Vec::new();
    for theta in 0..t_n.rows().len() {
        let mut acc = CycAccumulator::new(e);
        for (i, r) in restricted.iter().enumerate() {
            let th = embed_terms(t_n.terms(theta, i), en, e);
            acc.add_product(t_n.header.class_sizes[i] as i128, r, &th, true);
        }
        let m = acc.finish(t_n.order() as i128);
        match m.to_integer() {
            Some(0) => {}
            Some(k) if k > 0 => out.push((theta, k as u64)),
            _ => {
                return Err(Error::Invariant(format!(
                    "restriction of row {row} has inner product {m} with row {theta} of the subgroup"
                )))
            }
        }
    }
    Ok(out)
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√n` that does not divide `n`.
pub fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut p = e + 1;
    loop {
        if p * p > 4 * n && !n.is_multiple_of(p) && is_prime(p) {
            return p;
        }
        p += e;
    }
}

/// Computes the character table of the group behind `cd`.
pub fn character_table(cd: &ClassData, group_name: &str, seed: u64) -> Result<CharTable> {
    let r = cd.num_classes();
    let n = cd.group_order();
    let e = cd.exponent();
    let p = dixon_prime(e, n);
    let f = Fp::new(p);
    let sc = cd.structure_constants();
    let matrices: Vec<Vec<Vec<u64>>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| (0..r).map(|k| sc.get(i, j, k) % p).collect())
                .collect()
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| (i == j) as u64).collect())
        .collect();
    let mut pending = vec![identity];
    let mut lines: Vec<Vec<u64>> = Vec::new();
    while let Some(space) = pending.pop() {
        if space.len() == 1 {
            lines.push(space.into_iter().next().unwrap());
            continue;
        }
        let pieces = split_space(&f, &matrices, &space, &mut rng).ok_or_else(|| {
            Error::Splitting(format!(
                "block of dimension {} did not split after {SPLIT_RETRIES} tries (p = {p})",
                space.len()
            ))
        })?;
        // push in reverse so the first eigenspace is processed next
        pending.extend(pieces.into_iter().rev());
    }

    let zeta = f.pow(f.primitive_root(), (p - 1) / e);
    let sizes: Vec<u64> = cd.sizes().iter().map(|s| s % p).collect();
    let mut rows = Vec::with_capacity(r);
    for w in lines {
        if w[0] == 0 {
            return Err(Error::Splitting("central character vanishes on the identity".into()));
        }
        let inv0 = f.inv(w[0]);
        let omega: Vec<u64> = w.iter().map(|&x| f.mul(x, inv0)).collect();
        let mut s = 0u64;
        for j in 0..r {
            let t = f.mul(omega[j], omega[cd.inverse_class(j)]);
            s = f.add(s, f.mul(t, f.inv(sizes[j])));
        }
        let d2 = f.mul(n % p, f.inv(s));
        let degree = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|&d| f.mul(d, d) == d2)
            .ok_or_else(|| Error::Splitting(format!("no degree squares to {d2} mod {p}")))?;
        let modular: Vec<u64> = (0..r)
            .map(|j| f.mul(f.mul(omega[j], degree), f.inv(sizes[j])))
            .collect();
        let mut values = Vec::with_capacity(r);
        let mut terms = Vec::with_capacity(r);
        for i in 0..r {
            let t = lift_value(&f, cd, &modular, i, e, zeta, degree)?;
            values.push(Cyclotomic::from_terms(e as u32, t.iter().copied(), 1));
            terms.push(t);
        }
        rows.push(Character { values, terms });
    }
    let mut table = CharTable {
        header: TableHeader::from_classes(group_name, cd),
        rows,
    };
    table.sort_rows();
    let total: u64 = table.degrees().iter().map(|d| d * d).sum();
    if total != n {
        return Err(Error::Invariant(format!("sum of squared degrees {total} != {n}")));
    }
    Ok(table)
}

/// Eigenvalue multiplicities of `ρ(g_i)` from `χ(g_i^k) mod p`, as a
/// sparse sum of powers of `ζ_e`.
fn lift_value(
    f: &Fp,
    cd: &ClassData,
    modular: &[u64],
    i: usize,
    e: u64,
    zeta: u64,
    degree: u64,
) -> Result<Terms> {
    let o = cd.element_order(i);
    let step = e / o;
    let z = f.pow(zeta, step);
    let z_inv = f.inv(z);
    let o_inv = f.inv(o % f.modulus());
    let mut out = Vec::new();
    let mut total = 0;
    for l in 0..o {
        let zl = f.pow(z_inv, l);
        let mut acc = 0u64;
        let mut zk = 1u64;
        for k in 0..o {
            let v = modular[cd.power_map(i, k as i64)];
            acc = f.add(acc, f.mul(v, zk));
            zk = f.mul(zk, zl);
        }
        let m = f.mul(acc, o_inv);
        if m > degree {
            return Err(Error::Splitting(format!(
                "multiplicity {m} exceeds degree {degree} at class {i}"
            )));
        }
        total += m;
        if m > 0 {
            out.push(((l * step) as u32, m as i64));
        }
    }
    if total != degree {
        return Err(Error::Splitting(format!("multiplicities at class {i} sum to {total}")));
    }
    Ok(out)
}

/// Splits an invariant subspace (rows are a basis in reduced echelon
/// form) into eigenspaces of a random combination of class matrices.
fn split_space(
    f: &Fp,
    matrices: &[Vec<Vec<u64>>],
    space: &[Vec<u64>],
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Vec<Vec<u64>>>> {
    let r = matrices.len();
    let d = space.len();
    let pivots: Vec<usize> = space
        .iter()
        .map(|b| b.iter().position(|&x| x != 0).unwrap())
        .collect();
    for _ in 0..SPLIT_RETRIES {
        let coeffs: Vec<u64> = (0..r).map(|_| rng.gen_range(0..f.modulus())).collect();
        // restricted[t][s] = coordinate t of (Σ c_i M_i) b_s
        let mut restricted = vec![vec![0u64; d]; d];
        for (s, b) in space.iter().enumerate() {
            let mut image = vec![0u64; r];
            for (i, m) in matrices.iter().enumerate().skip(1) {
                if coeffs[i] == 0 {
                    continue;
                }
                for (j, row) in m.iter().enumerate() {
                    let dot = row
                        .iter()
                        .zip(b)
                        .fold(0u64, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                    image[j] = f.add(image[j], f.mul(coeffs[i], dot));
                }
            }
            for (t, &pc) in pivots.iter().enumerate() {
                restricted[t][s] = image[pc];
            }
        }
        let cp = f.charpoly(&restricted);
        let roots = f.roots(&cp);
        if roots.len() < 2 {
            continue;
        }
        let mut pieces = Vec::new();
        let mut total = 0;
        for lambda in roots {
            let shifted: Vec<Vec<u64>> = restricted
                .iter()
                .enumerate()
                .map(|(t, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(s, &x)| if s == t { f.sub(x, lambda) } else { x })
                        .collect()
                })
                .collect();
            let kernel = f.nullspace(&shifted);
            total += kernel.len();
            let mut lifted: Vec<Vec<u64>> = kernel
                .iter()
                .map(|c| {
                    let mut v = vec![0u64; r];
                    for (s, &cs) in c.iter().enumerate() {
                        for (x, &y) in v.iter_mut().zip(&space[s]) {
                            *x = f.add(*x, f.mul(cs, y));
                        }
                    }
                    v
                })
                .collect();
            f.rref(&mut lifted);
            pieces.push(lifted);
        }
        if total != d {
            // not diagonalizable on this block; cannot happen for class
            // matrices with p coprime to |G|
            return None;
        }
        return Some(pieces);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::GroupSpec;

    fn table(spec: &str) -> CharTable {
        let g = spec.parse::<GroupSpec>().unwrap().make().unwrap();
        let cd = ClassData::new(g).unwrap();
        character_table(&cd, spec, DEFAULT_SEED).unwrap()
    }

    #[test]
    fn power_maps_are_checked_against_values() {
        let mut t = table("alt:4");
        assert!(t.violations().is_empty());
        let c = t.header.element_orders.iter().position(|&o| o == 3).unwrap();
        let square = t.header.power_maps[c][2];
        assert_ne!(square, c);
        t.header.power_maps[c][2] = c;
        let v = t.violations();
        assert!(v.iter().any(|m| m.contains("Galois image of class")), "{v:?}");
        t.header.power_maps[c][2] = 0;
        assert!(t.violations().iter().any(|m| m.contains("wrong order")));
    }

    fn sorted_degrees(t: &CharTable) -> Vec<u64> {
        let mut d = t.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn prime_rule() {
        // e = 6, |G| = 6: need p ≡ 1 (6), p > 2√6 ≈ 4.9, p ∤ 6
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(2, 4), 5);
        // p = 3 would be ≡ 1 mod 2 and > 2√2 but divides 6
        assert_eq!(dixon_prime(2, 6), 5);
    }

    #[test]
    fn sym3_table() {
        let t = table("sym:3");
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        // classes 1a, 2a, 3a
        assert!(t.value(2, 1).is_zero());
        assert_eq!(t.value(2, 2), &Cyclotomic::from_int(6, -1));
        t.validate().unwrap();
    }

    #[test]
    fn sl23_degrees() {
        let t = table("sl:2:3");
        assert_eq!(sorted_degrees(&t), vec![1, 1, 1, 2, 2, 2, 3]);
        t.validate().unwrap();
    }

    #[test]
    fn alt5_golden_values() {
        let t = table("alt:5");
        assert_eq!(t.degrees(), vec![1, 3, 3, 4, 5]);
        let z = |k| Cyclotomic::root_of_unity(30, k);
        let a = -&(&z(6) + &z(24));
        let b = -&(&z(12) + &z(18));
        let on_fives: BTreeSet<_> = [1, 2]
            .iter()
            .flat_map(|&r| [t.value(r, 3).clone(), t.value(r, 4).clone()])
            .collect();
        assert_eq!(on_fives, BTreeSet::from([a, b]));
        t.validate().unwrap();
    }

    #[test]
    fn deterministic_and_seed_independent() {
        let g = "psl:2:7".parse::<GroupSpec>().unwrap().make().unwrap();
        let cd = ClassData::new(g).unwrap();
        let a = character_table(&cd, "psl:2:7", DEFAULT_SEED).unwrap();
        let b = character_table(&cd, "psl:2:7", DEFAULT_SEED).unwrap();
        let c = character_table(&cd, "psl:2:7", 12345).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn structure_constants_from_characters_match_counts() {
        for spec in ["sym:4", "q8", "sl:2:3", "dihedral:5"] {
            let g = spec.parse::<GroupSpec>().unwrap().make().unwrap();
            let cd = ClassData::new(g).unwrap();
            let t = character_table(&cd, spec, DEFAULT_SEED).unwrap();
            let r = cd.num_classes();
            for i in 0..r {
                for j in 0..r {
                    for k in 0..r {
                        let want = cd.structure_constant(i, j, k) as i64;
                        assert_eq!(
                            t.structure_constant_from_characters(i, j, k),
                            Cyclotomic::from_int(1, want)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn norms_and_products() {
        let t = table("sym:4");
        for r in 0..t.rows().len() {
            assert_eq!(t.norm(t.row(r).values()), Some(Ratio::from_integer(1)));
            assert_eq!(t.product_row(0, r), t.row(r).values());
        }
        // sign ⊗ standard is the other degree-3 character
        let sign = 1;
        let prod = t.product_row(sign, 3);
        assert_eq!(t.find_row(&prod), Some(4));
    }

    #[test]
    fn abelian_table() {
        let t = table("cyclic:5");
        assert_eq!(t.degrees(), vec![1; 5]);
        t.validate().unwrap();
    }
}
