//! Permutations of `{0, .., n-1}`.
//!
//! Composition follows one convention everywhere in the crate:
//! `a.compose(&b)` is the map `i -> a(b(i))`, so `b` is applied first.
//! Group products `g * h` are `g.compose(&h)`, and a coset `Nx` is the set
//! `{ n.compose(x) : n in N }`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree-1}` stored as its image vector.
///
/// The derived ordering is lexicographic on the image vector. It is the
/// total order used to choose canonical class representatives.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree || touched[a as usize] {
                    return Err(Error::InvalidPermutation(format!(
                        "bad cycle {cycle:?} for degree {degree}"
                    )));
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Permutation::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self ∘ other`, the map `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    /// Composition for callers that already know the degrees agree.
    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other ∘ self⁻¹`.
    pub(crate) fn conjugate_by(&self, other: &Permutation) -> Permutation {
        // (s ∘ o ∘ s⁻¹)(s(i)) = s(o(i))
        let mut out = vec![0u32; self.degree()];
        for i in 0..self.degree() {
            out[self.images[i] as usize] = self.images[other.images[i] as usize];
        }
        Permutation { images: out }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            k >>= 1;
        }
        result
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut j = self.images[start] as usize;
            while j != start {
                seen[j] = true;
                cycle.push(j as u32);
                j = self.images[j] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Smallest point not fixed by the permutation.
    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &j)| i as u32 != j)
            .map(|(i, _)| i as u32)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        (0..self.degree())
            .all(|i| self.images[other.images[i] as usize] == other.images[self.images[i] as usize])
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let ab = a.compose(&b).unwrap();
        for i in 0..3 {
            assert_eq!(ab.apply(i), a.apply(b.apply(i)));
        }
        // 0 -> 1, 1 -> 2, 2 -> 0
        assert_eq!(ab.images(), &[1, 2, 0]);
        assert_eq!(ab.order(), 3);
    }

    #[test]
    fn identity_is_neutral() {
        let p = Permutation::from_images(vec![2, 0, 3, 1]).unwrap();
        let e = Permutation::identity(4);
        assert_eq!(e.compose(&p).unwrap(), p);
        assert_eq!(p.compose(&e).unwrap(), p);
    }

    #[test]
    fn random_inverses() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let mut v: Vec<u32> = (0..10).collect();
            v.shuffle(&mut rng);
            let p = Permutation::from_images(v).unwrap();
            assert!(p.compose(&p.inverse()).unwrap().is_identity());
            assert!(p.inverse().compose(&p).unwrap().is_identity());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(a.compose(&b), Err(Error::DegreeMismatch(3, 4)));
    }

    #[test]
    fn conjugation_matches_definition() {
        let s = Permutation::from_images(vec![1, 2, 3, 0, 4]).unwrap();
        let o = Permutation::from_images(vec![4, 0, 1, 2, 3]).unwrap();
        let expected = s.compose(&o).unwrap().compose(&s.inverse()).unwrap();
        assert_eq!(s.conjugate_by(&o), expected);
    }

    #[test]
    fn display_and_order() {
        let p = Permutation::from_cycles(6, &[&[0, 1, 2, 3], &[4, 5]]).unwrap();
        assert_eq!(p.to_string(), "(0,1,2,3)(4,5)");
        assert_eq!(p.order(), 4);
        assert_eq!(p.pow(4), Permutation::identity(6));
        assert_eq!(Permutation::identity(2).to_string(), "()");
    }
}
