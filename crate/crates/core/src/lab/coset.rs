use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{GroupContext, NormalSubgroup};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Which classes of `G` a coset `Nx` meets. `k` is always the class of
/// `x` itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    InSingleClass { k: usize },
    InTwoClasses { k: usize, d: usize },
    Spread { classes: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetAnalysis {
    pub group: String,
    pub normal_order: u64,
    pub normal_classes: Vec<usize>,
    pub rep: String,
    pub rep_order: u64,
    pub verdict: Verdict,
    /// `(class, label, class size, elements of Nx in the class)`, class of
    /// `x` first.
    pub meets: Vec<(usize, String, u64, u64)>,
    pub quotient_centralizer: u64,
}

impl CosetAnalysis {
    pub fn two_classes(&self) -> Option<(usize, usize)> {
        match self.verdict {
            Verdict::InTwoClasses { k, d } => Some((k, d)),
            _ => None,
        }
    }

    pub fn size_of(&self, class: usize) -> Option<u64> {
        self.meets.iter().find(|m| m.0 == class).map(|m| m.2)
    }
}

pub fn classify_coset(ctx: &GroupContext, n: &NormalSubgroup, x: &Permutation) -> Result<CosetAnalysis> {
    let cd = ctx.classes();
    let k = cd.class_of(x).ok_or(Error::NotMember)?;
    if n.group().contains(x) {
        return Err(Error::Precondition(format!("{x} lies in the normal subgroup")));
    }
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for m in n.group().elements_with_cap(ctx.options().element_cap)? {
        let y = m.compose(x)?;
        *counts.entry(cd.class_of(&y).expect("coset lies in G")).or_default() += 1;
    }
    let mut others: Vec<usize> = counts.keys().copied().filter(|&c| c != k).collect();
    let verdict = match others.len() {
        0 => Verdict::InSingleClass { k },
        1 => Verdict::InTwoClasses { k, d: others[0] },
        _ => {
            others.insert(0, k);
            Verdict::Spread { classes: others.clone() }
        }
    };
    let labels = cd.labels();
    let mut order: Vec<usize> = vec![k];
    order.extend(counts.keys().copied().filter(|&c| c != k));
    let meets = order
        .into_iter()
        .map(|c| (c, labels[c].clone(), cd.size(c), counts[&c]))
        .collect();
    let cosets = n.cosets(ctx)?;
    let idx = ctx.group().index_of(x)?.ok_or(Error::NotMember)?;
    let coset = cosets.image.coset_of(idx);
    let orbit = cosets.orbit_of[coset];
    let quotient_centralizer = (cosets.image.num_cosets() / cosets.orbits[orbit].len()) as u64;
    Ok(CosetAnalysis {
        group: ctx.name().to_string(),
        normal_order: n.order(),
        normal_classes: n.classes().to_vec(),
        rep: x.to_string(),
        rep_order: x.order(),
        verdict,
        meets,
        quotient_centralizer,
    })
}

/// One element from each conjugacy class of nontrivial cosets in `G/N`:
/// the element of least order, ties broken by the permutation order.
pub fn coset_representatives(ctx: &GroupContext, n: &NormalSubgroup) -> Result<Vec<Permutation>> {
    let cosets = n.cosets(ctx)?;
    let trivial = cosets.orbit_of[0];
    let mut best: Vec<Option<(u64, &Permutation)>> = vec![None; cosets.orbits.len()];
    for (i, g) in ctx.group().elements()?.iter().enumerate() {
        let o = cosets.orbit_of[cosets.image.coset_of(i)];
        if o == trivial {
            continue;
        }
        let key = (g.order(), g);
        if best[o].is_none_or(|b| key < b) {
            best[o] = Some(key);
        }
    }
    Ok(best.into_iter().flatten().map(|(_, g)| g.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::super::testing::{ctx, normal_of_order, reps_of_order};
    use super::*;

    #[test]
    fn sym3_transposition_coset() {
        let c = ctx("sym:3");
        let n = normal_of_order(&c, 3);
        let reps = coset_representatives(&c, n).unwrap();
        assert_eq!(reps.len(), 1);
        let a = classify_coset(&c, n, &reps[0]).unwrap();
        assert!(matches!(a.verdict, Verdict::InSingleClass { .. }));
        assert_eq!(a.meets[0].2, 3);
        assert_eq!(a.quotient_centralizer, 2);
    }

    #[test]
    fn central_involution_over_v4() {
        let c = ctx("direct:(cyclic:2),(alt:4)");
        let n = normal_of_order(&c, 4);
        let z = reps_of_order(&c, n, 2)
            .into_iter()
            .find(|&k| c.classes().size(k) == 1)
            .unwrap();
        let a = classify_coset(&c, n, c.classes().rep(z)).unwrap();
        let (k, d) = a.two_classes().unwrap();
        assert_eq!((a.size_of(k), a.size_of(d)), (Some(1), Some(3)));
        assert_eq!(a.quotient_centralizer, 6);
    }

    #[test]
    fn sl23_order_three_cosets() {
        let c = ctx("sl:2:3");
        let n = normal_of_order(&c, 8);
        let reps = coset_representatives(&c, n).unwrap();
        assert_eq!(reps.len(), 2);
        for x in &reps {
            assert_eq!(x.order(), 3);
            let a = classify_coset(&c, n, x).unwrap();
            let (k, d) = a.two_classes().unwrap();
            assert_eq!((a.size_of(k), a.size_of(d)), (Some(4), Some(4)));
            assert_eq!(c.classes().element_order(d), 6);
        }
    }

    #[test]
    fn members_of_n_are_rejected() {
        let c = ctx("sym:3");
        let n = normal_of_order(&c, 3);
        assert!(matches!(
            classify_coset(&c, n, c.classes().rep(0)),
            Err(Error::Precondition(_))
        ));
    }
}
