use std::collections::BTreeSet;

use super::{GroupContext, NormalSubgroup};
use crate::group::PermGroup;

/// Every normal subgroup is an intersection of kernels of irreducible
/// characters; this closes the kernels under intersection.
pub fn normal_subgroups(ctx: &GroupContext) -> Vec<NormalSubgroup> {
    let t = ctx.table();
    let all: BTreeSet<usize> = (0..t.num_classes()).collect();
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::from([all]);
    for r in 0..t.rows().len() {
        let k = t.kernel(r);
        let new: Vec<BTreeSet<usize>> = found.iter().map(|s| s & &k).collect();
        found.extend(new);
    }
    let mut out: Vec<NormalSubgroup> = found
        .into_iter()
        .map(|s| {
            let classes: Vec<usize> = s.into_iter().collect();
            let group = subgroup_from_classes(ctx, &classes);
            let order = classes.iter().map(|&c| ctx.classes().size(c)).sum();
            debug_assert_eq!(order, group.order());
            NormalSubgroup::new(classes, order, group)
        })
        .collect();
    out.sort_by(|a, b| (a.order, &a.classes).cmp(&(b.order, &b.classes)));
    out
}

fn subgroup_from_classes(ctx: &GroupContext, classes: &[usize]) -> PermGroup {
    let reps: Vec<_> = classes.iter().map(|&c| ctx.classes().rep(c).clone()).collect();
    ctx.group()
        .normal_closure(&reps)
        .expect("class representatives lie in the group")
}

fn class_set(ctx: &GroupContext, h: &PermGroup) -> Vec<usize> {
    ctx.classes().classes_inside(h)
}

/// Normal subgroups found without characters: normal closures of single
/// classes, closed under joins. Returned as sorted class-index sets.
pub fn normal_subgroups_by_lattice(ctx: &GroupContext) -> Vec<Vec<usize>> {
    let cd = ctx.classes();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = Vec::new();
    for c in 0..cd.num_classes() {
        let h = subgroup_from_classes(ctx, &[c]);
        let s = class_set(ctx, &h);
        if found.insert(s.clone()) {
            frontier.push(s);
        }
    }
    while let Some(a) = frontier.pop() {
        let snapshot: Vec<Vec<usize>> = found.iter().cloned().collect();
        for b in snapshot {
            let mut joined = a.clone();
            joined.extend(&b);
            joined.sort_unstable();
            joined.dedup();
            let h = subgroup_from_classes(ctx, &joined);
            let s = class_set(ctx, &h);
            if found.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by_key(|s| (s.iter().map(|&c| cd.size(c)).sum::<u64>(), s.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::super::testing::ctx;
    use super::*;

    fn orders(spec: &str) -> Vec<u64> {
        ctx(spec).normal_subgroups().iter().map(|n| n.order()).collect()
    }

    #[test]
    fn small_lattices() {
        assert_eq!(orders("sl:2:3"), vec![1, 2, 8, 24]);
        assert_eq!(orders("alt:5"), vec![1, 60]);
        assert_eq!(orders("sym:4"), vec![1, 4, 12, 24]);
        assert_eq!(orders("q8"), vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn pgammal29_lattice() {
        assert_eq!(orders("pgammal:2:9"), vec![1, 360, 720, 720, 720, 1440]);
    }

    #[test]
    fn kernels_match_lattice_closure() {
        for spec in ["sl:2:3", "sym:4", "direct:(cyclic:2),(alt:4)", "dihedral:6", "agammal1:8"] {
            let c = ctx(spec);
            let from_kernels: Vec<Vec<usize>> =
                c.normal_subgroups().iter().map(|n| n.classes().to_vec()).collect();
            assert_eq!(from_kernels, normal_subgroups_by_lattice(&c), "{spec}");
            for n in c.normal_subgroups() {
                assert!(n.group().is_normal_in(c.group()));
            }
        }
    }
}
