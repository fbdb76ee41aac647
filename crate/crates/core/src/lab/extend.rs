use serde::{Deserialize, Serialize};

use super::{GroupContext, NormalSubgroup};
use crate::chartable::restrict_and_decompose;
use crate::error::Result;

/// A character `θ` of `N` and the characters of `G` restricting to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub theta: usize,
    pub degree: u64,
    pub extensions: Vec<usize>,
}

/// Every `θ ∈ Irr(N)` with at least one extension to `G`, with all of
/// its extensions. `θ = 1_N` always appears first.
pub fn find_extending_characters(ctx: &GroupContext, n: &NormalSubgroup) -> Result<Vec<Extension>> {
    let sub = n.subgroup_table(ctx)?;
    let (tg, tn) = (ctx.table(), &sub.table);
    let mut by_theta: Vec<Vec<usize>> = vec![Vec::new(); tn.rows().len()];
    for row in 0..tg.rows().len() {
        let parts = restrict_and_decompose(tg, tn, &sub.fusion, row)?;
        let &[(theta, 1)] = parts.as_slice() else { continue };
        if tn.degree(theta) != tg.degree(row) {
            continue;
        }
        let pointwise = sub
            .fusion
            .iter()
            .enumerate()
            .all(|(i, &c)| tg.value(row, c) == tn.value(theta, i));
        if pointwise {
            by_theta[theta].push(row);
        }
    }
    Ok(by_theta
        .into_iter()
        .enumerate()
        .filter(|(_, e)| !e.is_empty())
        .map(|(theta, extensions)| Extension {
            theta,
            degree: tn.degree(theta),
            extensions,
        })
        .collect())
}

/// Rows of `G` whose restriction to `N` contains `θ`.
pub(crate) fn rows_over(ctx: &GroupContext, n: &NormalSubgroup, theta: usize) -> Result<Vec<usize>> {
    let sub = n.subgroup_table(ctx)?;
    let mut out = Vec::new();
    for row in 0..ctx.table().rows().len() {
        let parts = restrict_and_decompose(ctx.table(), &sub.table, &sub.fusion, row)?;
        if parts.iter().any(|&(t, _)| t == theta) {
            out.push(row);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::testing::{ctx, normal_of_order};
    use super::*;

    fn nontrivial(exts: &[Extension]) -> Vec<u64> {
        exts.iter().skip(1).map(|e| e.degree).collect()
    }

    #[test]
    fn principal_character_always_extends() {
        let c = ctx("sym:4");
        for n in c.normal_subgroups() {
            let exts = find_extending_characters(&c, n).unwrap();
            assert_eq!(exts[0].theta, 0);
            assert_eq!(exts[0].extensions[0], 0);
        }
    }

    #[test]
    fn example_extenders() {
        let c = ctx("direct:(cyclic:2),(alt:4)");
        let exts = find_extending_characters(&c, normal_of_order(&c, 4)).unwrap();
        assert_eq!(exts.len(), 1);

        let c = ctx("sl:2:3");
        let exts = find_extending_characters(&c, normal_of_order(&c, 8)).unwrap();
        assert_eq!(nontrivial(&exts), vec![2]);
        assert_eq!(exts[1].extensions.len(), 3);
    }

    #[test]
    fn restriction_multiplicities_sl23() {
        let c = ctx("sl:2:3");
        let n = normal_of_order(&c, 8);
        let sub = n.subgroup_table(&c).unwrap();
        let d3 = c.table().degrees().iter().position(|&d| d == 3).unwrap();
        let parts = restrict_and_decompose(c.table(), &sub.table, &sub.fusion, d3).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|&(t, m)| m == 1 && sub.table.degree(t) == 1 && t != 0));
        let parts = restrict_and_decompose(c.table(), &sub.table, &sub.fusion, 0).unwrap();
        assert_eq!(parts, vec![(0, 1)]);
    }
}
