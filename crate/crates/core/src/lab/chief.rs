use serde::{Deserialize, Serialize};

use super::{GroupContext, NormalSubgroup};
use crate::error::{Error, Result};

/// A nonabelian simple group of order at most 60 000.
#[derive(Clone, Copy, Debug)]
pub struct SimpleGroup {
    pub name: &'static str,
    pub order: u64,
    pub classes: usize,
    /// `(characteristic, Steinberg degree)` for each way the group is of
    /// Lie type; empty for alternating and sporadic groups.
    pub lie: &'static [(u64, u64)],
}

const fn sg(name: &'static str, order: u64, classes: usize, lie: &'static [(u64, u64)]) -> SimpleGroup {
    SimpleGroup {
        name,
        order,
        classes,
        lie,
    }
}

/// Alt(5) is listed only as PSL(2,4), and Alt(6) as PSL(2,9).
pub const SIMPLE_GROUPS: &[SimpleGroup] = &[
    sg("PSL(2,4)", 60, 5, &[(2, 4)]),
    sg("PSL(2,7)", 168, 6, &[(7, 7), (2, 8)]),
    sg("PSL(2,9)", 360, 7, &[(3, 9)]),
    sg("PSL(2,8)", 504, 9, &[(2, 8)]),
    sg("PSL(2,11)", 660, 8, &[(11, 11)]),
    sg("PSL(2,13)", 1092, 9, &[(13, 13)]),
    sg("PSL(2,17)", 2448, 11, &[(17, 17)]),
    sg("Alt(7)", 2520, 9, &[]),
    sg("PSL(2,19)", 3420, 12, &[(19, 19)]),
    sg("PSL(2,16)", 4080, 17, &[(2, 16)]),
    sg("PSL(3,3)", 5616, 12, &[(3, 27)]),
    sg("PSU(3,3)", 6048, 14, &[(3, 27)]),
    sg("PSL(2,23)", 6072, 14, &[(23, 23)]),
    sg("PSL(2,25)", 7800, 15, &[(5, 25)]),
    sg("M11", 7920, 10, &[]),
    sg("PSL(2,27)", 9828, 16, &[(3, 27)]),
    sg("PSL(2,29)", 12180, 17, &[(29, 29)]),
    sg("PSL(2,31)", 14880, 18, &[(31, 31)]),
    sg("Alt(8)", 20160, 14, &[(2, 64)]),
    sg("PSL(3,4)", 20160, 10, &[(2, 64)]),
    sg("PSL(2,37)", 25308, 21, &[(37, 37)]),
    sg("PSU(4,2)", 25920, 20, &[(2, 64), (3, 81)]),
    sg("Sz(8)", 29120, 11, &[(2, 64)]),
    sg("PSL(2,32)", 32736, 33, &[(2, 32)]),
    sg("PSL(2,41)", 34440, 23, &[(41, 41)]),
    sg("PSL(2,43)", 39732, 24, &[(43, 43)]),
    sg("PSL(2,47)", 51888, 26, &[(47, 47)]),
    sg("PSL(2,49)", 58800, 27, &[(7, 49)]),
];

/// Largest order covered by [`SIMPLE_GROUPS`].
pub const RECOGNITION_LIMIT: u64 = 60_000;

/// What a nonabelian chief factor `S^k` was recognized as.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recognition {
    /// `None` when unrecognized.
    pub name: Option<String>,
    pub power: u32,
    pub lie_characteristics: Vec<u64>,
    /// Steinberg degree of `S` for its odd characteristic, if any.
    pub steinberg_degree: Option<u64>,
    /// Names sharing the order, when the order alone was ambiguous.
    pub candidates: Vec<String>,
}

impl Recognition {
    pub fn odd_lie_type(&self) -> bool {
        self.lie_characteristics.iter().any(|p| p % 2 == 1)
    }

    fn unrecognized(candidates: Vec<String>) -> Self {
        Recognition {
            name: None,
            power: 0,
            lie_characteristics: Vec::new(),
            steinberg_degree: None,
            candidates,
        }
    }
}

/// Looks up `S^k` of the given order and class count. Equal orders are
/// told apart by class count; anything left ambiguous is unrecognized.
pub fn recognize(order: u64, classes: usize, simple: bool) -> Recognition {
    let mut powers: Vec<(&SimpleGroup, u32)> = Vec::new();
    for s in SIMPLE_GROUPS {
        let (mut m, mut k) = (1u64, 0u32);
        while m < order {
            m = match m.checked_mul(s.order) {
                Some(v) => v,
                None => break,
            };
            k += 1;
        }
        if m == order && (k == 1) == simple {
            powers.push((s, k));
        }
    }
    let names: Vec<String> = powers.iter().map(|(s, _)| s.name.to_string()).collect();
    let matching: Vec<_> = powers
        .iter()
        .filter(|(s, k)| (s.classes as u64).checked_pow(*k) == Some(classes as u64))
        .collect();
    match matching.as_slice() {
        [(s, k)] => Recognition {
            name: Some(s.name.to_string()),
            power: *k,
            lie_characteristics: s.lie.iter().map(|l| l.0).collect(),
            steinberg_degree: s.lie.iter().find(|l| l.0 % 2 == 1).map(|l| l.1),
            candidates: if names.len() > 1 { names } else { Vec::new() },
        },
        _ => Recognition::unrecognized(names),
    }
}

/// One factor `L/M` of a chief series; `lower` and `upper` index
/// [`GroupContext::normal_subgroups`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiefFactor {
    pub lower: usize,
    pub upper: usize,
    pub order: u64,
    pub abelian: bool,
    pub inside_n: bool,
    /// Nonabelian factors only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recognition: Option<Recognition>,
}

fn subset(a: &NormalSubgroup, b: &NormalSubgroup) -> bool {
    a.classes().iter().all(|c| b.contains_class(*c))
}

/// A chief series of `G` passing through the normal subgroup with index
/// `n` in [`GroupContext::normal_subgroups`]: each step goes to the
/// smallest normal subgroup properly containing the previous one.
pub fn chief_series_through(ctx: &GroupContext, n: usize) -> Result<Vec<ChiefFactor>> {
    let normals = ctx.normal_subgroups();
    if n >= normals.len() {
        return Err(Error::Precondition(format!("no normal subgroup #{n}")));
    }
    let top = normals.len() - 1;
    let mut chain = vec![0usize];
    for target in [n, top] {
        while *chain.last().unwrap() != target {
            let m = *chain.last().unwrap();
            let next = (0..normals.len())
                .find(|&l| {
                    l != m
                        && normals[l].order() > normals[m].order()
                        && subset(&normals[m], &normals[l])
                        && subset(&normals[l], &normals[target])
                })
                .expect("target lies above the current term");
            chain.push(next);
        }
    }
    chain
        .windows(2)
        .map(|w| factor(ctx, w[0], w[1], subset(&normals[w[1]], &normals[n])))
        .collect()
}

fn factor(ctx: &GroupContext, lower: usize, upper: usize, inside_n: bool) -> Result<ChiefFactor> {
    let normals = ctx.normal_subgroups();
    let (m, l) = (&normals[lower], &normals[upper]);
    let order = l.order() / m.order();
    let abelian = l.group().derived_subgroup().generators().iter().all(|g| m.group().contains(g));
    let mut f = ChiefFactor {
        lower,
        upper,
        order,
        abelian,
        inside_n,
        simple: None,
        classes: None,
        recognition: None,
    };
    if abelian {
        return Ok(f);
    }
    // characters of L/M are the rows of L with M in the kernel
    let sub = l.subgroup_table(ctx)?;
    let inside_m: Vec<usize> = sub.cd.classes_inside(m.group());
    let rows: Vec<usize> = (0..sub.table.rows().len())
        .filter(|&r| sub.table.kernel_contains(r, &inside_m))
        .collect();
    let simple = rows
        .iter()
        .skip(1)
        .all(|&r| sub.table.kernel(r).into_iter().collect::<Vec<_>>() == inside_m);
    f.simple = Some(simple);
    f.classes = Some(rows.len());
    if order <= RECOGNITION_LIMIT.pow(2) {
        f.recognition = Some(recognize(order, rows.len(), simple));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::super::testing::ctx;
    use super::*;

    #[test]
    fn table_orders_are_consistent() {
        for s in SIMPLE_GROUPS {
            for &(p, st) in s.lie {
                assert_eq!(s.order % st, 0, "{}", s.name);
                let mut q = st;
                while q % p == 0 {
                    q /= p;
                }
                assert_eq!(q, 1, "{}", s.name);
                assert_ne!((s.order / st) % p, 0, "{}", s.name);
            }
        }
    }

    #[test]
    fn collisions_resolved_by_class_count() {
        assert_eq!(recognize(20160, 14, true).name.as_deref(), Some("Alt(8)"));
        assert_eq!(recognize(20160, 10, true).name.as_deref(), Some("PSL(3,4)"));
        let r = recognize(20160, 11, true);
        assert_eq!(r.name, None);
        assert_eq!(r.candidates.len(), 2);
        assert_eq!(recognize(3600, 25, false).power, 2);
        assert_eq!(recognize(61, 61, true).name, None);
    }

    #[test]
    fn solvable_groups_have_abelian_factors() {
        let c = ctx("sl:2:3");
        let f = chief_series_through(&c, 2).unwrap();
        assert_eq!(f.iter().map(|f| f.order).collect::<Vec<_>>(), vec![2, 4, 3]);
        assert!(f.iter().all(|f| f.abelian));
    }

    #[test]
    fn pgammal29_through_psl29() {
        let c = ctx("pgammal:2:9");
        let n = c.normal_subgroups().iter().position(|n| n.order() == 360).unwrap();
        let f = chief_series_through(&c, n).unwrap();
        assert_eq!(f.len(), 3);
        let r = f[0].recognition.as_ref().unwrap();
        assert_eq!(f[0].simple, Some(true));
        assert_eq!(r.name.as_deref(), Some("PSL(2,9)"));
        assert!(r.odd_lie_type());
        assert_eq!(r.steinberg_degree, Some(9));
        assert!(f[1..].iter().all(|f| f.abelian && !f.inside_n));
    }

    #[test]
    fn alt5_is_characteristic_two() {
        let c = ctx("sym:5");
        let f = chief_series_through(&c, 1).unwrap();
        let r = f[0].recognition.as_ref().unwrap();
        assert_eq!(r.name.as_deref(), Some("PSL(2,4)"));
        assert!(!r.odd_lie_type());
    }
}
