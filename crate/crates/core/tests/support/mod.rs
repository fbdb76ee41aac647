#![allow(dead_code)]

pub mod oracle;

use cosetlab::lab::{GroupContext, NormalSubgroup, Options};

pub fn ctx(spec: &str) -> GroupContext {
    GroupContext::from_spec(&spec.parse().unwrap(), Options::default()).unwrap()
}

pub fn normal_of_order(ctx: &GroupContext, order: u64) -> &NormalSubgroup {
    let mut it = ctx.normal_subgroups().iter().filter(|n| n.order() == order);
    let n = it.next().expect("normal subgroup of that order");
    assert!(it.next().is_none(), "several normal subgroups of order {order}");
    n
}

pub fn classes_outside(ctx: &GroupContext, n: &NormalSubgroup, order: u64) -> Vec<usize> {
    let cd = ctx.classes();
    (0..cd.num_classes())
        .filter(|&c| cd.element_order(c) == order && !n.contains_class(c))
        .collect()
}
