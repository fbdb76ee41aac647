use std::collections::BTreeSet;

use num_rational::Ratio;

use super::coset::classify_coset;
use super::extend::{find_extending_characters, rows_over};
use super::{Condition, GroupContext, NormalSubgroup, TheoremReport, Witness};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Consequences of a nontrivial character `θ` of `N` extending to `G` when
/// `Nx` lies in two classes. With `theta = None` the first nontrivial
/// extendible character is used. Not applicable when none extends.
pub fn verify_thm_b(
    ctx: &GroupContext,
    n: &NormalSubgroup,
    x: &Permutation,
    theta: Option<usize>,
) -> Result<TheoremReport> {
    let a = classify_coset(ctx, n, x)?;
    let (k, d) = a
        .two_classes()
        .ok_or_else(|| Error::Precondition(format!("the coset of {x} does not lie in exactly two classes")))?;
    let mut rep = TheoremReport::new("extension-consequences", ctx, n.order(), vec![k, d]);
    let exts = find_extending_characters(ctx, n)?;
    let nontrivial: Vec<_> = exts.iter().filter(|e| e.theta != 0).collect();
    let chosen = match theta {
        Some(t) => exts.iter().find(|e| e.theta == t).ok_or_else(|| {
            Error::Precondition(format!("character {t} of N does not extend to G"))
        })?,
        None => match nontrivial.first() {
            Some(e) => e,
            None => return Ok(rep.not_applicable("no nontrivial character of N extends to G")),
        },
    };
    if chosen.theta == 0 {
        return Err(Error::Precondition("theta must be nontrivial".into()));
    }
    let t = ctx.table();
    let e = t.conductor();
    let cd = ctx.classes();
    rep.fact("theta", chosen.theta);
    rep.fact("theta(1)", chosen.degree);
    rep.fact("extensions", format!("{:?}", chosen.extensions));

    let (sk, sd) = (cd.size(k), cd.size(d));
    rep.push(Condition::fact(
        "1: |K| = |D|",
        sk == sd,
        Witness::values(None, Cyclotomic::from_int(1, sk as i64), Cyclotomic::from_int(1, sd as i64))
            .with_classes(vec![k, d]),
    ));

    let mut c2 = Condition::new("2: |chi(x)| = 1 and chi(x) = -chi(d) for every extension");
    for &r in &chosen.extensions {
        c2.equal(Some(r), t.value(r, k).abs_square(), Cyclotomic::one(e));
        c2.equal(Some(r), t.value(r, k).clone(), -t.value(r, d));
    }
    rep.push(c2);

    let hat = chosen.extensions[0];
    let quotient = ctx.rows_over_quotient(n);
    let over_theta: BTreeSet<usize> = rows_over(ctx, n, chosen.theta)?.into_iter().collect();
    let mut gallagher = Condition::new("2: every row over theta is theta_hat * beta");
    let mut produced = BTreeSet::new();
    for &beta in &quotient {
        let p = t.product_row(hat, beta);
        let norm = t.norm(&p);
        let found = t.find_row(&p);
        let ok = norm == Some(Ratio::from_integer(1)) && found.is_some() && produced.insert(found.unwrap());
        gallagher.check(
            ok,
            Witness::note(format!(
                "beta = {beta}: norm {}, row {}",
                norm.map_or("not rational".into(), |q| q.to_string()),
                found.map_or("none".into(), |r| r.to_string())
            ))
            .with_classes(vec![hat, beta]),
        );
    }
    gallagher.check(
        produced == over_theta,
        Witness::note(format!("products {produced:?}, rows over theta {over_theta:?}")),
    );
    rep.push(gallagher);

    let mut c3 = Condition::new("3: psi(x) = psi(d) = 0 off theta and 1_N");
    for r in 0..t.rows().len() {
        if quotient.contains(&r) || over_theta.contains(&r) {
            continue;
        }
        c3.equal(Some(r), t.value(r, k).clone(), Cyclotomic::zero(e));
        c3.equal(Some(r), t.value(r, d).clone(), Cyclotomic::zero(e));
    }
    rep.push(c3);

    let others: Vec<usize> = nontrivial.iter().map(|e| e.theta).collect();
    rep.push(Condition::fact(
        "3: theta is the only nontrivial extendible character",
        others == [chosen.theta],
        Witness::note(format!("nontrivial extendible characters of N: {others:?}")),
    ));
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::super::coset::coset_representatives;
    use super::super::testing::{ctx, normal_of_order, reps_of_order};
    use super::super::Outcome;
    use super::*;

    #[test]
    fn sl23_degree_two() {
        let c = ctx("sl:2:3");
        let n = normal_of_order(&c, 8);
        for x in coset_representatives(&c, n).unwrap() {
            let r = verify_thm_b(&c, n, &x, None).unwrap();
            assert!(r.passed(), "{r:#?}");
            assert_eq!(r.get_fact("theta(1)"), Some("2"));
        }
    }

    #[test]
    fn no_extender_is_not_applicable() {
        let c = ctx("direct:(cyclic:2),(alt:4)");
        let n = normal_of_order(&c, 4);
        let z = reps_of_order(&c, n, 2)
            .into_iter()
            .find(|&k| c.classes().size(k) == 1)
            .unwrap();
        let r = verify_thm_b(&c, n, c.classes().rep(z), None).unwrap();
        assert_eq!(r.outcome, Outcome::NotApplicable);
    }
}
