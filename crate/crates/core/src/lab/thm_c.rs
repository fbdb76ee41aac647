use super::chief::chief_series_through;
use super::coset::{classify_coset, Verdict};
use super::extend::find_extending_characters;
use super::thm_b::verify_thm_b;
use super::{Condition, GroupContext, NormalSubgroup, TheoremReport, Witness};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Structure forced on a nonsolvable `N` when `Nx` lies in two classes:
/// `|K| = |D|`, and every nonabelian chief factor inside `N` is a power of
/// a simple group of Lie type in odd characteristic. When `N` itself is a
/// minimal normal subgroup, the Steinberg character is located by degree
/// and the extension consequences are checked for it.
pub fn verify_thm_c(ctx: &GroupContext, n: &NormalSubgroup, x: &Permutation) -> Result<TheoremReport> {
    let a = classify_coset(ctx, n, x)?;
    let (k, d) = match a.verdict {
        Verdict::InTwoClasses { k, d } => (k, d),
        Verdict::InSingleClass { .. } if !n.is_solvable() => {
            return Err(Error::CitedResultViolated(format!(
                "coset of {x} lies in one class but N of order {} is not solvable",
                n.order()
            )))
        }
        _ => {
            return Err(Error::Precondition(format!(
                "the coset of {x} does not lie in exactly two classes"
            )))
        }
    };
    let rep = TheoremReport::new("nonsolvable-structure", ctx, n.order(), vec![k, d]);
    if n.is_solvable() {
        return Ok(rep.not_applicable("N is solvable"));
    }
    let mut rep = rep;
    let cd = ctx.classes();
    let (sk, sd) = (cd.size(k), cd.size(d));
    rep.fact("|K|", sk);
    rep.fact("|D|", sd);
    rep.push(Condition::fact(
        "|K| = |D|",
        sk == sd,
        Witness::values(None, Cyclotomic::from_int(1, sk as i64), Cyclotomic::from_int(1, sd as i64))
            .with_classes(vec![k, d]),
    ));

    let normals = ctx.normal_subgroups();
    let idx = normals
        .iter()
        .position(|m| m.classes() == n.classes())
        .ok_or(Error::NotNormal)?;
    let series = chief_series_through(ctx, idx)?;
    let inside: Vec<_> = series.iter().filter(|f| f.inside_n && !f.abelian).collect();
    let mut lie = Condition::new("nonabelian chief factors in N are S^k, S of Lie type in odd characteristic");
    for f in &inside {
        let r = f.recognition.as_ref();
        let name = r.and_then(|r| r.name.clone()).unwrap_or_else(|| "unrecognized".into());
        let power = r.map_or(0, |r| r.power);
        rep.fact("chief factor", format!("{name}^{power} (order {})", f.order));
        lie.check(
            r.is_some_and(|r| r.name.is_some() && r.odd_lie_type()),
            Witness::note(format!(
                "factor of order {}: {name}, power {power}, characteristics {:?}",
                f.order,
                r.map(|r| r.lie_characteristics.clone()).unwrap_or_default()
            )),
        );
    }
    rep.push(lie);

    let minimal = series.first().is_some_and(|f| f.upper == idx);
    let theta = if minimal {
        let f = &series[0];
        let st = f
            .recognition
            .as_ref()
            .and_then(|r| r.steinberg_degree.map(|q| q.pow(r.power)));
        let sub = n.subgroup_table(ctx)?;
        let rows: Vec<usize> = match st {
            Some(q) => (0..sub.table.rows().len()).filter(|&r| sub.table.degree(r) == q).collect(),
            None => Vec::new(),
        };
        rep.fact("Steinberg degree", st.map_or("none".into(), |q| q.to_string()));
        rep.push(Condition::fact(
            "the Steinberg degree occurs exactly once in Irr(N)",
            rows.len() == 1,
            Witness::note(format!("rows of N of degree {st:?}: {rows:?}")),
        ));
        let exts = find_extending_characters(ctx, n)?;
        let nontrivial: Vec<usize> = exts.iter().skip(1).map(|e| e.theta).collect();
        rep.push(Condition::fact(
            "the Steinberg character is the unique nontrivial extendible character",
            rows.len() == 1 && nontrivial == rows,
            Witness::note(format!("extendible: {nontrivial:?}")),
        ));
        match rows.as_slice() {
            [t] if nontrivial.contains(t) => Some(*t),
            _ => None,
        }
    } else {
        None
    };

    let b = verify_thm_b(ctx, n, x, theta)?;
    rep.push(Condition::fact(
        "some nontrivial character of N extends to G",
        b.outcome != super::Outcome::NotApplicable,
        Witness::note(match b.get_fact("theta") {
            Some(t) => format!("theta = {t}"),
            None => b.reason.clone(),
        }),
    ));
    if let Some(t) = b.get_fact("theta") {
        rep.fact("theta", t);
    }
    if minimal && theta.is_some() {
        let t = ctx.table();
        let mut ca = Condition::new("corollary a: chi(x) = chi(d) on Irr(G/N)");
        for r in ctx.rows_over_quotient(n) {
            ca.equal(Some(r), t.value(r, k).clone(), t.value(r, d).clone());
        }
        rep.push(ca);
        let mut cb = Condition::new("corollary b: |theta_hat(x)| = |theta_hat(d)| = 1, theta_hat(x) = -theta_hat(d), rows over theta are theta_hat * beta");
        for name in [
            "2: |chi(x)| = 1 and chi(x) = -chi(d) for every extension",
            "2: every row over theta is theta_hat * beta",
        ] {
            if let Some(c) = b.condition(name) {
                cb.holds &= c.holds;
                cb.witnesses.extend(c.witnesses.iter().cloned());
            }
        }
        let e = t.conductor();
        let exts = find_extending_characters(ctx, n)?;
        if let Some(ext) = exts.iter().find(|x| Some(x.theta) == theta) {
            for &r in &ext.extensions {
                cb.equal(Some(r), t.value(r, d).abs_square(), Cyclotomic::one(e));
            }
        }
        rep.push(cb);
        let mut cc = Condition::new("corollary c: chi(x) = chi(d) = 0 off theta and 1_N");
        if let Some(c) = b.condition("3: psi(x) = psi(d) = 0 off theta and 1_N") {
            cc.holds &= c.holds;
            cc.witnesses.extend(c.witnesses.iter().cloned());
        }
        rep.push(cc);
    }
    for c in b.conditions {
        rep.push(Condition {
            name: format!("extension: {}", c.name),
            ..c
        });
    }
    Ok(rep.finish())
}
