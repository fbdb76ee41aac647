use super::{Condition, GroupContext, TheoremReport, Witness};
use crate::cyclotomic::{CycAccumulator, Cyclotomic};
use crate::error::{Error, Result};

/// Relates the product `K C` of two classes to a character identity.
///
/// When `K C` is `K`, a single other class `D`, or `K ∪ D`, the structure
/// constants `a = a(K, C, K)` and `b = a(K, C, D)` satisfy the counting
/// identity `a|K| + b|D| = |K||C|`, every row satisfies
/// `|K||C| χ(x)χ(c) = χ(1)(a|K|χ(x) + b|D|χ(d))`, and conversely the
/// product is recovered from that identity through column orthogonality
/// alone. Any other product is reported as not applicable.
pub fn lemma31_check(ctx: &GroupContext, k: usize, c: usize) -> Result<TheoremReport> {
    let cd = ctx.classes();
    let r = cd.num_classes();
    if k >= r || c >= r {
        return Err(Error::Precondition(format!("class index out of range (0..{r})")));
    }
    let labels = cd.labels();
    let support: Vec<usize> = cd.class_product_support(k, c).into_iter().collect();
    let mut rep = TheoremReport::new("class-product-identity", ctx, 0, vec![k, c]);
    let names: Vec<&str> = support.iter().map(|&s| labels[s].as_str()).collect();
    rep.fact("KC", format!("{{{}}}", names.join(", ")));
    let branch = match support.as_slice() {
        [s] if *s == k => "KC = K",
        [_] => "KC = D",
        [s, t] if *s == k || *t == k => "KC = K u D",
        _ => {
            return Ok(rep.not_applicable(format!(
                "KC meets {} classes other than K",
                support.iter().filter(|&&s| s != k).count()
            )))
        }
    };
    rep.fact("branch", branch);
    let (sk, sc) = (cd.size(k) as i64, cd.size(c) as i64);
    let terms: Vec<(usize, i64)> = support
        .iter()
        .map(|&s| (s, cd.structure_constant(k, c, s) as i64))
        .collect();
    let a = terms.iter().find(|t| t.0 == k).map_or(0, |t| t.1);
    let other = terms.iter().find(|t| t.0 != k).copied();
    rep.fact("a", a);
    if let Some((d, b)) = other {
        rep.fact("D", &labels[d]);
        rep.fact("b", b);
        rep.classes.push(d);
    }

    let counted: i64 = terms.iter().map(|&(s, m)| m * cd.size(s) as i64).sum();
    rep.push(Condition::fact(
        "a|K| + b|D| = |K||C|",
        counted == sk * sc && terms.iter().all(|t| t.1 > 0),
        Witness::values(None, Cyclotomic::from_int(1, counted), Cyclotomic::from_int(1, sk * sc)),
    ));

    let t = ctx.table();
    let e = t.conductor();
    let mut ident = Condition::new("|K||C| chi(x)chi(c) = chi(1)(a|K| chi(x) + b|D| chi(d))");
    for row in 0..t.rows().len() {
        let lhs = (t.value(row, k) * t.value(row, c)).scale(sk * sc);
        let rhs = terms.iter().fold(Cyclotomic::zero(e), |acc, &(s, m)| {
            &acc + &t.value(row, s).scale(m * cd.size(s) as i64)
        });
        ident.equal(Some(row), lhs, rhs.scale(t.degree(row) as i64));
    }
    rep.push(ident);

    if let Some((d, b)) = other.filter(|&(d, _)| sk == cd.size(d) as i64 && branch == "KC = K u D") {
        let mut equal = Condition::new("|K| = |D|: a + b = |C| and |C| chi(x)chi(c) = chi(1)(a chi(x) + b chi(d))");
        equal.check(a + b == sc, Witness::note(format!("a + b = {}, |C| = {sc}", a + b)));
        for row in 0..t.rows().len() {
            let lhs = (t.value(row, k) * t.value(row, c)).scale(sc);
            let rhs = &t.value(row, k).scale(a) + &t.value(row, d).scale(b);
            equal.equal(Some(row), lhs, rhs.scale(t.degree(row) as i64));
        }
        rep.push(equal);
    }

    // α_i = (1/|G|) Σ_s m_s |C_s| Σ_χ χ(c_s) conj χ(c_i)
    let mut converse = Condition::new("KC recovered from the identity");
    for i in 0..r {
        let mut acc = CycAccumulator::new(e);
        for &(s, m) in &terms {
            let w = m as i128 * cd.size(s) as i128;
            for row in 0..t.rows().len() {
                acc.add_product(w, t.terms(row, s), t.terms(row, i), true);
            }
        }
        let alpha = acc.finish(ctx.order() as i128);
        let want = cd.structure_constant(k, c, i) as i64;
        let ok = alpha == Cyclotomic::from_int(1, want);
        converse.check(ok, Witness::values(None, alpha, Cyclotomic::from_int(1, want)).with_classes(vec![i]));
    }
    rep.push(converse);
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::super::testing::{ctx, normal_of_order, reps_of_order};
    use super::super::Outcome;
    use super::*;

    #[test]
    fn identity_class_gives_k() {
        let c = ctx("sym:4");
        for k in 0..c.classes().num_classes() {
            let r = lemma31_check(&c, k, 0).unwrap();
            assert!(r.passed(), "{r:#?}");
            assert_eq!(r.get_fact("branch"), Some("KC = K"));
            assert_eq!(r.get_fact("a"), Some("1"));
        }
    }

    #[test]
    fn sl23_central_class_gives_single_other() {
        let c = ctx("sl:2:3");
        let n = normal_of_order(&c, 8);
        let z = 1;
        assert_eq!((c.classes().size(z), c.classes().element_order(z)), (1, 2));
        for k in reps_of_order(&c, n, 3) {
            let r = lemma31_check(&c, k, z).unwrap();
            assert!(r.passed(), "{r:#?}");
            assert_eq!(r.get_fact("branch"), Some("KC = D"));
            let d = *r.classes.last().unwrap();
            assert_eq!(c.classes().element_order(d), 6);
        }
    }

    #[test]
    fn agammal18_union_branch_matches_extension_value() {
        let c = ctx("agammal1:8");
        let n = normal_of_order(&c, 56);
        let k = reps_of_order(&c, n, 3)[0];
        assert_eq!(c.classes().size(k), 28);
        let t = c.table();
        let hat = t.degrees().iter().position(|&d| d == 7).unwrap();
        let mut seen = Vec::new();
        for &cc in n.classes().iter().skip(1) {
            let r = lemma31_check(&c, k, cc).unwrap();
            assert!(r.passed(), "{r:#?}");
            assert_eq!(r.get_fact("branch"), Some("KC = K u D"));
            let a: i64 = r.get_fact("a").unwrap().parse().unwrap();
            let b: i64 = r.get_fact("b").unwrap().parse().unwrap();
            let size = c.classes().size(cc) as i64;
            assert_eq!(a + b, size);
            // |C| chi(c) = (a - b) chi(1) for the extension of degree 7
            assert_eq!(t.value(hat, cc).scale(size), Cyclotomic::from_int(1, 7 * (a - b)));
            seen.push((c.classes().element_order(cc), a, b));
        }
        seen.sort();
        assert_eq!(seen, vec![(2, 3, 4), (7, 12, 12), (7, 12, 12)]);
    }

    #[test]
    fn large_products_are_not_applicable() {
        let c = ctx("alt:5");
        let r = lemma31_check(&c, 3, 3).unwrap();
        assert_eq!(r.outcome, Outcome::NotApplicable);
    }
}
