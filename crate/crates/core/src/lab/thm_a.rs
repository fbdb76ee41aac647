use std::collections::BTreeSet;

use num_rational::Ratio;

use super::coset::{classify_coset, CosetAnalysis, Verdict};
use super::{Condition, GroupContext, NormalSubgroup, TheoremReport, Witness};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Classes met by the product set `N c^G`, from counted structure
/// constants.
pub(crate) fn support_times_n(ctx: &GroupContext, n: &NormalSubgroup, c: usize) -> BTreeSet<usize> {
    let cd = ctx.classes();
    n.classes()
        .iter()
        .flat_map(|&m| cd.class_product_support(m, c))
        .collect()
}

/// Same as [`support_times_n`], with each structure constant taken from
/// the character formula instead of a count.
fn support_times_n_from_characters(ctx: &GroupContext, n: &NormalSubgroup, c: usize) -> BTreeSet<usize> {
    let t = ctx.table();
    let mut out = BTreeSet::new();
    for &m in n.classes() {
        for k in 0..t.num_classes() {
            if !t.structure_constant_from_characters(m, c, k).is_zero() {
                out.insert(k);
            }
        }
    }
    out
}

/// The three character conditions of the equivalence for the pair
/// `(K, D)` of classes, evaluated from the table alone.
struct CharacterSide {
    equal_on_quotient: Condition,
    weighted_sum_vanishes: Condition,
    centralizer: Condition,
}

/// `|C_{G/N}(Nx)| = Σ_{χ ∈ Irr(G/N)} |χ(x)|²`, read off the table.
pub(crate) fn quotient_centralizer_from_characters(ctx: &GroupContext, n: &NormalSubgroup, k: usize) -> Cyclotomic {
    let t = ctx.table();
    ctx.rows_over_quotient(n)
        .into_iter()
        .fold(Cyclotomic::zero(t.conductor()), |acc, r| &acc + &t.value(r, k).abs_square())
}

fn character_side(ctx: &GroupContext, n: &NormalSubgroup, k: usize, d: usize) -> CharacterSide {
    let t = ctx.table();
    let cd = ctx.classes();
    let e = t.conductor();
    let (sk, sd) = (cd.size(k) as i64, cd.size(d) as i64);
    let mut c1 = Condition::new("c1: chi(x) = chi(d) on Irr(G/N)");
    let mut c2 = Condition::new("c2: |K| chi(x) + |D| chi(d) = 0 on Irr(G|N)");
    for r in 0..t.rows().len() {
        let (vx, vd) = (t.value(r, k), t.value(r, d));
        if t.kernel_contains(r, n.classes()) {
            c1.equal(Some(r), vx.clone(), vd.clone());
        } else {
            c2.equal(Some(r), &vx.scale(sk) + &vd.scale(sd), Cyclotomic::zero(e));
        }
    }
    let mut c3 = Condition::new("c3: |C_{G/N}(Nx)| = |G| / (|K| + |D|)");
    c3.equal(
        None,
        quotient_centralizer_from_characters(ctx, n, k),
        Cyclotomic::from_rational(1, Ratio::new(ctx.order() as i64, sk + sd)),
    );
    CharacterSide {
        equal_on_quotient: c1,
        weighted_sum_vanishes: c2,
        centralizer: c3,
    }
}

fn set_note(s: &BTreeSet<usize>, labels: &[String]) -> String {
    let names: Vec<&str> = s.iter().map(|&c| labels[c].as_str()).collect();
    format!("{{{}}}", names.join(", "))
}

fn two_classes(a: &CosetAnalysis) -> Result<(usize, usize)> {
    a.two_classes().ok_or_else(|| {
        Error::Precondition(format!("the coset of {} does not lie in exactly two classes ({:?})", a.rep, a.verdict))
    })
}

/// Checks every condition of the equivalence for a coset that lies in
/// exactly two classes, and re-derives the product-set condition from the
/// character table alone.
pub fn verify_thm_a(ctx: &GroupContext, n: &NormalSubgroup, x: &Permutation) -> Result<TheoremReport> {
    let a = classify_coset(ctx, n, x)?;
    let (k, d) = two_classes(&a)?;
    let labels = ctx.classes().labels();
    let mut rep = TheoremReport::new("coset-in-two-classes", ctx, n.order(), vec![k, d]);
    rep.fact("K", &labels[k]);
    rep.fact("D", &labels[d]);
    rep.fact("|K|", ctx.classes().size(k));
    rep.fact("|D|", ctx.classes().size(d));

    let in_k = a.meets[0].3;
    let in_d = a.meets[1].3;
    rep.push(Condition::fact(
        "a: Nx in K u D, not in K",
        a.meets.len() == 2 && in_d > 0,
        Witness::note(format!("{in_k} elements of Nx in K, {in_d} in D")).with_classes(vec![k, d]),
    ));

    let want: BTreeSet<usize> = [k, d].into();
    let nk = support_times_n(ctx, n, k);
    let nd = support_times_n(ctx, n, d);
    let mut b = Condition::new("b: NK = ND = K u D");
    b.check(nk == want, Witness::note(format!("NK = {}", set_note(&nk, &labels))));
    b.check(nd == want, Witness::note(format!("ND = {}", set_note(&nd, &labels))));
    rep.push(b);

    let cs = character_side(ctx, n, k, d);
    rep.fact("|C_{G/N}(Nx)|", a.quotient_centralizer);
    rep.push(cs.equal_on_quotient);
    rep.push(cs.weighted_sum_vanishes);
    rep.push(cs.centralizer);
    rep.push(Condition::fact(
        "centralizer in G/N matches the character count",
        quotient_centralizer_from_characters(ctx, n, k) == Cyclotomic::from_int(1, a.quotient_centralizer as i64),
        Witness::values(
            None,
            Cyclotomic::from_int(1, a.quotient_centralizer as i64),
            quotient_centralizer_from_characters(ctx, n, k),
        ),
    ));

    let nk_chars = support_times_n_from_characters(ctx, n, k);
    let nd_chars = support_times_n_from_characters(ctx, n, d);
    let mut back = Condition::new("b from characters: NK = ND = K u D");
    back.check(
        nk_chars == want && nk_chars == nk,
        Witness::note(format!("NK = {}", set_note(&nk_chars, &labels))),
    );
    back.check(
        nd_chars == want && nd_chars == nd,
        Witness::note(format!("ND = {}", set_note(&nd_chars, &labels))),
    );
    rep.push(back);

    let (m1, m2) = coset_sum_coefficients(ctx, n, k, d);
    rep.fact("m1", m1);
    rep.fact("m2", m2);
    Ok(rep.finish())
}

/// `(m1, m2)` in `K̂ N̂ = m1 K̂ + m2 D̂`, as sums of structure constants over
/// the classes inside `N`.
pub fn coset_sum_coefficients(ctx: &GroupContext, n: &NormalSubgroup, k: usize, d: usize) -> (u64, u64) {
    let cd = ctx.classes();
    n.classes().iter().fold((0, 0), |(a, b), &c| {
        (a + cd.structure_constant(k, c, k), b + cd.structure_constant(k, c, d))
    })
}

/// The elements of `Nx` are all conjugate exactly when every character
/// outside `Irr(G/N)` vanishes at `x`; both sides are computed
/// independently.
pub fn verify_single_class_criterion(ctx: &GroupContext, n: &NormalSubgroup, x: &Permutation) -> Result<TheoremReport> {
    let a = classify_coset(ctx, n, x)?;
    let k = a.meets[0].0;
    let t = ctx.table();
    let mut rep = TheoremReport::new("single-class-criterion", ctx, n.order(), vec![k]);
    let set_side = matches!(a.verdict, Verdict::InSingleClass { .. });
    let mut values = Condition::new("chi(x) on Irr(G|N)");
    let mut char_side = true;
    for r in 0..t.rows().len() {
        if !t.kernel_contains(r, n.classes()) {
            let v = t.value(r, k).clone();
            char_side &= v.is_zero();
            values.witnesses.push(Witness::values(Some(r), v, Cyclotomic::zero(t.conductor())));
        }
    }
    rep.fact("Nx in one class", set_side);
    rep.fact("chi(x) = 0 on Irr(G|N)", char_side);
    values.holds = set_side == char_side;
    values.name = "Nx in one class iff chi(x) = 0 on Irr(G|N)".into();
    rep.push(values);
    Ok(rep.finish())
}

/// For a coset `Nx` and every class `D ≠ x^G`, evaluates the set,
/// product and character conditions independently and reports every pair
/// where they disagree. Also checks the single-class criterion. Returns
/// the number of `(x, D)` pairs examined with the disagreements.
pub fn equivalence_discrepancies(ctx: &GroupContext, n: &NormalSubgroup, x: &Permutation) -> Result<(usize, Vec<String>)> {
    let a = classify_coset(ctx, n, x)?;
    let k = a.meets[0].0;
    let met: BTreeSet<usize> = a.meets.iter().map(|m| m.0).collect();
    let nk = support_times_n(ctx, n, k);
    let mut out = Vec::new();
    let mut checked = 0;
    for d in 0..ctx.classes().num_classes() {
        if d == k {
            continue;
        }
        checked += 1;
        let want: BTreeSet<usize> = [k, d].into();
        let set = met == want;
        let product = nk == want && support_times_n(ctx, n, d) == want;
        let cs = character_side(ctx, n, k, d);
        let chars = cs.equal_on_quotient.holds && cs.weighted_sum_vanishes.holds && cs.centralizer.holds;
        if set != product || set != chars {
            out.push(format!(
                "{} N={} x={} D={}: set {set}, product {product}, characters {chars}",
                ctx.name(),
                n.order(),
                a.rep,
                ctx.label(d)
            ));
        }
    }
    let single = verify_single_class_criterion(ctx, n, x)?;
    if !single.passed() {
        out.push(format!(
            "{} N={} x={}: single-class criterion fails ({:?})",
            ctx.name(),
            n.order(),
            a.rep,
            single.facts
        ));
    }
    Ok((checked, out))
}
