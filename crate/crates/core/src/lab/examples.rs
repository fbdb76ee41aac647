use serde::{Deserialize, Serialize};

use super::chief::chief_series_through;
use super::coset::{classify_coset, Verdict};
use super::extend::find_extending_characters;
use super::lemma::lemma31_check;
use super::thm_a::{coset_sum_coefficients, verify_thm_a};
use super::thm_b::verify_thm_b;
use super::thm_c::verify_thm_c;
use super::{GroupContext, NormalSubgroup, Options, Outcome};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// The checks reproducing one worked example.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleBlock {
    pub name: String,
    pub group: String,
    pub normal_order: u64,
    pub checks: Vec<ExampleCheck>,
}

impl ExampleBlock {
    fn new(name: &str, ctx: &GroupContext, normal_order: u64) -> Self {
        ExampleBlock {
            name: name.into(),
            group: ctx.name().into(),
            normal_order,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(ExampleCheck {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn context(spec: &str, options: Options) -> Result<GroupContext> {
    GroupContext::from_spec(&spec.parse()?, options)
}

fn unique_normal(ctx: &GroupContext, order: u64) -> Result<&NormalSubgroup> {
    let found: Vec<_> = ctx.normal_subgroups().iter().filter(|n| n.order() == order).collect();
    match found.as_slice() {
        [n] => Ok(n),
        [] => Err(Error::NoMatch(format!("normal subgroup of order {order}"))),
        _ => Err(Error::Ambiguous {
            selector: format!("normal subgroup of order {order}"),
            candidates: found.len().to_string(),
        }),
    }
}

/// Classes outside `n` with the given element order, optionally of the
/// given size.
fn classes_outside(ctx: &GroupContext, n: &NormalSubgroup, order: u64, size: Option<u64>) -> Vec<usize> {
    let cd = ctx.classes();
    (0..cd.num_classes())
        .filter(|&c| !n.contains_class(c) && cd.element_order(c) == order && size.is_none_or(|s| cd.size(c) == s))
        .collect()
}

/// Reproduces the four worked examples, and with `include_stretch` the
/// two PΓL(2,27) analogues. Errors in one block are reported as failed
/// checks of that block.
pub fn reproduce_examples(include_stretch: bool, options: Options) -> Vec<ExampleBlock> {
    let mut blocks: Vec<ExampleBlock> = Vec::new();
    type Runner = fn(Options) -> Result<Vec<ExampleBlock>>;
    let mut runners: Vec<(&str, Runner)> = vec![
        ("example 1", example_1),
        ("example 2", example_2),
        ("example 3", example_3),
        ("example 4", example_4),
    ];
    if include_stretch {
        runners.push(("example 4, PSL(2,27) analogue", example_4_stretch));
    }
    for (name, run) in runners {
        match run(options) {
            Ok(b) => blocks.extend(b),
            Err(e) => blocks.push(ExampleBlock {
                name: name.into(),
                group: String::new(),
                normal_order: 0,
                checks: vec![ExampleCheck {
                    name: "computation".into(),
                    pass: false,
                    detail: e.to_string(),
                }],
            }),
        }
    }
    blocks
}

fn example_1(options: Options) -> Result<Vec<ExampleBlock>> {
    let ctx = context("direct:(cyclic:2),(alt:4)", options)?;
    let n = unique_normal(&ctx, 4)?;
    let mut b = ExampleBlock::new("example 1", &ctx, 4);
    let cd = ctx.classes();
    let centre = classes_outside(&ctx, n, 2, Some(1));
    b.check("one central involution outside N", centre.len() == 1, format!("{centre:?}"));
    let x = cd.rep(centre[0]);
    let a = classify_coset(&ctx, n, x)?;
    let sizes = a.two_classes().map(|(k, d)| (cd.size(k), cd.size(d)));
    b.check("Nx = K u D with |K| = 1, |D| = 3", sizes == Some((1, 3)), format!("{sizes:?}"));
    let r = verify_thm_a(&ctx, n, x)?;
    b.check("character criterion holds", r.passed(), outcome_note(&r));
    if let Some((k, d)) = a.two_classes() {
        let t = ctx.table();
        let faithful: Vec<usize> = (0..t.rows().len()).filter(|&r| !t.kernel_contains(r, n.classes())).collect();
        let ok = faithful
            .iter()
            .all(|&r| (t.value(r, k) + &t.value(r, d).scale(3)).is_zero());
        b.check("chi(x) + 3 chi(d) = 0 on Irr(G|N)", ok, format!("{} rows", faithful.len()));
    }
    b.check(
        "|C_{G/N}(Nx)| = 6",
        a.quotient_centralizer == 6,
        a.quotient_centralizer.to_string(),
    );
    let exts = find_extending_characters(&ctx, n)?;
    b.check(
        "only 1_N extends",
        exts.len() == 1 && exts[0].theta == 0,
        format!("{} extendible", exts.len()),
    );
    let rb = verify_thm_b(&ctx, n, x, None)?;
    b.check(
        "extension consequences not applicable",
        rb.outcome == Outcome::NotApplicable,
        rb.reason.clone(),
    );
    Ok(vec![b])
}

fn example_2(options: Options) -> Result<Vec<ExampleBlock>> {
    let ctx = context("sl:2:3", options)?;
    let n = unique_normal(&ctx, 8)?;
    let mut b = ExampleBlock::new("example 2", &ctx, 8);
    let cd = ctx.classes();
    let t = ctx.table();
    let threes = classes_outside(&ctx, n, 3, None);
    let mut working = 0;
    for &c in &threes {
        let x = cd.rep(c);
        let a = classify_coset(&ctx, n, x)?;
        let Some((k, d)) = a.two_classes() else { continue };
        working += 1;
        let l = ctx.label(k);
        b.check(
            &format!("{l}: |K| = |D| = 4"),
            cd.size(k) == 4 && cd.size(d) == 4,
            format!("|K| = {}, |D| = {}", cd.size(k), cd.size(d)),
        );
        let ra = verify_thm_a(&ctx, n, x)?;
        b.check(&format!("{l}: character criterion holds"), ra.passed(), outcome_note(&ra));
        b.check(
            &format!("{l}: |C_{{G/N}}(Nx)| = 24/8 = 3"),
            a.quotient_centralizer == 3,
            a.quotient_centralizer.to_string(),
        );
        let theta = degree_two_theta(&ctx, n)?;
        let rb = verify_thm_b(&ctx, n, x, theta)?;
        b.check(&format!("{l}: extension consequences hold for the degree-2 theta"), rb.passed(), outcome_note(&rb));
        let exts = find_extending_characters(&ctx, n)?;
        let e = t.conductor();
        let values_ok = exts.iter().filter(|x| Some(x.theta) == theta).all(|x| {
            x.extensions
                .iter()
                .all(|&r| t.value(r, k).abs_square() == Cyclotomic::one(e) && *t.value(r, k) == -t.value(r, d))
        });
        b.check(&format!("{l}: |chi(x)| = 1 and chi(x) = -chi(d)"), values_ok, String::new());
        let (m1, m2) = coset_sum_coefficients(&ctx, n, k, d);
        b.check(&format!("{l}: m1 = m2"), m1 == m2, format!("m1 = {m1}, m2 = {m2}"));
        let z = classes_inside_of_order(&ctx, n, 2);
        let rl = lemma31_check(&ctx, k, z)?;
        b.check(
            &format!("{l}: K times the central class is a single class"),
            rl.passed() && rl.get_fact("branch") == Some("KC = D"),
            rl.get_fact("KC").unwrap_or_default().to_string(),
        );
        let rc = verify_thm_c(&ctx, n, x)?;
        b.check(
            &format!("{l}: nonsolvable structure not applicable"),
            rc.outcome == Outcome::NotApplicable,
            rc.reason,
        );
    }
    b.check(
        "both order-3 cosets lie in two classes",
        threes.len() == 2 && working == 2,
        format!("{working} of {}", threes.len()),
    );
    Ok(vec![b])
}

fn classes_inside_of_order(ctx: &GroupContext, n: &NormalSubgroup, order: u64) -> usize {
    let cd = ctx.classes();
    n.classes()
        .iter()
        .copied()
        .find(|&c| cd.element_order(c) == order)
        .unwrap_or(0)
}

fn degree_two_theta(ctx: &GroupContext, n: &NormalSubgroup) -> Result<Option<usize>> {
    let sub = n.subgroup_table(ctx)?;
    Ok((0..sub.table.rows().len()).find(|&r| sub.table.degree(r) == 2))
}

fn example_3(options: Options) -> Result<Vec<ExampleBlock>> {
    let ctx = context("agammal1:8", options)?;
    let n = unique_normal(&ctx, 56)?;
    let mut b = ExampleBlock::new("example 3", &ctx, 56);
    let cd = ctx.classes();
    let threes = classes_outside(&ctx, n, 3, None);
    b.check("order-3 classes outside N", !threes.is_empty(), format!("{threes:?}"));
    for &c in &threes {
        let x = cd.rep(c);
        let l = ctx.label(c);
        let a = classify_coset(&ctx, n, x)?;
        let Some((k, d)) = a.two_classes() else {
            b.check(&format!("{l}: Nx lies in two classes"), false, format!("{:?}", a.verdict));
            continue;
        };
        b.check(
            &format!("{l}: |K| = |D| = 28"),
            cd.size(k) == 28 && cd.size(d) == 28,
            format!("|K| = {}, |D| = {}", cd.size(k), cd.size(d)),
        );
        b.check(
            &format!("{l}: D consists of elements of order 6"),
            cd.element_order(d) == 6,
            ctx.label(d),
        );
        let ra = verify_thm_a(&ctx, n, x)?;
        b.check(&format!("{l}: character criterion holds"), ra.passed(), outcome_note(&ra));
        let rb = verify_thm_b(&ctx, n, x, None)?;
        b.check(
            &format!("{l}: extension consequences hold"),
            rb.passed() && rb.get_fact("theta(1)") == Some("7"),
            outcome_note(&rb),
        );
        let (m1, m2) = coset_sum_coefficients(&ctx, n, k, d);
        b.check(&format!("{l}: m1 = m2"), m1 == m2, format!("m1 = {m1}, m2 = {m2}"));
    }
    let exts = find_extending_characters(&ctx, n)?;
    let degrees: Vec<u64> = exts.iter().skip(1).map(|e| e.degree).collect();
    b.check("unique nontrivial extender has degree 7", degrees == [7], format!("{degrees:?}"));
    Ok(vec![b])
}

fn example_4(options: Options) -> Result<Vec<ExampleBlock>> {
    let ctx = context("pgammal:2:9", options)?;
    let n = unique_normal(&ctx, 360)?;
    let mut b = ExampleBlock::new("example 4", &ctx, 360);
    let cd = ctx.classes();
    let fours = classes_outside(&ctx, n, 4, None);
    let mut working = Vec::new();
    for &c in &fours {
        let a = classify_coset(&ctx, n, cd.rep(c))?;
        if let Verdict::InTwoClasses { k, d } = a.verdict {
            working.push((c, k, d));
        }
    }
    b.check(
        "exactly one order-4 class outside N works",
        fours.len() == 2 && working.len() == 1,
        format!("{} of {}", working.len(), fours.len()),
    );
    let exts = find_extending_characters(&ctx, n)?;
    let sub = n.subgroup_table(&ctx)?;
    let nontrivial: Vec<usize> = exts.iter().skip(1).map(|e| e.theta).collect();
    let nines: Vec<usize> = (0..sub.table.rows().len()).filter(|&r| sub.table.degree(r) == 9).collect();
    b.check(
        "the unique nontrivial extender is the degree-9 Steinberg character",
        nontrivial.len() == 1 && nontrivial == nines,
        format!("extendible {nontrivial:?}, degree 9 rows {nines:?}"),
    );
    let series = chief_series_through(&ctx, ctx.normal_subgroups().iter().position(|m| m.order() == 360).unwrap())?;
    let r = series[0].recognition.clone();
    b.check(
        "chief factor N is PSL(2,9), Lie type in odd characteristic",
        r.as_ref().is_some_and(|r| r.name.as_deref() == Some("PSL(2,9)") && r.odd_lie_type()),
        r.as_ref().map_or("no recognition".into(), |r| {
            format!(
                "{}, characteristics {:?}",
                r.name.as_deref().unwrap_or("unrecognized"),
                r.lie_characteristics
            )
        }),
    );
    for &(c, k, d) in &working {
        let l = ctx.label(c);
        b.check(
            &format!("{l}: |K| = |D| = 180, D of order 8"),
            cd.size(k) == 180 && cd.size(d) == 180 && cd.element_order(d) == 8,
            format!("|K| = {}, |D| = {}, D = {}", cd.size(k), cd.size(d), ctx.label(d)),
        );
        let x = cd.rep(c);
        let ra = verify_thm_a(&ctx, n, x)?;
        b.check(&format!("{l}: character criterion holds"), ra.passed(), outcome_note(&ra));
        let (m1, m2) = coset_sum_coefficients(&ctx, n, k, d);
        b.check(&format!("{l}: m1 = m2"), m1 == m2, format!("m1 = {m1}, m2 = {m2}"));
        let rc = verify_thm_c(&ctx, n, x)?;
        b.check(&format!("{l}: nonsolvable structure holds"), rc.passed(), outcome_note(&rc));
        for tag in ["a", "b", "c"] {
            let cond = rc.conditions.iter().find(|x| x.name.starts_with(&format!("corollary {tag}:")));
            b.check(
                &format!("{l}: corollary {tag}"),
                cond.is_some_and(|x| x.holds),
                cond.map_or("missing".into(), |x| x.name.clone()),
            );
        }
    }
    Ok(vec![b])
}

fn example_4_stretch(options: Options) -> Result<Vec<ExampleBlock>> {
    let ctx = context("pgammal:2:27", options)?;
    let n = unique_normal(&ctx, 9828)?;
    let cd = ctx.classes();
    let mut hits = ExampleBlock::new("PSL(2,27) analogue: order-6 cosets", &ctx, 9828);
    let mut thm = ExampleBlock::new("PSL(2,27) analogue: nonsolvable structure", &ctx, 9828);
    let sixes = classes_outside(&ctx, n, 6, None);
    let mut found = 0;
    for &c in &sixes {
        let x = cd.rep(c);
        let a = classify_coset(&ctx, n, x)?;
        let Some((k, d)) = a.two_classes() else { continue };
        found += 1;
        let l = ctx.label(c);
        hits.check(
            &format!("{l}: pairs with an order-12 class of equal size"),
            cd.element_order(d) == 12 && cd.size(k) == cd.size(d),
            format!("D = {}, |K| = {}, |D| = {}", ctx.label(d), cd.size(k), cd.size(d)),
        );
        let ra = verify_thm_a(&ctx, n, x)?;
        thm.check(&format!("{l}: character criterion holds"), ra.passed(), outcome_note(&ra));
        let rc = verify_thm_c(&ctx, n, x)?;
        thm.check(&format!("{l}: nonsolvable structure holds"), rc.passed(), outcome_note(&rc));
    }
    hits.check("two order-6 classes work", found == 2, format!("{found} of {}", sixes.len()));
    Ok(vec![hits, thm])
}

fn outcome_note(r: &super::TheoremReport) -> String {
    let failed: Vec<&str> = r.conditions.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    match r.outcome {
        Outcome::Pass => "pass".into(),
        Outcome::NotApplicable => format!("not applicable: {}", r.reason),
        Outcome::Fail => format!("failed: {}", failed.join("; ")),
    }
}
