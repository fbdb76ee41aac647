//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines appear in plain `cargo test` output.

mod support;

use std::process::Command;

use cosetlab::lab::{
    classify_coset, coset_representatives, equivalence_discrepancies, find_extending_characters, search,
    verify_single_class_criterion, verify_thm_a, verify_thm_b, verify_thm_c, GroupContext, Options, Outcome,
    Verdict,
};
use cosetlab::{catalog_sweep_list, tablefmt, Cyclotomic};
use support::oracle::{compare, oracle_table};
use support::{classes_outside, ctx, normal_of_order};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn example_1() -> Check {
    let c = ctx("direct:(cyclic:2),(alt:4)");
    let n = normal_of_order(&c, 4);
    let cd = c.classes();
    let central: Vec<usize> = classes_outside(&c, n, 2).into_iter().filter(|&k| cd.size(k) == 1).collect();
    ensure(central.len() == 1, || format!("central involutions outside N: {central:?}"))?;
    let x = cd.rep(central[0]);
    let a = classify_coset(&c, n, x).map_err(|e| e.to_string())?;
    let (k, d) = a.two_classes().ok_or(format!("verdict {:?}", a.verdict))?;
    ensure(cd.size(k) == 1 && cd.size(d) == 3, || format!("|K| = {}, |D| = {}", cd.size(k), cd.size(d)))?;
    let r = verify_thm_a(&c, n, x).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("{r:#?}"))?;
    let t = c.table();
    for row in 0..t.rows().len() {
        if !t.kernel_contains(row, n.classes()) {
            let s = t.value(row, k) + &t.value(row, d).scale(3);
            ensure(s.is_zero(), || format!("row {row}: chi(x) + 3 chi(d) = {s}"))?;
        }
    }
    ensure(a.quotient_centralizer == 6, || format!("|C_G/N(Nx)| = {}", a.quotient_centralizer))?;
    ensure(r.get_fact("|C_{G/N}(Nx)|") == Some("6"), || "centralizer fact".into())?;
    let exts = find_extending_characters(&c, n).map_err(|e| e.to_string())?;
    ensure(exts.len() == 1 && exts[0].theta == 0, || format!("extenders {exts:?}"))
}

fn example_2() -> Check {
    let c = ctx("sl:2:3");
    let n = normal_of_order(&c, 8);
    let cd = c.classes();
    let t = c.table();
    let sub = n.subgroup_table(&c).map_err(|e| e.to_string())?;
    let theta = (0..sub.table.rows().len())
        .find(|&r| sub.table.degree(r) == 2)
        .ok_or("no degree-2 character of N")?;
    let reps = coset_representatives(&c, n).map_err(|e| e.to_string())?;
    let mut working = 0;
    for x in &reps {
        ensure(x.order() == 3, || format!("coset representative of order {}", x.order()))?;
        let a = classify_coset(&c, n, x).map_err(|e| e.to_string())?;
        let Some((k, d)) = a.two_classes() else { continue };
        working += 1;
        ensure(cd.size(k) == 4 && cd.size(d) == 4, || format!("|K| = {}, |D| = {}", cd.size(k), cd.size(d)))?;
        let r = verify_thm_b(&c, n, x, Some(theta)).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{r:#?}"))?;
        let exts = find_extending_characters(&c, n).map_err(|e| e.to_string())?;
        let ext = exts.iter().find(|e| e.theta == theta).ok_or("theta does not extend")?;
        for &row in &ext.extensions {
            let one = Cyclotomic::one(t.conductor());
            ensure(t.value(row, k).abs_square() == one, || format!("row {row}: |chi(x)|^2 != 1"))?;
            ensure(*t.value(row, k) == -t.value(row, d), || format!("row {row}: chi(x) != -chi(d)"))?;
        }
    }
    ensure(reps.len() == 2 && working == 2, || format!("{working} of {} cosets work", reps.len()))
}

fn example_3() -> Check {
    let c = ctx("agammal1:8");
    let n = normal_of_order(&c, 56);
    let cd = c.classes();
    let threes = classes_outside(&c, n, 3);
    ensure(!threes.is_empty(), || "no order-3 class outside N".into())?;
    for k0 in threes {
        let x = cd.rep(k0);
        let a = classify_coset(&c, n, x).map_err(|e| e.to_string())?;
        let (k, d) = a.two_classes().ok_or(format!("verdict {:?}", a.verdict))?;
        ensure(cd.size(k) == 28 && cd.size(d) == 28, || format!("|K| = {}, |D| = {}", cd.size(k), cd.size(d)))?;
        ensure(cd.element_order(d) == 6, || format!("D of order {}", cd.element_order(d)))?;
        let ra = verify_thm_a(&c, n, x).map_err(|e| e.to_string())?;
        ensure(ra.passed(), || format!("{ra:#?}"))?;
        let rb = verify_thm_b(&c, n, x, None).map_err(|e| e.to_string())?;
        ensure(rb.passed(), || format!("{rb:#?}"))?;
    }
    let exts = find_extending_characters(&c, n).map_err(|e| e.to_string())?;
    let degrees: Vec<u64> = exts.iter().skip(1).map(|e| e.degree).collect();
    ensure(degrees == [7], || format!("nontrivial extender degrees {degrees:?}"))
}

fn example_4() -> Check {
    let c = ctx("pgammal:2:9");
    let n = normal_of_order(&c, 360);
    let cd = c.classes();
    let fours = classes_outside(&c, n, 4);
    ensure(fours.len() == 2, || format!("order-4 classes outside N: {fours:?}"))?;
    let mut working = Vec::new();
    for &k0 in &fours {
        let a = classify_coset(&c, n, cd.rep(k0)).map_err(|e| e.to_string())?;
        if let Verdict::InTwoClasses { k, d } = a.verdict {
            working.push((k, d));
        }
    }
    ensure(working.len() == 1, || format!("{} order-4 classes work", working.len()))?;
    let (k, d) = working[0];
    ensure(cd.size(k) == 180 && cd.size(d) == 180, || format!("|K| = {}, |D| = {}", cd.size(k), cd.size(d)))?;
    ensure(cd.element_order(d) == 8, || "D is not of order 8".into())?;
    let eights: Vec<usize> = (0..cd.num_classes())
        .filter(|&c8| cd.element_order(c8) == 8 && cd.size(c8) == 180)
        .collect();
    ensure(eights.contains(&d), || "D is not an order-8 class of size 180".into())?;

    let sub = n.subgroup_table(&c).map_err(|e| e.to_string())?;
    let exts = find_extending_characters(&c, n).map_err(|e| e.to_string())?;
    let nontrivial: Vec<usize> = exts.iter().skip(1).map(|e| e.theta).collect();
    let nines: Vec<usize> = (0..sub.table.rows().len()).filter(|&r| sub.table.degree(r) == 9).collect();
    ensure(nontrivial.len() == 1 && nontrivial == nines, || {
        format!("extenders {nontrivial:?}, degree-9 rows {nines:?}")
    })?;

    let x = cd.rep(k);
    let r = verify_thm_c(&c, n, x).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("{r:#?}"))?;
    for tag in ["a", "b", "c"] {
        let cond = r
            .conditions
            .iter()
            .find(|x| x.name.starts_with(&format!("corollary {tag}:")))
            .ok_or(format!("corollary {tag} missing"))?;
        ensure(cond.holds && !cond.witnesses.is_empty(), || format!("corollary {tag} fails"))?;
    }
    let lie = r
        .condition("nonabelian chief factors in N are S^k, S of Lie type in odd characteristic")
        .ok_or("recognition condition missing")?;
    ensure(lie.holds && lie.witnesses.len() == 1, || format!("{lie:?}"))?;
    ensure(
        r.get_fact("chief factor") == Some("PSL(2,9)^1 (order 360)"),
        || format!("{:?}", r.get_fact("chief factor")),
    )
}

fn stretch() -> Check {
    let c = ctx("pgammal:2:27");
    let n = normal_of_order(&c, 9828);
    let cd = c.classes();
    let reps = coset_representatives(&c, n).map_err(|e| e.to_string())?;
    let mut hits = 0;
    for x in reps.iter().filter(|x| x.order() == 6) {
        let a = classify_coset(&c, n, x).map_err(|e| e.to_string())?;
        let Some((k, d)) = a.two_classes() else { continue };
        ensure(cd.element_order(d) == 12 && cd.size(k) == cd.size(d), || {
            format!("{} pairs with {}", c.label(k), c.label(d))
        })?;
        let r = verify_thm_c(&c, n, x).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{r:#?}"))?;
        hits += 1;
    }
    ensure(hits == 2, || format!("{hits} two-class hits among order-6 coset representatives"))
}

const GOLDEN: &[&str] = &["sym:3", "sym:4", "alt:4", "alt:5", "q8", "dihedral:4", "sl:2:3"];

fn table_validity() -> Check {
    for spec in catalog_sweep_list(2000) {
        let c = GroupContext::from_spec(&spec, Options::default()).map_err(|e| format!("{spec}: {e}"))?;
        let t = c.table();
        let v = t.violations();
        ensure(v.is_empty(), || format!("{spec}: {v:?}"))?;
        let degrees = t.degrees();
        ensure(degrees.iter().map(|d| d * d).sum::<u64>() == c.order(), || format!("{spec}: sum of squares"))?;
        ensure(degrees.iter().all(|d| c.order() % d == 0), || format!("{spec}: degree divisibility"))?;
        let cd = c.classes();
        let r = cd.num_classes();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let want = Cyclotomic::from_int(1, cd.structure_constant(i, j, k) as i64);
                    ensure(t.structure_constant_from_characters(i, j, k) == want, || {
                        format!("{spec}: structure constant ({i},{j},{k})")
                    })?;
                }
            }
        }
    }
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for spec in GOLDEN {
        let c = ctx(spec);
        let path = dir.join(format!("{}.tbl", spec.replace(':', "_")));
        let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let golden = tablefmt::ingest(&text).map_err(|e| format!("{spec}: {e}"))?;
        compare(&golden, &oracle_table(c.group(), c.classes().reps())).map_err(|e| format!("{spec}: {e}"))?;
        let d = tablefmt::diff(&golden, c.table());
        ensure(d.is_empty(), || format!("{spec}: {d:?}"))?;
    }
    Ok(())
}

fn equivalence_sweeps() -> Check {
    let specs = catalog_sweep_list(200);
    let mut pairs = 0;
    for spec in &specs {
        let c = GroupContext::from_spec(spec, Options::default()).map_err(|e| format!("{spec}: {e}"))?;
        let normals = c.normal_subgroups();
        for n in &normals[..normals.len() - 1] {
            for x in coset_representatives(&c, n).map_err(|e| e.to_string())? {
                let (checked, bad) = equivalence_discrepancies(&c, n, &x).map_err(|e| e.to_string())?;
                pairs += checked;
                ensure(bad.is_empty(), || format!("{spec}, |N| = {}: {bad:?}", n.order()))?;
                let s = verify_single_class_criterion(&c, n, &x).map_err(|e| e.to_string())?;
                ensure(s.passed(), || format!("{spec}, |N| = {}: single-class criterion", n.order()))?;
            }
        }
    }
    ensure(pairs > 0, || "no pairs examined".into())?;
    for g in search(&specs, Options::default()) {
        ensure(g.error.is_none(), || format!("{}: {:?}", g.spec, g.error))?;
        for h in &g.hits {
            let a = &h.analysis;
            if matches!(a.verdict, Verdict::InSingleClass { .. }) {
                ensure(h.normal_solvable == Some(true), || format!("{}: nonsolvable N", g.spec))?;
            }
            if let Some(r) = &h.thm_a {
                ensure(r.passed(), || format!("{}: two-class criterion fails", g.spec))?;
            }
            if let Some(r) = &h.thm_b {
                let eq = r.condition("1: |K| = |D|").is_some_and(|c| c.holds);
                ensure(r.outcome != Outcome::NotApplicable && eq, || {
                    format!("{}, |N| = {}: |K| != |D| with an extender", g.spec, a.normal_order)
                })?;
            }
        }
    }
    Ok(())
}

fn determinism() -> Check {
    let run = |fmt: &str| {
        Command::new(env!("CARGO_BIN_EXE_cosetlab"))
            .args(["reproduce", "--output", fmt])
            .output()
            .map_err(|e| e.to_string())
    };
    for fmt in ["json", "text"] {
        let (a, b) = (run(fmt)?, run(fmt)?);
        ensure(a.status.success() && b.status.success(), || format!("{fmt}: exit {:?}", a.status))?;
        ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || format!("{fmt}: outputs differ"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("example 1: C2 x Alt(4) over V4", example_1),
        ("example 2: SL(2,3) over Q8", example_2),
        ("example 3: AGammaL(1,8) over its socle", example_3),
        ("example 4: PGammaL(2,9) over PSL(2,9)", example_4),
        ("stretch: PGammaL(2,27) over PSL(2,27)", stretch),
        ("character tables: validity and golden files", table_validity),
        ("equivalence sweeps up to order 200", equivalence_sweeps),
        ("determinism of reproduce", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        match f() {
            Ok(()) => println!("criterion {}: PASS {name} ({:.1?})", i + 1, start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
