//! Versioned report records shared by every command, with a JSON form
//! that round-trips and a plain-text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chartable::CharTable;
use crate::error::{Error, Result};
use crate::lab::{CosetAnalysis, ExampleBlock, GroupContext, GroupSearch, Options, Outcome, TheoremReport};
use crate::tablefmt;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = concat!("cosetlab ", env!("CARGO_PKG_VERSION"));

/// Basic data of one group and a hash of its character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub spec: String,
    pub order: u64,
    pub degree: usize,
    pub exponent: u64,
    pub labels: Vec<String>,
    pub class_sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table_sha256: Option<String>,
}

impl GroupEntry {
    pub fn from_context(ctx: &GroupContext) -> Self {
        let cd = ctx.classes();
        GroupEntry {
            spec: ctx.name().into(),
            order: ctx.order(),
            degree: ctx.group().degree(),
            exponent: cd.exponent(),
            labels: cd.labels(),
            class_sizes: cd.sizes().to_vec(),
            element_orders: cd.element_orders().to_vec(),
            degrees: Some(ctx.table().degrees()),
            table_sha256: Some(table_hash(ctx.table())),
        }
    }
}

/// SHA-256 of the exported text form of a table.
pub fn table_hash(t: &CharTable) -> String {
    hex::encode(Sha256::digest(tablefmt::export(t).as_bytes()))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub single_class: usize,
    pub two_classes: usize,
    pub spread: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub tool: String,
    pub command: String,
    pub options: Options,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub groups: Vec<GroupEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cosets: Vec<CosetAnalysis>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub theorems: Vec<TheoremReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub searches: Vec<GroupSearch>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub examples: Vec<ExampleBlock>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub messages: Vec<String>,
    pub summary: Summary,
}

impl AnalysisReport {
    pub fn new(command: &str, options: Options) -> Self {
        AnalysisReport {
            schema: SCHEMA_VERSION,
            tool: TOOL.into(),
            command: command.into(),
            options,
            timing_ms: None,
            groups: Vec::new(),
            cosets: Vec::new(),
            theorems: Vec::new(),
            searches: Vec::new(),
            examples: Vec::new(),
            messages: Vec::new(),
            summary: Summary::default(),
        }
    }

    /// Recomputes the summary from the records.
    pub fn tally(&mut self) {
        let mut s = Summary::default();
        let mut count = |o: &Outcome| match o {
            Outcome::Pass => s.pass += 1,
            Outcome::Fail => s.fail += 1,
            Outcome::NotApplicable => s.not_applicable += 1,
        };
        for t in &self.theorems {
            count(&t.outcome);
        }
        for g in &self.searches {
            for h in &g.hits {
                for r in h.thm_a.iter().chain(h.thm_b.iter()) {
                    count(&r.outcome);
                }
            }
        }
        for b in &self.examples {
            for c in &b.checks {
                count(if c.pass { &Outcome::Pass } else { &Outcome::Fail });
            }
        }
        for g in &self.searches {
            s.single_class += g.single;
            s.two_classes += g.two;
            s.spread += g.spread;
            s.errors += g.error.is_some() as usize;
        }
        self.summary = s;
    }

    /// No failed check and no failed group.
    pub fn ok(&self) -> bool {
        self.summary.fail == 0 && self.summary.errors == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        for g in &self.groups {
            render_group(w, g);
        }
        for c in &self.cosets {
            render_coset(w, c);
        }
        for t in &self.theorems {
            render_theorem(w, t);
        }
        for g in &self.searches {
            render_search(w, g);
        }
        for b in &self.examples {
            let _ = writeln!(w, "{} [{}] {} / N of order {}", if b.passed() { "PASS" } else { "FAIL" }, b.name, b.group, b.normal_order);
            for c in &b.checks {
                let mark = if c.pass { "ok  " } else { "FAIL" };
                if c.detail.is_empty() {
                    let _ = writeln!(w, "  {mark} {}", c.name);
                } else {
                    let _ = writeln!(w, "  {mark} {} ({})", c.name, c.detail);
                }
            }
        }
        for m in &self.messages {
            let _ = writeln!(w, "{m}");
        }
        let s = &self.summary;
        let _ = writeln!(
            w,
            "summary: {} pass, {} fail, {} not applicable",
            s.pass, s.fail, s.not_applicable
        );
        if !self.searches.is_empty() {
            let _ = writeln!(
                w,
                "cosets: {} in one class, {} in two classes, {} spread, {} group errors",
                s.single_class, s.two_classes, s.spread, s.errors
            );
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(w, "time: {ms} ms");
        }
        out
    }
}

fn render_group(w: &mut String, g: &GroupEntry) {
    let _ = writeln!(w, "group {}", g.spec);
    let _ = writeln!(w, "  order {}, degree {}, exponent {}, {} classes", g.order, g.degree, g.exponent, g.labels.len());
    let _ = writeln!(w, "  {:>6} {:>8} {:>6}", "class", "size", "order");
    for i in 0..g.labels.len() {
        let _ = writeln!(w, "  {:>6} {:>8} {:>6}", g.labels[i], g.class_sizes[i], g.element_orders[i]);
    }
    if let Some(d) = &g.degrees {
        let d: Vec<String> = d.iter().map(u64::to_string).collect();
        let _ = writeln!(w, "  degrees {}", d.join(" "));
    }
    if let Some(h) = &g.table_sha256 {
        let _ = writeln!(w, "  table sha256 {h}");
    }
}

fn render_coset(w: &mut String, c: &CosetAnalysis) {
    let _ = writeln!(w, "coset Nx in {}, |N| = {}, x = {} of order {}", c.group, c.normal_order, c.rep, c.rep_order);
    let _ = writeln!(w, "  verdict {}", verdict_text(c));
    for (_, label, size, count) in &c.meets {
        let _ = writeln!(w, "  {count} elements in class {label} (size {size})");
    }
    let _ = writeln!(w, "  |C_{{G/N}}(Nx)| = {}", c.quotient_centralizer);
}

fn verdict_text(c: &CosetAnalysis) -> String {
    let names: Vec<&str> = c.meets.iter().map(|m| m.1.as_str()).collect();
    match names.len() {
        1 => format!("single class {}", names[0]),
        2 => format!("two classes K = {}, D = {}", names[0], names[1]),
        _ => format!("spread over {}", names.join(", ")),
    }
}

fn render_theorem(w: &mut String, t: &TheoremReport) {
    let outcome = match t.outcome {
        Outcome::Pass => "PASS",
        Outcome::Fail => "FAIL",
        Outcome::NotApplicable => "N/A",
    };
    let _ = writeln!(w, "{outcome} {} on {}, |N| = {}", t.theorem, t.group, t.normal_order);
    if !t.reason.is_empty() {
        let _ = writeln!(w, "  reason: {}", t.reason);
    }
    for (k, v) in &t.facts {
        let _ = writeln!(w, "  {k} = {v}");
    }
    for c in &t.conditions {
        let _ = writeln!(w, "  {} {}", if c.holds { "ok  " } else { "FAIL" }, c.name);
        for x in &c.witnesses {
            let mut line = String::from("      ");
            if let Some(r) = x.row {
                let _ = write!(line, "row {r}: ");
            }
            if !x.classes.is_empty() {
                let _ = write!(line, "classes {:?}: ", x.classes);
            }
            if let (Some(l), Some(r)) = (&x.lhs, &x.rhs) {
                let _ = write!(line, "{l} vs {r}");
                if !x.note.is_empty() {
                    line.push_str("; ");
                }
            }
            line.push_str(&x.note);
            let _ = writeln!(w, "{}", line.trim_end());
        }
    }
}

fn render_search(w: &mut String, g: &GroupSearch) {
    let _ = writeln!(
        w,
        "search {} (order {}): {} cosets, {} in one class, {} in two, {} spread",
        g.spec, g.order, g.cosets, g.single, g.two, g.spread
    );
    if let Some(e) = &g.error {
        let _ = writeln!(w, "  error: {e}");
    }
    for h in &g.hits {
        let a = &h.analysis;
        let mut line = format!("  |N| = {}, x of order {}: {}", a.normal_order, a.rep_order, verdict_text(a));
        let sizes: Vec<String> = a.meets.iter().map(|m| m.2.to_string()).collect();
        let _ = write!(line, " (sizes {})", sizes.join(", "));
        for (tag, r) in [("a", &h.thm_a), ("b", &h.thm_b)] {
            if let Some(r) = r {
                let _ = write!(line, ", {tag}: {}", if r.ok() { "pass" } else { "FAIL" });
            }
        }
        let _ = writeln!(w, "{line}");
    }
}
