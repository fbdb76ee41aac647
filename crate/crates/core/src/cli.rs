//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a
//! usage, selector or parse error.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{catalog_sweep_list, GroupSpec};
use crate::error::{Error, Result};
use crate::lab::{
    classify_coset, lemma31_check, reproduce_examples, search, verify_single_class_criterion, verify_thm_a,
    verify_thm_b, verify_thm_c, Condition, GroupContext, NormalSubgroup, Options, TheoremReport, Witness,
};
use crate::report::{AnalysisReport, GroupEntry};
use crate::tablefmt;

#[derive(Debug, Parser)]
#[command(name = "cosetlab", version, about = "Character tables and two-class cosets of small finite groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Seed for eigenspace splitting.
    #[arg(long, global = true, default_value_t = crate::chartable::DEFAULT_SEED)]
    pub seed: u64,
    /// Refuse to enumerate groups larger than this.
    #[arg(long, global = true, default_value_t = crate::group::DEFAULT_ELEMENT_CAP)]
    pub element_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Toggle::On)]
    pub parallel: Toggle,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub output: Format,
    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    #[value(name = "a")]
    A,
    #[value(name = "b")]
    B,
    #[value(name = "c")]
    C,
    #[value(name = "2.2")]
    SingleClass,
    #[value(name = "lemma31")]
    Lemma31,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, degree, exponent and classes of a group.
    GroupInfo { spec: GroupSpec },
    /// Print, export or check a character table.
    Table {
        spec: GroupSpec,
        #[arg(long, conflicts_with = "check")]
        export: Option<PathBuf>,
        /// Ingest a table file, re-validate it and compare it with the
        /// computed table up to row order.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Run one theorem check on a coset.
    Verify {
        spec: GroupSpec,
        /// Order of the normal subgroup, or `#i` for its index.
        #[arg(long)]
        normal: Option<String>,
        /// Class of x: a label such as `4b`, an element order, or
        /// `order:size`.
        #[arg(long)]
        coset: String,
        #[arg(long, value_enum)]
        thm: Theorem,
        /// Second class for `lemma31`.
        #[arg(long)]
        class_c: Option<String>,
        /// Row of N to use as theta for `b`.
        #[arg(long)]
        theta: Option<usize>,
    },
    /// Classify every coset of every normal subgroup.
    Search {
        /// All catalog groups up to this order.
        #[arg(long, conflicts_with = "specs")]
        max_order: Option<u64>,
        /// Semicolon-separated group specs.
        #[arg(long, value_delimiter = ';')]
        specs: Option<Vec<String>>,
    },
    /// Reproduce the worked examples.
    Reproduce {
        #[arg(long)]
        include_stretch: bool,
    },
}

impl Global {
    pub fn options(&self) -> Options {
        Options {
            seed: self.seed,
            element_cap: self.element_cap,
            parallel: self.parallel == Toggle::On,
        }
    }
}

/// Exit code for an error: 1 when a cited result or table invariant is
/// violated, 2 otherwise.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CitedResultViolated(_) | Error::Invariant(_) | Error::Splitting(_) => 1,
        _ => 2,
    }
}

/// Runs one command and returns its report.
pub fn run(cli: &Cli) -> Result<AnalysisReport> {
    let start = Instant::now();
    let options = cli.global.options();
    let mut report = match &cli.command {
        Command::GroupInfo { spec } => {
            let mut r = AnalysisReport::new("group-info", options);
            let ctx = GroupContext::from_spec(spec, options)?;
            r.groups.push(GroupEntry::from_context(&ctx));
            r
        }
        Command::Table { spec, export, check } => table(spec, export.as_ref(), check.as_ref(), options)?,
        Command::Verify {
            spec,
            normal,
            coset,
            thm,
            class_c,
            theta,
        } => verify(spec, normal.as_deref(), coset, *thm, class_c.as_deref(), *theta, options)?,
        Command::Search { max_order, specs } => {
            let list = match (max_order, specs) {
                (Some(m), _) => catalog_sweep_list(*m),
                (None, Some(s)) => s
                    .iter()
                    .map(|x| x.trim())
                    .filter(|x| !x.is_empty())
                    .map(str::parse)
                    .collect::<Result<Vec<GroupSpec>>>()?,
                (None, None) => Vec::new(),
            };
            let mut r = AnalysisReport::new("search", options);
            r.searches = search(&list, options);
            r
        }
        Command::Reproduce { include_stretch } => {
            let mut r = AnalysisReport::new("reproduce", options);
            r.examples = reproduce_examples(*include_stretch, options);
            r
        }
    };
    report.tally();
    if cli.global.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn table(
    spec: &GroupSpec,
    export: Option<&PathBuf>,
    check: Option<&PathBuf>,
    options: Options,
) -> Result<AnalysisReport> {
    let mut r = AnalysisReport::new("table", options);
    let ctx = GroupContext::from_spec(spec, options)?;
    r.groups.push(GroupEntry::from_context(&ctx));
    let text = tablefmt::export(ctx.table());
    match (export, check) {
        (Some(path), _) => {
            std::fs::write(path, &text)?;
            r.messages.push(format!("wrote {}", path.display()));
        }
        (None, Some(path)) => {
            let found = tablefmt::parse(&std::fs::read_to_string(path)?)?;
            let mut t = TheoremReport::new("table-check", &ctx, 0, Vec::new());
            let violations = found.violations();
            let mut valid = Condition::new("ingested table satisfies every invariant");
            for v in &violations {
                valid.check(false, Witness::note(v.clone()));
            }
            t.push(valid);
            let diffs = tablefmt::diff(ctx.table(), &found);
            let mut same = Condition::new("ingested table equals the computed table up to row order");
            for d in &diffs {
                same.check(false, Witness::note(d.clone()));
            }
            t.push(same);
            r.theorems.push(t.finish());
        }
        (None, None) => r.messages.push(text.trim_end().to_string()),
    }
    Ok(r)
}

fn resolve_normal<'a>(ctx: &'a GroupContext, sel: Option<&str>) -> Result<&'a NormalSubgroup> {
    let normals = ctx.normal_subgroups();
    let proper: Vec<(usize, &NormalSubgroup)> = normals
        .iter()
        .enumerate()
        .filter(|(i, _)| *i > 0 && *i + 1 < normals.len())
        .collect();
    let list = |c: &[(usize, &NormalSubgroup)]| {
        c.iter()
            .map(|(i, n)| format!("#{i} (order {})", n.order()))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let sel = sel.ok_or_else(|| Error::Ambiguous {
        selector: "--normal".into(),
        candidates: list(&proper),
    })?;
    if let Some(i) = sel.strip_prefix('#') {
        let i: usize = i.parse().map_err(|_| Error::NoMatch(sel.into()))?;
        return normals.get(i).ok_or_else(|| Error::NoMatch(sel.into()));
    }
    let order: u64 = sel.parse().map_err(|_| Error::NoMatch(sel.into()))?;
    let found: Vec<_> = normals.iter().enumerate().filter(|(_, n)| n.order() == order).collect();
    match found.as_slice() {
        [(_, n)] => Ok(n),
        [] => Err(Error::NoMatch(sel.into())),
        _ => Err(Error::Ambiguous {
            selector: sel.into(),
            candidates: list(&found),
        }),
    }
}

/// Resolves a class selector among the classes passing `allowed`.
fn resolve_class(ctx: &GroupContext, sel: &str, allowed: impl Fn(usize) -> bool) -> Result<usize> {
    let cd = ctx.classes();
    let labels = cd.labels();
    if let Some(i) = labels.iter().position(|l| l == sel) {
        return if allowed(i) {
            Ok(i)
        } else {
            Err(Error::NoMatch(format!("{sel} (class lies in N)")))
        };
    }
    let bad = || Error::NoMatch(sel.to_string());
    let (order, size) = match sel.split_once(':') {
        Some((o, s)) => (o.parse::<u64>().map_err(|_| bad())?, Some(s.parse::<u64>().map_err(|_| bad())?)),
        None => (sel.parse::<u64>().map_err(|_| bad())?, None),
    };
    let found: Vec<usize> = (0..cd.num_classes())
        .filter(|&c| allowed(c) && cd.element_order(c) == order && size.is_none_or(|s| cd.size(c) == s))
        .collect();
    match found.as_slice() {
        [c] => Ok(*c),
        [] => Err(bad()),
        _ => Err(Error::Ambiguous {
            selector: sel.into(),
            candidates: found
                .iter()
                .map(|&c| format!("{} (size {})", labels[c], cd.size(c)))
                .collect::<Vec<_>>()
                .join(", "),
        }),
    }
}

fn verify(
    spec: &GroupSpec,
    normal: Option<&str>,
    coset: &str,
    thm: Theorem,
    class_c: Option<&str>,
    theta: Option<usize>,
    options: Options,
) -> Result<AnalysisReport> {
    let mut r = AnalysisReport::new("verify", options);
    let ctx = GroupContext::from_spec(spec, options)?;
    r.groups.push(GroupEntry::from_context(&ctx));
    if thm == Theorem::Lemma31 {
        let k = resolve_class(&ctx, coset, |_| true)?;
        let c = class_c.ok_or_else(|| Error::NoMatch("--class-c is required for lemma31".into()))?;
        let c = resolve_class(&ctx, c, |_| true)?;
        r.theorems.push(lemma31_check(&ctx, k, c)?);
        return Ok(r);
    }
    let n = resolve_normal(&ctx, normal)?;
    let k = resolve_class(&ctx, coset, |c| !n.contains_class(c))?;
    let x = ctx.classes().rep(k).clone();
    r.cosets.push(classify_coset(&ctx, n, &x)?);
    let t = match thm {
        Theorem::A => verify_thm_a(&ctx, n, &x)?,
        Theorem::B => verify_thm_b(&ctx, n, &x, theta)?,
        Theorem::C => verify_thm_c(&ctx, n, &x)?,
        Theorem::SingleClass => verify_single_class_criterion(&ctx, n, &x)?,
        Theorem::Lemma31 => unreachable!(),
    };
    r.theorems.push(t);
    Ok(r)
}

/// Text or JSON rendering of a report.
pub fn render(report: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    }
}
