use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::coset::{classify_coset, coset_representatives, CosetAnalysis, Verdict};
use super::thm_a::verify_thm_a;
use super::thm_b::verify_thm_b;
use super::{GroupContext, Options, Outcome, TheoremReport};
use crate::catalog::GroupSpec;
use crate::error::{Error, Result};

/// A coset lying in one or two classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub analysis: CosetAnalysis,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_solvable: Option<bool>,
    /// Two-class hits only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thm_a: Option<TheoremReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thm_b: Option<TheoremReport>,
}

/// Sweep result for one group. A failure is recorded in `error` and does
/// not affect the other groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSearch {
    pub spec: String,
    pub order: u64,
    pub cosets: usize,
    pub single: usize,
    pub two: usize,
    pub spread: usize,
    pub hits: Vec<SearchHit>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl GroupSearch {
    /// Every recorded theorem report passed or was not applicable.
    pub fn ok(&self) -> bool {
        self.error.is_none()
            && self.hits.iter().all(|h| {
                h.thm_a.as_ref().is_none_or(|r| r.ok()) && h.thm_b.as_ref().is_none_or(|r| r.ok())
            })
    }
}

/// For every group, every normal subgroup `1 < N < G` and one coset per
/// conjugacy class of `G/N`, classifies the coset. Single-class hits must
/// have solvable `N`; two-class hits are checked against both character
/// criteria. Results keep the input order.
pub fn search(specs: &[GroupSpec], options: Options) -> Vec<GroupSearch> {
    let run = |spec: &GroupSpec| {
        let mut out = GroupSearch {
            spec: spec.to_string(),
            order: 0,
            cosets: 0,
            single: 0,
            two: 0,
            spread: 0,
            hits: Vec::new(),
            error: None,
        };
        if let Err(e) = search_group(spec, options, &mut out) {
            out.error = Some(e.to_string());
        }
        out
    };
    if options.parallel {
        specs.par_iter().map(run).collect()
    } else {
        specs.iter().map(run).collect()
    }
}

fn search_group(spec: &GroupSpec, options: Options, out: &mut GroupSearch) -> Result<()> {
    let ctx = GroupContext::from_spec(spec, options)?;
    out.order = ctx.order();
    let normals = ctx.normal_subgroups();
    let proper = normals.get(1..normals.len().saturating_sub(1)).unwrap_or_default();
    for n in proper {
        for x in coset_representatives(&ctx, n)? {
            let analysis = classify_coset(&ctx, n, &x)?;
            out.cosets += 1;
            match analysis.verdict {
                Verdict::Spread { .. } => out.spread += 1,
                Verdict::InSingleClass { .. } => {
                    out.single += 1;
                    let solvable = n.is_solvable();
                    if !solvable {
                        return Err(Error::CitedResultViolated(format!(
                            "{}: coset of {x} lies in one class but N of order {} is not solvable",
                            ctx.name(),
                            n.order()
                        )));
                    }
                    out.hits.push(SearchHit {
                        analysis,
                        normal_solvable: Some(solvable),
                        thm_a: None,
                        thm_b: None,
                    });
                }
                Verdict::InTwoClasses { .. } => {
                    out.two += 1;
                    let a = verify_thm_a(&ctx, n, &x)?;
                    let b = verify_thm_b(&ctx, n, &x, None)?;
                    out.hits.push(SearchHit {
                        analysis,
                        normal_solvable: Some(n.is_solvable()),
                        thm_a: Some(a),
                        thm_b: (b.outcome != Outcome::NotApplicable).then_some(b),
                    });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(spec: &str) -> GroupSearch {
        let mut r = search(&[spec.parse().unwrap()], Options::default());
        r.pop().unwrap()
    }

    #[test]
    fn sym3_single_hit() {
        let r = one("sym:3");
        assert_eq!((r.single, r.two), (1, 0));
        assert_eq!(r.hits[0].analysis.normal_order, 3);
        assert_eq!(r.hits[0].normal_solvable, Some(true));
    }

    #[test]
    fn sl23_two_hits_over_q8() {
        let r = one("sl:2:3");
        assert!(r.ok(), "{r:#?}");
        let over_q8: Vec<_> = r
            .hits
            .iter()
            .filter(|h| h.analysis.normal_order == 8 && h.analysis.two_classes().is_some())
            .collect();
        assert_eq!(over_q8.len(), 2);
        for h in over_q8 {
            assert!(h.thm_a.as_ref().unwrap().passed());
            assert!(h.thm_b.as_ref().unwrap().passed());
        }
    }

    #[test]
    fn pgammal29_one_two_class_hit_over_psl() {
        let r = one("pgammal:2:9");
        assert!(r.ok(), "{r:#?}");
        let hits: Vec<_> = r
            .hits
            .iter()
            .filter(|h| h.analysis.normal_order == 360 && h.analysis.two_classes().is_some())
            .collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].analysis.rep_order, 4);
    }

    #[test]
    fn failures_are_isolated() {
        let specs: Vec<GroupSpec> = vec!["sym:3".parse().unwrap(), "sym:9".parse().unwrap()];
        let opts = Options {
            element_cap: 1000,
            ..Options::default()
        };
        let r = search(&specs, opts);
        assert!(r[0].error.is_none());
        assert!(r[1].error.as_deref().unwrap().contains("cap"));
        assert!(search(&[], opts).is_empty());
        let trivial = one("cyclic:1");
        assert_eq!((trivial.cosets, trivial.error), (0, None));
    }
}
