//! Executable checks of when a coset `Nx` lies in the union of two
//! conjugacy classes `K = x^G` and `D = d^G`, and of what that forces on
//! the characters of `G`.

mod chief;
mod coset;
mod examples;
mod extend;
mod lemma;
mod normal;
mod search;
mod thm_a;
mod thm_b;
mod thm_c;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::catalog::GroupSpec;
use crate::chartable::{character_table, fusion_map, CharTable, DEFAULT_SEED};
use crate::classes::ClassData;
use crate::cyclotomic::Cyclotomic;
use crate::error::Result;
use crate::group::{CosetActionImage, PermGroup, DEFAULT_ELEMENT_CAP};

pub use chief::{chief_series_through, recognize, ChiefFactor, Recognition, SimpleGroup, RECOGNITION_LIMIT, SIMPLE_GROUPS};
pub use coset::{classify_coset, coset_representatives, CosetAnalysis, Verdict};
pub use examples::{reproduce_examples, ExampleBlock, ExampleCheck};
pub use extend::{find_extending_characters, Extension};
pub use lemma::lemma31_check;
pub use normal::{normal_subgroups, normal_subgroups_by_lattice};
pub use search::{search, GroupSearch, SearchHit};
pub use thm_a::{coset_sum_coefficients, equivalence_discrepancies, verify_single_class_criterion, verify_thm_a};
pub use thm_b::verify_thm_b;
pub use thm_c::verify_thm_c;

/// Settings shared by every computation on one group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Options {
    pub seed: u64,
    pub element_cap: u64,
    pub parallel: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            element_cap: DEFAULT_ELEMENT_CAP,
            parallel: true,
        }
    }
}

/// A group together with its classes and character table.
#[derive(Debug)]
pub struct GroupContext {
    name: String,
    cd: ClassData,
    table: CharTable,
    options: Options,
    normals: OnceLock<Vec<NormalSubgroup>>,
}

impl GroupContext {
    pub fn from_spec(spec: &GroupSpec, options: Options) -> Result<Self> {
        Self::from_group(spec.to_string(), spec.make()?, options)
    }

    pub fn from_group(name: impl Into<String>, group: PermGroup, options: Options) -> Result<Self> {
        let name = name.into();
        group.elements_with_cap(options.element_cap)?;
        let cd = ClassData::with_options(group, options.parallel)?;
        let table = character_table(&cd, &name, options.seed)?;
        Ok(GroupContext {
            name,
            cd,
            table,
            options,
            normals: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn classes(&self) -> &ClassData {
        &self.cd
    }

    pub fn table(&self) -> &CharTable {
        &self.table
    }

    pub fn group(&self) -> &PermGroup {
        self.cd.group()
    }

    pub fn options(&self) -> Options {
        self.options
    }

    pub fn order(&self) -> u64 {
        self.cd.group_order()
    }

    /// Every normal subgroup, sorted by order and then by class set.
    pub fn normal_subgroups(&self) -> &[NormalSubgroup] {
        self.normals.get_or_init(|| normal_subgroups(self))
    }

    pub fn label(&self, class: usize) -> String {
        self.cd.labels()[class].clone()
    }

    /// Rows of the table whose kernel contains every class of `n`.
    pub fn rows_over_quotient(&self, n: &NormalSubgroup) -> Vec<usize> {
        (0..self.table.rows().len())
            .filter(|&r| self.table.kernel_contains(r, &n.classes))
            .collect()
    }
}

/// A normal subgroup, recorded by the classes of `G` it is the union of.
#[derive(Debug)]
pub struct NormalSubgroup {
    classes: Vec<usize>,
    order: u64,
    group: PermGroup,
    action: OnceLock<Result<CosetData>>,
    own: OnceLock<Result<SubgroupTable>>,
}

#[derive(Debug)]
struct CosetData {
    image: CosetActionImage,
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

/// Character table of the normal subgroup itself, with its class fusion
/// into `G`.
#[derive(Debug)]
pub struct SubgroupTable {
    pub cd: ClassData,
    pub table: CharTable,
    pub fusion: Vec<usize>,
}

impl NormalSubgroup {
    pub(crate) fn new(classes: Vec<usize>, order: u64, group: PermGroup) -> Self {
        NormalSubgroup {
            classes,
            order,
            group,
            action: OnceLock::new(),
            own: OnceLock::new(),
        }
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn contains_class(&self, c: usize) -> bool {
        self.classes.binary_search(&c).is_ok()
    }

    fn cosets(&self, ctx: &GroupContext) -> Result<&CosetData> {
        self.action
            .get_or_init(|| {
                let image = ctx.group().coset_action(&self.group)?;
                let orbits = image.conjugacy_orbits();
                let mut orbit_of = vec![0; image.num_cosets()];
                for (i, o) in orbits.iter().enumerate() {
                    for &c in o {
                        orbit_of[c] = i;
                    }
                }
                Ok(CosetData {
                    image,
                    orbit_of,
                    orbits,
                })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Classes, table and fusion map of the subgroup, computed on first use.
    pub fn subgroup_table(&self, ctx: &GroupContext) -> Result<&SubgroupTable> {
        self.own
            .get_or_init(|| {
                let name = format!("{}#N{}", ctx.name(), self.order);
                let cd = ClassData::with_options(self.group.clone(), ctx.options.parallel)?;
                let table = character_table(&cd, &name, ctx.options.seed)?;
                let fusion = fusion_map(&ctx.cd, &cd)?;
                Ok(SubgroupTable { cd, table, fusion })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn is_solvable(&self) -> bool {
        self.group.is_solvable()
    }
}

/// One exact comparison inside a theorem check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Cyclotomic>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Cyclotomic>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Witness {
    pub fn note(note: impl Into<String>) -> Self {
        Witness {
            row: None,
            classes: Vec::new(),
            lhs: None,
            rhs: None,
            note: note.into(),
        }
    }

    pub fn values(row: Option<usize>, lhs: Cyclotomic, rhs: Cyclotomic) -> Self {
        Witness {
            row,
            classes: Vec::new(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            note: String::new(),
        }
    }

    pub fn with_classes(mut self, classes: Vec<usize>) -> Self {
        self.classes = classes;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl Condition {
    pub fn new(name: impl Into<String>) -> Self {
        Condition {
            name: name.into(),
            holds: true,
            witnesses: Vec::new(),
        }
    }

    /// Records one comparison; the condition fails if any comparison does.
    pub fn check(&mut self, ok: bool, w: Witness) {
        self.holds &= ok;
        self.witnesses.push(w);
    }

    pub fn equal(&mut self, row: Option<usize>, lhs: Cyclotomic, rhs: Cyclotomic) {
        let ok = lhs == rhs;
        self.check(ok, Witness::values(row, lhs, rhs));
    }

    pub fn fact(name: impl Into<String>, ok: bool, w: Witness) -> Self {
        let mut c = Condition::new(name);
        c.check(ok, w);
        c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

/// Per-condition results of one theorem check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub group: String,
    pub normal_order: u64,
    pub classes: Vec<usize>,
    pub conditions: Vec<Condition>,
    /// Named quantities computed along the way, such as both sides of a
    /// biconditional or a degree.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub reason: String,
    pub outcome: Outcome,
}

impl TheoremReport {
    pub(crate) fn new(theorem: &str, ctx: &GroupContext, normal_order: u64, classes: Vec<usize>) -> Self {
        TheoremReport {
            theorem: theorem.into(),
            group: ctx.name().into(),
            normal_order,
            classes,
            conditions: Vec::new(),
            facts: Vec::new(),
            reason: String::new(),
            outcome: Outcome::Pass,
        }
    }

    pub(crate) fn push(&mut self, c: Condition) {
        self.conditions.push(c);
    }

    pub(crate) fn fact(&mut self, name: &str, value: impl ToString) {
        self.facts.push((name.into(), value.to_string()));
    }

    pub fn get_fact(&self, name: &str) -> Option<&str> {
        self.facts.iter().find(|f| f.0 == name).map(|f| f.1.as_str())
    }

    pub(crate) fn finish(mut self) -> Self {
        if self.outcome != Outcome::NotApplicable {
            self.outcome = if self.conditions.iter().all(|c| c.holds) {
                Outcome::Pass
            } else {
                Outcome::Fail
            };
        }
        self
    }

    pub(crate) fn not_applicable(mut self, reason: impl Into<String>) -> Self {
        self.outcome = Outcome::NotApplicable;
        self.reason = reason.into();
        self
    }

    /// Pass, or not applicable.
    pub fn ok(&self) -> bool {
        self.outcome != Outcome::Fail
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;

    pub fn ctx(spec: &str) -> GroupContext {
        GroupContext::from_spec(&spec.parse().unwrap(), Options::default()).unwrap()
    }

    pub fn normal_of_order(ctx: &GroupContext, order: u64) -> &NormalSubgroup {
        let mut it = ctx.normal_subgroups().iter().filter(|n| n.order() == order);
        let n = it.next().expect("normal subgroup of that order");
        assert!(it.next().is_none(), "several normal subgroups of order {order}");
        n
    }

    /// Representatives of the classes of `G` outside `n` with the given
    /// element order.
    pub fn reps_of_order(ctx: &GroupContext, n: &NormalSubgroup, order: u64) -> Vec<usize> {
        let cd = ctx.classes();
        (0..cd.num_classes())
            .filter(|&c| cd.element_order(c) == order && !n.contains_class(c))
            .collect()
    }
}
