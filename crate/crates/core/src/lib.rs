//! Exact character tables of small finite groups, and executable checks of
//! when a coset `Nx` of a normal subgroup lies in the union of two
//! conjugacy classes.

pub mod catalog;
pub mod cli;
pub mod chartable;
pub mod classes;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod group;
pub mod lab;
pub mod modp;
pub mod tablefmt;
pub mod perm;
pub mod report;

pub use catalog::{catalog_sweep_list, GroupSpec};
pub use chartable::{character_table, CharTable, Character, TableHeader, DEFAULT_SEED};
pub use classes::ClassData;
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use group::{CosetActionImage, PermGroup, DEFAULT_ELEMENT_CAP};
pub use perm::Permutation;
