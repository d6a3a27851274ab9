//! The statement catalog and the sweep runner built on top of it.

pub mod catalog;
pub mod classical;
pub mod runner;

pub use catalog::{all, build_identity, build_q, classical_sides, get, q1_expected, verify_identity};
pub use catalog::{Axis, Statement, StatementId, StatementKind};
pub use runner::{verify_range, verify_statement, InstanceRecord, Report, RunConfig, Summary};
