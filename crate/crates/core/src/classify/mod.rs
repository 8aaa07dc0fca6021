//! Intersection graphs of subgroups and the classification harness.

mod catalog;
mod claims;
mod graph;
mod models;
mod profile;
mod report;
mod suites;

pub use catalog::{catalog, CATALOG_MAX_RANK};
pub use claims::*;
pub use graph::intersection_graph;
pub use models::{expected_model_for, formula_cases, model_for_rule, ExpectedModel, FormulaCase, ModelRule};
pub use profile::{GroupClass, GroupProfile, SylowData};
pub use report::{
    classify, classify_with, decide_genus, freeness, freeness_patterns, scheme_realises, Budgets, ClassificationReport,
    FreenessRecord, Witness,
};
pub use suites::{
    plan, uniqueness_check, verify_claims, GraphPool, Instance, RowStatus, Suite, SuitePlan, SuiteReport, SuiteRow,
    UniquenessReport,
};
