//! Parallel suite execution and report files.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use sgi_core::algebra::build_family;
use sgi_core::classify::{intersection_graph, plan, ClassificationReport, RowStatus, Suite, SuiteReport, SuiteRow};
use sgi_core::lattice::enumerate_subgroups;
use sgi_core::{FamilySpec, SimpleGraph};

use crate::config::{OutputFormat, RunConfig};
use crate::formats::{lattice_csv, to_adjacency, to_dot};
use crate::store::{Store, Surface};
use crate::SgiError;

/// Runs every instance of the suite on the rayon pool. Rows come back in
/// instance order whatever the scheduling.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<SuiteReport, SgiError> {
    cfg.validate()?;
    let p = plan(suite, cfg.max_order)?;
    let budgets = cfg.budgets();
    let chunks: Vec<Result<Vec<SuiteRow>, sgi_core::Error>> =
        (0..p.instances.len()).into_par_iter().map(|i| p.run(i, &budgets)).collect();
    let mut rows = Vec::new();
    for c in chunks {
        rows.extend(c?);
    }
    let mut report = SuiteReport { suite: suite.id().into(), max_order: cfg.max_order, rows };
    if let Some(dir) = &cfg.output_dir {
        write_suite(&Store::new(dir), &mut report, cfg)?;
    }
    Ok(report)
}

fn graph_of(spec: &FamilySpec) -> Result<SimpleGraph, SgiError> {
    let g = build_family(spec, sgi_core::DEFAULT_MAX_ORDER)?;
    Ok(intersection_graph(&enumerate_subgroups(&g)))
}

/// Stores genus-one schemes as fixtures, points the rows at them and writes
/// the report files.
fn write_suite(store: &Store, report: &mut SuiteReport, cfg: &RunConfig) -> Result<(), SgiError> {
    for row in &mut report.rows {
        let Some(scheme) = &row.scheme else { continue };
        let spec: FamilySpec = row.params.parse()?;
        let surface =
            if row.suite == Suite::ProjectivePlanar.id() { Surface::Nonorientable(1) } else { Surface::Orientable(1) };
        let rel = store.fixture(&spec, &graph_of(&spec)?, surface, scheme)?;
        row.witness = rel.display().to_string();
    }
    let dir = Path::new("suites").join(format!("{}-{}", report.suite, report.max_order));
    if cfg.wants(OutputFormat::Csv) {
        store.write(&dir.join("rows.csv"), &rows_csv(&report.rows)?)?;
    }
    if cfg.wants(OutputFormat::Report) {
        store.write(&dir.join("report.json"), &(serde_json::to_string_pretty(report)? + "\n"))?;
    }
    Ok(())
}

pub fn rows_csv(rows: &[SuiteRow]) -> Result<String, SgiError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| SgiError::Io { path: "<memory>".into(), source: e.into_error() })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Writes the requested per-group files for a classification and returns
/// the group directory.
pub fn write_classification(
    store: &Store,
    spec: &FamilySpec,
    report: &ClassificationReport,
    cfg: &RunConfig,
) -> Result<PathBuf, SgiError> {
    let g = build_family(spec, cfg.max_order)?;
    let lat = enumerate_subgroups(&g);
    let ig = intersection_graph(&lat);
    let dir = store.group_dir(spec)?;
    if cfg.wants(OutputFormat::Report) {
        store.write(&dir.join("report.json"), &(serde_json::to_string_pretty(report)? + "\n"))?;
    }
    if cfg.wants(OutputFormat::Csv) {
        store.write(&dir.join("lattice.csv"), &lattice_csv(&lat)?)?;
    }
    if cfg.wants(OutputFormat::Dot) {
        store.write(&dir.join("graph.dot"), &to_dot(&ig))?;
    }
    if cfg.wants(OutputFormat::Adjacency) {
        store.write(&dir.join("graph.adj"), &to_adjacency(&ig))?;
    }
    for (r, orientable) in [(&report.orientable_genus, true), (&report.nonorientable_genus, false)] {
        if let (Some(k), Some(s)) = (r.exact(), &r.scheme) {
            let surface = if orientable { Surface::Orientable(k) } else { Surface::Nonorientable(k) };
            store.fixture(spec, &ig, surface, s)?;
        }
    }
    Ok(dir)
}

/// Process exit status for a suite: failures beat budget overruns.
pub fn suite_exit(report: &SuiteReport) -> i32 {
    if report.count(RowStatus::Fail) > 0 {
        1
    } else if report.count(RowStatus::Budget) > 0 {
        2
    } else {
        0
    }
}
