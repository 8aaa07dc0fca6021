//! Shared pieces of the acceptance run: building groups by spec and the
//! per-criterion outcome line.

use std::fmt;

use sgi_core::algebra::build_family;
use sgi_core::classify::intersection_graph;
use sgi_core::lattice::enumerate_subgroups;
use sgi_core::{FamilySpec, FiniteGroup, SimpleGraph, SubgroupLattice};

/// Largest group any check builds.
pub const MAX_GROUP_ORDER: usize = 512;

pub struct Subject {
    pub spec: FamilySpec,
    pub group: FiniteGroup,
    pub lattice: SubgroupLattice,
    pub graph: SimpleGraph,
}

/// Group, subgroup lattice and intersection graph of a family spec.
pub fn subject(spec: &str) -> Subject {
    let spec: FamilySpec = spec.parse().unwrap_or_else(|e| panic!("{spec}: {e}"));
    subject_of(&spec)
}

pub fn subject_of(spec: &FamilySpec) -> Subject {
    let group = build_family(spec, MAX_GROUP_ORDER).unwrap_or_else(|e| panic!("{spec}: {e}"));
    let lattice = enumerate_subgroups(&group);
    let graph = intersection_graph(&lattice);
    Subject { spec: spec.clone(), group, lattice, graph }
}

/// Result of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub criterion: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {verdict}: {}; {}", self.criterion, self.title, self.detail)
    }
}
