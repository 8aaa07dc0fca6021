//! Full per-group classification.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::graph::intersection_graph;
use super::profile::{GroupClass, GroupProfile};
use crate::embed::{
    is_planar, kuratowski_witness, nonorientable_genus, nonprojectivity_certificate, nontoroidality_certificate,
    orientable_genus, trace_faces, Certificate, GenusOptions, GenusResult, GenusStatus, LowerBound,
    DEFAULT_GENUS_BUDGET,
};
use crate::graph::{
    clique_cover_number, find_subgraph, girth, independence_number, structural_predicates, Predicates,
    DEFAULT_SUBGRAPH_BUDGET,
};
use crate::lattice::{enumerate_subgroups, prime_order_count};
use crate::{FamilySpec, FiniteGroup, Result, SimpleGraph, SubgroupLattice};

/// Node budgets for one classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Budgets {
    pub genus_nodes: u64,
    /// Genus searches stop once the lower bound passes this value.
    pub genus_stop_above: Option<usize>,
    pub subgraph_nodes: u64,
    pub cover_nodes: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            genus_nodes: DEFAULT_GENUS_BUDGET,
            genus_stop_above: Some(1),
            subgraph_nodes: DEFAULT_SUBGRAPH_BUDGET,
            cover_nodes: 50_000_000,
        }
    }
}

/// Subgraph freeness for the patterns the graph-class results use. `None`
/// means the search ran out of budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
pub struct FreenessRecord {
    pub k5: Option<bool>,
    pub k4: Option<bool>,
    pub c4: Option<bool>,
    pub c5: Option<bool>,
    pub p2: Option<bool>,
    pub p3: Option<bool>,
    pub p4: Option<bool>,
    pub k13: Option<bool>,
    pub k14: Option<bool>,
    pub k23: Option<bool>,
}

/// The patterns of [`FreenessRecord`], by name.
pub fn freeness_patterns() -> [(&'static str, SimpleGraph); 10] {
    [
        ("K5", SimpleGraph::complete(5)),
        ("K4", SimpleGraph::complete(4)),
        ("C4", SimpleGraph::cycle(4)),
        ("C5", SimpleGraph::cycle(5)),
        ("P2", SimpleGraph::path(2)),
        ("P3", SimpleGraph::path(3)),
        ("P4", SimpleGraph::path(4)),
        ("K1,3", SimpleGraph::complete_bipartite(1, 3)),
        ("K1,4", SimpleGraph::complete_bipartite(1, 4)),
        ("K2,3", SimpleGraph::complete_bipartite(2, 3)),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Witness {
    pub name: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ClassificationReport {
    pub name: String,
    pub family: FamilySpec,
    pub order: usize,
    pub class: GroupClass,
    pub vertices: usize,
    pub edges: usize,
    pub planar: bool,
    pub orientable_genus: GenusResult,
    pub nonorientable_genus: GenusResult,
    /// `None` when decided neither way within budget.
    pub toroidal: Option<bool>,
    pub projective_planar: Option<bool>,
    /// `None` for an acyclic graph.
    pub girth: Option<usize>,
    pub structure: Predicates,
    pub freeness: FreenessRecord,
    pub alpha: Option<usize>,
    pub theta: Option<usize>,
    pub prime_order_subgroups: usize,
    pub witnesses: Vec<Witness>,
    /// Some computation ran out of budget; the report is partial.
    pub budget_exceeded: bool,
}

impl ClassificationReport {
    /// Independence number, clique cover number and the number of prime
    /// order subgroups all agree.
    pub fn cover_identity_holds(&self) -> bool {
        self.alpha == Some(self.prime_order_subgroups) && self.theta == Some(self.prime_order_subgroups)
    }
}

/// Exact genus when it is at most `stop_above`; otherwise a lower bound
/// above one backed by search, the Euler bound or a certificate.
pub fn decide_genus(
    g: &SimpleGraph,
    orientable: bool,
    budgets: &Budgets,
) -> Result<(GenusResult, Option<Certificate>)> {
    let certify =
        |g: &SimpleGraph| if orientable { nontoroidality_certificate(g) } else { nonprojectivity_certificate(g) };
    let certified = |c: Certificate, nodes: u64| {
        let r = GenusResult {
            status: GenusStatus::Bounds { lower: 2, upper: None },
            scheme: None,
            lower_bound: LowerBound::Certificate,
            nodes_explored: nodes,
        };
        (r, Some(c))
    };
    let planar = is_planar(g);
    if !planar && budgets.genus_stop_above.is_some_and(|s| s < 2) {
        if let Some(c) = certify(g) {
            return Ok(certified(c, 0));
        }
    }
    let opts = GenusOptions { budget: budgets.genus_nodes, stop_above: budgets.genus_stop_above };
    let r = if orientable { orientable_genus(g, opts)? } else { nonorientable_genus(g, opts)? };
    if r.exact().is_none() && r.lower() < 2 && !planar {
        if let Some(c) = certify(g) {
            return Ok(certified(c, r.nodes_explored));
        }
    }
    Ok((r, None))
}

/// Re-traces the stored scheme of an exact genus result and checks that it
/// realises the claimed surface.
pub fn scheme_realises(g: &SimpleGraph, r: &GenusResult, orientable: bool) -> bool {
    let (Some(k), Some(s)) = (r.exact(), &r.scheme) else { return false };
    match trace_faces(g, s) {
        Ok(t) => {
            if orientable {
                t.orientable && t.euler_genus == 2 * k
            } else {
                t.euler_genus == k && (k == 0 || !t.orientable)
            }
        }
        Err(_) => false,
    }
}

fn surface_flag(r: &GenusResult) -> Option<bool> {
    match r.exact() {
        Some(k) => Some(k == 1),
        None => (r.lower() >= 2).then_some(false),
    }
}

pub fn freeness(g: &SimpleGraph, budget: u64, witnesses: &mut Vec<Witness>) -> FreenessRecord {
    let mut vals = [None; 10];
    for (i, (name, pattern)) in freeness_patterns().iter().enumerate() {
        vals[i] = match find_subgraph(g, pattern, budget) {
            Ok(Some(w)) => {
                if *name == "K5" {
                    witnesses.push(Witness { name: "K5".into(), detail: format!("{w:?}") });
                }
                Some(false)
            }
            Ok(None) => Some(true),
            Err(_) => None,
        };
    }
    let [k5, k4, c4, c5, p2, p3, p4, k13, k14, k23] = vals;
    FreenessRecord { k5, k4, c4, c5, p2, p3, p4, k13, k14, k23 }
}

/// Everything the harness knows how to decide about the intersection graph
/// of `g`.
pub fn classify(g: &FiniteGroup, budgets: &Budgets) -> Result<ClassificationReport> {
    let lat = enumerate_subgroups(g);
    classify_with(g, &lat, budgets)
}

pub fn classify_with(g: &FiniteGroup, lat: &SubgroupLattice, budgets: &Budgets) -> Result<ClassificationReport> {
    let ig = intersection_graph(lat);
    let class = GroupProfile::new(g, lat).class();
    let mut witnesses = Vec::new();
    let planar = is_planar(&ig);
    if let Some(k) = kuratowski_witness(&ig) {
        witnesses.push(Witness { name: format!("{} subdivision", k.kind), detail: format!("{:?}", k.branch_vertices) });
    }
    let (og, oc) = decide_genus(&ig, true, budgets)?;
    let (ng, nc) = decide_genus(&ig, false, budgets)?;
    for (label, c) in [("nontoroidal", oc), ("nonprojective", nc)] {
        if let Some(c) = c {
            witnesses.push(Witness { name: format!("{label}: {}", c.describe()), detail: format!("{c:?}") });
        }
    }
    let freeness = freeness(&ig, budgets.subgraph_nodes, &mut witnesses);
    let alpha = independence_number(&ig, budgets.cover_nodes).ok().map(|r| r.value);
    let theta = clique_cover_number(&ig, budgets.cover_nodes).ok().map(|r| r.value);
    let toroidal = surface_flag(&og);
    let projective_planar = surface_flag(&ng);
    let f = &freeness;
    let budget_exceeded = toroidal.is_none()
        || projective_planar.is_none()
        || alpha.is_none()
        || theta.is_none()
        || [f.k5, f.k4, f.c4, f.c5, f.p2, f.p3, f.p4, f.k13, f.k14, f.k23].iter().any(Option::is_none);
    Ok(ClassificationReport {
        name: g.name().into(),
        family: g.family().clone(),
        order: g.order(),
        class,
        vertices: ig.n(),
        edges: ig.edge_count(),
        planar,
        orientable_genus: og,
        nonorientable_genus: ng,
        toroidal,
        projective_planar,
        girth: girth(&ig),
        structure: structural_predicates(&ig),
        freeness,
        alpha,
        theta,
        prime_order_subgroups: prime_order_count(lat),
        witnesses,
        budget_exceeded,
    })
}
