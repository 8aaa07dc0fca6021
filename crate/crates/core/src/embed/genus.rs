//! Orientable and nonorientable genus of arbitrary simple graphs.
//!
//! The graph is split into blocks, each block is reduced to its core and
//! the core is searched surface by surface, starting from the Euler bound.
//! Block embeddings are joined at cut vertices by concatenating rotations,
//! which adds Euler genera; the merged scheme is traced once more before it
//! is returned.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::planar::block_rotation;
use super::reduce::{reduce, Reduction};
use super::scheme::{edge_index, trace_faces, EmbeddingScheme};
use super::search::{search, Mode, Outcome};
use crate::{Error, Result, SimpleGraph};

/// Default node budget for one genus computation.
pub const DEFAULT_GENUS_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusOptions {
    /// Search nodes allowed across all blocks and surfaces.
    pub budget: u64,
    /// Give up (with bounds) as soon as the lower bound exceeds this value.
    pub stop_above: Option<usize>,
}

impl Default for GenusOptions {
    fn default() -> Self {
        GenusOptions { budget: DEFAULT_GENUS_BUDGET, stop_above: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum GenusStatus {
    Exact(usize),
    Bounds { lower: usize, upper: Option<usize> },
}

/// Why the lower bound holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum LowerBound {
    /// Zero, or planarity.
    Trivial,
    /// Face count against vertices, edges and girth of the block cores.
    Euler,
    /// Exhaustive search excluded every smaller surface for some block.
    Exhausted,
    /// A forbidden subgraph or disjoint pair of nonplanar subgraphs.
    Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GenusResult {
    pub status: GenusStatus,
    /// Embedding realising the upper bound.
    pub scheme: Option<EmbeddingScheme>,
    pub lower_bound: LowerBound,
    pub nodes_explored: u64,
}

impl GenusResult {
    pub fn exact(&self) -> Option<usize> {
        match self.status {
            GenusStatus::Exact(v) => Some(v),
            GenusStatus::Bounds { .. } => None,
        }
    }

    pub fn lower(&self) -> usize {
        match self.status {
            GenusStatus::Exact(v) | GenusStatus::Bounds { lower: v, .. } => v,
        }
    }

    pub fn upper(&self) -> Option<usize> {
        match self.status {
            GenusStatus::Exact(v) => Some(v),
            GenusStatus::Bounds { upper, .. } => upper,
        }
    }
}

/// One block of the input and its reduced core, relabelled to `0..k`.
struct Block {
    /// Global edge id of every block edge, in reduction id order.
    global: Vec<usize>,
    red: Reduction,
    verts: Vec<usize>,
    core: Vec<(usize, usize)>,
    core_ids: Vec<usize>,
    planar: Option<Vec<(usize, Vec<usize>)>>,
    has_cycle: bool,
    /// Lower bound on the Euler genus of the block.
    euler_lb: usize,
}

/// A core scheme: rotation over local vertices by core edge index, signs
/// by core edge index.
type CoreScheme = EmbeddingScheme;

/// Euler genus lower bound for a connected graph with `v` vertices, `e`
/// edges and girth `g`.
pub fn euler_bound(v: usize, e: usize, g: usize) -> usize {
    let num = (e * (g - 2)) as i64 - (g * v) as i64 + 2 * g as i64;
    if num <= 0 {
        0
    } else {
        (num as usize).div_ceil(g)
    }
}

fn blocks_of(g: &SimpleGraph) -> Vec<Block> {
    let edges = g.edges();
    let mut out = Vec::new();
    for block in g.blocks() {
        let mut pairs: Vec<(usize, usize)> = block.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        pairs.sort_unstable();
        let global = pairs.iter().map(|&(u, v)| edge_index(&edges, u, v).unwrap()).collect();
        let red = reduce(&pairs);
        let verts = red.core_vertices.clone();
        let local = |x: usize| verts.binary_search(&x).unwrap();
        let core: Vec<(usize, usize)> = red.core_edges.iter().map(|&(u, v, _)| (local(u), local(v))).collect();
        let core_ids = red.core_edges.iter().map(|&(_, _, id)| id).collect();
        let core_pairs: Vec<(usize, usize)> = red.core_edges.iter().map(|&(u, v, _)| (u, v)).collect();
        let planar = if core_pairs.is_empty() { Some(Vec::new()) } else { block_rotation(&core_pairs) };
        let euler_lb = if planar.is_some() {
            0
        } else {
            let girth = crate::graph::girth(&SimpleGraph::from_edges(verts.len(), &core)).unwrap_or(3);
            euler_bound(verts.len(), core.len(), girth).max(1)
        };
        out.push(Block { global, red, has_cycle: pairs.len() > 1, verts, core, core_ids, planar, euler_lb });
    }
    out
}

impl Block {
    fn search(&self, eg: usize, mode: Mode, nodes: &mut u64, budget: u64) -> Outcome {
        search(self.verts.len(), &self.core, eg, mode, nodes, budget)
    }

    /// Plane scheme of the core.
    fn planar_scheme(&self) -> CoreScheme {
        let rot = self.planar.as_ref().expect("planar core");
        let mut rotation = vec![Vec::new(); self.verts.len()];
        let local = |x: usize| self.verts.binary_search(&x).unwrap();
        for (v, nbrs) in rot {
            let a = local(*v);
            rotation[a] = nbrs
                .iter()
                .map(|&w| {
                    let b = local(w);
                    self.core.binary_search(&(a.min(b), a.max(b))).unwrap()
                })
                .collect();
        }
        EmbeddingScheme::orientable(rotation, self.core.len())
    }

    /// Any scheme at all, as an upper bound when the search gives up.
    fn fallback_scheme(&self) -> CoreScheme {
        let mut rotation = vec![Vec::new(); self.verts.len()];
        for (e, &(u, v)) in self.core.iter().enumerate() {
            rotation[u].push(e);
            rotation[v].push(e);
        }
        EmbeddingScheme::orientable(rotation, self.core.len())
    }

    /// Lifts a core scheme and writes it into the global scheme.
    fn install(&self, core: &CoreScheme, out: &mut EmbeddingScheme) {
        let n = out.rotation.len();
        let rot: Vec<(usize, Vec<usize>)> = core
            .rotation
            .iter()
            .enumerate()
            .map(|(i, r)| (self.verts[i], r.iter().map(|&c| self.core_ids[c]).collect()))
            .collect();
        let signs: Vec<(usize, i8)> = core.signs.iter().enumerate().map(|(c, &s)| (self.core_ids[c], s)).collect();
        let (rot, signs) = self.red.lift(n, &rot, &signs);
        for (v, r) in rot.into_iter().enumerate() {
            out.rotation[v].extend(r.into_iter().map(|e| self.global[e]));
        }
        for (e, s) in signs.into_iter().enumerate() {
            out.signs[self.global[e]] = s;
        }
    }
}

fn assemble(g: &SimpleGraph, blocks: &[Block], schemes: &[CoreScheme]) -> EmbeddingScheme {
    let mut out = EmbeddingScheme::orientable(vec![Vec::new(); g.n()], g.edge_count());
    for (b, s) in blocks.iter().zip(schemes) {
        b.install(s, &mut out);
    }
    out
}

fn check(g: &SimpleGraph, s: &EmbeddingScheme, euler: usize, orientable: bool) -> Result<()> {
    let t = trace_faces(g, s)?;
    if t.euler_genus != euler || (t.orientable != orientable && euler > 0) {
        return Err(Error::InvalidScheme(format!(
            "merged scheme traces to Euler genus {} ({}), expected {euler}",
            t.euler_genus,
            if t.orientable { "orientable" } else { "nonorientable" }
        )));
    }
    Ok(())
}

/// Orientable genus of `g`.
pub fn orientable_genus(g: &SimpleGraph, opts: GenusOptions) -> Result<GenusResult> {
    let blocks = blocks_of(g);
    let mut nodes = 0u64;
    let mut lb: Vec<usize> = blocks.iter().map(|b| b.euler_lb.div_ceil(2)).collect();
    let mut schemes: Vec<Option<CoreScheme>> =
        blocks.iter().map(|b| b.planar.as_ref().map(|_| b.planar_scheme())).collect();
    let mut exhausted = false;
    let mut gave_up = false;
    'blocks: for (i, b) in blocks.iter().enumerate() {
        while schemes[i].is_none() {
            if opts.stop_above.is_some_and(|s| lb.iter().sum::<usize>() > s) {
                break 'blocks;
            }
            match b.search(2 * lb[i], Mode::Orientable, &mut nodes, opts.budget) {
                Outcome::Found(s) => schemes[i] = Some(s),
                Outcome::Infeasible => {
                    lb[i] += 1;
                    exhausted = true;
                }
                Outcome::Budget => {
                    gave_up = true;
                    break 'blocks;
                }
            }
        }
    }
    let lower: usize = lb.iter().sum();
    let lower_bound = if exhausted {
        LowerBound::Exhausted
    } else if lower > 0 {
        LowerBound::Euler
    } else {
        LowerBound::Trivial
    };
    if schemes.iter().all(Option::is_some) {
        let schemes: Vec<CoreScheme> = schemes.into_iter().map(Option::unwrap).collect();
        let s = assemble(g, &blocks, &schemes);
        check(g, &s, 2 * lower, true)?;
        return Ok(GenusResult {
            status: GenusStatus::Exact(lower),
            scheme: Some(s),
            lower_bound,
            nodes_explored: nodes,
        });
    }
    let (upper, scheme) = if gave_up {
        let schemes: Vec<CoreScheme> =
            blocks.iter().zip(schemes).map(|(b, s)| s.unwrap_or_else(|| b.fallback_scheme())).collect();
        let s = assemble(g, &blocks, &schemes);
        let t = trace_faces(g, &s)?;
        (Some(t.euler_genus / 2), Some(s))
    } else {
        (None, None)
    };
    Ok(GenusResult { status: GenusStatus::Bounds { lower, upper }, scheme, lower_bound, nodes_explored: nodes })
}

/// Per-block answer of the nonorientable driver.
struct Minimum {
    euler: usize,
    scheme: CoreScheme,
    /// The block only reaches `euler` orientably.
    orientable_only: bool,
}

/// Nonorientable genus of `g`, with the convention that planar graphs
/// have nonorientable genus 0.
///
/// The minimum Euler genus of each block is found together with whether a
/// nonorientable embedding attains it; the graph needs one extra crosscap
/// exactly when no block has such an embedding.
pub fn nonorientable_genus(g: &SimpleGraph, opts: GenusOptions) -> Result<GenusResult> {
    let blocks = blocks_of(g);
    let mut nodes = 0u64;
    if blocks.iter().all(|b| b.planar.is_some()) {
        let schemes: Vec<CoreScheme> = blocks.iter().map(Block::planar_scheme).collect();
        let s = assemble(g, &blocks, &schemes);
        check(g, &s, 0, true)?;
        return Ok(GenusResult {
            status: GenusStatus::Exact(0),
            scheme: Some(s),
            lower_bound: LowerBound::Trivial,
            nodes_explored: 0,
        });
    }
    let mut lb: Vec<usize> = blocks.iter().map(|b| b.euler_lb).collect();
    let mut found: Vec<Option<Minimum>> = blocks
        .iter()
        .map(|b| b.planar.as_ref().map(|_| Minimum { euler: 0, scheme: b.planar_scheme(), orientable_only: true }))
        .collect();
    let mut exhausted = false;
    let mut gave_up = false;
    let over = |lb: &[usize]| opts.stop_above.is_some_and(|s| lb.iter().sum::<usize>() > s);
    'blocks: for (i, b) in blocks.iter().enumerate() {
        while found[i].is_none() {
            if over(&lb) {
                break 'blocks;
            }
            let k = lb[i];
            let mut orientable = None;
            if k.is_multiple_of(2) {
                match b.search(k, Mode::Orientable, &mut nodes, opts.budget) {
                    Outcome::Found(s) => orientable = Some(s),
                    Outcome::Infeasible => {}
                    Outcome::Budget => {
                        gave_up = true;
                        break 'blocks;
                    }
                }
            }
            match b.search(k, Mode::Nonorientable, &mut nodes, opts.budget) {
                Outcome::Found(s) => found[i] = Some(Minimum { euler: k, scheme: s, orientable_only: false }),
                Outcome::Infeasible => match orientable {
                    Some(s) => found[i] = Some(Minimum { euler: k, scheme: s, orientable_only: true }),
                    None => {
                        lb[i] += 1;
                        exhausted = true;
                    }
                },
                Outcome::Budget => {
                    gave_up = true;
                    break 'blocks;
                }
            }
        }
    }
    // one extra crosscap when every block is only orientably minimal
    let all_simple = found.iter().all(|m| m.as_ref().is_some_and(|m| m.orientable_only));
    let lower: usize = lb.iter().sum::<usize>() + usize::from(all_simple);
    let lower_bound = if exhausted { LowerBound::Exhausted } else { LowerBound::Euler };
    if found.iter().all(Option::is_some) {
        let mut mins: Vec<Minimum> = found.into_iter().map(Option::unwrap).collect();
        let twist = blocks.iter().position(|b| b.planar.is_some() && b.has_cycle);
        if all_simple && twist.is_none() {
            // no planar block with a cycle: search one more crosscap
            let i = blocks.iter().position(|b| b.planar.is_none()).unwrap();
            match blocks[i].search(mins[i].euler + 1, Mode::Nonorientable, &mut nodes, opts.budget) {
                Outcome::Found(s) => mins[i] = Minimum { euler: mins[i].euler + 1, scheme: s, orientable_only: false },
                Outcome::Infeasible => {
                    return Err(Error::InvalidScheme("no embedding with one more crosscap".into()));
                }
                Outcome::Budget => {
                    return Ok(GenusResult {
                        status: GenusStatus::Bounds { lower, upper: None },
                        scheme: None,
                        lower_bound,
                        nodes_explored: nodes,
                    });
                }
            }
        }
        let schemes: Vec<CoreScheme> = mins.into_iter().map(|m| m.scheme).collect();
        let mut s = assemble(g, &blocks, &schemes);
        if all_simple {
            // in a 2-connected plane block every edge separates two distinct
            // faces, so twisting one merges them into one more crosscap
            if let Some(i) = twist {
                s.signs[blocks[i].global[0]] = -1;
            }
        }
        check(g, &s, lower, false)?;
        return Ok(GenusResult {
            status: GenusStatus::Exact(lower),
            scheme: Some(s),
            lower_bound,
            nodes_explored: nodes,
        });
    }
    let lower = lb.iter().sum::<usize>();
    let (upper, scheme) = if gave_up {
        let schemes: Vec<CoreScheme> =
            blocks.iter().zip(found).map(|(b, m)| m.map(|m| m.scheme).unwrap_or_else(|| b.fallback_scheme())).collect();
        let s = assemble(g, &blocks, &schemes);
        let t = trace_faces(g, &s)?;
        // an orientable scheme needs one more crosscap to count
        (Some(t.euler_genus + usize::from(t.orientable)), None)
    } else {
        (None, None)
    };
    Ok(GenusResult { status: GenusStatus::Bounds { lower, upper }, scheme, lower_bound, nodes_explored: nodes })
}

/// Per-block Euler genus lower bounds (zero for planar blocks).
pub fn block_euler_bounds(g: &SimpleGraph) -> Vec<usize> {
    blocks_of(g).into_iter().map(|b| b.euler_lb).collect()
}
