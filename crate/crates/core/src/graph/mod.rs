//! Simple undirected graphs and the combinatorial tests run on them.

mod cover;
mod expr;
mod iso;
mod props;
mod simple;
mod subgraph;

pub use cover::{clique_cover_number, independence_number, CoverResult};
pub use expr::{eval_expr, GraphExpr};
pub use iso::{is_isomorphic, is_isomorphic_brute};
pub use props::{girth, structural_predicates, Predicates};
pub use simple::SimpleGraph;
pub use subgraph::{find_subgraph, for_each_subgraph, has_subgraph, x_free, DEFAULT_SUBGRAPH_BUDGET};
