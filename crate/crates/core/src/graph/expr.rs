use alloc::boxed::Box;
use alloc::format;
use core::fmt;

use super::SimpleGraph;
use crate::{Error, Result};

/// Closed-form description of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphExpr {
    K(usize),
    Kbar(usize),
    Kmn(usize, usize),
    C(usize),
    /// Path with the given number of edges.
    P(usize),
    Union(Box<GraphExpr>, Box<GraphExpr>),
    Join(Box<GraphExpr>, Box<GraphExpr>),
    Complement(Box<GraphExpr>),
    CopiesOf(usize, Box<GraphExpr>),
    /// Attach `count` new pendant vertices to vertex `at` of the inner graph.
    PendantsAt {
        inner: Box<GraphExpr>,
        at: usize,
        count: usize,
    },
}

impl GraphExpr {
    pub fn union(a: GraphExpr, b: GraphExpr) -> Self {
        GraphExpr::Union(Box::new(a), Box::new(b))
    }

    pub fn join(a: GraphExpr, b: GraphExpr) -> Self {
        GraphExpr::Join(Box::new(a), Box::new(b))
    }

    pub fn copies(k: usize, e: GraphExpr) -> Self {
        GraphExpr::CopiesOf(k, Box::new(e))
    }

    pub fn complement(e: GraphExpr) -> Self {
        GraphExpr::Complement(Box::new(e))
    }

    pub fn pendants(inner: GraphExpr, at: usize, count: usize) -> Self {
        GraphExpr::PendantsAt { inner: Box::new(inner), at, count }
    }

    fn is_atom(&self) -> bool {
        !matches!(self, GraphExpr::Union(..) | GraphExpr::Join(..))
    }
}

/// Evaluates an expression to a concrete graph.
pub fn eval_expr(e: &GraphExpr) -> Result<SimpleGraph> {
    let bad = |m: &str| Err(Error::MalformedExpression(format!("{e}: {m}")));
    Ok(match e {
        GraphExpr::K(0) | GraphExpr::Kbar(0) => return bad("needs at least one vertex"),
        GraphExpr::K(n) => SimpleGraph::complete(*n),
        GraphExpr::Kbar(n) => SimpleGraph::new(*n),
        GraphExpr::Kmn(m, n) => {
            if *m == 0 || *n == 0 {
                return bad("both sides must be nonempty");
            }
            SimpleGraph::complete_bipartite(*m, *n)
        }
        GraphExpr::C(n) => {
            if *n < 3 {
                return bad("cycles need at least three vertices");
            }
            SimpleGraph::cycle(*n)
        }
        GraphExpr::P(k) => SimpleGraph::path(*k),
        GraphExpr::Union(a, b) => eval_expr(a)?.disjoint_union(&eval_expr(b)?),
        GraphExpr::Join(a, b) => eval_expr(a)?.join(&eval_expr(b)?),
        GraphExpr::Complement(a) => eval_expr(a)?.complement(),
        GraphExpr::CopiesOf(k, a) => {
            if *k == 0 {
                return bad("zero copies");
            }
            let one = eval_expr(a)?;
            let mut g = one.clone();
            for _ in 1..*k {
                g = g.disjoint_union(&one);
            }
            g
        }
        GraphExpr::PendantsAt { inner, at, count } => {
            let base = eval_expr(inner)?;
            if *at >= base.n() {
                return bad("pendant anchor out of range");
            }
            let mut g = base.disjoint_union(&SimpleGraph::new(*count));
            for i in 0..*count {
                g.add_edge(*at, base.n() + i);
            }
            g
        }
    })
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &GraphExpr| {
            if e.is_atom() {
                write!(f, "{e}")
            } else {
                write!(f, "({e})")
            }
        };
        match self {
            GraphExpr::K(n) => write!(f, "K{n}"),
            GraphExpr::Kbar(n) => write!(f, "Kbar{n}"),
            GraphExpr::Kmn(m, n) => write!(f, "K{m},{n}"),
            GraphExpr::C(n) => write!(f, "C{n}"),
            GraphExpr::P(n) => write!(f, "P{n}"),
            GraphExpr::Union(a, b) => {
                wrap(f, a)?;
                f.write_str(" u ")?;
                wrap(f, b)
            }
            GraphExpr::Join(a, b) => {
                wrap(f, a)?;
                f.write_str(" + ")?;
                wrap(f, b)
            }
            GraphExpr::Complement(a) => {
                f.write_str("co-")?;
                wrap(f, a)
            }
            GraphExpr::CopiesOf(k, a) => {
                write!(f, "{k}")?;
                wrap(f, a)
            }
            GraphExpr::PendantsAt { inner, at, count } => {
                wrap(f, inner)?;
                write!(f, "[+{count}@{at}]")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use GraphExpr::*;

    #[test]
    fn sizes() {
        let e = GraphExpr::join(K(1), GraphExpr::union(K(4), Kbar(2)));
        let g = eval_expr(&e).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 12));
        assert_eq!(e.to_string(), "K1 + (K4 u Kbar2)");
        let g = eval_expr(&GraphExpr::union(Kmn(3, 3), K(2))).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 10));
        assert!(matches!(eval_expr(&C(2)), Err(Error::MalformedExpression(_))));
        assert!(eval_expr(&K(0)).is_err());
        let g = eval_expr(&GraphExpr::pendants(K(3), 1, 2)).unwrap();
        assert_eq!(g.degree(1), 4);
    }
}
