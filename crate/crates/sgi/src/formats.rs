//! Text formats: adjacency lists, DOT, lattice CSV and embedding fixtures.

use std::fmt::Write as _;
use std::str::FromStr;

use sgi_core::embed::EmbeddingScheme;
use sgi_core::{FiniteGroup, SimpleGraph, SubgroupLattice};

use crate::SgiError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphFormat {
    Dot,
    Adjacency,
}

impl FromStr for GraphFormat {
    type Err = SgiError;
    fn from_str(s: &str) -> Result<Self, SgiError> {
        match s {
            "dot" => Ok(GraphFormat::Dot),
            "adjacency" | "adj" => Ok(GraphFormat::Adjacency),
            other => Err(SgiError::UnsupportedFormat(other.into())),
        }
    }
}

pub fn export_graph(g: &SimpleGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => to_dot(g),
        GraphFormat::Adjacency => to_adjacency(g),
    }
}

/// `n m`, then one sorted `u v` line per edge with `u < v`.
pub fn to_adjacency(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> SgiError {
    SgiError::Parse { line, msg: msg.into() }
}

pub fn parse_adjacency(text: &str) -> Result<SimpleGraph, SgiError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let nums = |i: usize, l: &str| -> Result<Vec<usize>, SgiError> {
        l.split_whitespace().map(|t| t.parse().map_err(|_| parse_err(i + 1, format!("bad number `{t}`")))).collect()
    };
    let h = nums(hl, header)?;
    let [n, m] = h[..] else { return Err(parse_err(hl + 1, "header must be `n m`")) };
    let mut g = SimpleGraph::new(n);
    let mut read = 0;
    for (i, l) in lines {
        let e = nums(i, l)?;
        let [u, v] = e[..] else { return Err(parse_err(i + 1, "edge line must be `u v`")) };
        if u >= n || v >= n {
            return Err(parse_err(i + 1, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(i + 1, "loop"));
        }
        if !g.add_edge(u, v) {
            return Err(parse_err(i + 1, "repeated edge"));
        }
        read += 1;
    }
    if read != m {
        return Err(parse_err(hl + 1, format!("header promises {m} edges, found {read}")));
    }
    Ok(g)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match g.labels() {
            Some(l) => writeln!(out, "  {v} [label=\"{}\"];", dot_escape(&l[v])).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// `index,order,is_normal,elements`, elements comma-joined in one field.
pub fn lattice_csv(lat: &SubgroupLattice) -> Result<String, SgiError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["index", "order", "is_normal", "elements"])?;
    for (i, h) in lat.subgroups().iter().enumerate() {
        let elems: Vec<String> = h.elements().iter().map(usize::to_string).collect();
        w.write_record([i.to_string(), h.order().to_string(), lat.is_normal(i).to_string(), elems.join(",")])?;
    }
    let bytes = w.into_inner().map_err(|e| SgiError::Io { path: "<memory>".into(), source: e.into_error() })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Human-readable summary of a group.
pub fn group_summary(g: &FiniteGroup, lat: &SubgroupLattice) -> String {
    let mut hist = std::collections::BTreeMap::new();
    for o in g.element_orders() {
        *hist.entry(o).or_insert(0usize) += 1;
    }
    let hist: Vec<String> = hist.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    let class = sgi_core::classify::GroupProfile::new(g, lat).class();
    format!(
        "name: {}\nspec: {}\norder: {}\nabelian: {}\ncentre: {}\nconjugacy classes: {}\nelement orders: {}\nsubgroups: {}\nclass: {:?}\n",
        g.name(),
        g.family(),
        g.order(),
        g.is_abelian(),
        g.center().len(),
        g.class_count(),
        hist.join(" "),
        lat.len(),
        class
    )
}

/// One `v: e1 e2 ...` line per vertex, then one `eid: sign` line per edge.
pub fn scheme_to_text(s: &EmbeddingScheme) -> String {
    let mut out = String::new();
    for (v, rot) in s.rotation.iter().enumerate() {
        write!(out, "{v}:").unwrap();
        for e in rot {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    for (e, sign) in s.signs.iter().enumerate() {
        writeln!(out, "{e}: {sign}").unwrap();
    }
    out
}

/// Inverse of [`scheme_to_text`] for a graph with `n` vertices.
pub fn parse_scheme(text: &str, n: usize) -> Result<EmbeddingScheme, SgiError> {
    let mut rotation = Vec::with_capacity(n);
    let mut signs = Vec::new();
    for (i, l) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let (key, rest) = l.split_once(':').ok_or_else(|| parse_err(i + 1, "missing `:`"))?;
        let key: usize = key.trim().parse().map_err(|_| parse_err(i + 1, "bad index"))?;
        if rotation.len() < n {
            if key != rotation.len() {
                return Err(parse_err(i + 1, format!("expected vertex {}", rotation.len())));
            }
            let rot: Result<Vec<usize>, _> = rest.split_whitespace().map(str::parse).collect();
            rotation.push(rot.map_err(|_| parse_err(i + 1, "bad edge id"))?);
        } else {
            if key != signs.len() {
                return Err(parse_err(i + 1, format!("expected edge {}", signs.len())));
            }
            let sign = match rest.trim() {
                "1" | "+1" => 1,
                "-1" => -1,
                other => return Err(parse_err(i + 1, format!("bad sign `{other}`"))),
            };
            signs.push(sign);
        }
    }
    if rotation.len() != n {
        return Err(parse_err(0, format!("{} vertex lines for {n} vertices", rotation.len())));
    }
    Ok(EmbeddingScheme { rotation, signs })
}
