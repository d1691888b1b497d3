//! Graph transformers: expanding edges into negative 4-cycles, into digons,
//! and into signed paths, plus general two-indicator composition.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Sign, SignedGraph};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConstructionError {
    LoopInInput { vertex: usize },
    ParallelEdgesInInput { u: usize, v: usize },
    ZeroLength,
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::LoopInInput { vertex } => {
                write!(f, "input has a loop at {vertex}")
            }
            ConstructionError::ParallelEdgesInInput { u, v } => {
                write!(f, "input has parallel edges between {u} and {v}")
            }
            ConstructionError::ZeroLength => write!(f, "path length must be at least 1"),
        }
    }
}

/// Positive-edge parity class of a signed path.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathParity {
    OddPositive,
    EvenPositive,
}

/// A signed graph with two marked vertices, used for edge replacement and
/// for zones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Indicator {
    pub graph: SignedGraph,
    pub u: usize,
    pub v: usize,
}

fn require_simple(g: &SignedGraph) -> Result<(), ConstructionError> {
    for e in g.edges() {
        if e.is_loop() {
            return Err(ConstructionError::LoopInInput { vertex: e.u });
        }
    }
    for (i, e) in g.edges().iter().enumerate() {
        for f in &g.edges()[i + 1..] {
            if e.u == f.u && e.v == f.v {
                return Err(ConstructionError::ParallelEdgesInInput { u: e.u, v: e.v });
            }
        }
    }
    Ok(())
}

/// Replaces each edge `uv` of a simple graph (signs ignored) by a negative
/// 4-cycle `u, x_uv, v, y_uv` through two fresh vertices. The canonical
/// signature makes `y_uv - u` negative and the other three gadget edges
/// positive; any other choice is the same up to switching isomorphism.
/// The output is bipartite with the original vertices on one side.
pub fn four_cycle_expansion(g: &SignedGraph) -> Result<SignedGraph, ConstructionError> {
    require_simple(g)?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut out = SignedGraph::new(n + 2 * m);
    let mut labels: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
    for (i, e) in g.edges().iter().enumerate() {
        let x = n + 2 * i;
        let y = n + 2 * i + 1;
        labels.push(format!("x{}-{}", e.u, e.v));
        labels.push(format!("y{}-{}", e.u, e.v));
        out.add_edge(e.u, x, Sign::Positive).expect("fresh");
        out.add_edge(x, e.v, Sign::Positive).expect("fresh");
        out.add_edge(e.v, y, Sign::Positive).expect("fresh");
        out.add_edge(y, e.u, Sign::Negative).expect("fresh");
    }
    out.set_labels(labels).expect("one label per vertex");
    Ok(out)
}

/// Replaces each edge of a simple graph (signs ignored) by a digon.
pub fn digon_expansion(g: &SignedGraph) -> Result<SignedGraph, ConstructionError> {
    require_simple(g)?;
    let mut out = SignedGraph::new(g.vertex_count());
    for e in g.edges() {
        out.add_edge(e.u, e.v, Sign::Positive).expect("fresh");
        out.add_edge(e.u, e.v, Sign::Negative).expect("fresh");
    }
    Ok(out)
}

/// Canonical signs for a path of `len` edges with the requested
/// positive-edge parity: all edges positive except that the last edge is
/// negative, and the first edge is flipped as well when that default misses
/// the parity. A single edge simply takes the parity.
fn canonical_path_signs(len: usize, parity: PathParity) -> Vec<Sign> {
    let want_odd = parity == PathParity::OddPositive;
    let mut signs = alloc::vec![Sign::Positive; len];
    signs[len - 1] = Sign::Negative;
    if len == 1 {
        signs[0] = if want_odd { Sign::Positive } else { Sign::Negative };
        return signs;
    }
    let default_odd = (len - 1) % 2 == 1;
    if default_odd != want_odd {
        signs[0] = Sign::Negative;
    }
    signs
}

/// A path `v = w_0, .., w_len = u` (ids `0..=len`) with the canonical sign
/// placement achieving the declared positive-edge parity.
pub fn signed_path(len: usize, parity: PathParity) -> Result<Indicator, ConstructionError> {
    if len == 0 {
        return Err(ConstructionError::ZeroLength);
    }
    let signs = canonical_path_signs(len, parity);
    let mut g = SignedGraph::new(len + 1);
    for (i, &s) in signs.iter().enumerate() {
        g.add_edge(i, i + 1, s).expect("fresh");
    }
    Ok(Indicator {
        graph: g,
        u: len,
        v: 0,
    })
}

/// Replaces each edge by a fresh path of length `len` whose number of
/// positive edges is odd exactly when the replaced edge is positive.
/// Internal path edges are positive; the last edge's sign meets the parity.
pub fn path_expansion(g: &SignedGraph, len: usize) -> Result<SignedGraph, ConstructionError> {
    if len == 0 {
        return Err(ConstructionError::ZeroLength);
    }
    for e in g.edges() {
        if e.is_loop() {
            return Err(ConstructionError::LoopInInput { vertex: e.u });
        }
    }
    let n = g.vertex_count();
    let mut out = SignedGraph::new(n + (len - 1) * g.edge_count());
    let mut next = n;
    for e in g.edges() {
        let want_odd = !e.sign.is_negative();
        let last = if ((len - 1) % 2 == 1) == want_odd {
            Sign::Negative
        } else {
            Sign::Positive
        };
        let mut prev = e.u;
        for step in 0..len {
            let to = if step + 1 == len { e.v } else { next };
            let sign = if step + 1 == len { last } else { Sign::Positive };
            out.add_edge(prev, to, sign).expect("fresh path edge");
            prev = to;
            if step + 1 != len {
                next += 1;
            }
        }
    }
    Ok(out)
}

/// Replaces each positive edge `xy` of `omega` with a disjoint copy of
/// `plus` (its `u` identified with `x`, its `v` with `y`) and each negative
/// edge with a copy of `minus`. The original edges of `omega` are deleted.
pub fn compose_indicators(
    omega: &SignedGraph,
    plus: &Indicator,
    minus: &Indicator,
) -> SignedGraph {
    let n = omega.vertex_count();
    let mut total = n;
    for e in omega.edges() {
        let ind = if e.sign.is_negative() { minus } else { plus };
        total += ind.graph.vertex_count() - 2;
    }
    let mut out = SignedGraph::new(total);
    let mut next = n;
    for e in omega.edges() {
        let ind = if e.sign.is_negative() { minus } else { plus };
        // Map the indicator's vertices: u -> x, v -> y, the rest to fresh ids
        // in increasing original order.
        let mut map = Vec::with_capacity(ind.graph.vertex_count());
        for w in 0..ind.graph.vertex_count() {
            if w == ind.u {
                map.push(e.u);
            } else if w == ind.v {
                map.push(e.v);
            } else {
                map.push(next);
                next += 1;
            }
        }
        for ie in ind.graph.edges() {
            out.add_edge(map[ie.u], map[ie.v], ie.sign)
                .expect("disjoint copies cannot collide");
        }
    }
    out
}

/// The single-edge indicator of the given sign; composing with these
/// reproduces the original graph.
pub fn single_edge_indicator(sign: Sign) -> Indicator {
    let mut g = SignedGraph::new(2);
    g.add_edge(0, 1, sign).expect("fresh");
    Indicator { graph: g, u: 1, v: 0 }
}

impl Indicator {
    /// Number of positive edges, for parity checks.
    pub fn positive_edge_count(&self) -> usize {
        self.graph
            .edges()
            .iter()
            .filter(|e| !e.sign.is_negative())
            .count()
    }
}

impl fmt::Display for PathParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathParity::OddPositive => write!(f, "odd-positive"),
            PathParity::EvenPositive => write!(f, "even-positive"),
        }
    }
}

impl PathParity {
    pub fn parse(s: &str) -> Option<PathParity> {
        match s.to_string().as_str() {
            "odd" | "odd-positive" => Some(PathParity::OddPositive),
            "even" | "even-positive" => Some(PathParity::EvenPositive),
            _ => None,
        }
    }
}
