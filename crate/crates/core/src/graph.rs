//! Signed graph data model and the switching operation.
//!
//! A signed graph is a multigraph with `+`/`-` edge labels where parallel
//! edges between the same pair are allowed only with different signs. Loops
//! are permitted (circular cliques carry a negative loop on every vertex).
//! Edges carry stable indices so that homomorphisms can map edges
//! explicitly; on a digon the two parallel edges are distinguishable only by
//! sign.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Edge sign. `Negative * Negative = Positive`; `Positive` is the identity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn product(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A signed edge with endpoints normalized so that `u <= v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other_endpoint(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    DuplicateEdge { u: usize, v: usize, sign: Sign },
    LabelCountMismatch { labels: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            GraphError::DuplicateEdge { u, v, sign } => {
                write!(f, "duplicate edge {u} {v} {sign}")
            }
            GraphError::LabelCountMismatch { labels, n } => {
                write!(f, "{labels} labels for {n} vertices")
            }
        }
    }
}

/// A set of vertices to switch at.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SwitchSet {
    verts: BTreeSet<usize>,
}

impl SwitchSet {
    pub fn empty() -> Self {
        SwitchSet::default()
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(verts: I) -> Self {
        SwitchSet {
            verts: verts.into_iter().collect(),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    pub fn insert(&mut self, v: usize) {
        self.verts.insert(v);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.verts.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Vertices in exactly one of the two sets; composing two switchings is
    /// switching at the symmetric difference.
    pub fn symmetric_difference(&self, other: &SwitchSet) -> SwitchSet {
        let mut out = BTreeSet::new();
        for &v in self.verts.iter() {
            if !other.contains(v) {
                out.insert(v);
            }
        }
        for &v in other.verts.iter() {
            if !self.contains(v) {
                out.insert(v);
            }
        }
        SwitchSet { verts: out }
    }
}

/// Vertices are `0..n`; edges are kept in insertion order and addressed by
/// index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    /// Lookup from `(u, v, sign)` (endpoints normalized) to edge index.
    index: BTreeMap<(usize, usize, Sign), usize>,
    labels: Option<Vec<String>>,
}

impl SignedGraph {
    pub fn new(n: usize) -> Self {
        SignedGraph {
            n,
            edges: Vec::new(),
            index: BTreeMap::new(),
            labels: None,
        }
    }

    pub fn with_edges(
        n: usize,
        edges: &[(usize, usize, Sign)],
    ) -> Result<Self, GraphError> {
        let mut g = SignedGraph::new(n);
        for &(u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    /// Adds an edge and returns its index. Rejects out-of-range endpoints and
    /// a second edge of the same sign on the same vertex pair.
    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<usize, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        if self.index.contains_key(&(u, v, sign)) {
            return Err(GraphError::DuplicateEdge { u, v, sign });
        }
        self.edges.push(Edge { u, v, sign });
        self.index.insert((u, v, sign), self.edges.len() - 1);
        Ok(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_between(&self, u: usize, v: usize, sign: Sign) -> Option<usize> {
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        self.index.get(&(u, v, sign)).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize, sign: Sign) -> bool {
        self.edge_between(u, v, sign).is_some()
    }

    /// Number of edge records incident to `v`; a loop counts once.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.u == v || e.v == v)
            .count()
    }

    pub fn loop_signs(&self, v: usize) -> Vec<Sign> {
        let mut out: Vec<Sign> = self
            .edges
            .iter()
            .filter(|e| e.is_loop() && e.u == v)
            .map(|e| e.sign)
            .collect();
        out.sort();
        out
    }

    pub fn is_loop_free(&self) -> bool {
        self.edges.iter().all(|e| !e.is_loop())
    }

    pub fn negative_edge_indices(&self) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.sign.is_negative())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<(), GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCountMismatch {
                labels: labels.len(),
                n: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// Switches at every vertex of `s`: the sign of edge `uv` is multiplied
    /// by `-1` once per switched endpoint, so loops are unchanged.
    pub fn switched(&self, s: &SwitchSet) -> Result<SignedGraph, GraphError> {
        if let Some(v) = s.iter().find(|&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut out = SignedGraph::new(self.n);
        out.labels = self.labels.clone();
        for e in &self.edges {
            let flips = s.contains(e.u) as u8 + s.contains(e.v) as u8;
            let sign = if flips == 1 { e.sign.flipped() } else { e.sign };
            out.add_edge(e.u, e.v, sign)
                .expect("switching permutes signs within each pair");
        }
        Ok(out)
    }

    /// Same vertex count and same edge multiset when signs are ignored.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let strip = |g: &SignedGraph| {
            let mut pairs: Vec<(usize, usize)> = g.edges.iter().map(|e| (e.u, e.v)).collect();
            pairs.sort_unstable();
            pairs
        };
        strip(self) == strip(other)
    }

    /// Edge set as a sorted multiset of `(u, v, sign)` triples; two graphs
    /// are equal as signed graphs iff these agree (edge order is ignored).
    pub fn edge_multiset(&self) -> Vec<(usize, usize, Sign)> {
        let mut out: Vec<(usize, usize, Sign)> =
            self.edges.iter().map(|e| (e.u, e.v, e.sign)).collect();
        out.sort_unstable();
        out
    }

    /// Connected components of the underlying graph, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for e in &self.edges {
            if !e.is_loop() {
                adj[e.u].push(e.v);
                adj[e.v].push(e.u);
            }
        }
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Subgraph induced on `verts`, relabeled `0..verts.len()` in the given
    /// order. Edge order follows the original edge order.
    pub fn induced(&self, verts: &[usize]) -> SignedGraph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = SignedGraph::new(verts.len());
        for e in &self.edges {
            if pos[e.u] != usize::MAX && pos[e.v] != usize::MAX {
                g.add_edge(pos[e.u], pos[e.v], e.sign)
                    .expect("induced subgraph preserves edge multiplicities");
            }
        }
        g
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// bijection on `0..n`. Edge order is preserved.
    pub fn relabeled(&self, perm: &[usize]) -> SignedGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = SignedGraph::new(self.n);
        for e in &self.edges {
            g.add_edge(perm[e.u], perm[e.v], e.sign)
                .expect("relabeling preserves edge multiplicities");
        }
        g
    }

    /// The same underlying graph with every edge positive.
    pub fn all_positive(&self) -> SignedGraph {
        let mut g = SignedGraph::new(self.n);
        for e in &self.edges {
            // Parallel pairs collapse to a single positive edge.
            if !g.has_edge(e.u, e.v, Sign::Positive) {
                g.add_edge(e.u, e.v, Sign::Positive).expect("checked");
            }
        }
        g
    }

    /// The same underlying edges with the signature whose negative set is
    /// exactly `negatives` (edge indices into `self`); edge order and
    /// indices are preserved. Panics when the requested signature puts two
    /// parallel edges on the same sign.
    pub fn with_negative_set(&self, negatives: &[usize]) -> SignedGraph {
        let negset: BTreeSet<usize> = negatives.iter().copied().collect();
        let mut g = SignedGraph::new(self.n);
        g.labels = self.labels.clone();
        for (i, e) in self.edges.iter().enumerate() {
            let sign = if negset.contains(&i) {
                Sign::Negative
            } else {
                Sign::Positive
            };
            g.add_edge(e.u, e.v, sign)
                .expect("negative set must keep parallel edges distinct");
        }
        g
    }
}
