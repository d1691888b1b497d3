//! Homomorphism decision procedures with certificates.
//!
//! `esp_hom` decides edge-sign preserving homomorphisms by backtracking over
//! a static variable order (descending degree, ties by id, values ascending)
//! while maintaining arc consistency over bitset domains. The first
//! certificate in that lexicographic search order is returned, so results
//! are reproducible. `switching_hom` reduces to `esp_hom` into the double
//! switch graph of the target and folds the answer back. Every certificate
//! is re-validated independently before it is returned.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::Bits;
use crate::cliques::double_switch_graph;
use crate::girth::girth_vector;
use crate::graph::{Sign, SignedGraph, SwitchSet};
use crate::switching::switching_equivalent;

/// A checkable witness: where each vertex and each edge goes, plus the
/// switch set applied to the source first (empty for edge-sign preserving
/// homomorphisms).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomCertificate {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
    pub switch_set: SwitchSet,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HomError {
    MapLengthMismatch,
    VertexImageOutOfRange { vertex: usize },
    EdgeImageOutOfRange { edge: usize },
    IncidenceBroken { edge: usize },
    SignBroken { edge: usize },
    SwitchSetOutOfRange { vertex: usize },
}

impl fmt::Display for HomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomError::MapLengthMismatch => write!(f, "certificate map lengths do not match"),
            HomError::VertexImageOutOfRange { vertex } => {
                write!(f, "image of vertex {vertex} out of range")
            }
            HomError::EdgeImageOutOfRange { edge } => {
                write!(f, "image of edge {edge} out of range")
            }
            HomError::IncidenceBroken { edge } => {
                write!(f, "edge {edge} does not map onto its endpoints' images")
            }
            HomError::SignBroken { edge } => {
                write!(f, "edge {edge} maps to an edge of the wrong sign")
            }
            HomError::SwitchSetOutOfRange { vertex } => {
                write!(f, "switch set vertex {vertex} out of range")
            }
        }
    }
}

/// Guarded operations refuse oversized inputs instead of silently running
/// forever.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SizeGuardError {
    pub limit: usize,
    pub actual: usize,
}

impl fmt::Display for SizeGuardError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "size guard exceeded: {} vertices, limit {}",
            self.actual, self.limit
        )
    }
}

/// Checks incidence and sign preservation of `cert` as a homomorphism of
/// `switch(g, cert.switch_set)` into `h`.
pub fn validate_hom(g: &SignedGraph, h: &SignedGraph, cert: &HomCertificate) -> Result<(), HomError> {
    if cert.vertex_map.len() != g.vertex_count() || cert.edge_map.len() != g.edge_count() {
        return Err(HomError::MapLengthMismatch);
    }
    if let Some(v) = cert.switch_set.iter().find(|&v| v >= g.vertex_count()) {
        return Err(HomError::SwitchSetOutOfRange { vertex: v });
    }
    for (v, &img) in cert.vertex_map.iter().enumerate() {
        if img >= h.vertex_count() {
            return Err(HomError::VertexImageOutOfRange { vertex: v });
        }
    }
    for (i, e) in g.edges().iter().enumerate() {
        let ti = cert.edge_map[i];
        let te = match h.edges().get(ti) {
            Some(te) => te,
            None => return Err(HomError::EdgeImageOutOfRange { edge: i }),
        };
        let (a, b) = (cert.vertex_map[e.u], cert.vertex_map[e.v]);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if (te.u, te.v) != (a, b) {
            return Err(HomError::IncidenceBroken { edge: i });
        }
        let flips =
            cert.switch_set.contains(e.u) as u8 + cert.switch_set.contains(e.v) as u8;
        let expected = if flips == 1 { e.sign.flipped() } else { e.sign };
        if te.sign != expected {
            return Err(HomError::SignBroken { edge: i });
        }
    }
    Ok(())
}

const POS: u8 = 1;
const NEG: u8 = 2;

struct Target {
    pos_adj: Vec<Bits>,
    neg_adj: Vec<Bits>,
    pos_loops: Bits,
    neg_loops: Bits,
    n: usize,
}

impl Target {
    fn build(h: &SignedGraph) -> Target {
        let n = h.vertex_count();
        let mut pos_adj = vec![Bits::empty(n); n];
        let mut neg_adj = vec![Bits::empty(n); n];
        let mut pos_loops = Bits::empty(n);
        let mut neg_loops = Bits::empty(n);
        for e in h.edges() {
            let adj = match e.sign {
                Sign::Positive => &mut pos_adj,
                Sign::Negative => &mut neg_adj,
            };
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
            if e.is_loop() {
                match e.sign {
                    Sign::Positive => pos_loops.insert(e.u),
                    Sign::Negative => neg_loops.insert(e.u),
                }
            }
        }
        Target {
            pos_adj,
            neg_adj,
            pos_loops,
            neg_loops,
            n,
        }
    }

    /// Images allowed for a neighbor across an edge set `mask` when this
    /// endpoint is mapped to `x`.
    fn supports(&self, dom: &Bits, x: usize, mask: u8) -> bool {
        match mask {
            POS => dom.intersects(&self.pos_adj[x]),
            NEG => dom.intersects(&self.neg_adj[x]),
            _ => dom.intersects2(&self.pos_adj[x], &self.neg_adj[x]),
        }
    }
}

struct Source {
    n: usize,
    /// Per vertex: (neighbor, sign mask), sorted, loops excluded.
    neighbors: Vec<Vec<(usize, u8)>>,
    /// Per vertex: mask of loop signs.
    loops: Vec<u8>,
    /// Tie-break rank: descending degree, ties by id.
    rank: Vec<usize>,
}

impl Source {
    fn build(g: &SignedGraph) -> Source {
        let n = g.vertex_count();
        let mut masks: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n];
        let mut loops = vec![0u8; n];
        for e in g.edges() {
            let bit = if e.sign.is_negative() { NEG } else { POS };
            if e.is_loop() {
                loops[e.u] |= bit;
            } else {
                upsert(&mut masks[e.u], e.v, bit);
                upsert(&mut masks[e.v], e.u, bit);
            }
        }
        for nb in masks.iter_mut() {
            nb.sort_unstable();
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
        let mut rank = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        Source {
            n,
            neighbors: masks,
            loops,
            rank,
        }
    }
}

fn upsert(list: &mut Vec<(usize, u8)>, key: usize, bit: u8) {
    if let Some(entry) = list.iter_mut().find(|(k, _)| *k == key) {
        entry.1 |= bit;
    } else {
        list.push((key, bit));
    }
}

struct Search<'a> {
    src: Source,
    tgt: Target,
    domains: Vec<Bits>,
    assigned: Vec<bool>,
    g: &'a SignedGraph,
}

impl<'a> Search<'a> {
    /// `pins` force specific images; `rotational` additionally pins the
    /// highest-rank vertex of every pin-free component to target vertex 0,
    /// which is lossless exactly when the target is vertex-transitive under
    /// sign-preserving rotations (the circular cliques are).
    fn new(g: &'a SignedGraph, h: &SignedGraph, pins: &[(usize, usize)], rotational: bool) -> Option<Search<'a>> {
        let src = Source::build(g);
        let tgt = Target::build(h);
        let mut domains = vec![Bits::full(tgt.n); src.n];
        for (v, dom) in domains.iter_mut().enumerate() {
            if src.loops[v] & POS != 0 {
                dom.intersect_with(&tgt.pos_loops);
            }
            if src.loops[v] & NEG != 0 {
                dom.intersect_with(&tgt.neg_loops);
            }
        }
        for &(v, x) in pins {
            if x >= tgt.n || !domains[v].contains(x) {
                return None;
            }
            domains[v].keep_only(x);
        }
        if rotational {
            for comp in g.components() {
                if comp.iter().any(|v| pins.iter().any(|&(p, _)| p == *v)) {
                    continue;
                }
                let first = *comp
                    .iter()
                    .min_by_key(|&&v| src.rank[v])
                    .expect("component is nonempty");
                if !domains[first].contains(0) {
                    return None;
                }
                domains[first].keep_only(0);
            }
        }
        let assigned = vec![false; src.n];
        Some(Search { src, tgt, domains, assigned, g })
    }

    /// Arc-consistency fixpoint (AC-3). `seeds` are the vertices whose
    /// domains just shrank; pass every vertex for the initial pass.
    /// Returns false on a domain wipeout. Maintaining full arc consistency
    /// during the search is what keeps path-expanded sources tractable:
    /// each assignment propagates along chains in both directions.
    fn propagate(&mut self, seeds: &[usize]) -> bool {
        if self.domains.iter().any(|d| d.is_empty()) {
            return false;
        }
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
        for &s in seeds {
            for &(w, _) in &self.src.neighbors[s] {
                queue.push_back((w, s));
            }
        }
        while let Some((u, w)) = queue.pop_front() {
            // Keep x in dom(u) only if some image of w is compatible.
            let mask = self.src.neighbors[u]
                .iter()
                .find(|(k, _)| *k == w)
                .map(|(_, m)| *m)
                .expect("arc endpoints are neighbors");
            let mut removed = false;
            let xs: Vec<usize> = self.domains[u].iter().collect();
            for x in xs {
                if !self.tgt.supports(&self.domains[w], x, mask) {
                    self.domains[u].remove(x);
                    removed = true;
                }
            }
            if removed {
                if self.domains[u].is_empty() {
                    return false;
                }
                for &(w2, _) in &self.src.neighbors[u] {
                    if w2 != w {
                        queue.push_back((w2, u));
                    }
                }
            }
        }
        true
    }

    /// Most-constrained-first: the unassigned vertex with the smallest
    /// domain, ties broken by static rank (descending degree, then id).
    fn pick_vertex(&self) -> Option<usize> {
        let mut best: Option<((usize, usize), usize)> = None;
        for v in 0..self.src.n {
            if self.assigned[v] {
                continue;
            }
            let key = (self.domains[v].iter().count(), self.src.rank[v]);
            if best.is_none_or(|(b, _)| key < b) {
                best = Some((key, v));
            }
        }
        best.map(|(_, v)| v)
    }

    fn assign(&mut self, depth: usize) -> bool {
        if depth == self.src.n {
            return true;
        }
        let u = match self.pick_vertex() {
            Some(u) => u,
            None => return true,
        };
        let snapshot = self.domains.clone();
        let candidates: Vec<usize> = snapshot[u].iter().collect();
        self.assigned[u] = true;
        for x in candidates {
            self.domains[u].keep_only(x);
            if self.propagate(&[u]) && self.assign(depth + 1) {
                return true;
            }
            self.domains.clone_from(&snapshot);
        }
        self.assigned[u] = false;
        false
    }

    fn solve(mut self) -> Option<Vec<usize>> {
        let all: Vec<usize> = (0..self.src.n).collect();
        if !self.propagate(&all) {
            return None;
        }
        if self.assign(0) {
            let map: Vec<usize> = (0..self.src.n)
                .map(|v| self.domains[v].iter().next().expect("assigned"))
                .collect();
            debug_assert!(check_map(self.g, &self.tgt, &map));
            Some(map)
        } else {
            None
        }
    }
}

fn check_map(g: &SignedGraph, tgt: &Target, map: &[usize]) -> bool {
    g.edges().iter().all(|e| {
        let adj = match e.sign {
            Sign::Positive => &tgt.pos_adj[map[e.u]],
            Sign::Negative => &tgt.neg_adj[map[e.u]],
        };
        adj.contains(map[e.v])
    })
}

fn edge_map_for(g: &SignedGraph, h: &SignedGraph, vertex_map: &[usize]) -> Vec<usize> {
    g.edges()
        .iter()
        .map(|e| {
            h.edge_between(vertex_map[e.u], vertex_map[e.v], e.sign)
                .expect("search enforced adjacency with the right sign")
        })
        .collect()
}

pub(crate) fn esp_hom_pinned(
    g: &SignedGraph,
    h: &SignedGraph,
    pins: &[(usize, usize)],
    rotational: bool,
) -> Option<HomCertificate> {
    // Necessary condition: no girth-vector entry may decrease. The check is
    // a pruning aid, so it is skipped when computing the target's girth
    // vector would cost more than it saves.
    let girth_cost = h.vertex_count().saturating_mul(h.edge_count());
    if girth_cost <= 300_000 && !girth_vector(g).dominates(&girth_vector(h)) {
        return None;
    }
    let search = Search::new(g, h, pins, rotational)?;
    let vertex_map = search.solve()?;
    let edge_map = edge_map_for(g, h, &vertex_map);
    let cert = HomCertificate {
        vertex_map,
        edge_map,
        switch_set: SwitchSet::empty(),
    };
    validate_hom(g, h, &cert).expect("search result must validate");
    Some(cert)
}

/// Edge-sign preserving homomorphism from `g` to `h`, or `None` when no such
/// map exists.
pub fn esp_hom(g: &SignedGraph, h: &SignedGraph) -> Option<HomCertificate> {
    esp_hom_pinned(g, h, &[], false)
}

/// Switching homomorphism from `g` to `h`, decided through the double
/// switch graph of `h`: a vertex landing in the second copy is switched.
pub fn switching_hom(g: &SignedGraph, h: &SignedGraph) -> Option<HomCertificate> {
    let dsg = double_switch_graph(h);
    let inner = esp_hom_pinned(g, &dsg, &[], false)?;
    let n = h.vertex_count();
    let mut switch_set = SwitchSet::empty();
    let mut vertex_map = Vec::with_capacity(g.vertex_count());
    for (v, &img) in inner.vertex_map.iter().enumerate() {
        if img >= n {
            switch_set.insert(v);
            vertex_map.push(img - n);
        } else {
            vertex_map.push(img);
        }
    }
    let edge_map = g
        .edges()
        .iter()
        .map(|e| {
            let flips = switch_set.contains(e.u) as u8 + switch_set.contains(e.v) as u8;
            let sign = if flips == 1 { e.sign.flipped() } else { e.sign };
            h.edge_between(vertex_map[e.u], vertex_map[e.v], sign)
                .expect("double switch graph folds back onto the target")
        })
        .collect();
    let cert = HomCertificate {
        vertex_map,
        edge_map,
        switch_set,
    };
    validate_hom(g, h, &cert).expect("folded certificate must validate");
    Some(cert)
}

const ISO_GUARD: usize = 16;
const CORE_GUARD: usize = 10;

/// Switching isomorphism witness: a vertex bijection plus a switch set that
/// maps `g` exactly onto `h`. Backtracks over degree-compatible bijections
/// of the underlying graphs and compares signatures in canonical form per
/// candidate bijection.
pub fn switch_iso_witness(
    g: &SignedGraph,
    h: &SignedGraph,
) -> Result<Option<HomCertificate>, SizeGuardError> {
    let n = g.vertex_count().max(h.vertex_count());
    if n > ISO_GUARD {
        return Err(SizeGuardError {
            limit: ISO_GUARD,
            actual: n,
        });
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let n = g.vertex_count();
    let mult = |gr: &SignedGraph, a: usize, b: usize| -> u8 {
        gr.has_edge(a, b, Sign::Positive) as u8 + gr.has_edge(a, b, Sign::Negative) as u8
    };
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn compatible(
        g: &SignedGraph,
        h: &SignedGraph,
        perm: &[usize],
        mult: &dyn Fn(&SignedGraph, usize, usize) -> u8,
        v: usize,
        x: usize,
    ) -> bool {
        if g.degree(v) != h.degree(x) || g.loop_signs(v) != h.loop_signs(x) {
            return false;
        }
        for (w, &img) in perm.iter().enumerate() {
            if img != usize::MAX && w != v && mult(g, v, w) != mult(h, x, img) {
                return false;
            }
        }
        true
    }

    fn go(
        g: &SignedGraph,
        h: &SignedGraph,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        mult: &dyn Fn(&SignedGraph, usize, usize) -> u8,
        v: usize,
    ) -> bool {
        let n = perm.len();
        if v == n {
            let relabeled = g.relabeled(perm);
            return switching_equivalent(&relabeled, h).unwrap_or(false);
        }
        for x in 0..n {
            if !used[x] && compatible(g, h, perm, mult, v, x) {
                perm[v] = x;
                used[x] = true;
                if go(g, h, perm, used, mult, v + 1) {
                    return true;
                }
                perm[v] = usize::MAX;
                used[x] = false;
            }
        }
        false
    }

    if !go(g, h, &mut perm, &mut used, &mult, 0) {
        return Ok(None);
    }
    let relabeled = g.relabeled(&perm);
    let switch_set = crate::switching::switching_set_between(&relabeled, h)
        .expect("same underlying after relabeling")
        .expect("bijection accepted by the signature check");
    // Express the switch set on g's own vertex ids.
    let switch_on_g = SwitchSet::from_vertices(
        (0..n).filter(|&v| switch_set.contains(perm[v])),
    );
    let edge_map = g
        .edges()
        .iter()
        .map(|e| {
            let flips = switch_on_g.contains(e.u) as u8 + switch_on_g.contains(e.v) as u8;
            let sign = if flips == 1 { e.sign.flipped() } else { e.sign };
            h.edge_between(perm[e.u], perm[e.v], sign)
                .expect("isomorphic image edge exists")
        })
        .collect();
    let cert = HomCertificate {
        vertex_map: perm,
        edge_map,
        switch_set: switch_on_g,
    };
    validate_hom(g, h, &cert).expect("isomorphism certificate must validate");
    Ok(Some(cert))
}

/// True iff some vertex bijection plus switch set maps `g` exactly to `h`.
/// Intended for small graphs; errors above 16 vertices.
pub fn switch_iso(g: &SignedGraph, h: &SignedGraph) -> Result<bool, SizeGuardError> {
    Ok(switch_iso_witness(g, h)?.is_some())
}

/// True iff `h` admits no switching homomorphism to a proper induced
/// subgraph of itself. Deleted-vertex subsets are tried smallest first; a
/// homomorphism into any proper induced subgraph extends to one avoiding a
/// single vertex, so the single-deletion sweep already decides.
pub fn is_core(h: &SignedGraph) -> Result<bool, SizeGuardError> {
    let n = h.vertex_count();
    if n > CORE_GUARD {
        return Err(SizeGuardError {
            limit: CORE_GUARD,
            actual: n,
        });
    }
    for drop in 0..n {
        let keep: Vec<usize> = (0..n).filter(|&v| v != drop).collect();
        let sub = h.induced(&keep);
        if switching_hom(h, &sub).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}
