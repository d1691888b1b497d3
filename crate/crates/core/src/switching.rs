//! Switching equivalence. Two signatures on the same underlying graph are
//! equivalent iff they are related by switchings, iff they assign the same
//! sign to every cycle. The decision here works per connected component:
//! switch so that a fixed spanning tree becomes all-positive, then compare
//! the residual signatures pair by pair. Parallel pairs carry both signs and
//! are invariant under every switching.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Sign, SignedGraph, SwitchSet};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SwitchingError {
    UnderlyingMismatch,
}

impl fmt::Display for SwitchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwitchingError::UnderlyingMismatch => {
                write!(f, "graphs differ as unsigned graphs")
            }
        }
    }
}

/// The vertex potentials (`false` = unswitched) that make a BFS spanning
/// forest all-positive. The forest spans the graph restricted to
/// single-sign pairs: a digon pair is `{+,-}` under every switching, so it
/// carries no potential constraint and must not serve as a tree edge
/// (which of its two members is positive is not switching-stable). Pieces
/// connected only through digons canonicalize independently, which is
/// lossless because switchings never couple them.
fn tree_potentials(g: &SignedGraph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut masks: BTreeMap<(usize, usize), u8> = BTreeMap::new();
    for e in g.edges() {
        if !e.is_loop() {
            let bit = if e.sign.is_negative() { 2 } else { 1 };
            *masks.entry((e.u, e.v)).or_insert(0) |= bit;
        }
    }
    let mut pair_adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for (&(u, v), &m) in &masks {
        if m != 3 {
            let negative = m == 2;
            pair_adj[u].push((v, negative));
            pair_adj[v].push((u, negative));
        }
    }
    for nb in pair_adj.iter_mut() {
        nb.sort_unstable();
    }

    let mut potential = vec![false; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &(w, edge_negative) in &pair_adj[u] {
                if seen[w] {
                    continue;
                }
                seen[w] = true;
                potential[w] = potential[u] ^ edge_negative;
                queue.push(w);
            }
        }
    }
    potential
}

/// Canonical signature under switching: the edge multiset after switching at
/// the potential set of `tree_potentials`. Equivalent signatures on the same
/// underlying graph produce identical canonical multisets.
pub fn canonical_signature(g: &SignedGraph) -> Vec<(usize, usize, Sign)> {
    let potential = tree_potentials(g);
    let s = SwitchSet::from_vertices(
        (0..g.vertex_count()).filter(|&v| potential[v]),
    );
    g.switched(&s).expect("potential set in range").edge_multiset()
}

/// Decides whether some switching takes `g1`'s signature to `g2`'s.
/// Errors when the two are not the same unsigned graph.
pub fn switching_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Result<bool, SwitchingError> {
    if !g1.same_underlying(g2) {
        return Err(SwitchingError::UnderlyingMismatch);
    }
    Ok(canonical_signature(g1) == canonical_signature(g2))
}

/// A switch set `S` with `switch(g1, S) = g2` as edge multisets, or `None`
/// when the signatures are inequivalent.
pub fn switching_set_between(
    g1: &SignedGraph,
    g2: &SignedGraph,
) -> Result<Option<SwitchSet>, SwitchingError> {
    if !g1.same_underlying(g2) {
        return Err(SwitchingError::UnderlyingMismatch);
    }
    let p1 = tree_potentials(g1);
    let p2 = tree_potentials(g2);
    let s = SwitchSet::from_vertices((0..g1.vertex_count()).filter(|&v| p1[v] != p2[v]));
    let switched = g1.switched(&s).expect("in range");
    if switched.edge_multiset() == g2.edge_multiset() {
        Ok(Some(s))
    } else {
        Ok(None)
    }
}
