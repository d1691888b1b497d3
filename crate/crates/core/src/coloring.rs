//! Bipartitions and 0-free colorings.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::SignedGraph;

/// A 2-coloring of the underlying graph: every edge has exactly one endpoint
/// in each side. Side A contains the smallest vertex of each component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl Bipartition {
    pub fn in_side_a(&self, v: usize) -> bool {
        self.side_a.binary_search(&v).is_ok()
    }
}

/// BFS 2-coloring; `None` when the underlying graph has an odd closed walk
/// (including any loop).
pub fn bipartition(g: &SignedGraph) -> Option<Bipartition> {
    let n = g.vertex_count();
    if g.edges().iter().any(|e| e.is_loop()) {
        return None;
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut color = vec![u8::MAX; n];
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in &adj[u] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    let side_a = (0..n).filter(|&v| color[v] == 0).collect();
    let side_b = (0..n).filter(|&v| color[v] == 1).collect();
    Some(Bipartition { side_a, side_b })
}

/// A 0-free 2k-coloring: a map into `{±1, .., ±k}` with
/// `f(u) != sign(e) * f(v)` for every edge `e = uv`, found by exhaustive
/// backtracking; `None` when no such coloring exists.
pub fn zero_free_coloring(g: &SignedGraph, k: usize) -> Option<Vec<i64>> {
    assert!(k >= 1);
    let n = g.vertex_count();
    let values: Vec<i64> = (1..=k as i64).flat_map(|c| [c, -c]).collect();
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.u].push((e.v, e.sign.is_negative()));
        if !e.is_loop() {
            adj[e.v].push((e.u, e.sign.is_negative()));
        }
    }
    let mut assigned: Vec<i64> = vec![0; n];

    fn ok(assigned: &[i64], adj: &[Vec<(usize, bool)>], v: usize, val: i64) -> bool {
        adj[v].iter().all(|&(w, neg)| {
            let forbidden = if neg { -val } else { val };
            let wv = if w == v { val } else { assigned[w] };
            wv == 0 || wv != forbidden
        })
    }

    fn go(
        assigned: &mut Vec<i64>,
        adj: &[Vec<(usize, bool)>],
        values: &[i64],
        v: usize,
    ) -> bool {
        if v == assigned.len() {
            return true;
        }
        for &val in values {
            if ok(assigned, adj, v, val) {
                assigned[v] = val;
                if go(assigned, adj, values, v + 1) {
                    return true;
                }
                assigned[v] = 0;
            }
        }
        false
    }

    go(&mut assigned, &adj, &values, 0).then_some(assigned)
}
