//! Girth vectors: for each `(i, j)` in `{0,1}^2`, the length of a shortest
//! closed walk whose number of negative edges is `i` mod 2 and whose length
//! is `j` mod 2 (`None` = no such walk). Homomorphisms cannot decrease any
//! entry, which makes the vector a cheap refutation filter.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::SignedGraph;

/// The four quantities indexed by (negative-edge parity, length parity).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GirthVector {
    lens: [Option<usize>; 4],
}

impl GirthVector {
    pub fn get(&self, neg_parity: usize, len_parity: usize) -> Option<usize> {
        self.lens[neg_parity * 2 + len_parity]
    }

    /// Length of the shortest negative closed walk: `min(g10, g11)`.
    pub fn negative_girth(&self) -> Option<usize> {
        match (self.get(1, 0), self.get(1, 1)) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) | (None, Some(a)) => Some(a),
            (None, None) => None,
        }
    }

    /// `g_ij(self) >= g_ij(other)` in all four coordinates, with `None`
    /// treated as infinity. Necessary for a homomorphism into `other`'s
    /// graph to exist from this one.
    pub fn dominates(&self, other: &GirthVector) -> bool {
        self.lens.iter().zip(other.lens.iter()).all(|(a, b)| match (a, b) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(x), Some(y)) => x >= y,
        })
    }
}

/// Exact girth vector by shortest-path search from every vertex over the
/// state space (vertex, sign parity, length parity).
pub fn girth_vector(g: &SignedGraph) -> GirthVector {
    let n = g.vertex_count();
    let mut incident: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for e in g.edges() {
        if e.is_loop() {
            incident[e.u].push((e.u, e.sign.is_negative()));
        } else {
            incident[e.u].push((e.v, e.sign.is_negative()));
            incident[e.v].push((e.u, e.sign.is_negative()));
        }
    }

    let mut best: [Option<usize>; 4] = [None; 4];
    let mut record = |slot: usize, len: usize| {
        if best[slot].is_none_or(|b| len < b) {
            best[slot] = Some(len);
        }
    };

    // dist[v][i][p]: shortest walk length from root to v with i negative
    // edges mod 2, length parity p.
    let mut dist: Vec<[[Option<usize>; 2]; 2]> = Vec::new();
    for root in 0..n {
        dist.clear();
        dist.resize(n, [[None; 2]; 2]);
        dist[root][0][0] = Some(0);
        let mut queue = vec![(root, 0usize, 0usize)];
        let mut head = 0;
        while head < queue.len() {
            let (u, i, len) = queue[head];
            head += 1;
            for &(w, neg) in &incident[u] {
                let ni = i ^ (neg as usize);
                let nlen = len + 1;
                if dist[w][ni][nlen % 2].is_none() {
                    dist[w][ni][nlen % 2] = Some(nlen);
                    queue.push((w, ni, nlen));
                }
            }
        }
        // A closed walk through the root decomposes into a walk to some
        // vertex plus one closing edge back into the root.
        for e in g.edges() {
            let from = if e.is_loop() {
                if e.u == root {
                    root
                } else {
                    continue;
                }
            } else if e.u == root {
                e.v
            } else if e.v == root {
                e.u
            } else {
                continue;
            };
            let neg = e.sign.is_negative() as usize;
            for (i, row) in dist[from].iter().enumerate() {
                for d in row.iter().flatten() {
                    let len = d + 1;
                    record((i ^ neg) * 2 + len % 2, len);
                }
            }
        }
    }

    GirthVector { lens: best }
}

pub fn negative_girth(g: &SignedGraph) -> Option<usize> {
    girth_vector(g).negative_girth()
}
