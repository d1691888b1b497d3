//! Brute-force reference implementations and seeded instance generators.
//!
//! These deliberately take the slow, obviously-correct route (walk
//! enumeration by length, exhaustive map enumeration, all switch sets) and
//! exist to cross-check the fast implementations. They stay independent of
//! the search engine's code paths.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Sign, SignedGraph, SwitchSet};
use crate::hom::{validate_hom, HomCertificate};
use crate::rng::SplitMix64;

/// Shortest closed walk per (negative parity, length parity) found by
/// stepping reachability length by length up to `cap`. `None` entries mean
/// no such walk of length `<= cap` exists.
pub fn girth_vector_by_walks(g: &SignedGraph, cap: usize) -> [Option<usize>; 4] {
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
    for root in 0..n {
        // reach[v][i]: a walk of the current length from root to v with
        // negative parity i exists.
        let mut reach = vec![[false; 2]; n];
        reach[root][0] = true;
        for len in 1..=cap {
            let mut next = vec![[false; 2]; n];
            for v in 0..n {
                for i in 0..2 {
                    if !reach[v][i] {
                        continue;
                    }
                    for &(w, neg) in &incident[v] {
                        next[w][i ^ (neg as usize)] = true;
                    }
                }
            }
            for (i, &hit) in next[root].iter().enumerate() {
                if hit {
                    let slot = i * 2 + len % 2;
                    if best[slot].is_none_or(|b| len < b) {
                        best[slot] = Some(len);
                    }
                }
            }
            reach = next;
        }
    }
    best
}

/// Switching equivalence by trying all `2^n` switch sets.
pub fn switching_equivalent_brute(g1: &SignedGraph, g2: &SignedGraph) -> bool {
    assert!(g1.same_underlying(g2));
    let n = g1.vertex_count();
    assert!(n <= 20, "brute force is exponential in n");
    let target = g2.edge_multiset();
    for mask in 0u64..(1 << n) {
        let s = SwitchSet::from_vertices((0..n).filter(|&v| mask >> v & 1 == 1));
        if g1.switched(&s).expect("in range").edge_multiset() == target {
            return true;
        }
    }
    false
}

fn map_is_esp_hom(g: &SignedGraph, h: &SignedGraph, map: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|e| h.has_edge(map[e.u], map[e.v], e.sign))
}

/// Edge-sign preserving homomorphism existence by enumerating all
/// `|V(H)|^|V(G)|` vertex maps.
pub fn esp_hom_brute(g: &SignedGraph, h: &SignedGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let hn = h.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    if hn == 0 {
        return None;
    }
    let mut map = vec![0usize; n];
    loop {
        if map_is_esp_hom(g, h, &map) {
            return Some(map);
        }
        // Odometer increment in lexicographic order.
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < hn {
                break;
            }
            map[i] = 0;
        }
    }
}

/// Switching homomorphism existence by enumerating all switch sets of the
/// source times all vertex maps.
pub fn switching_hom_brute(g: &SignedGraph, h: &SignedGraph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 12, "brute force is exponential in n");
    for mask in 0u64..(1 << n) {
        let s = SwitchSet::from_vertices((0..n).filter(|&v| mask >> v & 1 == 1));
        let switched = g.switched(&s).expect("in range");
        if esp_hom_brute(&switched, h).is_some() {
            return true;
        }
    }
    false
}

/// Uniform random signed graph on up to `n_max` vertices: each unordered
/// pair independently gets nothing, a single signed edge, or a digon; loops
/// appear with small probability when allowed.
pub fn random_signed_graph(
    rng: &mut SplitMix64,
    n_max: usize,
    allow_digons: bool,
    allow_loops: bool,
) -> SignedGraph {
    let n = 1 + rng.below(n_max as u64) as usize;
    let mut g = SignedGraph::new(n);
    for u in 0..n {
        if allow_loops && rng.chance(10) {
            let s = if rng.coin() { Sign::Positive } else { Sign::Negative };
            g.add_edge(u, u, s).expect("fresh loop");
        }
        for v in u + 1..n {
            if allow_digons && rng.chance(10) {
                g.add_edge(u, v, Sign::Positive).expect("fresh");
                g.add_edge(u, v, Sign::Negative).expect("fresh");
            } else if rng.chance(45) {
                let s = if rng.coin() { Sign::Positive } else { Sign::Negative };
                g.add_edge(u, v, s).expect("fresh");
            }
        }
    }
    g
}

/// Same underlying graph as `g` with fresh random signs.
pub fn resign_random(rng: &mut SplitMix64, g: &SignedGraph) -> SignedGraph {
    loop {
        let mut out = SignedGraph::new(g.vertex_count());
        let mut ok = true;
        for e in g.edges() {
            let s = if rng.coin() { Sign::Positive } else { Sign::Negative };
            if out.add_edge(e.u, e.v, s).is_err() {
                ok = false;
                break;
            }
        }
        if ok && out.same_underlying(g) {
            return out;
        }
        // A collision means the random signs put two parallel edges on the
        // same sign; resample.
    }
}

/// Random signed bipartite graph with at least one edge: sides of size up to
/// `side_max`, cross pairs independently empty, single-signed, or digons.
pub fn random_bipartite_signed(rng: &mut SplitMix64, side_max: usize) -> SignedGraph {
    loop {
        let a = 1 + rng.below(side_max as u64) as usize;
        let b = 1 + rng.below(side_max as u64) as usize;
        let mut g = SignedGraph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                if rng.chance(10) {
                    g.add_edge(u, v, Sign::Positive).expect("fresh");
                    g.add_edge(u, v, Sign::Negative).expect("fresh");
                } else if rng.chance(50) {
                    let s = if rng.coin() { Sign::Positive } else { Sign::Negative };
                    g.add_edge(u, v, s).expect("fresh");
                }
            }
        }
        if g.edge_count() > 0 {
            return g;
        }
    }
}

/// A pair `(g, h)` that certainly admits an edge-sign preserving
/// homomorphism: `h` is random and `g` unfolds a random map onto `h`.
/// The witnessing map is returned for cross-checks.
pub fn hom_witnessed_pair(
    rng: &mut SplitMix64,
    src_max: usize,
    tgt_max: usize,
) -> (SignedGraph, SignedGraph, Vec<usize>) {
    loop {
        let h = random_signed_graph(rng, tgt_max, true, true);
        let n = 1 + rng.below(src_max as u64) as usize;
        let map: Vec<usize> = (0..n)
            .map(|_| rng.below(h.vertex_count() as u64) as usize)
            .collect();
        let mut g = SignedGraph::new(n);
        for u in 0..n {
            for v in u..n {
                for sign in [Sign::Positive, Sign::Negative] {
                    if h.has_edge(map[u], map[v], sign) && rng.chance(60) {
                        g.add_edge(u, v, sign).expect("fresh");
                    }
                }
            }
        }
        if g.edge_count() > 0 {
            debug_assert!(map_is_esp_hom(&g, &h, &map));
            return (g, h, map);
        }
    }
}

/// Composes a `g -> h` certificate with an `h -> k` certificate into a
/// `g -> k` certificate: vertex maps compose, and a vertex of `g` is
/// switched when exactly one of the two stages switches it.
pub fn compose_certificates(
    g: &SignedGraph,
    k: &SignedGraph,
    gh: &HomCertificate,
    hk: &HomCertificate,
) -> HomCertificate {
    let vertex_map: Vec<usize> = gh.vertex_map.iter().map(|&x| hk.vertex_map[x]).collect();
    let switch_set = SwitchSet::from_vertices((0..g.vertex_count()).filter(|&v| {
        gh.switch_set.contains(v) != hk.switch_set.contains(gh.vertex_map[v])
    }));
    let edge_map = g
        .edges()
        .iter()
        .map(|e| {
            let flips = switch_set.contains(e.u) as u8 + switch_set.contains(e.v) as u8;
            let sign = if flips == 1 { e.sign.flipped() } else { e.sign };
            k.edge_between(vertex_map[e.u], vertex_map[e.v], sign)
                .expect("composition lands on an edge")
        })
        .collect();
    let cert = HomCertificate {
        vertex_map,
        edge_map,
        switch_set,
    };
    validate_hom(g, k, &cert).expect("composed certificate must validate");
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques;
    use crate::girth::girth_vector;

    #[test]
    fn walk_oracle_matches_on_named_graphs() {
        for g in [
            cliques::digon(),
            cliques::negative_cycle(5).unwrap(),
            cliques::complete_bipartite_with_matching(3).unwrap(),
            cliques::k6_with_matching(),
        ] {
            let cap = 2 * g.vertex_count() + 2;
            let slow = girth_vector_by_walks(&g, cap);
            let fast = girth_vector(&g);
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(slow[i * 2 + j], fast.get(i, j));
                }
            }
        }
    }

    #[test]
    fn esp_brute_finds_the_identity() {
        let g = cliques::digon();
        assert!(esp_hom_brute(&g, &g).is_some());
        let h = cliques::negative_cycle(4).unwrap();
        // A digon needs parallel edges of both signs in the image.
        assert!(esp_hom_brute(&g, &h).is_none());
    }
}
