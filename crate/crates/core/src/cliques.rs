//! Generators for the named target families: signed circular cliques and
//! their cores, bipartite circular cliques, double switch graphs, complete
//! bipartite graphs with a negative perfect matching, negative cycles and
//! the digon. Every generator is deterministic: identical inputs produce
//! identical vertex ids and edge lists.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Sign, SignedGraph};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CliqueError {
    /// `p` must be even with `p >= 2q > 0`.
    BadCliqueParams { p: usize, q: usize },
    /// Additionally `2 <= p/q <= 4` for the bipartite families.
    RatioOutOfRange { p: usize, q: usize },
    /// `p/q` must be in simplest form subject to `p` even.
    NotReduced { p: usize, q: usize },
    /// Cycles need at least two vertices.
    CycleTooShort { k: usize },
    BadMatchingSize { k: usize },
}

impl fmt::Display for CliqueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliqueError::BadCliqueParams { p, q } => {
                write!(f, "need even p with p >= 2q > 0, got p={p} q={q}")
            }
            CliqueError::RatioOutOfRange { p, q } => {
                write!(f, "need 2 <= p/q <= 4, got p={p} q={q}")
            }
            CliqueError::NotReduced { p, q } => {
                write!(f, "{p}/{q} is not in simplest form subject to p even")
            }
            CliqueError::CycleTooShort { k } => write!(f, "cycle length {k} < 2"),
            CliqueError::BadMatchingSize { k } => write!(f, "matching size {k} < 1"),
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn check_clique_params(p: usize, q: usize) -> Result<(), CliqueError> {
    if !p.is_multiple_of(2) || q == 0 || p < 2 * q {
        return Err(CliqueError::BadCliqueParams { p, q });
    }
    Ok(())
}

/// `p/q` cannot be reduced while keeping the numerator even: either it is
/// already reduced, or the only common factor is 2 and halving `p` would
/// make it odd.
pub fn reduced_subject_to_even(p: usize, q: usize) -> bool {
    let g = gcd(p, q);
    g == 1 || (g == 2 && (p / 2) % 2 == 1)
}

/// Signed circular clique on `[p]`: `ij` positive iff `q <= |i-j| <= p-q`,
/// negative iff `|i-j| <= p/2 - q` or `|i-j| >= p/2 + q`; a negative loop on
/// every vertex and no positive loop.
pub fn signed_circular_clique(p: usize, q: usize) -> Result<SignedGraph, CliqueError> {
    check_clique_params(p, q)?;
    let mut g = SignedGraph::new(p);
    let half = p / 2;
    for i in 0..p {
        g.add_edge(i, i, Sign::Negative).expect("fresh loop");
    }
    for i in 0..p {
        for j in i + 1..p {
            let d = j - i;
            if q <= d && d <= p - q {
                g.add_edge(i, j, Sign::Positive).expect("fresh edge");
            }
            if d + q <= half || d >= half + q {
                g.add_edge(i, j, Sign::Negative).expect("fresh edge");
            }
        }
    }
    Ok(g)
}

/// The switching core of the signed circular clique: the subgraph induced by
/// vertices `0 .. p/2 - 1`.
pub fn signed_circular_clique_core(p: usize, q: usize) -> Result<SignedGraph, CliqueError> {
    let g = signed_circular_clique(p, q)?;
    let verts: Vec<usize> = (0..p / 2).collect();
    Ok(g.induced(&verts))
}

/// Bipartite circular clique `B_{p;q}`: the subgraph of the signed circular
/// clique formed by edges with one even and one odd endpoint. Loop-free by
/// construction. The formulas degrade gracefully on non-reduced `p/q`; the
/// case-split families below insist on reduced parameters.
pub fn bipartite_circular_clique(p: usize, q: usize) -> Result<SignedGraph, CliqueError> {
    check_clique_params(p, q)?;
    if p > 4 * q {
        return Err(CliqueError::RatioOutOfRange { p, q });
    }
    let full = signed_circular_clique(p, q)?;
    let mut g = SignedGraph::new(p);
    for e in full.edges() {
        if !e.is_loop() && (e.u + e.v) % 2 == 1 {
            g.add_edge(e.u, e.v, e.sign).expect("subset of valid edges");
        }
    }
    Ok(g)
}

/// Double switch graph: two copies with the cross edge `x1 y2` (and `x2 y1`)
/// carrying the opposite sign of `xy`. Copy 1 keeps the original ids; copy 2
/// is shifted by `n`. A loop at `x` contributes a single cross edge
/// `x1 x2` of the opposite sign.
pub fn double_switch_graph(g: &SignedGraph) -> SignedGraph {
    let n = g.vertex_count();
    let mut out = SignedGraph::new(2 * n);
    for e in g.edges() {
        out.add_edge(e.u, e.v, e.sign).expect("copy 1");
        out.add_edge(e.u + n, e.v + n, e.sign).expect("copy 2");
        if e.is_loop() {
            out.add_edge(e.u, e.u + n, e.sign.flipped()).expect("cross");
        } else {
            out.add_edge(e.u, e.v + n, e.sign.flipped()).expect("cross");
            out.add_edge(e.v, e.u + n, e.sign.flipped()).expect("cross");
        }
    }
    out
}

/// The bipartite circular clique for edge-sign preserving homomorphisms:
/// `B_{p;q}` itself when `4 | p`, its double switch graph otherwise.
pub fn bipartite_circular_clique_esp(p: usize, q: usize) -> Result<SignedGraph, CliqueError> {
    if !reduced_subject_to_even(p, q) {
        return Err(CliqueError::NotReduced { p, q });
    }
    let b = bipartite_circular_clique(p, q)?;
    if p.is_multiple_of(4) {
        Ok(b)
    } else {
        Ok(double_switch_graph(&b))
    }
}

/// The bipartite circular clique for switching homomorphisms: `B_{p;q}`
/// when `4 ∤ p`, else its subgraph induced on `0 .. p/2 - 1` (ids keep
/// their original order).
pub fn bipartite_circular_clique_core(p: usize, q: usize) -> Result<SignedGraph, CliqueError> {
    if !reduced_subject_to_even(p, q) {
        return Err(CliqueError::NotReduced { p, q });
    }
    let b = bipartite_circular_clique(p, q)?;
    if p.is_multiple_of(4) {
        let verts: Vec<usize> = (0..p / 2).collect();
        Ok(b.induced(&verts))
    } else {
        Ok(b)
    }
}

/// `(K_{k,k}, M)`: complete bipartite graph with sides `0..k` and `k..2k`
/// and the perfect matching `i <-> k+i` negative, everything else positive.
pub fn complete_bipartite_with_matching(k: usize) -> Result<SignedGraph, CliqueError> {
    if k < 1 {
        return Err(CliqueError::BadMatchingSize { k });
    }
    let mut g = SignedGraph::new(2 * k);
    for i in 0..k {
        for j in 0..k {
            let sign = if i == j { Sign::Negative } else { Sign::Positive };
            g.add_edge(i, k + j, sign).expect("fresh edge");
        }
    }
    Ok(g)
}

/// `(K_6, M)`: the complete graph on six vertices with the perfect matching
/// `{03, 14, 25}` negative. Contains `(K_{3,3}, M)` on the same vertex ids.
pub fn k6_with_matching() -> SignedGraph {
    let mut g = SignedGraph::new(6);
    for u in 0..6 {
        for v in u + 1..6 {
            let sign = if v == u + 3 { Sign::Negative } else { Sign::Positive };
            g.add_edge(u, v, sign).expect("fresh edge");
        }
    }
    g
}

/// A `k`-cycle with exactly one negative edge (the closing edge). For
/// `k = 2` this is the digon.
pub fn negative_cycle(k: usize) -> Result<SignedGraph, CliqueError> {
    if k < 2 {
        return Err(CliqueError::CycleTooShort { k });
    }
    let mut g = SignedGraph::new(k);
    for i in 0..k - 1 {
        g.add_edge(i, i + 1, Sign::Positive).expect("fresh edge");
    }
    g.add_edge(k - 1, 0, Sign::Negative).expect("fresh edge");
    Ok(g)
}

/// Two vertices joined by a positive and a negative edge.
pub fn digon() -> SignedGraph {
    SignedGraph::with_edges(2, &[(0, 1, Sign::Positive), (0, 1, Sign::Negative)])
        .expect("digon is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::bipartition;
    use crate::girth::girth_vector;
    use crate::graph::SwitchSet;

    fn circular_distance(p: usize, i: usize, j: usize) -> usize {
        let d = i.abs_diff(j);
        d.min(p - d)
    }

    #[test]
    fn clique_6_2_distance_classes() {
        let g = signed_circular_clique(6, 2).unwrap();
        for i in 0..6 {
            for j in i + 1..6 {
                let d = circular_distance(6, i, j);
                assert_eq!(g.has_edge(i, j, Sign::Positive), (2..=3).contains(&d));
                assert_eq!(g.has_edge(i, j, Sign::Negative), d <= 1);
            }
            assert_eq!(g.loop_signs(i), alloc::vec![Sign::Negative]);
        }
    }

    #[test]
    fn clique_4_1_has_digons() {
        let g = signed_circular_clique(4, 1).unwrap();
        // Positive at every distance 1..=3; negative at distance <= 1 or >= 3.
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(g.has_edge(i, j, Sign::Positive));
                let d = j - i;
                assert_eq!(g.has_edge(i, j, Sign::Negative), d == 1 || d == 3);
            }
        }
    }

    #[test]
    fn clique_16_5_has_sixteen_negative_loops() {
        let g = signed_circular_clique(16, 5).unwrap();
        assert_eq!(g.vertex_count(), 16);
        let loops = g.edges().iter().filter(|e| e.is_loop()).count();
        assert_eq!(loops, 16);
        assert!(g.edges().iter().filter(|e| e.is_loop()).all(|e| e.sign.is_negative()));
    }

    #[test]
    fn clique_core_6_2() {
        let g = signed_circular_clique_core(6, 2).unwrap();
        assert_eq!(g.vertex_count(), 3);
        // Induced from the clique: 0-1 and 1-2 negative, 0-2 positive,
        // one negative loop each.
        assert!(g.has_edge(0, 2, Sign::Positive));
        assert!(g.has_edge(0, 1, Sign::Negative));
        assert!(g.has_edge(1, 2, Sign::Negative));
        for v in 0..3 {
            assert_eq!(g.loop_signs(v), alloc::vec![Sign::Negative]);
        }
    }

    #[test]
    fn clique_core_4_1() {
        let g = signed_circular_clique_core(4, 1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.has_edge(0, 1, Sign::Positive));
        assert!(g.has_edge(0, 1, Sign::Negative));
        for v in 0..2 {
            assert_eq!(g.loop_signs(v), alloc::vec![Sign::Negative]);
        }
    }

    #[test]
    fn rotation_invariance_of_cliques() {
        for (p, q) in [(6, 2), (8, 3), (16, 5)] {
            let g = signed_circular_clique(p, q).unwrap();
            let rot: Vec<usize> = (0..p).map(|i| (i + 1) % p).collect();
            assert_eq!(g.relabeled(&rot).edge_multiset(), g.edge_multiset());
        }
    }

    #[test]
    fn switching_inside_clique_copies_the_antipodal_vertex() {
        for (p, q) in [(6, 2), (8, 3)] {
            let g = signed_circular_clique(p, q).unwrap();
            for i in 0..p / 2 {
                let s = g.switched(&SwitchSet::from_vertices([i])).unwrap();
                let twin = i + p / 2;
                for w in 0..p {
                    if w == i || w == twin {
                        continue;
                    }
                    for sign in [Sign::Positive, Sign::Negative] {
                        assert_eq!(
                            s.has_edge(i, w, sign),
                            s.has_edge(twin, w, sign),
                            "p={p} q={q} i={i} w={w}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn double_switch_graph_of_core_equals_clique() {
        for (p, q) in [(6, 2), (8, 3), (10, 3), (12, 5)] {
            let clique = signed_circular_clique(p, q).unwrap();
            let dsg = double_switch_graph(&signed_circular_clique_core(p, q).unwrap());
            assert_eq!(dsg.edge_multiset(), clique.edge_multiset(), "p={p} q={q}");
        }
    }

    #[test]
    fn bipartite_clique_edges_join_opposite_parities() {
        for (p, q) in [(6, 2), (8, 3), (16, 5), (14, 5), (10, 3), (4, 1)] {
            let g = bipartite_circular_clique(p, q).unwrap();
            assert!(g.is_loop_free());
            assert!(g.edges().iter().all(|e| (e.u + e.v) % 2 == 1));
            assert!(bipartition(&g).is_some());
        }
    }

    #[test]
    fn bipartite_clique_6_2_matches_distance_classes() {
        let g = bipartite_circular_clique(6, 2).unwrap();
        for i in 0..6 {
            assert!(g.has_edge(i, (i + 1) % 6, Sign::Negative));
            assert!(g.has_edge(i, (i + 3) % 6, Sign::Positive));
        }
        assert_eq!(g.edge_count(), 9);
    }

    #[test]
    fn dsg_of_single_positive_edge() {
        let e = SignedGraph::with_edges(2, &[(0, 1, Sign::Positive)]).unwrap();
        let d = double_switch_graph(&e);
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(d.edge_count(), 4);
        assert!(d.has_edge(0, 1, Sign::Positive));
        assert!(d.has_edge(2, 3, Sign::Positive));
        assert!(d.has_edge(0, 3, Sign::Negative));
        assert!(d.has_edge(1, 2, Sign::Negative));
        // The unique 4-cycle alternates +,-,+,-: its sign is positive, so
        // the graph has no negative closed walk at all.
        assert_eq!(girth_vector(&d).negative_girth(), None);
    }

    #[test]
    fn dsg_counts() {
        let b = bipartite_circular_clique(6, 2).unwrap();
        let d = double_switch_graph(&b);
        assert_eq!(d.vertex_count(), 2 * b.vertex_count());
        assert_eq!(d.edge_count(), 4 * b.edge_count());
    }

    #[test]
    fn esp_and_core_case_split() {
        // 4 | 16: the esp clique is B itself, the core is the induced half.
        let b16 = bipartite_circular_clique(16, 5).unwrap();
        assert_eq!(bipartite_circular_clique_esp(16, 5).unwrap(), b16);
        let core = bipartite_circular_clique_core(16, 5).unwrap();
        assert_eq!(core.vertex_count(), 8);
        // 4 ∤ 6: the core is B itself, the esp clique is the DSG.
        let b6 = bipartite_circular_clique(6, 2).unwrap();
        assert_eq!(bipartite_circular_clique_core(6, 2).unwrap(), b6);
        assert_eq!(
            bipartite_circular_clique_esp(6, 2).unwrap().vertex_count(),
            12
        );
    }

    #[test]
    fn core_16_5_is_a_signed_k44() {
        let g = bipartite_circular_clique_core(16, 5).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 16);
        for v in 0..8 {
            assert_eq!(g.degree(v), 4);
        }
        assert!(bipartition(&g).is_some());
    }

    #[test]
    fn reduction_requirement() {
        assert!(bipartite_circular_clique_esp(8, 2).is_err());
        assert!(bipartite_circular_clique_core(12, 4).is_err());
        assert!(reduced_subject_to_even(6, 2));
        assert!(reduced_subject_to_even(16, 5));
        assert!(!reduced_subject_to_even(8, 2));
        // Non-reduced parameters still generate via the raw formulas.
        assert!(bipartite_circular_clique(12, 4).is_ok());
    }

    #[test]
    fn kkm_counts() {
        let g = complete_bipartite_with_matching(4).unwrap();
        assert_eq!(g.edge_count(), 16);
        assert_eq!(g.negative_edge_indices().len(), 4);
        assert!(complete_bipartite_with_matching(0).is_err());
    }

    #[test]
    fn k6_with_matching_shape() {
        let g = k6_with_matching();
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.negative_edge_indices().len(), 3);
        // Contains (K_{3,3}, M) across the matching on the same ids.
        let k33 = complete_bipartite_with_matching(3).unwrap();
        for e in k33.edges() {
            assert!(g.has_edge(e.u, e.v, e.sign));
        }
        let gv = girth_vector(&g);
        // Any matching edge plus an apex forms a negative triangle.
        assert_eq!(gv.get(0, 0), Some(2));
        assert_eq!(gv.get(0, 1), Some(3));
        assert_eq!(gv.get(1, 0), Some(4));
        assert_eq!(gv.get(1, 1), Some(3));
    }

    #[test]
    fn negative_cycle_basics() {
        assert_eq!(
            girth_vector(&negative_cycle(4).unwrap()).negative_girth(),
            Some(4)
        );
        assert!(negative_cycle(1).is_err());
        assert_eq!(
            negative_cycle(2).unwrap().edge_multiset(),
            digon().edge_multiset()
        );
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(
            signed_circular_clique(16, 5).unwrap(),
            signed_circular_clique(16, 5).unwrap()
        );
        assert_eq!(
            bipartite_circular_clique_core(16, 5).unwrap(),
            bipartite_circular_clique_core(16, 5).unwrap()
        );
    }

    #[test]
    fn parameter_errors() {
        assert!(signed_circular_clique(5, 2).is_err());
        assert!(signed_circular_clique(6, 4).is_err());
        assert!(signed_circular_clique(6, 0).is_err());
        assert!(bipartite_circular_clique(10, 2).is_err());
    }
}
