//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use sigcirc::circular::{
    check_circular_with_certificate, chi_c,
    path_expansion_chi, restrict_to_bipartite_clique, zone,
};
use sigcirc::cliques::{
    bipartite_circular_clique, bipartite_circular_clique_core, complete_bipartite_with_matching,
    digon, double_switch_graph, negative_cycle, signed_circular_clique,
    signed_circular_clique_core,
};
use sigcirc::coloring::bipartition;
use sigcirc::constructions::{four_cycle_expansion, signed_path, PathParity};
use sigcirc::girth::girth_vector;
use sigcirc::graph::{Sign, SignedGraph};
use sigcirc::hom::{esp_hom, switch_iso, switching_hom, validate_hom};
use sigcirc::oracle;
use sigcirc::planar::{
    k33m_pipeline, planar_bipartite_instance, sign_with_negative_girth, verify_packing,
    PipelineOutcome, PlanarBase, PlanarFamily,
};
use sigcirc::rational::Rational;
use sigcirc::rng::SplitMix64;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn complete(n: usize) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v, Sign::Positive).unwrap();
        }
    }
    g
}

fn cycle(n: usize) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n, Sign::Positive).unwrap();
    }
    g
}

fn graph_from(n: usize, pos: &[(usize, usize)], neg: &[(usize, usize)]) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    for &(u, v) in pos {
        g.add_edge(u, v, Sign::Positive).unwrap();
    }
    for &(u, v) in neg {
        g.add_edge(u, v, Sign::Negative).unwrap();
    }
    g
}

fn same_signed_edges(a: &SignedGraph, b: &SignedGraph) -> bool {
    a.vertex_count() == b.vertex_count() && a.edge_multiset() == b.edge_multiset()
}

// --- criterion 1: generators match the hand-transcribed figures -----------

/// Bipartite circular clique on 16 points with q = 5, as drawn.
const FIG_B16_5_POS: &[(usize, usize)] = &[
    (1, 6), (1, 8), (1, 10), (1, 12),
    (2, 7), (2, 9), (2, 11), (2, 13),
    (3, 8), (3, 10), (3, 12), (3, 14),
    (4, 9), (4, 11), (4, 13), (4, 15),
    (5, 10), (5, 12), (5, 14), (5, 0),
    (6, 11), (6, 13), (6, 15),
    (7, 12), (7, 14), (7, 0),
    (8, 13), (8, 15),
    (9, 14), (9, 0),
    (10, 15),
    (11, 0),
];
const FIG_B16_5_NEG: &[(usize, usize)] = &[
    (1, 2), (1, 4), (1, 14), (1, 0),
    (2, 3), (2, 5), (2, 15),
    (3, 4), (3, 6), (3, 0),
    (4, 5), (4, 7),
    (5, 6), (5, 8),
    (6, 7), (6, 9),
    (7, 8), (7, 10),
    (8, 9), (8, 11),
    (9, 10), (10, 11), (11, 12), (12, 13), (13, 14), (14, 15), (15, 0),
    (9, 12), (10, 13), (11, 14), (12, 15), (13, 0),
];

/// The three-vertex switching core at 6/2, drawn with an equivalent
/// signature (an all-positive triangle with negative loops).
const FIG_HATK62_POS: &[(usize, usize)] = &[(1, 2), (2, 0), (0, 1)];
const FIG_HATK62_NEG: &[(usize, usize)] = &[(0, 0), (1, 1), (2, 2)];

const FIG_K62_POS: &[(usize, usize)] = &[
    (1, 3), (3, 5), (5, 1), (2, 4), (4, 0), (0, 2), (1, 4), (2, 5), (3, 0),
];
const FIG_K62_NEG: &[(usize, usize)] = &[
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 1),
    (0, 0), (1, 1), (2, 2), (3, 3), (4, 4), (5, 5),
];

const FIG_B62_POS: &[(usize, usize)] = &[(1, 4), (2, 5), (3, 0)];
const FIG_B62_NEG: &[(usize, usize)] = &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 1)];

/// Double switch graph of the 6/2 bipartite clique; primes are ids 6..11.
/// The drawing omits the second copy's six negative ring edges, which the
/// construction requires; they are restored here.
const FIG_DSGB62_POS: &[(usize, usize)] = &[
    (1, 4), (2, 5), (3, 0),
    (7, 10), (8, 11), (9, 6),
    (7, 2), (8, 3), (9, 4), (10, 5), (11, 0), (6, 1),
    (1, 8), (2, 9), (3, 10), (4, 11), (5, 6), (0, 7),
];
const FIG_DSGB62_NEG: &[(usize, usize)] = &[
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 1),
    (7, 8), (8, 9), (9, 10), (10, 11), (11, 6), (6, 7),
    (7, 4), (8, 5), (9, 0), (10, 1), (11, 2), (6, 3),
];

/// K_{4,4} with a negative perfect matching, relabeled from the drawing's
/// odd/even labels onto sides {0..3} and {4..7}.
const FIG_K44M_POS: &[(usize, usize)] = &[
    (1, 4), (1, 6), (1, 8), (3, 2), (3, 6), (3, 8),
    (5, 2), (5, 4), (5, 8), (7, 2), (7, 4), (7, 6),
];
const FIG_K44M_NEG: &[(usize, usize)] = &[(1, 2), (3, 4), (5, 6), (7, 8)];

/// The 16/5 switching core as drawn (one signature among the equivalent
/// choices, per the drawing's own caveat).
const FIG_HATB16_5_POS: &[(usize, usize)] = &[
    (1, 4), (1, 6), (3, 2), (3, 6), (3, 8), (5, 2), (5, 6), (7, 2), (7, 4), (7, 8),
];
const FIG_HATB16_5_NEG: &[(usize, usize)] = &[
    (1, 2), (1, 8), (6, 7), (3, 4), (4, 5), (5, 8),
];

/// Maps the drawings' 1..8 odd/even labels onto 0..7: odds (one side) to
/// 0..3 in order, evens (the other) to 4..7.
fn relabel_odd_even(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    pairs
        .iter()
        .map(|&(a, b)| {
            let m = |x: usize| if x % 2 == 1 { (x - 1) / 2 } else { 4 + (x / 2 - 1) };
            (m(a), m(b))
        })
        .collect()
}

#[test]
fn clique_golden_files() {
    // Full cliques and bipartite cliques match the drawings exactly.
    let fig = graph_from(16, FIG_B16_5_POS, FIG_B16_5_NEG);
    assert!(same_signed_edges(&bipartite_circular_clique(16, 5).unwrap(), &fig));

    let fig = graph_from(6, FIG_K62_POS, FIG_K62_NEG);
    assert!(same_signed_edges(&signed_circular_clique(6, 2).unwrap(), &fig));

    let fig = graph_from(6, FIG_B62_POS, FIG_B62_NEG);
    assert!(same_signed_edges(&bipartite_circular_clique(6, 2).unwrap(), &fig));

    let fig = graph_from(12, FIG_DSGB62_POS, FIG_DSGB62_NEG);
    let dsg = double_switch_graph(&bipartite_circular_clique(6, 2).unwrap());
    assert!(same_signed_edges(&dsg, &fig));

    // The 3-vertex core: the drawing uses an equivalent switched signature,
    // so compare the underlying graph exactly and the signature up to
    // switching.
    let fig = graph_from(3, FIG_HATK62_POS, FIG_HATK62_NEG);
    let core = signed_circular_clique_core(6, 2).unwrap();
    assert!(core.same_underlying(&fig));
    assert!(sigcirc::switching_equivalent(&core, &fig).unwrap());

    // (K_{4,4}, M) matches exactly after the fixed odd/even relabeling.
    let pos = relabel_odd_even(FIG_K44M_POS);
    let neg = relabel_odd_even(FIG_K44M_NEG);
    let fig = graph_from(8, &pos, &neg);
    assert!(same_signed_edges(
        &complete_bipartite_with_matching(4).unwrap(),
        &fig
    ));

    // The 16/5 core: the drawing shows one random equivalent signature, so
    // the comparison is exact underlying shape plus switching isomorphism.
    let pos = relabel_odd_even(FIG_HATB16_5_POS);
    let neg = relabel_odd_even(FIG_HATB16_5_NEG);
    let fig = graph_from(8, &pos, &neg);
    let core = bipartite_circular_clique_core(16, 5).unwrap();
    assert_eq!(core.vertex_count(), fig.vertex_count());
    assert_eq!(core.edge_count(), fig.edge_count());
    assert!(switch_iso(&core, &fig).unwrap());

    println!("[PASS] criterion 1: clique generators match the figure fixtures");
}

// --- criterion 2: exact circular chromatic numbers -------------------------

#[test]
fn exact_circular_chromatic_values() {
    assert_eq!(chi_c(&digon()).unwrap(), r(4, 1));
    for k in [2i64, 3, 4] {
        let g = negative_cycle(2 * k as usize).unwrap();
        assert_eq!(chi_c(&g).unwrap(), r(4 * k, 2 * k - 1), "negative cycle k={k}");
    }
    assert_eq!(chi_c(&complete_bipartite_with_matching(4).unwrap()).unwrap(), r(4, 1));
    assert_eq!(
        chi_c(&bipartite_circular_clique_core(16, 5).unwrap()).unwrap(),
        r(16, 5)
    );
    assert_eq!(
        chi_c(&four_cycle_expansion(&complete(2)).unwrap()).unwrap(),
        r(8, 3)
    );
    assert_eq!(
        chi_c(&four_cycle_expansion(&complete(3)).unwrap()).unwrap(),
        r(3, 1)
    );
    println!("[PASS] criterion 2: exact circular chromatic values");
}

// --- criterion 3: homomorphic incomparability ------------------------------

#[test]
fn incomparability_of_k44m_and_the_16_5_core() {
    let a = complete_bipartite_with_matching(4).unwrap();
    let b = bipartite_circular_clique_core(16, 5).unwrap();
    assert!(esp_hom(&a, &b).is_none());
    assert!(esp_hom(&b, &a).is_none());
    assert!(switching_hom(&a, &b).is_none());
    assert!(switching_hom(&b, &a).is_none());
    assert!(!switch_iso(&a, &b).unwrap());
    println!("[PASS] criterion 3: (K_4,4, M) and the 16/5 core are incomparable");
}

// --- criterion 4: bipartite clique equivalence ------------------------------

#[test]
fn bipartite_clique_threshold_equivalence() {
    let grid = [(8, 3), (14, 5), (6, 2), (16, 5), (10, 3), (4, 1)];
    let mut rng = SplitMix64::new(0x5eed_2024);
    let mut transformed = 0usize;
    for instance in 0..200 {
        let g = oracle::random_bipartite_signed(&mut rng, 4);
        let chi = chi_c(&g).unwrap();
        for &(p, q) in &grid {
            let target = bipartite_circular_clique(p, q).unwrap();
            let hom = switching_hom(&g, &target);
            let below = chi <= r(p as i64, q as i64);
            assert_eq!(
                hom.is_some(),
                below,
                "instance {instance}: chi_c = {chi}, target {p}/{q}"
            );
            if below {
                // The constructive route: a clique certificate restricted
                // onto the bipartite clique must validate as well.
                let (_, cert) = check_circular_with_certificate(&g, r(p as i64, q as i64))
                    .unwrap()
                    .expect("coloring exists at or above chi_c");
                let bip = bipartition(&g).expect("instances are bipartite");
                let restricted =
                    restrict_to_bipartite_clique(&g, p, q, &cert, &bip).unwrap();
                validate_hom(&g, &target, &restricted).unwrap();
                transformed += 1;
            }
        }
    }
    assert!(transformed > 0);
    println!(
        "[PASS] criterion 4: threshold equivalence on 200 instances ({transformed} certificates transformed)"
    );
}

// --- criterion 5: zone closed forms ----------------------------------------

#[test]
fn zone_closed_forms() {
    let radii = [r(8, 3), r(14, 5), r(3, 1), r(16, 5), r(10, 3)];
    let mut cases = 0;
    for len in 1usize..=4 {
        for &rr in &radii {
            // Validity window r < 2l/(l-1); no constraint for l = 1.
            if len > 1 && rr >= r(2 * len as i64, len as i64 - 1) {
                continue;
            }
            let (p, q) = sigcirc::circular::even_form(rr);
            let grid_points = |lo: Rational, hi: Rational| -> Vec<Rational> {
                (0..p)
                    .map(|i| r(i as i64, q as i64))
                    .filter(|&t| t >= lo && t <= hi)
                    .collect()
            };
            let reflect = |points: &[Rational]| -> Vec<Rational> {
                points
                    .iter()
                    .map(|&t| (rr - t).rem_euclid(rr))
                    .collect()
            };
            let expect = |lo: Rational, hi: Rational| -> Vec<Rational> {
                let base = grid_points(lo, hi);
                let mut all = base.clone();
                all.extend(reflect(&base));
                all.sort();
                all.dedup();
                all
            };
            let half = rr / r(2, 1);
            let l = r(len as i64, 1);
            // Even-positive path: [0, l(r/2 - 1)].
            let even = zone(&signed_path(len, PathParity::EvenPositive).unwrap(), rr).unwrap();
            assert_eq!(
                even.points,
                expect(r(0, 1), l * (half - r(1, 1))),
                "even path len={len} r={rr}"
            );
            // Odd-positive path: [l - (l-1) r/2, r/2].
            let odd = zone(&signed_path(len, PathParity::OddPositive).unwrap(), rr).unwrap();
            assert_eq!(
                odd.points,
                expect(l - (l - r(1, 1)) * half, half),
                "odd path len={len} r={rr}"
            );
            cases += 1;
        }
    }
    assert_eq!(cases, 12);
    println!("[PASS] criterion 5: zone closed forms on {cases} (length, r) cases");
}

// --- criterion 6: subdivision formula ---------------------------------------

#[test]
fn subdivision_formula() {
    let omegas: Vec<(&str, SignedGraph)> = vec![
        ("digon", digon()),
        ("C-4", negative_cycle(4).unwrap()),
        ("K33M", complete_bipartite_with_matching(3).unwrap()),
    ];
    for (name, omega) in &omegas {
        let base = chi_c(omega).unwrap();
        for len in [2usize, 3] {
            let expected = path_expansion_chi(base, len);
            // The closed form is valid while the composed value stays below
            // 2l/(l-1); all six cases do.
            assert!(expected < r(2 * len as i64, len as i64 - 1));
            let expanded = sigcirc::constructions::path_expansion(omega, len).unwrap();
            let got = chi_c(&expanded).unwrap();
            assert_eq!(got, expected, "omega={name} len={len}");
        }
    }
    println!("[PASS] criterion 6: subdivision formula on 6 cases");
}

// --- criterion 7: edge-to-negative-4-cycle expansion and colorings ----------

#[test]
fn four_cycle_expansion_reflects_homomorphisms() {
    let named: Vec<(&str, SignedGraph)> = vec![
        ("K2", complete(2)),
        ("K3", complete(3)),
        ("C5", cycle(5)),
        ("K4", complete(4)),
    ];
    for (gn, g) in &named {
        for (hn, h) in &named {
            let unsigned = esp_hom(g, h).is_some();
            let expanded = switching_hom(
                &four_cycle_expansion(g).unwrap(),
                &four_cycle_expansion(h).unwrap(),
            )
            .is_some();
            assert_eq!(unsigned, expanded, "{gn} -> {hn}");
        }
    }
    let sk4 = four_cycle_expansion(&complete(4)).unwrap();
    assert!(switching_hom(&sk4, &complete_bipartite_with_matching(4).unwrap()).is_some());
    assert!(switching_hom(&sk4, &complete_bipartite_with_matching(3).unwrap()).is_none());
    println!("[PASS] criterion 7: expansion reflects homomorphisms on 16 pairs");
}

// --- criterion 8: the negative-girth-6 pipeline ------------------------------

#[test]
fn pipeline_bounds_negative_girth_six_instances() {
    let families = [
        PlanarFamily::Grid { rows: 3, cols: 4 },
        PlanarFamily::Grid { rows: 4, cols: 4 },
        PlanarFamily::Grid { rows: 3, cols: 5 },
        PlanarFamily::CylinderEven { cycle: 4, rows: 2 },
        PlanarFamily::CylinderEven { cycle: 6, rows: 2 },
        PlanarFamily::CylinderEven { cycle: 4, rows: 3 },
        PlanarFamily::SubdividedPlanar { base: PlanarBase::K4 },
        PlanarFamily::SubdividedPlanar { base: PlanarBase::Octahedron },
        PlanarFamily::SubdividedPlanar { base: PlanarBase::Wheel(4) },
        PlanarFamily::SubdividedPlanar { base: PlanarBase::Wheel(5) },
        PlanarFamily::TStar2Planar { base: PlanarBase::K4 },
        PlanarFamily::TStar2Planar { base: PlanarBase::Octahedron },
    ];
    let mut run = 0usize;
    let mut certified = 0usize;
    let mut no_packing = 0usize;
    for (i, &family) in families.iter().enumerate() {
        for seed in 0..5u64 {
            let base = planar_bipartite_instance(family).unwrap();
            assert!(base.vertex_count() <= 24);
            let signed =
                sign_with_negative_girth(&base, 6, seed * 101 + i as u64, 2048).unwrap();
            run += 1;
            match k33m_pipeline(&signed).unwrap() {
                PipelineOutcome::Success(s) => {
                    assert!(verify_packing(&signed, &s.packing));
                    let k33 = complete_bipartite_with_matching(3).unwrap();
                    validate_hom(&signed, &k33, &s.certificate).unwrap();
                    // Consistency with the circular module: a certificate
                    // into (K_{3,3}, M) means chi_c <= 3.
                    assert!(chi_c(&signed).unwrap() <= r(3, 1));
                    certified += 1;
                }
                PipelineOutcome::Failure { stage, detail } => {
                    // A missing packing is a recorded noteworthy case, not a
                    // soundness failure: with pairwise-distinct sets the cube
                    // (cylinder 4x2) provably has none — every signature of
                    // negative girth >= 6 on it is switching-trivial, its
                    // equivalent negative sets are edge cuts of size >= 3,
                    // and five disjoint nonempty cuts cannot fit in 12
                    // edges. Any later-stage failure is a real bug.
                    assert_eq!(
                        format!("{stage}"),
                        "packing",
                        "family {family:?} seed {seed}: failed at {stage}: {detail}"
                    );
                    assert_eq!(
                        family,
                        PlanarFamily::CylinderEven { cycle: 4, rows: 2 },
                        "only the cube is expected to lack a 6-packing"
                    );
                    no_packing += 1;
                }
            }
        }
    }
    assert!(run >= 50);
    assert!(certified >= 50);
    assert_eq!(run, certified + no_packing);
    println!(
        "[PASS] criterion 8: pipeline certified {certified}/{run} negative-girth-6 instances ({no_packing} recorded without a distinct-set 6-packing)"
    );
}

// --- criterion 9: oracle equivalences ----------------------------------------

#[test]
fn searches_agree_with_brute_force_oracles() {
    // Girth vector against the walk-stepping oracle.
    let mut rng = SplitMix64::new(0xacce55);
    for _ in 0..100 {
        let g = oracle::random_signed_graph(&mut rng, 7, true, true);
        let cap = 2 * g.vertex_count() + 2;
        let slow = oracle::girth_vector_by_walks(&g, cap);
        let fast = girth_vector(&g);
        for i in 0..2 {
            for j in 0..2 {
                match (fast.get(i, j), slow[i * 2 + j]) {
                    (Some(a), Some(b)) => assert_eq!(a, b),
                    (Some(a), None) => assert!(a > cap),
                    (None, Some(_)) => panic!("oracle found a walk the search missed"),
                    (None, None) => {}
                }
            }
        }
    }

    // Edge-sign preserving search against exhaustive map enumeration.
    let mut rng = SplitMix64::new(0xbeef);
    for i in 0..100 {
        let (g, h) = if i % 2 == 0 {
            let (g, h, _) = oracle::hom_witnessed_pair(&mut rng, 6, 5);
            (g, h)
        } else {
            (
                oracle::random_signed_graph(&mut rng, 6, true, true),
                oracle::random_signed_graph(&mut rng, 5, true, true),
            )
        };
        let fast = esp_hom(&g, &h);
        let brute = oracle::esp_hom_brute(&g, &h);
        assert_eq!(fast.is_some(), brute.is_some(), "esp instance {i}");
        if let Some(cert) = fast {
            validate_hom(&g, &h, &cert).unwrap();
        }

        // Switching search against all switch sets times all maps.
        let fast = switching_hom(&g, &h);
        let brute = oracle::switching_hom_brute(&g, &h);
        assert_eq!(fast.is_some(), brute, "switching instance {i}");
        if let Some(cert) = fast {
            validate_hom(&g, &h, &cert).unwrap();
        }
    }

    // Switching equivalence against all switch sets, up to 12 vertices.
    let mut rng = SplitMix64::new(0xcafe);
    for _ in 0..100 {
        let g = oracle::random_signed_graph(&mut rng, 12, true, true);
        let h = if rng.coin() {
            oracle::resign_random(&mut rng, &g)
        } else {
            let s = sigcirc::graph::SwitchSet::from_vertices(
                (0..g.vertex_count()).filter(|_| rng.coin()),
            );
            g.switched(&s).unwrap()
        };
        assert_eq!(
            sigcirc::switching_equivalent(&g, &h).unwrap(),
            oracle::switching_equivalent_brute(&g, &h)
        );
    }
    println!("[PASS] criterion 9: searches agree with the brute-force oracles");
}

// --- criterion 10: no-homomorphism bound --------------------------------------

#[test]
fn found_homomorphisms_respect_girth_vectors() {
    let mut rng = SplitMix64::new(0x91f7);
    let mut found = 0usize;
    while found < 200 {
        let (g, h, _) = oracle::hom_witnessed_pair(&mut rng, 6, 5);
        let cert = esp_hom(&g, &h).expect("a homomorphism exists by construction");
        validate_hom(&g, &h, &cert).unwrap();
        assert!(
            girth_vector(&g).dominates(&girth_vector(&h)),
            "girth vector decreased along a homomorphism"
        );
        found += 1;
    }
    println!("[PASS] criterion 10: 200 found homomorphisms respect girth vectors");
}
