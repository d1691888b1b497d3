//! Named verification suites behind `sigcirc check`. Each suite runs a
//! batch of deterministic instances derived from one seed and reports
//! per-instance failures with enough data to reproduce them.

use std::time::Instant;

use serde::Serialize;
use sigcirc::circular::{
    check_circular_with_certificate, chi_c, path_expansion_chi,
    restrict_to_bipartite_clique, zone,
};
use sigcirc::cliques::{
    bipartite_circular_clique, bipartite_circular_clique_core, complete_bipartite_with_matching,
    digon, double_switch_graph, negative_cycle,
};
use sigcirc::coloring::bipartition;
use sigcirc::constructions::{four_cycle_expansion, path_expansion, signed_path, PathParity};
use sigcirc::girth::girth_vector;
use sigcirc::graph::{Sign, SignedGraph};
use sigcirc::hom::{esp_hom, switch_iso, switching_hom, validate_hom};
use sigcirc::oracle;
use sigcirc::planar::{
    k33m_pipeline, planar_bipartite_instance, sign_with_negative_girth, PipelineOutcome,
    PlanarBase, PlanarFamily,
};
use sigcirc::rational::Rational;
use sigcirc::rng::SplitMix64;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Failure {
    pub seed: u64,
    pub instance: usize,
    pub detail: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckSuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub instances: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
    pub wall_ms: u128,
}

pub const SUITES: &[&str] = &[
    "no-hom",
    "dsg",
    "bk",
    "s-formula",
    "tstar-formula",
    "zones",
    "incomparable",
    "p6",
    "girth-oracle",
];

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

/// Runs `count` indexed instances, possibly across threads; results are
/// aggregated in instance order so the report does not depend on thread
/// count. Each instance derives its own generator from (seed, index).
fn run_instances<F>(count: usize, threads: usize, run_one: F) -> Vec<Option<String>>
where
    F: Fn(usize) -> Option<String> + Sync,
{
    let threads = threads.max(1);
    if threads == 1 || count == 0 {
        return (0..count).map(run_one).collect();
    }
    let chunk_size = count.div_ceil(threads).max(1);
    let mut results: Vec<Option<String>> = vec![None; count];
    std::thread::scope(|scope| {
        for (chunk_idx, chunk) in results.chunks_mut(chunk_size).enumerate() {
            let run_one = &run_one;
            scope.spawn(move || {
                for (off, slot) in chunk.iter_mut().enumerate() {
                    *slot = run_one(chunk_idx * chunk_size + off);
                }
            });
        }
    });
    results
}

fn instance_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(index as u64)
}

pub fn run_suite(
    suite: &str,
    seed: u64,
    count: usize,
    threads: usize,
) -> Result<CheckSuiteReport, String> {
    let start = Instant::now();
    let outcomes: Vec<Option<String>> = match suite {
        "no-hom" => run_instances(count, threads, |i| {
            let mut rng = SplitMix64::new(instance_seed(seed, i));
            let (g, h, _) = oracle::hom_witnessed_pair(&mut rng, 6, 5);
            let cert = match esp_hom(&g, &h) {
                Some(c) => c,
                None => return Some("expected homomorphism is missing".to_string()),
            };
            if let Err(e) = validate_hom(&g, &h, &cert) {
                return Some(format!("certificate failed validation: {e}"));
            }
            if !girth_vector(&g).dominates(&girth_vector(&h)) {
                return Some("girth vector decreased along a homomorphism".to_string());
            }
            None
        }),
        "dsg" => run_instances(count, threads, |i| {
            let mut rng = SplitMix64::new(instance_seed(seed, i));
            let g = oracle::random_signed_graph(&mut rng, 6, true, false);
            let h = oracle::random_signed_graph(&mut rng, 4, true, true);
            let reduction = esp_hom(&g, &double_switch_graph(&h)).is_some();
            let direct = switching_hom(&g, &h).is_some();
            let brute = oracle::switching_hom_brute(&g, &h);
            (direct != reduction || direct != brute).then(|| {
                format!("direct={direct} reduction={reduction} brute={brute}")
            })
        }),
        "bk" => run_instances(count, threads, |i| {
            let mut rng = SplitMix64::new(instance_seed(seed, i));
            let g = oracle::random_bipartite_signed(&mut rng, 4);
            let chi = match chi_c(&g) {
                Ok(v) => v,
                Err(e) => return Some(format!("chi_c failed: {e}")),
            };
            for (p, q) in [(8, 3), (14, 5), (6, 2), (16, 5), (10, 3), (4, 1)] {
                let target = bipartite_circular_clique(p, q).unwrap();
                let hom = switching_hom(&g, &target).is_some();
                let below = chi <= r(p as i64, q as i64);
                if hom != below {
                    return Some(format!("chi_c={chi}, target {p}/{q}: hom={hom}"));
                }
                if below {
                    let (_, cert) = check_circular_with_certificate(&g, r(p as i64, q as i64))
                        .unwrap()
                        .expect("coloring exists at or above chi_c");
                    let bip = bipartition(&g).expect("bipartite instance");
                    match restrict_to_bipartite_clique(&g, p, q, &cert, &bip) {
                        Ok(restricted) => {
                            if let Err(e) = validate_hom(&g, &target, &restricted) {
                                return Some(format!("restricted certificate invalid: {e}"));
                            }
                        }
                        Err(e) => return Some(format!("restriction failed: {e}")),
                    }
                }
            }
            None
        }),
        "s-formula" => {
            let cases = [complete(2), complete(3)];
            cases
                .iter()
                .map(|g| {
                    let unsigned = chi_c(&g.all_positive()).unwrap();
                    let expanded = chi_c(&four_cycle_expansion(g).unwrap()).unwrap();
                    let formula = sigcirc::circular::four_cycle_expansion_chi(unsigned);
                    (expanded != formula)
                        .then(|| format!("search {expanded} vs formula {formula}"))
                })
                .collect()
        }
        "tstar-formula" => {
            let omegas = [
                digon(),
                negative_cycle(4).unwrap(),
                complete_bipartite_with_matching(3).unwrap(),
            ];
            let mut out = Vec::new();
            for omega in &omegas {
                let base = chi_c(omega).unwrap();
                for len in [2usize, 3] {
                    let formula = path_expansion_chi(base, len);
                    if formula >= r(2 * len as i64, len as i64 - 1) {
                        out.push(None);
                        continue;
                    }
                    let got = chi_c(&path_expansion(omega, len).unwrap()).unwrap();
                    out.push(
                        (got != formula).then(|| format!("len={len}: {got} vs {formula}")),
                    );
                }
            }
            out
        }
        "zones" => {
            let radii = [r(8, 3), r(14, 5), r(3, 1), r(16, 5), r(10, 3)];
            let mut out = Vec::new();
            for len in 1usize..=4 {
                for &rr in &radii {
                    if len > 1 && rr >= r(2 * len as i64, len as i64 - 1) {
                        continue;
                    }
                    let (p, q) = sigcirc::circular::even_form(rr);
                    let grid = |lo: Rational, hi: Rational| -> Vec<Rational> {
                        let base: Vec<Rational> = (0..p)
                            .map(|i| r(i as i64, q as i64))
                            .filter(|&t| t >= lo && t <= hi)
                            .collect();
                        let mut all = base.clone();
                        all.extend(base.iter().map(|&t| (rr - t).rem_euclid(rr)));
                        all.sort();
                        all.dedup();
                        all
                    };
                    let half = rr / r(2, 1);
                    let l = r(len as i64, 1);
                    let even =
                        zone(&signed_path(len, PathParity::EvenPositive).unwrap(), rr).unwrap();
                    let odd =
                        zone(&signed_path(len, PathParity::OddPositive).unwrap(), rr).unwrap();
                    let even_ok = even.points == grid(r(0, 1), l * (half - r(1, 1)));
                    let odd_ok = odd.points == grid(l - (l - r(1, 1)) * half, half);
                    out.push(
                        (!even_ok || !odd_ok)
                            .then(|| format!("len={len} r={rr}: even={even_ok} odd={odd_ok}")),
                    );
                }
            }
            out
        }
        "incomparable" => {
            let a = complete_bipartite_with_matching(4).unwrap();
            let b = bipartite_circular_clique_core(16, 5).unwrap();
            vec![
                esp_hom(&a, &b)
                    .map(|_| "unexpected edge-sign preserving map into the core".to_string()),
                esp_hom(&b, &a)
                    .map(|_| "unexpected edge-sign preserving map from the core".to_string()),
                switching_hom(&a, &b).map(|_| "unexpected switching map into the core".to_string()),
                switching_hom(&b, &a).map(|_| "unexpected switching map from the core".to_string()),
                switch_iso(&a, &b)
                    .unwrap()
                    .then(|| "unexpected switching isomorphism".to_string()),
            ]
        }
        "p6" => {
            let families = [
                PlanarFamily::Grid { rows: 3, cols: 4 },
                PlanarFamily::Grid { rows: 4, cols: 4 },
                PlanarFamily::CylinderEven { cycle: 6, rows: 2 },
                PlanarFamily::SubdividedPlanar { base: PlanarBase::K4 },
                PlanarFamily::SubdividedPlanar { base: PlanarBase::Octahedron },
                PlanarFamily::SubdividedPlanar { base: PlanarBase::Wheel(5) },
                PlanarFamily::TStar2Planar { base: PlanarBase::K4 },
            ];
            run_instances(count, threads, |i| {
                let family = families[i % families.len()];
                let base = planar_bipartite_instance(family).unwrap();
                let signed =
                    sign_with_negative_girth(&base, 6, instance_seed(seed, i), 2048).unwrap();
                match k33m_pipeline(&signed) {
                    Ok(PipelineOutcome::Success(s)) => {
                        let k33 = complete_bipartite_with_matching(3).unwrap();
                        validate_hom(&signed, &k33, &s.certificate)
                            .err()
                            .map(|e| format!("certificate invalid: {e}"))
                    }
                    Ok(PipelineOutcome::Failure { stage, detail }) => {
                        Some(format!("{family:?}: stage {stage}: {detail}"))
                    }
                    Err(e) => Some(format!("{family:?}: {e}")),
                }
            })
        }
        "girth-oracle" => run_instances(count, threads, |i| {
            let mut rng = SplitMix64::new(instance_seed(seed, i));
            let g = oracle::random_signed_graph(&mut rng, 7, true, true);
            let cap = 2 * g.vertex_count() + 2;
            let slow = oracle::girth_vector_by_walks(&g, cap);
            let fast = girth_vector(&g);
            for a in 0..2 {
                for b in 0..2 {
                    let ok = match (fast.get(a, b), slow[a * 2 + b]) {
                        (Some(x), Some(y)) => x == y,
                        (Some(x), None) => x > cap,
                        (None, Some(_)) => false,
                        (None, None) => true,
                    };
                    if !ok {
                        return Some(format!(
                            "entry ({a},{b}): search {:?} vs walks {:?}",
                            fast.get(a, b),
                            slow[a * 2 + b]
                        ));
                    }
                }
            }
            None
        }),
        other => return Err(format!("unknown suite {other:?} (expected one of {SUITES:?})")),
    };

    let instances = outcomes.len();
    let failures: Vec<Failure> = outcomes
        .into_iter()
        .enumerate()
        .filter_map(|(i, res)| {
            res.map(|detail| Failure {
                seed: instance_seed(seed, i),
                instance: i,
                detail,
            })
        })
        .collect();
    Ok(CheckSuiteReport {
        schema_version: 1,
        suite: suite.to_string(),
        instances,
        passes: instances - failures.len(),
        failures,
        wall_ms: start.elapsed().as_millis(),
    })
}
