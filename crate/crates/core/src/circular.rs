//! Circular colorings with exact rational circumference.
//!
//! A circular r-coloring places vertices on a circle of circumference `r` so
//! that positive edges keep their endpoints at distance at least 1 and
//! negative edges keep one endpoint at distance at least 1 from the
//! antipode of the other. Deciding a rational `r = p/q` reduces to an
//! edge-sign preserving homomorphism into the signed circular clique, and
//! the circular chromatic number is the least grid value that admits one.

use alloc::vec::Vec;
use core::fmt;

use crate::cliques::{
    bipartite_circular_clique, reduced_subject_to_even, signed_circular_clique, CliqueError,
};
use crate::coloring::{bipartition, Bipartition};
use crate::constructions::Indicator;
use crate::graph::{SignedGraph, SwitchSet};
use crate::hom::{esp_hom_pinned, validate_hom, HomCertificate, HomError};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CircularError {
    RadiusBelowTwo { r: Rational },
    NoEdges,
    NoColoringWithinBound { bound: Rational, max_denominator: usize },
    Clique(CliqueError),
    NotBipartite,
    BadCertificate(HomError),
    ParityMismatch { p: usize, q: usize },
}

impl fmt::Display for CircularError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircularError::RadiusBelowTwo { r } => {
                write!(f, "circumference {r} below 2 is not supported")
            }
            CircularError::NoEdges => write!(f, "graph has no edges"),
            CircularError::NoColoringWithinBound { bound, max_denominator } => write!(
                f,
                "no circular coloring found with r <= {bound} and denominator <= {max_denominator}"
            ),
            CircularError::Clique(e) => write!(f, "{e}"),
            CircularError::NotBipartite => write!(f, "graph is not bipartite"),
            CircularError::BadCertificate(e) => write!(f, "{e}"),
            CircularError::ParityMismatch { p, q } => {
                write!(f, "{p}/{q} is not admissible here")
            }
        }
    }
}

impl From<CliqueError> for CircularError {
    fn from(e: CliqueError) -> Self {
        CircularError::Clique(e)
    }
}

/// `(p, q)` with `p` even and `p/q = r`; multiplies by two when the reduced
/// numerator is odd.
pub fn even_form(r: Rational) -> (usize, usize) {
    let (p, q) = (r.numerator() as usize, r.denominator() as usize);
    if p % 2 == 0 {
        (p, q)
    } else {
        (2 * p, 2 * q)
    }
}

/// A circular r-coloring: circle points in `[0, r)` per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CircularColoring {
    pub r: Rational,
    pub points: Vec<Rational>,
}

fn circ_distance(r: Rational, x: Rational, y: Rational) -> Rational {
    let d = (x - y).rem_euclid(r);
    d.min(r - d)
}

fn antipode(r: Rational, x: Rational) -> Rational {
    (x + r / Rational::integer(2)).rem_euclid(r)
}

impl CircularColoring {
    /// Independent re-check of both distance conditions.
    pub fn validate(&self, g: &SignedGraph) -> bool {
        let one = Rational::integer(1);
        if self.points.len() != g.vertex_count() {
            return false;
        }
        if self
            .points
            .iter()
            .any(|&x| x < Rational::zero() || x >= self.r)
        {
            return false;
        }
        g.edges().iter().all(|e| {
            let (x, y) = (self.points[e.u], self.points[e.v]);
            if e.sign.is_negative() {
                circ_distance(self.r, x, antipode(self.r, y)) >= one
            } else {
                circ_distance(self.r, x, y) >= one
            }
        })
    }
}

/// Decides a circular r-coloring through the signed circular clique with
/// even numerator; a found clique certificate is converted to circle points
/// `i/q`. `None` means no circular r-coloring exists. Rejects `r < 2`.
pub fn check_circular(
    g: &SignedGraph,
    r: Rational,
) -> Result<Option<CircularColoring>, CircularError> {
    check_circular_with_certificate(g, r).map(|o| o.map(|(c, _)| c))
}

/// As `check_circular`, also returning the clique certificate.
pub fn check_circular_with_certificate(
    g: &SignedGraph,
    r: Rational,
) -> Result<Option<(CircularColoring, HomCertificate)>, CircularError> {
    if r < Rational::integer(2) {
        return Err(CircularError::RadiusBelowTwo { r });
    }
    let (p, q) = even_form(r);
    let clique = signed_circular_clique(p, q)?;
    let cert = match esp_hom_pinned(g, &clique, &[], true) {
        Some(c) => c,
        None => return Ok(None),
    };
    let points: Vec<Rational> = cert
        .vertex_map
        .iter()
        .map(|&i| Rational::new(i as i64, q as i64))
        .collect();
    let coloring = CircularColoring { r, points };
    assert!(coloring.validate(g), "clique certificate must convert to a valid coloring");
    Ok(Some((coloring, cert)))
}

#[derive(Clone, Debug, Default)]
pub struct ChiCConfig {
    /// Candidate denominators run up to this bound; default `|V|`.
    pub max_denominator: Option<usize>,
    /// Upper anchor of the search; default 4 for loop-free bipartite
    /// inputs, `2|V|` otherwise.
    pub upper_bound: Option<Rational>,
}

#[derive(Clone, Debug)]
pub struct ChiCOutcome {
    pub value: Rational,
    pub coloring: CircularColoring,
    pub certificate: HomCertificate,
    /// The largest candidate below `value` (it failed), so an insufficient
    /// denominator bound is detectable by the caller.
    pub failed_below: Option<Rational>,
    pub max_denominator: usize,
}

/// All reduced fractions in `[2, upper]` with denominator at most
/// `max_den`, sorted ascending.
fn candidate_grid(max_den: usize, upper: Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    for q in 1..=max_den as i64 {
        let mut p = 2 * q;
        loop {
            let r = Rational::new(p, q);
            if r > upper {
                break;
            }
            if r.denominator() == q {
                out.push(r);
            }
            p += 1;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Exact circular chromatic number over the candidate grid, using
/// monotonicity (a circular r-coloring scales to any larger r) to binary
/// search the sorted candidates.
pub fn chi_c_detailed(g: &SignedGraph, config: &ChiCConfig) -> Result<ChiCOutcome, CircularError> {
    if g.edge_count() == 0 {
        return Err(CircularError::NoEdges);
    }
    let n = g.vertex_count();
    let max_den = config.max_denominator.unwrap_or(n).max(1);
    let upper = config.upper_bound.unwrap_or_else(|| {
        if g.is_loop_free() && bipartition(g).is_some() {
            Rational::integer(4)
        } else {
            Rational::integer(2 * n as i64)
        }
    });
    let grid = candidate_grid(max_den, upper);
    if grid.is_empty() {
        return Err(CircularError::NoColoringWithinBound {
            bound: upper,
            max_denominator: max_den,
        });
    }
    // Invariant: candidates below `lo` fail, `hi` (when set by a success)
    // and everything above succeed by monotonicity. `hi` always equals the
    // index of the last recorded hit when one exists.
    let mut lo = 0usize;
    let mut hi = grid.len();
    let mut hit: Option<(usize, CircularColoring, HomCertificate)> = None;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match check_circular_with_certificate(g, grid[mid])? {
            Some((coloring, cert)) => {
                hit = Some((mid, coloring, cert));
                hi = mid;
            }
            None => {
                lo = mid + 1;
            }
        }
    }
    match hit {
        Some((idx, coloring, certificate)) => {
            debug_assert_eq!(idx, lo);
            Ok(ChiCOutcome {
                value: grid[idx],
                coloring,
                certificate,
                failed_below: (idx > 0).then(|| grid[idx - 1]),
                max_denominator: max_den,
            })
        }
        None => Err(CircularError::NoColoringWithinBound {
            bound: upper,
            max_denominator: max_den,
        }),
    }
}

/// Exact circular chromatic number with the default configuration.
pub fn chi_c(g: &SignedGraph) -> Result<Rational, CircularError> {
    chi_c_detailed(g, &ChiCConfig::default()).map(|o| o.value)
}

/// `chi_c` of the underlying graph, signs ignored (every edge positive).
pub fn chi_c_unsigned(g: &SignedGraph) -> Result<Rational, CircularError> {
    chi_c(&g.all_positive())
}

/// Admissible circle positions (multiples of `1/q`) for the indicator's `u`
/// endpoint when `v` is pinned at 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Zone {
    pub r: Rational,
    pub points: Vec<Rational>,
}

/// Computes the zone by constrained clique homomorphisms with the two
/// marked vertices pinned: `v` at clique vertex 0 (lossless thanks to the
/// clique's rotational symmetry), `u` at each grid point in turn.
pub fn zone(ind: &Indicator, r: Rational) -> Result<Zone, CircularError> {
    if r < Rational::integer(2) {
        return Err(CircularError::RadiusBelowTwo { r });
    }
    let (p, q) = even_form(r);
    let clique = signed_circular_clique(p, q)?;
    let mut points = Vec::new();
    for i in 0..p {
        let pins = [(ind.v, 0usize), (ind.u, i)];
        if esp_hom_pinned(&ind.graph, &clique, &pins, false).is_some() {
            points.push(Rational::new(i as i64, q as i64));
        }
    }
    Ok(Zone { r, points })
}

/// Evaluates `2 l x / ((l - 1) x + 2)`: the circular chromatic number of the
/// length-`l` path expansion of a graph with circular chromatic number `x`.
pub fn path_expansion_chi(x: Rational, len: usize) -> Rational {
    assert!(len >= 1);
    assert!(x >= Rational::integer(2), "formula regime is x >= 2");
    let l = Rational::integer(len as i64);
    (Rational::integer(2) * l * x) / ((l - Rational::integer(1)) * x + Rational::integer(2))
}

/// Evaluates `4 - 4/(x + 1)`: the circular chromatic number of the
/// negative-4-cycle expansion of a graph with circular chromatic number `x`.
pub fn four_cycle_expansion_chi(x: Rational) -> Rational {
    assert!(x >= Rational::integer(1));
    Rational::integer(4) - Rational::integer(4) / (x + Rational::integer(1))
}

/// Converts an edge-sign preserving certificate into the signed circular
/// clique `K^s_{p;q}` into a certificate into the bipartite circular clique
/// `B_{p;q}`, following the two-case construction: when `4 | p`, shift the
/// image of every vertex that landed on the wrong side by one; when
/// `4 ∤ p`, switch such vertices and send them to the antipodal image.
/// The result is re-validated before it is returned.
pub fn restrict_to_bipartite_clique(
    g: &SignedGraph,
    p: usize,
    q: usize,
    cert: &HomCertificate,
    bip: &Bipartition,
) -> Result<HomCertificate, CircularError> {
    if !p.is_multiple_of(2) || !reduced_subject_to_even(p, q) {
        return Err(CircularError::ParityMismatch { p, q });
    }
    let clique = signed_circular_clique(p, q)?;
    validate_hom(g, &clique, cert).map_err(CircularError::BadCertificate)?;
    if !cert.switch_set.is_empty() {
        return Err(CircularError::BadCertificate(HomError::MapLengthMismatch));
    }
    let b = bipartite_circular_clique(p, q)?;

    // Side A aims at X (even clique ids), side B at Y (odd ids).
    let wrong_side = |v: usize| -> bool {
        let even_image = cert.vertex_map[v].is_multiple_of(2);
        if bip.in_side_a(v) {
            !even_image
        } else {
            even_image
        }
    };

    let mut vertex_map = Vec::with_capacity(g.vertex_count());
    let mut switch_set = SwitchSet::empty();
    if p.is_multiple_of(4) {
        for v in 0..g.vertex_count() {
            let img = cert.vertex_map[v];
            vertex_map.push(if wrong_side(v) { (img + 1) % p } else { img });
        }
    } else {
        for v in 0..g.vertex_count() {
            let img = cert.vertex_map[v];
            if wrong_side(v) {
                switch_set.insert(v);
                vertex_map.push((img + p / 2) % p);
            } else {
                vertex_map.push(img);
            }
        }
    }
    let edge_map: Result<Vec<usize>, CircularError> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let flips = switch_set.contains(e.u) as u8 + switch_set.contains(e.v) as u8;
            let sign = if flips == 1 { e.sign.flipped() } else { e.sign };
            b.edge_between(vertex_map[e.u], vertex_map[e.v], sign)
                .ok_or(CircularError::BadCertificate(HomError::IncidenceBroken {
                    edge: i,
                }))
        })
        .collect();
    let out = HomCertificate {
        vertex_map,
        edge_map: edge_map?,
        switch_set,
    };
    validate_hom(g, &b, &out).map_err(CircularError::BadCertificate)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::{
        complete_bipartite_with_matching, digon, negative_cycle,
    };
    use crate::constructions::{four_cycle_expansion, signed_path, PathParity};
    use crate::graph::Sign::Positive;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn complete(n: usize) -> SignedGraph {
        let mut g = SignedGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v, Positive).unwrap();
            }
        }
        g
    }

    #[test]
    fn digon_at_four_but_not_below() {
        let d = digon();
        let col = check_circular(&d, r(4, 1)).unwrap().unwrap();
        assert!(col.validate(&d));
        assert!(check_circular(&d, r(19, 5)).unwrap().is_none());
        assert!(check_circular(&d, r(9, 5)).is_err());
    }

    #[test]
    fn negative_four_cycle_threshold() {
        let c = negative_cycle(4).unwrap();
        assert!(check_circular(&c, r(8, 3)).unwrap().is_some());
        // 8/3 - 1/100 = 797/300
        assert!(check_circular(&c, r(797, 300)).unwrap().is_none());
    }

    #[test]
    fn chi_c_small_values() {
        assert_eq!(chi_c(&digon()).unwrap(), r(4, 1));
        assert_eq!(chi_c(&negative_cycle(4).unwrap()).unwrap(), r(8, 3));
        assert_eq!(chi_c(&negative_cycle(6).unwrap()).unwrap(), r(12, 5));
        assert_eq!(chi_c(&four_cycle_expansion(&complete(2)).unwrap()).unwrap(), r(8, 3));
    }

    #[test]
    fn chi_c_reports_the_failing_neighbor() {
        let out = chi_c_detailed(&negative_cycle(4).unwrap(), &ChiCConfig::default()).unwrap();
        assert_eq!(out.value, r(8, 3));
        let below = out.failed_below.unwrap();
        assert!(below < out.value);
        assert!(check_circular(&negative_cycle(4).unwrap(), below).unwrap().is_none());
    }

    #[test]
    fn chi_c_unsigned_matches_classical_values() {
        assert_eq!(chi_c_unsigned(&complete(2)).unwrap(), r(2, 1));
        assert_eq!(chi_c_unsigned(&complete(3)).unwrap(), r(3, 1));
        let mut c5 = SignedGraph::new(5);
        for i in 0..5 {
            c5.add_edge(i, (i + 1) % 5, Positive).unwrap();
        }
        assert_eq!(chi_c_unsigned(&c5).unwrap(), r(5, 2));
    }

    #[test]
    fn no_edges_is_an_error() {
        assert!(matches!(chi_c(&SignedGraph::new(3)), Err(CircularError::NoEdges)));
    }

    #[test]
    fn positive_loop_fails_loudly() {
        let g = SignedGraph::with_edges(1, &[(0, 0, Positive)]).unwrap();
        assert!(matches!(
            chi_c(&g),
            Err(CircularError::NoColoringWithinBound { .. })
        ));
    }

    #[test]
    fn formulas() {
        assert_eq!(path_expansion_chi(r(4, 1), 2), r(8, 3));
        assert_eq!(four_cycle_expansion_chi(r(3, 1)), r(3, 1));
        assert_eq!(four_cycle_expansion_chi(r(2, 1)), r(8, 3));
    }

    #[test]
    fn zone_of_a_single_positive_edge() {
        let plus = signed_path(1, PathParity::OddPositive).unwrap();
        let z = zone(&plus, r(3, 1)).unwrap();
        // Grid points at distance >= 1 from 0 on a circle of circumference
        // 3 with grid 1/2: from [1, 3/2] and its mirror image.
        assert_eq!(z.points, alloc::vec![r(1, 1), r(3, 2), r(2, 1)]);
    }

    #[test]
    fn transform_into_bipartite_clique_both_cases() {
        // 4 | p: shift case on the negative 4-cycle at 16/5.
        let g = negative_cycle(4).unwrap();
        let (_, cert) = check_circular_with_certificate(&g, r(16, 5)).unwrap().unwrap();
        let bip = bipartition(&g).unwrap();
        let out = restrict_to_bipartite_clique(&g, 16, 5, &cert, &bip).unwrap();
        assert!(out.switch_set.is_empty());
        // 4 ∤ p: antipodal switch case at 6/2.
        let s = four_cycle_expansion(&complete(3)).unwrap();
        let (_, cert) = check_circular_with_certificate(&s, r(3, 1)).unwrap().unwrap();
        let bip = bipartition(&s).unwrap();
        let out = restrict_to_bipartite_clique(&s, 6, 2, &cert, &bip).unwrap();
        let b = bipartite_circular_clique(6, 2).unwrap();
        validate_hom(&s, &b, &out).unwrap();
    }

    #[test]
    fn transform_is_identity_when_sides_already_match() {
        let k = complete_bipartite_with_matching(3).unwrap();
        let (_, cert) = check_circular_with_certificate(&k, r(3, 1)).unwrap().unwrap();
        let bip = bipartition(&k).unwrap();
        // Force a certificate that already respects the sides, if this one
        // does; either way the transform must validate.
        let out = restrict_to_bipartite_clique(&k, 6, 2, &cert, &bip).unwrap();
        let already_ok = (0..k.vertex_count()).all(|v| {
            (bip.in_side_a(v) && cert.vertex_map[v] % 2 == 0)
                || (!bip.in_side_a(v) && cert.vertex_map[v] % 2 == 1)
        });
        if already_ok {
            assert_eq!(out.vertex_map, cert.vertex_map);
            assert!(out.switch_set.is_empty());
        }
    }
}
