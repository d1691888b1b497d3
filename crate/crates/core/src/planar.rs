//! Desk-scale machinery for bounding signed bipartite planar inputs of
//! negative girth at least 6 by `(K_{3,3}, M)`: planar-by-construction
//! bipartite generators, negative-girth signature sampling, brute-force
//! signature packing, edge contraction, exact 3-coloring, and the lift of a
//! 3-coloring of the contracted graph to an edge-sign preserving
//! certificate.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cliques::complete_bipartite_with_matching;
use crate::coloring::{bipartition, Bipartition};
use crate::constructions::path_expansion;
use crate::girth::negative_girth;
use crate::graph::{Sign, SignedGraph, SwitchSet};
use crate::hom::{switching_hom, validate_hom, HomCertificate};
use crate::rng::SplitMix64;
use crate::switching::switching_equivalent;

/// Contraction can create parallel edges of the same sign, which the
/// `SignedGraph` invariants forbid, so contracted graphs live in this
/// relaxed type. Signs are retained on surviving edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multigraph {
    pub n: usize,
    pub edges: Vec<(usize, usize, Sign)>,
}

impl Multigraph {
    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v, _)| u == v).count()
    }

    /// Deduplicated underlying adjacency (no loops).
    fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v, _) in &self.edges {
            if u != v && !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for nb in adj.iter_mut() {
            nb.sort_unstable();
        }
        adj
    }

    pub fn has_triangle(&self) -> bool {
        let adj = self.simple_adjacency();
        for u in 0..self.n {
            for (i, &v) in adj[u].iter().enumerate() {
                if v <= u {
                    continue;
                }
                for &w in &adj[u][i + 1..] {
                    if adj[v].binary_search(&w).is_ok() {
                        return true;
                    }
                }
            }
        }
        false
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PlanarError {
    BadParameters(String),
    SizeGuard { what: &'static str, limit: usize, actual: usize },
    LoopPresent { vertex: usize },
    NotBipartite,
    NegativeGirthTooSmall { found: Option<usize>, needed: usize },
    ImproperColoring,
    LiftValidation(String),
}

impl fmt::Display for PlanarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarError::BadParameters(s) => write!(f, "bad parameters: {s}"),
            PlanarError::SizeGuard { what, limit, actual } => {
                write!(f, "{what} guard exceeded: {actual} > {limit}")
            }
            PlanarError::LoopPresent { vertex } => write!(f, "loop at vertex {vertex}"),
            PlanarError::NotBipartite => write!(f, "graph is not bipartite"),
            PlanarError::NegativeGirthTooSmall { found, needed } => match found {
                Some(g) => write!(f, "negative girth {g} < {needed}"),
                None => write!(f, "negative girth below {needed}"),
            },
            PlanarError::ImproperColoring => write!(f, "coloring is not proper"),
            PlanarError::LiftValidation(s) => write!(f, "lift failed validation: {s}"),
        }
    }
}

/// Base graphs for the subdivision families; all planar.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlanarBase {
    K4,
    Octahedron,
    /// Hub plus a rim cycle of the given length (>= 3).
    Wheel(usize),
}

/// Planar-by-construction bipartite instance families, emitted with the
/// all-positive signature for subsequent signing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlanarFamily {
    Grid { rows: usize, cols: usize },
    /// `cycle` copies of a path of `rows` vertices arranged around an even
    /// cycle.
    CylinderEven { cycle: usize, rows: usize },
    /// Every edge of the base subdivided once.
    SubdividedPlanar { base: PlanarBase },
    /// Underlying graph of the length-2 path expansion of the base.
    TStar2Planar { base: PlanarBase },
}

fn base_graph(base: PlanarBase) -> Result<SignedGraph, PlanarError> {
    match base {
        PlanarBase::K4 => {
            let mut g = SignedGraph::new(4);
            for u in 0..4 {
                for v in u + 1..4 {
                    g.add_edge(u, v, Sign::Positive).expect("fresh");
                }
            }
            Ok(g)
        }
        PlanarBase::Octahedron => {
            // K_{2,2,2}: three antipodal pairs (0,1), (2,3), (4,5).
            let mut g = SignedGraph::new(6);
            for u in 0..6 {
                for v in u + 1..6 {
                    if v != u + 1 || u % 2 != 0 {
                        g.add_edge(u, v, Sign::Positive).expect("fresh");
                    }
                }
            }
            Ok(g)
        }
        PlanarBase::Wheel(k) => {
            if k < 3 {
                return Err(PlanarError::BadParameters(format!("wheel rim {k} < 3")));
            }
            let mut g = SignedGraph::new(k + 1);
            for i in 1..=k {
                g.add_edge(0, i, Sign::Positive).expect("fresh");
                let next = if i == k { 1 } else { i + 1 };
                g.add_edge(i, next, Sign::Positive).expect("fresh");
            }
            Ok(g)
        }
    }
}

/// Generates the requested family member, all-positive. Grids and even
/// cylinders are planar outright; one-step subdivisions preserve planarity
/// and force bipartiteness.
pub fn planar_bipartite_instance(family: PlanarFamily) -> Result<SignedGraph, PlanarError> {
    let g = match family {
        PlanarFamily::Grid { rows, cols } => {
            if rows < 1 || cols < 1 || rows * cols < 2 {
                return Err(PlanarError::BadParameters(format!(
                    "grid {rows}x{cols} too small"
                )));
            }
            let mut g = SignedGraph::new(rows * cols);
            for r in 0..rows {
                for c in 0..cols {
                    let v = r * cols + c;
                    if c + 1 < cols {
                        g.add_edge(v, v + 1, Sign::Positive).expect("fresh");
                    }
                    if r + 1 < rows {
                        g.add_edge(v, v + cols, Sign::Positive).expect("fresh");
                    }
                }
            }
            g
        }
        PlanarFamily::CylinderEven { cycle, rows } => {
            if cycle < 4 || cycle % 2 != 0 || rows < 1 {
                return Err(PlanarError::BadParameters(format!(
                    "cylinder needs an even cycle >= 4 and rows >= 1, got {cycle}x{rows}"
                )));
            }
            let mut g = SignedGraph::new(cycle * rows);
            for r in 0..rows {
                for i in 0..cycle {
                    let v = r * cycle + i;
                    g.add_edge(v, r * cycle + (i + 1) % cycle, Sign::Positive)
                        .expect("fresh ring edge");
                    if r + 1 < rows {
                        g.add_edge(v, v + cycle, Sign::Positive).expect("fresh rung");
                    }
                }
            }
            g
        }
        PlanarFamily::SubdividedPlanar { base } => {
            let b = base_graph(base)?;
            let n = b.vertex_count();
            let mut g = SignedGraph::new(n + b.edge_count());
            for (i, e) in b.edges().iter().enumerate() {
                g.add_edge(e.u, n + i, Sign::Positive).expect("fresh");
                g.add_edge(n + i, e.v, Sign::Positive).expect("fresh");
            }
            g
        }
        PlanarFamily::TStar2Planar { base } => {
            let b = base_graph(base)?;
            path_expansion(&b, 2)
                .map_err(|e| PlanarError::BadParameters(format!("{e}")))?
                .all_positive()
        }
    };
    debug_assert!(bipartition(&g).is_some());
    Ok(g)
}

/// Rejection-samples edge signatures (uniform, seeded) until the negative
/// girth reaches `target`, re-verified through the girth vector. Falls back
/// to the all-positive signature (negative girth infinity) when the budget
/// runs out.
pub fn sign_with_negative_girth(
    g: &SignedGraph,
    target: usize,
    seed: u64,
    attempts: usize,
) -> Result<SignedGraph, PlanarError> {
    if bipartition(g).is_none() {
        return Err(PlanarError::NotBipartite);
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..attempts {
        let negatives: Vec<usize> = (0..g.edge_count()).filter(|_| rng.coin()).collect();
        let candidate = g.with_negative_set(&negatives);
        if negative_girth(&candidate).is_none_or(|ng| ng >= target) {
            return Ok(candidate);
        }
    }
    Ok(g.with_negative_set(&[]))
}

/// Pairwise-disjoint edge subsets, each the negative set of a signature
/// switching-equivalent to the input's. The generating switch set of each
/// member is kept for downstream use.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignaturePacking {
    pub sets: Vec<Vec<usize>>,
    pub switch_sets: Vec<SwitchSet>,
}

const PACKING_EDGE_GUARD: usize = 24;
const PACKING_SWITCH_GUARD: u32 = 20;

/// Finds `k` pairwise-disjoint (and pairwise-distinct) equivalent negative
/// sets by enumerating the negative set of every switched signature and
/// backtracking over candidates ordered by size. `None` when the search
/// space is exhausted.
pub fn signature_packing(
    g: &SignedGraph,
    k: usize,
) -> Result<Option<SignaturePacking>, PlanarError> {
    assert!(k >= 1);
    let m = g.edge_count();
    if m > PACKING_EDGE_GUARD {
        return Err(PlanarError::SizeGuard {
            what: "packing edge",
            limit: PACKING_EDGE_GUARD,
            actual: m,
        });
    }
    if k == 1 {
        // The input's own negative set always works.
        return Ok(Some(SignaturePacking {
            sets: vec![g.negative_edge_indices()],
            switch_sets: vec![SwitchSet::empty()],
        }));
    }
    // Switching a whole component changes nothing, so fix one representative
    // per component out of the enumeration.
    let comps = g.components();
    let mut free: Vec<usize> = Vec::new();
    for comp in &comps {
        free.extend(comp.iter().skip(1).copied());
    }
    if free.len() as u32 > PACKING_SWITCH_GUARD {
        return Err(PlanarError::SizeGuard {
            what: "packing switch-set",
            limit: 1 << PACKING_SWITCH_GUARD,
            actual: free.len(),
        });
    }
    let base_negative: u32 = g
        .negative_edge_indices()
        .iter()
        .fold(0, |acc, &i| acc | 1 << i);
    // mask of negative edges per switch set, keeping the first generator.
    let mut masks: BTreeMap<u32, SwitchSet> = BTreeMap::new();
    for choice in 0u64..(1 << free.len()) {
        let s = SwitchSet::from_vertices(
            free.iter()
                .enumerate()
                .filter(|(i, _)| choice >> i & 1 == 1)
                .map(|(_, &v)| v),
        );
        let mut mask = base_negative;
        for (i, e) in g.edges().iter().enumerate() {
            let flips = s.contains(e.u) as u8 + s.contains(e.v) as u8;
            if flips == 1 {
                mask ^= 1 << i;
            }
        }
        masks.entry(mask).or_insert(s);
    }
    let mut candidates: Vec<(u32, &SwitchSet)> = masks.iter().map(|(&m, s)| (m, s)).collect();
    candidates.sort_by_key(|(m, _)| (m.count_ones(), *m));

    fn pick(
        candidates: &[(u32, &SwitchSet)],
        start: usize,
        used: u32,
        chosen: &mut Vec<usize>,
        k: usize,
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        for i in start..candidates.len() {
            if candidates.len() - i < k - chosen.len() {
                return false;
            }
            if candidates[i].0 & used == 0 {
                chosen.push(i);
                if pick(candidates, i + 1, used | candidates[i].0, chosen, k) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut chosen = Vec::new();
    if !pick(&candidates, 0, 0, &mut chosen, k) {
        return Ok(None);
    }
    let sets: Vec<Vec<usize>> = chosen
        .iter()
        .map(|&i| (0..m).filter(|&e| candidates[i].0 >> e & 1 == 1).collect())
        .collect();
    let switch_sets: Vec<SwitchSet> = chosen.iter().map(|&i| candidates[i].1.clone()).collect();
    let packing = SignaturePacking { sets, switch_sets };
    debug_assert!(verify_packing(g, &packing));
    Ok(Some(packing))
}

/// Re-verifies the packing invariants: pairwise disjointness and switching
/// equivalence of every member signature.
pub fn verify_packing(g: &SignedGraph, packing: &SignaturePacking) -> bool {
    let mut seen = alloc::collections::BTreeSet::new();
    for set in &packing.sets {
        for &e in set {
            if e >= g.edge_count() || !seen.insert(e) {
                return false;
            }
        }
        let candidate = g.with_negative_set(set);
        if switching_equivalent(g, &candidate) != Ok(true) {
            return false;
        }
    }
    // Distinctness (only the empty set could repeat under disjointness).
    let empties = packing.sets.iter().filter(|s| s.is_empty()).count();
    empties <= 1
}

/// Result of contracting an edge subset: the contracted multigraph plus the
/// vertex map tracking merges. Contracted edges are deleted, all other
/// edges survive (parallel edges and loops are retained and reported).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractionResult {
    pub graph: Multigraph,
    pub vertex_map: Vec<usize>,
}

pub fn contract_edges(g: &SignedGraph, contracted: &[usize]) -> ContractionResult {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &ei in contracted {
        let e = g.edges()[ei];
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            // Merge into the smaller root for determinism.
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }
    // Relabel roots 0..n' in increasing root order.
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        let next = ids.len();
        ids.entry(r).or_insert(next);
    }
    let vertex_map: Vec<usize> = (0..n).map(|v| ids[&find(&mut parent, v)]).collect();
    let mut edges = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        if contracted.contains(&i) {
            continue;
        }
        edges.push((vertex_map[e.u], vertex_map[e.v], e.sign));
    }
    ContractionResult {
        graph: Multigraph { n: ids.len(), edges },
        vertex_map,
    }
}

/// Exhaustive backtracking proper 3-coloring of a loop-free multigraph;
/// parallel edges act as a single constraint. `None` when no coloring
/// exists.
pub fn three_color_exact(g: &Multigraph) -> Result<Option<Vec<u8>>, PlanarError> {
    if let Some(&(u, _, _)) = g.edges.iter().find(|(u, v, _)| u == v) {
        return Err(PlanarError::LoopPresent { vertex: u });
    }
    let adj = g.simple_adjacency();
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by_key(|&v| (usize::MAX - adj[v].len(), v));
    let mut color = vec![u8::MAX; g.n];

    fn go(adj: &[Vec<usize>], order: &[usize], color: &mut Vec<u8>, depth: usize) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for c in 0..3u8 {
            if adj[v].iter().all(|&w| color[w] != c) {
                color[v] = c;
                if go(adj, order, color, depth + 1) {
                    return true;
                }
                color[v] = u8::MAX;
            }
        }
        false
    }

    Ok(go(&adj, &order, &mut color, 0).then_some(color))
}

/// Lifts a proper 3-coloring of the contracted graph to an edge-sign
/// preserving certificate of the source (whose negative set was contracted)
/// into `(K_{3,3}, M)`: side-A vertices of color `i` go to `x_i`, side-B
/// vertices to `y_i`. Fails loudly when validation breaks.
pub fn lift_three_coloring(
    g: &SignedGraph,
    bip: &Bipartition,
    coloring: &[u8],
    vertex_map: &[usize],
) -> Result<HomCertificate, PlanarError> {
    // The coloring must be proper on the contracted graph: merged endpoint
    // classes joined by a surviving edge need different colors.
    for e in g.edges() {
        let (a, b) = (vertex_map[e.u], vertex_map[e.v]);
        if a != b && coloring[a] == coloring[b] {
            return Err(PlanarError::ImproperColoring);
        }
    }
    let k33 = complete_bipartite_with_matching(3).expect("k >= 1");
    let psi: Vec<usize> = (0..g.vertex_count())
        .map(|v| {
            let c = coloring[vertex_map[v]] as usize;
            if bip.in_side_a(v) {
                c
            } else {
                3 + c
            }
        })
        .collect();
    let edge_map: Result<Vec<usize>, PlanarError> = g
        .edges()
        .iter()
        .map(|e| {
            k33.edge_between(psi[e.u], psi[e.v], e.sign).ok_or_else(|| {
                PlanarError::LiftValidation(format!(
                    "edge {}-{} ({}) has no image",
                    e.u, e.v, e.sign
                ))
            })
        })
        .collect();
    let cert = HomCertificate {
        vertex_map: psi,
        edge_map: edge_map?,
        switch_set: SwitchSet::empty(),
    };
    validate_hom(g, &k33, &cert)
        .map_err(|e| PlanarError::LiftValidation(format!("{e}")))?;
    Ok(cert)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PipelineStage {
    Packing,
    Contraction,
    TriangleCheck,
    ThreeColoring,
    Lift,
    CrossCheck,
}

impl fmt::Display for PipelineStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PipelineStage::Packing => "packing",
            PipelineStage::Contraction => "contraction",
            PipelineStage::TriangleCheck => "triangle-check",
            PipelineStage::ThreeColoring => "three-coloring",
            PipelineStage::Lift => "lift",
            PipelineStage::CrossCheck => "cross-check",
        };
        write!(f, "{name}")
    }
}

#[derive(Clone, Debug)]
pub enum PipelineOutcome {
    Success(PipelineSuccess),
    Failure { stage: PipelineStage, detail: String },
}

#[derive(Clone, Debug)]
pub struct PipelineSuccess {
    /// Switching certificate of the input into `(K_{3,3}, M)`.
    pub certificate: HomCertificate,
    pub packing: SignaturePacking,
    pub contracted_vertices: usize,
    pub coloring: Vec<u8>,
}

/// Runs packing (k = 6), contraction of the first member, the loop- and
/// triangle-freeness assertions, exact 3-coloring, and the lift; the final
/// certificate is cross-checked against a direct homomorphism search.
/// Preconditions (bipartite, negative girth at least 6) are errors; stage
/// failures come back as structured diagnostics.
pub fn k33m_pipeline(g: &SignedGraph) -> Result<PipelineOutcome, PlanarError> {
    let bip = bipartition(g).ok_or(PlanarError::NotBipartite)?;
    let ng = negative_girth(g);
    if ng.is_some_and(|x| x < 6) {
        return Err(PlanarError::NegativeGirthTooSmall { found: ng, needed: 6 });
    }
    let fail = |stage: PipelineStage, detail: String| {
        Ok(PipelineOutcome::Failure { stage, detail })
    };
    let packing = match signature_packing(g, 6) {
        Ok(Some(p)) => p,
        Ok(None) => return fail(PipelineStage::Packing, "no 6-packing found".to_string()),
        Err(e) => return fail(PipelineStage::Packing, format!("{e}")),
    };
    if !verify_packing(g, &packing) {
        return fail(PipelineStage::Packing, "packing failed verification".to_string());
    }
    let e1 = packing.sets[0].clone();
    let switched_signature = g.with_negative_set(&e1);
    let to_e1 = packing.switch_sets[0].clone();
    debug_assert_eq!(
        g.switched(&to_e1).expect("in range").edge_multiset(),
        switched_signature.edge_multiset()
    );
    let contraction = contract_edges(&switched_signature, &e1);
    if contraction.graph.loop_count() > 0 {
        return fail(
            PipelineStage::Contraction,
            format!("{} loops after contraction", contraction.graph.loop_count()),
        );
    }
    if contraction.graph.has_triangle() {
        return fail(PipelineStage::TriangleCheck, "triangle after contraction".to_string());
    }
    let coloring = match three_color_exact(&contraction.graph) {
        Ok(Some(c)) => c,
        Ok(None) => return fail(PipelineStage::ThreeColoring, "no 3-coloring".to_string()),
        Err(e) => return fail(PipelineStage::ThreeColoring, format!("{e}")),
    };
    let esp = match lift_three_coloring(&switched_signature, &bip, &coloring, &contraction.vertex_map) {
        Ok(c) => c,
        Err(e) => return fail(PipelineStage::Lift, format!("{e}")),
    };
    // Combine with the switching taking the input signature to the packed
    // one: a switching certificate for the input itself.
    let certificate = HomCertificate {
        vertex_map: esp.vertex_map,
        edge_map: esp.edge_map,
        switch_set: to_e1,
    };
    let k33 = complete_bipartite_with_matching(3).expect("k >= 1");
    if let Err(e) = validate_hom(g, &k33, &certificate) {
        return fail(PipelineStage::Lift, format!("combined certificate: {e}"));
    }
    if switching_hom(g, &k33).is_none() {
        return fail(
            PipelineStage::CrossCheck,
            "direct search disagrees with the pipeline certificate".to_string(),
        );
    }
    Ok(PipelineOutcome::Success(PipelineSuccess {
        certificate,
        packing,
        contracted_vertices: contraction.graph.n,
        coloring,
    }))
}
