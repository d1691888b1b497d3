//! Command-line front end: generators, constructions, homomorphism search,
//! circular chromatic numbers, zones, signature packing, the
//! negative-girth-6 pipeline, and the verification suites.
//!
//! Exit codes: 0 success / decided true; 1 decided false (for example a
//! homomorphism query answered NONE); 2 usage or IO error; 3 size guard
//! exceeded.

mod io;
mod suites;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sigcirc::circular::{check_circular, chi_c_detailed, even_form, zone, ChiCConfig};
use sigcirc::cliques as cq;
use sigcirc::coloring::bipartition;
use sigcirc::constructions::{
    compose_indicators, digon_expansion, four_cycle_expansion, path_expansion, Indicator,
};
use sigcirc::girth::girth_vector;
use sigcirc::graph::SignedGraph;
use sigcirc::hom::{esp_hom, switch_iso_witness, switching_hom, HomCertificate};
use sigcirc::planar::{
    contract_edges, k33m_pipeline, planar_bipartite_instance, sign_with_negative_girth,
    signature_packing, PipelineOutcome, PlanarBase, PlanarError, PlanarFamily,
};
use sigcirc::rational::Rational;

use io::{format_for_path, read_graph, render_graph, write_output, CertificateDto, Format};

#[derive(Parser)]
#[command(
    name = "sigcirc",
    version,
    about = "Exact circular coloring and homomorphisms of signed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Args)]
struct Output {
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    out: Option<String>,
    /// Output format; inferred from the file extension when omitted.
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
}

impl Output {
    fn write_graph(&self, g: &SignedGraph) -> Result<(), io::IoError> {
        let format = match self.format {
            Some(OutFormat::Text) => Format::Text,
            Some(OutFormat::Json) => Format::Json,
            None => self
                .out
                .as_deref()
                .map(format_for_path)
                .unwrap_or(Format::Text),
        };
        write_output(self.out.as_deref(), &render_graph(g, format))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named family member.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Apply a graph construction to an input file.
    Build {
        #[command(subcommand)]
        op: BuildOp,
    },
    /// Decide a homomorphism and print its certificate or NONE.
    Hom {
        #[arg(long, value_enum)]
        mode: HomMode,
        source: String,
        target: String,
    },
    /// Exact circular chromatic number.
    #[command(name = "chi-c")]
    ChiC {
        graph: String,
        /// Candidate denominator bound (default: the vertex count).
        #[arg(long)]
        max_den: Option<usize>,
    },
    /// Decide a circular p/q-coloring.
    #[command(name = "check-r")]
    CheckR { graph: String, p: usize, q: usize },
    /// Admissible positions for an indicator endpoint at r = p/q.
    Zone {
        indicator: String,
        p: usize,
        q: usize,
        /// Free endpoint (default: the last vertex).
        #[arg(long)]
        u: Option<usize>,
        /// Pinned endpoint, placed at 0 (default: vertex 0).
        #[arg(long)]
        v: Option<usize>,
    },
    /// Find k pairwise-disjoint equivalent negative edge sets.
    Pack { graph: String, k: usize },
    /// Contract the listed edge indices.
    Contract { graph: String, edges: Vec<usize> },
    /// The packing/contract/3-color pipeline on planar bipartite instances.
    P6 {
        #[command(subcommand)]
        cmd: P6Cmd,
    },
    /// Run a named verification suite.
    Check {
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Convert between the text and JSON formats.
    Convert { input: String, output: String },
    /// Re-check invariants and print the girth vector and bipartition.
    Validate { graph: String },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Signed circular clique on p points.
    Ks {
        p: usize,
        q: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Its switching core on p/2 points.
    HatKs {
        p: usize,
        q: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Signed bipartite circular clique.
    B {
        p: usize,
        q: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Bipartite clique for edge-sign preserving maps.
    Bs {
        p: usize,
        q: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Bipartite clique core for switching maps.
    HatBs {
        p: usize,
        q: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Complete bipartite K_{k,k} with a negative perfect matching.
    Kkm {
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// K_6 with a negative perfect matching.
    K6m {
        #[command(flatten)]
        out: Output,
    },
    /// Cycle with exactly one negative edge.
    NegCycle {
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Two vertices joined by a positive and a negative edge.
    Digon {
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum BuildOp {
    /// Replace each edge with a negative 4-cycle.
    SOf {
        graph: String,
        #[command(flatten)]
        out: Output,
    },
    /// Replace each edge with a digon.
    Tilde {
        graph: String,
        #[command(flatten)]
        out: Output,
    },
    /// Replace each edge with a signed path of length l.
    TStar {
        graph: String,
        #[arg(long)]
        l: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Replace positive/negative edges with the given indicators.
    Compose {
        graph: String,
        #[arg(long)]
        plus: String,
        #[arg(long)]
        minus: String,
        /// Marked endpoints of each indicator (defaults: last vertex and 0).
        #[arg(long)]
        plus_u: Option<usize>,
        #[arg(long)]
        plus_v: Option<usize>,
        #[arg(long)]
        minus_u: Option<usize>,
        #[arg(long)]
        minus_v: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Double switch graph.
    Dsg {
        graph: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum HomMode {
    Esp,
    Switching,
    Iso,
}

#[derive(Subcommand)]
enum P6Cmd {
    /// Sample signatures on a family instance and run the pipeline.
    Run {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long)]
        cycle: Option<usize>,
        #[arg(long)]
        base: Option<String>,
        #[arg(long, default_value_t = 6)]
        girth: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 2048)]
        attempts: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

/// Exit statuses beyond plain success.
enum Outcome {
    Ok,
    DecidedFalse,
    GuardExceeded(String),
    Error(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Outcome::Ok => ExitCode::SUCCESS,
        Outcome::DecidedFalse => ExitCode::from(1),
        Outcome::Error(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Outcome::GuardExceeded(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn pq_rational(p: usize, q: usize) -> Result<Rational, String> {
    if q == 0 {
        return Err("q must be positive".to_string());
    }
    Ok(Rational::new(p as i64, q as i64))
}

fn load(path: &str) -> Result<SignedGraph, Outcome> {
    read_graph(path).map_err(|e| Outcome::Error(e.to_string()))
}

fn print_certificate(cert: &HomCertificate) {
    let dto = CertificateDto::from_certificate(cert);
    println!("{}", serde_json::to_string_pretty(&dto).expect("serializable"));
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { family } => run_gen(family),
        Command::Build { op } => run_build(op),
        Command::Hom { mode, source, target } => run_hom(mode, &source, &target),
        Command::ChiC { graph, max_den } => run_chi_c(&graph, max_den),
        Command::CheckR { graph, p, q } => run_check_r(&graph, p, q),
        Command::Zone { indicator, p, q, u, v } => run_zone(&indicator, p, q, u, v),
        Command::Pack { graph, k } => run_pack(&graph, k),
        Command::Contract { graph, edges } => run_contract(&graph, &edges),
        Command::P6 { cmd } => run_p6(cmd),
        Command::Check { suite, seed, count, threads } => run_check(&suite, seed, count, threads),
        Command::Convert { input, output } => run_convert(&input, &output),
        Command::Validate { graph } => run_validate(&graph),
    }
}

fn run_gen(family: GenFamily) -> Outcome {
    let (result, out) = match family {
        GenFamily::Ks { p, q, out } => (cq::signed_circular_clique(p, q), out),
        GenFamily::HatKs { p, q, out } => (cq::signed_circular_clique_core(p, q), out),
        GenFamily::B { p, q, out } => (cq::bipartite_circular_clique(p, q), out),
        GenFamily::Bs { p, q, out } => (cq::bipartite_circular_clique_esp(p, q), out),
        GenFamily::HatBs { p, q, out } => (cq::bipartite_circular_clique_core(p, q), out),
        GenFamily::Kkm { k, out } => (cq::complete_bipartite_with_matching(k), out),
        GenFamily::K6m { out } => (Ok(cq::k6_with_matching()), out),
        GenFamily::NegCycle { k, out } => (cq::negative_cycle(k), out),
        GenFamily::Digon { out } => (Ok(cq::digon()), out),
    };
    match result {
        Ok(g) => match out.write_graph(&g) {
            Ok(()) => Outcome::Ok,
            Err(e) => Outcome::Error(e.to_string()),
        },
        Err(e) => Outcome::Error(e.to_string()),
    }
}

fn indicator_from(path: &str, u: Option<usize>, v: Option<usize>) -> Result<Indicator, Outcome> {
    let graph = load(path)?;
    let n = graph.vertex_count();
    if n < 2 {
        return Err(Outcome::Error(format!(
            "{path}: an indicator needs two endpoints"
        )));
    }
    let ind = Indicator {
        u: u.unwrap_or(n - 1),
        v: v.unwrap_or(0),
        graph,
    };
    if ind.u == ind.v || ind.u >= n || ind.v >= n {
        return Err(Outcome::Error(format!(
            "{path}: bad indicator endpoints u={} v={}",
            ind.u, ind.v
        )));
    }
    Ok(ind)
}

fn run_build(op: BuildOp) -> Outcome {
    fn emit(
        g: Result<SignedGraph, sigcirc::constructions::ConstructionError>,
        out: &Output,
    ) -> Outcome {
        match g {
            Ok(g) => match out.write_graph(&g) {
                Ok(()) => Outcome::Ok,
                Err(e) => Outcome::Error(e.to_string()),
            },
            Err(e) => Outcome::Error(e.to_string()),
        }
    }
    match op {
        BuildOp::SOf { graph, out } => match load(&graph) {
            Ok(g) => emit(four_cycle_expansion(&g), &out),
            Err(o) => o,
        },
        BuildOp::Tilde { graph, out } => match load(&graph) {
            Ok(g) => emit(digon_expansion(&g), &out),
            Err(o) => o,
        },
        BuildOp::TStar { graph, l, out } => match load(&graph) {
            Ok(g) => emit(path_expansion(&g, l), &out),
            Err(o) => o,
        },
        BuildOp::Compose {
            graph,
            plus,
            minus,
            plus_u,
            plus_v,
            minus_u,
            minus_v,
            out,
        } => {
            let omega = match load(&graph) {
                Ok(g) => g,
                Err(o) => return o,
            };
            let plus = match indicator_from(&plus, plus_u, plus_v) {
                Ok(i) => i,
                Err(o) => return o,
            };
            let minus = match indicator_from(&minus, minus_u, minus_v) {
                Ok(i) => i,
                Err(o) => return o,
            };
            let composed = compose_indicators(&omega, &plus, &minus);
            match out.write_graph(&composed) {
                Ok(()) => Outcome::Ok,
                Err(e) => Outcome::Error(e.to_string()),
            }
        }
        BuildOp::Dsg { graph, out } => match load(&graph) {
            Ok(g) => match out.write_graph(&cq::double_switch_graph(&g)) {
                Ok(()) => Outcome::Ok,
                Err(e) => Outcome::Error(e.to_string()),
            },
            Err(o) => o,
        },
    }
}

fn run_hom(mode: HomMode, source: &str, target: &str) -> Outcome {
    let g = match load(source) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let h = match load(target) {
        Ok(h) => h,
        Err(o) => return o,
    };
    let found = match mode {
        HomMode::Esp => esp_hom(&g, &h),
        HomMode::Switching => switching_hom(&g, &h),
        HomMode::Iso => match switch_iso_witness(&g, &h) {
            Ok(w) => w,
            Err(e) => return Outcome::GuardExceeded(e.to_string()),
        },
    };
    match found {
        Some(cert) => {
            print_certificate(&cert);
            Outcome::Ok
        }
        None => {
            println!("NONE");
            Outcome::DecidedFalse
        }
    }
}

fn run_chi_c(graph: &str, max_den: Option<usize>) -> Outcome {
    let g = match load(graph) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let config = ChiCConfig {
        max_denominator: max_den,
        upper_bound: None,
    };
    match chi_c_detailed(&g, &config) {
        Ok(outcome) => {
            let report = json!({
                "schemaVersion": 1,
                "chiC": outcome.value.to_string(),
                "numerator": outcome.value.numerator(),
                "denominator": outcome.value.denominator(),
                "failedBelow": outcome.failed_below.map(|r| r.to_string()),
                "maxDenominator": outcome.max_denominator,
                "points": outcome.coloring.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "certificate": serde_json::to_value(CertificateDto::from_certificate(&outcome.certificate)).expect("serializable"),
            });
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            Outcome::Ok
        }
        Err(e) => Outcome::Error(e.to_string()),
    }
}

fn run_check_r(graph: &str, p: usize, q: usize) -> Outcome {
    let g = match load(graph) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let r = match pq_rational(p, q) {
        Ok(r) => r,
        Err(e) => return Outcome::Error(e),
    };
    match check_circular(&g, r) {
        Ok(Some(coloring)) => {
            let report = json!({
                "schemaVersion": 1,
                "r": r.to_string(),
                "points": coloring.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            Outcome::Ok
        }
        Ok(None) => {
            println!("NONE");
            Outcome::DecidedFalse
        }
        Err(e) => Outcome::Error(e.to_string()),
    }
}

fn run_zone(indicator: &str, p: usize, q: usize, u: Option<usize>, v: Option<usize>) -> Outcome {
    let ind = match indicator_from(indicator, u, v) {
        Ok(i) => i,
        Err(o) => return o,
    };
    let r = match pq_rational(p, q) {
        Ok(r) => r,
        Err(e) => return Outcome::Error(e),
    };
    match zone(&ind, r) {
        Ok(z) => {
            let (pe, qe) = even_form(r);
            let report = json!({
                "schemaVersion": 1,
                "r": r.to_string(),
                "grid": format!("1/{qe}"),
                "gridPoints": pe,
                "u": ind.u,
                "v": ind.v,
                "points": z.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            Outcome::Ok
        }
        Err(e) => Outcome::Error(e.to_string()),
    }
}

fn run_pack(graph: &str, k: usize) -> Outcome {
    let g = match load(graph) {
        Ok(g) => g,
        Err(o) => return o,
    };
    if k == 0 {
        return Outcome::Error("k must be at least 1".to_string());
    }
    match signature_packing(&g, k) {
        Ok(Some(packing)) => {
            let report = json!({
                "schemaVersion": 1,
                "k": k,
                "sets": packing.sets,
                "switchSets": packing.switch_sets.iter().map(|s| s.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            Outcome::Ok
        }
        Ok(None) => {
            println!("NONE");
            Outcome::DecidedFalse
        }
        Err(e @ PlanarError::SizeGuard { .. }) => Outcome::GuardExceeded(e.to_string()),
        Err(e) => Outcome::Error(e.to_string()),
    }
}

fn run_contract(graph: &str, edges: &[usize]) -> Outcome {
    let g = match load(graph) {
        Ok(g) => g,
        Err(o) => return o,
    };
    if let Some(&bad) = edges.iter().find(|&&e| e >= g.edge_count()) {
        return Outcome::Error(format!("edge index {bad} out of range"));
    }
    let result = contract_edges(&g, edges);
    let report = json!({
        "schemaVersion": 1,
        "n": result.graph.n,
        "edges": result.graph.edges.iter().map(|&(u, v, s)| json!([u, v, s.as_char().to_string()])).collect::<Vec<_>>(),
        "vertexMap": result.vertex_map,
        "loops": result.graph.loop_count(),
    });
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    Outcome::Ok
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct P6Record {
    schema_version: u32,
    instance: usize,
    seed: u64,
    family: String,
    vertices: usize,
    edges: usize,
    negative_girth: Option<usize>,
    packing_found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagnostic: Option<String>,
}

fn parse_base(base: Option<&str>) -> Result<PlanarBase, String> {
    match base.unwrap_or("k4") {
        "k4" => Ok(PlanarBase::K4),
        "octahedron" => Ok(PlanarBase::Octahedron),
        other => {
            if let Some(k) = other.strip_prefix("wheel-").and_then(|s| s.parse().ok()) {
                Ok(PlanarBase::Wheel(k))
            } else {
                Err(format!(
                    "unknown base {other:?} (expected k4, octahedron, or wheel-K)"
                ))
            }
        }
    }
}

fn run_p6(cmd: P6Cmd) -> Outcome {
    let P6Cmd::Run {
        family,
        rows,
        cols,
        cycle,
        base,
        girth,
        seed,
        count,
        attempts,
        threads,
    } = cmd;
    let family = match family.as_str() {
        "grid" => PlanarFamily::Grid {
            rows: rows.unwrap_or(3),
            cols: cols.unwrap_or(4),
        },
        "cylinder-even" => PlanarFamily::CylinderEven {
            cycle: cycle.unwrap_or(6),
            rows: rows.unwrap_or(2),
        },
        "subdivided-planar" => match parse_base(base.as_deref()) {
            Ok(b) => PlanarFamily::SubdividedPlanar { base: b },
            Err(e) => return Outcome::Error(e),
        },
        "t-star-2-of-planar" => match parse_base(base.as_deref()) {
            Ok(b) => PlanarFamily::TStar2Planar { base: b },
            Err(e) => return Outcome::Error(e),
        },
        other => {
            return Outcome::Error(format!(
                "unknown family {other:?} (expected grid, cylinder-even, subdivided-planar, t-star-2-of-planar)"
            ))
        }
    };
    let base_graph = match planar_bipartite_instance(family) {
        Ok(g) => g,
        Err(e) => return Outcome::Error(e.to_string()),
    };
    let threads = threads.max(1);
    let run_one = |i: usize| -> Result<P6Record, String> {
        let instance_seed = seed.wrapping_add(i as u64);
        let signed = sign_with_negative_girth(&base_graph, girth, instance_seed, attempts)
            .map_err(|e| e.to_string())?;
        let (packing_found, certificate, diagnostic) = match k33m_pipeline(&signed) {
            Ok(PipelineOutcome::Success(s)) => (
                true,
                Some(CertificateDto::from_certificate(&s.certificate)),
                None,
            ),
            Ok(PipelineOutcome::Failure { stage, detail }) => {
                (false, None, Some(format!("{stage}: {detail}")))
            }
            Err(e) => (false, None, Some(e.to_string())),
        };
        Ok(P6Record {
            schema_version: 1,
            instance: i,
            seed: instance_seed,
            family: format!("{family:?}"),
            vertices: signed.vertex_count(),
            edges: signed.edge_count(),
            negative_girth: sigcirc::girth::negative_girth(&signed),
            packing_found,
            certificate,
            diagnostic,
        })
    };
    let records: Vec<Result<P6Record, String>> = if threads == 1 || count == 0 {
        (0..count).map(run_one).collect()
    } else {
        let chunk_size = count.div_ceil(threads).max(1);
        let mut slots: Vec<Option<Result<P6Record, String>>> = Vec::new();
        slots.resize_with(count, || None);
        std::thread::scope(|scope| {
            for (chunk_idx, chunk) in slots.chunks_mut(chunk_size).enumerate() {
                let run_one = &run_one;
                scope.spawn(move || {
                    for (off, slot) in chunk.iter_mut().enumerate() {
                        *slot = Some(run_one(chunk_idx * chunk_size + off));
                    }
                });
            }
        });
        slots.into_iter().map(|s| s.expect("filled")).collect()
    };
    for record in records {
        match record {
            Ok(r) => println!("{}", serde_json::to_string(&r).expect("serializable")),
            Err(e) => return Outcome::Error(e),
        }
    }
    Outcome::Ok
}

fn run_check(suite: &str, seed: u64, count: usize, threads: usize) -> Outcome {
    match suites::run_suite(suite, seed, count, threads) {
        Ok(report) => {
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            if report.failures.is_empty() {
                Outcome::Ok
            } else {
                Outcome::DecidedFalse
            }
        }
        Err(e) => Outcome::Error(e),
    }
}

fn run_convert(input: &str, output: &str) -> Outcome {
    let g = match load(input) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let rendered = render_graph(&g, format_for_path(output));
    match write_output(Some(output), &rendered) {
        Ok(()) => Outcome::Ok,
        Err(e) => Outcome::Error(e.to_string()),
    }
}

fn run_validate(graph: &str) -> Outcome {
    let g = match load(graph) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let gv = girth_vector(&g);
    let show = |x: Option<usize>| x.map_or("inf".to_string(), |v| v.to_string());
    println!("vertices: {}", g.vertex_count());
    println!("edges: {}", g.edge_count());
    println!(
        "girth vector: g00={} g01={} g10={} g11={}",
        show(gv.get(0, 0)),
        show(gv.get(0, 1)),
        show(gv.get(1, 0)),
        show(gv.get(1, 1))
    );
    println!("negative girth: {}", show(gv.negative_girth()));
    match bipartition(&g) {
        Some(b) => println!("bipartition: {:?} | {:?}", b.side_a, b.side_b),
        None => println!("bipartition: none"),
    }
    Outcome::Ok
}
