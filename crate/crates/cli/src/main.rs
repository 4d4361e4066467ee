//! Single command-line entry point: generation, checking, construction,
//! exact treewidth, cleanness verdicts, language decisions and the
//! acceptance battery. Owns all file I/O.
//!
//! Exit codes: 0 = property holds / object built; 1 = property fails /
//! witness found; 2 = usage or budget error.

mod report;

use clap::{Args, Parser, Subcommand};
use obstk_core::embed::{find_induced, Budget, SearchOutcome};
use obstk_core::error::Error;
use obstk_core::graph::Graph;
use obstk_core::io::{parse_gr, write_gr, write_td, JsonGraph, JsonWitness};
use obstk_core::lang::{
    brute_force_unavoidable, minimal_c, preprocess_family, tassel_oracle, tasselled_decide,
    tasselled_search, unavoidable, AvoidVerdict, BitString, OracleOutcome, PatternSet,
    TasselledSearch, TasselledVerdict,
};
use obstk_core::obstructions::{complete, complete_bipartite, is_t_basic, t_clean_check, wall, CleanVerdict};
use obstk_core::probes::{
    block_certificate_to_web, fancy_subsets, is_cluster, is_d_loose, is_d_meager, is_k_block,
    is_polypath, pair_key, verify_block_certificate, verify_web, BlockCertificate, FancyAnswer,
    WebCertificate,
};
use obstk_core::tassels::{
    array_from_tassel, build_tassel, hassle_from_cluster, random_array, strand_from_pattern,
    tassel_from_bits, validate_array, validate_hassle_at, validate_tassel, ArrayWitness, Hassle,
    Tassel,
};
use obstk_core::treewidth::{
    treewidth_exact, treewidth_lowerbound, verify_decomposition, DEFAULT_VERTEX_LIMIT,
};
use obstk_core::verify::run_all;
use report::RunReport;
use serde::Deserialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "obstk", version, about = "treewidth-obstruction toolkit")]
struct Cli {
    /// Emit a machine-readable JSON report instead of prose.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate graphs (walls, obstructions, arrays, tassels).
    #[command(subcommand)]
    Gen(GenCommand),
    /// Validate a labeled witness (tassel, hassle, array) against a graph.
    Check(CheckArgs),
    /// Run one of the constructive transformations.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Exact treewidth (or lower bound) with optional decomposition output.
    Tw(TwArgs),
    /// Search for an induced copy of a pattern graph in a host graph.
    Match(MatchArgs),
    /// Decide t-cleanness exactly, with a node budget.
    Clean(CleanArgs),
    /// k-block decisions and certificate checks.
    Block(BlockArgs),
    /// Validate polypaths, clusters and webs.
    #[command(subcommand)]
    Probe(ProbeCommand),
    /// Padded-string avoidance decisions.
    #[command(subcommand)]
    Lang(LangCommand),
    /// Run acceptance batteries.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum GenCommand {
    /// The t-by-t hexagonal wall.
    Wall(GenWallArgs),
    /// A basic obstruction of the given kind and order.
    Obstruction(GenObstructionArgs),
    /// A seeded random n-array.
    Array(GenArrayArgs),
    /// A tassel from a strand pattern.
    Tassel(GenTasselArgs),
}

#[derive(Args)]
struct GenWallArgs {
    #[arg(long)]
    t: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenObstructionArgs {
    #[arg(long)]
    t: usize,
    /// complete | biclique | wall | line-wall
    #[arg(long)]
    kind: String,
    /// Optional uniform subdivision, e.g. "uniform:2" (wall kinds only).
    #[arg(long)]
    subdivide: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArrayArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    min_len: usize,
    #[arg(long)]
    max_len: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the array witness JSON here.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Args)]
struct GenTasselArgs {
    /// Strand pattern, e.g. 0001000.
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    count: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// tassel | hassle | array
    kind: String,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    witness: PathBuf,
    /// Padding parameter for tassel/hassle checks.
    #[arg(long)]
    c: Option<usize>,
    /// Array order for array checks.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// The tassel-to-array transformation.
    ArrayFromTassel(ArrayFromTasselArgs),
    /// The walk-to-tassel construction from neck bits.
    TasselFromWalk(TasselFromWalkArgs),
    /// The cluster-to-hassle extraction.
    HassleFromCluster(HassleFromClusterArgs),
}

#[derive(Args)]
struct ArrayFromTasselArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    witness: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Args)]
struct TasselFromWalkArgs {
    /// Neck-adjacency bits over the walk positions.
    #[arg(long)]
    bits: String,
    #[arg(long)]
    c: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Args)]
struct HassleFromClusterArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Cluster JSON: {"apexes": [..], "paths": [[..], ..]}.
    #[arg(long)]
    cluster: PathBuf,
    #[arg(long)]
    c: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Args)]
struct TwArgs {
    #[arg(long)]
    input: PathBuf,
    /// Write the PACE decomposition here.
    #[arg(long)]
    decomposition: Option<PathBuf>,
    #[arg(long)]
    lower_bound_only: bool,
    /// Exact-solver vertex limit.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct MatchArgs {
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long)]
    host: PathBuf,
    #[arg(long, default_value_t = u64::MAX)]
    budget: u64,
}

#[derive(Args)]
struct CleanArgs {
    #[arg(long)]
    t: usize,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 500_000_000)]
    budget: u64,
}

#[derive(Args)]
struct BlockArgs {
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated vertex ids, e.g. "0,1,2,3".
    #[arg(long)]
    set: Option<String>,
    #[arg(long)]
    k: usize,
    /// Path-system certificate JSON to verify instead of deciding.
    #[arg(long)]
    certificate: Option<PathBuf>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    strong: bool,
}

#[derive(Subcommand)]
enum ProbeCommand {
    Polypath(ProbePolypathArgs),
    Cluster(ProbeClusterArgs),
    Web(ProbeWebArgs),
}

#[derive(Args)]
struct ProbePolypathArgs {
    #[arg(long)]
    input: PathBuf,
    /// JSON: {"paths": [[..], ..]}.
    #[arg(long)]
    witness: PathBuf,
    /// Check d-looseness at this bound.
    #[arg(long)]
    loose: Option<usize>,
    /// Enumerate fancy subsets of this size.
    #[arg(long)]
    fancy: Option<usize>,
}

#[derive(Args)]
struct ProbeClusterArgs {
    #[arg(long)]
    input: PathBuf,
    /// JSON: {"apexes": [..], "paths": [[..], ..]}.
    #[arg(long)]
    witness: PathBuf,
    /// Check d-meagerness at this bound.
    #[arg(long)]
    meager: Option<usize>,
}

#[derive(Args)]
struct ProbeWebArgs {
    #[arg(long)]
    input: PathBuf,
    /// Web JSON or a block certificate to convert (one path per pair).
    #[arg(long)]
    witness: PathBuf,
    #[arg(long)]
    from_block: bool,
}

#[derive(Subcommand)]
enum LangCommand {
    /// Decide c-unavoidability of a pattern file (one string per line).
    Unavoidable(LangUnavoidableArgs),
    /// Print the witness string verbatim, if one exists.
    Witness(LangWitnessArgs),
    /// Decide the tasselled condition for a directory of graphs.
    Tasselled(LangTasselledArgs),
}

#[derive(Args)]
struct LangUnavoidableArgs {
    #[arg(long)]
    patterns: PathBuf,
    /// A padding value, or "auto" for the minimal one.
    #[arg(long)]
    c: String,
    /// Cross-check with the bounded brute-force oracle.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct LangWitnessArgs {
    #[arg(long)]
    patterns: PathBuf,
    #[arg(long)]
    c: usize,
}

#[derive(Args)]
struct LangTasselledArgs {
    /// Directory of .gr graphs forming the family.
    #[arg(long)]
    graphs: PathBuf,
    /// A padding value, or "auto" to search for the least one.
    #[arg(long)]
    c: String,
    /// Cross-validate with the tassel oracle up to this strand length.
    #[arg(long)]
    oracle_len: Option<usize>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Run the full acceptance battery and print per-criterion lines.
    Suite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = RunReport::new();
    let code = match dispatch(&cli, &mut report) {
        Ok(code) => code,
        Err(e) => {
            report.verdict("error", serde_json::json!({ "message": e.to_string() }));
            match e {
                Error::BudgetExhausted => 2,
                _ => 2,
            }
        }
    };
    report.finish(code);
    if cli.json {
        println!("{}", report.to_json());
    } else {
        report.print_text();
    }
    ExitCode::from(code)
}

fn dispatch(cli: &Cli, report: &mut RunReport) -> Result<u8, Error> {
    match &cli.command {
        Command::Gen(sub) => gen(sub, report),
        Command::Check(args) => check(args, report),
        Command::Construct(sub) => construct(sub, report),
        Command::Tw(args) => tw(args, report),
        Command::Match(args) => find_match(args, report),
        Command::Clean(args) => clean(args, report),
        Command::Block(args) => block(args, report),
        Command::Probe(sub) => probe(sub, report),
        Command::Lang(sub) => lang(sub, report),
        Command::Verify(VerifyCommand::Suite) => verify_suite(report),
    }
}

fn load_graph(report: &mut RunReport, path: &Path) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)?;
    report.input(path, &text);
    if path.extension().map(|e| e == "json").unwrap_or(false) {
        let jg: JsonGraph =
            serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        jg.to_graph()
    } else {
        parse_gr(&text)
    }
}

fn load_json<T: for<'de> Deserialize<'de>>(report: &mut RunReport, path: &Path) -> Result<T, Error> {
    let text = std::fs::read_to_string(path)?;
    report.input(path, &text);
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

fn emit_graph(report: &mut RunReport, g: &Graph, out: &Option<PathBuf>) -> Result<(), Error> {
    let text = write_gr(g);
    match out {
        Some(path) => std::fs::write(path, &text)?,
        None => print!("{text}"),
    }
    report.verdict(
        "built",
        serde_json::json!({ "vertices": g.vertex_count(), "edges": g.edge_count() }),
    );
    Ok(())
}

fn write_witness(path: &Option<PathBuf>, w: &JsonWitness) -> Result<(), Error> {
    if let Some(path) = path {
        std::fs::write(path, serde_json::to_string_pretty(w).unwrap())?;
    }
    Ok(())
}

fn gen(sub: &GenCommand, report: &mut RunReport) -> Result<u8, Error> {
    match sub {
        GenCommand::Wall(a) => {
            if a.t == 0 {
                return Err(Error::ZeroSize);
            }
            emit_graph(report, &wall(a.t), &a.out)?;
            Ok(0)
        }
        GenCommand::Obstruction(a) => {
            if a.t == 0 {
                return Err(Error::ZeroSize);
            }
            let extra = match &a.subdivide {
                None => 0,
                Some(spec) => spec
                    .strip_prefix("uniform:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad --subdivide spec {spec:?}")))?,
            };
            let g = match a.kind.as_str() {
                "complete" => complete(a.t + 1)?,
                "biclique" => complete_bipartite(a.t, a.t)?,
                "wall" => wall(a.t).subdivide_uniform(extra),
                "line-wall" => wall(a.t).subdivide_uniform(extra).line_graph().0,
                other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
            };
            emit_graph(report, &g, &a.out)?;
            Ok(0)
        }
        GenCommand::Array(a) => {
            report.seed(a.seed);
            let (g, w) = random_array(a.n, (a.min_len, a.max_len), a.seed)?;
            emit_graph(report, &g, &a.out)?;
            write_witness(
                &a.witness_out,
                &JsonWitness {
                    kind: "array".into(),
                    neck: None,
                    paths: Some(w.paths.clone()),
                    walks: None,
                    apexes: Some(w.apexes.clone()),
                },
            )?;
            Ok(0)
        }
        GenCommand::Tassel(a) => {
            let pattern = BitString::parse(&a.pattern)?;
            let t = build_tassel(&strand_from_pattern(&pattern)?, a.count)?;
            emit_graph(report, &t.graph, &a.out)?;
            write_witness(
                &a.witness_out,
                &JsonWitness {
                    kind: "tassel".into(),
                    neck: Some(t.neck),
                    paths: Some(t.paths.clone()),
                    walks: None,
                    apexes: None,
                },
            )?;
            Ok(0)
        }
    }
}

fn check(args: &CheckArgs, report: &mut RunReport) -> Result<u8, Error> {
    let g = load_graph(report, &args.graph)?;
    let w: JsonWitness = load_json(report, &args.witness)?;
    let outcome: Result<(), String> = match args.kind.as_str() {
        "tassel" => {
            let t = Tassel {
                graph: g,
                neck: w.neck.ok_or_else(|| Error::Parse("witness lacks neck".into()))?,
                paths: w.paths.clone().unwrap_or_default(),
            };
            let base = validate_tassel(&t).map_err(|v| v.to_string());
            match (base, args.c) {
                (Err(e), _) => Err(e),
                (Ok(()), Some(c)) if !obstk_core::tassels::is_c_tassel(&t, c) => {
                    Err(format!("not a {c}-tassel"))
                }
                _ => Ok(()),
            }
        }
        "hassle" => {
            let h = Hassle {
                graph: g,
                neck: w.neck.ok_or_else(|| Error::Parse("witness lacks neck".into()))?,
                walks: w.walks.clone().or(w.paths.clone()).unwrap_or_default(),
            };
            let c = args.c.unwrap_or(1);
            validate_hassle_at(&h, c).map_err(|v| v.to_string())
        }
        "array" => {
            let aw = ArrayWitness {
                paths: w.paths.clone().unwrap_or_default(),
                apexes: w.apexes.clone().unwrap_or_default(),
            };
            let n = args.n.unwrap_or(aw.apexes.len());
            validate_array(&g, &aw, n).map_err(|v| v.to_string())
        }
        other => return Err(Error::Parse(format!("unknown witness kind {other:?}"))),
    };
    match outcome {
        Ok(()) => {
            report.verdict("valid", serde_json::json!({}));
            Ok(0)
        }
        Err(msg) => {
            report.verdict("invalid", serde_json::json!({ "violation": msg }));
            Ok(1)
        }
    }
}

#[derive(Deserialize)]
struct ClusterJson {
    apexes: Vec<usize>,
    paths: Vec<Vec<usize>>,
}

fn construct(sub: &ConstructCommand, report: &mut RunReport) -> Result<u8, Error> {
    match sub {
        ConstructCommand::ArrayFromTassel(a) => {
            let g = load_graph(report, &a.graph)?;
            let w: JsonWitness = load_json(report, &a.witness)?;
            let t = Tassel {
                graph: g,
                neck: w.neck.ok_or_else(|| Error::Parse("witness lacks neck".into()))?,
                paths: w.paths.unwrap_or_default(),
            };
            let (array, aw) = array_from_tassel(&t)?;
            emit_graph(report, &array, &a.out)?;
            write_witness(
                &a.witness_out,
                &JsonWitness {
                    kind: "array".into(),
                    neck: None,
                    paths: Some(aw.paths.clone()),
                    walks: None,
                    apexes: Some(aw.apexes.clone()),
                },
            )?;
            Ok(0)
        }
        ConstructCommand::TasselFromWalk(a) => {
            let bits = BitString::parse(&a.bits)?;
            let t = tassel_from_bits(&bits, a.c)?;
            emit_graph(report, &t.graph, &a.out)?;
            write_witness(
                &a.witness_out,
                &JsonWitness {
                    kind: "tassel".into(),
                    neck: Some(t.neck),
                    paths: Some(t.paths.clone()),
                    walks: None,
                    apexes: None,
                },
            )?;
            Ok(0)
        }
        ConstructCommand::HassleFromCluster(a) => {
            let g = load_graph(report, &a.graph)?;
            let cl: ClusterJson = load_json(report, &a.cluster)?;
            let h = hassle_from_cluster(&g, &cl.apexes, &cl.paths, a.c, a.d)?;
            emit_graph(report, &h.graph, &a.out)?;
            write_witness(
                &a.witness_out,
                &JsonWitness {
                    kind: "hassle".into(),
                    neck: Some(h.neck),
                    paths: None,
                    walks: Some(h.walks.clone()),
                    apexes: None,
                },
            )?;
            Ok(0)
        }
    }
}

fn tw(args: &TwArgs, report: &mut RunReport) -> Result<u8, Error> {
    let g = load_graph(report, &args.input)?;
    if args.lower_bound_only {
        let lb = treewidth_lowerbound(&g);
        report.verdict("lower-bound", serde_json::json!({ "bound": lb }));
        return Ok(0);
    }
    let limit = args.limit.or(Some(DEFAULT_VERTEX_LIMIT));
    let (w, td) = treewidth_exact(&g, limit)?;
    let verified = verify_decomposition(&g, &td) == Ok(w);
    if let Some(path) = &args.decomposition {
        std::fs::write(path, write_td(&td, g.vertex_count()))?;
    }
    report.verdict(
        "treewidth",
        serde_json::json!({ "width": w, "bags": td.bags.len(), "verified": verified }),
    );
    if verified {
        Ok(0)
    } else {
        Ok(1)
    }
}

fn find_match(args: &MatchArgs, report: &mut RunReport) -> Result<u8, Error> {
    let h = load_graph(report, &args.pattern)?;
    let g = load_graph(report, &args.host)?;
    let mut budget = Budget::new(args.budget);
    match find_induced(&h, &g, &mut budget) {
        SearchOutcome::Found(e) => {
            report.verdict("found", serde_json::json!({ "embedding": e.map }));
            Ok(0)
        }
        SearchOutcome::Absent => {
            report.verdict("absent", serde_json::json!({ "expansions": budget.spent }));
            Ok(1)
        }
        SearchOutcome::Exhausted => Err(Error::BudgetExhausted),
    }
}

fn clean(args: &CleanArgs, report: &mut RunReport) -> Result<u8, Error> {
    if args.t == 0 {
        return Err(Error::ZeroSize);
    }
    let g = load_graph(report, &args.input)?;
    match t_clean_check(&g, args.t, args.budget) {
        CleanVerdict::Clean => {
            report.verdict("clean", serde_json::json!({ "t": args.t }));
            Ok(0)
        }
        CleanVerdict::Obstruction {
            kind,
            pattern,
            embedding,
        } => {
            // The classification of the found pattern doubles as a sanity
            // check on the embedding.
            let classified = is_t_basic(&pattern, args.t).map(|k| k.to_string());
            report.verdict(
                "obstruction",
                serde_json::json!({
                    "kind": kind.to_string(),
                    "classified": classified,
                    "embedding": embedding.map,
                    "pattern_vertices": pattern.vertex_count(),
                }),
            );
            Ok(1)
        }
        CleanVerdict::Inconclusive { spent } => {
            report.verdict("inconclusive", serde_json::json!({ "expansions": spent }));
            Ok(2)
        }
    }
}

#[derive(Deserialize)]
struct BlockCertJson {
    block: Vec<usize>,
    systems: Vec<BlockPairJson>,
}

#[derive(Deserialize)]
struct BlockPairJson {
    pair: (usize, usize),
    paths: Vec<Vec<usize>>,
}

fn block(args: &BlockArgs, report: &mut RunReport) -> Result<u8, Error> {
    let g = load_graph(report, &args.input)?;
    if let Some(cert_path) = &args.certificate {
        let cj: BlockCertJson = load_json(report, cert_path)?;
        let cert = BlockCertificate {
            block: cj.block,
            systems: cj
                .systems
                .into_iter()
                .map(|p| (pair_key(p.pair.0, p.pair.1), p.paths))
                .collect(),
        };
        return match verify_block_certificate(&g, &cert, args.k, args.d, args.strong) {
            Ok(()) => {
                report.verdict("certified", serde_json::json!({ "k": args.k }));
                Ok(0)
            }
            Err(v) => {
                report.verdict("violation", serde_json::json!({ "clause": v.to_string() }));
                Ok(1)
            }
        };
    }
    let set = parse_id_list(args.set.as_deref().ok_or_else(|| {
        Error::Parse("either --set or --certificate is required".into())
    })?)?;
    let yes = is_k_block(&g, &set, args.k)?;
    report.verdict(
        if yes { "k-block" } else { "not-a-k-block" },
        serde_json::json!({ "k": args.k, "set": set }),
    );
    Ok(if yes { 0 } else { 1 })
}

fn parse_id_list(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

#[derive(Deserialize)]
struct PolypathJson {
    paths: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct WebJson {
    web: Vec<usize>,
    lambda: Vec<WebPairJson>,
}

#[derive(Deserialize)]
struct WebPairJson {
    pair: (usize, usize),
    path: Vec<usize>,
}

fn probe(sub: &ProbeCommand, report: &mut RunReport) -> Result<u8, Error> {
    match sub {
        ProbeCommand::Polypath(a) => {
            let g = load_graph(report, &a.input)?;
            let pj: PolypathJson = load_json(report, &a.witness)?;
            let poly = is_polypath(&g, &pj.paths);
            let loose = a.loose.map(|d| is_d_loose(&g, &pj.paths, d));
            let fancy = a.fancy.map(|w| match fancy_subsets(&g, &pj.paths, w) {
                FancyAnswer::Subsets(s) => serde_json::json!({ "subsets": s }),
                FancyAnswer::Unsupported => serde_json::json!("unsupported"),
            });
            report.verdict(
                if poly { "polypath" } else { "not-a-polypath" },
                serde_json::json!({ "loose": loose, "fancy": fancy }),
            );
            Ok(if poly && loose != Some(false) { 0 } else { 1 })
        }
        ProbeCommand::Cluster(a) => {
            let g = load_graph(report, &a.input)?;
            let cj: ClusterJson = load_json(report, &a.witness)?;
            let ok = is_cluster(&g, &cj.apexes, &cj.paths);
            let meager = a.meager.map(|d| is_d_meager(&g, &cj.apexes, &cj.paths, d));
            report.verdict(
                if ok { "cluster" } else { "not-a-cluster" },
                serde_json::json!({ "s": cj.apexes.len(), "l": cj.paths.len(), "meager": meager }),
            );
            Ok(if ok && meager != Some(false) { 0 } else { 1 })
        }
        ProbeCommand::Web(a) => {
            let g = load_graph(report, &a.input)?;
            let cert = if a.from_block {
                let cj: BlockCertJson = load_json(report, &a.witness)?;
                block_certificate_to_web(&BlockCertificate {
                    block: cj.block,
                    systems: cj
                        .systems
                        .into_iter()
                        .map(|p| (pair_key(p.pair.0, p.pair.1), p.paths))
                        .collect(),
                })
            } else {
                let wj: WebJson = load_json(report, &a.witness)?;
                WebCertificate {
                    web: wj.web,
                    lambda: wj
                        .lambda
                        .into_iter()
                        .map(|p| (pair_key(p.pair.0, p.pair.1), p.path))
                        .collect(),
                }
            };
            match verify_web(&g, &cert) {
                Ok(()) => {
                    report.verdict("web", serde_json::json!({ "w": cert.web.len() }));
                    Ok(0)
                }
                Err(v) => {
                    report.verdict("violation", serde_json::json!({ "clause": v.to_string() }));
                    Ok(1)
                }
            }
        }
    }
}

fn read_patterns(report: &mut RunReport, path: &Path) -> Result<PatternSet, Error> {
    let text = std::fs::read_to_string(path)?;
    report.input(path, &text);
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    PatternSet::parse(&lines)
}

fn lang(sub: &LangCommand, report: &mut RunReport) -> Result<u8, Error> {
    match sub {
        LangCommand::Unavoidable(a) => {
            let p = read_patterns(report, &a.patterns)?;
            if a.c == "auto" {
                return match minimal_c(&p) {
                    Some(c) => {
                        report.verdict("unavoidable", serde_json::json!({ "minimal_c": c }));
                        Ok(0)
                    }
                    None => {
                        report.verdict("avoidable-at-every-c", serde_json::json!({}));
                        Ok(1)
                    }
                };
            }
            let c: usize = a.c.parse().map_err(|_| Error::Parse("bad --c".into()))?;
            let fast = unavoidable(&p, c);
            if a.oracle {
                // Explicit opt-in lifts the length cap; the node budget
                // remains the safety net.
                let slow = brute_force_unavoidable(&p, c, Some(p.max_len()), 100_000_000)?;
                if fast.is_unavoidable() != slow.is_unavoidable() {
                    return Err(Error::Invalid(
                        "decision procedures disagree; report this instance".into(),
                    ));
                }
            }
            match fast {
                AvoidVerdict::Unavoidable => {
                    report.verdict("unavoidable", serde_json::json!({ "c": c }));
                    Ok(0)
                }
                AvoidVerdict::Witness(w) => {
                    report.verdict(
                        "witness",
                        serde_json::json!({ "c": c, "string": w.to_string() }),
                    );
                    Ok(1)
                }
            }
        }
        LangCommand::Witness(a) => {
            let p = read_patterns(report, &a.patterns)?;
            match unavoidable(&p, a.c) {
                AvoidVerdict::Witness(w) => {
                    println!("{w}");
                    report.verdict("witness", serde_json::json!({ "string": w.to_string() }));
                    Ok(1)
                }
                AvoidVerdict::Unavoidable => {
                    report.verdict("unavoidable", serde_json::json!({ "c": a.c }));
                    Ok(0)
                }
            }
        }
        LangCommand::Tasselled(a) => {
            let mut entries: Vec<_> = std::fs::read_dir(&a.graphs)?
                .filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| p.extension().map(|x| x == "gr").unwrap_or(false))
                .collect();
            entries.sort();
            if entries.is_empty() {
                return Err(Error::Invalid("no .gr graphs in the directory".into()));
            }
            let mut family = Vec::new();
            for path in &entries {
                family.push(load_graph(report, path)?);
            }
            let fp = preprocess_family(&family)?;
            let (verdict, code) = if a.c == "auto" {
                match tasselled_search(&fp) {
                    TasselledSearch::Tasselled { c_min } => (
                        serde_json::json!({ "tasselled": true, "c_min": c_min }),
                        0u8,
                    ),
                    TasselledSearch::NotTasselled { bound } => (
                        serde_json::json!({ "tasselled": false, "exact_bound": bound }),
                        1,
                    ),
                }
            } else {
                let c: usize = a.c.parse().map_err(|_| Error::Parse("bad --c".into()))?;
                match tasselled_decide(&fp, c) {
                    TasselledVerdict::TasselledAt => {
                        (serde_json::json!({ "tasselled_at": c }), 0)
                    }
                    TasselledVerdict::Witness {
                        string,
                        explanation,
                    } => (
                        serde_json::json!({
                            "tasselled_at": serde_json::Value::Null,
                            "witness": string.to_string(),
                            "explanation": explanation,
                        }),
                        1,
                    ),
                }
            };
            if let Some(len) = a.oracle_len {
                let c_for_oracle = match &verdict["c_min"] {
                    serde_json::Value::Number(n) => n.as_u64().unwrap() as usize,
                    _ => 1,
                };
                match tassel_oracle(&family, c_for_oracle, len)? {
                    OracleOutcome::AllCovered => {}
                    OracleOutcome::Counterexample { pattern, .. } => {
                        return Err(Error::Invalid(format!(
                            "oracle counterexample at {pattern}; procedures disagree"
                        )));
                    }
                }
            }
            report.verdict("tasselled-decision", verdict);
            Ok(code)
        }
    }
}

fn verify_suite(report: &mut RunReport) -> Result<u8, Error> {
    let reports = run_all();
    let mut all = true;
    let mut rows = Vec::new();
    for r in &reports {
        println!("{r}");
        all &= r.pass;
        rows.push(serde_json::json!({
            "id": r.id,
            "name": r.name,
            "pass": r.pass,
            "detail": r.detail,
            "ms": r.millis,
        }));
    }
    report.verdict(
        if all { "all-pass" } else { "failures" },
        serde_json::Value::Array(rows),
    );
    Ok(if all { 0 } else { 1 })
}
