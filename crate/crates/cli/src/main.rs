//! `jp`: command-line front end for the judicious toolkit.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 input error, 3 invariant
//! breach or potential counterexample.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use judicious::bounds::{
    compare_with_bound, exact_min_norm, find_judicious_bipartition, k_partition_min_norm, norm_bound, EdwardsBound,
    NormValue, SearchConfig, Strategy,
};
use judicious::counterexamples::{ab_pairs, pair_sequence, triple_clique, verify_thm_2n, Evidence};
use judicious::degseq::{is_graphic, lay_off_with_order, DegreeSequence};
use judicious::exact::{rational_string, Lambda};
use judicious::graph::{bisection_slack, parity_bisection, Bisection, LabeledGraph};
use judicious::io::{parse_degree_sequence, parse_graph, write_graph, PartitionRecord};
use judicious::multipartite::{
    even_order_good_bisection, floor_good_bisection, good_bisection_from_witness, good_bisection_oracle,
    good_subset_search, minus_edge_oracle, MultipartiteSpec,
};
use judicious::realization::build_realization;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "jp", version, about = "Judicious partitions, good bisections and graphic realizations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "JP_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Degree sequences.
    #[command(subcommand)]
    Degseq(DegseqCmd),
    /// Realizations whose parity bisection is good.
    #[command(subcommand)]
    Hs(HsCmd),
    /// Complete multipartite graphs.
    #[command(subcommand)]
    Mp(MpCmd),
    /// Norms of bipartitions and k-partitions.
    #[command(subcommand)]
    Norm(NormCmd),
    /// Bipartition meeting both the cut and the max-side targets.
    Judicious(JudiciousArgs),
    /// The triple-clique family.
    #[command(subcommand)]
    Cx(CxCmd),
}

#[derive(Subcommand)]
enum DegseqCmd {
    /// Decide graphicality.
    Check { file: PathBuf },
    /// Lay off the i-th entry (1-based) with order.
    Layoff {
        file: PathBuf,
        #[arg(short, long)]
        index: usize,
    },
}

#[derive(Subcommand)]
enum HsCmd {
    /// Realize a graphic sequence; emits the graph and a slack certificate.
    Realize {
        file: PathBuf,
        /// Graph output file (stdout otherwise).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Certificate output file (a trailing comment line otherwise).
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Recompute parity-bisection slacks, optionally against a certificate.
    Verify {
        file: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MpCmd {
    /// Good subset witness for K_{r1..rk}.
    Good { parts: Vec<usize> },
    /// A good bisection as partition JSON (floor-good when none exists).
    Bisect { parts: Vec<usize> },
    /// Good bisection after deleting one edge between parts i and j (0-based).
    MinusEdge {
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        between: Vec<usize>,
        parts: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum NormCmd {
    /// Minimum of Σ e(V_i)^λ over bipartitions (or k-partitions).
    Min {
        file: PathBuf,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// The bound m^λ/2^{λ-1} + ... as a float, with t(m).
    Bound {
        #[arg(short)]
        m: u64,
        #[arg(long)]
        lambda: String,
    },
}

#[derive(Args)]
struct JudiciousArgs {
    file: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    /// Largest n searched exhaustively.
    #[arg(long)]
    exhaustive_limit: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CxCmd {
    /// First N pairs of the recurrence.
    Pairs {
        #[arg(short)]
        n: usize,
    },
    /// Triple clique on K_t as a graph file.
    Graph {
        #[arg(short)]
        t: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify the J-th (a, b) pair, 0-based.
    Verify {
        #[arg(short)]
        i: usize,
    },
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Breach(String),
    #[error(transparent)]
    Lib(#[from] judicious::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Breach(_) => 3,
            Failure::Lib(e) if e.is_invariant_breach() => 3,
            Failure::Lib(_) => 2,
        }
    }
}

/// Successful run: true for a positive verdict.
type Run = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let out = Out { format: cli.format };
    let result = match cli.command {
        Command::Degseq(c) => degseq(&out, c),
        Command::Hs(c) => hs(&out, c),
        Command::Mp(c) => mp(&out, c),
        Command::Norm(c) => norm(&out, c),
        Command::Judicious(a) => judicious(&out, a),
        Command::Cx(c) => cx(&out, c),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

struct Out {
    format: Format,
}

impl Out {
    /// Prints `text` or `value` depending on the format.
    fn emit(&self, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
        match self.format {
            Format::Text => println!("{}", text()),
            Format::Json => println!("{}", value()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<LabeledGraph, Failure> {
    Ok(parse_graph(&read(path)?)?)
}

fn read_sequence(path: &Path) -> Result<DegreeSequence, Failure> {
    let (seq, reordered) = parse_degree_sequence(&read(path)?)?;
    if reordered {
        eprintln!("warning: degree sequence reordered to nonincreasing order: {seq}");
    }
    Ok(seq)
}

fn parse_lambda(s: &str) -> Result<Lambda, Failure> {
    Ok(s.parse::<Lambda>()?)
}

fn spec(parts: Vec<usize>) -> Result<MultipartiteSpec, Failure> {
    Ok(MultipartiteSpec::new(parts)?)
}

fn graph_json(g: &LabeledGraph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u - 1, v - 1]).collect();
    json!({ "n": g.vertex_count(), "edges": edges })
}

fn list(xs: &[impl ToString]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Exact decimal expansion when the denominator has no prime factor other
/// than 2 and 5, `p/q` otherwise.
fn decimal(r: &BigRational) -> String {
    let zero = BigInt::from(0);
    let mut d = r.denom().clone();
    let mut count = |p: u32| {
        let p = BigInt::from(p);
        let mut k = 0;
        while &d % &p == zero {
            d /= &p;
            k += 1;
        }
        k
    };
    let digits = count(2).max(count(5));
    if d != BigInt::from(1) {
        return rational_string(r);
    }
    let scaled = r.numer() * BigInt::from(10).pow(digits) / r.denom();
    let s = format!("{:0>width$}", scaled.magnitude(), width = digits as usize + 1);
    let (int, frac) = s.split_at(s.len() - digits as usize);
    let frac = frac.trim_end_matches('0');
    let sign = if scaled < zero { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

fn degseq(out: &Out, cmd: DegseqCmd) -> Run {
    match cmd {
        DegseqCmd::Check { file } => {
            let seq = read_sequence(&file)?;
            let graphic = is_graphic(&seq);
            out.emit(
                || if graphic { "graphic".into() } else { "not graphic".into() },
                || json!({ "sequence": seq.values(), "graphic": graphic }),
            );
            Ok(graphic)
        }
        DegseqCmd::Layoff { file, index } => {
            let seq = read_sequence(&file)?;
            let r = lay_off_with_order(&seq, index)?;
            out.emit(
                || list(r.reduced.values()),
                || {
                    json!({
                        "reduced": r.reduced.values(),
                        "affected": r.affected,
                        "removed_index": r.removed_index,
                        "threshold": r.threshold,
                    })
                },
            );
            Ok(true)
        }
    }
}

fn hs(out: &Out, cmd: HsCmd) -> Run {
    match cmd {
        HsCmd::Realize { file, output, cert } => {
            let seq = read_sequence(&file)?;
            if !is_graphic(&seq) {
                eprintln!("not graphic: {seq}");
                return Ok(false);
            }
            let c = build_realization(&seq)?;
            let ok = c.is_ok();
            let cert_json = json!({ "slacks": c.slacks, "ok": ok });
            let mut graph_text = write_graph(&c.graph);
            if let Some(path) = &cert {
                write(path, &format!("{cert_json}\n"))?;
            }
            if let Some(path) = &output {
                write(path, &graph_text)?;
            }
            match out.format {
                Format::Json => println!("{}", json!({ "graph": graph_json(&c.graph), "certificate": cert_json })),
                Format::Text => {
                    if cert.is_none() {
                        graph_text.push_str(&format!("# certificate: {cert_json}\n"));
                    }
                    if output.is_none() {
                        print!("{graph_text}");
                    } else if cert.is_none() {
                        println!("{cert_json}");
                    }
                }
            }
            if !ok {
                return Err(Failure::Breach(format!("realization has negative slack: {:?}", c.slacks)));
            }
            Ok(true)
        }
        HsCmd::Verify { file, cert } => {
            let g = read_graph(&file)?;
            let slacks = bisection_slack(&g, &parity_bisection(&g));
            let ok = slacks.iter().all(|&s| s >= 0);
            out.emit(
                || format!("slacks: {}\nok: {ok}", list(&slacks)),
                || json!({ "slacks": slacks, "ok": ok }),
            );
            if let Some(path) = cert {
                let claimed: Value =
                    serde_json::from_str(&read(&path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                let claimed_slacks: Vec<i64> = claimed
                    .get("slacks")
                    .and_then(|s| serde_json::from_value(s.clone()).ok())
                    .ok_or_else(|| Failure::Input("certificate lacks an integer `slacks` array".into()))?;
                let claimed_ok = claimed
                    .get("ok")
                    .and_then(Value::as_bool)
                    .ok_or_else(|| Failure::Input("certificate lacks a boolean `ok`".into()))?;
                if claimed_ok && (!ok || claimed_slacks != slacks) {
                    return Err(Failure::Breach(format!(
                        "certificate claims ok but recomputed slacks are {slacks:?}, certificate has {claimed_slacks:?}"
                    )));
                }
                if claimed_slacks != slacks {
                    return Err(Failure::Input("certificate slacks do not match the graph".into()));
                }
            }
            Ok(ok)
        }
    }
}

fn partition_json(g: &LabeledGraph, b: &Bisection) -> Result<Value, Failure> {
    let rec = PartitionRecord::new(g, b.bipartition())?;
    Ok(serde_json::to_value(rec).expect("record serializes"))
}

fn mp(out: &Out, cmd: MpCmd) -> Run {
    match cmd {
        MpCmd::Good { parts } => {
            let s = spec(parts)?;
            let witness = good_subset_search(&s)?;
            let oracle = match good_bisection_oracle(&s) {
                Ok(o) => Some(o),
                Err(judicious::Error::Refused(_)) => None,
                Err(e) => return Err(e.into()),
            };
            if let Some(o) = &oracle {
                if o.is_some() != witness.is_some() {
                    return Err(Failure::Breach(format!(
                        "subset criterion says {} but the oracle says {}",
                        witness.is_some(),
                        o.is_some()
                    )));
                }
            }
            let verdict = match &oracle {
                Some(Some(c)) => format!("oracle: good bisection with counts {}", list(&c.x)),
                Some(None) => "oracle: no good bisection (confirmed)".into(),
                None => "oracle: instance too large, not run".into(),
            };
            out.emit(
                || match &witness {
                    Some(w) => format!("A: {}\nA': {}\nn: {}\n{verdict}", list(&w.a), list(&w.a_prime), w.n),
                    None => format!("none\n{verdict}"),
                },
                || {
                    json!({
                        "witness": witness,
                        "oracle": oracle.as_ref().map(|o| o.is_some()),
                    })
                },
            );
            Ok(witness.is_some())
        }
        MpCmd::Bisect { parts } => {
            let s = spec(parts)?;
            let g = judicious::multipartite::complete_multipartite(&s);
            let good = if s.order() % 2 == 0 {
                Some(even_order_good_bisection(&s)?)
            } else {
                good_subset_search(&s)?
                    .map(|w| good_bisection_from_witness(&s, &w))
                    .transpose()?
            };
            let found = good.is_some();
            let b = match good {
                Some(b) => b,
                None => {
                    eprintln!("no good bisection; emitting a floor-good one");
                    floor_good_bisection(&s)?
                }
            };
            println!("{}", partition_json(&g, &b)?);
            Ok(found)
        }
        MpCmd::MinusEdge { between, parts } => {
            let s = spec(parts)?;
            let w = minus_edge_oracle(&s, (between[0], between[1]))?;
            out.emit(
                || match &w {
                    Some(w) => format!(
                        "deleted edge {} {}\nV1: {}",
                        w.u - 1,
                        w.w - 1,
                        list(&w.bipartition.members(judicious::graph::Side::One).iter().map(|v| v - 1).collect::<Vec<_>>())
                    ),
                    None => "none".into(),
                },
                || match &w {
                    Some(w) => json!({
                        "u": w.u - 1,
                        "w": w.w - 1,
                        "V1": w.bipartition.members(judicious::graph::Side::One).iter().map(|v| v - 1).collect::<Vec<_>>(),
                    }),
                    None => Value::Null,
                },
            );
            Ok(w.is_some())
        }
    }
}

fn norm_value_json(v: &NormValue) -> Value {
    match v.exact() {
        Some(x) => Value::String(x.to_string()),
        None => json!(v.to_f64()),
    }
}

fn warn_undecided(decided: bool) {
    if !decided {
        eprintln!("warning: two candidate values agreed to the precision cap and were treated as equal");
    }
}

fn norm(out: &Out, cmd: NormCmd) -> Run {
    match cmd {
        NormCmd::Min { file, lambda, k } => {
            let g = read_graph(&file)?;
            let lambda = parse_lambda(&lambda)?;
            if k == 2 {
                let r = exact_min_norm(&g, lambda)?;
                warn_undecided(r.decided);
                let rec = PartitionRecord::new(&g, &r.argmin)?;
                let vs = compare_with_bound(&r.value, g.edge_count() as u64).ok();
                out.emit(
                    || {
                        let mut s = format!("min: {}\npartition: {}", r.value, serde_json::to_string(&rec).unwrap());
                        if let Some(c) = vs {
                            s.push_str(&format!("\nvs bound: {:?}", c.ordering));
                        }
                        s
                    },
                    || {
                        json!({
                            "lambda": lambda,
                            "value": norm_value_json(&r.value),
                            "partition": rec,
                            "decided": r.decided,
                            "vs_bound": vs.map(|c| format!("{:?}", c.ordering).to_lowercase()),
                        })
                    },
                );
            } else {
                let r = k_partition_min_norm(&g, k, lambda)?;
                warn_undecided(r.decided);
                out.emit(
                    || format!("min: {}\nparts: {}\nedges: {}", r.value, list(&r.parts), list(&r.edge_counts)),
                    || {
                        json!({
                            "lambda": lambda,
                            "k": k,
                            "value": norm_value_json(&r.value),
                            "parts": r.parts,
                            "edge_counts": r.edge_counts,
                            "exhaustive": r.exhaustive,
                            "decided": r.decided,
                        })
                    },
                );
            }
            Ok(true)
        }
        NormCmd::Bound { m, lambda } => {
            let lambda = parse_lambda(&lambda)?;
            let bound = norm_bound(m, lambda)?;
            let e = EdwardsBound::new(m);
            out.emit(
                || format!("bound: {bound}\nt: {}", e.t()),
                || json!({ "m": m, "lambda": lambda, "bound": bound, "t": e.t() }),
            );
            Ok(true)
        }
    }
}

fn judicious(out: &Out, args: JudiciousArgs) -> Run {
    let g = read_graph(&args.file)?;
    let mut config = SearchConfig::default();
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(limit) = args.exhaustive_limit {
        config.exhaustive_limit = limit;
    }
    let c = find_judicious_bipartition(&g, &config)?;
    let rec = PartitionRecord::new(&g, &c.bipartition)?;
    let e = EdwardsBound::new(c.m);
    if let Some(path) = &args.output {
        write(path, &format!("{}\n", serde_json::to_string(&rec).unwrap()))?;
    }
    let strategy = match c.strategy {
        Strategy::Exhaustive => "exhaustive".to_string(),
        Strategy::LocalSearch { restart, moves } => format!("local search (restart {restart}, {moves} moves)"),
    };
    out.emit(
        || {
            format!(
                "cut: {} ≥ {}\nmax side: {} ≤ {}\nstrategy: {strategy}\npartition: {}",
                c.stats.cut,
                e.min_cut(),
                c.stats.max_side(),
                e.max_side(),
                serde_json::to_string(&rec).unwrap()
            )
        },
        || {
            json!({
                "m": c.m,
                "partition": rec,
                "min_cut": e.min_cut(),
                "max_side": e.max_side(),
                "strategy": c.strategy,
            })
        },
    );
    Ok(true)
}

fn cx(out: &Out, cmd: CxCmd) -> Run {
    match cmd {
        CxCmd::Pairs { n } => {
            let s = pair_sequence(n)?;
            out.emit(
                || s.pairs.iter().map(|(a, b)| format!("{a} {b}")).collect::<Vec<_>>().join("\n"),
                || Value::Array(s.pairs.iter().map(|(a, b)| json!([a.to_string(), b.to_string()])).collect()),
            );
            Ok(true)
        }
        CxCmd::Graph { t, output } => {
            let g = triple_clique(t)?;
            let text = write_graph(&g);
            match output {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        CxCmd::Verify { i } => {
            let pairs = ab_pairs(i + 1)?;
            let pair = &pairs[i];
            let v = verify_thm_2n(pair)?;
            let (kind, lhs) = match &v.evidence {
                Evidence::Enumerated { value } => ("enumerated", value.to_string()),
                Evidence::Algebraic { lower } => ("algebraic", decimal(lower)),
            };
            out.emit(
                || format!("{kind}: {lhs} ≥ {}", decimal(&v.bound)),
                || {
                    json!({
                        "a": pair.a.to_string(),
                        "b": pair.b.to_string(),
                        "evidence": kind,
                        "value": match &v.evidence {
                            Evidence::Enumerated { value } => value.to_string(),
                            Evidence::Algebraic { lower } => rational_string(lower),
                        },
                        "bound": rational_string(&v.bound),
                        "holds": v.holds,
                    })
                },
            );
            if !v.holds {
                return Err(Failure::Breach(format!("pair ({}, {}) fails the max-side bound", pair.a, pair.b)));
            }
            Ok(true)
        }
    }
}
