//! `cobond`: bond-certified decompositions and width oracles from the
//! command line.
//!
//! Exit codes: 0 success, 1 a certificate or check failed, 2 bad input or
//! a size limit was hit. Errors go to stderr as `{"error", "message"}`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use cobond::bonds::cocircumference_within;
use cobond::construct::treewidth::composed_tree_decomposition;
use cobond::formats::{
    parse_graph, to_graph6, write_edge_list, write_multigraph_edge_list, BondJson, Certificate, Format, InputGraph,
};
use cobond::generators::{gen_gk_dual_within, gen_gk_within, gen_standard, gen_ternary_tree_within};
use cobond::graph::{blocks_and_cutvertices, components, is_two_connected};
use cobond::oracles::{
    circumference_within, exact_pathwidth_within, exact_rooted_pathwidth_within, exact_treewidth_within,
};
use cobond::verify::{self, validate_certificate, VerifyConfig};
use cobond::{bond_certified_pd, Error, Limits};
use serde::Serialize;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "cobond", version, about = "Bond-certified tree and path decompositions")]
struct Cli {
    /// Vertex limit for every exponential oracle.
    #[arg(long, global = true, env = "COBOND_LIMIT_N")]
    limit_n: Option<usize>,

    /// Input format; graph6 is also detected from its `>>graph6<<` header.
    #[arg(long, global = true, value_enum)]
    format: Option<InputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum InputFormat {
    EdgeList,
    G6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Components, blocks, cutvertices, 2-connectivity and cocircumference.
    Analyze(Input),
    /// DFS tree decomposition with a bond certificate per bag.
    TreeDecomp {
        #[command(flatten)]
        input: Input,
        /// DFS root (connected inputs only).
        #[arg(long)]
        root: Option<usize>,
    },
    /// Path decomposition certified by a bond through the given edge.
    PathDecomp {
        #[command(flatten)]
        input: Input,
        /// The edge `U,V`; `V` is the vertex added to every bag.
        #[arg(long, value_parser = parse_pair)]
        edge: (usize, usize),
    },
    /// Exact values by brute force.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        what: OracleKind,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        y: Option<usize>,
    },
    /// Writes a generated graph as an edge list.
    Gen(GenArgs),
    /// Re-checks a certificate against a graph.
    Validate {
        graph: PathBuf,
        certificate: PathBuf,
    },
    /// Runs the acceptance checks and prints one line per criterion.
    VerifyPaper {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Graph file; `-` or nothing reads stdin.
    file: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OracleKind {
    Tw,
    Pw,
    PwRooted,
    Circ,
    Cocirc,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Gk,
    GkDual,
    Ternary,
    Cycle,
    Complete,
    Path,
    Star,
    Theta,
    Cubic,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(value_enum)]
    family: Family,
    /// Family index for `gk` and `gk-dual`.
    #[arg(long)]
    k: Option<usize>,
    /// Height for `ternary`.
    #[arg(long)]
    h: Option<usize>,
    /// Size for `cycle`, `complete`, `path`, `star` (leaves) and `cubic`.
    #[arg(long)]
    n: Option<usize>,
    /// Path lengths for `theta`, comma separated.
    #[arg(long, value_delimiter = ',')]
    lengths: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Write graph6 instead of an edge list (simple graphs only).
    #[arg(long)]
    g6: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected U,V")?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

/// A failure with its exit code.
struct Failure {
    kind: String,
    message: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InternalInvariantBroken(_) => 1,
            _ => 2,
        };
        Failure {
            kind: e.kind().into(),
            message: e.to_string(),
            code,
        }
    }
}

fn io_failure(what: &str, e: std::io::Error) -> Failure {
    Failure {
        kind: "Io".into(),
        message: format!("{what}: {e}"),
        code: 2,
    }
}

type CliResult<T> = Result<T, Failure>;

struct Context {
    limits: Limits,
    format: Option<Format>,
}

impl Context {
    fn read_text(&self, path: Option<&PathBuf>) -> CliResult<String> {
        match path {
            Some(p) if p.as_os_str() != "-" => {
                std::fs::read_to_string(p).map_err(|e| io_failure(&p.display().to_string(), e))
            }
            _ => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| io_failure("stdin", e))?;
                Ok(s)
            }
        }
    }

    fn read_graph(&self, path: Option<&PathBuf>) -> CliResult<InputGraph> {
        Ok(parse_graph(&self.read_text(path)?, self.format)?)
    }
}

fn emit<T: Serialize>(value: &T) -> CliResult<()> {
    let s = serde_json::to_string_pretty(value).expect("report serializes");
    let mut out = std::io::stdout().lock();
    writeln!(out, "{s}").map_err(|e| io_failure("stdout", e))
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    m: usize,
    multigraph: bool,
    connected: bool,
    components: Vec<Vec<usize>>,
    blocks: Vec<Vec<usize>>,
    cutvertices: Vec<usize>,
    two_connected: bool,
    cocircumference: Option<usize>,
    max_bond: Option<BondJson>,
}

fn analyze(ctx: &Context, input: &Input) -> CliResult<u8> {
    let g = ctx.read_graph(input.file.as_ref())?;
    let multi = g.to_multi();
    let simple = multi.simplify();
    let bt = blocks_and_cutvertices(&simple);
    let comps = components(&multi);
    let cc = if multi.m() > 0 {
        match cocircumference_within(&multi, ctx.limits.bond_component) {
            Ok(c) => Some(c),
            Err(Error::SizeLimitExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    emit(&Analysis {
        n: multi.n(),
        m: multi.m(),
        multigraph: matches!(g, InputGraph::Multi(_)),
        connected: comps.len() == 1,
        components: comps,
        blocks: bt.blocks.clone(),
        cutvertices: bt.cutvertices.clone(),
        two_connected: is_two_connected(&simple),
        cocircumference: cc.as_ref().map(|c| c.0),
        max_bond: cc.as_ref().map(|c| BondJson::from(&c.1)),
    })?;
    Ok(0)
}

#[derive(Serialize)]
struct CheckedCertificate {
    #[serde(flatten)]
    certificate: Certificate,
    /// Exact cocircumference, when within limits.
    cocircumference: Option<usize>,
    valid: bool,
    problems: Vec<String>,
}

fn tree_decomp(ctx: &Context, input: &Input, root: Option<usize>) -> CliResult<u8> {
    let g = ctx.read_graph(input.file.as_ref())?.to_simple()?;
    let composed = match root {
        Some(r) => {
            let c = cobond::construct::treewidth::dfs_tree_decomposition_from(&g, r)?;
            let order = c.dfs.preorder.clone();
            let mut node = vec![0; g.n()];
            for (i, &u) in order.iter().enumerate() {
                node[u] = i;
            }
            cobond::construct::treewidth::ComposedTreeDecomposition {
                decomposition: cobond::TreeDecomposition {
                    bags: order.iter().map(|&u| c.decomposition.bags[u].clone()).collect(),
                    tree: order
                        .iter()
                        .map(|&u| {
                            let mut ns: Vec<usize> = c.decomposition.tree[u].iter().map(|&w| node[w]).collect();
                            ns.sort_unstable();
                            ns
                        })
                        .collect(),
                },
                certificates: order.iter().map(|&u| c.certificates[u].clone()).collect(),
            }
        }
        None => composed_tree_decomposition(&g)?,
    };
    let largest = composed.certificates.iter().flatten().map(|b| b.len()).max().unwrap_or(0);
    let cc = if g.m() > 0 {
        match cocircumference_within(&g, ctx.limits.bond_component) {
            Ok(c) => Some(c.0),
            Err(Error::SizeLimitExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let certificate = Certificate::from_tree(&composed, cc.unwrap_or(largest));
    let problems = validate_certificate(&g, &certificate, &ctx.limits)?;
    let valid = problems.is_empty();
    emit(&CheckedCertificate {
        certificate,
        cocircumference: cc,
        valid,
        problems,
    })?;
    Ok(if valid { 0 } else { 1 })
}

#[derive(Serialize)]
struct PathReport {
    #[serde(flatten)]
    certificate: Certificate,
    edge: [usize; 2],
    bond_size: usize,
    rooted_width: usize,
    valid: bool,
    problems: Vec<String>,
}

fn path_decomp(ctx: &Context, input: &Input, (x, y): (usize, usize)) -> CliResult<u8> {
    let g = ctx.read_graph(input.file.as_ref())?.to_simple()?;
    let c = bond_certified_pd(&g, x, y)?;
    let certificate = Certificate::from_path(&c);
    let problems = validate_certificate(&g, &certificate, &ctx.limits)?;
    let valid = problems.is_empty();
    emit(&PathReport {
        certificate,
        edge: [x, y],
        bond_size: c.bond.len(),
        rooted_width: c.rooted.width(),
        valid,
        problems,
    })?;
    Ok(if valid { 0 } else { 1 })
}

#[derive(Serialize)]
struct OracleReport {
    what: &'static str,
    value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    y: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<BondJson>,
}

fn oracle(ctx: &Context, input: &Input, what: OracleKind, x: Option<usize>, y: Option<usize>) -> CliResult<u8> {
    let g = ctx.read_graph(input.file.as_ref())?.to_multi();
    let l = ctx.limits;
    let mut report = OracleReport {
        what: "",
        value: 0,
        x: None,
        y: None,
        witness: None,
    };
    match what {
        OracleKind::Tw => {
            report.what = "tw";
            report.value = exact_treewidth_within(&g.simplify(), l.treewidth)?;
        }
        OracleKind::Pw => {
            report.what = "pw";
            report.value = exact_pathwidth_within(&g, l.pathwidth)?;
        }
        OracleKind::PwRooted => {
            let x = x.ok_or_else(|| Error::BadParams("pw-rooted needs --x".into()))?;
            report.what = "pw-rooted";
            report.value = exact_rooted_pathwidth_within(&g, x, y, l.rooted_pathwidth)?;
            report.x = Some(x);
            report.y = y;
        }
        OracleKind::Circ => {
            report.what = "circ";
            report.value = circumference_within(&g, l.circumference)?;
        }
        OracleKind::Cocirc => {
            let (k, b) = cocircumference_within(&g, l.bond_component)?;
            report.what = "cocirc";
            report.value = k;
            report.witness = Some(BondJson::from(&b));
        }
    }
    emit(&report)?;
    Ok(0)
}

fn gen(ctx: &Context, a: &GenArgs) -> CliResult<u8> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Error::BadParams(format!("this family needs --{flag}")));
    let family_limit = ctx.limits.family_k;
    let graph = match a.family {
        Family::Gk => InputGraph::Simple(gen_gk_within(need(a.k, "k")?, family_limit)?.graph),
        Family::GkDual => InputGraph::Multi(gen_gk_dual_within(need(a.k, "k")?, family_limit)?.graph),
        Family::Ternary => InputGraph::Simple(gen_ternary_tree_within(need(a.h, "h")?, ctx.limits.ternary_height)?),
        Family::Cycle => InputGraph::Simple(gen_standard("cycle", &[need(a.n, "n")?], a.seed)?),
        Family::Complete => InputGraph::Simple(gen_standard("complete", &[need(a.n, "n")?], a.seed)?),
        Family::Path => InputGraph::Simple(gen_standard("path", &[need(a.n, "n")?], a.seed)?),
        Family::Star => InputGraph::Simple(gen_standard("star", &[need(a.n, "n")?], a.seed)?),
        Family::Theta => InputGraph::Simple(gen_standard("theta", &a.lengths, a.seed)?),
        Family::Cubic => InputGraph::Simple(gen_standard("random_cubic", &[need(a.n, "n")?], a.seed)?),
    };
    let text = match (&graph, a.g6) {
        (InputGraph::Simple(g), true) => to_graph6(g)? + "\n",
        (InputGraph::Simple(g), false) => write_edge_list(g),
        (InputGraph::Multi(_), true) => {
            return Err(Error::BadParams("graph6 cannot hold a multigraph".into()).into());
        }
        (InputGraph::Multi(g), false) => write_multigraph_edge_list(g),
    };
    match &a.output {
        Some(p) => std::fs::write(p, text).map_err(|e| io_failure(&p.display().to_string(), e))?,
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| io_failure("stdout", e))?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct Validation {
    valid: bool,
    problems: Vec<String>,
}

fn validate(ctx: &Context, graph: &PathBuf, cert: &PathBuf) -> CliResult<u8> {
    let g = ctx.read_graph(Some(graph))?.to_simple()?;
    let text = ctx.read_text(Some(cert))?;
    let certificate: Certificate = serde_json::from_str(&text).map_err(|e| Failure {
        kind: "Parse".into(),
        message: format!("certificate: {e}"),
        code: 2,
    })?;
    let problems = validate_certificate(&g, &certificate, &ctx.limits)?;
    let valid = problems.is_empty();
    emit(&Validation { valid, problems })?;
    Ok(if valid { 0 } else { 1 })
}

fn verify_paper(ctx: &Context, limit_given: bool, max_n: usize, seed: Option<u64>) -> CliResult<u8> {
    if max_n > cobond::corpus::MAX_CORPUS_N {
        return Err(Error::SizeLimitExceeded {
            what: "exhaustive corpus order",
            size: max_n,
            limit: cobond::corpus::MAX_CORPUS_N,
        }
        .into());
    }
    let mut cfg = VerifyConfig {
        max_n,
        ..VerifyConfig::default()
    };
    if let Some(s) = seed {
        cfg.seed = s;
    }
    if limit_given {
        cfg.limits = ctx.limits;
    }
    let mut failed = 0;
    let mut out = std::io::stdout().lock();
    for r in verify::run_all(&cfg) {
        failed += usize::from(!r.passed());
        writeln!(out, "{r}").map_err(|e| io_failure("stdout", e))?;
    }
    writeln!(out, "{} of 10 criteria passed", 10 - failed).map_err(|e| io_failure("stdout", e))?;
    Ok(if failed == 0 { 0 } else { 1 })
}

fn run(cli: Cli) -> CliResult<u8> {
    let ctx = Context {
        limits: cli.limit_n.map_or_else(Limits::default, |n| Limits::default().with_vertex_limit(n)),
        format: cli.format.map(|f| match f {
            InputFormat::EdgeList => Format::EdgeList,
            InputFormat::G6 => Format::Graph6,
        }),
    };
    match &cli.command {
        Command::Analyze(input) => analyze(&ctx, input),
        Command::TreeDecomp { input, root } => tree_decomp(&ctx, input, *root),
        Command::PathDecomp { input, edge } => path_decomp(&ctx, input, *edge),
        Command::Oracle { input, what, x, y } => oracle(&ctx, input, *what, *x, *y),
        Command::Gen(a) => gen(&ctx, a),
        Command::Validate { graph, certificate } => validate(&ctx, graph, certificate),
        Command::VerifyPaper { max_n, seed } => verify_paper(&ctx, cli.limit_n.is_some(), *max_n, *seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            report(&Failure {
                kind: "Usage".into(),
                message: e.to_string().trim().to_string(),
                code: 2,
            });
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            report(&f);
            ExitCode::from(f.code)
        }
    }
}

fn report(f: &Failure) {
    #[derive(Serialize)]
    struct ErrorJson<'a> {
        error: &'a str,
        message: &'a str,
    }
    let s = serde_json::to_string(&ErrorJson {
        error: &f.kind,
        message: &f.message,
    })
    .expect("error serializes");
    eprintln!("{s}");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs() {
        assert_eq!(parse_pair("3,4"), Ok((3, 4)));
        assert_eq!(parse_pair(" 0 , 12"), Ok((0, 12)));
        assert!(parse_pair("3").is_err());
        assert!(parse_pair("a,1").is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
