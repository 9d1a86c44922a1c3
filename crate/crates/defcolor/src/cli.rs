use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use defcolor_core::coloring::{brute_force_oracle, export_cnf};
use defcolor_core::discharging::{audit, check_lemma3, check_lemma4, check_prop1b, DischargeRuleSet, RuleSetName};
use defcolor_core::gadgets::{self, GadgetResult};
use defcolor_core::{
    solve, Color, ColoringError, ColoringSpec, ConstraintSet, EmbeddingError, Girth, Graph, PlaneEmbedding,
    VertexId,
};

use crate::format::{self, FormatError};
use crate::report::{exit_code, AuditReport, LemmasJson, SolveReport};

/// Largest instance `solve` runs without an explicit `--budget`.
pub const UNBUDGETED_MAX_VERTICES: usize = 30;

#[derive(Debug, Parser)]
#[command(name = "defcolor", version, about = "Defective colorings of planar graphs without 4- and 5-cycles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide colorability with the exact search
    Solve(SolveArgs),
    /// Decide colorability by trying every assignment (small graphs only)
    Oracle(ColoringArgs),
    /// Generate a gadget graph
    #[command(subcommand)]
    Gadget(GadgetCommand),
    /// Attach k-1 triangles at every vertex
    Reduce(ReduceArgs),
    /// Structural checks
    #[command(subcommand)]
    Check(CheckCommand),
    /// Discharging audit of an embedding
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
pub struct ColoringArgs {
    /// Edge-list or embedding file
    #[arg(long)]
    pub graph: PathBuf,
    /// Defects per color, e.g. `1,1`
    #[arg(long, value_delimiter = ',', required = true)]
    pub spec: Vec<u32>,
    /// Force a color: `vertex=color`, vertex by index or label
    #[arg(long, value_name = "V=C")]
    pub force: Vec<String>,
    /// Forbid a color: `vertex=color`
    #[arg(long, value_name = "V=C")]
    pub forbid: Vec<String>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub coloring: ColoringArgs,
    /// Search node budget; required above 30 vertices
    #[arg(long)]
    pub budget: Option<u64>,
    /// Write DIMACS CNF here instead of solving
    #[arg(long, value_name = "OUT")]
    pub emit_cnf: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GadgetCommand {
    /// Two triangles joined by an edge
    Huv(OutArgs),
    /// The amplifier S(z)
    S(SizedArgs),
    /// The composite that is not (1,k)-colorable
    Non1k(SizedArgs),
    /// Same as the top-level `reduce`
    Reduce(ReduceArgs),
}

#[derive(Debug, Args)]
pub struct OutArgs {
    /// Write PREFIX.edges, PREFIX.emb and PREFIX.terminals.json
    #[arg(long, value_name = "PREFIX")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SizedArgs {
    #[arg(long)]
    pub k: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    /// Edge-list or embedding file; an embedding is carried through
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    Girth(GraphArg),
    C4c5(GraphArg),
    /// Structural lemma validators; needs an embedding
    Lemmas(LemmaArgs),
}

#[derive(Debug, Args)]
pub struct GraphArg {
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub embedding: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long)]
    pub embedding: PathBuf,
    /// 44, 35 or 29
    #[arg(long, value_parser = parse_ruleset)]
    pub ruleset: RuleSetName,
}

fn parse_ruleset(s: &str) -> Result<RuleSetName, String> {
    s.parse().map_err(|()| format!("unknown rule set `{s}` (expected 44, 35 or 29)"))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Gadget(#[from] gadgets::GadgetError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.display().to_string(), source }
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    writeln!(out, "{text}").map_err(io_err(Path::new("<stdout>")))
}

fn resolve_vertex(g: &Graph, name: &str) -> Option<VertexId> {
    if let Some(v) = g.vertex_by_label(name) {
        return Some(v);
    }
    name.parse::<u32>().ok().map(VertexId).filter(|&v| g.contains(v))
}

fn parse_assignment(g: &Graph, raw: &str) -> Result<(VertexId, Color), CliError> {
    let (v, c) = raw
        .rsplit_once('=')
        .ok_or_else(|| CliError::Usage(format!("expected `vertex=color`, got `{raw}`")))?;
    let vertex = resolve_vertex(g, v.trim()).ok_or_else(|| CliError::Usage(format!("unknown vertex `{v}`")))?;
    let color = c.trim().parse().map_err(|_| CliError::Usage(format!("bad color `{c}`")))?;
    Ok((vertex, color))
}

fn load_coloring(args: &ColoringArgs) -> Result<(Graph, ColoringSpec, ConstraintSet), CliError> {
    let g = format::read_graph(&args.graph)?;
    let spec = ColoringSpec::new(args.spec.clone())?;
    let mut cons = ConstraintSet::new();
    for raw in &args.force {
        let (v, c) = parse_assignment(&g, raw)?;
        cons = cons.force(v, c);
    }
    for raw in &args.forbid {
        let (v, c) = parse_assignment(&g, raw)?;
        cons = cons.forbid(v, c);
    }
    Ok((g, spec, cons))
}

fn load_embedded(path: &Path) -> Result<(Graph, Option<PlaneEmbedding>), CliError> {
    let text = format::read_file(path)?;
    if text.trim_start().starts_with(format::EMBEDDING_HEADER) {
        let emb = format::parse_embedding(&text)?;
        Ok((emb.graph().clone(), Some(emb)))
    } else {
        Ok((format::parse_edgelist(&text)?, None))
    }
}

#[derive(Serialize)]
struct GadgetSummary<'a> {
    format: &'static str,
    vertices: usize,
    edges: usize,
    terminals: std::collections::BTreeMap<&'a str, u32>,
    files: Vec<String>,
}

fn emit_gadget(out: &mut dyn Write, result: &GadgetResult, args: &OutArgs) -> Result<(), CliError> {
    let Some(prefix) = &args.out else {
        let text = match &result.embedding {
            Some(e) => format::write_embedding(e),
            None => format::write_edgelist(&result.graph),
        };
        return out.write_all(text.as_bytes()).map_err(io_err(Path::new("<stdout>")));
    };
    let with_ext = |ext: &str| {
        let mut s = prefix.clone().into_os_string();
        s.push(ext);
        PathBuf::from(s)
    };
    let mut files = Vec::new();
    let mut put = |path: PathBuf, text: String| -> Result<(), CliError> {
        std::fs::write(&path, text).map_err(io_err(&path))?;
        files.push(path.display().to_string());
        Ok(())
    };
    put(with_ext(".edges"), format::write_edgelist(&result.graph))?;
    if let Some(e) = &result.embedding {
        put(with_ext(".emb"), format::write_embedding(e))?;
    }
    let terminals: std::collections::BTreeMap<&str, u32> =
        result.terminals.iter().map(|(k, v)| (k.as_str(), v.0)).collect();
    put(with_ext(".terminals.json"), serde_json::to_string_pretty(&terminals).unwrap() + "\n")?;
    write_json(
        out,
        &GadgetSummary {
            format: "defcolor-gadget v1",
            vertices: result.graph.vertex_count(),
            edges: result.graph.edge_count(),
            terminals,
            files,
        },
    )
}

fn run_reduce(out: &mut dyn Write, args: &ReduceArgs) -> Result<i32, CliError> {
    let (g, emb) = load_embedded(&args.graph)?;
    let result = match emb {
        Some(e) => gadgets::np_reduce_embedded(&e, args.k)?,
        None => gadgets::np_reduce(&g, args.k)?,
    };
    emit_gadget(out, &result, &args.out)?;
    Ok(0)
}

#[derive(Serialize)]
struct CnfSummary {
    format: &'static str,
    path: String,
    variables: u32,
    clauses: usize,
}

#[derive(Serialize)]
struct GirthReport {
    format: &'static str,
    /// `null` for a forest.
    girth: Option<usize>,
}

#[derive(Serialize)]
struct C4c5Report {
    format: &'static str,
    c4c5_free: bool,
    cycles4: usize,
    cycles5: usize,
}

/// Runs one command, writing its document to `out`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Solve(args) => {
            let (g, spec, cons) = load_coloring(&args.coloring)?;
            if let Some(path) = &args.emit_cnf {
                let enc = export_cnf(&g, &spec, &cons)?;
                std::fs::write(path, enc.to_dimacs()).map_err(io_err(path))?;
                write_json(
                    out,
                    &CnfSummary {
                        format: "defcolor-cnf v1",
                        path: path.display().to_string(),
                        variables: enc.cnf.num_vars,
                        clauses: enc.cnf.clauses.len(),
                    },
                )?;
                return Ok(0);
            }
            let budget = match args.budget {
                Some(b) => b,
                None if g.vertex_count() <= UNBUDGETED_MAX_VERTICES => u64::MAX,
                None => {
                    return Err(CliError::Usage(format!(
                        "graphs with more than {UNBUDGETED_MAX_VERTICES} vertices need an explicit --budget"
                    )))
                }
            };
            let run = solve(&g, &spec, &cons, budget)?;
            write_json(out, &SolveReport::new(&g, "search", &run, args.budget))?;
            Ok(exit_code(&run.outcome))
        }
        Command::Oracle(args) => {
            let (g, spec, cons) = load_coloring(&args)?;
            let run = brute_force_oracle(&g, &spec, &cons)?;
            write_json(out, &SolveReport::new(&g, "brute-force", &run, None))?;
            Ok(exit_code(&run.outcome))
        }
        Command::Gadget(cmd) => {
            match cmd {
                GadgetCommand::Huv(o) => emit_gadget(out, &gadgets::huv(), &o)?,
                GadgetCommand::S(a) => emit_gadget(out, &gadgets::s_gadget(a.k)?, &a.out)?,
                GadgetCommand::Non1k(a) => emit_gadget(out, &gadgets::non_1k(a.k)?, &a.out)?,
                GadgetCommand::Reduce(a) => return run_reduce(out, &a),
            }
            Ok(0)
        }
        Command::Reduce(args) => run_reduce(out, &args),
        Command::Check(CheckCommand::Girth(a)) => {
            let g = format::read_graph(&a.graph)?;
            let girth = match g.girth() {
                Girth::Finite(n) => Some(n),
                Girth::Infinite => None,
            };
            write_json(out, &GirthReport { format: "defcolor-check v1", girth })?;
            Ok(0)
        }
        Command::Check(CheckCommand::C4c5(a)) => {
            let g = format::read_graph(&a.graph)?;
            let cycles4 = g.cycles_of_length(4).expect("length in range").len();
            let cycles5 = g.cycles_of_length(5).expect("length in range").len();
            write_json(
                out,
                &C4c5Report { format: "defcolor-check v1", c4c5_free: cycles4 + cycles5 == 0, cycles4, cycles5 },
            )?;
            Ok(0)
        }
        Command::Check(CheckCommand::Lemmas(a)) => {
            let path = a
                .embedding
                .as_ref()
                .or(a.graph.as_ref())
                .ok_or_else(|| CliError::Usage(String::from("lemmas need --embedding")))?;
            let (_, emb) = load_embedded(path)?;
            let emb = emb.ok_or_else(|| CliError::Usage(String::from("lemmas need an embedding file")))?;
            let report = LemmasJson {
                lemma3: (&check_lemma3(&emb)?).into(),
                lemma4: (&check_lemma4(&emb)?).into(),
                prop1b: (&check_prop1b(&emb)?).into(),
            };
            write_json(out, &report)?;
            Ok(0)
        }
        Command::Audit(a) => {
            let emb = format::read_embedding(&a.embedding)?;
            let result = audit(&emb, &DischargeRuleSet::by_name(a.ruleset))?;
            write_json(out, &AuditReport::from(&result))?;
            Ok(0)
        }
    }
}
