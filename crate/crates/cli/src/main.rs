use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use triblock::blocks::{catalog_plane_graph, decompose, BlockLabel};
use triblock::constructions::{build_skeleton, substitute_b5a, verify_extremal};
use triblock::contribution::{
    certify, certify_checked, edge_contribution, face_contributions, BoundSpec, Certificate,
};
use triblock::oracle::{self, OracleConfig};
use triblock::patterns::PatternSet;
use triblock::plane_graph::{export_dot, import_dot, parse_planegraph, write_planegraph, PlaneGraph};

// stdout writes that end the process quietly when the reader goes away
macro_rules! out {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

macro_rules! outln {
    ($($arg:tt)*) => { emit(format_args!("{}\n", format_args!($($arg)*))) };
}

fn emit(args: std::fmt::Arguments) {
    if let Err(e) = io::stdout().lock().write_fmt(args) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing output: {e}");
        std::process::exit(EXIT_INPUT as i32);
    }
}

/// Triangular-block decomposition and planar Turan bounds for Theta graphs.
#[derive(Parser)]
#[command(name = "triblock", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Native,
}

#[derive(Subcommand)]
enum Command {
    /// Split a plane graph into triangular blocks.
    Decompose {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cluster the blocks and evaluate the contribution formula.
    Certify {
        input: Option<PathBuf>,
        /// theta6-1 (bound 45/17) or theta6-2 (bound 18/7).
        #[arg(long)]
        target: String,
        /// Also test the input for the target pattern.
        #[arg(long)]
        check_free: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Search the input for a forbidden pattern.
    CheckFree {
        input: Option<PathBuf>,
        /// theta6-1, theta6-2, theta:K:D or theta-family:K.
        #[arg(long)]
        pattern: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build the k-th extremal Theta(6,1)-free graph.
    Construct {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit the pentagon skeleton before B5a substitution.
        #[arg(long)]
        skeleton_only: bool,
        /// Check counts, freeness and certification; prints a JSON report.
        #[arg(long)]
        verify: bool,
    },
    /// Exhaustively compute the planar Turan number for small n.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        jobs: Option<usize>,
        /// Directory to write extremal graphs into (native format).
        #[arg(long)]
        witnesses: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        /// Run above the cap (up to 16 vertices).
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Convert a plane graph between formats.
    Export {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the nine catalog blocks.
    Catalog {
        /// Write each block's standard embedding to DIR/<label>.pg.
        #[arg(long)]
        write: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

const EXIT_VIOLATION: u8 = 2;
const EXIT_INPUT: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Decompose { input, format } => cmd_decompose(input.as_deref(), format),
        Command::Certify {
            input,
            target,
            check_free,
            format,
        } => {
            let spec: BoundSpec = match target.parse() {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            cmd_certify(input.as_deref(), &spec, check_free, format)
        }
        Command::CheckFree {
            input,
            pattern,
            format,
        } => {
            let set: PatternSet = match pattern.parse() {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            cmd_check_free(input.as_deref(), &set, format)
        }
        Command::Construct {
            k,
            out,
            skeleton_only,
            verify,
        } => cmd_construct(k, out.as_deref(), skeleton_only, verify),
        Command::Oracle {
            n,
            pattern,
            jobs,
            witnesses,
            cap,
            force,
            format,
        } => {
            let set: PatternSet = match pattern.parse() {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            let config = OracleConfig {
                cap,
                force,
                jobs,
                ..OracleConfig::default()
            };
            cmd_oracle(n, &set, &config, witnesses.as_deref(), format)
        }
        Command::Export { input, format, out } => {
            let pg = read_plane_graph(input.as_deref())?;
            let text = match format {
                Format::Dot => export_dot(&pg),
                Format::Native => write_planegraph(&pg),
                Format::Json => to_json(&json!({
                    "n": pg.vertex_count(),
                    "edges": pg.graph().edges(),
                    "rotation": pg.rotations(),
                }))?,
                Format::Text => return usage("export supports dot, native and json"),
            };
            write_output(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Catalog { write, format } => cmd_catalog(write.as_deref(), format),
    }
}

fn usage(message: impl std::fmt::Display) -> Result<u8> {
    eprintln!("error: {message}");
    Ok(1)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

/// Native format, DOT, or the JSON emitted by `decompose` (which embeds the
/// graph in native format). Reads stdin when no path is given.
fn read_plane_graph(path: Option<&Path>) -> Result<PlaneGraph> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        None => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(trimmed).context("parsing JSON input")?;
        let native = value
            .get("graph")
            .and_then(|g| g.as_str())
            .ok_or_else(|| anyhow!("JSON input has no \"graph\" field"))?;
        return Ok(parse_planegraph(native)?);
    }
    if trimmed.starts_with("graph") || trimmed.starts_with("strict graph") {
        return Ok(import_dot(trimmed)?);
    }
    Ok(parse_planegraph(&text)?)
}

fn cmd_decompose(input: Option<&Path>, format: Format) -> Result<u8> {
    let pg = read_plane_graph(input)?;
    let d = decompose(&pg);
    let f_values = face_contributions(&pg, &d);
    match format {
        Format::Json => {
            let blocks: Vec<_> = d
                .blocks
                .iter()
                .map(|b| {
                    json!({
                        "id": b.id,
                        "label": b.label,
                        "edges": b.edge_pairs(&pg),
                        "vertices": b.vertices,
                        "interior_faces": b.interior_faces,
                        "e": edge_contribution(b),
                        "f": f_values[b.id],
                    })
                })
                .collect();
            let counts: serde_json::Map<String, serde_json::Value> = d
                .label_counts()
                .into_iter()
                .map(|(l, c)| (l.to_string(), json!(c)))
                .collect();
            out!(
                "{}",
                to_json(&json!({
                    "n": pg.vertex_count(),
                    "m": pg.edge_count(),
                    "faces": pg.face_count(),
                    "blocks": blocks,
                    "label_counts": counts,
                    "graph": write_planegraph(&pg),
                }))?
            );
        }
        Format::Text => {
            outln!(
                "n = {}, m = {}, faces = {}, blocks = {}",
                pg.vertex_count(),
                pg.edge_count(),
                pg.face_count(),
                d.blocks.len()
            );
            for b in &d.blocks {
                outln!(
                    "{:>4}  {:<5}  e = {:<4}  f = {:<8}  vertices {:?}",
                    b.id,
                    b.label,
                    b.edges.len(),
                    f_values[b.id],
                    b.vertices
                );
            }
        }
        Format::Dot => out!("{}", export_dot(&pg)),
        Format::Native => return usage("decompose supports json, text and dot"),
    }
    Ok(0)
}

fn cmd_certify(input: Option<&Path>, spec: &BoundSpec, check_free: bool, format: Format) -> Result<u8> {
    let pg = read_plane_graph(input)?;
    let cert = if check_free {
        certify_checked(&pg, spec)
    } else {
        certify(&pg, spec)
    }?;
    match format {
        Format::Json => out!("{}", to_json(&cert)?),
        Format::Text => print_certificate(&cert),
        _ => return usage("certify supports json and text"),
    }
    Ok(if !cert.violations.is_empty() {
        EXIT_VIOLATION
    } else if cert.bound_holds && cert.identities_ok {
        0
    } else {
        EXIT_INPUT
    })
}

fn print_certificate(cert: &Certificate) {
    outln!(
        "target {} ({}/{}), n = {}, m = {}, faces = {}",
        cert.target, cert.alpha, cert.beta, cert.n, cert.m, cert.faces
    );
    for c in &cert.clusters {
        let labels: Vec<String> = c.labels.iter().map(BlockLabel::to_string).collect();
        outln!(
            "{:>4}  {:<9}  e = {:<6} f = {:<10} g = {:<10} [{}]",
            c.id,
            format!("{:?}", c.kind).to_lowercase(),
            c.e,
            c.f,
            c.g,
            labels.join(" ")
        );
    }
    if let Some(free) = cert.pattern_free {
        outln!("pattern free: {free}");
    }
    for d in &cert.diagnostics {
        outln!("diagnostic: {d:?}");
    }
    outln!(
        "identities ok: {}, all g <= 0: {}, bound holds: {}",
        cert.identities_ok, cert.all_nonpositive, cert.bound_holds
    );
}

fn cmd_check_free(input: Option<&Path>, set: &PatternSet, format: Format) -> Result<u8> {
    let pg = read_plane_graph(input)?;
    let found = set.find_in(pg.graph());
    match format {
        Format::Json => {
            let witness = found.as_ref().map(|(i, w)| {
                json!({
                    "member": set.members()[*i].name(),
                    "mapping": w.mapping,
                })
            });
            out!(
                "{}",
                to_json(&json!({
                    "pattern": set.name(),
                    "free": found.is_none(),
                    "witness": witness,
                }))?
            );
        }
        Format::Text => match &found {
            None => outln!("free of {}", set.name()),
            Some((i, w)) => outln!(
                "contains {}: pattern vertex i -> host vertex {:?}",
                set.members()[*i].name(),
                w.mapping
            ),
        },
        _ => return usage("check-free supports json and text"),
    }
    Ok(if found.is_some() { EXIT_VIOLATION } else { 0 })
}

fn cmd_construct(k: usize, out: Option<&Path>, skeleton_only: bool, verify: bool) -> Result<u8> {
    let skeleton = build_skeleton(k)?;
    let pg = if skeleton_only {
        skeleton.plane_graph.clone()
    } else {
        substitute_b5a(&skeleton)
    };
    let text = write_planegraph(&pg);
    if !verify {
        write_output(out, &text)?;
        return Ok(0);
    }
    if let Some(p) = out {
        write_output(Some(p), &text)?;
    }
    let report = verify_extremal(k)?;
    out!("{}", to_json(&report)?);
    Ok(if report.passed() { 0 } else { EXIT_VIOLATION })
}

fn cmd_oracle(
    n: usize,
    set: &PatternSet,
    config: &OracleConfig,
    witness_dir: Option<&Path>,
    format: Format,
) -> Result<u8> {
    let result = match oracle::max_edges(n, set, config) {
        Ok(r) => r,
        Err(e @ oracle::OracleError::CapExceeded { .. }) => return usage(e),
        Err(e) => bail!(e),
    };
    if let Some(dir) = witness_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, g) in result.witnesses.iter().enumerate() {
            let path = dir.join(format!("witness_{i:03}.pg"));
            let text = match oracle::embed(g) {
                Some(pg) => format!(
                    "# abstract oracle witness; embedding chosen by the planarity embedder\n{}",
                    write_planegraph(&pg)
                ),
                None => format!("# disconnected witness, edges only\n# {:?}\n", g.edges()),
            };
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    match format {
        Format::Json => out!("{}", to_json(&result)?),
        Format::Text => {
            outln!("pattern      {}", result.pattern);
            outln!("n            {}", result.n);
            outln!("max edges    {}", result.max_edges);
            outln!("witnesses    {} classes", result.witness_classes);
            outln!("explored     {}", result.explored);
            outln!("audit        {}", if result.audit_ok { "ok" } else { "FAILED" });
            outln!("elapsed      {:.3}s", result.elapsed.as_secs_f64());
        }
        _ => return usage("oracle supports text and json"),
    }
    Ok(if result.audit_ok { 0 } else { EXIT_INPUT })
}

fn cmd_catalog(write: Option<&Path>, format: Format) -> Result<u8> {
    let entries: Vec<(BlockLabel, PlaneGraph)> = BlockLabel::CATALOG
        .into_iter()
        .map(|l| (l, catalog_plane_graph(l).expect("catalog label")))
        .collect();
    if let Some(dir) = write {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (label, pg) in &entries {
            let path = dir.join(format!("{label}.pg"));
            fs::write(&path, write_planegraph(pg)).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    match format {
        Format::Text => {
            for (label, pg) in &entries {
                outln!("{label}:{}/{}", pg.vertex_count(), pg.edge_count());
            }
        }
        Format::Json => {
            let list: Vec<_> = entries
                .iter()
                .map(|(l, pg)| json!({"label": l, "n": pg.vertex_count(), "m": pg.edge_count()}))
                .collect();
            out!("{}", to_json(&list)?);
        }
        _ => return usage("catalog supports text and json"),
    }
    Ok(0)
}
