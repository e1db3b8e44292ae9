//! The `ramsey` command line: argument parsing, dispatch and output.
//!
//! Exit codes: 0 when the answer is yes (arrows, minimal, self-embeddable,
//! found), 1 when it is no, 2 on any error with a one-line diagnostic.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use ramsey_core::arrowing::ContainmentStatus;
use ramsey_core::io::{
    graph_to_json, parse_coloring, parse_graph, parse_hub, parse_pointed, parse_symbolic,
    parse_tooth, to_dot,
};
use ramsey_core::konig::truncate_any;
use ramsey_core::{
    arrows_pointed, arrows_with, blue_matching_vertex_set, build_level_sets,
    check_family_conditions, comb_self_embeddable, comb_translation_embedding,
    construct_self_embedding, enumerate_minimal, finite_arrowing_subgraph, hub_truncate,
    is_family_member, is_minimal, normalize_comb, ray_prefix_search, stitch_embedding,
    EmbeddingMap, Error as CoreError, FiniteGraph,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "ramsey", version, about = "Ramsey arrowing, minimality and self-embeddability")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for parallel searches.
    #[arg(long, env = "RAMSEY_THREADS", global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide F -> (G, H).
    Arrow {
        f: PathBuf,
        g: PathBuf,
        h: PathBuf,
        /// Print the good coloring when F does not arrow.
        #[arg(long)]
        witness: bool,
        /// Record the monochromatic copy that closed each pruned branch.
        #[arg(long)]
        certify: bool,
        /// Read F and G as pointed graphs and require a red copy of G at the
        /// basepoint.
        #[arg(long)]
        pointed: bool,
    },
    /// Decide whether F is (G, H)-minimal.
    Minimal { f: PathBuf, g: PathBuf, h: PathBuf },
    /// List the (G, H)-minimal graphs within the bounds.
    Enumerate {
        g: PathBuf,
        h: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_v: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_e: u32,
    },
    /// Check a family of graphs against (G, H).
    FamilyCheck {
        g: PathBuf,
        h: PathBuf,
        #[arg(required = true)]
        family: Vec<PathBuf>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_v: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_e: u32,
    },
    /// Comb self-embeddability.
    #[command(subcommand)]
    Comb(CombCommand),
    /// Hub graphs.
    #[command(subcommand)]
    Hub(HubCommand),
    /// Least truncation of a symbolic F that arrows (G, H).
    Compact {
        f: PathBuf,
        g: PathBuf,
        h: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        cap: u32,
    },
    /// Level sets of pointed embeddings.
    #[command(subcommand)]
    Konig(KonigCommand),
    /// Finite truncation of a symbolic graph.
    Truncate {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
    },
    /// Run a file of recorded invocations and compare the results.
    Vectors { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CombCommand {
    /// Decide self-embeddability; with --depth, also build and verify the
    /// translation embedding at that depth.
    Check {
        teeth: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        depth: Option<u32>,
    },
    /// Print the normalized tooth function.
    Normalize { teeth: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum HubCommand {
    /// Every hub has infinite degree.
    Member { graph: PathBuf },
    /// Build and verify the shift self-embedding on a truncation.
    Selfembed {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
    },
    /// Run the blue-edge covering loop on a colored graph.
    Bluematch {
        f: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum KonigCommand {
    /// Level sizes for a pointed pattern in a pointed host.
    Levels {
        pattern: PathBuf,
        host: PathBuf,
        /// Defaults to the full pattern.
        #[arg(long)]
        max_level: Option<usize>,
    },
    /// Pointed path from the root of a symbolic host.
    Ray {
        host: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        len: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
    },
}

/// What a command printed and how it answered.
struct Outcome {
    yes: bool,
    json: serde_json::Value,
    text: String,
    dot: Option<String>,
}

impl Outcome {
    fn new(yes: bool, json: serde_json::Value, text: String) -> Self {
        Outcome {
            yes,
            json,
            text,
            dot: None,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn graph(path: &Path) -> Result<FiniteGraph> {
    parse_graph(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn map_json(m: &EmbeddingMap) -> serde_json::Value {
    let pairs: Vec<[u32; 2]> = m.assignment.iter().map(|(&a, &b)| [a, b]).collect();
    json!(pairs)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Parses `args` (without the program name), runs the command and writes
/// its output; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("ramsey")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let first = e.to_string();
            let line = first.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let msg = format!("{e:#}").replace('\n', " ");
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if let Command::Vectors { file } = &cli.command {
        return run_vectors(file, out, err);
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            bail!("--threads must be at least 1");
        }
        builder = builder.num_threads(n);
    }
    let pool = builder.build().context("cannot start worker threads")?;
    let outcome = pool.install(|| dispatch(&cli.command))?;
    match cli.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&outcome.json)?)?,
        Format::Text => write!(out, "{}", outcome.text)?,
        Format::Dot => match &outcome.dot {
            Some(d) => write!(out, "{d}")?,
            None => bail!("dot output is not available for this command"),
        },
    }
    Ok(if outcome.yes { 0 } else { 1 })
}

fn dispatch(command: &Command) -> Result<Outcome> {
    match command {
        Command::Arrow {
            f,
            g,
            h,
            witness,
            certify,
            pointed,
        } => arrow(f, g, h, *witness, *certify, *pointed),
        Command::Minimal { f, g, h } => {
            let (f, g, h) = (graph(f)?, graph(g)?, graph(h)?);
            let yes = is_minimal(&f, &g, &h);
            Ok(Outcome::new(yes, json!({ "minimal": yes }), format!("minimal: {}\n", yes_no(yes))))
        }
        Command::Enumerate { g, h, max_v, max_e } => {
            let (g, h) = (graph(g)?, graph(h)?);
            let found = enumerate_minimal(&g, &h, *max_v as usize, *max_e as usize);
            let mut text = format!("minimal graphs: {}\n", found.len());
            for m in &found {
                text.push_str(&format!("{}\n", m.to_terse()));
            }
            let list: Vec<serde_json::Value> = found
                .iter()
                .map(|m| serde_json::from_str(&graph_to_json(m)).expect("valid JSON"))
                .collect();
            let json = json!({ "count": found.len(), "graphs": list });
            Ok(Outcome::new(true, json, text))
        }
        Command::FamilyCheck {
            g,
            h,
            family,
            max_v,
            max_e,
        } => {
            let (g, h) = (graph(g)?, graph(h)?);
            let family: Vec<FiniteGraph> = family.iter().map(|p| graph(p)).collect::<Result<_>>()?;
            let r = check_family_conditions(&family, &g, &h, *max_v as usize, *max_e as usize);
            let antichain = match &r.antichain {
                ContainmentStatus::Holds => "holds".to_string(),
                ContainmentStatus::Vacuous => "vacuous".to_string(),
                ContainmentStatus::Fails { inner, outer } => {
                    format!("fails (member {inner} embeds in member {outer})")
                }
            };
            let text = format!(
                "all members arrow: {}\ncovers arrowing graphs within bounds ({}): {}\nno member contains another: {}\n",
                yes_no(r.all_arrow),
                r.coverage_kind,
                yes_no(r.covers_within_bounds),
                antichain
            );
            let yes = r.all_arrow
                && r.covers_within_bounds
                && !matches!(r.antichain, ContainmentStatus::Fails { .. });
            Ok(Outcome::new(yes, serde_json::to_value(&r)?, text))
        }
        Command::Comb(CombCommand::Check { teeth, depth }) => {
            let teeth = parse_tooth(&read(teeth)?)?;
            let v = comb_self_embeddable(&teeth)?;
            let mut json = serde_json::to_value(&v)?;
            let mut text = format!("self-embeddable: {}\n", yes_no(v.self_embeddable));
            if let Some(p) = v.shift {
                text.push_str(&format!("shift: {p}\n"));
            }
            if v.normalized {
                text.push_str("normalized: true\n");
            }
            if let (Some(d), Some(p)) = (depth, v.shift) {
                let map = comb_translation_embedding(&v.analyzed, p, *d)?;
                json["embedding"] = map_json(&map);
                text.push_str(&format!("translation embedding at depth {d}: verified\n"));
            }
            Ok(Outcome::new(v.self_embeddable, json, text))
        }
        Command::Comb(CombCommand::Normalize { teeth }) => {
            let teeth = parse_tooth(&read(teeth)?)?;
            let n = normalize_comb(&teeth)?;
            let json = serde_json::to_value(&n)?;
            let text = format!("{}\n", serde_json::to_string(&n)?);
            Ok(Outcome::new(true, json, text))
        }
        Command::Hub(HubCommand::Member { graph: path }) => {
            let h = parse_hub(&read(path)?)?;
            let yes = is_family_member(&h);
            Ok(Outcome::new(yes, json!({ "member": yes }), format!("member: {}\n", yes_no(yes))))
        }
        Command::Hub(HubCommand::Selfembed { graph: path, depth }) => {
            let h = parse_hub(&read(path)?)?;
            let map = construct_self_embedding(&h, *depth)?;
            let host = hub_truncate(&h, depth + 1);
            let missed: BTreeSet<u32> = host.vertices().filter(|v| !map.image().contains(v)).collect();
            let json = json!({ "embedding": map_json(&map), "missed": missed });
            let text = format!(
                "self-embedding at depth {depth}: verified\nimage misses: {}\n",
                missed.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            );
            Ok(Outcome::new(true, json, text))
        }
        Command::Hub(HubCommand::Bluematch { f, coloring, n }) => {
            let f = graph(f)?;
            let c = parse_coloring(&read(coloring)?)?;
            match blue_matching_vertex_set(&f, &c, *n as usize) {
                Ok(cover) => {
                    let text = format!(
                        "iterations: {}\nvertices: {}\n",
                        cover.iterations,
                        cover.vertices.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                    );
                    Ok(Outcome::new(true, serde_json::to_value(&cover)?, text))
                }
                Err(CoreError::BlueMatching(m)) => {
                    let edges: Vec<String> = m.iter().map(|e| e.to_string()).collect();
                    let text = format!("blue {}K2 found: {}\n", m.len(), edges.join(","));
                    Ok(Outcome::new(false, json!({ "blue_matching": m }), text))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Compact { f, g, h, cap } => {
            let f = parse_symbolic(&read(f)?)?;
            let (g, h) = (graph(g)?, graph(h)?);
            let (report, _) = finite_arrowing_subgraph(&f, &g, &h, *cap)?;
            let text = match report.depth {
                Some(d) => format!("arrowing truncation at depth {d}: {}\n", report.graph.as_deref().unwrap_or("")),
                None => format!("no arrowing truncation up to depth {cap} (inconclusive)\n"),
            };
            Ok(Outcome::new(report.depth.is_some(), serde_json::to_value(&report)?, text))
        }
        Command::Konig(KonigCommand::Levels {
            pattern,
            host,
            max_level,
        }) => {
            let pattern = parse_pointed(&read(pattern)?)?;
            let host = parse_pointed(&read(host)?)?;
            let full = pattern.graph().vertex_count() - 1;
            let top = max_level.unwrap_or(full);
            let levels = build_level_sets(&pattern, &host, top)?;
            let sizes = levels.sizes();
            let stitched = if top == full { stitch_embedding(&levels)? } else { None };
            let mut json = json!({ "order": levels.order, "sizes": sizes });
            if let Some(m) = &stitched {
                json["embedding"] = map_json(m);
            }
            let text = format!(
                "level sizes: {}\nembedding: {}\n",
                sizes.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
                if stitched.is_some() { "found" } else { "none" }
            );
            Ok(Outcome::new(stitched.is_some(), json, text))
        }
        Command::Konig(KonigCommand::Ray { host, len, depth }) => {
            let host = parse_symbolic(&read(host)?)?;
            let found = ray_prefix_search(&host, *len, *depth)?;
            let json = match &found {
                Some(m) => json!({ "found": true, "embedding": map_json(m) }),
                None => json!({ "found": false }),
            };
            let text = format!("ray prefix of length {len}: {}\n", if found.is_some() { "found" } else { "none" });
            Ok(Outcome::new(found.is_some(), json, text))
        }
        Command::Truncate { graph: path, depth } => {
            let g = parse_symbolic(&read(path)?)?;
            let t = truncate_any(&g, *depth)?;
            let json: serde_json::Value = serde_json::from_str(&graph_to_json(&t))?;
            let text = format!("{}\n", t.to_terse());
            let mut o = Outcome::new(true, json, text);
            o.dot = Some(to_dot(&t, None));
            Ok(o)
        }
        Command::Vectors { .. } => unreachable!("handled before dispatch"),
    }
}

fn arrow(f: &Path, g: &Path, h: &Path, witness: bool, certify: bool, pointed: bool) -> Result<Outcome> {
    let hg = graph(h)?;
    let (fg, verdict) = if pointed {
        if certify {
            bail!("--certify is not supported with --pointed");
        }
        let fp = parse_pointed(&read(f)?)?;
        let gp = parse_pointed(&read(g)?)?;
        let v = arrows_pointed(&fp, &gp, &hg);
        (fp.graph().clone(), v)
    } else {
        let (fg, gg) = (graph(f)?, graph(g)?);
        if gg.is_empty() || hg.is_empty() {
            return Err(anyhow!("G and H must have at least one edge"));
        }
        let v = arrows_with(&fg, &gg, &hg, certify);
        (fg, v)
    };
    let mut json = json!({ "arrows": verdict.arrows });
    let mut text = format!("arrows: {}\n", yes_no(verdict.arrows));
    if witness {
        if let Some(w) = &verdict.witness {
            json["witness"] = serde_json::to_value(w)?;
            text.push_str(&format!("witness: {}\n", serde_json::to_string(w)?));
        }
    }
    if let Some(cert) = &verdict.certificate {
        json["certificate"] = serde_json::to_value(cert)?;
        text.push_str(&format!("certificate entries: {}\n", cert.len()));
    }
    let mut o = Outcome::new(verdict.arrows, json, text);
    o.dot = Some(to_dot(&fg, verdict.witness.as_ref()));
    Ok(o)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Expected {
    pub exit: i32,
    #[serde(default)]
    pub stdout_contains: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Vector {
    pub command: Vec<String>,
    pub expected: Expected,
}

/// Runs every record; file arguments are resolved relative to the vector
/// file. An empty file has zero cases and passes.
fn run_vectors(file: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let text = read(file)?;
    let dir = file.parent().map(Path::to_path_buf).unwrap_or_default();
    let records: Vec<serde_json::Value> = if text.trim().is_empty() {
        Vec::new()
    } else if text.trim_start().starts_with('[') {
        serde_json::from_str(&text).context("vector file is not a JSON array")?
    } else {
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str)
            .collect::<std::result::Result<_, _>>()
            .context("vector file is not JSON lines")?
    };
    let mut failed = 0usize;
    for (i, raw) in records.iter().enumerate() {
        let problem = match serde_json::from_value::<Vector>(raw.clone()) {
            Err(e) => Some(format!("malformed record: {e}")),
            Ok(v) => check_vector(&v, &dir),
        };
        if let Some(p) = problem {
            failed += 1;
            writeln!(err, "vector {i}: {p}")?;
        }
    }
    writeln!(out, "vectors: {} passed, {failed} failed", records.len() - failed)?;
    Ok(if failed == 0 { 0 } else { 1 })
}

fn check_vector(v: &Vector, dir: &Path) -> Option<String> {
    if v.command.first().map(String::as_str) == Some("vectors") {
        return Some("nested vector runs are not allowed".into());
    }
    let args: Vec<String> = v
        .command
        .iter()
        .map(|a| {
            let p = dir.join(a);
            if !a.starts_with('-') && p.is_file() {
                p.to_string_lossy().into_owned()
            } else {
                a.clone()
            }
        })
        .collect();
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = run(&args, &mut stdout, &mut stderr);
    let stdout = String::from_utf8_lossy(&stdout);
    if code != v.expected.exit {
        return Some(format!(
            "{}: exit {code}, expected {}",
            v.command.join(" "),
            v.expected.exit
        ));
    }
    v.expected
        .stdout_contains
        .iter()
        .find(|s| !stdout.contains(s.as_str()))
        .map(|s| format!("{}: output lacks {s:?}", v.command.join(" ")))
}
