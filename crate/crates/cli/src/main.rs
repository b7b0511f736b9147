//! `eccentric` command-line front end.
//!
//! Exit status: 0 on success, 1 when a bound or replay check fails, 2 on
//! usage or input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use eccentric::bounds::{audit_balls, audit_balls_as, AuditClass, BoundReport, FamilyTag};
use eccentric::generators::GeneratorMetadata;
use eccentric::io::{read_graph, write_graph, GraphFormat};
use eccentric::{analyze, chain, reiman, replay, ChainSpec, Graph, LabeledGraph, Variant};

#[derive(Parser)]
#[command(name = "eccentric", version, about = "Average eccentricity toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family member.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Compute avec and evaluate every applicable bound.
    Analyze {
        path: PathBuf,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Audit ball sizes against the class thresholds.
    Audit {
        path: PathBuf,
        /// Audit against this class even if the graph is not in it.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
    },
    /// Replay the upper-bound construction and check every step.
    Replay {
        path: PathBuf,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Maximum-degree vertex for the maxdeg variant (default: the smallest one).
        #[arg(long)]
        anchor: Option<usize>,
        /// Write the full JSON trace here instead of stdout.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Analyze a range of family members and emit CSV.
    Sweep {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Comma-separated minimum degrees.
        #[arg(long, value_delimiter = ',', required = true)]
        delta: Vec<usize>,
        /// Inclusive range `A..B`; odd values are skipped.
        #[arg(long)]
        ell_range: String,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Point-line incidence graph of PG(2, q).
    Reiman {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Chain of incidence graphs.
    Chain {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        ell: usize,
        /// Graph replacing the first copy; `u`, `v` come from its sidecar.
        #[arg(long)]
        head: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct OutArgs {
    /// Output file; a `.meta.json` sidecar is written next to it.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Girth6,
    Maxdeg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Girth6,
    C4c5,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Chain,
}

enum Outcome {
    Ok,
    CheckFailed,
}

fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

fn read_input(path: &Path) -> Result<(Graph, Option<GeneratorMetadata>)> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let g = read_graph(&text).with_context(|| format!("cannot parse {}", path.display()))?;
    let side = sidecar_path(path);
    let meta = if side.exists() {
        let raw = fs::read_to_string(&side)
            .with_context(|| format!("cannot read {}", side.display()))?;
        let meta: GeneratorMetadata = serde_json::from_str(&raw)
            .with_context(|| format!("cannot parse {}", side.display()))?;
        if meta.n != g.n() || meta.m != g.m() {
            bail!("{} describes a graph with n = {}, m = {}", side.display(), meta.n, meta.m);
        }
        Some(meta)
    } else {
        None
    };
    Ok((g, meta))
}

fn family_of(meta: Option<&GeneratorMetadata>) -> Option<FamilyTag> {
    let info = &meta?.info;
    match (info.construction.as_str(), info.delta, info.ell) {
        ("chain", Some(delta), Some(ell)) if info.default_head => Some(FamilyTag::Chain { delta, ell }),
        _ => None,
    }
}

fn emit(lg: &LabeledGraph, out: &OutArgs) -> Result<()> {
    let format = match out.format {
        FormatArg::Edgelist => GraphFormat::EdgeList,
        FormatArg::Graph6 => GraphFormat::Graph6,
    };
    let text = write_graph(&lg.graph, format);
    match &out.out {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("cannot write {}", path.display()))?;
            let meta = serde_json::to_string_pretty(&lg.metadata())? + "\n";
            let side = sidecar_path(path);
            fs::write(&side, meta).with_context(|| format!("cannot write {}", side.display()))?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn load_head(path: &Path) -> Result<LabeledGraph> {
    let (g, meta) = read_input(path)?;
    let mut head = LabeledGraph::unlabeled(g, "head");
    match meta {
        Some(m) if m.designated.contains_key("u") && m.designated.contains_key("v") => {
            head.designated = m.designated;
        }
        _ => {
            let &(u, v) = head
                .graph
                .edges()
                .first()
                .ok_or_else(|| anyhow!("head graph has no edges"))?;
            head.designated.insert("u".into(), u);
            head.designated.insert("v".into(), v);
        }
    }
    Ok(head)
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| anyhow!("ell range {s:?} must look like A..B"))?;
    let a: usize = a.trim().parse().with_context(|| format!("bad range start {a:?}"))?;
    let b: usize = b.trim().parse().with_context(|| format!("bad range end {b:?}"))?;
    if a > b {
        bail!("empty ell range {s}");
    }
    Ok((a, b))
}

fn text_report(r: &BoundReport) -> String {
    let mut s = format!(
        "n = {}, delta = {}, max degree = {}, avec = {}/{}\n",
        r.n, r.delta, r.max_degree, r.avec.num, r.avec.den
    );
    for b in &r.bounds {
        let value = b.value.map_or("-".to_string(), |v| format!("{v}"));
        let status = match (b.applicable, b.slack) {
            (false, _) => "n/a".to_string(),
            (true, Some(slack)) => format!("slack {slack}"),
            (true, None) => String::new(),
        };
        s += &format!("  {:<18} {:>24}  {}\n", b.name.as_str(), value, status);
    }
    for v in &r.violations {
        s += &format!("VIOLATION {v}\n");
    }
    s
}

fn run(cli: Cli) -> Result<Outcome> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gen(GenCommand::Reiman { q, out: o }) => {
            emit(&reiman(q)?, &o)?;
            Ok(Outcome::Ok)
        }
        Command::Gen(GenCommand::Chain { delta, ell, head, out: o }) => {
            let mut spec = ChainSpec::new(delta, ell);
            if let Some(p) = head {
                spec = spec.with_head(load_head(&p)?);
            }
            emit(&chain(&spec)?, &o)?;
            Ok(Outcome::Ok)
        }
        Command::Analyze { path, json, csv } => {
            let (g, meta) = read_input(&path)?;
            let r = analyze(&g, family_of(meta.as_ref()))?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
            } else if csv {
                writeln!(out, "{}\n{}", BoundReport::csv_header(), r.csv_row())?;
            } else {
                write!(out, "{}", text_report(&r))?;
            }
            Ok(if r.pass() { Outcome::Ok } else { Outcome::CheckFailed })
        }
        Command::Audit { path, class } => {
            let (g, _) = read_input(&path)?;
            let a = match class {
                None => audit_balls(&g)?,
                Some(ClassArg::Girth6) => audit_balls_as(&g, AuditClass::Girth6)?,
                Some(ClassArg::C4c5) => audit_balls_as(&g, AuditClass::C4c5Free)?,
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&a)?)?;
            Ok(if a.pass { Outcome::Ok } else { Outcome::CheckFailed })
        }
        Command::Replay { path, variant, anchor, trace } => {
            let (g, _) = read_input(&path)?;
            let variant = match variant {
                VariantArg::Girth6 => Variant::Girth6,
                VariantArg::Maxdeg => Variant::Maxdeg,
            };
            let anchor = match (variant, anchor) {
                (Variant::Maxdeg, None) => (0..g.n()).find(|&v| g.degree(v) == g.max_degree()),
                (_, a) => a,
            };
            let t = replay(&g, variant, anchor)?;
            let json = serde_json::to_string_pretty(&t)? + "\n";
            match trace {
                Some(p) => {
                    fs::write(&p, json).with_context(|| format!("cannot write {}", p.display()))?;
                    for c in &t.checks {
                        let tag = if c.pass { "PASS" } else { "FAIL" };
                        writeln!(out, "{tag} {}", c.name)?;
                    }
                    writeln!(out, "overall {}", if t.pass { "PASS" } else { "FAIL" })?;
                }
                None => write!(out, "{json}")?,
            }
            Ok(if t.pass { Outcome::Ok } else { Outcome::CheckFailed })
        }
        Command::Sweep { family: FamilyArg::Chain, delta, ell_range, csv } => {
            let (a, b) = parse_range(&ell_range)?;
            let mut jobs: Vec<(usize, usize)> = delta
                .iter()
                .flat_map(|&d| (a..=b).filter(|l| l % 2 == 0 && *l >= 2).map(move |l| (d, l)))
                .collect();
            jobs.sort_unstable();
            jobs.dedup();
            if jobs.is_empty() {
                bail!("ell range {ell_range} contains no even value >= 2");
            }
            let rows: Vec<(usize, usize, BoundReport)> = jobs
                .par_iter()
                .map(|&(d, l)| -> Result<_> {
                    let g = chain(&ChainSpec::new(d, l))?.graph;
                    Ok((d, l, analyze(&g, Some(FamilyTag::Chain { delta: d, ell: l }))?))
                })
                .collect::<Result<_>>()?;
            let mut text = String::from(BoundReport::csv_header());
            text.push('\n');
            for (_, _, r) in &rows {
                text += &r.csv_row();
                text.push('\n');
            }
            match csv {
                Some(p) => fs::write(&p, text).with_context(|| format!("cannot write {}", p.display()))?,
                None => write!(out, "{text}")?,
            }
            let pass = rows.iter().all(|(_, _, r)| r.pass());
            Ok(if pass { Outcome::Ok } else { Outcome::CheckFailed })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            let msg = format!("{e:#}").replace('\n', " ");
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
