use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hypercolor::constructions::{
    complete_uniform, regular15, split_lift, theorem3, SplitPattern, Theorem3Params,
};
use hypercolor::gap_search::{split_search, SplitSearchConfig, Target};
use hypercolor::hypergraph::incidence_graph;
use hypercolor::planar::{
    enumerate_with_codes, find_gap_face_hypergraphs, ClassSummary, Embedding,
};
use hypercolor::solver::{achromatic_number, chromatic_number, exists_complete, spectrum};
use hypercolor::{Budget, Hypergraph, Outcome, SolverConfig};
use serde::Serialize;
use serde_json::{json, Value};

/// Complete colorings of uniform hypergraphs.
#[derive(Parser)]
#[command(name = "hypercolor", version)]
struct Cli {
    /// Write the primary output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Human-readable tables instead of JSON where available.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a hypergraph family.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Decide complete colorings of a hypergraph (file or `-` for stdin).
    Solve(SolveArgs),
    /// Search for hypergraphs with a prescribed spectrum.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Sphere triangulations.
    Tri {
        #[command(subcommand)]
        action: TriAction,
    },
    /// Export to other formats.
    Export {
        #[command(subcommand)]
        format: ExportFormat,
    },
}

#[derive(Subcommand)]
enum Family {
    Theorem3 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    Regular15,
    CompleteUniform {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    SplitLift {
        /// JSON pattern {"base_m", "split", "lifts"}.
        #[arg(long)]
        pattern: PathBuf,
    },
}

#[derive(Args)]
#[group(id = "query", required = true, multiple = false)]
struct Query {
    /// Decide whether a complete t-coloring exists.
    #[arg(long, group = "query")]
    t: Option<usize>,
    #[arg(long, group = "query")]
    chi: bool,
    #[arg(long, group = "query")]
    psi: bool,
    #[arg(long, group = "query")]
    spectrum: bool,
}

#[derive(Args)]
struct SolverArgs {
    /// Search-tree node budget per decision; unlimited when absent.
    #[arg(long, env = "HYPERCOLOR_BUDGET")]
    budget: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            budget: self.budget.map_or(Budget::unlimited(), Budget::nodes),
            seed: self.seed,
            workers: self.workers.max(1),
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    input: PathBuf,
    #[command(flatten)]
    query: Query,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Subcommand)]
enum SearchKind {
    /// Lifts of a complete 3-uniform hypergraph with some vertices split.
    Split {
        #[arg(long)]
        base: usize,
        /// Comma-separated base vertices to split.
        #[arg(long, value_delimiter = ',', required = true)]
        split: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        require: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<usize>,
        /// Maximum number of candidates evaluated.
        #[arg(long, default_value_t = 200_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = 1)]
        max_hits: usize,
        /// Also write one JSON file per hit into this directory.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TriAction {
    /// All triangulation classes on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eulerian: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Write one embedding file per class plus index.json here.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Face hypergraph of an embedded triangulation.
    FaceHypergraph { embedding: PathBuf },
    /// Eulerian triangulations whose face hypergraph has a spectrum gap.
    FindGap {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "6")]
        require: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "5")]
        forbid: Vec<usize>,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

#[derive(Subcommand)]
enum ExportFormat {
    /// Incidence graph in Graphviz DOT.
    Dot { input: PathBuf },
}

/// Input problems exit 1, undecided results exit 2.
enum Status {
    Decided,
    Undecided,
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    Ok(Hypergraph::from_json(&read_input(path)?)?)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn outcome_json(t: usize, outcome: &Outcome, nodes: u64) -> Value {
    let status = match outcome {
        Outcome::Found(_) => "found",
        Outcome::Infeasible => "infeasible",
        Outcome::BudgetExhausted => "budget_exhausted",
    };
    json!({
        "t": t,
        "status": status,
        "witness": outcome.witness().map(|c| c.colors().to_vec()),
        "nodes": nodes,
    })
}

fn table(rows: &[Vec<String>]) -> String {
    let width: Vec<usize> = (0..rows[0].len())
        .map(|i| rows.iter().map(|r| r[i].len()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        s.push_str(cells.join("  ").trim_end());
        s.push('\n');
    }
    s
}

fn solve(args: &SolveArgs, pretty: bool) -> Result<(String, Status)> {
    let h = read_hypergraph(&args.input)?;
    let cfg = args.solver.config();
    let q = &args.query;
    if let Some(t) = q.t {
        let res = exists_complete(&h, t, &cfg);
        let status = match res.outcome {
            Outcome::BudgetExhausted => Status::Undecided,
            _ => Status::Decided,
        };
        return Ok((to_json(&outcome_json(t, &res.outcome, res.nodes)), status));
    }
    if q.chi {
        return Ok((format!("{}\n", chromatic_number(&h)), Status::Decided));
    }
    if q.psi {
        return match achromatic_number(&h, &cfg) {
            Ok(psi) => Ok((format!("{psi}\n"), Status::Decided)),
            Err(e) => Ok((
                to_json(&json!({ "psi": null, "error": e.to_string() })),
                Status::Undecided,
            )),
        };
    }
    let report = spectrum(&h, &cfg);
    let status = if report.unknown.is_empty() {
        Status::Decided
    } else {
        Status::Undecided
    };
    if pretty {
        let mut rows = vec![vec!["t".to_string(), "complete".to_string()]];
        let hi = report
            .feasible
            .iter()
            .chain(&report.unknown)
            .max()
            .copied()
            .unwrap_or(report.chi);
        for t in report.chi..=hi {
            let v = if report.is_feasible(t) {
                "yes"
            } else if report.is_unknown(t) {
                "unknown"
            } else {
                "no"
            };
            rows.push(vec![t.to_string(), v.to_string()]);
        }
        let head = format!(
            "chi = {}, psi = {}, interpolation {}\n",
            report.chi, report.psi, report.interpolation_holds
        );
        return Ok((head + &table(&rows), status));
    }
    Ok((to_json(&report), status))
}

fn generate(family: &Family) -> Result<Hypergraph> {
    Ok(match family {
        Family::Theorem3 { k, r } => theorem3(Theorem3Params::new(*k, *r)?),
        Family::Regular15 => regular15(),
        Family::CompleteUniform { m, k } => complete_uniform(*m, *k)?,
        Family::SplitLift { pattern } => {
            let p: SplitPattern =
                serde_json::from_str(&read_input(pattern)?).context("parsing split pattern")?;
            split_lift(&p)?
        }
    })
}

fn search(kind: &SearchKind, pretty: bool) -> Result<(String, Status)> {
    let SearchKind::Split {
        base,
        split,
        require,
        forbid,
        budget,
        seed,
        workers,
        max_hits,
        dir,
    } = kind;
    if *base > 8 {
        bail!("base order {base} is above the supported 8");
    }
    let mut cfg = SplitSearchConfig::new(
        *base,
        split.clone(),
        Target::new(require.clone(), forbid.clone()),
    );
    cfg.budget = *budget;
    cfg.seed = *seed;
    cfg.workers = (*workers).max(1);
    cfg.max_hits = Some(*max_hits);
    SplitPattern::trivial(*base, cfg.k, split.clone()).validate()?;
    let out = split_search(&cfg);
    let hits: Vec<Value> = out
        .hits
        .iter()
        .map(|hit| {
            json!({
                "pattern": hit.pattern,
                "hypergraph": hit.hypergraph().to_document(),
                "report": hit.report,
                "features": hit.features,
                "verified_by": hit.verified_by,
            })
        })
        .collect();
    if let Some(dir) = dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, hit) in hits.iter().enumerate() {
            write_file(&dir.join(format!("hit_{i}.json")), &to_json(hit))?;
        }
    }
    let status = if out.hits.is_empty() {
        Status::Undecided
    } else {
        Status::Decided
    };
    if pretty {
        let mut rows = vec![vec![
            "hit".into(),
            "n".into(),
            "m".into(),
            "chi".into(),
            "psi".into(),
            "feasible".into(),
        ]];
        for (i, hit) in out.hits.iter().enumerate() {
            let h = hit.hypergraph();
            rows.push(vec![
                i.to_string(),
                h.num_vertices().to_string(),
                h.num_edges().to_string(),
                hit.report.chi.to_string(),
                hit.report.psi.to_string(),
                format!("{:?}", hit.report.feasible),
            ]);
        }
        let head = format!(
            "{} candidates, {} restarts\n",
            out.stats.candidates, out.stats.restarts
        );
        return Ok((head + &table(&rows), status));
    }
    Ok((
        to_json(&json!({ "hits": hits, "stats": out.stats })),
        status,
    ))
}

fn tri(action: &TriAction, pretty: bool) -> Result<(String, Status)> {
    match action {
        TriAction::Enumerate {
            n,
            eulerian,
            workers,
            dir,
        } => {
            let classes: Vec<(ClassSummary, Embedding)> = enumerate_with_codes(*n, *workers)?
                .into_values()
                .enumerate()
                .map(|(i, e)| (ClassSummary::new(i, &e), e))
                .filter(|(s, _)| !*eulerian || s.eulerian)
                .collect();
            if let Some(dir) = dir {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for (s, e) in &classes {
                    write_file(&dir.join(format!("class_{:05}.txt", s.index)), &e.to_text())?;
                }
                let index: Vec<&ClassSummary> = classes.iter().map(|c| &c.0).collect();
                write_file(&dir.join("index.json"), &to_json(&index))?;
            }
            if pretty {
                let mut rows = vec![vec!["class".into(), "eulerian".into(), "degrees".into()]];
                for (s, _) in &classes {
                    let d: Vec<String> = s.degrees.iter().map(usize::to_string).collect();
                    rows.push(vec![
                        s.index.to_string(),
                        s.eulerian.to_string(),
                        d.join(" "),
                    ]);
                }
                return Ok((table(&rows), Status::Decided));
            }
            let out: Vec<Value> = classes
                .iter()
                .map(|(s, e)| {
                    let mut v = serde_json::to_value(s).expect("serializable");
                    v["rotation"] = json!(e.rotations());
                    v
                })
                .collect();
            Ok((
                to_json(&json!({ "n": n, "count": out.len(), "classes": out })),
                Status::Decided,
            ))
        }
        TriAction::FaceHypergraph { embedding } => {
            let e = Embedding::parse(&read_input(embedding)?)?;
            Ok((
                to_json(&e.face_hypergraph()?.to_document()),
                Status::Decided,
            ))
        }
        TriAction::FindGap {
            n,
            require,
            forbid,
            solver,
        } => {
            let target = Target::new(require.clone(), forbid.clone());
            let out = find_gap_face_hypergraphs(*n, &target, &solver.config())?;
            let status = if out.undecided.is_empty() {
                Status::Decided
            } else {
                Status::Undecided
            };
            if pretty {
                let mut rows = vec![vec![
                    "class".into(),
                    "chi".into(),
                    "psi".into(),
                    "feasible".into(),
                    "degrees".into(),
                ]];
                for h in &out.hits {
                    let d: Vec<String> = h.class.degrees.iter().map(usize::to_string).collect();
                    rows.push(vec![
                        h.class.index.to_string(),
                        h.report.chi.to_string(),
                        h.report.psi.to_string(),
                        format!("{:?}", h.report.feasible),
                        d.join(" "),
                    ]);
                }
                let head = format!(
                    "{} classes, {} Eulerian, {} hits\n",
                    out.classes,
                    out.eulerian,
                    out.hits.len()
                );
                return Ok((head + &table(&rows), status));
            }
            let hits: Vec<Value> = out
                .hits
                .iter()
                .map(|h| {
                    json!({
                        "class": h.class,
                        "embedding": h.embedding.to_text(),
                        "hypergraph": h.hypergraph.to_document(),
                        "report": h.report,
                    })
                })
                .collect();
            let summary = json!({
                "n": n,
                "classes": out.classes,
                "eulerian": out.eulerian,
                "hits": hits,
                "undecided": out.undecided,
            });
            Ok((to_json(&summary), status))
        }
    }
}

fn run(cli: &Cli) -> Result<Status> {
    let (text, status) = match &cli.command {
        Command::Gen { family } => (to_json(&generate(family)?.to_document()), Status::Decided),
        Command::Solve(args) => solve(args, cli.pretty)?,
        Command::Search { kind } => search(kind, cli.pretty)?,
        Command::Tri { action } => tri(action, cli.pretty)?,
        Command::Export {
            format: ExportFormat::Dot { input },
        } => (
            incidence_graph(&read_hypergraph(input)?).to_dot(),
            Status::Decided,
        ),
    };
    match &cli.out {
        Some(path) => write_file(path, &text)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(status)
}

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
    match run(&cli) {
        Ok(Status::Decided) => ExitCode::SUCCESS,
        Ok(Status::Undecided) => ExitCode::from(2),
        Err(e) => {
            let _ = writeln!(io::stderr(), "error: {e:#}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn table_aligns_columns() {
        let t = table(&[
            vec!["a".into(), "bb".into()],
            vec!["ccc".into(), "d".into()],
        ]);
        assert_eq!(t, "a    bb\nccc  d\n");
    }
}
