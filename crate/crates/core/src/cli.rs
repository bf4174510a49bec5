//! The `steinerforge` command line.
//!
//! Exit codes: 0 yes / found / all agree, 1 no / none, 2 usage or input
//! error, 3 budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::budget::Budget;
use crate::digraph::Digraph;
use crate::error::Error;
use crate::outforest::{
    decide_i_perfect_min_arcs, max_i_perfect, semicomplete_i_perfect, verify_out_forest, OutForest,
};
use crate::reductions::{
    build_linkage_kappa_gadget, build_nae_gadget, oracle_2linkage, oracle_nae3sat, split_vertices,
    to_one_perfect_gadget, CnfInstance, GadgetOutput, LinkageInstance, OnePerfectMode,
};
use crate::steiner::{is_k_cyclic, pack_cycles, DisjointMode, PackStatus, PackingCertificate, DEFAULT_CAP};
use crate::symmetric::{symmetric_kappa, symmetric_kappa_at_least};
use crate::verify::{run_suite, Suite, VerifyConfig};

pub const BUDGET_ENV: &str = "STEINERFORGE_BUDGET_SECS";

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "steinerforge", version, about = "Perfect out-forests and Steiner cycle packing in digraphs")]
struct Cli {
    /// Structured output instead of the text certificates.
    #[arg(long, global = true)]
    json: bool,
    /// Seconds allowed per solve (default 60, or $STEINERFORGE_BUDGET_SECS).
    #[arg(long, global = true, value_name = "SECS")]
    budget: Option<f64>,
    /// Maximum number of S-cycles enumerated by the exact packer.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural classes of a digraph.
    Classify { file: PathBuf },
    /// Find (or check) an i-perfect out-forest.
    Outforest(OutforestArgs),
    /// Pack S-cycles: kappa (internally disjoint) or lambda (arc-disjoint).
    Cyclepack(CyclepackArgs),
    /// Does every k-set of vertices lie on a common cycle?
    Kcyclic {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Emit a hardness gadget.
    Gadget {
        #[command(subcommand)]
        which: GadgetCommand,
        /// Write the gadget here instead of stdout.
        #[arg(long, short, global = true)]
        output: Option<PathBuf>,
    },
    /// Exhaustive oracles for the source problems.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Randomized cross-check suites.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct OutforestArgs {
    file: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    i: u8,
    #[arg(long)]
    min_arcs: Option<usize>,
    #[arg(long, value_enum, default_value_t = ForestMode::Auto)]
    mode: ForestMode,
    /// Verify this certificate instead of searching.
    #[arg(long, conflicts_with_all = ["mode"])]
    certificate: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ForestMode {
    Exact,
    Semicomplete,
    Auto,
}

#[derive(Debug, Args)]
struct CyclepackArgs {
    file: PathBuf,
    /// Terminal set, comma separated (indices or labels).
    #[arg(long)]
    set: String,
    #[arg(long, value_enum)]
    measure: Measure,
    #[arg(long)]
    at_least: Option<usize>,
    #[arg(long, value_enum, default_value_t = PackMode::Auto)]
    mode: PackMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Measure {
    Kappa,
    Lambda,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PackMode {
    Exact,
    Symmetric,
    Auto,
}

#[derive(Debug, Subcommand)]
enum GadgetCommand {
    /// Two-tree perfect out-forest gadget for a DIMACS 3-CNF.
    Nae3sat { cnf: PathBuf },
    /// 1-perfect variant of a digraph.
    Oneperfect {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: OnePerfect,
        /// Vertex index or label.
        #[arg(long)]
        target: String,
    },
    /// Internally disjoint S-cycle gadget around an Eulerian host.
    LinkageKappa(LinkageGadgetArgs),
    /// The same gadget with host vertices split, for arc-disjoint cycles.
    LinkageLambda(LinkageGadgetArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OnePerfect {
    AddSource,
    #[value(name = "add-2cycle-pendant")]
    AddTwoCyclePendant,
}

#[derive(Debug, Args)]
struct LinkageGadgetArgs {
    file: PathBuf,
    /// s1,t1,s2,t2
    #[arg(long)]
    terminals: String,
    /// Number of terminals x_1..x_k
    #[arg(long)]
    k: usize,
    /// Cycles to pack
    #[arg(long)]
    l: usize,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    Nae3sat {
        cnf: PathBuf,
    },
    Linkage {
        file: PathBuf,
        /// s1,t1,s2,t2
        #[arg(long)]
        terminals: String,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}` (expected one of {})", names.join(", "))
    })
}

/// A failure that ends the command with a non-zero code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e == Error::BudgetExceeded { EXIT_BUDGET } else { EXIT_USAGE };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        usage(format!("write failed: {e}"))
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type Outcome = Result<i32, Failure>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_YES
            } else {
                let _ = write!(std::io::stderr(), "{e}");
                EXIT_USAGE
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("steinerforge: {}", f.message);
            f.code
        }
    }
}

fn budget_duration(cli: &Cli) -> Result<Duration, Failure> {
    let secs = match cli.budget {
        Some(s) => s,
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => v.trim().parse::<f64>().map_err(|_| usage(format!("{BUDGET_ENV} is not a number: `{v}`")))?,
            Err(_) => Budget::DEFAULT_SECS as f64,
        },
    };
    Duration::try_from_secs_f64(secs).map_err(|_| usage(format!("invalid budget {secs}")))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let limit = budget_duration(cli)?;
    let budget = Budget::from_duration(limit);
    match &cli.command {
        Command::Classify { file } => {
            let d = read_digraph(file)?;
            let report = d.classify();
            if cli.json {
                writeln!(out, "{}", to_json(&report))?;
            } else {
                writeln!(out, "vertices={}\narcs={}\n{report}", d.vertex_count(), d.arc_count())?;
            }
            Ok(EXIT_YES)
        }
        Command::Outforest(a) => outforest(cli, a, budget, out),
        Command::Cyclepack(a) => cyclepack(cli, a, budget, out),
        Command::Kcyclic { file, k } => {
            let d = read_digraph(file)?;
            let yes = is_k_cyclic(&d, *k, budget)?;
            if cli.json {
                writeln!(out, "{}", json!({ "k": k, "k_cyclic": yes }))?;
            } else {
                writeln!(out, "k_cyclic={yes}")?;
            }
            Ok(if yes { EXIT_YES } else { EXIT_NO })
        }
        Command::Gadget { which, output } => gadget(cli, which, output.as_deref(), out),
        Command::Oracle { which } => oracle(cli, which, budget, out),
        Command::Verify { suite, samples, seed, max_n } => {
            let cfg = VerifyConfig { samples: *samples, seed: *seed, max_n: *max_n, per_sample: Some(limit) };
            let report = run_suite(*suite, &cfg);
            if cli.json {
                let samples: Vec<_> = report
                    .results
                    .iter()
                    .map(|r| {
                        let (outcome, detail) = match &r.outcome {
                            crate::verify::Outcome::Agree => ("agree", None),
                            crate::verify::Outcome::Disagree(w) => ("disagree", Some(w.clone())),
                            crate::verify::Outcome::Timeout => ("timeout", None),
                        };
                        json!({ "index": r.index, "instance": r.instance, "outcome": outcome, "detail": detail })
                    })
                    .collect();
                let v = json!({
                    "suite": suite.name(),
                    "samples": samples,
                    "agreements": report.agreements(),
                    "disagreements": report.disagreements(),
                    "timeouts": report.timeouts(),
                });
                writeln!(out, "{v}")?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
            Ok(if report.disagreements() > 0 {
                EXIT_NO
            } else if report.timeouts() > 0 {
                EXIT_BUDGET
            } else {
                EXIT_YES
            })
        }
    }
}

fn outforest(cli: &Cli, a: &OutforestArgs, budget: Budget, out: &mut dyn Write) -> Outcome {
    let d = read_digraph(&a.file)?;
    let i = usize::from(a.i);
    if let Some(path) = &a.certificate {
        let f = OutForest::parse_certificate(&read_text(path)?).map_err(|e| in_file(path, e))?;
        let report = verify_out_forest(&d, &f)?;
        let ok = report.is_i_perfect(i) && a.min_arcs.is_none_or(|m| report.arc_count >= m);
        if cli.json {
            writeln!(out, "{}", json!({ "valid": ok, "report": report }))?;
        } else {
            writeln!(out, "{report}")?;
        }
        return Ok(if ok { EXIT_YES } else { EXIT_NO });
    }
    let semicomplete = match a.mode {
        ForestMode::Semicomplete => {
            if a.min_arcs.is_some() {
                return Err(usage("--mode semicomplete does not take --min-arcs"));
            }
            true
        }
        ForestMode::Auto => a.min_arcs.is_none() && d.is_semicomplete(),
        ForestMode::Exact => false,
    };
    let found = if semicomplete {
        semicomplete_i_perfect(&d, i)?
    } else if let Some(m) = a.min_arcs {
        decide_i_perfect_min_arcs(&d, i, m, budget)?
    } else {
        max_i_perfect(&d, i, budget)?
    };
    let report = found.as_ref().map(|f| verify_out_forest(&d, f)).transpose()?;
    if cli.json {
        writeln!(out, "{}", json!({ "found": found.is_some(), "forest": found, "report": report }))?;
    } else {
        match (&found, &report) {
            (Some(f), Some(r)) => {
                write!(out, "{}", f.to_certificate())?;
                for line in r.to_string().lines() {
                    writeln!(out, "# {line}")?;
                }
            }
            _ => writeln!(out, "none")?,
        }
    }
    Ok(if found.is_some() { EXIT_YES } else { EXIT_NO })
}

fn cyclepack(cli: &Cli, a: &CyclepackArgs, budget: Budget, out: &mut dyn Write) -> Outcome {
    let d = read_digraph(&a.file)?;
    let s = parse_vertex_list(&d, &a.set)?;
    let mode = match a.measure {
        Measure::Kappa => DisjointMode::Internal,
        Measure::Lambda => DisjointMode::Arc,
    };
    let symmetric = match a.mode {
        PackMode::Symmetric => {
            if a.measure == Measure::Lambda {
                return Err(usage("--mode symmetric only decides kappa"));
            }
            true
        }
        PackMode::Auto => a.measure == Measure::Kappa && d.is_symmetric(),
        PackMode::Exact => false,
    };
    if a.at_least == Some(0) {
        return Err(usage("--at-least must be positive"));
    }
    let cert = if symmetric {
        match a.at_least {
            Some(l) => match symmetric_kappa_at_least(&d, &s, l, budget)? {
                Some(cert) => cert,
                // A miss still reports the exact maximum, which is below l.
                None => PackingCertificate { target: Some(l), ..symmetric_kappa(&d, &s, budget)? },
            },
            None => symmetric_kappa(&d, &s, budget)?,
        }
    } else {
        pack_cycles(&d, &s, mode, a.at_least, cli.cap, budget)?
    };
    if cli.json {
        writeln!(out, "{}", to_json(&cert))?;
    } else {
        write!(out, "{}", cert.to_text())?;
    }
    let code = match (cert.status, cert.meets_target()) {
        (PackStatus::BudgetExceeded, _) => EXIT_BUDGET,
        (_, Some(true)) => EXIT_YES,
        (_, Some(false)) => EXIT_NO,
        (PackStatus::CapExceeded, None) => {
            eprintln!("steinerforge: cycle cap {} reached; value is a lower bound", cli.cap);
            EXIT_BUDGET
        }
        (_, None) => EXIT_YES,
    };
    Ok(code)
}

fn gadget(cli: &Cli, which: &GadgetCommand, output: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let g = match which {
        GadgetCommand::Nae3sat { cnf } => build_nae_gadget(&read_cnf(cnf)?)?,
        GadgetCommand::Oneperfect { file, mode, target } => {
            let d = read_digraph(file)?;
            let t = resolve_vertex(&d, target)?;
            let (m, name) = match mode {
                OnePerfect::AddSource => (OnePerfectMode::AddSource(t), "add-source"),
                OnePerfect::AddTwoCyclePendant => (OnePerfectMode::AddTwoCyclePendant(t), "add-2cycle-pendant"),
            };
            GadgetOutput {
                digraph: to_one_perfect_gadget(&d, m)?,
                terminal_set: None,
                threshold: None,
                provenance: format!("1-perfect variant ({name} at vertex {t}) of {}", file.display()),
            }
        }
        GadgetCommand::LinkageKappa(a) => {
            let link = read_linkage(&a.file, &a.terminals)?;
            build_linkage_kappa_gadget(&link, a.k, a.l)?
        }
        GadgetCommand::LinkageLambda(a) => {
            let link = read_linkage(&a.file, &a.terminals)?;
            split_vertices(&build_linkage_kappa_gadget(&link, a.k, a.l)?)?
        }
    };
    let text = g.to_text();
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            if cli.json {
                let v = json!({
                    "output": path.display().to_string(),
                    "vertices": g.digraph.vertex_count(),
                    "arcs": g.digraph.arc_count(),
                    "threshold": g.threshold,
                    "terminals": g.terminal_set,
                    "provenance": g.provenance,
                });
                writeln!(out, "{v}")?;
            }
        }
        None => write!(out, "{text}")?,
    }
    Ok(EXIT_YES)
}

fn oracle(cli: &Cli, which: &OracleCommand, budget: Budget, out: &mut dyn Write) -> Outcome {
    match which {
        OracleCommand::Nae3sat { cnf } => {
            let inst = read_cnf(cnf)?;
            let a = oracle_nae3sat(&inst, budget)?;
            if cli.json {
                writeln!(out, "{}", json!({ "satisfiable": a.is_some(), "assignment": a }))?;
            } else {
                match &a {
                    Some(a) => {
                        let parts: Vec<String> = a
                            .iter()
                            .enumerate()
                            .map(|(i, &v)| format!("v{}={}", i + 1, if v { 'T' } else { 'F' }))
                            .collect();
                        writeln!(out, "{}", parts.join(" "))?;
                    }
                    None => writeln!(out, "none")?,
                }
            }
            Ok(if a.is_some() { EXIT_YES } else { EXIT_NO })
        }
        OracleCommand::Linkage { file, terminals } => {
            let link = read_linkage(file, terminals)?;
            let found = oracle_2linkage(&link, budget)?;
            if cli.json {
                let v = match &found {
                    Some((p1, p2)) => json!({ "linked": true, "p1": p1, "p2": p2 }),
                    None => json!({ "linked": false }),
                };
                writeln!(out, "{v}")?;
            } else {
                match &found {
                    Some((p1, p2)) => writeln!(out, "p1 {}\np2 {}", join(p1), join(p2))?,
                    None => writeln!(out, "none")?,
                }
            }
            Ok(if found.is_some() { EXIT_YES } else { EXIT_NO })
        }
    }
}

fn join(p: &[usize]) -> String {
    p.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path, e: Error) -> Failure {
    usage(format!("{}: {e}", path.display()))
}

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    Digraph::parse(&read_text(path)?).map_err(|e| in_file(path, e))
}

fn read_cnf(path: &Path) -> Result<CnfInstance, Failure> {
    CnfInstance::parse_dimacs(&read_text(path)?).map_err(|e| in_file(path, e))
}

fn read_linkage(path: &Path, terminals: &str) -> Result<LinkageInstance, Failure> {
    let d = read_digraph(path)?;
    let t = parse_vertex_list(&d, terminals)?;
    let t: [usize; 4] = t.try_into().map_err(|_| usage("--terminals takes exactly four vertices s1,t1,s2,t2"))?;
    Ok(LinkageInstance::new(d, t)?)
}

fn resolve_vertex(d: &Digraph, token: &str) -> Result<usize, Failure> {
    let token = token.trim();
    let v = match token.parse::<usize>() {
        Ok(v) => v,
        Err(_) => d.vertex_by_label(token).ok_or_else(|| usage(format!("no vertex labelled `{token}`")))?,
    };
    d.check_vertex(v)?;
    Ok(v)
}

fn parse_vertex_list(d: &Digraph, list: &str) -> Result<Vec<usize>, Failure> {
    list.split(',').filter(|s| !s.trim().is_empty()).map(|s| resolve_vertex(d, s)).collect()
}
