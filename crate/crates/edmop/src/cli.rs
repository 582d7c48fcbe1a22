//! Command-line surface.
//!
//! Exit codes: 0 success, 1 verification failed or search refuted, 2 usage,
//! parse or IO error, 3 budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use edmop_core::bounds::{counting_check, k7_minus_e_decomposition, BoundsError};
use edmop_core::color::chromatic_number_exact;
use edmop_core::doubling::{doubling_family, DoublingError};
use edmop_core::extension::{extend_to, ExtensionError};
use edmop_core::gn::gn_family;
use edmop_core::thickness::{outerthickness_exact, SearchError, SearchOutcome};
use edmop_core::verify::{verify_family, VerifyOptions};
use edmop_core::{certify_mop, Family};

use crate::config::{parse_budgets, CliConfig, ExportFormat, BUDGETS_VAR};
use crate::dot::emit_dot;
use crate::format::{emit_family, parse_family};
use crate::graph6::{emit_graph6, parse_graph6};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "edmop", version, about = "Build and check families of edge-disjoint maximal outerplanar graphs")]
struct Cli {
    /// Write the primary output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Budget overrides as `key=value,...`; applied after the environment variable.
    #[arg(long, global = true, value_name = "SPEC")]
    budgets: Option<String>,
    /// Reject input files whose edges are not written in canonical order.
    #[arg(long, global = true)]
    strict_input: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a family from one of the two constructions.
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Grow a family one vertex at a time.
    Extend {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        to: usize,
        /// Verify every intermediate family.
        #[arg(long)]
        strict: bool,
    },
    /// Check a family and print a report.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Accept members that are outerplanar without being maximal.
        #[arg(long)]
        allow_nonmaximal: bool,
    },
    /// Edge-count feasibility of t maximal outerplanar graphs on n vertices.
    Bounds {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
    },
    /// Print a stored example family.
    Gallery { name: GalleryName },
    /// Exhaustive searches.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Exact chromatic number of the union of a family.
    Color {
        #[arg(long)]
        input: PathBuf,
    },
    /// Convert a family to another format.
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: FormatArg,
        /// Export only this member.
        #[arg(long)]
        member: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum Construction {
    /// Rotated copies of graph zero: t members on 4t vertices.
    Gn {
        #[arg(long)]
        t: usize,
        /// Extend the result to this order.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        strict: bool,
    },
    /// Doubling construction: 2^s members on 2^(s+2) vertices.
    Doubling {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Debug, Subcommand)]
enum SearchKind {
    /// Split the union of a family into k outerplanar graphs.
    Ot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Node cap for this search.
        #[arg(long, value_name = "NODES")]
        budget: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GalleryName {
    /// K7 minus an edge as a maximal and a non-maximal outerplanar graph.
    K7e,
    /// K8 minus a 2-matching as two maximal outerplanar graphs.
    K8m,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
    Dot,
}

impl From<FormatArg> for ExportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => ExportFormat::Edgelist,
            FormatArg::Graph6 => ExportFormat::Graph6,
            FormatArg::Dot => ExportFormat::Dot,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("edmop: {stderr}\n") }
    }
}

/// Runs the command line `args` (program name first). `env_budgets` is the
/// value of the budgets environment variable, if set.
pub fn run<I, T>(args: I, env_budgets: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => return Outcome::ok(e.to_string()),
        Err(e) => return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: e.render().to_string() },
    };
    let mut cfg = CliConfig { output: cli.output.clone(), ..CliConfig::default() };
    for (source, spec) in [(BUDGETS_VAR, env_budgets), ("--budgets", cli.budgets.as_deref())] {
        if let Some(spec) = spec {
            match parse_budgets(spec, cfg.budgets) {
                Ok(b) => cfg.budgets = b,
                Err(e) => return Outcome::fail(EXIT_USAGE, format_args!("{source}: {e}")),
            }
        }
    }
    let mut out = dispatch(cli, &mut cfg);
    if let Some(path) = &cfg.output {
        if out.code == EXIT_OK || !out.stdout.is_empty() {
            if let Err(e) = std::fs::write(path, &out.stdout) {
                return Outcome::fail(EXIT_USAGE, format_args!("{}: {e}", path.display()));
            }
            out.stdout.clear();
        }
    }
    out
}

fn read_family(path: &Path, strict: bool) -> Result<Family, Outcome> {
    let text =
        if path == Path::new("-") { std::io::read_to_string(std::io::stdin()) } else { std::fs::read_to_string(path) }
            .map_err(|e| Outcome::fail(EXIT_USAGE, format_args!("{}: {e}", path.display())))?;
    let looks_like_family = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("family"));
    if looks_like_family {
        parse_family(&text, strict).map_err(|e| Outcome::fail(EXIT_USAGE, format_args!("{}: {e}", path.display())))
    } else {
        let g = parse_graph6(text.trim())
            .map_err(|e| Outcome::fail(EXIT_USAGE, format_args!("{}: {e}", path.display())))?;
        Ok(Family::from_graphs(g.order(), vec![g]).expect("single member"))
    }
}

fn extension_exit(e: &ExtensionError) -> i32 {
    match e {
        ExtensionError::Shrinking { .. } => EXIT_USAGE,
        ExtensionError::At { source, .. } => extension_exit(source),
        _ => EXIT_FAILED,
    }
}

fn grow(f: Family, n: Option<usize>, strict: bool) -> Outcome {
    let f = match n {
        Some(n) => match extend_to(&f, n, strict) {
            Ok(f) => f,
            Err(e) => return Outcome::fail(extension_exit(&e), e),
        },
        None => f,
    };
    Outcome::ok(emit_family(&f))
}

fn dispatch(cli: Cli, cfg: &mut CliConfig) -> Outcome {
    let strict_input = cli.strict_input;
    match cli.command {
        Command::Construct { kind: Construction::Gn { t, n, strict } } => {
            cfg.strict = strict;
            if t == 0 {
                return Outcome::fail(EXIT_USAGE, "t must be at least 1");
            }
            if let Some(n) = n.filter(|&n| n < 4 * t) {
                return Outcome::fail(EXIT_USAGE, format_args!("target order {n} is below 4t = {}", 4 * t));
            }
            match gn_family(t) {
                Ok(f) => grow(f, n, cfg.strict),
                Err(e) => Outcome::fail(EXIT_FAILED, e),
            }
        }
        Command::Construct { kind: Construction::Doubling { s, n, strict } } => {
            cfg.strict = strict;
            let order = 1usize << (s.min(cfg.budgets.doubling_max_s) + 2);
            match doubling_family(s, &cfg.budgets) {
                Ok(_) if n.is_some_and(|n| n < order) => {
                    Outcome::fail(EXIT_USAGE, format_args!("target order is below {order}"))
                }
                Ok(f) => grow(f, n, cfg.strict),
                Err(e @ DoublingError::LevelTooHigh { .. }) => Outcome::fail(EXIT_BUDGET, e),
                Err(e) => Outcome::fail(EXIT_FAILED, e),
            }
        }
        Command::Extend { input, to, strict } => {
            cfg.strict = strict;
            match read_family(&input, strict_input) {
                Ok(f) => grow(f, Some(to), cfg.strict),
                Err(o) => o,
            }
        }
        Command::Verify { input, allow_nonmaximal } => {
            let f = match read_family(&input, strict_input) {
                Ok(f) => f,
                Err(o) => return o,
            };
            let report = verify_family(&f, &VerifyOptions { allow_nonmaximal, budgets: cfg.budgets });
            let code = if report.is_valid() { EXIT_OK } else { EXIT_FAILED };
            Outcome { code, stdout: report.to_string(), stderr: String::new() }
        }
        Command::Bounds { t, n } => match counting_check(t, n) {
            Ok(r) => Outcome {
                code: if r.feasible() { EXIT_OK } else { EXIT_FAILED },
                stdout: r.to_string(),
                stderr: String::new(),
            },
            Err(e @ (BoundsError::ZeroT | BoundsError::TooFewVertices(_))) => Outcome::fail(EXIT_USAGE, e),
            Err(e) => Outcome::fail(EXIT_FAILED, e),
        },
        Command::Gallery { name } => match name {
            GalleryName::K7e => Outcome::ok(emit_family(&k7_minus_e_decomposition())),
            GalleryName::K8m => match doubling_family(1, &cfg.budgets) {
                Ok(f) => Outcome::ok(emit_family(&f)),
                Err(e @ DoublingError::LevelTooHigh { .. }) => Outcome::fail(EXIT_BUDGET, e),
                Err(e) => Outcome::fail(EXIT_FAILED, e),
            },
        },
        Command::Search { kind: SearchKind::Ot { input, k, budget } } => {
            let f = match read_family(&input, strict_input) {
                Ok(f) => f,
                Err(o) => return o,
            };
            if let Some(nodes) = budget {
                cfg.budgets.search_max_nodes = nodes;
            }
            search(&f, k, cfg)
        }
        Command::Color { input } => {
            let f = match read_family(&input, strict_input) {
                Ok(f) => f,
                Err(o) => return o,
            };
            match chromatic_number_exact(&f.union(), &cfg.budgets) {
                Ok(chi) => Outcome::ok(format!("chromatic_number {chi}\n")),
                Err(e) => Outcome::fail(EXIT_BUDGET, e),
            }
        }
        Command::Export { input, format, member } => {
            cfg.format = format.into();
            let f = match read_family(&input, strict_input) {
                Ok(f) => f,
                Err(o) => return o,
            };
            export(&f, cfg.format, member)
        }
    }
}

fn search(f: &Family, k: usize, cfg: &CliConfig) -> Outcome {
    let g = f.union();
    match outerthickness_exact(&g, k, &cfg.budgets) {
        Ok(SearchOutcome::Decomposition { parts, nodes }) => {
            let parts = Family::from_graphs(g.order(), parts).expect("parts share the input order");
            Outcome::ok(format!("# verdict decomposable\n# nodes {nodes}\n{}", emit_family(&parts)))
        }
        Ok(SearchOutcome::Refuted { nodes }) => Outcome {
            code: EXIT_FAILED,
            stdout: format!("# verdict refuted\n# nodes {nodes}\n"),
            stderr: String::new(),
        },
        Err(e @ SearchError::NoParts) => Outcome::fail(EXIT_USAGE, e),
        Err(e) => Outcome::fail(EXIT_BUDGET, e),
    }
}

/// Every member in turn, or just `member`.
pub fn export_family(f: &Family, format: ExportFormat, member: Option<usize>) -> Result<String, String> {
    let picked: Vec<usize> = match member {
        Some(k) if k < f.len() => vec![k],
        Some(k) => return Err(format!("member {k} out of range for {} members", f.len())),
        None => (0..f.len()).collect(),
    };
    let mut out = String::new();
    for k in picked {
        let g = f.member(k);
        match format {
            ExportFormat::Edgelist => {
                writeln!(out, "# graph {k}").unwrap();
                for e in g.edges() {
                    writeln!(out, "{} {}", e.lo(), e.hi()).unwrap();
                }
            }
            ExportFormat::Graph6 => {
                writeln!(out, "{}", emit_graph6(g).map_err(|e| e.to_string())?).unwrap();
            }
            ExportFormat::Dot => {
                let cert = certify_mop(g).ok();
                out.push_str(&emit_dot(g, cert.as_ref(), &format!("member_{k}")));
            }
        }
    }
    Ok(out)
}

fn export(f: &Family, format: ExportFormat, member: Option<usize>) -> Outcome {
    match export_family(f, format, member) {
        Ok(text) => Outcome::ok(text),
        Err(e) => Outcome::fail(EXIT_USAGE, e),
    }
}
