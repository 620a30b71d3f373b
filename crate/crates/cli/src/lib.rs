//! Command-line front end: graph ingestion, verbs and output rendering.

mod input;

use std::collections::BTreeMap;
use std::fmt;
use std::num::NonZeroUsize;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use edgepoly::atlas::{self, CollisionReport};
use edgepoly::verify::{self, Suite, SuiteOptions};
use edgepoly::xi::{self, LabeledParams};
use edgepoly::{
    xi_expansion, xi_lab_expansion, EdgeId, EdgeLabeling, EliminationPolicy, GeneralParams, MPoly,
    MemoMode, Multigraph, Specialization, Var, XiEngine,
};

pub use input::{parse_graph, parse_graph_file, GraphFormat};

/// Exit status for malformed input or options.
pub const EXIT_INPUT: i32 = 1;
/// Exit status when a verification or atlas check fails.
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub struct CliError {
    pub line: Option<usize>,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            line: None,
            message: message.into(),
        }
    }

    pub fn at(line: usize, message: impl Into<String>) -> Self {
        CliError {
            line: Some(line),
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl From<edgepoly::Error> for CliError {
    fn from(e: edgepoly::Error) -> Self {
        CliError::input(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    /// Canonical text, e.g. `x^2 + x*y + z`.
    #[default]
    Text,
    /// JSON.
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "edgepoly", version, about = "Exact edge elimination polynomials of multigraphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Bound on memoized subgraph results (least recently used are evicted).
    #[arg(long, global = true, env = "EDGEPOLY_CACHE_SIZE")]
    pub cache_size: Option<NonZeroUsize>,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, env = "EDGEPOLY_THREADS")]
    pub threads: Option<NonZeroUsize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file, `-` for standard input.
    #[arg(required_unless_present = "graph")]
    pub input: Option<PathBuf>,
    /// Inline graph text; `;` separates lines.
    #[arg(long, short = 'g', conflicts_with = "input")]
    pub graph: Option<String>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
    pub input_format: GraphFormat,
}

impl GraphInput {
    pub fn load(&self) -> Result<(Multigraph, Option<EdgeLabeling>), CliError> {
        match (&self.graph, &self.input) {
            (Some(text), _) => parse_graph(&text.replace(';', "\n"), self.input_format),
            (None, Some(path)) => parse_graph_file(path, self.input_format),
            (None, None) => Err(CliError::input("no graph given")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Method {
    /// Memoized deletion/contraction/extraction recurrence.
    #[default]
    Recurrence,
    /// Sum over vertex-disjoint edge set pairs (at most 24 edges).
    Expansion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Memo {
    #[default]
    Canonical,
    Exact,
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AtlasFamily {
    /// Free trees with 1 to `--max-vertices` vertices.
    Trees,
    /// Simple graphs on `--max-vertices` vertices with at most `--max-edges` edges.
    Graphs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AtlasSearch {
    /// Groups of non-isomorphic members with equal ξ.
    Xi,
    /// Groups with equal Tutte and DPT polynomials.
    TutteDpt,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print ξ(G; x, y, z), or ξ_lab when the input is labeled.
    Compute {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Memo::Canonical)]
        memo: Memo,
        /// Ignore edge labels in a labeled input.
        #[arg(long)]
        unlabeled: bool,
    },
    /// Print a classical polynomial obtained from ξ.
    Specialize {
        #[command(flatten)]
        graph: GraphInput,
        /// One of sokal, tutte, chromatic, matching, matching-gen,
        /// matching-defect, dpt, vertex-cover, independence, heilmann-lieb,
        /// zaslavsky, chain, noble-welsh-u.
        #[arg(long)]
        poly: Specialization,
    },
    /// Evaluate ξ exactly at a rational point. With `-w`, evaluate the
    /// unrestricted recurrence `w·ξ(G-e) + y·ξ(G/e) + z·ξ(G†e)` instead.
    Eval {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(short = 'x', allow_hyphen_values = true)]
        x: String,
        #[arg(short = 'y', allow_hyphen_values = true)]
        y: String,
        #[arg(short = 'z', allow_hyphen_values = true)]
        z: String,
        #[arg(short = 'w', allow_hyphen_values = true)]
        w: Option<String>,
        /// Extra bindings such as `t_a=3/2` for labeled inputs.
        #[arg(long = "bind", value_name = "VAR=VALUE")]
        bind: Vec<String>,
        /// Elimination order for `-w`: comma-separated edge ids tried first.
        #[arg(long, value_delimiter = ',', requires = "w")]
        order: Vec<u32>,
        /// Random elimination order for `-w`.
        #[arg(long, requires = "w", conflicts_with = "order")]
        order_seed: Option<u64>,
    },
    /// Run a verification suite on the built-in corpus.
    Verify {
        /// One of expansion, confluence, nonconfluence, specializations,
        /// derived, labeled, boundary, all.
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Search a graph family for members that ξ, or (Tutte, DPT), does not
    /// tell apart.
    Atlas {
        #[arg(value_enum)]
        family: AtlasFamily,
        #[arg(long, value_enum, default_value_t = AtlasSearch::Xi)]
        search: AtlasSearch,
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
        #[arg(long)]
        max_edges: Option<usize>,
    },
}

/// Rendered output and exit status of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub status: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, status: 0 }
    }
}

pub fn render_polynomial(p: &MPoly, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => format!("{}\n", p.to_text()),
        OutputFormat::Structured => json(&p.to_structured()),
    }
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::input(format!("not a rational number: `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
    if d == 0.into() {
        return Err(CliError::input(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

fn engine(cli: &Cli, memo: Memo) -> XiEngine {
    let mode = match memo {
        Memo::Canonical => MemoMode::Canonical,
        Memo::Exact => MemoMode::Exact,
        Memo::Off => MemoMode::Off,
    };
    XiEngine::with_options(mode, cli.cache_size)
}

/// Executes a parsed command. Input problems are errors; failed checks are
/// reported through [`Outcome::status`].
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Compute {
            graph,
            method,
            memo,
            unlabeled,
        } => {
            let (g, lab) = graph.load()?;
            let lab = lab.filter(|_| !unlabeled);
            let p = match (method, &lab) {
                (Method::Recurrence, None) => engine(cli, *memo).xi(&g),
                (Method::Recurrence, Some(l)) => engine(cli, *memo).xi_lab(&g, l)?,
                (Method::Expansion, None) => xi_expansion(&g)?,
                (Method::Expansion, Some(l)) => xi_lab_expansion(&g, l)?,
            };
            Ok(Outcome::ok(render_polynomial(&p, cli.format)))
        }
        Command::Specialize { graph, poly } => {
            let (g, lab) = graph.load()?;
            let p = poly.compute(&g, lab.as_ref(), &engine(cli, Memo::Canonical))?;
            Ok(Outcome::ok(render_polynomial(&p, cli.format)))
        }
        Command::Eval {
            graph,
            x,
            y,
            z,
            w,
            bind,
            order,
            order_seed,
        } => {
            let (g, lab) = graph.load()?;
            let (x, y, z) = (parse_rational(x)?, parse_rational(y)?, parse_rational(z)?);
            let mut extra: BTreeMap<Var, BigRational> = BTreeMap::new();
            for b in bind {
                let (name, value) = b
                    .split_once('=')
                    .ok_or_else(|| CliError::input(format!("expected VAR=VALUE, got `{b}`")))?;
                extra.insert(Var::new(name.trim())?, parse_rational(value)?);
            }
            let value = match w {
                None => {
                    let p = match &lab {
                        Some(l) => engine(cli, Memo::Canonical).xi_lab(&g, l)?,
                        None => engine(cli, Memo::Canonical).xi(&g),
                    };
                    let mut point = extra;
                    point.insert(Var::named("x"), x);
                    point.insert(Var::named("y"), y);
                    point.insert(Var::named("z"), z);
                    p.evaluate(&point)?
                }
                Some(w) => {
                    let w = parse_rational(w)?;
                    let policy = match order_seed {
                        Some(s) => EliminationPolicy::Seeded(*s),
                        None if !order.is_empty() => {
                            EliminationPolicy::Priority(order.iter().map(|&i| EdgeId(i)).collect())
                        }
                        None => EliminationPolicy::MaxDegreeSum,
                    };
                    match &lab {
                        None => xi::xi_general_eval(&g, &GeneralParams::new(w, x, y, z), &policy),
                        Some(l) => {
                            let params = labeled_params(l, &g, &w, &x, &y, &z, &extra)?;
                            xi::xi_lab_general_eval(&g, l, &params, &policy)?
                        }
                    }
                }
            };
            let text = rational_text(&value);
            Ok(Outcome::ok(match cli.format {
                OutputFormat::Text => format!("{text}\n"),
                OutputFormat::Structured => json(&serde_json::json!({ "value": text })),
            }))
        }
        Command::Verify {
            suite,
            max_vertices,
            trials,
            seed,
        } => {
            let opts = SuiteOptions {
                max_vertices: *max_vertices,
                trials: *trials,
                seed: *seed,
            };
            let report = verify::run_suite(*suite, &opts);
            let stdout = match cli.format {
                OutputFormat::Text => report.to_string(),
                OutputFormat::Structured => json(&report),
            };
            Ok(Outcome {
                stdout,
                status: if report.passed() { 0 } else { EXIT_VERIFY },
            })
        }
        Command::Atlas {
            family,
            search,
            max_vertices,
            max_edges,
        } => {
            let (name, members) = match family {
                AtlasFamily::Trees => (
                    format!("free trees, 1 to {max_vertices} vertices"),
                    atlas::trees_up_to(*max_vertices)?,
                ),
                AtlasFamily::Graphs => {
                    let m = max_edges.unwrap_or(max_vertices * max_vertices.saturating_sub(1) / 2);
                    (
                        format!("simple graphs, {max_vertices} vertices, at most {m} edges"),
                        atlas::enumerate_graphs(*max_vertices, m)?,
                    )
                }
            };
            let engine = engine(cli, Memo::Canonical);
            let report = match search {
                AtlasSearch::Xi => atlas::find_xi_collisions(&name, &members, &engine)?,
                AtlasSearch::TutteDpt => atlas::search_tutte_dpt(&name, &members, &engine)?,
            };
            let failed = !report.inconsistent_pairs().is_empty()
                || (*search == AtlasSearch::Xi && !report.u_undistinguished().is_empty());
            let stdout = match cli.format {
                OutputFormat::Text => atlas_text(&report),
                OutputFormat::Structured => json(&report),
            };
            Ok(Outcome {
                stdout,
                status: if failed { EXIT_VERIFY } else { 0 },
            })
        }
    }
}

/// Per-label `(w, y, z)` for the labeled unrestricted recurrence: every
/// label gets `(w, y·t_λ, z·t_λ)` with `t_λ` from the extra bindings.
fn labeled_params(
    lab: &EdgeLabeling,
    g: &Multigraph,
    w: &BigRational,
    x: &BigRational,
    y: &BigRational,
    z: &BigRational,
    extra: &BTreeMap<Var, BigRational>,
) -> Result<LabeledParams, CliError> {
    let mut per_label = BTreeMap::new();
    for l in lab.alphabet_of(g)? {
        let var = xi::label_var("t", &l);
        let t = extra
            .get(&var)
            .ok_or_else(|| CliError::input(format!("missing --bind {}=VALUE", var.ascii_name())))?;
        per_label.insert(l, (w.clone(), y * t, z * t));
    }
    Ok(LabeledParams {
        x: x.clone(),
        per_label,
    })
}

fn atlas_text(report: &CollisionReport) -> String {
    let mut out = format!(
        "family: {}\ngrouped by: {}\nsearched: {} graphs (exhaustive)\n",
        report.family,
        report.grouped_by,
        report.members_searched()
    );
    for level in &report.levels {
        out.push_str(&format!(
            "  n={:<3} members={:<6} groups={}\n",
            level.vertices, level.members, level.groups
        ));
    }
    for (i, group) in report.groups.iter().enumerate() {
        out.push_str(&format!("group {}: {}\n", i + 1, group.members.join(" ")));
        out.push_str(&format!("  key: {}\n", group.key));
        for p in &group.pairs {
            let v = |b: bool| if b { "equal" } else { "distinct" };
            out.push_str(&format!(
                "  {} vs {}: xi {}, tutte {}, dpt {}, U {}\n",
                group.members[p.first],
                group.members[p.second],
                v(p.xi_equal),
                v(p.tutte_equal),
                v(p.dpt_equal),
                v(p.u_equal)
            ));
        }
    }
    let inconsistent = report.inconsistent_pairs().len();
    let undistinguished = report.u_undistinguished().len();
    out.push_str(&format!(
        "inconsistent pairs: {inconsistent}\nxi-equal pairs not separated by U: {undistinguished}\n"
    ));
    if report.grouped_by != "xi" {
        out.push_str(&format!(
            "pairs with equal tutte and dpt but different xi: {}\n",
            report.tutte_dpt_candidates().len()
        ));
    }
    out
}
