//! Command-line front end.
//!
//! Exit codes: 0 success (or a valid coloring for `verify`), 1 invalid
//! coloring, 2 input or parse error, 3 exact-search budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coloring::{validate_coloring, HamColoring};
use crate::detour::DetourProfile;
use crate::exact::{exact_hc, ExactError, SearchBudget};
use crate::export::{to_dot, to_edge_csv};
use crate::families::{gen_path, gen_random_block_graph, gen_star, gen_symmetric, gen_union, SymmetricSpec};
use crate::formulas::{family_hc, lower_bound, FamilyKind};
use crate::graph::{BlockGraph, GraphFile, GraphMeta};
use crate::pipeline::{auto_color, sym_row, SymRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "blockhc", about = "Hamiltonian colorings of block graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph as JSON.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Print the detour profile and the lower bound.
    Bound { graph: PathBuf },
    /// Color a graph, choosing the best available construction.
    Color {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also print the vertex ordering behind the coloring.
        #[arg(long)]
        emit_ordering: bool,
    },
    /// Check a coloring against every vertex pair.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Exact hamiltonian chromatic number by exhaustive search.
    Exact {
        graph: PathBuf,
        #[arg(long, default_value_t = 10)]
        max_p: usize,
        /// Seconds.
        #[arg(long)]
        time_limit: Option<f64>,
    },
    /// Evaluate a closed-form value.
    Formula {
        #[command(subcommand)]
        family: FormulaFamily,
    },
    /// Tabulate symmetric block graphs as CSV.
    Table {
        #[arg(long, value_enum, default_value_t = TableFamily::Sym)]
        family: TableFamily,
        /// `M1-M2:K1-K2:D1-D2` ranges for block size, cut degree, diameter.
        #[arg(long, default_value = "3-5:2-4:3-7")]
        grid: String,
        #[arg(long, default_value_t = 5000)]
        max_p: usize,
    },
    /// Render a graph (optionally with a coloring).
    Export {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// One DOT cluster per block.
        #[arg(long)]
        clusters: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFamily {
    Sym,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Args)]
struct SymArgs {
    #[arg(long)]
    block_size: usize,
    #[arg(long)]
    cut_degree: usize,
    #[arg(long)]
    diameter: usize,
}

#[derive(Debug, Subcommand)]
enum GenFamily {
    /// Symmetric block graph sym(m, κ, d).
    Sym {
        #[command(flatten)]
        params: SymArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// One-point union of k copies of K_n.
    Union {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Star K_{1,n}.
    Star {
        /// Number of leaves.
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Path on n vertices.
    Path {
        /// Number of vertices.
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Seeded random block graph.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        max_p: usize,
        #[arg(long, default_value_t = 4)]
        max_block_size: usize,
        #[arg(long, default_value_t = 3)]
        max_cut_degree: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum FormulaFamily {
    /// Symmetric block graph sym(m, κ, d).
    Sym {
        #[command(flatten)]
        params: SymArgs,
    },
    /// One-point union of k copies of K_n.
    Union {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
    },
    /// Star K_{1,n}.
    Star {
        #[arg(short)]
        n: usize,
    },
    /// Path on n vertices.
    Path {
        #[arg(short)]
        n: usize,
    },
}

/// Failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::input(e.to_string())
}

fn load_graph(path: &Path) -> Result<(BlockGraph, Option<GraphMeta>), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let file = GraphFile::from_json(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let g = file.to_graph().map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Ok((g, file.meta))
}

fn load_coloring(path: &Path) -> Result<HamColoring, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    HamColoring::from_json(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(io_err),
        None => out.write_all(text.as_bytes()).map_err(io_err),
    }
}

fn sym_spec(a: &SymArgs) -> Result<SymmetricSpec, Failure> {
    SymmetricSpec::new(a.block_size, a.cut_degree, a.diameter).map_err(|e| Failure::input(e.to_string()))
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::input(format!("bad range {s:?}, expected A-B or A"));
    let (a, b) = match s.split_once('-') {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Gen { family } => cmd_gen(family, out),
        Command::Bound { graph } => {
            let (g, _) = load_graph(&graph)?;
            let profile = DetourProfile::compute(&g);
            let mut json = profile.to_json();
            json["p"] = g.order().into();
            json["lower_bound"] = lower_bound(&g, &profile).into();
            writeln!(out, "{json}").map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Color { graph, output, emit_ordering } => {
            let (g, meta) = load_graph(&graph)?;
            let result = auto_color(&g, meta.as_ref());
            let json = result.coloring.to_json() + "\n";
            // coloring JSON to the file or stdout; the summary to stdout or stderr
            let report: &mut dyn Write = match &output {
                Some(path) => {
                    fs::write(path, &json).map_err(io_err)?;
                    out
                }
                None => {
                    out.write_all(json.as_bytes()).map_err(io_err)?;
                    err
                }
            };
            writeln!(
                report,
                "span {} lower_bound {} method {} status {}",
                result.span(),
                result.lower_bound,
                serde_json::to_string(&result.method).unwrap_or_default().trim_matches('"'),
                result.status()
            )
            .map_err(io_err)?;
            if emit_ordering {
                writeln!(report, "ordering {}", serde_json::to_string(&result.ordering).unwrap())
                    .map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { graph, coloring } => {
            let (g, _) = load_graph(&graph)?;
            let c = load_coloring(&coloring)?;
            let violations =
                validate_coloring(&g, &c.colors).map_err(|e| Failure::input(e.to_string()))?;
            if violations.is_empty() {
                writeln!(out, "valid span {}", c.span()).map_err(io_err)?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "invalid: {} violating pairs", violations.len()).map_err(io_err)?;
                for v in &violations {
                    writeln!(
                        out,
                        "  ({}, {}): D = {}, |c(u) - c(v)| = {}, short by {}",
                        v.u, v.v, v.distance, v.color_gap, v.deficit
                    )
                    .map_err(io_err)?;
                }
                Ok(EXIT_INVALID)
            }
        }
        Command::Exact { graph, max_p, time_limit } => {
            let (g, _) = load_graph(&graph)?;
            let budget = SearchBudget {
                max_p,
                time_limit: time_limit.map(Duration::from_secs_f64),
                ..SearchBudget::default()
            };
            match exact_hc(&g, &budget) {
                Ok(res) => {
                    writeln!(out, "hc {}", res.value).map_err(io_err)?;
                    writeln!(out, "lower_bound {} gap {}", res.lower_bound, res.bound_gap())
                        .map_err(io_err)?;
                    writeln!(out, "witness {}", res.witness.to_json()).map_err(io_err)?;
                    Ok(EXIT_OK)
                }
                Err(e @ ExactError::BudgetExceeded(_)) => {
                    Err(Failure { code: EXIT_BUDGET, message: e.to_string() })
                }
                Err(e) => Err(Failure::input(e.to_string())),
            }
        }
        Command::Formula { family } => {
            let (kind, label) = match &family {
                FormulaFamily::Sym { params } => {
                    let spec = sym_spec(params)?;
                    (FamilyKind::Symmetric(spec), format!("sym block_size={} cut_degree={} diameter={}", spec.m, spec.kappa, spec.d))
                }
                FormulaFamily::Union { n, k } => (FamilyKind::Union { n: *n, k: *k }, format!("union n={n} k={k}")),
                FormulaFamily::Star { n } => (FamilyKind::Star { n: *n }, format!("star n={n}")),
                FormulaFamily::Path { n } => (FamilyKind::Path { p: *n }, format!("path n={n}")),
            };
            let value = family_hc(kind).map_err(|e| Failure::input(e.to_string()))?;
            if let Some(note) = &value.advisory {
                writeln!(err, "warning: {note}").map_err(io_err)?;
            }
            writeln!(out, "{label}").map_err(io_err)?;
            writeln!(out, "{}", value.value).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Table { family: TableFamily::Sym, grid, max_p } => {
            let parts: Vec<&str> = grid.split(':').collect();
            let [m, k, d] = parts.as_slice() else {
                return Err(Failure::input(format!("bad grid {grid:?}, expected M1-M2:K1-K2:D1-D2")));
            };
            let (m, k, d) = (parse_range(m)?, parse_range(k)?, parse_range(d)?);
            writeln!(out, "{}", SymRow::CSV_HEADER).map_err(io_err)?;
            for bm in m.0..=m.1 {
                for kappa in k.0..=k.1 {
                    for dd in d.0..=d.1 {
                        let Ok(spec) = SymmetricSpec::new(bm, kappa, dd) else { continue };
                        if dd < 3 || crate::formulas::sym_order_count(&spec).map_or(true, |p| p as usize > max_p) {
                            continue;
                        }
                        let row = sym_row(spec).map_err(|e| Failure::input(e.to_string()))?;
                        writeln!(out, "{}", row.to_csv()).map_err(io_err)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Export { graph, format, coloring, clusters, output } => {
            let (g, meta) = load_graph(&graph)?;
            let coloring = coloring.as_deref().map(load_coloring).transpose()?;
            let text = match format {
                Format::Dot => to_dot(&g, coloring.as_ref(), clusters),
                Format::Csv => to_edge_csv(&g),
                Format::Json => {
                    let mut file = g.to_file();
                    file.meta = meta;
                    file.to_json() + "\n"
                }
            };
            emit(&text, output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_gen(family: GenFamily, out: &mut dyn Write) -> Outcome {
    let bad = |e: crate::families::FamilyError| Failure::input(e.to_string());
    let (g, meta, output) = match family {
        GenFamily::Sym { params, output } => {
            let spec = sym_spec(&params)?;
            let (g, _) = gen_symmetric(spec).map_err(bad)?;
            let meta = GraphMeta::Sym { block_size: spec.m, cut_degree: spec.kappa, diameter: spec.d };
            (g, meta, output)
        }
        GenFamily::Union { n, k, output } => (gen_union(n, k).map_err(bad)?, GraphMeta::Union { n, k }, output),
        GenFamily::Star { n, output } => (gen_star(n).map_err(bad)?, GraphMeta::Star { leaves: n }, output),
        GenFamily::Path { n, output } => (gen_path(n).map_err(bad)?, GraphMeta::Path { p: n }, output),
        GenFamily::Random { seed, max_p, max_block_size, max_cut_degree, output } => {
            let g = gen_random_block_graph(seed, max_p, max_block_size, max_cut_degree);
            (g, GraphMeta::Random { seed, max_p }, output)
        }
    };
    let text = GraphFile::with_meta(&g, meta).to_json() + "\n";
    emit(&text, output.as_deref(), out)?;
    Ok(EXIT_OK)
}
