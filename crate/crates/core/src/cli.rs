//! Command-line front end. Exit status: 0 success or true, 1 false or no
//! solution, 2 input error, 3 search budget exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::columns::{embed_on_columns, locate_on_columns};
use crate::corpus;
use crate::error::{Error, Result};
use crate::graph::{chromatic_number, Coloring, Graph, VertexPartition};
use crate::io::{read_json, to_json};
use crate::locator::{build_column_family, build_complete_family, locate_from_coloring};
use crate::mixed::{
    build_formula_graph, mixed_color, parse_dimacs, reduce_add_cliques, MixedSpec, Variant,
};
use crate::oracle;
use crate::planar::proper_drawing;
use crate::search::Budget;
use crate::svg::render_svg;
use crate::verify::{
    gp, is_planar_drawing, is_primitive_drawing, is_proper, is_valid_drawing, min_gp_bruteforce,
    GridDrawing,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "griddraw", version, about = "Lattice grid drawings of graphs")]
struct Cli {
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Render a two-dimensional result drawing as SVG.
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
    /// Node budget for exact searches.
    #[arg(long, global = true, default_value_t = 50_000_000)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphArg {
    /// Graph JSON file.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args, Debug)]
struct SpecArgs {
    /// Number of normal colors.
    #[arg(long)]
    a: usize,
    /// Number of path colors.
    #[arg(long)]
    b: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a drawing: validity, primitivity, gp, and planarity in the plane.
    Verify {
        #[arg(long)]
        drawing: PathBuf,
    },
    /// Print the largest number of lattice points on an edge.
    Gp {
        #[arg(long)]
        drawing: PathBuf,
    },
    /// Locate a graph with gp at most q in Z^d from a proper coloring.
    Locate {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: usize,
        /// Coloring JSON; an optimal coloring is computed when absent.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Draw an all-path partition on columns in the plane.
    EmbedColumns {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        partition: PathBuf,
    },
    /// Locate a mixed partition on columns in Z^d with every edge primitive.
    LocateColumns {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Find an (a,b) mixed coloring.
    MixedColor {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Attach two cliques to every vertex.
    ReduceCliques {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Build the reduction graph of a 3-CNF formula in DIMACS format.
    FormulaGraph {
        #[arg(long)]
        cnf: PathBuf,
        /// Overrides the variant named in the file.
        #[arg(long)]
        variant: Option<Variant>,
    },
    /// Planar, primitive drawing of a planar graph with an optimal coloring.
    Proper {
        #[command(flatten)]
        graph: GraphArg,
        /// Write size metrics as JSON to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Column ranks and residue systems used for locating.
    ColumnsFamily {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        d: usize,
        /// Skip the extra primes that separate column ranks.
        #[arg(long)]
        bare: bool,
    },
    /// Reference implementations and the random test corpus.
    Oracle {
        #[arg(long, value_enum)]
        mode: OracleMode,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Box side for the min-gp search.
        #[arg(long, default_value_t = 4)]
        size: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex count for corpus mode.
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Edge probability for corpus mode.
        #[arg(long, default_value_t = 0.4)]
        p: f64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleMode {
    Mixed,
    Chromatic,
    MinGp,
    Corpus,
}

struct Ctx<'a> {
    out: Option<PathBuf>,
    svg: Option<PathBuf>,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit<T: Serialize + ?Sized>(&mut self, value: &T) -> Result<()> {
        let text = to_json(value)?;
        match &self.out {
            Some(p) => fs::write(p, text)?,
            None => self.stdout.write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn drawing(&mut self, dr: &GridDrawing) -> Result<()> {
        self.emit(dr)?;
        if let Some(path) = self.svg.clone() {
            if dr.dim() == 2 {
                fs::write(path, render_svg(dr)?)?;
            } else {
                writeln!(
                    self.stderr,
                    "note: SVG skipped for a drawing in dimension {}",
                    dr.dim()
                )?;
            }
        }
        Ok(())
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `stdout` and diagnostics to `stderr`; returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let budget = Budget::nodes(cli.budget);
    let mut ctx = Ctx {
        out: cli.out,
        svg: cli.svg,
        stdout,
        stderr,
    };
    match dispatch(cli.command, &budget, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    read_json(path)
}

fn spec_of(a: usize, b: usize) -> Result<MixedSpec> {
    MixedSpec::new(a, b)
}

fn dispatch(cmd: Command, budget: &Budget, ctx: &mut Ctx<'_>) -> Result<i32> {
    match cmd {
        Command::Verify { drawing } => {
            let dr: GridDrawing = read_json(&drawing)?;
            let valid = is_valid_drawing(&dr);
            let planar = if dr.dim() == 2 {
                Some(is_planar_drawing(&dr)?)
            } else {
                None
            };
            let proper = if dr.dim() == 2 {
                Some(is_proper(&dr)?)
            } else {
                None
            };
            ctx.emit(&json!({
                "valid": valid,
                "primitive": is_primitive_drawing(&dr),
                "gp": gp(&dr).to_string(),
                "planar": planar,
                "proper": proper,
            }))?;
            Ok(if valid { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Gp { drawing } => {
            let dr: GridDrawing = read_json(&drawing)?;
            let value: BigInt = gp(&dr);
            match &ctx.out {
                Some(p) => fs::write(p, format!("{value}\n"))?,
                None => writeln!(ctx.stdout, "{value}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Locate {
            graph,
            q,
            d,
            coloring,
        } => {
            let g = load_graph(&graph.graph)?;
            let c: Coloring = match coloring {
                Some(p) => read_json(&p)?,
                None => chromatic_number(&g, budget)?.1,
            };
            let dr = locate_from_coloring(&g, &c, q, d)?;
            ctx.drawing(&dr)?;
            Ok(EXIT_OK)
        }
        Command::EmbedColumns { graph, partition } => {
            let g = load_graph(&graph.graph)?;
            let p: VertexPartition = read_json(&partition)?;
            ctx.drawing(&embed_on_columns(&g, &p)?)?;
            Ok(EXIT_OK)
        }
        Command::LocateColumns {
            graph,
            partition,
            d,
        } => {
            let g = load_graph(&graph.graph)?;
            let p: VertexPartition = read_json(&partition)?;
            ctx.drawing(&locate_on_columns(&g, &p, d)?)?;
            Ok(EXIT_OK)
        }
        Command::MixedColor { graph, spec } => {
            let g = load_graph(&graph.graph)?;
            match mixed_color(&g, spec_of(spec.a, spec.b)?, budget)? {
                Some(c) => {
                    ctx.emit(&c)?;
                    Ok(EXIT_OK)
                }
                None => {
                    ctx.emit(&serde_json::Value::Null)?;
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::ReduceCliques { graph, spec } => {
            let g = load_graph(&graph.graph)?;
            ctx.emit(&reduce_add_cliques(&g, spec_of(spec.a, spec.b)?)?)?;
            Ok(EXIT_OK)
        }
        Command::FormulaGraph { cnf, variant } => {
            let text = fs::read_to_string(&cnf)
                .map_err(|e| Error::Input(format!("{}: {e}", cnf.display())))?;
            let (f, named) = parse_dimacs(&text)?;
            let variant = variant.or(named).ok_or_else(|| {
                Error::Input("no variant given; use --variant or a `c variant:` line".into())
            })?;
            ctx.emit(&build_formula_graph(&f, variant))?;
            Ok(EXIT_OK)
        }
        Command::Proper { graph, report } => {
            let g = load_graph(&graph.graph)?;
            let (dr, _, rep) = proper_drawing(&g, budget)?;
            ctx.drawing(&dr)?;
            if let Some(path) = report {
                fs::write(path, to_json(&rep)?)?;
            }
            Ok(EXIT_OK)
        }
        Command::ColumnsFamily { s, d, bare } => {
            let fam = if bare {
                build_column_family(s, d, &[])?
            } else {
                build_complete_family(s, d)?
            };
            ctx.emit(&fam)?;
            Ok(EXIT_OK)
        }
        Command::Oracle {
            mode,
            graph,
            a,
            b,
            size,
            seed,
            n,
            p,
        } => {
            let need_graph = || -> Result<Graph> {
                let path = graph
                    .as_ref()
                    .ok_or_else(|| Error::Input("--graph is required".into()))?;
                load_graph(path)
            };
            match mode {
                OracleMode::Mixed => {
                    let g = need_graph()?;
                    let (a, b) = a
                        .zip(b)
                        .ok_or_else(|| Error::Input("--a and --b are required".into()))?;
                    let ok = oracle::mixed_colorable(&g, a, b);
                    ctx.emit(&json!({ "colorable": ok }))?;
                    Ok(if ok { EXIT_OK } else { EXIT_FALSE })
                }
                OracleMode::Chromatic => {
                    let g = need_graph()?;
                    ctx.emit(&json!({ "chromatic_number": oracle::chromatic_number(&g) }))?;
                    Ok(EXIT_OK)
                }
                OracleMode::MinGp => {
                    let g = need_graph()?;
                    let found = min_gp_bruteforce(&g, size, budget)?;
                    ctx.emit(&json!({ "size": size, "min_gp": found }))?;
                    Ok(if found.is_some() { EXIT_OK } else { EXIT_FALSE })
                }
                OracleMode::Corpus => {
                    if !(0.0..=1.0).contains(&p) {
                        return Err(Error::Input(format!("--p {p} is not a probability")));
                    }
                    let mut rng = corpus::rng(seed);
                    ctx.emit(&corpus::random_gnp(n, p, &mut rng))?;
                    Ok(EXIT_OK)
                }
            }
        }
    }
}
