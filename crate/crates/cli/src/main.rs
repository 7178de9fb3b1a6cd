use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use weakrep::construct::{
    color_forest_2independent, color_nearly_2independent, decompose_forest_2independent, decompose_girth5_outerplanar,
    represent_triangle_free_outerplanar, DecomposeMode,
};
use weakrep::cube::{lift_cubes, to_obj, verify_cube_contacts};
use weakrep::disk::{grid_disk_oracle, represent_degree2_contractible, verify_disk};
use weakrep::interval::{decide_interval, grid_oracle_interval, to_threshold_coloring, IntervalDecision};
use weakrep::io::Document;
use weakrep::outerplanar::outer_embedding;
use weakrep::rational::parse_q;
use weakrep::report::GridOutcome;
use weakrep::svg::{render_disk_svg, render_interval_svg};
use weakrep::work::WorkBound;
use weakrep::LabeledGraph;

mod gallery;

#[derive(Parser)]
#[command(name = "weakrep", version, about = "Weak unit interval and disk representations of near/far labeled graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Svg,
    Txt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Triangle-free outerplanar pipeline (diameter 2).
    TriangleFree,
    /// Forest plus 2-independent set (diameter 1).
    Forest,
    /// Forest plus nearly 2-independent set, read from --decomposition (diameter 3).
    Nearly,
    /// Girth-5 outerplanar decomposition (diameter 1).
    Girth5,
}

#[derive(Subcommand)]
enum Command {
    /// Decide interval representability (exact by default).
    Solve {
        graph: PathBuf,
        /// Use the bounded grid search instead of the exact solver.
        #[arg(long)]
        grid: bool,
        #[arg(long, default_value_t = 8)]
        max_color: u32,
        /// Emit an integer threshold coloring instead of rational coordinates.
        #[arg(long)]
        coloring: bool,
    },
    /// Build an interval representation with one of the constructive methods.
    ConstructInterval {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::TriangleFree)]
        method: Method,
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
    /// Build a disk representation at diameter 2.
    ConstructDisk {
        graph: PathBuf,
        /// Fall back to a grid search of this radius when the graph is not
        /// degree-2 contractible.
        #[arg(long)]
        grid_radius: Option<i64>,
    },
    /// Check a representation, coloring, decomposition or cube scene.
    Verify {
        graph: PathBuf,
        document: PathBuf,
        /// Override the diameter stored in an interval document.
        #[arg(long)]
        diameter: Option<String>,
        /// For cube scenes, also require non-adjacent cubes not to touch.
        #[arg(long)]
        check_nonedges: bool,
    },
    /// Find a forest / 2-independent decomposition.
    Decompose {
        graph: PathBuf,
        #[arg(long)]
        greedy: bool,
        #[arg(long, default_value_t = 24)]
        exact_limit: usize,
    },
    /// Write the instance gallery into a directory.
    Gallery {
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Lift a square contact drawing into a cube contact scene.
    LiftCubes {
        squares: PathBuf,
        coloring: PathBuf,
        #[arg(long, default_value = "1/2")]
        eps: String,
    },
    /// Draw an interval or disk representation.
    ExportSvg { graph: PathBuf, document: PathBuf },
}

/// Input problems exit with 2, negative answers with 1.
enum Failure {
    Usage(anyhow::Error),
    Negative(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Negative(e.into())
    }
}

fn usage<T>(r: anyhow::Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::Usage)
}

fn read_graph(path: &Path) -> Result<LabeledGraph, Failure> {
    usage(
        fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .and_then(|t| LabeledGraph::from_text(&t).with_context(|| format!("parsing {}", path.display()))),
    )
}

fn read_document(path: &Path) -> Result<Document, Failure> {
    usage(
        fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .and_then(|t| Document::from_json(&t).with_context(|| format!("parsing {}", path.display()))),
    )
}

struct Output {
    text: String,
    ok: bool,
}

fn emit(cli: &Cli, out: Output) -> Result<ExitCode, Failure> {
    match &cli.output {
        Some(path) => usage(fs::write(path, &out.text).with_context(|| format!("writing {}", path.display())))?,
        None => print!("{}", out.text),
    }
    Ok(if out.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn render(cli: &Cli, g: &LabeledGraph, doc: Document) -> Result<String, Failure> {
    Ok(match (cli.format, &doc) {
        (Format::Svg, Document::Interval(rep)) => render_interval_svg(g, rep)?,
        (Format::Svg, Document::Disk(rep)) => render_disk_svg(g, rep)?,
        (Format::Svg, _) => return Err(Failure::Usage(anyhow!("only interval and disk documents can be drawn"))),
        _ => doc.to_json(),
    })
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let bound = WorkBound::from_env();
    match &cli.command {
        Command::Solve { graph, grid, max_color, coloring } => {
            let g = read_graph(graph)?;
            let rep = if *grid {
                match grid_oracle_interval(&g, *max_color, bound)? {
                    GridOutcome::Sat(w) => Some(w.to_interval_rep()),
                    GridOutcome::UnknownUnsat => None,
                }
            } else {
                match decide_interval(&g) {
                    IntervalDecision::Sat(rep) => Some(rep),
                    IntervalDecision::Unsat => None,
                }
            };
            let Some(rep) = rep else {
                return emit(cli, Output { text: Document::Unsat.to_json(), ok: false });
            };
            let doc = if *coloring { Document::Coloring(to_threshold_coloring(&g, &rep)?) } else { Document::Interval(rep) };
            let text = render(cli, &g, doc)?;
            emit(cli, Output { text, ok: true })
        }
        Command::ConstructInterval { graph, method, decomposition } => {
            let g = read_graph(graph)?;
            let dec = match decomposition {
                Some(path) => match read_document(path)? {
                    Document::Decomposition(d) => Some(d),
                    _ => return Err(Failure::Usage(anyhow!("{} is not a decomposition", path.display()))),
                },
                None => None,
            };
            let rep = match method {
                Method::TriangleFree => represent_triangle_free_outerplanar(&g)?,
                Method::Forest => {
                    let d = match dec {
                        Some(d) => d,
                        None => decompose_forest_2independent(&g, DecomposeMode::default())?
                            .ok_or_else(|| anyhow!("no forest / 2-independent decomposition exists"))?,
                    };
                    color_forest_2independent(&g, &d)?
                }
                Method::Nearly => {
                    let d = dec.ok_or_else(|| Failure::Usage(anyhow!("--decomposition is required for this method")))?;
                    color_nearly_2independent(&g, &d)?
                }
                Method::Girth5 => {
                    let emb = outer_embedding(&g).ok_or_else(|| anyhow!("graph is not 2-connected outerplanar"))?;
                    color_forest_2independent(&g, &decompose_girth5_outerplanar(&g, &emb)?)?
                }
            };
            let text = render(cli, &g, Document::Interval(rep))?;
            emit(cli, Output { text, ok: true })
        }
        Command::ConstructDisk { graph, grid_radius } => {
            let g = read_graph(graph)?;
            let rep = match (represent_degree2_contractible(&g), grid_radius) {
                (Ok(rep), _) => rep,
                (Err(weakrep::Error::NotContractible), Some(r)) => match grid_disk_oracle(&g, *r, bound)? {
                    GridOutcome::Sat(rep) => rep,
                    GridOutcome::UnknownUnsat => bail_negative("no placement found on the grid")?,
                },
                (Err(e), _) => return Err(e.into()),
            };
            let text = render(cli, &g, Document::Disk(rep))?;
            emit(cli, Output { text, ok: true })
        }
        Command::Verify { graph, document, diameter, check_nonedges } => {
            let g = read_graph(graph)?;
            let doc = read_document(document)?;
            let (valid, detail) = match doc {
                Document::Interval(mut rep) => {
                    if let Some(d) = diameter {
                        rep.diameter = usage(parse_q(d).map_err(anyhow::Error::from))?;
                    }
                    let r = weakrep::interval::verify_interval(&g, &rep)?;
                    (r.is_valid(), format!("{:?}", r.violations))
                }
                Document::Disk(rep) => {
                    let r = verify_disk(&g, &rep)?;
                    (r.is_valid(), format!("{:?}", r.violations))
                }
                Document::Coloring(c) => {
                    let r = c.verify(&g)?;
                    (r.is_valid() && c.in_range(), format!("{:?}", r.violations))
                }
                Document::Decomposition(d) => match weakrep::construct::validate_decomposition(&g, &d) {
                    Ok(()) => (true, String::new()),
                    Err(e) => (false, e.to_string()),
                },
                Document::Cubes(scene) => {
                    let r = verify_cube_contacts(&g, &scene, *check_nonedges)?;
                    (r.is_valid(), format!("{:?} {:?}", r.violations, r.extra_contacts))
                }
                Document::Unsat | Document::Squares(_) => {
                    return Err(Failure::Usage(anyhow!("{} holds nothing to verify", document.display())))
                }
            };
            let text = if valid { "valid\n".to_string() } else { format!("invalid: {detail}\n") };
            emit(cli, Output { text, ok: valid })
        }
        Command::Decompose { graph, greedy, exact_limit } => {
            let g = read_graph(graph)?;
            let mode = if *greedy { DecomposeMode::Greedy } else { DecomposeMode::Exact { max_vertices: *exact_limit } };
            match decompose_forest_2independent(&g, mode)? {
                Some(d) => emit(cli, Output { text: Document::Decomposition(d).to_json(), ok: true }),
                None => emit(cli, Output { text: "{\"result\": \"none\"}\n".into(), ok: false }),
            }
        }
        Command::Gallery { dir, seed } => {
            let gal = gallery::build(*seed)?;
            for a in &gal.artifacts {
                let path = dir.join(&a.path);
                if let Some(parent) = path.parent() {
                    usage(fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display())))?;
                }
                usage(fs::write(&path, &a.contents).with_context(|| format!("writing {}", path.display())))?;
            }
            emit(cli, Output { text: format!("wrote {} files to {}\n", gal.artifacts.len(), dir.display()), ok: true })
        }
        Command::LiftCubes { squares, coloring, eps } => {
            let Document::Squares(sq) = read_document(squares)? else {
                return Err(Failure::Usage(anyhow!("{} is not a square contact document", squares.display())));
            };
            let Document::Coloring(col) = read_document(coloring)? else {
                return Err(Failure::Usage(anyhow!("{} is not a coloring", coloring.display())));
            };
            let eps = usage(parse_q(eps).map_err(anyhow::Error::from))?;
            let scene = lift_cubes(&sq, &col, col.threshold, eps)?;
            let text = match cli.format {
                Format::Txt => to_obj(&scene),
                Format::Json => Document::Cubes(scene).to_json(),
                Format::Svg => return Err(Failure::Usage(anyhow!("cube scenes export as json or txt"))),
            };
            emit(cli, Output { text, ok: true })
        }
        Command::ExportSvg { graph, document } => {
            let g = read_graph(graph)?;
            let doc = read_document(document)?;
            let text = match &doc {
                Document::Interval(rep) => render_interval_svg(&g, rep)?,
                Document::Disk(rep) => render_disk_svg(&g, rep)?,
                _ => return Err(Failure::Usage(anyhow!("only interval and disk documents can be drawn"))),
            };
            emit(cli, Output { text, ok: true })
        }
    }
}

fn bail_negative<T>(msg: &str) -> Result<T, Failure> {
    Err(Failure::Negative(anyhow!("{msg}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Negative(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
