use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubodd::constructors::{cayley_cyclic, generalized_petersen, lcf, named_in, read_graph_file};
use cubodd::graph::io::{parse_auto, to_edge_list, to_graph6};
use cubodd::orbital::parse_group_file;
use cubodd::{Error, Graph};
use cubodd_cli::{analyze_graph, exit_code, orbital_document, run_batch, AnalysisOptions, BatchLine};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "cubodd", version, about = "Odd automorphisms of cubic symmetric graphs")]
struct Cli {
    /// Log progress to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Bounds {
    /// Skip the rigid-cell sweep.
    #[arg(long)]
    skip_rigid: bool,
    /// Reject automorphism groups with more elements than this.
    #[arg(long, default_value_t = 1_000_000)]
    max_group_order: u128,
    /// Sweep rigid cells only when the automorphism group has at most this
    /// many elements.
    #[arg(long, default_value_t = 1000)]
    rigid_max_order: u128,
    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = cubodd::autsearch::DEFAULT_VERTEX_BOUND)]
    max_vertices: usize,
    /// Run the cyclic m-Cayley search for every type.
    #[arg(long)]
    always_m_cayley: bool,
    /// Add wall-clock timings to the output (makes it run-dependent).
    #[arg(long)]
    timing: bool,
}

impl Bounds {
    fn options(self) -> AnalysisOptions {
        AnalysisOptions {
            vertex_bound: self.max_vertices,
            max_group_order: self.max_group_order,
            skip_rigid: self.skip_rigid,
            rigid_max_order: self.rigid_max_order,
            always_m_cayley: self.always_m_cayley,
            timing: self.timing,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph and print a JSON document.
    Analyze {
        /// Graph file (graph6 or edge list).
        #[arg(required_unless_present = "named", conflicts_with = "named")]
        path: Option<PathBuf>,
        /// A named graph such as F010A or Petersen.
        #[arg(long)]
        named: Option<String>,
        /// Directory holding census-only graphs.
        #[arg(long)]
        census_dir: Option<PathBuf>,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Analyze every graph in a directory, one JSON line each.
    Batch {
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON lines here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Orbital-odd verdict for a transitive permutation group.
    Orbital {
        /// Group file: degree, then one generator per line.
        group: PathBuf,
        /// Subgroup generators; the group then acts on its right cosets.
        #[arg(required_unless_present = "degree_action", conflicts_with = "degree_action")]
        subgroup: Option<PathBuf>,
        /// Use the group's own action on its points.
        #[arg(long)]
        degree_action: bool,
        /// Also check the cubic orbital graph prediction.
        #[arg(long)]
        corollary: bool,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Build a graph and write it out.
    Construct {
        #[command(subcommand)]
        kind: Kind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        #[arg(long, global = true, value_enum, default_value_t = Format::G6)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Kind {
    /// Generalized Petersen graph GP(n, k).
    Gp { n: usize, k: usize },
    /// LCF code such as "[5,-5]^7".
    Lcf { code: String },
    /// A named graph.
    Named {
        name: String,
        #[arg(long)]
        census_dir: Option<PathBuf>,
    },
    /// Circulant Cay(Z_n, S).
    Circulant {
        n: usize,
        #[arg(allow_hyphen_values = true, required = true)]
        connection: Vec<i64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Edges,
}

enum Failure {
    Input(Error),
    Disagree,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn read_text(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(text: &str) -> Result<(), Error> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    emit(&(text + "\n"))
}

fn load_named(name: &str, census_dir: Option<PathBuf>) -> Result<Graph, Error> {
    let dir = census_dir.unwrap_or_else(cubodd::constructors::default_census_dir);
    named_in(name, &dir)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            path,
            named,
            census_dir,
            bounds,
        } => {
            let (id, g) = match (path, named) {
                (_, Some(name)) => {
                    let g = load_named(&name, census_dir)?;
                    (name, g)
                }
                (Some(path), None) => {
                    let id = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_default();
                    (id, read_graph_file(&path)?)
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            let doc = analyze_graph(&id, &g, &bounds.options())?;
            print_json(&doc)?;
            if !doc.agree {
                return Err(Failure::Disagree);
            }
        }
        Command::Batch {
            dir,
            jobs,
            report,
            bounds,
        } => {
            let result = run_batch(&dir, jobs, &bounds.options())?;
            let mut text = String::new();
            for line in &result.lines {
                text.push_str(&serde_json::to_string(line).map_err(|e| Error::Io(e.to_string()))?);
                text.push('\n');
                if let BatchLine::Error(e) = line {
                    eprintln!("{}: {}", e.id, e.error);
                }
            }
            let summary = serde_json::json!({ "summary": result.summary });
            match report {
                Some(path) => fs::write(&path, text).map_err(Error::from)?,
                None => emit(&text)?,
            }
            emit(&format!("{summary}\n"))?;
            if result.summary.disagree > 0 {
                return Err(Failure::Disagree);
            }
        }
        Command::Orbital {
            group,
            subgroup,
            degree_action: _,
            corollary,
            bounds,
        } => {
            let (degree, gens) = parse_group_file(&read_text(&group)?)?;
            let sub = match subgroup {
                Some(path) => {
                    let (d, s) = parse_group_file(&read_text(&path)?)?;
                    if d != degree {
                        return Err(Error::DegreeMismatch {
                            expected: degree,
                            found: d,
                        }
                        .into());
                    }
                    Some(s)
                }
                None => None,
            };
            let doc = orbital_document(&gens, sub.as_deref(), corollary, &bounds.options())?;
            print_json(&doc)?;
        }
        Command::Construct { kind, out, format } => {
            let g = match kind {
                Kind::Gp { n, k } => generalized_petersen(n, k)?,
                Kind::Lcf { code } => lcf(&code)?,
                Kind::Named { name, census_dir } => load_named(&name, census_dir)?,
                Kind::Circulant { n, connection } => cayley_cyclic(n, &connection)?.graph,
            };
            let text = match format {
                Format::G6 => to_graph6(&g)? + "\n",
                Format::Edges => to_edge_list(&g),
            };
            if parse_auto(&text)? != g {
                return Err(Error::Internal("written graph does not parse back".into()).into());
            }
            match out {
                Some(path) => fs::write(&path, &text).map_err(Error::from)?,
                None => emit(&text)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::new()
        .filter_level(if cli.verbose {
            log::LevelFilter::Info
        } else {
            log::LevelFilter::Warn
        })
        .init();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Disagree) => ExitCode::from(3),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
