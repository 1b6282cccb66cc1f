use std::collections::BTreeSet;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use straighten::bench::{run_bench, BenchConfig};
use straighten::graph::{active_vertices, DEFAULT_PATH_CAP};
use straighten::json::{
    format_combination, to_pretty, EdgeListDoc, KostkaDoc, MatrixDoc, SsytListing,
    StraighteningDoc, FORMAT_VERSION,
};
use straighten::relations::DEFAULT_ORACLE_CAP;
use straighten::straightening::{Method, DEFAULT_REWRITE_CAP};
use straighten::tableau::text::{parse_filling, to_text};
use straighten::{enumerate_ssyt, rcoeff, Caps, Content, Error, Filling, Instance, Partition};

#[derive(Parser)]
#[command(name = "straighten", version, about = "Straightening of Young diagram fillings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ShapeArgs {
    /// Row lengths, e.g. 4,3,2
    #[arg(long, value_parser = parse_list)]
    shape: List,
    /// Occurrence counts of 1..n, e.g. 2,2,3,2
    #[arg(long, value_parser = parse_list)]
    content: List,
}

impl ShapeArgs {
    fn resolve(&self) -> Result<(Partition, Content), Error> {
        let shape = Partition::new(self.shape.0.clone())?;
        let content = Content::new(self.content.0.clone())?;
        if shape.size() != content.size() {
            return Err(Error::SizeMismatch {
                shape: shape.size(),
                content: content.size(),
            });
        }
        Ok((shape, content))
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Closed,
    Classical,
    Chain,
    Paths,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Closed => Method::Closed,
            MethodArg::Classical => Method::Classical,
            MethodArg::Chain => Method::Chain,
            MethodArg::Paths => Method::Paths,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the semistandard tableaux S_1 ≻ … ≻ S_K
    Ssyt {
        #[command(flatten)]
        sc: ShapeArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the Kostka number
    Kostka {
        #[command(flatten)]
        sc: ShapeArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Rearrangement coefficient R[F,S] of two filling files
    Rcoeff {
        f: PathBuf,
        s: PathBuf,
        #[arg(long)]
        alphabet: Option<u32>,
    },
    /// Straighten a filling file ("-" reads stdin)
    Straighten {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
        /// Cross-check the result against the elimination oracle
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        alphabet: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        #[arg(long, default_value_t = DEFAULT_REWRITE_CAP)]
        rewrite_cap: usize,
        /// Chains or paths enumerated per coefficient (chain and paths methods).
        #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
        path_cap: usize,
    },
    /// Rearrangement matrix R[S_i,S_j]
    Matrix {
        #[command(flatten)]
        sc: ShapeArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// D-basis expansions and depths
    Dbasis {
        #[command(flatten)]
        sc: ShapeArgs,
    },
    /// Coefficient graph as DOT or a JSON edge list
    Graph {
        #[command(flatten)]
        sc: ShapeArgs,
        /// Shorthand for --format dot
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        /// Filling file whose active vertices are highlighted
        #[arg(long)]
        highlight: Option<PathBuf>,
    },
    /// Time closed-formula against classical straightening on random fillings
    Bench {
        #[command(flatten)]
        sc: ShapeArgs,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Omit wall-clock columns (output then depends only on inputs and seed)
        #[arg(long)]
        no_timing: bool,
        /// Skip the elimination oracle
        #[arg(long)]
        no_oracle: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        #[arg(long, default_value_t = DEFAULT_REWRITE_CAP)]
        rewrite_cap: usize,
    },
}

/// A comma-separated list of integers.
#[derive(Clone, Debug)]
struct List(Vec<usize>);

fn parse_list(s: &str) -> Result<List, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("{t:?} is not a nonnegative integer"))
        })
        .collect::<Result<_, _>>()
        .map(List)
}

fn read_source(path: &Path) -> Result<String, Error> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    Ok(text)
}

fn read_filling(path: &Path, alphabet: Option<u32>) -> Result<Filling, Error> {
    parse_filling(&read_source(path)?, alphabet)
}

fn configure_threads() {
    if let Some(n) = std::env::var("STRAIGHT_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Ssyt { sc, format } => {
            let (shape, content) = sc.resolve()?;
            let basis = enumerate_ssyt(&shape, &content)?;
            Ok(match format {
                Format::Json => to_pretty(&SsytListing::new(&basis)),
                Format::Text => {
                    let blocks: Vec<String> = basis
                        .iter()
                        .map(|(i, t)| format!("S{i}\n{}", to_text(t)))
                        .collect();
                    blocks.join("\n")
                }
            })
        }
        Command::Kostka { sc, format } => {
            let (shape, content) = sc.resolve()?;
            let k = enumerate_ssyt(&shape, &content)?.len();
            Ok(match format {
                Format::Text => format!("{k}\n"),
                Format::Json => to_pretty(&KostkaDoc {
                    format: FORMAT_VERSION,
                    shape: shape.parts().to_vec(),
                    content: content.counts().to_vec(),
                    kostka: k,
                }),
            })
        }
        Command::Rcoeff { f, s, alphabet } => {
            let mut f = read_filling(&f, alphabet)?;
            let mut s = read_filling(&s, alphabet)?;
            if alphabet.is_none() {
                let n = f.alphabet().max(s.alphabet());
                f = f.with_alphabet(n)?;
                s = s.with_alphabet(n)?;
            }
            Ok(format!("{}\n", rcoeff(&f, &s)?))
        }
        Command::Straighten {
            file,
            method,
            verify,
            format,
            alphabet,
            oracle_cap,
            rewrite_cap,
            path_cap,
        } => {
            let f = read_filling(&file, alphabet)?;
            let caps = Caps {
                oracle_dim: oracle_cap,
                rewrites: rewrite_cap,
                paths: path_cap,
            };
            let inst = Instance::with_caps(f.shape(), &f.content(), caps)?;
            let result = inst.straighten(&f, method.into())?;
            if verify {
                let truth = inst.straighten(&f, Method::Oracle)?;
                if !truth.agrees_with(&result) {
                    return Err(Error::Disagreement(format!(
                        "{} gives {} but the oracle gives {}",
                        result.method,
                        format_combination(&result),
                        format_combination(&truth)
                    )));
                }
                eprintln!("verified against the elimination oracle");
            }
            Ok(match format {
                Format::Text => format!("{}\n", format_combination(&result)),
                Format::Json => to_pretty(&StraighteningDoc::new(&result, &inst.basis)),
            })
        }
        Command::Matrix { sc, format } => {
            let (shape, content) = sc.resolve()?;
            let basis = enumerate_ssyt(&shape, &content)?;
            let m = straighten::rcoeff_matrix(&basis);
            Ok(match format {
                Format::Json => to_pretty(&MatrixDoc::new(&m)),
                Format::Text => {
                    let width = m
                        .entries()
                        .iter()
                        .flatten()
                        .map(|x| x.to_string().len())
                        .max()
                        .unwrap_or(1);
                    m.entries()
                        .iter()
                        .map(|row| {
                            let cells: Vec<String> =
                                row.iter().map(|x| format!("{x:>width$}")).collect();
                            format!("{}\n", cells.join(" "))
                        })
                        .collect()
                }
            })
        }
        Command::Dbasis { sc } => {
            let (shape, content) = sc.resolve()?;
            let inst = Instance::new(&shape, &content)?;
            let mut out = String::new();
            for i in 1..=inst.basis.len() {
                let row = straighten::Straightening {
                    input: inst.basis.tableau(i).clone(),
                    coefficients: inst.dbasis.row(i).to_vec(),
                    method: Method::Closed,
                };
                out.push_str(&format!(
                    "D(S{i}) = {}  [depth {}]\n",
                    format_combination(&row),
                    inst.dbasis.depth(i)
                ));
            }
            Ok(out)
        }
        Command::Graph {
            sc,
            dot,
            format,
            highlight,
        } => {
            let (shape, content) = sc.resolve()?;
            let inst = Instance::new(&shape, &content)?;
            let format = if dot { GraphFormat::Dot } else { format };
            Ok(match format {
                GraphFormat::Json => to_pretty(&EdgeListDoc::new(&inst.graph)),
                GraphFormat::Dot => {
                    let active: Option<BTreeSet<usize>> = match highlight {
                        Some(path) => {
                            let f = read_filling(&path, Some(content.alphabet()))?;
                            Some(active_vertices(&f, &inst.basis)?)
                        }
                        None => None,
                    };
                    inst.graph.export_dot(active.as_ref())
                }
            })
        }
        Command::Bench {
            sc,
            trials,
            seed,
            no_timing,
            no_oracle,
            format,
            oracle_cap,
            rewrite_cap,
        } => {
            let (shape, content) = sc.resolve()?;
            let config = BenchConfig {
                shape,
                content,
                trials,
                seed,
                rewrite_cap,
                oracle_cap: (!no_oracle).then_some(oracle_cap),
            };
            let report = run_bench(&config)?;
            let text = match format {
                Format::Text => report.to_table(!no_timing),
                Format::Json => {
                    let mut r = report.clone();
                    if no_timing {
                        r.setup_ns = 0;
                        r.oracle_setup_ns = r.oracle_setup_ns.map(|_| 0);
                        for t in &mut r.trials {
                            t.closed_ns = 0;
                            t.classical_ns = 0;
                            t.oracle_ns = t.oracle_ns.map(|_| 0);
                        }
                    }
                    to_pretty(&r)
                }
            };
            if !report.all_agree() {
                print!("{text}");
                return Err(Error::Disagreement(format!(
                    "{} of {} trials disagree",
                    report.trials.len() - report.agreements(),
                    report.trials.len()
                )));
            }
            Ok(text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
