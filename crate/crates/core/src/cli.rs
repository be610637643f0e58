//! Command-line interface. Exit codes: 0 success, 1 domain failure (no witness, failed
//! check), 2 budget exhausted, 3 parse error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::appendix::{self, Caps};
use crate::error::{Error, Result};
use crate::exact::rational::{parse_rational, to_decimal};
use crate::exact::{fundamental_constants, AlgebraicNumber, Rational, Spectrum};
use crate::extension;
use crate::graph::{catalog, SignedGraph, SignedVertexSubset};
use crate::kp;
use crate::line::roots::{root_representation, RootSystem};
use crate::reduce::{self, IntSymMatrix};
use crate::rowing::{self, DensityOptions};

#[derive(Parser, Debug)]
#[command(name = "signed-spectra", version, about = "Exact spectral computations on signed graphs")]
pub struct Cli {
    /// Seed for search steering; certified outputs do not depend on it
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for parallel stages (default: all cores)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Replay the forbidden-subgraph table.
    ///
    /// Input: a count line, then `label edges` per line where `edges` lists digit pairs of
    /// positive edges, optionally followed by `-` and the negative pairs. Output: `label y z`
    /// per line. Without --input the bundled table is used.
    VerifyAppendix {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Confirm every stopping value by Sturm eigenvalue counting
        #[arg(long)]
        cross_check: bool,
        /// Compare against this expected table (exit 1 on mismatch)
        #[arg(long)]
        expect: Option<PathBuf>,
        /// Also certify minimal non-representability of every entry in D_n
        #[arg(long)]
        minimality: bool,
    },
    /// Certified enclosure of the smallest eigenvalue.
    ///
    /// Graph text: `n=<int>` then `+ i j` / `- i j` per edge, or the compact digit format.
    /// Use `-` to read standard input.
    Eig {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value = "1/1000000")]
        eps: String,
        /// Also count eigenvalues strictly below this value (rational or named constant)
        #[arg(long, allow_hyphen_values = true)]
        below: Option<String>,
    },
    /// Build a path, path-clique or clique extension.
    Extend {
        #[arg(long)]
        graph: String,
        /// Anchor set such as `0+,2-`
        #[arg(long)]
        anchor: String,
        #[arg(long, value_enum, default_value_t = ExtensionKind::Path)]
        kind: ExtensionKind,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Best ratio |G|/mult(-λ) over connected G with λ₁ = -λ and χ(-G) ≤ p.
    Kp {
        #[arg(long)]
        p: usize,
        /// Integer, p/q, sqrt(k) or a named constant
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 20_000_000)]
        budget: u64,
    },
    /// Represent a signed graph by roots of D_n or E8 with Gram matrix A + 2I.
    Represent {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = SystemArg::Dn)]
        system: SystemArg,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Find a small principal submatrix with an eigenvalue below -λ.
    ///
    /// Matrix text: one row per line, integers separated by spaces; symmetric with zero
    /// diagonal. Read from --input or standard input.
    ReduceMatrix {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 10)]
        cap: usize,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Rowing graph with smallest eigenvalue in (-(1+ε/2)t - ε, -t).
    RowingSearch {
        #[arg(long)]
        target: String,
        #[arg(long, default_value = "1/100")]
        eps: String,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Print a named graph (`--list` shows the names; `table` prints the bundled table).
    Catalog {
        name: Option<String>,
        params: Vec<String>,
        #[arg(long)]
        list: bool,
    },
    /// Isolating intervals for β, λ* and λ′.
    Constants {
        #[arg(long, default_value = "1/100000")]
        eps: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExtensionKind {
    Path,
    PathClique,
    Clique,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SystemArg {
    Dn,
    E8,
}

/// Process exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 3,
        Error::BudgetExceeded { .. } => 2,
        _ => 1,
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(e: io::Error) -> Error {
    Error::parse(0, e.to_string())
}

fn read_source(src: &str) -> Result<String> {
    if src == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(src).map_err(|e| Error::parse(0, format!("{src}: {e}")))
    }
}

fn read_path(p: &Path) -> Result<String> {
    read_source(&p.to_string_lossy())
}

fn load_graph(src: &str) -> Result<SignedGraph> {
    SignedGraph::parse(&read_source(src)?)
}

fn w(out: &mut dyn Write, s: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{s}").map_err(io_err)
}

fn interval(lo: &Rational, hi: &Rational) -> String {
    format!("[{lo}, {hi}]  (~ [{}, {}])", to_decimal(lo, 8), to_decimal(hi, 8))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    if let Some(j) = cli.jobs {
        // the global pool can only be configured once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match &cli.command {
        Command::VerifyAppendix { input, output, cross_check, expect, minimality } => {
            let text = match input {
                Some(p) => read_path(p)?,
                None => appendix::TABLE_INPUT.to_string(),
            };
            let entries = appendix::parse_input(&text)?;
            let rows = appendix::verify_entries(&entries, Caps::default(), *cross_check)?;
            let table = appendix::render(&rows);
            match output {
                Some(p) => fs::write(p, &table).map_err(io_err)?,
                None => write!(out, "{table}").map_err(io_err)?,
            }
            let mut code = 0;
            if let Some(p) = expect {
                if let Err((line, got, want)) = appendix::compare_tables(&table, &read_path(p)?) {
                    w(out, format!("mismatch at line {line}: got {got:?}, expected {want:?}"))?;
                    code = 1;
                }
            }
            if *minimality {
                for e in &entries {
                    if !appendix::check_minimality(e, 1 << 24)? {
                        w(out, format!("{} is not minimal in D_n", e.label))?;
                        code = 1;
                    }
                }
            }
            Ok(code)
        }
        Command::Eig { graph, eps, below } => {
            let g = load_graph(graph)?;
            let eps = parse_rational(eps)?;
            let s = Spectrum::new(&g.adjacency());
            let (lo, hi) = s.smallest_eig_interval(&eps)?;
            w(out, format!("lambda_1 in {}", interval(&lo, &hi)))?;
            if let Some(t) = below {
                let t = AlgebraicNumber::parse(t)?;
                w(out, format!("eigenvalues below {t}: {}", s.count_below_algebraic(&t)?))?;
            }
            Ok(0)
        }
        Command::Extend { graph, anchor, kind, ell, m } => {
            let f = load_graph(graph)?;
            let a = SignedVertexSubset::parse(anchor)?;
            let g = match kind {
                ExtensionKind::Path => extension::path_extension(&f, &a, *ell)?,
                ExtensionKind::PathClique => extension::path_clique_extension(&f, &a, *ell, *m)?,
                ExtensionKind::Clique => extension::clique_extension(&f, &a, *m)?,
            };
            write!(out, "{g}").map_err(io_err)?;
            Ok(0)
        }
        Command::Kp { p, lambda, max_n, budget } => {
            let lam = AlgebraicNumber::parse(lambda)?;
            let opts = kp::KpOptions { budget: *budget, ..Default::default() };
            match kp::kp_search_with(*p, &lam, *max_n, opts)? {
                Some(wit) => {
                    w(out, format!("ratio {} (~ {})", wit.ratio, to_decimal(&wit.ratio, 6)))?;
                    w(out, format!("vertices {} multiplicity {}", wit.vertex_count, wit.multiplicity))?;
                    write!(out, "{}", wit.graph).map_err(io_err)?;
                    w(out, format!("best within {max_n} vertices; not a claim of global optimality"))?;
                    Ok(0)
                }
                None => {
                    w(out, format!("no qualifying graph within {max_n} vertices"))?;
                    Ok(1)
                }
            }
        }
        Command::Represent { graph, system, budget } => {
            let g = load_graph(graph)?;
            let sys = match system {
                SystemArg::Dn => RootSystem::d_for(&g),
                SystemArg::E8 => RootSystem::E8,
            };
            match root_representation(&g, sys, *budget)? {
                Some(r) => {
                    write!(out, "{r}").map_err(io_err)?;
                    Ok(0)
                }
                None => {
                    w(out, "no representation (exhaustive search)")?;
                    Ok(1)
                }
            }
        }
        Command::ReduceMatrix { lambda, cap, input } => {
            let lam = parse_rational(lambda)?;
            let text = match input {
                Some(p) => read_path(p)?,
                None => read_source("-")?,
            };
            let a = IntSymMatrix::parse(&text)?;
            match reduce::find_small_witness(&a, &lam, *cap)? {
                Some(wit) => {
                    let idx: Vec<String> = wit.indices.iter().map(|i| i.to_string()).collect();
                    w(out, format!("witness {{{}}} ({:?})", idx.join(","), wit.kind))?;
                    let sub = a.principal(&wit.indices).to_rational();
                    let (lo, hi) = Spectrum::new(&sub).smallest_eig_interval(&Rational::new(1.into(), 1_000_000.into()))?;
                    w(out, format!("lambda_1 in {}", interval(&lo, &hi)))?;
                    Ok(0)
                }
                None => {
                    w(out, format!("no eigenvalue below -{lam}"))?;
                    Ok(1)
                }
            }
        }
        Command::RowingSearch { target, eps, budget } => {
            let t = AlgebraicNumber::parse(target)?;
            let eps = parse_rational(eps)?;
            let opts = DensityOptions { budget: *budget, ..Default::default() };
            let hit = rowing::density_search(&t, &eps, opts)?;
            w(out, format!("{}", hit.spec))?;
            w(out, format!("lambda_1 in {}", interval(&hit.lo, &hit.hi)))?;
            w(out, format!("certified: {} < lambda_1 < -({})", hit.window_lo, t))?;
            w(out, format!("nodes {}", hit.nodes))?;
            Ok(0)
        }
        Command::Catalog { name, params, list } => {
            if *list || name.is_none() {
                w(out, catalog::NAMES.join("\n"))?;
                w(out, "table")?;
                return Ok(0);
            }
            let name = name.as_deref().unwrap();
            if name == "table" {
                let entries = appendix::parse_input(appendix::TABLE_INPUT)?;
                let entry = match params.first() {
                    Some(l) => entries.iter().find(|e| &e.label == l).ok_or_else(|| Error::InvalidParams(format!("no entry {l}")))?,
                    None => {
                        write!(out, "{}", appendix::TABLE_INPUT).map_err(io_err)?;
                        return Ok(0);
                    }
                };
                write!(out, "{}", entry.graph).map_err(io_err)?;
                return Ok(0);
            }
            let g = catalog::by_name(name, params)?;
            write!(out, "{g}").map_err(io_err)?;
            Ok(0)
        }
        Command::Constants { eps } => {
            let eps = parse_rational(eps)?;
            let c = fundamental_constants(&eps);
            for (n, a) in [("beta", &c.beta), ("lambda*", &c.lambda_star), ("lambda'", &c.lambda_prime)] {
                w(out, format!("{n:8} {}  minpoly {}", interval(a.lo(), a.hi()), a.minpoly()))?;
            }
            Ok(0)
        }
    }
}
