use std::collections::BTreeMap;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context};
use berge_turan::berge::{berge_matching_number, contains_berge};
use berge_turan::certify::derive_certificate;
use berge_turan::constructions;
use berge_turan::formulas::{self, FormulaResult};
use berge_turan::patterns::parse_shorthand;
use berge_turan::search::{ex_exact_with, ForbiddenFamily, SearchConfig};
use berge_turan::structure::{chromatic_number, p_value, q_value};
use berge_turan::verify::{self, Ranges, Status, VerificationRow};
use berge_turan::{Graph, Hypergraph};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bt", version, about = "Berge-Turan numbers: formulas, constructions, detection and exhaustive search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed-form Turan number or bound.
    Formula {
        /// berge-matching, kang-ni-shan, khormali-palmer, matching-clique,
        /// clique-count, bipartite or z-factor.
        name: String,
        #[command(flatten)]
        params: Params,
    },
    /// Emit a named construction in .hg format.
    Construct {
        /// One of turan, gnks, clique-plus-isolated, star-core, thm22, thm25,
        /// thm26, thm26ii, prop28.
        name: String,
        #[command(flatten)]
        params: Params,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a Berge copy of a graph pattern in a hypergraph.
    Detect {
        #[arg(long)]
        host: PathBuf,
        /// Pattern shorthand (M3, K4, K2,3, P4, C5, S3) or file:<path>.
        #[arg(long)]
        pattern: String,
    },
    /// Exact Turan number by exhaustive search.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// berge:<pattern> or exact:<file.hg>; repeatable.
        #[arg(long, required = true)]
        forbid: Vec<String>,
        #[command(flatten)]
        limits: Limits,
        /// Where to write the witness.
        #[arg(long, default_value = "witness.hg")]
        out: PathBuf,
    },
    /// Derive a red-blue certificate for a hypergraph.
    Certify {
        #[arg(long)]
        host: PathBuf,
        /// Where to write the red-blue graph; defaults to the host path with extension .rb.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print chi, p, q, Berge matching number and shadow size of a hypergraph.
    Hyperprops { file: PathBuf },
    /// Check a theorem's formula against search and constructions over parameter ranges.
    Verify {
        /// thm2.1, thm1.1 or thm1.3.
        theorem: String,
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
        #[arg(long, value_parser = parse_range)]
        r: Option<RangeInclusive<usize>>,
        #[arg(long, value_parser = parse_range)]
        s: Option<RangeInclusive<usize>>,
        #[arg(long, value_parser = parse_range)]
        k: Option<RangeInclusive<usize>>,
        #[command(flatten)]
        limits: Limits,
    },
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
}

impl Params {
    fn map(&self) -> BTreeMap<String, usize> {
        [("n", self.n), ("r", self.r), ("s", self.s), ("k", self.k), ("p", self.p), ("q", self.q)]
            .into_iter()
            .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
            .collect()
    }

    fn get(&self, name: &str, key: &str) -> anyhow::Result<usize> {
        self.map().get(key).copied().ok_or_else(|| anyhow!("formula {name} needs --{key}"))
    }
}

#[derive(Args)]
struct Limits {
    /// Time limit in seconds; overrides BT_SEARCH_CAP_SECONDS.
    #[arg(long)]
    cap_seconds: Option<u64>,
    /// Largest n searched exhaustively.
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl Limits {
    fn config(&self) -> anyhow::Result<SearchConfig> {
        let mut config = SearchConfig { workers: self.workers.max(1), ..SearchConfig::default() };
        let seconds = match self.cap_seconds {
            Some(s) => Some(s),
            None => match std::env::var("BT_SEARCH_CAP_SECONDS") {
                Ok(v) => Some(v.trim().parse().with_context(|| format!("BT_SEARCH_CAP_SECONDS={v:?}"))?),
                Err(_) => None,
            },
        };
        config.time_limit = seconds.map(Duration::from_secs);
        if let Some(m) = self.max_n {
            config.default_max_n = m;
        }
        Ok(config)
    }
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad number {s:?}"));
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {text}"));
            }
            Ok(a..=b)
        }
        None => {
            let v = num(text)?;
            Ok(v..=v)
        }
    }
}

fn read_hg(path: &Path) -> anyhow::Result<Hypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Hypergraph::parse_hg(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_pattern(text: &str) -> anyhow::Result<Graph> {
    match text.strip_prefix("file:") {
        Some(path) => Ok(Graph::from_hypergraph(read_hg(Path::new(path))?)?),
        None => Ok(parse_shorthand(text)?),
    }
}

fn formula(name: &str, p: &Params) -> anyhow::Result<FormulaResult> {
    let g = |key| p.get(name, key);
    Ok(match name {
        "berge-matching" => formulas::ex_berge_matching(g("n")?, g("r")?, g("s")?)?,
        "kang-ni-shan" => formulas::ex_kang_ni_shan(g("n")?, g("r")?, g("s")?)?,
        "khormali-palmer" => formulas::ex_khormali_palmer(g("n")?, g("r")?, g("s")?)?,
        "matching-clique" => formulas::ex_graph_matching_clique(g("n")?, g("s")?, g("k")?)?,
        "clique-count" => formulas::ex_graph_clique_count(g("n")?, g("s")?, g("k")?, g("r")?)?,
        "bipartite" => formulas::bounds_bipartite(g("n")?, g("r")?, g("s")?, g("p")?, g("q")?)?,
        _ => bail!("unknown formula {name}"),
    })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Formula { name, params } => {
            if name == "z-factor" {
                let g = |key| params.get(&name, key);
                let z = formulas::z_factor(g("n")?, g("r")?, g("s")?, g("k")?)?;
                println!("{z}\tz\texact");
            } else {
                println!("{}", formula(&name, &params)?.to_line());
            }
        }
        Command::Construct { name, params, out } => {
            let c = constructions::build(&name, &params.map())?;
            let text = format!("{}\n{}", c.header(), c.object.to_hg_string());
            match out {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Detect { host, pattern } => {
            let h = read_hg(&host)?;
            let pat = read_pattern(&pattern)?;
            match contains_berge(&h, &pat) {
                None => println!("none"),
                Some(emb) => {
                    let core: Vec<String> = pat
                        .pairs()
                        .iter()
                        .map(|&(u, v)| {
                            let (a, b) = (emb.core_map[u], emb.core_map[v]);
                            format!("{}-{}", a.min(b), a.max(b))
                        })
                        .collect();
                    let edges: Vec<String> = emb.edge_assignment.iter().map(|e| format!("e{e}")).collect();
                    println!("core: {}; edges: {}", core.join(", "), edges.join(", "));
                }
            }
        }
        Command::Search { n, r, forbid, limits, out } => {
            let mut family = ForbiddenFamily::new();
            for f in &forbid {
                family = match f.split_once(':') {
                    Some(("berge", p)) => family.berge(read_pattern(p)?),
                    Some(("exact", path)) => family.exact(read_hg(Path::new(path))?),
                    _ => bail!("--forbid expects berge:<pattern> or exact:<file>, got {f:?}"),
                };
            }
            let res = ex_exact_with(n, r, &family, &limits.config()?)?;
            fs::write(&out, res.witness.to_hg_string()).with_context(|| format!("writing {}", out.display()))?;
            println!("optimum={}", res.optimum);
            println!("witness={}", out.display());
        }
        Command::Certify { host, out } => {
            let h = read_hg(&host)?;
            let cert = derive_certificate(&h);
            let out = out.unwrap_or_else(|| host.with_extension("rb"));
            fs::write(&out, cert.graph.to_text()).with_context(|| format!("writing {}", out.display()))?;
            println!("e(H)={}", h.edge_count());
            println!("epsilon={}", cert.epsilon);
            println!("red_edges={}", cert.graph.red_count());
            println!("blue_edges={}", cert.graph.blue_count());
            println!("certificate={}", out.display());
        }
        Command::Hyperprops { file } => {
            let h = read_hg(&file)?;
            println!(
                "chi={} p={} q={} bm={} shadow={}",
                chromatic_number(&h),
                p_value(&h),
                q_value(&h),
                berge_matching_number(&h),
                h.shadow().edge_count()
            );
        }
        Command::Verify { theorem, n, r, s, k, limits } => {
            let ranges: Ranges = [("n", n), ("r", r), ("s", s), ("k", k)]
                .into_iter()
                .filter_map(|(key, v)| v.map(|v| (key.to_string(), v)))
                .collect();
            let rows = verify::verify(&theorem, &ranges, &limits.config()?)?;
            println!("{}", VerificationRow::HEADER);
            for row in &rows {
                println!("{}", row.to_line());
            }
            if rows.iter().any(|r| r.status == Status::Fail) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
