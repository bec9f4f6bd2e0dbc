//! Command-line surface: compute, verify, enumerate, family, decompose
//! and roots subcommands over the library, plus the persistent memo
//! cache shared between runs.
//!
//! Exit codes: 0 success, 1 a verification sweep found a counterexample,
//! 2 usage or parse failure, 3 a resource limit refused the request.

use std::collections::HashSet;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{self, TheoremId, Verdict};
use crate::canon::{canonical_key, graph_from_key, CanonicalKey};
use crate::enumerate::{enumerate_cubic, EnumSpec};
use crate::flow::{self, two_edge_cut_decomposition, MemoCache, Method};
use crate::io::{read_any, write_graph6, write_text, write_text_record};
use crate::multigraph::Multigraph;
use crate::polynomial::IntPoly;
use crate::roots::root_summary;
use crate::{families, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Tsv,
    Human,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Oracle,
    Dc,
    Decompose,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Dc => Method::DeletionContraction,
            MethodArg::Decompose => Method::Decompose,
        }
    }
}

/// Shared run options.
#[derive(Debug, Parser)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    pub format: OutputFormat,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
    /// Directory holding the persistent memo cache (the FLOWPOLY_CACHE
    /// environment variable overrides this flag).
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(name = "flowpoly", version, about = "Exact flow polynomials of multigraphs")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the flow polynomial of one graph.
    Compute {
        /// Graph file (multigraph text format or graph6); `-` for stdin.
        input: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Edge limit for the subset-expansion engine.
        #[arg(long, default_value_t = flow::DEFAULT_ORACLE_LIMIT)]
        oracle_limit: usize,
    },
    /// Enumerate cubic graph classes and check one bound family.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
        theorem: u8,
        #[arg(long)]
        n: usize,
        /// Enumerate simple graphs only.
        #[arg(long, conflicts_with = "multi")]
        simple: bool,
        /// Enumerate multigraphs (default).
        #[arg(long)]
        multi: bool,
        #[arg(long)]
        bridgeless: bool,
    },
    /// List connected cubic graph classes, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "multi")]
        simple: bool,
        #[arg(long)]
        multi: bool,
        #[arg(long)]
        bridgeless: bool,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
        min_connectivity: u8,
        /// Emit graph6 instead of text records (simple graphs only).
        #[arg(long, requires = "simple")]
        g6: bool,
    },
    /// Print a named witness graph.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        /// Parallel edge count for the banana family.
        #[arg(long)]
        h: Option<usize>,
        /// Loop count for the looped variants.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        g6: bool,
    },
    /// Split a cubic graph along its 2-edge cuts.
    Decompose {
        /// Graph file; `-` or omitted reads stdin.
        input: Option<String>,
    },
    /// Rational roots and real-root counts of a graph's flow polynomial.
    Roots {
        input: String,
    },
}

fn read_input(path: &str) -> Result<Multigraph, Error> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    read_any(&text)
}

/// Append-only cache persistence: one `key<TAB>c0,c1,...` record per
/// canonical class. Records that fail to parse are skipped with a
/// warning and never trusted.
struct PersistentCache {
    path: PathBuf,
    preloaded: HashSet<CanonicalKey>,
}

impl PersistentCache {
    fn file_path(dir: &Path) -> PathBuf {
        dir.join("flowpoly-cache.tsv")
    }

    fn load(dir: &Path, cache: &MemoCache) -> std::io::Result<PersistentCache> {
        std::fs::create_dir_all(dir)?;
        let path = Self::file_path(dir);
        let mut preloaded = HashSet::new();
        if path.exists() {
            let text = std::fs::read_to_string(&path)?;
            for (lineno, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                match Self::parse_record(line) {
                    Some((key, poly)) => {
                        cache.insert(key.clone(), poly);
                        preloaded.insert(key);
                    }
                    None => {
                        eprintln!(
                            "warning: skipping corrupted cache record at {}:{}",
                            path.display(),
                            lineno + 1
                        );
                    }
                }
            }
        }
        Ok(PersistentCache { path, preloaded })
    }

    fn parse_record(line: &str) -> Option<(CanonicalKey, IntPoly)> {
        let (key_hex, coeffs) = line.split_once('\t')?;
        let key = CanonicalKey::from_hex(key_hex)?;
        let mut values = Vec::new();
        for tok in coeffs.split(',') {
            values.push(tok.trim().parse().ok()?);
        }
        if values.is_empty() {
            return None;
        }
        Some((key, IntPoly::new(values)))
    }

    fn save_new_entries(&self, cache: &MemoCache) -> std::io::Result<()> {
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        for (key, poly) in cache.entries() {
            if self.preloaded.contains(&key) || poly.is_zero() {
                continue;
            }
            let coeffs = poly
                .coeff_decimal_strings()
                .join(",");
            writeln!(file, "{}\t{}", key.to_hex(), coeffs)?;
        }
        Ok(())
    }
}

fn open_cache(config: &RunConfig, cache: &MemoCache) -> Option<PersistentCache> {
    let dir = std::env::var_os("FLOWPOLY_CACHE")
        .map(PathBuf::from)
        .or_else(|| config.cache.clone())?;
    match PersistentCache::load(&dir, cache) {
        Ok(pc) => Some(pc),
        Err(e) => {
            eprintln!("warning: cache unavailable at {}: {e}", dir.display());
            None
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::OracleLimit { .. } | Error::EnumerationLimit { .. } => EXIT_LIMIT,
        _ => EXIT_USAGE,
    }
}

fn fail(e: &Error) -> i32 {
    eprintln!("error: {e}");
    exit_code_for(e)
}

fn cmd_compute(config: &RunConfig, input: &str, method: MethodArg, oracle_limit: usize) -> i32 {
    let g = match read_input(input) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let cache = MemoCache::new();
    let persistent = open_cache(config, &cache);
    let result = match method {
        MethodArg::Oracle => flow::flow_oracle_with_limit(&g, oracle_limit),
        other => flow::flow_with_cache(&g, other.into(), &cache),
    };
    let result = match result {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let (n, m) = (g.vertex_count(), g.edge_count());
    let tau = result.poly.tau_transform(m, n);
    let summary = if result.poly.is_zero() {
        None
    } else {
        root_summary(&result.poly).ok()
    };
    let degree_str = result
        .poly
        .degree()
        .map_or("-inf".to_string(), |d| d.to_string());
    match config.format {
        OutputFormat::Human => {
            println!("graph: n = {n}, m = {m}");
            println!("F(G,t) = {}", result.poly);
            println!("coefficients: {}", result.poly.to_coeff_string());
            println!("tau coefficients: {}", tau.to_coeff_string());
            println!("degree: {degree_str}");
            if let Some(s) = &summary {
                let roots: Vec<String> = s
                    .rational_roots
                    .iter()
                    .map(|(r, k)| format!("({r}, {k})"))
                    .collect();
                println!("rational roots: [{}]", roots.join(", "));
                println!(
                    "real roots: {} distinct, {} with multiplicity",
                    s.distinct_real, s.real_with_multiplicity
                );
            }
        }
        OutputFormat::Json => {
            let roots_json = summary.as_ref().map(|s| {
                serde_json::json!({
                    "rational": s.rational_roots.iter()
                        .map(|(r, k)| serde_json::json!({"root": r.to_string(), "multiplicity": k.to_string()}))
                        .collect::<Vec<_>>(),
                    "distinct_real": s.distinct_real.to_string(),
                    "real_with_multiplicity": s.real_with_multiplicity.to_string(),
                })
            });
            let record = serde_json::json!({
                "n": n.to_string(),
                "m": m.to_string(),
                "coefficients": result.poly.coeff_decimal_strings(),
                "tau": tau.coeff_decimal_strings(),
                "degree": degree_str,
                "roots": roots_json,
            });
            println!("{record}");
        }
        OutputFormat::Tsv => {
            println!(
                "{}\t{}\t{}\t{}\t{}",
                n,
                m,
                result.poly.to_coeff_string(),
                tau.to_coeff_string(),
                degree_str
            );
        }
    }
    if let Some(pc) = persistent {
        if let Err(e) = pc.save_new_entries(&cache) {
            eprintln!("warning: could not persist cache: {e}");
        }
    }
    EXIT_OK
}

fn enum_spec(n: usize, simple: bool, bridgeless: bool, min_connectivity: usize) -> EnumSpec {
    let mut spec = EnumSpec::new(n);
    if simple {
        spec = spec.simple();
    }
    if bridgeless {
        spec = spec.bridgeless();
    }
    spec.min_connectivity(min_connectivity)
}

fn cmd_verify(config: &RunConfig, theorem: u8, n: usize, simple: bool, bridgeless: bool) -> i32 {
    let theorem = TheoremId::from_number(theorem).expect("range-checked");
    let spec = enum_spec(n, simple, bridgeless, 1);
    let graphs = match enumerate_cubic(&spec) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let cache = MemoCache::new();
    let persistent = open_cache(config, &cache);
    let report = match bounds::sweep_with_cache(theorem, &graphs, config.jobs as usize, &cache) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    match config.format {
        OutputFormat::Json => print!("{}", report.to_jsonl()),
        OutputFormat::Tsv => {
            for r in &report.records {
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    r.key_hex,
                    r.n,
                    match r.verdict {
                        Verdict::Pass => "pass",
                        Verdict::Fail => "fail",
                        Verdict::NotApplicable => "not-applicable",
                    },
                    r.equality,
                    r.bound.product_string()
                );
            }
            println!(
                "summary\ttotal={}\tpass={}\tfail={}\tequality={}\tnot-applicable={}",
                report.summary.total,
                report.summary.pass,
                report.summary.fail,
                report.summary.equality,
                report.summary.not_applicable
            );
        }
        OutputFormat::Human => {
            println!(
                "bound family {} over {} classes (n = {n}): {} pass, {} fail, {} equality, {} not applicable",
                report.theorem.number(),
                report.summary.total,
                report.summary.pass,
                report.summary.fail,
                report.summary.equality,
                report.summary.not_applicable
            );
        }
    }
    if let Some(pc) = persistent {
        if let Err(e) = pc.save_new_entries(&cache) {
            eprintln!("warning: could not persist cache: {e}");
        }
    }
    if report.summary.fail > 0 {
        eprintln!("counterexamples:");
        for r in report.failures() {
            if let Some(key) = CanonicalKey::from_hex(&r.key_hex) {
                if let Some(g) = graph_from_key(&key) {
                    eprintln!("{}", write_text_record(&g));
                }
            }
        }
        return EXIT_COUNTEREXAMPLE;
    }
    EXIT_OK
}

fn cmd_enumerate(
    n: usize,
    simple: bool,
    bridgeless: bool,
    min_connectivity: usize,
    g6: bool,
) -> i32 {
    let spec = enum_spec(n, simple, bridgeless, min_connectivity);
    let graphs = match enumerate_cubic(&spec) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    for g in &graphs {
        if g6 {
            match write_graph6(g) {
                Ok(s) => println!("{s}"),
                Err(e) => return fail(&e),
            }
        } else {
            println!("{}", write_text_record(g));
        }
    }
    eprintln!("count: {}", graphs.len());
    EXIT_OK
}

fn build_family(name: &str, n: Option<usize>, h: Option<usize>, k: Option<usize>) -> Result<Multigraph, Error> {
    let need_n = || n.ok_or_else(|| Error::Domain(format!("family {name} needs --n")));
    match name {
        "z3" => Ok(families::make_z3()),
        "k4" => Ok(families::make_k4()),
        "l4" => Ok(families::make_l4()),
        "k2h" => families::make_k2h(h.unwrap_or(2)),
        "cycle" => Ok(families::make_cycle(need_n()?)),
        "necklace" => families::make_z3_necklace(need_n()?),
        "chain" => families::make_z3_chain(need_n()?),
        "gstar" => families::make_gstar(need_n()?),
        "l4-loops" => Ok(families::make_l4_loops(k.unwrap_or(1))),
        "k4-loops" => Ok(families::make_k4_loops(k.unwrap_or(1))),
        other => Err(Error::Domain(format!(
            "unknown family {other:?}; known: z3, k4, l4, k2h, cycle, necklace, chain, gstar, l4-loops, k4-loops"
        ))),
    }
}

fn cmd_family(name: &str, n: Option<usize>, h: Option<usize>, k: Option<usize>, g6: bool) -> i32 {
    let g = match build_family(name, n, h, k) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    if g6 {
        match write_graph6(&g) {
            Ok(s) => println!("{s}"),
            Err(e) => return fail(&e),
        }
    } else {
        print!("{}", write_text(&g));
    }
    EXIT_OK
}

fn cmd_decompose(config: &RunConfig, input: Option<&str>) -> i32 {
    let g = match read_input(input.unwrap_or("-")) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let d = match two_edge_cut_decomposition(&g) {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    match config.format {
        OutputFormat::Json => {
            let record = serde_json::json!({
                "splits": d.splits.to_string(),
                "pieces": d.pieces.iter().map(|p| serde_json::json!({
                    "key": canonical_key(p).to_hex(),
                    "graph": write_text_record(p),
                    "n": p.vertex_count().to_string(),
                })).collect::<Vec<_>>(),
            });
            println!("{record}");
        }
        _ => {
            for p in &d.pieces {
                println!("{}", write_text_record(p));
            }
            println!("pieces: {} splits: {}", d.pieces.len(), d.splits);
        }
    }
    EXIT_OK
}

fn cmd_roots(config: &RunConfig, input: &str) -> i32 {
    let g = match read_input(input) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let f = match flow::flow(&g, Method::Auto) {
        Ok(f) => f,
        Err(e) => return fail(&e),
    };
    if f.poly.is_zero() {
        println!("flow polynomial is identically zero (bridge present)");
        return EXIT_OK;
    }
    let s = match root_summary(&f.poly) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    match config.format {
        OutputFormat::Json => {
            let record = serde_json::json!({
                "degree": s.degree.to_string(),
                "rational_roots": s.rational_roots.iter()
                    .map(|(r, k)| serde_json::json!({"root": r.to_string(), "multiplicity": k.to_string()}))
                    .collect::<Vec<_>>(),
                "distinct_real": s.distinct_real.to_string(),
                "real_with_multiplicity": s.real_with_multiplicity.to_string(),
                "real_rooted": s.real_rooted(),
            });
            println!("{record}");
        }
        _ => {
            println!("F(G,t) = {}", f.poly);
            let roots: Vec<String> = s
                .rational_roots
                .iter()
                .map(|(r, k)| format!("({r}, {k})"))
                .collect();
            println!("rational roots: [{}]", roots.join(", "));
            println!(
                "real roots: {} distinct, {} with multiplicity (degree {}); real-rooted: {}",
                s.distinct_real,
                s.real_with_multiplicity,
                s.degree,
                s.real_rooted()
            );
        }
    }
    EXIT_OK
}

/// Parses the process arguments and runs the requested command,
/// returning the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    dispatch(cli)
}

pub fn dispatch(cli: Cli) -> i32 {
    let config = cli.config;
    match cli.command {
        Command::Compute {
            input,
            method,
            oracle_limit,
        } => cmd_compute(&config, &input, method, oracle_limit),
        Command::Verify {
            theorem,
            n,
            simple,
            multi: _,
            bridgeless,
        } => cmd_verify(&config, theorem, n, simple, bridgeless),
        Command::Enumerate {
            n,
            simple,
            multi: _,
            bridgeless,
            min_connectivity,
            g6,
        } => cmd_enumerate(n, simple, bridgeless, min_connectivity as usize, g6),
        Command::Family { name, n, h, k, g6 } => cmd_family(&name, n, h, k, g6),
        Command::Decompose { input } => cmd_decompose(&config, input.as_deref()),
        Command::Roots { input } => cmd_roots(&config, &input),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_record_round_trip() {
        let g = families::make_k4();
        let key = canonical_key(&g);
        let poly = IntPoly::from_i64(&[-6, 11, -6, 1]);
        let line = format!("{}\t{}", key.to_hex(), poly.coeff_decimal_strings().join(","));
        let (k2, p2) = PersistentCache::parse_record(&line).unwrap();
        assert_eq!(k2, key);
        assert_eq!(p2, poly);
    }

    #[test]
    fn corrupt_cache_records_rejected() {
        assert!(PersistentCache::parse_record("nothex\t1,2").is_none());
        assert!(PersistentCache::parse_record("ab").is_none());
        assert!(PersistentCache::parse_record("ab\t1,x").is_none());
        assert!(PersistentCache::parse_record("ab\t").is_none());
    }

    #[test]
    fn family_builder_names() {
        assert!(build_family("z3", None, None, None).is_ok());
        assert!(build_family("gstar", Some(8), None, None).is_ok());
        assert!(build_family("gstar", None, None, None).is_err());
        assert!(build_family("nope", None, None, None).is_err());
    }
}
