//! Command-line front end: counting, expansion, verification, fitting and
//! catalog inspection.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nbcount::counting::{j_count, s_count, TermSpec};
use nbcount::graph::{emit_graph6, named, parse_graph6, parse_graph6_lines, SmallGraph};
use nbcount::symbolic::{expand_term, JExpr};
use nbcount::verify::{
    exhaustive_hosts, fit_with, load_identity, load_table, random_hosts, resolve_catalog, verify_identity_numeric,
    verify_identity_symbolic, verify_table, CatalogAssignment, FitConfig, IdentitySpec, TableData, DEFAULT_SEED,
};

#[derive(Parser, Debug)]
#[command(name = "nbcount", version, about = "Exact neighborhood subgraph-count expansions")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for verification sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Induced and signed injection counts of a pattern in graph6 hosts.
    Count {
        /// Graph name such as `C_4`, or `g6:` followed by graph6.
        #[arg(long)]
        pattern: String,
        /// graph6 file with one host per line; `-` reads standard input.
        #[arg(long)]
        input: PathBuf,
    },
    /// Normal form of a vertex sum, e.g. `"s(K_1,+) s(K_2,-)"`.
    Expand {
        /// Term words; empty means `Σ_v 1`.
        term: Vec<String>,
    },
    /// Check every line of the coefficient table.
    VerifyTable {
        /// Table JSON to use instead of the built-in one.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check the identity symbolically, or numerically with `--numeric`.
    VerifyIdentity {
        #[arg(long)]
        numeric: bool,
        /// Identity JSON to use instead of the built-in one.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// graph6 hosts for the numeric check instead of the generated ones.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Exhaustive hosts up to this many vertices.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Random 12-vertex hosts.
        #[arg(long, default_value_t = 50)]
        random_count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Recover the normal form from numeric data and compare with `expand`.
    Fit {
        term: Vec<String>,
        /// Every graph up to this size gives an equation.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        /// Extra random equations on 9 to 12 vertices.
        #[arg(long, default_value_t = 10)]
        random_count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Resolve the graph catalog and compare with the golden file.
    Catalog {
        /// Directory holding `catalog.golden` (default: the built-in copy).
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        /// Write the resolved catalog into the golden directory.
        #[arg(long, requires = "golden_dir")]
        bless: bool,
    },
}

/// A usage or input error; exits with status 2. Failed checks are reports
/// with `pass == false` and exit with status 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Report {
    text: String,
    json: Value,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("nbcount: {e}");
            return ExitCode::from(2);
        }
    }
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(Failure(msg)) => {
            eprintln!("nbcount: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut body = match cli.format {
        Format::Text => report.text,
        Format::Json => serde_json::to_string_pretty(&report.json).expect("report serializes"),
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    let written = match &cli.output {
        Some(path) => fs::write(path, body),
        None => io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("nbcount: {e}");
        return ExitCode::from(2);
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: &Command) -> Result<Report, Failure> {
    match command {
        Command::Count { pattern, input } => count(pattern, input),
        Command::Expand { term } => expand(&parse_term(term)?),
        Command::VerifyTable { input } => {
            let table = match input {
                Some(p) => load_table(&read_input(p)?)?,
                None => TableData::builtin(),
            };
            table_report(&table)
        }
        Command::VerifyIdentity {
            numeric,
            spec,
            input,
            max_n,
            random_count,
            seed,
        } => {
            if *numeric {
                let mut hosts = match input {
                    Some(p) => read_hosts(p)?,
                    None => exhaustive_hosts(*max_n)?,
                };
                if input.is_none() {
                    hosts.extend(random_hosts(*random_count, 12, *seed));
                }
                numeric_report(&hosts, *seed)
            } else {
                let spec = match spec {
                    Some(p) => load_identity(&read_input(p)?)?,
                    None => IdentitySpec::builtin(),
                };
                symbolic_report(&spec)
            }
        }
        Command::Fit {
            term,
            max_n,
            degree,
            random_count,
            seed,
        } => {
            let cfg = FitConfig {
                random_count: *random_count,
                seed: *seed,
                ..FitConfig::new(*max_n, *degree)
            };
            fit(&parse_term(term)?, &cfg)
        }
        Command::Catalog { golden_dir, bless } => catalog(golden_dir.as_deref(), *bless),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

fn read_hosts(path: &Path) -> Result<Vec<SmallGraph>, Failure> {
    parse_graph6_lines(&read_input(path)?)
        .map_err(|(line, e)| Failure(format!("{} line {line}: {e}", path.display())))
}

fn parse_term(words: &[String]) -> Result<TermSpec, Failure> {
    Ok(words.join(" ").parse::<TermSpec>()?)
}

fn parse_pattern(text: &str) -> Result<SmallGraph, Failure> {
    Ok(match text.strip_prefix("g6:") {
        Some(g6) => parse_graph6(g6.as_bytes())?,
        None => named(text)?,
    })
}

fn count(pattern: &str, input: &Path) -> Result<Report, Failure> {
    let pattern = parse_pattern(pattern)?;
    let hosts = read_hosts(input)?;
    let mut text = String::from("graph6\ts\tj\n");
    let mut rows = Vec::new();
    for h in &hosts {
        let (g6, s, j) = (emit_graph6(h), s_count(&pattern, h), j_count(&pattern, h));
        text.push_str(&format!("{g6}\t{s}\t{j}\n"));
        rows.push(json!({ "graph6": g6, "s": s, "j": j }));
    }
    Ok(Report {
        text,
        json: json!({ "pattern": emit_graph6(&pattern), "hosts": rows }),
        pass: true,
    })
}

/// Monomial-basis rendering, constant first and catalog graphs by index.
fn render_monomial(e: &JExpr, catalog: &CatalogAssignment) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = e.terms().collect();
    terms.sort_by_key(|(k, _)| (k.n() != 0, catalog.index_of(k).unwrap_or(usize::MAX), **k));
    let mut out = String::new();
    for (k, c) in terms {
        let part = if k.n() == 0 {
            c.to_string()
        } else if c.as_constant().is_some() {
            format!("{c}·{}", catalog.label(k))
        } else {
            format!("({c})·{}", catalog.label(k))
        };
        match part.strip_prefix('-') {
            Some(rest) if !out.is_empty() => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            _ if !out.is_empty() => {
                out.push_str(" + ");
                out.push_str(&part);
            }
            _ => out = part,
        }
    }
    out
}

fn expression_json(e: &JExpr, catalog: &CatalogAssignment) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(k, c)| {
            json!({
                "graph6": emit_graph6(&k.graph()),
                "label": if k.n() == 0 { "1".to_string() } else { catalog.label(k) },
                "coefficients": c,
                "falling": c.display_falling(),
            })
        })
        .collect();
    json!({
        "falling": catalog.render(e),
        "monomial": render_monomial(e, catalog),
        "terms": terms,
    })
}

fn expand(term: &TermSpec) -> Result<Report, Failure> {
    let e = expand_term(term)?;
    let catalog = CatalogAssignment::builtin();
    let falling = catalog.render(&e);
    Ok(Report {
        text: format!("{falling}\nmonomial basis: {}\n", render_monomial(&e, &catalog)),
        json: json!({ "term": term.to_string(), "expansion": expression_json(&e, &catalog) }),
        pass: true,
    })
}

fn table_report(table: &TableData) -> Result<Report, Failure> {
    let catalog = resolve_catalog(table)?;
    let report = verify_table(table, &catalog)?;
    Ok(Report {
        text: report.to_text(),
        json: serde_json::to_value(&report)?,
        pass: report.all_pass(),
    })
}

fn symbolic_report(spec: &IdentitySpec) -> Result<Report, Failure> {
    let sum = verify_identity_symbolic(spec)?;
    let catalog = CatalogAssignment::builtin();
    let zero = sum.is_zero();
    let text = if zero {
        format!("identity holds: {} monomials cancel exactly\n", spec.monomials.len())
    } else {
        format!("identity FAILS: residual {}\n", catalog.render(&sum))
    };
    Ok(Report {
        text,
        json: json!({ "monomials": spec.monomials.len(), "zero": zero, "residual": expression_json(&sum, &catalog) }),
        pass: zero,
    })
}

fn numeric_report(hosts: &[SmallGraph], seed: u64) -> Result<Report, Failure> {
    let report = verify_identity_numeric(hosts);
    Ok(Report {
        text: report.to_text(),
        json: json!({ "seed": seed, "report": report }),
        pass: report.pass(),
    })
}

fn fit(term: &TermSpec, cfg: &FitConfig) -> Result<Report, Failure> {
    let fitted = fit_with(term, cfg)?;
    let expanded = expand_term(term)?;
    let catalog = CatalogAssignment::builtin();
    let agree = fitted == expanded;
    let verdict = if agree { "agrees with" } else { "DIFFERS from" };
    Ok(Report {
        text: format!("{}\nfitted solution {verdict} the symbolic expansion\n", catalog.render(&fitted)),
        json: json!({
            "term": term.to_string(),
            "fitted": expression_json(&fitted, &catalog),
            "agrees": agree,
        }),
        pass: agree,
    })
}

fn catalog(golden_dir: Option<&Path>, bless: bool) -> Result<Report, Failure> {
    let resolved = resolve_catalog(&TableData::builtin())?;
    let golden_path = golden_dir.map(|d| d.join("catalog.golden"));
    if bless {
        let path = golden_path.as_ref().expect("clap requires the golden directory");
        fs::write(path, resolved.to_golden())?;
    }
    let golden = match &golden_path {
        Some(p) => read_input(p)?,
        None => nbcount::verify::CATALOG_GOLDEN.to_string(),
    };
    let check = resolved.check_golden(&golden);
    let matched = resolved.entries().filter(|(_, e)| e.provenance == nbcount::verify::Provenance::ResolvedByMatching).count();
    let mut text = resolved.to_golden();
    text.push_str(&format!("{} rows, {matched} resolved by matching\n", resolved.len()));
    match &check {
        Ok(()) => text.push_str("golden file matches\n"),
        Err(e) => text.push_str(&format!("golden mismatch: {e}\n")),
    }
    let rows: Vec<Value> = resolved
        .entries()
        .map(|(i, e)| {
            json!({
                "index": i,
                "graph6": emit_graph6(&e.key.graph()),
                "provenance": e.provenance,
                "name": e.name,
            })
        })
        .collect();
    Ok(Report {
        text,
        json: json!({ "rows": rows, "resolved_by_matching": matched, "golden_match": check.is_ok() }),
        pass: check.is_ok(),
    })
}
