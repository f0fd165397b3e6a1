use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use supercong::catalog::{self, RunConfig, Status, Summary, Verdict};
use supercong::identity::{self, SuiteConfig};
use supercong::series;
use supercong::special::tables::set_exact_ceiling;

#[derive(Parser, Debug)]
#[command(
    name = "supercong",
    version,
    about = "Check super congruences, binomial identities and series numerically"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Comma-separated ids; a trailing `*` matches a prefix.
    #[arg(long, global = true, value_delimiter = ',')]
    ids: Vec<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Omit the generation time, making reports reproducible byte for byte.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Worker threads (default: machine parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Largest index served from exact Bernoulli/Euler tables.
    #[arg(long, global = true)]
    exact_ceiling: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check catalog congruences over a prime range.
    Check {
        #[arg(long, default_value = "5..200", value_parser = parse_range)]
        primes: (u64, u64),
        #[arg(long, default_value_t = 1)]
        a_max: u32,
        #[arg(long, default_value_t = supercong::sums::DEFAULT_GUARD)]
        guard: u32,
        /// Largest prime checked at a >= 2.
        #[arg(long, default_value_t = 100)]
        a_cap_prime: u64,
    },
    /// Primes p <= N dividing E_{p-3}.
    SearchExceptional {
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
    /// Exact identities, sequences and divisibility claims.
    Identities {
        #[arg(long, default_value_t = 200)]
        n_max: u64,
    },
    /// Series against their closed forms.
    Series {
        #[arg(long, default_value_t = 40)]
        digits: u32,
        /// Terms per series (default: enough for the declared ratio).
        #[arg(long)]
        terms: Option<u64>,
    },
    /// Every registered id with its statement.
    List,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got `{s}`"))?;
    let lo: u64 = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: u64 = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad upper bound: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn matches(patterns: &[String], id: &str) -> bool {
    patterns.is_empty()
        || patterns.iter().any(|p| match p.strip_suffix('*') {
            Some(prefix) => id.starts_with(prefix),
            None => p == id,
        })
}

fn is_conjecture(id: &str) -> bool {
    id.starts_with("conj")
}

fn timestamp() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

struct Report {
    body: String,
    summary: Summary,
    /// Failures among proven statements.
    theorem_failures: usize,
    conjecture_failures: usize,
}

fn count(verdicts: impl Iterator<Item = (bool, Verdict)>) -> (Summary, usize, usize) {
    let mut s = Summary::default();
    let (mut thm, mut conj) = (0, 0);
    for (conjecture, v) in verdicts {
        s.total += 1;
        match v {
            Verdict::Pass => s.pass += 1,
            Verdict::Fail => {
                s.fail += 1;
                if conjecture {
                    conj += 1
                } else {
                    thm += 1
                }
            }
            Verdict::Skipped(_) => s.skipped += 1,
        }
    }
    (s, thm, conj)
}

fn finish(common: &Common, r: Report) -> Result<i32, String> {
    let mut body = r.body;
    let stamp = (!common.no_timestamp).then(timestamp);
    match common.format {
        Format::Json => {
            let mut v = json!({
                "summary": r.summary,
                "theoremFailures": r.theorem_failures,
                "conjectureFailures": r.conjecture_failures,
            });
            if let Some(t) = stamp {
                v["timestamp"] = json!(t);
            }
            body.push_str(&v.to_string());
            body.push('\n');
        }
        Format::Text => {
            body.push_str(&format!(
                "# {}; theorem failures {}, conjecture failures {}\n",
                r.summary, r.theorem_failures, r.conjecture_failures
            ));
            if let Some(t) = stamp {
                body.push_str(&format!("# generated {t}\n"));
            }
        }
        Format::Csv => {}
    }
    match &common.out {
        Some(path) => fs::write(path, body).map_err(|e| format!("cannot write {path}: {e}"))?,
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| e.to_string())?,
    }
    if common.format == Format::Csv || common.out.is_some() {
        eprintln!(
            "{}; theorem failures {}, conjecture failures {}",
            r.summary, r.theorem_failures, r.conjecture_failures
        );
    }
    Ok(if r.theorem_failures > 0 { 1 } else { 0 })
}

fn check_report(
    common: &Common,
    primes: (u64, u64),
    a_max: u32,
    guard: u32,
    a_cap_prime: u64,
) -> Result<Report, String> {
    let patterns = if common.ids.is_empty() {
        vec!["*".to_string()]
    } else {
        common.ids.clone()
    };
    let specs = catalog::select(&patterns);
    if specs.is_empty() {
        return Err(format!("no catalog entries match {}", patterns.join(",")));
    }
    let cfg = RunConfig {
        guard,
        a_cap_prime,
        workers: common.workers,
    };
    let rows = catalog::run_specs(&specs, primes.0, primes.1, a_max, &cfg);
    let (summary, thm, conj) = count(
        rows.iter()
            .map(|r| (r.status == Status::Conjecture, r.verdict.clone())),
    );
    let body = match common.format {
        Format::Json => catalog::to_json_lines(&rows),
        Format::Csv => catalog::to_csv(&rows),
        Format::Text => catalog::to_text(&rows),
    };
    Ok(Report {
        body,
        summary,
        theorem_failures: thm,
        conjecture_failures: conj,
    })
}

fn exceptional_report(common: &Common, bound: u64) -> Result<Report, String> {
    let hits = catalog::exceptional_report(bound).map_err(|e| e.to_string())?;
    let body = match common.format {
        Format::Json => hits
            .iter()
            .map(|h| serde_json::to_string(h).expect("serializable") + "\n")
            .collect(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for h in &hits {
                w.serialize(h).map_err(|e| e.to_string())?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
        }
        Format::Text => {
            let ps: Vec<String> = hits.iter().map(|h| h.p.to_string()).collect();
            ps.join(" ") + "\n"
        }
    };
    let summary = Summary {
        total: hits.len(),
        pass: hits.len(),
        ..Default::default()
    };
    Ok(Report {
        body,
        summary,
        theorem_failures: 0,
        conjecture_failures: 0,
    })
}

fn identity_report(common: &Common, n_max: u64) -> Result<Report, String> {
    if n_max == 0 {
        return Err("--n-max must be positive".into());
    }
    let rows: Vec<_> = identity::run_identity_suite(&SuiteConfig::with_n_max(n_max))
        .into_iter()
        .filter(|r| matches(&common.ids, &r.id))
        .collect();
    let (summary, thm, conj) = count(
        rows.iter()
            .map(|r| (is_conjecture(&r.id), r.verdict.clone())),
    );
    let body = match common.format {
        Format::Json => identity::rows_to_json_lines(&rows),
        Format::Csv => identity::rows_to_csv(&rows),
        Format::Text => identity::rows_to_text(&rows),
    };
    Ok(Report {
        body,
        summary,
        theorem_failures: thm,
        conjecture_failures: conj,
    })
}

fn series_report(common: &Common, digits: u32, terms: Option<u64>) -> Result<Report, String> {
    if digits == 0 || digits > series::MAX_SERIES_DIGITS {
        return Err(format!(
            "--digits must lie in 1..={}",
            series::MAX_SERIES_DIGITS
        ));
    }
    let ids: Vec<String> = series::series_registry()
        .iter()
        .filter(|e| matches(&common.ids, e.id))
        .map(|e| e.id.to_string())
        .collect();
    let rows = series::run_series_suite(Some(&ids), digits, terms);
    let (summary, thm, conj) = count(
        rows.iter()
            .map(|r| (is_conjecture(&r.id), r.verdict.clone())),
    );
    let body = match common.format {
        Format::Json => series::series_rows_to_json_lines(&rows),
        Format::Csv => series::series_rows_to_csv(&rows),
        Format::Text => series::series_rows_to_text(&rows),
    };
    Ok(Report {
        body,
        summary,
        theorem_failures: thm,
        conjecture_failures: conj,
    })
}

fn list_report(common: &Common) -> Result<Report, String> {
    let mut rows: Vec<(String, &'static str, String, String)> = Vec::new();
    for s in catalog::catalog() {
        rows.push((
            s.id.clone(),
            "congruence",
            s.status.to_string(),
            s.statement(),
        ));
    }
    for id in identity::identity_ids() {
        rows.push((
            id.to_string(),
            "identity",
            "theorem".into(),
            identity::identity_statement(id)
                .unwrap_or_default()
                .to_string(),
        ));
    }
    for id in identity::divisibility_ids() {
        let status = if is_conjecture(id) {
            "conjecture"
        } else {
            "theorem"
        };
        rows.push((
            id.to_string(),
            "divisibility",
            status.into(),
            identity::divisibility_statement(id)
                .unwrap_or_default()
                .to_string(),
        ));
    }
    for e in series::series_registry() {
        let status = if is_conjecture(e.id) {
            "conjecture"
        } else {
            "theorem"
        };
        rows.push((e.id.to_string(), "series", status.into(), e.statement()));
    }
    rows.retain(|r| matches(&common.ids, &r.0));
    let body = match common.format {
        Format::Json => rows
            .iter()
            .map(|(id, kind, status, st)| {
                json!({"id": id, "kind": kind, "status": status, "statement": st}).to_string()
                    + "\n"
            })
            .collect(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "kind", "status", "statement"])
                .map_err(|e| e.to_string())?;
            for (id, kind, status, st) in &rows {
                w.write_record([id.as_str(), kind, status, st])
                    .map_err(|e| e.to_string())?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
        }
        Format::Text => rows
            .iter()
            .map(|(id, kind, status, st)| format!("{id:<28} {kind:<12} {status:<10} {st}\n"))
            .collect(),
    };
    let summary = Summary {
        total: rows.len(),
        ..Default::default()
    };
    Ok(Report {
        body,
        summary,
        theorem_failures: 0,
        conjecture_failures: 0,
    })
}

/// Parse `argv`, run the command and return the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let common = cli.common.clone();
    if let Some(c) = common.exact_ceiling {
        set_exact_ceiling(c);
    }
    if let Some(n) = common.workers {
        // Only the first configuration of the global pool takes effect.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
    let report = match cli.command {
        Command::Check {
            primes,
            a_max,
            guard,
            a_cap_prime,
        } => check_report(&common, primes, a_max, guard, a_cap_prime),
        Command::SearchExceptional { bound } => exceptional_report(&common, bound),
        Command::Identities { n_max } => identity_report(&common, n_max),
        Command::Series { digits, terms } => series_report(&common, digits, terms),
        Command::List => list_report(&common),
    };
    match report.and_then(|r| finish(&common, r)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()) as u8)
}
