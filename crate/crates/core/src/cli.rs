//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::algebra::{format_rational, format_rationals, int, parse_rational_json, Rational};
use crate::cumulants::{
    beta_table, convert_sequence, experimental_multivariate_thm2, verify_identity, Basis, BetaTable, IdentityId, Report,
};
use crate::forests::{alpha, nesting_forest};
use crate::graphs::{anti_interval_graph, digraph_key, tutte_eval};
use crate::partitions::{
    enumerate_monotone_with_limit, enumerate_with_limit, mobius, Lattice, Limits, PartitionClass, SetPartition,
};
use crate::Error;

/// Exit status classes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "cumulants",
    version,
    about = "Exact cumulant identities and partition combinatorics"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, env = "CUMULANTS_FORMAT", value_enum)]
    pub format: Option<Format>,
    /// Enumeration size limit, overriding the per-class default.
    #[arg(long, global = true, env = "CUMULANTS_LIMIT")]
    pub limit: Option<usize>,
    /// Worker threads for verification sweeps.
    #[arg(long, global = true, env = "CUMULANTS_JOBS")]
    pub jobs: Option<usize>,
    /// Directory for persisted β tables.
    #[arg(long, global = true, env = "CUMULANTS_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List partitions of [n] in a class, or monotone partitions.
    Enumerate { n: usize, class: String },
    /// Check a catalog identity for every order up to n, or the whole catalog with --all.
    Verify {
        #[arg(long)]
        all: bool,
        /// `<identity> <n>`, or `<n>` with --all.
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Emit a coefficient table: beta, alpha, tutte or mobius.
    Table {
        what: TableKind,
        n: usize,
        /// Write to this file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Convert a univariate sequence between moments and cumulant families.
    Convert { from: String, to: String, values: String },
    /// Multivariate analogue of the univariate monotone expansions, reported without assertion.
    Experiment { n: usize },
    /// List catalog identities with their order limits.
    Identities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Beta,
    Alpha,
    Tutte,
    Mobius,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::LimitExceeded { .. } => EXIT_LIMIT,
        Error::IdentityFailed { .. } => EXIT_IDENTITY_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` and runs the command, writing data to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
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

type CliResult = std::result::Result<i32, Error>;

fn csv_err(e: csv::Error) -> Error {
    Error::Precondition(format!("csv failure: {e}"))
}

fn io_err(e: std::io::Error) -> Error {
    Error::Precondition(format!("i/o failure: {e}"))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Enumerate { n, class } => cmd_enumerate(cli, *n, class, out),
        Command::Verify { all, args } => cmd_verify(cli, *all, args, out),
        Command::Table { what, n, output } => {
            let body = cmd_table(cli, *what, *n)?;
            match output {
                Some(path) => std::fs::write(path, body).map_err(io_err)?,
                None => out.write_all(body.as_bytes()).map_err(io_err)?,
            }
            Ok(EXIT_OK)
        }
        Command::Convert { from, to, values } => {
            let from: Basis = from.parse()?;
            let to: Basis = to.parse()?;
            let values = parse_rational_json(values)?;
            let converted = convert_sequence(from, to, &values)?;
            let strings = format_rationals(&converted);
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&strings).expect("strings serialize")),
                Format::Csv | Format::Text => writeln!(out, "{}", strings.join(",")),
            }
            .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Experiment { n } => {
            let reports = (1..=*n)
                .map(experimental_multivariate_thm2)
                .collect::<Result<Vec<_>, _>>()?;
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&reports).expect("reports serialize")
            )
            .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Identities => {
            for id in IdentityId::ALL {
                writeln!(out, "{}\t{}", id.name(), id.max_n()).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn write_csv<const K: usize>(
    out: &mut dyn Write,
    header: [&str; K],
    rows: impl Iterator<Item = [String; K]>,
) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(std::io::Error::other)?;
    for row in rows {
        w.write_record(&row).map_err(std::io::Error::other)?;
    }
    w.flush()
}

fn flag_names(p: &SetPartition) -> String {
    let f = p.classify();
    let names: Vec<&str> = [
        (f.noncrossing, "noncrossing"),
        (f.interval, "interval"),
        (f.irreducible, "irreducible"),
        (f.connected, "connected"),
    ]
    .into_iter()
    .filter_map(|(on, name)| on.then_some(name))
    .collect();
    names.join(" ")
}

fn cmd_enumerate(cli: &Cli, n: usize, class: &str, out: &mut dyn Write) -> CliResult {
    let limits = Limits::from_env();
    let format = cli.format.unwrap_or(Format::Text);
    if class.eq_ignore_ascii_case("monotone") {
        let list = enumerate_monotone_with_limit(n, cli.limit.unwrap_or(limits.monotone))?;
        match format {
            Format::Json => {
                let rows: Vec<_> = list.iter().map(|p| p.ordered_blocks()).collect();
                writeln!(out, "{}", serde_json::to_string(&rows).expect("serialize"))
            }
            Format::Csv => write_csv(out, ["ordered_blocks"], list.iter().map(|p| [p.to_string()])),
            Format::Text => list.iter().try_for_each(|p| writeln!(out, "{p}")),
        }
        .map_err(io_err)?;
        return Ok(EXIT_OK);
    }
    let class: PartitionClass = class.parse()?;
    let list = enumerate_with_limit(n, class, cli.limit.unwrap_or(limits.for_class(class)))?;
    match format {
        Format::Json => {
            let rows: Vec<_> = list
                .iter()
                .map(|p| {
                    let f = p.classify();
                    json!({
                        "partition": p,
                        "noncrossing": f.noncrossing,
                        "interval": f.interval,
                        "irreducible": f.irreducible,
                        "connected": f.connected,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string(&rows).expect("serialize"))
        }
        Format::Csv => write_csv(
            out,
            ["partition", "flags"],
            list.iter().map(|p| [p.to_string(), flag_names(p)]),
        ),
        Format::Text => list.iter().try_for_each(|p| writeln!(out, "{p}")),
    }
    .map_err(io_err)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct IdentitySweep {
    identity: String,
    n_max: usize,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped_above: Option<usize>,
    results: Vec<Report>,
}

fn sweep(ids: &[IdentityId], n_max: usize, jobs: Option<usize>) -> Result<Vec<IdentitySweep>, Error> {
    let tasks: Vec<(usize, IdentityId, usize)> = ids
        .iter()
        .enumerate()
        .flat_map(|(i, &id)| (1..=n_max.min(id.max_n())).map(move |n| (i, id, n)))
        .collect();
    let run = || {
        tasks
            .par_iter()
            .map(|&(i, id, n)| verify_identity(id, n).map(|r| (i, r)))
            .collect::<Result<Vec<_>, Error>>()
    };
    let results = match jobs {
        Some(j) if j > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(run)?,
        _ => run()?,
    };
    let mut out: Vec<IdentitySweep> = ids
        .iter()
        .map(|&id| IdentitySweep {
            identity: id.name().to_string(),
            n_max,
            holds: true,
            skipped_above: (n_max > id.max_n()).then_some(id.max_n()),
            results: Vec::new(),
        })
        .collect();
    for (i, r) in results {
        out[i].holds &= r.holds;
        out[i].results.push(r);
    }
    Ok(out)
}

fn cmd_verify(cli: &Cli, all: bool, args: &[String], out: &mut dyn Write) -> CliResult {
    let parse_n = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Precondition(format!("expected an order, got `{s}`")))
    };
    let (ids, n_max): (Vec<IdentityId>, usize) = match (all, args) {
        (true, [n]) => (IdentityId::ALL.to_vec(), parse_n(n)?),
        (false, [id, n]) => {
            let id: IdentityId = id.parse()?;
            let n = parse_n(n)?;
            if n > id.max_n() {
                return Err(Error::LimitExceeded {
                    what: id.name().to_string(),
                    n,
                    limit: id.max_n(),
                });
            }
            (vec![id], n)
        }
        (true, _) => return Err(Error::Precondition("usage: verify --all <n>".into())),
        (false, _) => return Err(Error::Precondition("usage: verify <identity> <n>".into())),
    };
    if n_max == 0 {
        return Err(Error::Precondition("order must be at least 1".into()));
    }
    let sweeps = sweep(&ids, n_max, cli.jobs)?;
    let holds = sweeps.iter().all(|s| s.holds);
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            let body = if all {
                json!({ "n_max": n_max, "holds": holds, "identities": sweeps })
            } else {
                serde_json::to_value(&sweeps[0]).expect("serialize")
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("serialize"))
        }
        Format::Csv => write_csv(
            out,
            ["identity", "n", "holds", "lhs_terms", "rhs_terms"],
            sweeps.iter().flat_map(|s| &s.results).map(|r| {
                [
                    r.identity.clone(),
                    r.n.to_string(),
                    r.holds.to_string(),
                    r.lhs_terms.to_string(),
                    r.rhs_terms.to_string(),
                ]
            }),
        ),
        Format::Text => sweeps.iter().flat_map(|s| &s.results).try_for_each(|r| {
            writeln!(
                out,
                "{} n={} {}",
                r.identity,
                r.n,
                if r.holds { "PASS" } else { "FAIL" }
            )
        }),
    }
    .map_err(io_err)?;
    Ok(if holds { EXIT_OK } else { EXIT_IDENTITY_FAILED })
}

struct Row {
    partition: String,
    key: String,
    value: Rational,
}

fn cached_beta_table(dir: Option<&Path>, n: usize) -> Result<BetaTable, Error> {
    let Some(dir) = dir else {
        return beta_table(n);
    };
    let path = dir.join(format!("beta_{n}.csv"));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(t) = BetaTable::from_csv(&text) {
            if t.n == n && !t.rows.is_empty() {
                return Ok(t);
            }
        }
    }
    let table = beta_table(n)?;
    std::fs::create_dir_all(dir).map_err(io_err)?;
    std::fs::write(&path, table.to_csv()).map_err(io_err)?;
    Ok(table)
}

fn cmd_table(cli: &Cli, what: TableKind, n: usize) -> Result<String, Error> {
    const TABLE_LIMIT: usize = 7;
    if n > TABLE_LIMIT {
        return Err(Error::LimitExceeded {
            what: "table order".into(),
            n,
            limit: TABLE_LIMIT,
        });
    }
    let rows: Vec<Row> = match what {
        TableKind::Beta => cached_beta_table(cli.cache_dir.as_deref(), n)?
            .rows
            .into_iter()
            .map(|r| Row {
                partition: r.partition.to_string(),
                key: r.key,
                value: r.beta,
            })
            .collect(),
        TableKind::Alpha => enumerate_with_limit(n, PartitionClass::Noncrossing, TABLE_LIMIT)?
            .into_iter()
            .map(|p| {
                let forest = nesting_forest(&p)?.to_json(None);
                Ok(Row {
                    partition: p.to_string(),
                    key: serde_json::to_string(&forest).expect("serialize"),
                    value: alpha(&p)?,
                })
            })
            .collect::<Result<_, Error>>()?,
        TableKind::Tutte => enumerate_with_limit(n, PartitionClass::Irreducible, TABLE_LIMIT)?
            .into_iter()
            .map(|p| {
                let g = anti_interval_graph(&p);
                Row {
                    partition: p.to_string(),
                    key: digraph_key(&g),
                    value: tutte_eval(&g, &int(1), &int(0)),
                }
            })
            .collect(),
        TableKind::Mobius => {
            let mut rows = Vec::new();
            for p in enumerate_with_limit(n, PartitionClass::All, TABLE_LIMIT)? {
                for lattice in [Lattice::P, Lattice::NC, Lattice::I] {
                    if !lattice.class().contains(&p) {
                        continue;
                    }
                    rows.push(Row {
                        partition: p.to_string(),
                        key: match lattice {
                            Lattice::P => "P",
                            Lattice::NC => "NC",
                            Lattice::I => "I",
                        }
                        .into(),
                        value: mobius(&p, &SetPartition::one(n), lattice)?,
                    });
                }
            }
            rows
        }
    };
    Ok(match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["partition", "key", "value"]).map_err(csv_err)?;
            for r in &rows {
                w.write_record([r.partition.as_str(), r.key.as_str(), &format_rational(&r.value)])
                    .map_err(csv_err)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| csv_err(e.into_error().into()))?).expect("utf-8 output")
        }
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|r| json!({ "partition": r.partition, "key": r.key, "value": format_rational(&r.value) }))
                .collect();
            let mut s = serde_json::to_string_pretty(&v).expect("serialize");
            s.push('\n');
            s
        }
        Format::Text => rows
            .iter()
            .map(|r| format!("{}\t{}\t{}\n", r.partition, r.key, format_rational(&r.value)))
            .collect(),
    })
}
