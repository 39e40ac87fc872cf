use std::fs::{self, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ordsemi::analysis::analyze;
use ordsemi::enumeration::{first_row_prefixes, Dedup, EnumerationCursor, OrderedSemigroupEnumerator};
use ordsemi::expr::{evaluate, PropertyExpr};
use ordsemi::regularity::RvReading;
use ordsemi::theorems::{self, check_with, CheckOptions, TheoremReport, CATALOG};
use ordsemi::{Error, OrderedSemigroup};

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_FOUND: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ordsemi",
    version,
    about = "Finite ordered semigroups: analysis, enumeration, theorem checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a structure file.
    Validate { file: PathBuf },
    /// Print every property, relation and theorem report for a structure.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Stream every ordered semigroup of an order as JSON lines.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = DedupArg::Raw)]
        dedup: DedupArg,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Resume from and periodically save to this cursor file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Stop after this many structures (the checkpoint records where).
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Check catalog theorems on every structure of an order.
    Verify {
        #[arg(long)]
        order: usize,
        #[arg(long = "theorem", conflicts_with = "all")]
        theorems: Vec<String>,
        #[arg(long)]
        all: bool,
        /// Treat adapted theorems' counterexamples as failures.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = DedupArg::Raw)]
        dedup: DedupArg,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Emit structures of an order satisfying a property expression.
    Search {
        #[arg(long)]
        order: usize,
        #[arg(long = "where")]
        filter: String,
        #[arg(long, conflicts_with = "count")]
        first: bool,
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t = DedupArg::Raw)]
        dedup: DedupArg,
        #[command(flatten)]
        common: Common,
    },
    /// List the theorem catalog.
    Theorems,
}

#[derive(Args)]
struct Common {
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Count elements without inverses as members of RV-style sets.
    #[arg(long)]
    rv_vacuous: bool,
}

impl Common {
    fn reading(&self) -> RvReading {
        if self.rv_vacuous {
            RvReading::Vacuous
        } else {
            RvReading::Nonempty
        }
    }

    fn pool(&self) -> rayon::ThreadPool {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = self.jobs {
            b = b.num_threads(j.max(1));
        }
        b.build().expect("thread pool")
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupArg {
    Raw,
    Iso,
}

impl From<DedupArg> for Dedup {
    fn from(d: DedupArg) -> Dedup {
        match d {
            DedupArg::Raw => Dedup::Raw,
            DedupArg::Iso => Dedup::Iso,
        }
    }
}

/// A failure with the exit code it maps to.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match e {
            Error::OrderTooLarge { .. } | Error::UnknownTheorem(_) => EXIT_USAGE,
            _ => EXIT_INVALID,
        };
        Fail(code, e.to_string())
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Fail {
        Fail(EXIT_INVALID, e.to_string())
    }
}

type Outcome = Result<u8, Fail>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Analyze { file, json, common } => run_analyze(&file, json, &common),
        Command::Enumerate {
            order,
            dedup,
            out,
            checkpoint,
            limit,
        } => enumerate(order, dedup.into(), out.as_deref(), checkpoint.as_deref(), limit),
        Command::Verify {
            order,
            theorems,
            all,
            strict,
            dedup,
            json,
            common,
        } => verify(order, &theorems, all, strict, dedup.into(), json, &common),
        Command::Search {
            order,
            filter,
            first,
            count,
            dedup,
            common,
        } => search(order, &filter, first, count, dedup.into(), &common),
        Command::Theorems => {
            for t in CATALOG {
                let tag = if t.adapted { " [ADAPTED]" } else { "" };
                println!("{:<16} {}{}", t.id, t.summary, tag);
            }
            Ok(0)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn load(path: &Path) -> Result<OrderedSemigroup, Fail> {
    let text = fs::read_to_string(path).map_err(|e| Fail(EXIT_INVALID, format!("{}: {e}", path.display())))?;
    Ok(OrderedSemigroup::from_json(&text)?)
}

fn validate(path: &Path) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| Fail(EXIT_INVALID, format!("{}: {e}", path.display())))?;
    match OrderedSemigroup::from_json(&text) {
        Ok(_) => {
            println!("valid");
            Ok(0)
        }
        Err(Error::Invalid(violations)) => {
            println!("invalid");
            for v in violations {
                println!("{v}");
            }
            Ok(EXIT_INVALID)
        }
        Err(e) => Err(Fail(EXIT_INVALID, e.to_string())),
    }
}

fn run_analyze(path: &Path, json: bool, common: &Common) -> Outcome {
    let s = load(path)?;
    let report = common.pool().install(|| analyze(&s, common.reading()));
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("json"));
        return Ok(0);
    }
    println!("structure {}", s.to_json());
    println!("order {}", s.order());
    println!("\nproperties");
    for (k, v) in report["atoms"].as_object().expect("atoms") {
        println!("  {k:<18} {v}");
    }
    println!("\nrelations");
    for key in ["green", "green_star"] {
        for (k, v) in report[key].as_object().expect("relations") {
            println!("  {k:<3} {v}");
        }
    }
    println!("\nsets");
    println!("  kernel{:<14} {}", "", report["kernel"]);
    println!(
        "  least csl congruence {}",
        report["least_complete_semilattice_congruence"]
    );
    for (k, v) in report["sets"].as_object().expect("sets") {
        println!("  {k:<20} {v}");
    }
    println!("\ntheorems");
    let reports: Vec<TheoremReport> = common.pool().install(|| {
        ordsemi::analysis::theorem_reports(
            &s,
            &CheckOptions {
                rv_reading: common.reading(),
            },
        )
    });
    for r in reports {
        print!("{r}");
    }
    Ok(0)
}

fn write_cursor(path: &Path, cursor: &EnumerationCursor) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_string(cursor).expect("cursor json"))?;
    fs::rename(tmp, path)
}

fn enumerate(order: usize, dedup: Dedup, out: Option<&Path>, checkpoint: Option<&Path>, limit: Option<u64>) -> Outcome {
    let resumed = match checkpoint {
        Some(p) if p.exists() => {
            let cursor: EnumerationCursor = serde_json::from_str(&fs::read_to_string(p)?).map_err(Error::from)?;
            if cursor.order != order || cursor.dedup != dedup {
                return Err(Fail(
                    EXIT_USAGE,
                    "checkpoint was written for a different order or dedup mode".into(),
                ));
            }
            Some(cursor)
        }
        _ => None,
    };
    let mut it = match &resumed {
        Some(c) => OrderedSemigroupEnumerator::resume(c)?,
        None => OrderedSemigroupEnumerator::new(order, dedup)?,
    };
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(
            OpenOptions::new()
                .create(true)
                .write(true)
                .append(resumed.is_some())
                .truncate(resumed.is_none())
                .open(p)?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    let mut this_run = 0u64;
    loop {
        if limit.is_some_and(|l| this_run >= l) {
            break;
        }
        let Some(s) = it.next() else { break };
        writeln!(sink, "{}", s.to_json())?;
        this_run += 1;
        if let Some(p) = checkpoint {
            if this_run.is_multiple_of(1000) {
                sink.flush()?;
                write_cursor(p, &it.cursor())?;
            }
        }
    }
    sink.flush()?;
    if let Some(p) = checkpoint {
        write_cursor(p, &it.cursor())?;
    }
    Ok(0)
}

/// Every structure of the order, produced in parallel slices and returned
/// in enumeration order.
fn sweep<T: Send>(
    order: usize,
    dedup: Dedup,
    f: impl Fn(OrderedSemigroup) -> Option<T> + Sync,
) -> Result<Vec<(u64, Vec<T>)>, Fail> {
    let prefixes = first_row_prefixes(order);
    let slices: Result<Vec<(u64, Vec<T>)>, Error> = prefixes
        .par_iter()
        .map(|p| {
            let mut seen = 0u64;
            let mut hits = Vec::new();
            for s in OrderedSemigroupEnumerator::with_prefix(order, dedup, p)? {
                seen += 1;
                hits.extend(f(s));
            }
            Ok((seen, hits))
        })
        .collect();
    Ok(slices?)
}

#[allow(clippy::too_many_arguments)]
fn verify(order: usize, ids: &[String], all: bool, strict: bool, dedup: Dedup, json: bool, common: &Common) -> Outcome {
    let ids: Vec<&'static str> = if all || ids.is_empty() {
        CATALOG.iter().map(|t| t.id).collect()
    } else {
        ids.iter()
            .map(|i| theorems::lookup(i).map(|t| t.id))
            .collect::<Result<_, _>>()?
    };
    let opts = CheckOptions {
        rv_reading: common.reading(),
    };
    // per structure and theorem: whether it ran, and the report if it failed
    let slices = common.pool().install(|| {
        sweep(order, dedup, |s| {
            let outcomes: Vec<(bool, Option<TheoremReport>)> = ids
                .iter()
                .map(|id| match check_with(&s, id, &opts) {
                    Ok(r) if r.is_consistent() => (true, None),
                    Ok(r) => (true, Some(r)),
                    Err(_) => (false, None),
                })
                .collect();
            Some((s, outcomes))
        })
    })?;
    let mut total = 0u64;
    let mut checked = vec![0u64; ids.len()];
    let mut failures: Vec<(OrderedSemigroup, TheoremReport)> = Vec::new();
    for (seen, hits) in slices {
        total += seen;
        for (s, outcomes) in hits {
            for (k, (ran, bad)) in outcomes.into_iter().enumerate() {
                checked[k] += ran as u64;
                if let Some(r) = bad {
                    failures.push((s.clone(), r));
                }
            }
        }
    }
    let mut fatal = false;
    let mut lines = Vec::new();
    for (k, id) in ids.iter().enumerate() {
        let info = theorems::lookup(id)?;
        let bad = failures.iter().filter(|(_, r)| r.theorem_id == *id).count();
        let status = match (bad, info.adapted) {
            (0, _) => "ok",
            (_, true) if !strict => "WARNING (adapted)",
            _ => {
                fatal = true;
                "COUNTEREXAMPLE"
            }
        };
        lines.push(serde_json::json!({
            "theorem": id,
            "checked": checked[k],
            "counterexamples": bad,
            "status": status,
        }));
    }
    if json {
        let failures_json: Vec<serde_json::Value> = failures
            .iter()
            .map(|(s, r)| {
                serde_json::json!({
                    "structure": serde_json::from_str::<serde_json::Value>(&s.to_json()).expect("json"),
                    "report": r,
                })
            })
            .collect();
        let doc = serde_json::json!({
            "order": order,
            "dedup": dedup,
            "structures": total,
            "theorems": lines,
            "counterexamples": failures_json,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        for (s, r) in &failures {
            println!("{}", s.to_json());
            print!("{r}");
        }
        println!("order {order}, {} structures", total);
        for l in &lines {
            println!(
                "{:<16} checked {:>7}  counterexamples {:>5}  {}",
                l["theorem"].as_str().unwrap_or_default(),
                l["checked"],
                l["counterexamples"],
                l["status"].as_str().unwrap_or_default()
            );
        }
    }
    Ok(if fatal { EXIT_FOUND } else { 0 })
}

fn search(order: usize, filter: &str, first: bool, count: bool, dedup: Dedup, common: &Common) -> Outcome {
    let e = PropertyExpr::parse(filter).map_err(|e| Fail(EXIT_INVALID, e.to_string()))?;
    if first {
        for s in OrderedSemigroupEnumerator::new(order, dedup)? {
            if evaluate(&s, &e)? {
                println!("{}", s.to_json());
                return Ok(0);
            }
        }
        eprintln!("no structure of order {order} satisfies {e}");
        return Ok(EXIT_FOUND);
    }
    let slices = common.pool().install(|| {
        sweep(order, dedup, |s| match evaluate(&s, &e) {
            Ok(true) => Some(Ok(s)),
            Ok(false) => None,
            Err(err) => Some(Err(err)),
        })
    })?;
    let mut n = 0u64;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for (_, hits) in slices {
        for h in hits {
            let s = h?;
            n += 1;
            if !count {
                writeln!(out, "{}", s.to_json())?;
            }
        }
    }
    if count {
        writeln!(out, "{n}")?;
    }
    out.flush()?;
    Ok(0)
}
