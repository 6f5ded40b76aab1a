use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rasc::gentree::{count_by_labels, Rule};
use rasc::oracle::{closed_form, expand_gf, fishburn_number, GfName};
use rasc::pattern::wilf_classes_capped;
use rasc::seqcore::DEFAULT_CAP;
use rasc::verify::{run_suite, Suite};
use rasc::word::format_entries;
use rasc::{Enumeration, Error, FamilyTag, Pattern};
use serde_json::json;

const GF_MAX_ORDER: usize = 64;

/// Revised ascent sequences from the command line.
#[derive(Parser)]
#[command(name = "rasc", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,

    /// Raise the largest length that may be enumerated exhaustively.
    #[arg(long, global = true, value_name = "N")]
    cap_override: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Tree,
    Oracle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Tree => "tree",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List every member of a family of one length, in lexicographic order.
    Enumerate {
        #[arg(long, default_value = "rasc", value_parser = parse_family)]
        family: FamilyTag,
        #[arg(long)]
        n: usize,
        /// Keep only words avoiding this pattern.
        #[arg(long, value_parser = parse_pattern)]
        avoid: Option<Pattern>,
    },
    /// Count a family for n = 1..=n-max by one or more methods.
    Count {
        #[arg(long, default_value = "rasc", value_parser = parse_family)]
        family: FamilyTag,
        #[arg(long, value_parser = parse_pattern)]
        avoid: Option<Pattern>,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "brute")]
        method: Vec<Method>,
        /// Report disagreements without failing.
        #[arg(long)]
        no_check: bool,
        /// Print the tree's label multiplicities, one line per level.
        #[arg(long)]
        dump_labels: bool,
    },
    /// Run a property suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
    },
    /// Print generating-function coefficients of t^1..t^order.
    Gf {
        #[arg(long, value_parser = parse_gf)]
        name: GfName,
        #[arg(long)]
        order: usize,
    },
    /// Group all patterns of one length by avoider counts.
    Wilf {
        #[arg(long)]
        pattern_length: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

fn parse_family(s: &str) -> Result<FamilyTag, Error> {
    s.parse()
}

fn parse_pattern(s: &str) -> Result<Pattern, Error> {
    Pattern::parse(s)
}

fn parse_suite(s: &str) -> Result<Suite, Error> {
    s.parse()
}

fn parse_gf(s: &str) -> Result<GfName, Error> {
    s.parse()
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Usage(_) | Error::Domain(_) => Failure::Usage(e.to_string()),
            Error::CapExceeded { .. } | Error::Consistency(_) => Failure::Check(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Check(format!("write failed: {e}"))
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let res = run(&cli, &mut out);
    let flushed = out.flush();
    match (res, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), _) => ExitCode::from(1),
        (Ok(true), Err(e)) => {
            eprintln!("rasc: write failed: {e}");
            ExitCode::from(1)
        }
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("rasc: {msg}");
            ExitCode::from(2)
        }
        (Err(Failure::Check(msg)), _) => {
            eprintln!("rasc: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let cap = cli.cap_override.unwrap_or(DEFAULT_CAP);
    match &cli.command {
        Command::Enumerate { family, n, avoid } => {
            enumerate(out, cli.format, cap, *family, *n, avoid.as_ref())
        }
        Command::Count {
            family,
            avoid,
            n_max,
            method,
            no_check,
            dump_labels,
        } => {
            let req = CountRequest {
                family: *family,
                avoid: avoid.as_ref(),
                n_max: *n_max,
                methods: method,
                cap,
                dump_labels: *dump_labels,
            };
            let agree = count(out, cli.format, &req)?;
            Ok(agree || *no_check)
        }
        Command::Verify { suite, n_max } => verify(out, cli.format, cap, *suite, *n_max),
        Command::Gf { name, order } => gf(out, cli.format, *name, *order),
        Command::Wilf {
            pattern_length,
            n_max,
        } => wilf(out, cli.format, cap, *pattern_length, *n_max),
    }
}

fn enumerate(
    out: &mut impl Write,
    format: Format,
    cap: usize,
    family: FamilyTag,
    n: usize,
    avoid: Option<&Pattern>,
) -> Outcome {
    if format == Format::Csv {
        return Err(usage("enumerate supports --format plain or jsonl"));
    }
    let mut e = Enumeration::new(family, n).cap(cap);
    if let Some(p) = avoid {
        e = e.avoiding(p);
    }
    let mut io_err = None;
    e.for_each(|x| {
        if io_err.is_some() {
            return;
        }
        let word = format_entries(x);
        let res = match format {
            Format::Jsonl => writeln!(out, "{}", json!({ "n": n, "word": word })),
            _ => writeln!(out, "{word}"),
        };
        if let Err(err) = res {
            io_err = Some(err);
        }
    })?;
    match io_err {
        Some(err) => Err(err.into()),
        None => Ok(true),
    }
}

struct CountRequest<'a> {
    family: FamilyTag,
    avoid: Option<&'a Pattern>,
    n_max: usize,
    methods: &'a [Method],
    cap: usize,
    dump_labels: bool,
}

fn tree_rule(req: &CountRequest) -> Result<Rule, Failure> {
    if req.family != FamilyTag::RevisedB {
        return Err(usage("the tree method only counts the rasc family"));
    }
    match req.avoid.map(|p| p.to_string()) {
        None => Ok(Rule::Generic),
        Some(s) if s == "123" => Ok(Rule::Tree123),
        Some(s) => Err(usage(format!("no generating tree for pattern {s}"))),
    }
}

fn oracle_counts(req: &CountRequest) -> Result<Vec<BigUint>, Failure> {
    match (req.avoid, req.family) {
        (None, FamilyTag::RevisedB | FamilyTag::RevisedC) => {
            Ok((1..=req.n_max).map(|n| fishburn_number(n - 1)).collect())
        }
        (None, FamilyTag::AscentSeq | FamilyTag::ModifiedA | FamilyTag::RevisedD) => {
            Ok((1..=req.n_max).map(fishburn_number).collect())
        }
        (None, f) => Err(usage(format!("no oracle for family {f}"))),
        (Some(p), FamilyTag::RevisedB) => (1..=req.n_max)
            .map(|n| closed_form(p, n).ok_or_else(|| usage(format!("no closed form for {p}"))))
            .collect(),
        (Some(_), f) => Err(usage(format!("pattern oracles only cover rasc, not {f}"))),
    }
}

fn count(out: &mut impl Write, format: Format, req: &CountRequest) -> Outcome {
    if req.n_max == 0 {
        return Err(usage("--n-max must be at least 1"));
    }
    if req.methods.is_empty() {
        return Err(usage("--method needs at least one method"));
    }
    if req.dump_labels && !req.methods.contains(&Method::Tree) {
        return Err(usage("--dump-labels needs the tree method"));
    }
    let mut columns: Vec<(Method, Vec<BigUint>)> = Vec::new();
    for &m in req.methods {
        if columns.iter().any(|(seen, _)| *seen == m) {
            continue;
        }
        let counts = match m {
            Method::Brute => (1..=req.n_max)
                .map(|n| {
                    let mut e = Enumeration::new(req.family, n).cap(req.cap);
                    if let Some(p) = req.avoid {
                        e = e.avoiding(p);
                    }
                    e.count().map(BigUint::from)
                })
                .collect::<Result<Vec<_>, _>>()?,
            Method::Tree => {
                let rule = tree_rule(req)?;
                let levels = count_by_labels(rule, req.n_max.max(2) - 1)?;
                if req.dump_labels {
                    dump_labels(out, format, &levels)?;
                }
                let mut counts = vec![BigUint::from(1u32)];
                counts.extend(levels.iter().map(|l| l.total()));
                counts.truncate(req.n_max);
                counts
            }
            Method::Oracle => oracle_counts(req)?,
        };
        columns.push((m, counts));
    }
    let agreement: Vec<bool> = (0..req.n_max)
        .map(|i| columns.iter().all(|(_, c)| c[i] == columns[0].1[i]))
        .collect();
    let multi = columns.len() > 1;
    match format {
        Format::Plain => {
            let mut head = vec!["n".to_string()];
            head.extend(columns.iter().map(|(m, _)| m.name().to_string()));
            if multi {
                head.push("agree".into());
            }
            writeln!(out, "{}", head.join(" "))?;
            for i in 0..req.n_max {
                let mut row = vec![(i + 1).to_string()];
                row.extend(columns.iter().map(|(_, c)| c[i].to_string()));
                if multi {
                    row.push(if agreement[i] { "yes" } else { "NO" }.into());
                }
                writeln!(out, "{}", row.join(" "))?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,method,count,agree")?;
            for i in 0..req.n_max {
                for (m, c) in &columns {
                    let agree = if multi {
                        agreement[i].to_string()
                    } else {
                        String::new()
                    };
                    writeln!(out, "{},{},{},{agree}", i + 1, m.name(), c[i])?;
                }
            }
        }
        Format::Jsonl => {
            for i in 0..req.n_max {
                for (m, c) in &columns {
                    let mut row = json!({
                        "n": i + 1,
                        "method": m.name(),
                        "count": c[i].to_string(),
                    });
                    if multi {
                        row["agree"] = json!(agreement[i]);
                    }
                    writeln!(out, "{row}")?;
                }
            }
        }
    }
    Ok(agreement.iter().all(|&a| a))
}

fn dump_labels(
    out: &mut impl Write,
    format: Format,
    levels: &[rasc::gentree::LabelCounts],
) -> Result<(), Failure> {
    for l in levels {
        match format {
            Format::Jsonl => {
                let labels: serde_json::Map<String, serde_json::Value> = l
                    .counts
                    .iter()
                    .map(|(lab, c)| (lab.to_string(), json!(c.to_string())))
                    .collect();
                writeln!(out, "{}", json!({ "level": l.level, "labels": labels }))?;
            }
            _ => writeln!(out, "{l}")?,
        }
    }
    Ok(())
}

fn verify(out: &mut impl Write, format: Format, cap: usize, suite: Suite, n_max: usize) -> Outcome {
    if format == Format::Csv {
        return Err(usage("verify supports --format plain or jsonl"));
    }
    // the eta suite enumerates one length beyond n_max
    if n_max + 1 > cap.min(DEFAULT_CAP) {
        return Err(Error::CapExceeded {
            n: n_max + 1,
            cap: cap.min(DEFAULT_CAP),
        }
        .into());
    }
    let results = run_suite(suite, n_max)?;
    for r in &results {
        match format {
            Format::Jsonl => writeln!(
                out,
                "{}",
                json!({
                    "suite": r.suite.name(),
                    "property": r.property,
                    "pass": r.pass,
                    "counterexample": r.counterexample,
                })
            )?,
            _ => writeln!(out, "{r}")?,
        }
    }
    let passed = results.iter().filter(|r| r.pass).count();
    if format == Format::Plain {
        writeln!(out, "{passed}/{} properties passed", results.len())?;
    }
    Ok(passed == results.len())
}

fn gf(out: &mut impl Write, format: Format, name: GfName, order: usize) -> Outcome {
    if order == 0 || order > GF_MAX_ORDER {
        return Err(usage(format!("--order must lie in 1..={GF_MAX_ORDER}")));
    }
    let coeffs = expand_gf(name, order)?;
    match format {
        Format::Plain => {
            let s: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", s.join(" "))?;
        }
        Format::Csv => {
            writeln!(out, "n,count")?;
            for (i, c) in coeffs.iter().enumerate() {
                writeln!(out, "{},{c}", i + 1)?;
            }
        }
        Format::Jsonl => {
            for (i, c) in coeffs.iter().enumerate() {
                writeln!(out, "{}", json!({ "n": i + 1, "count": c.to_string() }))?;
            }
        }
    }
    Ok(true)
}

fn wilf(out: &mut impl Write, format: Format, cap: usize, k: usize, n_max: usize) -> Outcome {
    if format == Format::Csv {
        return Err(usage("wilf emits JSON; use --format plain or jsonl"));
    }
    let report = wilf_classes_capped(k, n_max, cap)?;
    let classes: Vec<_> = report
        .classes
        .iter()
        .map(|c| {
            json!({
                "patterns": c.patterns.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "counts": c.counts.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let doc = json!({
        "pattern_length": report.pattern_length,
        "n_min": report.n_range.start(),
        "n_max": report.n_range.end(),
        "status": "conjectural up to n_max",
        "classes": classes,
    });
    match format {
        Format::Jsonl => writeln!(out, "{doc}")?,
        _ => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("json value")
        )?,
    }
    Ok(true)
}
