//! The `mahonian` command line, as a library so it can be driven in tests.
//!
//! [`run`] never exits the process; it returns the exit code together with
//! everything that would have been written to stdout and stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use mahonian_core::verify::{
    check_equidistribution, check_involution_and_transport, distribution,
    probe_rearrangement_classes, search_mahonian_extensions, EquidistributionReport,
    ExtensionSearchReport, TransportReport,
};
use mahonian_core::{
    complement_step, encode_refinement, expand, p_perm, ppart, stat_tuple, trace, wpart, Error,
    Letter, Limits, PatternCombination, Permutation, Statistic, Universe, Word,
};
use serde::Serialize;
use serde_json::{json, Value};

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "mahonian",
    version,
    about = "Mahonian statistics, vincular patterns and the involution p"
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Largest universe to enumerate [env: MAHONIAN_MAX_ELEMENTS] [default: 10000000]
    #[arg(long, global = true)]
    max_elements: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The tuple (adj, des, ides, F, MAJ, STAT) of a word
    Stats { word: String },
    /// Image of a word under p
    Bijection {
        word: String,
        /// Show every intermediate object
        #[arg(long)]
        trace: bool,
    },
    /// Image of a permutation under p, with the complement step
    PermBijection { perm: String },
    /// Occurrences of a pattern or of a sum of patterns
    Count {
        pattern: String,
        word: String,
        /// List each occurrence by its 1-based positions
        #[arg(long)]
        list: bool,
    },
    /// Joint distribution of statistics over a universe
    Distribution {
        #[arg(long, value_enum)]
        universe: UniverseKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, conflicts_with = "class")]
        q: Option<Letter>,
        /// Any word of the class, for --universe class
        #[arg(long)]
        class: Option<String>,
        /// Comma-separated statistic names (INV, MAJ, des, ides, adj, F, STAT)
        #[arg(long, required = true, value_delimiter = ',')]
        stat: Vec<String>,
    },
    /// Exhaustive checks; exit status 1 when a check fails
    Verify {
        #[arg(value_enum)]
        check: Check,
        /// A length N or an inclusive range A..B
        #[arg(long, value_parser = parse_lengths)]
        n: Option<RangeInclusive<usize>>,
        /// Alphabet size; permutations when omitted
        #[arg(long)]
        q: Option<Letter>,
    },
    /// wpart, exp and ppart of a word
    Partitions { word: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum UniverseKind {
    Perms,
    Words,
    Dense,
    Class,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Check {
    Involution,
    Transport,
    Mahonian,
    Extensions,
    Classes,
}

fn parse_lengths(s: &str) -> Result<RangeInclusive<usize>, String> {
    let number = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("expected a length or A..B, found {s:?}"))
    };
    let range = match s.split_once("..") {
        Some((a, b)) => number(a)?..=number(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let n = number(s)?;
            n..=n
        }
    };
    if range.is_empty() || *range.start() == 0 {
        return Err(format!(
            "length range {s:?} must be nonempty and start at 1 or more"
        ));
    }
    Ok(range)
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// What a command produced: its text and whether its verdict passed.
struct Rendered {
    text: String,
    passed: bool,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Rendered { text, passed: true }
    }
}

/// Runs the command line `args`, whose first item is the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(r) => Output {
            code: if r.passed {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            },
            stdout: r.text,
            stderr: String::new(),
        },
        Err(Failure::Usage(message)) => Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}

fn execute(cli: &Cli) -> Result<Rendered, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Stats { word } => stats(format, &parse_word(word)?),
        Command::Bijection { word, trace } => bijection(format, &parse_word(word)?, *trace),
        Command::PermBijection { perm } => perm_bijection(format, perm),
        Command::Count {
            pattern,
            word,
            list,
        } => count(format, pattern, &parse_word(word)?, *list),
        Command::Distribution {
            universe,
            n,
            q,
            class,
            stat,
        } => {
            let u = build_universe(*universe, *n, *q, class.as_deref())?;
            let stats = stat
                .iter()
                .map(|s| s.parse::<Statistic>())
                .collect::<Result<Vec<_>, _>>()?;
            distribution_table(format, &u, &stats, &limits(cli)?)
        }
        Command::Verify { check, n, q } => verify(format, *check, n.clone(), *q, &limits(cli)?),
        Command::Partitions { word } => partitions(format, &parse_word(word)?),
    }
}

fn limits(cli: &Cli) -> Result<Limits, Failure> {
    match cli.max_elements {
        Some(m) => Ok(Limits::new(m)),
        None => Ok(Limits::from_env()?),
    }
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    s.parse::<Word>()
        .map_err(|e| Failure::Usage(format!("word {s:?}: {e}")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_rows<S: AsRef<str>>(
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<S>>,
) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.iter().map(|s| s.as_ref()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn stats(format: OutputFormat, v: &Word) -> Result<Rendered, Failure> {
    let t = stat_tuple(v);
    let values = [t.adj, t.des, t.ides, t.first, t.maj, t.stat];
    let names = ["adj", "des", "ides", "F", "MAJ", "STAT"];
    let text = match format {
        OutputFormat::Text => {
            let fields: Vec<String> = names
                .iter()
                .zip(values)
                .map(|(n, x)| format!("{n}={x}"))
                .collect();
            format!("{}\n", fields.join(" "))
        }
        OutputFormat::Json => to_json(&t),
        OutputFormat::Csv => {
            let mut header = vec!["word"];
            header.extend(names);
            let mut row = vec![v.to_string()];
            row.extend(values.iter().map(u64::to_string));
            csv_rows(&header, [row])?
        }
    };
    Ok(Rendered::ok(text))
}

fn bijection(format: OutputFormat, v: &Word, with_trace: bool) -> Result<Rendered, Failure> {
    let t = trace(v);
    let alphabet = t
        .alphabet
        .iter()
        .map(Letter::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let fields: Vec<(&str, String)> = vec![
        ("input", t.input.to_string()),
        ("reduced", t.reduced.to_string()),
        ("alphabet", alphabet),
        ("pi", t.pi.to_string()),
        ("P", t.ppart_pi.to_string()),
        ("sigma", t.sigma.to_string()),
        ("S", t.ppart_sigma.to_string()),
        ("R", t.wpart_v.to_string()),
        ("encoding", t.encoding.to_string()),
        ("T", t.t.to_string()),
        ("reduced_output", t.reduced_output.to_string()),
        ("output", t.output.to_string()),
    ];
    let text = match (format, with_trace) {
        (OutputFormat::Text, false) => format!("{}\n", t.output),
        (OutputFormat::Text, true) => {
            let mut s = String::new();
            for (k, x) in &fields {
                writeln!(s, "{k:<15}{x}").unwrap();
            }
            s
        }
        (OutputFormat::Json, false) => to_json(&json!({ "input": t.input, "output": t.output })),
        (OutputFormat::Json, true) => to_json(&t),
        (OutputFormat::Csv, false) => csv_rows(
            &["input", "output"],
            [vec![t.input.to_string(), t.output.to_string()]],
        )?,
        (OutputFormat::Csv, true) => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            csv_rows(&header, [fields.iter().map(|(_, x)| x.clone()).collect()])?
        }
    };
    Ok(Rendered::ok(text))
}

fn perm_bijection(format: OutputFormat, s: &str) -> Result<Rendered, Failure> {
    let pi: Permutation = s
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("permutation {s:?}: {e}")))?;
    let c = complement_step(&pi);
    let image = p_perm(&pi);
    let text = match format {
        OutputFormat::Text => format!("{image}\n"),
        OutputFormat::Json => to_json(&json!({ "input": pi, "complement": c, "output": image })),
        OutputFormat::Csv => csv_rows(
            &["input", "complement", "output"],
            [vec![pi.to_string(), c.to_string(), image.to_string()]],
        )?,
    };
    Ok(Rendered::ok(text))
}

fn count(format: OutputFormat, pattern: &str, v: &Word, list: bool) -> Result<Rendered, Failure> {
    let combination: PatternCombination = pattern
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("pattern {pattern:?}: {e}")))?;
    let total = combination.evaluate(v);
    let occurrences: Vec<(String, Vec<usize>)> = combination
        .patterns()
        .iter()
        .flat_map(|p| {
            p.list_occurrences(v)
                .into_iter()
                .map(move |o| (p.to_string(), o))
        })
        .collect();
    let letters_at = |o: &[usize]| {
        Word::new(o.iter().map(|&i| v.letters()[i - 1]).collect())
            .expect("occurrences are nonempty")
            .to_string()
    };
    let join = |o: &[usize]| o.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let text = match format {
        OutputFormat::Text => {
            let mut s = format!("{total}\n");
            if list {
                for (p, o) in &occurrences {
                    writeln!(s, "{p} at {}: {}", join(o), letters_at(o)).unwrap();
                }
            }
            s
        }
        OutputFormat::Json => {
            let mut value = json!({
                "pattern": combination.to_string(),
                "word": v,
                "count": total,
            });
            if list {
                value["occurrences"] = occurrences
                    .iter()
                    .map(|(p, o)| json!({ "pattern": p, "positions": o, "letters": letters_at(o) }))
                    .collect();
            }
            to_json(&value)
        }
        OutputFormat::Csv if list => csv_rows(
            &["pattern", "positions", "letters"],
            occurrences
                .iter()
                .map(|(p, o)| vec![p.clone(), join(o), letters_at(o)]),
        )?,
        OutputFormat::Csv => csv_rows(
            &["pattern", "word", "count"],
            [vec![
                combination.to_string(),
                v.to_string(),
                total.to_string(),
            ]],
        )?,
    };
    Ok(Rendered::ok(text))
}

fn build_universe(
    kind: UniverseKind,
    n: Option<usize>,
    q: Option<Letter>,
    class: Option<&str>,
) -> Result<Universe, Failure> {
    let need = |what: &str, x: Option<usize>| {
        x.ok_or_else(|| Failure::Usage(format!("--universe {what} needs --n")))
    };
    let need_q =
        |what: &str| q.ok_or_else(|| Failure::Usage(format!("--universe {what} needs --q")));
    if kind != UniverseKind::Class && class.is_some() {
        return Err(Failure::Usage(
            "--class only applies to --universe class".into(),
        ));
    }
    Ok(match kind {
        UniverseKind::Perms => {
            if q.is_some() {
                return Err(Failure::Usage(
                    "--q does not apply to --universe perms".into(),
                ));
            }
            Universe::permutations(need("perms", n)?)?
        }
        UniverseKind::Words => Universe::words(need_q("words")?, need("words", n)?)?,
        UniverseKind::Dense => Universe::dense_words(need_q("dense")?, need("dense", n)?)?,
        UniverseKind::Class => {
            let word =
                parse_word(class.ok_or_else(|| {
                    Failure::Usage("--universe class needs --class WORD".into())
                })?)?;
            if let Some(n) = n {
                if n != word.len() {
                    return Err(Failure::Usage(format!(
                        "--n {n} differs from the class length {}",
                        word.len()
                    )));
                }
            }
            Universe::rearrangement_class(&word)
        }
    })
}

fn distribution_table(
    format: OutputFormat,
    u: &Universe,
    stats: &[Statistic],
    limits: &Limits,
) -> Result<Rendered, Failure> {
    let table = distribution(u, stats, limits)?;
    let names: Vec<&str> = stats.iter().map(|s| s.name()).collect();
    let text = match format {
        OutputFormat::Text => {
            let mut s = format!(
                "# {u}, {} elements\n{} count\n",
                table.total(),
                names.join(" ")
            );
            for (k, c) in table.iter() {
                let values: Vec<String> = k.iter().map(u64::to_string).collect();
                writeln!(s, "{} {c}", values.join(" ")).unwrap();
            }
            s
        }
        OutputFormat::Json => to_json(&json!({
            "universe": u,
            "statistics": names,
            "total": table.total(),
            "table": table,
        })),
        OutputFormat::Csv => {
            let mut header = names.clone();
            header.push("count");
            csv_rows(
                &header,
                table.iter().map(|(k, c)| {
                    let mut row: Vec<String> = k.iter().map(u64::to_string).collect();
                    row.push(c.to_string());
                    row
                }),
            )?
        }
    };
    Ok(Rendered::ok(text))
}

/// One line of a verification summary.
struct Line {
    universe: String,
    elements: u64,
    passed: bool,
    detail: String,
}

fn verify(
    format: OutputFormat,
    check: Check,
    n: Option<RangeInclusive<usize>>,
    q: Option<Letter>,
    limits: &Limits,
) -> Result<Rendered, Failure> {
    let mut lines = Vec::new();
    let mut reports: Vec<Value> = Vec::new();
    match check {
        Check::Involution | Check::Transport => {
            let default = if q.is_some() { 1..=6 } else { 1..=7 };
            for len in n.unwrap_or(default) {
                let u = word_or_perm_universe(q, len)?;
                let r = check_involution_and_transport(&u, limits)?;
                lines.push(transport_line(check, &r));
                reports.push(serde_json::to_value(&r).expect("reports serialize"));
            }
        }
        Check::Mahonian => {
            let default = if q.is_some() { 1..=6 } else { 1..=7 };
            for len in n.unwrap_or(default) {
                let u = word_or_perm_universe(q, len)?;
                let mut pairs = vec![(Statistic::Stat, Statistic::Maj)];
                if q.is_none() {
                    pairs.push((Statistic::Inv, Statistic::Maj));
                }
                for (a, b) in pairs {
                    let r = check_equidistribution(&u, a, b, limits)?;
                    lines.push(equidistribution_line(&r));
                    reports.push(serde_json::to_value(&r).expect("reports serialize"));
                }
            }
        }
        Check::Extensions => {
            let q = q.unwrap_or(3);
            let lengths = n.unwrap_or(4..=6);
            let r = search_mahonian_extensions(lengths, q, limits)?;
            lines.push(extension_line(&r));
            reports.push(serde_json::to_value(&r).expect("reports serialize"));
        }
        Check::Classes => {
            let q = q.unwrap_or(3);
            for len in n.unwrap_or(1..=6) {
                let r = probe_rearrangement_classes(q, len, limits)?;
                let elements = r.classes.iter().map(|c| c.size).sum();
                let detail = if r.all_equal {
                    format!("MAJ and STAT agree on all {} classes", r.classes.len())
                } else {
                    let names: Vec<String> = r.differing.iter().map(Word::to_string).collect();
                    format!("MAJ and STAT differ on {}", names.join(" "))
                };
                lines.push(Line {
                    universe: format!("[{q}]^{len}"),
                    elements,
                    passed: r.all_equal,
                    detail,
                });
                reports.push(serde_json::to_value(&r).expect("reports serialize"));
            }
        }
    }
    let passed = lines.iter().all(|l| l.passed);
    let verdict = |p: bool| if p { "PASS" } else { "FAIL" };
    let text = match format {
        OutputFormat::Text => {
            let mut s = String::new();
            for l in &lines {
                writeln!(
                    s,
                    "{} {} ({} elements): {}",
                    verdict(l.passed),
                    l.universe,
                    l.elements,
                    l.detail
                )
                .unwrap();
            }
            s
        }
        OutputFormat::Json => {
            to_json(&json!({ "check": check, "passed": passed, "reports": reports }))
        }
        OutputFormat::Csv => csv_rows(
            &["check", "universe", "elements", "passed", "detail"],
            lines.iter().map(|l| {
                vec![
                    format!("{check:?}").to_lowercase(),
                    l.universe.clone(),
                    l.elements.to_string(),
                    l.passed.to_string(),
                    l.detail.clone(),
                ]
            }),
        )?,
    };
    Ok(Rendered { text, passed })
}

fn word_or_perm_universe(q: Option<Letter>, n: usize) -> Result<Universe, Failure> {
    Ok(match q {
        Some(q) => Universe::words(q, n)?,
        None => Universe::permutations(n)?,
    })
}

fn transport_line(check: Check, r: &TransportReport) -> Line {
    let (failure, what) = match check {
        Check::Involution => (&r.involution_failure, "p(p(v)) = v"),
        _ => (&r.transport_failure, "tuple(v) = swapped tuple(p(v))"),
    };
    let detail = match failure {
        None => format!("{what} everywhere"),
        Some(c) if check == Check::Involution => {
            format!(
                "counterexample v = {}: p(v) = {}, p(p(v)) = {}",
                c.input, c.image, c.image_of_image
            )
        }
        Some(c) => format!(
            "counterexample v = {}: tuple {} but p(v) = {} has {}",
            c.input, c.input_tuple, c.image, c.image_tuple
        ),
    };
    Line {
        universe: r.universe.to_string(),
        elements: r.checked,
        passed: failure.is_none(),
        detail,
    }
}

fn equidistribution_line(r: &EquidistributionReport) -> Line {
    let detail = match &r.first_difference {
        None => format!(
            "{} and {} share the table {}",
            r.left, r.right, r.left_table
        ),
        Some(d) => format!(
            "{} takes the value {} {} times but {} takes it {} times",
            r.left, d.value, d.left, r.right, d.right
        ),
    };
    Line {
        universe: r.universe.to_string(),
        elements: r.elements,
        passed: r.equal,
        detail,
    }
}

fn extension_line(r: &ExtensionSearchReport) -> Line {
    let lengths = match (r.lengths.first(), r.lengths.last()) {
        (Some(a), Some(b)) if a != b => format!("{a}..{b}"),
        (Some(a), _) => a.to_string(),
        _ => String::new(),
    };
    let detail = format!(
        "{} extensions of {}, survivors equidistributed with MAJ: [{}]",
        r.candidates.len(),
        r.base,
        r.survivors.join("; ")
    );
    let detail = if r.conclusive {
        detail
    } else {
        format!("{detail}; inconclusive below length 3")
    };
    Line {
        universe: format!("[{}]^{lengths}", r.q),
        elements: r.lengths.iter().map(|&n| (r.q as u64).pow(n as u32)).sum(),
        passed: r.unique_survivor_is_target,
        detail,
    }
}

fn partitions(format: OutputFormat, v: &Word) -> Result<Rendered, Failure> {
    let pi = expand(v);
    let w = wpart(v);
    let p = ppart(&pi);
    let e = encode_refinement(&w, &p)?;
    let fields = [
        ("word", v.to_string()),
        ("exp", pi.to_string()),
        ("wpart", w.to_string()),
        ("wpart_sets", w.to_set_notation()),
        ("ppart", p.to_string()),
        ("ppart_sets", p.to_set_notation()),
        ("encoding", e.to_string()),
    ];
    let text = match format {
        OutputFormat::Text => {
            let mut s = String::new();
            for (k, x) in &fields {
                writeln!(s, "{k:<11}{x}").unwrap();
            }
            s
        }
        OutputFormat::Json => {
            let map: serde_json::Map<String, Value> = fields
                .iter()
                .map(|(k, x)| (k.to_string(), Value::String(x.clone())))
                .collect();
            to_json(&map)
        }
        OutputFormat::Csv => csv_rows(
            &fields.iter().map(|(k, _)| *k).collect::<Vec<_>>(),
            [fields.iter().map(|(_, x)| x.clone()).collect::<Vec<_>>()],
        )?,
    };
    Ok(Rendered::ok(text))
}
