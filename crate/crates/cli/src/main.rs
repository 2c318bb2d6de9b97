//! Command-line front end: Schur expansions of operator words, abacus-history
//! enumeration and rendering, three-row Kostka–Foulkes tables, benchmark
//! counts, and the self-check suites.
//!
//! Exit codes: 0 success, 1 check/verification failure, 2 usage or parse
//! error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use schur_abacus::histories::{
    count_histories, enumerate_s_raw, history_to_json, map_histories, render_history, BRoute,
    HistoryOptions,
};
use schur_abacus::operators::{self, creation_word, CreationKind, OperatorSpec};
use schur_abacus::selfcheck::{self, CheckLevel};
use schur_abacus::threerow::three_row_table;
use schur_abacus::word::parse_word;
use schur_abacus::{Partition, SchurExpansion};

/// Exact Schur expansions for creation-operator words via abacus
/// combinatorics.
///
/// Operator words are comma-separated tokens `H(m)`, `C(m)`, `B(m)`, `S(m)`,
/// `mh(c)`, `me(c)`, `hp(c)`, `ep(c)`, `w`, applied right-to-left as written.
/// Note the composition conventions: H_a and C_a apply the LAST entry of a
/// first (word `H(a1),...,H(aL)`), while B_a applies the FIRST entry first, so
/// its word is written reversed: `B(aL),...,B(a1)`.
#[derive(Parser)]
#[command(name = "schur-abacus", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BRouteArg {
    /// Conjugate route: run the H-histories of the conjugate input
    /// (pure-B words only).
    Conj,
    /// Native route: southwest zigs followed by a bead destruction.
    Native,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    Quick,
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WordType {
    H,
    C,
    B,
}

#[derive(Subcommand)]
enum Command {
    /// Apply an operator word to a Schur function and print the expansion.
    Expand(ExpandArgs),
    /// Enumerate the abacus-histories of a creation word (S/H/C/B tokens).
    Histories(HistoriesArgs),
    /// Schur coefficients of H_nu for all nu of size n with at most three
    /// rows (three-row shapes by closed formula, shorter by summation).
    Kostka3(Kostka3Args),
    /// History counts and timings for H_(3^k); per-word history statistics.
    Bench(BenchArgs),
    /// Run the exact self-check suites.
    Check(CheckArgs),
}

#[derive(Args)]
struct ExpandArgs {
    /// Operator word, e.g. "H(1),H(2),H(3)" or "w,S(2),w".
    #[arg(long)]
    word: String,
    /// Starting partition as descending comma-separated parts; empty for 1.
    #[arg(long, default_value = "")]
    start: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Threads for termwise application; the output is identical for any N.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct HistoriesArgs {
    /// Creation word over S/H/C/B tokens, e.g. "H(3),H(3)".
    #[arg(long)]
    word: String,
    /// Starting partition; empty for 1.
    #[arg(long, default_value = "")]
    start: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Print the multi-row ASCII diagram for each history (text mode).
    #[arg(long)]
    render: bool,
    /// Print only the number of histories.
    #[arg(long)]
    count_only: bool,
    /// How B tokens are realized.
    #[arg(long, value_enum, default_value = "conj")]
    b_route: BRouteArg,
    /// Use the raw two-time-step model for a single S(m) word.
    #[arg(long)]
    raw_s: bool,
    /// Threads for enumeration; the output is identical for any N.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct Kostka3Args {
    /// Size of the partitions nu (and lambda).
    #[arg(long)]
    n: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// Largest k for the H_(3^k) table (2..=7).
    #[arg(long, default_value_t = 6)]
    kmax: usize,
    /// Bench a single creation word instead of the H_(3^k) table.
    #[arg(long, value_enum)]
    word_type: Option<WordType>,
    /// Index sequence for --word-type, e.g. "5,1,4,2,3,1".
    #[arg(long)]
    alpha: Option<String>,
    /// Print the number of terms in the abacus-history sum for the word.
    #[arg(long)]
    terms: bool,
    /// Threads for enumeration.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum, default_value = "quick")]
    level: Level,
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {}", message);
    ExitCode::from(2)
}

fn parse_start(text: &str) -> Result<Partition, schur_abacus::Error> {
    text.parse::<Partition>()
}

fn parse_alpha(text: &str) -> Result<Vec<i64>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad alpha entry {:?}", p))
        })
        .collect()
}

fn print_expansion(e: &SchurExpansion, format: Format) {
    match format {
        Format::Text => println!("{}", e),
        Format::Json => println!("{}", e.to_json_string()),
    }
}

fn cmd_expand(args: &ExpandArgs) -> ExitCode {
    let word = match parse_word(&args.word) {
        Ok(w) => w,
        Err(e) => return usage_error(e),
    };
    let start = match parse_start(&args.start) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let result = operators::apply_word_jobs(&word, &SchurExpansion::schur(start), args.jobs);
    print_expansion(&result, args.format);
    ExitCode::SUCCESS
}

fn history_text_line(h: &schur_abacus::histories::AbacusHistory) -> String {
    format!(
        "sign={:+} qpower={} final={}",
        h.sign, h.qpower, h.final_partition
    )
}

fn cmd_histories(args: &HistoriesArgs) -> ExitCode {
    let word = match parse_word(&args.word) {
        Ok(w) => w,
        Err(e) => return usage_error(e),
    };
    let start = match parse_start(&args.start) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    if word.is_empty() {
        return usage_error("history enumeration needs a nonempty word");
    }
    if !word.iter().all(|op| {
        matches!(
            op,
            OperatorSpec::S(_) | OperatorSpec::H(_) | OperatorSpec::C(_) | OperatorSpec::B(_)
        )
    }) {
        return usage_error("history diagrams are only generated for S/H/C/B words");
    }

    if args.raw_s {
        let m = match word.as_slice() {
            [OperatorSpec::S(m)] => *m,
            _ => return usage_error("--raw-s requires a word that is a single S(m) token"),
        };
        let histories = enumerate_s_raw(m, &start);
        if args.count_only {
            println!("{}", histories.len());
            return ExitCode::SUCCESS;
        }
        for h in &histories {
            emit_history(h, args);
        }
        return ExitCode::SUCCESS;
    }

    let opts = HistoryOptions {
        b_route: match args.b_route {
            BRouteArg::Conj => BRoute::Conjugate,
            BRouteArg::Native => BRoute::Native,
        },
    };
    if args.count_only {
        match count_histories(&word, &start, &opts, args.jobs) {
            Ok(n) => {
                println!("{}", n);
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        }
    } else {
        let render = args.render;
        let format = args.format;
        let lines = map_histories(&word, &start, &opts, args.jobs, move |h| {
            render_one(h, format, render)
        });
        match lines {
            Ok(lines) => {
                for line in lines {
                    print!("{}", line);
                }
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        }
    }
}

fn render_one(h: &schur_abacus::histories::AbacusHistory, format: Format, render: bool) -> String {
    match format {
        Format::Json => format!("{}\n", history_to_json(h)),
        Format::Text => {
            if render {
                format!("{}\n{}\n", history_text_line(h), render_history(h))
            } else {
                format!("{}\n", history_text_line(h))
            }
        }
    }
}

fn emit_history(h: &schur_abacus::histories::AbacusHistory, args: &HistoriesArgs) {
    print!("{}", render_one(h, args.format, args.render));
}

fn cmd_kostka3(args: &Kostka3Args) -> ExitCode {
    if args.n < 1 {
        return usage_error("--n must be at least 1");
    }
    let table = three_row_table(args.n);
    match args.format {
        Format::Text => {
            for ((nu, lam), coeff) in table.iter().rev() {
                println!("nu={} lambda={} coeff={}", nu, lam, coeff);
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = table
                .iter()
                .rev()
                .map(|((nu, lam), coeff)| {
                    serde_json::json!({
                        "nu": nu.parts(),
                        "lambda": lam.parts(),
                        "coeff": schur_abacus::expansion::qlaurent_to_json(coeff),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
    }
    ExitCode::SUCCESS
}

const KNOWN_COUNTS: [(usize, u64); 5] = [(2, 4), (3, 27), (4, 338), (5, 6262), (6, 168312)];

fn cmd_bench(args: &BenchArgs) -> ExitCode {
    if let Some(word_type) = args.word_type {
        let Some(alpha_text) = &args.alpha else {
            return usage_error("--word-type requires --alpha");
        };
        let alpha = match parse_alpha(alpha_text) {
            Ok(a) => a,
            Err(e) => return usage_error(e),
        };
        if alpha.is_empty() {
            return usage_error("--alpha must be nonempty");
        }
        let kind = match word_type {
            WordType::H => CreationKind::H,
            WordType::C => CreationKind::C,
            WordType::B => CreationKind::B,
        };
        let word = creation_word(kind, &alpha);
        let started = Instant::now();
        let n = match count_histories(
            &word,
            &Partition::empty(),
            &HistoryOptions::default(),
            args.jobs,
        ) {
            Ok(n) => n,
            Err(e) => return usage_error(e),
        };
        let elapsed = started.elapsed();
        if args.terms {
            println!("terms={}", n);
        }
        println!(
            "word={:?} alpha={:?} histories={} time_ms={:.3}",
            word_type_name(word_type),
            alpha,
            n,
            elapsed.as_secs_f64() * 1e3
        );
        return ExitCode::SUCCESS;
    }

    if !(2..=7).contains(&args.kmax) {
        return usage_error("--kmax must be between 2 and 7");
    }
    let mut ok = true;
    for k in 2..=args.kmax {
        let word = creation_word(CreationKind::H, &vec![3i64; k]);
        let started = Instant::now();
        let n = count_histories(
            &word,
            &Partition::empty(),
            &HistoryOptions::default(),
            args.jobs,
        )
        .expect("H word");
        let elapsed = started.elapsed();
        println!(
            "k={} histories={} time_ms={:.3}",
            k,
            n,
            elapsed.as_secs_f64() * 1e3
        );
        if let Some(&(_, want)) = KNOWN_COUNTS.iter().find(|&&(kk, _)| kk == k) {
            if n != want {
                eprintln!("count mismatch at k={}: got {}, expected {}", k, n, want);
                ok = false;
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn word_type_name(w: WordType) -> &'static str {
    match w {
        WordType::H => "H",
        WordType::C => "C",
        WordType::B => "B",
    }
}

fn cmd_check(args: &CheckArgs) -> ExitCode {
    let level = match args.level {
        Level::Quick => CheckLevel::Quick,
        Level::Full => CheckLevel::Full,
    };
    let started = Instant::now();
    let mut failures = 0usize;
    for suite in selfcheck::run_all(level) {
        match &suite.failure {
            None => println!("{:<28} PASS  ({} cases)", suite.name, suite.cases),
            Some(reason) => {
                failures += 1;
                println!("{:<28} FAIL  ({} cases)", suite.name, suite.cases);
                println!("    counterexample: {}", reason);
            }
        }
    }
    println!(
        "checked in {:.2}s: {}",
        started.elapsed().as_secs_f64(),
        if failures == 0 {
            "all suites passed".to_string()
        } else {
            format!("{} suite(s) failed", failures)
        }
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Let a closed pipe terminate the process quietly, as for any Unix filter.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match &cli.command {
        Command::Expand(args) => cmd_expand(args),
        Command::Histories(args) => cmd_histories(args),
        Command::Kostka3(args) => cmd_kostka3(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Check(args) => cmd_check(args),
    }
}
