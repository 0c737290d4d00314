//! Command-line front end: word generation, square-freeness checks, the
//! factor and length-5 morphism tests, pattern scans, censuses and the
//! search harnesses, with optional machine-readable JSON reports.
//!
//! Exit codes: 0 = pass/success, 1 = checked and failed (witness in the
//! report), 2 = usage or input error, 3 = budget exhausted.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use sqfree::analysis::{length3_census, scan_xzyzx, PatternKind};
use sqfree::morphism::{crochemore_check, theorem1_check, Morphism, TestReport};
use sqfree::search::{
    probe_constant_7, probe_s3_bound, remark17_report, verify_theorem1, SearchOutcome,
    SearchSpace,
};
use sqfree::thue::{
    generate_prefix, saturated_test_set, GenerateError, GeneratorBudget, GeneratorSpec,
};
use sqfree::{Alphabet, AvoidanceLabel, Word};

const EXIT_PASS: u8 = 0;
const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sqfree",
    version,
    about = "Square-free ternary words, morphism test sets and repetition diagnostics"
)]
struct Cli {
    /// Write a JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a prefix of the s1, s2 or s3 avoidance word.
    Generate(GenerateArgs),
    /// Check a word file for square-freeness.
    CheckWord(CheckWordArgs),
    /// Run the factor test (length-7 by default) on a morphism file.
    TestMorphism(TestMorphismArgs),
    /// Check whether a morphism preserves square-freeness (length-5 test).
    Crochemore(CrochemoreArgs),
    /// Scan a word for alpha-z-beta-z-gamma patterns.
    Scan(ScanArgs),
    /// Census of square-free length-3 factors of a word.
    Census(CensusArgs),
    /// Compare the factor test against long-prefix images over a whole
    /// morphism space.
    VerifyTheorem1(VerifyArgs),
    /// Look for morphisms clean at factor length 6 that still break:
    /// evidence the bound 7 cannot be lowered.
    Probe7(VerifyArgs),
    /// Check the 17-letter pattern word a.cabcbac.b.cabcbac.a.
    Remark17,
    /// Explore factor-length bounds on the s3-avoiding word.
    ProbeS3(ProbeS3Args),
}

#[derive(Args)]
struct GenerateArgs {
    /// Avoidance set: s1, s2 or s3.
    #[arg(long)]
    avoid: AvoidanceLabel,
    /// Number of letters.
    #[arg(long)]
    n: usize,
    /// Write the word to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Maximum prefix length budget.
    #[arg(long, default_value_t = sqfree::thue::DEFAULT_MAX_PREFIX_LEN)]
    max_prefix: usize,
    /// Maximum backtracking step budget.
    #[arg(long, default_value_t = sqfree::thue::DEFAULT_MAX_BACKTRACK_STEPS)]
    max_steps: u64,
}

#[derive(Args)]
struct CheckWordArgs {
    /// Word file (single line over the declared alphabet).
    file: PathBuf,
    /// Alphabet the word is over.
    #[arg(long, default_value = "abc")]
    alphabet: String,
}

#[derive(Args)]
struct TestMorphismArgs {
    /// Avoidance set whose word supplies the factor test set.
    #[arg(long)]
    avoid: AvoidanceLabel,
    /// Morphism file.
    #[arg(long, value_name = "PATH")]
    morphism: PathBuf,
    /// Factor length bound of the test set.
    #[arg(long, default_value_t = 7)]
    k: usize,
    /// Expected target alphabet (otherwise from the file).
    #[arg(long)]
    target: Option<String>,
}

#[derive(Args)]
struct CrochemoreArgs {
    /// Morphism file.
    #[arg(long, value_name = "PATH")]
    morphism: PathBuf,
    /// Expected target alphabet (otherwise from the file).
    #[arg(long)]
    target: Option<String>,
}

#[derive(Args)]
struct ScanArgs {
    /// Scan a generated word: s1, s2 or s3.
    #[arg(long, conflicts_with = "file")]
    avoid: Option<AvoidanceLabel>,
    /// Prefix length when scanning a generated word.
    #[arg(long, default_value_t = 100_000)]
    n: usize,
    /// Scan a word file instead.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Templates, comma separated: azbza, czbzc, azcza, xzyzx.
    /// Defaults per avoidance set (s1: azbza,czbzc; s2: azbza,azcza).
    #[arg(long)]
    templates: Option<String>,
    /// Minimum z length (default 0; 3 for --avoid s2).
    #[arg(long)]
    min_z: Option<usize>,
}

#[derive(Args)]
struct CensusArgs {
    /// Census a generated word: s1, s2 or s3.
    #[arg(long, conflicts_with = "file")]
    avoid: Option<AvoidanceLabel>,
    /// Prefix length when generating.
    #[arg(long, default_value_t = 8_192)]
    n: usize,
    /// Census a word file instead.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Avoidance set: s1 or s2.
    #[arg(long)]
    avoid: AvoidanceLabel,
    /// Target alphabet of the morphism space.
    #[arg(long, default_value = "01")]
    target: String,
    /// Maximum image length per letter.
    #[arg(long, default_value_t = 3)]
    max_len: usize,
    /// Sample this many random morphisms instead of enumerating.
    #[arg(long)]
    random: Option<usize>,
    /// Seed for random sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Prefix length for the long image check.
    #[arg(long, default_value_t = 20_000)]
    prefix_len: usize,
    /// Persist the outcome as JSON.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ProbeS3Args {
    /// Target alphabet of the morphism space.
    #[arg(long, default_value = "01")]
    target: String,
    /// Maximum image length per letter.
    #[arg(long, default_value_t = 4)]
    max_len: usize,
    /// Smallest factor length bound to separate.
    #[arg(long, default_value_t = 2)]
    k_min: usize,
    /// Largest factor length bound to separate.
    #[arg(long, default_value_t = 16)]
    k_max: usize,
    /// Sample this many random morphisms instead of enumerating.
    #[arg(long)]
    random: Option<usize>,
    /// Seed for random sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Prefix length for the long image check.
    #[arg(long, default_value_t = 10_000)]
    prefix_len: usize,
    /// Persist the outcome as JSON.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// What a subcommand produced, before the report wrapper is applied.
struct Outcome {
    verdict: &'static str,
    exit: u8,
    witnesses: Value,
    counts: Value,
    budgets: Value,
}

impl Outcome {
    fn pass() -> Self {
        Outcome {
            verdict: "pass",
            exit: EXIT_PASS,
            witnesses: json!([]),
            counts: json!({}),
            budgets: json!({}),
        }
    }

    fn fail() -> Self {
        Outcome { exit: EXIT_FAILED, verdict: "fail", ..Outcome::pass() }
    }
}

/// JSON report written for `--json`.
#[derive(Serialize)]
struct Report {
    command: String,
    verdict: String,
    witnesses: Value,
    counts: Value,
    budgets: Value,
    timing_ms: u128,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_line = reconstruct_command(&cli);
    let started = Instant::now();
    match run(&cli, &command_line) {
        Ok(outcome) => {
            if let Some(path) = &cli.json {
                let report = Report {
                    command: command_line,
                    verdict: outcome.verdict.to_string(),
                    witnesses: outcome.witnesses,
                    counts: outcome.counts,
                    budgets: outcome.budgets,
                    timing_ms: started.elapsed().as_millis(),
                };
                let text = serde_json::to_string_pretty(&report).expect("serializable report");
                if let Err(e) = std::fs::write(path, text + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_USAGE);
                }
            }
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e.chain().any(|cause| {
                matches!(
                    cause.downcast_ref::<GenerateError>(),
                    Some(
                        GenerateError::PrefixBudgetExceeded { .. }
                            | GenerateError::BacktrackBudgetExhausted { .. }
                            | GenerateError::SaturationBudgetExceeded { .. }
                    )
                ) || matches!(
                    cause.downcast_ref::<sqfree::search::SearchError>(),
                    Some(sqfree::search::SearchError::Generate(_))
                )
            });
            ExitCode::from(if budget { EXIT_BUDGET } else { EXIT_USAGE })
        }
    }
}

/// Canonical reproduction command line, embedded in every report.
fn reconstruct_command(cli: &Cli) -> String {
    let mut s = String::from("sqfree");
    match &cli.command {
        Command::Generate(a) => {
            write!(s, " generate --avoid {} --n {}", a.avoid, a.n).unwrap();
            if let Some(out) = &a.out {
                write!(s, " --out {}", out.display()).unwrap();
            }
            if a.max_prefix != sqfree::thue::DEFAULT_MAX_PREFIX_LEN {
                write!(s, " --max-prefix {}", a.max_prefix).unwrap();
            }
            if a.max_steps != sqfree::thue::DEFAULT_MAX_BACKTRACK_STEPS {
                write!(s, " --max-steps {}", a.max_steps).unwrap();
            }
        }
        Command::CheckWord(a) => {
            write!(s, " check-word {} --alphabet {}", a.file.display(), a.alphabet).unwrap();
        }
        Command::TestMorphism(a) => {
            write!(
                s,
                " test-morphism --avoid {} --morphism {} --k {}",
                a.avoid,
                a.morphism.display(),
                a.k
            )
            .unwrap();
            if let Some(t) = &a.target {
                write!(s, " --target {t}").unwrap();
            }
        }
        Command::Crochemore(a) => {
            write!(s, " crochemore --morphism {}", a.morphism.display()).unwrap();
            if let Some(t) = &a.target {
                write!(s, " --target {t}").unwrap();
            }
        }
        Command::Scan(a) => {
            write!(s, " scan").unwrap();
            if let Some(label) = a.avoid {
                write!(s, " --avoid {label} --n {}", a.n).unwrap();
            }
            if let Some(file) = &a.file {
                write!(s, " --file {}", file.display()).unwrap();
            }
            if let Some(t) = &a.templates {
                write!(s, " --templates {t}").unwrap();
            }
            if let Some(m) = a.min_z {
                write!(s, " --min-z {m}").unwrap();
            }
        }
        Command::Census(a) => {
            write!(s, " census").unwrap();
            if let Some(label) = a.avoid {
                write!(s, " --avoid {label} --n {}", a.n).unwrap();
            }
            if let Some(file) = &a.file {
                write!(s, " --file {}", file.display()).unwrap();
            }
        }
        Command::VerifyTheorem1(a) => {
            write!(s, " verify-theorem1{}", verify_args_suffix(a)).unwrap();
        }
        Command::Probe7(a) => {
            write!(s, " probe-7{}", verify_args_suffix(a)).unwrap();
        }
        Command::Remark17 => s.push_str(" remark17"),
        Command::ProbeS3(a) => {
            write!(
                s,
                " probe-s3 --target {} --max-len {} --k-min {} --k-max {}",
                a.target, a.max_len, a.k_min, a.k_max
            )
            .unwrap();
            if let Some(r) = a.random {
                write!(s, " --random {r} --seed {}", a.seed).unwrap();
            }
            write!(s, " --prefix-len {}", a.prefix_len).unwrap();
            if let Some(out) = &a.out {
                write!(s, " --out {}", out.display()).unwrap();
            }
        }
    }
    if let Some(path) = &cli.json {
        write!(s, " --json {}", path.display()).unwrap();
    }
    s
}

fn verify_args_suffix(a: &VerifyArgs) -> String {
    let mut s = String::new();
    write!(s, " --avoid {} --target {} --max-len {}", a.avoid, a.target, a.max_len).unwrap();
    if let Some(r) = a.random {
        write!(s, " --random {r} --seed {}", a.seed).unwrap();
    }
    write!(s, " --prefix-len {}", a.prefix_len).unwrap();
    if let Some(out) = &a.out {
        write!(s, " --out {}", out.display()).unwrap();
    }
    s
}

fn run(cli: &Cli, command_line: &str) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Generate(a) => run_generate(a),
        Command::CheckWord(a) => run_check_word(a),
        Command::TestMorphism(a) => run_test_morphism(a),
        Command::Crochemore(a) => run_crochemore(a),
        Command::Scan(a) => run_scan(a),
        Command::Census(a) => run_census(a),
        Command::VerifyTheorem1(a) => run_verify(a, command_line),
        Command::Probe7(a) => run_probe7(a, command_line),
        Command::Remark17 => run_remark17(),
        Command::ProbeS3(a) => run_probe_s3(a, command_line),
    }
}

fn run_generate(a: &GenerateArgs) -> anyhow::Result<Outcome> {
    let mut spec = GeneratorSpec::for_label(a.avoid);
    spec.budget = GeneratorBudget {
        max_prefix_len: a.max_prefix,
        max_backtrack_steps: a.max_steps,
    };
    let word = generate_prefix(&spec, a.n)?;
    match &a.out {
        Some(path) => {
            std::fs::write(path, format!("{word}\n"))?;
            println!("wrote {} letters of the {} word to {}", word.len(), a.avoid, path.display());
        }
        None => println!("{word}"),
    }
    let mut outcome = Outcome::pass();
    outcome.counts = json!({ "letters": word.len(), "avoid": a.avoid.to_string() });
    outcome.budgets = json!({
        "max_prefix_len": a.max_prefix,
        "max_backtrack_steps": a.max_steps,
    });
    Ok(outcome)
}

fn read_word_file(path: &Path, alphabet: &Alphabet) -> anyhow::Result<Word> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    let line = text.strip_suffix('\n').unwrap_or(&text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    if line.contains('\n') {
        anyhow::bail!("{}: word files must contain a single line", path.display());
    }
    Word::parse(alphabet, line)
        .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

fn run_check_word(a: &CheckWordArgs) -> anyhow::Result<Outcome> {
    let alphabet = Alphabet::new(&a.alphabet)?;
    let word = read_word_file(&a.file, &alphabet)?;
    let mut outcome;
    match word.find_minimal_square() {
        None => {
            println!("square-free: {} letters over {}", word.len(), alphabet);
            outcome = Outcome::pass();
        }
        Some(occ) => {
            println!(
                "square found: root {:?} (length {}) at position {}",
                occ.root().to_string(),
                occ.root_length(),
                occ.start()
            );
            outcome = Outcome::fail();
            outcome.witnesses = json!([occ]);
        }
    }
    outcome.counts = json!({ "letters": word.len() });
    Ok(outcome)
}

fn load_morphism(path: &Path, target: Option<&str>) -> anyhow::Result<Morphism> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    let target = match target {
        Some(t) => Some(Alphabet::new(t)?),
        None => None,
    };
    Morphism::parse(&text, target.as_ref())
        .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

fn report_outcome(report: &TestReport, budgets: Value) -> Outcome {
    let mut outcome = if report.passed() { Outcome::pass() } else { Outcome::fail() };
    outcome.witnesses = serde_json::to_value(&report.failures).expect("serializable");
    outcome.counts = json!({
        "checked_factors": report.checked_factor_count,
        "failures": report.failures.len(),
        "minimal_failing_len": report.minimal_failing_len(),
        "test_set": report.test_set_source.to_string(),
    });
    outcome.budgets = budgets;
    outcome
}

fn run_test_morphism(a: &TestMorphismArgs) -> anyhow::Result<Outcome> {
    let f = load_morphism(&a.morphism, a.target.as_deref())?;
    let spec = GeneratorSpec::for_label(a.avoid);
    let test_set = saturated_test_set(&spec, a.k)?;
    let report = theorem1_check(&f, &test_set)?;
    println!(
        "{}: {} on {} factors of length <= {} ({})",
        f,
        if report.passed() { "pass" } else { "fail" },
        report.checked_factor_count,
        a.k,
        report.test_set_source,
    );
    for failure in report.failures.iter().take(5) {
        println!(
            "  factor {:?}: square root {:?} at {}",
            failure.factor.to_string(),
            failure.occurrence.root().to_string(),
            failure.occurrence.start()
        );
    }
    if report.failures.len() > 5 {
        println!("  ... and {} more failing factors", report.failures.len() - 5);
    }
    Ok(report_outcome(&report, json!({ "k": a.k })))
}

fn run_crochemore(a: &CrochemoreArgs) -> anyhow::Result<Outcome> {
    let f = load_morphism(&a.morphism, a.target.as_deref())?;
    let report = crochemore_check(&f);
    println!(
        "{}: {} on all {} square-free ternary words of length <= 5",
        f,
        if report.passed() { "pass" } else { "fail" },
        report.checked_factor_count,
    );
    for failure in report.failures.iter().take(5) {
        println!(
            "  word {:?}: square root {:?} at {}",
            failure.factor.to_string(),
            failure.occurrence.root().to_string(),
            failure.occurrence.start()
        );
    }
    Ok(report_outcome(&report, json!({ "max_len": 5 })))
}

fn scan_input(a: &ScanArgs) -> anyhow::Result<Word> {
    match (&a.avoid, &a.file) {
        (Some(label), None) => {
            let spec = GeneratorSpec::for_label(*label);
            Ok(generate_prefix(&spec, a.n)?)
        }
        (None, Some(path)) => read_word_file(path, &Alphabet::ternary()),
        _ => anyhow::bail!("scan needs exactly one of --avoid or --file"),
    }
}

fn run_scan(a: &ScanArgs) -> anyhow::Result<Outcome> {
    let word = scan_input(a)?;
    let templates: Vec<PatternKind> = match &a.templates {
        Some(list) => list
            .split(',')
            .map(|t| t.trim().parse::<PatternKind>().map_err(|e| anyhow::anyhow!(e)))
            .collect::<anyhow::Result<Vec<_>>>()?,
        None => match a.avoid {
            Some(AvoidanceLabel::S2) => vec![PatternKind::AzBzA, PatternKind::AzCzA],
            _ => vec![PatternKind::AzBzA, PatternKind::CzBzC],
        },
    };
    let min_z = a.min_z.unwrap_or(match a.avoid {
        Some(AvoidanceLabel::S2) => 3,
        _ => 0,
    });
    let hits = scan_xzyzx(&word, min_z, &templates)?;
    let template_names: Vec<String> = templates.iter().map(|t| t.to_string()).collect();
    println!(
        "{} occurrence(s) of {} with |z| >= {} in {} letters",
        hits.len(),
        template_names.join(","),
        min_z,
        word.len()
    );
    for hit in hits.iter().take(10) {
        println!(
            "  {} at {}: {}{}{}{}{} (|z| = {})",
            hit.kind,
            hit.start(),
            hit.alpha_char(),
            hit.z,
            hit.beta_char(),
            hit.z,
            hit.gamma_char(),
            hit.z.len()
        );
    }
    if hits.len() > 10 {
        println!("  ... and {} more", hits.len() - 10);
    }
    let mut outcome = if hits.is_empty() { Outcome::pass() } else { Outcome::fail() };
    outcome.counts = json!({
        "letters": word.len(),
        "occurrences": hits.len(),
        "templates": template_names,
        "min_z": min_z,
    });
    outcome.witnesses =
        serde_json::to_value(hits.iter().take(1000).collect::<Vec<_>>()).expect("serializable");
    Ok(outcome)
}

fn run_census(a: &CensusArgs) -> anyhow::Result<Outcome> {
    let word = match (&a.avoid, &a.file) {
        (Some(label), None) => generate_prefix(&GeneratorSpec::for_label(*label), a.n)?,
        (None, Some(path)) => read_word_file(path, &Alphabet::ternary())?,
        _ => anyhow::bail!("census needs exactly one of --avoid or --file"),
    };
    let census = length3_census(&word)?;
    let present: Vec<String> = census.present.iter().map(Word::to_string).collect();
    let missing: Vec<String> = census.missing.iter().map(Word::to_string).collect();
    println!("{} letters: {} length-3 square-free factors present", word.len(), present.len());
    println!("  present: {}", present.join(" "));
    println!("  missing: {}", missing.join(" "));
    let mut outcome = Outcome::pass();
    outcome.counts = json!({
        "letters": word.len(),
        "present": present,
        "missing": missing,
    });
    Ok(outcome)
}

fn build_space(target: &str, max_len: usize, random: Option<usize>, seed: u64) -> anyhow::Result<SearchSpace> {
    let target = Alphabet::new(target)?;
    Ok(match random {
        Some(samples) => SearchSpace::random(target, max_len, samples, seed)?,
        None => SearchSpace::exhaustive(target, max_len)?,
    })
}

fn finish_search(
    mut outcome_data: SearchOutcome,
    command_line: &str,
    out: Option<&Path>,
    failed: bool,
) -> anyhow::Result<Outcome> {
    outcome_data.command = command_line.to_string();
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&outcome_data).expect("serializable outcome");
        std::fs::write(path, text + "\n")?;
        println!("outcome written to {}", path.display());
    }
    let mut outcome = if failed { Outcome::fail() } else { Outcome::pass() };
    outcome.counts = serde_json::to_value(&outcome_data).expect("serializable outcome");
    Ok(outcome)
}

fn run_verify(a: &VerifyArgs, command_line: &str) -> anyhow::Result<Outcome> {
    let space = build_space(&a.target, a.max_len, a.random, a.seed)?;
    let outcome_data = verify_theorem1(&space, a.avoid, a.prefix_len)?;
    println!(
        "{} morphisms into {} (image lengths <= {}): {} agreements, {} disagreements",
        outcome_data.examined,
        a.target,
        a.max_len,
        outcome_data.agreement_count,
        outcome_data.disagreements.len()
    );
    println!(
        "  {} pass the factor test; {} map the {}-letter prefix onto a square-free word",
        outcome_data.test_pass_count,
        outcome_data.image_square_free_count,
        outcome_data.prefix_len
    );
    let failed = !outcome_data.disagreements.is_empty();
    finish_search(outcome_data, command_line, a.out.as_deref(), failed)
}

fn run_probe7(a: &VerifyArgs, command_line: &str) -> anyhow::Result<Outcome> {
    let space = build_space(&a.target, a.max_len, a.random, a.seed)?;
    let outcome_data = probe_constant_7(&space, a.avoid, a.prefix_len)?;
    println!(
        "{} morphisms examined; minimal failing length histogram: {:?}",
        outcome_data.examined, outcome_data.histogram
    );
    println!(
        "  {} candidate(s) clean at length 6 but breaking on the prefix",
        outcome_data.candidates.len()
    );
    let failed = !outcome_data.disagreements.is_empty();
    finish_search(outcome_data, command_line, a.out.as_deref(), failed)
}

fn run_remark17() -> anyhow::Result<Outcome> {
    let (word, report) = remark17_report();
    println!("word: {word}");
    println!("  length 17:        {}", report.length_is_17);
    println!("  square-free:      {}", report.square_free);
    println!("  no aba factor:    {}", report.no_aba);
    println!("  no bab factor:    {}", report.no_bab);
    println!("  azbza witnessed:  {}", report.azbza_witness_found);
    let mut outcome = if report.holds() { Outcome::pass() } else { Outcome::fail() };
    outcome.counts = serde_json::to_value(report).expect("serializable");
    outcome.witnesses = serde_json::to_value(
        scan_xzyzx(&word, 0, &[PatternKind::AzBzA]).expect("ternary word"),
    )
    .expect("serializable");
    Ok(outcome)
}

fn run_probe_s3(a: &ProbeS3Args, command_line: &str) -> anyhow::Result<Outcome> {
    if a.k_min > a.k_max {
        anyhow::bail!("--k-min must not exceed --k-max");
    }
    let space = build_space(&a.target, a.max_len, a.random, a.seed)?;
    let outcome_data = probe_s3_bound(&space, a.prefix_len, a.k_min..=a.k_max)?;
    println!(
        "{} morphisms examined over k in {}..={}; largest separated k: {}",
        outcome_data.examined,
        a.k_min,
        a.k_max,
        outcome_data
            .largest_separated_k
            .map_or("none".to_string(), |k| k.to_string())
    );
    println!("  minimal failing length histogram: {:?}", outcome_data.histogram);
    finish_search(outcome_data, command_line, a.out.as_deref(), false)
}
