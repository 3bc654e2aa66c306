use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use minors::classes::{recognize_bounded, ClassKind};
use minors::equalizing::{
    is_equalizing_couple, is_equalizing_couple_oracle_bounded, is_k_equalizing_oracle_bounded,
    table1_rule_check_with, EqualizingAnalysis, COUPLE_BUDGET, K_EQUALIZING_BUDGET,
};
use minors::format::{format_function, parse_function};
use minors::gallery::{gallery_item, GALLERY_NAMES};
use minors::group::DEFAULT_DEGREE_BOUND;
use minors::recon::{DeckIndex, ENUMERATION_BUDGET};
use minors::report::SuiteReport;
use minors::suites::{run_suite, SuiteConfig, DEFAULT_CASES, DEFAULT_SEED, SUITE_NAMES};
use minors::{Couple, FiniteFunction, Permutation};

#[derive(Parser)]
#[command(name = "minors", version, about = "Identification minors, decks and reconstruction of finite functions")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized property sampling.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Work budget for brute-force oracles and enumerations.
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Include elapsed times in suite reports (makes JSON nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Distinct cards of a function's deck with multiplicities.
    Deck { file: PathBuf },
    /// Class memberships with witnesses.
    Classify {
        file: PathBuf,
        /// Restrict to one class kind.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Equivalence and deck equality of two functions.
    Equiv { a: PathBuf, b: PathBuf },
    /// Identification minors; all of them unless a couple such as `1,3` is given.
    Minor {
        file: PathBuf,
        #[arg(long)]
        couple: Option<String>,
    },
    /// Whether (n, k) is an equalizing couple.
    Equalizing {
        n: usize,
        k: usize,
        /// Also run the brute-force connectivity oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// U, Delta and G for a permutation, and the k-equalizing verdict.
    KEqualizing {
        /// One-line (`3,1,5,2,6,4`) or cycle notation.
        sigma: String,
        k: usize,
        #[arg(long)]
        oracle: bool,
        /// Also list the deduction-rule matches.
        #[arg(long)]
        rules: bool,
    },
    /// Build a named example and verify its claims.
    Gallery {
        #[arg(long)]
        name: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive reconstruction sweeps.
    Recon {
        #[command(subcommand)]
        command: ReconCommand,
    },
    /// Run a verification suite (`all` runs every criterion suite).
    Verify {
        suite: String,
        /// Cases per randomized property.
        #[arg(long, default_value_t = DEFAULT_CASES)]
        cases: usize,
    },
}

#[derive(Subcommand)]
enum ReconCommand {
    Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        labels: usize,
        /// Write the JSON report here as well.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Nonreconstructible buckets to list.
        #[arg(long, default_value_t = 5)]
        examples: usize,
    },
}

fn read_function(path: &Path) -> Result<FiniteFunction> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_function(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn one_based(perm: &Permutation) -> Value {
    json!(perm.oneline())
}

fn cmd_deck(g: &Global, file: &Path) -> Result<bool> {
    let f = read_function(file)?;
    let deck = f.deck()?;
    let unique = deck.distinct() == 1;
    if g.json {
        let cards: Vec<Value> = deck
            .cards()
            .iter()
            .map(|(c, m)| json!({"multiplicity": m, "card": format_function(c)}))
            .collect();
        print_json(&json!({
            "distinct": deck.distinct(),
            "total": deck.total(),
            "unique_minor": unique,
            "cards": cards,
        }));
    } else {
        println!("{} distinct cards, {} minors, unique minor: {unique}", deck.distinct(), deck.total());
        for (c, m) in deck.cards() {
            println!("x{m}\n{}", format_function(c).trim_end());
        }
    }
    Ok(true)
}

fn cmd_classify(g: &Global, file: &Path, kind: Option<&str>) -> Result<bool> {
    let f = read_function(file)?;
    let kinds = match kind {
        Some(k) => vec![ClassKind::parse(k)?],
        None => ClassKind::ALL.to_vec(),
    };
    let bound = g.budget.map(|b| b as usize).unwrap_or(DEFAULT_DEGREE_BOUND);
    let mut ok = true;
    let mut rows = Vec::new();
    for kind in kinds {
        let row = match recognize_bounded(&f, kind, bound) {
            Ok(Some(w)) => json!({"kind": kind.name(), "member": true, "witness": w.to_json()}),
            Ok(None) => json!({"kind": kind.name(), "member": false}),
            Err(e) => {
                ok = false;
                json!({"kind": kind.name(), "error": e.to_string()})
            }
        };
        rows.push(row);
    }
    if g.json {
        print_json(&json!({ "verdicts": rows }));
    } else {
        for r in &rows {
            match (&r["member"], &r["error"]) {
                (Value::Bool(b), _) => println!("{}: {}", r["kind"].as_str().unwrap_or(""), if *b { "yes" } else { "no" }),
                (_, e) => println!("{}: error: {}", r["kind"].as_str().unwrap_or(""), e.as_str().unwrap_or("")),
            }
        }
    }
    Ok(ok)
}

fn cmd_equiv(g: &Global, a: &Path, b: &Path) -> Result<bool> {
    let f = read_function(a)?;
    let h = read_function(b)?;
    let equivalent = f.is_equivalent(&h)?;
    let decks = f.decks_equal(&h)?;
    if g.json {
        print_json(&json!({"equivalent": equivalent, "decks_equal": decks}));
    } else {
        println!("equivalent: {equivalent}\ndecks equal: {decks}");
    }
    Ok(true)
}

fn cmd_minor(g: &Global, file: &Path, couple: Option<&str>) -> Result<bool> {
    let f = read_function(file)?;
    let minors: Vec<(Couple, FiniteFunction)> = match couple {
        Some(c) => {
            let c = Couple::parse(c)?;
            vec![(c, f.identification_minor(c)?)]
        }
        None => f.identification_minors()?,
    };
    if g.json {
        let rows: Vec<Value> = minors
            .iter()
            .map(|(c, m)| json!({"couple": [c.min_pos() + 1, c.max_pos() + 1], "minor": format_function(m)}))
            .collect();
        print_json(&json!({ "minors": rows }));
    } else {
        for (c, m) in &minors {
            println!("# I = {c}\n{}", format_function(m).trim_end());
        }
    }
    Ok(true)
}

fn cmd_equalizing(g: &Global, n: usize, k: usize, oracle: bool) -> Result<bool> {
    if k < 2 || n <= k {
        bail!("need 2 <= k < n, got n={n} k={k}");
    }
    let closed = is_equalizing_couple(n, k);
    let mut out = json!({"n": n, "k": k, "equalizing": closed});
    let mut ok = true;
    if oracle {
        let o = is_equalizing_couple_oracle_bounded(n, k, g.budget.unwrap_or(COUPLE_BUDGET))?;
        ok = o == closed;
        out["oracle"] = json!(o);
        out["agree"] = json!(ok);
    }
    if g.json {
        print_json(&out);
    } else {
        println!("({n},{k}) equalizing: {closed}");
        if oracle {
            println!("oracle: {}, agree: {ok}", out["oracle"]);
        }
    }
    Ok(ok)
}

fn cmd_k_equalizing(g: &Global, sigma: &str, k: usize, oracle: bool, rules: bool) -> Result<bool> {
    let text = if sigma.contains(',') && !sigma.trim_start().starts_with('(') {
        format!("({sigma})")
    } else {
        sigma.to_string()
    };
    let sigma = Permutation::parse(&text, None)?;
    let analysis = EqualizingAnalysis::new(&sigma, k)?;
    let mut out = analysis.to_json();
    out["u_set"] = json!(analysis.u_set.iter().map(one_based).collect::<Vec<_>>());
    let mut ok = true;
    if oracle {
        let o = is_k_equalizing_oracle_bounded(&sigma, k, g.budget.unwrap_or(K_EQUALIZING_BUDGET))?;
        ok = o == analysis.verdict;
        out["oracle"] = json!(o);
        out["agree"] = json!(ok);
    }
    if rules {
        let matches = table1_rule_check_with(&analysis)?;
        ok &= matches.iter().all(|m| m.verified);
        out["rules"] = serde_json::to_value(&matches)?;
    }
    if g.json {
        print_json(&out);
    } else {
        println!(
            "sigma={sigma} k={k}: |U|={} |Delta|={} |G|={} k-equalizing: {}",
            analysis.u_set.len(),
            analysis.delta_set.len(),
            analysis.group.len(),
            analysis.verdict
        );
        if oracle {
            println!("oracle: {}, agree: {}", out["oracle"], out["agree"]);
        }
        if rules {
            println!("{} rule matches", out["rules"].as_array().map_or(0, Vec::len));
        }
    }
    Ok(ok)
}

fn cmd_gallery(g: &Global, name: &str, k: Option<usize>) -> Result<bool> {
    if !GALLERY_NAMES.contains(&name) {
        bail!("unknown gallery item {name:?}; expected one of {}", GALLERY_NAMES.join(", "));
    }
    let item = gallery_item(name, k)?;
    let ok = item.checks.iter().all(|c| c.passed);
    if g.json {
        let functions: Vec<Value> = item
            .functions
            .iter()
            .map(|(n, f)| json!({"name": n, "function": format_function(f)}))
            .collect();
        print_json(&json!({
            "name": item.name,
            "passed": ok,
            "functions": functions,
            "checks": item.checks,
        }));
    } else {
        for (n, f) in &item.functions {
            println!("# {n}\n{}", format_function(f).trim_end());
        }
        for c in &item.checks {
            println!("[{}] {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.details);
        }
    }
    Ok(ok)
}

fn cmd_sweep(
    g: &Global,
    k: usize,
    n: usize,
    labels: usize,
    report: Option<&Path>,
    examples: usize,
) -> Result<bool> {
    let index = DeckIndex::build_bounded(k, n, labels, g.budget.unwrap_or(ENUMERATION_BUDGET))?;
    let summary = index.sweep_report(examples);
    if let Some(path) = report {
        fs::write(path, serde_json::to_string_pretty(&summary)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if g.json {
        print_json(&summary);
    } else {
        println!(
            "({k},{n},{labels}): {} functions, {} classes, {} buckets, {} nonreconstructible buckets",
            summary["functions"].as_str().unwrap_or(""),
            summary["classes"],
            summary["buckets"],
            summary["nonreconstructible_buckets"]
        );
    }
    Ok(true)
}

fn report_json(r: &SuiteReport, timing: bool) -> Value {
    let mut v = json!({"suite": r.suite, "passed": r.passed(), "checks": r.checks});
    if timing {
        v["elapsed_ms"] = json!(r.elapsed_ms);
    }
    v
}

fn cmd_verify(g: &Global, suite: &str, cases: usize) -> Result<bool> {
    if !SUITE_NAMES.contains(&suite) {
        bail!("unknown suite {suite:?}; expected one of {}", SUITE_NAMES.join(", "));
    }
    let reports = run_suite(suite, &SuiteConfig { seed: g.seed, cases })?;
    let ok = reports.iter().all(SuiteReport::passed);
    if g.json {
        let rs: Vec<Value> = reports.iter().map(|r| report_json(r, g.timing)).collect();
        print_json(&json!({"passed": ok, "reports": rs}));
    } else {
        for r in &reports {
            let time = if g.timing { format!(" ({} ms)", r.elapsed_ms) } else { String::new() };
            println!("== {} {}{time}", r.suite, if r.passed() { "PASS" } else { "FAIL" });
            for c in &r.checks {
                println!("[{}] {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.details);
            }
        }
    }
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool> {
    let g = &cli.global;
    if let Some(t) = g.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    match &cli.command {
        Command::Deck { file } => cmd_deck(g, file),
        Command::Classify { file, kind } => cmd_classify(g, file, kind.as_deref()),
        Command::Equiv { a, b } => cmd_equiv(g, a, b),
        Command::Minor { file, couple } => cmd_minor(g, file, couple.as_deref()),
        Command::Equalizing { n, k, oracle } => cmd_equalizing(g, *n, *k, *oracle),
        Command::KEqualizing { sigma, k, oracle, rules } => cmd_k_equalizing(g, sigma, *k, *oracle, *rules),
        Command::Gallery { name, k } => cmd_gallery(g, name, *k),
        Command::Recon { command: ReconCommand::Sweep { k, n, labels, report, examples } } => {
            cmd_sweep(g, *k, *n, *labels, report.as_deref(), *examples)
        }
        Command::Verify { suite, cases } => cmd_verify(g, suite, *cases),
    }
}

/// Exit 0 when every check passes, 1 when a check fails, 2 on errors.
fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
