//! Acceptance criteria 1-10. Runs without the libtest harness so each
//! criterion prints exactly one line; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use minors::equalizing::{is_equalizing_couple, pi_sigma, EqualizingAnalysis};
use minors::report::SuiteReport;
use minors::suites::{run_suite, SuiteConfig};
use minors::Permutation;

struct Criterion {
    id: u8,
    suite: &'static str,
    what: &'static str,
    limit: Duration,
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, suite: "worked-example", what: "worked example sigma=(3,1,5,2,6,4), k=4", limit: Duration::from_secs(1) },
    Criterion { id: 2, suite: "equalizing-theorem", what: "closed form vs oracle, all 9 (n,k) cases", limit: Duration::from_secs(120) },
    Criterion { id: 3, suite: "k-equalizing-lemma", what: "n=k+1, k in {3,4}: only theta_n fails", limit: Duration::from_secs(30) },
    Criterion { id: 4, suite: "boolean-sweep", what: "(2,4,2) exhaustive reconstructibility", limit: Duration::from_secs(60) },
    Criterion { id: 5, suite: "symmofo-triple", what: "arity-3 triple with a shared card", limit: Duration::from_secs(1) },
    Criterion { id: 6, suite: "theta-counterexample", what: "theta pair at k=3 and k=4", limit: Duration::from_secs(60) },
    Criterion { id: 7, suite: "a-plus-1", what: "arity |A|+1 pair, k in {2,3,4}", limit: Duration::from_secs(10) },
    Criterion { id: 8, suite: "cyclic", what: "cyclic example, k in {3,4}", limit: Duration::from_secs(10) },
    Criterion { id: 9, suite: "properties", what: "randomized properties, 200 cases each", limit: Duration::from_secs(600) },
    Criterion { id: 10, suite: "symmetric-weak", what: "symmetric functions: same deck implies same table", limit: Duration::from_secs(30) },
];

/// Spot checks that do not go through the suite code.
fn direct(id: u8) -> Result<(), String> {
    match id {
        1 => {
            let sigma = Permutation::from_oneline(&[3, 1, 5, 2, 6, 4]).map_err(|e| e.to_string())?;
            let a = EqualizingAnalysis::new(&sigma, 4).map_err(|e| e.to_string())?;
            let pi = pi_sigma(&sigma, 4).map_err(|e| e.to_string())?;
            let want = Permutation::from_oneline(&[3, 1, 2, 4]).unwrap();
            if (a.u_set.len(), a.delta_set.len(), a.group.len()) != (8, 20, 24) || pi != want {
                return Err("set sizes or pi differ".into());
            }
        }
        2 => {
            for (n, k, want) in [(4, 3, false), (5, 3, true), (5, 4, false), (6, 4, true)] {
                if is_equalizing_couple(n, k) != want {
                    return Err(format!("closed form wrong at ({n},{k})"));
                }
            }
        }
        _ => {}
    }
    Ok(())
}

fn main() -> ExitCode {
    let config = SuiteConfig::default();
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome: Result<Vec<SuiteReport>, String> =
            direct(c.id).and_then(|_| run_suite(c.suite, &config).map_err(|e| e.to_string()));
        let elapsed = start.elapsed();
        let (ok, note) = match outcome {
            Ok(reports) => {
                let bad: Vec<String> = reports
                    .iter()
                    .flat_map(|r| r.failures().map(|f| format!("{}: {}", f.name, f.details)))
                    .collect();
                let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
                if !bad.is_empty() {
                    (false, bad.join("; "))
                } else if elapsed > c.limit {
                    (false, format!("over the {:?} limit", c.limit))
                } else {
                    (true, format!("{checks} checks"))
                }
            }
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "[{}] criterion {:>2} {} ({:.2?}): {note}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.what,
            elapsed
        );
    }
    println!("acceptance: {}/{} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
