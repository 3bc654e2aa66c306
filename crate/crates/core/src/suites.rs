//! Batch verification suites, one per acceptance criterion, plus aggregates.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::classes::{ofo_unchecked, recognize, ClassKind};
use crate::couple::Couple;
use crate::deck::Deck;
use crate::equalizing::{
    is_equalizing_couple, is_equalizing_couple_oracle, is_k_equalizing, is_k_equalizing_oracle,
    pi_sigma, sigma_sub_i, table1_rule_check, EqualizingAnalysis,
};
use crate::error::{Error, Result};
use crate::function::{FiniteFunction, Label};
use crate::gallery::{
    build_fgp_phi, example_a_plus_1, example_cyclic, example_symmofo, gallery_item,
    random_valid_spec, theta_counterexample, GALLERY_NAMES,
};
use crate::perm::{hat_sigma, lambda, theta, Permutation};
use crate::recon::{numeric_labels, totally_symmetric_functions, class_weak_reconstructibility, DeckIndex};
use crate::report::{Check, SuiteReport};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const DEFAULT_CASES: usize = 200;

/// Suite ids in criterion order, then the aggregates.
pub const SUITE_NAMES: [&str; 12] = [
    "worked-example",
    "equalizing-theorem",
    "k-equalizing-lemma",
    "boolean-sweep",
    "symmofo-triple",
    "theta-counterexample",
    "a-plus-1",
    "cyclic",
    "properties",
    "symmetric-weak",
    "gallery",
    "all",
];

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: DEFAULT_SEED, cases: DEFAULT_CASES }
    }
}

/// Runs one suite, or every criterion suite for `all`.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        let names: Vec<&str> = SUITE_NAMES[..SUITE_NAMES.len() - 1].to_vec();
        return names.iter().map(|n| run_one(n, config)).collect();
    }
    Ok(vec![run_one(name, config)?])
}

fn run_one(name: &str, config: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let checks = match name {
        "worked-example" => worked_example(),
        "equalizing-theorem" => equalizing_theorem(),
        "k-equalizing-lemma" => k_equalizing_lemma(),
        "boolean-sweep" => boolean_sweep(),
        "symmofo-triple" => symmofo_triple(),
        "theta-counterexample" => theta_suite(),
        "a-plus-1" => a_plus_1_suite(),
        "cyclic" => cyclic_suite(),
        "properties" => properties(config),
        "symmetric-weak" => symmetric_weak(),
        "gallery" => gallery_suite(),
        other => {
            return Err(Error::Parse(format!(
                "unknown suite {other:?}; expected one of {}",
                SUITE_NAMES.join(", ")
            )))
        }
    };
    Ok(SuiteReport { suite: name.to_string(), checks, elapsed_ms: start.elapsed().as_millis() })
}

fn oneline(v: &[usize]) -> Permutation {
    Permutation::from_oneline(v).expect("valid one-line literal")
}

fn guard(name: &str, r: Result<Check>) -> Check {
    r.unwrap_or_else(|e| Check::errored(name, e))
}

fn show(set: &BTreeSet<Permutation>) -> String {
    set.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

fn worked_example() -> Vec<Check> {
    let sigma = oneline(&[3, 1, 5, 2, 6, 4]);
    let table: [((usize, usize), [usize; 4]); 10] = [
        ((1, 2), [2, 1, 4, 3]),
        ((1, 3), [1, 4, 2, 3]),
        ((1, 4), [3, 1, 4, 2]),
        ((1, 5), [3, 1, 2, 4]),
        ((2, 3), [2, 1, 4, 3]),
        ((2, 4), [3, 1, 4, 2]),
        ((2, 5), [3, 1, 2, 4]),
        ((3, 4), [3, 1, 4, 2]),
        ((3, 5), [3, 1, 2, 4]),
        ((4, 5), [3, 1, 4, 2]),
    ];
    let mut out = Vec::new();
    for ((a, b), want) in table {
        let name = format!("sigma_I for I={{{a},{b}}}");
        out.push(guard(&name, (|| {
            let got = sigma_sub_i(&sigma, 4, Couple::from_one_based(a, b)?)?;
            Ok(Check::new(&name, got == oneline(&want), format!("got {got}")))
        })()));
    }
    out.push(guard("pi^sigma_4", (|| {
        let got = pi_sigma(&sigma, 4)?;
        Ok(Check::new("pi^sigma_4", got == oneline(&[3, 1, 2, 4]), format!("got {got}")))
    })()));
    let analysis = match EqualizingAnalysis::new(&sigma, 4) {
        Ok(a) => a,
        Err(e) => {
            out.push(Check::errored("U, Delta, G", e));
            return out;
        }
    };
    let set = |rows: &[[usize; 4]]| -> BTreeSet<Permutation> { rows.iter().map(|r| oneline(r)).collect() };
    let u = set(&[
        [1, 2, 4, 3], [1, 3, 2, 4], [1, 3, 4, 2], [1, 4, 2, 3],
        [2, 1, 3, 4], [2, 1, 4, 3], [3, 1, 2, 4], [3, 1, 4, 2],
    ]);
    let delta = set(&[
        [1, 2, 3, 4], [1, 2, 4, 3], [1, 3, 2, 4], [1, 3, 4, 2], [1, 4, 2, 3],
        [1, 4, 3, 2], [2, 1, 3, 4], [2, 1, 4, 3], [2, 3, 1, 4], [2, 3, 4, 1],
        [2, 4, 1, 3], [2, 4, 3, 1], [3, 1, 2, 4], [3, 1, 4, 2], [3, 2, 1, 4],
        [3, 2, 4, 1], [4, 1, 2, 3], [4, 1, 3, 2], [4, 2, 1, 3], [4, 2, 3, 1],
    ]);
    out.push(Check::new("U^sigma_4 is the printed 8-element set", analysis.u_set == u, show(&analysis.u_set)));
    out.push(Check::new(
        "Delta^sigma_4 is the printed 20-element set",
        analysis.delta_set == delta,
        format!("{} elements", analysis.delta_set.len()),
    ));
    out.push(Check::new("G^sigma_4 = S_4", analysis.group.len() == 24, format!("order {}", analysis.group.len())));
    out
}

fn equalizing_theorem() -> Vec<Check> {
    let cases: Vec<(usize, usize)> =
        (2..=4).flat_map(|k| (k + 1..=k + 3).map(move |n| (n, k))).collect();
    let mut out: Vec<Check> = cases
        .par_iter()
        .map(|&(n, k)| {
            let name = format!("(n,k)=({n},{k}) closed form matches oracle");
            guard(&name, (|| {
                let oracle = is_equalizing_couple_oracle(n, k)?;
                let closed = is_equalizing_couple(n, k);
                Ok(Check::new(&name, oracle == closed, format!("closed={closed} oracle={oracle}")))
            })())
        })
        .collect();
    for (n, k, want) in [(4, 3, false), (5, 3, true), (5, 4, false), (6, 4, true), (3, 2, true)] {
        out.push(Check::new(
            format!("(n,k)=({n},{k}) is {}", if want { "equalizing" } else { "not equalizing" }),
            is_equalizing_couple(n, k) == want,
            "",
        ));
    }
    out
}

fn k_equalizing_lemma() -> Vec<Check> {
    let mut out = Vec::new();
    for k in [3, 4] {
        let n = k + 1;
        let name = format!("n={n}, k={k}: oracle rejects exactly theta_n");
        out.push(guard(&name, (|| {
            let th = theta(n)?;
            let perms: Vec<Permutation> = crate::perm::all_permutations(n).collect();
            let verdicts: Vec<(Permutation, bool, bool)> = perms
                .par_iter()
                .map(|s| Ok((s.clone(), is_k_equalizing_oracle(s, k)?, is_k_equalizing(s, k)?)))
                .collect::<Result<_>>()?;
            let rejected: Vec<&Permutation> =
                verdicts.iter().filter(|v| !v.1).map(|v| &v.0).collect();
            let agree = verdicts.iter().all(|v| v.1 == v.2);
            Ok(Check::new(
                &name,
                rejected == vec![&th] && agree,
                format!(
                    "rejected: {}; intersection test agrees: {agree}",
                    rejected.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
                ),
            ))
        })()));
    }
    out
}

fn boolean_sweep() -> Vec<Check> {
    let idx = match DeckIndex::build(2, 4, 2) {
        Ok(i) => i,
        Err(e) => return vec![Check::errored("build (2,4,2) deck index", e)],
    };
    let classes: Vec<(usize, &FiniteFunction)> = idx
        .buckets()
        .into_iter()
        .flat_map(|(_, b)| b.iter().map(move |f| (b.len(), f)))
        .collect();
    type Pred = fn(&FiniteFunction) -> bool;
    let kinds: [(&str, Pred); 3] = [
        ("totally symmetric", |f| recognize(f, ClassKind::Msupp).map(|w| w.is_some()).unwrap_or(false)),
        ("weakly ofo", |f| recognize(f, ClassKind::WeaklyOfo).map(|w| w.is_some()).unwrap_or(false)),
        ("constant", |f| f.table().iter().all(|&v| v == f.table()[0])),
    ];
    let mut out = vec![Check::new(
        "(2,4,2) enumerates 65536 functions",
        idx.function_count() == 65536,
        format!("{} classes in {} buckets", idx.class_count(), idx.bucket_count()),
    )];
    for (name, pred) in kinds {
        let members: Vec<usize> = classes.par_iter().filter(|(_, f)| pred(f)).map(|(s, _)| *s).collect();
        let bad = members.iter().filter(|&&s| s != 1).count();
        out.push(Check::new(
            format!("every {name} function at (2,4,2) is reconstructible"),
            bad == 0 && !members.is_empty(),
            format!("{} classes, {bad} in shared buckets", members.len()),
        ));
    }
    out
}

fn symmofo_triple() -> Vec<Check> {
    match example_symmofo("a", "b", "c", "d") {
        Ok(x) => {
            let mut out = x.verify();
            out.push(Check::new(
                "symmofo: shared card table is (a,b,c,d)",
                x.card.table() == [0, 1, 2, 3],
                "",
            ));
            out
        }
        Err(e) => vec![Check::errored("symmofo construction", e)],
    }
}

fn theta_suite() -> Vec<Check> {
    [3, 4]
        .par_iter()
        .map(|&k| match theta_counterexample(k, "alpha", "beta", "gamma") {
            Ok(x) => x.verify(),
            Err(e) => vec![Check::errored(format!("theta k={k} construction"), e)],
        })
        .collect::<Vec<_>>()
        .concat()
}

fn a_plus_1_suite() -> Vec<Check> {
    (2..=4)
        .flat_map(|k| match example_a_plus_1(k, "beta") {
            Ok(x) => x.verify().into_iter().map(|c| Check { name: format!("k={k} {}", c.name), ..c }).collect(),
            Err(e) => vec![Check::errored(format!("a+1 k={k} construction"), e)],
        })
        .collect()
}

fn cyclic_suite() -> Vec<Check> {
    [3, 4]
        .iter()
        .flat_map(|&k| match example_cyclic(k) {
            Ok(x) => x.verify(),
            Err(e) => vec![Check::errored(format!("cyclic k={k} construction"), e)],
        })
        .collect()
}

fn gallery_suite() -> Vec<Check> {
    let mut out = Vec::new();
    for name in GALLERY_NAMES {
        match gallery_item(name, None) {
            Ok(item) => out.extend(item.checks),
            Err(e) => out.push(Check::errored(format!("gallery {name}"), e)),
        }
    }
    out
}

fn symmetric_weak() -> Vec<Check> {
    let mut out = Vec::new();
    for n in [4, 5] {
        for labels in 1..=3 {
            let name = format!("(2,{n},{labels}): symmetric functions with equal decks are equal");
            out.push(guard(&name, (|| {
                let members = totally_symmetric_functions(2, n, labels)?;
                let res = class_weak_reconstructibility(&members)?;
                Ok(Check::new(&name, res.equal_per_bucket, format!("{} functions", members.len())))
            })()));
        }
    }
    out
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_map(v).expect("shuffle is a bijection")
}

fn random_function(rng: &mut ChaCha8Rng, k: usize, n: usize, labels: usize) -> FiniteFunction {
    FiniteFunction::from_fn(k, n, numeric_labels(labels), |_| rng.gen_range(0..labels) as Label)
        .expect("small shape")
}

/// `name` passes iff `case` holds on every sample.
fn property<F>(name: &str, cases: usize, rng: &mut ChaCha8Rng, mut case: F) -> Check
where
    F: FnMut(&mut ChaCha8Rng) -> Result<bool>,
{
    let mut failures = 0;
    let mut first: Option<String> = None;
    for i in 0..cases {
        match case(rng) {
            Ok(true) => {}
            Ok(false) => {
                failures += 1;
                first.get_or_insert(format!("case {i} failed"));
            }
            Err(e) => {
                failures += 1;
                first.get_or_insert(format!("case {i}: {e}"));
            }
        }
    }
    let details = match first {
        Some(f) => format!("{failures}/{cases} failures; first: {f}"),
        None => format!("{cases} cases"),
    };
    Check::new(name, failures == 0, details)
}

fn properties(config: &SuiteConfig) -> Vec<Check> {
    let cases = config.cases;
    // Each property draws from its own stream so adding one leaves the others
    // unchanged.
    let rng = |i: u64| ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(i));
    let mut out = Vec::new();

    out.push(property("hat sigma: hat∘delta_J = delta_I∘sigma, hat(min J) = min I", cases, &mut rng(1), |r| {
        let n = r.gen_range(2..=8);
        let sigma = random_perm(r, n);
        let couples = Couple::all(n);
        let c = couples[r.gen_range(0..couples.len())];
        let hat = hat_sigma(&sigma, c)?;
        let inv = sigma.inverse();
        let j = Couple::new(inv.apply(c.min_pos()), inv.apply(c.max_pos()))?;
        let pointwise = (0..n).all(|p| hat.apply(j.delta_image(p)) == c.delta_image(sigma.apply(p)));
        Ok(pointwise && hat.apply(j.min_pos()) == c.min_pos())
    }));

    out.push(property("extend_with_default commutes with identification minors", cases, &mut rng(2), |r| {
        let k = r.gen_range(1..=3);
        let n = r.gen_range(2..=4);
        let f = random_function(r, k, n, 2);
        let k2 = k + r.gen_range(0..=2);
        let labels2 = vec!["0".to_string(), "1".to_string(), "x".to_string()];
        let default = ["0", "1", "x"][r.gen_range(0..3)];
        let ext = f.extend_with_default(k2, labels2.clone(), default)?;
        for c in Couple::all(n) {
            let lhs = ext.identification_minor(c)?;
            let rhs = f.identification_minor(c)?.extend_with_default(k2, labels2.clone(), default)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }));

    out.push(property("f_{G,P,phi} deck is the multiset of the g^I classes", cases, &mut rng(3), |r| {
        let k = r.gen_range(2..=3);
        let spec = random_valid_spec(k, r);
        let f = build_fgp_phi(&spec)?;
        let mut want: Vec<FiniteFunction> = spec.family_g.iter().map(|g| g.canonical_form()).collect();
        want.sort();
        let got: Vec<FiniteFunction> = Deck::of(&f)?
            .cards()
            .iter()
            .flat_map(|(c, m)| std::iter::repeat_n(c.clone(), *m))
            .collect();
        Ok(got == want)
    }));

    let mut fired: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut check = property("deduction-rule predictions lie in Delta / G", cases, &mut rng(4), |r| {
        let n = r.gen_range(3..=7);
        let k = r.gen_range(2..n.min(6));
        let sigma = random_perm(r, n);
        let matches = table1_rule_check(&sigma, k)?;
        for m in &matches {
            *fired.entry(m.rule).or_insert(0) += 1;
        }
        Ok(matches.iter().all(|m| m.verified))
    });
    check.details = format!(
        "{}; matches per rule: {}",
        check.details,
        fired.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    );
    out.push(check);

    out.push(property("lambda^l_{n-1} and theta_n have opposite parity", cases, &mut rng(5), |r| {
        let n = r.gen_range(2..=9);
        let k = n - 1;
        let ells: Vec<usize> = (1..=k).filter(|l| l % 2 == k % 2).collect();
        let ell = ells[r.gen_range(0..ells.len())];
        Ok(lambda(ell, k)?.parity() != theta(n)?.parity())
    }));

    out.push(property("ofo is idempotent and invariant under delta_I", cases, &mut rng(6), |r| {
        let k = r.gen_range(1..=5);
        let m = r.gen_range(1..=7);
        let a: Vec<usize> = (0..m).map(|_| r.gen_range(0..k)).collect();
        let w = ofo_unchecked(&a);
        let idem = ofo_unchecked(w.letters()) == w;
        let couples = Couple::all(m + 1);
        let c = couples[r.gen_range(0..couples.len())];
        let stretched: Vec<usize> = (0..=m).map(|p| a[c.delta_image(p)]).collect();
        Ok(idem && ofo_unchecked(&stretched) == w)
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nope", &SuiteConfig::default()).is_err());
    }

    #[test]
    fn fast_suites_pass() {
        for name in ["worked-example", "symmofo-triple", "a-plus-1", "cyclic", "gallery"] {
            let reports = run_suite(name, &SuiteConfig::default()).unwrap();
            for r in &reports {
                if let Some(c) = r.failures().next() {
                    panic!("{}: {} ({})", r.suite, c.name, c.details);
                }
            }
        }
    }

    #[test]
    fn properties_pass_with_other_seed() {
        let r = run_suite("properties", &SuiteConfig { seed: 99, cases: 30 }).unwrap();
        assert!(r[0].passed(), "{:?}", r[0].failures().collect::<Vec<_>>());
    }
}
