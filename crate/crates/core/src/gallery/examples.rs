//! Explicit examples and counterexamples, each with a verifier.

use std::collections::BTreeSet;

use super::fgp::{build_fgp_phi, FGPPhiSpec};
use crate::classes::{enumerate_ofo_range, from_ofo, recognize, supp_unchecked, ClassKind, ElemSet};
use crate::couple::Couple;
use crate::equalizing::{phi_plus, psi_plus};
use crate::error::{Error, Result};
use crate::function::{domain_labels, tuples, FiniteFunction, Label};
use crate::perm::{theta, Permutation};
use crate::report::Check;

/// Distinct labels in first-appearance order, and the index of each input.
fn intern(raw: &[&str]) -> (Vec<String>, Vec<Label>) {
    let mut labels: Vec<String> = Vec::new();
    let idx = raw
        .iter()
        .map(|&l| match labels.iter().position(|x| x == l) {
            Some(i) => i as Label,
            None => {
                labels.push(l.to_string());
                (labels.len() - 1) as Label
            }
        })
        .collect();
    (labels, idx)
}

fn check_result(name: &str, r: Result<bool>, details: &str) -> Check {
    match r {
        Ok(b) => Check::new(name, b, details),
        Err(e) => Check::errored(name, e),
    }
}

fn in_class(f: &FiniteFunction, kind: ClassKind) -> Result<bool> {
    Ok(recognize(f, kind)?.is_some())
}

fn minors_all_equivalent_to(f: &FiniteFunction, card: &FiniteFunction) -> Result<bool> {
    for (_, m) in f.identification_minors()? {
        if !m.is_equivalent(card)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The pair on `A^{k+1}` built from `h(a) = a_1` on surjective tuples and `β`
/// elsewhere.
#[derive(Debug, Clone)]
pub struct APlus1 {
    pub k: usize,
    pub h: FiniteFunction,
    pub f: FiniteFunction,
    pub g: FiniteFunction,
}

pub fn example_a_plus_1(k: usize, beta: &str) -> Result<APlus1> {
    if k < 2 {
        return Err(Error::ArityTooSmall { needed: 2, found: k });
    }
    let mut labels = domain_labels(k);
    if labels.iter().any(|l| l == beta) {
        return Err(Error::LabelConstraint(format!(
            "beta {beta:?} must differ from the domain labels 1..{k}"
        )));
    }
    labels.push(beta.to_string());
    let b = k as Label;
    let full = ElemSet::full(k);
    let h = FiniteFunction::from_fn(k, k, labels, |t| {
        if supp_unchecked(t) == full {
            t[0] as Label
        } else {
            b
        }
    })?;
    let couples = Couple::all(k + 1);
    let m = couples.len();
    let spec = |family_p: Vec<Permutation>| FGPPhiSpec {
        k,
        g_star: vec![b; 1 << k],
        family_g: vec![h.clone(); m],
        family_p,
        phi: (0..m).collect(),
    };
    let p: Vec<Permutation> = couples
        .iter()
        .map(|c| Permutation::transposition(k, 0, c.min_pos()).unwrap_or(Permutation::identity(k)))
        .collect();
    let f = build_fgp_phi(&spec(p))?;
    let g = build_fgp_phi(&spec(vec![Permutation::identity(k); m]))?;
    Ok(APlus1 { k, h, f, g })
}

impl APlus1 {
    pub fn verify(&self) -> Vec<Check> {
        vec![
            check_result("a+1: decks equal", self.f.decks_equal(&self.g), ""),
            check_result("a+1: f and g nonequivalent", self.f.is_equivalent(&self.g).map(|e| !e), ""),
            check_result("a+1: every minor of f equivalent to h", minors_all_equivalent_to(&self.f, &self.h), ""),
            check_result("a+1: every minor of g equivalent to h", minors_all_equivalent_to(&self.g, &self.h), ""),
            check_result("a+1: f totally symmetric", in_class(&self.f, ClassKind::Msupp), ""),
            check_result("a+1: g determined by ofo", in_class(&self.g, ClassKind::Ofo), ""),
        ]
    }
}

/// `α` exactly at `kρ_I⁻¹δ_I` with `ρ_I = (i, ..., k, 1, ..., i-1)`, `i = min I`.
#[derive(Debug, Clone)]
pub struct Cyclic {
    pub k: usize,
    pub f: FiniteFunction,
}

pub fn cyclic_rho(k: usize, couple: Couple) -> Permutation {
    let i = couple.min_pos();
    let map: Vec<usize> = (0..k).map(|p| (p + i) % k).collect();
    Permutation::from_map(map).expect("rotation")
}

pub fn example_cyclic(k: usize) -> Result<Cyclic> {
    if k < 3 {
        return Err(Error::ArityTooSmall { needed: 3, found: k });
    }
    let labels: Vec<String> = vec!["alpha".into(), "beta".into()];
    let identity: Vec<usize> = (0..k).collect();
    let h = FiniteFunction::from_fn(k, k, labels, |t| if t == identity.as_slice() { 0 } else { 1 })?;
    let couples = Couple::all(k + 1);
    let m = couples.len();
    let spec = FGPPhiSpec {
        k,
        g_star: vec![1; 1 << k],
        family_g: vec![h; m],
        family_p: couples.iter().map(|&c| cyclic_rho(k, c)).collect(),
        phi: (0..m).collect(),
    };
    Ok(Cyclic { k, f: build_fgp_phi(&spec)? })
}

/// The ten points printed for `k = 4`, 1-based.
pub const CYCLIC_K4_ALPHA: [[usize; 5]; 10] = [
    [1, 1, 2, 3, 4],
    [1, 2, 1, 3, 4],
    [1, 2, 3, 1, 4],
    [1, 2, 3, 4, 1],
    [4, 1, 1, 2, 3],
    [4, 1, 2, 1, 3],
    [4, 1, 2, 3, 1],
    [3, 4, 1, 1, 2],
    [3, 4, 1, 2, 1],
    [2, 3, 4, 1, 1],
];

impl Cyclic {
    /// Points where `f` takes `α`, 1-based, sorted.
    pub fn alpha_set(&self) -> BTreeSet<Vec<usize>> {
        tuples(self.k, self.k + 1)
            .zip(self.f.table())
            .filter(|(_, &v)| v == 0)
            .map(|(t, _)| t.iter().map(|x| x + 1).collect())
            .collect()
    }

    /// `{kρ_I⁻¹δ_I : I}`, 1-based.
    pub fn predicted_alpha_set(&self) -> BTreeSet<Vec<usize>> {
        let k = self.k;
        Couple::all(k + 1)
            .into_iter()
            .map(|c| {
                let a = cyclic_rho(k, c).inverse();
                (0..=k).map(|p| a.apply(c.delta_image(p)) + 1).collect()
            })
            .collect()
    }

    pub fn verify(&self) -> Vec<Check> {
        let name = |s: &str| format!("cyclic k={}: {s}", self.k);
        let mut out = vec![Check::new(
            name("alpha set is {k rho_I^-1 delta_I}"),
            self.alpha_set() == self.predicted_alpha_set(),
            format!("{} points", self.alpha_set().len()),
        )];
        if self.k == 4 {
            let printed: BTreeSet<Vec<usize>> = CYCLIC_K4_ALPHA.iter().map(|r| r.to_vec()).collect();
            out.push(Check::new(name("alpha set matches the printed list"), self.alpha_set() == printed, ""));
        }
        out.push(check_result(&name("unique identification minor"), self.f.has_unique_identification_minor(), ""));
        out.push(check_result(
            &name("invariance group is trivial"),
            self.f.invariance_group().map(|g| g.len() == 1),
            "",
        ));
        out.push(check_result(
            &name("not weakly determined by ofo"),
            in_class(&self.f, ClassKind::WeaklyOfo).map(|b| !b),
            "",
        ));
        out
    }
}

/// `f = f*∘ofo`, `g = g*∘ofo` on `A^{k+2}` with `f*`, `g*` the `γ`-extensions
/// of `φ⁺_k`, `ψ⁺_k`.
#[derive(Debug, Clone)]
pub struct ThetaPair {
    pub k: usize,
    pub f: FiniteFunction,
    pub g: FiniteFunction,
}

pub fn theta_counterexample(k: usize, alpha: &str, beta: &str, gamma: &str) -> Result<ThetaPair> {
    if k == 0 || k % 4 == 1 || k % 4 == 2 {
        return Err(Error::Unsupported(format!("theta counterexample needs k ≡ 0, 3 (mod 4), got {k}")));
    }
    if gamma == alpha {
        return Err(Error::LabelConstraint("gamma must differ from alpha".into()));
    }
    let (labels, idx) = intern(&[alpha, beta, gamma]);
    let n = k + 2;
    let phi = phi_plus(k, idx[0], idx[1], idx[2])?;
    let psi = psi_plus(k, idx[0], idx[1], idx[2])?;
    let extend = |plus: &crate::equalizing::PlusMap| {
        enumerate_ofo_range(k, n)
            .into_iter()
            .map(|w| {
                let v = plus.get(&w).copied().unwrap_or(idx[2]);
                (w, v)
            })
            .collect()
    };
    let f = from_ofo(k, n, labels.clone(), &extend(&phi))?;
    let g = from_ofo(k, n, labels, &extend(&psi))?;
    Ok(ThetaPair { k, f, g })
}

impl ThetaPair {
    /// `f_I = g_J ∘ θ_{k+1}` for every `I, J`.
    pub fn minors_related_by_theta(&self) -> Result<bool> {
        let th = theta(self.k + 1)?;
        let fm = self.f.identification_minors()?;
        let gm = self.g.identification_minors()?;
        for (_, gj) in &gm {
            let shifted = gj.precompose(&th)?;
            if fm.iter().any(|(_, fi)| *fi != shifted) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn verify(&self) -> Vec<Check> {
        let name = |s: &str| format!("theta k={}: {s}", self.k);
        vec![
            check_result(&name("f and g nonequivalent"), self.f.is_equivalent(&self.g).map(|e| !e), ""),
            check_result(&name("f_I = g_J theta_{k+1} for all I, J"), self.minors_related_by_theta(), ""),
            check_result(&name("decks equal"), self.f.decks_equal(&self.g), ""),
            check_result(&name("f determined by ofo"), in_class(&self.f, ClassKind::Ofo), ""),
            check_result(&name("g determined by ofo"), in_class(&self.g, ClassKind::Ofo), ""),
        ]
    }
}

/// Three ternary Boolean functions sharing the card `00↦a, 01↦b, 10↦c, 11↦d`.
#[derive(Debug, Clone)]
pub struct SymmOfo {
    pub f: FiniteFunction,
    pub g: FiniteFunction,
    pub h: FiniteFunction,
    pub card: FiniteFunction,
    pub distinct_bc: bool,
}

pub fn example_symmofo(a: &str, b: &str, c: &str, d: &str) -> Result<SymmOfo> {
    let (labels, i) = intern(&[a, b, c, d]);
    let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
    let f = FiniteFunction::new(2, 3, labels.clone(), vec![a, b, b, c, b, c, c, d])?;
    let g = FiniteFunction::new(2, 3, labels.clone(), vec![a, c, c, b, c, b, b, d])?;
    let h = FiniteFunction::new(2, 3, labels.clone(), vec![a, b, b, b, c, c, c, d])?;
    let card = FiniteFunction::new(2, 2, labels, vec![a, b, c, d])?;
    Ok(SymmOfo { f, g, h, card, distinct_bc: b != c })
}

impl SymmOfo {
    pub fn verify(&self) -> Vec<Check> {
        let (f, g, h) = (&self.f, &self.g, &self.h);
        let mut out = vec![
            check_result("symmofo: f totally symmetric", in_class(f, ClassKind::Msupp), ""),
            check_result("symmofo: g totally symmetric", in_class(g, ClassKind::Msupp), ""),
            check_result("symmofo: h determined by ofo", in_class(h, ClassKind::Ofo), ""),
        ];
        for (name, x) in [("f", f), ("g", g), ("h", h)] {
            out.push(check_result(
                &format!("symmofo: every minor of {name} equivalent to the shared card"),
                minors_all_equivalent_to(x, &self.card),
                "",
            ));
        }
        out.push(check_result(
            "symmofo: decks equal",
            f.decks_equal(g).and_then(|x| Ok(x && g.decks_equal(h)?)),
            "",
        ));
        let want = !self.distinct_bc;
        for (name, x, y) in [("f,g", f, g), ("f,h", f, h), ("g,h", g, h)] {
            out.push(check_result(
                &format!("symmofo: {name} equivalent iff b = c"),
                x.is_equivalent(y).map(|e| e == want),
                "",
            ));
        }
        out
    }
}

/// `x1x2 + x2x3` over `{0,1}` and its three printed identification minors.
#[derive(Debug, Clone)]
pub struct Quadratic {
    pub g: FiniteFunction,
    pub expected: Vec<(Couple, FiniteFunction)>,
}

pub fn example_boolean_quadratic() -> Result<Quadratic> {
    let labels = || vec!["0".to_string(), "1".to_string()];
    let g = FiniteFunction::from_fn(2, 3, labels(), |x| ((x[0] * x[1] + x[1] * x[2]) % 2) as Label)?;
    let binary = |rule: fn(usize, usize) -> usize| {
        FiniteFunction::from_fn(2, 2, labels(), |x| (rule(x[0], x[1]) % 2) as Label)
    };
    let expected = vec![
        (Couple::from_one_based(1, 2)?, binary(|x1, x2| x1 + x1 * x2)?),
        (Couple::from_one_based(1, 3)?, binary(|_, _| 0)?),
        (Couple::from_one_based(2, 3)?, binary(|x1, x2| x1 * x2 + x2)?),
    ];
    Ok(Quadratic { g, expected })
}

impl Quadratic {
    pub fn verify(&self) -> Vec<Check> {
        let mut out: Vec<Check> = self
            .expected
            .iter()
            .map(|(c, want)| match self.g.identification_minor(*c) {
                Ok(m) => Check::new(format!("quadratic: minor at {c}"), m == *want, ""),
                Err(e) => Check::errored(format!("quadratic: minor at {c}"), e),
            })
            .collect();
        out.push(check_result(
            "quadratic: minors at {1,2} and {2,3} equivalent",
            self.expected[0].1.is_equivalent(&self.expected[2].1),
            "",
        ));
        out
    }
}

pub const GALLERY_NAMES: [&str; 5] = ["a_plus_1", "cyclic", "theta", "symmofo", "quadratic"];

/// A built gallery item: its named functions and verification checks.
#[derive(Debug, Clone)]
pub struct GalleryItem {
    pub name: String,
    pub functions: Vec<(String, FiniteFunction)>,
    pub checks: Vec<Check>,
}

/// Builds an item by name with default labels. `k` defaults per item.
pub fn gallery_item(name: &str, k: Option<usize>) -> Result<GalleryItem> {
    let fs = |v: Vec<(&str, &FiniteFunction)>| -> Vec<(String, FiniteFunction)> {
        v.into_iter().map(|(n, f)| (n.to_string(), f.clone())).collect()
    };
    let (functions, checks) = match name {
        "a_plus_1" => {
            let x = example_a_plus_1(k.unwrap_or(2), "beta")?;
            (fs(vec![("f", &x.f), ("g", &x.g)]), x.verify())
        }
        "cyclic" => {
            let x = example_cyclic(k.unwrap_or(4))?;
            (fs(vec![("f", &x.f)]), x.verify())
        }
        "theta" => {
            let x = theta_counterexample(k.unwrap_or(3), "alpha", "beta", "gamma")?;
            (fs(vec![("f", &x.f), ("g", &x.g)]), x.verify())
        }
        "symmofo" => {
            let x = example_symmofo("a", "b", "c", "d")?;
            (fs(vec![("f", &x.f), ("g", &x.g), ("h", &x.h)]), x.verify())
        }
        "quadratic" => {
            let x = example_boolean_quadratic()?;
            (fs(vec![("g", &x.g)]), x.verify())
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown gallery item {other:?}; expected one of {}",
                GALLERY_NAMES.join(", ")
            )))
        }
    };
    Ok(GalleryItem { name: name.to_string(), functions, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(checks: &[Check]) {
        for c in checks {
            assert!(c.passed, "{} failed: {}", c.name, c.details);
        }
    }

    #[test]
    fn a_plus_1_pairs() {
        for k in 2..=4 {
            all_pass(&example_a_plus_1(k, "beta").unwrap().verify());
        }
        assert!(example_a_plus_1(3, "2").is_err());
        assert!(example_a_plus_1(1, "beta").is_err());
    }

    #[test]
    fn a_plus_1_values() {
        // f(b) is the repeated element on surjective tuples, beta elsewhere.
        let x = example_a_plus_1(3, "beta").unwrap();
        assert_eq!(x.f.label_at(&[2, 0, 1, 2]).unwrap(), "3");
        assert_eq!(x.f.label_at(&[0, 0, 1, 1]).unwrap(), "beta");
        assert_eq!(x.g.label_at(&[2, 0, 1, 2]).unwrap(), "3");
        assert_eq!(x.g.label_at(&[1, 0, 1, 2]).unwrap(), "2");
    }

    #[test]
    fn cyclic_k4_printed_points() {
        let x = example_cyclic(4).unwrap();
        let printed: BTreeSet<Vec<usize>> = CYCLIC_K4_ALPHA.iter().map(|r| r.to_vec()).collect();
        assert_eq!(x.alpha_set(), printed);
        all_pass(&x.verify());
    }

    #[test]
    fn cyclic_k3() {
        let x = example_cyclic(3).unwrap();
        assert_eq!(x.f.invariance_group().unwrap().len(), 1);
        assert!(x.f.has_unique_identification_minor().unwrap());
        all_pass(&x.verify());
        assert!(example_cyclic(2).is_err());
    }

    #[test]
    fn theta_pairs() {
        all_pass(&theta_counterexample(3, "alpha", "beta", "gamma").unwrap().verify());
        all_pass(&theta_counterexample(4, "alpha", "beta", "gamma").unwrap().verify());
        all_pass(&theta_counterexample(4, "alpha", "beta", "beta").unwrap().verify());
        assert!(theta_counterexample(5, "alpha", "beta", "gamma").is_err());
        assert!(theta_counterexample(3, "alpha", "alpha", "gamma").is_err());
        assert!(theta_counterexample(4, "alpha", "beta", "alpha").is_err());
    }

    #[test]
    fn symmofo_tables() {
        let x = example_symmofo("a", "b", "c", "d").unwrap();
        assert_eq!(x.f.label_at(&[0, 1, 1]).unwrap(), "c");
        assert_eq!(x.g.label_at(&[0, 1, 1]).unwrap(), "b");
        assert_eq!(x.h.label_at(&[0, 1, 1]).unwrap(), "b");
        all_pass(&x.verify());
        let same = example_symmofo("a", "b", "b", "d").unwrap();
        assert!(same.f.is_equivalent(&same.g).unwrap());
        all_pass(&same.verify());
    }

    #[test]
    fn quadratic_minors() {
        all_pass(&example_boolean_quadratic().unwrap().verify());
    }

    #[test]
    fn named_lookup() {
        for name in GALLERY_NAMES {
            let item = gallery_item(name, None).unwrap();
            assert!(!item.functions.is_empty());
            all_pass(&item.checks);
        }
        assert!(gallery_item("nope", None).is_err());
    }
}
