//! The parity colorings `φ⁺_k`, `ψ⁺_k` of `A^k_≠`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::classes::{ofo_unchecked, OfoWord};
use crate::error::{Error, Result};
use crate::function::{tuples, Label};
use crate::perm::{all_permutations, Parity, Permutation};

pub type PlusMap = BTreeMap<OfoWord, Label>;

fn check_labels(k: usize, alpha: Label, beta: Label, gamma: Label) -> Result<()> {
    if k == 0 {
        return Err(Error::EmptyDomain);
    }
    if alpha == beta {
        return Err(Error::LabelConstraint("alpha and beta must differ".into()));
    }
    if k.is_multiple_of(2) && gamma == alpha {
        return Err(Error::LabelConstraint("gamma must differ from alpha for even k".into()));
    }
    Ok(())
}

fn plus_map(k: usize, alpha: Label, beta: Label, gamma: Label, swap: bool) -> Result<PlusMap> {
    check_labels(k, alpha, beta, gamma)?;
    let mut out = BTreeMap::new();
    for rho in all_permutations(k) {
        let even = (rho.parity() == Parity::Even) != swap;
        let value = if k.is_multiple_of(2) && rho.apply(0) != 0 {
            gamma
        } else if even {
            alpha
        } else {
            beta
        };
        out.insert(OfoWord::new(rho.as_map().to_vec())?, value);
    }
    Ok(out)
}

/// `φ⁺_k`; `gamma` is unused for odd `k`.
pub fn phi_plus(k: usize, alpha: Label, beta: Label, gamma: Label) -> Result<PlusMap> {
    plus_map(k, alpha, beta, gamma, false)
}

/// `ψ⁺_k`: the parity roles of `φ⁺_k` swapped.
pub fn psi_plus(k: usize, alpha: Label, beta: Label, gamma: Label) -> Result<PlusMap> {
    plus_map(k, alpha, beta, gamma, true)
}

/// A pair `f⁺ ≠ g⁺` with `f⁺(ofo(a)) = g⁺(ofo(aσ))` for all full-support `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParitySeparator {
    pub k: usize,
    pub phi: PlusMap,
    pub psi: PlusMap,
}

impl ParitySeparator {
    pub fn to_json(&self) -> Value {
        let entries = |m: &PlusMap| -> Vec<Value> {
            m.iter()
                .map(|(w, &v)| {
                    let label = ["alpha", "beta", "gamma"][v as usize];
                    json!({ "word": w.one_based(), "label": label })
                })
                .collect()
        };
        json!({ "k": self.k, "phi": entries(&self.phi), "psi": entries(&self.psi) })
    }
}

/// Whether `f⁺(ofo(a)) = g⁺(ofo(aσ))` for every `a ∈ A^n` with full support.
pub fn separates(sigma: &Permutation, k: usize, f: &PlusMap, g: &PlusMap) -> bool {
    let n = sigma.degree();
    tuples(k, n).all(|a| {
        let wa = ofo_unchecked(&a);
        if wa.len() != k {
            return true;
        }
        let b: Vec<usize> = sigma.as_map().iter().map(|&j| a[j]).collect();
        f[&wa] == g[&ofo_unchecked(&b)]
    })
}

/// The `(φ⁺_k, ψ⁺_k)` pair with labels `α=0, β=1, γ=2`, if it separates `σ`.
pub fn parity_separator(sigma: &Permutation, k: usize) -> Result<Option<ParitySeparator>> {
    if sigma.degree() <= k {
        return Err(Error::ArityTooSmall { needed: k + 1, found: sigma.degree() });
    }
    let phi = phi_plus(k, 0, 1, 2)?;
    let psi = psi_plus(k, 0, 1, 2)?;
    Ok(separates(sigma, k, &phi, &psi).then_some(ParitySeparator { k, phi, psi }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::theta;

    fn w(v: &[usize]) -> OfoWord {
        OfoWord::new(v.iter().map(|x| x - 1).collect()).unwrap()
    }

    #[test]
    fn displayed_values() {
        let phi3 = phi_plus(3, 0, 1, 2).unwrap();
        let psi3 = psi_plus(3, 0, 1, 2).unwrap();
        assert_eq!(phi3[&w(&[1, 2, 3])], 0);
        assert_eq!(phi3[&w(&[2, 1, 3])], 1);
        assert_eq!(psi3[&w(&[2, 1, 3])], 0);
        let phi4 = phi_plus(4, 0, 1, 2).unwrap();
        assert_eq!(phi4[&w(&[2, 1, 3, 4])], 2);
        assert_eq!(phi4[&w(&[1, 2, 4, 3])], 1);
        assert_eq!(phi3.len(), 6);
    }

    #[test]
    fn label_constraints() {
        assert!(phi_plus(3, 1, 1, 2).is_err());
        assert!(phi_plus(4, 0, 1, 0).is_err());
        assert!(phi_plus(3, 0, 1, 0).is_ok());
    }

    #[test]
    fn theta_separated_exactly_in_the_bad_residues() {
        for n in 3..=7 {
            let sep = parity_separator(&theta(n).unwrap(), n - 1).unwrap();
            assert_eq!(sep.is_some(), n % 4 == 0 || n % 4 == 1, "n={n}");
        }
        assert!(parity_separator(&Permutation::identity(4), 3).unwrap().is_none());
    }
}
