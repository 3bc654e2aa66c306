//! Brute-force oracles by graph connectivity.
//!
//! A pair `(f⁺, g⁺)` satisfies `f⁺(ofo(a)) = g⁺(ofo(aσ))` for all relevant `a`
//! exactly when it is constant on the components of the bipartite graph with
//! an edge from the left copy of `ofo(a)` to the right copy of `ofo(aσ)`. So
//! `f⁺ = g⁺` is forced iff every word's two copies share a component.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::classes::{enumerate_ofo_range, ofo_unchecked};
use crate::error::{Error, Result};
use crate::function::{minor_index_map, tuples};
use crate::perm::{all_permutations, factorial, Permutation};

pub const K_EQUALIZING_BUDGET: u128 = 1 << 22;
pub const COUPLE_BUDGET: u128 = 1 << 28;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind { parent: (0..size).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Word id of `ofo(a)` for every `a ∈ A^n` in row-major order, and the number
/// of words.
fn intern_words(k: usize, n: usize) -> (Vec<usize>, usize) {
    let words = enumerate_ofo_range(k, n);
    let ids: HashMap<Vec<usize>, usize> =
        words.iter().enumerate().map(|(i, w)| (w.letters().to_vec(), i)).collect();
    let table = tuples(k, n).map(|t| ids[ofo_unchecked(&t).letters()]).collect();
    (table, words.len())
}

fn check_budget(what: &'static str, value: u128, bound: u128) -> Result<()> {
    if value > bound {
        return Err(Error::BoundExceeded { what, value, bound });
    }
    Ok(())
}

/// True iff left and right copies of every word in `wanted` are joined.
fn forces_equality(
    word_of: &[usize],
    words: usize,
    index_map: &[usize],
    keep: impl Fn(usize) -> bool,
    wanted: impl Iterator<Item = usize>,
) -> bool {
    let mut uf = UnionFind::new(2 * words);
    for (a, &b) in index_map.iter().enumerate() {
        let wa = word_of[a];
        if keep(wa) {
            uf.union(wa, words + word_of[b]);
        }
    }
    let mut wanted = wanted;
    wanted.all(|w| uf.find(w) == uf.find(words + w))
}

pub fn is_k_equalizing_oracle(sigma: &Permutation, k: usize) -> Result<bool> {
    is_k_equalizing_oracle_bounded(sigma, k, K_EQUALIZING_BUDGET)
}

/// Whether `σ` is `k`-equalizing, by connectivity over full-support tuples.
pub fn is_k_equalizing_oracle_bounded(sigma: &Permutation, k: usize, budget: u128) -> Result<bool> {
    let n = sigma.degree();
    if k == 0 {
        return Err(Error::EmptyDomain);
    }
    if n <= k {
        return Err(Error::ArityTooSmall { needed: k + 1, found: n });
    }
    check_budget("k^n", (k as u128).pow(n as u32), budget)?;
    let (word_of, words) = intern_words(k, n);
    // Words are ordered by length, so the full-length ones come last.
    let full_start = words - factorial(k) as usize;
    let index_map = minor_index_map(k, n, sigma.as_map());
    Ok(forces_equality(&word_of, words, &index_map, |w| w >= full_start, full_start..words))
}

pub fn is_equalizing_couple_oracle(n: usize, k: usize) -> Result<bool> {
    is_equalizing_couple_oracle_bounded(n, k, COUPLE_BUDGET)
}

/// Whether `(n, k)` is an equalizing couple, by connectivity over all tuples
/// for every `σ ∈ S_n`.
pub fn is_equalizing_couple_oracle_bounded(n: usize, k: usize, budget: u128) -> Result<bool> {
    if k == 0 || n == 0 {
        return Err(Error::EmptyDomain);
    }
    check_budget("n!·k^n", factorial(n) * (k as u128).pow(n as u32), budget)?;
    let (word_of, words) = intern_words(k, n);
    let perms: Vec<Permutation> = all_permutations(n).collect();
    Ok(perms.par_iter().all(|sigma| {
        let index_map = minor_index_map(k, n, sigma.as_map());
        forces_equality(&word_of, words, &index_map, |_| true, 0..words)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::theta;

    #[test]
    fn theta_four_is_separated() {
        assert!(!is_k_equalizing_oracle(&theta(4).unwrap(), 3).unwrap());
        assert!(!is_k_equalizing_oracle(&theta(5).unwrap(), 4).unwrap());
        assert!(is_k_equalizing_oracle(&Permutation::identity(4), 3).unwrap());
    }

    #[test]
    fn small_couples() {
        assert!(is_equalizing_couple_oracle(3, 2).unwrap());
        assert!(!is_equalizing_couple_oracle(4, 3).unwrap());
        assert!(!is_equalizing_couple_oracle(2, 2).unwrap());
    }

    #[test]
    fn budget_guard() {
        let sigma = Permutation::identity(10);
        assert!(matches!(
            is_k_equalizing_oracle_bounded(&sigma, 5, 1 << 10),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(is_equalizing_couple_oracle_bounded(12, 4, 1 << 20).is_err());
        assert!(is_k_equalizing_oracle(&Permutation::identity(3), 3).is_err());
    }
}
