//! Equalizing permutations and equalizing couples.
//!
//! `σ ∈ S_n` is `k`-equalizing when `f⁺(ofo(a)) = g⁺(ofo(aσ))` for all
//! full-support `a ∈ A^n` forces `f⁺ = g⁺` on `A^k_≠`. The decision goes
//! through `U^σ_k ∩ G^σ_k ≠ ∅`; the oracles decide the same questions by
//! connectivity.

mod oracle;
mod plus;
mod rules;
mod sets;
mod sigma_i;

pub use oracle::{
    is_equalizing_couple_oracle, is_equalizing_couple_oracle_bounded, is_k_equalizing_oracle,
    is_k_equalizing_oracle_bounded, COUPLE_BUDGET, K_EQUALIZING_BUDGET,
};
pub use plus::{parity_separator, phi_plus, psi_plus, separates, ParitySeparator, PlusMap};
pub use rules::{table1_rule_check, table1_rule_check_with, RuleMatch, Target};
pub use sets::{
    delta_set, g_group, is_k_equalizing, ofo_identity_preimages, quotient_set, u_set,
    EqualizingAnalysis, MAX_K,
};
pub use sigma_i::{pi_sigma, pi_sigma_couple, sigma_sub_i, sigma_sub_i_oneline, SigmaIPlan};

use crate::error::Result;
use crate::perm::{theta, Permutation};

/// `k`-equalizing unless `n = k+1 ≡ 0, 1 (mod 4)` and `σ = θ_n`.
pub fn is_k_equalizing_structural(sigma: &Permutation, k: usize) -> Result<bool> {
    let n = sigma.degree();
    if n <= k {
        return Err(crate::error::Error::ArityTooSmall { needed: k + 1, found: n });
    }
    let bad_residue = n.is_multiple_of(4) || n % 4 == 1;
    Ok(!(n == k + 1 && bad_residue && *sigma == theta(n)?))
}

/// Closed form: `k ≡ 1, 2 (mod 4)` needs `n >= k+1`, `k ≡ 0, 3 (mod 4)`
/// needs `n >= k+2`.
pub fn is_equalizing_couple(n: usize, k: usize) -> bool {
    match k % 4 {
        1 | 2 => n > k,
        _ => n >= k + 2,
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use proptest::prelude::*;

    use super::*;
    use crate::classes::ofo_unchecked;
    use crate::couple::Couple;
    use crate::function::tuples;
    use crate::perm::{all_permutations, lambda};

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_oneline(v).unwrap()
    }

    fn set(rows: &[[usize; 4]]) -> BTreeSet<Permutation> {
        rows.iter().map(|r| p(r)).collect()
    }

    fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
        (2..=max_n).prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_map(v).unwrap())
    }

    #[test]
    fn preimages_small() {
        let got = ofo_identity_preimages(3, 2).unwrap();
        assert_eq!(got, vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]);
        assert_eq!(ofo_identity_preimages(4, 4).unwrap(), vec![vec![0, 1, 2, 3]]);
        assert!(ofo_identity_preimages(2, 3).is_err());
    }

    #[test]
    fn preimages_match_filter() {
        for k in 1..=4 {
            for n in k..=6 {
                let want: Vec<Vec<usize>> = tuples(k, n)
                    .filter(|t| ofo_unchecked(t).letters() == (0..k).collect::<Vec<_>>().as_slice())
                    .collect();
                assert_eq!(ofo_identity_preimages(n, k).unwrap(), want);
            }
        }
    }

    #[test]
    fn worked_example_sets() {
        let sigma = p(&[3, 1, 5, 2, 6, 4]);
        let a = EqualizingAnalysis::new(&sigma, 4).unwrap();
        let u = set(&[
            [1, 2, 4, 3], [1, 3, 2, 4], [1, 3, 4, 2], [1, 4, 2, 3],
            [2, 1, 3, 4], [2, 1, 4, 3], [3, 1, 2, 4], [3, 1, 4, 2],
        ]);
        assert_eq!(a.u_set, u);
        let delta = set(&[
            [1, 2, 3, 4], [1, 2, 4, 3], [1, 3, 2, 4], [1, 3, 4, 2], [1, 4, 2, 3],
            [1, 4, 3, 2], [2, 1, 3, 4], [2, 1, 4, 3], [2, 3, 1, 4], [2, 3, 4, 1],
            [2, 4, 1, 3], [2, 4, 3, 1], [3, 1, 2, 4], [3, 1, 4, 2], [3, 2, 1, 4],
            [3, 2, 4, 1], [4, 1, 2, 3], [4, 1, 3, 2], [4, 2, 1, 3], [4, 2, 3, 1],
        ]);
        assert_eq!(a.delta_set, delta);
        assert_eq!(a.group.len(), 24);
        assert!(a.verdict);
        let json = a.to_json();
        assert_eq!(json["u_size"], 8);
        assert_eq!(json["delta_size"], 20);
        assert_eq!(json["group_size"], 24);
    }

    #[test]
    fn identity_sets_trivial() {
        let id = Permutation::identity(5);
        let a = EqualizingAnalysis::new(&id, 3).unwrap();
        assert_eq!(a.u_set.len(), 1);
        assert_eq!(a.delta_set.len(), 1);
        assert_eq!(a.group.len(), 1);
        assert!(a.verdict);
    }

    #[test]
    fn theta_examples() {
        assert!(!is_k_equalizing(&theta(4).unwrap(), 3).unwrap());
        assert!(!is_k_equalizing(&theta(5).unwrap(), 4).unwrap());
        let t4 = theta(4).unwrap();
        for sigma in all_permutations(4).filter(|s| *s != t4) {
            assert!(is_k_equalizing(&sigma, 3).unwrap(), "σ={sigma}");
        }
        assert!(is_k_equalizing(&Permutation::identity(3), 3).is_err());
        let json = EqualizingAnalysis::new(&t4, 3).unwrap().to_json();
        assert!(json["parity_separator"].is_object());
    }

    #[test]
    fn theta_u_set_is_odd_lambda_forms() {
        for n in [4, 5, 8] {
            let k = n - 1;
            let a = EqualizingAnalysis::new(&theta(n).unwrap(), k).unwrap();
            assert!(a.u_set.iter().all(|u| u.parity() == crate::Parity::Odd));
            assert!(a.u_set.iter().all(|u| !a.group.contains(u)));
            let lambdas: BTreeSet<Permutation> = (1..=k)
                .filter(|l| l % 2 == k % 2)
                .map(|l| lambda(l, k).unwrap())
                .collect();
            assert!(a.u_set.is_subset(&lambdas));
        }
    }

    #[test]
    fn ofo_of_delta_theta_is_lambda() {
        for n in 3..=9 {
            let k = n - 1;
            let th = theta(n).unwrap();
            for couple in Couple::all(n) {
                let a: Vec<usize> = (0..n).map(|i| couple.delta_image(th.apply(i))).collect();
                let m = couple.max_pos();
                let ell = m.min(th.apply(m)) + 1;
                let want = lambda(ell, k).unwrap();
                assert_eq!(ofo_unchecked(&a).letters(), want.as_map(), "n={n}, I={couple}");
            }
        }
    }

    #[test]
    fn structural_and_intersection_agree() {
        for n in 2..=6 {
            for k in 1..n {
                for sigma in all_permutations(n) {
                    assert_eq!(
                        is_k_equalizing(&sigma, k).unwrap(),
                        is_k_equalizing_structural(&sigma, k).unwrap(),
                        "σ={sigma}, k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_agrees_exhaustively() {
        for (n, ks) in [(4, vec![1, 2, 3]), (5, vec![2, 3, 4])] {
            for k in ks {
                for sigma in all_permutations(n) {
                    assert_eq!(
                        is_k_equalizing_oracle(&sigma, k).unwrap(),
                        is_k_equalizing(&sigma, k).unwrap(),
                        "σ={sigma}, k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert!(is_equalizing_couple(3, 2));
        assert!(!is_equalizing_couple(4, 3));
        assert!(!is_equalizing_couple(5, 4));
        assert!(is_equalizing_couple(6, 4));
    }

    #[test]
    fn couple_oracle_agrees_small() {
        for k in 2..=3 {
            for n in 2..=k + 3 {
                assert_eq!(is_equalizing_couple_oracle(n, k).unwrap(), is_equalizing_couple(n, k), "({n},{k})");
            }
        }
    }

    #[test]
    fn sigma_i_in_u_and_pi_in_u() {
        for sigma in all_permutations(5) {
            for k in 1..5 {
                let u = u_set(&sigma, k).unwrap();
                for couple in Couple::all(k + 1) {
                    assert!(u.contains(&sigma_sub_i(&sigma, k, couple).unwrap()));
                }
                assert!(u.contains(&pi_sigma(&sigma, k).unwrap()));
            }
        }
    }

    /// All edges `(ofo(a), ofo(aσ))` over full-support `a`.
    fn edges(sigma: &Permutation, k: usize) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
        tuples(k, sigma.degree())
            .filter(|a| ofo_unchecked(a).len() == k)
            .map(|a| {
                let b: Vec<usize> = sigma.as_map().iter().map(|&j| a[j]).collect();
                (ofo_unchecked(&a).letters().to_vec(), ofo_unchecked(&b).letters().to_vec())
            })
            .collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn left_translation(sigma in arb_perm(6), k in 1usize..5, lam in Just((0..4).collect::<Vec<usize>>()).prop_shuffle()) {
            prop_assume!(k < sigma.degree());
            let lam: Vec<usize> = lam.into_iter().filter(|&v| v < k).collect();
            let e = edges(&sigma, k);
            for (pi, tau) in &e {
                let tr = |w: &Vec<usize>| w.iter().map(|&v| lam[v]).collect::<Vec<usize>>();
                prop_assert!(e.contains(&(tr(pi), tr(tau))));
            }
        }

        #[test]
        fn intersection_iff_subset(sigma in arb_perm(7), k in 1usize..6) {
            prop_assume!(k < sigma.degree());
            let a = EqualizingAnalysis::new(&sigma, k).unwrap();
            let subset = a.u_set.iter().all(|u| a.group.contains(u));
            prop_assert_eq!(a.verdict, subset);
        }

        #[test]
        fn delta_closed_under_inverse(sigma in arb_perm(7), k in 1usize..6) {
            prop_assume!(k <= sigma.degree());
            let d = delta_set(&sigma, k).unwrap();
            prop_assert!(d.iter().all(|x| d.contains(&x.inverse())));
        }

        #[test]
        fn pi_sigma_member(sigma in arb_perm(7), k in 1usize..6) {
            prop_assume!(k <= sigma.degree());
            let u = u_set(&sigma, k).unwrap();
            prop_assert!(u.contains(&pi_sigma(&sigma, k).unwrap()));
        }

        #[test]
        fn rules_predictions_hold(sigma in arb_perm(7), k in 1usize..6) {
            prop_assume!(k < sigma.degree());
            for m in table1_rule_check(&sigma, k).unwrap() {
                prop_assert!(m.verified, "rule {} at {:?} for σ={}", m.rule, m.positions, sigma);
            }
        }
    }
}
