//! The permutations `σ_I` for couples `I` of `{1..k+1}`, and `π^σ_k`.

use crate::classes::ofo_unchecked;
use crate::couple::Couple;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `x^{(α)}`: `x` if `x <= α`, otherwise `x - 1`.
fn lower(x: usize, alpha: usize) -> usize {
    if x <= alpha {
        x
    } else {
        x - 1
    }
}

/// The data fixing the tuple `k_{I_1,...,I_r}`. Values are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaIPlan {
    pub k: usize,
    pub couple: Couple,
    /// `S_σ = {i : σ(i) <= k+1}`, positions in increasing order.
    pub s_sigma: Vec<usize>,
    pub b_sigma: usize,
    pub c_sigma: usize,
    /// The value repeated at every position past `k+1`.
    pub d: usize,
    /// `I_1 = I`, then one couple per position past `k+1`.
    pub couples: Vec<Couple>,
}

impl SigmaIPlan {
    pub fn new(sigma: &Permutation, k: usize, couple: Couple) -> Result<Self> {
        let n = sigma.degree();
        if k == 0 {
            return Err(Error::EmptyDomain);
        }
        if n <= k {
            return Err(Error::ArityTooSmall { needed: k + 1, found: n });
        }
        if couple.max_pos() > k {
            return Err(Error::PositionOutOfRange { position: couple.max_pos() + 1, arity: k + 1 });
        }
        let s_sigma: Vec<usize> = (0..n).filter(|&i| sigma.apply(i) <= k).collect();
        let b_sigma = s_sigma[0];
        let c_sigma = sigma.apply(b_sigma);
        let (min_i, max_i) = (couple.min_pos(), couple.max_pos());
        let (d, d_pos) = if couple.contains(c_sigma) {
            (min_i, min_i)
        } else {
            (lower(c_sigma, max_i), c_sigma)
        };
        let mut couples = vec![couple];
        for p in k + 1..n {
            couples.push(Couple::new(d_pos, p)?);
        }
        Ok(SigmaIPlan { k, couple, s_sigma, b_sigma, c_sigma, d, couples })
    }

    /// The tuple `k_{I_1,...,I_r}` (0-based values).
    pub fn tuple(&self, n: usize) -> Vec<usize> {
        let (min_i, max_i) = (self.couple.min_pos(), self.couple.max_pos());
        (0..n)
            .map(|i| {
                if i > self.k {
                    self.d
                } else if i == max_i {
                    min_i
                } else {
                    lower(i, max_i)
                }
            })
            .collect()
    }
}

/// `σ_I` from the one-line form: drop entries past `k+1`, keep `min I` at the
/// leftmost of the two positions holding `min I`, `max I`, drop the other,
/// then close the gap above `max I`.
pub fn sigma_sub_i_oneline(sigma: &Permutation, k: usize, couple: Couple) -> Result<Permutation> {
    if sigma.degree() <= k {
        return Err(Error::ArityTooSmall { needed: k + 1, found: sigma.degree() });
    }
    if couple.max_pos() > k {
        return Err(Error::PositionOutOfRange { position: couple.max_pos() + 1, arity: k + 1 });
    }
    let (min_i, max_i) = (couple.min_pos(), couple.max_pos());
    let mut s: Vec<usize> = sigma.restrict_oneline(k + 1)?.as_map().to_vec();
    let p_min = s.iter().position(|&v| v == min_i).expect("min I present");
    let p_max = s.iter().position(|&v| v == max_i).expect("max I present");
    let (left, right) = if p_min < p_max { (p_min, p_max) } else { (p_max, p_min) };
    s[left] = min_i;
    s.remove(right);
    for v in &mut s {
        if *v > max_i {
            *v -= 1;
        }
    }
    Permutation::from_map(s)
}

/// `σ_I`, computed from the tuple and from the one-line shortcut, which must
/// agree.
pub fn sigma_sub_i(sigma: &Permutation, k: usize, couple: Couple) -> Result<Permutation> {
    let plan = SigmaIPlan::new(sigma, k, couple)?;
    let a = plan.tuple(sigma.degree());
    let first = ofo_unchecked(&a);
    if first.letters() != (0..k).collect::<Vec<_>>().as_slice() {
        return Err(Error::CrossCheck(format!("ofo of the σ_I tuple is not the identity word for I={couple}")));
    }
    let permuted: Vec<usize> = sigma.as_map().iter().map(|&j| a[j]).collect();
    let direct = Permutation::from_map(ofo_unchecked(&permuted).letters().to_vec())?;
    let shortcut = sigma_sub_i_oneline(sigma, k, couple)?;
    if direct != shortcut {
        return Err(Error::CrossCheck(format!(
            "σ_I mismatch for σ={sigma}, k={k}, I={couple}: tuple gives {direct}, one-line gives {shortcut}"
        )));
    }
    Ok(direct)
}

/// The couple `I` with `π^σ_k = σ_I`.
pub fn pi_sigma_couple(sigma: &Permutation, k: usize) -> Result<Couple> {
    let plan = SigmaIPlan::new(sigma, k, Couple::new(0, k.max(1))?)?;
    let top = k;
    if plan.c_sigma != top {
        return Couple::new(top, plan.c_sigma);
    }
    let second = plan.s_sigma.get(1).ok_or_else(|| {
        Error::CrossCheck(format!("S_σ has a single element for σ={sigma}, k={k}"))
    })?;
    let v = sigma.apply(*second);
    if v == top {
        return Err(Error::CrossCheck(format!("π^σ_k couple degenerates for σ={sigma}, k={k}")));
    }
    Couple::new(top, v)
}

/// `π^σ_k`: the one-line entries `<= k`, in order.
pub fn pi_sigma(sigma: &Permutation, k: usize) -> Result<Permutation> {
    if sigma.degree() < k {
        return Err(Error::ArityTooSmall { needed: k, found: sigma.degree() });
    }
    sigma.restrict_oneline(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_oneline(v).unwrap()
    }

    fn c(a: usize, b: usize) -> Couple {
        Couple::from_one_based(a, b).unwrap()
    }

    #[test]
    fn worked_example_table() {
        let sigma = p(&[3, 1, 5, 2, 6, 4]);
        let expected = [
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
        for ((a, b), want) in expected {
            assert_eq!(sigma_sub_i(&sigma, 4, c(a, b)).unwrap(), p(&want), "I={{{a},{b}}}");
        }
    }

    #[test]
    fn worked_example_plan() {
        let sigma = p(&[3, 1, 5, 2, 6, 4]);
        let plan = SigmaIPlan::new(&sigma, 4, c(1, 2)).unwrap();
        let one: Vec<usize> = plan.s_sigma.iter().map(|i| i + 1).collect();
        assert_eq!(one, vec![1, 2, 3, 4, 6]);
        assert_eq!((plan.b_sigma, plan.c_sigma), (0, 2));
        assert_eq!(plan.couples.len(), 2);
    }

    #[test]
    fn worked_example_pi() {
        let sigma = p(&[3, 1, 5, 2, 6, 4]);
        assert_eq!(pi_sigma(&sigma, 4).unwrap(), p(&[3, 1, 2, 4]));
        assert_eq!(pi_sigma_couple(&sigma, 4).unwrap(), c(3, 5));
    }

    #[test]
    fn identity_gives_identity() {
        for k in 1..5 {
            let id = Permutation::identity(k + 1);
            for couple in Couple::all(k + 1) {
                assert!(sigma_sub_i(&id, k, couple).unwrap().is_identity());
            }
            assert!(pi_sigma(&id, k).unwrap().is_identity());
        }
    }

    #[test]
    fn routes_agree_exhaustively() {
        for n in 2..=6 {
            for k in 1..n {
                for sigma in all_permutations(n) {
                    for couple in Couple::all(k + 1) {
                        sigma_sub_i(&sigma, k, couple).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn pi_is_sigma_of_its_couple() {
        for n in 3..=6 {
            for k in 2..n {
                for sigma in all_permutations(n) {
                    let couple = pi_sigma_couple(&sigma, k).unwrap();
                    assert_eq!(
                        sigma_sub_i(&sigma, k, couple).unwrap(),
                        pi_sigma(&sigma, k).unwrap(),
                        "σ={sigma}, k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let sigma = Permutation::identity(4);
        assert!(sigma_sub_i(&sigma, 4, c(1, 2)).is_err());
        assert!(sigma_sub_i(&sigma, 2, c(1, 4)).is_err());
    }
}
