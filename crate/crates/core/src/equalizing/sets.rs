//! The sets `U^σ_k`, `Δ^σ_k` and the group `G^σ_k`.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::plus::parity_separator;
use crate::classes::ofo_unchecked;
use crate::error::{Error, Result};
use crate::group::{group_closure_bounded, PermGroup};
use crate::perm::Permutation;

/// Largest `k` handled by the group machinery.
pub const MAX_K: usize = 8;

/// Tuples of `{0..k}^n` whose first occurrences are `0, 1, ..., k-1` in order.
pub fn ofo_identity_preimages(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 {
        return Err(Error::EmptyDomain);
    }
    if n < k {
        return Err(Error::ArityTooSmall { needed: k, found: n });
    }
    fn rec(n: usize, k: usize, used: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let remaining = n - cur.len();
        // Repeat a value only if there is room left for the unseen ones.
        if remaining > k - used {
            for v in 0..used {
                cur.push(v);
                rec(n, k, used, cur, out);
                cur.pop();
            }
        }
        if used < k {
            cur.push(used);
            rec(n, k, used + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    Ok(out)
}

fn permute_tuple(a: &[usize], sigma: &Permutation) -> Vec<usize> {
    sigma.as_map().iter().map(|&j| a[j]).collect()
}

/// `ofo(a)` for a tuple with full support, as a permutation of `{0..k}`.
pub(crate) fn word_perm(a: &[usize]) -> Permutation {
    Permutation::from_map(ofo_unchecked(a).letters().to_vec()).expect("full support word")
}

fn check_k(sigma: &Permutation, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::EmptyDomain);
    }
    if k > MAX_K {
        return Err(Error::BoundExceeded { what: "k", value: k as u128, bound: MAX_K as u128 });
    }
    if sigma.degree() < k {
        return Err(Error::ArityTooSmall { needed: k, found: sigma.degree() });
    }
    Ok(())
}

/// `U^σ_k = {π : ofo(a) = id and ofo(aσ) = π for some a}`.
pub fn u_set(sigma: &Permutation, k: usize) -> Result<BTreeSet<Permutation>> {
    check_k(sigma, k)?;
    Ok(ofo_identity_preimages(sigma.degree(), k)?
        .iter()
        .map(|a| word_perm(&permute_tuple(a, sigma)))
        .collect())
}

/// `{π⁻¹τ : π, τ ∈ U}`.
pub fn quotient_set(u: &BTreeSet<Permutation>) -> BTreeSet<Permutation> {
    let mut out = BTreeSet::new();
    for p in u {
        let pi = p.inverse();
        for t in u {
            out.insert(pi.compose_unchecked(t));
        }
    }
    out
}

pub fn delta_set(sigma: &Permutation, k: usize) -> Result<BTreeSet<Permutation>> {
    Ok(quotient_set(&u_set(sigma, k)?))
}

pub fn g_group(sigma: &Permutation, k: usize) -> Result<PermGroup> {
    closure(&delta_set(sigma, k)?, k)
}

/// `⟨set⟩`, adding only elements not yet generated.
fn closure(set: &BTreeSet<Permutation>, k: usize) -> Result<PermGroup> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut group = group_closure_bounded(&gens, k, MAX_K)?;
    for x in set {
        if !group.contains(x) {
            gens.push(x.clone());
            group = group_closure_bounded(&gens, k, MAX_K)?;
        }
    }
    Ok(group)
}

/// Everything the intersection test needs, computed once.
#[derive(Debug, Clone)]
pub struct EqualizingAnalysis {
    pub sigma: Permutation,
    pub k: usize,
    pub u_set: BTreeSet<Permutation>,
    pub delta_set: BTreeSet<Permutation>,
    pub group: PermGroup,
    /// `U ∩ G ≠ ∅`.
    pub verdict: bool,
}

impl EqualizingAnalysis {
    pub fn new(sigma: &Permutation, k: usize) -> Result<Self> {
        let u = u_set(sigma, k)?;
        let delta = quotient_set(&u);
        let group = closure(&delta, k)?;
        let verdict = u.iter().any(|p| group.contains(p));
        Ok(EqualizingAnalysis {
            sigma: sigma.clone(),
            k,
            u_set: u,
            delta_set: delta,
            group,
            verdict,
        })
    }

    /// Stable JSON report; failing verdicts carry the parity separator when
    /// it applies.
    pub fn to_json(&self) -> Value {
        let mut out = serde_json::Map::new();
        out.insert("sigma".into(), json!(self.sigma.oneline()));
        out.insert("n".into(), json!(self.sigma.degree()));
        out.insert("k".into(), json!(self.k));
        out.insert("u_size".into(), json!(self.u_set.len()));
        out.insert("delta_size".into(), json!(self.delta_set.len()));
        out.insert("group_size".into(), json!(self.group.len()));
        out.insert("verdict".into(), json!(self.verdict));
        if !self.verdict {
            let sep = parity_separator(&self.sigma, self.k).ok().flatten();
            out.insert("parity_separator".into(), sep.map_or(Value::Null, |s| s.to_json()));
        }
        Value::Object(out)
    }
}

/// Whether `σ` is `k`-equalizing, by the intersection test. Needs `n > k`.
pub fn is_k_equalizing(sigma: &Permutation, k: usize) -> Result<bool> {
    if sigma.degree() <= k {
        return Err(Error::ArityTooSmall { needed: k + 1, found: sigma.degree() });
    }
    Ok(EqualizingAnalysis::new(sigma, k)?.verdict)
}
