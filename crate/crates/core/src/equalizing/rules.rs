//! Deduction rules reading members of `G^σ_k` off the one-line form of
//! `σ̌_{k+1}`, checked against the computed group.

use serde::Serialize;

use super::sets::EqualizingAnalysis;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Where a rule places its prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// A single permutation in `Δ^σ_k`.
    Delta,
    /// The full symmetric group on a position set inside `G^σ_k`.
    Group,
}

#[derive(Debug, Clone, Serialize)]
pub struct RuleMatch {
    pub rule: &'static str,
    /// Matched positions `p < q < ...`, 1-based.
    pub positions: Vec<usize>,
    pub target: Target,
    /// For `Delta`, the predicted cycle; for `Group`, adjacent transpositions
    /// of the sorted position set.
    pub permutations: Vec<Permutation>,
    pub verified: bool,
}

/// The cycle `(points[0] points[1] ...)` on `{1..k}`, points 1-based.
fn cycle(k: usize, points: &[usize]) -> Result<Permutation> {
    let zero: Vec<usize> = points.iter().map(|p| p - 1).collect();
    Permutation::cycle(k, &zero)
}

fn sym_generators(k: usize, points: &[usize]) -> Result<Vec<Permutation>> {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).map(|w| Permutation::transposition(k, w[0] - 1, w[1] - 1)).collect()
}

/// `{p} ∪ {from..to}` (inclusive).
fn with_range(p: usize, from: usize, to: usize) -> Vec<usize> {
    std::iter::once(p).chain(from..=to).collect()
}

struct Scanner<'a> {
    analysis: &'a EqualizingAnalysis,
    k: usize,
    out: Vec<RuleMatch>,
}

impl Scanner<'_> {
    fn delta(&mut self, rule: &'static str, positions: Vec<usize>, points: Vec<usize>) -> Result<()> {
        let c = cycle(self.k, &points)?;
        let verified = self.analysis.delta_set.contains(&c);
        self.out.push(RuleMatch { rule, positions, target: Target::Delta, permutations: vec![c], verified });
        Ok(())
    }

    fn group(&mut self, rule: &'static str, positions: Vec<usize>, points: Vec<usize>) -> Result<()> {
        let gens = sym_generators(self.k, &points)?;
        let verified = gens.iter().all(|g| self.analysis.group.contains(g));
        self.out.push(RuleMatch { rule, positions, target: Target::Group, permutations: gens, verified });
        Ok(())
    }
}

/// Every match of the seven configurations in `σ̌_{k+1}` with its prediction
/// and whether the prediction holds.
pub fn table1_rule_check(sigma: &Permutation, k: usize) -> Result<Vec<RuleMatch>> {
    if sigma.degree() <= k {
        return Err(Error::ArityTooSmall { needed: k + 1, found: sigma.degree() });
    }
    let analysis = EqualizingAnalysis::new(sigma, k)?;
    table1_rule_check_with(&analysis)
}

pub fn table1_rule_check_with(analysis: &EqualizingAnalysis) -> Result<Vec<RuleMatch>> {
    let k = analysis.k;
    // 1-based values at 1-based positions; index 0 unused.
    let mut s = vec![0usize];
    s.extend(analysis.sigma.restrict_oneline(k + 1)?.oneline());
    let m = k + 1;
    let mut sc = Scanner { analysis, k, out: Vec::new() };
    for p in 1..=m {
        for q in p + 1..=m {
            for r in q + 1..=m {
                let (sp, sq, sr) = (s[p], s[q], s[r]);
                // (i): α β γ
                if sp > sq && sp > sr {
                    sc.delta("i", vec![p, q, r], with_range(p, q, r - 1))?;
                }
                // (ii): α β γ δ with γ right after β
                if r > q + 1 && q < m {
                    let sg = s[q + 1];
                    if sp > sq && sp > sg && sp > sr {
                        sc.group("ii", vec![p, q, q + 1, r], with_range(p, q, r - 1))?;
                    }
                }
                // (iii): β α γ
                if sq > sp && sq > sr {
                    sc.delta("iii", vec![p, q, r], (q..r).collect())?;
                }
                // (iv): α α+1 β
                if sq == sp + 1 && sp <= k && sp > sr {
                    sc.delta("iv", vec![p, q, r], with_range(p, q, r - 1))?;
                    sc.group("iv", vec![p, q, r], with_range(p, q, r - 1))?;
                }
                // (v): α β α+1
                if sr == sp + 1 && sp <= k && sp > sq {
                    sc.delta("v", vec![p, q, r], with_range(p, q, r - 1))?;
                    // (vi): α β α+1 γ
                    #[allow(clippy::needless_range_loop)]
                    for t in r + 1..=m {
                        if sp > s[t] {
                            sc.group("vi", vec![p, q, r, t], with_range(p, q, t - 1))?;
                        }
                    }
                }
            }
            // (vii): β α α+2 α+1
            if q + 2 <= m {
                let a = s[q];
                if a < k && a > s[p] && s[q + 1] == a + 2 && s[q + 2] == a + 1 {
                    sc.delta("vii", vec![p, q, q + 1, q + 2], vec![q, q + 1])?;
                }
            }
        }
    }
    Ok(sc.out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_rules_hold() {
        let sigma = Permutation::from_oneline(&[3, 1, 5, 2, 6, 4]).unwrap();
        let matches = table1_rule_check(&sigma, 4).unwrap();
        assert!(!matches.is_empty());
        assert!(matches.iter().all(|m| m.verified));
        assert!(matches.iter().any(|m| m.rule == "i"));
    }

    #[test]
    fn rule_seven_fires() {
        // σ̌_4 = (1, 2, 4, 3): β=1 at 1, α=2 at 2, α+2=4 at 3, α+1=3 at 4.
        let sigma = Permutation::from_oneline(&[1, 2, 4, 3, 5]).unwrap();
        let matches = table1_rule_check(&sigma, 3).unwrap();
        let vii: Vec<_> = matches.iter().filter(|m| m.rule == "vii").collect();
        assert_eq!(vii.len(), 1);
        assert_eq!(vii[0].permutations[0], Permutation::transposition(3, 1, 2).unwrap());
        assert!(vii[0].verified);
    }
}
