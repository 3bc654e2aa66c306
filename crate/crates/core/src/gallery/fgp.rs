//! The scheme `f_{G,P,φ}(aδ_I) = g^{φ(I)}(aρ_I)` on `A^{k+1}`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::classes::{supp_unchecked, ElemSet};
use crate::couple::Couple;
use crate::error::{Error, Result};
use crate::function::{tuples, FiniteFunction, Label};
use crate::perm::{all_permutations, Permutation};

/// Families are indexed by the couples of `{0..k+1}` in the order of
/// [`Couple::all`].
#[derive(Debug, Clone)]
pub struct FGPPhiSpec {
    pub k: usize,
    /// `g*` indexed by the bits of an [`ElemSet`]; only proper subsets are read.
    pub g_star: Vec<Label>,
    pub family_g: Vec<FiniteFunction>,
    pub family_p: Vec<Permutation>,
    /// `φ` as a map on couple indices.
    pub phi: Vec<usize>,
}

impl FGPPhiSpec {
    pub fn couples(&self) -> Vec<Couple> {
        Couple::all(self.k + 1)
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k;
        if k == 0 {
            return Err(Error::EmptyDomain);
        }
        if k > ElemSet::MAX_DOMAIN {
            return Err(Error::Unsupported(format!("domain size {k}")));
        }
        let m = self.couples().len();
        let bad = |what: &str| Err(Error::InvalidFamily(what.to_string()));
        if self.family_g.len() != m || self.family_p.len() != m || self.phi.len() != m {
            return bad("families must have one entry per couple");
        }
        if self.g_star.len() != 1 << k {
            return bad("g* must have one value per subset of A");
        }
        let mut seen = vec![false; m];
        for &j in &self.phi {
            if j >= m || seen[j] {
                return bad("phi is not a bijection on couples");
            }
            seen[j] = true;
        }
        let labels = self.family_g[0].labels().to_vec();
        if let Some(&v) = self.g_star.iter().find(|&&v| v as usize >= labels.len()) {
            return Err(Error::LabelIndex { index: v as usize, labels: labels.len() });
        }
        let full = ElemSet::full(k);
        for (idx, g) in self.family_g.iter().enumerate() {
            if g.k() != k || g.n() != k || g.labels() != labels.as_slice() {
                return bad("every g^I must be a k-ary function on A with the shared labels");
            }
            for (t, &v) in tuples(k, k).zip(g.table()) {
                let s = supp_unchecked(&t);
                if s != full && self.g_star[s.bits() as usize] != v {
                    return Err(Error::InvalidFamily(format!(
                        "g^I for I={} disagrees with g*∘supp at a non-surjective tuple",
                        self.couples()[idx]
                    )));
                }
            }
        }
        for rho in &self.family_p {
            if rho.degree() != k {
                return Err(Error::DegreeMismatch { expected: k, found: rho.degree() });
            }
        }
        Ok(())
    }
}

/// A random valid spec over three labels: random `g*`, each `g^I` free on
/// surjective tuples, random `ρ_I` and `φ`.
pub fn random_valid_spec<R: Rng>(k: usize, rng: &mut R) -> FGPPhiSpec {
    let labels: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let g_star: Vec<Label> = (0..1 << k).map(|_| rng.gen_range(0..3)).collect();
    let m = Couple::all(k + 1).len();
    let full = ElemSet::full(k);
    let family_g = (0..m)
        .map(|_| {
            FiniteFunction::from_fn(k, k, labels.clone(), |t| {
                let s = supp_unchecked(t);
                if s == full {
                    rng.gen_range(0..3)
                } else {
                    g_star[s.bits() as usize]
                }
            })
            .expect("small shape")
        })
        .collect();
    let perms: Vec<Permutation> = all_permutations(k).collect();
    let family_p = (0..m).map(|_| perms[rng.gen_range(0..perms.len())].clone()).collect();
    let mut phi: Vec<usize> = (0..m).collect();
    phi.shuffle(rng);
    FGPPhiSpec { k, g_star, family_g, family_p, phi }
}

/// `f_{G,P,φ}`, evaluating every decomposition `b = aδ_I` and requiring them
/// to agree.
pub fn build_fgp_phi(spec: &FGPPhiSpec) -> Result<FiniteFunction> {
    spec.validate()?;
    let k = spec.k;
    let n = k + 1;
    let couples = spec.couples();
    let labels = spec.family_g[0].shared_labels();
    let mut table = Vec::with_capacity(k.pow(n as u32));
    for b in tuples(k, n) {
        let mut value: Option<Label> = None;
        for (idx, c) in couples.iter().enumerate() {
            if b[c.min_pos()] != b[c.max_pos()] {
                continue;
            }
            let a: Vec<usize> =
                b.iter().enumerate().filter(|&(p, _)| p != c.max_pos()).map(|(_, &v)| v).collect();
            let rho = &spec.family_p[idx];
            let arho: Vec<usize> = rho.as_map().iter().map(|&j| a[j]).collect();
            let v = spec.family_g[spec.phi[idx]].value(&arho);
            match value {
                None => value = Some(v),
                Some(w) if w != v => {
                    return Err(Error::CrossCheck(format!(
                        "decompositions of {:?} disagree",
                        b.iter().map(|x| x + 1).collect::<Vec<_>>()
                    )))
                }
                _ => {}
            }
        }
        // n > k forces a repeated entry, so some couple always matches.
        table.push(value.expect("tuple with a repetition"));
    }
    FiniteFunction::with_shared_labels(k, n, labels, table)
}
