//! Subgroups of `S_m` given by generators, stored as their full element set.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default largest degree accepted by closures and `S_n` sweeps.
pub const DEFAULT_DEGREE_BOUND: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: BTreeSet<Permutation>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    pub fn elements(&self) -> &BTreeSet<Permutation> {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter()
    }

    /// Wraps a set already known to be a group (checked).
    pub fn from_elements(degree: usize, elements: BTreeSet<Permutation>) -> Result<Self> {
        let g = PermGroup { degree, elements };
        if !g.is_closed() {
            return Err(Error::CrossCheck("element set is not a group".into()));
        }
        Ok(g)
    }

    pub(crate) fn from_elements_unchecked(degree: usize, elements: BTreeSet<Permutation>) -> Self {
        PermGroup { degree, elements }
    }

    /// Contains the identity and is closed under products and inverses.
    pub fn is_closed(&self) -> bool {
        if !self.elements.contains(&Permutation::identity(self.degree)) {
            return false;
        }
        self.elements.iter().all(|a| {
            self.elements.contains(&a.inverse())
                && self
                    .elements
                    .iter()
                    .all(|b| self.elements.contains(&a.compose_unchecked(b)))
        })
    }
}

/// The subgroup of `S_degree` generated by `generators`.
pub fn group_closure<'a, I>(generators: I, degree: usize) -> Result<PermGroup>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    group_closure_bounded(generators, degree, DEFAULT_DEGREE_BOUND)
}

pub fn group_closure_bounded<'a, I>(generators: I, degree: usize, bound: usize) -> Result<PermGroup>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    if degree > bound {
        return Err(Error::BoundExceeded {
            what: "permutation degree",
            value: degree as u128,
            bound: bound as u128,
        });
    }
    let mut gens: Vec<Permutation> = Vec::new();
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        if !g.is_identity() && !gens.contains(g) {
            gens.push(g.clone());
        }
    }
    let id = Permutation::identity(degree);
    let mut elements = BTreeSet::new();
    elements.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    // In a finite group, closing under right multiplication by the generators
    // already yields inverses.
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.compose_unchecked(g);
            if elements.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(PermGroup { degree, elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::factorial;

    #[test]
    fn trivial_closure() {
        let g = group_closure(&[], 4).unwrap();
        assert_eq!(g.len(), 1);
        assert!(g.contains(&Permutation::identity(4)));
    }

    #[test]
    fn transposition_and_long_cycle_generate_everything() {
        for m in 2..=6 {
            let t = Permutation::transposition(m, 0, 1).unwrap();
            let c = Permutation::cycle(m, &(0..m).collect::<Vec<_>>()).unwrap();
            let g = group_closure(&[t, c], m).unwrap();
            assert_eq!(g.len() as u128, factorial(m));
        }
    }

    #[test]
    fn adjacent_transpositions_generate_everything() {
        for m in 1usize..=7 {
            let gens: Vec<Permutation> = (0..m.saturating_sub(1))
                .map(|i| Permutation::transposition(m, i, i + 1).unwrap())
                .collect();
            let g = group_closure(&gens, m).unwrap();
            assert_eq!(g.len() as u128, factorial(m));
        }
    }

    #[test]
    fn three_cycle_gives_rotations() {
        let c = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let g = group_closure(&[c], 3).unwrap();
        assert_eq!(g.len(), 3);
        assert!(g.is_closed());
    }

    #[test]
    fn bound_and_degree_checks() {
        assert!(matches!(group_closure(&[], 9), Err(Error::BoundExceeded { .. })));
        let t = Permutation::transposition(3, 0, 1).unwrap();
        assert!(matches!(group_closure(&[t], 4), Err(Error::DegreeMismatch { .. })));
        assert!(group_closure_bounded(&[], 9, 9).is_ok());
    }

    #[test]
    fn closure_is_closed() {
        let a = Permutation::from_oneline(&[2, 3, 1, 5, 4]).unwrap();
        let b = Permutation::from_oneline(&[1, 2, 3, 5, 4]).unwrap();
        let g = group_closure(&[a, b], 5).unwrap();
        assert_eq!(g.len(), 6);
        assert!(g.is_closed());
    }
}
