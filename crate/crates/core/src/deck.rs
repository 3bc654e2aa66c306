//! Decks: the multiset of canonical identification minors.

use crate::error::{Error, Result};
use crate::function::FiniteFunction;

/// Distinct canonical cards with multiplicities, sorted by card.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Deck {
    cards: Vec<(FiniteFunction, usize)>,
}

impl Deck {
    pub fn of(f: &FiniteFunction) -> Result<Deck> {
        if f.n() < 2 {
            return Err(Error::ArityTooSmall { needed: 2, found: f.n() });
        }
        let mut cards: Vec<FiniteFunction> = f
            .identification_minors()?
            .into_iter()
            .map(|(_, m)| m.canonical_form())
            .collect();
        cards.sort();
        let mut runs: Vec<(FiniteFunction, usize)> = Vec::new();
        for c in cards {
            match runs.last_mut() {
                Some((last, count)) if *last == c => *count += 1,
                _ => runs.push((c, 1)),
            }
        }
        Ok(Deck { cards: runs })
    }

    pub fn cards(&self) -> &[(FiniteFunction, usize)] {
        &self.cards
    }

    /// Number of distinct cards.
    pub fn distinct(&self) -> usize {
        self.cards.len()
    }

    /// Total multiplicity, `C(n,2)`.
    pub fn total(&self) -> usize {
        self.cards.iter().map(|c| c.1).sum()
    }
}
