//! Two-element position sets and the identification maps they induce.

use std::fmt;

use crate::error::{Error, Result};

/// A 2-element subset `{i, j}` of positions, stored 0-based with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Couple {
    i: usize,
    j: usize,
}

impl Couple {
    /// Builds a couple from two distinct 0-based positions in either order.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Couple { i: a, j: b }),
            std::cmp::Ordering::Greater => Ok(Couple { i: b, j: a }),
            std::cmp::Ordering::Equal => Err(Error::InvalidCouple { i: a + 1, j: b + 1 }),
        }
    }

    /// Builds a couple from 1-based positions, as written in `{1,3}`.
    pub fn from_one_based(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidCouple { i: a, j: b });
        }
        Couple::new(a - 1, b - 1)
    }

    /// Parses `1,3`, `{1,3}` or `1 3` (1-based).
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        let parts: Vec<&str> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("couple {text:?} must have two entries")));
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad couple entry {s:?}")))
        };
        Couple::from_one_based(num(parts[0])?, num(parts[1])?)
    }

    pub fn min_pos(&self) -> usize {
        self.i
    }

    pub fn max_pos(&self) -> usize {
        self.j
    }

    pub fn contains(&self, p: usize) -> bool {
        p == self.i || p == self.j
    }

    /// All couples of positions `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Couple> {
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(Couple { i, j });
            }
        }
        out
    }

    /// `δ_I`: position `p` of an `n`-tuple is read from position `delta(p)` of
    /// the shorter tuple.
    pub fn delta_image(&self, p: usize) -> usize {
        use std::cmp::Ordering::*;
        match p.cmp(&self.j) {
            Less => p,
            Equal => self.i,
            Greater => p - 1,
        }
    }
}

impl fmt::Display for Couple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.i + 1, self.j + 1)
    }
}

/// The map `δ_I : {0..n} → {0..n-1}` as a vector of images.
pub fn delta_map(couple: Couple, n: usize) -> Result<Vec<usize>> {
    if n < 2 {
        return Err(Error::ArityTooSmall { needed: 2, found: n });
    }
    if couple.max_pos() >= n {
        return Err(Error::PositionOutOfRange { position: couple.max_pos() + 1, arity: n });
    }
    Ok((0..n).map(|p| couple.delta_image(p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_based(v: Vec<usize>) -> Vec<usize> {
        v.into_iter().map(|x| x + 1).collect()
    }

    #[test]
    fn delta_examples() {
        let d = |i, j, n| one_based(delta_map(Couple::from_one_based(i, j).unwrap(), n).unwrap());
        assert_eq!(d(1, 2, 3), vec![1, 1, 2]);
        assert_eq!(d(2, 4, 4), vec![1, 2, 3, 2]);
        assert_eq!(d(1, 3, 3), vec![1, 2, 1]);
    }

    #[test]
    fn delta_rejects_small_arity() {
        let c = Couple::new(0, 1).unwrap();
        assert_eq!(delta_map(c, 1), Err(Error::ArityTooSmall { needed: 2, found: 1 }));
        assert!(delta_map(Couple::new(0, 4).unwrap(), 3).is_err());
    }

    #[test]
    fn parse_and_display() {
        let c = Couple::parse("{3,1}").unwrap();
        assert_eq!((c.min_pos(), c.max_pos()), (0, 2));
        assert_eq!(c.to_string(), "{1,3}");
        assert_eq!(Couple::parse("2 5").unwrap(), Couple::new(1, 4).unwrap());
        assert!(Couple::parse("2,2").is_err());
        assert!(Couple::parse("0,2").is_err());
        assert!(Couple::parse("1").is_err());
    }

    #[test]
    fn all_couples_count() {
        assert_eq!(Couple::all(5).len(), 10);
        assert!(Couple::all(1).is_empty());
    }
}
