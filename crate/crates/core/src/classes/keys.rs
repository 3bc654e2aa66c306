//! Tuple invariants: `supp`, `oddsupp`, `msupp` and `ofo`.

use std::fmt;

use crate::error::{Error, Result};

/// A subset of the domain as a bitmask (domain sizes up to 32).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u32);

impl ElemSet {
    pub const MAX_DOMAIN: usize = 32;

    pub fn empty() -> Self {
        ElemSet(0)
    }

    /// `{0..k}`.
    pub fn full(k: usize) -> Self {
        if k >= 32 {
            ElemSet(u32::MAX)
        } else {
            ElemSet((1u32 << k) - 1)
        }
    }

    pub fn from_elems(elems: &[usize]) -> Self {
        let mut s = ElemSet::empty();
        for &e in elems {
            s.insert(e);
        }
        s
    }

    pub fn from_bits(bits: u32) -> Self {
        ElemSet(bits)
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1 << e;
    }

    pub fn toggle(&mut self, e: usize) {
        self.0 ^= 1 << e;
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Elements in increasing order.
    pub fn elems(&self) -> Vec<usize> {
        (0..32).filter(|&e| self.contains(e)).collect()
    }

    /// 1-based sorted elements, for display and JSON.
    pub fn one_based(&self) -> Vec<usize> {
        self.elems().into_iter().map(|e| e + 1).collect()
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Multiplicities of the domain elements `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset {
    counts: Vec<usize>,
}

impl Multiset {
    pub fn new(counts: Vec<usize>) -> Self {
        Multiset { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn cardinality(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The underlying set.
    pub fn set(&self) -> ElemSet {
        let mut s = ElemSet::empty();
        for (e, &c) in self.counts.iter().enumerate() {
            if c > 0 {
                s.insert(e);
            }
        }
        s
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(e, c)| format!("{}:{c}", e + 1))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// An injective word over the domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OfoWord(Vec<usize>);

impl OfoWord {
    /// Rejects empty words and repeated letters.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyTuple);
        }
        let mut seen = ElemSet::empty();
        for &a in &word {
            if a >= ElemSet::MAX_DOMAIN || seen.contains(a) {
                return Err(Error::KeyOutOfRange(format!("{word:?} is not injective")));
            }
            seen.insert(a);
        }
        Ok(OfoWord(word))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|e| e + 1).collect()
    }
}

impl fmt::Display for OfoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn nonempty(t: &[usize]) -> Result<()> {
    if t.is_empty() {
        return Err(Error::EmptyTuple);
    }
    if let Some(&v) = t.iter().find(|&&v| v >= ElemSet::MAX_DOMAIN) {
        return Err(Error::EntryOutOfRange { value: v + 1, k: ElemSet::MAX_DOMAIN });
    }
    Ok(())
}

pub(crate) fn supp_unchecked(t: &[usize]) -> ElemSet {
    let mut s = ElemSet::empty();
    for &v in t {
        s.insert(v);
    }
    s
}

pub(crate) fn oddsupp_unchecked(t: &[usize]) -> ElemSet {
    let mut s = ElemSet::empty();
    for &v in t {
        s.toggle(v);
    }
    s
}

pub(crate) fn ofo_unchecked(t: &[usize]) -> OfoWord {
    let mut seen = ElemSet::empty();
    let mut w = Vec::new();
    for &v in t {
        if !seen.contains(v) {
            seen.insert(v);
            w.push(v);
        }
    }
    OfoWord(w)
}

/// Set of entries.
pub fn supp(t: &[usize]) -> Result<ElemSet> {
    nonempty(t)?;
    Ok(supp_unchecked(t))
}

/// Entries occurring an odd number of times.
pub fn oddsupp(t: &[usize]) -> Result<ElemSet> {
    nonempty(t)?;
    Ok(oddsupp_unchecked(t))
}

/// Multiset of entries over the domain `{0..k}`.
pub fn msupp(t: &[usize], k: usize) -> Result<Multiset> {
    nonempty(t)?;
    let mut counts = vec![0; k];
    for &v in t {
        if v >= k {
            return Err(Error::EntryOutOfRange { value: v + 1, k });
        }
        counts[v] += 1;
    }
    Ok(Multiset { counts })
}

/// Entries in order of first occurrence.
pub fn ofo(t: &[usize]) -> Result<OfoWord> {
    nonempty(t)?;
    Ok(ofo_unchecked(t))
}

/// `A^♯_n`: all injective words of length `1..=min(n,k)`, by length, then
/// lexicographically.
pub fn enumerate_ofo_range(k: usize, n: usize) -> Vec<OfoWord> {
    let mut out = Vec::new();
    for len in 1..=n.min(k) {
        let mut word = Vec::with_capacity(len);
        extend_words(k, len, &mut word, &mut out);
    }
    out
}

fn extend_words(k: usize, len: usize, word: &mut Vec<usize>, out: &mut Vec<OfoWord>) {
    if word.len() == len {
        out.push(OfoWord(word.clone()));
        return;
    }
    for a in 0..k {
        if !word.contains(&a) {
            word.push(a);
            extend_words(k, len, word, out);
            word.pop();
        }
    }
}

/// `|A^♯_n| = Σ_{r=1}^{min(n,k)} k!/(k-r)!`.
pub fn ofo_range_size(k: usize, n: usize) -> usize {
    (1..=n.min(k)).map(|r| (k - r + 1..=k).product::<usize>()).sum()
}

/// Range of `supp` on `A^n`: nonempty sets of size at most `n`.
pub fn supp_range(k: usize, n: usize) -> Vec<ElemSet> {
    (1..=ElemSet::full(k).bits())
        .map(ElemSet::from_bits)
        .filter(|s| s.len() <= n)
        .collect()
}

/// Range of `oddsupp` on `A^n`: sets of size `n, n-2, n-4, ...`.
pub fn oddsupp_range(k: usize, n: usize) -> Vec<ElemSet> {
    (0..=ElemSet::full(k).bits())
        .map(ElemSet::from_bits)
        .filter(|s| s.len() <= n && (n - s.len()).is_multiple_of(2))
        .collect()
}

/// Range of `msupp` on `A^n`: multisets of cardinality `n`.
pub fn msupp_range(k: usize, n: usize) -> Vec<Multiset> {
    fn rec(k: usize, left: usize, counts: &mut Vec<usize>, out: &mut Vec<Multiset>) {
        if counts.len() == k - 1 {
            counts.push(left);
            out.push(Multiset { counts: counts.clone() });
            counts.pop();
            return;
        }
        for c in (0..=left).rev() {
            counts.push(c);
            rec(k, left - c, counts, out);
            counts.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(k, n, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::couple::{delta_map, Couple};
    use crate::function::tuples;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn invariant_examples() {
        assert_eq!(ofo(&[1, 0, 1, 2, 0]).unwrap().one_based(), vec![2, 1, 3]);
        assert_eq!(oddsupp(&[0, 1, 0, 0]).unwrap(), ElemSet::from_elems(&[0, 1]));
        assert_eq!(supp(&[2, 2, 0]).unwrap(), ElemSet::from_elems(&[0, 2]));
        assert_eq!(msupp(&[2, 2, 0], 3).unwrap().counts(), &[1, 0, 2]);
        assert_eq!(supp(&[]), Err(Error::EmptyTuple));
        assert_eq!(ofo(&[]), Err(Error::EmptyTuple));
        assert!(msupp(&[3], 3).is_err());
        assert_eq!(oddsupp(&[1, 1]).unwrap(), ElemSet::empty());
    }

    #[test]
    fn display_forms() {
        assert_eq!(ElemSet::from_elems(&[0, 2]).to_string(), "{1,3}");
        assert_eq!(msupp(&[0, 0, 2], 3).unwrap().to_string(), "{1:2,3:1}");
        assert_eq!(ofo(&[2, 0]).unwrap().to_string(), "(3,1)");
        assert!(OfoWord::new(vec![1, 1]).is_err());
        assert!(OfoWord::new(vec![]).is_err());
    }

    #[test]
    fn ofo_range_examples() {
        let r = enumerate_ofo_range(2, 3);
        let words: Vec<Vec<usize>> = r.iter().map(|w| w.one_based()).collect();
        assert_eq!(words, vec![vec![1], vec![2], vec![1, 2], vec![2, 1]]);
        assert_eq!(enumerate_ofo_range(3, 2).len(), 9);
        for k in 1..=5 {
            for n in 1..=6 {
                assert_eq!(enumerate_ofo_range(k, n).len(), ofo_range_size(k, n));
            }
        }
        assert_eq!(enumerate_ofo_range(3, 5), enumerate_ofo_range(3, 3));
    }

    #[test]
    fn ranges_match_tuple_images() {
        for k in 1..=3 {
            for n in 1..=4 {
                let ts: Vec<Vec<usize>> = tuples(k, n).collect();
                let s: BTreeSet<ElemSet> = ts.iter().map(|t| supp_unchecked(t)).collect();
                assert_eq!(s, supp_range(k, n).into_iter().collect());
                let o: BTreeSet<ElemSet> = ts.iter().map(|t| oddsupp_unchecked(t)).collect();
                assert_eq!(o, oddsupp_range(k, n).into_iter().collect(), "k={k} n={n}");
                let m: BTreeSet<Multiset> = ts.iter().map(|t| msupp(t, k).unwrap()).collect();
                assert_eq!(m, msupp_range(k, n).into_iter().collect());
                let w: BTreeSet<OfoWord> = ts.iter().map(|t| ofo_unchecked(t)).collect();
                assert_eq!(w, enumerate_ofo_range(k, n).into_iter().collect());
            }
        }
    }

    proptest! {
        #[test]
        fn ofo_idempotent(t in proptest::collection::vec(0usize..5, 1..9)) {
            let w = ofo(&t).unwrap();
            prop_assert_eq!(ofo(w.letters()).unwrap(), w);
        }

        #[test]
        fn invariants_ignore_identification(
            t in proptest::collection::vec(0usize..4, 1..7),
            a in 0usize..8,
            b in 0usize..8,
        ) {
            let n = t.len() + 1;
            prop_assume!(a % n != b % n);
            let c = Couple::new(a % n, b % n).unwrap();
            let long: Vec<usize> = delta_map(c, n).unwrap().iter().map(|&p| t[p]).collect();
            prop_assert_eq!(ofo(&long).unwrap(), ofo(&t).unwrap());
            prop_assert_eq!(supp(&long).unwrap(), supp(&t).unwrap());
        }
    }
}
