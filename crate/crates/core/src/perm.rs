//! Permutations in one-line and cycle notation.
//!
//! Points are 0-based internally. `from_oneline`, the parsers and `Display`
//! use the 1-based notation `(5,1,7,4,2,6,3)` / `(1 5 2)(3 7)`.
//! Composition is right-to-left: `sigma.compose(&tau)` maps `i` to
//! `sigma(tau(i))`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::couple::Couple;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Parity of a product.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation { map: (0..m).collect() }
    }

    /// From 0-based images.
    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let m = map.len();
        let mut seen = vec![false; m];
        for &v in &map {
            if v >= m {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for degree {m}",
                    v + 1
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("image {} repeated", v + 1)));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    /// From 1-based one-line notation, e.g. `&[3, 1, 5, 2, 6, 4]`.
    pub fn from_oneline(oneline: &[usize]) -> Result<Self> {
        let mut map = Vec::with_capacity(oneline.len());
        for &v in oneline {
            if v == 0 {
                return Err(Error::InvalidPermutation("entry 0 in one-line form".into()));
            }
            map.push(v - 1);
        }
        Permutation::from_map(map)
    }

    /// Transposition of the 0-based points `a` and `b`.
    pub fn transposition(m: usize, a: usize, b: usize) -> Result<Self> {
        Permutation::cycle(m, &[a, b])
    }

    /// The cycle `c0 -> c1 -> ... -> c0` on 0-based points.
    pub fn cycle(m: usize, points: &[usize]) -> Result<Self> {
        let mut map: Vec<usize> = (0..m).collect();
        let mut seen = vec![false; m];
        for &p in points {
            if p >= m {
                return Err(Error::InvalidPermutation(format!(
                    "cycle point {} exceeds degree {m}",
                    p + 1
                )));
            }
            if seen[p] {
                return Err(Error::InvalidPermutation(format!("cycle repeats {}", p + 1)));
            }
            seen[p] = true;
        }
        for (idx, &p) in points.iter().enumerate() {
            map[p] = points[(idx + 1) % points.len()];
        }
        Ok(Permutation { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// 0-based images.
    pub fn as_map(&self) -> &[usize] {
        &self.map
    }

    /// 1-based one-line entries.
    pub fn oneline(&self) -> Vec<usize> {
        self.map.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { map: other.map.iter().map(|&j| self.map[j]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    pub fn parity(&self) -> Parity {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.map[p];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Nontrivial cycles, each starting at its least point, ordered by it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p);
                p = self.map[p];
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle notation; the identity prints as `()`.
    pub fn to_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", body.join(" "))
            })
            .collect()
    }

    /// Parses disjoint cycles such as `(1 5 2)(3 7)` on `{1..m}`.
    /// Omitted points are fixed; the empty string is the identity.
    pub fn parse_cycles(text: &str, m: usize) -> Result<Permutation> {
        let mut map: Vec<usize> = (0..m).collect();
        let mut used = vec![false; m];
        let mut rest = text.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' in cycle text {text:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &rest[1..close];
            let mut points = Vec::new();
            for tok in body.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad cycle entry {tok:?}")))?;
                if v == 0 || v > m {
                    return Err(Error::Parse(format!("cycle entry {v} outside 1..{m}")));
                }
                if used[v - 1] {
                    return Err(Error::Parse(format!("point {v} repeated in {text:?}")));
                }
                used[v - 1] = true;
                points.push(v - 1);
            }
            for (idx, &p) in points.iter().enumerate() {
                map[p] = points[(idx + 1) % points.len()];
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(Permutation { map })
    }

    /// Parses one-line text `(a1,a2,...,am)`.
    pub fn parse_oneline(text: &str) -> Result<Permutation> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("one-line form must be parenthesised: {text:?}")))?;
        let mut entries = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad one-line entry {tok:?}")))?;
            entries.push(v);
        }
        Permutation::from_oneline(&entries)
    }

    /// Accepts either notation. Text with a comma is one-line; anything else
    /// is read as cycles on `{1..m}`, where `m` defaults to the largest point.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Permutation> {
        let p = if text.contains(',') {
            Permutation::parse_oneline(text)?
        } else {
            let m = match degree {
                Some(m) => m,
                None => text
                    .split(|c: char| !c.is_ascii_digit())
                    .filter_map(|t| t.parse::<usize>().ok())
                    .max()
                    .unwrap_or(0),
            };
            Permutation::parse_cycles(text, m)?
        };
        if let Some(m) = degree {
            if p.degree() != m {
                return Err(Error::DegreeMismatch { expected: m, found: p.degree() });
            }
        }
        Ok(p)
    }

    /// `σ̌_ℓ`: keep the one-line entries `<= ell` (1-based), in order.
    pub fn restrict_oneline(&self, ell: usize) -> Result<Permutation> {
        if ell > self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: ell });
        }
        Ok(Permutation { map: self.map.iter().copied().filter(|&v| v < ell).collect() })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.oneline().serialize(s)
    }
}

/// All permutations of degree `m` in lexicographic order of one-line form.
pub fn all_permutations(m: usize) -> AllPermutations {
    AllPermutations { next: Some((0..m).collect()) }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { map: current })
    }
}

/// Advances `v` to its lexicographic successor; false at the last one.
pub(crate) fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn factorial(m: usize) -> u128 {
    (1..=m as u128).product()
}

/// `θ_n = (1 2)(3 4)...(n-1 n)` for even `n`, `(2 3)(4 5)...(n-1 n)` for odd `n`.
pub fn theta(n: usize) -> Result<Permutation> {
    if n < 2 {
        return Err(Error::ArityTooSmall { needed: 2, found: n });
    }
    let mut map: Vec<usize> = (0..n).collect();
    let start = n % 2;
    let mut p = start;
    while p + 1 < n {
        map.swap(p, p + 1);
        p += 2;
    }
    Ok(Permutation { map })
}

/// `λ^ℓ_k`: disjoint adjacent transpositions covering `{1..k}` except `ℓ`
/// (and except `1` when `k` is even). `ell` is 1-based.
pub fn lambda(ell: usize, k: usize) -> Result<Permutation> {
    if ell == 0 || ell > k || ell % 2 != k % 2 {
        return Err(Error::LambdaParameters { ell, k });
    }
    let mut map: Vec<usize> = (0..k).collect();
    // 1-based pairs start at 1 for odd k and at 2 for even k.
    let mut p = if k % 2 == 1 { 1 } else { 2 };
    while p < k {
        if p == ell {
            p += 1;
            continue;
        }
        map.swap(p - 1, p);
        p += 2;
    }
    Ok(Permutation { map })
}

/// `Iσ = {σ(i) : i ∈ I}`.
pub fn act_on_couple(couple: Couple, sigma: &Permutation) -> Result<Couple> {
    if couple.max_pos() >= sigma.degree() {
        return Err(Error::PositionOutOfRange {
            position: couple.max_pos() + 1,
            arity: sigma.degree(),
        });
    }
    Couple::new(sigma.apply(couple.min_pos()), sigma.apply(couple.max_pos()))
}

/// The permutation `ĥσ` of `{1..n-1}` with `ĥσ ∘ δ_{Iσ⁻¹} = δ_I ∘ σ` and
/// `ĥσ(min Iσ⁻¹) = min I`, built as `δ_I ∘ σ ∘ β_J` with `J = Iσ⁻¹`.
pub fn hat_sigma(sigma: &Permutation, couple: Couple) -> Result<Permutation> {
    let n = sigma.degree();
    if n < 2 {
        return Err(Error::ArityTooSmall { needed: 2, found: n });
    }
    let j = act_on_couple(couple, &sigma.inverse())?;
    let beta = |l: usize| if l < j.max_pos() { l } else { l + 1 };
    let map: Vec<usize> = (0..n - 1)
        .map(|l| couple.delta_image(sigma.apply(beta(l))))
        .collect();
    let hat = Permutation::from_map(map)
        .map_err(|e| Error::CrossCheck(format!("hat sigma is not a bijection: {e}")))?;
    for p in 0..n {
        if hat.apply(j.delta_image(p)) != couple.delta_image(sigma.apply(p)) {
            return Err(Error::CrossCheck(format!(
                "hat sigma identity fails at {} for sigma={sigma}, I={couple}",
                p + 1
            )));
        }
    }
    Ok(hat)
}

/// Blocks are 0-based inclusive intervals `(start, end)`, increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartition {
    blocks: Vec<(usize, usize)>,
}

impl IntervalPartition {
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// Blocks as 1-based point lists.
    pub fn blocks_one_based(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&(a, b)| (a + 1..=b + 1).collect()).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl fmt::Display for IntervalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks_one_based()
            .iter()
            .map(|b| {
                let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", s.join(","))
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// The finest partition of the points into intervals, each mapped onto
/// itself by `rho`.
pub fn fundamental_partition(rho: &Permutation) -> IntervalPartition {
    let mut blocks = Vec::new();
    let mut start = 0;
    let mut reach = 0;
    for i in 0..rho.degree() {
        reach = reach.max(rho.apply(i));
        if reach == i {
            blocks.push((start, i));
            start = i + 1;
        }
    }
    IntervalPartition { blocks }
}
