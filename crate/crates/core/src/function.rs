//! Finite functions `f: A^n → B` stored as dense tables.
//!
//! `A = {0..k}` internally (printed as `1..k`), tuples are slices of domain
//! values, and the table is row-major with the first argument most
//! significant. Codomain labels are opaque strings; the table holds indices.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::couple::{delta_map, Couple};
use crate::deck::Deck;
use crate::error::{Error, Result};
use crate::group::{PermGroup, DEFAULT_DEGREE_BOUND};
use crate::perm::{all_permutations, Permutation};

/// Index into a function's label list.
pub type Label = u16;

/// Largest table accepted, in entries.
pub const MAX_TABLE_LEN: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteFunction {
    k: usize,
    n: usize,
    labels: Arc<[String]>,
    table: Vec<Label>,
}

/// `k^n`, rejecting tables above [`MAX_TABLE_LEN`].
pub fn table_len(k: usize, n: usize) -> Result<usize> {
    let len = u32::try_from(n)
        .ok()
        .and_then(|e| k.checked_pow(e))
        .filter(|&l| l <= MAX_TABLE_LEN)
        .ok_or(Error::BoundExceeded {
            what: "table length k^n",
            value: (k as u128).saturating_pow(n.min(64) as u32),
            bound: MAX_TABLE_LEN as u128,
        })?;
    Ok(len)
}

/// Row-major index of a tuple over `{0..k}`.
pub fn tuple_index(t: &[usize], k: usize) -> Result<usize> {
    let mut idx = 0usize;
    for &v in t {
        if v >= k {
            return Err(Error::EntryOutOfRange { value: v + 1, k });
        }
        idx = idx * k + v;
    }
    Ok(idx)
}

/// Inverse of [`tuple_index`].
pub fn tuple_at(mut index: usize, k: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = index % k;
        index /= k;
    }
    t
}

/// All tuples of `{0..k}^n` in row-major order.
pub fn tuples(k: usize, n: usize) -> Tuples {
    Tuples { k, cur: vec![0; n], done: k == 0 && n > 0 }
}

pub struct Tuples {
    k: usize,
    cur: Vec<usize>,
    done: bool,
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let mut i = self.cur.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.cur[i] += 1;
            if self.cur[i] < self.k {
                break;
            }
            self.cur[i] = 0;
        }
        Some(out)
    }
}

/// Labels `"1".."k"`, naming domain elements.
pub fn domain_labels(k: usize) -> Vec<String> {
    (1..=k).map(|i| i.to_string()).collect()
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::NoLabels);
    }
    if labels.len() > Label::MAX as usize + 1 {
        return Err(Error::BoundExceeded {
            what: "label count",
            value: labels.len() as u128,
            bound: Label::MAX as u128 + 1,
        });
    }
    let mut seen = BTreeSet::new();
    for l in labels {
        if l.is_empty() || l.chars().any(char::is_whitespace) {
            return Err(Error::LabelConstraint(format!(
                "label {l:?} must be nonempty and free of whitespace"
            )));
        }
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Reads `table[Σ a_i w_i]` for every `a ∈ {0..k}^n` in row-major order.
fn gather(table: &[Label], k: usize, n: usize, weights: &[usize]) -> Vec<Label> {
    let len = k.pow(n as u32);
    let mut out = Vec::with_capacity(len);
    let mut digits = vec![0usize; n];
    let mut src = 0usize;
    for _ in 0..len {
        out.push(table[src]);
        let mut i = n;
        while i > 0 {
            i -= 1;
            digits[i] += 1;
            if digits[i] < k {
                src += weights[i];
                break;
            }
            digits[i] = 0;
            src -= (k - 1) * weights[i];
        }
    }
    out
}

/// Weights turning `a ∈ A^n` into the index of `aσ` for `σ: {0..m} → {0..n}`.
fn minor_weights(k: usize, m: usize, n: usize, sigma: &[usize]) -> Vec<usize> {
    let mut w = vec![0usize; n];
    let mut place = 1usize;
    for j in (0..m).rev() {
        w[sigma[j]] += place;
        place *= k;
    }
    w
}

/// For each `a ∈ A^n` (row-major), the index of `aσ` in `A^m`.
pub(crate) fn minor_index_map(k: usize, n: usize, sigma: &[usize]) -> Vec<usize> {
    let m = sigma.len();
    let w = minor_weights(k, m, n, sigma);
    let len = k.pow(n as u32);
    let mut out = Vec::with_capacity(len);
    let mut digits = vec![0usize; n];
    let mut src = 0usize;
    for _ in 0..len {
        out.push(src);
        let mut i = n;
        while i > 0 {
            i -= 1;
            digits[i] += 1;
            if digits[i] < k {
                src += w[i];
                break;
            }
            digits[i] = 0;
            src -= (k - 1) * w[i];
        }
    }
    out
}

impl FiniteFunction {
    pub fn new(k: usize, n: usize, labels: Vec<String>, table: Vec<Label>) -> Result<Self> {
        FiniteFunction::with_shared_labels(k, n, labels.into(), table)
    }

    /// Like [`FiniteFunction::new`] with a shareable label list.
    pub fn with_shared_labels(
        k: usize,
        n: usize,
        labels: Arc<[String]>,
        table: Vec<Label>,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyDomain);
        }
        if n == 0 {
            return Err(Error::ArityTooSmall { needed: 1, found: 0 });
        }
        check_labels(&labels)?;
        let expected = table_len(k, n)?;
        if table.len() != expected {
            return Err(Error::TableLength { expected, found: table.len() });
        }
        if let Some(&bad) = table.iter().find(|&&v| v as usize >= labels.len()) {
            return Err(Error::LabelIndex { index: bad as usize, labels: labels.len() });
        }
        Ok(FiniteFunction { k, n, labels, table })
    }

    /// Tabulates `value` over all tuples.
    pub fn from_fn<F>(k: usize, n: usize, labels: Vec<String>, mut value: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> Label,
    {
        check_labels(&labels)?;
        table_len(k, n)?;
        let table = tuples(k, n).map(|t| value(&t)).collect();
        FiniteFunction::with_shared_labels(k, n, labels.into(), table)
    }

    pub fn constant(k: usize, n: usize, labels: Vec<String>, value: Label) -> Result<Self> {
        let len = table_len(k, n)?;
        FiniteFunction::new(k, n, labels, vec![value; len])
    }

    /// `pr_i` (0-based `i`) with labels naming the domain elements.
    pub fn projection(k: usize, n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::PositionOutOfRange { position: i + 1, arity: n });
        }
        FiniteFunction::from_fn(k, n, domain_labels(k), |t| t[i] as Label)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn shared_labels(&self) -> Arc<[String]> {
        Arc::clone(&self.labels)
    }

    pub fn table(&self) -> &[Label] {
        &self.table
    }

    pub fn label_index(&self, label: &str) -> Option<Label> {
        self.labels.iter().position(|l| l == label).map(|i| i as Label)
    }

    /// Value at a tuple, checked.
    pub fn eval(&self, t: &[usize]) -> Result<Label> {
        if t.len() != self.n {
            return Err(Error::TupleLength { expected: self.n, found: t.len() });
        }
        Ok(self.table[tuple_index(t, self.k)?])
    }

    /// Label string at a tuple, checked.
    pub fn label_at(&self, t: &[usize]) -> Result<&str> {
        Ok(&self.labels[self.eval(t)? as usize])
    }

    pub(crate) fn value(&self, t: &[usize]) -> Label {
        let mut idx = 0;
        for &v in t {
            idx = idx * self.k + v;
        }
        self.table[idx]
    }

    /// Same domain, arity and label list.
    pub fn same_shape(&self, other: &FiniteFunction) -> bool {
        self.k == other.k && self.n == other.n && self.labels == other.labels
    }

    fn require_same_shape(&self, other: &FiniteFunction) -> Result<()> {
        if self.same_shape(other) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch)
        }
    }

    fn derived(&self, n: usize, table: Vec<Label>) -> FiniteFunction {
        FiniteFunction { k: self.k, n, labels: Arc::clone(&self.labels), table }
    }

    /// The `n`-ary minor `a ↦ g(aσ)` for a total map `σ: {0..m} → {0..n}`.
    pub fn form_minor(&self, sigma: &[usize], n: usize) -> Result<FiniteFunction> {
        if sigma.len() != self.n {
            return Err(Error::TupleLength { expected: self.n, found: sigma.len() });
        }
        if n == 0 {
            return Err(Error::ArityTooSmall { needed: 1, found: 0 });
        }
        if let Some(&v) = sigma.iter().find(|&&v| v >= n) {
            return Err(Error::MapValueOutOfRange { value: v + 1, arity: n });
        }
        table_len(self.k, n)?;
        let w = minor_weights(self.k, self.n, n, sigma);
        Ok(self.derived(n, gather(&self.table, self.k, n, &w)))
    }

    /// `f_I(a) = f(aδ_I)`.
    pub fn identification_minor(&self, couple: Couple) -> Result<FiniteFunction> {
        let d = delta_map(couple, self.n)?;
        self.form_minor(&d, self.n - 1)
    }

    /// All identification minors, in the order of [`Couple::all`].
    pub fn identification_minors(&self) -> Result<Vec<(Couple, FiniteFunction)>> {
        if self.n < 2 {
            return Err(Error::ArityTooSmall { needed: 2, found: self.n });
        }
        Couple::all(self.n)
            .into_iter()
            .map(|c| Ok((c, self.identification_minor(c)?)))
            .collect()
    }

    /// `a ↦ f(aσ)`.
    pub fn precompose(&self, sigma: &Permutation) -> Result<FiniteFunction> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch { expected: self.n, found: sigma.degree() });
        }
        self.form_minor(sigma.as_map(), self.n)
    }

    /// Lexicographically least table over all argument permutations.
    pub fn canonical_form(&self) -> FiniteFunction {
        let n = self.n;
        let k = self.k;
        let mut best = self.table.clone();
        if n < 2 || k < 2 {
            return self.derived(n, best);
        }
        let len = best.len();
        let mut digits = vec![0usize; n];
        for sigma in all_permutations(n).skip(1) {
            let w = minor_weights(k, n, n, sigma.as_map());
            digits.iter_mut().for_each(|d| *d = 0);
            let mut src = 0usize;
            let mut lower = false;
            for slot in best.iter_mut().take(len) {
                let v = self.table[src];
                if lower {
                    *slot = v;
                } else if v < *slot {
                    lower = true;
                    *slot = v;
                } else if v > *slot {
                    break;
                }
                let mut i = n;
                while i > 0 {
                    i -= 1;
                    digits[i] += 1;
                    if digits[i] < k {
                        src += w[i];
                        break;
                    }
                    digits[i] = 0;
                    src -= (k - 1) * w[i];
                }
            }
        }
        self.derived(n, best)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_form().table == self.table
    }

    /// `f ≡ g`: equal up to a permutation of arguments.
    pub fn is_equivalent(&self, other: &FiniteFunction) -> Result<bool> {
        self.require_same_shape(other)?;
        Ok(self == other || self.canonical_form() == other.canonical_form())
    }

    pub fn deck(&self) -> Result<Deck> {
        Deck::of(self)
    }

    /// Whether `other` is a reconstruction of `self`.
    pub fn decks_equal(&self, other: &FiniteFunction) -> Result<bool> {
        self.require_same_shape(other)?;
        Ok(self.deck()? == other.deck()?)
    }

    pub fn has_unique_identification_minor(&self) -> Result<bool> {
        Ok(self.deck()?.distinct() == 1)
    }

    /// Whether argument `i` (0-based) is essential.
    pub fn depends_on(&self, i: usize) -> Result<bool> {
        if i >= self.n {
            return Err(Error::PositionOutOfRange { position: i + 1, arity: self.n });
        }
        let stride = self.k.pow((self.n - 1 - i) as u32);
        let block = stride * self.k;
        for base in (0..self.table.len()).step_by(block) {
            for off in 0..stride {
                let first = self.table[base + off];
                if (1..self.k).any(|v| self.table[base + off + v * stride] != first) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    pub fn essential_positions(&self) -> BTreeSet<usize> {
        (0..self.n).filter(|&i| self.depends_on(i).unwrap_or(false)).collect()
    }

    pub fn depends_on_all(&self) -> bool {
        self.essential_positions().len() == self.n
    }

    /// `a ↦ f(a, ..., a)`.
    pub fn diagonal(&self) -> Vec<Label> {
        (0..self.k).map(|a| self.value(&vec![a; self.n])).collect()
    }

    /// `f†` on the larger domain `{0..k2}` with labels `labels2 ⊇ labels`,
    /// taking `default` on tuples outside `A^n`.
    pub fn extend_with_default(
        &self,
        k2: usize,
        labels2: Vec<String>,
        default: &str,
    ) -> Result<FiniteFunction> {
        if k2 < self.k {
            return Err(Error::Unsupported(format!(
                "extension domain size {k2} is smaller than {}",
                self.k
            )));
        }
        check_labels(&labels2)?;
        let find = |l: &str| {
            labels2
                .iter()
                .position(|x| x == l)
                .map(|i| i as Label)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        };
        let remap: Vec<Label> = self.labels.iter().map(|l| find(l)).collect::<Result<_>>()?;
        let b = find(default)?;
        FiniteFunction::from_fn(k2, self.n, labels2, |t| {
            if t.iter().all(|&v| v < self.k) {
                remap[self.value(t) as usize]
            } else {
                b
            }
        })
    }

    /// Same label list, entries sent through `mapping` (indexed by label).
    pub fn map_labels(&self, mapping: &[Label]) -> Result<FiniteFunction> {
        if mapping.len() != self.labels.len() {
            return Err(Error::TupleLength { expected: self.labels.len(), found: mapping.len() });
        }
        if let Some(&bad) = mapping.iter().find(|&&v| v as usize >= self.labels.len()) {
            return Err(Error::LabelIndex { index: bad as usize, labels: self.labels.len() });
        }
        let table = self.table.iter().map(|&v| mapping[v as usize]).collect();
        Ok(self.derived(self.n, table))
    }

    /// `Inv f`, enumerating `S_n` for `n` up to the default bound.
    pub fn invariance_group(&self) -> Result<PermGroup> {
        self.invariance_group_bounded(DEFAULT_DEGREE_BOUND)
    }

    pub fn invariance_group_bounded(&self, bound: usize) -> Result<PermGroup> {
        if self.n > bound {
            return Err(Error::BoundExceeded {
                what: "arity for S_n enumeration",
                value: self.n as u128,
                bound: bound as u128,
            });
        }
        let elements: BTreeSet<Permutation> = all_permutations(self.n)
            .filter(|s| self.is_invariant_under(s))
            .collect();
        if elements.len() <= 720 {
            PermGroup::from_elements(self.n, elements)
        } else {
            Ok(PermGroup::from_elements_unchecked(self.n, elements))
        }
    }

    /// `f(aσ) = f(a)` for all `a`.
    pub fn is_invariant_under(&self, sigma: &Permutation) -> bool {
        if sigma.degree() != self.n {
            return false;
        }
        let w = minor_weights(self.k, self.n, self.n, sigma.as_map());
        gather(&self.table, self.k, self.n, &w) == self.table
    }
}

impl fmt::Display for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k={} n={}", self.k, self.n)?;
        writeln!(f, "labels: {}", self.labels.join(" "))?;
        let cells: Vec<&str> = self.table.iter().map(|&v| self.labels[v as usize].as_str()).collect();
        write!(f, "table: {}", cells.join(" "))
    }
}
