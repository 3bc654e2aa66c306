//! Exhaustive reconstruction experiments at tiny shapes.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::classes::{from_msupp, msupp_range, Multiset};
use crate::deck::Deck;
use crate::error::{Error, Result};
use crate::function::{table_len, FiniteFunction, Label};

pub const ENUMERATION_BUDGET: u128 = 1 << 24;

/// Labels `"0".."label_count-1"`.
pub fn numeric_labels(label_count: usize) -> Vec<String> {
    (0..label_count).map(|i| i.to_string()).collect()
}

fn function_count(k: usize, n: usize, label_count: usize, budget: u128) -> Result<(usize, u128)> {
    if label_count == 0 {
        return Err(Error::NoLabels);
    }
    if label_count > Label::MAX as usize {
        return Err(Error::Unsupported(format!("{label_count} labels")));
    }
    let len = table_len(k, n)?;
    let count = (label_count as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if count > budget {
        return Err(Error::BoundExceeded { what: "functions to enumerate", value: count, bound: budget });
    }
    Ok((len, count))
}

fn table_of(mut index: u128, len: usize, label_count: usize) -> Vec<Label> {
    let base = label_count as u128;
    (0..len)
        .map(|_| {
            let d = (index % base) as Label;
            index /= base;
            d
        })
        .collect()
}

/// Every function `A^n → {0..label_count}` exactly once.
pub fn enumerate_functions(
    k: usize,
    n: usize,
    label_count: usize,
) -> Result<impl Iterator<Item = FiniteFunction>> {
    enumerate_functions_bounded(k, n, label_count, ENUMERATION_BUDGET)
}

pub fn enumerate_functions_bounded(
    k: usize,
    n: usize,
    label_count: usize,
    budget: u128,
) -> Result<impl Iterator<Item = FiniteFunction>> {
    let (len, count) = function_count(k, n, label_count, budget)?;
    let labels: Arc<[String]> = numeric_labels(label_count).into();
    FiniteFunction::with_shared_labels(k, n, Arc::clone(&labels), vec![0; len])?;
    Ok((0..count).map(move |i| {
        FiniteFunction::with_shared_labels(k, n, Arc::clone(&labels), table_of(i, len, label_count))
            .expect("validated shape")
    }))
}

/// Every totally symmetric function of the shape, one per multiset table.
pub fn totally_symmetric_functions(k: usize, n: usize, label_count: usize) -> Result<Vec<FiniteFunction>> {
    let keys = msupp_range(k, n);
    if label_count == 0 {
        return Err(Error::NoLabels);
    }
    let count = (label_count as u128).checked_pow(keys.len() as u32).unwrap_or(u128::MAX);
    if count > ENUMERATION_BUDGET {
        return Err(Error::BoundExceeded { what: "symmetric functions", value: count, bound: ENUMERATION_BUDGET });
    }
    (0..count)
        .map(|i| {
            let values = table_of(i, keys.len(), label_count);
            let map: BTreeMap<Multiset, Label> = keys.iter().cloned().zip(values).collect();
            from_msupp(k, n, numeric_labels(label_count), &map)
        })
        .collect()
}

/// Equivalence classes (as canonical forms) grouped by deck.
#[derive(Debug, Clone)]
pub struct DeckIndex {
    k: usize,
    n: usize,
    labels: Arc<[String]>,
    buckets: HashMap<Deck, BTreeSet<FiniteFunction>>,
    functions: u128,
}

impl DeckIndex {
    /// Index of all functions of the shape.
    pub fn build(k: usize, n: usize, label_count: usize) -> Result<DeckIndex> {
        DeckIndex::build_bounded(k, n, label_count, ENUMERATION_BUDGET)
    }

    pub fn build_bounded(k: usize, n: usize, label_count: usize, budget: u128) -> Result<DeckIndex> {
        let (len, count) = function_count(k, n, label_count, budget)?;
        if n < 2 {
            return Err(Error::ArityTooSmall { needed: 2, found: n });
        }
        let labels: Arc<[String]> = numeric_labels(label_count).into();
        let canon: BTreeSet<FiniteFunction> = (0..count)
            .into_par_iter()
            .map(|i| {
                FiniteFunction::with_shared_labels(k, n, Arc::clone(&labels), table_of(i, len, label_count))
                    .expect("validated shape")
                    .canonical_form()
            })
            .collect();
        let mut index = DeckIndex::from_canonical(k, n, labels, canon)?;
        index.functions = count;
        Ok(index)
    }

    /// Index of the given functions, which must share one shape.
    pub fn from_functions(functions: &[FiniteFunction]) -> Result<DeckIndex> {
        let first = functions.first().ok_or(Error::EmptyDomain)?;
        if functions.iter().any(|f| !f.same_shape(first)) {
            return Err(Error::ShapeMismatch);
        }
        if first.n() < 2 {
            return Err(Error::ArityTooSmall { needed: 2, found: first.n() });
        }
        let canon: BTreeSet<FiniteFunction> =
            functions.par_iter().map(|f| f.canonical_form()).collect();
        let mut index = DeckIndex::from_canonical(first.k(), first.n(), first.shared_labels(), canon)?;
        index.functions = functions.len() as u128;
        Ok(index)
    }

    fn from_canonical(
        k: usize,
        n: usize,
        labels: Arc<[String]>,
        canon: BTreeSet<FiniteFunction>,
    ) -> Result<DeckIndex> {
        let classes: Vec<FiniteFunction> = canon.into_iter().collect();
        let decks: Vec<Deck> = classes.par_iter().map(Deck::of).collect::<Result<_>>()?;
        let mut buckets: HashMap<Deck, BTreeSet<FiniteFunction>> = HashMap::new();
        for (deck, f) in decks.into_iter().zip(classes) {
            buckets.entry(deck).or_default().insert(f);
        }
        Ok(DeckIndex { k, n, labels, buckets, functions: 0 })
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.k, self.n, self.labels.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Number of functions the index was built from.
    pub fn function_count(&self) -> u128 {
        self.functions
    }

    pub fn class_count(&self) -> usize {
        self.buckets.values().map(|b| b.len()).sum()
    }

    pub fn bucket_count(&self) -> usize {
        self.buckets.len()
    }

    /// Buckets sorted by deck.
    pub fn buckets(&self) -> Vec<(&Deck, &BTreeSet<FiniteFunction>)> {
        let mut out: Vec<_> = self.buckets.iter().collect();
        out.sort_by(|a, b| a.0.cmp(b.0));
        out
    }

    /// Relabels `f` onto this index's label list by label position.
    fn adopt(&self, f: &FiniteFunction) -> Result<FiniteFunction> {
        if f.k() != self.k || f.n() != self.n {
            return Err(Error::ShapeMismatch);
        }
        if f.labels().len() > self.labels.len() {
            return Err(Error::LabelIndex { index: f.labels().len() - 1, labels: self.labels.len() });
        }
        FiniteFunction::with_shared_labels(self.k, self.n, Arc::clone(&self.labels), f.table().to_vec())
    }

    /// The classes sharing `f`'s deck, `f`'s own included if indexed.
    pub fn bucket_of(&self, f: &FiniteFunction) -> Result<Option<&BTreeSet<FiniteFunction>>> {
        let g = self.adopt(f)?;
        Ok(self.buckets.get(&Deck::of(&g)?))
    }

    /// Whether `f` is equivalent to every indexed function with its deck.
    pub fn is_reconstructible(&self, f: &FiniteFunction) -> Result<bool> {
        let g = self.adopt(f)?;
        let canon = g.canonical_form();
        Ok(match self.buckets.get(&Deck::of(&g)?) {
            Some(b) => b.iter().all(|h| *h == canon),
            None => true,
        })
    }

    /// Buckets with more than one class, sorted by deck.
    pub fn nonreconstructible_buckets(&self) -> Vec<&BTreeSet<FiniteFunction>> {
        self.buckets().into_iter().filter(|(_, b)| b.len() > 1).map(|(_, b)| b).collect()
    }

    /// Bucket statistics plus up to `examples` nonreconstructible buckets.
    pub fn sweep_report(&self, examples: usize) -> Value {
        let bad = self.nonreconstructible_buckets();
        let sizes: BTreeMap<usize, usize> = self.buckets.values().fold(BTreeMap::new(), |mut m, b| {
            *m.entry(b.len()).or_insert(0) += 1;
            m
        });
        let table = |f: &FiniteFunction| -> Vec<&str> {
            f.table().iter().map(|&v| self.labels[v as usize].as_str()).collect()
        };
        json!({
            "k": self.k,
            "n": self.n,
            "labels": self.labels.len(),
            "functions": self.functions.to_string(),
            "classes": self.class_count(),
            "buckets": self.bucket_count(),
            "bucket_sizes": sizes.iter().map(|(s, c)| json!({"classes": s, "buckets": c})).collect::<Vec<_>>(),
            "nonreconstructible_buckets": bad.len(),
            "nonreconstructible_classes": bad.iter().map(|b| b.len()).sum::<usize>(),
            "examples": bad.iter().take(examples)
                .map(|b| b.iter().map(&table).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Whether `f` is reconstructible among all functions of its shape with
/// `label_count` labels.
pub fn is_reconstructible_exhaustive(f: &FiniteFunction, label_count: usize) -> Result<bool> {
    DeckIndex::build(f.k(), f.n(), label_count.max(f.labels().len()))?.is_reconstructible(f)
}

/// Outcome of a weak reconstructibility test on a class.
#[derive(Debug, Clone)]
pub struct WeakRecon {
    pub holds: bool,
    /// Two nonequivalent members with the same deck.
    pub counterexample: Option<(FiniteFunction, FiniteFunction)>,
    /// No two distinct members (as tables) share a deck.
    pub equal_per_bucket: bool,
}

/// Whether no two nonequivalent members share a deck.
pub fn class_weak_reconstructibility(members: &[FiniteFunction]) -> Result<WeakRecon> {
    let first = match members.first() {
        Some(f) => f,
        None => return Ok(WeakRecon { holds: true, counterexample: None, equal_per_bucket: true }),
    };
    if members.iter().any(|f| !f.same_shape(first)) {
        return Err(Error::ShapeMismatch);
    }
    let keyed: Vec<(Deck, FiniteFunction)> = members
        .par_iter()
        .map(|f| Ok((Deck::of(f)?, f.canonical_form())))
        .collect::<Result<_>>()?;
    // Per deck: the first member seen for each class, and the member count.
    let mut by_deck: BTreeMap<&Deck, (BTreeMap<&FiniteFunction, usize>, BTreeSet<usize>)> = BTreeMap::new();
    for (i, (deck, canon)) in keyed.iter().enumerate() {
        let entry = by_deck.entry(deck).or_default();
        entry.0.entry(canon).or_insert(i);
        entry.1.insert(i);
    }
    let mut counterexample = None;
    let mut equal_per_bucket = true;
    for (classes, all) in by_deck.values() {
        let distinct: BTreeSet<&[Label]> = all.iter().map(|&i| members[i].table()).collect();
        if distinct.len() > 1 {
            equal_per_bucket = false;
        }
        if counterexample.is_none() && classes.len() > 1 {
            let mut it = classes.values();
            let (a, b) = (*it.next().expect("two"), *it.next().expect("two"));
            counterexample = Some((members[a].clone(), members[b].clone()));
        }
    }
    Ok(WeakRecon { holds: counterexample.is_none(), counterexample, equal_per_bucket })
}

/// Outcome of a recognizability test.
#[derive(Debug, Clone)]
pub struct Recognizability {
    pub holds: bool,
    /// A member and a nonmember with the same deck.
    pub counterexample: Option<(FiniteFunction, FiniteFunction)>,
}

/// Whether every bucket holding a member consists of members only. The
/// predicate must be invariant under equivalence.
pub fn class_recognizability<P>(index: &DeckIndex, member: P) -> Recognizability
where
    P: Fn(&FiniteFunction) -> bool + Sync,
{
    let buckets = index.buckets();
    let found = buckets.par_iter().find_map_first(|(_, b)| {
        let (yes, no): (Vec<&FiniteFunction>, Vec<&FiniteFunction>) = b.iter().partition(|f| member(f));
        match (yes.first(), no.first()) {
            (Some(y), Some(n)) => Some(((*y).clone(), (*n).clone())),
            _ => None,
        }
    });
    Recognizability { holds: found.is_none(), counterexample: found }
}
