//! Function classes defined through tuple invariants, with constructors and
//! recognizers.
//!
//! A recognizer groups the tuples by the invariant and checks that the
//! function is constant on every group; the witness keeps one value per key.

mod keys;
mod order;
mod willard;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

pub use keys::{
    enumerate_ofo_range, msupp, msupp_range, ofo, ofo_range_size, oddsupp, oddsupp_range, supp,
    supp_range, ElemSet, Multiset, OfoWord,
};
pub(crate) use keys::{ofo_unchecked, oddsupp_unchecked, supp_unchecked};
pub use order::{is_order_preserving, order_violation, PartialOrder};
pub use willard::{willard_oddsupp_criterion, willard_supp_criterion};

use crate::error::{Error, Result};
use crate::function::{table_len, tuples, FiniteFunction, Label};
use crate::group::DEFAULT_DEGREE_BOUND;
use crate::perm::{all_permutations, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    Supp,
    OddSupp,
    /// Determined by the multiset of entries, i.e. totally symmetric.
    Msupp,
    Ofo,
    WeaklyOfo,
    PrSupp,
}

impl ClassKind {
    pub const ALL: [ClassKind; 6] = [
        ClassKind::Supp,
        ClassKind::OddSupp,
        ClassKind::Msupp,
        ClassKind::Ofo,
        ClassKind::WeaklyOfo,
        ClassKind::PrSupp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::Supp => "supp",
            ClassKind::OddSupp => "oddsupp",
            ClassKind::Msupp => "totally-symmetric",
            ClassKind::Ofo => "ofo",
            ClassKind::WeaklyOfo => "weakly-ofo",
            ClassKind::PrSupp => "pr-supp",
        }
    }

    pub fn parse(text: &str) -> Result<ClassKind> {
        match text {
            "supp" => Ok(ClassKind::Supp),
            "oddsupp" => Ok(ClassKind::OddSupp),
            "msupp" | "totally-symmetric" => Ok(ClassKind::Msupp),
            "ofo" => Ok(ClassKind::Ofo),
            "weakly-ofo" => Ok(ClassKind::WeaklyOfo),
            "pr-supp" => Ok(ClassKind::PrSupp),
            _ => Err(Error::Parse(format!("unknown class kind {text:?}"))),
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Key of a (pr, supp)-determined function: the chosen entry and the support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrSuppKey {
    pub value: usize,
    pub set: ElemSet,
}

impl fmt::Display for PrSuppKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.value + 1, self.set)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessMap {
    Supp(BTreeMap<ElemSet, Label>),
    OddSupp(BTreeMap<ElemSet, Label>),
    Msupp(BTreeMap<Multiset, Label>),
    Ofo(BTreeMap<OfoWord, Label>),
    /// `f(a) = inner(ofo(aσ))`.
    WeaklyOfo { sigma: Permutation, inner: BTreeMap<OfoWord, Label> },
    /// `f(a) = inner(a_position, supp(a))`, position 0-based.
    PrSupp { position: usize, inner: BTreeMap<PrSuppKey, Label> },
}

/// Proof that a function factors through an invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassWitness {
    k: usize,
    n: usize,
    labels: Arc<[String]>,
    map: WitnessMap,
}

impl ClassWitness {
    pub fn kind(&self) -> ClassKind {
        match self.map {
            WitnessMap::Supp(_) => ClassKind::Supp,
            WitnessMap::OddSupp(_) => ClassKind::OddSupp,
            WitnessMap::Msupp(_) => ClassKind::Msupp,
            WitnessMap::Ofo(_) => ClassKind::Ofo,
            WitnessMap::WeaklyOfo { .. } => ClassKind::WeaklyOfo,
            WitnessMap::PrSupp { .. } => ClassKind::PrSupp,
        }
    }

    pub fn map(&self) -> &WitnessMap {
        &self.map
    }

    /// Rebuilds the function through the matching constructor.
    pub fn to_function(&self) -> Result<FiniteFunction> {
        let (k, n, labels) = (self.k, self.n, self.labels.to_vec());
        match &self.map {
            WitnessMap::Supp(m) => from_supp(k, n, labels, m),
            WitnessMap::OddSupp(m) => from_oddsupp(k, n, labels, m),
            WitnessMap::Msupp(m) => from_msupp(k, n, labels, m),
            WitnessMap::Ofo(m) => from_ofo(k, n, labels, m),
            WitnessMap::WeaklyOfo { sigma, inner } => from_weakly_ofo(k, n, labels, sigma, inner),
            WitnessMap::PrSupp { position, inner } => from_pr_supp(k, n, labels, *position, inner),
        }
    }

    pub fn to_json(&self) -> Value {
        let label = |v: &Label| Value::String(self.labels[*v as usize].clone());
        let set = |s: &ElemSet| json!(s.one_based());
        let mut out = serde_json::Map::new();
        out.insert("kind".into(), json!(self.kind().name()));
        out.insert("k".into(), json!(self.k));
        out.insert("n".into(), json!(self.n));
        let entries: Vec<Value> = match &self.map {
            WitnessMap::Supp(m) | WitnessMap::OddSupp(m) => m
                .iter()
                .map(|(s, v)| json!({"key": set(s), "label": label(v)}))
                .collect(),
            WitnessMap::Msupp(m) => m
                .iter()
                .map(|(ms, v)| {
                    let counts: serde_json::Map<String, Value> = ms
                        .counts()
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c > 0)
                        .map(|(e, &c)| ((e + 1).to_string(), json!(c)))
                        .collect();
                    json!({"key": counts, "label": label(v)})
                })
                .collect(),
            WitnessMap::Ofo(m) | WitnessMap::WeaklyOfo { inner: m, .. } => m
                .iter()
                .map(|(w, v)| json!({"key": w.one_based(), "label": label(v)}))
                .collect(),
            WitnessMap::PrSupp { inner, .. } => inner
                .iter()
                .map(|(key, v)| {
                    json!({"key": {"value": key.value + 1, "set": set(&key.set)}, "label": label(v)})
                })
                .collect(),
        };
        match &self.map {
            WitnessMap::WeaklyOfo { sigma, .. } => {
                out.insert("sigma".into(), json!(sigma.oneline()));
            }
            WitnessMap::PrSupp { position, .. } => {
                out.insert("position".into(), json!(position + 1));
            }
            _ => {}
        }
        out.insert("entries".into(), Value::Array(entries));
        Value::Object(out)
    }
}

/// Tabulates `a ↦ inner(key(a))`, requiring `inner` to be defined exactly on
/// the keys reached by `A^n`.
fn build<K, F>(
    k: usize,
    n: usize,
    labels: Vec<String>,
    inner: &BTreeMap<K, Label>,
    key: F,
) -> Result<FiniteFunction>
where
    K: Ord + Clone + fmt::Display,
    F: Fn(&[usize]) -> K,
{
    table_len(k, n)?;
    if k > ElemSet::MAX_DOMAIN {
        return Err(Error::Unsupported(format!("domain size {k} above {}", ElemSet::MAX_DOMAIN)));
    }
    let mut reached = BTreeSet::new();
    let mut table = Vec::new();
    for t in tuples(k, n) {
        let key = key(&t);
        let v = *inner.get(&key).ok_or_else(|| Error::MissingKey(key.to_string()))?;
        table.push(v);
        reached.insert(key);
    }
    if let Some(extra) = inner.keys().find(|x| !reached.contains(*x)) {
        return Err(Error::KeyOutOfRange(extra.to_string()));
    }
    FiniteFunction::new(k, n, labels, table)
}

pub fn from_supp(
    k: usize,
    n: usize,
    labels: Vec<String>,
    inner: &BTreeMap<ElemSet, Label>,
) -> Result<FiniteFunction> {
    build(k, n, labels, inner, supp_unchecked)
}

pub fn from_oddsupp(
    k: usize,
    n: usize,
    labels: Vec<String>,
    inner: &BTreeMap<ElemSet, Label>,
) -> Result<FiniteFunction> {
    build(k, n, labels, inner, oddsupp_unchecked)
}

pub fn from_msupp(
    k: usize,
    n: usize,
    labels: Vec<String>,
    inner: &BTreeMap<Multiset, Label>,
) -> Result<FiniteFunction> {
    build(k, n, labels, inner, |t| msupp(t, k).expect("tuple over the domain"))
}

pub fn from_ofo(
    k: usize,
    n: usize,
    labels: Vec<String>,
    inner: &BTreeMap<OfoWord, Label>,
) -> Result<FiniteFunction> {
    build(k, n, labels, inner, ofo_unchecked)
}

/// `f(a) = inner(ofo(aσ))`.
pub fn from_weakly_ofo(
    k: usize,
    n: usize,
    labels: Vec<String>,
    sigma: &Permutation,
    inner: &BTreeMap<OfoWord, Label>,
) -> Result<FiniteFunction> {
    if sigma.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, found: sigma.degree() });
    }
    build(k, n, labels, inner, |t| {
        let permuted: Vec<usize> = sigma.as_map().iter().map(|&j| t[j]).collect();
        ofo_unchecked(&permuted)
    })
}

/// `f(a) = inner(a_i, supp(a))` for the 0-based position `i`.
pub fn from_pr_supp(
    k: usize,
    n: usize,
    labels: Vec<String>,
    position: usize,
    inner: &BTreeMap<PrSuppKey, Label>,
) -> Result<FiniteFunction> {
    if position >= n {
        return Err(Error::PositionOutOfRange { position: position + 1, arity: n });
    }
    build(k, n, labels, inner, |t| PrSuppKey { value: t[position], set: supp_unchecked(t) })
}

/// The map `key(a) ↦ f(a)` if `f` is constant on every key class.
fn factor<K, F>(f: &FiniteFunction, key: F) -> Option<BTreeMap<K, Label>>
where
    K: Ord,
    F: Fn(&[usize]) -> K,
{
    let mut map = BTreeMap::new();
    for (t, &v) in tuples(f.k(), f.n()).zip(f.table()) {
        match map.entry(key(&t)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(e) => {
                if *e.get() != v {
                    return None;
                }
            }
        }
    }
    Some(map)
}

/// A witness that `f` belongs to the class, or `None`.
pub fn recognize(f: &FiniteFunction, kind: ClassKind) -> Result<Option<ClassWitness>> {
    recognize_bounded(f, kind, DEFAULT_DEGREE_BOUND)
}

pub fn recognize_bounded(
    f: &FiniteFunction,
    kind: ClassKind,
    bound: usize,
) -> Result<Option<ClassWitness>> {
    let k = f.k();
    if k > ElemSet::MAX_DOMAIN {
        return Err(Error::Unsupported(format!("domain size {k} above {}", ElemSet::MAX_DOMAIN)));
    }
    let map = match kind {
        ClassKind::Supp => factor(f, supp_unchecked).map(WitnessMap::Supp),
        ClassKind::OddSupp => factor(f, oddsupp_unchecked).map(WitnessMap::OddSupp),
        ClassKind::Msupp => factor(f, |t| msupp(t, k).expect("tuple over the domain")).map(WitnessMap::Msupp),
        ClassKind::Ofo => factor(f, ofo_unchecked).map(WitnessMap::Ofo),
        ClassKind::WeaklyOfo => {
            if f.n() > bound {
                return Err(Error::BoundExceeded {
                    what: "arity for S_n enumeration",
                    value: f.n() as u128,
                    bound: bound as u128,
                });
            }
            all_permutations(f.n()).find_map(|sigma| {
                let h = f.precompose(&sigma.inverse()).expect("degree matches");
                factor(&h, ofo_unchecked).map(|inner| WitnessMap::WeaklyOfo { sigma, inner })
            })
        }
        ClassKind::PrSupp => (0..f.n()).find_map(|position| {
            factor(f, |t| PrSuppKey { value: t[position], set: supp_unchecked(t) })
                .map(|inner| WitnessMap::PrSupp { position, inner })
        }),
    };
    Ok(map.map(|map| ClassWitness { k, n: f.n(), labels: f.shared_labels(), map }))
}

/// Invariant under every adjacent transposition of arguments.
pub fn is_totally_symmetric(f: &FiniteFunction) -> bool {
    let n = f.n();
    (0..n.saturating_sub(1)).all(|i| {
        let t = Permutation::transposition(n, i, i + 1).expect("valid transposition");
        f.is_invariant_under(&t)
    })
}

/// `Inv f` acts transitively on the `m`-element sets of positions.
pub fn is_m_set_transitive(f: &FiniteFunction, m: usize) -> Result<bool> {
    let n = f.n();
    if m == 0 || m > n {
        return Err(Error::PositionOutOfRange { position: m, arity: n });
    }
    let inv = f.invariance_group()?;
    let start: Vec<usize> = (0..m).collect();
    let orbit: BTreeSet<ElemSet> = inv
        .iter()
        .map(|s| ElemSet::from_elems(&start.iter().map(|&p| s.apply(p)).collect::<Vec<_>>()))
        .collect();
    let total: u128 = (0..m as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1));
    Ok(orbit.len() as u128 == total)
}
