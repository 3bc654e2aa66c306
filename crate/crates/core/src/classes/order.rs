//! Order-preserving functions for partial orders on the domain and labels.

use crate::error::{Error, Result};
use crate::function::{tuples, FiniteFunction};

/// A partial order on `{0..size}` as a dense relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrder {
    size: usize,
    le: Vec<bool>,
}

impl PartialOrder {
    /// Validates reflexivity, antisymmetry and transitivity of `le(a, b)`.
    pub fn from_relation<F: Fn(usize, usize) -> bool>(size: usize, le: F) -> Result<Self> {
        let mut m = vec![false; size * size];
        for a in 0..size {
            for b in 0..size {
                m[a * size + b] = le(a, b);
            }
        }
        let order = PartialOrder { size, le: m };
        order.validate()?;
        Ok(order)
    }

    /// The reflexive-transitive closure of `pairs`, which must be antisymmetric.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut m = vec![false; size * size];
        for a in 0..size {
            m[a * size + a] = true;
        }
        for &(a, b) in pairs {
            if a >= size || b >= size {
                return Err(Error::InvalidOrder(format!("pair ({a},{b}) outside 0..{size}")));
            }
            m[a * size + b] = true;
        }
        for mid in 0..size {
            for a in 0..size {
                if m[a * size + mid] {
                    for b in 0..size {
                        if m[mid * size + b] {
                            m[a * size + b] = true;
                        }
                    }
                }
            }
        }
        let order = PartialOrder { size, le: m };
        order.validate()?;
        Ok(order)
    }

    /// `0 < 1 < ... < size-1`.
    pub fn chain(size: usize) -> Self {
        PartialOrder::from_relation(size, |a, b| a <= b).expect("a chain is a partial order")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a * self.size + b]
    }

    fn validate(&self) -> Result<()> {
        let s = self.size;
        for a in 0..s {
            if !self.le(a, a) {
                return Err(Error::InvalidOrder(format!("not reflexive at {a}")));
            }
            for b in 0..s {
                if a != b && self.le(a, b) && self.le(b, a) {
                    return Err(Error::InvalidOrder(format!("not antisymmetric at ({a},{b})")));
                }
                for c in 0..s {
                    if self.le(a, b) && self.le(b, c) && !self.le(a, c) {
                        return Err(Error::InvalidOrder(format!("not transitive at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A pair `a ≤ b` (componentwise) with `f(a) ≰ f(b)`, if any.
///
/// Only pairs differing in one coordinate are examined: any comparable pair
/// is joined by such steps, and the label order is transitive.
pub fn order_violation(
    f: &FiniteFunction,
    le_a: &PartialOrder,
    le_b: &PartialOrder,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if le_a.size() != f.k() {
        return Err(Error::InvalidOrder(format!(
            "domain order has size {}, domain has {}",
            le_a.size(),
            f.k()
        )));
    }
    if le_b.size() != f.labels().len() {
        return Err(Error::InvalidOrder(format!(
            "label order has size {}, there are {} labels",
            le_b.size(),
            f.labels().len()
        )));
    }
    for a in tuples(f.k(), f.n()) {
        let fa = f.value(&a) as usize;
        for i in 0..f.n() {
            for v in 0..f.k() {
                if v == a[i] || !le_a.le(a[i], v) {
                    continue;
                }
                let mut b = a.clone();
                b[i] = v;
                if !le_b.le(fa, f.value(&b) as usize) {
                    return Ok(Some((a, b)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_order_preserving(
    f: &FiniteFunction,
    le_a: &PartialOrder,
    le_b: &PartialOrder,
) -> Result<bool> {
    Ok(order_violation(f, le_a, le_b)?.is_none())
}
