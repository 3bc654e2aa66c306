//! Hypotheses of two sufficient conditions for `supp`/`oddsupp`
//! determination, evaluated on tables. These are predicates for tests, not
//! classifiers.

use super::is_totally_symmetric;
use crate::error::{Error, Result};
use crate::function::FiniteFunction;

/// `f` is totally symmetric, depends on all arguments, and some `f_I`
/// depends on all its arguments and is totally symmetric. Needs `n > 2`.
pub fn willard_supp_criterion(f: &FiniteFunction) -> Result<bool> {
    if f.n() <= 2 {
        return Err(Error::ArityTooSmall { needed: 3, found: f.n() });
    }
    if !is_totally_symmetric(f) || !f.depends_on_all() {
        return Ok(false);
    }
    Ok(f
        .identification_minors()?
        .iter()
        .any(|(_, m)| m.depends_on_all() && is_totally_symmetric(m)))
}

/// `f` depends on all arguments and no identification minor does.
/// Needs `n > max(k, 3)`.
pub fn willard_oddsupp_criterion(f: &FiniteFunction) -> Result<bool> {
    let needed = f.k().max(3) + 1;
    if f.n() < needed {
        return Err(Error::ArityTooSmall { needed, found: f.n() });
    }
    if !f.depends_on_all() {
        return Ok(false);
    }
    Ok(f.identification_minors()?.iter().all(|(_, m)| !m.depends_on_all()))
}
