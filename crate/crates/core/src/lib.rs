//! Identification minors of finite functions: decks, equivalence, class
//! recognizers, the equalizing-permutation machinery for functions determined
//! by the order of first occurrence, and exhaustive reconstruction sweeps.

pub mod classes;
pub mod couple;
pub mod deck;
pub mod equalizing;
pub mod error;
pub mod format;
pub mod function;
pub mod gallery;
pub mod group;
pub mod perm;
pub mod recon;
pub mod report;
pub mod suites;

pub use couple::{delta_map, Couple};
pub use deck::Deck;
pub use error::{Error, Result};
pub use function::{FiniteFunction, Label};
pub use group::{group_closure, PermGroup};
pub use perm::{Parity, Permutation};
