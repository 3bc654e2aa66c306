//! Named constructions with self-verification.

mod examples;
mod fgp;

pub use examples::{
    cyclic_rho, example_a_plus_1, example_boolean_quadratic, example_cyclic, example_symmofo,
    gallery_item, theta_counterexample, APlus1, Cyclic, GalleryItem, Quadratic, SymmOfo, ThetaPair,
    CYCLIC_K4_ALPHA, GALLERY_NAMES,
};
pub use fgp::{build_fgp_phi, random_valid_spec, FGPPhiSpec};
