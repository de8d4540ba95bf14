//! Exact verification of q-supercongruences, their parametric
//! generalizations, and the p-adic supercongruences they specialize to.

pub mod algebra;
pub mod cases;
pub mod congruence;
pub mod error;
pub mod padic;
pub mod qseries;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/congruences.md")]
    mod congruences {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/padic.md")]
    mod padic {}
    #[doc = include_str!("../../../book/src/limits.md")]
    mod limits {}
}
