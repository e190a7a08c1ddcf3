//! Exact Gröbner–Shirshov basis machinery.
//!
//! The engine covers the free associative algebra (compositions, the
//! Shirshov completion procedure, bounded checks of the
//! Composition-Diamond lemma), free dialgebras and the Leibniz enveloping
//! construction, double-free modules, free anti-commutative algebras with
//! the Hall-word basis, and Lyndon–Shirshov word utilities. All arithmetic
//! is exact over the rationals.

pub mod alphabet;
pub mod anticomm;
pub mod catalog;
pub mod dialgebra;
pub mod error;
pub mod format;
pub mod freemodule;
pub mod gsb;
pub mod linalg;
pub mod lincomb;
pub mod poly;
pub mod rewrite;
pub mod word;

pub use alphabet::Alphabet;
pub use error::{Error, Result};
pub use lincomb::{LinComb, Scalar};
pub use poly::Polynomial;
pub use rewrite::RewriteSystem;
pub use word::{DegLexOrder, Word};
