//! Exact structure-constant workbench for BiHom-type algebras.
//!
//! Algebras are stored as structure-constant tensors over an exact field
//! (the rationals or a prime field), together with the pair of structure maps
//! `(alpha, beta)`. On top of that the crate provides:
//!
//! * checkers for every BiHom identity (associativity, skew-symmetry, Jacobi,
//!   left/right Leibniz, left/right pre-Lie, dendriform, Rota-Baxter), each
//!   returning concrete counterexamples instead of a bare boolean;
//! * constructions (Yau twists, Rota-Baxter derived products and brackets,
//!   the pre-Lie commutator bracket, the dendriform splitting) that verify
//!   their hypotheses before building anything;
//! * a brute-force Rota-Baxter operator search over small prime fields with
//!   rational lifting;
//! * a catalog of small hand-auditable algebras.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod checkers;
pub mod constructions;
pub mod error;
pub mod linalg;
pub mod product;
pub mod rota_baxter;
pub mod scalar;
pub mod vector;

pub use algebra::{AlgebraInstance, AlgebraKind, ViolationWitness};
pub use error::{Error, Result};
pub use linalg::LinearOperator;
pub use product::BilinearProduct;
pub use scalar::{Field, Scalar};
