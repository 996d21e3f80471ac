//! Exact commutative algebra for rings with a torus action.
//!
//! The crate builds the partial-compactification ring `Q(R)` of a graded
//! ring `R`, its structure maps, the comparison map `rho`, Koszul and Čech
//! computations, grade-restriction windows and Koszul dg models. Everything
//! runs on an exact Buchberger engine over the rationals.
//!
//! The crate is `no_std` and only needs an allocator.
#![no_std]

extern crate alloc;

pub mod budget;
pub mod derived;
pub mod engine;
pub mod equivariant;
pub mod error;
pub mod examples;
pub mod fm_windows;
pub mod homological;
pub mod linalg;
pub mod poly;
pub mod ring;

pub use budget::Budget;
pub use error::{Error, Result};
pub use poly::{Coeff, Homogeneity, Monomial, MonomialOrder, MultiDegree, OrderKind, Polynomial, WeightSystem};
pub use ring::{GradedRing, RingMap};
