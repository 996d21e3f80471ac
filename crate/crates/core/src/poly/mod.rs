//! Exact multivariate polynomials, monomial orders and multigradings.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod weights;

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use parse::parse_polynomial;
pub use polynomial::{Homogeneity, Polynomial};
pub use weights::{MultiDegree, WeightSystem};

/// Exact rational coefficient; always in lowest terms with positive denominator.
pub type Coeff = num_rational::BigRational;

/// Integer coefficient helper.
pub fn coeff(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}

/// Names `prefix0, prefix1, ...`.
pub fn default_names(prefix: &str, n: usize) -> alloc::vec::Vec<alloc::string::String> {
    (0..n).map(|i| alloc::format!("{prefix}{i}")).collect()
}
