use alloc::vec::Vec;

use super::module::module_lift;
use super::GroebnerBasis;
use crate::budget::Budget;
use crate::error::Result;
use crate::poly::{MonomialOrder, Polynomial};

/// Reduced Gröbner basis of `<gens>` under `order`.
pub fn groebner(
    nvars: usize,
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<GroebnerBasis> {
    GroebnerBasis::compute(nvars, gens, order, budget)
}

/// Remainder of `f` modulo the ideal; zero exactly for members.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis, budget: &mut Budget) -> Result<Polynomial> {
    gb.reduce(f, budget)
}

/// Generators of `<gens> ∩ k[x_i : keep[i]]`, still written in all `nvars`
/// variables. They form the reduced basis of the contraction for the
/// restriction of the block order.
pub fn elimination_ideal(
    nvars: usize,
    gens: &[Polynomial],
    keep: &[bool],
    budget: &mut Budget,
) -> Result<Vec<Polynomial>> {
    let elim: Vec<bool> = keep.iter().map(|k| !k).collect();
    let order = MonomialOrder::elimination(nvars, &elim);
    let gb = GroebnerBasis::compute(nvars, gens, &order, budget)?;
    Ok(gb.polynomials().into_iter().filter(|p| (0..nvars).all(|i| keep[i] || !p.uses_var(i))).collect())
}

/// Equality of ideals by comparing reduced grevlex bases.
pub fn ideal_equal(nvars: usize, a: &[Polynomial], b: &[Polynomial], budget: &mut Budget) -> Result<bool> {
    let order = MonomialOrder::grevlex();
    let ga = GroebnerBasis::compute(nvars, a, &order, budget)?;
    let gb = GroebnerBasis::compute(nvars, b, &order, budget)?;
    Ok(ga.polynomials() == gb.polynomials())
}

/// Cofactors `c` with `f = sum c_i gens_i`, or `None` when `f` is not in
/// the ideal.
pub fn ideal_lift(
    nvars: usize,
    gens: &[Polynomial],
    f: &Polynomial,
    budget: &mut Budget,
) -> Result<Option<Vec<Polynomial>>> {
    let vs: Vec<Vec<Polynomial>> = gens.iter().map(|g| alloc::vec![g.clone()]).collect();
    module_lift(nvars, 1, &vs, &[], core::slice::from_ref(f), budget)
}
