//! Gröbner bases for ideals and submodules and the decision procedures
//! built on them: normal forms, elimination, lifts, syzygies and free
//! resolutions.
//!
//! Quotient rings `k[x]/I` are handled by adding the generators of `I`
//! (times every basis vector, for modules) to each computation.

mod buchberger;
pub mod complex;
pub mod ideal;
pub mod module;
pub mod presentation;

use alloc::vec::Vec;

use buchberger::{Ctx, VPoly};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

pub use complex::{ChainComplex, FreeModule, Subquotient};
pub use ideal::{elimination_ideal, groebner, ideal_equal, ideal_lift, normal_form};
pub use module::{free_resolution, module_groebner, module_lift, syzygies, FreeModuleElement, SubmodulePresentation};
pub use presentation::{simplify_presentation, Simplified};

/// Reduced Gröbner basis of a submodule of `A^rank`, `A = k[x_1..x_nvars]`.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ctx: Ctx,
    elems: Vec<VPoly>,
}

impl GroebnerBasis {
    pub fn compute_module(
        nvars: usize,
        rank: usize,
        gens: &[Vec<Polynomial>],
        order: &MonomialOrder,
        budget: &mut Budget,
    ) -> Result<Self> {
        let ctx = Ctx { order: order.clone(), nvars, rank };
        let mut vs = Vec::with_capacity(gens.len());
        for g in gens {
            if g.len() != rank {
                return Err(Error::InvalidInput(alloc::format!(
                    "module element of rank {} in a rank {rank} module",
                    g.len()
                )));
            }
            if let Some(p) = g.iter().find(|p| p.nvars() != nvars) {
                return Err(Error::VariableMismatch { left: nvars, right: p.nvars() });
            }
            let v = ctx.embed_vector(g);
            if !v.is_zero() {
                vs.push(v);
            }
        }
        let elems = ctx.groebner(vs, budget)?;
        Ok(GroebnerBasis { ctx, elems })
    }

    pub fn compute(nvars: usize, gens: &[Polynomial], order: &MonomialOrder, budget: &mut Budget) -> Result<Self> {
        let vs: Vec<Vec<Polynomial>> = gens.iter().map(|g| alloc::vec![g.clone()]).collect();
        Self::compute_module(nvars, 1, &vs, order, budget)
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars
    }

    pub fn rank(&self) -> usize {
        self.ctx.rank
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.ctx.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.ctx.rank == 1 && self.elems.iter().any(|g| g.lead().mon.is_one())
    }

    pub fn reduce_vector(&self, v: &[Polynomial], budget: &mut Budget) -> Result<Vec<Polynomial>> {
        let f = self.ctx.embed_vector(v);
        let r = self.ctx.reduce(f, &self.elems, None, budget)?;
        Ok(self.ctx.to_vector(&r))
    }

    pub fn reduce(&self, p: &Polynomial, budget: &mut Budget) -> Result<Polynomial> {
        let f = self.ctx.embed_poly(p);
        let r = self.ctx.reduce(f, &self.elems, None, budget)?;
        Ok(self.ctx.to_vector(&r).swap_remove(0))
    }

    /// Normal form without a caller budget; for small known-terminating use.
    pub fn nf(&self, p: &Polynomial) -> Polynomial {
        self.reduce(p, &mut Budget::unlimited()).expect("unlimited budget")
    }

    pub fn contains(&self, p: &Polynomial, budget: &mut Budget) -> Result<bool> {
        Ok(self.reduce(p, budget)?.is_zero())
    }

    pub fn contains_vector(&self, v: &[Polynomial], budget: &mut Budget) -> Result<bool> {
        Ok(self.reduce_vector(v, budget)?.iter().all(|p| p.is_zero()))
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elems.iter().map(|g| self.ctx.to_vector(g).swap_remove(0)).collect()
    }

    pub fn vectors(&self) -> Vec<Vec<Polynomial>> {
        self.elems.iter().map(|g| self.ctx.to_vector(g)).collect()
    }

    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elems.iter().map(|g| (g.lead().mon.clone(), g.lead().pos)).collect()
    }

    /// True when no leading term divides `m` at position `pos`.
    pub fn is_standard(&self, m: &Monomial, pos: usize) -> bool {
        !self.elems.iter().any(|g| g.lead().pos == pos && g.lead().mon.divides(m))
    }
}
