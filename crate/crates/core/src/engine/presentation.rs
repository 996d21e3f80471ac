use alloc::vec::Vec;

use super::GroebnerBasis;
use crate::budget::Budget;
use crate::error::Result;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// A presentation with linearly solvable variables removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplified {
    /// Original indices of the surviving variables, ascending.
    pub kept: Vec<usize>,
    /// Relations over the surviving variables.
    pub relations: Vec<Polynomial>,
    /// Image of every original variable in the surviving ring.
    pub substitution: Vec<Polynomial>,
}

/// Variable `v` with `r = c*v + h`, `c` a nonzero constant and `h` free of `v`.
fn solvable_var(r: &Polynomial) -> Option<usize> {
    let n = r.nvars();
    (0..n).rev().find(|&v| {
        let mut linear = false;
        for (m, _) in r.terms() {
            let e = m.exponents()[v];
            if e == 0 {
                continue;
            }
            if e == 1 && m.total_degree() == 1 && !linear {
                linear = true;
            } else {
                return false;
            }
        }
        linear
    })
}

/// Repeatedly solves relations of the form `c*v + h` for `v` and substitutes.
/// The resulting ring is isomorphic to the input via `substitution`.
pub fn simplify_presentation(nvars: usize, relations: &[Polynomial], budget: &mut Budget) -> Result<Simplified> {
    let mut images: Vec<Polynomial> = (0..nvars).map(|i| Polynomial::var(nvars, i)).collect();
    let mut gone = alloc::vec![false; nvars];
    let mut rels: Vec<Polynomial> = relations.iter().filter(|r| !r.is_zero()).cloned().collect();
    loop {
        while let Some((idx, v)) = rels.iter().enumerate().find_map(|(i, r)| solvable_var(r).map(|v| (i, v))) {
            let r = rels.remove(idx);
            let c = r.coefficient(&Monomial::var(nvars, v));
            let mut h = r.clone();
            h.add_term(Monomial::var(nvars, v), -c.clone());
            let value = h.scale(&(-c.recip()));
            let mut sub: Vec<Polynomial> = (0..nvars).map(|i| Polynomial::var(nvars, i)).collect();
            sub[v] = value;
            for p in rels.iter_mut() {
                *p = p.substitute(&sub, nvars)?;
            }
            rels.retain(|p| !p.is_zero());
            for p in images.iter_mut() {
                *p = p.substitute(&sub, nvars)?;
            }
            gone[v] = true;
        }
        let gb = GroebnerBasis::compute(nvars, &rels, &MonomialOrder::grevlex(), budget)?;
        rels = gb.polynomials();
        if !rels.iter().any(|r| solvable_var(r).is_some()) {
            break;
        }
    }
    let kept: Vec<usize> = (0..nvars).filter(|&i| !gone[i]).collect();
    let restrict = |p: &Polynomial| p.restrict(&kept).expect("eliminated variable survived substitution");
    Ok(Simplified {
        relations: rels.iter().map(restrict).collect(),
        substitution: images.iter().map(restrict).collect(),
        kept,
    })
}
