use alloc::vec::Vec;

use super::module::{relation_vectors, syzygies, FreeModuleElement, SubmodulePresentation};
use super::GroebnerBasis;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, MultiDegree, Polynomial};

/// Graded free module `A^rank` with optional basis degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub rank: usize,
    pub shifts: Option<Vec<MultiDegree>>,
}

/// Bounded complex `F_hi -> ... -> F_lo` of free modules over
/// `A = k[x]/<relations>`, differentials lowering the index.
///
/// `differentials[k]` lists the images of the basis of `F_{lo+k+1}` in
/// `F_{lo+k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    pub nvars: usize,
    pub relations: Vec<Polynomial>,
    pub lo: i64,
    pub modules: Vec<FreeModule>,
    pub differentials: Vec<Vec<FreeModuleElement>>,
}

/// `ker d_i / im d_{i+1}` given by cycle generators and boundary generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subquotient {
    pub nvars: usize,
    pub rank: usize,
    pub relations: Vec<Polynomial>,
    pub cycles: Vec<FreeModuleElement>,
    pub boundaries: Vec<FreeModuleElement>,
    /// Cycles not in the boundary module, pruned to an irredundant set.
    pub surviving: Vec<FreeModuleElement>,
}

impl Subquotient {
    pub fn is_zero(&self) -> bool {
        self.surviving.is_empty()
    }

    /// Presentation `A^s / K` with `s` surviving generators and `K` their
    /// relations modulo boundaries.
    pub fn presentation(&self, budget: &mut Budget) -> Result<SubmodulePresentation> {
        let s = self.surviving.len();
        let mut gens = self.surviving.clone();
        gens.extend(self.boundaries.iter().cloned());
        let syz = syzygies(self.nvars, self.rank, &gens, &self.relations, budget)?;
        let rels: Vec<FreeModuleElement> =
            syz.into_iter().map(|v| v[..s].to_vec()).filter(|v| v.iter().any(|p| !p.is_zero())).collect();
        Ok(SubmodulePresentation::new(self.nvars, s, rels))
    }
}

impl ChainComplex {
    pub fn hi(&self) -> i64 {
        self.lo + self.modules.len() as i64 - 1
    }

    pub fn module(&self, i: i64) -> Option<&FreeModule> {
        if i < self.lo {
            return None;
        }
        self.modules.get((i - self.lo) as usize)
    }

    /// Columns of `d_i : F_i -> F_{i-1}`.
    pub fn differential(&self, i: i64) -> Option<&[FreeModuleElement]> {
        if i <= self.lo {
            return None;
        }
        self.differentials.get((i - self.lo - 1) as usize).map(|v| v.as_slice())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank).collect()
    }

    /// `d_i(v)` for `v` in `F_i`.
    pub fn apply(&self, i: i64, v: &[Polynomial]) -> Result<FreeModuleElement> {
        let cols = self.differential(i).ok_or_else(|| Error::InvalidInput(alloc::format!("no differential d_{i}")))?;
        let target = self.module(i - 1).unwrap().rank;
        let mut out: Vec<Polynomial> = (0..target).map(|_| Polynomial::zero(self.nvars)).collect();
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (row, entry) in cols[k].iter().enumerate() {
                out[row] = &out[row] + &(c * entry);
            }
        }
        Ok(out)
    }

    /// Checks `d_{i-1} d_i = 0` modulo the ring relations for every `i`.
    pub fn d_squared_zero(&self, budget: &mut Budget) -> Result<bool> {
        let gb = GroebnerBasis::compute(self.nvars, &self.relations, &MonomialOrder::grevlex(), budget)?;
        for i in (self.lo + 2)..=self.hi() {
            for col in self.differential(i).unwrap() {
                let img = self.apply(i - 1, col)?;
                for p in &img {
                    if !gb.contains(p, budget)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Homology at `F_i`.
    pub fn homology(&self, i: i64, budget: &mut Budget) -> Result<Subquotient> {
        let m = self.module(i).ok_or_else(|| Error::InvalidInput(alloc::format!("index {i} outside complex")))?;
        let rank = m.rank;
        let n = self.nvars;
        let cycles: Vec<FreeModuleElement> = match self.differential(i) {
            Some(cols) => {
                let target = self.module(i - 1).unwrap().rank;
                // Columns are elements of F_{i-1}; syzygies live in F_i.
                syzygies(n, target, cols, &self.relations, budget)?
            }
            None => (0..rank)
                .map(|k| {
                    let mut v: Vec<Polynomial> = (0..rank).map(|_| Polynomial::zero(n)).collect();
                    v[k] = Polynomial::one(n);
                    v
                })
                .collect(),
        };
        let boundaries: Vec<FreeModuleElement> = self.differential(i + 1).map(|c| c.to_vec()).unwrap_or_default();
        let surviving = surviving_classes(n, rank, &cycles, &boundaries, &self.relations, budget)?;
        Ok(Subquotient { nvars: n, rank, relations: self.relations.clone(), cycles, boundaries, surviving })
    }
}

/// Cycles that are nonzero modulo `boundaries`, pruned so none lies in the
/// span of the others plus the boundaries.
pub(crate) fn surviving_classes(
    nvars: usize,
    rank: usize,
    cycles: &[FreeModuleElement],
    boundaries: &[FreeModuleElement],
    relations: &[Polynomial],
    budget: &mut Budget,
) -> Result<Vec<FreeModuleElement>> {
    let mut base = boundaries.to_vec();
    base.extend(relation_vectors(nvars, rank, relations));
    let gb = GroebnerBasis::compute_module(nvars, rank, &base, &MonomialOrder::grevlex(), budget)?;
    let mut nonzero = Vec::new();
    for c in cycles {
        let r = gb.reduce_vector(c, budget)?;
        if r.iter().any(|p| !p.is_zero()) {
            nonzero.push(r);
        }
    }
    if nonzero.len() <= 1 {
        return Ok(nonzero);
    }
    let mut keep = alloc::vec![true; nonzero.len()];
    for i in 0..nonzero.len() {
        let mut others: Vec<FreeModuleElement> =
            (0..nonzero.len()).filter(|&j| j != i && keep[j]).map(|j| nonzero[j].clone()).collect();
        others.extend(base.iter().cloned());
        let g = GroebnerBasis::compute_module(nvars, rank, &others, &MonomialOrder::grevlex(), budget)?;
        if g.contains_vector(&nonzero[i], budget)? {
            keep[i] = false;
        }
    }
    Ok(nonzero.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect())
}
