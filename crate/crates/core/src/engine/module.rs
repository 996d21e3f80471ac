use alloc::vec::Vec;

use super::complex::{ChainComplex, FreeModule};
use super::GroebnerBasis;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{Homogeneity, MonomialOrder, MultiDegree, Polynomial, WeightSystem};

/// A vector in `A^rank`.
pub type FreeModuleElement = Vec<Polynomial>;

/// Submodule of `A^rank` given by generators, with optional degrees of the
/// basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmodulePresentation {
    pub nvars: usize,
    pub rank: usize,
    pub gens: Vec<FreeModuleElement>,
    pub shifts: Option<Vec<MultiDegree>>,
}

impl SubmodulePresentation {
    pub fn new(nvars: usize, rank: usize, gens: Vec<FreeModuleElement>) -> Self {
        SubmodulePresentation { nvars, rank, gens, shifts: None }
    }

    pub fn with_shifts(mut self, shifts: Vec<MultiDegree>) -> Self {
        self.shifts = Some(shifts);
        self
    }
}

fn unit_vector(nvars: usize, rank: usize, k: usize) -> FreeModuleElement {
    let mut v: Vec<Polynomial> = (0..rank).map(|_| Polynomial::zero(nvars)).collect();
    v[k] = Polynomial::one(nvars);
    v
}

/// `rel * e_k` for every relation and basis vector.
pub(crate) fn relation_vectors(nvars: usize, rank: usize, relations: &[Polynomial]) -> Vec<FreeModuleElement> {
    let mut out = Vec::new();
    for k in 0..rank {
        for r in relations {
            let mut v: Vec<Polynomial> = (0..rank).map(|_| Polynomial::zero(nvars)).collect();
            v[k] = r.clone();
            out.push(v);
        }
    }
    out
}

/// Reduced basis (position over grevlex) of `M + I A^rank`.
pub fn module_groebner(
    m: &SubmodulePresentation,
    relations: &[Polynomial],
    budget: &mut Budget,
) -> Result<GroebnerBasis> {
    let mut gens = m.gens.clone();
    gens.extend(relation_vectors(m.nvars, m.rank, relations));
    GroebnerBasis::compute_module(m.nvars, m.rank, &gens, &MonomialOrder::grevlex(), budget)
}

/// Gröbner basis of `{(g_i, e_i)} ∪ {(r e_k, 0)}` in `A^(rank + n)`.
fn augmented(
    nvars: usize,
    rank: usize,
    gens: &[FreeModuleElement],
    relations: &[Polynomial],
    budget: &mut Budget,
) -> Result<GroebnerBasis> {
    let n = gens.len();
    let total = rank + n;
    let mut rows: Vec<FreeModuleElement> = Vec::with_capacity(n + rank * relations.len());
    for (i, g) in gens.iter().enumerate() {
        if g.len() != rank {
            return Err(Error::InvalidInput(alloc::format!("generator of rank {} in rank {rank}", g.len())));
        }
        let mut v = g.clone();
        v.extend(unit_vector(nvars, n, i));
        rows.push(v);
    }
    for r in relation_vectors(nvars, rank, relations) {
        let mut v = r;
        v.extend((0..n).map(|_| Polynomial::zero(nvars)));
        rows.push(v);
    }
    GroebnerBasis::compute_module(nvars, total, &rows, &MonomialOrder::grevlex(), budget)
}

/// Generators of the first syzygy module of `gens` over `A = k[x]/<relations>`,
/// components reduced modulo the relations, zero vectors dropped.
pub fn syzygies(
    nvars: usize,
    rank: usize,
    gens: &[FreeModuleElement],
    relations: &[Polynomial],
    budget: &mut Budget,
) -> Result<Vec<FreeModuleElement>> {
    let n = gens.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let gb = augmented(nvars, rank, gens, relations, budget)?;
    let rel_gb = GroebnerBasis::compute(nvars, relations, &MonomialOrder::grevlex(), budget)?;
    let mut out = Vec::new();
    for (v, (_, pos)) in gb.vectors().into_iter().zip(gb.leading_terms()) {
        if pos < rank {
            continue;
        }
        let mut s: Vec<Polynomial> = Vec::with_capacity(n);
        for p in &v[rank..] {
            s.push(rel_gb.reduce(p, budget)?);
        }
        if s.iter().any(|p| !p.is_zero()) {
            out.push(s);
        }
    }
    Ok(out)
}

/// Cofactors `c` with `f ≡ sum c_i gens_i` modulo `relations`, or `None`.
pub fn module_lift(
    nvars: usize,
    rank: usize,
    gens: &[FreeModuleElement],
    relations: &[Polynomial],
    f: &[Polynomial],
    budget: &mut Budget,
) -> Result<Option<Vec<Polynomial>>> {
    let n = gens.len();
    if n == 0 {
        let rel_gb = GroebnerBasis::compute(nvars, relations, &MonomialOrder::grevlex(), budget)?;
        for p in f {
            if !rel_gb.contains(p, budget)? {
                return Ok(None);
            }
        }
        return Ok(Some(Vec::new()));
    }
    let gb = augmented(nvars, rank, gens, relations, budget)?;
    let mut v = f.to_vec();
    v.extend((0..n).map(|_| Polynomial::zero(nvars)));
    let r = gb.reduce_vector(&v, budget)?;
    if r[..rank].iter().any(|p| !p.is_zero()) {
        return Ok(None);
    }
    Ok(Some(r[rank..].iter().map(|p| -p).collect()))
}

/// Drops generators that are zero modulo the relations or lie in the span
/// of the remaining ones; the survivors generate the same submodule.
pub fn irredundant(
    nvars: usize,
    rank: usize,
    gens: &[FreeModuleElement],
    relations: &[Polynomial],
    budget: &mut Budget,
) -> Result<Vec<FreeModuleElement>> {
    let rel = relation_vectors(nvars, rank, relations);
    let mut keep: Vec<bool> = alloc::vec![true; gens.len()];
    for i in 0..gens.len() {
        let mut others: Vec<FreeModuleElement> =
            (0..gens.len()).filter(|&j| j != i && keep[j]).map(|j| gens[j].clone()).collect();
        others.extend(rel.iter().cloned());
        let gb = GroebnerBasis::compute_module(nvars, rank, &others, &MonomialOrder::grevlex(), budget)?;
        if gb.contains_vector(&gens[i], budget)? {
            keep[i] = false;
        }
    }
    Ok(gens.iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g.clone()).collect())
}

/// Degree of a homogeneous vector whose basis vectors have degrees `shifts`.
pub(crate) fn vector_degree(v: &[Polynomial], shifts: &[MultiDegree], w: &WeightSystem) -> Option<MultiDegree> {
    let mut found: Option<MultiDegree> = None;
    for (k, p) in v.iter().enumerate() {
        match p.multidegree(w)? {
            Homogeneity::Any => {}
            Homogeneity::Of(d) => {
                let d = &d + &shifts[k];
                match &found {
                    None => found = Some(d),
                    Some(f) if *f == d => {}
                    Some(_) => return None,
                }
            }
        }
    }
    found
}

/// Free resolution `F_length -> ... -> F_0` of `A^rank / M` over
/// `A = k[x]/<relations>`, each step reduced to an irredundant generating
/// set. Stops early once a syzygy module vanishes.
pub fn free_resolution(
    m: &SubmodulePresentation,
    relations: &[Polynomial],
    weights: Option<&WeightSystem>,
    length: usize,
    budget: &mut Budget,
) -> Result<ChainComplex> {
    let nvars = m.nvars;
    let shifts0 = match (&m.shifts, weights) {
        (Some(s), _) => Some(s.clone()),
        (None, Some(w)) => Some(alloc::vec![MultiDegree::zero(w.dim()); m.rank]),
        (None, None) => None,
    };
    let mut modules = alloc::vec![FreeModule { rank: m.rank, shifts: shifts0 }];
    let mut differentials: Vec<Vec<FreeModuleElement>> = Vec::new();
    let mut cur = irredundant(nvars, m.rank, &m.gens, relations, budget)?;
    let mut cur_rank = m.rank;
    for level in 1..=length {
        if cur.is_empty() {
            break;
        }
        let prev_shifts = modules.last().unwrap().shifts.clone();
        let shifts = match (prev_shifts, weights) {
            (Some(s), Some(w)) => cur.iter().map(|c| vector_degree(c, &s, w)).collect::<Option<Vec<_>>>(),
            _ => None,
        };
        modules.push(FreeModule { rank: cur.len(), shifts });
        differentials.push(cur.clone());
        if level == length {
            break;
        }
        let syz = syzygies(nvars, cur_rank, &cur, relations, budget)?;
        cur_rank = cur.len();
        cur = irredundant(nvars, cur_rank, &syz, relations, budget)?;
    }
    Ok(ChainComplex { nvars, relations: relations.to_vec(), lo: 0, modules, differentials })
}
