//! Buchberger's algorithm for submodules of free modules `A^r`.
//!
//! Ideals are the rank-one case. Terms carry a position and are compared
//! position-over-term; a smaller position index is larger.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::Result;
use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Term {
    pub mon: Monomial,
    pub pos: usize,
    pub coef: Coeff,
}

/// Vector of polynomials as a term list sorted descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct VPoly {
    pub terms: Vec<Term>,
}

impl VPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }
}

/// Ordering context shared by one computation.
#[derive(Debug, Clone)]
pub(crate) struct Ctx {
    pub order: MonomialOrder,
    pub nvars: usize,
    pub rank: usize,
}

impl Ctx {
    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.order.compare_pot((&a.mon, a.pos), (&b.mon, b.pos))
    }

    pub fn embed_vector(&self, v: &[Polynomial]) -> VPoly {
        let mut terms: Vec<Term> = Vec::new();
        for (pos, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(Term { mon: m.clone(), pos, coef: c.clone() });
            }
        }
        terms.sort_by(|a, b| self.cmp(b, a));
        VPoly { terms }
    }

    pub fn embed_poly(&self, p: &Polynomial) -> VPoly {
        self.embed_vector(core::slice::from_ref(p))
    }

    pub fn to_vector(&self, f: &VPoly) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = (0..self.rank).map(|_| Polynomial::zero(self.nvars)).collect();
        for t in &f.terms {
            out[t.pos].add_term(t.mon.clone(), t.coef.clone());
        }
        out
    }

    /// `tail - c * m * g`, all sorted descending; `m * g` may not exceed
    /// any discarded prefix.
    fn sub_scaled(&self, tail: &[Term], c: &Coeff, m: &Monomial, g: &VPoly) -> Vec<Term> {
        let mut out = Vec::with_capacity(tail.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        let mut scaled = |t: &Term| Term { mon: t.mon.mul(m), pos: t.pos, coef: -(c * &t.coef) };
        let mut next_g: Option<Term> = g.terms.first().map(&mut scaled);
        while i < tail.len() || next_g.is_some() {
            match (tail.get(i), next_g.as_ref()) {
                (Some(a), Some(b)) => match self.cmp(a, b) {
                    Ordering::Greater => {
                        out.push(a.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(next_g.take().unwrap());
                        j += 1;
                        next_g = g.terms.get(j).map(&mut scaled);
                    }
                    Ordering::Equal => {
                        let s = &a.coef + &b.coef;
                        if !s.is_zero() {
                            out.push(Term { mon: a.mon.clone(), pos: a.pos, coef: s });
                        }
                        i += 1;
                        j += 1;
                        next_g = g.terms.get(j).map(&mut scaled);
                    }
                },
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(next_g.take().unwrap());
                    j += 1;
                    next_g = g.terms.get(j).map(&mut scaled);
                }
                (None, None) => break,
            }
        }
        out
    }

    fn find_reducer<'a>(&self, t: &Term, basis: &'a [VPoly], skip: Option<usize>) -> Option<&'a VPoly> {
        basis.iter().enumerate().find_map(|(k, g)| {
            if Some(k) == skip || g.is_zero() {
                return None;
            }
            let l = g.lead();
            (l.pos == t.pos && l.mon.divides(&t.mon)).then_some(g)
        })
    }

    /// Full reduction of `f` by `basis` (monic leads), skipping index `skip`.
    pub fn reduce(&self, mut f: VPoly, basis: &[VPoly], skip: Option<usize>, budget: &mut Budget) -> Result<VPoly> {
        let mut i = 0;
        let mut steps = 0u64;
        while i < f.terms.len() {
            let t = &f.terms[i];
            match self.find_reducer(t, basis, skip) {
                Some(g) => {
                    let l = g.lead();
                    let m = l.mon.quotient_of(&t.mon);
                    let c = &t.coef / &l.coef;
                    let tail = self.sub_scaled(&f.terms[i..], &c, &m, g);
                    f.terms.truncate(i);
                    f.terms.extend(tail);
                    steps += 1;
                    if steps.is_multiple_of(64) {
                        budget.step(64)?;
                    }
                }
                None => i += 1,
            }
        }
        budget.step(steps % 64)?;
        Ok(f)
    }

    fn monic(&self, mut f: VPoly) -> VPoly {
        if let Some(l) = f.terms.first() {
            if !l.coef.is_one() {
                let inv = l.coef.recip();
                for t in &mut f.terms {
                    t.coef = &t.coef * &inv;
                }
            }
        }
        f
    }

    fn spoly(&self, f: &VPoly, g: &VPoly) -> VPoly {
        let (a, b) = (f.lead(), g.lead());
        let l = a.mon.lcm(&b.mon);
        let ma = a.mon.quotient_of(&l);
        let mb = b.mon.quotient_of(&l);
        let fa = VPoly {
            terms: f.terms.iter().map(|t| Term { mon: t.mon.mul(&ma), pos: t.pos, coef: &t.coef / &a.coef }).collect(),
        };
        let c = b.coef.recip();
        VPoly { terms: self.sub_scaled(&fa.terms, &c, &mb, g) }
    }

    /// Reduced Gröbner basis of the submodule generated by `gens`, sorted by
    /// descending leading term, every element monic.
    pub fn groebner(&self, gens: Vec<VPoly>, budget: &mut Budget) -> Result<Vec<VPoly>> {
        let mut basis: Vec<VPoly> = Vec::new();
        for g in gens {
            let r = self.reduce(g, &basis, None, budget)?;
            if !r.is_zero() {
                basis.push(self.monic(r));
            }
        }
        let mut heap: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
        let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
        let push_pairs = |basis: &Vec<VPoly>,
                          heap: &mut BinaryHeap<Reverse<(u64, usize, usize)>>,
                          pending: &mut BTreeSet<(usize, usize)>,
                          j: usize| {
            for i in 0..j {
                let (a, b) = (basis[i].lead(), basis[j].lead());
                if a.pos != b.pos {
                    continue;
                }
                if self.rank == 1 && a.mon.gcd_is_one(&b.mon) {
                    continue;
                }
                let d = a.mon.lcm(&b.mon).total_degree();
                heap.push(Reverse((d, j, i)));
                pending.insert((i, j));
            }
        };
        for j in 0..basis.len() {
            push_pairs(&basis, &mut heap, &mut pending, j);
        }
        budget.basis(basis.len())?;
        while let Some(Reverse((_, j, i))) = heap.pop() {
            pending.remove(&(i, j));
            if self.chain_skip(&basis, &pending, i, j) {
                continue;
            }
            let s = self.spoly(&basis[i], &basis[j]);
            let r = self.reduce(s, &basis, None, budget)?;
            if r.is_zero() {
                continue;
            }
            basis.push(self.monic(r));
            budget.basis(basis.len())?;
            let j = basis.len() - 1;
            push_pairs(&basis, &mut heap, &mut pending, j);
        }
        self.interreduce(basis, budget)
    }

    fn chain_skip(&self, basis: &[VPoly], pending: &BTreeSet<(usize, usize)>, i: usize, j: usize) -> bool {
        let (a, b) = (basis[i].lead(), basis[j].lead());
        let l = a.mon.lcm(&b.mon);
        let key = |x: usize, y: usize| if x < y { (x, y) } else { (y, x) };
        basis.iter().enumerate().any(|(k, g)| {
            k != i
                && k != j
                && g.lead().pos == a.pos
                && g.lead().mon.divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        })
    }

    fn interreduce(&self, basis: Vec<VPoly>, budget: &mut Budget) -> Result<Vec<VPoly>> {
        let mut keep: Vec<VPoly> = Vec::new();
        for (k, g) in basis.iter().enumerate() {
            let l = g.lead();
            let redundant = basis.iter().enumerate().any(|(m, h)| {
                let hl = h.lead();
                m != k && hl.pos == l.pos && hl.mon.divides(&l.mon) && (hl.mon != l.mon || m < k)
            });
            if !redundant {
                keep.push(g.clone());
            }
        }
        let mut out = Vec::with_capacity(keep.len());
        for k in 0..keep.len() {
            let r = self.reduce(keep[k].clone(), &keep, Some(k), budget)?;
            out.push(self.monic(r));
        }
        out.sort_by(|a, b| self.cmp(b.lead(), a.lead()));
        Ok(out)
    }
}
