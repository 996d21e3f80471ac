use alloc::vec::Vec;
use core::cmp::Ordering;

use super::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GrevLex,
    /// Consecutive blocks of the given sizes, compared lexicographically by
    /// block, grevlex inside each block. Sizes must sum to the variable count.
    Block(Vec<usize>),
}

/// A monomial order, optionally applied after permuting variables.
///
/// With `perm = Some(p)`, position `k` of the compared vector is variable
/// `p[k]`; position 0 is the most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub perm: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: None }
    }

    pub fn grevlex() -> Self {
        MonomialOrder { kind: OrderKind::GrevLex, perm: None }
    }

    pub fn block(sizes: Vec<usize>) -> Self {
        MonomialOrder { kind: OrderKind::Block(sizes), perm: None }
    }

    /// Elimination order on `nvars` variables: the `eliminate` set forms the
    /// dominant block, the rest the second block; original relative order is
    /// kept inside each block.
    pub fn elimination(nvars: usize, eliminate: &[bool]) -> Self {
        let mut perm: Vec<usize> = (0..nvars).filter(|&i| eliminate[i]).collect();
        let k = perm.len();
        perm.extend((0..nvars).filter(|&i| !eliminate[i]));
        MonomialOrder { kind: OrderKind::Block(alloc::vec![k, nvars - k]), perm: Some(perm) }
    }

    pub fn with_perm(mut self, perm: Vec<usize>) -> Self {
        self.perm = Some(perm);
        self
    }

    #[inline]
    fn at(&self, m: &Monomial, k: usize) -> u32 {
        match &self.perm {
            Some(p) => m.0[p[k]],
            None => m.0[k],
        }
    }

    fn grevlex_range(&self, a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
        let da: u64 = (lo..hi).map(|k| self.at(a, k) as u64).sum();
        let db: u64 = (lo..hi).map(|k| self.at(b, k) as u64).sum();
        if da != db {
            return da.cmp(&db);
        }
        for k in (lo..hi).rev() {
            let (x, y) = (self.at(a, k), self.at(b, k));
            if x != y {
                return y.cmp(&x);
            }
        }
        Ordering::Equal
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.0.len();
        match &self.kind {
            OrderKind::Lex => {
                for k in 0..n {
                    let (x, y) = (self.at(a, k), self.at(b, k));
                    if x != y {
                        return x.cmp(&y);
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => self.grevlex_range(a, b, 0, n),
            OrderKind::Block(sizes) => {
                let mut lo = 0;
                for s in sizes {
                    let hi = (lo + s).min(n);
                    let c = self.grevlex_range(a, b, lo, hi);
                    if c != Ordering::Equal {
                        return c;
                    }
                    lo = hi;
                }
                if lo < n {
                    return self.grevlex_range(a, b, lo, n);
                }
                Ordering::Equal
            }
        }
    }

    /// Position-over-term comparison for free-module terms: a smaller
    /// position index is larger.
    pub fn compare_pot(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        match b.1.cmp(&a.1) {
            Ordering::Equal => self.compare(a.0, b.0),
            o => o,
        }
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}
