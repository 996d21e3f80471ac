use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Coeff, Monomial, MonomialOrder, MultiDegree, WeightSystem};
use crate::error::{Error, Result};

/// Degree information of a polynomial under a weight system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial is homogeneous of every degree.
    Any,
    Of(MultiDegree),
}

/// Sparse polynomial with exact rational coefficients.
///
/// No stored coefficient is zero; every monomial has length `nvars`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Coeff::from_integer(c.into()))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Coeff::one())
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Coeff::one())
    }

    /// Builds from terms, merging duplicates and dropping zeros.
    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in it {
            debug_assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Coeff)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check(&self, o: &Polynomial) -> Result<()> {
        if self.nvars != o.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: o.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        let mut r = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.try_mul(m2)?, c1 * c2);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            terms.insert(k.try_mul(m)?, c.clone());
        }
        Ok(Polynomial { nvars: self.nvars, terms })
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for variable `i`; all images share `target_nvars`.
    pub fn substitute(&self, images: &[Polynomial], target_nvars: usize) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: images.len() });
        }
        let mut cache: Vec<Vec<Polynomial>> = alloc::vec![Vec::new(); self.nvars];
        let mut out = Polynomial::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target_nvars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                if powers.is_empty() {
                    powers.push(Polynomial::one(target_nvars));
                }
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap().try_mul(&images[i])?;
                    powers.push(next);
                }
                t = t.try_mul(&powers[e as usize])?;
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    /// Renames variable `i` to `map[i]` inside a ring with `new_nvars` variables.
    pub fn embed(&self, new_nvars: usize, map: &[usize]) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = alloc::vec![0u32; new_nvars];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] += x;
            }
            terms.insert(Monomial(e), c.clone());
        }
        Polynomial { nvars: new_nvars, terms }
    }

    /// Inverse of [`Polynomial::embed`]: keeps only the listed variables.
    /// Returns `None` when some term uses a variable outside `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let used: u64 = keep.iter().map(|&i| m.0[i] as u64).sum();
            if used != m.total_degree() {
                return None;
            }
            terms.insert(Monomial(keep.iter().map(|&i| m.0[i]).collect()), c.clone());
        }
        Some(Polynomial { nvars: keep.len(), terms })
    }

    /// Terms in descending `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn multidegree(&self, w: &WeightSystem) -> Option<Homogeneity> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return Some(Homogeneity::Any) };
        let d = w.degree(first);
        for m in it {
            if w.degree(m) != d {
                return None;
            }
        }
        Some(Homogeneity::Of(d))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.uses_var(i)).collect()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &Coeff)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Canonical text under `order`, using `names` for the variables.
    pub fn fmt_with(&self, names: &[String], order: &MonomialOrder) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut first = true;
            if !a.is_one() || m.is_one() {
                let _ = write!(s, "{}", a.numer());
                if !a.denom().is_one() {
                    let _ = write!(s, "/{}", a.denom());
                }
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    s.push('*');
                }
                first = false;
                s.push_str(&names[i]);
                if e > 1 {
                    let _ = write!(s, "^{e}");
                }
            }
        }
        s
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        self.try_add(o).expect("polynomial sum")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self.try_sub(o).expect("polynomial difference")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        self.try_mul(o).expect("polynomial product")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, o: Polynomial) -> Polynomial {
        &self + &o
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, o: Polynomial) -> Polynomial {
        &self - &o
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, o: Polynomial) -> Polynomial {
        &self * &o
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
