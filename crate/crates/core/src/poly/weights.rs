use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use super::Monomial;
use crate::error::{Error, Result};

/// An element of `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn zero(dim: usize) -> Self {
        MultiDegree(alloc::vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        MultiDegree(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &MultiDegree {
    type Output = MultiDegree;
    fn add(self, o: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &MultiDegree {
    type Output = MultiDegree;
    fn sub(self, o: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &MultiDegree {
    type Output = MultiDegree;
    fn neg(self) -> MultiDegree {
        MultiDegree(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Per-variable degrees in a common `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    dim: usize,
    weights: Vec<MultiDegree>,
}

impl WeightSystem {
    pub fn new(dim: usize, weights: Vec<MultiDegree>) -> Result<Self> {
        if let Some(w) = weights.iter().find(|w| w.dim() != dim) {
            return Err(Error::InvalidInput(alloc::format!(
                "weight {w} has dimension {} but the system has dimension {dim}",
                w.dim()
            )));
        }
        Ok(WeightSystem { dim, weights })
    }

    /// One-dimensional weights.
    pub fn scalar(ws: &[i64]) -> Self {
        WeightSystem { dim: 1, weights: ws.iter().map(|&w| MultiDegree(alloc::vec![w])).collect() }
    }

    pub fn from_rows(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(dim, rows.iter().map(|r| MultiDegree(r.to_vec())).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, i: usize) -> &MultiDegree {
        &self.weights[i]
    }

    pub fn weights(&self) -> &[MultiDegree] {
        &self.weights
    }

    /// Scalar weight of variable `i` in a one-dimensional system.
    pub fn scalar_weight(&self, i: usize) -> i64 {
        self.weights[i].0[0]
    }

    pub fn degree(&self, m: &Monomial) -> MultiDegree {
        let mut d = alloc::vec![0i64; self.dim];
        for (i, &e) in m.exponents().iter().enumerate() {
            if e != 0 {
                for (k, c) in self.weights[i].0.iter().enumerate() {
                    d[k] += c * e as i64;
                }
            }
        }
        MultiDegree(d)
    }

    pub fn push(&mut self, w: MultiDegree) {
        debug_assert_eq!(w.dim(), self.dim);
        self.weights.push(w);
    }

    /// Concatenation of two systems of equal dimension.
    pub fn concat(&self, other: &WeightSystem) -> WeightSystem {
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().cloned());
        WeightSystem { dim: self.dim, weights }
    }

    pub fn project(&self, coord: usize) -> WeightSystem {
        WeightSystem::scalar(&self.weights.iter().map(|w| w.0[coord]).collect::<Vec<_>>())
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.weights.iter().map(|w| alloc::format!("{w}")).collect();
        parts.join(" ")
    }
}
