//! Presented graded rings, ring maps between them, and the engine-backed
//! operations on maps: kernels, preimages, subalgebra membership and
//! isomorphism verdicts.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::engine::{elimination_ideal, simplify_presentation, GroebnerBasis};
use crate::error::{Error, Result};
use crate::poly::{parse_polynomial, Homogeneity, MonomialOrder, MultiDegree, Polynomial, WeightSystem};

/// `k[x_1..x_n]/I` with a `Z^d` weight per variable.
///
/// Every relation is homogeneous for the weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRing {
    pub vars: Vec<String>,
    pub weights: WeightSystem,
    pub relations: Vec<Polynomial>,
}

impl GradedRing {
    pub fn new(vars: Vec<String>, weights: WeightSystem, relations: Vec<Polynomial>) -> Result<Self> {
        if vars.len() != weights.len() {
            return Err(Error::InvalidInput(format!("{} variables but {} weights", vars.len(), weights.len())));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable '{v}'")));
            }
        }
        let ring = GradedRing { vars, weights, relations: Vec::new() };
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            if r.nvars() != ring.nvars() {
                return Err(Error::VariableMismatch { left: ring.nvars(), right: r.nvars() });
            }
            ring.require_homogeneous(&r, "relation")?;
            if !r.is_zero() {
                rels.push(r);
            }
        }
        Ok(GradedRing { relations: rels, ..ring })
    }

    pub fn free(vars: Vec<String>, weights: WeightSystem) -> Result<Self> {
        Self::new(vars, weights, Vec::new())
    }

    /// Convenience constructor from names, weight rows and relation strings.
    pub fn from_strs(vars: &[&str], weights: &[&[i64]], relations: &[&str]) -> Result<Self> {
        let dim = weights.first().map_or(1, |w| w.len());
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let ws = WeightSystem::from_rows(dim, weights)?;
        let rels = relations.iter().map(|r| parse_polynomial(r, &names)).collect::<Result<Vec<_>>>()?;
        Self::new(names, ws, rels)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn dim(&self) -> usize {
        self.weights.dim()
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.nvars(), i)
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars())
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        parse_polynomial(s, &self.vars)
    }

    /// Canonical text (grevlex, descending).
    pub fn fmt(&self, p: &Polynomial) -> String {
        p.fmt_with(&self.vars, &MonomialOrder::grevlex())
    }

    pub fn fmt_all(&self, ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| self.fmt(p)).collect()
    }

    /// `k[x, y]/(x*y)` style summary.
    pub fn describe(&self) -> String {
        let mut s = format!("k[{}]", self.vars.join(","));
        if !self.relations.is_empty() {
            s.push_str("/(");
            s.push_str(&self.fmt_all(&self.relations).join(", "));
            s.push(')');
        }
        s
    }

    pub fn degree(&self, p: &Polynomial) -> Option<Homogeneity> {
        p.multidegree(&self.weights)
    }

    pub fn require_homogeneous(&self, p: &Polynomial, what: &str) -> Result<Homogeneity> {
        match p.multidegree(&self.weights) {
            Some(h) => Ok(h),
            None => {
                let degs: Vec<String> = p
                    .sorted_terms(&MonomialOrder::grevlex())
                    .iter()
                    .map(|(m, _)| format!("{}", self.weights.degree(m)))
                    .collect();
                Err(Error::Inhomogeneous {
                    what: format!("{what} {}", p.fmt_with(&self.vars, &MonomialOrder::grevlex())),
                    degrees: degs.join(", "),
                })
            }
        }
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree_of(&self, p: &Polynomial) -> Result<MultiDegree> {
        match self.require_homogeneous(p, "element")? {
            Homogeneity::Of(d) => Ok(d),
            Homogeneity::Any => Err(Error::InvalidInput("zero element has no degree".to_string())),
        }
    }

    pub fn relation_gb(&self, budget: &mut Budget) -> Result<GroebnerBasis> {
        GroebnerBasis::compute(self.nvars(), &self.relations, &MonomialOrder::grevlex(), budget)
    }

    /// Adds a variable `tag` of degree `-deg r` and the relation `r*tag - 1`.
    pub fn localize(&self, r: &Polynomial, tag: &str) -> Result<GradedRing> {
        let d = self.degree_of(r)?;
        let n = self.nvars();
        let mut vars = self.vars.clone();
        vars.push(tag.to_string());
        let mut weights = self.weights.clone();
        weights.push(-&d);
        let map: Vec<usize> = (0..n).collect();
        let mut rels: Vec<Polynomial> = self.relations.iter().map(|p| p.embed(n + 1, &map)).collect();
        let t = Polynomial::var(n + 1, n);
        rels.push(&(&r.embed(n + 1, &map) * &t) - &Polynomial::one(n + 1));
        GradedRing::new(vars, weights, rels)
    }

    /// Adds free variables with the given names and weights.
    pub fn adjoin(&self, names: &[String], weights: &[MultiDegree]) -> Result<GradedRing> {
        let n = self.nvars();
        let k = names.len();
        let mut vars = self.vars.clone();
        vars.extend(names.iter().cloned());
        let mut ws = self.weights.clone();
        for w in weights {
            ws.push(w.clone());
        }
        let map: Vec<usize> = (0..n).collect();
        let rels = self.relations.iter().map(|p| p.embed(n + k, &map)).collect();
        GradedRing::new(vars, ws, rels)
    }

    /// Quotient by extra homogeneous relations.
    pub fn quotient(&self, extra: &[Polynomial]) -> Result<GradedRing> {
        let mut rels = self.relations.clone();
        rels.extend(extra.iter().cloned());
        GradedRing::new(self.vars.clone(), self.weights.clone(), rels)
    }

    /// Embeds an element into a ring whose first variables are these.
    pub fn embed_into(&self, p: &Polynomial, nvars: usize, offset: usize) -> Polynomial {
        let map: Vec<usize> = (0..self.nvars()).map(|i| i + offset).collect();
        p.embed(nvars, &map)
    }

    /// Presentation with linearly solvable generators removed, and the
    /// isomorphism from this ring onto it.
    pub fn simplify(&self, budget: &mut Budget) -> Result<(GradedRing, RingMap)> {
        let s = simplify_presentation(self.nvars(), &self.relations, budget)?;
        let vars: Vec<String> = s.kept.iter().map(|&i| self.vars[i].clone()).collect();
        let ws = WeightSystem::new(self.dim(), s.kept.iter().map(|&i| self.weights.weight(i).clone()).collect())?;
        let ring = GradedRing::new(vars, ws, s.relations)?;
        let map = RingMap::new(self.clone(), ring.clone(), s.substitution)?;
        Ok((ring, map))
    }

    /// True when `p` lies in the presentation ideal.
    pub fn is_zero(&self, p: &Polynomial, budget: &mut Budget) -> Result<bool> {
        self.relation_gb(budget)?.contains(p, budget)
    }

    /// Same ring with a different weight system.
    pub fn regraded(&self, weights: WeightSystem) -> Result<GradedRing> {
        GradedRing::new(self.vars.clone(), weights, self.relations.clone())
    }
}

/// Ring homomorphism given by the images of the source generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    pub source: GradedRing,
    pub target: GradedRing,
    pub images: Vec<Polynomial>,
}

/// Outcome of an isomorphism test for a ring map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoVerdict {
    pub injective: bool,
    pub surjective: bool,
    /// First kernel generator not in the source ideal, in normal form.
    pub kernel_witness: Option<Polynomial>,
    /// Kernel generators (reduced basis, source variables).
    pub kernel: Vec<Polynomial>,
    /// Target generators without a preimage.
    pub missing: Vec<usize>,
    /// A preimage per target generator when it exists.
    pub preimages: Vec<Option<Polynomial>>,
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        self.injective && self.surjective
    }
}

impl RingMap {
    pub fn new(source: GradedRing, target: GradedRing, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::InvalidInput(format!(
                "{} images for {} source generators",
                images.len(),
                source.nvars()
            )));
        }
        if let Some(p) = images.iter().find(|p| p.nvars() != target.nvars()) {
            return Err(Error::VariableMismatch { left: target.nvars(), right: p.nvars() });
        }
        Ok(RingMap { source, target, images })
    }

    pub fn identity(r: &GradedRing) -> Self {
        let images = (0..r.nvars()).map(|i| r.var(i)).collect();
        RingMap { source: r.clone(), target: r.clone(), images }
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        p.substitute(&self.images, self.target.nvars())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RingMap) -> Result<RingMap> {
        let images = self.images.iter().map(|p| other.apply(p)).collect::<Result<Vec<_>>>()?;
        RingMap::new(self.source.clone(), other.target.clone(), images)
    }

    /// Every source relation maps into the target ideal.
    pub fn is_well_defined(&self, budget: &mut Budget) -> Result<bool> {
        let gb = self.target.relation_gb(budget)?;
        for r in &self.source.relations {
            if !gb.contains(&self.apply(r)?, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Images are homogeneous of their generators' degrees (weight
    /// dimensions must agree).
    pub fn is_graded(&self) -> bool {
        if self.source.dim() != self.target.dim() {
            return false;
        }
        self.images.iter().enumerate().all(|(i, p)| match p.multidegree(&self.target.weights) {
            Some(Homogeneity::Any) => true,
            Some(Homogeneity::Of(d)) => &d == self.source.weights.weight(i),
            None => false,
        })
    }

    /// Combined ring `target ++ source` with the graph relations.
    fn graph(&self) -> (usize, usize, Vec<Polynomial>) {
        let m = self.target.nvars();
        let n = self.source.nvars();
        let tot = m + n;
        let tmap: Vec<usize> = (0..m).collect();
        let smap: Vec<usize> = (m..tot).collect();
        let mut gens: Vec<Polynomial> = self.target.relations.iter().map(|p| p.embed(tot, &tmap)).collect();
        gens.extend(self.source.relations.iter().map(|p| p.embed(tot, &smap)));
        for (i, img) in self.images.iter().enumerate() {
            gens.push(&Polynomial::var(tot, m + i) - &img.embed(tot, &tmap));
        }
        (m, n, gens)
    }

    /// Kernel as an ideal of the free source ring (contains the source
    /// relations); reduced grevlex basis.
    pub fn kernel(&self, budget: &mut Budget) -> Result<Vec<Polynomial>> {
        self.preimage(&[], budget)
    }

    /// `f^{-1}(J)` for `J` given by generators in the target; contains the
    /// kernel.
    pub fn preimage(&self, j: &[Polynomial], budget: &mut Budget) -> Result<Vec<Polynomial>> {
        let (m, n, mut gens) = self.graph();
        let tot = m + n;
        let tmap: Vec<usize> = (0..m).collect();
        gens.extend(j.iter().map(|p| p.embed(tot, &tmap)));
        let keep: Vec<bool> = (0..tot).map(|i| i >= m).collect();
        let elim = elimination_ideal(tot, &gens, &keep, budget)?;
        let idx: Vec<usize> = (m..tot).collect();
        let mut out: Vec<Polynomial> = elim.iter().map(|p| p.restrict(&idx).expect("eliminated")).collect();
        let gb = GroebnerBasis::compute(n, &out, &MonomialOrder::grevlex(), budget)?;
        out = gb.polynomials();
        Ok(out)
    }

    /// Kernel generators that are nonzero in the source quotient, as normal
    /// forms modulo the source relations.
    pub fn kernel_in_quotient(&self, budget: &mut Budget) -> Result<Vec<Polynomial>> {
        let ker = self.kernel(budget)?;
        let gb = self.source.relation_gb(budget)?;
        let mut out = Vec::new();
        for k in ker {
            let r = gb.reduce(&k, budget)?;
            if !r.is_zero() {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Injectivity by kernel computation and surjectivity by expressing each
    /// target generator through the images.
    pub fn iso_check(&self, budget: &mut Budget) -> Result<IsoVerdict> {
        let kernel = self.kernel_in_quotient(budget)?;
        let sub = Subalgebra::new(&self.target, &self.images, budget)?;
        let mut preimages = Vec::new();
        let mut missing = Vec::new();
        for i in 0..self.target.nvars() {
            let e = sub.express(&self.target.var(i), budget)?;
            if e.is_none() {
                missing.push(i);
            }
            preimages.push(e);
        }
        Ok(IsoVerdict {
            injective: kernel.is_empty(),
            surjective: missing.is_empty(),
            kernel_witness: kernel.first().cloned(),
            kernel,
            missing,
            preimages,
        })
    }
}

/// The subalgebra of a presented ring generated by given elements, ready for
/// membership queries.
#[derive(Debug, Clone)]
pub struct Subalgebra {
    ambient: usize,
    ntags: usize,
    gb: GroebnerBasis,
}

impl Subalgebra {
    pub fn new(ambient: &GradedRing, gens: &[Polynomial], budget: &mut Budget) -> Result<Self> {
        let m = ambient.nvars();
        let k = gens.len();
        let tot = m + k;
        let amap: Vec<usize> = (0..m).collect();
        let mut ideal: Vec<Polynomial> = ambient.relations.iter().map(|p| p.embed(tot, &amap)).collect();
        for (j, g) in gens.iter().enumerate() {
            ideal.push(&Polynomial::var(tot, m + j) - &g.embed(tot, &amap));
        }
        let elim: Vec<bool> = (0..tot).map(|i| i < m).collect();
        let order = MonomialOrder::elimination(tot, &elim);
        let gb = GroebnerBasis::compute(tot, &ideal, &order, budget)?;
        Ok(Subalgebra { ambient: m, ntags: k, gb })
    }

    /// A polynomial in the generators (variable `j` = generator `j`) equal
    /// to `f` in the ambient ring, or `None` when `f` is not in the
    /// subalgebra.
    pub fn express(&self, f: &Polynomial, budget: &mut Budget) -> Result<Option<Polynomial>> {
        let m = self.ambient;
        let tot = m + self.ntags;
        let amap: Vec<usize> = (0..m).collect();
        let r = self.gb.reduce(&f.embed(tot, &amap), budget)?;
        let idx: Vec<usize> = (m..tot).collect();
        Ok(r.restrict(&idx))
    }
}

/// Membership of `f` in the subalgebra generated by `gens` inside `ambient`.
pub fn subalgebra_membership(
    f: &Polynomial,
    gens: &[Polynomial],
    ambient: &GradedRing,
    budget: &mut Budget,
) -> Result<Option<Polynomial>> {
    Subalgebra::new(ambient, gens, budget)?.express(f, budget)
}

pub fn ring_map_kernel(f: &RingMap, budget: &mut Budget) -> Result<Vec<Polynomial>> {
    f.kernel(budget)
}

pub fn ideal_preimage(f: &RingMap, j: &[Polynomial], budget: &mut Budget) -> Result<Vec<Polynomial>> {
    f.preimage(j, budget)
}
