//! Koszul dg-algebra models for complete intersections, the derived kernel
//! `Q_der`, the derived version of Property P, the cone `S_der` and the
//! idempotence checks for the node.
//!
//! Sign rule: odd generators anticommute and
//! `d(ab) = d(a) b + (-1)^|a| a d(b)`; on the wedge basis this is the
//! Koszul differential of `koszul_complex`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::engine::{module_groebner, ChainComplex, GroebnerBasis, SubmodulePresentation};
use crate::equivariant::{laurent_ring, q_present, QPresentation};
use crate::error::{Error, Result};
use crate::homological::{koszul_complex, rho_map};
use crate::linalg::rank;
use crate::poly::{Coeff, Homogeneity, Monomial, MonomialOrder, MultiDegree, Polynomial, WeightSystem};
use crate::ring::{GradedRing, IsoVerdict, RingMap, Subalgebra};

/// Exterior generator of homological degree 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddGenerator {
    pub name: String,
    pub weight: MultiDegree,
    pub d: Polynomial,
}

/// `base<e_1, ..., e_c>` with `d(e_i)` in the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DGAlgebra {
    pub base: GradedRing,
    pub odd: Vec<OddGenerator>,
}

/// Homology in one homological degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyEntry {
    pub index: usize,
    pub vanishes: bool,
    pub classes: Vec<String>,
}

impl DGAlgebra {
    pub fn differentials(&self) -> Vec<Polynomial> {
        self.odd.iter().map(|g| g.d.clone()).collect()
    }

    /// Underlying complex on the wedge basis.
    pub fn complex(&self) -> Result<ChainComplex> {
        koszul_complex(&self.base, &self.differentials())
    }

    pub fn d_squared_zero(&self, budget: &mut Budget) -> Result<bool> {
        self.complex()?.d_squared_zero(budget)
    }

    /// `d(e)` is homogeneous of the weight of `e`.
    pub fn weights_preserved(&self) -> bool {
        self.odd.iter().all(|g| match g.d.multidegree(&self.base.weights) {
            Some(Homogeneity::Any) => true,
            Some(Homogeneity::Of(w)) => w == g.weight,
            None => false,
        })
    }

    /// `H_0 = base/(d e_1, ..., d e_c)`.
    pub fn h0(&self) -> Result<GradedRing> {
        self.base.quotient(&self.differentials())
    }

    pub fn describe(&self) -> String {
        let mut s = format!("k[{}]", self.base.vars.join(","));
        if !self.base.relations.is_empty() {
            s.push_str(&format!("/({})", self.base.fmt_all(&self.base.relations).join(", ")));
        }
        if !self.odd.is_empty() {
            let names: Vec<&str> = self.odd.iter().map(|g| g.name.as_str()).collect();
            s.push_str(&format!("<{}>", names.join(",")));
            for g in &self.odd {
                s.push_str(&format!(", d({}) = {}", g.name, self.base.fmt(&g.d)));
            }
        }
        s
    }
}

/// `H_0 .. H_bound`; degrees above the number of odd generators vanish.
pub fn dg_homology(a: &DGAlgebra, bound: usize, budget: &mut Budget) -> Result<Vec<HomologyEntry>> {
    let c = a.complex()?;
    let mut out = Vec::with_capacity(bound + 1);
    for i in 0..=bound {
        if i as i64 > c.hi() {
            out.push(HomologyEntry { index: i, vanishes: true, classes: Vec::new() });
            continue;
        }
        let h = c.homology(i as i64, budget)?;
        let classes = h
            .surviving
            .iter()
            .map(|v| format!("({})", v.iter().map(|p| a.base.fmt(p)).collect::<Vec<_>>().join(", ")))
            .collect();
        out.push(HomologyEntry { index: i, vanishes: h.is_zero(), classes });
    }
    Ok(out)
}

/// The free ring on the variables of `r`.
fn free_cover(r: &GradedRing) -> Result<GradedRing> {
    GradedRing::free(r.vars.clone(), r.weights.clone())
}

fn odd_name(k: usize, c: usize) -> String {
    if c == 1 {
        "e".to_string()
    } else {
        format!("e{}", k + 1)
    }
}

/// Koszul model `k[x]<e_i>`, `d(e_i) = f_i`, after certifying that the
/// Koszul complex on the relations is acyclic in positive degrees.
pub fn ci_cofibrant_replacement(r: &GradedRing, budget: &mut Budget) -> Result<DGAlgebra> {
    let base = free_cover(r)?;
    let c = r.relations.len();
    let mut odd = Vec::with_capacity(c);
    for (k, f) in r.relations.iter().enumerate() {
        let weight = r.degree_of(f)?;
        odd.push(OddGenerator { name: odd_name(k, c), weight, d: f.clone() });
    }
    let dga = DGAlgebra { base, odd };
    let cx = dga.complex()?;
    for i in 1..=c {
        if !cx.homology(i as i64, budget)?.is_zero() {
            return Err(Error::InvalidInput(format!("relations are not a regular sequence: Koszul H_{i} is nonzero")));
        }
    }
    Ok(dga)
}

/// Which copy of `Q` an odd generator of `Q_der` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `p(e)`, for relations of weight `>= 0`.
    P,
    /// `s(e)`, for relations of weight `< 0`.
    S,
}

/// `Q_der(R) = Q(k[x])<eps_i>` for a complete intersection `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QDer {
    pub resolution: DGAlgebra,
    /// `Q` of the free cover.
    pub cover: QPresentation,
    pub dga: DGAlgebra,
    pub sides: Vec<Side>,
}

pub fn q_der(r: &GradedRing, budget: &mut Budget) -> Result<QDer> {
    let resolution = ci_cofibrant_replacement(r, budget)?;
    let cover = q_present(&resolution.base, budget)?;
    let mut odd = Vec::new();
    let mut sides = Vec::new();
    for g in &resolution.odd {
        let w = g.weight.0[0];
        let (d, weight, side) = if w >= 0 {
            (cover.p.apply(&g.d)?, MultiDegree(vec![w, 0]), Side::P)
        } else {
            (cover.s.apply(&g.d)?, MultiDegree(vec![0, w]), Side::S)
        };
        odd.push(OddGenerator { name: g.name.clone(), weight, d });
        sides.push(side);
    }
    let dga = DGAlgebra { base: cover.q.clone(), odd };
    Ok(QDer { resolution, cover, dga, sides })
}

impl QDer {
    /// The natural map `H_0(Q_der) -> Q(R)`, identity on generators.
    pub fn h0_to_q(&self, r: &GradedRing, budget: &mut Budget) -> Result<(RingMap, IsoVerdict)> {
        let q = q_present(r, budget)?;
        let h0 = self.dga.h0()?;
        let images = (0..h0.nvars()).map(|i| q.q.var(i)).collect();
        let map = RingMap::new(h0, q.q, images)?;
        let v = map.iso_check(budget)?;
        Ok((map, v))
    }
}

/// Homology comparison for `rho` extended to the dg level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyPderReport {
    pub source: DGAlgebra,
    pub target: DGAlgebra,
    /// `rho` on the degree-zero base.
    pub base_iso: IsoVerdict,
    /// `rho(d eps) = d eps`.
    pub compatible: bool,
    pub h0_iso: IsoVerdict,
    /// `(i, source H_i vanishes, target H_i vanishes)`.
    pub table: Vec<(usize, bool, bool)>,
    pub has_p_der: bool,
}

/// `(Q_der ⊗_S Q_der)_0 -> Q_der` through `bound`.
pub fn beta_check(r: &GradedRing, bound: usize, budget: &mut Budget) -> Result<PropertyPderReport> {
    let qd = q_der(r, budget)?;
    let cover = &qd.cover;
    let rho = rho_map(cover, budget)?;
    let m = cover.q.nvars();
    let tot = 2 * m;
    let left: Vec<usize> = (0..m).collect();
    let right: Vec<usize> = (m..tot).collect();
    let zp = &rho.zero_part;
    let sub = Subalgebra::new(&rho.simplified, &zp.inclusion.images, budget)?;
    let mut odd = Vec::with_capacity(qd.resolution.odd.len());
    for (g, side) in qd.resolution.odd.iter().zip(&qd.sides) {
        // One odd generator survives the identification s_L(e) = p_R(e):
        // the left one when p is used, the right one when s is.
        let t = match side {
            Side::P => cover.p.apply(&g.d)?.embed(tot, &left),
            Side::S => cover.s.apply(&g.d)?.embed(tot, &right),
        };
        let ts = rho.to_simplified.apply(&t)?;
        let Some(d) = sub.express(&ts, budget)? else {
            return Err(Error::Inconsistent(format!("d({}) leaves the degree-zero subring", g.name)));
        };
        let w = zp.ring.degree_of(&d).unwrap_or_else(|_| MultiDegree::zero(2));
        odd.push(OddGenerator { name: g.name.clone(), weight: w, d });
    }
    let source = DGAlgebra { base: zp.ring.clone(), odd };
    let target = qd.dga.clone();
    let base_iso = rho.rho.iso_check(budget)?;
    let qgb = target.base.relation_gb(budget)?;
    let mut compatible = true;
    for (s, t) in source.odd.iter().zip(&target.odd) {
        compatible &= qgb.contains(&(&rho.rho.apply(&s.d)? - &t.d), budget)?;
    }
    let h0_map = RingMap::new(source.h0()?, target.h0()?, rho.rho.images.clone())?;
    let h0_iso = h0_map.iso_check(budget)?;
    let hs = dg_homology(&source, bound, budget)?;
    let ht = dg_homology(&target, bound, budget)?;
    let table: Vec<(usize, bool, bool)> = hs.iter().zip(&ht).map(|(a, b)| (a.index, a.vanishes, b.vanishes)).collect();
    let has_p_der = base_iso.is_iso() && compatible && h0_iso.is_iso() && table.iter().skip(1).all(|&(_, a, b)| a == b);
    Ok(PropertyPderReport { source, target, base_iso, compatible, h0_iso, table, has_p_der })
}

/// Exponent vectors of the given weights with value `target`. Coordinate
/// `filt` must be nonnegative on every variable; variables where it is zero
/// get exponents up to `free_bound`.
pub fn enumerate_cell(weights: &[MultiDegree], target: &[i64], filt: usize, free_bound: u32) -> Vec<Vec<u32>> {
    fn go(
        weights: &[MultiDegree],
        target: &[i64],
        filt: usize,
        free_bound: u32,
        cur: &mut Vec<u32>,
        acc: &mut Vec<i64>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let k = cur.len();
        if k == weights.len() {
            if acc.as_slice() == target {
                out.push(cur.clone());
            }
            return;
        }
        let wf = weights[k].0[filt];
        let cap = if wf > 0 { ((target[filt] - acc[filt]).max(0) / wf) as u32 } else { free_bound };
        for e in 0..=cap {
            cur.push(e);
            for (a, w) in acc.iter_mut().zip(&weights[k].0) {
                *a += w * e as i64;
            }
            go(weights, target, filt, free_bound, cur, acc, out);
            for (a, w) in acc.iter_mut().zip(&weights[k].0) {
                *a -= w * e as i64;
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weights, target, filt, free_bound, &mut Vec::new(), &mut vec![0; target.len()], &mut out);
    out
}

/// Standard monomials of a (grevlex) Gröbner basis in one fine cell.
pub fn standard_monomials(
    gb: &GroebnerBasis,
    weights: &[MultiDegree],
    target: &[i64],
    filt: usize,
    free_bound: u32,
) -> Vec<Monomial> {
    let leads: Vec<Monomial> = gb.leading_terms().into_iter().map(|(m, _)| m).collect();
    enumerate_cell(weights, target, filt, free_bound)
        .into_iter()
        .map(Monomial::from_exponents)
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect()
}

/// Dimensions in the cell `(a, b, N)`: `Z^2` degree and polynomial degree
/// in the variables of `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeCell {
    pub degree: (i64, i64, i64),
    pub q_der_h0: usize,
    pub delta: usize,
    pub cone_h0: usize,
    pub cone_h1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeReport {
    pub q_der_higher_vanish: bool,
    /// Generators of `ker(H_0 Q_der -> R[u, u^-1]) = H_1(cone)`.
    pub kernel: Vec<String>,
    pub cells: Vec<ConeCell>,
    /// Kernel dimension by elimination equals the one by linear algebra in
    /// every cell.
    pub les_ok: bool,
}

impl ConeReport {
    pub fn h1_nonzero(&self) -> bool {
        !self.kernel.is_empty()
    }

    pub fn h0_nonzero(&self) -> bool {
        self.cells.iter().any(|c| c.cone_h0 > 0)
    }
}

/// Homology of `cone(Q_der -> R[u, u^-1])` from the long exact sequence:
/// `H_1 = ker H_0(eta)`, `H_0 = coker H_0(eta)`, tabulated on cells
/// `|a|, |b| <= window`, `0 <= N <= window`.
pub fn s_der_cone(r: &GradedRing, window: i64, budget: &mut Budget) -> Result<ConeReport> {
    for rel in &r.relations {
        if rel.terms().map(|(m, _)| m.total_degree()).collect::<alloc::collections::BTreeSet<_>>().len() > 1 {
            return Err(Error::InvalidInput("cone table needs relations homogeneous in total degree".to_string()));
        }
    }
    let qd = q_der(r, budget)?;
    let h = dg_homology(&qd.dga, qd.dga.odd.len().max(1), budget)?;
    let q_der_higher_vanish = h.iter().skip(1).all(|e| e.vanishes);
    let h0 = qd.dga.h0()?;
    let delta = laurent_ring(r)?;
    let n = r.nvars();
    let embed: Vec<usize> = (0..n + 2).collect();
    let images: Vec<Polynomial> = qd.cover.eta.images.iter().map(|p| p.embed(n + 2, &embed)).collect();
    let eta = RingMap::new(h0.clone(), delta.clone(), images)?;
    let kernel = eta.kernel_in_quotient(budget)?;

    let fine = |ring: &GradedRing, poly_deg: &dyn Fn(usize) -> i64| -> Vec<MultiDegree> {
        (0..ring.nvars())
            .map(|i| {
                let w = &ring.weights.weight(i).0;
                MultiDegree(vec![w[0], w[1], poly_deg(i)])
            })
            .collect()
    };
    let qw = fine(&h0, &|i| {
        eta.images[i].total_degree().unwrap_or(0) as i64
            - eta.images[i].degree_in(n) as i64
            - eta.images[i].degree_in(n + 1) as i64
    });
    let dw = fine(&delta, &|i| if i < n { 1 } else { 0 });
    let qgb = h0.relation_gb(budget)?;
    let mut with_ker = h0.relations.clone();
    with_ker.extend(kernel.iter().cloned());
    let kgb = GroebnerBasis::compute(h0.nvars(), &with_ker, &MonomialOrder::grevlex(), budget)?;
    let dgb = delta.relation_gb(budget)?;
    let maxd = (0..n).map(|i| r.weights.scalar_weight(i).abs()).max().unwrap_or(0);
    let mut cells = Vec::new();
    let mut les_ok = true;
    for a in -window..=window {
        for b in -window..=window {
            for nn in 0..=window {
                let t = [a, b, nn];
                let fb = (a.abs() + b.abs() + nn * (maxd + 1)) as u32;
                let qb = standard_monomials(&qgb, &qw, &t, 2, fb);
                let db = standard_monomials(&dgb, &dw, &t, 2, fb);
                if qb.is_empty() && db.is_empty() {
                    continue;
                }
                budget.step(1 + qb.len() as u64)?;
                let quotient = standard_monomials(&kgb, &qw, &t, 2, fb).len();
                let rows: Vec<Vec<Coeff>> = qb
                    .iter()
                    .map(|m| {
                        let img = dgb.nf(&eta.apply(&Polynomial::monomial(m.clone())).expect("sizes agree"));
                        db.iter().map(|s| img.coefficient(s)).collect()
                    })
                    .collect();
                let rk = if db.is_empty() { 0 } else { rank(&rows) };
                let ker_dim = qb.len() - rk;
                les_ok &= ker_dim == qb.len() - quotient;
                cells.push(ConeCell {
                    degree: (a, b, nn),
                    q_der_h0: qb.len(),
                    delta: db.len(),
                    cone_h0: db.len() - rk,
                    cone_h1: ker_dim,
                });
            }
        }
    }
    Ok(ConeReport { q_der_higher_vanish, kernel: h0.fmt_all(&kernel), cells, les_ok })
}

/// Graded module `(+) R(-c_k) / relations` over `k[x, y]` (node variables,
/// `deg x = 1`, `deg y = -1`); relations always include `xy e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeModule {
    /// Degrees of the generators.
    pub shifts: Vec<i64>,
    pub relations: Vec<Vec<Polynomial>>,
}

fn node_ring() -> GradedRing {
    GradedRing::from_strs(&["x", "y"], &[&[1], &[-1]], &[]).expect("valid")
}

impl NodeModule {
    /// Adds the `xy e_k` relations and drops repeated columns.
    pub fn new(shifts: Vec<i64>, mut relations: Vec<Vec<Polynomial>>) -> Self {
        let r = shifts.len();
        let xy = &Polynomial::var(2, 0) * &Polynomial::var(2, 1);
        for k in 0..r {
            let mut v = vec![Polynomial::zero(2); r];
            v[k] = xy.clone();
            relations.push(v);
        }
        let mut seen = Vec::with_capacity(relations.len());
        relations.retain(|c| {
            let new = !seen.contains(c);
            if new {
                seen.push(c.clone());
            }
            new
        });
        NodeModule { shifts, relations }
    }

    /// `R(i)`: one generator in degree `-i`.
    pub fn twist(i: i64) -> Self {
        Self::new(vec![-i], Vec::new())
    }

    /// `R/(v)(i)` for `v` = `x` (index 0) or `y` (index 1).
    pub fn quotient_twist(v: usize, i: i64) -> Self {
        Self::new(vec![-i], vec![vec![Polynomial::var(2, v)]])
    }

    fn column_degree(&self, col: &[Polynomial]) -> Option<i64> {
        let w = WeightSystem::scalar(&[1, -1]);
        col.iter().enumerate().find_map(|(k, p)| match p.multidegree(&w) {
            Some(Homogeneity::Of(d)) => Some(d.0[0] + self.shifts[k]),
            _ => None,
        })
    }

    pub fn gb(&self, budget: &mut Budget) -> Result<GroebnerBasis> {
        module_groebner(&SubmodulePresentation::new(2, self.shifts.len(), self.relations.clone()), &[], budget)
    }

    /// `dim M_d` for each `d` in `[lo, hi]`.
    pub fn dims(&self, lo: i64, hi: i64, budget: &mut Budget) -> Result<Vec<usize>> {
        let gb = self.gb(budget)?;
        let bound = (lo.abs().max(hi.abs()) + self.shifts.iter().map(|c| c.abs()).max().unwrap_or(0) + 1) as u32;
        let mut out = Vec::new();
        for d in lo..=hi {
            let mut count = 0;
            for (k, &c) in self.shifts.iter().enumerate() {
                for a in 0..=bound {
                    let b = a as i64 + c - d;
                    if b < 0 || b > bound as i64 {
                        continue;
                    }
                    let m = Monomial::from_exponents(vec![a, b as u32]);
                    if gb.is_standard(&m, k) {
                        count += 1;
                    }
                }
            }
            out.push(count);
        }
        Ok(out)
    }

    /// Same generator degrees and the same relation module.
    pub fn same_as(&self, other: &NodeModule, budget: &mut Budget) -> Result<bool> {
        if self.shifts != other.shifts {
            return Ok(false);
        }
        Ok(self.gb(budget)?.vectors() == other.gb(budget)?.vectors())
    }

    /// Only the `xy e_k` relations remain: a sum of twists of `R`.
    pub fn is_free(&self, budget: &mut Budget) -> Result<bool> {
        let free = NodeModule::new(self.shifts.clone(), Vec::new());
        self.same_as(&free, budget)
    }

    pub fn describe(&self) -> String {
        let r = node_ring();
        let gens: Vec<String> = self.shifts.iter().map(|c| format!("R({})", -c)).collect();
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|v| format!("({})", v.iter().map(|p| r.fmt(p)).collect::<Vec<_>>().join(", ")))
            .collect();
        format!("{} / <{}>", gens.join(" + "), rels.join(", "))
    }
}

/// `F_(a,*)` of `F = k[x, z, u]` is free over `k[xu, z]` on `x^a` (`a >= 0`)
/// or `u^-a`; exponents of `x` and `u`.
fn slice_generator(a: i64) -> (u32, u32) {
    if a >= 0 {
        (a as u32, 0)
    } else {
        (0, a.unsigned_abs() as u32)
    }
}

/// `Phi(M) = (F ⊗_{k[x,y]} M)_(0,*)` with `F = Q_der` of the node over its
/// free cover, `y -> zu`; `F` is free over `k[x, y]`, so the plain tensor
/// computes the derived one. The result is an `R`-module through
/// `x -> xu`, `y -> z`.
pub fn phi_node(m: &NodeModule) -> Result<NodeModule> {
    let shifts: Vec<i64> = m.shifts.iter().map(|&c| c.max(0)).collect();
    let mut relations = Vec::with_capacity(m.relations.len());
    for col in &m.relations {
        let Some(cd) = m.column_degree(col) else { continue };
        let (gx1, gu1) = slice_generator(-cd);
        let mut out = Vec::with_capacity(col.len());
        for (k, p) in col.iter().enumerate() {
            let (gx0, gu0) = slice_generator(-m.shifts[k]);
            let mut q = Polynomial::zero(2);
            for (mono, c) in p.terms() {
                let (i, l) = (mono.exponents()[0], mono.exponents()[1]);
                // x^i (zu)^l g1 / g0 = x^A z^l u^C with A = C.
                let ax = i as i64 + gx1 as i64 - gx0 as i64;
                let au = l as i64 + gu1 as i64 - gu0 as i64;
                if ax != au || ax < 0 {
                    return Err(Error::Inconsistent(format!("tensor term leaves k[xu, z]: x^{ax} u^{au}")));
                }
                q.add_term(Monomial::from_exponents(vec![ax as u32, l]), c.clone());
            }
            out.push(q);
        }
        if out.iter().any(|p| !p.is_zero()) {
            relations.push(out);
        }
    }
    Ok(NodeModule::new(shifts, relations))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SodEntry {
    pub label: String,
    pub input: NodeModule,
    pub output: NodeModule,
    pub idempotent: bool,
    /// `Phi(M) = M`.
    pub fixed: bool,
    /// `Phi(M)` is a sum of twists of `R`.
    pub output_free: bool,
    pub dims_in: Vec<usize>,
    pub dims_out: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SodReport {
    pub degree_window: (i64, i64),
    pub entries: Vec<SodEntry>,
}

impl SodReport {
    pub fn all_idempotent(&self) -> bool {
        self.entries.iter().all(|e| e.idempotent)
    }

    pub fn entry(&self, label: &str) -> Option<&SodEntry> {
        self.entries.iter().find(|e| e.label == label)
    }
}

/// `Phi` on `R(i)`, `R/x(i)`, `R/y(i)` for `i` in `twists`: idempotence by
/// presentation comparison and degreewise dimensions on `[-4, 4]`.
pub fn sod_check_node(twists: (i64, i64), budget: &mut Budget) -> Result<SodReport> {
    let (lo, hi) = (-4, 4);
    let mut entries = Vec::new();
    for i in twists.0..=twists.1 {
        for (label, m) in [
            (format!("R({i})"), NodeModule::twist(i)),
            (format!("R/x({i})"), NodeModule::quotient_twist(0, i)),
            (format!("R/y({i})"), NodeModule::quotient_twist(1, i)),
        ] {
            let out = phi_node(&m)?;
            let twice = phi_node(&out)?;
            let dims_out = out.dims(lo, hi, budget)?;
            let idempotent = twice.same_as(&out, budget)? && twice.dims(lo, hi, budget)? == dims_out;
            entries.push(SodEntry {
                label,
                fixed: out.same_as(&m, budget)?,
                output_free: out.is_free(budget)?,
                dims_in: m.dims(lo, hi, budget)?,
                dims_out,
                idempotent,
                input: m,
                output: out,
            });
        }
    }
    Ok(SodReport { degree_window: (lo, hi), entries })
}
