//! Koszul complexes, degree-zero subrings, `Tor^R(Q_p, Q_s)`, the map
//! `rho : (Q ⊗_{s,p} Q)_0 -> Q` and the Property P verdict.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::engine::{
    free_resolution, ideal_equal, ChainComplex, FreeModule, FreeModuleElement, SubmodulePresentation, Subquotient,
};
use crate::equivariant::{q_present, QGen, QPresentation};
use crate::error::{Error, Result};
use crate::poly::{Homogeneity, Monomial, MultiDegree, Polynomial, WeightSystem};
use crate::ring::{GradedRing, IsoVerdict, RingMap, Subalgebra};

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Koszul complex on `seq` over `a`: `F_k` has basis `e_S`, `|S| = k`, in
/// lexicographic order, and `d(e_S) = sum_j (-1)^j f_{s_j} e_{S - s_j}`.
pub fn koszul_complex(a: &GradedRing, seq: &[Polynomial]) -> Result<ChainComplex> {
    let n = a.nvars();
    let mut degs = Vec::with_capacity(seq.len());
    for f in seq {
        if f.nvars() != n {
            return Err(Error::VariableMismatch { left: n, right: f.nvars() });
        }
        degs.push(match a.require_homogeneous(f, "Koszul element")? {
            Homogeneity::Of(d) => d,
            Homogeneity::Any => MultiDegree::zero(a.dim()),
        });
    }
    let m = seq.len();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=m).map(|k| combinations(m, k)).collect();
    let index: Vec<BTreeMap<Vec<usize>, usize>> =
        subsets.iter().map(|ss| ss.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
    let mut modules = Vec::with_capacity(m + 1);
    for ss in &subsets {
        let shifts = ss.iter().map(|s| s.iter().fold(MultiDegree::zero(a.dim()), |acc, &i| &acc + &degs[i])).collect();
        modules.push(FreeModule { rank: ss.len(), shifts: Some(shifts) });
    }
    let mut differentials = Vec::with_capacity(m);
    for k in 1..=m {
        let mut cols = Vec::with_capacity(subsets[k].len());
        for s in &subsets[k] {
            let mut v: FreeModuleElement = vec![Polynomial::zero(n); subsets[k - 1].len()];
            for (j, &sj) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(j);
                let row = index[k - 1][&rest];
                v[row] = if j % 2 == 0 { seq[sj].clone() } else { -&seq[sj] };
            }
            cols.push(v);
        }
        differentials.push(cols);
    }
    Ok(ChainComplex { nvars: n, relations: a.relations.clone(), lo: 0, modules, differentials })
}

/// Homology of a complex at index `i`.
pub fn homology(c: &ChainComplex, i: i64, budget: &mut Budget) -> Result<Subquotient> {
    c.homology(i, budget)
}

/// Minimal nonzero solutions `e in N^n` of `sum w_i e_i = 0`.
///
/// In a minimal solution the positive-weight part has total degree at most
/// `max |w_neg|` and the negative part at most `max w_pos`; enumeration
/// stops with `EnumerationCap` when `cap` is below that bound.
pub fn hilbert_basis(weights: &[i64], cap: Option<u32>) -> Result<Vec<Vec<u32>>> {
    let n = weights.len();
    let maxabs = weights.iter().map(|w| w.unsigned_abs()).max().unwrap_or(0) as u32;
    let cap = cap.unwrap_or((2 * maxabs * n as u32).max(1));
    let pos: Vec<usize> = (0..n).filter(|&i| weights[i] > 0).collect();
    let neg: Vec<usize> = (0..n).filter(|&i| weights[i] < 0).collect();
    let bound_pos = neg.iter().map(|&i| weights[i].unsigned_abs()).max().unwrap_or(0) as u32;
    let bound_neg = pos.iter().map(|&i| weights[i] as u64).max().unwrap_or(0) as u32;
    let needed = bound_pos.max(bound_neg);
    if cap < needed {
        return Err(Error::EnumerationCap { cap, needed });
    }
    let mut out: Vec<Vec<u32>> = Vec::new();
    for i in (0..n).filter(|&i| weights[i] == 0) {
        let mut e = vec![0u32; n];
        e[i] = 1;
        out.push(e);
    }
    if !pos.is_empty() && !neg.is_empty() {
        let side = |idx: &[usize], bound: u32| {
            let mut by_sum: BTreeMap<u64, Vec<Vec<u32>>> = BTreeMap::new();
            let mut cur = vec![0u32; idx.len()];
            enumerate_bounded(&mut cur, 0, bound, &mut |v| {
                let s: u64 = v.iter().zip(idx).map(|(&e, &i)| e as u64 * weights[i].unsigned_abs()).sum();
                if s > 0 {
                    by_sum.entry(s).or_default().push(v.to_vec());
                }
            });
            by_sum
        };
        let ps = side(&pos, bound_pos);
        let ns = side(&neg, bound_neg);
        let mut cands: Vec<Vec<u32>> = Vec::new();
        for (s, pv) in &ps {
            let Some(nv) = ns.get(s) else { continue };
            for a in pv {
                for b in nv {
                    let mut e = vec![0u32; n];
                    for (k, &i) in pos.iter().enumerate() {
                        e[i] = a[k];
                    }
                    for (k, &i) in neg.iter().enumerate() {
                        e[i] = b[k];
                    }
                    cands.push(e);
                }
            }
        }
        let minimal: Vec<Vec<u32>> = cands
            .iter()
            .filter(|c| !cands.iter().any(|d| d != *c && d.iter().zip(c.iter()).all(|(x, y)| x <= y)))
            .cloned()
            .collect();
        out.extend(minimal);
    }
    out.sort_by(|a, b| {
        let ta: u32 = a.iter().sum();
        let tb: u32 = b.iter().sum();
        ta.cmp(&tb).then_with(|| b.cmp(a))
    });
    Ok(out)
}

fn enumerate_bounded(cur: &mut Vec<u32>, k: usize, left: u32, f: &mut impl FnMut(&[u32])) {
    if k == cur.len() {
        f(cur);
        return;
    }
    for e in 0..=left {
        cur[k] = e;
        enumerate_bounded(cur, k + 1, left - e, f);
    }
    cur[k] = 0;
}

/// The subring of elements of middle degree zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeZeroSubring {
    /// Presented on the Hilbert-basis monomials, graded by the remaining
    /// coordinates.
    pub ring: GradedRing,
    pub inclusion: RingMap,
    pub generators: Vec<Monomial>,
}

fn monomial_name(vars: &[String], e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { vars[i].clone() } else { format!("{}e{k}", vars[i]) })
        .collect();
    parts.join("_")
}

/// Degree-zero part of `a` in coordinate `middle`.
pub fn degree_zero_part(
    a: &GradedRing,
    middle: usize,
    cap: Option<u32>,
    budget: &mut Budget,
) -> Result<DegreeZeroSubring> {
    if middle >= a.dim() {
        return Err(Error::InvalidInput(format!("coordinate {middle} outside grading of dimension {}", a.dim())));
    }
    let w: Vec<i64> = a.weights.weights().iter().map(|d| d.0[middle]).collect();
    let basis = hilbert_basis(&w, cap)?;
    let mut names = Vec::with_capacity(basis.len());
    let mut degs = Vec::with_capacity(basis.len());
    let mut images = Vec::with_capacity(basis.len());
    let mut generators = Vec::with_capacity(basis.len());
    for e in &basis {
        let m = Monomial::from_exponents(e.clone());
        let mut d = a.weights.degree(&m).0;
        d.remove(middle);
        let mut name = monomial_name(&a.vars, e);
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
        degs.push(MultiDegree(d));
        images.push(Polynomial::monomial(m.clone()));
        generators.push(m);
    }
    let free = GradedRing::new(names.clone(), WeightSystem::new(a.dim() - 1, degs.clone())?, Vec::new())?;
    let ker = RingMap::new(free, a.clone(), images.clone())?.kernel(budget)?;
    let ring = GradedRing::new(names, WeightSystem::new(a.dim() - 1, degs)?, ker)?;
    let inclusion = RingMap::new(ring.clone(), a.clone(), images)?;
    Ok(DegreeZeroSubring { ring, inclusion, generators })
}

/// `f_k = c v_k - h_k` with distinct variables `v_k` absent from every `h_j`
/// and from the ring relations: then the sequence is regular, being a
/// coordinate change followed by killing variables.
pub fn solving_sequence_certificate(a: &GradedRing, seq: &[Polynomial]) -> Option<Vec<usize>> {
    let n = a.nvars();
    let mut solved: Vec<usize> = Vec::with_capacity(seq.len());
    for f in seq {
        let v = (0..n).find(|&v| {
            if solved.contains(&v) {
                return false;
            }
            let lin = Monomial::var(n, v);
            f.terms().all(|(m, _)| m.exponents()[v] == 0 || *m == lin) && f.uses_var(v)
        })?;
        solved.push(v);
    }
    for (k, f) in seq.iter().enumerate() {
        for (j, &v) in solved.iter().enumerate() {
            if j != k && f.uses_var(v) {
                return None;
            }
        }
    }
    if a.relations.iter().any(|r| solved.iter().any(|&v| r.uses_var(v))) {
        return None;
    }
    Some(solved)
}

/// One row of the Tor table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorEntry {
    pub index: usize,
    pub vanishes: bool,
    /// Surviving cycle classes, rendered in the names of `C`.
    pub classes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorReport {
    /// `"koszul"` or `"resolution"`.
    pub route: &'static str,
    /// Vanishing for every `i > 0` certified by a regular sequence.
    pub certified_all: bool,
    pub entries: Vec<TorEntry>,
}

impl TorReport {
    pub fn all_vanish(&self) -> bool {
        self.entries.iter().all(|e| e.vanishes)
    }
}

/// `B = R ⊗ R[u]` (second copy primed) with the surjection onto `Q` given by
/// `p` on the first copy, `s` on the second and `u -> U`.
fn bimodule_cover(qp: &QPresentation) -> Result<RingMap> {
    let r = &qp.base;
    let n = r.nvars();
    let tot = 2 * n + 1;
    let mut vars = r.vars.clone();
    vars.extend(r.vars.iter().map(|v| format!("{v}'")));
    vars.push("u".to_string());
    let mut w: Vec<MultiDegree> = r.weights.weights().iter().map(|d| MultiDegree(vec![d.0[0], 0])).collect();
    w.extend(r.weights.weights().iter().map(|d| MultiDegree(vec![0, d.0[0]])));
    w.push(MultiDegree(vec![-1, 1]));
    let first: Vec<usize> = (0..n).collect();
    let second: Vec<usize> = (n..2 * n).collect();
    let mut rels: Vec<Polynomial> = r.relations.iter().map(|p| p.embed(tot, &first)).collect();
    rels.extend(r.relations.iter().map(|p| p.embed(tot, &second)));
    let b = GradedRing::new(vars, WeightSystem::new(2, w)?, rels)?;
    let mut images = qp.p.images.clone();
    images.extend(qp.s.images.iter().cloned());
    images.push(qp.u());
    RingMap::new(b, qp.q.clone(), images)
}

/// `C = Q ⊗ R[u]` and the base change `B -> C` sending the second copy of
/// `R` through `p` into `Q`.
fn base_change(qp: &QPresentation, b: &GradedRing) -> Result<RingMap> {
    let r = &qp.base;
    let n = r.nvars();
    let qm = qp.q.nvars();
    let tot = qm + n + 1;
    let mut vars = qp.q.vars.clone();
    vars.extend(r.vars.iter().cloned());
    vars.push("u".to_string());
    let mut w = qp.q.weights.weights().to_vec();
    w.extend(r.weights.weights().iter().map(|d| MultiDegree(vec![d.0[0], 0])));
    w.push(MultiDegree(vec![-1, 1]));
    let qmap: Vec<usize> = (0..qm).collect();
    let rmap: Vec<usize> = (qm..qm + n).collect();
    let mut rels: Vec<Polynomial> = qp.q.relations.iter().map(|p| p.embed(tot, &qmap)).collect();
    rels.extend(r.relations.iter().map(|p| p.embed(tot, &rmap)));
    // Only the Z grading by the first coordinate is needed downstream;
    // the second copy's degrees are carried by Q.
    let c = GradedRing::new(vars, WeightSystem::new(2, w)?, rels)?;
    let mut images: Vec<Polynomial> = (0..n).map(|i| c.var(qm + i)).collect();
    images.extend(qp.p.images.iter().map(|p| p.embed(tot, &qmap)));
    images.push(c.var(tot - 1));
    RingMap::new(b.clone(), c, images)
}

fn tensor_complex(c: &ChainComplex, f: &RingMap) -> Result<ChainComplex> {
    let mut differentials = Vec::with_capacity(c.differentials.len());
    for cols in &c.differentials {
        let mut out = Vec::with_capacity(cols.len());
        for v in cols {
            out.push(v.iter().map(|p| f.apply(p)).collect::<Result<Vec<_>>>()?);
        }
        differentials.push(out);
    }
    Ok(ChainComplex {
        nvars: f.target.nvars(),
        relations: f.target.relations.clone(),
        lo: c.lo,
        modules: c.modules.iter().map(|m| FreeModule { rank: m.rank, shifts: None }).collect(),
        differentials,
    })
}

fn render_vector(ring: &GradedRing, v: &[Polynomial]) -> String {
    let parts: Vec<String> = v.iter().map(|p| ring.fmt(p)).collect();
    format!("({})", parts.join(", "))
}

/// `Tor_i^R(Q_p, Q_s)` for `1 <= i <= bound`: resolve `Q` over `B`, base
/// change along `B -> C` (flat over the second copy of `R`) and take
/// homology. When `Q = B/J` for an explicit solving sequence that stays a
/// solving sequence in `C`, the Koszul complex is used and vanishing holds
/// in all degrees.
pub fn tor_bimodule(qp: &QPresentation, bound: usize, budget: &mut Budget) -> Result<TorReport> {
    if bound == 0 {
        return Err(Error::InvalidInput("tor bound must be at least 1".to_string()));
    }
    let r = &qp.base;
    let n = r.nvars();
    let cover = bimodule_cover(qp)?;
    let b = cover.source.clone();
    let bc = base_change(qp, &b)?;
    let bn = b.nvars();
    let uu = b.var(bn - 1);
    // y_i - x_i u^d for d >= 0, x_i - y_i u^|d| for d < 0.
    let mut explicit = Vec::with_capacity(n);
    for i in 0..n {
        let d = r.weights.scalar_weight(i);
        let (x, y) = (b.var(i), b.var(n + i));
        let upow = uu.pow(d.unsigned_abs() as u32)?;
        explicit.push(if d >= 0 { &y - &(&x * &upow) } else { &x - &(&y * &upow) });
    }
    let kernel = cover.kernel(budget)?;
    let mut with_rels = explicit.clone();
    with_rels.extend(b.relations.iter().cloned());
    let is_full = ideal_equal(bn, &with_rels, &kernel, budget)?;
    let images: Vec<Polynomial> = explicit.iter().map(|p| bc.apply(p)).collect::<Result<_>>()?;
    let certified = is_full
        && solving_sequence_certificate(&b, &explicit).is_some()
        && solving_sequence_certificate(&bc.target, &images).is_some();
    let (route, complex) = if certified {
        ("koszul", koszul_complex(&b, &explicit)?)
    } else {
        let rel_gb = b.relation_gb(budget)?;
        let mut gens = Vec::new();
        for k in &kernel {
            if !rel_gb.contains(k, budget)? {
                gens.push(vec![k.clone()]);
            }
        }
        let m = SubmodulePresentation::new(bn, 1, gens);
        ("resolution", free_resolution(&m, &b.relations, None, bound + 1, budget)?)
    };
    let tensored = tensor_complex(&complex, &bc)?;
    let mut entries = Vec::with_capacity(bound);
    for i in 1..=bound {
        let entry = if i as i64 > tensored.hi() {
            TorEntry { index: i, vanishes: true, classes: Vec::new() }
        } else {
            let h = tensored.homology(i as i64, budget)?;
            TorEntry {
                index: i,
                vanishes: h.is_zero(),
                classes: h.surviving.iter().map(|v| render_vector(&bc.target, v)).collect(),
            }
        };
        entries.push(entry);
    }
    Ok(TorReport { route, certified_all: certified, entries })
}

/// `Q ⊗_{s,p} Q` and the data of `rho`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoData {
    pub qp: QPresentation,
    /// Left generators, then right generators (primed); Z^3-graded.
    pub tensor: GradedRing,
    pub simplified: GradedRing,
    pub to_simplified: RingMap,
    pub zero_part: DegreeZeroSubring,
    /// `rho` on the degree-zero generators, in `Q` generators.
    pub rho: RingMap,
    /// `R[u, u^-1, v, v^-1]` images of the tensor generators.
    pub laurent: RingMap,
}

/// Tri-graded `Q ⊗_{s,p} Q`: left `(a, b) -> (a, b, 0)`, right
/// `(a, b) -> (0, a, b)`.
pub fn tensor_qq(qp: &QPresentation) -> Result<GradedRing> {
    let q = &qp.q;
    let m = q.nvars();
    let tot = 2 * m;
    let mut vars = q.vars.clone();
    vars.extend(q.vars.iter().map(|v| format!("{v}'")));
    let mut w: Vec<MultiDegree> = q.weights.weights().iter().map(|d| MultiDegree(vec![d.0[0], d.0[1], 0])).collect();
    w.extend(q.weights.weights().iter().map(|d| MultiDegree(vec![0, d.0[0], d.0[1]])));
    let left: Vec<usize> = (0..m).collect();
    let right: Vec<usize> = (m..tot).collect();
    let mut rels: Vec<Polynomial> = q.relations.iter().map(|p| p.embed(tot, &left)).collect();
    rels.extend(q.relations.iter().map(|p| p.embed(tot, &right)));
    for (s, p) in qp.s.images.iter().zip(qp.p.images.iter()) {
        rels.push(&s.embed(tot, &left) - &p.embed(tot, &right));
    }
    GradedRing::new(vars, WeightSystem::new(3, w)?, rels)
}

/// `R[u, ui, v, vi]` and the images of the tensor generators.
fn laurent_images(qp: &QPresentation, tensor: &GradedRing) -> Result<RingMap> {
    let r = &qp.base;
    let n = r.nvars();
    let ln = n + 4;
    let mut vars = r.vars.clone();
    for base in ["u", "u_inv", "v", "v_inv"] {
        let mut name = base.to_string();
        while vars.contains(&name) {
            name.push('\'');
        }
        vars.push(name);
    }
    let mut w: Vec<MultiDegree> = r.weights.weights().iter().map(|d| MultiDegree(vec![d.0[0], 0, 0])).collect();
    w.push(MultiDegree(vec![-1, 1, 0]));
    w.push(MultiDegree(vec![1, -1, 0]));
    w.push(MultiDegree(vec![0, -1, 1]));
    w.push(MultiDegree(vec![0, 1, -1]));
    let map: Vec<usize> = (0..n).collect();
    let mut rels: Vec<Polynomial> = r.relations.iter().map(|p| p.embed(ln, &map)).collect();
    let one = Polynomial::one(ln);
    rels.push(&(&Polynomial::var(ln, n) * &Polynomial::var(ln, n + 1)) - &one);
    rels.push(&(&Polynomial::var(ln, n + 2) * &Polynomial::var(ln, n + 3)) - &one);
    let l = GradedRing::new(vars, WeightSystem::new(3, w)?, rels)?;
    let pw = |base: usize, k: i64| -> Result<Polynomial> {
        let v = if k >= 0 { base } else { base + 1 };
        Polynomial::var(ln, v).pow(k.unsigned_abs() as u32)
    };
    let mut images = Vec::with_capacity(tensor.nvars());
    for g in &qp.gens {
        images.push(match *g {
            QGen::U => Polynomial::var(ln, n),
            QGen::P(i) => Polynomial::var(ln, i),
            QGen::S(i) => &Polynomial::var(ln, i) * &pw(n, r.weights.scalar_weight(i))?,
        });
    }
    for g in &qp.gens {
        images.push(match *g {
            QGen::U => Polynomial::var(ln, n + 2),
            QGen::P(i) => &Polynomial::var(ln, i) * &pw(n, r.weights.scalar_weight(i))?,
            QGen::S(i) => {
                let d = r.weights.scalar_weight(i);
                &(&Polynomial::var(ln, i) * &pw(n, d)?) * &pw(n + 2, d)?
            }
        });
    }
    RingMap::new(tensor.clone(), l, images)
}

impl RhoData {
    /// `u -> 1, v -> t` from the Laurent ring into `R[t, t^-1]`, the ambient
    /// of `eta`.
    fn collapse(&self) -> Result<RingMap> {
        let l = &self.laurent.target;
        let amb = &self.qp.eta.target;
        let n = self.qp.base.nvars();
        let mut images: Vec<Polynomial> = (0..n).map(|i| amb.var(i)).collect();
        images.push(amb.one());
        images.push(amb.one());
        images.push(amb.var(n));
        images.push(amb.var(n + 1));
        RingMap::new(l.clone(), amb.clone(), images)
    }

    /// `rho` of an element of the tensor ring (unsimplified variables), via
    /// the Laurent route; `None` when it leaves `Q`.
    pub fn rho_of(&self, t: &Polynomial, budget: &mut Budget) -> Result<Option<Polynomial>> {
        let col = self.collapse()?;
        let img = col.apply(&self.laurent.apply(t)?)?;
        let sub = Subalgebra::new(&self.qp.eta.target, &self.qp.eta.images, budget)?;
        sub.express(&img, budget)
    }

    /// `(1 ⊗ eta)_0`: left generators to themselves, `U' -> 1`, right
    /// `P'_x -> s(x)`, `S'_x -> s(x)`.
    pub fn route_a(&self) -> Result<RingMap> {
        let q = &self.qp.q;
        let mut images: Vec<Polynomial> = (0..q.nvars()).map(|i| q.var(i)).collect();
        for g in &self.qp.gens {
            images.push(match *g {
                QGen::U => q.one(),
                QGen::P(i) | QGen::S(i) => self.qp.s.images[i].clone(),
            });
        }
        RingMap::new(self.tensor.clone(), q.clone(), images)
    }

    /// `(eta ⊗ 1)_0`: `U -> 1`, left `P_x`, `S_x -> p(x)`, right generators
    /// to their unprimed names.
    pub fn route_b(&self) -> Result<RingMap> {
        let q = &self.qp.q;
        let mut images = Vec::with_capacity(2 * q.nvars());
        for g in &self.qp.gens {
            images.push(match *g {
                QGen::U => q.one(),
                QGen::P(i) | QGen::S(i) => self.qp.p.images[i].clone(),
            });
        }
        images.extend((0..q.nvars()).map(|i| q.var(i)));
        RingMap::new(self.tensor.clone(), q.clone(), images)
    }

    /// Tensor-ring monomial for degree-zero generator `k` (simplified
    /// variables mapped back into the tensor ring by name).
    fn generator_in_tensor(&self, k: usize) -> Polynomial {
        let simp = &self.simplified;
        let idx: Vec<usize> = simp.vars.iter().map(|v| self.tensor.index(v).expect("kept variable")).collect();
        self.zero_part.inclusion.images[k].embed(self.tensor.nvars(), &idx)
    }

    /// Both factorizations agree with the Laurent route on every degree-zero
    /// generator.
    pub fn routes_agree(&self, budget: &mut Budget) -> Result<bool> {
        let a = self.route_a()?;
        let b = self.route_b()?;
        let gb = self.qp.q.relation_gb(budget)?;
        for (k, img) in self.rho.images.iter().enumerate() {
            let t = self.generator_in_tensor(k);
            for route in [&a, &b] {
                if !gb.contains(&(&route.apply(&t)? - img), budget)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Degree-zero element as an element of the (unsimplified) tensor ring.
    pub fn generator_free_image(&self, p: &Polynomial) -> Result<Polynomial> {
        let gens: Vec<Polynomial> = (0..self.zero_part.generators.len()).map(|k| self.generator_in_tensor(k)).collect();
        let tensor = self.tensor.clone();
        RingMap::new(self.zero_part.ring.clone(), tensor, gens)?.apply(p)
    }

    /// A kernel element of `rho` rendered as a tensor of generators.
    pub fn render_degree_zero(&self, p: &Polynomial) -> Result<String> {
        let t = self.zero_part.inclusion.apply(p)?;
        Ok(self.simplified.fmt(&t))
    }
}

/// Builds `rho : (Q ⊗_{s,p} Q)_0 -> Q(R)` through the Laurent embedding.
pub fn rho_map(qp: &QPresentation, budget: &mut Budget) -> Result<RhoData> {
    let tensor = tensor_qq(qp)?;
    let (simplified, to_simplified) = tensor.simplify(budget)?;
    let zero_part = degree_zero_part(&simplified, 1, None, budget)?;
    let laurent = laurent_images(qp, &tensor)?;
    let mut data = RhoData {
        qp: qp.clone(),
        tensor,
        simplified,
        to_simplified,
        zero_part,
        rho: RingMap::identity(&qp.q),
        laurent,
    };
    let mut images = Vec::with_capacity(data.zero_part.generators.len());
    for k in 0..data.zero_part.generators.len() {
        let t = data.generator_in_tensor(k);
        match data.rho_of(&t, budget)? {
            Some(e) => images.push(e.embed(qp.q.nvars(), &(0..qp.q.nvars()).collect::<Vec<_>>())),
            None => {
                return Err(Error::Inconsistent(format!(
                    "image of degree-zero generator {} is not in Q",
                    data.zero_part.ring.vars[k]
                )))
            }
        }
    }
    data.rho = RingMap::new(data.zero_part.ring.clone(), qp.q.clone(), images)?;
    Ok(data)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PVerdict {
    HasP { tor_certified: bool },
    FailsP(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyPReport {
    pub rho: IsoVerdict,
    pub rho_witness: Option<String>,
    /// Unreduced image of the witness in `R[u, u^-1, v, v^-1]`, and whether
    /// it reduces to zero there.
    pub witness_image: Option<(String, bool)>,
    pub routes_agree: bool,
    pub tor: TorReport,
    pub conclusion: PVerdict,
}

impl PropertyPReport {
    pub fn has_p(&self) -> bool {
        matches!(self.conclusion, PVerdict::HasP { .. })
    }
}

/// `rho` an isomorphism and `Tor_i^R(Q_p, Q_s) = 0` for `i > 0`.
pub fn property_p_check(r: &GradedRing, tor_bound: usize, budget: &mut Budget) -> Result<PropertyPReport> {
    let qp = q_present(r, budget)?;
    let data = rho_map(&qp, budget)?;
    let verdict = data.rho.iso_check(budget)?;
    let (rho_witness, witness_image) = match &verdict.kernel_witness {
        Some(w) => {
            let t = data.generator_free_image(w)?;
            let img = data.laurent.apply(&t)?;
            let zero = data.laurent.target.relation_gb(budget)?.nf(&img).is_zero();
            (Some(data.render_degree_zero(w)?), Some((data.laurent.target.fmt(&img), zero)))
        }
        None => (None, None),
    };
    let routes_agree = data.routes_agree(budget)?;
    let tor = tor_bimodule(&qp, tor_bound, budget)?;
    let conclusion = if !verdict.injective {
        PVerdict::FailsP(format!("rho has kernel element {}", rho_witness.clone().unwrap_or_default()))
    } else if !verdict.surjective {
        PVerdict::FailsP(format!("rho misses generator {}", qp.q.vars[verdict.missing[0]]))
    } else if let Some(e) = tor.entries.iter().find(|e| !e.vanishes) {
        PVerdict::FailsP(format!("Tor_{} is nonzero", e.index))
    } else {
        PVerdict::HasP { tor_certified: tor.certified_all }
    };
    Ok(PropertyPReport { rho: verdict, rho_witness, witness_image, routes_agree, tor, conclusion })
}
