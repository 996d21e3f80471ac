//! The partial compactification ring `Q(R) = <pi(R), sigma(R), u>` inside
//! `R[u, u^-1]`, its structure maps, the attracting and repelling loci, and
//! the semistable charts.
//!
//! Generator convention for `Q(R)`: `U`, then per variable `x` of `R` one of
//! `P_x` (image of `x`, kept when `deg x >= 0`) or `S_x` (image of
//! `x u^deg x`, kept when `deg x < 0`). The other image is recovered as
//! `P_x U^deg x` or `S_x U^|deg x|`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::engine::{ideal_equal, GroebnerBasis};
use crate::error::{Error, Result};
use crate::homological::degree_zero_part;
use crate::poly::{Monomial, MonomialOrder, MultiDegree, Polynomial, WeightSystem};
use crate::ring::{GradedRing, IsoVerdict, RingMap};

/// Which image a generator of `Q(R)` stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QGen {
    U,
    P(usize),
    S(usize),
}

/// `Q(R)` with its maps `p, s : R -> Q(R)` and the inclusion
/// `eta : Q(R) -> R[u, u^-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPresentation {
    pub base: GradedRing,
    pub q: GradedRing,
    pub gens: Vec<QGen>,
    pub p: RingMap,
    pub s: RingMap,
    pub eta: RingMap,
}

/// Attracting and repelling loci.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LociReport {
    pub i_plus: Vec<Polynomial>,
    pub i_minus: Vec<Polynomial>,
    /// `R/I^-`.
    pub r_plus: GradedRing,
    /// `R/I^+`.
    pub r_minus: GradedRing,
    /// `R/(I^+ + I^-)`.
    pub r_zero: GradedRing,
}

fn scalar_degree(r: &GradedRing, i: usize) -> Result<i64> {
    if r.dim() != 1 {
        return Err(Error::InvalidInput(format!("expected a Z-grading, got dimension {}", r.dim())));
    }
    Ok(r.weights.scalar_weight(i))
}

fn fresh(taken: &[String], base: &str) -> String {
    if !taken.iter().any(|t| t == base) {
        return base.to_string();
    }
    (1..).map(|k| format!("{base}{k}")).find(|c| !taken.iter().any(|t| t == c)).unwrap()
}

/// `R[u, u_inv]/(u u_inv - 1)`, Z^2-graded with `deg x = (deg x, 0)` and
/// `deg u = (-1, 1)`.
pub fn laurent_ring(r: &GradedRing) -> Result<GradedRing> {
    let n = r.nvars();
    let mut vars = r.vars.clone();
    let u = fresh(&vars, "u");
    vars.push(u.clone());
    vars.push(fresh(&vars, &format!("{u}_inv")));
    let mut w = Vec::with_capacity(n + 2);
    for i in 0..n {
        w.push(MultiDegree(vec![scalar_degree(r, i)?, 0]));
    }
    w.push(MultiDegree(vec![-1, 1]));
    w.push(MultiDegree(vec![1, -1]));
    let map: Vec<usize> = (0..n).collect();
    let mut rels: Vec<Polynomial> = r.relations.iter().map(|p| p.embed(n + 2, &map)).collect();
    rels.push(&(&Polynomial::var(n + 2, n) * &Polynomial::var(n + 2, n + 1)) - &Polynomial::one(n + 2));
    GradedRing::new(vars, WeightSystem::new(2, w)?, rels)
}

/// `u^k` in a ring whose `u`, `u_inv` sit at `(iu, iu + 1)`.
fn u_pow(nvars: usize, iu: usize, k: i64) -> Polynomial {
    let mut e = vec![0u32; nvars];
    if k >= 0 {
        e[iu] = k as u32;
    } else {
        e[iu + 1] = k.unsigned_abs() as u32;
    }
    Polynomial::monomial(Monomial::from_exponents(e))
}

/// `pi` and `sigma` from `R` into the Laurent ring.
pub fn pi_sigma(r: &GradedRing) -> Result<(RingMap, RingMap)> {
    let l = laurent_ring(r)?;
    let n = r.nvars();
    let map: Vec<usize> = (0..n).collect();
    let pi: Vec<Polynomial> = (0..n).map(|i| r.var(i).embed(n + 2, &map)).collect();
    let mut sigma = Vec::with_capacity(n);
    for (i, x) in pi.iter().enumerate() {
        sigma.push(x * &u_pow(n + 2, n, scalar_degree(r, i)?));
    }
    Ok((RingMap::new(r.clone(), l.clone(), pi)?, RingMap::new(r.clone(), l, sigma)?))
}

/// Free Z^2-graded ring on the pruned generators with the maps `p`, `s` out
/// of the free ring on `R`'s variables, and the `eta` images.
struct Skeleton {
    names: Vec<String>,
    weights: WeightSystem,
    gens: Vec<QGen>,
    p_images: Vec<Polynomial>,
    s_images: Vec<Polynomial>,
    eta_images: Vec<Polynomial>,
}

fn skeleton(r: &GradedRing) -> Result<Skeleton> {
    let n = r.nvars();
    let m = n + 1;
    let ln = n + 2;
    let mut names = vec!["U".to_string()];
    let mut w = vec![MultiDegree(vec![-1, 1])];
    let mut gens = vec![QGen::U];
    let mut eta_images = vec![Polynomial::var(ln, n)];
    for i in 0..n {
        let d = scalar_degree(r, i)?;
        let x = Polynomial::var(ln, i);
        if d >= 0 {
            names.push(format!("P_{}", r.vars[i]));
            w.push(MultiDegree(vec![d, 0]));
            gens.push(QGen::P(i));
            eta_images.push(x);
        } else {
            names.push(format!("S_{}", r.vars[i]));
            w.push(MultiDegree(vec![0, d]));
            gens.push(QGen::S(i));
            eta_images.push(&x * &u_pow(ln, n, d));
        }
    }
    let uq = Polynomial::var(m, 0);
    let mut p_images = Vec::with_capacity(n);
    let mut s_images = Vec::with_capacity(n);
    for i in 0..n {
        let d = scalar_degree(r, i)?;
        let g = Polynomial::var(m, i + 1);
        let shift = uq.pow(d.unsigned_abs() as u32)?;
        if d >= 0 {
            s_images.push(&g * &shift);
            p_images.push(g);
        } else {
            p_images.push(&g * &shift);
            s_images.push(g);
        }
    }
    Ok(Skeleton { names, weights: WeightSystem::new(2, w)?, gens, p_images, s_images, eta_images })
}

/// Closed form for a free ring: `Q(R)` is the polynomial ring on `U` and
/// the pruned generators.
pub fn q_of_free(r: &GradedRing) -> Result<QPresentation> {
    if !r.is_free() {
        return Err(Error::InvalidInput("q_of_free needs a ring without relations".to_string()));
    }
    assemble(r, Vec::new())
}

fn assemble(r: &GradedRing, relations: Vec<Polynomial>) -> Result<QPresentation> {
    let sk = skeleton(r)?;
    let q = GradedRing::new(sk.names, sk.weights, relations)?;
    let l = laurent_ring(r)?;
    Ok(QPresentation {
        base: r.clone(),
        p: RingMap::new(r.clone(), q.clone(), sk.p_images)?,
        s: RingMap::new(r.clone(), q.clone(), sk.s_images)?,
        eta: RingMap::new(q.clone(), l, sk.eta_images)?,
        gens: sk.gens,
        q,
    })
}

/// `Q(R)` for any Z-graded presented ring: the kernel of the free ring on
/// the generators onto their Laurent images.
pub fn q_present(r: &GradedRing, budget: &mut Budget) -> Result<QPresentation> {
    for rel in &r.relations {
        r.require_homogeneous(rel, "relation")?;
    }
    let free = assemble(r, Vec::new())?;
    let ker = free.eta.kernel(budget)?;
    assemble(r, ker)
}

/// Outcome of the structural self-checks on a `QPresentation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCheck {
    pub eta_p_is_pi: bool,
    pub eta_s_is_sigma: bool,
    pub eta_injective: bool,
    pub degrees_ok: bool,
    pub relations_vanish: bool,
}

impl QCheck {
    pub fn ok(&self) -> bool {
        self.eta_p_is_pi && self.eta_s_is_sigma && self.eta_injective && self.degrees_ok && self.relations_vanish
    }
}

impl QPresentation {
    pub fn u(&self) -> Polynomial {
        self.q.var(0)
    }

    /// Index in `q` of the generator standing for variable `i`.
    pub fn gen_of(&self, i: usize) -> usize {
        i + 1
    }

    /// `eta p = pi`, `eta s = sigma`, `eta` injective, Z^2 degrees, and the
    /// relations vanish in the Laurent ring.
    pub fn check(&self, budget: &mut Budget) -> Result<QCheck> {
        let (pi, sigma) = pi_sigma(&self.base)?;
        let lgb = self.eta.target.relation_gb(budget)?;
        let mut eta_p_is_pi = true;
        let mut eta_s_is_sigma = true;
        let mut degrees_ok = self.q.weights.weight(0).0 == vec![-1, 1];
        for i in 0..self.base.nvars() {
            let ep = self.eta.apply(&self.p.images[i])?;
            let es = self.eta.apply(&self.s.images[i])?;
            eta_p_is_pi &= lgb.contains(&(&ep - &pi.images[i]), budget)?;
            eta_s_is_sigma &= lgb.contains(&(&es - &sigma.images[i]), budget)?;
            let d = self.base.weights.scalar_weight(i);
            degrees_ok &= matches!(self.q.degree(&self.p.images[i]), Some(crate::poly::Homogeneity::Of(ref g)) if g.0 == vec![d, 0]);
            degrees_ok &= matches!(self.q.degree(&self.s.images[i]), Some(crate::poly::Homogeneity::Of(ref g)) if g.0 == vec![0, d]);
        }
        let mut relations_vanish = true;
        for rel in &self.q.relations {
            relations_vanish &= lgb.contains(&self.eta.apply(rel)?, budget)?;
        }
        let eta_injective = self.eta.kernel_in_quotient(budget)?.is_empty();
        Ok(QCheck { eta_p_is_pi, eta_s_is_sigma, eta_injective, degrees_ok, relations_vanish })
    }
}

/// Generators of `I` modulo the relations of `r`, dropping those already
/// zero.
fn modulo_relations(r: &GradedRing, ideal: &[Polynomial], budget: &mut Budget) -> Result<Vec<Polynomial>> {
    let mut gens: Vec<Polynomial> = ideal.to_vec();
    gens.extend(r.relations.iter().cloned());
    let gb = GroebnerBasis::compute(r.nvars(), &gens, &MonomialOrder::grevlex(), budget)?;
    let rel = r.relation_gb(budget)?;
    let mut out = Vec::new();
    for g in gb.polynomials() {
        if !rel.contains(&g, budget)? {
            out.push(g);
        }
    }
    Ok(out)
}

/// `I^+ = <x : deg x > 0>` and `I^- = <x : deg x < 0>` modulo relations,
/// with the quotients `R^+ = R/I^-`, `R^- = R/I^+`, `R^0`.
pub fn loci(r: &GradedRing, budget: &mut Budget) -> Result<LociReport> {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for i in 0..r.nvars() {
        let d = scalar_degree(r, i)?;
        if d > 0 {
            plus.push(r.var(i));
        } else if d < 0 {
            minus.push(r.var(i));
        }
    }
    let i_plus = modulo_relations(r, &plus, budget)?;
    let i_minus = modulo_relations(r, &minus, budget)?;
    let mut both = i_plus.clone();
    both.extend(i_minus.iter().cloned());
    Ok(LociReport {
        r_plus: r.quotient(&i_minus)?,
        r_minus: r.quotient(&i_plus)?,
        r_zero: r.quotient(&both)?,
        i_plus,
        i_minus,
    })
}

/// `(s^-1(uQ), p^-1(uQ))` computed by preimages.
pub fn loci_from_q(qp: &QPresentation, budget: &mut Budget) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
    let uq = vec![qp.u()];
    let plus = qp.s.preimage(&uq, budget)?;
    let minus = qp.p.preimage(&uq, budget)?;
    Ok((modulo_relations(&qp.base, &plus, budget)?, modulo_relations(&qp.base, &minus, budget)?))
}

/// True when both routes give the same pair of ideals (modulo relations).
pub fn loci_agree(qp: &QPresentation, budget: &mut Budget) -> Result<bool> {
    let direct = loci(&qp.base, budget)?;
    let (plus, minus) = loci_from_q(qp, budget)?;
    let n = qp.base.nvars();
    let with_rels = |v: &[Polynomial]| {
        let mut g = v.to_vec();
        g.extend(qp.base.relations.iter().cloned());
        g
    };
    Ok(ideal_equal(n, &with_rels(&direct.i_plus), &with_rels(&plus), budget)?
        && ideal_equal(n, &with_rels(&direct.i_minus), &with_rels(&minus), budget)?)
}

/// One localization `R_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    pub element: Polynomial,
    pub ring: GradedRing,
    pub simplified: GradedRing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartsReport {
    pub charts: Vec<Chart>,
    /// Set when `I^+` is zero and the single chart is `R` itself.
    pub empty_cover: bool,
}

fn tag_name(r: &GradedRing, f: &Polynomial, k: usize) -> String {
    let base = match f.as_monomial() {
        Some((m, _)) if m.total_degree() == 1 => format!("{}_inv", r.vars[m.support().next().unwrap()]),
        _ => format!("f{k}_inv"),
    };
    fresh(&r.vars, &base)
}

/// The cover of the semistable locus by `R_r`, `r` running over generators
/// of `I^+`.
pub fn semistable_charts(r: &GradedRing, budget: &mut Budget) -> Result<ChartsReport> {
    let l = loci(r, budget)?;
    if l.i_plus.is_empty() {
        let (s, _) = r.simplify(budget)?;
        return Ok(ChartsReport {
            charts: vec![Chart { element: r.one(), ring: r.clone(), simplified: s }],
            empty_cover: true,
        });
    }
    let mut charts = Vec::new();
    for (k, f) in l.i_plus.iter().enumerate() {
        let ring = r.localize(f, &tag_name(r, f, k))?;
        let (simplified, _) = ring.simplify(budget)?;
        charts.push(Chart { element: f.clone(), ring, simplified });
    }
    Ok(ChartsReport { charts, empty_cover: false })
}

/// `(R_f)_0` for `f` of degree 1, presented by generators and relations.
pub fn quotient_chart(r: &GradedRing, f: &Polynomial, budget: &mut Budget) -> Result<GradedRing> {
    let d = r.degree_of(f)?;
    if d.0 != vec![1] {
        return Err(Error::InvalidInput(format!("chart element must have degree 1, got {d}")));
    }
    let loc = r.localize(f, &tag_name(r, f, 0))?;
    let z = degree_zero_part(&loc, 0, None, budget)?;
    Ok(z.ring.simplify(budget)?.0)
}

/// Verdict of the localization lemma for one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaLocalization {
    pub degree: i64,
    pub map: RingMap,
    pub verdict: IsoVerdict,
    /// For nonzero degree: the explicit preimage of `u^-1` maps to `u^-1`.
    pub witness_ok: Option<bool>,
}

/// Checks the isomorphism of the localization lemma for `r`:
/// `Q[1/s(r)] ~ R_r[u, u^-1]` if `deg r > 0`, `Q[1/p(r)] ~ R_r[u, u^-1]`
/// if `deg r < 0`, and `Q(R)[1/p(r)] ~ Q(R_r)` if `deg r = 0`.
pub fn eta_localization_check(r: &GradedRing, elem: &Polynomial, budget: &mut Budget) -> Result<EtaLocalization> {
    let d = r.degree_of(elem)?;
    let deg = d.0[0];
    let qp = q_present(r, budget)?;
    let qm = qp.q.nvars();
    let n = r.nvars();
    if deg == 0 {
        let tag = fresh(&r.vars, "r_inv");
        let rr = r.localize(elem, &tag)?;
        let qr = q_present(&rr, budget)?;
        let pr = qp.p.apply(elem)?;
        let src = qp.q.localize(&pr, "t")?;
        let mut images: Vec<Polynomial> = (0..qm).map(|i| qr.q.var(i)).collect();
        images.push(qr.q.var(qr.gen_of(n)));
        let map = RingMap::new(src, qr.q.clone(), images)?;
        let verdict = map.iso_check(budget)?;
        return Ok(EtaLocalization { degree: deg, map, verdict, witness_ok: None });
    }
    // Target: R_r[u, u^-1] with the tag appended after u, u_inv.
    let l = laurent_ring(r)?;
    let l_elem = elem.embed(n + 2, &(0..n).collect::<Vec<_>>());
    let target = l.localize(&l_elem, &fresh(&l.vars, "r_inv"))?;
    let tn = target.nvars();
    let lift = |p: &Polynomial| p.embed(tn, &(0..n + 2).collect::<Vec<_>>());
    let rinv = target.var(n + 2);
    let local = if deg > 0 { qp.s.apply(elem)? } else { qp.p.apply(elem)? };
    let src = qp.q.localize(&local, "t")?;
    let mut images: Vec<Polynomial> = qp.eta.images.iter().map(lift).collect();
    // 1/s(r) = r_inv u^-deg; 1/p(r) = r_inv.
    images.push(if deg > 0 { &rinv * &u_pow(tn, n, -deg) } else { rinv });
    let map = RingMap::new(src.clone(), target.clone(), images)?;
    let verdict = map.iso_check(budget)?;
    let t = src.var(qm);
    let uq = src.var(0);
    let witness = if deg > 0 {
        &(&t * &uq.pow((deg - 1) as u32)?) * &qp.p.apply(elem)?.embed(qm + 1, &(0..qm).collect::<Vec<_>>())
    } else {
        &(&qp.s.apply(elem)?.embed(qm + 1, &(0..qm).collect::<Vec<_>>()) * &uq.pow((-1 - deg) as u32)?) * &t
    };
    let gb = target.relation_gb(budget)?;
    let diff = &map.apply(&witness)? - &u_pow(tn, n, -1);
    let witness_ok = Some(gb.contains(&diff, budget)?);
    Ok(EtaLocalization { degree: deg, map, verdict, witness_ok })
}

/// `Q(R)[y] -> Q(R[x])` with `deg x = a`, `y` sent to `P_x` (`a >= 0`) or
/// `S_x` (`a < 0`).
pub fn q_polynomial_extension_check(r: &GradedRing, a: i64, budget: &mut Budget) -> Result<(RingMap, IsoVerdict)> {
    let n = r.nvars();
    let x = fresh(&r.vars, "x");
    let rx = r.adjoin(&[x], &[MultiDegree(vec![a])])?;
    let q = q_present(r, budget)?;
    let qx = q_present(&rx, budget)?;
    let ydeg = if a >= 0 { MultiDegree(vec![a, 0]) } else { MultiDegree(vec![0, a]) };
    let y = fresh(&q.q.vars, "y");
    let src = q.q.adjoin(&[y], &[ydeg])?;
    // Generators of Q(R) keep their indices in Q(R[x]); the new one is last.
    let mut images: Vec<Polynomial> = (0..q.q.nvars()).map(|i| qx.q.var(i)).collect();
    images.push(qx.q.var(qx.gen_of(n)));
    let map = RingMap::new(src, qx.q.clone(), images)?;
    let v = map.iso_check(budget)?;
    Ok((map, v))
}

/// `R ⊗_T S` for graded maps `f : T -> R`, `g : T -> S`; variables of `S`
/// that clash with `R` get a prime.
pub fn tensor_over(f: &RingMap, g: &RingMap) -> Result<GradedRing> {
    let (r, s) = (&f.target, &g.target);
    if f.source != g.source {
        return Err(Error::InvalidInput("maps do not share a source".to_string()));
    }
    let (nr, ns) = (r.nvars(), s.nvars());
    let tot = nr + ns;
    let mut vars = r.vars.clone();
    for v in &s.vars {
        let mut name = v.clone();
        while vars.contains(&name) || r.vars.contains(&name) {
            name.push('\'');
        }
        vars.push(name);
    }
    let weights = r.weights.concat(&s.weights);
    let rmap: Vec<usize> = (0..nr).collect();
    let smap: Vec<usize> = (nr..tot).collect();
    let mut rels: Vec<Polynomial> = r.relations.iter().map(|p| p.embed(tot, &rmap)).collect();
    rels.extend(s.relations.iter().map(|p| p.embed(tot, &smap)));
    for (a, b) in f.images.iter().zip(g.images.iter()) {
        let d = &a.embed(tot, &rmap) - &b.embed(tot, &smap);
        if !d.is_zero() {
            rels.push(d);
        }
    }
    GradedRing::new(vars, weights, rels)
}

/// The induced map `Q(f) : Q(T) -> Q(R)`.
pub fn q_functor(f: &RingMap, qt: &QPresentation, qr: &QPresentation) -> Result<RingMap> {
    let mut images = Vec::with_capacity(qt.q.nvars());
    for g in &qt.gens {
        images.push(match *g {
            QGen::U => qr.u(),
            QGen::P(i) => qr.p.apply(&f.images[i])?,
            QGen::S(i) => qr.s.apply(&f.images[i])?,
        });
    }
    RingMap::new(qt.q.clone(), qr.q.clone(), images)
}

/// Canonical map `Q(R) ⊗_{Q(T)} Q(S) -> Q(R ⊗_T S)` and its verdict.
pub fn q_pushout_check(f: &RingMap, g: &RingMap, budget: &mut Budget) -> Result<(RingMap, IsoVerdict)> {
    let pushout = tensor_over(f, g)?;
    let (nr, ns) = (f.target.nvars(), g.target.nvars());
    let qt = q_present(&f.source, budget)?;
    let qr = q_present(&f.target, budget)?;
    let qs = q_present(&g.target, budget)?;
    let qpo = q_present(&pushout, budget)?;
    let qf = q_functor(f, &qt, &qr)?;
    let qg = q_functor(g, &qt, &qs)?;
    // Variables: U, the R part, the S part; U is shared.
    let tot = 1 + nr + ns;
    let rmap: Vec<usize> = (0..=nr).collect();
    let smap: Vec<usize> = core::iter::once(0).chain(nr + 1..tot).collect();
    let mut vars = vec!["U".to_string()];
    vars.extend(qr.q.vars[1..].iter().cloned());
    for v in &qs.q.vars[1..] {
        let mut name = v.clone();
        while vars.contains(&name) {
            name.push('\'');
        }
        vars.push(name);
    }
    let mut w = vec![MultiDegree(vec![-1, 1])];
    w.extend(qr.q.weights.weights()[1..].iter().cloned());
    w.extend(qs.q.weights.weights()[1..].iter().cloned());
    let mut rels: Vec<Polynomial> = qr.q.relations.iter().map(|p| p.embed(tot, &rmap)).collect();
    rels.extend(qs.q.relations.iter().map(|p| p.embed(tot, &smap)));
    for (a, b) in qf.images.iter().zip(qg.images.iter()) {
        let d = &a.embed(tot, &rmap) - &b.embed(tot, &smap);
        if !d.is_zero() {
            rels.push(d);
        }
    }
    let src = GradedRing::new(vars, WeightSystem::new(2, w)?, rels)?;
    let mut images = vec![qpo.u()];
    for i in 0..nr {
        images.push(qpo.q.var(qpo.gen_of(i)));
    }
    for i in 0..ns {
        images.push(qpo.q.var(qpo.gen_of(nr + i)));
    }
    let map = RingMap::new(src, qpo.q.clone(), images)?;
    let v = map.iso_check(budget)?;
    Ok((map, v))
}

/// `Q_T^C = <R[C], sigma(R)>` inside `R[t_1^±, ..., t_n^±]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusQPresentation {
    pub base: GradedRing,
    pub monoid: Vec<Vec<i64>>,
    /// Generators `P_x`, `S_x`, then `T_c` per monoid generator.
    pub q: GradedRing,
    pub sigma: RingMap,
    pub pi: RingMap,
    pub eta: RingMap,
    /// `sigma^-1(<T_c>)`, the unstable locus.
    pub unstable: Vec<Polynomial>,
}

/// Laurent monomial `t^c` in a ring whose tags sit at `base + 2k`,
/// `base + 2k + 1`.
fn torus_pow(nvars: usize, base: usize, c: &[i64]) -> Polynomial {
    let mut e = vec![0u32; nvars];
    for (k, &ck) in c.iter().enumerate() {
        if ck >= 0 {
            e[base + 2 * k] = ck as u32;
        } else {
            e[base + 2 * k + 1] = ck.unsigned_abs() as u32;
        }
    }
    Polynomial::monomial(Monomial::from_exponents(e))
}

pub fn torus_q(r: &GradedRing, monoid: &[Vec<i64>], budget: &mut Budget) -> Result<TorusQPresentation> {
    let dim = r.dim();
    if dim == 0 {
        return Err(Error::InvalidInput("torus rank must be at least 1".to_string()));
    }
    if let Some(c) = monoid.iter().find(|c| c.len() != dim) {
        return Err(Error::InvalidInput(format!("monoid generator of length {} for rank {dim}", c.len())));
    }
    let n = r.nvars();
    let ln = n + 2 * dim;
    // Laurent ring, Z^{2 dim}-graded: x -> (w, 0), t_k -> (-e_k, e_k).
    let mut lvars = r.vars.clone();
    let mut lw: Vec<MultiDegree> = r.weights.weights().iter().map(|w| concat_zero(w, dim, true)).collect();
    let mut lrels: Vec<Polynomial> = r.relations.iter().map(|p| p.embed(ln, &(0..n).collect::<Vec<_>>())).collect();
    for k in 0..dim {
        let t = fresh(&lvars, &format!("t{}", k + 1));
        lvars.push(t.clone());
        lvars.push(fresh(&lvars, &format!("{t}_inv")));
        let mut e = vec![0i64; 2 * dim];
        e[k] = -1;
        e[dim + k] = 1;
        lw.push(MultiDegree(e.clone()));
        lw.push(-&MultiDegree(e));
        lrels.push(&(&Polynomial::var(ln, n + 2 * k) * &Polynomial::var(ln, n + 2 * k + 1)) - &Polynomial::one(ln));
    }
    let laurent = GradedRing::new(lvars, WeightSystem::new(2 * dim, lw)?, lrels)?;

    let m = 2 * n + monoid.len();
    let mut names = Vec::with_capacity(m);
    let mut w = Vec::with_capacity(m);
    let mut eta_images = Vec::with_capacity(m);
    for i in 0..n {
        names.push(format!("P_{}", r.vars[i]));
        w.push(concat_zero(r.weights.weight(i), dim, true));
        eta_images.push(Polynomial::var(ln, i));
    }
    for i in 0..n {
        names.push(format!("S_{}", r.vars[i]));
        w.push(concat_zero(r.weights.weight(i), dim, false));
        eta_images.push(&Polynomial::var(ln, i) * &torus_pow(ln, n, &r.weights.weight(i).0));
    }
    for (j, c) in monoid.iter().enumerate() {
        names.push(format!("T{}", j + 1));
        let mut e: Vec<i64> = c.iter().map(|x| -x).collect();
        e.extend(c.iter().copied());
        w.push(MultiDegree(e));
        eta_images.push(torus_pow(ln, n, c));
    }
    let free = GradedRing::new(names.clone(), WeightSystem::new(2 * dim, w.clone())?, Vec::new())?;
    let eta_free = RingMap::new(free, laurent.clone(), eta_images.clone())?;
    let ker = eta_free.kernel(budget)?;
    let q = GradedRing::new(names, WeightSystem::new(2 * dim, w)?, ker)?;
    let eta = RingMap::new(q.clone(), laurent, eta_images)?;
    let pi = RingMap::new(r.clone(), q.clone(), (0..n).map(|i| q.var(i)).collect())?;
    let sigma = RingMap::new(r.clone(), q.clone(), (0..n).map(|i| q.var(n + i)).collect())?;
    let tgens: Vec<Polynomial> = (0..monoid.len()).map(|j| q.var(2 * n + j)).collect();
    let unstable = modulo_relations(r, &sigma.preimage(&tgens, budget)?, budget)?;
    Ok(TorusQPresentation { base: r.clone(), monoid: monoid.to_vec(), q, sigma, pi, eta, unstable })
}

fn concat_zero(w: &MultiDegree, dim: usize, first: bool) -> MultiDegree {
    let z = vec![0i64; dim];
    let mut out = Vec::with_capacity(2 * dim);
    if first {
        out.extend(w.0.iter().copied());
        out.extend(z);
    } else {
        out.extend(z);
        out.extend(w.0.iter().copied());
    }
    MultiDegree(out)
}
