//! Grade restriction windows on affine space: fine-graded Čech cohomology
//! of `Q(R) = k[U, x^+, y^-]`, the transform of the twists `O(i)`, and the
//! flop and wall-crossing checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::equivariant::{q_present, QPresentation};
use crate::error::{Error, Result};
use crate::homological::degree_zero_part;
use crate::linalg::rank;
use crate::poly::{Coeff, MultiDegree, Polynomial, WeightSystem};
use crate::ring::{GradedRing, IsoVerdict, RingMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `mu_+ = -sum_{d > 0} d`, `mu_- = -sum_{d < 0} |d|`.
pub fn mu(w: &WeightSystem, sign: Sign) -> i64 {
    let it = (0..w.len()).map(|i| w.scalar_weight(i));
    match sign {
        Sign::Plus => -it.filter(|&d| d > 0).sum::<i64>(),
        Sign::Minus => -it.filter(|&d| d < 0).map(i64::abs).sum::<i64>(),
    }
}

/// The half-open window `(mu, 0]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    pub mu: i64,
}

impl WindowSpec {
    pub fn new(mu: i64) -> Self {
        WindowSpec { mu }
    }

    pub fn contains(&self, i: i64) -> bool {
        self.mu < i && i <= 0
    }

    pub fn len(&self) -> usize {
        (-self.mu).max(0) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn twists(&self) -> Vec<i64> {
        (self.mu + 1..=0).collect()
    }
}

/// `R(i)` for `mu_+ < i <= 0`; empty when no weight is positive.
pub fn window_generators(w: &WeightSystem) -> Vec<i64> {
    WindowSpec::new(mu(w, Sign::Plus)).twists()
}

/// A monomial ring whose graded pieces in each exponent vector (fine
/// degree) are 0 or 1 dimensional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FineGradedModule {
    pub vars: Vec<String>,
    /// Coarse grading refined by the fine degrees.
    pub weights: WeightSystem,
}

impl FineGradedModule {
    pub fn new(vars: Vec<String>, weights: WeightSystem) -> Self {
        FineGradedModule { vars, weights }
    }

    /// `Q(R) = k[U, P_x, S_y]` for a free `R`.
    pub fn from_q(qp: &QPresentation) -> Result<Self> {
        if !qp.q.is_free() {
            return Err(Error::InvalidInput("fine grading needs a free Q(R)".to_string()));
        }
        Ok(FineGradedModule { vars: qp.q.vars.clone(), weights: qp.q.weights.clone() })
    }

    pub fn coarse_degree(&self, e: &[i64]) -> MultiDegree {
        let mut d = vec![0i64; self.weights.dim()];
        for (i, &k) in e.iter().enumerate() {
            for (c, w) in d.iter_mut().zip(self.weights.weight(i).0.iter()) {
                *c += w * k;
            }
        }
        MultiDegree(d)
    }
}

/// Čech complex of a monomial module for the cover by the loci where one of
/// `inverted` is a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CechComplex {
    pub module: FineGradedModule,
    pub inverted: Vec<usize>,
}

impl CechComplex {
    pub fn new(module: FineGradedModule, inverted: Vec<usize>) -> Result<Self> {
        if let Some(&i) = inverted.iter().find(|&&i| i >= module.vars.len()) {
            return Err(Error::InvalidInput(format!("no variable {i} to invert")));
        }
        Ok(CechComplex { module, inverted })
    }

    /// Cohomology dimensions `H^0..H^{k-1}` in fine degree `e`. With nothing
    /// inverted the complex is the module itself in degree 0.
    pub fn fine_cohomology(&self, e: &[i64]) -> Vec<usize> {
        let k = self.inverted.len();
        let len = k.max(1);
        let mut out = vec![0usize; len];
        let neg_outside = e.iter().enumerate().any(|(i, &x)| x < 0 && !self.inverted.contains(&i));
        if neg_outside {
            return out;
        }
        if k == 0 {
            out[0] = 1;
            return out;
        }
        // Faces are nonempty subsets S of the inverted positions containing
        // every position where e is negative; C^p has the faces of size p+1.
        let need: u32 =
            self.inverted.iter().enumerate().filter(|(_, &v)| e[v] < 0).fold(0u32, |acc, (j, _)| acc | (1 << j));
        let faces: Vec<Vec<u32>> = (1..=k)
            .map(|size| (1u32..(1 << k)).filter(|s| s.count_ones() as usize == size && s & need == need).collect())
            .collect();
        let mut ranks = vec![0usize; k];
        for p in 0..k.saturating_sub(1) {
            let (src, dst) = (&faces[p], &faces[p + 1]);
            if src.is_empty() || dst.is_empty() {
                continue;
            }
            let rows: Vec<Vec<Coeff>> = dst
                .iter()
                .map(|&t| {
                    src.iter()
                        .map(|&s| {
                            if s & t != s {
                                return Coeff::zero();
                            }
                            let added = (t & !s).trailing_zeros();
                            let pos = (t & ((1 << added) - 1)).count_ones();
                            if pos % 2 == 0 {
                                Coeff::one()
                            } else {
                                -Coeff::one()
                            }
                        })
                        .collect()
                })
                .collect();
            ranks[p] = rank(&rows);
        }
        for p in 0..k {
            let prev = if p == 0 { 0 } else { ranks[p - 1] };
            out[p] = faces[p].len() - ranks[p] - prev;
        }
        out
    }

    /// Cohomology per coarse bidegree `(A, B)`: `A` the total exponent of the
    /// inverted variables, `B` of the others, both in `[lo, hi]`. Fine
    /// degrees with inverted exponents of mixed sign are acyclic, so the
    /// box `|e_i| <= max(|lo|, |hi|)` is exhaustive.
    pub fn table(&self, lo: i64, hi: i64, budget: &mut Budget) -> Result<BTreeMap<(i64, i64), Vec<usize>>> {
        let m = self.module.vars.len();
        let bound = lo.abs().max(hi.abs());
        let ranges: Vec<(i64, i64)> =
            (0..m).map(|i| if self.inverted.contains(&i) { (-bound, bound) } else { (0, bound) }).collect();
        let mut out = BTreeMap::new();
        let mut err = None;
        for_each_box(&ranges, &mut |e| {
            if err.is_some() {
                return;
            }
            let a: i64 = self.inverted.iter().map(|&i| e[i]).sum();
            let b: i64 = (0..m).filter(|i| !self.inverted.contains(i)).map(|i| e[i]).sum();
            if a < lo || a > hi || b < lo || b > hi {
                return;
            }
            if let Err(x) = budget.step(1) {
                err = Some(x);
                return;
            }
            let h = self.fine_cohomology(e);
            let cell = out.entry((a, b)).or_insert_with(|| vec![0usize; h.len()]);
            for (c, x) in cell.iter_mut().zip(h) {
                *c += x;
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

fn for_each_box(ranges: &[(i64, i64)], f: &mut impl FnMut(&[i64])) {
    fn go(ranges: &[(i64, i64)], cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if cur.len() == ranges.len() {
            f(cur);
            return;
        }
        let (a, b) = ranges[cur.len()];
        for x in a..=b {
            cur.push(x);
            go(ranges, cur, f);
            cur.pop();
        }
    }
    go(ranges, &mut Vec::with_capacity(ranges.len()), f);
}

/// Čech cohomology of `m` for the cover inverting `inverted`, tabulated on
/// the coarse window `[lo, hi]^2`.
pub fn cech_cohomology(
    m: &FineGradedModule,
    inverted: &[usize],
    window: (i64, i64),
    budget: &mut Budget,
) -> Result<BTreeMap<(i64, i64), Vec<usize>>> {
    CechComplex::new(m.clone(), inverted.to_vec())?.table(window.0, window.1, budget)
}

/// One coarse cell of the transform of `O(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FmCell {
    /// `(total exponent of x^+, total exponent of the rest)`.
    pub bidegree: (i64, i64),
    pub cohomology: Vec<usize>,
    /// `dim R(i)` in the same fine degrees.
    pub expected_h0: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FmReport {
    pub twist: i64,
    pub window: WindowSpec,
    pub in_window: bool,
    pub cells: Vec<FmCell>,
    pub h0_matches: bool,
    pub higher_vanish: bool,
    /// Generator of the degree-zero piece, `U^-i`, when present.
    pub generator: Option<String>,
}

impl FmReport {
    pub fn matches_twist(&self) -> bool {
        self.h0_matches && self.higher_vanish
    }

    /// First cell that disagrees with `R(i)`.
    pub fn first_mismatch(&self) -> Option<&FmCell> {
        self.cells.iter().find(|c| c.cohomology[0] != c.expected_h0 || c.cohomology[1..].iter().any(|&h| h != 0))
    }
}

/// `Phi_{Q_+}(O(i)) = (C ⊗ Q_s)_{(i,*)}` for a free ring. Fine degree
/// `(alpha, beta)`: exponents of the positive generators `P_x` (inverted)
/// and of the rest; the power of `U` is `a.alpha - i` and must be
/// nonnegative. Compared degreewise with `R(i)`, whose fine degrees are
/// `alpha, beta >= 0`.
pub fn fm_transform_twist(w: &WeightSystem, i: i64, window: (i64, i64), budget: &mut Budget) -> Result<FmReport> {
    let names: Vec<String> = (1..=w.len()).map(|k| format!("x{k}")).collect();
    let r = GradedRing::free(names, w.clone())?;
    let qp = q_present(&r, budget)?;
    let module = FineGradedModule::from_q(&qp)?;
    let n = w.len();
    let pos: Vec<usize> = (0..n).filter(|&k| w.scalar_weight(k) > 0).collect();
    let rest: Vec<usize> = (0..n).filter(|&k| w.scalar_weight(k) <= 0).collect();
    // Q positions: U = 0, variable k at k + 1.
    let inverted: Vec<usize> = pos.iter().map(|&k| k + 1).collect();
    let cech = CechComplex::new(module, inverted)?;
    let (lo, hi) = window;
    let bound = lo.abs().max(hi.abs());
    let mut ranges: Vec<(i64, i64)> = pos.iter().map(|_| (-bound, bound)).collect();
    ranges.extend(rest.iter().map(|_| (0, bound)));
    let mut cells: BTreeMap<(i64, i64), FmCell> = BTreeMap::new();
    let klen = pos.len().max(1);
    let mut err = None;
    for_each_box(&ranges, &mut |g| {
        if err.is_some() {
            return;
        }
        let (alpha, beta) = g.split_at(pos.len());
        let a: i64 = alpha.iter().sum();
        let b: i64 = beta.iter().sum();
        if a < lo || a > hi || b < lo.max(0) || b > hi {
            return;
        }
        if let Err(x) = budget.step(1) {
            err = Some(x);
            return;
        }
        let cell = cells.entry((a, b)).or_insert_with(|| FmCell {
            bidegree: (a, b),
            cohomology: vec![0; klen],
            expected_h0: 0,
        });
        if alpha.iter().all(|&x| x >= 0) {
            cell.expected_h0 += 1;
        }
        let eu: i64 = pos.iter().zip(alpha).map(|(&k, &x)| w.scalar_weight(k) * x).sum::<i64>() - i;
        if eu < 0 {
            return;
        }
        let mut e = vec![0i64; n + 1];
        e[0] = eu;
        for (&k, &x) in pos.iter().zip(alpha) {
            e[k + 1] = x;
        }
        for (&k, &x) in rest.iter().zip(beta) {
            e[k + 1] = x;
        }
        for (c, h) in cell.cohomology.iter_mut().zip(cech.fine_cohomology(&e)) {
            *c += h;
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let cells: Vec<FmCell> = cells.into_values().collect();
    let h0_matches = cells.iter().all(|c| c.cohomology[0] == c.expected_h0);
    let higher_vanish = cells.iter().all(|c| c.cohomology[1..].iter().all(|&h| h == 0));
    let window_spec = WindowSpec::new(mu(w, Sign::Plus));
    let generator = match i {
        0 => Some("1".to_string()),
        -1 => Some("U".to_string()),
        i if i < 0 => Some(format!("U^{}", -i)),
        _ => None,
    };
    Ok(FmReport {
        twist: i,
        window: window_spec,
        in_window: window_spec.contains(i),
        cells,
        h0_matches,
        higher_vanish,
        generator,
    })
}

/// Verdicts for `phi = p ⊗ s : R ⊗_{R^G} R -> Q(R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlopReport {
    pub invariants: GradedRing,
    pub fiber_product: GradedRing,
    pub global: IsoVerdict,
    /// `(positive variable of the first factor, negative variable of the
    /// second)` and the verdict on that chart.
    pub charts: Vec<(String, String, IsoVerdict)>,
}

impl FlopReport {
    pub fn all_charts_iso(&self) -> bool {
        self.charts.iter().all(|(_, _, v)| v.is_iso())
    }
}

/// `R ⊗_{R^G} R` with `phi`, globally and on each chart
/// `{x_i^+ ≠ 0} × {x_j^- ≠ 0}`.
pub fn flop_chart_check(r: &GradedRing, budget: &mut Budget) -> Result<FlopReport> {
    if !r.is_free() {
        return Err(Error::InvalidInput("flop check needs a free ring".to_string()));
    }
    let n = r.nvars();
    let pos: Vec<usize> = (0..n).filter(|&i| r.weights.scalar_weight(i) > 0).collect();
    let neg: Vec<usize> = (0..n).filter(|&i| r.weights.scalar_weight(i) < 0).collect();
    if pos.is_empty() || neg.is_empty() {
        return Err(Error::InvalidInput("flop check needs positive and negative weights".to_string()));
    }
    let inv = degree_zero_part(r, 0, None, budget)?;
    let tot = 2 * n;
    let mut vars = r.vars.clone();
    vars.extend(r.vars.iter().map(|v| format!("{v}'")));
    let mut w: Vec<MultiDegree> = r.weights.weights().iter().map(|d| MultiDegree(vec![d.0[0], 0])).collect();
    w.extend(r.weights.weights().iter().map(|d| MultiDegree(vec![0, d.0[0]])));
    let first: Vec<usize> = (0..n).collect();
    let second: Vec<usize> = (n..tot).collect();
    let rels: Vec<Polynomial> =
        inv.inclusion.images.iter().map(|g| &g.embed(tot, &first) - &g.embed(tot, &second)).collect();
    let t = GradedRing::new(vars, WeightSystem::new(2, w)?, rels)?;
    let qp = q_present(r, budget)?;
    let mut images = qp.p.images.clone();
    images.extend(qp.s.images.iter().cloned());
    let phi = RingMap::new(t.clone(), qp.q.clone(), images)?;
    let global = phi.iso_check(budget)?;
    let mut charts = Vec::new();
    for &i in &pos {
        for &j in &neg {
            let f = &t.var(i) * &t.var(n + j);
            let g = phi.apply(&f)?;
            let src = t.localize(&f, "t_inv")?;
            let dst = qp.q.localize(&g, "q_inv")?;
            let mut imgs: Vec<Polynomial> =
                phi.images.iter().map(|p| p.embed(dst.nvars(), &(0..qp.q.nvars()).collect::<Vec<_>>())).collect();
            imgs.push(dst.var(qp.q.nvars()));
            let map = RingMap::new(src, dst, imgs)?;
            charts.push((r.vars[i].clone(), format!("{}'", r.vars[j]), map.iso_check(budget)?));
        }
    }
    Ok(FlopReport { invariants: inv.ring, fiber_product: t, global, charts })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallCrossingReport {
    pub mu_plus: i64,
    pub mu_minus: i64,
    pub window_plus: WindowSpec,
    pub window_minus: WindowSpec,
    /// `-mu_+ - 1`.
    pub twist: i64,
    /// `|mu_+| = |mu_-|`.
    pub calabi_yau: bool,
    /// `mu_+ + mu_- = 0` read literally with the signs above.
    pub literal_sum_zero: bool,
}

pub fn wall_crossing_report(w: &WeightSystem) -> WallCrossingReport {
    let mp = mu(w, Sign::Plus);
    let mm = mu(w, Sign::Minus);
    WallCrossingReport {
        mu_plus: mp,
        mu_minus: mm,
        window_plus: WindowSpec::new(mp),
        window_minus: WindowSpec::new(mm),
        twist: -mp - 1,
        calabi_yau: mp.abs() == mm.abs(),
        literal_sum_zero: mp + mm == 0,
    }
}
