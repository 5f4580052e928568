//! Weight and Hodge filtrations, Deligne splittings, the weight spectral
//! sequence through E_2, the mixed-diagram axioms, and del/delbar bicomplexes.

use crate::cohomology::cohomology;
use crate::dga::{Dga, MatrixMorphism};
use crate::error::{Error, Result};
use crate::linalg::{Chart, Conjugation, SparseMatrix, Subspace};
use crate::scalar::Scalar;
use crate::tower::{extend_typed, stage1_typed, Tower};
use std::collections::{BTreeMap, BTreeSet};

/// A filtration of one coordinate space by nested subspaces, stored at its
/// jump indices. Increasing filtrations (weight) grow with the index and are
/// zero below the first jump; decreasing ones (Hodge) shrink, are full at the
/// first jump, and vanish above the last.
#[derive(Debug, Clone, PartialEq)]
pub struct Filtration {
    pub increasing: bool,
    pub ambient: usize,
    jumps: BTreeMap<i64, Subspace>,
}

impl Filtration {
    fn build(increasing: bool, ambient: usize, jumps: Vec<(i64, Subspace)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, s) in jumps {
            if s.ambient != ambient {
                return Err(Error::Validation(format!(
                    "filtration level {i} has ambient {} != {ambient}",
                    s.ambient
                )));
            }
            if map.insert(i, s).is_some() {
                return Err(Error::Validation(format!("filtration level {i} given twice")));
            }
        }
        let f = Filtration {
            increasing,
            ambient,
            jumps: map,
        };
        let idx = f.indices();
        for w in idx.windows(2) {
            let (lo, hi) = (&f.jumps[&w[0]], &f.jumps[&w[1]]);
            let nested = if increasing {
                hi.contains_subspace(lo)
            } else {
                lo.contains_subspace(hi)
            };
            if !nested {
                return Err(Error::Validation(format!(
                    "filtration levels {} and {} are not nested",
                    w[0], w[1]
                )));
            }
        }
        Ok(f)
    }

    pub fn increasing(ambient: usize, jumps: Vec<(i64, Subspace)>) -> Result<Self> {
        Self::build(true, ambient, jumps)
    }

    pub fn decreasing(ambient: usize, jumps: Vec<(i64, Subspace)>) -> Result<Self> {
        Self::build(false, ambient, jumps)
    }

    /// The subspace at level i: a step function through the stored jumps.
    pub fn at(&self, i: i64) -> Subspace {
        if self.increasing {
            match self.jumps.range(..=i).next_back() {
                Some((_, s)) => s.clone(),
                None => Subspace::zero(self.ambient),
            }
        } else {
            match self.jumps.range(i..).next() {
                Some((_, s)) => s.clone(),
                None => Subspace::zero(self.ambient),
            }
        }
    }

    pub fn indices(&self) -> Vec<i64> {
        self.jumps.keys().copied().collect()
    }

    /// Reindex every jump by a constant shift.
    pub fn shifted(&self, by: i64) -> Filtration {
        Filtration {
            increasing: self.increasing,
            ambient: self.ambient,
            jumps: self.jumps.iter().map(|(&i, s)| (i + by, s.clone())).collect(),
        }
    }
}

/// Weight shift on graded cohomology: W'_i on H^r is W_{i-r}, one filtration
/// per degree.
pub fn shifted_weight(w_by_degree: &[Filtration]) -> Vec<Filtration> {
    w_by_degree
        .iter()
        .enumerate()
        .map(|(r, w)| w.shifted(r as i64))
        .collect()
}

/// A direct-sum decomposition into (p, q)-components (zero components absent).
#[derive(Debug, Clone, PartialEq)]
pub struct Bigrading {
    pub ambient: usize,
    pub components: BTreeMap<(i64, i64), Subspace>,
}

impl Bigrading {
    pub fn new(ambient: usize, components: BTreeMap<(i64, i64), Subspace>) -> Self {
        let components = components
            .into_iter()
            .filter(|(_, s)| !s.is_zero())
            .collect();
        Bigrading { ambient, components }
    }

    pub fn component(&self, p: i64, q: i64) -> Subspace {
        self.components
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.ambient))
    }

    pub fn dims(&self) -> BTreeMap<(i64, i64), usize> {
        self.components.iter().map(|(&k, s)| (k, s.dim())).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.components.values().map(|s| s.dim()).sum()
    }

    /// The components must be independent and span the ambient space.
    pub fn check_direct_sum(&self) -> Result<()> {
        let mut sum = Subspace::zero(self.ambient);
        for s in self.components.values() {
            sum = sum.sum(s);
        }
        if sum.dim() != self.total_dim() || sum.dim() != self.ambient {
            return Err(Error::Validation(format!(
                "components of dimension {} span {} of {} ambient dimensions",
                self.total_dim(),
                sum.dim(),
                self.ambient
            )));
        }
        Ok(())
    }
}

/// Splits a weight/Hodge filtration pair into canonical bidegree components:
///   V_{p,q} = (W_{p+q} ∩ F^p) ∩ (W_{p+q} ∩ conj F^q + Σ_{i≥2} W_{p+q-i} ∩ conj F^{q-i+1}).
/// Fails with `NotMhs` when the result does not reassemble both filtrations.
pub fn deligne_splitting(
    w: &Filtration,
    f: &Filtration,
    conj: &Conjugation,
) -> Result<Bigrading> {
    let n = w.ambient;
    if f.ambient != n || conj.dim() != n {
        return Err(Error::Validation("deligne_splitting: ambient mismatch".into()));
    }
    if !w.increasing || f.increasing {
        return Err(Error::Validation(
            "deligne_splitting wants an increasing W and a decreasing F".into(),
        ));
    }
    if n == 0 {
        return Ok(Bigrading::new(0, BTreeMap::new()));
    }
    let widx = w.indices();
    let fidx = f.indices();
    if widx.is_empty() || fidx.is_empty() {
        return Err(Error::NotMhs("a filtration has no levels".into()));
    }
    let (wmin, wmax) = (widx[0], *widx.last().unwrap());
    let fmax = *fidx.last().unwrap();
    let mut components = BTreeMap::new();
    for t in wmin..=wmax {
        for p in (t - fmax)..=fmax {
            let q = t - p;
            let r = w.at(t).intersect(&f.at(p));
            if r.is_zero() {
                continue;
            }
            let mut l = w.at(t).intersect(&f.at(q).conjugate(conj));
            let mut i = 2;
            while t - i >= wmin {
                l = l.sum(&w.at(t - i).intersect(&f.at(q - i + 1).conjugate(conj)));
                i += 1;
            }
            let v = r.intersect(&l);
            if !v.is_zero() {
                components.insert((p, q), v);
            }
        }
    }
    let b = Bigrading::new(n, components);
    b.check_direct_sum()
        .map_err(|_| Error::NotMhs("components do not decompose the space".into()))?;
    for &i in &widx {
        let mut sum = Subspace::zero(n);
        for (&(p, q), s) in &b.components {
            if p + q <= i {
                sum = sum.sum(s);
            }
        }
        if sum != w.at(i) {
            return Err(Error::NotMhs(format!(
                "weight level {i} is not the sum of components of total weight <= {i}"
            )));
        }
    }
    for &j in &fidx {
        let mut sum = Subspace::zero(n);
        for (&(p, _), s) in &b.components {
            if p >= j {
                sum = sum.sum(s);
            }
        }
        if sum != f.at(j) {
            return Err(Error::NotMhs(format!(
                "Hodge level {j} is not the sum of components with p >= {j}"
            )));
        }
    }
    Ok(b)
}

/// Rebuilds (W, F) from a bigrading after checking the conjugation hypothesis
/// conj(V_{p,q}) ⊆ V_{q,p} + Σ_{r+s < p+q} V_{r,s}.
pub fn filtrations_from_bigrading(
    b: &Bigrading,
    conj: &Conjugation,
) -> Result<(Filtration, Filtration)> {
    b.check_direct_sum()?;
    for (&(p, q), v) in &b.components {
        let mut allowed = b.component(q, p);
        for (&(r, s), u) in &b.components {
            if r + s < p + q {
                allowed = allowed.sum(u);
            }
        }
        if !allowed.contains_subspace(&v.conjugate(conj)) {
            return Err(Error::HypothesisViolation(p, q));
        }
    }
    let weights: BTreeSet<i64> = b.components.keys().map(|&(p, q)| p + q).collect();
    let mut wjumps = Vec::new();
    for &i in &weights {
        let mut sum = Subspace::zero(b.ambient);
        for (&(p, q), s) in &b.components {
            if p + q <= i {
                sum = sum.sum(s);
            }
        }
        wjumps.push((i, sum));
    }
    let ps: BTreeSet<i64> = b.components.keys().map(|&(p, _)| p).collect();
    let mut fjumps = Vec::new();
    for &j in &ps {
        let mut sum = Subspace::zero(b.ambient);
        for (&(p, _), s) in &b.components {
            if p >= j {
                sum = sum.sum(s);
            }
        }
        fjumps.push((j, sum));
    }
    Ok((
        Filtration::increasing(b.ambient, wjumps)?,
        Filtration::decreasing(b.ambient, fjumps)?,
    ))
}

/// Conjugation induced on a chart by an ambient conjugation (both the
/// numerator and denominator must be conj-stable for this to go through).
pub fn induce_conjugation(chart: &Chart, conj: &Conjugation) -> Result<Conjugation> {
    let mut cols = Vec::new();
    for rep in chart.representatives() {
        let image = conj.apply(rep);
        let coords = chart.project(&image).ok_or_else(|| {
            Error::Internal("conjugation does not descend to the chart".into())
        })?;
        cols.push(coords);
    }
    Conjugation::new(SparseMatrix::from_columns(chart.dim(), &cols))
}

/// The weight spectral sequence of a filtered DGA through E_2. Columns are
/// indexed by the decreasing reindexing W^p = W_{-p}; E_0^{p,q} is the graded
/// piece of A^{p+q} with charts kept for lifting, d_0 and d_1 are the induced
/// maps, and E_2 is recorded as dimensions.
#[derive(Debug, Clone)]
pub struct SpectralSequence {
    pub e0: BTreeMap<(i64, i64), Chart>,
    pub d0: BTreeMap<(i64, i64), SparseMatrix>,
    /// charts inside the E_0 coordinate spaces.
    pub e1: BTreeMap<(i64, i64), Chart>,
    pub d1: BTreeMap<(i64, i64), SparseMatrix>,
    pub e2_dims: BTreeMap<(i64, i64), usize>,
}

impl SpectralSequence {
    pub fn e0_dims(&self) -> BTreeMap<(i64, i64), usize> {
        self.e0.iter().map(|(&k, c)| (k, c.dim())).collect()
    }

    pub fn e1_dims(&self) -> BTreeMap<(i64, i64), usize> {
        self.e1
            .iter()
            .filter(|(_, c)| c.dim() > 0)
            .map(|(&k, c)| (k, c.dim()))
            .collect()
    }

    pub fn d0_is_zero(&self) -> bool {
        self.d0.values().all(|m| m.is_zero())
    }

    pub fn d1_is_zero(&self) -> bool {
        self.d1.values().all(|m| m.is_zero())
    }
}

/// Checks d-stability of a degree-indexed weight filtration; errors with the
/// offending (weight, degree) pair.
fn check_d_stable<T: Dga>(a: &T, w: &[Filtration]) -> Result<()> {
    let top = a.max_degree();
    for t in 0..top {
        let d = a.d_matrix(t)?;
        for i in w[t].indices() {
            let image = w[t].at(i).map_by(&d);
            if !w[t + 1].at(i).contains_subspace(&image) {
                return Err(Error::FiltrationNotDStable {
                    weight: i,
                    degree: t,
                });
            }
        }
    }
    Ok(())
}

/// W_i . W_j ⊆ W_{i+j} on every pair of degrees.
fn check_multiplicative<T: Dga>(a: &T, w: &[Filtration]) -> Result<()> {
    let top = a.max_degree();
    for s in 0..=top {
        for t in 0..=top - s {
            for i in w[s].indices() {
                for j in w[t].indices() {
                    let target = w[s + t].at(i + j);
                    for u in w[s].at(i).basis() {
                        for v in w[t].at(j).basis() {
                            let prod = a.multiply(s, u, t, v)?;
                            if !target.contains(&prod) {
                                return Err(Error::Validation(format!(
                                    "weight filtration not multiplicative: W_{i}(A^{s}) . W_{j}(A^{t}) leaves W_{}",
                                    i + j
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn weight_spectral_sequence<T: Dga>(a: &T, w: &[Filtration]) -> Result<SpectralSequence> {
    let top = a.max_degree();
    if w.len() != top + 1 {
        return Err(Error::Validation(format!(
            "need one filtration per degree 0..={top}, got {}",
            w.len()
        )));
    }
    for (t, filt) in w.iter().enumerate() {
        if !filt.increasing || filt.ambient != a.dim(t) {
            return Err(Error::Validation(format!(
                "degree-{t} weight filtration must be increasing on a {}-dimensional space",
                a.dim(t)
            )));
        }
    }
    check_d_stable(a, w)?;
    check_multiplicative(a, w)?;
    let mut indices = BTreeSet::new();
    for filt in w {
        indices.extend(filt.indices());
    }
    if indices.is_empty() {
        return Err(Error::Validation("weight filtration has no levels".into()));
    }
    let pmin = -indices.iter().max().unwrap();
    let pmax = -indices.iter().min().unwrap();
    let mut e0 = BTreeMap::new();
    for t in 0..=top {
        for p in pmin..=pmax {
            let q = t as i64 - p;
            let num = w[t].at(-p);
            let den = w[t].at(-p - 1);
            let chart = Chart::from_subquotient(&num, &den)?;
            if chart.dim() > 0 {
                e0.insert((p, q), chart);
            }
        }
    }
    let mut d0 = BTreeMap::new();
    for (&(p, q), chart) in &e0 {
        let t = (p + q) as usize;
        let target_dim = e0.get(&(p, q + 1)).map_or(0, |c| c.dim());
        if t == top || target_dim == 0 {
            d0.insert((p, q), SparseMatrix::zero(target_dim, chart.dim()));
            continue;
        }
        let d = a.d_matrix(t)?;
        let target = &e0[&(p, q + 1)];
        let mut cols = Vec::new();
        for rep in chart.representatives() {
            let dv = d.apply(rep);
            let coords = target.project(&dv).ok_or_else(|| {
                Error::Internal("d_0 image fell outside its graded piece".into())
            })?;
            cols.push(coords);
        }
        d0.insert((p, q), SparseMatrix::from_columns(target.dim(), &cols));
    }
    let mut e1 = BTreeMap::new();
    for (&(p, q), chart) in &e0 {
        let ker = match d0.get(&(p, q)) {
            Some(m) if m.rows > 0 => m.kernel_basis(),
            _ => Subspace::full(chart.dim()),
        };
        let im = match d0.get(&(p, q - 1)) {
            Some(m) if m.rows == chart.dim() => m.image(),
            _ => Subspace::zero(chart.dim()),
        };
        e1.insert((p, q), Chart::from_subquotient(&ker, &im)?);
    }
    let mut d1 = BTreeMap::new();
    for (&(p, q), chart) in &e1 {
        let t = (p + q) as usize;
        let target_dim = e1.get(&(p + 1, q)).map_or(0, |c| c.dim());
        if chart.dim() == 0 || target_dim == 0 || t == top {
            d1.insert((p, q), SparseMatrix::zero(target_dim, chart.dim()));
            continue;
        }
        let d = a.d_matrix(t)?;
        let e0_here = &e0[&(p, q)];
        let e0_next = &e0[&(p + 1, q)];
        let e1_next = &e1[&(p + 1, q)];
        let mut cols = Vec::new();
        for rep in chart.representatives() {
            let x = e0_here.lift(rep);
            let dx = d.apply(&x);
            let class0 = e0_next.project(&dx).ok_or_else(|| {
                Error::Internal("d_1 image fell outside W^{p+1}".into())
            })?;
            let class1 = e1_next.project(&class0).ok_or_else(|| {
                Error::Internal("d_1 image is not d_0-closed".into())
            })?;
            cols.push(class1);
        }
        d1.insert((p, q), SparseMatrix::from_columns(target_dim, &cols));
    }
    let mut e2_dims = BTreeMap::new();
    for (&(p, q), chart) in &e1 {
        if chart.dim() == 0 {
            continue;
        }
        let out_rank = d1.get(&(p, q)).map_or(0, |m| m.rank());
        let in_rank = d1.get(&(p - 1, q)).map_or(0, |m| m.rank());
        let dim = chart.dim() - out_rank - in_rank;
        if dim > 0 {
            e2_dims.insert((p, q), dim);
        }
    }
    Ok(SpectralSequence {
        e0,
        d0,
        e1,
        d1,
        e2_dims,
    })
}

/// F^k induced on an E_0 chart: the image of F^k ∩ W^p in the graded piece.
fn f_on_e0(chart: &Chart, f_ambient: &Filtration, wp: &Subspace, k: i64) -> Result<Subspace> {
    let cut = f_ambient.at(k).intersect(wp);
    chart.project_span(cut.basis())
}

#[derive(Debug, Clone)]
pub struct MhdReport {
    pub e1_iso: bool,
    pub e1_failures: Vec<(i64, i64)>,
    pub d0_strict: bool,
    pub strict_failures: Vec<(i64, i64)>,
    pub pure_e1: bool,
    pub purity_failures: Vec<(i64, i64)>,
    pub pass: bool,
}

/// The three mixed-diagram axioms for phi: (A, W) -> (E, W, F):
///  1. phi induces an isomorphism on weight E_1;
///  2. d_0 on E_0(E) is strict with respect to the induced Hodge filtration;
///  3. F induces a pure Hodge structure of weight q on each E_1^{p,q}(E).
pub fn mhd_check<S: Dga, T: Dga>(
    a: &S,
    wa: &[Filtration],
    e: &T,
    we: &[Filtration],
    fe: &[Filtration],
    phi: &MatrixMorphism,
) -> Result<MhdReport> {
    let ssa = weight_spectral_sequence(a, wa)?;
    let sse = weight_spectral_sequence(e, we)?;
    for (t, filt) in fe.iter().enumerate() {
        if filt.increasing || filt.ambient != e.dim(t) {
            return Err(Error::Validation(format!(
                "degree-{t} Hodge filtration must be decreasing on a {}-dimensional space",
                e.dim(t)
            )));
        }
    }

    // axiom 1: induced isomorphism on E_1
    let mut e1_failures = Vec::new();
    let keys: BTreeSet<(i64, i64)> = ssa
        .e1_dims()
        .keys()
        .chain(sse.e1_dims().keys())
        .copied()
        .collect();
    'keys: for &(p, q) in &keys {
        let dim_a = ssa.e1.get(&(p, q)).map_or(0, |c| c.dim());
        let dim_e = sse.e1.get(&(p, q)).map_or(0, |c| c.dim());
        if dim_a != dim_e {
            e1_failures.push((p, q));
            continue;
        }
        if dim_a == 0 {
            continue;
        }
        let t = (p + q) as usize;
        let mut cols = Vec::new();
        for rep in ssa.e1[&(p, q)].representatives() {
            let x = ssa.e0[&(p, q)].lift(rep);
            let y = phi.apply(t, &x);
            let Some(c0) = sse.e0[&(p, q)].project(&y) else {
                e1_failures.push((p, q));
                continue 'keys;
            };
            let Some(c1) = sse.e1[&(p, q)].project(&c0) else {
                e1_failures.push((p, q));
                continue 'keys;
            };
            cols.push(c1);
        }
        if SparseMatrix::from_columns(dim_e, &cols).rank() != dim_a {
            e1_failures.push((p, q));
        }
    }
    let e1_iso = e1_failures.is_empty();

    // axiom 2: d_0 strict with respect to F on E_0(E)
    let mut strict_failures = Vec::new();
    for (&(p, q), m) in &sse.d0 {
        if m.rows == 0 || m.is_zero() {
            continue;
        }
        let t = (p + q) as usize;
        let here = &sse.e0[&(p, q)];
        let next = &sse.e0[&(p, q + 1)];
        let wp_here = we[t].at(-p);
        let wp_next = we[t + 1].at(-p);
        let mut fidx = BTreeSet::new();
        fidx.extend(fe[t].indices());
        fidx.extend(fe[t + 1].indices());
        let image = m.image();
        for &k in &fidx {
            let f_here = f_on_e0(here, &fe[t], &wp_here, k)?;
            let f_next = f_on_e0(next, &fe[t + 1], &wp_next, k)?;
            if image.intersect(&f_next) != f_here.map_by(m) {
                strict_failures.push((p, q));
                break;
            }
        }
    }
    let d0_strict = strict_failures.is_empty();

    // axiom 3: F induces a weight-q pure structure on E_1^{p,q}(E)
    let mut purity_failures = Vec::new();
    for (&(p, q), chart) in &sse.e1 {
        if chart.dim() == 0 {
            continue;
        }
        let t = (p + q) as usize;
        let e0_chart = &sse.e0[&(p, q)];
        let wp = we[t].at(-p);
        let conj0 = match induce_conjugation(e0_chart, &e.conjugation(t)) {
            Ok(c) => c,
            Err(_) => {
                purity_failures.push((p, q));
                continue;
            }
        };
        let conj1 = match induce_conjugation(chart, &conj0) {
            Ok(c) => c,
            Err(_) => {
                purity_failures.push((p, q));
                continue;
            }
        };
        let ker = match sse.d0.get(&(p, q)) {
            Some(m) if m.rows > 0 => m.kernel_basis(),
            _ => Subspace::full(e0_chart.dim()),
        };
        let mut pieces = Vec::new();
        let mut total = 0;
        for a_idx in fe[t].indices() {
            let b_idx = q - a_idx;
            let fa0 = f_on_e0(e0_chart, &fe[t], &wp, a_idx)?;
            let fb0 = f_on_e0(e0_chart, &fe[t], &wp, b_idx)?;
            let fa1 = chart.project_span(fa0.intersect(&ker).basis())?;
            let fb1 = chart.project_span(fb0.intersect(&ker).basis())?;
            let piece = fa1.intersect(&fb1.conjugate(&conj1));
            total += piece.dim();
            pieces.push(piece);
        }
        let mut sum = Subspace::zero(chart.dim());
        for piece in &pieces {
            sum = sum.sum(piece);
        }
        if total != chart.dim() || sum.dim() != chart.dim() {
            purity_failures.push((p, q));
        }
    }
    let pure_e1 = purity_failures.is_empty();

    Ok(MhdReport {
        pass: e1_iso && d0_strict && pure_e1,
        e1_iso,
        e1_failures,
        d0_strict,
        strict_failures,
        pure_e1,
        purity_failures,
    })
}

/// A first-quadrant-style bicomplex with commuting-up-to-sign differentials
/// del: (p,q) -> (p+1,q) and delbar: (p,q) -> (p,q+1).
#[derive(Debug, Clone)]
pub struct Bicomplex {
    pub name: String,
    labels: BTreeMap<(i64, i64), Vec<String>>,
    del: BTreeMap<(i64, i64), SparseMatrix>,
    delbar: BTreeMap<(i64, i64), SparseMatrix>,
}

impl Bicomplex {
    pub fn new(name: impl Into<String>) -> Self {
        Bicomplex {
            name: name.into(),
            labels: BTreeMap::new(),
            del: BTreeMap::new(),
            delbar: BTreeMap::new(),
        }
    }

    pub fn add_component(&mut self, p: i64, q: i64, labels: Vec<String>) -> Result<()> {
        if labels.is_empty() {
            return Err(Error::Validation(format!("component ({p}, {q}) is empty")));
        }
        if self.labels.insert((p, q), labels).is_some() {
            return Err(Error::Validation(format!(
                "component ({p}, {q}) given twice"
            )));
        }
        Ok(())
    }

    pub fn dim(&self, p: i64, q: i64) -> usize {
        self.labels.get(&(p, q)).map_or(0, |l| l.len())
    }

    pub fn labels(&self, p: i64, q: i64) -> &[String] {
        self.labels.get(&(p, q)).map_or(&[], |l| l.as_slice())
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.labels.keys().copied()
    }

    pub fn set_del(&mut self, p: i64, q: i64, m: SparseMatrix) -> Result<()> {
        if m.rows != self.dim(p + 1, q) || m.cols != self.dim(p, q) {
            return Err(Error::Validation(format!(
                "del at ({p}, {q}) must be {}x{}",
                self.dim(p + 1, q),
                self.dim(p, q)
            )));
        }
        self.del.insert((p, q), m);
        Ok(())
    }

    pub fn set_delbar(&mut self, p: i64, q: i64, m: SparseMatrix) -> Result<()> {
        if m.rows != self.dim(p, q + 1) || m.cols != self.dim(p, q) {
            return Err(Error::Validation(format!(
                "delbar at ({p}, {q}) must be {}x{}",
                self.dim(p, q + 1),
                self.dim(p, q)
            )));
        }
        self.delbar.insert((p, q), m);
        Ok(())
    }

    pub fn del_of(&self, p: i64, q: i64) -> SparseMatrix {
        self.del
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(self.dim(p + 1, q), self.dim(p, q)))
    }

    pub fn delbar_of(&self, p: i64, q: i64) -> SparseMatrix {
        self.delbar
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(self.dim(p, q + 1), self.dim(p, q)))
    }

    /// del^2 = delbar^2 = del delbar + delbar del = 0 on every component.
    pub fn validate(&self) -> Result<()> {
        for (p, q) in self.components() {
            if !self.del_of(p + 1, q).compose(&self.del_of(p, q)).is_zero() {
                return Err(Error::Validation(format!(
                    "del^2 != 0 starting at ({p}, {q})"
                )));
            }
            if !self
                .delbar_of(p, q + 1)
                .compose(&self.delbar_of(p, q))
                .is_zero()
            {
                return Err(Error::Validation(format!(
                    "delbar^2 != 0 starting at ({p}, {q})"
                )));
            }
            let a = self.del_of(p, q + 1).compose(&self.delbar_of(p, q));
            let b = self.delbar_of(p + 1, q).compose(&self.del_of(p, q));
            let sum = matrix_sum(&a, &b)?;
            if !sum.is_zero() {
                return Err(Error::Validation(format!(
                    "del delbar + delbar del != 0 starting at ({p}, {q})"
                )));
            }
        }
        Ok(())
    }

    /// total-degree layout: sorted (p, q) components with their offsets.
    fn total_layout(&self, t: i64) -> (usize, Vec<((i64, i64), usize)>) {
        let mut layout = Vec::new();
        let mut offset = 0;
        for ((p, q), l) in &self.labels {
            if p + q == t {
                layout.push(((*p, *q), offset));
                offset += l.len();
            }
        }
        (offset, layout)
    }

    pub fn total_dim(&self, t: i64) -> usize {
        self.total_layout(t).0
    }

    pub fn total_range(&self) -> Option<(i64, i64)> {
        let totals: Vec<i64> = self.labels.keys().map(|&(p, q)| p + q).collect();
        match (totals.iter().min(), totals.iter().max()) {
            (Some(&a), Some(&b)) => Some((a, b)),
            _ => None,
        }
    }

    /// One summand of the total differential as a block matrix C^t -> C^{t+1}.
    fn total_op(&self, t: i64, bar: bool) -> Result<SparseMatrix> {
        let (dim_src, src) = self.total_layout(t);
        let (dim_tgt, tgt) = self.total_layout(t + 1);
        let tgt_offsets: BTreeMap<(i64, i64), usize> = tgt.into_iter().collect();
        let mut entries = Vec::new();
        for ((p, q), off) in src {
            let (m, target) = if bar {
                (self.delbar_of(p, q), (p, q + 1))
            } else {
                (self.del_of(p, q), (p + 1, q))
            };
            if let Some(&toff) = tgt_offsets.get(&target) {
                for &(r, c, ref v) in m.entries() {
                    entries.push((toff + r, off + c, v.clone()));
                }
            }
        }
        SparseMatrix::from_entries(dim_tgt, dim_src, entries)
    }

    pub fn total_del(&self, t: i64) -> Result<SparseMatrix> {
        self.total_op(t, false)
    }

    pub fn total_delbar(&self, t: i64) -> Result<SparseMatrix> {
        self.total_op(t, true)
    }

    pub fn total_d(&self, t: i64) -> Result<SparseMatrix> {
        matrix_sum(&self.total_op(t, false)?, &self.total_op(t, true)?)
    }
}

fn matrix_sum(a: &SparseMatrix, b: &SparseMatrix) -> Result<SparseMatrix> {
    if a.rows != b.rows || a.cols != b.cols {
        return Err(Error::Internal("matrix sum shape mismatch".into()));
    }
    SparseMatrix::from_entries(
        a.rows,
        a.cols,
        a.entries().iter().chain(b.entries().iter()).cloned(),
    )
}

#[derive(Debug, Clone)]
pub struct DdbarReport {
    pub holds: bool,
    /// (total degree, dim of ker del ∩ ker delbar ∩ im d, dim of im del delbar)
    pub failures: Vec<(i64, usize, usize)>,
}

/// The del-delbar condition, degree by degree:
///   ker del ∩ ker delbar ∩ im d  =  im (del delbar).
pub fn ddbar_check(b: &Bicomplex) -> Result<DdbarReport> {
    b.validate()?;
    let Some((lo, hi)) = b.total_range() else {
        return Ok(DdbarReport {
            holds: true,
            failures: Vec::new(),
        });
    };
    let mut failures = Vec::new();
    for t in lo..=hi {
        let n = b.total_dim(t);
        if n == 0 {
            continue;
        }
        let kd = b.total_del(t)?.kernel_basis();
        let kdb = b.total_delbar(t)?.kernel_basis();
        let im_d = if t > lo {
            b.total_d(t - 1)?.image()
        } else {
            Subspace::zero(n)
        };
        let lhs = kd.intersect(&kdb).intersect(&im_d);
        let rhs = if t - 1 > lo {
            b.total_del(t - 1)?.compose(&b.total_delbar(t - 2)?).image()
        } else {
            Subspace::zero(n)
        };
        if lhs != rhs {
            failures.push((t, lhs.dim(), rhs.dim()));
        }
    }
    Ok(DdbarReport {
        holds: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone)]
pub struct BottChernReport {
    /// dim of (ker del ∩ ker delbar) / im (del delbar) per bidegree.
    pub dims: BTreeMap<(i64, i64), usize>,
    /// the natural map Tot BC -> H_d is an isomorphism.
    pub natural_map_iso: bool,
}

pub fn bott_chern(b: &Bicomplex) -> Result<BottChernReport> {
    b.validate()?;
    let mut charts: BTreeMap<(i64, i64), Chart> = BTreeMap::new();
    let mut dims = BTreeMap::new();
    for (p, q) in b.components() {
        let kd = b.del_of(p, q).kernel_basis();
        let kdb = b.delbar_of(p, q).kernel_basis();
        let ker = kd.intersect(&kdb);
        let im = b
            .del_of(p - 1, q)
            .compose(&b.delbar_of(p - 1, q - 1))
            .image();
        let chart = Chart::from_subquotient(&ker, &im)?;
        if chart.dim() > 0 {
            dims.insert((p, q), chart.dim());
        }
        charts.insert((p, q), chart);
    }
    let mut natural_map_iso = true;
    if let Some((lo, hi)) = b.total_range() {
        for t in lo..=hi {
            let n = b.total_dim(t);
            if n == 0 {
                continue;
            }
            let ker = b.total_d(t)?.kernel_basis();
            let im = if t > lo {
                b.total_d(t - 1)?.image()
            } else {
                Subspace::zero(n)
            };
            let h = Chart::from_subquotient(&ker, &im)?;
            let (_, layout) = b.total_layout(t);
            let mut cols = Vec::new();
            for ((p, q), off) in layout {
                if let Some(chart) = charts.get(&(p, q)) {
                    for rep in chart.representatives() {
                        let mut v = vec![Scalar::zero(); n];
                        for (k, c) in rep.iter().enumerate() {
                            v[off + k] = c.clone();
                        }
                        match h.project(&v) {
                            Some(coords) => cols.push(coords),
                            None => {
                                natural_map_iso = false;
                                cols.clear();
                                break;
                            }
                        }
                    }
                }
            }
            let bc_total: usize = cols.len();
            if bc_total != h.dim()
                || SparseMatrix::from_columns(h.dim(), &cols).rank() != h.dim()
            {
                natural_map_iso = false;
            }
        }
    }
    Ok(BottChernReport {
        dims,
        natural_map_iso,
    })
}

/// A tower whose generators carry bidegrees, rebuilt stage by stage from a
/// bigrading of H^1 so that every differential has type (0, 0).
#[derive(Debug, Clone)]
pub struct BigradedTower {
    pub tower: Tower,
    /// types of the generators adjoined at each stage, aligned with
    /// `new_generators`.
    pub types: Vec<Vec<(i64, i64)>>,
    /// with a target H^2 bigrading supplied: phi maps each typed H^2 class
    /// into the component of the same type.
    pub phi_type_ok: bool,
}

/// Type components of H^2(M(n)) in chart coordinates, valid because every
/// generator is typed and d has type (0, 0).
fn h2_type_components(
    stage: &crate::tower::TowerStage,
) -> Result<BTreeMap<(i64, i64), Subspace>> {
    let cdga = &stage.cdga;
    let slice = cdga.degree_slice(2);
    let z = cdga.d_matrix(2)?.kernel_basis();
    let mut by_type: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    for (idx, m) in slice.iter().enumerate() {
        let bid = cdga.monomial_bidegree(m).ok_or_else(|| {
            Error::Internal("untyped generator inside a bigraded tower".into())
        })?;
        by_type.entry(bid).or_default().push(idx);
    }
    let mut out = BTreeMap::new();
    for (bid, idxs) in by_type {
        let t = Subspace::coordinate(slice.len(), &idxs);
        let zt = z.intersect(&t);
        let comp = stage.h2_chart.project_span(zt.basis())?;
        if !comp.is_zero() {
            out.insert(bid, comp);
        }
    }
    Ok(out)
}

pub fn bigraded_tower<T: Dga>(
    a: &T,
    h1: &Bigrading,
    h2: Option<&Bigrading>,
    max_stages: usize,
) -> Result<BigradedTower> {
    let target_coh = cohomology(a, 2)?;
    if h1.ambient != target_coh.betti(1) {
        return Err(Error::Validation(format!(
            "H^1 bigrading ambient {} does not match b_1 = {}",
            h1.ambient,
            target_coh.betti(1)
        )));
    }
    h1.check_direct_sum()?;
    let mut basis = Vec::new();
    let mut types = Vec::new();
    let mut stage_types = Vec::new();
    for (&(p, q), comp) in &h1.components {
        for v in comp.basis() {
            basis.push((v.clone(), Some((p, q))));
            stage_types.push((p, q));
        }
    }
    types.push(stage_types);
    let mut stages = vec![stage1_typed(a, &target_coh, &basis)?];
    while !stages.last().unwrap().kernel.is_zero() && stages.len() < max_stages {
        let prev = stages.last().unwrap();
        let comps = h2_type_components(prev)?;
        let mut kernel_basis = Vec::new();
        let mut stage_types = Vec::new();
        let mut split_dim = 0;
        for (&bid, comp) in &comps {
            let piece = prev.kernel.intersect(comp);
            split_dim += piece.dim();
            for v in piece.basis() {
                kernel_basis.push((v.clone(), Some(bid)));
                stage_types.push(bid);
            }
        }
        if split_dim != prev.kernel.dim() {
            return Err(Error::NotBigradeable {
                stage: stages.len(),
                found: split_dim,
                expected: prev.kernel.dim(),
            });
        }
        let next = extend_typed(a, &target_coh, prev, stages.len() + 1, &kernel_basis)?;
        types.push(stage_types);
        stages.push(next);
    }
    let stabilized = stages.last().unwrap().kernel.is_zero();
    // d must have type (0, 0) on every generator: dv is concentrated in the
    // generator's own bidegree
    for stage in &stages {
        let slice = stage.cdga.degree_slice(2);
        for g in stage.cdga.generators() {
            let bid = g.bidegree.ok_or_else(|| {
                Error::Internal("untyped generator inside a bigraded tower".into())
            })?;
            let dv = stage.cdga.differential_of_generator(g.id);
            let coords = stage.cdga.coords(dv, 2, &slice)?;
            for (m, c) in slice.iter().zip(&coords) {
                if !c.is_zero() && stage.cdga.monomial_bidegree(m) != Some(bid) {
                    return Err(Error::Internal(format!(
                        "differential of {} is not of type (0, 0)",
                        g.name
                    )));
                }
            }
        }
    }
    let mut phi_type_ok = true;
    if let Some(h2) = h2 {
        for stage in &stages {
            for (bid, comp) in h2_type_components(stage)? {
                let image = comp.map_by(&stage.phi_matrix);
                if !h2.component(bid.0, bid.1).contains_subspace(&image) {
                    phi_type_ok = false;
                }
            }
        }
    }
    let tower = Tower {
        stages,
        stabilized,
        target_coh,
    };
    Ok(BigradedTower {
        tower,
        types,
        phi_type_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::chevalley_eilenberg;
    use crate::fdga::FdgaBuilder;
    use crate::lie;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn span(ambient: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::from_rows(
            ambient,
            rows.iter()
                .map(|r| r.iter().map(|&x| s(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn filtration_step_semantics() {
        let w = Filtration::increasing(
            2,
            vec![(0, span(2, &[&[1, 0]])), (2, Subspace::full(2))],
        )
        .unwrap();
        assert!(w.at(-1).is_zero());
        assert_eq!(w.at(0), span(2, &[&[1, 0]]));
        assert_eq!(w.at(1), span(2, &[&[1, 0]]));
        assert_eq!(w.at(5), Subspace::full(2));
        let f = Filtration::decreasing(
            2,
            vec![(0, Subspace::full(2)), (1, span(2, &[&[0, 1]]))],
        )
        .unwrap();
        assert_eq!(f.at(-3), Subspace::full(2));
        assert_eq!(f.at(1), span(2, &[&[0, 1]]));
        assert!(f.at(2).is_zero());
        // non-nested levels are rejected
        assert!(Filtration::increasing(
            2,
            vec![(0, span(2, &[&[1, 0]])), (1, span(2, &[&[0, 1]]))],
        )
        .is_err());
    }

    #[test]
    fn deligne_trivial_sits_at_the_origin() {
        let w = Filtration::increasing(2, vec![(0, Subspace::full(2))]).unwrap();
        let f = Filtration::decreasing(2, vec![(0, Subspace::full(2))]).unwrap();
        let b = deligne_splitting(&w, &f, &Conjugation::identity(2)).unwrap();
        assert_eq!(b.dims().into_iter().collect::<Vec<_>>(), vec![((0, 0), 2)]);
    }

    #[test]
    fn deligne_weight_one_hodge_structure() {
        // H^1 of an elliptic curve: F^1 = span(e1 + i e2)
        let one_i = vec![s(1), Scalar::i()];
        let f1 = Subspace::from_rows(2, vec![one_i]);
        let w = Filtration::increasing(2, vec![(1, Subspace::full(2))]).unwrap();
        let f = Filtration::decreasing(2, vec![(0, Subspace::full(2)), (1, f1.clone())]).unwrap();
        let b = deligne_splitting(&w, &f, &Conjugation::identity(2)).unwrap();
        assert_eq!(b.component(1, 0), f1);
        assert_eq!(b.component(0, 1).dim(), 1);
        assert!(b.component(0, 1).contains(&[s(1), -Scalar::i()]));
    }

    #[test]
    fn deligne_mixed_tate_extension() {
        // weight 0 line + weight 2 line glued by F^1 = span(i e1 + e2)
        let w = Filtration::increasing(
            2,
            vec![(0, span(2, &[&[1, 0]])), (2, Subspace::full(2))],
        )
        .unwrap();
        let f1 = Subspace::from_rows(2, vec![vec![Scalar::i(), s(1)]]);
        let f = Filtration::decreasing(2, vec![(0, Subspace::full(2)), (1, f1.clone())]).unwrap();
        let b = deligne_splitting(&w, &f, &Conjugation::identity(2)).unwrap();
        assert_eq!(b.component(0, 0), span(2, &[&[1, 0]]));
        assert_eq!(b.component(1, 1), f1);
        // roundtrip through filtrations_from_bigrading is the identity
        let (w2, f2) = filtrations_from_bigrading(&b, &Conjugation::identity(2)).unwrap();
        let b2 = deligne_splitting(&w2, &f2, &Conjugation::identity(2)).unwrap();
        assert_eq!(b, b2);
        assert_eq!(w2.at(0), w.at(0));
        assert_eq!(f2.at(1), f.at(1));
    }

    #[test]
    fn deligne_rejects_a_non_mhs() {
        // pure weight 1 on a single line, yet F^1 still everything
        let w = Filtration::increasing(1, vec![(1, Subspace::full(1))]).unwrap();
        let f = Filtration::decreasing(1, vec![(1, Subspace::full(1))]).unwrap();
        match deligne_splitting(&w, &f, &Conjugation::identity(1)) {
            Err(Error::NotMhs(_)) => {}
            other => panic!("expected NotMhs, got {other:?}"),
        }
    }

    #[test]
    fn bigrading_hypothesis_violation_is_located() {
        let mut comps = BTreeMap::new();
        comps.insert((1, 0), span(2, &[&[1, 0]]));
        comps.insert((0, 1), span(2, &[&[0, 1]]));
        let b = Bigrading::new(2, comps);
        // coordinatewise conjugation fixes each line, so conj V_{0,1} = V_{0,1}
        // instead of landing in V_{1,0}; the first offender reported is (0, 1)
        match filtrations_from_bigrading(&b, &Conjugation::identity(2)) {
            Err(Error::HypothesisViolation(0, 1)) => {}
            other => panic!("expected a (0,1) violation, got {other:?}"),
        }
    }

    #[test]
    fn shifted_weight_reindexes_by_degree() {
        let w0 = Filtration::increasing(1, vec![(0, Subspace::full(1))]).unwrap();
        let w1 = Filtration::increasing(1, vec![(0, Subspace::full(1))]).unwrap();
        let shifted = shifted_weight(&[w0, w1]);
        assert_eq!(shifted[0].indices(), vec![0]);
        assert_eq!(shifted[1].indices(), vec![1]);
    }

    fn two_step_fdga() -> crate::fdga::Fdga {
        // degree 0: 1, e; degree 1: x with d e = x and all e-products zero
        let mut b = FdgaBuilder::new("twostep", 1);
        let one = b.add_basis_element(0, "1", None);
        let e = b.add_basis_element(0, "e", None);
        let _x = b.add_basis_element(1, "x", None);
        b.set_differential(e, vec![s(1)]);
        b.finish(one).unwrap()
    }

    #[test]
    fn spectral_sequence_of_a_two_step_filtration() {
        let a = two_step_fdga();
        let w = vec![
            Filtration::increasing(
                2,
                vec![(0, span(2, &[&[1, 0]])), (1, Subspace::full(2))],
            )
            .unwrap(),
            Filtration::increasing(1, vec![(1, Subspace::full(1))]).unwrap(),
        ];
        let ss = weight_spectral_sequence(&a, &w).unwrap();
        let e0 = ss.e0_dims();
        assert_eq!(e0.get(&(0, 0)), Some(&1));
        assert_eq!(e0.get(&(-1, 1)), Some(&1));
        assert_eq!(e0.get(&(-1, 2)), Some(&1));
        assert!(!ss.d0_is_zero(), "d_0 must carry [e] to [x]");
        let e1 = ss.e1_dims();
        assert_eq!(e1.get(&(0, 0)), Some(&1));
        assert_eq!(e1.get(&(-1, 1)), None);
        assert_eq!(e1.get(&(-1, 2)), None);
        assert_eq!(
            ss.e2_dims.iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(),
            vec![((0, 0), 1)]
        );
    }

    #[test]
    fn filtration_must_be_d_stable() {
        let a = two_step_fdga();
        // putting e in weight 0 but x only in weight 1 breaks stability
        let w = vec![
            Filtration::increasing(2, vec![(0, Subspace::full(2))]).unwrap(),
            Filtration::increasing(1, vec![(1, Subspace::full(1))]).unwrap(),
        ];
        match weight_spectral_sequence(&a, &w) {
            Err(Error::FiltrationNotDStable { weight: 0, degree: 0 }) => {}
            other => panic!("expected FiltrationNotDStable, got {other:?}"),
        }
    }

    fn failing_bicomplex() -> Bicomplex {
        // del a = b, delbar a = c: b + c is d-exact, del-delbar-closed, but
        // not in the image of del delbar
        let mut b = Bicomplex::new("overlap");
        b.add_component(0, 0, vec!["a".into()]).unwrap();
        b.add_component(1, 0, vec!["b".into()]).unwrap();
        b.add_component(0, 1, vec!["c".into()]).unwrap();
        b.set_del(0, 0, SparseMatrix::from_dense(&[vec![s(1)]])).unwrap();
        b.set_delbar(0, 0, SparseMatrix::from_dense(&[vec![s(1)]])).unwrap();
        b
    }

    fn passing_bicomplex() -> Bicomplex {
        // del u = p, delbar u = q, del q = r, delbar p = -r
        let mut b = Bicomplex::new("square");
        b.add_component(0, 0, vec!["u".into()]).unwrap();
        b.add_component(1, 0, vec!["p".into()]).unwrap();
        b.add_component(0, 1, vec!["q".into()]).unwrap();
        b.add_component(1, 1, vec!["r".into()]).unwrap();
        b.set_del(0, 0, SparseMatrix::from_dense(&[vec![s(1)]])).unwrap();
        b.set_delbar(0, 0, SparseMatrix::from_dense(&[vec![s(1)]])).unwrap();
        b.set_del(0, 1, SparseMatrix::from_dense(&[vec![s(1)]])).unwrap();
        b.set_delbar(1, 0, SparseMatrix::from_dense(&[vec![s(-1)]])).unwrap();
        b
    }

    #[test]
    fn ddbar_failure_has_a_witness_degree() {
        let b = failing_bicomplex();
        let report = ddbar_check(&b).unwrap();
        assert!(!report.holds);
        assert_eq!(report.failures, vec![(1, 1, 0)]);
    }

    #[test]
    fn ddbar_holds_with_nonzero_differentials() {
        let b = passing_bicomplex();
        let report = ddbar_check(&b).unwrap();
        assert!(report.holds, "failures: {:?}", report.failures);
        let bc = bott_chern(&b).unwrap();
        assert!(bc.natural_map_iso);
        assert!(bc.dims.is_empty(), "everything dies: {:?}", bc.dims);
    }

    #[test]
    fn bott_chern_sees_the_overlap_class() {
        let b = failing_bicomplex();
        let bc = bott_chern(&b).unwrap();
        // b and c are separately del/delbar-closed and nothing is hit
        assert_eq!(bc.dims.get(&(1, 0)), Some(&1));
        assert_eq!(bc.dims.get(&(0, 1)), Some(&1));
        // H^1_d is one-dimensional ([b] = -[c]), so Tot BC -> H_d cannot inject
        assert!(!bc.natural_map_iso);
    }

    #[test]
    fn bigraded_tower_for_h3() {
        let a = chevalley_eilenberg(&lie::heisenberg(1)).unwrap();
        // z = x1 + i x2 spans (1,0), conj z spans (0,1), in H^1 chart coords
        let mut comps = BTreeMap::new();
        comps.insert((1, 0), Subspace::from_rows(2, vec![vec![s(1), Scalar::i()]]));
        comps.insert((0, 1), Subspace::from_rows(2, vec![vec![s(1), -Scalar::i()]]));
        let h1 = Bigrading::new(2, comps);
        let bt = bigraded_tower(&a, &h1, None, 8).unwrap();
        assert!(bt.tower.stabilized);
        assert_eq!(bt.types[0], vec![(0, 1), (1, 0)]);
        assert_eq!(bt.types[1], vec![(1, 1)]);
    }

    #[test]
    fn unsplittable_kernel_is_detected() {
        // [x1, x2] = x4 and [x1, x3] = x4: the kernel class v1(v2+v3) mixes
        // (2,0) and (1,1) once x1, x2 are typed (1,0) and x3 is (0,1)
        let mut g = lie::LieAlgebra::new(
            "mix",
            vec!["x1".into(), "x2".into(), "x3".into(), "x4".into()],
            crate::scalar::Field::Q,
        );
        g.set_bracket(0, 1, vec![s(0), s(0), s(0), s(1)]).unwrap();
        g.set_bracket(0, 2, vec![s(0), s(0), s(0), s(1)]).unwrap();
        let a = chevalley_eilenberg(&g).unwrap();
        let mut comps = BTreeMap::new();
        comps.insert((1, 0), span(3, &[&[1, 0, 0], &[0, 1, 0]]));
        comps.insert((0, 1), span(3, &[&[0, 0, 1]]));
        let h1 = Bigrading::new(3, comps);
        match bigraded_tower(&a, &h1, None, 8) {
            Err(Error::NotBigradeable {
                stage: 1,
                found: 0,
                expected: 1,
            }) => {}
            other => panic!("expected NotBigradeable, got {other:?}"),
        }
    }
}
