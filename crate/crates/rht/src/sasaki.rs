//! Models of quasi-regular Sasakian manifolds: a basic cohomology ring with a
//! transverse Kaehler class, the two-step extension by an odd generator y with
//! dy = omega, its weight and Hodge filtrations, and the full pipeline from a
//! ring to a one-formality verdict with typed generators.

use crate::cohomology::cohomology;
use crate::dga::{Dga, MatrixMorphism};
use crate::error::{Error, Result};
use crate::fdga::{BasisRef, Fdga, FdgaBuilder};
use crate::formality::{one_formal, quadratic_presentation, FormalityReport};
use crate::gca::{FreeCdga, GcaElement, Monomial};
use crate::hodge::{
    bigraded_tower, deligne_splitting, induce_conjugation, mhd_check, shifted_weight, Bigrading,
    Filtration, MhdReport,
};
use crate::linalg::{is_zero_vector, unit_vector, SparseMatrix, Subspace, Vector};
use crate::malcev::{dualize, malcev_summary, MalcevSummary};
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// A finite-dimensional bigraded ring playing the role of the basic cohomology
/// of a quasi-regular Sasakian structure, together with the class of the
/// transverse Kaehler form in degree 2.
#[derive(Debug, Clone)]
pub struct BasicRing {
    pub fdga: Fdga,
    pub omega: Vector,
    pub n: usize,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next k-subset of {0..n-1} in lexicographic order
        let mut i = k;
        while i > 0 {
            i -= 1;
            if cur[i] != i + n - k {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
    }
}

/// i^e for e in {0, 1}.
fn i_pow(e: i64) -> Scalar {
    if e % 2 == 1 {
        Scalar::i()
    } else {
        Scalar::one()
    }
}

/// The basic ring of the Heisenberg Sasakian structure on dimension 2n+1: the
/// exterior algebra on z_1..z_n of type (1,0) and their conjugates, in bases
/// adapted so that conjugation matches the k-th (p,q) element with the k-th
/// (q,p) element and fixes the diagonal components pointwise.
pub fn heisenberg_basic_ring(n: usize) -> Result<BasicRing> {
    if n == 0 {
        return Err(Error::Validation("need n >= 1".into()));
    }
    let mut free = FreeCdga::new("ext", 2 * n + 1);
    for k in 1..=n {
        free.add_generator(format!("z{k}"), 1, Some((1, 0)))?;
    }
    for k in 1..=n {
        free.add_generator(format!("zb{k}"), 1, Some((0, 1)))?;
    }
    let mono = |s: &[usize], t: &[usize]| -> Monomial {
        let mut factors: Vec<(usize, u32)> = s.iter().map(|&j| (j, 1)).collect();
        factors.extend(t.iter().map(|&j| (j + n, 1)));
        Monomial::from_factors(factors)
    };
    // real-adapted basis elements per (p, q) component
    let mut comps: BTreeMap<(i64, i64), Vec<GcaElement>> = BTreeMap::new();
    for p in 0..=n {
        for q in 0..=n {
            let ss = subsets(n, p);
            let ts = subsets(n, q);
            let mut elems = Vec::new();
            if p == q {
                for s in &ss {
                    elems.push(GcaElement::term(mono(s, s), i_pow(p as i64)));
                }
                for (a, s) in ss.iter().enumerate() {
                    for t in &ss[a + 1..] {
                        let m1 = GcaElement::term(mono(s, t), Scalar::one());
                        let m2 = GcaElement::term(mono(t, s), Scalar::one());
                        if p % 2 == 0 {
                            elems.push(m1.add(&m2));
                            elems.push(m1.sub(&m2).scale(&Scalar::i()));
                        } else {
                            elems.push(m1.add(&m2).scale(&Scalar::i()));
                            elems.push(m1.sub(&m2));
                        }
                    }
                }
            } else if p < q {
                let scale = i_pow((p * q) as i64);
                for s in &ss {
                    for t in &ts {
                        elems.push(GcaElement::term(mono(s, t), scale.clone()));
                    }
                }
            } else {
                // conj-images of the (q, p) elements, position by position
                let scale = i_pow((p * q) as i64);
                for s in &ts {
                    for t in &ss {
                        elems.push(GcaElement::term(mono(t, s), scale.clone()));
                    }
                }
            }
            if !elems.is_empty() {
                comps.insert((p as i64, q as i64), elems);
            }
        }
    }
    // assemble into a ring with labels, change of basis per total degree
    let top = 2 * n;
    let mut b = FdgaBuilder::new(format!("HB(h{})", 2 * n + 1), top);
    let mut refs: Vec<Vec<((i64, i64), GcaElement)>> = vec![Vec::new(); top + 1];
    for (&(p, q), elems) in &comps {
        let d = (p + q) as usize;
        for (k, e) in elems.iter().enumerate() {
            let label = match (p, q) {
                (0, 0) => "one".to_string(),
                (1, 0) => format!("z{}", k + 1),
                (0, 1) => format!("zb{}", k + 1),
                _ => format!("w{p}{q}_{}", k + 1),
            };
            b.add_basis_element(d, label, Some((p, q)));
            refs[d].push(((p, q), e.clone()));
        }
    }
    let mut basis_mats = Vec::new();
    for (d, elems) in refs.iter().enumerate() {
        let slice = free.degree_slice(d);
        let mut cols = Vec::new();
        for (_, e) in elems {
            cols.push(free.coords(e, d, &slice)?);
        }
        basis_mats.push((slice, SparseMatrix::from_columns(cols.first().map_or(0, |c| c.len()), &cols)));
    }
    let in_basis = |d: usize, e: &GcaElement| -> Result<Vector> {
        let (slice, mat) = &basis_mats[d];
        let coords = free.coords(e, d, slice)?;
        mat.solve(&coords)
            .ok_or_else(|| Error::Internal("product left the adapted basis span".into()))
    };
    for da in 0..=top {
        for db in da..=top.saturating_sub(da) {
            for (ia, (_, ea)) in refs[da].iter().enumerate() {
                for (ib, (_, eb)) in refs[db].iter().enumerate() {
                    let prod = free.multiply(ea, eb)?;
                    if prod.is_zero() {
                        continue;
                    }
                    b.set_product((da, ia), (db, ib), in_basis(da + db, &prod)?);
                }
            }
        }
    }
    // conjugation permutes (p, q) <-> (q, p) positionally
    let mut conj_mats = Vec::new();
    for elems in &refs {
        let mut offsets: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for (idx, ((p, q), _)) in elems.iter().enumerate() {
            offsets.entry((*p, *q)).or_insert(idx);
        }
        let mut entries = Vec::new();
        for (idx, ((p, q), _)) in elems.iter().enumerate() {
            let src = offsets[&(*p, *q)];
            let dst = offsets[&(*q, *p)];
            entries.push((dst + (idx - src), idx, Scalar::one()));
        }
        conj_mats.push(SparseMatrix::from_entries(elems.len(), elems.len(), entries)?);
    }
    b.set_conjugation(conj_mats);
    let unit = (0usize, 0usize);
    let fdga = b.finish(unit)?;
    let mut omega_elem = GcaElement::zero();
    for k in 0..n {
        omega_elem.add_term(mono(&[k], &[k]), &Scalar::i());
    }
    let omega = in_basis(2, &omega_elem)?;
    Ok(BasicRing { fdga, omega, n })
}

fn surface_ring_labeled(genus: usize, offset: usize, vol: &str) -> Result<BasicRing> {
    if genus == 0 {
        return Err(Error::Validation("need genus >= 1".into()));
    }
    let mut b = FdgaBuilder::new(format!("HB(S{genus})"), 2);
    let one = b.add_basis_element(0, "one", Some((0, 0)));
    let mut a_refs = Vec::new();
    let mut ab_refs = Vec::new();
    for k in 1..=genus {
        a_refs.push(b.add_basis_element(1, format!("a{}", offset + k), Some((1, 0))));
    }
    for k in 1..=genus {
        ab_refs.push(b.add_basis_element(1, format!("ab{}", offset + k), Some((0, 1))));
    }
    let v = b.add_basis_element(2, vol, Some((1, 1)));
    for k in 0..genus {
        b.set_product(a_refs[k], ab_refs[k], vec![-Scalar::i()]);
    }
    let mut conj1 = Vec::new();
    for k in 0..genus {
        conj1.push((genus + k, k, Scalar::one()));
        conj1.push((k, genus + k, Scalar::one()));
    }
    b.set_conjugation(vec![
        SparseMatrix::identity(1),
        SparseMatrix::from_entries(2 * genus, 2 * genus, conj1)?,
        SparseMatrix::identity(1),
    ]);
    let fdga = b.finish(one)?;
    let _ = v;
    Ok(BasicRing {
        fdga,
        omega: vec![Scalar::one()],
        n: 1,
    })
}

/// H*(closed oriented surface of the given genus) with its Kaehler class.
pub fn surface_ring(genus: usize) -> Result<BasicRing> {
    surface_ring_labeled(genus, 0, "vol")
}

pub fn torus_ring() -> Result<BasicRing> {
    surface_ring(1)
}

/// Graded tensor product of two rings with bidegrees and conjugations. Labels
/// are joined with '_' except across units; per-degree label collisions are
/// rejected.
pub fn tensor_fdga(a: &Fdga, b: &Fdga, name: impl Into<String>) -> Result<Fdga> {
    let (ta, tb) = (a.max_degree(), b.max_degree());
    let top = ta + tb;
    let ua = a.unit().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let ub = b.unit().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut builder = FdgaBuilder::new(name, top);
    // layout per degree: (deg of left factor, left index, right index)
    let mut layout: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); top + 1];
    let mut pos: BTreeMap<(usize, usize, usize, usize), usize> = BTreeMap::new();
    for d in 0..=top {
        for da in d.saturating_sub(tb)..=d.min(ta) {
            let db = d - da;
            for ia in 0..a.dim(da) {
                for ib in 0..b.dim(db) {
                    let la = &a.labels(da)[ia];
                    let lb = &b.labels(db)[ib];
                    let label = if da == 0 && ia == ua {
                        if db == 0 && ib == ub {
                            "one".to_string()
                        } else {
                            lb.clone()
                        }
                    } else if db == 0 && ib == ub {
                        la.clone()
                    } else {
                        format!("{la}_{lb}")
                    };
                    if builder.dim(d) != layout[d].len() {
                        return Err(Error::Internal("tensor layout out of step".into()));
                    }
                    let bid = match (a.bidegree((da, ia)), b.bidegree((db, ib))) {
                        (Some((p1, q1)), Some((p2, q2))) => Some((p1 + p2, q1 + q2)),
                        _ => None,
                    };
                    pos.insert((da, ia, db, ib), layout[d].len());
                    layout[d].push((da, ia, ib));
                    builder.add_basis_element(d, label, bid);
                }
            }
        }
    }
    for d in 0..=top {
        let seen: std::collections::BTreeSet<_> = (0..layout[d].len())
            .map(|k| builder_label(&layout, a, b, d, k, ua, ub))
            .collect();
        if seen.len() != layout[d].len() {
            return Err(Error::Validation(format!(
                "tensor label collision in degree {d}"
            )));
        }
    }
    // products with the Koszul sign for moving the right factor past the left
    for d1 in 0..=top {
        for d2 in 0..=top - d1 {
            for (k1, &(da1, ia1, ib1)) in layout[d1].iter().enumerate() {
                let db1 = d1 - da1;
                for (k2, &(da2, ia2, ib2)) in layout[d2].iter().enumerate() {
                    let db2 = d2 - da2;
                    if da1 + da2 > ta || db1 + db2 > tb {
                        continue;
                    }
                    let pa = a.multiply(da1, &unit_vector(a.dim(da1), ia1), da2, &unit_vector(a.dim(da2), ia2))?;
                    let pb = b.multiply(db1, &unit_vector(b.dim(db1), ib1), db2, &unit_vector(b.dim(db2), ib2))?;
                    let mut coords = vec![Scalar::zero(); layout[d1 + d2].len()];
                    let negate = (db1 * da2) % 2 == 1;
                    for (ka, ca) in pa.iter().enumerate() {
                        if ca.is_zero() {
                            continue;
                        }
                        for (kb, cb) in pb.iter().enumerate() {
                            if cb.is_zero() {
                                continue;
                            }
                            let idx = pos[&(da1 + da2, ka, db1 + db2, kb)];
                            let val = ca * cb;
                            coords[idx] = if negate { -&val } else { val };
                        }
                    }
                    builder.set_product((d1, k1), (d2, k2), coords);
                }
            }
        }
    }
    // d(u x v) = du x v + (-1)^{|u|} u x dv
    for d in 0..top {
        for (k, &(da, ia, ib)) in layout[d].iter().enumerate() {
            let db = d - da;
            let mut coords = vec![Scalar::zero(); layout[d + 1].len()];
            if da < ta {
                for (r, c) in a.d_matrix(da)?.column(ia).iter().enumerate() {
                    if !c.is_zero() {
                        coords[pos[&(da + 1, r, db, ib)]] = c.clone();
                    }
                }
            }
            if db < tb {
                for (r, c) in b.d_matrix(db)?.column(ib).iter().enumerate() {
                    if !c.is_zero() {
                        let val = if da % 2 == 1 { -c } else { c.clone() };
                        coords[pos[&(da, ia, db + 1, r)]] = val;
                    }
                }
            }
            builder.set_differential((d, k), coords);
        }
    }
    // conj(u x v) = conj(u) x conj(v)
    let mut conj_mats = Vec::new();
    for (d, lay) in layout.iter().enumerate() {
        let mut entries = Vec::new();
        for (k, &(da, ia, ib)) in lay.iter().enumerate() {
            let db = d - da;
            let ca = a.conjugation(da).matrix;
            let cb = b.conjugation(db).matrix;
            for &(ra, col_a, ref va) in ca.entries() {
                if col_a != ia {
                    continue;
                }
                for &(rb, col_b, ref vb) in cb.entries() {
                    if col_b != ib {
                        continue;
                    }
                    entries.push((pos[&(da, ra, db, rb)], k, va * vb));
                }
            }
        }
        conj_mats.push(SparseMatrix::from_entries(lay.len(), lay.len(), entries)?);
    }
    builder.set_conjugation(conj_mats);
    let unit_pos = pos[&(0, ua, 0, ub)];
    builder.finish((0, unit_pos))
}

fn builder_label(
    layout: &[Vec<(usize, usize, usize)>],
    a: &Fdga,
    b: &Fdga,
    d: usize,
    k: usize,
    ua: usize,
    ub: usize,
) -> String {
    let (da, ia, ib) = layout[d][k];
    let db = d - da;
    let la = &a.labels(da)[ia];
    let lb = &b.labels(db)[ib];
    if da == 0 && ia == ua {
        if db == 0 && ib == ub {
            "one".into()
        } else {
            lb.clone()
        }
    } else if db == 0 && ib == ub {
        la.clone()
    } else {
        format!("{la}_{lb}")
    }
}

/// H*(Sigma_2 x T^2) with the product Kaehler class; a genuinely non-nilmanifold
/// basic ring with n = 2.
pub fn surfaces_ring() -> Result<BasicRing> {
    let s = surface_ring_labeled(2, 0, "volS")?;
    let t = surface_ring_labeled(1, 2, "volT")?;
    let fdga = tensor_fdga(&s.fdga, &t.fdga, "HB(S2xT2)")?;
    let deg2 = fdga.labels(2);
    let mut omega = vec![Scalar::zero(); deg2.len()];
    for (k, l) in deg2.iter().enumerate() {
        if l == "volS" || l == "volT" {
            omega[k] = Scalar::one();
        }
    }
    Ok(BasicRing { fdga, omega, n: 2 })
}

/// Checks everything a basic ring must satisfy: a validated bigraded ring with
/// zero differential, scalars in degree 0, type-compatible conjugation, and a
/// real (1,1)-class omega with omega^n != 0 that multiplies injectively from
/// degree 1 to degree 3 when n >= 2. Returns non-fatal findings (currently:
/// Poincare asymmetry) as warnings.
pub fn validate_basic_ring(r: &BasicRing) -> Result<Vec<String>> {
    let f = &r.fdga;
    let n = r.n;
    if n == 0 {
        return Err(Error::Validation("need n >= 1".into()));
    }
    if f.top_degree() != 2 * n {
        return Err(Error::Validation(format!(
            "ring has top degree {}, want 2n = {}",
            f.top_degree(),
            2 * n
        )));
    }
    f.validate()?;
    for k in 0..=2 * n {
        if !f.d_matrix(k)?.is_zero() {
            return Err(Error::Validation(format!(
                "basic ring must have zero differential, degree {k} does not"
            )));
        }
        let Some(bids) = f.bidegrees_at(k) else {
            return Err(Error::Validation("basic ring needs bidegrees".into()));
        };
        for (idx, &(p, q)) in bids.iter().enumerate() {
            if p < 0 || q < 0 || (p + q) as usize != k {
                return Err(Error::Validation(format!(
                    "element {} has type ({p}, {q}) in degree {k}",
                    f.labels(k)[idx]
                )));
            }
            // conjugation must send (p, q) to (q, p)
            let image = f.conjugation(k).apply(&unit_vector(f.dim(k), idx));
            for (j, c) in image.iter().enumerate() {
                if !c.is_zero() && bids[j] != (q, p) {
                    return Err(Error::Validation(format!(
                        "conjugate of {} has a component of type ({}, {})",
                        f.labels(k)[idx],
                        bids[j].0,
                        bids[j].1
                    )));
                }
            }
        }
    }
    if f.dim(0) != 1 {
        return Err(Error::Validation("degree 0 must be the scalars".into()));
    }
    // omega: degree 2, real, type (1, 1)
    if r.omega.len() != f.dim(2) || r.omega.iter().all(|c| c.is_zero()) {
        return Err(Error::Validation("omega must be a nonzero degree-2 class".into()));
    }
    let bids2 = f.bidegrees_at(2).unwrap();
    for (k, c) in r.omega.iter().enumerate() {
        if !c.is_zero() && bids2[k] != (1, 1) {
            return Err(Error::Validation("omega must have type (1, 1)".into()));
        }
    }
    if f.conjugation(2).apply(&r.omega) != r.omega {
        return Err(Error::Validation("omega must be real".into()));
    }
    // omega^n != 0
    let mut power = r.omega.clone();
    for k in 1..n {
        power = f.multiply(2 * k, &power, 2, &r.omega)?;
    }
    if power.iter().all(|c| c.is_zero()) {
        return Err(Error::Validation(format!("omega^{n} vanishes")));
    }
    // Lefschetz-type injectivity into degree 3
    if n >= 2 {
        let cols: Vec<Vector> = (0..f.dim(1))
            .map(|k| f.multiply(1, &unit_vector(f.dim(1), k), 2, &r.omega))
            .collect::<Result<_>>()?;
        if SparseMatrix::from_columns(f.dim(3), &cols).rank() != f.dim(1) {
            return Err(Error::Validation(
                "multiplication by omega is not injective on degree 1".into(),
            ));
        }
    }
    let mut warnings = Vec::new();
    for k in 0..=n {
        if f.dim(k) != f.dim(2 * n - k) {
            warnings.push(format!(
                "dimensions are not Poincare-symmetric: dim {} = {}, dim {} = {}",
                k,
                f.dim(k),
                2 * n - k,
                f.dim(2 * n - k)
            ));
        }
    }
    Ok(warnings)
}

fn exact_unit(v: &[Scalar]) -> Option<usize> {
    let mut hit = None;
    for (j, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if hit.is_some() || !c.is_one() {
            return None;
        }
        hit = Some(j);
    }
    hit
}

/// Rewrites a ring on a basis where conjugation acts positionally: diagonal
/// (p, p) components are fixed pointwise and the k-th element of each (p, q)
/// component pairs with the k-th element of (q, p).  The text format can only
/// express rings of that shape; the builders in this crate already produce
/// it, but tensor products in general do not.
pub fn real_adapted(r: &BasicRing) -> Result<BasicRing> {
    let f = &r.fdga;
    let top = f.top_degree();
    if f.dim(0) != 1 {
        return Err(Error::Validation("need a one-dimensional degree 0".into()));
    }
    let mut cols: Vec<Vec<Vector>> = Vec::with_capacity(top + 1);
    let mut labels: Vec<Vec<String>> = Vec::with_capacity(top + 1);
    let mut bids: Vec<Vec<(i64, i64)>> = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let dim = f.dim(d);
        let bid = f
            .bidegrees_at(d)
            .ok_or_else(|| Error::Validation("ring basis lacks bidegrees".into()))?;
        let old = f.labels(d);
        let conj = f.conjugation(d);
        let mut blocks: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
        for (k, &pq) in bid.iter().enumerate() {
            blocks.entry(pq).or_default().push(k);
        }
        let mut dcols = Vec::new();
        let mut dlab = Vec::new();
        let mut dbid = Vec::new();
        for (&(p, q), members) in &blocks {
            match p.cmp(&q) {
                std::cmp::Ordering::Less => {
                    for &k in members {
                        dcols.push(unit_vector(dim, k));
                        dlab.push(old[k].clone());
                        dbid.push((p, q));
                    }
                }
                std::cmp::Ordering::Greater => {
                    // conjugate images of the (q, p) elements, in their order
                    let partners = blocks.get(&(q, p)).ok_or_else(|| {
                        Error::Validation(format!("component ({q}, {p}) is missing"))
                    })?;
                    if partners.len() != members.len() {
                        return Err(Error::Validation(format!(
                            "components ({p}, {q}) and ({q}, {p}) have different sizes"
                        )));
                    }
                    for &src in partners {
                        let v = conj.apply(&unit_vector(dim, src));
                        let lab = match exact_unit(&v) {
                            Some(j) => old[j].clone(),
                            None => format!("cj_{}", old[src]),
                        };
                        dcols.push(v);
                        dlab.push(lab);
                        dbid.push((p, q));
                    }
                }
                std::cmp::Ordering::Equal => {
                    // real (conjugation-fixed) basis of the diagonal block
                    let mut acc = Subspace::zero(dim);
                    let mut picked = 0usize;
                    for &k in members {
                        let e = unit_vector(dim, k);
                        let s = conj.apply(&e);
                        let candidates: Vec<(Vector, String)> = if s == e {
                            vec![(e, old[k].clone())]
                        } else {
                            let re: Vector =
                                e.iter().zip(&s).map(|(a, b)| a + b).collect();
                            let im: Vector = e
                                .iter()
                                .zip(&s)
                                .map(|(a, b)| &(a - b) * &Scalar::i())
                                .collect();
                            vec![
                                (re, format!("re_{}", old[k])),
                                (im, format!("im_{}", old[k])),
                            ]
                        };
                        for (cand, lab) in candidates {
                            if is_zero_vector(&cand) || acc.contains(&cand) {
                                continue;
                            }
                            acc = acc.sum(&Subspace::from_rows(dim, vec![cand.clone()]));
                            dcols.push(cand);
                            dlab.push(lab);
                            dbid.push((p, p));
                            picked += 1;
                        }
                    }
                    if picked != members.len() {
                        return Err(Error::Internal(
                            "could not extract a real basis for a diagonal component".into(),
                        ));
                    }
                }
            }
        }
        if dcols.len() != dim {
            return Err(Error::Internal("change of basis lost elements".into()));
        }
        cols.push(dcols);
        labels.push(dlab);
        bids.push(dbid);
    }
    if cols[0][0] != f.unit() {
        return Err(Error::Internal("unit moved under the change of basis".into()));
    }
    let bmats: Vec<SparseMatrix> = cols
        .iter()
        .enumerate()
        .map(|(d, c)| SparseMatrix::from_columns(f.dim(d), c))
        .collect();
    let mut builder = FdgaBuilder::new(f.name.clone(), top);
    for d in 0..=top {
        for (k, lab) in labels[d].iter().enumerate() {
            builder.add_basis_element(d, lab, Some(bids[d][k]));
        }
    }
    for d1 in 1..=top {
        for d2 in d1..=top.saturating_sub(d1) {
            for i in 0..cols[d1].len() {
                for j in 0..cols[d2].len() {
                    if d1 == d2 && j < i {
                        continue;
                    }
                    let prod = f.multiply(d1, &cols[d1][i], d2, &cols[d2][j])?;
                    if is_zero_vector(&prod) {
                        continue;
                    }
                    let coords = bmats[d1 + d2].solve(&prod).ok_or_else(|| {
                        Error::Internal("product left the new basis span".into())
                    })?;
                    builder.set_product((d1, i), (d2, j), coords);
                }
            }
        }
    }
    let mut mats = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let dim = cols[d].len();
        let mut blocks: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
        for (k, &pq) in bids[d].iter().enumerate() {
            blocks.entry(pq).or_default().push(k);
        }
        let mut entries = Vec::new();
        for (&(p, q), members) in &blocks {
            let partners = &blocks[&(q, p)];
            for (k, &m) in members.iter().enumerate() {
                entries.push((partners[k], m, Scalar::one()));
            }
        }
        mats.push(SparseMatrix::from_entries(dim, dim, entries)?);
    }
    builder.set_conjugation(mats);
    let omega = bmats[2]
        .solve(&r.omega)
        .ok_or_else(|| Error::Internal("omega left the new basis span".into()))?;
    Ok(BasicRing {
        fdga: builder.finish((0, 0))?,
        omega,
        n: r.n,
    })
}

/// The model of a Sasakian manifold built from its basic ring: the ring with
/// one new odd generator y of type (1, 1), dy = omega, y^2 = 0, carrying the
/// two-step weight filtration (basic part in weight 0) and the Hodge
/// filtration by first type component.
pub struct SasakiModel {
    pub fdga: Fdga,
    pub w: Vec<Filtration>,
    pub f: Vec<Filtration>,
    pub n: usize,
}

fn ylabel(l: &str) -> String {
    if l == "one" {
        "y".into()
    } else {
        format!("{l}y")
    }
}

pub fn build_model(r: &BasicRing) -> Result<SasakiModel> {
    let hb = &r.fdga;
    let n = r.n;
    let top = 2 * n + 1;
    let mut b = FdgaBuilder::new(format!("{}[y]", hb.name), top);
    // each degree: the basic part first, then (degree-1 basic) . y
    let mut basic: BTreeMap<usize, Vec<BasisRef>> = BTreeMap::new();
    let mut ypart: BTreeMap<usize, Vec<BasisRef>> = BTreeMap::new();
    for k in 0..=top {
        let mut brefs = Vec::new();
        if k <= 2 * n {
            let bids = hb.bidegrees_at(k).ok_or_else(|| {
                Error::Validation("basic ring needs bidegrees".into())
            })?;
            for (idx, l) in hb.labels(k).iter().enumerate() {
                brefs.push(b.add_basis_element(k, l.clone(), Some(bids[idx])));
            }
        }
        basic.insert(k, brefs);
        let mut yrefs = Vec::new();
        if k >= 1 && k - 1 <= 2 * n {
            let bids = hb.bidegrees_at(k - 1).unwrap();
            for (idx, l) in hb.labels(k - 1).iter().enumerate() {
                let (p, q) = bids[idx];
                yrefs.push(b.add_basis_element(k, ylabel(l), Some((p + 1, q + 1))));
            }
        }
        ypart.insert(k, yrefs);
    }
    let place = |coords: &Vector, slots: &[BasisRef], dim: usize| -> Vector {
        let mut out = vec![Scalar::zero(); dim];
        for (k, c) in coords.iter().enumerate() {
            out[slots[k].1] = c.clone();
        }
        out
    };
    for da in 0..=2 * n {
        for ia in 0..hb.dim(da) {
            let ea = unit_vector(hb.dim(da), ia);
            for db in 0..=2 * n {
                let out_deg = da + db;
                for ib in 0..hb.dim(db) {
                    let eb = unit_vector(hb.dim(db), ib);
                    let prod = hb.multiply(da, &ea, db, &eb)?;
                    let nonzero = prod.iter().any(|c| !c.is_zero());
                    // basic . basic
                    if out_deg <= 2 * n && nonzero {
                        let coords = place(&prod, &basic[&out_deg], b.dim(out_deg));
                        b.set_product(basic[&da][ia], basic[&db][ib], coords);
                    }
                    // basic . (b'y) = (bb')y and (by) . b' = (-1)^{|b'|}(bb')y
                    if out_deg + 1 <= top && nonzero {
                        let ycoords = place(&prod, &ypart[&(out_deg + 1)], b.dim(out_deg + 1));
                        b.set_product(basic[&da][ia], ypart[&(db + 1)][ib], ycoords.clone());
                        let signed: Vector = if db % 2 == 1 {
                            ycoords.iter().map(|c| -c).collect()
                        } else {
                            ycoords
                        };
                        b.set_product(ypart[&(da + 1)][ia], basic[&db][ib], signed);
                    }
                }
            }
            // d(by) = (-1)^{|b|} b omega
            if da + 2 <= top {
                let bomega = hb.multiply(da, &ea, 2, &r.omega)?;
                let coords = place(&bomega, &basic[&(da + 2)], b.dim(da + 2));
                let signed: Vector = if da % 2 == 1 {
                    coords.iter().map(|c| -c).collect()
                } else {
                    coords
                };
                b.set_differential(ypart[&(da + 1)][ia], signed);
            }
        }
    }
    let mut conj_mats = Vec::new();
    for k in 0..=top {
        let dim = basic[&k].len() + ypart[&k].len();
        let mut entries = Vec::new();
        if k <= 2 * n {
            for &(r_, c, ref v) in hb.conjugation(k).matrix.entries() {
                entries.push((basic[&k][r_].1, basic[&k][c].1, v.clone()));
            }
        }
        if k >= 1 && k - 1 <= 2 * n {
            for &(r_, c, ref v) in hb.conjugation(k - 1).matrix.entries() {
                entries.push((ypart[&k][r_].1, ypart[&k][c].1, v.clone()));
            }
        }
        conj_mats.push(SparseMatrix::from_entries(dim, dim, entries)?);
    }
    b.set_conjugation(conj_mats);
    let fdga = b.finish(basic[&0][0])?;
    let mut w = Vec::new();
    let mut f = Vec::new();
    for k in 0..=top {
        let dim = fdga.dim(k);
        let basic_idx: Vec<usize> = basic[&k].iter().map(|&(_, i)| i).collect();
        w.push(Filtration::increasing(
            dim,
            vec![
                (0, Subspace::coordinate(dim, &basic_idx)),
                (1, Subspace::full(dim)),
            ],
        )?);
        let bids = fdga.bidegrees_at(k).unwrap();
        let pmax = bids.iter().map(|&(p, _)| p).max().unwrap_or(0);
        let mut jumps = Vec::new();
        for p in 0..=pmax {
            let idx: Vec<usize> = (0..dim).filter(|&j| bids[j].0 >= p).collect();
            jumps.push((p, Subspace::coordinate(dim, &idx)));
        }
        f.push(Filtration::decreasing(dim, jumps)?);
    }
    Ok(SasakiModel { fdga, w, f, n })
}

/// The canonical mixed-diagram instance a Sasaki model carries: the model
/// mapped to itself by the identity, with filtrations as constructed.
pub fn sasaki_mhd_check(m: &SasakiModel) -> Result<MhdReport> {
    let phi = MatrixMorphism::identity(&m.fdga);
    mhd_check(&m.fdga, &m.w, &m.fdga, &m.w, &m.f, &phi)
}

#[derive(Debug, Clone)]
pub struct HodgeSplitReport {
    /// Deligne splitting of H^r for each degree r.
    pub bigradings: Vec<Bigrading>,
    /// H^1 is spanned by (1,0) and (0,1) components.
    pub h1_split: bool,
    /// H^{2n+1} is pure of type (n+1, n+1).
    pub top_pure: bool,
    /// n >= 2 only: H^2 decomposes into (2,0), (1,1), (0,2).
    pub h2_split: Option<bool>,
    pub h2_types: Vec<((i64, i64), usize)>,
    pub pass: bool,
}

/// Induces weight (shifted by degree), Hodge filtration, and conjugation on
/// each cohomology chart of the model, and splits them a la Deligne.
pub fn hodge_split_check(m: &SasakiModel) -> Result<HodgeSplitReport> {
    let top = m.fdga.top_degree();
    let coh = cohomology(&m.fdga, top)?;
    let mut wind = Vec::new();
    let mut find = Vec::new();
    let mut cind = Vec::new();
    for r in 0..=top {
        let chart = coh.chart(r);
        let z = m.fdga.d_matrix(r)?.kernel_basis();
        let mut wj = Vec::new();
        for i in m.w[r].indices() {
            wj.push((i, chart.project_span(m.w[r].at(i).intersect(&z).basis())?));
        }
        wind.push(Filtration::increasing(chart.dim(), wj)?);
        let mut fj = Vec::new();
        for i in m.f[r].indices() {
            fj.push((i, chart.project_span(m.f[r].at(i).intersect(&z).basis())?));
        }
        find.push(Filtration::decreasing(chart.dim(), fj)?);
        cind.push(induce_conjugation(chart, &m.fdga.conjugation(r))?);
    }
    let shifted = shifted_weight(&wind);
    let mut bigradings = Vec::new();
    for r in 0..=top {
        bigradings.push(deligne_splitting(&shifted[r], &find[r], &cind[r])?);
    }
    let h1_split = bigradings[1]
        .dims()
        .keys()
        .all(|&t| t == (1, 0) || t == (0, 1));
    let nn = m.n as i64;
    let top_pure = bigradings[top]
        .dims()
        .keys()
        .all(|&t| t == (nn + 1, nn + 1));
    let h2_types: Vec<((i64, i64), usize)> = bigradings[2].dims().into_iter().collect();
    let h2_split = if m.n >= 2 {
        Some(
            h2_types
                .iter()
                .all(|&(t, _)| matches!(t, (2, 0) | (1, 1) | (0, 2))),
        )
    } else {
        None
    };
    let pass = h1_split && top_pure && h2_split != Some(false);
    Ok(HodgeSplitReport {
        bigradings,
        h1_split,
        top_pure,
        h2_split,
        h2_types,
        pass,
    })
}

#[derive(Debug)]
pub struct SasakiPipelineReport {
    pub warnings: Vec<String>,
    pub hodge: HodgeSplitReport,
    pub mhd: MhdReport,
    pub formality: FormalityReport,
    /// types of the stage-2 generators, when a second stage was needed.
    pub v2_types: Vec<(i64, i64)>,
    pub v2_types_ok: bool,
    pub phi_type_ok: bool,
    /// (generators, relations) of the quadratic presentation, when formal and
    /// stabilized.
    pub presentation: Option<(usize, usize)>,
    pub malcev: Option<MalcevSummary>,
}

/// Ring -> model -> filtrations -> typed tower -> formality, with the Malcev
/// side brought along when the tower settles.
pub fn sasaki_pipeline(r: &BasicRing, max_stages: usize) -> Result<SasakiPipelineReport> {
    let warnings = validate_basic_ring(r)?;
    let m = build_model(r)?;
    let hodge = hodge_split_check(&m)?;
    let mhd = sasaki_mhd_check(&m)?;
    let h1 = hodge.bigradings[1].clone();
    let h2 = hodge.bigradings[2].clone();
    let bt = bigraded_tower(&m.fdga, &h1, Some(&h2), max_stages)?;
    let formality = one_formal(&bt.tower)?;
    let v2_types = bt.types.get(1).cloned().unwrap_or_default();
    let v2_types_ok = v2_types
        .iter()
        .all(|&t| matches!(t, (2, 0) | (1, 1) | (0, 2)));
    let (presentation, malcev) = if bt.tower.stabilized && formality.verdict {
        let p = quadratic_presentation(&bt.tower)?;
        let lt = dualize(&bt.tower)?;
        (
            Some((p.generators, p.relations.dim())),
            Some(malcev_summary(&lt)?),
        )
    } else {
        (None, None)
    };
    Ok(SasakiPipelineReport {
        warnings,
        hodge,
        mhd,
        formality,
        v2_types,
        v2_types_ok,
        phi_type_ok: bt.phi_type_ok,
        presentation,
        malcev,
    })
}
