//! Finite-dimensional DGAs on explicit graded bases.
//!
//! An [`Fdga`] stores one basis per degree, a sparse multiplication table over
//! ordered basis pairs, one differential matrix per degree, and optionally a real
//! structure (conjugation matrix per degree) and Hodge bidegrees per basis element.
//! `validate()` checks the full axiom list — graded commutativity, associativity,
//! unitality, d^2 = 0, the Leibniz rule, and conjugation coherence — entrywise and
//! exactly; it is meant to run once per constructed fixture, not in hot loops.

use crate::dga::Dga;
use crate::error::{Error, Result};
use crate::linalg::{Conjugation, SparseMatrix, Vector};
use crate::scalar::Scalar;
use std::collections::BTreeMap;

pub type BasisRef = (usize, usize); // (degree, index)

#[derive(Debug, Clone)]
pub struct Fdga {
    pub name: String,
    labels: Vec<Vec<String>>,
    /// coords of e_a * e_b in degree da+db; both orders stored explicitly
    mult: BTreeMap<(BasisRef, BasisRef), Vector>,
    /// diff[k]: dim(k+1) x dim(k); length = number of degrees
    diff: Vec<SparseMatrix>,
    unit: BasisRef,
    conj: Option<Vec<SparseMatrix>>,
    bidegrees: Option<Vec<Vec<(i64, i64)>>>,
}

impl Fdga {
    pub fn top_degree(&self) -> usize {
        self.labels.len().saturating_sub(1)
    }

    pub fn labels(&self, degree: usize) -> &[String] {
        if degree < self.labels.len() {
            &self.labels[degree]
        } else {
            &[]
        }
    }

    pub fn total_dim(&self) -> usize {
        self.labels.iter().map(|l| l.len()).sum()
    }

    pub fn bidegree(&self, b: BasisRef) -> Option<(i64, i64)> {
        self.bidegrees.as_ref().map(|bd| bd[b.0][b.1])
    }

    pub fn bidegrees_at(&self, degree: usize) -> Option<&[(i64, i64)]> {
        self.bidegrees.as_ref().map(|bd| bd[degree].as_slice())
    }

    pub fn product(&self, a: BasisRef, b: BasisRef) -> Vector {
        let out_deg = a.0 + b.0;
        let out_dim = if out_deg < self.labels.len() {
            self.labels[out_deg].len()
        } else {
            0
        };
        self.mult
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(|| vec![Scalar::zero(); out_dim])
    }

    /// Full validation: every axiom, entrywise. Quadratic/cubic in total
    /// dimension; run once per fixture.
    pub fn validate(&self) -> Result<()> {
        let top = self.top_degree();
        // unit
        if self.unit.0 != 0 {
            return Err(Error::Validation("unit must live in degree 0".into()));
        }
        for da in 0..=top {
            for ia in 0..self.labels[da].len() {
                let a = (da, ia);
                let ua = self.product(self.unit, a);
                let au = self.product(a, self.unit);
                let mut e = vec![Scalar::zero(); self.labels[da].len()];
                e[ia] = Scalar::one();
                if ua != e || au != e {
                    return Err(Error::Validation(format!(
                        "unit fails on {}",
                        self.labels[da][ia]
                    )));
                }
            }
        }
        // graded commutativity
        for (&((da, ia), (db, ib)), v) in &self.mult {
            let sign = if (da * db) % 2 == 1 {
                Scalar::from_int(-1)
            } else {
                Scalar::one()
            };
            let rev = self.product((db, ib), (da, ia));
            let expect: Vector = rev.iter().map(|x| x * &sign).collect();
            if *v != expect {
                return Err(Error::Validation(format!(
                    "graded commutativity fails on {} * {}",
                    self.labels[da][ia], self.labels[db][ib]
                )));
            }
        }
        // associativity
        let dims: Vec<usize> = (0..=top).map(|k| self.labels[k].len()).collect();
        let basis = |deg: usize, i: usize| -> Vector {
            let mut e = vec![Scalar::zero(); dims[deg]];
            e[i] = Scalar::one();
            e
        };
        for da in 0..=top {
            for db in 0..=top - da {
                for dc in 0..=top {
                    for ia in 0..dims[da] {
                        for ib in 0..dims[db] {
                            let ab = self.product((da, ia), (db, ib));
                            for ic in 0..dims[dc] {
                                let bc = self.product((db, ib), (dc, ic));
                                let left = self.multiply_coords(da + db, &ab, dc, &basis(dc, ic));
                                let right = self.multiply_coords(da, &basis(da, ia), db + dc, &bc);
                                if left != right {
                                    return Err(Error::Validation(format!(
                                        "associativity fails on ({}, {}, {})",
                                        self.labels[da][ia],
                                        self.labels[db][ib],
                                        self.labels[dc][ic]
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        // d^2 = 0
        for k in 0..top.saturating_sub(1) {
            if !self.diff[k + 1].compose(&self.diff[k]).is_zero() {
                return Err(Error::DSquared(format!("degree {k} basis")));
            }
        }
        // Leibniz: d(ab) = da.b + (-1)^da a.db
        for da in 0..=top {
            for db in 0..=top.saturating_sub(da) {
                for ia in 0..dims[da] {
                    for ib in 0..dims[db] {
                        let ab = self.product((da, ia), (db, ib));
                        let dab = self.d_of(da + db, &ab);
                        let da_b = {
                            let dea = self.d_of(da, &basis(da, ia));
                            self.multiply_coords(da + 1, &dea, db, &basis(db, ib))
                        };
                        let a_db = {
                            let deb = self.d_of(db, &basis(db, ib));
                            let v = self.multiply_coords(da, &basis(da, ia), db + 1, &deb);
                            if da % 2 == 1 {
                                v.iter().map(|x| -x).collect()
                            } else {
                                v
                            }
                        };
                        let mut rhs = da_b;
                        for (r, x) in rhs.iter_mut().zip(&a_db) {
                            *r += x;
                        }
                        if dab != rhs {
                            return Err(Error::Validation(format!(
                                "Leibniz fails on {} * {}",
                                self.labels[da][ia], self.labels[db][ib]
                            )));
                        }
                    }
                }
            }
        }
        // conjugation: involution, commutes with d, multiplicative
        if let Some(conj) = &self.conj {
            for (k, m) in conj.iter().enumerate() {
                Conjugation::new(m.clone())
                    .map_err(|_| Error::Validation(format!("conjugation at degree {k} is not an involution")))?;
                if k < top {
                    // sigma(dv) = d(sigma v): C_{k+1} conj(D_k) = D_k C_k
                    let lhs = conj[k + 1].compose(&self.diff[k].conj());
                    let rhs = self.diff[k].compose(m);
                    if lhs != rhs {
                        return Err(Error::Validation(format!(
                            "conjugation does not commute with d at degree {k}"
                        )));
                    }
                }
            }
            for (&((da, ia), (db, ib)), v) in &self.mult {
                let ca = self.conj_basis(da, ia);
                let cb = self.conj_basis(db, ib);
                let lhs = conj[da + db].apply(&crate::linalg::conj_vector(v));
                let rhs = self.multiply_coords(da, &ca, db, &cb);
                if lhs != rhs {
                    return Err(Error::Validation(format!(
                        "conjugation not multiplicative on {} * {}",
                        self.labels[da][ia], self.labels[db][ib]
                    )));
                }
            }
        }
        Ok(())
    }

    fn conj_basis(&self, degree: usize, index: usize) -> Vector {
        let dim = self.labels[degree].len();
        let mut e = vec![Scalar::zero(); dim];
        e[index] = Scalar::one();
        match &self.conj {
            Some(c) => c[degree].apply(&e), // basis vectors are conj-coordinate-fixed
            None => e,
        }
    }

    fn d_of(&self, degree: usize, v: &[Scalar]) -> Vector {
        if degree >= self.diff.len() {
            return Vec::new();
        }
        self.diff[degree].apply(v)
    }

    fn multiply_coords(&self, da: usize, a: &[Scalar], db: usize, b: &[Scalar]) -> Vector {
        let out_deg = da + db;
        let out_dim = if out_deg < self.labels.len() {
            self.labels[out_deg].len()
        } else {
            0
        };
        let mut out = vec![Scalar::zero(); out_dim];
        if out_dim == 0 {
            return out;
        }
        for (ia, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (ib, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                if let Some(prod) = self.mult.get(&((da, ia), (db, ib))) {
                    let c = &(ca * cb);
                    for (o, p) in out.iter_mut().zip(prod) {
                        if !p.is_zero() {
                            *o += &(p * c);
                        }
                    }
                }
            }
        }
        out
    }
}

impl Dga for Fdga {
    fn max_degree(&self) -> usize {
        self.top_degree()
    }

    fn dim(&self, degree: usize) -> usize {
        self.labels.get(degree).map_or(0, |l| l.len())
    }

    fn basis_label(&self, degree: usize, index: usize) -> String {
        self.labels[degree][index].clone()
    }

    fn d_matrix(&self, degree: usize) -> Result<SparseMatrix> {
        if degree < self.diff.len() {
            Ok(self.diff[degree].clone())
        } else {
            Ok(SparseMatrix::zero(self.dim(degree + 1), self.dim(degree)))
        }
    }

    fn multiply(&self, da: usize, a: &[Scalar], db: usize, b: &[Scalar]) -> Result<Vector> {
        Ok(self.multiply_coords(da, a, db, b))
    }

    fn unit(&self) -> Vector {
        let mut v = vec![Scalar::zero(); self.dim(0)];
        v[self.unit.1] = Scalar::one();
        v
    }

    fn conjugation(&self, degree: usize) -> Conjugation {
        match &self.conj {
            Some(c) => Conjugation {
                matrix: c[degree].clone(),
            },
            None => Conjugation::identity(self.dim(degree)),
        }
    }
}

/// Incremental construction of an [`Fdga`]; `finish()` freezes the table after
/// filling in graded-commutative transposes that were not given explicitly.
pub struct FdgaBuilder {
    name: String,
    labels: Vec<Vec<String>>,
    bidegrees: Vec<Vec<(i64, i64)>>,
    any_bidegree: bool,
    mult: BTreeMap<(BasisRef, BasisRef), Vector>,
    diff_cols: BTreeMap<BasisRef, Vector>,
    conj: Option<Vec<SparseMatrix>>,
}

impl FdgaBuilder {
    pub fn new(name: impl Into<String>, top_degree: usize) -> Self {
        FdgaBuilder {
            name: name.into(),
            labels: vec![Vec::new(); top_degree + 1],
            bidegrees: vec![Vec::new(); top_degree + 1],
            any_bidegree: false,
            mult: BTreeMap::new(),
            diff_cols: BTreeMap::new(),
            conj: None,
        }
    }

    pub fn add_basis_element(
        &mut self,
        degree: usize,
        label: impl Into<String>,
        bidegree: Option<(i64, i64)>,
    ) -> BasisRef {
        self.labels[degree].push(label.into());
        self.bidegrees[degree].push(bidegree.unwrap_or((0, 0)));
        if bidegree.is_some() {
            self.any_bidegree = true;
        }
        (degree, self.labels[degree].len() - 1)
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.labels.get(degree).map_or(0, |l| l.len())
    }

    /// Product of two basis elements as coordinates in degree a.0 + b.0.
    pub fn set_product(&mut self, a: BasisRef, b: BasisRef, coords: Vector) {
        if coords.iter().any(|c| !c.is_zero()) {
            self.mult.insert((a, b), coords);
        }
    }

    /// d(basis element) as coordinates in the next degree.
    pub fn set_differential(&mut self, b: BasisRef, coords: Vector) {
        if coords.iter().any(|c| !c.is_zero()) {
            self.diff_cols.insert(b, coords);
        }
    }

    /// Conjugation matrices, one per degree (degree 0 first).
    pub fn set_conjugation(&mut self, mats: Vec<SparseMatrix>) {
        self.conj = Some(mats);
    }

    /// The unit must be the basis element `unit`. Missing transposed products are
    /// filled by graded commutativity; missing unit products are filled too.
    pub fn finish(mut self, unit: BasisRef) -> Result<Fdga> {
        let top = self.labels.len() - 1;
        // unit row/column
        for d in 0..=top {
            for i in 0..self.labels[d].len() {
                let mut e = vec![Scalar::zero(); self.labels[d].len()];
                e[i] = Scalar::one();
                self.mult.entry((unit, (d, i))).or_insert_with(|| e.clone());
                self.mult.entry(((d, i), unit)).or_insert(e);
            }
        }
        // graded-commutative closure
        let pairs: Vec<_> = self.mult.keys().cloned().collect();
        for (a, b) in pairs {
            if !self.mult.contains_key(&(b, a)) {
                let v = self.mult[&(a, b)].clone();
                let sign = if (a.0 * b.0) % 2 == 1 { -1 } else { 1 };
                let w: Vector = v
                    .iter()
                    .map(|x| if sign < 0 { -x } else { x.clone() })
                    .collect();
                self.mult.insert((b, a), w);
            }
        }
        // differential matrices
        let mut diff = Vec::new();
        for k in 0..=top {
            let rows = if k + 1 <= top {
                self.labels[k + 1].len()
            } else {
                0
            };
            let cols = self.labels[k].len();
            let mut entries = Vec::new();
            for i in 0..cols {
                if let Some(v) = self.diff_cols.get(&(k, i)) {
                    for (r, x) in v.iter().enumerate() {
                        if !x.is_zero() {
                            entries.push((r, i, x.clone()));
                        }
                    }
                }
            }
            diff.push(SparseMatrix::from_entries(rows, cols, entries)?);
        }
        Ok(Fdga {
            name: self.name,
            labels: self.labels,
            mult: self.mult,
            diff,
            unit,
            conj: self.conj,
            bidegrees: if self.any_bidegree {
                Some(self.bidegrees)
            } else {
                None
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exterior algebra on two degree-1 generators, d = 0.
    fn tiny_exterior() -> Fdga {
        let mut b = FdgaBuilder::new("ext2", 2);
        let one = b.add_basis_element(0, "1", None);
        let x = b.add_basis_element(1, "x", None);
        let y = b.add_basis_element(1, "y", None);
        let xy = b.add_basis_element(2, "x*y", None);
        let _ = xy;
        b.set_product(x, y, vec![Scalar::one()]);
        b.set_product(x, x, vec![Scalar::zero()]);
        b.set_product(y, y, vec![Scalar::zero()]);
        b.finish(one).unwrap()
    }

    #[test]
    fn validates_and_multiplies() {
        let a = tiny_exterior();
        a.validate().unwrap();
        // y*x = -x*y via the commutative closure
        let yx = a.product((1, 1), (1, 0));
        assert_eq!(yx, vec![Scalar::from_int(-1)]);
        let unit = <Fdga as Dga>::unit(&a);
        let x = vec![Scalar::one(), Scalar::zero()];
        assert_eq!(a.multiply(0, &unit, 1, &x).unwrap(), x);
    }

    #[test]
    fn axiom_violation_detected() {
        // a degree-1 square must vanish by graded commutativity
        let mut b = FdgaBuilder::new("bad", 2);
        let one = b.add_basis_element(0, "1", None);
        let x = b.add_basis_element(1, "x", None);
        let w = b.add_basis_element(2, "w", None);
        let _ = w;
        b.set_product(x, x, vec![Scalar::one()]);
        let a = b.finish(one).unwrap();
        assert!(a.validate().is_err());
    }
}
