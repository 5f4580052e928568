//! The common interface for differential graded algebras.
//!
//! Cohomology, towers, formality checks, and the Hodge machinery all run over this
//! trait, so a Chevalley-Eilenberg complex (a [`FreeCdga`](crate::gca::FreeCdga)) and
//! a finite-dimensional model (an [`Fdga`](crate::fdga::Fdga)) are interchangeable
//! targets. Everything is phrased in coordinates over canonical per-degree bases.

use crate::error::{Error, Result};
use crate::gca::{FreeCdga, GcaElement};
use crate::linalg::{Conjugation, SparseMatrix, Vector};
use crate::scalar::Scalar;

pub trait Dga {
    /// Largest degree this object can represent. Slices above it are not exposed;
    /// asking for them is a contract violation, not a statement that they vanish.
    fn max_degree(&self) -> usize;

    fn dim(&self, degree: usize) -> usize;

    fn basis_label(&self, degree: usize, index: usize) -> String;

    /// Matrix of d: degree -> degree + 1, shape dim(degree+1) x dim(degree).
    /// Requires degree + 1 to be representable unless the target slice is empty.
    fn d_matrix(&self, degree: usize) -> Result<SparseMatrix>;

    /// Coordinates of the product of two homogeneous elements, in degree da + db.
    fn multiply(&self, da: usize, a: &[Scalar], db: usize, b: &[Scalar]) -> Result<Vector>;

    /// Coordinates of 1 in degree 0.
    fn unit(&self) -> Vector;

    /// Real structure on the degree slice: coordinatewise conjugation for real
    /// bases, a pairing for complex-adapted bases.
    fn conjugation(&self, degree: usize) -> Conjugation {
        Conjugation::identity(self.dim(degree))
    }
}

impl Dga for FreeCdga {
    fn max_degree(&self) -> usize {
        self.truncation_degree()
    }

    fn dim(&self, degree: usize) -> usize {
        if degree > self.truncation_degree() {
            return 0;
        }
        self.degree_slice(degree).len()
    }

    fn basis_label(&self, degree: usize, index: usize) -> String {
        self.format_monomial(&self.degree_slice(degree)[index])
    }

    fn d_matrix(&self, degree: usize) -> Result<SparseMatrix> {
        if degree + 1 > self.truncation_degree() {
            if Dga::dim(self, degree) == 0 {
                return Ok(SparseMatrix::zero(0, 0));
            }
            return Err(Error::TruncationOverflow {
                degree: degree + 1,
                truncation: self.truncation_degree(),
            });
        }
        let src = self.degree_slice(degree);
        let tgt = self.degree_slice(degree + 1);
        let mut cols = Vec::with_capacity(src.len());
        for m in &src {
            let dm = self.differential(&GcaElement::term(m.clone(), Scalar::one()))?;
            cols.push(self.coords(&dm, degree + 1, &tgt)?);
        }
        Ok(SparseMatrix::from_columns(tgt.len(), &cols))
    }

    fn multiply(&self, da: usize, a: &[Scalar], db: usize, b: &[Scalar]) -> Result<Vector> {
        let sa = self.degree_slice(da);
        let sb = self.degree_slice(db);
        let ea = self.element_from_coords(a, &sa);
        let eb = self.element_from_coords(b, &sb);
        let prod = FreeCdga::multiply(self, &ea, &eb)?;
        if da + db > self.truncation_degree() {
            // multiply() above already errored unless the product is zero
            return Ok(Vec::new());
        }
        let st = self.degree_slice(da + db);
        self.coords(&prod, da + db, &st)
    }

    fn unit(&self) -> Vector {
        vec![Scalar::one()]
    }
}

/// Human-readable form of a coordinate vector over the degree slice.
pub fn format_coords<T: Dga>(dga: &T, degree: usize, coords: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let label = dga.basis_label(degree, i);
        let lead = format!("{c}");
        if out.is_empty() {
            if lead == "1" {
                out = label;
            } else if lead == "-1" {
                out = format!("-{label}");
            } else {
                out = format!("{lead}*{label}");
            }
        } else if let Some(rest) = lead.strip_prefix('-') {
            if rest == "1" {
                out.push_str(&format!(" - {label}"));
            } else {
                out.push_str(&format!(" - {rest}*{label}"));
            }
        } else if lead == "1" {
            out.push_str(&format!(" + {label}"));
        } else {
            out.push_str(&format!(" + {lead}*{label}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Morphism of DGAs determined by generator images: the i-th generator of the
/// free source goes to the element of the target with the given coordinates (in
/// the target slice of the generator's degree). Extension is multiplicative.
#[derive(Debug, Clone)]
pub struct GenImageMorphism {
    pub images: Vec<Vector>,
}

impl GenImageMorphism {
    /// phi applied to a homogeneous element of the source, given by coordinates
    /// over `src.degree_slice(degree)`.
    pub fn apply<T: Dga>(
        &self,
        src: &FreeCdga,
        tgt: &T,
        degree: usize,
        coords: &[Scalar],
    ) -> Result<Vector> {
        let slice = src.degree_slice(degree);
        let mut out = vec![Scalar::zero(); tgt.dim(degree)];
        for (m, c) in slice.iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            // product over factors of phi(gen)^exp
            let mut acc = tgt.unit();
            let mut acc_deg = 0usize;
            for &(id, e) in m.factors() {
                let gdeg = src.generator(id).degree;
                for _ in 0..e {
                    acc = tgt.multiply(acc_deg, &acc, gdeg, &self.images[id])?;
                    acc_deg += gdeg;
                }
            }
            if acc_deg != degree {
                return Err(Error::Internal("morphism: degree bookkeeping broken".into()));
            }
            for (o, v) in out.iter_mut().zip(&acc) {
                *o += &(v * c);
            }
        }
        Ok(out)
    }

    /// Chain-map property d(phi(g)) = phi(d(g)) on every generator.
    pub fn check_chain_map<T: Dga>(&self, src: &FreeCdga, tgt: &T) -> Result<()> {
        for g in src.generators() {
            let k = g.degree;
            let lhs = tgt.d_matrix(k)?.apply(&self.images[g.id]);
            let dsrc = src.differential_of_generator(g.id);
            let dcoords = src.coords(dsrc, k + 1, &src.degree_slice(k + 1))?;
            let rhs = self.apply(src, tgt, k + 1, &dcoords)?;
            if lhs != rhs {
                return Err(Error::Validation(format!(
                    "morphism does not commute with d on generator {}",
                    g.name
                )));
            }
        }
        Ok(())
    }
}

/// Morphism between finite-dimensional DGAs given by one matrix per degree.
#[derive(Debug, Clone)]
pub struct MatrixMorphism {
    pub mats: Vec<SparseMatrix>,
}

impl MatrixMorphism {
    pub fn identity<T: Dga>(dga: &T) -> Self {
        let mats = (0..=dga.max_degree())
            .map(|k| SparseMatrix::identity(dga.dim(k)))
            .collect();
        MatrixMorphism { mats }
    }

    pub fn apply(&self, degree: usize, v: &[Scalar]) -> Vector {
        self.mats[degree].apply(v)
    }

    pub fn check_chain_map<S: Dga, T: Dga>(&self, src: &S, tgt: &T) -> Result<()> {
        for k in 0..src.max_degree() {
            if src.dim(k + 1) == 0 && tgt.dim(k + 1) == 0 {
                continue;
            }
            let lhs = tgt.d_matrix(k)?.compose(&self.mats[k]);
            let rhs = self.mats[k + 1].compose(&src.d_matrix(k)?);
            if lhs != rhs {
                return Err(Error::Validation(format!(
                    "matrix morphism does not commute with d at degree {k}"
                )));
            }
        }
        Ok(())
    }
}
