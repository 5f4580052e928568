//! Finite-dimensional Lie algebras given by structure constants.
//!
//! Brackets are stored for index pairs i < j only; antisymmetry fills the rest.
//! [`LieAlgebra::jacobi_check`] verifies the Jacobi identity directly on basis
//! triples — deliberately not by way of the Chevalley–Eilenberg differential, so
//! the two routes stay independent cross-checks of one another.

use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, Subspace, Vector};
use crate::scalar::{Field, Scalar};
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct LieAlgebra {
    pub name: String,
    names: Vec<String>,
    field: Field,
    /// coords of [e_i, e_j] for i < j
    brackets: BTreeMap<(usize, usize), Vector>,
}

impl LieAlgebra {
    pub fn new(name: impl Into<String>, names: Vec<String>, field: Field) -> Self {
        LieAlgebra {
            name: name.into(),
            names,
            field,
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generator_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    /// Install [e_i, e_j] = coords, i < j required; duplicates rejected.
    pub fn set_bracket(&mut self, i: usize, j: usize, coords: Vector) -> Result<()> {
        if i >= j || j >= self.dim() {
            return Err(Error::Validation(format!(
                "bracket indices ({i}, {j}) must satisfy i < j < dim"
            )));
        }
        if coords.len() != self.dim() {
            return Err(Error::Validation(format!(
                "bracket [{i}, {j}] has {} coordinates, expected {}",
                coords.len(),
                self.dim()
            )));
        }
        if self.brackets.contains_key(&(i, j)) {
            return Err(Error::Validation(format!(
                "bracket [{}, {}] given twice",
                self.names[i], self.names[j]
            )));
        }
        if coords.iter().any(|c| !c.is_zero()) {
            self.brackets.insert((i, j), coords);
        }
        Ok(())
    }

    /// Structure constants actually stored (i < j, nonzero only).
    pub fn stored_brackets(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// [e_i, e_j] for arbitrary i, j.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let zero = vec![Scalar::zero(); self.dim()];
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets.get(&(i, j)).cloned().unwrap_or(zero),
            std::cmp::Ordering::Equal => zero,
            std::cmp::Ordering::Greater => match self.brackets.get(&(j, i)) {
                Some(v) => v.iter().map(|c| -c).collect(),
                None => zero,
            },
        }
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let w = self.bracket_basis(i, j);
                let c = a * b;
                for (o, x) in out.iter_mut().zip(&w) {
                    if !x.is_zero() {
                        *o += &(x * &c);
                    }
                }
            }
        }
        out
    }

    /// Direct verification of the Jacobi identity on all basis triples.
    pub fn jacobi_check(&self) -> Result<()> {
        let n = self.dim();
        let basis = |i: usize| -> Vector {
            let mut e = vec![Scalar::zero(); n];
            e[i] = Scalar::one();
            e
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket(&self.bracket_basis(i, j), &basis(k));
                    let b = self.bracket(&self.bracket_basis(j, k), &basis(i));
                    let c = self.bracket(&self.bracket_basis(k, i), &basis(j));
                    let total: Vector = a
                        .iter()
                        .zip(&b)
                        .zip(&c)
                        .map(|((x, y), z)| &(x + y) + z)
                        .collect();
                    if total.iter().any(|x| !x.is_zero()) {
                        return Err(Error::JacobiViolation(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Span of [S, g] for a subspace S.
    fn bracket_span(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for u in s.basis() {
            for j in 0..n {
                let mut e = vec![Scalar::zero(); n];
                e[j] = Scalar::one();
                let w = self.bracket(u, &e);
                if w.iter().any(|x| !x.is_zero()) {
                    rows.push(w);
                }
            }
        }
        Subspace::from_rows(n, rows)
    }

    /// g = g_1 ⊇ g_2 = [g, g] ⊇ g_3 = [g_2, g] ⊇ ... until the terms repeat.
    /// The final entry is the stable term (zero iff nilpotent).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let next = self.bracket_span(series.last().unwrap());
            if next.dim() == series.last().unwrap().dim() {
                if !next.is_zero() {
                    series.push(next);
                }
                break;
            }
            let stop = next.is_zero();
            series.push(next);
            if stop {
                break;
            }
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    /// Smallest c with g_{c+1} = 0.
    pub fn nilpotency_class(&self) -> Result<usize> {
        let series = self.lower_central_series();
        let last = series.last().unwrap();
        if !last.is_zero() {
            return Err(Error::NotNilpotent(last.dim()));
        }
        Ok(series.len() - 1)
    }

    /// Derived subalgebra [g, g].
    pub fn derived(&self) -> Subspace {
        self.bracket_span(&Subspace::full(self.dim()))
    }

    /// {x : [x, g] = 0}, computed as the kernel of v -> ([v, e_0], ..., [v, e_{n-1}]).
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        if n == 0 {
            return Subspace::zero(0);
        }
        let mut cols = Vec::new();
        for i in 0..n {
            let mut e = vec![Scalar::zero(); n];
            e[i] = Scalar::one();
            let mut stacked = Vec::with_capacity(n * n);
            for j in 0..n {
                let mut f = vec![Scalar::zero(); n];
                f[j] = Scalar::one();
                stacked.extend(self.bracket(&e, &f));
            }
            cols.push(stacked);
        }
        let m = SparseMatrix::from_columns(n * n, &cols);
        m.kernel_basis()
    }

    /// Direct sum; generators are renumbered x1..x{n+m}.
    pub fn direct_sum(name: impl Into<String>, a: &LieAlgebra, b: &LieAlgebra) -> Result<LieAlgebra> {
        let n = a.dim();
        let m = b.dim();
        let names = (1..=n + m).map(|k| format!("x{k}")).collect();
        let field = if a.field == Field::Qi || b.field == Field::Qi {
            Field::Qi
        } else {
            Field::Q
        };
        let mut out = LieAlgebra::new(name, names, field);
        for (i, j, v) in a.stored_brackets() {
            let mut coords = v.clone();
            coords.resize(n + m, Scalar::zero());
            out.set_bracket(i, j, coords)?;
        }
        for (i, j, v) in b.stored_brackets() {
            let mut coords = vec![Scalar::zero(); n];
            coords.extend_from_slice(v);
            out.set_bracket(n + i, n + j, coords)?;
        }
        Ok(out)
    }
}

/// Heisenberg algebra h_{2n+1}: [x_{2i-1}, x_{2i}] = x_{2n+1}.
pub fn heisenberg(n: usize) -> LieAlgebra {
    let dim = 2 * n + 1;
    let names = (1..=dim).map(|k| format!("x{k}")).collect();
    let mut g = LieAlgebra::new(format!("h{dim}"), names, Field::Q);
    for i in 0..n {
        let mut z = vec![Scalar::zero(); dim];
        z[dim - 1] = Scalar::one();
        g.set_bracket(2 * i, 2 * i + 1, z).unwrap();
    }
    g
}

/// Abelian algebra of the given dimension.
pub fn abelian(n: usize) -> LieAlgebra {
    let names = (1..=n).map(|k| format!("x{k}")).collect();
    LieAlgebra::new(format!("a{n}"), names, Field::Q)
}

/// Five-dimensional filiform algebra:
/// [x1,x2] = x3, [x1,x3] = x4, [x1,x4] = x5, [x2,x3] = x5.
pub fn filiform5() -> LieAlgebra {
    let names = (1..=5).map(|k| format!("x{k}")).collect();
    let mut g = LieAlgebra::new("f5", names, Field::Q);
    let e = |k: usize| {
        let mut v = vec![Scalar::zero(); 5];
        v[k] = Scalar::one();
        v
    };
    g.set_bracket(0, 1, e(2)).unwrap();
    g.set_bracket(0, 2, e(3)).unwrap();
    g.set_bracket(0, 3, e(4)).unwrap();
    g.set_bracket(1, 2, e(4)).unwrap();
    g
}

/// h3 + R^2: the smallest Heisenberg algebra padded by a two-dimensional
/// abelian factor.
pub fn h3_plus_r2() -> LieAlgebra {
    LieAlgebra::direct_sum("h3r2", &heisenberg(1), &abelian(2)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_series_and_center() {
        let g = heisenberg(2);
        g.jacobi_check().unwrap();
        let series = g.lower_central_series();
        let dims: Vec<usize> = series.iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![5, 1, 0]);
        assert_eq!(g.nilpotency_class().unwrap(), 2);
        assert_eq!(g.center().dim(), 1);
        assert_eq!(g.derived().dim(), 1);
    }

    #[test]
    fn filiform_series() {
        let g = filiform5();
        g.jacobi_check().unwrap();
        let dims: Vec<usize> = g
            .lower_central_series()
            .iter()
            .map(|s| s.dim())
            .collect();
        assert_eq!(dims, vec![5, 3, 2, 1, 0]);
        assert_eq!(g.nilpotency_class().unwrap(), 4);
        assert_eq!(g.center().dim(), 1);
    }

    #[test]
    fn jacobi_violation_is_located() {
        let names = (1..=3).map(|k| format!("x{k}")).collect();
        let mut g = LieAlgebra::new("bad", names, Field::Q);
        let e = |k: usize| {
            let mut v = vec![Scalar::zero(); 3];
            v[k] = Scalar::one();
            v
        };
        // [[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2] = -x3 here
        g.set_bracket(0, 1, e(2)).unwrap();
        g.set_bracket(0, 2, e(0)).unwrap();
        match g.jacobi_check() {
            Err(Error::JacobiViolation(0, 1, 2)) => {}
            other => panic!("expected violation at (0,1,2), got {other:?}"),
        }
    }

    #[test]
    fn nonnilpotent_detected() {
        // sl2-like: [x1,x2]=x2 alone is solvable but not nilpotent
        let names = (1..=2).map(|k| format!("x{k}")).collect();
        let mut g = LieAlgebra::new("aff", names, Field::Q);
        g.set_bracket(0, 1, vec![Scalar::zero(), Scalar::one()])
            .unwrap();
        g.jacobi_check().unwrap();
        assert!(!g.is_nilpotent());
        assert!(matches!(g.nilpotency_class(), Err(Error::NotNilpotent(1))));
    }

    #[test]
    fn direct_sum_blocks() {
        let g = h3_plus_r2();
        g.jacobi_check().unwrap();
        assert_eq!(g.dim(), 5);
        assert_eq!(g.derived().dim(), 1);
        assert_eq!(g.center().dim(), 3); // x3, x4, x5
    }
}
