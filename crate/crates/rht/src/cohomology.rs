//! Cohomology of DGAs, and the Chevalley–Eilenberg complex of a Lie algebra.
//!
//! Each H^k is carried as a [`Chart`]: cocycles over coboundaries with canonical
//! representatives, so classes have exact coordinates and cup products are
//! "lift, multiply, project".

use crate::dga::Dga;
use crate::error::{Error, Result};
use crate::fdga::{Fdga, FdgaBuilder};
use crate::gca::{FreeCdga, GcaElement, Monomial};
use crate::lie::LieAlgebra;
use crate::linalg::{Chart, Subspace, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct Cohomology {
    charts: Vec<Chart>,
}

impl Cohomology {
    pub fn max_degree(&self) -> usize {
        self.charts.len() - 1
    }

    pub fn betti(&self, k: usize) -> usize {
        self.charts.get(k).map_or(0, |c| c.dim())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.charts.iter().map(|c| c.dim()).collect()
    }

    pub fn chart(&self, k: usize) -> &Chart {
        &self.charts[k]
    }
}

/// H^0 .. H^{up_to}. Verifies im(d) ⊆ ker(d) degree by degree, so a broken
/// differential surfaces here even when the producer skipped its own checks.
pub fn cohomology<T: Dga>(a: &T, up_to: usize) -> Result<Cohomology> {
    let mut charts = Vec::with_capacity(up_to + 1);
    let mut boundaries = Subspace::zero(a.dim(0));
    for k in 0..=up_to {
        let dk = a.d_matrix(k)?;
        let cocycles = dk.kernel_basis();
        if !cocycles.contains_subspace(&boundaries) {
            return Err(Error::DSquared(format!(
                "d^2 != 0 into degree {k} of {}",
                std::any::type_name::<T>()
            )));
        }
        charts.push(Chart::from_subquotient(&cocycles, &boundaries)?);
        boundaries = dk.image();
    }
    Ok(Cohomology { charts })
}

/// [a] . [b] as coordinates on H^{ka+kb}. Both charts must already be computed.
pub fn cup_product<T: Dga>(
    a: &T,
    coh: &Cohomology,
    ka: usize,
    ca: &[Scalar],
    kb: usize,
    cb: &[Scalar],
) -> Result<Vector> {
    if ka + kb > coh.max_degree() {
        return Err(Error::Internal(format!(
            "cup product lands in degree {} beyond the computed range {}",
            ka + kb,
            coh.max_degree()
        )));
    }
    let va = coh.chart(ka).lift(ca);
    let vb = coh.chart(kb).lift(cb);
    let prod = a.multiply(ka, &va, kb, &vb)?;
    coh.chart(ka + kb)
        .project(&prod)
        .ok_or_else(|| Error::Internal("cup product is not a cocycle".into()))
}

/// The span of all cup products H^1 . H^1 inside H^2, as chart coordinates.
pub fn cup_square_image<T: Dga>(a: &T, coh: &Cohomology) -> Result<Subspace> {
    let b1 = coh.betti(1);
    let mut rows = Vec::new();
    for i in 0..b1 {
        for j in i..b1 {
            let mut ei = vec![Scalar::zero(); b1];
            ei[i] = Scalar::one();
            let mut ej = vec![Scalar::zero(); b1];
            ej[j] = Scalar::one();
            rows.push(cup_product(a, coh, 1, &ei, 1, &ej)?);
        }
    }
    Ok(Subspace::from_rows(coh.betti(2), rows))
}

/// Chevalley–Eilenberg complex of a Lie algebra: one degree-1 generator per
/// basis element, dx^k = -sum_{i<j} c^k_{ij} x^i x^j, truncated one degree above
/// the top exterior power. A failure of d^2 = 0 is reported as the Jacobi triple
/// read off the first offending monomial — independently of
/// [`LieAlgebra::jacobi_check`], which works on brackets directly.
pub fn chevalley_eilenberg(g: &LieAlgebra) -> Result<FreeCdga> {
    let n = g.dim();
    let mut a = FreeCdga::new(format!("CE({})", g.name), n + 1);
    let mut ids = Vec::with_capacity(n);
    for name in g.generator_names() {
        ids.push(a.add_generator(name.clone(), 1, None)?);
    }
    for k in 0..n {
        let mut image = GcaElement::zero();
        for (i, j, v) in g.stored_brackets() {
            let c = &v[k];
            if c.is_zero() {
                continue;
            }
            let m = Monomial::from_factors(vec![(ids[i], 1), (ids[j], 1)]);
            image.add_term(m, &-c);
        }
        a.set_differential(ids[k], image)?;
    }
    // d^2 = 0 <=> Jacobi; locate the violation on the offending triple
    for l in 0..n {
        let ddl = a.differential(a.differential_of_generator(ids[l]))?;
        let first = ddl.terms().next().map(|(m, _)| m.clone());
        if let Some(m) = first {
            let f: Vec<usize> = m.flat_ids().collect();
            return Err(Error::JacobiViolation(f[0], f[1], f[2]));
        }
    }
    Ok(a)
}

/// Betti numbers of the Lie algebra cohomology H^*(g) up to top degree.
pub fn lie_betti(g: &LieAlgebra) -> Result<Vec<usize>> {
    let a = chevalley_eilenberg(g)?;
    Ok(cohomology(&a, g.dim())?.betti_numbers())
}

/// b_k = b_{n-k} for the full range.
pub fn poincare_symmetric(betti: &[usize]) -> bool {
    let n = betti.len();
    (0..n).all(|k| betti[k] == betti[n - 1 - k])
}

/// The cohomology ring of a DGA repackaged as a finite-dimensional DGA with
/// zero differential. Labels are bracketed representatives.
pub fn cohomology_fdga<T: Dga>(a: &T, up_to: usize, name: impl Into<String>) -> Result<Fdga> {
    let coh = cohomology(a, up_to)?;
    let mut b = FdgaBuilder::new(name, up_to);
    let mut unit = None;
    for k in 0..=up_to {
        let chart = coh.chart(k);
        for (i, rep) in chart.representatives().iter().enumerate() {
            let label = format!("[{}]", crate::dga::format_coords(a, k, rep));
            let r = b.add_basis_element(k, label, None);
            if k == 0 && chart.project(&a.unit()) == Some(vec![Scalar::one()]) && i == 0 {
                unit = Some(r);
            }
        }
    }
    for ka in 0..=up_to {
        for kb in ka..=up_to {
            if ka + kb > up_to {
                continue;
            }
            for ia in 0..coh.betti(ka) {
                for ib in 0..coh.betti(kb) {
                    let mut ea = vec![Scalar::zero(); coh.betti(ka)];
                    ea[ia] = Scalar::one();
                    let mut eb = vec![Scalar::zero(); coh.betti(kb)];
                    eb[ib] = Scalar::one();
                    let prod = cup_product(a, &coh, ka, &ea, kb, &eb)?;
                    b.set_product((ka, ia), (kb, ib), prod);
                }
            }
        }
    }
    let unit = unit.ok_or(Error::NonConnected(coh.betti(0)))?;
    b.finish(unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie;

    #[test]
    fn heisenberg3_betti() {
        // 1, 2, 2, 1: the classical answer for h3
        let b = lie_betti(&lie::heisenberg(1)).unwrap();
        assert_eq!(b, vec![1, 2, 2, 1]);
        assert!(poincare_symmetric(&b));
    }

    #[test]
    fn heisenberg5_betti() {
        let b = lie_betti(&lie::heisenberg(2)).unwrap();
        assert_eq!(b, vec![1, 4, 5, 5, 4, 1]);
        assert!(poincare_symmetric(&b));
    }

    #[test]
    fn abelian_betti_is_binomial() {
        let b = lie_betti(&lie::abelian(4)).unwrap();
        assert_eq!(b, vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn filiform_betti() {
        let b = lie_betti(&lie::filiform5()).unwrap();
        assert_eq!(b, vec![1, 2, 3, 3, 2, 1]);
        assert!(poincare_symmetric(&b));
    }

    #[test]
    fn ce_detects_jacobi_failure() {
        use crate::scalar::Field;
        let names = (1..=3).map(|k| format!("x{k}")).collect();
        let mut g = LieAlgebra::new("bad", names, Field::Q);
        let e = |k: usize| {
            let mut v = vec![Scalar::zero(); 3];
            v[k] = Scalar::one();
            v
        };
        g.set_bracket(0, 1, e(2)).unwrap();
        g.set_bracket(0, 2, e(0)).unwrap();
        match chevalley_eilenberg(&g) {
            Err(Error::JacobiViolation(i, j, k)) => assert_eq!((i, j, k), (0, 1, 2)),
            other => panic!("expected Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn h3_cup_products() {
        let a = chevalley_eilenberg(&lie::heisenberg(1)).unwrap();
        let coh = cohomology(&a, 3).unwrap();
        // [x1].[x2] = 0 in H^2 (x1x2 = -dx3 is exact), so the cup image vanishes
        let img = cup_square_image(&a, &coh).unwrap();
        assert_eq!(img.dim(), 0);
        // but [x1].[x1 x3] spans H^3
        let h1 = coh.chart(1);
        assert_eq!(h1.dim(), 2);
        let one = vec![Scalar::one(), Scalar::zero()];
        let h2 = coh.chart(2);
        assert_eq!(h2.dim(), 2);
        for i in 0..2 {
            let mut e = vec![Scalar::zero(); 2];
            e[i] = Scalar::one();
            let p = cup_product(&a, &coh, 1, &one, 2, &e).unwrap();
            let q = cup_product(&a, &coh, 2, &e, 1, &one).unwrap();
            // graded commutativity in odd x even degrees: ab = ba
            assert_eq!(p, q);
        }
    }

    #[test]
    fn cohomology_ring_as_fdga_validates() {
        let a = chevalley_eilenberg(&lie::heisenberg(1)).unwrap();
        let h = cohomology_fdga(&a, 3, "H(h3)").unwrap();
        h.validate().unwrap();
        assert_eq!(
            (0..=3).map(|k| crate::dga::Dga::dim(&h, k)).collect::<Vec<_>>(),
            vec![1, 2, 2, 1]
        );
    }
}
