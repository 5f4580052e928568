//! The 1-minimal model tower M(1) ⊆ M(2) ⊆ ... of a connected DGA.
//!
//! M(1) is free on H^1 with zero differential. Each extension adjoins one
//! degree-1 generator per element of ker(phi_n: H^2(M(n)) -> H^2(A)), with the
//! differential hitting the kernel class and the morphism correcting on a
//! primitive. Everything lives in degrees <= 3, so stages are truncated there.

use crate::cohomology::{cohomology, Cohomology};
use crate::dga::{Dga, GenImageMorphism};
use crate::error::{Error, Result};
use crate::gca::FreeCdga;
use crate::linalg::{Chart, SparseMatrix, Subspace, Vector};
use crate::scalar::Scalar;

/// One stage M(n) with its map to the target.
#[derive(Debug, Clone)]
pub struct TowerStage {
    /// M(n), truncated above degree 3.
    pub cdga: FreeCdga,
    /// phi_n: M(n) -> A on generators.
    pub phi: GenImageMorphism,
    /// ids of the generators adjoined at this stage.
    pub new_generators: Vec<usize>,
    /// H^2(M(n)) -> H^2(A) in chart coordinates.
    pub phi_matrix: SparseMatrix,
    /// ker(phi_matrix); the next stage adjoins one generator per basis vector.
    pub kernel: Subspace,
    /// chart for H^2(M(n)), kept for downstream image comparisons.
    pub h2_chart: Chart,
}

#[derive(Debug, Clone)]
pub struct Tower {
    pub stages: Vec<TowerStage>,
    /// true iff the last computed stage has ker(phi) = 0.
    pub stabilized: bool,
    /// cohomology of the target through degree 2.
    pub target_coh: Cohomology,
}

impl Tower {
    pub fn last(&self) -> &TowerStage {
        self.stages.last().unwrap()
    }

    /// Total number of degree-1 generators of the last stage.
    pub fn total_generators(&self) -> usize {
        self.last().cdga.generators().len()
    }
}

/// Checks connectedness: H^0(A) must be spanned by the class of 1.
fn check_connected<T: Dga>(a: &T, coh: &Cohomology) -> Result<()> {
    if coh.betti(0) != 1 || coh.chart(0).project(&a.unit()) != Some(vec![Scalar::one()]) {
        return Err(Error::NonConnected(coh.betti(0)));
    }
    Ok(())
}

fn stage_map<T: Dga>(
    a: &T,
    target_coh: &Cohomology,
    cdga: &FreeCdga,
    phi: &GenImageMorphism,
) -> Result<(SparseMatrix, Subspace, Chart)> {
    let coh_m = cohomology(cdga, 2)?;
    let h2_chart = coh_m.chart(2).clone();
    let target_chart = target_coh.chart(2);
    let mut cols = Vec::new();
    for rep in h2_chart.representatives() {
        let image = phi.apply(cdga, a, 2, rep)?;
        let class = target_chart.project(&image).ok_or_else(|| {
            Error::Internal("image of a cocycle failed to project to H^2".into())
        })?;
        cols.push(class);
    }
    let phi_matrix = SparseMatrix::from_columns(target_chart.dim(), &cols);
    let kernel = phi_matrix.kernel_basis();
    Ok((phi_matrix, kernel, h2_chart))
}

/// M(1) = free algebra on H^1(A), d = 0, phi = chosen cocycle representatives.
pub fn stage1<T: Dga>(a: &T) -> Result<TowerStage> {
    let target_coh = cohomology(a, 2)?;
    let b1 = target_coh.chart(1).dim();
    let basis: Vec<(Vector, Option<(i64, i64)>)> = (0..b1)
        .map(|k| (crate::linalg::unit_vector(b1, k), None))
        .collect();
    stage1_typed(a, &target_coh, &basis)
}

/// Stage 1 on an explicit basis of H^1 (chart coordinates), optionally with a
/// bidegree per generator. The basis must span; this is not re-checked here.
pub fn stage1_typed<T: Dga>(
    a: &T,
    target_coh: &Cohomology,
    basis: &[(Vector, Option<(i64, i64)>)],
) -> Result<TowerStage> {
    check_connected(a, target_coh)?;
    let mut cdga = FreeCdga::new("M(1)", 3);
    let mut images = Vec::new();
    let mut new_generators = Vec::new();
    let h1 = target_coh.chart(1);
    for (k, (coords, bid)) in basis.iter().enumerate() {
        let id = cdga.add_generator(format!("v1_{}", k + 1), 1, *bid)?;
        images.push(h1.lift(coords));
        new_generators.push(id);
    }
    let phi = GenImageMorphism { images };
    let (phi_matrix, kernel, h2_chart) = stage_map(a, target_coh, &cdga, &phi)?;
    Ok(TowerStage {
        cdga,
        phi,
        new_generators,
        phi_matrix,
        kernel,
        h2_chart,
    })
}

/// M(n) -> M(n+1): one new degree-1 generator per kernel basis class, with
/// d(v) the chosen cocycle representative and phi(v) a primitive of phi(dv).
pub fn extend<T: Dga>(
    a: &T,
    target_coh: &Cohomology,
    prev: &TowerStage,
    stage: usize,
) -> Result<TowerStage> {
    let kv: Vec<(Vector, Option<(i64, i64)>)> = prev
        .kernel
        .basis()
        .iter()
        .map(|w| (w.clone(), None))
        .collect();
    extend_typed(a, target_coh, prev, stage, &kv)
}

/// Extension along an explicit basis of ker(phi_n) (H^2(M(n)) chart
/// coordinates), optionally with a bidegree per new generator.
pub fn extend_typed<T: Dga>(
    a: &T,
    target_coh: &Cohomology,
    prev: &TowerStage,
    stage: usize,
    kernel_basis: &[(Vector, Option<(i64, i64)>)],
) -> Result<TowerStage> {
    let mut cdga = prev.cdga.clone();
    cdga.name = format!("M({stage})");
    let mut images = prev.phi.images.clone();
    let mut new_generators = Vec::new();
    let d1 = a.d_matrix(1)?;
    let slice2 = cdga.degree_slice(2);
    for (k, (w, bid)) in kernel_basis.iter().enumerate() {
        // w: coords on the H^2(M(n)) chart; lift to an ambient degree-2 cocycle
        let ambient = prev.h2_chart.lift(w);
        let dv = cdga.element_from_coords(&ambient, &slice2);
        let id = cdga.add_generator(format!("v{stage}_{}", k + 1), 1, *bid)?;
        cdga.set_differential(id, dv)?;
        // phi(dv) is exact in A: solve d(xi) = phi(dv) with free variables zero
        let phi_dv = prev.phi.apply(&prev.cdga, a, 2, &ambient)?;
        let xi = d1.solve(&phi_dv).ok_or_else(|| {
            Error::Internal("kernel class image is not exact in the target".into())
        })?;
        images.push(xi);
        new_generators.push(id);
    }
    let phi = GenImageMorphism { images };
    let (phi_matrix, kernel, h2_chart) = stage_map(a, target_coh, &cdga, &phi)?;
    Ok(TowerStage {
        cdga,
        phi,
        new_generators,
        phi_matrix,
        kernel,
        h2_chart,
    })
}

/// Builds stages until ker(phi) = 0 or `max_stages` is hit.
pub fn build_tower<T: Dga>(a: &T, max_stages: usize) -> Result<Tower> {
    let target_coh = cohomology(a, 2)?;
    check_connected(a, &target_coh)?;
    let mut stages = vec![stage1(a)?];
    while !stages.last().unwrap().kernel.is_zero() && stages.len() < max_stages {
        let next = extend(a, &target_coh, stages.last().unwrap(), stages.len() + 1)?;
        stages.push(next);
    }
    let stabilized = stages.last().unwrap().kernel.is_zero();
    Ok(Tower {
        stages,
        stabilized,
        target_coh,
    })
}

/// The last stage as a standalone CDGA (for printing or further work).
pub fn tower_as_cdga(t: &Tower) -> &FreeCdga {
    &t.last().cdga
}

/// Degree-1 generator counts per stage: how many were new at each level.
pub fn generator_profile(t: &Tower) -> Vec<usize> {
    t.stages.iter().map(|s| s.new_generators.len()).collect()
}

/// phi_n images in H^2(A): the subspace hit by stage n.
pub fn stage_image(stage: &TowerStage) -> Subspace {
    stage.phi_matrix.image()
}

/// Verifies phi_n is a chain map on every generator; used by tests and the
/// integrity checks behind `--assert`.
pub fn check_stage<T: Dga>(a: &T, stage: &TowerStage) -> Result<()> {
    stage.phi.check_chain_map(&stage.cdga, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::chevalley_eilenberg;
    use crate::lie;

    #[test]
    fn h3_tower_stabilizes_at_two_stages() {
        let a = chevalley_eilenberg(&lie::heisenberg(1)).unwrap();
        let t = build_tower(&a, 16).unwrap();
        assert!(t.stabilized);
        assert_eq!(generator_profile(&t), vec![2, 1]);
        // new generator at stage 2 kills [v1_1 v1_2]
        let s2 = t.last();
        let g = s2.cdga.generator(s2.new_generators[0]);
        assert_eq!(g.name, "v2_1");
        let dv = s2.cdga.differential_of_generator(g.id);
        assert_eq!(s2.cdga.format_element(dv), "v1_1*v1_2");
        // phi(v2_1) solves d(xi) = phi(v1_1 v1_2) = x1 x2 = d(-x3)
        assert_eq!(
            crate::dga::format_coords(&a, 1, &s2.phi.images[g.id]),
            "-x3"
        );
        for stage in &t.stages {
            check_stage(&a, stage).unwrap();
        }
    }

    #[test]
    fn abelian_tower_is_stage_one() {
        let a = chevalley_eilenberg(&lie::abelian(3)).unwrap();
        let t = build_tower(&a, 16).unwrap();
        assert!(t.stabilized);
        assert_eq!(generator_profile(&t), vec![3]);
    }

    #[test]
    fn h5_stage_two_adds_one_generator() {
        let a = chevalley_eilenberg(&lie::heisenberg(2)).unwrap();
        let t = build_tower(&a, 16).unwrap();
        assert!(t.stabilized);
        assert_eq!(generator_profile(&t), vec![4, 1]);
        // ker(phi_1) is spanned by v1_1 v1_2 + v1_3 v1_4
        let s1 = &t.stages[0];
        assert_eq!(s1.kernel.dim(), 1);
        let amb = s1.h2_chart.lift(s1.kernel.basis().first().unwrap());
        let e = s1.cdga.element_from_coords(&amb, &s1.cdga.degree_slice(2));
        assert_eq!(s1.cdga.format_element(&e), "v1_1*v1_2 + v1_3*v1_4");
    }

    #[test]
    fn filiform_tower_profile() {
        let a = chevalley_eilenberg(&lie::filiform5()).unwrap();
        let t = build_tower(&a, 16).unwrap();
        assert!(t.stabilized);
        // stage sizes match the lower-central-series quotients of f5
        assert_eq!(generator_profile(&t), vec![2, 1, 1, 1]);
        for stage in &t.stages {
            check_stage(&a, stage).unwrap();
        }
    }

    #[test]
    fn nonconnected_is_rejected() {
        use crate::fdga::FdgaBuilder;
        // two units: degree 0 of dimension 2, d = 0
        let mut b = FdgaBuilder::new("two_points", 1);
        let one = b.add_basis_element(0, "1", None);
        let e = b.add_basis_element(0, "e", None);
        b.set_product(e, e, {
            let mut v = vec![Scalar::zero(); 2];
            v[1] = Scalar::one();
            v
        });
        let a = b.finish(one).unwrap();
        match build_tower(&a, 4) {
            Err(Error::NonConnected(2)) => {}
            other => panic!("expected NonConnected(2), got {other:?}"),
        }
    }
}
