//! Dualization of the 1-minimal tower into a tower of nilpotent Lie algebras
//! with its stage surjections.

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{SparseMatrix, Vector};
use crate::scalar::{Field, Scalar};
use crate::tower::Tower;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct LieTower {
    /// L_1, ..., L_n with L_k dual to the stage-k model.
    pub levels: Vec<LieAlgebra>,
    /// projection L_{k+1} -> L_k (kills the newest generators).
    pub surjections: Vec<SparseMatrix>,
    pub stabilized: bool,
}

#[derive(Debug, Clone)]
pub struct MalcevSummary {
    pub level_dims: Vec<usize>,
    pub class: usize,
    pub stabilized: bool,
    pub limit: LieAlgebra,
}

/// Dual Lie algebra of one stage: the differential is quadratic on degree-1
/// generators, and <d xi, X ^ Y> = -<xi, [X, Y]> turns its coefficients into
/// structure constants.
fn dual_of_stage(cdga: &crate::gca::FreeCdga, label: &str) -> Result<LieAlgebra> {
    let gens = cdga.generators();
    let n = gens.len();
    let names: Vec<String> = gens
        .iter()
        .map(|g| {
            let name = g.name.as_str();
            match name.strip_prefix('v') {
                Some(rest) => format!("X{rest}"),
                None => format!("X_{name}"),
            }
        })
        .collect();
    let slice = cdga.degree_slice(2);
    let mut brackets: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
    let mut field = Field::Q;
    for a in 0..n {
        let dv = cdga.differential_of_generator(a);
        let coords = cdga.coords(dv, 2, &slice)?;
        for (m, c) in slice.iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            if !c.is_rational() {
                field = Field::Qi;
            }
            let f: Vec<usize> = m.flat_ids().collect();
            let entry = brackets
                .entry((f[0], f[1]))
                .or_insert_with(|| vec![Scalar::zero(); n]);
            entry[a] -= c;
        }
    }
    let mut g = LieAlgebra::new(label, names, field);
    for ((b, c), coords) in brackets {
        g.set_bracket(b, c, coords)?;
    }
    g.jacobi_check().map_err(|e| {
        Error::Internal(format!("dual bracket fails the Jacobi identity: {e}"))
    })?;
    Ok(g)
}

pub fn dualize(t: &Tower) -> Result<LieTower> {
    let mut levels = Vec::new();
    for (k, stage) in t.stages.iter().enumerate() {
        levels.push(dual_of_stage(&stage.cdga, &format!("L{}", k + 1))?);
    }
    let mut surjections = Vec::new();
    for k in 0..levels.len().saturating_sub(1) {
        let (lo, hi) = (levels[k].dim(), levels[k + 1].dim());
        let p = SparseMatrix::from_entries(lo, hi, (0..lo).map(|i| (i, i, Scalar::one())))?;
        surjections.push(p);
    }
    let lt = LieTower {
        levels,
        surjections,
        stabilized: t.stabilized,
    };
    check_surjections(&lt)?;
    Ok(lt)
}

/// Each projection must be a Lie homomorphism; the new generators of every
/// stage are central, so killing them is compatible with all brackets.
pub fn check_surjections(lt: &LieTower) -> Result<()> {
    for (k, p) in lt.surjections.iter().enumerate() {
        let hi = &lt.levels[k + 1];
        let lo = &lt.levels[k];
        let n = hi.dim();
        for i in 0..n {
            for j in i + 1..n {
                let down = p.apply(&hi.bracket_basis(i, j));
                let pi = p.column(i);
                let pj = p.column(j);
                let bracket_low = lo.bracket(&pi, &pj);
                if down != bracket_low {
                    return Err(Error::Internal(format!(
                        "stage {} projection is not a Lie homomorphism at ({i}, {j})",
                        k + 2
                    )));
                }
            }
        }
    }
    Ok(())
}

pub fn malcev_summary(lt: &LieTower) -> Result<MalcevSummary> {
    let limit = lt
        .levels
        .last()
        .ok_or_else(|| Error::Internal("empty Lie tower".into()))?
        .clone();
    Ok(MalcevSummary {
        level_dims: lt.levels.iter().map(|l| l.dim()).collect(),
        class: limit.nilpotency_class()?,
        stabilized: lt.stabilized,
        limit,
    })
}

/// Isomorphism-insensitive fingerprint used by the roundtrip checks: dimension,
/// lower-central-series dimensions, and derived-subalgebra dimension.
pub fn invariants(g: &LieAlgebra) -> (usize, Vec<usize>, usize) {
    let lcs = g
        .lower_central_series()
        .iter()
        .map(|s| s.dim())
        .collect::<Vec<_>>();
    (g.dim(), lcs, g.derived().dim())
}
