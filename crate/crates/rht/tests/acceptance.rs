//! The acceptance gate: ten checks, one per shipped guarantee, each printing
//! its own pass/fail line in the harness output.  Every assertion is exact.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use rht::cohomology::{chevalley_eilenberg, cohomology, lie_betti, poincare_symmetric};
use rht::formality::{
    formality_of, heisenberg_check, massey_scan, massey_triple, presentation_level_dims,
    presentation_quotient, quadratic_presentation, sasakian_obstruction, weight_count_check,
};
use rht::hodge::weight_spectral_sequence;
use rht::lie::{self, LieAlgebra};
use rht::linalg::unit_vector;
use rht::malcev::{dualize, invariants, malcev_summary};
use rht::sasaki::{
    build_model, heisenberg_basic_ring, hodge_split_check, real_adapted, sasaki_mhd_check,
    sasaki_pipeline, surfaces_ring,
};
use rht::tower::build_tower;

#[test]
fn criterion_01_heisenberg_betti_numbers() {
    let cases: [(usize, Vec<usize>); 2] = [
        (1, vec![1, 2, 2, 1]),
        (2, vec![1, 4, 5, 5, 4, 1]),
    ];
    for (n, want) in cases {
        let clock = Instant::now();
        let betti = lie_betti(&lie::heisenberg(n)).unwrap();
        assert_eq!(betti, want, "h{}", 2 * n + 1);
        assert!(clock.elapsed().as_secs() < 1, "h{} too slow", 2 * n + 1);
    }
    let clock = Instant::now();
    let betti = lie_betti(&lie::heisenberg(3)).unwrap();
    assert_eq!(&betti[..3], &[1, 6, 14], "h7 must open with (1, 6, 14)");
    assert!(poincare_symmetric(&betti), "h7: {betti:?}");
    assert!(clock.elapsed().as_secs() < 1, "h7 too slow");
}

#[test]
fn criterion_02_one_formality_dichotomy() {
    let clock = Instant::now();
    // (n, verdict, new generators per stage, (H2 stage dims, final, image))
    let cases: [(usize, bool, Vec<usize>, (usize, usize, usize)); 3] = [
        (1, false, vec![2, 1], (1, 2, 0)),
        (2, true, vec![4, 1], (6, 5, 5)),
        (3, true, vec![6, 1], (15, 14, 14)),
    ];
    for (n, verdict, gens, dims) in cases {
        let a = chevalley_eilenberg(&lie::heisenberg(n)).unwrap();
        let (t, report) = formality_of(&a, 8).unwrap();
        assert!(t.stabilized, "h{}", 2 * n + 1);
        let new_gens: Vec<usize> = t.stages.iter().map(|s| s.new_generators.len()).collect();
        assert_eq!(new_gens, gens, "h{}", 2 * n + 1);
        assert_eq!(report.verdict, verdict, "h{}", 2 * n + 1);
        assert!(!report.provisional, "h{}", 2 * n + 1);
        assert_eq!(
            (report.h2_m1_dim, report.h2_m_dim, report.image_dim),
            dims,
            "h{}",
            2 * n + 1
        );
    }
    assert!(clock.elapsed().as_secs() < 5, "formality dichotomy too slow");
}

#[test]
fn criterion_03_massey_obstruction() {
    let a = chevalley_eilenberg(&lie::heisenberg(1)).unwrap();
    let coh = cohomology(&a, 3).unwrap();
    let class = |k: usize| coh.chart(1).project(&unit_vector(3, k)).unwrap();
    let value = massey_triple(&a, &coh, &class(0), &class(0), &class(1)).unwrap();
    assert!(
        value.nonzero_mod_indeterminacy,
        "<x1, x1, x2> on the three-dimensional Heisenberg algebra must obstruct"
    );

    let clock = Instant::now();
    let a5 = chevalley_eilenberg(&lie::heisenberg(2)).unwrap();
    let coh5 = cohomology(&a5, 3).unwrap();
    let scan = massey_scan(&a5, &coh5).unwrap();
    assert!(!scan.is_empty(), "the h5 scan found no defined triples");
    for ((i, j, k), value) in &scan {
        assert!(
            !value.nonzero_mod_indeterminacy,
            "triple ({i}, {j}, {k}) unexpectedly survives mod indeterminacy"
        );
    }
    assert!(clock.elapsed().as_secs() < 10, "h5 scan too slow");
}

#[test]
fn criterion_04_malcev_roundtrip_and_presentation() {
    let mut corpus: Vec<LieAlgebra> = vec![lie::filiform5()];
    for n in 1..=3 {
        corpus.push(lie::heisenberg(n));
    }
    for n in 3..=7 {
        corpus.push(lie::abelian(n));
    }
    for g in &corpus {
        let a = chevalley_eilenberg(g).unwrap();
        let t = build_tower(&a, 8).unwrap();
        let ms = malcev_summary(&dualize(&t).unwrap()).unwrap();
        assert!(ms.stabilized, "{}", g.name);
        assert_eq!(invariants(&ms.limit), invariants(g), "{}", g.name);
    }

    let a = chevalley_eilenberg(&lie::heisenberg(2)).unwrap();
    let t = build_tower(&a, 8).unwrap();
    let p = quadratic_presentation(&t).unwrap();
    assert_eq!(p.generators, 4);
    assert_eq!(p.relations.dim(), 5);
    assert_eq!(presentation_level_dims(&p, 2), vec![4, 5]);
    let q = presentation_quotient(&p, 2).unwrap();
    assert_eq!(invariants(&q), invariants(&lie::heisenberg(2)));
}

#[test]
fn criterion_05_sasaki_model_cohomology() {
    for n in 1..=3usize {
        let m = build_model(&heisenberg_basic_ring(n).unwrap()).unwrap();
        let betti = cohomology(&m.fdga, 2 * n + 1).unwrap().betti_numbers();
        assert_eq!(betti, lie_betti(&lie::heisenberg(n)).unwrap(), "n = {n}");
    }
}

#[test]
fn criterion_06_mixed_diagram_axioms_and_spectral_sequence() {
    for n in 1..=2usize {
        let m = build_model(&heisenberg_basic_ring(n).unwrap()).unwrap();
        let report = sasaki_mhd_check(&m).unwrap();
        assert!(report.e1_iso, "n = {n}: {:?}", report.e1_failures);
        assert!(report.d0_strict, "n = {n}: {:?}", report.strict_failures);
        assert!(report.pure_e1, "n = {n}: {:?}", report.purity_failures);
        assert!(report.pass);
    }

    let m = build_model(&heisenberg_basic_ring(2).unwrap()).unwrap();
    let ss = weight_spectral_sequence(&m.fdga, &m.w).unwrap();
    assert!(ss.d0_is_zero());
    let e1 = ss.e1_dims();
    for (q, want) in [1usize, 4, 6, 4, 1].into_iter().enumerate() {
        assert_eq!(e1.get(&(0, q as i64)), Some(&want), "E1 (0, {q})");
        assert_eq!(e1.get(&(-1, q as i64 + 2)), Some(&want), "E1 shifted copy at (-1, {})", q + 2);
    }
    let mut totals = BTreeMap::new();
    for (&(p, q), &d) in &ss.e2_dims {
        *totals.entry(p + q).or_insert(0usize) += d;
    }
    let e2: Vec<usize> = (0..=5).map(|t| totals.get(&t).copied().unwrap_or(0)).collect();
    assert_eq!(e2, vec![1, 4, 5, 5, 4, 1]);
}

#[test]
fn criterion_07_hodge_splits() {
    let dims_of = |bg: &rht::hodge::Bigrading| -> BTreeMap<(i64, i64), usize> {
        bg.components.iter().map(|(&k, s)| (k, s.dim())).collect()
    };

    let m = build_model(&heisenberg_basic_ring(2).unwrap()).unwrap();
    let report = hodge_split_check(&m).unwrap();
    assert!(report.h1_split && report.top_pure && report.pass);
    assert_eq!(report.h2_split, Some(true));
    assert_eq!(
        dims_of(&report.bigradings[1]),
        BTreeMap::from([((1, 0), 2), ((0, 1), 2)])
    );
    assert_eq!(
        report.h2_types,
        vec![((0, 2), 1), ((1, 1), 3), ((2, 0), 1)]
    );
    assert_eq!(dims_of(&report.bigradings[5]), BTreeMap::from([((3, 3), 1)]));

    let m3 = build_model(&heisenberg_basic_ring(1).unwrap()).unwrap();
    let report3 = hodge_split_check(&m3).unwrap();
    assert!(report3.h1_split && report3.top_pure && report3.pass);
    assert_eq!(report3.h2_split, None);
    assert_eq!(
        dims_of(&report3.bigradings[2]),
        BTreeMap::from([((2, 1), 1), ((1, 2), 1)])
    );
    assert_eq!(dims_of(&report3.bigradings[3]), BTreeMap::from([((2, 2), 1)]));
}

#[test]
fn criterion_08_pipeline_formality_for_rings() {
    let allowed = [(2, 0), (1, 1), (0, 2)];
    let mut rings = vec![
        ("heis2", heisenberg_basic_ring(2).unwrap(), 4),
        ("heis3", heisenberg_basic_ring(3).unwrap(), 4),
        ("surfaces", real_adapted(&surfaces_ring().unwrap()).unwrap(), 2),
    ];
    for (name, ring, stages) in rings.drain(..) {
        let report = sasaki_pipeline(&ring, stages).unwrap();
        assert!(report.formality.verdict, "{name} must come out 1-formal");
        assert!(report.hodge.pass, "{name} hodge splits");
        assert!(report.mhd.pass, "{name} diagram axioms");
        assert!(report.v2_types_ok, "{name} stage-2 types");
        assert!(report.phi_type_ok, "{name} phi typing");
        for t in &report.v2_types {
            assert!(allowed.contains(t), "{name}: stray type {t:?}");
        }
    }
}

#[test]
fn criterion_09_nilmanifold_obstructions() {
    let corpus: Vec<(LieAlgebra, bool)> = vec![
        (lie::heisenberg(1), true),
        (lie::heisenberg(2), true),
        (lie::heisenberg(3), true),
        (lie::abelian(5), false),
        (lie::filiform5(), false),
        (lie::h3_plus_r2(), false),
    ];
    for (g, want) in &corpus {
        assert_eq!(heisenberg_check(g).unwrap(), *want, "{}", g.name);
    }

    let f5 = sasakian_obstruction(&lie::filiform5()).unwrap();
    assert!(!f5.b1_pass && !f5.admissible);
    assert_eq!((f5.b1, f5.b1_required), (2, 4));
    let ab5 = sasakian_obstruction(&lie::abelian(5)).unwrap();
    assert!(!ab5.b1_pass && !ab5.heisenberg_pass && !ab5.admissible);

    // the weight arithmetic forces (w1, w2) = (2n, 1) on the model data
    for n in 1..=3usize {
        let m = build_model(&heisenberg_basic_ring(n).unwrap()).unwrap();
        let h1 = &hodge_split_check(&m).unwrap().bigradings[1];
        let mut dims: BTreeMap<(i64, i64), usize> =
            h1.components.iter().map(|(&k, s)| (k, s.dim())).collect();
        dims.insert((1, 1), 1);
        assert!(weight_count_check(&dims, n), "n = {n}: {dims:?}");
        // near misses with the same total count are rejected
        let wrong1 = BTreeMap::from([((1, 0), 2 * n + 1)]);
        assert!(!weight_count_check(&wrong1, n));
        let wrong2 = BTreeMap::from([((1, 0), 2 * n - 1), ((1, 1), 2)]);
        assert!(!weight_count_check(&wrong2, n));
        let wrong3 = BTreeMap::from([((1, 0), 2 * n), ((0, 1), 1)]);
        assert!(!weight_count_check(&wrong3, n));
    }
}

#[test]
fn criterion_10_property_suites() {
    let clock = Instant::now();
    common::suite_rank_nullity(100);
    common::suite_koszul_leibniz(100);
    common::suite_d_squared_vs_jacobi(100);
    common::suite_poincare_and_euler();
    common::suite_deligne_roundtrip(100);
    common::suite_ddbar_implies_bott_chern(100);
    assert!(clock.elapsed().as_secs() < 120, "property suites too slow");
}
