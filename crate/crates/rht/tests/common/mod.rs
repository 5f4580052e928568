//! Randomized suites shared by the `properties` target (which runs each one
//! on its own) and the `acceptance` target (which runs them as one gate).

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use rht::cohomology::chevalley_eilenberg;
use rht::dga::Dga;
use rht::hodge::{bott_chern, ddbar_check, deligne_splitting, filtrations_from_bigrading, Bicomplex, Bigrading};
use rht::lie::LieAlgebra;
use rht::linalg::{unit_vector, Conjugation, SparseMatrix, Subspace, Vector};
use rht::scalar::{Field, Scalar};

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> std::result::Result<(), TestCaseError>,
) {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    if let Err(e) = runner.run(&strategy, test) {
        panic!("{e}");
    }
}

pub fn small_rational() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Scalar::ratio(n, d))
}

pub fn small_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => small_rational(),
        1 => (-3i64..=3, -3i64..=3).prop_map(|(re, im)| Scalar::gaussian_int(re, im)),
    ]
}

fn vector(len: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(small_scalar(), len)
}

fn matrix() -> impl Strategy<Value = SparseMatrix> {
    (0usize..=5, 0usize..=5).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(vector(cols), rows)
            .prop_map(move |data| dense(rows, cols, &data))
    })
}

fn dense(rows: usize, cols: usize, data: &[Vector]) -> SparseMatrix {
    SparseMatrix::from_entries(
        rows,
        cols,
        data.iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, c)| (i, j, c.clone()))),
    )
    .unwrap()
}

/// rank(A) + dim ker(A) = cols, image dim = rank, and A(solve(A, Ax)) = Ax.
pub fn suite_rank_nullity(cases: u32) {
    run(
        cases,
        matrix().prop_flat_map(|m| {
            let cols = m.cols;
            (Just(m), vector(cols))
        }),
        |(m, x)| {
            let rank = m.rank();
            let kernel = m.kernel_basis();
            prop_assert_eq!(rank + kernel.dim(), m.cols);
            prop_assert_eq!(m.image().dim(), rank);
            for k in kernel.basis() {
                prop_assert!(m.apply(k).iter().all(Scalar::is_zero));
            }
            let b = m.apply(&x);
            let sol = m.solve(&b);
            prop_assert!(sol.is_some());
            prop_assert_eq!(m.apply(&sol.unwrap()), b);
            Ok(())
        },
    );
}

/// Graded commutativity, associativity, and the Leibniz law, on random
/// elements of a fixed nilpotent model.
pub fn suite_koszul_leibniz(cases: u32) {
    let a = chevalley_eilenberg(&rht::lie::filiform5()).unwrap();
    let strategy = (1usize..=2, 1usize..=2, 1usize..=2).prop_flat_map(move |(da, db, dc)| {
        (
            Just(da),
            Just(db),
            Just(dc),
            vector(slice_dim(&a, da)),
            vector(slice_dim(&a, db)),
            vector(slice_dim(&a, dc)),
        )
    });
    let a = chevalley_eilenberg(&rht::lie::filiform5()).unwrap();
    run(cases, strategy, move |(da, db, dc, x, y, z)| {
        // x y = (-1)^{da db} y x
        let xy = Dga::multiply(&a, da, &x, db, &y).unwrap();
        let yx = Dga::multiply(&a, db, &y, da, &x).unwrap();
        let sign = if da * db % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(&xy, &scale_vec(&yx, sign));
        // (x y) z = x (y z)
        if da + db + dc <= a.max_degree() {
            let left = Dga::multiply(&a, da + db, &xy, dc, &z).unwrap();
            let yz = Dga::multiply(&a, db, &y, dc, &z).unwrap();
            let right = Dga::multiply(&a, da, &x, db + dc, &yz).unwrap();
            prop_assert_eq!(left, right);
        }
        // d(x y) = dx y + (-1)^{da} x dy
        if da + db + 1 <= a.max_degree() {
            let dxy = a.d_matrix(da + db).unwrap().apply(&xy);
            let dx = a.d_matrix(da).unwrap().apply(&x);
            let dy = a.d_matrix(db).unwrap().apply(&y);
            let lhs1 = Dga::multiply(&a, da + 1, &dx, db, &y).unwrap();
            let lhs2 = Dga::multiply(&a, da, &x, db + 1, &dy).unwrap();
            let want = add_vec(&lhs1, &scale_vec(&lhs2, if da % 2 == 1 { -1 } else { 1 }));
            prop_assert_eq!(dxy, want);
        }
        Ok(())
    });
}

fn slice_dim<T: Dga>(a: &T, k: usize) -> usize {
    a.dim(k)
}

fn scale_vec(v: &[Scalar], s: i64) -> Vector {
    let c = Scalar::from_int(s);
    v.iter().map(|x| x * &c).collect()
}

fn add_vec(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// The two implementations must agree: the bracket table satisfies Jacobi
/// iff the dual differential squares to zero.
pub fn suite_d_squared_vs_jacobi(cases: u32) {
    let strategy = (2usize..=5).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            proptest::collection::vec(
                proptest::option::weighted(0.4, proptest::collection::vec(-2i64..=2, n)),
                pairs,
            ),
        )
    });
    run(cases, strategy, |(n, tables)| {
        let names = (1..=n).map(|k| format!("e{k}")).collect();
        let mut g = LieAlgebra::new("rand", names, Field::Q);
        let mut idx = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if let Some(t) = &tables[idx] {
                    let v: Vector = t.iter().map(|&c| Scalar::from_int(c)).collect();
                    g.set_bracket(i, j, v).unwrap();
                }
                idx += 1;
            }
        }
        let jacobi_ok = g.jacobi_check().is_ok();
        let d_squared_ok = chevalley_eilenberg(&g).is_ok();
        prop_assert_eq!(jacobi_ok, d_squared_ok);
        Ok(())
    });
}

/// Poincare duality and vanishing Euler characteristic on the nilpotent
/// fixtures (a fixed corpus, not randomized).
pub fn suite_poincare_and_euler() {
    let mut corpus: Vec<LieAlgebra> = vec![
        rht::lie::filiform5(),
        rht::lie::h3_plus_r2(),
    ];
    for n in 1..=3 {
        corpus.push(rht::lie::heisenberg(n));
    }
    for n in 1..=5 {
        corpus.push(rht::lie::abelian(n));
    }
    for g in &corpus {
        let betti = rht::cohomology::lie_betti(g).unwrap();
        assert_eq!(betti.len(), g.dim() + 1, "{}", g.name);
        assert!(rht::cohomology::poincare_symmetric(&betti), "{}: {betti:?}", g.name);
        let chi: i64 = betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        assert_eq!(chi, 0, "{}: {betti:?}", g.name);
        assert_eq!(betti[0], 1, "{}", g.name);
    }
}

/// A bigrading with compatible conjugation survives the trip through its
/// weight and Hodge filtrations.
pub fn suite_deligne_roundtrip(cases: u32) {
    let strategy = proptest::collection::vec((0i64..=2, 0i64..=2, 1usize..=2), 1..=3)
        .prop_flat_map(|blocks| {
            // mirror (p, q) with (q, p) so a conjugation can exist
            let mut sizes: BTreeMap<(i64, i64), usize> = BTreeMap::new();
            for &(p, q, d) in &blocks {
                let e = sizes.entry((p, q)).or_insert(0);
                *e = (*e).max(d);
                let e = sizes.entry((q, p)).or_insert(0);
                *e = (*e).max(d);
            }
            let n: usize = sizes.values().sum();
            (Just(sizes), change_of_basis(n))
        });
    run(cases, strategy, |(sizes, t)| {
        let n: usize = sizes.values().sum();
        // coordinate blocks in BTreeMap order
        let mut offset = BTreeMap::new();
        let mut at = 0usize;
        for (&k, &d) in &sizes {
            offset.insert(k, at);
            at += d;
        }
        // conjugation swaps the (p, q) block with the (q, p) block slotwise
        let mut entries = Vec::new();
        for (&(p, q), &d) in &sizes {
            for s in 0..d {
                entries.push((offset[&(q, p)] + s, offset[&(p, q)] + s, Scalar::one()));
            }
        }
        let sigma = SparseMatrix::from_entries(n, n, entries).unwrap();
        let Some(t_inv) = invert(&t) else {
            return Ok(()); // not invertible; skip this draw
        };
        // transport everything through the change of basis t
        let conj = Conjugation {
            matrix: t.compose(&sigma).compose(&t_inv.conj()),
        };
        let mut comps = BTreeMap::new();
        for (&k, &d) in &sizes {
            let rows: Vec<Vector> = (0..d)
                .map(|s| t.column(offset[&k] + s))
                .collect();
            comps.insert(k, Subspace::from_rows(n, rows));
        }
        let bg = Bigrading::new(n, comps);
        let (w, f) = filtrations_from_bigrading(&bg, &conj).unwrap();
        let back = deligne_splitting(&w, &f, &conj).unwrap();
        prop_assert_eq!(back.components.len(), bg.components.len());
        for (k, s) in &bg.components {
            prop_assert_eq!(Some(s), back.components.get(k), "component {:?}", k);
        }
        Ok(())
    });
}

fn change_of_basis(n: usize) -> impl Strategy<Value = SparseMatrix> {
    proptest::collection::vec(proptest::collection::vec(-2i64..=2, n.max(1)), n.max(1)).prop_map(
        move |rows| {
            // unit lower times unit upper triangular: always invertible
            let one = Scalar::one();
            let mut lo = Vec::new();
            let mut hi = Vec::new();
            for i in 0..n {
                lo.push((i, i, one.clone()));
                hi.push((i, i, one.clone()));
                for j in 0..n {
                    let c = Scalar::from_int(rows[i][j]);
                    if j < i {
                        lo.push((i, j, c));
                    } else if j > i {
                        hi.push((i, j, c));
                    }
                }
            }
            let lo = SparseMatrix::from_entries(n, n, lo).unwrap();
            let hi = SparseMatrix::from_entries(n, n, hi).unwrap();
            lo.compose(&hi)
        },
    )
}

fn invert(m: &SparseMatrix) -> Option<SparseMatrix> {
    let n = m.rows;
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        cols.push(m.solve(&unit_vector(n, k))?);
    }
    Some(SparseMatrix::from_columns(n, &cols))
}

/// Bicomplexes assembled from dots, del segments, delbar segments, and
/// anticommuting squares: the del-delbar property implies the natural map
/// from Bott-Chern to de Rham classes is an isomorphism, and pure
/// dot/square sums always satisfy the property.
pub fn suite_ddbar_implies_bott_chern(cases: u32) {
    #[derive(Clone, Debug)]
    enum Piece {
        Dot(i64, i64),
        DelSeg(i64, i64),
        DelbarSeg(i64, i64),
        Square(i64, i64),
    }
    let piece = (0i64..=2, 0i64..=2, 0u8..4).prop_map(|(p, q, k)| match k {
        0 => Piece::Dot(p, q),
        1 => Piece::DelSeg(p, q),
        2 => Piece::DelbarSeg(p, q),
        _ => Piece::Square(p, q),
    });
    let strategy = proptest::collection::vec(piece, 1..=4);
    run(cases, strategy, |pieces| {
        // lay out per-bidegree slots
        let mut labels: BTreeMap<(i64, i64), Vec<String>> = BTreeMap::new();
        let mut slot = |p: i64, q: i64| {
            let v = labels.entry((p, q)).or_default();
            v.push(format!("e{p}{q}x{}", v.len()));
            v.len() - 1
        };
        // (source bidegree, source slot, target slot, coefficient) per map
        let mut dels: Vec<((i64, i64), usize, usize, Scalar)> = Vec::new();
        let mut delbars: Vec<((i64, i64), usize, usize, Scalar)> = Vec::new();
        let mut clean = true;
        for piece in &pieces {
            match *piece {
                Piece::Dot(p, q) => {
                    slot(p, q);
                }
                Piece::DelSeg(p, q) => {
                    let u = slot(p, q);
                    let v = slot(p + 1, q);
                    dels.push(((p, q), u, v, Scalar::one()));
                    clean = false;
                }
                Piece::DelbarSeg(p, q) => {
                    let u = slot(p, q);
                    let v = slot(p, q + 1);
                    delbars.push(((p, q), u, v, Scalar::one()));
                    clean = false;
                }
                Piece::Square(p, q) => {
                    let u = slot(p, q);
                    let a = slot(p + 1, q);
                    let b = slot(p, q + 1);
                    let r = slot(p + 1, q + 1);
                    dels.push(((p, q), u, a, Scalar::one()));
                    delbars.push(((p, q), u, b, Scalar::one()));
                    delbars.push(((p + 1, q), a, r, -Scalar::one()));
                    dels.push(((p, q + 1), b, r, Scalar::one()));
                }
            }
        }
        let mut b = Bicomplex::new("rand");
        for (&(p, q), ls) in &labels {
            b.add_component(p, q, ls.clone()).unwrap();
        }
        let dims: BTreeMap<(i64, i64), usize> =
            labels.iter().map(|(&k, v)| (k, v.len())).collect();
        let dim_at = |p: i64, q: i64| dims.get(&(p, q)).copied().unwrap_or(0);
        let mut group = |maps: &[((i64, i64), usize, usize, Scalar)], horizontal: bool| {
            let mut per: BTreeMap<(i64, i64), Vec<(usize, usize, Scalar)>> = BTreeMap::new();
            for ((p, q), u, v, c) in maps {
                per.entry((*p, *q)).or_default().push((*v, *u, c.clone()));
            }
            for ((p, q), entries) in per {
                let (tp, tq) = if horizontal { (p + 1, q) } else { (p, q + 1) };
                let m =
                    SparseMatrix::from_entries(dim_at(tp, tq), dim_at(p, q), entries).unwrap();
                if horizontal {
                    b.set_del(p, q, m).unwrap();
                } else {
                    b.set_delbar(p, q, m).unwrap();
                }
            }
        };
        group(&dels, true);
        group(&delbars, false);
        b.validate().unwrap();

        let report = ddbar_check(&b).unwrap();
        if report.holds {
            prop_assert!(bott_chern(&b).unwrap().natural_map_iso);
        }
        if clean {
            prop_assert!(report.holds, "dots and squares alone: {:?}", report.failures);
        }
        Ok(())
    });
}
