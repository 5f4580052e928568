mod common;

#[test]
fn rank_nullity_and_solve() {
    common::suite_rank_nullity(120);
}

#[test]
fn koszul_and_leibniz_laws() {
    common::suite_koszul_leibniz(120);
}

#[test]
fn d_squared_agrees_with_jacobi() {
    common::suite_d_squared_vs_jacobi(120);
}

#[test]
fn poincare_duality_and_euler_characteristic() {
    common::suite_poincare_and_euler();
}

#[test]
fn deligne_splitting_roundtrip() {
    common::suite_deligne_roundtrip(120);
}

#[test]
fn ddbar_implies_bott_chern_iso() {
    common::suite_ddbar_implies_bott_chern(120);
}
