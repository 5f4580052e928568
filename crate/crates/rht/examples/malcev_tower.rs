//! Dualizing a Sullivan 1-minimal tower into a tower of nilpotent Lie
//! algebras, and comparing the limit against the algebra we started from.

use rht::cohomology::chevalley_eilenberg;
use rht::lie::{abelian, filiform5, h3_plus_r2, heisenberg, LieAlgebra};
use rht::malcev::{dualize, invariants, malcev_summary};
use rht::tower::build_tower;

fn round_trip(g: &LieAlgebra) {
    let a = chevalley_eilenberg(g).unwrap();
    let t = build_tower(&a, 10).unwrap();
    let lt = dualize(&t).unwrap();
    let ms = malcev_summary(&lt).unwrap();
    println!(
        "{}: class {}, level dims {:?}, stabilized = {}",
        g.name, ms.class, ms.level_dims, ms.stabilized
    );
    let got = invariants(&ms.limit);
    let want = invariants(g);
    println!(
        "  limit invariants (dim, lcs, derived): {:?} — {}",
        got,
        if got == want { "matches the input" } else { "MISMATCH" }
    );
}

fn main() {
    round_trip(&heisenberg(1));
    round_trip(&heisenberg(2));
    round_trip(&filiform5());
    round_trip(&h3_plus_r2());
    round_trip(&abelian(4));
}
