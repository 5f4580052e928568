//! 1-formality verdicts for the Heisenberg family, with the quadratic
//! presentation read off the tower when the verdict is positive.

use rht::cohomology::chevalley_eilenberg;
use rht::formality::{
    one_formal, presentation_level_dims, presentation_quotient, quadratic_presentation,
};
use rht::lie::{heisenberg, LieAlgebra};
use rht::malcev::invariants;
use rht::tower::build_tower;

fn report(g: &LieAlgebra) {
    let a = chevalley_eilenberg(g).unwrap();
    let t = build_tower(&a, 8).unwrap();
    let r = one_formal(&t).unwrap();
    println!(
        "{}: one-formal = {} (H2 dims {} -> {}, image {})",
        g.name, r.verdict, r.h2_m1_dim, r.h2_m_dim, r.image_dim
    );
    if let Some(label) = &r.witness_label {
        println!("  witness class surviving past the quadratic stage: {label}");
    }
    if r.verdict {
        let p = quadratic_presentation(&t).unwrap();
        let class = t.stages.len();
        println!(
            "  quadratic presentation: {} generators, {} relations",
            p.generators,
            p.relations.dim()
        );
        println!(
            "  free-nilpotent quotient level dims: {:?}",
            presentation_level_dims(&p, class)
        );
        let q = presentation_quotient(&p, class).unwrap();
        let (dim, lcs, derived) = invariants(&q);
        println!("  presented algebra: dim {dim}, lcs {lcs:?}, derived dim {derived}");
    }
    println!();
}

fn main() {
    for n in 1..=3 {
        report(&heisenberg(n));
    }
}
