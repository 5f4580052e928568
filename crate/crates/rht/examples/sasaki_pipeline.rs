//! The end-to-end Sasakian pipeline: validate the basic ring, build the
//! filtered model, run the Hodge-split and mixed-diagram checks, decide
//! 1-formality, type the quadratic stage, and dualize to a Malcev summary.

use rht::sasaki::{heisenberg_basic_ring, real_adapted, sasaki_pipeline, surfaces_ring, BasicRing};

fn run(ring: &BasicRing, stages: usize) {
    let r = sasaki_pipeline(ring, stages).unwrap();
    println!("{}:", ring.fdga.name);
    if !r.warnings.is_empty() {
        println!("  warnings: {:?}", r.warnings);
    }
    println!(
        "  hodge splits = {}, mixed diagram = {}",
        r.hodge.pass, r.mhd.pass
    );
    println!(
        "  one-formal = {} (provisional = {})",
        r.formality.verdict, r.formality.provisional
    );
    println!(
        "  quadratic-stage generator types {:?} (within (2,0)/(1,1)/(0,2): {}), phi respects types = {}",
        r.v2_types, r.v2_types_ok, r.phi_type_ok
    );
    if let Some((gens, rels)) = r.presentation {
        println!("  presentation: {gens} generators, {rels} relations");
    }
    if let Some(ms) = &r.malcev {
        println!(
            "  Malcev tower: class {}, level dims {:?}",
            ms.class, ms.level_dims
        );
    }
    println!();
}

fn main() {
    run(&heisenberg_basic_ring(2).unwrap(), 6);
    run(&heisenberg_basic_ring(3).unwrap(), 6);
    run(&real_adapted(&surfaces_ring().unwrap()).unwrap(), 2);
}
