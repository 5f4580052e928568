//! Double-complex checks: the del-delbar property and Bott-Chern cohomology.
//!
//! The "square" complex is an anticommuting square where every doubly-closed
//! exact class is a del-delbar image; the "leak" complex drops the far corner
//! so that del u is doubly closed and exact but not in the del-delbar image.

use rht::dsl::{lower_document, parse_document, Lowered};
use rht::hodge::{bott_chern, ddbar_check, Bicomplex};

fn load(path: &str) -> Bicomplex {
    let src = std::fs::read_to_string(path).unwrap();
    let doc = parse_document(&src).unwrap();
    match lower_document(&doc).unwrap().remove(0) {
        Lowered::Bicomplex(b) => b,
        other => panic!("expected a bicomplex, got {other:?}"),
    }
}

fn inspect(b: &Bicomplex) {
    let report = ddbar_check(b).unwrap();
    println!("{}: del-delbar property holds = {}", b.name, report.holds);
    for (deg, total, image) in &report.failures {
        println!(
            "  failure in total degree {deg}: {total} doubly-closed exact classes, {image} in the del-delbar image"
        );
    }
    let bc = bott_chern(b).unwrap();
    let dims: Vec<String> = bc
        .dims
        .iter()
        .filter(|(_, &d)| d > 0)
        .map(|(&(p, q), d)| format!("({p},{q}): {d}"))
        .collect();
    println!("  Bott-Chern dims: {{{}}}", dims.join(", "));
    println!(
        "  natural map to de Rham is an isomorphism: {}",
        bc.natural_map_iso
    );
    println!();
}

fn main() {
    inspect(&load("fixtures/ddbar_pass.bc"));
    inspect(&load("fixtures/ddbar_fail.bc"));
}
