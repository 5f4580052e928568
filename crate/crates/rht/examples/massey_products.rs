//! Massey triple products on Chevalley-Eilenberg complexes.
//!
//! On h3 the product <x1, x1, x2> is nonzero modulo indeterminacy, which is
//! exactly the obstruction behind its failure of 1-formality.  On h5 a scan
//! over all defined degree-one triples finds only vanishing products.

use rht::cohomology::{chevalley_eilenberg, cohomology};
use rht::formality::{massey_scan, massey_triple};
use rht::lie::heisenberg;
use rht::linalg::unit_vector;

fn main() {
    let g = heisenberg(1);
    let a = chevalley_eilenberg(&g).unwrap();
    let coh = cohomology(&a, 3).unwrap();
    let chart = coh.chart(1);
    let class = |k: usize| chart.project(&unit_vector(3, k)).unwrap();
    let (x1, x2) = (class(0), class(1));

    let v = massey_triple(&a, &coh, &x1, &x1, &x2).unwrap();
    let coords: Vec<String> = v.representative.iter().map(|s| s.to_string()).collect();
    println!("h3: <x1, x1, x2>");
    println!("  representative in H2 coordinates: [{}]", coords.join(", "));
    println!("  indeterminacy dim: {}", v.indeterminacy.dim());
    println!("  nonzero mod indeterminacy: {}", v.nonzero_mod_indeterminacy);
    println!();

    let g5 = heisenberg(2);
    let a5 = chevalley_eilenberg(&g5).unwrap();
    let coh5 = cohomology(&a5, 3).unwrap();
    let scan = massey_scan(&a5, &coh5).unwrap();
    let nonzero = scan
        .iter()
        .filter(|(_, v)| v.nonzero_mod_indeterminacy)
        .count();
    println!(
        "h5: scanned {} defined triples; {} nonzero mod indeterminacy",
        scan.len(),
        nonzero
    );
}
