//! A quick tour of the input language: parse a document, reprint it in
//! canonical form, lower the blocks, and run an analysis on each.

use rht::cohomology::{cohomology, lie_betti};
use rht::dga::Dga;
use rht::dsl::{lower_document, parse_document, print_document, Lowered};

const SOURCE: &str = r#"
# a nilpotent Lie algebra and a truncated sphere model, side by side
over Q

lie h3 { basis x1 x2 x3; bracket [x1, x2] = x3; }

cdga S2 {
  gen x:2 y:3;
  d y = x*x;
}
"#;

fn main() {
    let doc = parse_document(SOURCE).unwrap();
    let canonical = print_document(&doc);
    println!("canonical form:\n{canonical}");

    let reparsed = parse_document(&canonical).unwrap();
    println!(
        "printing is stable under reparsing: {}",
        print_document(&reparsed) == canonical
    );
    println!();

    for item in lower_document(&doc).unwrap() {
        match item {
            Lowered::Lie(g) => {
                println!("lie {}: betti {:?}", g.name, lie_betti(&g).unwrap());
            }
            Lowered::Cdga(a) => {
                let coh = cohomology(&a, a.max_degree() - 1).unwrap();
                println!("cdga {}: betti {:?}", a.name, coh.betti_numbers());
            }
            Lowered::Ring(r) => {
                println!("basicring {}: total dim {}", r.fdga.name, r.fdga.total_dim());
            }
            Lowered::Bicomplex(b) => {
                println!("bicomplex {}: {} components", b.name, b.components().count());
            }
        }
    }
}
