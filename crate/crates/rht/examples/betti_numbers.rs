//! Chevalley-Eilenberg complexes and their cohomology over Q.

use rht::cohomology::{cup_product, chevalley_eilenberg, cohomology, lie_betti};
use rht::lie;

fn main() {
    for g in [
        lie::heisenberg(1),
        lie::heisenberg(2),
        lie::heisenberg(3),
        lie::filiform5(),
        lie::abelian(4),
    ] {
        let betti = lie_betti(&g).unwrap();
        println!("{:6}  betti {:?}", g.name, betti);
    }

    // cup products live on the chart representatives; on h3 the square of
    // every degree-1 class dies, which is where its Massey product comes from
    let g = lie::heisenberg(1);
    let a = chevalley_eilenberg(&g).unwrap();
    let coh = cohomology(&a, 3).unwrap();
    let h1 = coh.betti(1);
    println!("\nh3 cup products H1 x H1 -> H2:");
    for i in 0..h1 {
        for j in 0..h1 {
            let mut x = vec![rht::Scalar::zero(); h1];
            let mut y = vec![rht::Scalar::zero(); h1];
            x[i] = rht::Scalar::one();
            y[j] = rht::Scalar::one();
            let product = cup_product(&a, &coh, 1, &x, 1, &y).unwrap();
            let label = if product.iter().all(rht::Scalar::is_zero) {
                "0".to_string()
            } else {
                format!("{product:?}")
            };
            println!("  [x{}] . [x{}] = {label}", i + 1, j + 1);
        }
    }
}
