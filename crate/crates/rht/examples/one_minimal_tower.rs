//! Stagewise construction of the 1-minimal tower of a nilpotent model.

use rht::cohomology::chevalley_eilenberg;
use rht::lie;
use rht::tower::build_tower;

fn main() {
    for g in [lie::heisenberg(2), lie::filiform5()] {
        let a = chevalley_eilenberg(&g).unwrap();
        let t = build_tower(&a, 8).unwrap();
        println!(
            "{}: {} stage(s), {}",
            g.name,
            t.stages.len(),
            if t.stabilized { "stabilized" } else { "budget exhausted" }
        );
        for (k, stage) in t.stages.iter().enumerate() {
            let names: Vec<&str> = stage
                .new_generators
                .iter()
                .map(|&id| stage.cdga.generator(id).name.as_str())
                .collect();
            println!(
                "  stage {}: adjoined {:?}; ker(phi on H2) has dim {}",
                k + 1,
                names,
                stage.kernel.dim()
            );
        }
        println!();
    }
}
