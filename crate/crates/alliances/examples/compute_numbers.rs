//! Compute all six alliance numbers of a few graphs, with witnesses.
//!
//! ```bash
//! cargo run --release --example compute_numbers
//! ```

use alliances::{min_alliance, AllianceKind, Budget, GraphFamily};
use alliances::family::generate;

fn main() {
    let samples = [
        ("C_5", GraphFamily::Cycle { len: 5 }),
        ("P_4", GraphFamily::Path { order: 4 }),
        ("K_5", GraphFamily::Complete { order: 5 }),
        ("K_{2,3}", GraphFamily::CompleteBipartite { a: 2, b: 3 }),
        ("Petersen", GraphFamily::Petersen),
    ];

    for (name, family) in samples {
        let g = generate(&family).expect("valid parameters");
        println!("{name} (n = {}, m = {}):", g.order(), g.size());
        for kind in AllianceKind::ALL {
            let result = min_alliance(&g, kind, Budget::unlimited()).expect("connected sample");
            let witness = result.witness.expect("certified result");
            println!(
                "  {:<32} = {}  witness {:?}  ({} nodes, {})",
                kind.name(),
                result.value,
                witness.to_vec(),
                result.nodes_explored,
                result.method,
            );
        }
        println!();
    }
}
