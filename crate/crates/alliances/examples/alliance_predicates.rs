//! The predicate layer: boundary counts, the six alliance kinds, and
//! minimality checking on hand-picked sets.
//!
//! ```bash
//! cargo run --release --example alliance_predicates
//! ```

use alliances::family::generate;
use alliances::kernel::{boundary_counts, is_alliance, is_minimal_alliance};
use alliances::{AllianceKind, GraphFamily, VertexSet};

fn main() {
    let c6 = generate(&GraphFamily::Cycle { len: 6 }).unwrap();

    for vertices in [vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 1, 3, 4]] {
        let s = VertexSet::from_vertices(c6.order(), &vertices);
        println!("C_6, S = {:?}:", s.to_vec());
        for v in s.iter() {
            let bc = boundary_counts(&c6, &s, v).unwrap();
            println!("  vertex {v}: {} neighbors inside, {} outside", bc.inside, bc.outside);
        }
        for kind in AllianceKind::ALL {
            let ok = is_alliance(&c6, &s, kind).unwrap();
            if ok {
                let minimal = is_minimal_alliance(&c6, &s, kind).unwrap();
                println!("  {kind}: alliance (minimal: {minimal})");
            }
        }
        println!();
    }

    // The empty set is rejected outright rather than treated as "false".
    let empty = VertexSet::new(c6.order());
    println!(
        "empty set: {}",
        is_alliance(&c6, &empty, AllianceKind::Defensive).unwrap_err()
    );
}
