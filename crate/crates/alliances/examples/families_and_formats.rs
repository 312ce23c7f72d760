//! Generate the named families, inspect their metrics, and round-trip them
//! through the graph6 and edge-list formats.
//!
//! ```bash
//! cargo run --release --example families_and_formats
//! ```

use alliances::edgelist::{encode_edge_list, parse_edge_list};
use alliances::family::generate;
use alliances::graph6::{encode_graph6, parse_graph6};
use alliances::{metrics, GraphFamily};

fn main() {
    for (name, family) in [
        ("P_4", GraphFamily::Path { order: 4 }),
        ("C_8", GraphFamily::Cycle { len: 8 }),
        ("K_4", GraphFamily::Complete { order: 4 }),
        ("K_{2,3}", GraphFamily::CompleteBipartite { a: 2, b: 3 }),
        ("K_{1,3}", GraphFamily::Star { leaves: 3 }),
        ("Petersen = K(5,2)", GraphFamily::Petersen),
        ("Q_3", GraphFamily::Hypercube { dim: 3 }),
        ("O_5 = K(9,4)", GraphFamily::Odd { k: 5 }),
    ] {
        let g = generate(&family).expect("valid parameters");
        let m = metrics(&g);
        println!(
            "{name:<18} n = {:>3}, m = {:>3}, degrees {:?}..{:?}, diameter {:?}, girth {:?}",
            g.order(),
            g.size(),
            g.min_degree(),
            g.max_degree(),
            m.diameter,
            m.girth,
        );

        let enc = encode_graph6(&g).expect("orders stay below the graph6 limit");
        assert_eq!(parse_graph6(&enc).expect("own encoding"), g);
        if g.order() <= 10 {
            println!("  graph6 {enc}");
            let el = encode_edge_list(&g);
            assert_eq!(parse_edge_list(&el).expect("own encoding"), g);
        }
    }

    let o5 = generate(&GraphFamily::Odd { k: 5 }).unwrap();
    let enc = encode_graph6(&o5).unwrap();
    println!("\nO_5 graph6 record is {} bytes (long-form order prefix {:?})", enc.len(), &enc[..4]);
}
