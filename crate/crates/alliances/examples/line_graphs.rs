//! Build line graphs, check the degree identity δ(e) = δ(u) + δ(v) − 2,
//! and map line-graph alliances back through characteristic sets.
//!
//! ```bash
//! cargo run --release --example line_graphs
//! ```

use alliances::family::generate;
use alliances::linegraph::{characteristic_set, edge_vertex_degree, line_graph};
use alliances::solver::{line_alliance_number, min_alliance};
use alliances::{AllianceKind, Budget, GraphFamily, VertexSet};

fn main() {
    for (name, family) in [
        ("K_{1,3}", GraphFamily::Star { leaves: 3 }),
        ("K_4", GraphFamily::Complete { order: 4 }),
        ("C_6", GraphFamily::Cycle { len: 6 }),
        ("Petersen", GraphFamily::Petersen),
    ] {
        let g = generate(&family).expect("valid parameters");
        let lg = line_graph(&g).expect("sample graphs have edges");
        println!(
            "{name}: L has {} vertices and {} edges",
            lg.graph().order(),
            lg.graph().size()
        );

        for (id, &(u, v)) in lg.edge_map().iter().enumerate().take(3) {
            println!(
                "  line vertex {id} = {{{u},{v}}}: degree {} = d({u}) + d({v}) - 2 = {}",
                lg.graph().degree(id),
                edge_vertex_degree(&g, u, v).expect("edge of g"),
            );
        }

        let line_min = line_alliance_number(&g, AllianceKind::Defensive, Budget::unlimited())
            .expect("feasible");
        let selection = VertexSet::from_vertices(
            lg.graph().order(),
            &line_min.witness.as_ref().expect("certified").to_vec(),
        );
        let c = characteristic_set(&lg, &selection).expect("nonempty witness");
        let base_min = min_alliance(&g, AllianceKind::Defensive, Budget::unlimited()).expect("feasible");
        println!(
            "  a(L) = {} via edges {:?}; characteristic set {:?}; a = {}",
            line_min.value,
            line_min.witness_edges.expect("line solve"),
            c.to_vec(),
            base_min.value,
        );
        println!();
    }
}
