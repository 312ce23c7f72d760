//! The odd graph O_5 = K(9,4): 126 vertices, 5-regular.
//!
//! Its line graph has 315 vertices, and the edges through any one vertex
//! of O_5 induce a K_5 that is a strong alliance of size 5; connected
//! enumeration certifies nothing smaller works, so a(L) = 5. On O_5 itself
//! the minimum defensive alliance is a shortest cycle: a = girth = 6.
//!
//! ```bash
//! cargo run --release --example odd_graph_deep_dive
//! ```

use alliances::verify::odd_graph_deep_dive;
use alliances::Budget;

fn main() {
    let start = std::time::Instant::now();
    let report = odd_graph_deep_dive(Budget { max_secs: Some(300.0), max_nodes: None })
        .expect("O_5 is connected with edges");

    println!(
        "O_5: n = {}, m = {}, {}-regular",
        report.order, report.size, report.regular_degree
    );
    println!(
        "line graph: star witness {:?} is a strong alliance: {}",
        report.line_star_witness, report.line_star_is_strong
    );
    println!(
        "line graph: no defensive alliance of size <= {}, so a(L) = {}",
        report.line_no_alliance_up_to, report.line_alliance_number
    );
    println!(
        "base graph: a = {} = girth = {}; witness {:?} is a cycle: {}",
        report.graph_alliance_number, report.girth, report.graph_witness, report.graph_witness_is_cycle
    );
    println!(
        "({} search nodes in {:?})",
        report.nodes_explored,
        start.elapsed()
    );
}
