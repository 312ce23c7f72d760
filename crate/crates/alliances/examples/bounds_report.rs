//! Evaluate every bound and closed form on sample graphs and compare with
//! the exact solver values.
//!
//! ```bash
//! cargo run --release --example bounds_report
//! ```

use alliances::family::generate;
use alliances::solver::line_alliance_number;
use alliances::{bound_report, AllianceKind, Budget, GraphFamily};

fn main() {
    for (name, family) in [
        ("C_6", GraphFamily::Cycle { len: 6 }),
        ("K_{2,3}", GraphFamily::CompleteBipartite { a: 2, b: 3 }),
        ("K_{1,4}", GraphFamily::Star { leaves: 4 }),
        ("Petersen", GraphFamily::Petersen),
        ("Q_3", GraphFamily::Hypercube { dim: 3 }),
    ] {
        let g = generate(&family).expect("valid parameters");
        let report = bound_report(&g);
        println!("{name} ({}):", report.graph6);
        for entry in &report.entries {
            if !entry.applicable {
                continue;
            }
            let range = match (entry.lower, entry.upper, entry.exact) {
                (_, _, Some(e)) => format!("= {e}"),
                (Some(lo), Some(hi), _) => format!("in [{lo}, {hi}]"),
                (Some(lo), None, _) => format!(">= {lo}"),
                _ => String::new(),
            };
            println!("  {:<28} {:<14} {range}", entry.id, entry.target);
        }
        let exact = line_alliance_number(&g, AllianceKind::Defensive, Budget::unlimited())
            .expect("feasible");
        let exact_strong = line_alliance_number(&g, AllianceKind::Strong, Budget::unlimited())
            .expect("feasible");
        println!("  solver: a(L) = {}, a_hat(L) = {}", exact.value, exact_strong.value);
        println!();
    }
}
