//! Run the full verification harness over the exhaustive corpus of
//! connected graphs with at most six vertices.
//!
//! ```bash
//! cargo run --release --example verify_corpus
//! ```

use alliances::verify::{run, VerifyOptions};

fn main() {
    let start = std::time::Instant::now();
    let report = run(&VerifyOptions { max_n: 6, ..Default::default() });

    println!("corpus:  {}", report.corpus);
    println!("graphs:  {}", report.graphs_checked);
    println!("checks:  {}", report.checks.join(", "));
    for note in &report.notes {
        println!("note:    {note}");
    }
    if report.passed() {
        println!("result:  all checks passed in {:?}", start.elapsed());
    } else {
        println!("result:  {} violations", report.violations.len());
        for v in &report.violations {
            println!("  {} {} {}", v.graph6, v.check, v.details);
        }
        std::process::exit(1);
    }
}
