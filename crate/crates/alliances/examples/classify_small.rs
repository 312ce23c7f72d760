//! Classify a and a(L) into {1, 2, 3, >=4} from degree patterns alone and
//! confirm against exhaustive search.
//!
//! ```bash
//! cargo run --release --example classify_small
//! ```

use alliances::bounds::{classify_small_alliance, classify_small_line_alliance};
use alliances::family::generate;
use alliances::{brute_force_oracle, line_graph, AllianceKind, GraphFamily};

fn main() {
    for (name, family) in [
        ("P_4", GraphFamily::Path { order: 4 }),
        ("C_7", GraphFamily::Cycle { len: 7 }),
        ("K_5", GraphFamily::Complete { order: 5 }),
        ("K_7", GraphFamily::Complete { order: 7 }),
        ("Petersen", GraphFamily::Petersen),
        ("K_{1,5}", GraphFamily::Star { leaves: 5 }),
    ] {
        let g = generate(&family).expect("valid parameters");

        let class = classify_small_alliance(&g);
        let oracle = brute_force_oracle(&g, AllianceKind::Defensive).expect("small sample");
        print!("{name}: a classified {:>3}", class.class.as_str());
        if let Some(w) = &class.witness {
            print!(" via {} {:?}", w.pattern.as_str(), w.vertices);
        }
        println!("; exhaustive a = {}", oracle.value);

        let line_class = classify_small_line_alliance(&g).expect("samples have edges");
        let lg = line_graph(&g).expect("samples have edges");
        print!("{name}: a(L) classified {:>3}", line_class.class.as_str());
        if let Some(w) = &line_class.witness {
            print!(" via {} {:?}", w.pattern.as_str(), w.vertices);
        }
        match brute_force_oracle(lg.graph(), AllianceKind::Defensive) {
            Ok(r) => println!("; exhaustive a(L) = {}", r.value),
            Err(_) => println!("; line graph beyond the oracle cap"),
        }
        println!();
    }
}
