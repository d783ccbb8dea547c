//! Loads a JSON query document and answers it, as `coincide check` does.
//!
//! ```bash
//! cargo run --example query_file -- crates/core/data/production_line.json
//! ```

use std::path::PathBuf;

use coincide::cli::QueryDocument;
use coincide::{decide, oracle_decide};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/factory.json"));
    let doc = QueryDocument::load(&path)?;
    let (p, q) = doc.indices()?;
    let unit = doc.unit.as_deref().unwrap_or("units");

    let decision = decide(&doc.x, &doc.y, p, q)?;
    let oracle = oracle_decide(&doc.x, &doc.y, p, q)?;
    println!(
        "{} + {}: {}",
        doc.x.components()[p].name,
        doc.y.components()[q].name,
        if decision.coincides {
            "coincide"
        } else {
            "never coincide"
        }
    );
    if let Some(w) = decision.witness {
        println!("  e.g. over {w} ({unit})");
    }
    println!(
        "  brute force agrees: {} ({} comparisons)",
        oracle.decision.coincides == decision.coincides,
        oracle.comparisons
    );
    Ok(())
}
