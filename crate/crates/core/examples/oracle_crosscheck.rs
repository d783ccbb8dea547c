//! Cross-checks the gcd method against brute-force projection on seeded
//! random instances and reports how often the rule battery stays silent.
//!
//! ```bash
//! cargo run --release --example oracle_crosscheck -- 5000 7
//! ```

use coincide::cli::verify;

fn main() {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|a| a.parse().ok()).unwrap_or(1000);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(42);

    let summary = verify(seed, trials, None).expect("trials > 0");
    println!("{}", serde_json::to_string_pretty(&summary).unwrap());
    if !summary.passed {
        std::process::exit(1);
    }
}
