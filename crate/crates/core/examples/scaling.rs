//! Operation counts of the gcd method and brute-force projection on
//! worst-case (coprime, unit-component) instances.
//!
//! ```bash
//! cargo run --release --example scaling -- 12
//! ```

use coincide::bench;

fn main() -> coincide::Result<()> {
    let max_exponent = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    let report = bench::run(max_exponent)?;
    println!("{:>8} {:>14} {:>14}", "D", "gcd ops", "oracle ops");
    for row in &report.rows {
        println!(
            "{:>8} {:>14} {:>14}",
            row.max_dur, row.gcd_method_ops, row.oracle_ops
        );
    }
    println!(
        "log-log slope: gcd {:.3}, oracle {:.3}",
        report.gcd_slope, report.oracle_slope
    );
    Ok(())
}
