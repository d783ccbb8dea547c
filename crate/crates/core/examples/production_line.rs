//! Two production lines in lockstep: which processes ever run at the same time?
//!
//! Prints the full coincidence matrix and, for the P1/P5 safety question, the
//! slot networks and the rules that justify the answer.
//!
//! ```bash
//! cargo run --example production_line
//! ```

use coincide::coincidence::Query;
use coincide::{decide, GcdPartition, SequenceSpec};

fn main() -> coincide::Result<()> {
    let pl1 = SequenceSpec::from_pairs("PL-1", &[("P1", 3), ("P2", 3), ("P3", 2)])?;
    let pl2 = SequenceSpec::from_pairs("PL-2", &[("P4", 2), ("P5", 2)])?;
    let part = GcdPartition::build(&pl1, &pl2);
    println!(
        "slots of {} min: {} per PL-1 period, {} per PL-2 period, cycle {} min",
        part.slot_dur,
        part.slots_x,
        part.slots_y,
        part.cycle()
    );

    for (p, a) in pl1.components().iter().enumerate() {
        for (q, b) in pl2.components().iter().enumerate() {
            let d = decide(&pl1, &pl2, p, q)?;
            let when = d
                .witness
                .map(|w| w.to_string())
                .unwrap_or_else(|| "-".into());
            println!("  {} + {}: {:<5} {}", a.name, b.name, d.coincides, when);
        }
    }

    let (p1, p5) = (pl1.resolve("P1")?, pl2.resolve("P5")?);
    let query = Query::build(&pl1, &pl2, p1, p5)?;
    println!("\nP1 network: {:?}", query.x.entries);
    println!("P5 network: {:?}", query.y.entries);
    for (ex, ey) in query.pairs() {
        let fired: Vec<String> = query.fired(ex, ey).iter().map(|t| t.to_string()).collect();
        println!(
            "slots (r={}, s={}): window {:?}, rules fired: {}",
            ex.slot,
            ey.slot,
            query.window(ex, ey).map(|w| w.to_string()),
            fired.join(" ")
        );
    }
    Ok(())
}
