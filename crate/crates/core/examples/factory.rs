//! Maintenance planning: can a three-day machine rest ever fall on a Wednesday?
//!
//! ```bash
//! cargo run --example factory
//! ```

use coincide::{cycle_duration, decide, enumerate_coincidences, first_coincidence, SequenceSpec};

fn main() -> coincide::Result<()> {
    let weekday = SequenceSpec::from_pairs(
        "weekday",
        &[
            ("Monday", 1),
            ("Tuesday", 1),
            ("Wednesday", 1),
            ("Thursday", 1),
            ("Friday", 1),
            ("Saturday", 1),
            ("Sunday", 1),
        ],
    )?;
    let wednesday = weekday.resolve("Wednesday")?;

    for rest_days in [3, 2] {
        let machine = SequenceSpec::from_pairs("machine", &[("Working", 5), ("Rest", rest_days)])?;
        let rest = machine.resolve("Rest")?;
        let decision = decide(&weekday, &machine, wednesday, rest)?;

        println!("machine works 5 days, rests {rest_days}");
        println!("  cycle: {} days", cycle_duration(&weekday, &machine));
        println!("  Wednesday during rest: {}", decision.coincides);
        if let Some(first) = first_coincidence(&weekday, &machine, wednesday, rest)? {
            println!("  first clash: day {}", first.start());
        }
        let all: Vec<String> = enumerate_coincidences(&weekday, &machine, wednesday, rest)?
            .iter()
            .map(ToString::to_string)
            .collect();
        println!(
            "  every clash in one cycle: {}",
            if all.is_empty() {
                "none".into()
            } else {
                all.join(" ")
            }
        );
    }
    Ok(())
}
