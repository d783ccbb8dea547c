//! The gcd slot grid: every slot of one period meets every slot of the other
//! exactly once per cycle.
//!
//! ```bash
//! cargo run --example slot_alignment
//! ```

use coincide::GcdPartition;

fn main() -> coincide::Result<()> {
    let part = GcdPartition::from_periods(7, 8);
    println!(
        "periods 7 and 8: g={} R={} S={} cycle={}",
        part.slot_dur,
        part.slots_x,
        part.slots_y,
        part.cycle()
    );
    println!("cycle slot where x-slot r meets y-slot s:");
    print!("     ");
    for s in 0..part.slots_y {
        print!("s={s:<3}");
    }
    println!();
    for r in 0..part.slots_x {
        print!("r={r:<2} ");
        for s in 0..part.slots_y {
            print!("{:<5}", part.align_slot(r, s)?);
        }
        println!();
    }
    let k = part.align_slot(2, 5)?;
    println!(
        "\nslot {k} spans {} and has residues {:?}",
        part.slot_interval(k)?,
        part.residues(k)
    );
    Ok(())
}
