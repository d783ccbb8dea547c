//! Interval algebra on half-open integer intervals.
//!
//! ```bash
//! cargo run --example allen_relations
//! ```

use coincide::{
    allen_relation, aux_intervals, common, cover, cover_star, holds, Derived, Interval, TimeMap,
};

fn main() -> coincide::Result<()> {
    let base = Interval::from_bounds(4, 8)?;
    println!("relations of other intervals to {base}:");
    for (s, e) in [
        (0, 2),
        (0, 4),
        (2, 6),
        (4, 6),
        (5, 7),
        (6, 8),
        (4, 8),
        (2, 8),
        (4, 10),
        (3, 9),
        (6, 10),
        (8, 10),
        (9, 12),
    ] {
        let other = Interval::from_bounds(s, e)?;
        println!(
            "  {other:<9} {:<14} disjoint={}",
            allen_relation(&other, &base).name(),
            holds(Derived::Disjoint, &other, &base)
        );
    }

    let a = Interval::from_bounds(0, 4)?;
    let b = Interval::from_bounds(2, 3)?;
    println!("\ncommon({a}, {b}) = {}", common(&a, &b)?);
    for aux in aux_intervals(&a, &b)? {
        println!(
            "  aux {} ({} first, {} second)",
            aux.aux, aux.rel_to_first, aux.rel_to_second
        );
    }

    let left = Interval::from_bounds(0, 2)?;
    let right = Interval::from_bounds(2, 5)?;
    println!("\ncover({left}, {right}) = {}", cover(&left, &right)?);
    let tm = TimeMap::new(vec![left, right, Interval::from_bounds(5, 6)?]);
    println!("cover of the time map = {}", cover_star(&tm)?);
    match common(&left, &right) {
        Ok(c) => println!("unexpected common {c}"),
        Err(e) => println!("meeting intervals share nothing: {e}"),
    }
    Ok(())
}
