use coincide::coincidence::Query;
use coincide::interval::{allen_relation, holds, Derived, Interval, Relation};
use coincide::network_for_period;
use coincide::{
    audit_battery, coincidence_windows, create_network, cycle_duration, decide,
    enumerate_coincidences, first_coincidence, oracle_decide, GcdPartition, SequenceSpec,
};
use num_integer::Integer;
use proptest::prelude::*;

fn interval() -> impl Strategy<Value = Interval> {
    (0u64..=32, 1u64..=32).prop_map(|(s, d)| Interval::new(s, d).unwrap())
}

fn sequence(name: &'static str) -> impl Strategy<Value = SequenceSpec> {
    prop::collection::vec(1u64..=16, 1..=8)
        .prop_map(move |d| SequenceSpec::from_durations(name, &d).unwrap())
}

fn instance() -> impl Strategy<Value = (SequenceSpec, SequenceSpec)> {
    (sequence("x"), sequence("y"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn exactly_one_relation(i in interval(), j in interval()) {
        let r = allen_relation(&i, &j);
        let count = Relation::ALL.iter().filter(|c| **c == r).count();
        prop_assert_eq!(count, 1);
        prop_assert_eq!(allen_relation(&j, &i), r.inverse());
        prop_assert_eq!(holds(Derived::Sub, &i, &j), holds(Derived::Within, &i, &j) || i == j);
    }

    #[test]
    fn decide_matches_oracle((x, y) in instance()) {
        for p in 0..x.len() {
            for q in 0..y.len() {
                let d = decide(&x, &y, p, q).unwrap();
                let report = oracle_decide(&x, &y, p, q).unwrap();
                prop_assert_eq!(d.coincides, report.decision.coincides);
                if let Some(w) = d.witness {
                    prop_assert!(report.windows.contains(&w));
                }
                // The gcd method recovers the whole window list, not just the verdict.
                prop_assert_eq!(&coincidence_windows(&x, &y, p, q).unwrap(), &report.windows);
                prop_assert_eq!(first_coincidence(&x, &y, p, q).unwrap(), report.windows.first().copied());
            }
        }
    }

    #[test]
    fn commutative((x, y) in instance()) {
        for p in 0..x.len() {
            for q in 0..y.len() {
                prop_assert_eq!(
                    decide(&x, &y, p, q).unwrap().coincides,
                    decide(&y, &x, q, p).unwrap().coincides
                );
                prop_assert_eq!(
                    enumerate_coincidences(&x, &y, p, q).unwrap(),
                    enumerate_coincidences(&y, &x, q, p).unwrap()
                );
            }
        }
    }

    #[test]
    fn battery_is_sound((x, y) in instance()) {
        for p in 0..x.len() {
            for q in 0..y.len() {
                prop_assert_eq!(audit_battery(&x, &y, p, q).unwrap().unsound, 0);
            }
        }
    }

    #[test]
    fn flag_forces_coincidence((x, y) in instance()) {
        let g = GcdPartition::build(&x, &y).slot_dur;
        for p in 0..x.len() {
            let flagged = create_network(&x, g, p).unwrap().flag;
            for q in 0..y.len() {
                if flagged {
                    prop_assert!(decide(&x, &y, p, q).unwrap().coincides);
                }
            }
        }
    }

    #[test]
    fn unflagged_networks_are_small((x, y) in instance()) {
        for p in 0..x.len() {
            for q in 0..y.len() {
                let query = Query::build(&x, &y, p, q).unwrap();
                if !query.x.flag && !query.y.flag {
                    prop_assert!(query.x.entries.len() <= 2);
                    prop_assert!(query.y.entries.len() <= 2);
                }
                for net in [&query.x, &query.y] {
                    let bound = net.dur().div_ceil(query.partition.slot_dur) + 1;
                    prop_assert!(!net.entries.is_empty() && net.entries.len() as u64 <= bound);
                }
            }
        }
    }

    #[test]
    fn partition_arithmetic((x, y) in instance()) {
        let part = GcdPartition::build(&x, &y);
        let cycle = cycle_duration(&x, &y);
        prop_assert_eq!(part.slots_x.gcd(&part.slots_y), 1);
        prop_assert_eq!(part.slots_x * part.slot_dur, x.period());
        prop_assert_eq!(part.slots_y * part.slot_dur, y.period());
        prop_assert_eq!(cycle / x.period(), part.slots_y);
        prop_assert_eq!(cycle / y.period(), part.slots_x);
        prop_assert_eq!((part.slots_x * part.slot_dur).lcm(&(part.slots_y * part.slot_dur)), cycle);
        prop_assert_eq!(part.cycle(), cycle);
        // Every component window overlaps at least one slot of its period.
        for spec in [&x, &y] {
            for p in 0..spec.len() {
                let w = spec.component_window(p).unwrap();
                let hits = (0..spec.period() / part.slot_dur)
                    .filter(|k| w.intersection(&Interval::new(k * part.slot_dur, part.slot_dur).unwrap()).is_some())
                    .count();
                prop_assert!(hits >= 1);
            }
        }
    }

    #[test]
    fn align_slot_inverts_residues((x, y) in instance()) {
        let part = GcdPartition::build(&x, &y);
        let mut seen = vec![false; part.cycle_slots() as usize];
        for k in 0..part.cycle_slots() {
            let (r, s) = part.residues(k);
            prop_assert_eq!(part.align_slot(r, s).unwrap(), k);
            let idx = (r * part.slots_y + s) as usize;
            prop_assert!(!seen[idx]);
            seen[idx] = true;
        }
    }

    #[test]
    fn networks_repeat_every_period((x, y) in instance(), period in 1u64..=2) {
        let g = GcdPartition::build(&x, &y).slot_dur;
        for p in 0..x.len() {
            let base = create_network(&x, g, p).unwrap();
            let later = network_for_period(&x, g, p, period).unwrap();
            prop_assert_eq!(base.entries, later.entries);
            prop_assert_eq!(base.flag, later.flag);
        }
    }

    #[test]
    fn cycles_repeat((x, y) in instance()) {
        let cycle = cycle_duration(&x, &y);
        for p in 0..x.len() {
            for q in 0..y.len() {
                let xs = x.incidences_of(p, 2 * cycle).unwrap();
                let ys = y.incidences_of(q, 2 * cycle).unwrap();
                let (nx, ny) = (xs.len() / 2, ys.len() / 2);
                for i in 0..nx {
                    for j in 0..ny {
                        prop_assert_eq!(
                            allen_relation(&xs[i], &ys[j]),
                            allen_relation(&xs[i + nx], &ys[j + ny])
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn incidences_have_fixed_duration(x in sequence("x"), n in 1u64..=4) {
        for p in 0..x.len() {
            let inc = x.incidences_of(p, n * x.period()).unwrap();
            prop_assert_eq!(inc.len() as u64, n);
            prop_assert!(inc.iter().all(|i| i.dur() == x.components()[p].dur));
            prop_assert_eq!(inc[0].start(), x.offset(p).unwrap());
        }
        let tm = x.unroll(n);
        prop_assert!(tm.is_contiguous());
        prop_assert_eq!(tm.len(), x.len() * n as usize);
    }
}
