//! `create_network` against a direct transcription of the two-cursor network
//! construction loop (component cursor `j`, slot cursor `k`).

use coincide::{create_network, NetworkEntry, Relation, SequenceSpec};
use proptest::prelude::*;

/// Walks component and slot cursors to component `p`, then emits one entry per
/// slot the component overlaps, branching on where the slot starts and ends
/// relative to the component.
fn cursor_network(durs: &[u64], g: u64, p: usize) -> (Vec<NetworkEntry>, bool) {
    let (mut k, mut j, mut cum) = (0u64, 0usize, 0u64);
    while j < p {
        let end = cum + durs[j];
        if end == (k + 1) * g {
            cum = end;
            j += 1;
            k += 1;
        } else if end > (k + 1) * g {
            k += 1;
        } else {
            cum = end;
            j += 1;
        }
    }

    let end = cum + durs[p];
    let mut entries = Vec::new();
    let mut flag = false;
    let mut push = |slot, relation, left_gap, right_gap, common_dur| {
        entries.push(NetworkEntry {
            slot,
            relation,
            left_gap,
            right_gap,
            common_dur,
        });
    };
    loop {
        let (ss, se) = (k * g, (k + 1) * g);
        if ss < cum {
            if se < end {
                push(k, Relation::OverlappedBy, cum - ss, 0, se - cum);
                k += 1;
            } else if se == end {
                push(k, Relation::Finishes, cum - ss, 0, end - cum);
                break;
            } else {
                push(k, Relation::During, cum - ss, se - end, end - cum);
                break;
            }
        } else if ss == cum {
            if se == end {
                push(k, Relation::Equals, 0, 0, g);
                flag = true;
                break;
            } else if se < end {
                push(k, Relation::StartedBy, 0, 0, g);
                flag = true;
                k += 1;
            } else {
                push(k, Relation::Starts, 0, se - end, end - cum);
                break;
            }
        } else if se < end {
            push(k, Relation::Contains, 0, 0, g);
            flag = true;
            k += 1;
        } else if se == end {
            push(k, Relation::FinishedBy, 0, 0, g);
            flag = true;
            break;
        } else {
            push(k, Relation::Overlaps, 0, se - end, end - ss);
            break;
        }
    }
    (entries, flag)
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[test]
fn worked_examples() {
    let machine = SequenceSpec::from_durations("machine", &[5, 3]).unwrap();
    let net = create_network(&machine, 1, 1).unwrap();
    assert_eq!(cursor_network(&[5, 3], 1, 1), (net.entries, net.flag));

    let pl1 = SequenceSpec::from_durations("PL-1", &[3, 3, 2]).unwrap();
    for p in 0..3 {
        let net = create_network(&pl1, 4, p).unwrap();
        assert_eq!(cursor_network(&[3, 3, 2], 4, p), (net.entries, net.flag));
    }
}

#[test]
fn exhaustive_small_sequences() {
    // Every sequence of up to three components with durations 1..=6, every slot length dividing the period.
    let mut seqs = Vec::new();
    for a in 1..=6u64 {
        seqs.push(vec![a]);
        for b in 1..=6 {
            seqs.push(vec![a, b]);
            for c in 1..=6 {
                seqs.push(vec![a, b, c]);
            }
        }
    }
    for durs in &seqs {
        let spec = SequenceSpec::from_durations("s", durs).unwrap();
        for g in divisors(spec.period()) {
            for p in 0..durs.len() {
                let net = create_network(&spec, g, p).unwrap();
                assert_eq!(
                    cursor_network(durs, g, p),
                    (net.entries, net.flag),
                    "{durs:?} g={g} p={p}"
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn agrees_on_random_sequences(
        durs in prop::collection::vec(1u64..=16, 1..=8),
        g_pick in any::<prop::sample::Index>(),
        p_pick in any::<prop::sample::Index>(),
    ) {
        let spec = SequenceSpec::from_durations("s", &durs).unwrap();
        let divs = divisors(spec.period());
        let g = divs[g_pick.index(divs.len())];
        let p = p_pick.index(durs.len());
        let net = create_network(&spec, g, p).unwrap();
        prop_assert_eq!(cursor_network(&durs, g, p), (net.entries, net.flag));
    }
}
