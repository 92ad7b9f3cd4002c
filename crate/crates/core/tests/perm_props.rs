use permdek_core::dyck::catalan;
use permdek_core::enumerate::all_permutations;
use permdek_core::Permutation;
use proptest::prelude::*;

fn pat(s: &str) -> Permutation {
    s.parse().unwrap()
}

#[test]
fn closed_form_predicates_agree_with_pattern_scan() {
    let (t312, t321) = (pat("3,1,2"), pat("3,2,1"));
    for n in 0..=8 {
        let mut avoid312 = 0u32;
        let mut avoid321 = 0u32;
        for p in all_permutations(n).unwrap() {
            let a312 = p.avoids_312();
            let a321 = p.avoids_321();
            assert_eq!(a312, !p.contains_pattern(&t312).unwrap(), "{p}");
            assert_eq!(a321, !p.contains_pattern(&t321).unwrap(), "{p}");
            assert_eq!(a321, p.two_increasing_decomposition().is_some(), "{p}");
            avoid312 += a312 as u32;
            avoid321 += a321 as u32;
        }
        assert_eq!(catalan(n), avoid312.into(), "n={n}");
        assert_eq!(catalan(n), avoid321.into(), "n={n}");
    }
}

#[test]
fn decomposition_partitions_positions() {
    for p in all_permutations(6).unwrap() {
        if let Some(d) = p.two_increasing_decomposition() {
            let mut positions: Vec<usize> = d.records.iter().chain(&d.rest).map(|&(i, _)| i).collect();
            positions.sort_unstable();
            assert_eq!(positions, (0..6).collect::<Vec<_>>());
            let recs: Vec<usize> = d.records.iter().map(|&(i, _)| i).collect();
            assert_eq!(recs, p.record_setters());
        }
    }
}

fn any_permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

proptest! {
    #[test]
    fn record_values_strictly_increase(p in any_permutation(40)) {
        let values: Vec<u32> = p.record_setters().iter().map(|&i| p.as_slice()[i]).collect();
        prop_assert!(values.windows(2).all(|w| w[0] < w[1]));
        if !p.is_empty() {
            prop_assert_eq!(p.record_setters()[0], 0);
        }
    }

    #[test]
    fn text_format_round_trips(p in any_permutation(30)) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn fast_predicates_match_pattern_scan(p in any_permutation(12)) {
        prop_assert_eq!(p.avoids_312(), !p.contains_pattern(&pat("3,1,2")).unwrap());
        prop_assert_eq!(p.avoids_321(), !p.contains_pattern(&pat("3,2,1")).unwrap());
    }
}
