use std::collections::BTreeMap;

use permdek_core::dek::{
    clairvoyant_winnable, clairvoyant_winnable_with, count_winnable, hint, optimal_policy_value,
    win_probability_clairvoyant, Rules,
};
use permdek_core::dyck::catalan;
use permdek_core::enumerate::{all_permutations, factorial, obtainable};
use permdek_core::{ContainerKind, DekMove, DekState, HintMode, MachineConfig, Permutation, VisibleState, WinValue};
use proptest::prelude::*;

fn replay(shuffle: &Permutation, moves: &[DekMove]) -> DekState {
    moves
        .iter()
        .fold(DekState::new_game(shuffle), |s, &m| s.apply_move(m).unwrap())
}

#[test]
fn small_decks_are_always_winnable() {
    for n in 0..=4 {
        for shuffle in all_permutations(n).unwrap() {
            let (win, witness) = clairvoyant_winnable(&shuffle).unwrap();
            assert!(win, "{shuffle}");
            assert!(replay(&shuffle, &witness.unwrap()).is_won());
        }
    }
}

#[test]
fn clairvoyant_goldens() {
    let expected = [(5, 29, 30), (6, 317, 360), (7, 209, 280), (8, 11819, 20160)];
    for (n, num, den) in expected {
        assert_eq!(win_probability_clairvoyant(n).unwrap(), WinValue::new(num, den), "n={n}");
    }
}

#[test]
fn winnable_shuffles_are_inverses_of_deque_obtainable_permutations() {
    let deque = MachineConfig::single(ContainerKind::Deque);
    let stack = MachineConfig::single(ContainerKind::Stack);
    let single = Rules {
        single_end: true,
        canonicalize: false,
    };
    for n in 0..=6 {
        for shuffle in all_permutations(n).unwrap() {
            let inv = shuffle.inverse();
            let (win, _) = clairvoyant_winnable(&shuffle).unwrap();
            assert_eq!(win, obtainable(&deque, &inv).unwrap(), "{shuffle}");
            let (win1, _) = clairvoyant_winnable_with(&shuffle, single).unwrap();
            assert_eq!(win1, obtainable(&stack, &inv).unwrap(), "{shuffle}");
            assert_eq!(win1, inv.avoids_312(), "{shuffle}");
        }
    }
}

#[test]
fn single_end_game_has_catalan_many_winners() {
    let single = Rules {
        single_end: true,
        canonicalize: false,
    };
    for n in 0..=7 {
        assert_eq!(catalan(n), count_winnable(n, single).unwrap().into(), "n={n}");
    }
}

#[test]
fn mirror_symmetry_and_canonicalization() {
    let raw = Rules {
        single_end: false,
        canonicalize: false,
    };
    for n in 0..=6 {
        for shuffle in all_permutations(n).unwrap() {
            let (win, witness) = clairvoyant_winnable(&shuffle).unwrap();
            assert_eq!(clairvoyant_winnable_with(&shuffle, raw).unwrap().0, win, "{shuffle}");
            if let Some(w) = witness {
                let mirrored: Vec<DekMove> = w.iter().map(|m| m.mirrored()).collect();
                assert!(replay(&shuffle, &mirrored).is_won(), "{shuffle}");
            }
        }
    }
}

/// Best number of wins over the shuffles in `group`, all of which look the
/// same to a player who only sees the top card of the deck. Each move splits
/// the group by what becomes visible next.
fn info_set_wins(group: Vec<DekState>) -> u64 {
    let first = &group[0];
    if first.is_won() {
        return group.len() as u64;
    }
    let moves = first.legal_moves().unwrap();
    moves
        .into_iter()
        .map(|mv| {
            let mut split: BTreeMap<String, Vec<DekState>> = BTreeMap::new();
            for s in &group {
                let next = s.apply_move(mv).unwrap();
                split
                    .entry(serde_json::to_string(&next.visible()).unwrap())
                    .or_default()
                    .push(next);
            }
            split.into_values().map(info_set_wins).sum()
        })
        .max()
        .unwrap_or(0)
}

#[test]
fn policy_value_matches_information_set_oracle() {
    for n in 0..=6 {
        let mut groups: BTreeMap<Option<u32>, Vec<DekState>> = BTreeMap::new();
        for shuffle in all_permutations(n).unwrap() {
            let s = DekState::new_game(&shuffle);
            groups.entry(s.visible().deck_top).or_default().push(s);
        }
        let wins: u64 = groups.into_values().map(info_set_wins).sum();
        assert_eq!(optimal_policy_value(n).unwrap(), WinValue::new(wins, factorial(n)), "n={n}");
    }
}

#[test]
fn policy_never_beats_clairvoyance() {
    for n in 0..=6 {
        let policy = optimal_policy_value(n).unwrap();
        let clair = win_probability_clairvoyant(n).unwrap();
        assert!(policy <= clair, "n={n}: {policy} > {clair}");
    }
    assert_eq!(optimal_policy_value(5).unwrap(), WinValue::new(29, 30));
    assert_eq!(optimal_policy_value(6).unwrap(), WinValue::new(317, 360));
}

#[test]
fn following_clairvoyant_hints_wins_every_winnable_shuffle() {
    for n in 0..=5 {
        for shuffle in all_permutations(n).unwrap() {
            if !clairvoyant_winnable(&shuffle).unwrap().0 {
                assert_eq!(hint(&DekState::new_game(&shuffle), HintMode::Clairvoyant).unwrap().1, WinValue::zero());
                continue;
            }
            let mut s = DekState::new_game(&shuffle);
            while !s.is_won() {
                let (mv, value) = hint(&s, HintMode::Clairvoyant).unwrap();
                assert_eq!(value, WinValue::one(), "{shuffle}");
                s = s.apply_move(mv).unwrap();
            }
        }
    }
}

#[test]
fn following_policy_hints_achieves_the_policy_value() {
    for n in 0..=5 {
        let mut wins = 0;
        for shuffle in all_permutations(n).unwrap() {
            let mut s = DekState::new_game(&shuffle);
            while !s.is_won() && !s.is_lost() {
                let (mv, _) = hint(&s, HintMode::Policy).unwrap();
                s = s.apply_move(mv).unwrap();
            }
            wins += s.is_won() as u64;
        }
        assert_eq!(WinValue::new(wins, factorial(n)), optimal_policy_value(n).unwrap(), "n={n}");
    }
}

#[test]
fn policy_hint_from_visible_state_only() {
    // Same visible position, different hidden decks: same hint.
    let a = DekState::from_parts(vec![3, 1, 4], vec![2], 1, 4).unwrap();
    let b = DekState::from_parts(vec![3, 4, 1], vec![2], 1, 4).unwrap();
    assert_eq!(hint(&a, HintMode::Policy).unwrap(), hint(&b, HintMode::Policy).unwrap());
    let v = VisibleState::new(3, Some(3), vec![2], 1, 4).unwrap();
    assert_eq!(permdek_core::dek::hint_visible(&v).unwrap(), hint(&a, HintMode::Policy).unwrap());
}

fn shuffle_and_moves() -> impl Strategy<Value = (Permutation, Vec<usize>)> {
    (0usize..=10).prop_flat_map(|n| {
        (
            Just((1..=n as u32).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::new(v).unwrap()),
            prop::collection::vec(0usize..5, 0..30),
        )
    })
}

proptest! {
    #[test]
    fn cards_are_conserved((shuffle, choices) in shuffle_and_moves()) {
        let mut s = DekState::new_game(&shuffle);
        for c in choices {
            if s.is_won() {
                break;
            }
            let moves = s.legal_moves().unwrap();
            if moves.is_empty() {
                prop_assert!(s.deck().is_empty());
                break;
            }
            s = s.apply_move(moves[c % moves.len()]).unwrap();
            let again = DekState::from_parts(s.deck().to_vec(), s.deque().to_vec(), s.next_needed(), s.n() as u32);
            prop_assert!(again.is_ok());
            for mv in DekMove::ALL {
                let legal = !s.is_won() && s.legal_moves().unwrap().contains(&mv);
                prop_assert_eq!(legal, s.apply_move(mv).is_ok());
            }
        }
    }
}
