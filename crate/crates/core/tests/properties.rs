//! Property-based tests across modules: grammar and JSON round trips,
//! cover duality, the chain bijection, and chain labeling invariants on
//! randomized inputs.

use proptest::prelude::*;

use colcomp::descent::{
    chain_of_permutation, colored_descent_composition, descent_composition, descent_set,
    descent_set_of_composition, permutation_of_chain,
};
use colcomp::poset::{down_covers, up_covers};
use colcomp::shelling::{label_chain, legal_moves, lex_first_chain, urns_of};
use colcomp::{ColoredComposition, ColoredPermutation, Letter, Part};

fn composition_strategy() -> impl Strategy<Value = ColoredComposition> {
    (1..=3u8).prop_flat_map(|m| {
        prop::collection::vec((1..=4u32, 0..m), 0..=6).prop_map(move |raw| {
            let parts = raw
                .into_iter()
                .map(|(size, color)| Part::new(size, color))
                .collect();
            ColoredComposition::new(m, parts).expect("valid by construction")
        })
    })
}

fn permutation_strategy() -> impl Strategy<Value = ColoredPermutation> {
    (1..=3u8, 0..=6usize).prop_flat_map(|(m, n)| {
        let values = Just((1..=n as u32).collect::<Vec<u32>>()).prop_shuffle();
        let colors = prop::collection::vec(0..m, n);
        (values, colors).prop_map(move |(values, colors)| {
            let letters = values
                .into_iter()
                .zip(colors)
                .map(|(value, color)| Letter::new(value, color))
                .collect();
            ColoredPermutation::new(m, letters).expect("valid by construction")
        })
    })
}

proptest! {
    #[test]
    fn composition_text_round_trip(c in composition_strategy()) {
        let parsed = ColoredComposition::parse(&c.to_string(), c.m()).unwrap();
        prop_assert_eq!(parsed, c);
    }

    #[test]
    fn composition_json_round_trip(c in composition_strategy()) {
        let json = serde_json::to_string(&c).unwrap();
        let back: ColoredComposition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn permutation_text_round_trip(u in permutation_strategy()) {
        let parsed = ColoredPermutation::parse(&u.to_string(), u.m()).unwrap();
        prop_assert_eq!(parsed, u);
    }

    #[test]
    fn covers_increase_weight_by_one_and_dualize(c in composition_strategy()) {
        for beta in up_covers(&c) {
            prop_assert_eq!(beta.weight(), c.weight() + 1);
            prop_assert!(down_covers(&beta).contains(&c));
        }
    }

    #[test]
    fn cover_degree_formula(c in composition_strategy()) {
        let expected = u64::from(c.m()) * u64::from(c.weight() + 1);
        prop_assert_eq!(up_covers(&c).len() as u64, expected);
    }

    #[test]
    fn urn_moves_match_down_covers(c in composition_strategy()) {
        prop_assume!(!c.is_empty());
        let moves = legal_moves(&urns_of(&c)).unwrap();
        let from_moves: std::collections::BTreeSet<_> =
            moves.iter().map(|(_, state)| state.read_off()).collect();
        prop_assert_eq!(moves.len(), from_moves.len());
        prop_assert_eq!(from_moves, down_covers(&c));
    }

    #[test]
    fn descent_set_matches_composition_sums(u in permutation_strategy()) {
        let values = u.values();
        let comp = descent_composition(&values).unwrap();
        prop_assert_eq!(
            descent_set_of_composition(&comp),
            descent_set(&values).unwrap()
        );
    }

    #[test]
    fn bijection_round_trip(u in permutation_strategy()) {
        let chain = chain_of_permutation(&u);
        prop_assert_eq!(chain.last().unwrap(), &colored_descent_composition(&u));
        for pair in chain.windows(2) {
            prop_assert!(up_covers(&pair[0]).contains(&pair[1]));
        }
        prop_assert_eq!(permutation_of_chain(&chain).unwrap(), u);
    }

    #[test]
    fn permutation_chain_labels_exist(u in permutation_strategy()) {
        prop_assume!(!u.is_empty());
        let mut chain = chain_of_permutation(&u);
        chain.reverse();
        let labeled = label_chain(&chain).unwrap();
        prop_assert_eq!(labeled.labels().len(), u.len());
    }

    #[test]
    fn lex_first_label_weakly_increases(top in composition_strategy(), steps in prop::collection::vec(any::<u8>(), 0..=6)) {
        // walk down a random cover path to pick the interval bottom
        let mut bottom = top.clone();
        for step in steps {
            let below: Vec<_> = down_covers(&bottom).into_iter().collect();
            if below.is_empty() {
                break;
            }
            bottom = below[step as usize % below.len()].clone();
        }
        let labeled = lex_first_chain(&bottom, &top).unwrap();
        prop_assert!(labeled.is_weakly_increasing());
        prop_assert_eq!(labeled.chain().first().unwrap(), &top);
        prop_assert_eq!(labeled.chain().last().unwrap(), &bottom);
        // the greedy chain is genuinely a labeled chain of the interval
        let relabeled = label_chain(labeled.chain()).unwrap();
        prop_assert_eq!(relabeled.labels(), labeled.labels());
    }
}
