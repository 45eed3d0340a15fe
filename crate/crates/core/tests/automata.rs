use pinclass::automata::{complement_within, count_words, determinize, Label, Nfa};
use pinclass::PinLetter;
use proptest::prelude::*;

const CAP: usize = 100_000;

// Random machines read only these letters, which keeps exhaustive word
// enumeration small; every other letter is rejected by both sides.
const SUB: [PinLetter; 3] = [PinLetter::One, PinLetter::L, PinLetter::U];

fn arb_nfa(max_states: usize) -> impl Strategy<Value = Nfa> {
    (1..=max_states).prop_flat_map(|n| {
        let label = prop_oneof![
            1 => Just(None),
            6 => (0..SUB.len()).prop_map(|i| Some(SUB[i])),
        ];
        (
            Just(n),
            0..n,
            prop::collection::vec(any::<bool>(), n),
            prop::collection::vec((0..n, label, 0..n), 0..3 * n),
        )
            .prop_map(|(n, init, acc, edges)| {
                let accepting = acc.iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| i);
                Nfa::new(n, init, accepting, edges.into_iter().map(|(a, l, b): (usize, Label, usize)| (a, l, b)))
            })
    })
}

fn words_upto(max_len: usize) -> Vec<Vec<PinLetter>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<PinLetter>| {
                SUB.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn arb_word() -> impl Strategy<Value = Vec<PinLetter>> {
    prop::collection::vec((0..8usize).prop_map(PinLetter::from_index), 0..=10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinize_preserves_language_exhaustively(a in arb_nfa(12)) {
        let d = determinize(&a, CAP).unwrap();
        let m = d.minimize();
        for word in words_upto(8) {
            let expected = a.accepts(&word);
            prop_assert_eq!(d.accepts(&word), expected, "{:?}", word);
            prop_assert_eq!(m.accepts(&word), expected, "{:?}", word);
        }
        prop_assert!(m.num_states() <= d.num_states());
    }

    #[test]
    fn determinize_preserves_language_on_samples(a in arb_nfa(12), words in prop::collection::vec(arb_word(), 50)) {
        let d = determinize(&a, CAP).unwrap();
        for word in &words {
            prop_assert_eq!(d.accepts(word), a.accepts(word));
        }
    }

    #[test]
    fn complement_within_partitions_the_universe(a in arb_nfa(8), u in arb_nfa(8)) {
        let universe = determinize(&u, CAP).unwrap();
        let rest = complement_within(&a, &universe, CAP).unwrap();
        for word in words_upto(8) {
            let in_a = a.accepts(&word);
            let in_rest = rest.accepts(&word);
            prop_assert!(!(in_a && in_rest), "{:?} in both", word);
            prop_assert_eq!(in_rest || (in_a && universe.accepts(&word)), universe.accepts(&word));
        }
    }

    #[test]
    fn union_and_intersection_are_pointwise(a in arb_nfa(6), b in arb_nfa(6)) {
        let both = a.intersect(&b);
        let either = a.union(&b);
        for word in words_upto(6) {
            let (x, y) = (a.accepts(&word), b.accepts(&word));
            prop_assert_eq!(both.accepts(&word), x && y);
            prop_assert_eq!(either.accepts(&word), x || y);
        }
    }

    #[test]
    fn trimming_keeps_the_language(a in arb_nfa(10)) {
        let t = a.trim();
        prop_assert!(t.num_states() <= a.num_states());
        for word in words_upto(6) {
            prop_assert_eq!(t.accepts(&word), a.accepts(&word));
        }
        prop_assert_eq!(t.is_empty(), a.is_empty());
        prop_assert_eq!(t.is_infinite(), a.is_infinite());
    }

    #[test]
    fn infiniteness_agrees_with_word_counts(a in arb_nfa(10)) {
        let d = determinize(&a, CAP).unwrap().minimize();
        let n = d.num_states();
        let counts: Vec<u128> = (0..=2 * n + 1).map(|k| count_words(&d, k)).collect();
        let long_words = counts[n..].iter().any(|&c| c > 0);
        prop_assert_eq!(a.is_infinite(), long_words, "counts {:?}", counts);
        prop_assert_eq!(d.is_infinite(), long_words);
        prop_assert_eq!(a.is_empty(), counts.iter().all(|&c| c == 0));
    }

    #[test]
    fn counts_match_enumeration(a in arb_nfa(8)) {
        let d = determinize(&a, CAP).unwrap();
        let words = words_upto(6);
        for k in 0..=6 {
            let brute = words.iter().filter(|w| w.len() == k && a.accepts(w)).count() as u128;
            prop_assert_eq!(count_words(&d, k), brute);
        }
    }

    #[test]
    fn complement_flips_membership(a in arb_nfa(8), words in prop::collection::vec(arb_word(), 50)) {
        let d = determinize(&a, CAP).unwrap();
        let c = d.complement();
        for word in &words {
            prop_assert_eq!(c.accepts(word), !d.accepts(word));
        }
    }
}

#[test]
fn text_dump_lists_every_transition() {
    let a = Nfa::new(2, 0, [1], [(0, Some(PinLetter::One), 1), (1, None, 0)]);
    let text = a.to_text();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2 + a.num_transitions());
    for l in &lines[2..] {
        assert_eq!(l.split('\t').count(), 3);
    }
}
