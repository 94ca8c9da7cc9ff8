//! Regex -> NFA -> DFA -> minimal DFA preserves the language.

mod common;

use ncseries::automata::{Nfa, RegexExpr};
use ncseries::Alphabet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{alphabet, random_regex};

fn check_language(exprs: &[RegexExpr], a: &Alphabet, max_degree: usize) {
    let n = a.len();
    let nfa = Nfa::from_regexes(exprs, n);
    let dfa = nfa.determinize();
    let min = dfa.minimize();
    assert!(min.state_count() <= dfa.state_count());
    for d in 0..=max_degree {
        for w in a.words_of_degree(d) {
            let expected = exprs.iter().any(|e| e.matches(&w));
            assert_eq!(nfa.accepts(&w), expected, "nfa {exprs:?} on {w:?}");
            assert_eq!(dfa.accepts(&w), expected, "dfa {exprs:?} on {w:?}");
            assert_eq!(min.accepts(&w), expected, "min {exprs:?} on {w:?}");
        }
    }
}

#[test]
fn random_regexes_to_degree_seven() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=3 {
        let a = alphabet(n);
        for _ in 0..40 {
            let e = random_regex(&mut rng, n, 3);
            check_language(&[e], &a, 7);
        }
    }
}

#[test]
fn unions_of_closed_languages() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let a = alphabet(3);
    for _ in 0..20 {
        let exprs: Vec<RegexExpr> = (0..3)
            .map(|i| {
                let e = random_regex(&mut rng, 3, 2);
                if i % 2 == 0 {
                    e.close_right(3)
                } else {
                    e.close_two_sided(3)
                }
            })
            .collect();
        check_language(&exprs, &a, 6);
        assert!(Nfa::from_regexes(&exprs, 3).determinize().minimize().is_right_ideal_language());
    }
}

#[test]
fn minimization_is_canonical() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let e = random_regex(&mut rng, 2, 3);
        let min = Nfa::from_regex(&e, 2).determinize().minimize();
        // the same language through a syntactically different expression
        let doubled = RegexExpr::union(vec![e.clone(), e.clone()]);
        let other = Nfa::from_regex(&doubled, 2).determinize().minimize();
        assert_eq!(min, other);
        assert_eq!(min.minimize(), min);
    }
}
