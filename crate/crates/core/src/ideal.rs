//! Monomial right ideals as orbit states.
//!
//! Every backend implements [`IdealState`]: the colon map `T_x(I) = (I :_R x)`,
//! the unit test `I = <1>`, and a canonical form so that equal ideals compare
//! equal. Canonical equality is what makes the orbit coincide with the set of
//! Nerode classes of `I ∩ W`.

use std::fmt::Debug;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::words::{Alphabet, Letter, Word};

pub trait IdealState: Clone + Eq + Hash + Debug {
    /// Number of letters of the ambient alphabet.
    fn alphabet_size(&self) -> usize;

    /// `(I :_R x)`.
    fn colon_by_letter(&self, letter: Letter) -> Self;

    /// `true` iff the state is the unit ideal `<1>`.
    fn is_unit(&self) -> bool;

    /// Human readable canonical form.
    fn canonical_key(&self, alphabet: &Alphabet) -> String;

    /// `(I :_R w) = T_{x_d} ... T_{x_1}(I)` for `w = x_1 ... x_d`.
    fn colon_by_word(&self, word: &Word) -> Self {
        word.letters()
            .iter()
            .fold(self.clone(), |state, &l| state.colon_by_letter(l))
    }

    fn is_member(&self, word: &Word) -> bool {
        self.colon_by_word(word).is_unit()
    }
}

/// A prefix-free, canonically sorted set of words: the unique minimal right
/// basis of a monomial right ideal. `{1}` is the unit ideal, `{}` the zero
/// ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RightBasis(Vec<Word>);

impl RightBasis {
    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn unit() -> Self {
        Self(vec![Word::empty()])
    }

    /// Drops duplicates and every word that has another kept word as a
    /// proper prefix.
    pub fn canonicalize<I: IntoIterator<Item = Word>>(words: I) -> Self {
        let mut words: Vec<Word> = words.into_iter().collect();
        words.sort();
        words.dedup();
        if words.first().is_some_and(Word::is_empty) {
            return Self::unit();
        }
        let mut kept: Vec<Word> = Vec::with_capacity(words.len());
        for w in words {
            // graded order: any prefix of `w` has already been visited
            if !kept.iter().any(|k| k.is_prefix_of(&w)) {
                kept.push(w);
            }
        }
        Self(kept)
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.0.iter().any(|b| b.is_prefix_of(w))
    }

    /// Right basis of `(<B> :_R x)`: a generator equal to `x` yields `1`,
    /// a generator `x v` yields `v`, everything else is dropped.
    pub fn colon_by_letter(&self, letter: Letter) -> Self {
        if self.is_unit() {
            return self.clone();
        }
        Self::canonicalize(
            self.0
                .iter()
                .filter_map(|w| w.overlaps_ending_in_prefix(letter)),
        )
    }

    fn format(&self, alphabet: &Alphabet) -> String {
        let parts: Vec<String> = self.0.iter().map(|w| alphabet.format_word(w)).collect();
        format!("<{}>", parts.join(", "))
    }
}

/// A finitely generated monomial right ideal `<w_1, ..., w_k>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FgRightState {
    n: usize,
    basis: RightBasis,
}

impl FgRightState {
    pub fn new<I: IntoIterator<Item = Word>>(n: usize, generators: I) -> Self {
        Self {
            n,
            basis: RightBasis::canonicalize(generators),
        }
    }

    pub fn basis(&self) -> &RightBasis {
        &self.basis
    }
}

impl IdealState for FgRightState {
    fn alphabet_size(&self) -> usize {
        self.n
    }

    fn colon_by_letter(&self, letter: Letter) -> Self {
        Self {
            n: self.n,
            basis: self.basis.colon_by_letter(letter),
        }
    }

    fn is_unit(&self) -> bool {
        self.basis.is_unit()
    }

    fn canonical_key(&self, alphabet: &Alphabet) -> String {
        self.basis.format(alphabet)
    }

    fn is_member(&self, word: &Word) -> bool {
        self.basis.contains(word)
    }
}

/// Factor-minimal generators of a two-sided monomial ideal.
#[derive(Debug, PartialEq, Eq)]
pub struct TwoSidedGenerators(Vec<Word>);

impl TwoSidedGenerators {
    /// Drops duplicates and every generator containing another one as a
    /// factor.
    pub fn new<I: IntoIterator<Item = Word>>(words: I) -> Self {
        let mut words: Vec<Word> = words.into_iter().collect();
        words.sort();
        words.dedup();
        let mut kept: Vec<Word> = Vec::with_capacity(words.len());
        for w in words {
            if !kept.iter().any(|k| k.is_factor_of(&w)) {
                kept.push(w);
            }
        }
        Self(kept)
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.first().is_some_and(Word::is_empty)
    }

    pub fn divides(&self, w: &Word) -> bool {
        self.0.iter().any(|g| g.is_factor_of(w))
    }
}

/// The right ideal `<R> + I` where `I` is the two-sided ideal of a fixed
/// generator set `G` shared by the whole orbit.
///
/// `R` is kept reduced: prefix-free and with no element lying in `I`. With
/// `G` fixed this makes `R` the set of minimal right generators of `<R> + I`
/// outside `I`, hence unique.
#[derive(Debug, Clone)]
pub struct TwoSidedState {
    n: usize,
    generators: Arc<TwoSidedGenerators>,
    right: RightBasis,
}

impl TwoSidedState {
    /// The state of the two-sided ideal itself (`R = {}`).
    pub fn new<I: IntoIterator<Item = Word>>(n: usize, generators: I) -> Self {
        let generators = TwoSidedGenerators::new(generators);
        let right = if generators.is_unit() {
            RightBasis::unit()
        } else {
            RightBasis::zero()
        };
        Self {
            n,
            generators: Arc::new(generators),
            right,
        }
    }

    pub fn generators(&self) -> &TwoSidedGenerators {
        &self.generators
    }

    pub fn right_part(&self) -> &RightBasis {
        &self.right
    }

    fn with_right<I: IntoIterator<Item = Word>>(&self, words: I) -> Self {
        let mut reduced = Vec::new();
        for w in words {
            if w.is_empty() {
                return Self {
                    right: RightBasis::unit(),
                    ..self.clone()
                };
            }
            if !self.generators.divides(&w) {
                reduced.push(w);
            }
        }
        Self {
            right: RightBasis::canonicalize(reduced),
            ..self.clone()
        }
    }
}

impl PartialEq for TwoSidedState {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.right == other.right
            && (Arc::ptr_eq(&self.generators, &other.generators)
                || self.generators == other.generators)
    }
}

impl Eq for TwoSidedState {}

impl Hash for TwoSidedState {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // G is constant along an orbit
        self.right.hash(state);
    }
}

impl IdealState for TwoSidedState {
    fn alphabet_size(&self) -> usize {
        self.n
    }

    fn colon_by_letter(&self, letter: Letter) -> Self {
        if self.is_unit() {
            return self.clone();
        }
        let from_right = self
            .right
            .words()
            .iter()
            .filter_map(|r| r.overlaps_ending_in_prefix(letter));
        let from_two_sided = self
            .generators
            .words()
            .iter()
            .filter_map(|g| g.overlaps_ending_in_prefix(letter));
        self.with_right(from_right.chain(from_two_sided).collect::<Vec<_>>())
    }

    fn is_unit(&self) -> bool {
        self.right.is_unit()
    }

    fn canonical_key(&self, alphabet: &Alphabet) -> String {
        if self.is_unit() {
            return "<1>".to_string();
        }
        format!("{} + I", self.right.format(alphabet))
    }

    fn is_member(&self, word: &Word) -> bool {
        self.right.contains(word) || self.generators.divides(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> Alphabet {
        Alphabet::new(["x", "y", "z"]).unwrap()
    }

    fn w(s: &str) -> Word {
        xyz().parse_word(s).unwrap()
    }

    fn ws(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| w(s)).collect()
    }

    /// Words of degree <= `max` lying in the right ideal generated by `gens`.
    fn members_upto(n: usize, gens: &[Word], max: usize) -> Vec<Word> {
        let a = Alphabet::numbered(n);
        (0..=max)
            .flat_map(|d| a.words_of_degree(d).collect::<Vec<_>>())
            .filter(|u| gens.iter().any(|g| g.is_prefix_of(u)))
            .collect()
    }

    /// Brute-force colon: `v` with `x v` in the ideal, up to degree `max`.
    fn colon_members_upto(n: usize, gens: &[Word], x: Letter, max: usize) -> Vec<Word> {
        let a = Alphabet::numbered(n);
        (0..=max)
            .flat_map(|d| a.words_of_degree(d).collect::<Vec<_>>())
            .filter(|v| {
                let xv = Word::letter(x).concat(v);
                gens.iter().any(|g| g.is_prefix_of(&xv))
            })
            .collect()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(RightBasis::canonicalize(ws(&["x", "x y", "y"])).words(), ws(&["x", "y"]));
        assert_eq!(RightBasis::canonicalize(ws(&["1", "x"])), RightBasis::unit());
        let b = RightBasis::canonicalize(ws(&["z x", "z x z"]));
        assert_eq!(b.words(), ws(&["z x"]));
        assert_eq!(
            members_upto(3, b.words(), 6),
            members_upto(3, &ws(&["z x", "z x z"]), 6)
        );
    }

    #[test]
    fn fg_colon_examples() {
        let (x, y) = (0, 1);
        let i = FgRightState::new(3, ws(&["x y"]));
        let ix = i.colon_by_letter(x);
        assert_eq!(ix.basis().words(), ws(&["y"]));
        assert_eq!(members_upto(3, ix.basis().words(), 6), colon_members_upto(3, &ws(&["x y"]), x, 6));
        assert!(FgRightState::new(3, ws(&["x"])).colon_by_letter(x).is_unit());
        let iy = i.colon_by_letter(y);
        assert!(iy.basis().is_zero());
        assert!(colon_members_upto(3, &ws(&["x y"]), y, 6).is_empty());
    }

    #[test]
    fn zero_and_unit_are_fixed() {
        let zero = FgRightState::new(2, Vec::new());
        let unit = FgRightState::new(2, vec![Word::empty()]);
        for l in 0..2 {
            assert_eq!(zero.colon_by_letter(l), zero);
            assert_eq!(unit.colon_by_letter(l), unit);
        }
        assert!(unit.is_member(&Word::empty()));
        assert!(!zero.is_member(&Word::empty()));
    }

    #[test]
    fn colon_by_word_examples() {
        let i = FgRightState::new(3, ws(&["x y"]));
        assert_eq!(i.colon_by_word(&Word::empty()), i);
        assert!(i.colon_by_word(&w("x y")).is_unit());
        assert!(i.is_member(&w("x y z")));
    }

    #[test]
    fn two_sided_artin_fragment() {
        let (x, y, z) = (0, 1, 2);
        let i = TwoSidedState::new(3, ws(&["y z", "x z x"]));
        let iy = i.colon_by_letter(y);
        assert_eq!(iy.right_part().words(), ws(&["z"]));
        assert_eq!(i.colon_by_letter(z), i);
        let ix = i.colon_by_letter(x);
        assert_eq!(ix.right_part().words(), ws(&["z x"]));
        assert!(iy.colon_by_letter(z).is_unit());
        let unit = iy.colon_by_letter(z);
        for l in 0..3 {
            assert!(unit.colon_by_letter(l).is_unit());
        }
        assert!(!i.is_member(&w("z x z")));
        assert!(!i.colon_by_word(&w("z x z")).is_unit());
    }

    #[test]
    fn two_sided_unit_generator() {
        let i = TwoSidedState::new(2, vec![Word::empty(), Word::letter(0)]);
        assert!(i.is_unit());
        assert!(i.colon_by_letter(1).is_unit());
    }

    #[test]
    fn two_sided_generators_are_factor_minimal() {
        let g = TwoSidedGenerators::new(ws(&["x z x", "z x", "y z y y", "z x"]));
        assert_eq!(g.words(), ws(&["z x", "y z y y"]));
    }

    fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0..n, 0..=max_len).prop_map(Word::new)
    }

    fn basis_strategy() -> impl Strategy<Value = Vec<Word>> {
        proptest::collection::vec(word_strategy(2, 4), 0..4)
    }

    fn nonempty_gens_strategy() -> impl Strategy<Value = Vec<Word>> {
        proptest::collection::vec(
            proptest::collection::vec(0usize..3, 1..=4).prop_map(Word::new),
            0..4,
        )
    }

    proptest! {
        #[test]
        fn fg_anti_homomorphism(gens in basis_strategy(), u in word_strategy(2, 5), v in word_strategy(2, 5)) {
            let i = FgRightState::new(2, gens);
            prop_assert_eq!(i.colon_by_word(&u.concat(&v)), i.colon_by_word(&u).colon_by_word(&v));
        }

        #[test]
        fn fg_membership_matches_colon(gens in basis_strategy(), u in word_strategy(2, 8)) {
            let i = FgRightState::new(2, gens);
            prop_assert_eq!(i.is_member(&u), i.colon_by_word(&u).is_unit());
        }

        #[test]
        fn fg_colon_stays_prefix_free(gens in basis_strategy(), u in word_strategy(2, 4)) {
            let j = FgRightState::new(2, gens).colon_by_word(&u);
            let b = j.basis().words();
            for (i, p) in b.iter().enumerate() {
                for (k, q) in b.iter().enumerate() {
                    prop_assert!(i == k || !p.is_prefix_of(q));
                }
            }
        }

        #[test]
        fn fg_canonical_uniqueness(a in basis_strategy(), b in basis_strategy()) {
            let ia = FgRightState::new(2, a.clone());
            let ib = FgRightState::new(2, b.clone());
            let max = a.iter().chain(b.iter()).map(Word::degree).max().unwrap_or(0) + 1;
            let same = members_upto(2, &a, max) == members_upto(2, &b, max);
            prop_assert_eq!(same, ia == ib);
        }

        #[test]
        fn ts_anti_homomorphism(gens in nonempty_gens_strategy(), u in word_strategy(3, 5), v in word_strategy(3, 5)) {
            let i = TwoSidedState::new(3, gens);
            prop_assert_eq!(i.colon_by_word(&u.concat(&v)), i.colon_by_word(&u).colon_by_word(&v));
        }

        #[test]
        fn ts_membership_matches_colon(gens in nonempty_gens_strategy(), u in word_strategy(3, 8)) {
            let i = TwoSidedState::new(3, gens.clone());
            let by_factor = gens.iter().any(|g| g.is_factor_of(&u));
            prop_assert_eq!(i.is_member(&u), by_factor);
            prop_assert_eq!(i.colon_by_word(&u).is_unit(), by_factor);
        }

        #[test]
        fn ts_states_contain_two_sided_ideal(
            gens in nonempty_gens_strategy(),
            u in word_strategy(3, 4),
            a in word_strategy(3, 3),
            b in word_strategy(3, 3),
            pick in 0usize..4,
        ) {
            prop_assume!(!gens.is_empty());
            let g = &gens[pick % gens.len()];
            let j = TwoSidedState::new(3, gens.clone()).colon_by_word(&u);
            prop_assert!(j.is_member(&a.concat(g).concat(&b)));
        }
    }
}
