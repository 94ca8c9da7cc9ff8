//! Regular monomial ideals: regular expressions, automata, and the
//! DFA-backed orbit state.
//!
//! For a right ideal `I` with language `L = I ∩ W`, the residual `w⁻¹L` is
//! `(I :_R w) ∩ W`. States of the minimal automaton of `L` are therefore in
//! bijection with the colon ideals of `I`, and following a transition is the
//! map `T_x`.

mod dfa;
mod nfa;
mod regex;

use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use dfa::Dfa;
pub use nfa::Nfa;
pub use regex::{parse_regex, RegexExpr};

use crate::error::{Error, Result};
use crate::ideal::IdealState;
use crate::words::{Alphabet, Letter};

/// A colon ideal `(I :_R w)` represented as a state of the minimal automaton
/// of `I ∩ W`.
#[derive(Debug, Clone)]
pub struct DfaIdealState {
    dfa: Arc<Dfa>,
    state: usize,
}

impl DfaIdealState {
    /// Initial state for the ideal whose monomials form the language of
    /// `dfa`. The automaton is minimized first; languages that are not
    /// closed under right multiplication are rejected.
    pub fn new(dfa: &Dfa) -> Result<Self> {
        let minimal = dfa.minimize();
        if !minimal.is_right_ideal_language() {
            return Err(Error::NotIdealLanguage(
                "an accepting state has a transition to a rejecting state".into(),
            ));
        }
        let state = minimal.initial();
        Ok(Self {
            dfa: Arc::new(minimal),
            state,
        })
    }

    /// Ideal with monomial language given by the union of `exprs`, which must
    /// already be closed.
    pub fn from_language(exprs: &[RegexExpr], alphabet_size: usize) -> Result<Self> {
        Self::new(&Nfa::from_regexes(exprs, alphabet_size).determinize())
    }

    /// Ideal generated on the right by the union of `exprs`: its language
    /// is `L X*` for `L` the union.
    pub fn from_right_generators(exprs: &[RegexExpr], alphabet_size: usize) -> Result<Self> {
        Self::new(&Nfa::from_regexes(exprs, alphabet_size).determinize_right_closure())
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn state(&self) -> usize {
        self.state
    }
}

impl PartialEq for DfaIdealState {
    fn eq(&self, other: &Self) -> bool {
        self.state == other.state && (Arc::ptr_eq(&self.dfa, &other.dfa) || self.dfa == other.dfa)
    }
}

impl Eq for DfaIdealState {}

impl Hash for DfaIdealState {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.state.hash(h);
    }
}

impl IdealState for DfaIdealState {
    fn alphabet_size(&self) -> usize {
        self.dfa.alphabet_size()
    }

    fn colon_by_letter(&self, letter: Letter) -> Self {
        Self {
            dfa: Arc::clone(&self.dfa),
            state: self.dfa.next(self.state, letter),
        }
    }

    fn is_unit(&self) -> bool {
        self.dfa.is_accepting(self.state)
    }

    fn canonical_key(&self, _alphabet: &Alphabet) -> String {
        format!("q{}", self.state)
    }
}
