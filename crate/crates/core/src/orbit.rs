//! Orbit enumeration: the colon-ideal orbit of a monomial right ideal, its
//! adjacency matrix and constant vector.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::ideal::IdealState;
use crate::ratfun::{classify_growth, solve_first_component, GrowthClass, RationalFunction};
use crate::words::Alphabet;

pub const DEFAULT_MAX_STATES: usize = 100_000;

/// The finite orbit `{I_1 = I, ..., I_r}` in discovery order.
#[derive(Debug, Clone)]
pub struct Orbit<S> {
    states: Vec<S>,
    /// `transitions[k][i]` is the index of `T_{x_i}(I_k)`.
    transitions: Vec<Vec<usize>>,
    adjacency: Vec<Vec<u64>>,
    constants: Vec<u8>,
    unit_index: Option<usize>,
}

impl<S: IdealState> Orbit<S> {
    /// Breadth-first orbit enumeration. States are dequeued in FIFO order and
    /// letters applied in alphabet order; new states are numbered in the
    /// order they are discovered.
    pub fn compute(initial: S, max_states: usize) -> Result<Self> {
        let n = initial.alphabet_size();
        let mut index: HashMap<S, usize> = HashMap::new();
        let mut states = vec![initial.clone()];
        let mut transitions: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        index.insert(initial, 0);
        if max_states == 0 {
            return Err(Error::OrbitBudgetExceeded { limit: 0 });
        }
        while let Some(k) = queue.pop_front() {
            let mut row = Vec::with_capacity(n);
            for letter in 0..n {
                let next = states[k].colon_by_letter(letter);
                let l = match index.get(&next) {
                    Some(&l) => l,
                    None => {
                        let l = states.len();
                        if l >= max_states {
                            return Err(Error::OrbitBudgetExceeded { limit: max_states });
                        }
                        index.insert(next.clone(), l);
                        states.push(next);
                        queue.push_back(l);
                        l
                    }
                };
                row.push(l);
            }
            transitions.push(row);
        }
        Ok(Self::from_parts(states, transitions))
    }

    pub fn canonical_keys(&self, alphabet: &Alphabet) -> Vec<String> {
        self.states.iter().map(|s| s.canonical_key(alphabet)).collect()
    }

    /// The same orbit with each state replaced by its canonical key.
    pub fn labelled(&self, alphabet: &Alphabet) -> Orbit<String> {
        Orbit {
            states: self.canonical_keys(alphabet),
            transitions: self.transitions.clone(),
            adjacency: self.adjacency.clone(),
            constants: self.constants.clone(),
            unit_index: self.unit_index,
        }
    }
}

impl<S> Orbit<S> {
    fn from_parts(states: Vec<S>, transitions: Vec<Vec<usize>>) -> Self
    where
        S: IdealState,
    {
        let unit_index = states.iter().position(IdealState::is_unit);
        Self::with_unit(states, transitions, unit_index)
    }

    fn with_unit(states: Vec<S>, transitions: Vec<Vec<usize>>, unit_index: Option<usize>) -> Self {
        let r = transitions.len();
        let mut adjacency = vec![vec![0u64; r]; r];
        for (k, row) in transitions.iter().enumerate() {
            for &l in row {
                adjacency[k][l] += 1;
            }
        }
        let constants = (0..r).map(|k| u8::from(Some(k) != unit_index)).collect();
        Self {
            states,
            transitions,
            adjacency,
            constants,
            unit_index,
        }
    }

    pub fn states(&self) -> &[S] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.transitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transitions.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.transitions.first().map_or(0, Vec::len)
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.transitions
    }

    pub fn adjacency(&self) -> &[Vec<u64>] {
        &self.adjacency
    }

    pub fn constants(&self) -> &[u8] {
        &self.constants
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.unit_index
    }

    /// `HS(F/I)`, the first component of `(Id - t A) H = C`.
    pub fn series(&self) -> RationalFunction {
        solve_first_component(&self.adjacency, &self.constants)
            .expect("orbit matrix and vector have matching dimensions")
    }

    pub fn growth(&self) -> GrowthClass {
        classify_growth(&self.adjacency, self.unit_index)
    }

    /// The automaton `(O_I, X, T, I, {<1>})`, recognizing `I ∩ W`.
    pub fn to_dfa(&self) -> Dfa {
        let accepting = (0..self.len()).map(|k| Some(k) == self.unit_index).collect();
        Dfa::from_rows(&self.transitions, 0, accepting)
    }

    /// `true` iff no smaller automaton recognizes `I ∩ W`.
    pub fn verify_minimality(&self) -> bool {
        self.to_dfa().minimize().state_count() == self.len()
    }

    /// Serializable description with the given state labels.
    pub fn report(&self, alphabet: &Alphabet, labels: Vec<String>) -> OrbitReport {
        OrbitReport {
            alphabet: alphabet.names().to_vec(),
            states: labels,
            transitions: self.transitions.clone(),
            adjacency: self.adjacency.clone(),
            constants: self.constants.clone(),
            unit_index: self.unit_index,
        }
    }
}

/// Orbit data without the ideal states themselves, as written by the
/// `orbit --format json` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub transitions: Vec<Vec<usize>>,
    pub adjacency: Vec<Vec<u64>>,
    pub constants: Vec<u8>,
    pub unit_index: Option<usize>,
}

impl OrbitReport {
    /// Rebuilds the orbit from its transition table, checking that the
    /// stored matrix and vector are consistent with it.
    pub fn to_orbit(&self) -> Result<Orbit<String>> {
        let r = self.transitions.len();
        let n = self.alphabet.len();
        if r == 0 || self.states.len() != r {
            return Err(Error::Dimension(format!(
                "{} states but {r} transition rows",
                self.states.len()
            )));
        }
        if self.transitions.iter().flatten().any(|&l| l >= r)
            || self.transitions.iter().any(|row| row.len() != n)
        {
            return Err(Error::Dimension("transition table out of range".into()));
        }
        if self.unit_index.is_some_and(|u| u >= r) {
            return Err(Error::Dimension("unit index out of range".into()));
        }
        let orbit = Orbit::with_unit(self.states.clone(), self.transitions.clone(), self.unit_index);
        if orbit.adjacency != self.adjacency || orbit.constants != self.constants {
            return Err(Error::Dimension(
                "adjacency matrix or constant vector disagrees with the transitions".into(),
            ));
        }
        Ok(orbit)
    }
}

/// Orbit from an explicit transition table, used to check minimality of
/// hand-built automata.
pub fn orbit_from_transitions(transitions: Vec<Vec<usize>>, unit_index: Option<usize>) -> Orbit<usize> {
    let states = (0..transitions.len()).collect();
    Orbit::with_unit(states, transitions, unit_index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{parse_regex, DfaIdealState, RegexExpr};
    use crate::ideal::{FgRightState, TwoSidedState};
    use crate::words::Word;

    fn artin_orbit() -> (Alphabet, Orbit<DfaIdealState>) {
        let a = Alphabet::new(["x", "y", "z"]).unwrap();
        let closed: Vec<RegexExpr> = ["y z", "x z x", "x z z z* x z"]
            .iter()
            .map(|s| parse_regex(s, &a).unwrap().close_two_sided(3))
            .collect();
        let state = DfaIdealState::from_language(&closed, 3).unwrap();
        (a, Orbit::compute(state, DEFAULT_MAX_STATES).unwrap())
    }

    #[test]
    fn artin_orbit_data() {
        let (a, o) = artin_orbit();
        assert_eq!(o.len(), 6);
        let expected: Vec<Vec<u64>> = vec![
            vec![1, 1, 1, 0, 0, 0],
            vec![0, 1, 1, 1, 0, 0],
            vec![0, 1, 1, 0, 1, 0],
            vec![0, 0, 1, 0, 1, 1],
            vec![0, 0, 0, 0, 3, 0],
            vec![0, 0, 2, 0, 0, 1],
        ];
        assert_eq!(o.adjacency(), expected.as_slice());
        assert_eq!(o.constants(), &[1, 1, 1, 1, 0, 1]);
        assert_eq!(o.unit_index(), Some(4));
        assert!(o.verify_minimality());
        let dfa = o.to_dfa();
        let state = &o.states()[0];
        for d in 0..=7 {
            for w in a.words_of_degree(d) {
                assert_eq!(dfa.accepts(&w), state.is_member(&w));
            }
        }
    }

    #[test]
    fn unit_and_zero_orbits() {
        let unit = Orbit::compute(FgRightState::new(3, [Word::empty()]), 10).unwrap();
        assert_eq!(unit.len(), 1);
        assert_eq!(unit.adjacency(), &[vec![3]]);
        assert_eq!(unit.constants(), &[0]);
        assert!(unit.to_dfa().accepts(&Word::new(vec![0, 2, 1])));

        let zero = Orbit::compute(FgRightState::new(3, []), 10).unwrap();
        assert_eq!(zero.adjacency(), &[vec![3]]);
        assert_eq!(zero.constants(), &[1]);
        assert_eq!(zero.unit_index(), None);
        assert!(!zero.to_dfa().accepts(&Word::empty()));
        assert_eq!(zero.to_dfa().accepting_count(), 0);
    }

    #[test]
    fn non_noetherian_right_ideal() {
        // <x, yx, yyx, ...> over {x, y}
        let a = Alphabet::new(["x", "y"]).unwrap();
        let e = parse_regex("y* x", &a).unwrap().close_right(2);
        let o = Orbit::compute(DfaIdealState::from_language(&[e], 2).unwrap(), 100).unwrap();
        assert_eq!(o.len(), 2);
        assert_eq!(o.transitions(), &[vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn budget_is_enforced() {
        let o = Orbit::compute(FgRightState::new(2, [Word::new(vec![0, 1, 0, 1, 1])]), 3);
        assert_eq!(o.unwrap_err(), Error::OrbitBudgetExceeded { limit: 3 });
    }

    #[test]
    fn fake_orbit_with_duplicate_state_is_not_minimal() {
        // states 1 and 2 are language-equivalent copies
        let o = orbit_from_transitions(vec![vec![1, 2], vec![3, 1], vec![3, 2], vec![3, 3]], Some(3));
        assert!(!o.verify_minimality());
        let ok = orbit_from_transitions(vec![vec![1, 0], vec![1, 1]], Some(1));
        assert!(ok.verify_minimality());
    }

    #[test]
    fn rows_sum_to_alphabet_size() {
        let o = Orbit::compute(
            TwoSidedState::new(3, [Word::new(vec![1, 2]), Word::new(vec![0, 2, 0])]),
            100,
        )
        .unwrap();
        for row in o.adjacency() {
            assert_eq!(row.iter().sum::<u64>(), 3);
        }
        assert_eq!(o.constants().iter().filter(|&&c| c == 0).count(), 1);
    }

    #[test]
    fn report_round_trip() {
        let (a, o) = artin_orbit();
        let report = o.report(&a, o.canonical_keys(&a));
        let json = serde_json::to_string(&report).unwrap();
        let back: OrbitReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_orbit().unwrap().series(), o.series());
        let mut broken = back.clone();
        broken.constants[0] = 0;
        assert!(broken.to_orbit().is_err());
    }
}
