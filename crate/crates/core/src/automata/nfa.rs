use std::collections::{BTreeSet, HashMap, VecDeque};

use super::dfa::Dfa;
use super::regex::RegexExpr;
use crate::words::{Letter, Word};

/// Nondeterministic automaton with epsilon moves (`None` labels).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet_size: usize,
    states: usize,
    transitions: Vec<(usize, Option<Letter>, usize)>,
    initial: usize,
    accepting: BTreeSet<usize>,
}

impl Nfa {
    pub fn new(
        alphabet_size: usize,
        states: usize,
        transitions: Vec<(usize, Option<Letter>, usize)>,
        initial: usize,
        accepting: BTreeSet<usize>,
    ) -> Self {
        assert!(initial < states, "initial state out of range");
        for &(from, label, to) in &transitions {
            assert!(from < states && to < states, "transition endpoint out of range");
            if let Some(l) = label {
                assert!(l < alphabet_size, "letter out of range");
            }
        }
        assert!(accepting.iter().all(|&s| s < states), "accepting state out of range");
        Self {
            alphabet_size,
            states,
            transitions,
            initial,
            accepting,
        }
    }

    /// One state, nothing accepted.
    pub fn empty_language(alphabet_size: usize) -> Self {
        Self::new(alphabet_size, 1, Vec::new(), 0, BTreeSet::new())
    }

    /// Thompson construction.
    pub fn from_regex(e: &RegexExpr, alphabet_size: usize) -> Self {
        let mut b = Builder::default();
        let (start, end) = b.build(e);
        Self::new(alphabet_size, b.states, b.transitions, start, BTreeSet::from([end]))
    }

    /// Automaton for the union of the languages of `exprs`; the empty list
    /// gives the empty language.
    pub fn from_regexes(exprs: &[RegexExpr], alphabet_size: usize) -> Self {
        if exprs.is_empty() {
            return Self::empty_language(alphabet_size);
        }
        let mut b = Builder::default();
        let start = b.fresh();
        let end = b.fresh();
        for e in exprs {
            let (s, t) = b.build(e);
            b.transitions.push((start, None, s));
            b.transitions.push((t, None, end));
        }
        Self::new(alphabet_size, b.states, b.transitions, start, BTreeSet::from([end]))
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    fn epsilon_closure(&self, seeds: impl IntoIterator<Item = usize>, eps: &[Vec<usize>]) -> Vec<usize> {
        let mut seen = vec![false; self.states];
        let mut stack: Vec<usize> = Vec::new();
        for s in seeds {
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(s) = stack.pop() {
            for &t in &eps[s] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        (0..self.states).filter(|&s| seen[s]).collect()
    }

    fn epsilon_edges(&self) -> Vec<Vec<usize>> {
        let mut eps = vec![Vec::new(); self.states];
        for &(from, label, to) in &self.transitions {
            if label.is_none() {
                eps[from].push(to);
            }
        }
        eps
    }

    pub fn accepts(&self, word: &Word) -> bool {
        let eps = self.epsilon_edges();
        let mut current = self.epsilon_closure([self.initial], &eps);
        for &l in word.letters() {
            let step: Vec<usize> = self
                .transitions
                .iter()
                .filter(|(from, label, _)| *label == Some(l) && current.binary_search(from).is_ok())
                .map(|&(_, _, to)| to)
                .collect();
            current = self.epsilon_closure(step, &eps);
        }
        current.iter().any(|s| self.accepting.contains(s))
    }

    /// States from which an accepting state is reachable.
    fn co_accessible(&self) -> Vec<bool> {
        let mut rev = vec![Vec::new(); self.states];
        for &(from, _, to) in &self.transitions {
            rev[to].push(from);
        }
        let mut live = vec![false; self.states];
        let mut stack: Vec<usize> = self.accepting.iter().copied().collect();
        for &s in &stack {
            live[s] = true;
        }
        while let Some(s) = stack.pop() {
            for &p in &rev[s] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }

    /// Subset construction over the co-accessible part, so every dead subset
    /// collapses to the single empty-set sink. The result is total and has no
    /// unreachable states.
    pub fn determinize(&self) -> Dfa {
        self.subset_construction(false)
    }

    /// Automaton for `L X*`: every accepting subset is merged into one
    /// absorbing accepting state. Subsets then never record which
    /// alternatives have already matched, which keeps the construction
    /// small for unions of many closed generators.
    pub fn determinize_right_closure(&self) -> Dfa {
        self.subset_construction(true)
    }

    fn subset_construction(&self, absorbing: bool) -> Dfa {
        let n = self.alphabet_size;
        let live = self.co_accessible();
        let mut eps = self.epsilon_edges();
        let mut by_letter = vec![vec![Vec::new(); n]; self.states];
        for &(from, label, to) in &self.transitions {
            if !(live[from] && live[to]) {
                continue;
            }
            if let Some(l) = label {
                by_letter[from][l].push(to);
            }
        }
        for (s, targets) in eps.iter_mut().enumerate() {
            if !live[s] {
                targets.clear();
            } else {
                targets.retain(|&t| live[t]);
            }
        }
        // marker subset for the absorbing accepting state
        let sink = vec![usize::MAX];
        let settle = |set: Vec<usize>| {
            if absorbing && set.iter().any(|s| self.accepting.contains(s)) {
                sink.clone()
            } else {
                set
            }
        };
        let start_seed = live[self.initial].then_some(self.initial);
        let start = settle(self.epsilon_closure(start_seed, &eps));

        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        let mut table: Vec<usize> = Vec::new();
        let mut queue = VecDeque::new();
        index.insert(start.clone(), 0);
        subsets.push(start);
        queue.push_back(0);
        while let Some(id) = queue.pop_front() {
            for l in 0..n {
                let next = if subsets[id] == sink {
                    sink.clone()
                } else {
                    let targets = subsets[id].iter().flat_map(|&s| by_letter[s][l].iter().copied());
                    settle(self.epsilon_closure(targets, &eps))
                };
                let next_id = match index.get(&next) {
                    Some(&k) => k,
                    None => {
                        let k = subsets.len();
                        index.insert(next.clone(), k);
                        subsets.push(next);
                        queue.push_back(k);
                        k
                    }
                };
                // ids are assigned in dequeue order, so row `id` is next
                table.push(next_id);
            }
        }
        let accepting = subsets
            .iter()
            .map(|set| *set == sink || set.iter().any(|s| self.accepting.contains(s)))
            .collect();
        Dfa::new(n, table, 0, accepting)
    }
}

#[derive(Default)]
struct Builder {
    states: usize,
    transitions: Vec<(usize, Option<Letter>, usize)>,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        self.states += 1;
        self.states - 1
    }

    fn build(&mut self, e: &RegexExpr) -> (usize, usize) {
        match e {
            RegexExpr::EmptyWord => {
                let s = self.fresh();
                let t = self.fresh();
                self.transitions.push((s, None, t));
                (s, t)
            }
            RegexExpr::Letter(l) => {
                let s = self.fresh();
                let t = self.fresh();
                self.transitions.push((s, Some(*l), t));
                (s, t)
            }
            RegexExpr::Concat(parts) => {
                let (start, mut end) = self.build(&parts[0]);
                for p in &parts[1..] {
                    let (s, t) = self.build(p);
                    self.transitions.push((end, None, s));
                    end = t;
                }
                (start, end)
            }
            RegexExpr::Union(alts) => {
                let s = self.fresh();
                let t = self.fresh();
                for a in alts {
                    let (as_, at) = self.build(a);
                    self.transitions.push((s, None, as_));
                    self.transitions.push((at, None, t));
                }
                (s, t)
            }
            RegexExpr::Star(inner) => {
                let s = self.fresh();
                let t = self.fresh();
                let (is, it) = self.build(inner);
                self.transitions.push((s, None, is));
                self.transitions.push((s, None, t));
                self.transitions.push((it, None, is));
                self.transitions.push((it, None, t));
                (s, t)
            }
        }
    }
}
