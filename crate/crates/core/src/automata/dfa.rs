use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::words::{Alphabet, Letter, Word};

/// Total deterministic finite automaton over `alphabet_size` letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet_size: usize,
    /// `table[state * alphabet_size + letter]`
    table: Vec<usize>,
    initial: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn new(alphabet_size: usize, table: Vec<usize>, initial: usize, accepting: Vec<bool>) -> Self {
        let states = accepting.len();
        assert!(alphabet_size > 0, "empty alphabet");
        assert_eq!(table.len(), states * alphabet_size, "transition table is not total");
        assert!(initial < states, "initial state out of range");
        assert!(table.iter().all(|&t| t < states), "transition target out of range");
        Self {
            alphabet_size,
            table,
            initial,
            accepting,
        }
    }

    pub fn from_rows(rows: &[Vec<usize>], initial: usize, accepting: Vec<bool>) -> Self {
        let n = rows.first().map_or(1, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n), "ragged transition rows");
        Self::new(n, rows.concat(), initial, accepting)
    }

    pub fn empty_language(alphabet_size: usize) -> Self {
        Self::new(alphabet_size, vec![0; alphabet_size], 0, vec![false])
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_count(&self) -> usize {
        self.accepting.iter().filter(|&&a| a).count()
    }

    pub fn next(&self, state: usize, letter: Letter) -> usize {
        self.table[state * self.alphabet_size + letter]
    }

    pub fn run_from(&self, state: usize, word: &Word) -> usize {
        word.letters().iter().fold(state, |s, &l| self.next(s, l))
    }

    pub fn accepts(&self, word: &Word) -> bool {
        self.accepting[self.run_from(self.initial, word)]
    }

    /// `true` iff `v ∈ L` implies `v W ⊆ L`, i.e. no transition leaves the
    /// accepting set. Assumes every state is reachable.
    pub fn is_right_ideal_language(&self) -> bool {
        (0..self.state_count())
            .filter(|&s| self.accepting[s])
            .all(|s| (0..self.alphabet_size).all(|l| self.accepting[self.next(s, l)]))
    }

    /// Renumbers the reachable part in breadth-first order from the initial
    /// state, processing letters in alphabet order.
    pub fn canonical_order(&self) -> Dfa {
        let n = self.alphabet_size;
        let mut id = vec![usize::MAX; self.state_count()];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        id[self.initial] = 0;
        order.push(self.initial);
        while let Some(s) = queue.pop_front() {
            for l in 0..n {
                let t = self.next(s, l);
                if id[t] == usize::MAX {
                    id[t] = order.len();
                    order.push(t);
                    queue.push_back(t);
                }
            }
        }
        let table = order
            .iter()
            .flat_map(|&s| (0..n).map(move |l| (s, l)))
            .map(|(s, l)| id[self.next(s, l)])
            .collect();
        let accepting = order.iter().map(|&s| self.accepting[s]).collect();
        Dfa::new(n, table, 0, accepting)
    }

    /// Minimal automaton for the same language (Hopcroft partition
    /// refinement), in canonical breadth-first numbering. Unreachable states
    /// are discarded; language-equivalent dead states merge into one sink.
    pub fn minimize(&self) -> Dfa {
        let dfa = self.canonical_order();
        let n = dfa.alphabet_size;
        let states = dfa.state_count();

        let mut inverse: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); states]; n];
        for s in 0..states {
            for (l, inv) in inverse.iter_mut().enumerate() {
                inv[dfa.next(s, l)].push(s);
            }
        }

        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0usize; states];
        let (acc, rej): (Vec<usize>, Vec<usize>) = (0..states).partition(|&s| dfa.accepting[s]);
        for part in [acc, rej] {
            if !part.is_empty() {
                for &s in &part {
                    block_of[s] = blocks.len();
                }
                blocks.push(part);
            }
        }

        let mut in_work: Vec<Vec<bool>> = vec![vec![false; n]; blocks.len()];
        let mut work: Vec<(usize, Letter)> = Vec::new();
        if blocks.len() == 2 {
            let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
            for l in 0..n {
                work.push((smaller, l));
                in_work[smaller][l] = true;
            }
        }

        let mut marked = vec![false; states];
        while let Some((splitter, letter)) = work.pop() {
            in_work[splitter][letter] = false;
            let mut preimage = Vec::new();
            for &t in &blocks[splitter] {
                for &s in &inverse[letter][t] {
                    if !marked[s] {
                        marked[s] = true;
                        preimage.push(s);
                    }
                }
            }
            let mut touched: Vec<usize> = preimage.iter().map(|&s| block_of[s]).collect();
            touched.sort_unstable();
            touched.dedup();
            for b in touched {
                let (inside, outside): (Vec<usize>, Vec<usize>) =
                    blocks[b].iter().partition(|&&s| marked[s]);
                if outside.is_empty() {
                    continue;
                }
                let new_id = blocks.len();
                for &s in &outside {
                    block_of[s] = new_id;
                }
                blocks[b] = inside;
                blocks.push(outside);
                in_work.push(vec![false; n]);
                for l in 0..n {
                    if in_work[b][l] {
                        in_work[new_id][l] = true;
                        work.push((new_id, l));
                    } else {
                        let pick = if blocks[b].len() <= blocks[new_id].len() { b } else { new_id };
                        in_work[pick][l] = true;
                        work.push((pick, l));
                    }
                }
            }
            for s in preimage {
                marked[s] = false;
            }
        }

        let table = (0..blocks.len())
            .flat_map(|b| {
                let rep = blocks[b][0];
                let dfa = &dfa;
                let block_of = &block_of;
                (0..n).map(move |l| block_of[dfa.next(rep, l)])
            })
            .collect();
        let accepting = blocks.iter().map(|b| dfa.accepting[b[0]]).collect();
        Dfa::new(n, table, block_of[dfa.initial], accepting).canonical_order()
    }

    /// Graphviz rendering: the initial state carries an external `start`
    /// label, accepting states are double circles, one edge per transition.
    pub fn to_dot(&self, alphabet: &Alphabet) -> String {
        let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n");
        let _ = writeln!(out, "  start [shape=plaintext, label=\"start\"];");
        for s in 0..self.state_count() {
            let shape = if self.accepting[s] { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  q{s} [label=\"{s}\", shape={shape}];");
        }
        let _ = writeln!(out, "  start -> q{};", self.initial);
        for s in 0..self.state_count() {
            for l in 0..self.alphabet_size {
                let _ = writeln!(
                    out,
                    "  q{s} -> q{} [label=\"{}\"];",
                    self.next(s, l),
                    alphabet.name(l)
                );
            }
        }
        out.push_str("}\n");
        out
    }
}
