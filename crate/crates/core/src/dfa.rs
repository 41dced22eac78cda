//! Complete deterministic automata.
//!
//! A [`Dfa`] is an initial state, a set of accepting states and one total
//! transition map per symbol. `reach` keeps the states some word leads to,
//! `obs` merges states with the same residual language (Moore partition
//! refinement), and `minimize` does both and renumbers states in BFS order.

use std::collections::BTreeSet;

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::pipeline::{self, DetGraph, Minimizable, StateMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: usize,
    finals: Vec<bool>,
    /// `delta[q][a]`
    delta: Vec<Vec<usize>>,
}

impl Dfa {
    /// Builds a complete DFA. `delta[q][a]` must be given for every state
    /// and symbol.
    pub fn new<F>(alphabet: Alphabet, initial: usize, finals: F, delta: Vec<Vec<usize>>) -> Result<Self>
    where
        F: IntoIterator<Item = usize>,
    {
        let n = delta.len();
        if n == 0 {
            return Err(Error::malformed("a DFA needs at least one state"));
        }
        if initial >= n {
            return Err(Error::malformed(format!("initial state {initial} out of range")));
        }
        let mut is_final = vec![false; n];
        for q in finals {
            if q >= n {
                return Err(Error::malformed(format!("final state {q} out of range")));
            }
            is_final[q] = true;
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::malformed(format!(
                    "state {q} has {} transitions, expected {}",
                    row.len(),
                    alphabet.len()
                )));
            }
            if let Some(&p) = row.iter().find(|&&p| p >= n) {
                return Err(Error::malformed(format!("transition target {p} out of range")));
            }
        }
        Ok(Dfa {
            alphabet,
            initial,
            finals: is_final,
            delta,
        })
    }

    /// Builds a DFA from a partial transition table, sending every missing
    /// transition to a fresh rejecting sink. The flag reports whether a
    /// sink was added.
    pub fn complete<F>(
        alphabet: Alphabet,
        initial: usize,
        finals: F,
        partial: Vec<Vec<Option<usize>>>,
    ) -> Result<(Self, bool)>
    where
        F: IntoIterator<Item = usize>,
    {
        let n = partial.len();
        let needs_sink = partial.iter().any(|row| row.iter().any(Option::is_none));
        let sink = n;
        let mut delta: Vec<Vec<usize>> = partial
            .into_iter()
            .map(|row| row.into_iter().map(|p| p.unwrap_or(sink)).collect())
            .collect();
        if needs_sink {
            delta.push(vec![sink; alphabet.len()]);
        }
        Ok((Dfa::new(alphabet, initial, finals, delta)?, needs_sink))
    }

    /// The one-state automaton accepting everything or nothing.
    pub fn trivial(alphabet: Alphabet, accepting: bool) -> Self {
        let k = alphabet.len();
        let finals = if accepting { vec![0] } else { vec![] };
        Dfa::new(alphabet, 0, finals, vec![vec![0; k]]).expect("well-formed")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn n_states(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_states()).filter(|&q| self.finals[q])
    }

    pub fn next(&self, q: usize, a: usize) -> usize {
        self.delta[q][a]
    }

    /// Runs `word` from `q`.
    pub fn run_from(&self, q: usize, word: &[usize]) -> usize {
        word.iter().fold(q, |q, &a| self.delta[q][a])
    }

    pub fn accepts_word(&self, word: &[usize]) -> bool {
        self.finals[self.run_from(self.initial, word)]
    }

    /// Acceptance of a word written with the alphabet's characters.
    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.accepts_word(&self.alphabet.parse_word(word)?))
    }

    /// Words of length at most `max_len` accepted from `q`.
    pub fn residual(&self, q: usize, max_len: usize) -> BTreeSet<Word> {
        self.alphabet
            .words_up_to(max_len)
            .into_iter()
            .filter(|w| self.finals[self.run_from(q, w)])
            .collect()
    }

    /// Restriction to the reachable states, numbered in BFS order.
    pub fn reach(&self) -> Dfa {
        let order = pipeline::reachable_order(self);
        self.restrict(&order)
    }

    /// Sub-automaton on `order` (which must be closed under transitions and
    /// contain the initial state), renumbered as `order[new] = old`.
    fn restrict(&self, order: &[usize]) -> Dfa {
        let mut pos = vec![usize::MAX; self.n_states()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let delta = order
            .iter()
            .map(|&q| self.delta[q].iter().map(|&p| pos[p]).collect())
            .collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: pos[self.initial],
            finals: order.iter().map(|&q| self.finals[q]).collect(),
            delta,
        }
    }

    /// Coarsest partition separating accepting from rejecting states and
    /// stable under every transition. Blocks are numbered by first
    /// occurrence in state order.
    pub fn equivalence_classes(&self) -> Vec<usize> {
        let n = self.n_states();
        let mut block: Vec<usize> = number_by_key(n, |q| self.finals[q]);
        let mut count = block.iter().max().map_or(0, |m| m + 1);
        loop {
            let next = number_by_key(n, |q| {
                let mut sig = Vec::with_capacity(1 + self.alphabet.len());
                sig.push(block[q]);
                sig.extend(self.delta[q].iter().map(|&p| block[p]));
                sig
            });
            let next_count = next.iter().max().map_or(0, |m| m + 1);
            block = next;
            if next_count == count {
                return block;
            }
            count = next_count;
        }
    }

    /// Quotient by residual-language equivalence.
    pub fn obs(&self) -> Dfa {
        let block = self.equivalence_classes();
        let m = block.iter().max().map_or(0, |m| m + 1);
        let mut delta = vec![Vec::new(); m];
        let mut finals = vec![false; m];
        let mut filled = vec![false; m];
        for q in 0..self.n_states() {
            let b = block[q];
            if !std::mem::replace(&mut filled[b], true) {
                delta[b] = self.delta[q].iter().map(|&p| block[p]).collect();
                finals[b] = self.finals[q];
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: block[self.initial],
            finals,
            delta,
        }
    }

    /// `obs(reach(self))`, renumbered canonically.
    pub fn minimize(&self) -> Dfa {
        pipeline::minimize_generic(self).canonical()
    }

    /// Renumbers states in canonical BFS order; structural equality of
    /// canonical forms decides isomorphism of reachable DFAs.
    pub fn canonical(&self) -> Dfa {
        let order = pipeline::bfs_order(self);
        self.restrict(&order)
    }

    /// The morphism `self → target` forced by sending initial state to
    /// initial state, defined on the reachable states of `self`.
    pub fn find_morphism(&self, target: &Dfa) -> Result<Option<StateMap>> {
        self.alphabet.ensure_same(&target.alphabet)?;
        let mut map = vec![None; self.n_states()];
        map[self.initial] = Some(target.initial);
        let mut stack = vec![self.initial];
        while let Some(q) = stack.pop() {
            let h = map[q].expect("visited");
            if self.finals[q] != target.finals[h] {
                return Ok(None);
            }
            for a in 0..self.alphabet.len() {
                let (p, hp) = (self.delta[q][a], target.delta[h][a]);
                match map[p] {
                    None => {
                        map[p] = Some(hp);
                        stack.push(p);
                    }
                    Some(x) if x == hp => {}
                    Some(_) => return Ok(None),
                }
            }
        }
        Ok(Some(StateMap::new(map, target.n_states())))
    }

    pub fn is_isomorphic(&self, other: &Dfa) -> bool {
        self.alphabet == other.alphabet && pipeline::find_isomorphism(self, other).is_some()
    }

    /// Language equality, decided on minimal forms.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool> {
        self.alphabet.ensure_same(&other.alphabet)?;
        Ok(self.minimize() == other.minimize())
    }

    /// A copy with the accepting set complemented.
    pub fn complement(&self) -> Dfa {
        Dfa {
            finals: self.finals.iter().map(|f| !f).collect(),
            ..self.clone()
        }
    }
}

/// Numbers states by the first occurrence of their key.
fn number_by_key<K: Ord>(n: usize, key: impl Fn(usize) -> K) -> Vec<usize> {
    let mut ids = std::collections::BTreeMap::new();
    (0..n)
        .map(|q| {
            let next = ids.len();
            *ids.entry(key(q)).or_insert(next)
        })
        .collect()
}

impl DetGraph for Dfa {
    type Label = bool;
    type Edge = ();

    fn n_states(&self) -> usize {
        self.delta.len()
    }

    fn n_symbols(&self) -> usize {
        self.alphabet.len()
    }

    fn start(&self) -> Option<usize> {
        Some(self.initial)
    }

    fn label(&self, q: usize) -> bool {
        self.finals[q]
    }

    fn succ(&self, q: usize, a: usize) -> Option<(usize, ())> {
        Some((self.delta[q][a], ()))
    }
}

impl Minimizable for Dfa {
    type Morphism = StateMap;

    fn reach(&self) -> Self {
        Dfa::reach(self)
    }

    fn obs(&self) -> Self {
        Dfa::obs(self)
    }

    fn find_morphism(&self, target: &Self) -> Result<Option<StateMap>> {
        Dfa::find_morphism(self, target)
    }

    fn is_isomorphic(&self, other: &Self) -> bool {
        Dfa::is_isomorphic(self, other)
    }

    fn minimize(&self) -> Self {
        Dfa::minimize(self)
    }
}
