//! Non-deterministic automata and Brzozowski's double-reversal algorithm.
//!
//! There is no behavioural quotient for NFAs themselves. Minimization goes
//! through [`Nfa::determinize`]: `brzozowski` is `determinize ∘
//! codeterminize`, where `codeterminize` determinizes the transposed
//! automaton and transposes back.

use std::collections::{BTreeSet, HashMap};

use crate::alphabet::{Alphabet, Word};
use crate::dfa::Dfa;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Nfa {
    alphabet: Alphabet,
    initials: Vec<bool>,
    finals: Vec<bool>,
    /// `delta[q][a]`, sorted and deduplicated.
    delta: Vec<Vec<Vec<usize>>>,
}

impl Nfa {
    /// Builds an NFA on `n` states from `(source, symbol, target)` triples.
    pub fn new<I, F, T>(alphabet: Alphabet, n: usize, initials: I, finals: F, transitions: T) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
        F: IntoIterator<Item = usize>,
        T: IntoIterator<Item = (usize, usize, usize)>,
    {
        let initials = indicator(n, initials, "initial")?;
        let finals = indicator(n, finals, "final")?;
        let mut delta = vec![vec![Vec::new(); alphabet.len()]; n];
        for (p, a, q) in transitions {
            if p >= n || q >= n {
                return Err(Error::malformed(format!("transition {p} -> {q} out of range")));
            }
            if a >= alphabet.len() {
                return Err(Error::malformed(format!("symbol index {a} out of range")));
            }
            delta[p][a].push(q);
        }
        for row in delta.iter_mut().flatten() {
            row.sort_unstable();
            row.dedup();
        }
        Ok(Nfa {
            alphabet,
            initials,
            finals,
            delta,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn n_states(&self) -> usize {
        self.delta.len()
    }

    pub fn initials(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_states()).filter(|&q| self.initials[q])
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_states()).filter(|&q| self.finals[q])
    }

    pub fn is_initial(&self, q: usize) -> bool {
        self.initials[q]
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn successors(&self, q: usize, a: usize) -> &[usize] {
        &self.delta[q][a]
    }

    /// All `(source, symbol, target)` triples in lexicographic order.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.delta.iter().enumerate().flat_map(|(p, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(a, targets)| targets.iter().map(move |&q| (p, a, q)))
        })
    }

    fn step(&self, set: &BTreeSet<usize>, a: usize) -> BTreeSet<usize> {
        set.iter()
            .flat_map(|&q| self.delta[q][a].iter().copied())
            .collect()
    }

    fn initial_set(&self) -> BTreeSet<usize> {
        self.initials().collect()
    }

    pub fn accepts_word(&self, word: &[usize]) -> bool {
        let end = word
            .iter()
            .fold(self.initial_set(), |set, &a| self.step(&set, a));
        end.iter().any(|&q| self.finals[q])
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.accepts_word(&self.alphabet.parse_word(word)?))
    }

    /// Reverses every transition and swaps initial and final states.
    pub fn transpose(&self) -> Nfa {
        let n = self.n_states();
        let mut delta = vec![vec![Vec::new(); self.alphabet.len()]; n];
        for (p, a, q) in self.transitions() {
            delta[q][a].push(p);
        }
        for row in delta.iter_mut().flatten() {
            row.sort_unstable();
        }
        Nfa {
            alphabet: self.alphabet.clone(),
            initials: self.finals.clone(),
            finals: self.initials.clone(),
            delta,
        }
    }

    /// Reachable subset construction. Subsets are numbered in order of
    /// discovery (BFS, symbols in declared order), so the result is in
    /// canonical form.
    pub fn determinize(&self) -> Dfa {
        let (dfa, _) = self.subset_construction();
        dfa
    }

    /// The subset construction together with the subset each DFA state
    /// stands for.
    pub fn subset_construction(&self) -> (Dfa, Vec<BTreeSet<usize>>) {
        let start = self.initial_set();
        let mut ids: HashMap<BTreeSet<usize>, usize> = HashMap::from([(start.clone(), 0)]);
        let mut subsets = vec![start];
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < subsets.len() {
            let mut row = Vec::with_capacity(self.alphabet.len());
            for a in 0..self.alphabet.len() {
                let next = self.step(&subsets[head], a);
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        ids.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                row.push(id);
            }
            delta.push(row);
            head += 1;
        }
        let finals: Vec<usize> = subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.iter().any(|&q| self.finals[q]))
            .map(|(i, _)| i)
            .collect();
        let dfa = Dfa::new(self.alphabet.clone(), 0, finals, delta).expect("subset construction");
        (dfa, subsets)
    }

    /// A backward-deterministic acceptor of the same language:
    /// `transpose(embed(determinize(transpose(self))))`.
    pub fn codeterminize(&self) -> Nfa {
        Nfa::embed(&self.transpose().determinize()).transpose()
    }

    /// Views a DFA as an NFA with singleton initial set and transitions.
    pub fn embed(d: &Dfa) -> Nfa {
        let n = d.n_states();
        let delta = (0..n)
            .map(|q| (0..d.alphabet().len()).map(|a| vec![d.next(q, a)]).collect())
            .collect();
        let mut initials = vec![false; n];
        initials[d.initial()] = true;
        Nfa {
            alphabet: d.alphabet().clone(),
            initials,
            finals: (0..n).map(|q| d.is_final(q)).collect(),
            delta,
        }
    }

    /// Brzozowski's algorithm: `determinize(codeterminize(self))`. The
    /// result is the minimal DFA of the language.
    pub fn brzozowski(&self) -> Dfa {
        self.codeterminize().determinize()
    }

    /// The transpose is deterministic: at most one final state, and no
    /// state is the `a`-successor of two different states.
    pub fn is_backward_deterministic(&self) -> bool {
        if self.finals().count() > 1 {
            return false;
        }
        let mut pred = vec![vec![None; self.alphabet.len()]; self.n_states()];
        for (p, a, q) in self.transitions() {
            if pred[q][a].replace(p).is_some() {
                return false;
            }
        }
        true
    }

    /// Renumbers states by BFS from the initial states (in index order),
    /// following successors per symbol in index order; unreachable states
    /// follow in original order. Idempotent.
    pub fn canonical(&self) -> Nfa {
        let n = self.n_states();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let roots: Vec<usize> = self.initials().chain(0..n).collect();
        for root in roots {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            order.push(root);
            let mut head = order.len() - 1;
            while head < order.len() {
                let q = order[head];
                head += 1;
                for a in 0..self.alphabet.len() {
                    for &p in &self.delta[q][a] {
                        if !seen[p] {
                            seen[p] = true;
                            order.push(p);
                        }
                    }
                }
            }
        }
        let pos = crate::pipeline::invert(&order);
        let transitions: Vec<(usize, usize, usize)> = self
            .transitions()
            .map(|(p, a, q)| (pos[p], a, pos[q]))
            .collect();
        Nfa::new(
            self.alphabet.clone(),
            n,
            self.initials().map(|q| pos[q]),
            self.finals().map(|q| pos[q]),
            transitions,
        )
        .expect("permutation of a well-formed NFA")
    }

    /// Whether a state bijection preserves initial, final and transition
    /// relations. Brute force with pruning; intended for small automata.
    pub fn is_isomorphic(&self, other: &Nfa) -> bool {
        if self.alphabet != other.alphabet || self.n_states() != other.n_states() {
            return false;
        }
        let edges: BTreeSet<(usize, usize, usize)> = other.transitions().collect();
        if self.transitions().count() != edges.len() {
            return false;
        }
        let mut map = vec![usize::MAX; self.n_states()];
        let mut used = vec![false; self.n_states()];
        self.extend_iso(other, &edges, 0, &mut map, &mut used)
    }

    fn extend_iso(
        &self,
        other: &Nfa,
        edges: &BTreeSet<(usize, usize, usize)>,
        p: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if p == self.n_states() {
            return true;
        }
        for q in 0..other.n_states() {
            if used[q] || self.initials[p] != other.initials[q] || self.finals[p] != other.finals[q] {
                continue;
            }
            map[p] = q;
            // Edges whose endpoints are both mapped must exist on the other side.
            let consistent = (0..=p).all(|r| {
                (0..self.alphabet.len()).all(|a| {
                    let fwd = self.delta[p][a].binary_search(&r).is_ok()
                        == edges.contains(&(q, a, map[r]));
                    let bwd = self.delta[r][a].binary_search(&p).is_ok()
                        == edges.contains(&(map[r], a, q));
                    fwd && bwd
                })
            });
            if consistent {
                used[q] = true;
                if self.extend_iso(other, edges, p + 1, map, used) {
                    return true;
                }
                used[q] = false;
            }
        }
        map[p] = usize::MAX;
        false
    }

    /// Accepted words of length at most `max_len`.
    pub fn language_up_to(&self, max_len: usize) -> BTreeSet<Word> {
        self.alphabet
            .words_up_to(max_len)
            .into_iter()
            .filter(|w| self.accepts_word(w))
            .collect()
    }
}

fn indicator<I: IntoIterator<Item = usize>>(n: usize, states: I, what: &str) -> Result<Vec<bool>> {
    let mut v = vec![false; n];
    for q in states {
        if q >= n {
            return Err(Error::malformed(format!("{what} state {q} out of range")));
        }
        v[q] = true;
    }
    Ok(v)
}
