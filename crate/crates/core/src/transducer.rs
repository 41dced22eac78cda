//! Subsequential transducers and their minimization.
//!
//! A transducer reads input words deterministically, emitting an output
//! word per transition, an initial prefix, and a final word at the state it
//! stops in. Every step may be undefined, in which case the whole output is
//! undefined.
//!
//! Minimization runs in three stages:
//!
//! 1. [`SubseqTransducer::trim`] keeps the states that are reachable and
//!    from which some completion is defined.
//! 2. [`SubseqTransducer::normalize`] computes, for every state, the longest
//!    common prefix of everything it can still produce and pushes it
//!    towards the start, so each state emits as early as possible.
//! 3. [`SubseqTransducer::merge_equivalent`] merges states whose
//!    normalized rows agree, by partition refinement.
//!
//! Partial maps `Q → B* × Q' + 1` compose by concatenating outputs; they
//! are modelled by [`KleisliMap`] and are also what morphisms between
//! transducers are made of.

use std::collections::{BTreeMap, VecDeque};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::pipeline::{self, DetGraph, Minimizable, Morphism, MorphismKind};

/// `(output, target)`; `None` plays the role of undefined.
pub type Step = Option<(String, usize)>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubseqTransducer {
    input: Alphabet,
    output: Alphabet,
    /// Initial state and initialization word; defined together.
    initial: Option<(usize, String)>,
    /// `trans[q][a] = (target, output)`.
    trans: Vec<Vec<Option<(usize, String)>>>,
    term: Vec<Option<String>>,
}

impl SubseqTransducer {
    /// Builds a transducer on `n` states. Transitions are
    /// `(source, input symbol index, target, output)`; terminations are
    /// `(state, output)`. A repeated transition or termination is an error.
    pub fn new<T, F, U>(
        input: Alphabet,
        output: Alphabet,
        n: usize,
        initial: Option<(usize, &str)>,
        transitions: T,
        terms: F,
    ) -> Result<Self>
    where
        T: IntoIterator<Item = (usize, usize, usize, U)>,
        F: IntoIterator<Item = (usize, U)>,
        U: Into<String>,
    {
        let initial = initial.map(|(q, u)| (q, u.to_string()));
        if let Some((q0, u0)) = &initial {
            if *q0 >= n {
                return Err(Error::malformed(format!("initial state {q0} out of range")));
            }
            output.check_str(u0)?;
        }
        let mut trans = vec![vec![None; input.len()]; n];
        for (p, a, q, out) in transitions {
            let out: String = out.into();
            if p >= n || q >= n {
                return Err(Error::malformed(format!("transition {p} -> {q} out of range")));
            }
            if a >= input.len() {
                return Err(Error::malformed(format!("input symbol index {a} out of range")));
            }
            output.check_str(&out)?;
            if trans[p][a].replace((q, out)).is_some() {
                return Err(Error::malformed(format!(
                    "duplicate transition from {p} on {:?}",
                    input.symbol(a)
                )));
            }
        }
        let mut term = vec![None; n];
        for (q, out) in terms {
            let out: String = out.into();
            if q >= n {
                return Err(Error::malformed(format!("final state {q} out of range")));
            }
            output.check_str(&out)?;
            if term[q].replace(out).is_some() {
                return Err(Error::malformed(format!("duplicate termination for {q}")));
            }
        }
        Ok(SubseqTransducer {
            input,
            output,
            initial,
            trans,
            term,
        })
    }

    /// The machine with no states, computing the nowhere-defined function.
    pub fn empty(input: Alphabet, output: Alphabet) -> Self {
        SubseqTransducer {
            input,
            output,
            initial: None,
            trans: Vec::new(),
            term: Vec::new(),
        }
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output
    }

    pub fn n_states(&self) -> usize {
        self.trans.len()
    }

    pub fn initial(&self) -> Option<(usize, &str)> {
        self.initial.as_ref().map(|(q, u)| (*q, u.as_str()))
    }

    pub fn transition(&self, q: usize, a: usize) -> Option<(usize, &str)> {
        self.trans[q][a].as_ref().map(|(p, o)| (*p, o.as_str()))
    }

    pub fn termination(&self, q: usize) -> Option<&str> {
        self.term[q].as_deref()
    }

    /// Output of the machine started in `q` with empty prefix.
    pub fn run_from(&self, q: usize, word: &[usize]) -> Option<String> {
        let mut out = String::new();
        let mut q = q;
        for &a in word {
            let (p, o) = self.trans[q][a].as_ref()?;
            out.push_str(o);
            q = *p;
        }
        out.push_str(self.term[q].as_deref()?);
        Some(out)
    }

    pub fn apply_word(&self, word: &[usize]) -> Option<String> {
        let (q0, u0) = self.initial.as_ref()?;
        self.run_from(*q0, word).map(|rest| format!("{u0}{rest}"))
    }

    /// The partial function computed by the machine; `Ok(None)` is
    /// "undefined".
    pub fn apply(&self, word: &str) -> Result<Option<String>> {
        Ok(self.apply_word(&self.input.parse_word(word)?))
    }

    /// The function computed from `q` (empty prefix) on words of length at
    /// most `max_len`.
    pub fn residual(&self, q: usize, max_len: usize) -> PartialOutputMap {
        let mut map = BTreeMap::new();
        let mut stack: Vec<(usize, Word, String)> = vec![(q, Vec::new(), String::new())];
        while let Some((q, w, out)) = stack.pop() {
            if let Some(t) = &self.term[q] {
                map.insert(w.clone(), format!("{out}{t}"));
            }
            if w.len() == max_len {
                continue;
            }
            for a in 0..self.input.len() {
                if let Some((p, o)) = &self.trans[q][a] {
                    let mut w2 = w.clone();
                    w2.push(a);
                    stack.push((*p, w2, format!("{out}{o}")));
                }
            }
        }
        PartialOutputMap(map)
    }

    /// States reachable from the initial state.
    pub fn accessible(&self) -> Vec<bool> {
        let mut seen = vec![false; self.n_states()];
        for q in pipeline::reachable_order(self) {
            seen[q] = true;
        }
        seen
    }

    /// States from which some completion is defined.
    pub fn coaccessible(&self) -> Vec<bool> {
        let n = self.n_states();
        let mut preds = vec![Vec::new(); n];
        for (q, row) in self.trans.iter().enumerate() {
            for (p, _) in row.iter().flatten() {
                preds[*p].push(q);
            }
        }
        let mut seen: Vec<bool> = self.term.iter().map(Option::is_some).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&q| seen[q]).collect();
        while let Some(p) = stack.pop() {
            for &q in &preds[p] {
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        seen
    }

    /// Keeps the states flagged in `keep`, numbered in original order.
    /// Transitions into dropped states are deleted; if the initial state
    /// is dropped the machine loses its initial data.
    fn restrict(&self, keep: &[bool]) -> SubseqTransducer {
        let mut pos = vec![None; self.n_states()];
        let mut count = 0;
        for q in 0..self.n_states() {
            if keep[q] {
                pos[q] = Some(count);
                count += 1;
            }
        }
        let remap = |(p, o): &(usize, String)| pos[*p].map(|p2| (p2, o.clone()));
        SubseqTransducer {
            input: self.input.clone(),
            output: self.output.clone(),
            initial: self.initial.as_ref().and_then(remap),
            trans: (0..self.n_states())
                .filter(|&q| keep[q])
                .map(|q| self.trans[q].iter().map(|t| t.as_ref().and_then(remap)).collect())
                .collect(),
            term: (0..self.n_states())
                .filter(|&q| keep[q])
                .map(|q| self.term[q].clone())
                .collect(),
        }
    }

    /// Renumbers states, `order[new] = old`; `order` must be a permutation.
    fn permute(&self, order: &[usize]) -> SubseqTransducer {
        let pos = pipeline::invert(order);
        let remap = |(p, o): &(usize, String)| (pos[*p], o.clone());
        SubseqTransducer {
            input: self.input.clone(),
            output: self.output.clone(),
            initial: self.initial.as_ref().map(remap),
            trans: order
                .iter()
                .map(|&q| self.trans[q].iter().map(|t| t.as_ref().map(remap)).collect())
                .collect(),
            term: order.iter().map(|&q| self.term[q].clone()).collect(),
        }
    }

    /// Restriction to states reachable from the initial state.
    pub fn reach(&self) -> SubseqTransducer {
        self.restrict(&self.accessible())
    }

    /// Restriction to the reachable states from which some completion is
    /// defined. Semantics are unchanged.
    pub fn trim(&self) -> SubseqTransducer {
        let acc = self.accessible();
        let coacc = self.coaccessible();
        let keep: Vec<bool> = acc.iter().zip(&coacc).map(|(a, c)| *a && *c).collect();
        self.restrict(&keep)
    }

    fn check_productive(&self) -> Result<()> {
        match self.coaccessible().iter().position(|c| !c) {
            Some(q) => Err(Error::Contract(format!(
                "state {q} has no defined completion; trim first"
            ))),
            None => Ok(()),
        }
    }

    /// For every state, the longest common prefix of the outputs of all its
    /// defined completions. Every state must have at least one.
    pub fn state_lcp(&self) -> Result<Vec<String>> {
        self.check_productive()?;
        let mut v = self.some_completions();
        loop {
            let mut changed = false;
            for q in 0..self.n_states() {
                let mut cur: Option<String> = self.term[q].clone();
                for (p, o) in self.trans[q].iter().flatten() {
                    let cand = format!("{o}{}", v[*p]);
                    cur = Some(match cur {
                        None => cand,
                        Some(c) => lcp(&c, &cand).to_string(),
                    });
                }
                let cur = cur.expect("productive state has a completion");
                if cur != v[q] {
                    debug_assert!(v[q].starts_with(&cur));
                    v[q] = cur;
                    changed = true;
                }
            }
            if !changed {
                return Ok(v);
            }
        }
    }

    /// The output of one shortest defined completion per state, found by
    /// backward BFS from the states with a termination output.
    fn some_completions(&self) -> Vec<String> {
        let n = self.n_states();
        let mut preds = vec![Vec::new(); n];
        for (q, row) in self.trans.iter().enumerate() {
            for (a, t) in row.iter().enumerate() {
                if let Some((p, _)) = t {
                    preds[*p].push((q, a));
                }
            }
        }
        let mut best: Vec<Option<String>> = self.term.clone();
        let mut queue: VecDeque<usize> = (0..n).filter(|&q| best[q].is_some()).collect();
        while let Some(p) = queue.pop_front() {
            for &(q, a) in &preds[p] {
                if best[q].is_none() {
                    let (_, o) = self.trans[q][a].as_ref().expect("edge");
                    best[q] = Some(format!("{o}{}", best[p].as_deref().expect("set")));
                    queue.push_back(q);
                }
            }
        }
        best.into_iter().map(Option::unwrap_or_default).collect()
    }

    /// Pushes every state's common output prefix towards the start, on the
    /// trimmed machine. Afterwards every state's residual is irreducible
    /// (its outputs have no common prefix).
    pub fn normalize(&self) -> SubseqTransducer {
        self.trim().push_outputs()
    }

    /// Drops states without defined completions (reachable or not) and
    /// pushes outputs.
    fn push_outputs(&self) -> SubseqTransducer {
        let productive = self.restrict(&self.coaccessible());
        let v = productive.state_lcp().expect("restricted to productive states");
        let strip = |s: String, prefix: &str| -> String {
            s.strip_prefix(prefix)
                .expect("lcp is a prefix of every completion")
                .to_string()
        };
        let trans = productive
            .trans
            .iter()
            .enumerate()
            .map(|(q, row)| {
                row.iter()
                    .map(|t| {
                        t.as_ref().map(|(p, o)| (*p, strip(format!("{o}{}", v[*p]), &v[q])))
                    })
                    .collect()
            })
            .collect();
        let term = productive
            .term
            .iter()
            .enumerate()
            .map(|(q, t)| t.clone().map(|t| strip(t, &v[q])))
            .collect();
        SubseqTransducer {
            initial: productive
                .initial
                .as_ref()
                .map(|(q0, u0)| (*q0, format!("{u0}{}", v[*q0]))),
            trans,
            term,
            ..productive
        }
    }

    /// Merges states with identical normalized behaviour: the coarsest
    /// partition where equivalent states agree on termination and, per
    /// symbol, on definedness, output and successor block. The input must
    /// be normalized.
    pub fn merge_equivalent(&self) -> Result<SubseqTransducer> {
        let v = self.state_lcp()?;
        if let Some(q) = v.iter().position(|x| !x.is_empty()) {
            return Err(Error::Contract(format!(
                "state {q} is not normalized (common prefix {:?})",
                v[q]
            )));
        }
        Ok(self.quotient())
    }

    /// Partition refinement on rows. Blocks are numbered by first
    /// occurrence in state order.
    fn quotient(&self) -> SubseqTransducer {
        let n = self.n_states();
        let mut block = number_by_key(n, |q| self.term[q].clone());
        let mut count = block.iter().max().map_or(0, |m| m + 1);
        loop {
            let next = number_by_key(n, |q| {
                let row: Vec<Option<(&str, usize)>> = self.trans[q]
                    .iter()
                    .map(|t| t.as_ref().map(|(p, o)| (o.as_str(), block[*p])))
                    .collect();
                (block[q], row)
            });
            let next_count = next.iter().max().map_or(0, |m| m + 1);
            block = next;
            if next_count == count {
                break;
            }
            count = next_count;
        }
        let mut trans = vec![Vec::new(); count];
        let mut term = vec![None; count];
        let mut filled = vec![false; count];
        for q in 0..n {
            let b = block[q];
            if !std::mem::replace(&mut filled[b], true) {
                trans[b] = self.trans[q]
                    .iter()
                    .map(|t| t.as_ref().map(|(p, o)| (block[*p], o.clone())))
                    .collect();
                term[b] = self.term[q].clone();
            }
        }
        SubseqTransducer {
            input: self.input.clone(),
            output: self.output.clone(),
            initial: self.initial.as_ref().map(|(q0, u0)| (block[*q0], u0.clone())),
            trans,
            term,
        }
    }

    /// Quotient onto the behaviours: drop states without defined
    /// completions, normalize, merge.
    pub fn obs(&self) -> SubseqTransducer {
        self.push_outputs().quotient()
    }

    /// `merge_equivalent(normalize(trim(self)))`, renumbered canonically.
    pub fn minimize(&self) -> SubseqTransducer {
        pipeline::minimize_generic(self).canonical()
    }

    /// Renumbers states in BFS order from the initial state (input symbols
    /// in declared order); unreachable states follow.
    pub fn canonical(&self) -> SubseqTransducer {
        self.permute(&pipeline::bfs_order(self))
    }

    /// Whether both compute the same partial function, decided by
    /// comparing minimal canonical forms.
    pub fn equivalent(&self, other: &SubseqTransducer) -> Result<bool> {
        self.ensure_same_alphabets(other)?;
        Ok(self.minimize() == other.minimize())
    }

    fn ensure_same_alphabets(&self, other: &SubseqTransducer) -> Result<()> {
        self.input.ensure_same(&other.input)?;
        self.output.ensure_same(&other.output)
    }

    pub fn is_isomorphic(&self, other: &SubseqTransducer) -> bool {
        self.input == other.input
            && self.output == other.output
            && self.initial.as_ref().map(|(_, u)| u) == other.initial.as_ref().map(|(_, u)| u)
            && pipeline::find_isomorphism(self, other).is_some()
    }

    /// The initial arrow `1 ⇸ Q`.
    pub fn initial_map(&self) -> KleisliMap {
        KleisliMap::new(
            vec![self.initial.as_ref().map(|(q, u)| (u.clone(), *q))],
            self.n_states(),
        )
    }

    /// The transition arrow `Q ⇸ Q` for input symbol `a`.
    pub fn step_map(&self, a: usize) -> KleisliMap {
        KleisliMap::new(
            self.trans
                .iter()
                .map(|row| row[a].as_ref().map(|(p, o)| (o.clone(), *p)))
                .collect(),
            self.n_states(),
        )
    }

    /// The termination arrow `Q ⇸ 1`.
    pub fn term_map(&self) -> KleisliMap {
        KleisliMap::new(
            self.term.iter().map(|t| t.clone().map(|t| (t, 0))).collect(),
            1,
        )
    }

    /// Output on `word` computed by composing arrows:
    /// `initial ; step(a1) ; … ; step(an) ; term`.
    pub fn apply_by_composition(&self, word: &[usize]) -> Option<String> {
        let arrow = word
            .iter()
            .fold(self.initial_map(), |f, &a| f.then(&self.step_map(a)))
            .then(&self.term_map());
        arrow.image(0).map(|(out, _)| out.to_string())
    }

    /// The morphism `self → target` forced by the initial data, defined on
    /// the states reachable from the initial state.
    pub fn find_morphism(&self, target: &SubseqTransducer) -> Result<Option<TransducerMorphism>> {
        self.ensure_same_alphabets(target)?;
        let n = self.n_states();
        let mut h: Vec<Option<Step>> = vec![None; n];
        let mut stack = Vec::new();
        if let Some((q0, u0)) = &self.initial {
            let img = match &target.initial {
                None => None,
                Some((p0, v0)) => match v0.strip_prefix(u0.as_str()) {
                    Some(rest) => Some((rest.to_string(), *p0)),
                    None => return Ok(None),
                },
            };
            h[*q0] = Some(img);
            stack.push(*q0);
        } else if target.initial.is_some() {
            return Ok(None);
        }
        while let Some(q) = stack.pop() {
            let img = h[q].clone().expect("visited");
            let expected_term = img
                .as_ref()
                .and_then(|(w, p)| target.term[*p].as_ref().map(|t| format!("{w}{t}")));
            if self.term[q] != expected_term {
                return Ok(None);
            }
            for a in 0..self.input.len() {
                let forced: Option<(usize, Step)> = match (&self.trans[q][a], &img) {
                    (None, None) => None,
                    (Some((p, _)), None) => Some((*p, None)),
                    (None, Some((_, q2))) => {
                        if target.trans[*q2][a].is_some() {
                            return Ok(None);
                        }
                        None
                    }
                    (Some((p, o)), Some((w, q2))) => match &target.trans[*q2][a] {
                        None => Some((*p, None)),
                        Some((p2, o2)) => {
                            let rhs = format!("{w}{o2}");
                            match rhs.strip_prefix(o.as_str()) {
                                Some(rest) => Some((*p, Some((rest.to_string(), *p2)))),
                                None => return Ok(None),
                            }
                        }
                    },
                };
                if let Some((p, step)) = forced {
                    match &h[p] {
                        None => {
                            h[p] = Some(step);
                            stack.push(p);
                        }
                        Some(existing) if *existing == step => {}
                        Some(_) => return Ok(None),
                    }
                }
            }
        }
        Ok(Some(TransducerMorphism {
            images: h,
            target_states: target.n_states(),
        }))
    }
}

impl DetGraph for SubseqTransducer {
    type Label = Option<String>;
    type Edge = String;

    fn n_states(&self) -> usize {
        self.trans.len()
    }

    fn n_symbols(&self) -> usize {
        self.input.len()
    }

    fn start(&self) -> Option<usize> {
        self.initial.as_ref().map(|(q, _)| *q)
    }

    fn label(&self, q: usize) -> Option<String> {
        self.term[q].clone()
    }

    fn succ(&self, q: usize, a: usize) -> Option<(usize, String)> {
        self.trans[q][a].clone()
    }
}

impl Minimizable for SubseqTransducer {
    type Morphism = TransducerMorphism;

    fn reach(&self) -> Self {
        SubseqTransducer::reach(self)
    }

    fn obs(&self) -> Self {
        SubseqTransducer::obs(self)
    }

    fn find_morphism(&self, target: &Self) -> Result<Option<TransducerMorphism>> {
        SubseqTransducer::find_morphism(self, target)
    }

    fn is_isomorphic(&self, other: &Self) -> bool {
        SubseqTransducer::is_isomorphic(self, other)
    }

    fn minimize(&self) -> Self {
        SubseqTransducer::minimize(self)
    }
}

fn number_by_key<K: Ord>(n: usize, key: impl Fn(usize) -> K) -> Vec<usize> {
    let mut ids = BTreeMap::new();
    (0..n)
        .map(|q| {
            let next = ids.len();
            *ids.entry(key(q)).or_insert(next)
        })
        .collect()
}

/// Longest common prefix of two strings.
pub fn lcp<'a>(x: &'a str, y: &str) -> &'a str {
    let end = x
        .char_indices()
        .zip(y.chars())
        .find(|((_, c1), c2)| c1 != c2)
        .map_or(x.len().min(y.len()), |((i, _), _)| i);
    &x[..end]
}

/// A partial map `X ⇸ B* × Y`. Composition concatenates outputs:
/// `(w, (u, z)) ↦ (wu, z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KleisliMap {
    images: Vec<Step>,
    codomain: usize,
}

impl KleisliMap {
    pub fn new(images: Vec<Step>, codomain: usize) -> Self {
        debug_assert!(images.iter().flatten().all(|(_, y)| *y < codomain));
        KleisliMap { images, codomain }
    }

    /// `x ↦ (ε, x)`.
    pub fn unit(n: usize) -> Self {
        KleisliMap::new((0..n).map(|x| Some((String::new(), x))).collect(), n)
    }

    pub fn domain(&self) -> usize {
        self.images.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn image(&self, x: usize) -> Option<(&str, usize)> {
        self.images[x].as_ref().map(|(w, y)| (w.as_str(), *y))
    }

    /// First `self`, then `next`.
    pub fn then(&self, next: &KleisliMap) -> KleisliMap {
        let images = self
            .images
            .iter()
            .map(|img| {
                let (w, y) = img.as_ref()?;
                let (u, z) = next.images[*y].as_ref()?;
                Some((format!("{w}{u}"), *z))
            })
            .collect();
        KleisliMap::new(images, next.codomain)
    }
}

/// A morphism between transducers: on each state in its domain, either
/// undefined or an output word together with a target state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransducerMorphism {
    /// `None` = outside the domain; `Some(None)` = undefined.
    images: Vec<Option<Step>>,
    target_states: usize,
}

impl TransducerMorphism {
    pub fn image(&self, q: usize) -> Option<Option<(&str, usize)>> {
        self.images[q]
            .as_ref()
            .map(|s| s.as_ref().map(|(w, p)| (w.as_str(), *p)))
    }
}

impl Morphism for TransducerMorphism {
    /// Epi: every target state is hit. Mono: total, defined everywhere,
    /// no output words, injective on states.
    fn kind(&self) -> MorphismKind {
        let mut hit = vec![0usize; self.target_states];
        let mut pure = true;
        for img in &self.images {
            match img {
                Some(Some((w, p))) => {
                    hit[*p] += 1;
                    pure &= w.is_empty();
                }
                _ => pure = false,
            }
        }
        MorphismKind::from_flags(hit.iter().all(|&c| c > 0), pure && hit.iter().all(|&c| c <= 1))
    }
}

/// A finite partial map from input words to output words; absent words
/// are undefined.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialOutputMap(pub BTreeMap<Word, String>);

impl PartialOutputMap {
    pub fn get(&self, w: &[usize]) -> Option<&str> {
        self.0.get(w).map(String::as_str)
    }

    pub fn is_nowhere_defined(&self) -> bool {
        self.0.is_empty()
    }

    /// Longest common prefix of all defined values; `None` for the
    /// nowhere-defined map.
    pub fn lcp(&self) -> Option<String> {
        let mut values = self.0.values();
        let first = values.next()?.as_str();
        Some(values.fold(first, |acc, v| lcp(acc, v)).to_string())
    }

    /// The map with its common prefix removed from every value.
    pub fn reduced(&self) -> PartialOutputMap {
        let Some(prefix) = self.lcp() else {
            return self.clone();
        };
        PartialOutputMap(
            self.0
                .iter()
                .map(|(w, v)| (w.clone(), v[prefix.len()..].to_string()))
                .collect(),
        )
    }

    pub fn is_irreducible(&self) -> bool {
        self.lcp().is_some_and(|p| p.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> String {
        x.to_string()
    }

    /// One state, `a/x` loop, termination ε: `aⁿ ↦ xⁿ`.
    fn xx_machine() -> SubseqTransducer {
        SubseqTransducer::new(
            Alphabet::of("a"),
            Alphabet::of("x"),
            1,
            Some((0, "")),
            [(0, 0, 0, "x")],
            [(0, "")],
        )
        .unwrap()
    }

    /// Chain 0 -a/x-> 1, term(1) = yz.
    fn chain() -> SubseqTransducer {
        SubseqTransducer::new(
            Alphabet::of("a"),
            Alphabet::of("xyz"),
            2,
            Some((0, "")),
            [(0, 0, 1, "x")],
            [(1, "yz")],
        )
        .unwrap()
    }

    #[test]
    fn construction_errors() {
        let (a, b) = (Alphabet::of("a"), Alphabet::of("x"));
        let dup = SubseqTransducer::new(
            a.clone(),
            b.clone(),
            1,
            None,
            [(0, 0, 0, "x"), (0, 0, 0, "")],
            [],
        );
        assert!(dup.is_err());
        let bad_out = SubseqTransducer::new(a.clone(), b.clone(), 1, None, [(0, 0, 0, "q")], []);
        assert_eq!(bad_out, Err(Error::UnknownSymbol('q')));
        assert!(SubseqTransducer::new(a, b, 1, Some((2, "")), [], [(0, "")]).is_err());
    }

    #[test]
    fn apply_by_semantics() {
        let t = xx_machine();
        assert_eq!(t.apply("aa").unwrap(), Some(s("xx")));
        assert_eq!(t.apply("").unwrap(), Some(s("")));
        assert_eq!(t.apply("b"), Err(Error::UnknownSymbol('b')));
        let no_init = SubseqTransducer { initial: None, ..t.clone() };
        assert_eq!(no_init.apply("a").unwrap(), None);
        let no_term = SubseqTransducer { term: vec![None], ..t };
        for w in ["", "a", "aaa"] {
            assert_eq!(no_term.apply(w).unwrap(), None);
        }
    }

    #[test]
    fn kleisli_composition_concatenates() {
        let t = xx_machine();
        let two = t.step_map(0).then(&t.step_map(0));
        assert_eq!(two.image(0), Some(("xx", 0)));
        assert_eq!(KleisliMap::unit(1).then(&two), two);
        assert_eq!(t.apply_by_composition(&[0, 0]), Some(s("xx")));
        assert_eq!(chain().apply_by_composition(&[0]), Some(s("xyz")));
        assert_eq!(chain().apply_by_composition(&[0, 0]), None);
    }

    #[test]
    fn trim_removes_useless_states() {
        let t = xx_machine();
        assert_eq!(t.trim(), t);
        // State 1 is reachable but never terminates; state 2 is unreachable.
        let u = SubseqTransducer::new(
            Alphabet::of("ab"),
            Alphabet::of("x"),
            3,
            Some((0, "")),
            [(0, 0, 0, "x"), (0, 1, 1, ""), (1, 0, 1, "x"), (2, 0, 0, "")],
            [(0, ""), (2, "")],
        )
        .unwrap();
        let tr = u.trim();
        assert_eq!(tr.n_states(), 1);
        assert_eq!(tr.transition(0, 1), None);
        for w in u.input_alphabet().words_up_to(4) {
            assert_eq!(u.apply_word(&w), tr.apply_word(&w));
        }
        let none = SubseqTransducer { initial: None, ..t };
        let trimmed = none.trim();
        assert_eq!(trimmed.n_states(), 0);
        assert_eq!(trimmed.initial(), None);
    }

    #[test]
    fn state_lcp_cases() {
        assert_eq!(xx_machine().state_lcp().unwrap(), vec![""]);
        assert_eq!(chain().state_lcp().unwrap(), vec!["xyz", "yz"]);
        // term(0) = ab, 0 -a/a-> 1, term(1) = c: completions ab, ac.
        let t = SubseqTransducer::new(
            Alphabet::of("a"),
            Alphabet::of("abc"),
            2,
            Some((0, "")),
            [(0, 0, 1, "a")],
            [(0, "ab"), (1, "c")],
        )
        .unwrap();
        assert_eq!(t.state_lcp().unwrap()[0], "a");
        let useless = SubseqTransducer::new(Alphabet::of("a"), Alphabet::of("x"), 1, None, [(0, 0, 0, "")], []).unwrap();
        assert!(matches!(useless.state_lcp(), Err(Error::Contract(_))));
    }

    #[test]
    fn normalize_pushes_outputs_forward() {
        let n = chain().normalize();
        assert_eq!(n.initial(), Some((0, "xyz")));
        assert_eq!(n.transition(0, 0), Some((1, "")));
        assert_eq!(n.termination(1), Some(""));
        let with_prefix = SubseqTransducer {
            initial: Some((0, s("p"))),
            ..SubseqTransducer::new(
                Alphabet::of("a"),
                Alphabet::of("pq"),
                1,
                None,
                [(0, 0, 0, "")],
                [(0, "q")],
            )
            .unwrap()
        };
        assert_eq!(with_prefix.normalize().initial(), Some((0, "pq")));
        assert_eq!(xx_machine().normalize(), xx_machine());
    }

    #[test]
    fn residual_maps() {
        let t = xx_machine();
        let r = t.residual(0, 2);
        let expected: BTreeMap<Word, String> =
            [(vec![], s("")), (vec![0], s("x")), (vec![0, 0], s("xx"))].into();
        assert_eq!(r.0, expected);
        assert!(r.is_irreducible());
        let only_term = SubseqTransducer::new(Alphabet::of("a"), Alphabet::of("x"), 1, None, [], [(0, "")]).unwrap();
        assert_eq!(only_term.residual(0, 3).0, BTreeMap::from([(vec![], s(""))]));
        let useless = SubseqTransducer::new(Alphabet::of("a"), Alphabet::of("x"), 1, None, [(0, 0, 0, "x")], []).unwrap();
        assert!(useless.residual(0, 3).is_nowhere_defined());
        assert_eq!(chain().residual(0, 2).reduced().0, BTreeMap::from([(vec![0], s(""))]));
    }

    #[test]
    fn merge_duplicated_states() {
        // 0 and 1 are copies of each other, each looping into the other.
        let t = SubseqTransducer::new(
            Alphabet::of("a"),
            Alphabet::of("x"),
            2,
            Some((0, "")),
            [(0, 0, 1, "x"), (1, 0, 0, "x")],
            [(0, ""), (1, "")],
        )
        .unwrap();
        let m = t.merge_equivalent().unwrap();
        assert_eq!(m.n_states(), 1);
        assert!(m.is_isomorphic(&xx_machine()));
        assert!(xx_machine().merge_equivalent().unwrap().is_isomorphic(&xx_machine()));
        assert!(matches!(chain().merge_equivalent(), Err(Error::Contract(_))));
    }

    #[test]
    fn minimize_cases() {
        let nowhere = SubseqTransducer::new(Alphabet::of("a"), Alphabet::of("x"), 2, Some((0, "")), [(0, 0, 1, "x")], []).unwrap();
        assert_eq!(nowhere.minimize().n_states(), 0);
        assert_eq!(nowhere.minimize().initial(), None);
        // aⁿ ↦ xⁿ again, but the first x is held back until termination.
        let late = SubseqTransducer::new(
            Alphabet::of("a"),
            Alphabet::of("x"),
            2,
            Some((0, "")),
            [(0, 0, 1, ""), (1, 0, 1, "x")],
            [(0, ""), (1, "x")],
        )
        .unwrap();
        for w in late.input_alphabet().words_up_to(5) {
            assert_eq!(late.apply_word(&w).unwrap().len(), w.len());
        }
        assert!(late.minimize().is_isomorphic(&xx_machine()));
        assert!(late.equivalent(&xx_machine()).unwrap());
        let m = late.minimize();
        assert!(m.minimize().is_isomorphic(&m));
    }

    #[test]
    fn equivalence_detects_different_termination() {
        let other = SubseqTransducer { term: vec![Some(s("x"))], ..xx_machine() };
        assert!(!other.equivalent(&xx_machine()).unwrap());
        let wrong = SubseqTransducer::new(Alphabet::of("b"), Alphabet::of("x"), 1, None, [], [(0, "")]).unwrap();
        assert!(matches!(xx_machine().equivalent(&wrong), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn morphism_onto_minimal() {
        let late = SubseqTransducer::new(
            Alphabet::of("a"),
            Alphabet::of("x"),
            2,
            Some((0, "")),
            [(0, 0, 1, ""), (1, 0, 1, "x")],
            [(0, ""), (1, "x")],
        )
        .unwrap();
        let m = late.minimize();
        let h = late.find_morphism(&m).unwrap().unwrap();
        assert_eq!(h.kind(), MorphismKind::Epi);
        assert_eq!(h.image(1), Some(Some(("x", 0))));
        assert!(m.find_morphism(&late).unwrap().is_none());
        assert_eq!(m.find_morphism(&m).unwrap().unwrap().kind(), MorphismKind::Iso);
    }

    #[test]
    fn lcp_of_strings() {
        assert_eq!(lcp("abc", "abd"), "ab");
        assert_eq!(lcp("ab", "abc"), "ab");
        assert_eq!(lcp("", "x"), "");
    }
}
