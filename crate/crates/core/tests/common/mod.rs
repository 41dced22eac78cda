//! Random instance generators and brute-force oracles shared by the
//! integration tests. Oracles here only use word-level semantics
//! (acceptance, output, weights), never the minimization code paths.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use automin::{Alphabet, Dfa, Nfa, SubseqTransducer, Wfa, Word};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alphabet(k: usize) -> Alphabet {
    Alphabet::new("abc".chars().take(k)).unwrap()
}

pub fn random_dfa(rng: &mut impl Rng, max_states: usize, max_symbols: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let k = rng.gen_range(1..=max_symbols);
    let delta = (0..n).map(|_| (0..k).map(|_| rng.gen_range(0..n)).collect()).collect();
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(alphabet(k), rng.gen_range(0..n), finals, delta).unwrap()
}

pub fn random_nfa(rng: &mut impl Rng, max_states: usize, max_symbols: usize) -> Nfa {
    let n = rng.gen_range(1..=max_states);
    let k = rng.gen_range(1..=max_symbols);
    let density = rng.gen_range(0.1..0.6);
    let mut transitions = Vec::new();
    for p in 0..n {
        for a in 0..k {
            for q in 0..n {
                if rng.gen_bool(density) {
                    transitions.push((p, a, q));
                }
            }
        }
    }
    let initials: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    Nfa::new(alphabet(k), n, initials, finals, transitions).unwrap()
}

fn random_output(rng: &mut impl Rng, max_len: usize) -> String {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| if rng.gen_bool(0.5) { 'x' } else { 'y' }).collect()
}

pub fn random_sst(rng: &mut impl Rng, max_states: usize, max_symbols: usize) -> SubseqTransducer {
    let n = rng.gen_range(1..=max_states);
    let k = rng.gen_range(1..=max_symbols);
    let mut transitions = Vec::new();
    for p in 0..n {
        for a in 0..k {
            if rng.gen_bool(0.8) {
                transitions.push((p, a, rng.gen_range(0..n), random_output(rng, 2)));
            }
        }
    }
    let mut terms = Vec::new();
    for q in 0..n {
        if rng.gen_bool(0.5) {
            terms.push((q, random_output(rng, 2)));
        }
    }
    let initial = rng
        .gen_bool(0.95)
        .then(|| (rng.gen_range(0..n), random_output(rng, 1)));
    SubseqTransducer::new(alphabet(k), Alphabet::of("xy"), n, initial.as_ref().map(|(q, u)| (*q, u.as_str())), transitions, terms).unwrap()
}

/// Integer description of a weighted automaton, kept alongside the
/// automaton so oracles can recompute weights on their own.
#[derive(Debug, Clone)]
pub struct IntWfa {
    pub k: usize,
    pub init: Vec<i64>,
    pub trans: Vec<Vec<Vec<i64>>>,
    pub fin: Vec<i64>,
}

impl IntWfa {
    pub fn build(&self) -> Wfa {
        Wfa::from_integers(alphabet(self.k), &self.init, &self.trans, &self.fin).unwrap()
    }

    /// `init · M_w · final` in big integers.
    pub fn weight(&self, w: &[usize]) -> BigInt {
        let mut v: Vec<BigInt> = self.init.iter().map(|&x| BigInt::from(x)).collect();
        for &a in w {
            let m = &self.trans[a];
            v = (0..v.len())
                .map(|j| (0..v.len()).map(|i| &v[i] * m[i][j]).sum())
                .collect();
        }
        v.iter().zip(&self.fin).map(|(x, &f)| x * f).sum()
    }
}

pub fn random_int_wfa(rng: &mut impl Rng, max_dim: usize, k: usize) -> IntWfa {
    let dim = rng.gen_range(1..=max_dim);
    let zero_p = rng.gen_range(0.0..0.8);
    let mut entries = (0..dim * (dim * k + 2)).map(|_| {
        if rng.gen_bool(zero_p) {
            0
        } else {
            rng.gen_range(-2..=2)
        }
    });
    let mut take = |n: usize| -> Vec<i64> { entries.by_ref().take(n).collect() };
    IntWfa {
        k,
        init: take(dim),
        trans: (0..k).map(|_| (0..dim).map(|_| take(dim)).collect()).collect(),
        fin: take(dim),
    }
}

/// All words of length at most `max_len` over `k` symbols.
pub fn words(k: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for a in 0..k {
                let mut w = out[i].clone();
                w.push(a);
                out.push(w);
            }
        }
        start = end;
    }
    out
}

/// States reachable from the initial state, by breadth-first closure.
pub fn reachable_states(d: &Dfa) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([d.initial()]);
    let mut frontier = vec![d.initial()];
    while let Some(q) = frontier.pop() {
        for a in 0..d.alphabet().len() {
            let p = d.next(q, a);
            if seen.insert(p) {
                frontier.push(p);
            }
        }
    }
    seen
}

/// Number of Myhill–Nerode classes among reachable states, from residual
/// languages truncated at `depth`.
pub fn residual_class_count(d: &Dfa, depth: usize) -> usize {
    let ws = words(d.alphabet().len(), depth);
    reachable_states(d)
        .into_iter()
        .map(|q| ws.iter().map(|w| d.is_final(d.run_from(q, w))).collect::<Vec<bool>>())
        .collect::<BTreeSet<_>>()
        .len()
}

/// Syntactic congruence classes among words of length ≤ `word_len`,
/// distinguished by contexts `(u, v)` with `|u|, |v| ≤ ctx_len`.
pub fn brute_force_congruence_classes(d: &Dfa, word_len: usize, ctx_len: usize) -> usize {
    let k = d.alphabet().len();
    let ctx = words(k, ctx_len);
    words(k, word_len)
        .iter()
        .map(|w| {
            let mut sig = Vec::with_capacity(ctx.len() * ctx.len());
            for u in &ctx {
                for v in &ctx {
                    let uwv: Word = u.iter().chain(w).chain(v).copied().collect();
                    sig.push(d.accepts_word(&uwv));
                }
            }
            sig
        })
        .collect::<BTreeSet<_>>()
        .len()
}

/// Semantics of a transducer by direct simulation, independent of the
/// library's `apply`.
pub fn simulate(t: &SubseqTransducer, w: &[usize]) -> Option<String> {
    let (mut q, u0) = t.initial()?;
    let mut out = u0.to_string();
    for &a in w {
        let (p, o) = t.transition(q, a)?;
        out.push_str(o);
        q = p;
    }
    out.push_str(t.termination(q)?);
    Some(out)
}

/// Residual function of state `q` on words of length ≤ `depth`, by
/// simulation.
pub fn residual_by_simulation(t: &SubseqTransducer, q: usize, depth: usize) -> BTreeMap<Word, String> {
    let mut map = BTreeMap::new();
    let mut stack = vec![(q, Vec::new(), String::new())];
    while let Some((q, w, out)) = stack.pop() {
        if let Some(term) = t.termination(q) {
            map.insert(w.clone(), format!("{out}{term}"));
        }
        if w.len() < depth {
            for a in 0..t.input_alphabet().len() {
                if let Some((p, o)) = t.transition(q, a) {
                    let mut w2 = w.clone();
                    w2.push(a);
                    stack.push((p, w2, format!("{out}{o}")));
                }
            }
        }
    }
    map
}

fn common_prefix_len(values: &[&String]) -> usize {
    let first = values[0].as_bytes();
    let mut len = first.len();
    for v in &values[1..] {
        len = len.min(first.iter().zip(v.as_bytes()).take_while(|(a, b)| a == b).count());
    }
    len
}

/// Residual with the common prefix of its values stripped.
pub fn reduce(map: &BTreeMap<Word, String>) -> BTreeMap<Word, String> {
    if map.is_empty() {
        return map.clone();
    }
    let values: Vec<&String> = map.values().collect();
    let cut = common_prefix_len(&values);
    map.iter().map(|(w, v)| (w.clone(), v[cut..].to_string())).collect()
}

pub fn lcp_is_empty(map: &BTreeMap<Word, String>) -> bool {
    let values: Vec<&String> = map.values().collect();
    !values.is_empty() && common_prefix_len(&values) == 0
}

/// Number of distinct non-empty reduced residuals over states reachable
/// from the initial state.
pub fn distinct_reduced_residuals(t: &SubseqTransducer, depth: usize) -> usize {
    let Some((q0, _)) = t.initial() else {
        return 0;
    };
    let mut seen = BTreeSet::from([q0]);
    let mut stack = vec![q0];
    while let Some(q) = stack.pop() {
        for a in 0..t.input_alphabet().len() {
            if let Some((p, _)) = t.transition(q, a) {
                if seen.insert(p) {
                    stack.push(p);
                }
            }
        }
    }
    seen.into_iter()
        .map(|q| residual_by_simulation(t, q, depth))
        .filter(|m| !m.is_empty())
        .map(|m| reduce(&m))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].abs();
        // Bareiss divides by the previous pivot itself, sign included.
        prev = if m[rank][col].is_negative() { -prev } else { prev };
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Hankel block `{weight(uv)}` for `|u|, |v| ≤ max_len`, from integer
/// weights.
pub fn hankel_rank(w: &IntWfa, max_len: usize) -> usize {
    let ws = words(w.k, max_len);
    let mut cache: HashMap<Word, BigInt> = HashMap::new();
    let mut weight = |x: Word| cache.entry(x.clone()).or_insert_with(|| w.weight(&x)).clone();
    let block = ws
        .iter()
        .map(|u| {
            ws.iter()
                .map(|v| weight(u.iter().chain(v).copied().collect()))
                .collect()
        })
        .collect();
    integer_rank(block)
}
