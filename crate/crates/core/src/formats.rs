//! Text formats, DOT export and the monoid block.
//!
//! One automaton per file. The first non-comment line names the kind
//! (`dfa`, `nfa`, `wfa`, `sst`); `#` starts a comment; tokens are separated
//! by whitespace; `@` is the empty word. The grammar is in `docs/FORMAT.md`.
//!
//! [`serialize`] writes the canonical form (states renumbered, lines
//! sorted), so `serialize ∘ parse` canonicalizes and
//! `serialize ∘ parse ∘ serialize = serialize`.

use std::fmt::Write as _;

use num_traits::Zero;

use crate::alphabet::{Alphabet, EPSILON};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Vector};
use crate::monoid::{FiniteMonoid, MonoidRecognizer};
use crate::nfa::Nfa;
use crate::transducer::SubseqTransducer;
use crate::wfa::Wfa;

/// An automaton of any supported kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automaton {
    Dfa(Dfa),
    Nfa(Nfa),
    Wfa(Wfa),
    Sst(SubseqTransducer),
}

impl Automaton {
    pub fn kind(&self) -> &'static str {
        match self {
            Automaton::Dfa(_) => "dfa",
            Automaton::Nfa(_) => "nfa",
            Automaton::Wfa(_) => "wfa",
            Automaton::Sst(_) => "sst",
        }
    }

    /// Canonical form: what `parse(serialize(self))` returns.
    pub fn canonicalize(&self) -> Automaton {
        match self {
            Automaton::Dfa(d) => Automaton::Dfa(d.canonical()),
            Automaton::Nfa(n) => Automaton::Nfa(n.canonical()),
            Automaton::Wfa(w) => Automaton::Wfa(w.clone()),
            Automaton::Sst(t) => Automaton::Sst(t.canonical()),
        }
    }

    /// Minimization for the kinds that have one; NFAs are determinized
    /// first.
    pub fn minimize(&self) -> Automaton {
        match self {
            Automaton::Dfa(d) => Automaton::Dfa(d.minimize()),
            Automaton::Nfa(n) => Automaton::Dfa(n.determinize().minimize()),
            Automaton::Wfa(w) => Automaton::Wfa(w.minimize()),
            Automaton::Sst(t) => Automaton::Sst(t.minimize()),
        }
    }

    /// Equivalence of behaviour. DFAs and NFAs may be mixed; other kinds
    /// must match.
    pub fn equivalent(&self, other: &Automaton) -> Result<bool> {
        match (self, other) {
            (Automaton::Wfa(x), Automaton::Wfa(y)) => x.equivalent(y),
            (Automaton::Sst(x), Automaton::Sst(y)) => x.equivalent(y),
            (x, y) => match (x.as_dfa(), y.as_dfa()) {
                (Some(x), Some(y)) => x.equivalent(&y),
                _ => Err(Error::KindMismatch {
                    expected: x.kind().into(),
                    found: y.kind().into(),
                }),
            },
        }
    }

    /// A DFA with the same language, for the acceptor kinds.
    pub fn as_dfa(&self) -> Option<Dfa> {
        match self {
            Automaton::Dfa(d) => Some(d.clone()),
            Automaton::Nfa(n) => Some(n.determinize()),
            _ => None,
        }
    }

    /// An NFA with the same language, for the acceptor kinds.
    pub fn as_nfa(&self) -> Option<Nfa> {
        match self {
            Automaton::Dfa(d) => Some(Nfa::embed(d)),
            Automaton::Nfa(n) => Some(n.clone()),
            _ => None,
        }
    }
}

/// Result of parsing, with any warnings (e.g. DFA completion).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub automaton: Automaton,
    pub warnings: Vec<String>,
}

/// Parses an automaton file; warnings are dropped.
pub fn parse(text: &str) -> Result<Automaton> {
    parse_with_warnings(text).map(|p| p.automaton)
}

pub fn parse_with_warnings(text: &str) -> Result<Parsed> {
    let mut lines = Lines::new(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::syntax(1, "empty file: expected a kind header"))?;
    if header.len() != 1 {
        return Err(Error::syntax(line, "the header line must be just the kind"));
    }
    let mut warnings = Vec::new();
    let automaton = match header[0] {
        "dfa" => Automaton::Dfa(parse_dfa(&mut lines, &mut warnings)?),
        "nfa" => Automaton::Nfa(parse_nfa(&mut lines)?),
        "wfa" => Automaton::Wfa(parse_wfa(&mut lines)?),
        "sst" => Automaton::Sst(parse_sst(&mut lines)?),
        other => return Err(Error::syntax(line, format!("unknown kind {other:?}"))),
    };
    Ok(Parsed {
        automaton,
        warnings,
    })
}

type TokenLines<'a> = Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>;

/// Non-empty, comment-stripped lines as `(line number, tokens)`.
struct Lines<'a> {
    inner: std::iter::Peekable<TokenLines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
                .filter(|(_, toks)| !toks.is_empty()),
        );
        Lines {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.inner.next();
        if let Some((l, _)) = &item {
            self.last = *l;
        }
        item
    }
}

fn parse_index(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::syntax(line, format!("expected {what}, found {tok:?}")))
}

fn parse_symbol(line: usize, tok: &str, alphabet: &Alphabet) -> Result<usize> {
    let mut chars = tok.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => alphabet
            .index_of(c)
            .map_err(|_| Error::syntax(line, format!("symbol {c:?} is not in the alphabet"))),
        _ => Err(Error::syntax(line, format!("expected a single symbol, found {tok:?}"))),
    }
}

fn parse_alphabet(line: usize, toks: &[&str]) -> Result<Alphabet> {
    let mut symbols = Vec::new();
    for tok in toks {
        let mut chars = tok.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => symbols.push(c),
            _ => return Err(Error::syntax(line, format!("symbols are single characters, found {tok:?}"))),
        }
    }
    Alphabet::new(symbols).map_err(|e| Error::syntax(line, e.to_string()))
}

/// An output word token: `@` is ε.
fn parse_output(line: usize, tok: &str, alphabet: &Alphabet) -> Result<String> {
    if tok == "@" {
        return Ok(String::new());
    }
    alphabet
        .check_str(tok)
        .map_err(|e| Error::syntax(line, e.to_string()))?;
    Ok(tok.to_string())
}

fn render_output(w: &str) -> String {
    if w.is_empty() {
        EPSILON.to_string()
    } else {
        w.to_string()
    }
}

fn require<T>(value: Option<T>, line: usize, what: &str) -> Result<T> {
    value.ok_or_else(|| Error::syntax(line, format!("{what} must be declared first")))
}

fn check_state(line: usize, q: usize, n: usize) -> Result<usize> {
    if q < n {
        Ok(q)
    } else {
        Err(Error::syntax(line, format!("state {q} out of range (states {n})")))
    }
}

/// Shared parse of the acceptor header lines and transition lines.
struct AcceptorParts {
    alphabet: Alphabet,
    n: usize,
    initials: Vec<usize>,
    finals: Vec<usize>,
    transitions: Vec<(usize, usize, usize, usize)>,
}

fn parse_acceptor(lines: &mut Lines, kind: &str) -> Result<AcceptorParts> {
    let mut alphabet = None;
    let mut n = None;
    let mut initials: Option<Vec<usize>> = None;
    let mut finals = Vec::new();
    let mut transitions = Vec::new();
    while let Some((line, toks)) = lines.next() {
        match toks[0] {
            "alphabet" => alphabet = Some(parse_alphabet(line, &toks[1..])?),
            "states" => {
                if toks.len() != 2 {
                    return Err(Error::syntax(line, "expected `states N`"));
                }
                n = Some(parse_index(line, toks[1], "a state count")?);
            }
            "initial" => {
                let n = require(n, line, "states")?;
                if kind == "dfa" && toks.len() != 2 {
                    return Err(Error::syntax(line, "a dfa has exactly one initial state"));
                }
                let mut qs = initials.take().unwrap_or_default();
                if kind == "dfa" && !qs.is_empty() {
                    return Err(Error::syntax(line, "duplicate initial line"));
                }
                for tok in &toks[1..] {
                    qs.push(check_state(line, parse_index(line, tok, "a state")?, n)?);
                }
                initials = Some(qs);
            }
            "final" => {
                let n = require(n, line, "states")?;
                for tok in &toks[1..] {
                    finals.push(check_state(line, parse_index(line, tok, "a state")?, n)?);
                }
            }
            _ => {
                let alphabet = require(alphabet.as_ref(), line, "alphabet")?;
                let n = require(n, line, "states")?;
                if toks.len() != 3 {
                    return Err(Error::syntax(line, "expected `source symbol target`"));
                }
                let p = check_state(line, parse_index(line, toks[0], "a state")?, n)?;
                let a = parse_symbol(line, toks[1], alphabet)?;
                let q = check_state(line, parse_index(line, toks[2], "a state")?, n)?;
                transitions.push((line, p, a, q));
            }
        }
    }
    let last = lines.last.max(1);
    Ok(AcceptorParts {
        alphabet: require(alphabet, last, "alphabet")?,
        n: require(n, last, "states")?,
        initials: initials.unwrap_or_default(),
        finals,
        transitions,
    })
}

fn parse_dfa(lines: &mut Lines, warnings: &mut Vec<String>) -> Result<Dfa> {
    let parts = parse_acceptor(lines, "dfa")?;
    if parts.n == 0 {
        return Err(Error::syntax(lines.last.max(1), "a dfa needs at least one state"));
    }
    let [initial] = parts.initials[..] else {
        return Err(Error::syntax(lines.last.max(1), "a dfa needs an initial state"));
    };
    let mut table = vec![vec![None; parts.alphabet.len()]; parts.n];
    for (line, p, a, q) in parts.transitions {
        if table[p][a].replace(q).is_some() {
            return Err(Error::syntax(line, format!("duplicate transition from {p} on {:?}", parts.alphabet.symbol(a))));
        }
    }
    let (dfa, added) = Dfa::complete(parts.alphabet, initial, parts.finals, table)?;
    if added {
        warnings.push(format!(
            "missing transitions completed with rejecting sink state {}",
            dfa.n_states() - 1
        ));
    }
    Ok(dfa)
}

fn parse_nfa(lines: &mut Lines) -> Result<Nfa> {
    let parts = parse_acceptor(lines, "nfa")?;
    Nfa::new(
        parts.alphabet,
        parts.n,
        parts.initials,
        parts.finals,
        parts.transitions.into_iter().map(|(_, p, a, q)| (p, a, q)),
    )
}

fn parse_vector(line: usize, toks: &[&str], dim: usize) -> Result<Vector> {
    if toks.len() != dim {
        return Err(Error::syntax(line, format!("expected {dim} entries, found {}", toks.len())));
    }
    toks.iter()
        .map(|t| linalg::parse_rational(t).map_err(|e| Error::syntax(line, e.to_string())))
        .collect()
}

fn parse_wfa(lines: &mut Lines) -> Result<Wfa> {
    let mut alphabet: Option<Alphabet> = None;
    let mut dim = None;
    let mut init = None;
    let mut fin = None;
    let mut matrices: Vec<Option<Matrix>> = Vec::new();
    while let Some((line, toks)) = lines.next() {
        match toks[0] {
            "alphabet" => {
                let a = parse_alphabet(line, &toks[1..])?;
                matrices = vec![None; a.len()];
                alphabet = Some(a);
            }
            "dim" => {
                if toks.len() != 2 {
                    return Err(Error::syntax(line, "expected `dim N`"));
                }
                dim = Some(parse_index(line, toks[1], "a dimension")?);
            }
            "initial" => init = Some(parse_vector(line, &toks[1..], require(dim, line, "dim")?)?),
            "final" => fin = Some(parse_vector(line, &toks[1..], require(dim, line, "dim")?)?),
            "matrix" => {
                let alphabet = require(alphabet.as_ref(), line, "alphabet")?;
                let dim = require(dim, line, "dim")?;
                if toks.len() != 2 {
                    return Err(Error::syntax(line, "expected `matrix SYMBOL`"));
                }
                let a = parse_symbol(line, toks[1], alphabet)?;
                let mut rows = Vec::with_capacity(dim);
                for _ in 0..dim {
                    let (l, row) = lines
                        .next()
                        .ok_or_else(|| Error::syntax(line, "matrix ended early"))?;
                    rows.push(parse_vector(l, &row, dim)?);
                }
                if matrices[a].replace(rows).is_some() {
                    return Err(Error::syntax(line, format!("duplicate matrix for {:?}", toks[1])));
                }
            }
            other => return Err(Error::syntax(line, format!("unexpected {other:?} in a wfa"))),
        }
    }
    let last = lines.last.max(1);
    let alphabet = require(alphabet, last, "alphabet")?;
    let dim = require(dim, last, "dim")?;
    let trans = matrices
        .into_iter()
        .map(|m| m.unwrap_or_else(|| linalg::zero_matrix(dim, dim)))
        .collect();
    Wfa::new(
        alphabet,
        init.unwrap_or_else(|| linalg::zeros(dim)),
        trans,
        fin.unwrap_or_else(|| linalg::zeros(dim)),
    )
}

fn parse_sst(lines: &mut Lines) -> Result<SubseqTransducer> {
    let mut input = None;
    let mut output = None;
    let mut n = None;
    let mut initial = None;
    let mut transitions = Vec::new();
    let mut terms = Vec::new();
    let mut seen_trans = std::collections::HashSet::new();
    let mut seen_term = std::collections::HashSet::new();
    while let Some((line, toks)) = lines.next() {
        match toks[0] {
            "input" => input = Some(parse_alphabet(line, &toks[1..])?),
            "output" => output = Some(parse_alphabet(line, &toks[1..])?),
            "states" => {
                if toks.len() != 2 {
                    return Err(Error::syntax(line, "expected `states N`"));
                }
                n = Some(parse_index(line, toks[1], "a state count")?);
            }
            "initial" => {
                let n = require(n, line, "states")?;
                let out = require(output.as_ref(), line, "output")?;
                if toks.len() != 3 {
                    return Err(Error::syntax(line, "expected `initial STATE WORD`"));
                }
                if initial.is_some() {
                    return Err(Error::syntax(line, "duplicate initial line"));
                }
                let q = check_state(line, parse_index(line, toks[1], "a state")?, n)?;
                initial = Some((q, parse_output(line, toks[2], out)?));
            }
            "final" => {
                let n = require(n, line, "states")?;
                let out = require(output.as_ref(), line, "output")?;
                if toks.len() != 3 {
                    return Err(Error::syntax(line, "expected `final STATE WORD`"));
                }
                let q = check_state(line, parse_index(line, toks[1], "a state")?, n)?;
                if !seen_term.insert(q) {
                    return Err(Error::syntax(line, format!("duplicate final line for {q}")));
                }
                terms.push((q, parse_output(line, toks[2], out)?));
            }
            _ => {
                let n = require(n, line, "states")?;
                let inp = require(input.as_ref(), line, "input")?;
                let out = require(output.as_ref(), line, "output")?;
                if toks.len() != 4 {
                    return Err(Error::syntax(line, "expected `source symbol target output`"));
                }
                let p = check_state(line, parse_index(line, toks[0], "a state")?, n)?;
                let a = parse_symbol(line, toks[1], inp)?;
                let q = check_state(line, parse_index(line, toks[2], "a state")?, n)?;
                if !seen_trans.insert((p, a)) {
                    return Err(Error::syntax(line, format!("duplicate transition from {p} on {:?}", toks[1])));
                }
                transitions.push((p, a, q, parse_output(line, toks[3], out)?));
            }
        }
    }
    let last = lines.last.max(1);
    SubseqTransducer::new(
        require(input, last, "input")?,
        require(output, last, "output")?,
        require(n, last, "states")?,
        initial.as_ref().map(|(q, u)| (*q, u.as_str())),
        transitions,
        terms,
    )
}

/// Canonical text of an automaton.
pub fn serialize(a: &Automaton) -> String {
    let mut out = String::new();
    match a.canonicalize() {
        Automaton::Dfa(d) => {
            let _ = writeln!(out, "dfa\nalphabet {}\nstates {}\ninitial {}", d.alphabet(), d.n_states(), d.initial());
            write_state_list(&mut out, "final", d.finals());
            for q in 0..d.n_states() {
                for a in 0..d.alphabet().len() {
                    let _ = writeln!(out, "{q} {} {}", d.alphabet().symbol(a), d.next(q, a));
                }
            }
        }
        Automaton::Nfa(n) => {
            let _ = writeln!(out, "nfa\nalphabet {}\nstates {}", n.alphabet(), n.n_states());
            write_state_list(&mut out, "initial", n.initials());
            write_state_list(&mut out, "final", n.finals());
            for (p, a, q) in n.transitions() {
                let _ = writeln!(out, "{p} {} {q}", n.alphabet().symbol(a));
            }
        }
        Automaton::Wfa(w) => {
            let _ = writeln!(out, "wfa\nalphabet {}\ndim {}", w.alphabet(), w.dim());
            write_vector(&mut out, "initial", w.init());
            write_vector(&mut out, "final", w.final_vector());
            for a in 0..w.alphabet().len() {
                let _ = writeln!(out, "matrix {}", w.alphabet().symbol(a));
                for row in w.matrix(a) {
                    let cells: Vec<String> = row.iter().map(linalg::format_rational).collect();
                    let _ = writeln!(out, "{}", cells.join(" "));
                }
            }
        }
        Automaton::Sst(t) => {
            let _ = writeln!(
                out,
                "sst\ninput {}\noutput {}\nstates {}",
                t.input_alphabet(),
                t.output_alphabet(),
                t.n_states()
            );
            if let Some((q0, u0)) = t.initial() {
                let _ = writeln!(out, "initial {q0} {}", render_output(u0));
            }
            for q in 0..t.n_states() {
                for a in 0..t.input_alphabet().len() {
                    if let Some((p, o)) = t.transition(q, a) {
                        let _ = writeln!(out, "{q} {} {p} {}", t.input_alphabet().symbol(a), render_output(o));
                    }
                }
            }
            for q in 0..t.n_states() {
                if let Some(o) = t.termination(q) {
                    let _ = writeln!(out, "final {q} {}", render_output(o));
                }
            }
        }
    }
    out
}

fn write_state_list(out: &mut String, key: &str, states: impl Iterator<Item = usize>) {
    let states: Vec<String> = states.map(|q| q.to_string()).collect();
    if !states.is_empty() {
        let _ = writeln!(out, "{key} {}", states.join(" "));
    }
}

fn write_vector(out: &mut String, key: &str, v: &[linalg::Rational]) {
    let _ = write!(out, "{key}");
    for x in v {
        let _ = write!(out, " {}", linalg::format_rational(x));
    }
    out.push('\n');
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz export: one node per state, one edge per transition.
pub fn to_dot(a: &Automaton) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{\n  rankdir=LR;", a.kind());
    let node = |out: &mut String, q: usize, label: &str, accepting: bool| {
        let shape = if accepting { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  q{q} [shape={shape}, label=\"{}\"];", dot_escape(label));
    };
    match a {
        Automaton::Dfa(d) => {
            let _ = writeln!(out, "  start [shape=point];\n  start -> q{};", d.initial());
            for q in 0..d.n_states() {
                node(&mut out, q, &q.to_string(), d.is_final(q));
            }
            for q in 0..d.n_states() {
                for a in 0..d.alphabet().len() {
                    let _ = writeln!(out, "  q{q} -> q{} [label=\"{}\"];", d.next(q, a), d.alphabet().symbol(a));
                }
            }
        }
        Automaton::Nfa(n) => {
            let _ = writeln!(out, "  start [shape=point];");
            for q in n.initials() {
                let _ = writeln!(out, "  start -> q{q};");
            }
            for q in 0..n.n_states() {
                node(&mut out, q, &q.to_string(), n.is_final(q));
            }
            for (p, a, q) in n.transitions() {
                let _ = writeln!(out, "  q{p} -> q{q} [label=\"{}\"];", n.alphabet().symbol(a));
            }
        }
        Automaton::Wfa(w) => {
            for i in 0..w.dim() {
                let label = format!(
                    "{i}\\nin {} / out {}",
                    linalg::format_rational(&w.init()[i]),
                    linalg::format_rational(&w.final_vector()[i])
                );
                node(&mut out, i, &label, !w.final_vector()[i].is_zero());
            }
            for a in 0..w.alphabet().len() {
                for (i, row) in w.matrix(a).iter().enumerate() {
                    for (j, x) in row.iter().enumerate() {
                        if !x.is_zero() {
                            let _ = writeln!(
                                out,
                                "  q{i} -> q{j} [label=\"{}:{}\"];",
                                w.alphabet().symbol(a),
                                dot_escape(&linalg::format_rational(x))
                            );
                        }
                    }
                }
            }
        }
        Automaton::Sst(t) => {
            if let Some((q0, u0)) = t.initial() {
                let _ = writeln!(out, "  start [shape=point];\n  start -> q{q0} [label=\"{}\"];", render_output(u0));
            }
            for q in 0..t.n_states() {
                let label = match t.termination(q) {
                    Some(o) => format!("{q}/{}", render_output(o)),
                    None => q.to_string(),
                };
                node(&mut out, q, &label, t.termination(q).is_some());
            }
            for q in 0..t.n_states() {
                for a in 0..t.input_alphabet().len() {
                    if let Some((p, o)) = t.transition(q, a) {
                        let _ = writeln!(
                            out,
                            "  q{q} -> q{p} [label=\"{}/{}\"];",
                            t.input_alphabet().symbol(a),
                            render_output(o)
                        );
                    }
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Machine-readable block for a monoid recognizer.
pub fn serialize_monoid(r: &MonoidRecognizer) -> String {
    let mut out = String::new();
    let m = r.monoid();
    let _ = writeln!(out, "monoid\nalphabet {}\norder {}\nidentity {}", r.alphabet(), m.order(), m.identity());
    let _ = writeln!(out, "elements {}", r.element_names().join(" "));
    let phi: Vec<String> = (0..r.alphabet().len()).map(|a| r.phi(a).to_string()).collect();
    let _ = writeln!(out, "phi {}", phi.join(" "));
    let acc: Vec<String> = r.accepting().map(|x| x.to_string()).collect();
    let _ = writeln!(out, "accepting{}", acc.iter().map(|x| format!(" {x}")).collect::<String>());
    out.push_str("mult\n");
    for row in m.table() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

/// Reads back a block written by [`serialize_monoid`].
pub fn parse_monoid(text: &str) -> Result<MonoidRecognizer> {
    let mut lines = Lines::new(text);
    match lines.next() {
        Some((_, t)) if t == ["monoid"] => {}
        Some((l, _)) => return Err(Error::syntax(l, "expected `monoid`")),
        None => return Err(Error::syntax(1, "empty monoid block")),
    }
    let mut alphabet = None;
    let mut order = None;
    let mut identity = None;
    let mut phi = None;
    let mut accepting = None;
    let mut mult = None;
    while let Some((line, toks)) = lines.next() {
        let nums = |toks: &[&str]| -> Result<Vec<usize>> {
            toks.iter().map(|t| parse_index(line, t, "an element")).collect()
        };
        match toks[0] {
            "alphabet" => alphabet = Some(parse_alphabet(line, &toks[1..])?),
            "order" => order = nums(&toks[1..])?.first().copied(),
            "identity" => identity = nums(&toks[1..])?.first().copied(),
            "elements" => {}
            "phi" => phi = Some(nums(&toks[1..])?),
            "accepting" => accepting = Some(nums(&toks[1..])?),
            "mult" => {
                let m = require(order, line, "order")?;
                let mut rows = Vec::with_capacity(m);
                for _ in 0..m {
                    let (l, row) = lines.next().ok_or_else(|| Error::syntax(line, "table ended early"))?;
                    rows.push(row.iter().map(|t| parse_index(l, t, "an element")).collect::<Result<Vec<_>>>()?);
                }
                mult = Some(rows);
            }
            other => return Err(Error::syntax(line, format!("unexpected {other:?} in a monoid block"))),
        }
    }
    let last = lines.last.max(1);
    let order = require(order, last, "order")?;
    let monoid = FiniteMonoid::new(require(mult, last, "mult")?, require(identity, last, "identity")?)?;
    let mut acc = vec![false; order];
    for x in require(accepting, last, "accepting")? {
        *acc.get_mut(x).ok_or_else(|| Error::syntax(last, "accepting element out of range"))? = true;
    }
    MonoidRecognizer::new(require(alphabet, last, "alphabet")?, monoid, require(phi, last, "phi")?, acc)
}

/// Multiplication table plus φ and P as aligned text.
pub fn render_monoid(r: &MonoidRecognizer) -> String {
    let names = r.element_names();
    let mut out = r.monoid().render_table(&names);
    for a in 0..r.alphabet().len() {
        let _ = writeln!(out, "phi({}) = {}", r.alphabet().symbol(a), names[r.phi(a)]);
    }
    let acc: Vec<&str> = r.accepting().map(|x| names[x].as_str()).collect();
    let _ = writeln!(out, "P = {{{}}}", acc.join(", "));
    out
}
