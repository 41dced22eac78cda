//! Syntactic monoids.
//!
//! The syntactic monoid of a regular language is computed as the
//! transition monoid of its minimal DFA: the set of state transformations
//! `δ_w`, closed under composition. Recognizers can also be phrased as
//! biactions (a set with commuting left and right actions of words); a
//! biaction reached from the image of ε carries a unique monoid structure,
//! and [`biaction_to_monoid`] recovers it.

use std::collections::HashMap;

use crate::alphabet::{Alphabet, Word};
use crate::dfa::Dfa;
use crate::error::{Error, Result};

/// A finite monoid given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    mult: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteMonoid {
    /// Checks closure, the identity laws and associativity.
    pub fn new(mult: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let m = mult.len();
        if identity >= m {
            return Err(Error::Invariant(format!("identity {identity} out of range")));
        }
        if mult.iter().any(|row| row.len() != m || row.iter().any(|&z| z >= m)) {
            return Err(Error::Invariant("multiplication table is not closed".into()));
        }
        for x in 0..m {
            if mult[identity][x] != x || mult[x][identity] != x {
                return Err(Error::Invariant(format!("identity law fails at {x}")));
            }
        }
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if mult[mult[x][y]][z] != mult[x][mult[y][z]] {
                        return Err(Error::Invariant(format!("not associative at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        Ok(FiniteMonoid { mult, identity })
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mult[x][y]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    /// Elements reachable from the identity by multiplying on the right by
    /// `gens`.
    fn generated_by(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mult[x][g];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// A generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut covered = self.generated_by(&gens);
        for x in 0..self.order() {
            if !covered[x] {
                gens.push(x);
                covered = self.generated_by(&gens);
            }
        }
        gens
    }

    /// Extends `gens[i] ↦ images[i]` to a homomorphism, if consistent.
    fn extend_hom(&self, other: &FiniteMonoid, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![None; self.order()];
        map[self.identity] = Some(other.identity);
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            let fx = map[x].expect("visited");
            for (&g, &h) in gens.iter().zip(images) {
                let (y, fy) = (self.mult[x][g], other.mult[fx][h]);
                match map[y] {
                    None => {
                        map[y] = Some(fy);
                        stack.push(y);
                    }
                    Some(z) if z == fy => {}
                    Some(_) => return None,
                }
            }
        }
        let map: Vec<usize> = map.into_iter().collect::<Option<_>>()?;
        let hom = (0..self.order())
            .all(|x| (0..self.order()).all(|y| map[self.mult[x][y]] == other.mult[map[x]][map[y]]));
        hom.then_some(map)
    }

    /// Brute force over the images of a generating set.
    pub fn is_isomorphic(&self, other: &FiniteMonoid) -> bool {
        if self.order() != other.order() {
            return false;
        }
        let gens = self.generators();
        let m = other.order();
        let mut images = vec![0; gens.len()];
        loop {
            if let Some(map) = self.extend_hom(other, &gens, &images) {
                if is_bijection(&map, m) {
                    return true;
                }
            }
            // Next assignment in lexicographic order.
            let mut i = 0;
            loop {
                if i == images.len() {
                    return false;
                }
                images[i] += 1;
                if images[i] < m {
                    break;
                }
                images[i] = 0;
                i += 1;
            }
        }
    }

    /// The table as aligned text.
    pub fn render_table(&self, names: &[String]) -> String {
        let width = names.iter().map(|n| n.chars().count()).max().unwrap_or(1);
        let mut out = String::new();
        out.push_str(&format!("{:>width$} |", "*"));
        for n in names {
            out.push_str(&format!(" {n:>width$}"));
        }
        out.push('\n');
        out.push_str(&"-".repeat((width + 1) * (names.len() + 1) + 1));
        out.push('\n');
        for (x, row) in self.mult.iter().enumerate() {
            out.push_str(&format!("{:>width$} |", names[x]));
            for &z in row {
                out.push_str(&format!(" {:>width$}", names[z]));
            }
            out.push('\n');
        }
        out
    }
}

fn is_bijection(map: &[usize], m: usize) -> bool {
    let mut hit = vec![false; m];
    map.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
}

/// A monoid with a morphism from words (given on symbols) and an accepting
/// subset. Recognizes `{w : φ(w) ∈ P}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidRecognizer {
    alphabet: Alphabet,
    monoid: FiniteMonoid,
    phi: Vec<usize>,
    accepting: Vec<bool>,
}

impl MonoidRecognizer {
    pub fn new(alphabet: Alphabet, monoid: FiniteMonoid, phi: Vec<usize>, accepting: Vec<bool>) -> Result<Self> {
        if phi.len() != alphabet.len() || phi.iter().any(|&x| x >= monoid.order()) {
            return Err(Error::malformed("φ must send every symbol to an element"));
        }
        if accepting.len() != monoid.order() {
            return Err(Error::malformed("accepting set has the wrong size"));
        }
        Ok(MonoidRecognizer {
            alphabet,
            monoid,
            phi,
            accepting,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn order(&self) -> usize {
        self.monoid.order()
    }

    pub fn phi(&self, a: usize) -> usize {
        self.phi[a]
    }

    pub fn is_accepting(&self, x: usize) -> bool {
        self.accepting[x]
    }

    pub fn accepting(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(|&x| self.accepting[x])
    }

    /// `φ(w)`.
    pub fn eval(&self, word: &[usize]) -> usize {
        word.iter()
            .fold(self.monoid.identity, |x, &a| self.monoid.mul(x, self.phi[a]))
    }

    pub fn recognizes_word(&self, word: &[usize]) -> bool {
        self.accepting[self.eval(word)]
    }

    pub fn recognizes(&self, word: &str) -> Result<bool> {
        Ok(self.recognizes_word(&self.alphabet.parse_word(word)?))
    }

    /// Shortlex-least word for each element reachable from the identity;
    /// `None` for elements outside the image of φ.
    pub fn representatives(&self) -> Vec<Option<Word>> {
        let mut reps: Vec<Option<Word>> = vec![None; self.order()];
        reps[self.monoid.identity] = Some(Vec::new());
        let mut queue = std::collections::VecDeque::from([self.monoid.identity]);
        while let Some(x) = queue.pop_front() {
            for a in 0..self.alphabet.len() {
                let y = self.monoid.mul(x, self.phi[a]);
                if reps[y].is_none() {
                    let mut w = reps[x].clone().expect("visited");
                    w.push(a);
                    reps[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        reps
    }

    /// Element names: representative words, or `#i` for elements outside
    /// the image of φ.
    pub fn element_names(&self) -> Vec<String> {
        self.representatives()
            .into_iter()
            .enumerate()
            .map(|(i, w)| match w {
                Some(w) => self.alphabet.render(&w),
                None => format!("#{i}"),
            })
            .collect()
    }

    /// The DFA on the monoid elements: start at the identity, read `a` by
    /// right multiplication with `φ(a)`, accept in P.
    pub fn to_dfa(&self) -> Dfa {
        let delta = (0..self.order())
            .map(|x| self.phi.iter().map(|&g| self.monoid.mul(x, g)).collect())
            .collect();
        Dfa::new(self.alphabet.clone(), self.monoid.identity, self.accepting(), delta)
            .expect("closed multiplication table")
    }

    /// Isomorphism of recognizers: the bijection is forced by
    /// `φ(a) ↦ φ'(a)` and must preserve the accepting sets.
    pub fn is_isomorphic(&self, other: &MonoidRecognizer) -> bool {
        if self.alphabet != other.alphabet || self.order() != other.order() {
            return false;
        }
        let gens: Vec<usize> = self.phi.clone();
        match self.monoid.extend_hom(&other.monoid, &gens, &other.phi) {
            Some(map) => {
                is_bijection(&map, other.order())
                    && (0..self.order()).all(|x| self.accepting[x] == other.accepting[map[x]])
            }
            None => false,
        }
    }
}

/// The transition monoid of `d`: transformations `δ_w` of the state set,
/// numbered in BFS order over words. `x · y` applies `x` first.
pub fn transition_monoid(d: &Dfa) -> MonoidRecognizer {
    let n = d.n_states();
    let k = d.alphabet().len();
    let id: Vec<usize> = (0..n).collect();
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elems = vec![id];
    let mut head = 0;
    while head < elems.len() {
        for a in 0..k {
            let next: Vec<usize> = elems[head].iter().map(|&q| d.next(q, a)).collect();
            if !ids.contains_key(&next) {
                ids.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
        head += 1;
    }
    let mult = elems
        .iter()
        .map(|x| {
            elems
                .iter()
                .map(|y| ids[&x.iter().map(|&q| y[q]).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    let phi = (0..k)
        .map(|a| ids[&(0..n).map(|q| d.next(q, a)).collect::<Vec<_>>()])
        .collect();
    let accepting = elems.iter().map(|x| d.is_final(x[d.initial()])).collect();
    let monoid = FiniteMonoid::new(mult, 0).expect("transformations form a monoid");
    MonoidRecognizer::new(d.alphabet().clone(), monoid, phi, accepting).expect("well-formed")
}

/// The syntactic monoid of the language of `d`, as the transition monoid
/// of its minimal DFA.
pub fn syntactic_monoid(d: &Dfa) -> MonoidRecognizer {
    transition_monoid(&d.minimize())
}

/// Whether `w` and `w2` are syntactically congruent (`uwv ∈ L ⇔ uw2v ∈ L`
/// for all contexts), decided by `δ_w = δ_w2` on the minimal DFA.
pub fn congruence_oracle(d: &Dfa, w: &[usize], w2: &[usize]) -> bool {
    let m = d.minimize();
    (0..m.n_states()).all(|q| m.run_from(q, w) == m.run_from(q, w2))
}

/// A set with commuting left and right actions of words, a distinguished
/// image of ε and an accepting subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiactionRecognizer {
    alphabet: Alphabet,
    size: usize,
    /// `left[a][x] = a · x`
    left: Vec<Vec<usize>>,
    /// `right[a][x] = x · a`
    right: Vec<Vec<usize>>,
    phi_empty: usize,
    accepting: Vec<bool>,
}

impl BiactionRecognizer {
    /// Checks shapes and that the actions commute on generators:
    /// `(a · x) · b = a · (x · b)`.
    pub fn new(
        alphabet: Alphabet,
        left: Vec<Vec<usize>>,
        right: Vec<Vec<usize>>,
        phi_empty: usize,
        accepting: Vec<bool>,
    ) -> Result<Self> {
        let size = accepting.len();
        let shape_ok = |t: &Vec<Vec<usize>>| {
            t.len() == alphabet.len() && t.iter().all(|r| r.len() == size && r.iter().all(|&x| x < size))
        };
        if !shape_ok(&left) || !shape_ok(&right) || phi_empty >= size {
            return Err(Error::malformed("biaction tables have the wrong shape"));
        }
        for a in 0..alphabet.len() {
            for b in 0..alphabet.len() {
                for x in 0..size {
                    if right[b][left[a][x]] != left[a][right[b][x]] {
                        return Err(Error::Invariant(format!(
                            "left and right actions do not commute at element {x}"
                        )));
                    }
                }
            }
        }
        Ok(BiactionRecognizer {
            alphabet,
            size,
            left,
            right,
            phi_empty,
            accepting,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn phi_empty(&self) -> usize {
        self.phi_empty
    }

    pub fn act_left(&self, word: &[usize], x: usize) -> usize {
        word.iter().rev().fold(x, |x, &a| self.left[a][x])
    }

    pub fn act_right(&self, x: usize, word: &[usize]) -> usize {
        word.iter().fold(x, |x, &a| self.right[a][x])
    }

    /// `φ(w) = φ(ε) · w`.
    pub fn eval(&self, word: &[usize]) -> usize {
        self.act_right(self.phi_empty, word)
    }

    pub fn recognizes_word(&self, word: &[usize]) -> bool {
        self.accepting[self.eval(word)]
    }

    /// For each element, a shortlex-least word `w` with `φ(w)` equal to it.
    fn representatives(&self) -> Vec<Option<Word>> {
        let mut reps: Vec<Option<Word>> = vec![None; self.size];
        reps[self.phi_empty] = Some(Vec::new());
        let mut queue = std::collections::VecDeque::from([self.phi_empty]);
        while let Some(x) = queue.pop_front() {
            for a in 0..self.alphabet.len() {
                let y = self.right[a][x];
                if reps[y].is_none() {
                    let mut w = reps[x].clone().expect("visited");
                    w.push(a);
                    reps[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        reps
    }
}

/// Any monoid recognizer as a biaction on its own carrier: `u · x = φ(u)x`
/// and `x · v = xφ(v)`.
pub fn monoid_to_biaction(r: &MonoidRecognizer) -> BiactionRecognizer {
    let m = &r.monoid;
    let left = r.phi.iter().map(|&g| (0..m.order()).map(|x| m.mul(g, x)).collect()).collect();
    let right = r.phi.iter().map(|&g| (0..m.order()).map(|x| m.mul(x, g)).collect()).collect();
    BiactionRecognizer::new(r.alphabet.clone(), left, right, m.identity, r.accepting.clone())
        .expect("multiplication is associative")
}

/// The monoid structure of a surjective biaction recognizer:
/// `φ(u) · φ(v) = φ(uv)`.
///
/// Fails with a contract violation when `φ` is not surjective, and with
/// an invariant violation when the product is not well defined.
pub fn biaction_to_monoid(b: &BiactionRecognizer) -> Result<MonoidRecognizer> {
    let reps: Vec<Word> = b
        .representatives()
        .into_iter()
        .enumerate()
        .map(|(x, w)| w.ok_or_else(|| Error::Contract(format!("element {x} is not in the image of φ"))))
        .collect::<Result<_>>()?;
    let mut mult = vec![vec![0; b.size]; b.size];
    for x in 0..b.size {
        for y in 0..b.size {
            // φ(uv) computed two ways: x · v and u · y.
            let via_right = b.act_right(x, &reps[y]);
            let via_left = b.act_left(&reps[x], y);
            if via_right != via_left {
                return Err(Error::Invariant(format!(
                    "product of {x} and {y} depends on the representatives"
                )));
            }
            mult[x][y] = via_right;
        }
    }
    let monoid = FiniteMonoid::new(mult, b.phi_empty)?;
    let phi = (0..b.alphabet.len()).map(|a| b.right[a][b.phi_empty]).collect();
    MonoidRecognizer::new(b.alphabet.clone(), monoid, phi, b.accepting.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even_as() -> Dfa {
        Dfa::new(Alphabet::of("a"), 0, [0], vec![vec![1], vec![0]]).unwrap()
    }

    fn ends_with_a() -> Dfa {
        Dfa::new(Alphabet::of("ab"), 0, [1], vec![vec![1, 0], vec![1, 0]]).unwrap()
    }

    fn z2() -> FiniteMonoid {
        FiniteMonoid::new(vec![vec![0, 1], vec![1, 0]], 0).unwrap()
    }

    #[test]
    fn rejects_non_monoids() {
        assert!(FiniteMonoid::new(vec![vec![0, 1], vec![1, 1]], 1).is_err());
        // Left-zero semigroup with an adjoined identity is fine...
        assert!(FiniteMonoid::new(vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]], 0).is_ok());
        // ...but here (1·1)·1 = 1 while 1·(1·1) = 2.
        let bad = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 1, 2]];
        assert!(FiniteMonoid::new(bad, 0).is_err());
    }

    #[test]
    fn transition_monoids_of_small_languages() {
        let all = Dfa::trivial(Alphabet::of("ab"), true);
        assert_eq!(transition_monoid(&all).order(), 1);

        let r = transition_monoid(&even_as());
        assert_eq!(r.order(), 2);
        assert!(r.monoid().is_isomorphic(&z2()));

        let e = transition_monoid(&ends_with_a());
        assert_eq!(e.order(), 3);
        // δ_a and δ_b are constant maps, so they absorb from the left.
        let (a, b) = (e.phi(0), e.phi(1));
        assert_eq!(e.monoid().mul(b, a), a);
        assert_eq!(e.monoid().mul(a, b), b);
        for w in e.alphabet().words_up_to(5) {
            assert_eq!(e.recognizes_word(&w), ends_with_a().accepts_word(&w));
        }
    }

    #[test]
    fn syntactic_monoid_cases() {
        let empty = Dfa::trivial(Alphabet::of("ab"), false);
        assert_eq!(syntactic_monoid(&empty).order(), 1);
        let redundant = Dfa::new(Alphabet::of("a"), 0, [0, 2], vec![vec![1], vec![2], vec![1]]).unwrap();
        let s = syntactic_monoid(&redundant);
        assert_eq!(s.order(), 2);
        let again = syntactic_monoid(&s.to_dfa());
        assert!(again.is_isomorphic(&s));
    }

    #[test]
    fn congruence_cases() {
        let d = even_as();
        assert!(congruence_oracle(&d, &[0, 0], &[0, 0]));
        assert!(congruence_oracle(&d, &[0], &[0, 0, 0]));
        assert!(!congruence_oracle(&d, &[0], &[0, 0]));
    }

    #[test]
    fn biaction_round_trip() {
        let r = transition_monoid(&even_as());
        let b = monoid_to_biaction(&r);
        assert_eq!(b.left, vec![vec![1, 0]]);
        assert_eq!(b.right, vec![vec![1, 0]]);
        let back = biaction_to_monoid(&b).unwrap();
        assert!(back.is_isomorphic(&r));
        for w in r.alphabet().words_up_to(6) {
            assert_eq!(b.recognizes_word(&w), r.recognizes_word(&w));
        }

        let trivial = transition_monoid(&Dfa::trivial(Alphabet::of("a"), true));
        let tb = monoid_to_biaction(&trivial);
        assert_eq!(tb.size(), 1);
        assert_eq!(tb.act_left(&[0], 0), 0);
    }

    #[test]
    fn biaction_on_residue_classes() {
        // Classes of A*/~ for (aa)*: even, odd. Both actions swap.
        let b = BiactionRecognizer::new(Alphabet::of("a"), vec![vec![1, 0]], vec![vec![1, 0]], 0, vec![true, false]).unwrap();
        let m = biaction_to_monoid(&b).unwrap();
        assert!(m.monoid().is_isomorphic(&z2()));
    }

    #[test]
    fn biaction_errors() {
        // Element 2 is never reached from φ(ε).
        let b = BiactionRecognizer::new(
            Alphabet::of("a"),
            vec![vec![1, 0, 2]],
            vec![vec![1, 0, 2]],
            0,
            vec![true, false, false],
        )
        .unwrap();
        assert!(matches!(biaction_to_monoid(&b), Err(Error::Contract(_))));
        // Left acts trivially while right swaps: the product φ(a)φ(ε)
        // computed on the left and on the right disagree.
        let ill = BiactionRecognizer::new(Alphabet::of("a"), vec![vec![0, 1]], vec![vec![1, 0]], 0, vec![true, false]).unwrap();
        assert!(matches!(biaction_to_monoid(&ill), Err(Error::Invariant(_))));
        let noncommuting = BiactionRecognizer::new(
            Alphabet::of("ab"),
            vec![vec![1, 1], vec![0, 1]],
            vec![vec![0, 0], vec![1, 0]],
            0,
            vec![true, false],
        );
        assert!(matches!(noncommuting, Err(Error::Invariant(_))));
    }

    #[test]
    fn generators_and_isomorphism() {
        let e = transition_monoid(&ends_with_a());
        let gens = e.monoid().generators();
        assert_eq!(gens.len(), 2);
        assert!(e.monoid().is_isomorphic(e.monoid()));
        assert!(!e.monoid().is_isomorphic(&z2()));
        let table = e.monoid().render_table(&e.element_names());
        assert_eq!(table.lines().count(), 5);
    }
}
