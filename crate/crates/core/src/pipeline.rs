//! The minimization contract shared by every automaton kind.
//!
//! Each kind supplies `reach` (restrict to what the initial data can
//! reach) and `obs` (quotient by behavioural equivalence). Minimization is
//! `obs ∘ reach`; the two orders agree up to isomorphism, both are
//! idempotent, and the minimal automaton divides every acceptor of the
//! same language. The helpers at the bottom of this module check those
//! facts for any [`Minimizable`] kind.

use crate::error::Result;

/// How a morphism of automata behaves on states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismKind {
    /// Bijective on states.
    Iso,
    /// Surjective on states.
    Epi,
    /// Injective on states.
    Mono,
    General,
}

impl MorphismKind {
    pub fn from_flags(epi: bool, mono: bool) -> Self {
        match (epi, mono) {
            (true, true) => MorphismKind::Iso,
            (true, false) => MorphismKind::Epi,
            (false, true) => MorphismKind::Mono,
            (false, false) => MorphismKind::General,
        }
    }

    pub fn is_epi(self) -> bool {
        matches!(self, MorphismKind::Iso | MorphismKind::Epi)
    }

    pub fn is_mono(self) -> bool {
        matches!(self, MorphismKind::Iso | MorphismKind::Mono)
    }
}

/// Anything that can classify itself as epi/mono.
pub trait Morphism {
    fn kind(&self) -> MorphismKind;
}

/// A morphism between state-based automata, given on the states it is
/// defined on. States outside its domain (unreachable ones) map to `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateMap {
    map: Vec<Option<usize>>,
    target_states: usize,
}

impl StateMap {
    pub fn new(map: Vec<Option<usize>>, target_states: usize) -> Self {
        debug_assert!(map.iter().flatten().all(|&q| q < target_states));
        StateMap { map, target_states }
    }

    pub fn identity(n: usize) -> Self {
        StateMap::new((0..n).map(Some).collect(), n)
    }

    pub fn get(&self, q: usize) -> Option<usize> {
        self.map.get(q).copied().flatten()
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.map
    }

    pub fn source_states(&self) -> usize {
        self.map.len()
    }

    pub fn target_states(&self) -> usize {
        self.target_states
    }

    /// Surjective onto the target states.
    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_states];
        for q in self.map.iter().flatten() {
            hit[*q] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Injective on its domain.
    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target_states];
        for &q in self.map.iter().flatten() {
            if std::mem::replace(&mut hit[q], true) {
                return false;
            }
        }
        true
    }
}

impl Morphism for StateMap {
    fn kind(&self) -> MorphismKind {
        let total = self.map.iter().all(Option::is_some);
        MorphismKind::from_flags(self.is_surjective(), total && self.is_injective())
    }
}

/// The contract each automaton kind implements.
pub trait Minimizable: Sized {
    type Morphism: Morphism;

    /// Restriction to the part reachable from the initial data.
    fn reach(&self) -> Self;

    /// Quotient by behavioural equivalence.
    fn obs(&self) -> Self;

    /// A morphism `self → target`, if one exists.
    fn find_morphism(&self, target: &Self) -> Result<Option<Self::Morphism>>;

    fn is_isomorphic(&self, other: &Self) -> bool;

    fn minimize(&self) -> Self {
        minimize_generic(self)
    }
}

/// `obs(reach(x))`.
pub fn minimize_generic<X: Minimizable>(x: &X) -> X {
    x.reach().obs()
}

/// Whether `small` divides `big`: some sub-automaton of `big` maps onto
/// `small`. Decided by looking for an epi morphism from `reach(big)`.
pub fn check_divides<X: Minimizable>(small: &X, big: &X) -> Result<bool> {
    Ok(big
        .reach()
        .find_morphism(small)?
        .is_some_and(|m| m.kind().is_epi()))
}

/// `obs(reach(x)) ≅ reach(obs(x))`.
pub fn reach_obs_commute<X: Minimizable>(x: &X) -> bool {
    x.reach().obs().is_isomorphic(&x.obs().reach())
}

/// `minimize(minimize(x)) ≅ minimize(x)`.
pub fn minimize_is_idempotent<X: Minimizable>(x: &X) -> bool {
    let m = x.minimize();
    m.minimize().is_isomorphic(&m)
}

/// Deterministic graph view used for canonical numbering and isomorphism
/// search. `label` covers per-state observable data, `succ` the
/// transitions with their edge data.
pub(crate) trait DetGraph {
    type Label: PartialEq;
    type Edge: PartialEq;

    fn n_states(&self) -> usize;
    fn n_symbols(&self) -> usize;
    fn start(&self) -> Option<usize>;
    fn label(&self, q: usize) -> Self::Label;
    fn succ(&self, q: usize, a: usize) -> Option<(usize, Self::Edge)>;
}

/// Canonical state order: BFS from the start state with symbols in
/// declared order, then the remaining states, each unvisited one in
/// original order seeding a further BFS. Returns `order[new] = old`.
pub(crate) fn bfs_order<G: DetGraph>(g: &G) -> Vec<usize> {
    let n = g.n_states();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let roots = g.start().into_iter().chain(0..n);
    for root in roots {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let q = order[head];
            head += 1;
            for a in 0..g.n_symbols() {
                if let Some((p, _)) = g.succ(q, a) {
                    if !seen[p] {
                        seen[p] = true;
                        order.push(p);
                    }
                }
            }
        }
    }
    order
}

/// States reachable from the start, in BFS order.
pub(crate) fn reachable_order<G: DetGraph>(g: &G) -> Vec<usize> {
    let Some(start) = g.start() else {
        return Vec::new();
    };
    let mut seen = vec![false; g.n_states()];
    seen[start] = true;
    let mut order = vec![start];
    let mut head = 0;
    while head < order.len() {
        let q = order[head];
        head += 1;
        for a in 0..g.n_symbols() {
            if let Some((p, _)) = g.succ(q, a) {
                if !seen[p] {
                    seen[p] = true;
                    order.push(p);
                }
            }
        }
    }
    order
}

/// Inverse of a permutation given as `order[new] = old`.
pub(crate) fn invert(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    pos
}

/// Searches for a label- and transition-preserving bijection between two
/// deterministic graphs mapping start to start. The part reachable from the
/// start is forced; the rest is found by backtracking.
pub(crate) fn find_isomorphism<G: DetGraph>(x: &G, y: &G) -> Option<Vec<usize>> {
    let n = x.n_states();
    if n != y.n_states() || x.n_symbols() != y.n_symbols() {
        return None;
    }
    let mut fwd = vec![None; n];
    let mut bwd = vec![None; n];
    match (x.start(), y.start()) {
        (Some(p), Some(q)) => {
            if !bind(x, y, p, q, &mut fwd, &mut bwd) {
                return None;
            }
        }
        (None, None) => {}
        _ => return None,
    }
    if search(x, y, &mut fwd, &mut bwd) {
        Some(fwd.into_iter().map(|q| q.expect("complete")).collect())
    } else {
        None
    }
}

fn search<G: DetGraph>(
    x: &G,
    y: &G,
    fwd: &mut Vec<Option<usize>>,
    bwd: &mut Vec<Option<usize>>,
) -> bool {
    let Some(p) = fwd.iter().position(Option::is_none) else {
        return true;
    };
    for q in 0..y.n_states() {
        if bwd[q].is_some() {
            continue;
        }
        let (mut f, mut b) = (fwd.clone(), bwd.clone());
        if bind(x, y, p, q, &mut f, &mut b) && search(x, y, &mut f, &mut b) {
            *fwd = f;
            *bwd = b;
            return true;
        }
    }
    false
}

/// Adds `p ↦ q` and everything it forces along transitions.
fn bind<G: DetGraph>(
    x: &G,
    y: &G,
    p: usize,
    q: usize,
    fwd: &mut [Option<usize>],
    bwd: &mut [Option<usize>],
) -> bool {
    let mut stack = vec![(p, q)];
    while let Some((p, q)) = stack.pop() {
        match (fwd[p], bwd[q]) {
            (Some(q2), _) if q2 == q => continue,
            (None, None) => {}
            _ => return false,
        }
        if x.label(p) != y.label(q) {
            return false;
        }
        fwd[p] = Some(q);
        bwd[q] = Some(p);
        for a in 0..x.n_symbols() {
            match (x.succ(p, a), y.succ(q, a)) {
                (None, None) => {}
                (Some((p2, e1)), Some((q2, e2))) if e1 == e2 => stack.push((p2, q2)),
                _ => return false,
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn state_map_kinds() {
        assert_eq!(StateMap::identity(3).kind(), MorphismKind::Iso);
        let quotient = StateMap::new(vec![Some(0), Some(1), Some(1)], 2);
        assert_eq!(quotient.kind(), MorphismKind::Epi);
        let inclusion = StateMap::new(vec![Some(0), Some(2)], 3);
        assert_eq!(inclusion.kind(), MorphismKind::Mono);
        let partial = StateMap::new(vec![Some(0), None], 2);
        assert_eq!(partial.kind(), MorphismKind::General);
        assert_eq!(partial.get(1), None);
    }

    struct Cycle {
        n: usize,
        marked: usize,
    }

    impl DetGraph for Cycle {
        type Label = bool;
        type Edge = ();
        fn n_states(&self) -> usize {
            self.n
        }
        fn n_symbols(&self) -> usize {
            1
        }
        fn start(&self) -> Option<usize> {
            None
        }
        fn label(&self, q: usize) -> bool {
            q == self.marked
        }
        fn succ(&self, q: usize, _: usize) -> Option<(usize, ())> {
            Some(((q + 1) % self.n, ()))
        }
    }

    #[test]
    fn isomorphism_search_without_start_state() {
        let x = Cycle { n: 4, marked: 0 };
        let y = Cycle { n: 4, marked: 2 };
        let iso = find_isomorphism(&x, &y).unwrap();
        assert_eq!(iso, vec![2, 3, 0, 1]);
        assert!(find_isomorphism(&x, &Cycle { n: 3, marked: 0 }).is_none());
    }

    #[test]
    fn bfs_order_appends_unvisited_states() {
        let order = bfs_order(&Cycle { n: 3, marked: 0 });
        assert_eq!(order, vec![0, 1, 2]);
        assert_eq!(invert(&[2, 0, 1]), vec![1, 2, 0]);
    }
}
