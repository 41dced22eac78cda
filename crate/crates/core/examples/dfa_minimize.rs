// Minimize a DFA for "number of a's is even" that was built with a
// redundant copy of each state and an unreachable state.

use automin::{Alphabet, Dfa, Morphism};

fn main() {
    let ab = Alphabet::of("ab");
    // 0,2: even; 1,3: odd; 4 unreachable.
    let d = Dfa::new(
        ab,
        0,
        [0, 2],
        vec![vec![1, 2], vec![2, 3], vec![3, 0], vec![0, 1], vec![4, 4]],
    )
    .unwrap();

    let reach = d.reach();
    let m = d.minimize();
    println!("states: {} -> reach {} -> minimal {}", d.n_states(), reach.n_states(), m.n_states());

    for w in ["", "a", "aa", "abab", "baaab"] {
        println!("{w:>6}: {}", m.accepts(w).unwrap());
    }

    let h = reach.find_morphism(&m).unwrap().expect("minimal DFA is a quotient");
    println!("reach -> minimal: {:?} ({:?})", h.as_slice(), h.kind());
    assert!(h.kind().is_epi());
    assert!(d.equivalent(&m).unwrap());
}
