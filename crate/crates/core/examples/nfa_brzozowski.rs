// Brzozowski's double-reversal construction against subset construction
// followed by partition refinement.

use automin::{Alphabet, Nfa};

fn main() {
    // Words whose third-to-last letter is `a`.
    let n = Nfa::new(
        Alphabet::of("ab"),
        4,
        [0],
        [3],
        [(0, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 2), (1, 1, 2), (2, 0, 3), (2, 1, 3)],
    )
    .unwrap();

    let det = n.determinize();
    let codet = n.codeterminize();
    let brz = n.brzozowski();
    println!("nfa states:            {}", n.n_states());
    println!("subset construction:   {}", det.n_states());
    println!("codeterminized:        {} (backward deterministic: {})", codet.n_states(), codet.is_backward_deterministic());
    println!("brzozowski:            {}", brz.n_states());
    println!("minimized subset DFA:  {}", det.minimize().n_states());

    assert!(brz.is_isomorphic(&det.minimize()));
    for w in ["abb", "bab", "aaaa", "babba"] {
        assert_eq!(n.accepts(w).unwrap(), brz.accepts(w).unwrap());
        println!("{w:>6}: {}", brz.accepts(w).unwrap());
    }
}
