// Exact minimization of a weighted automaton over the rationals.

use automin::linalg::format_rational;
use automin::{Alphabet, Wfa};

fn main() {
    // weight(w) = number of a's in w, written with a redundant third
    // coordinate that duplicates the second.
    let w = Wfa::from_integers(
        Alphabet::of("ab"),
        &[1, 0, 0],
        &[
            vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        ],
        &[0, 1, 1],
    )
    .unwrap();

    let m = w.minimize();
    println!("dimension {} -> {}", w.dim(), m.dim());
    for word in ["", "a", "ab", "aba", "aaab"] {
        let (x, y) = (w.weight(word).unwrap(), m.weight(word).unwrap());
        assert_eq!(x, y);
        println!("{word:>5}: {}", format_rational(&y));
    }

    let h = m.find_morphism(&w.forward_reduce().backward_reduce()).unwrap();
    println!("isomorphic to reduction in the other order: {}", h.is_some());
    assert!(w.equivalent(&m).unwrap());
}
