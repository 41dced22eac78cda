// Output pushing and state merging for a subsequential transducer.

use automin::{Alphabet, SubseqTransducer};

fn main() {
    // Copies a's and drops b's, but delays output: each state emits the
    // pending `x` only later, and states 1 and 2 behave identically.
    let t = SubseqTransducer::new(
        Alphabet::of("ab"),
        Alphabet::of("x"),
        3,
        Some((0, "")),
        [(0, 0, 1, ""), (0, 1, 0, ""), (1, 0, 2, "x"), (1, 1, 1, ""), (2, 0, 2, "x"), (2, 1, 2, "")],
        [(0, ""), (1, "x"), (2, "x")],
    )
    .unwrap();

    println!("state prefixes before pushing: {:?}", t.trim().state_lcp().unwrap());
    let pushed = t.normalize();
    println!("state prefixes after pushing:  {:?}", pushed.state_lcp().unwrap());

    let m = t.minimize();
    println!("states {} -> {}", t.n_states(), m.n_states());
    for w in ["", "a", "ab", "aba", "bbaab"] {
        let out = m.apply(w).unwrap();
        assert_eq!(out, t.apply(w).unwrap());
        println!("{w:>6} -> {:?}", out);
    }
    assert!(t.equivalent(&m).unwrap());
}
