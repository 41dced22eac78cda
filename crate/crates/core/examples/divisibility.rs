// The shared minimization laws checked on two kinds of automata.

use automin::pipeline::{check_divides, minimize_is_idempotent, reach_obs_commute};
use automin::{Alphabet, Dfa, SubseqTransducer};

fn main() {
    let a = Alphabet::of("a");
    // Length divisible by 3, unrolled into a 6-cycle.
    let big = Dfa::new(a.clone(), 0, [0, 3], (0..6).map(|q| vec![(q + 1) % 6]).collect()).unwrap();
    let small = big.minimize();
    println!("dfa: states {} -> {}", big.n_states(), small.n_states());
    println!("dfa: obs∘reach ≅ reach∘obs: {}", reach_obs_commute(&big));
    println!("dfa: idempotent: {}", minimize_is_idempotent(&big));
    println!("dfa: minimal divides padded: {}", check_divides(&small, &big).unwrap());
    println!("dfa: padded divides minimal: {}", check_divides(&big, &small).unwrap());

    let t = SubseqTransducer::new(
        a.clone(),
        Alphabet::of("y"),
        2,
        Some((0, "")),
        [(0, 0, 1, "y"), (1, 0, 0, "y")],
        [(0, ""), (1, "")],
    )
    .unwrap();
    println!("sst: states {} -> {}", t.n_states(), t.minimize().n_states());
    println!("sst: obs∘reach ≅ reach∘obs: {}", reach_obs_commute(&t));
    println!("sst: minimal divides original: {}", check_divides(&t.minimize(), &t).unwrap());
    let h = t.find_morphism(&t.minimize()).unwrap();
    println!("sst: morphism onto minimal: {:?}", h.map(|h| automin::Morphism::kind(&h)));
}
