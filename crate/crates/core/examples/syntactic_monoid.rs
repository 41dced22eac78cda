// Syntactic monoid of (ab)*, its multiplication table and the
// equivalent biaction recognizer.

use automin::formats;
use automin::monoid::{biaction_to_monoid, congruence_oracle, monoid_to_biaction, syntactic_monoid};
use automin::{Alphabet, Dfa};

fn main() {
    let ab = Alphabet::of("ab");
    let d = Dfa::new(ab.clone(), 0, [0], vec![vec![1, 2], vec![2, 0], vec![2, 2]]).unwrap();

    let r = syntactic_monoid(&d);
    println!("order {}", r.order());
    print!("{}", formats::render_monoid(&r));

    let aba = ab.parse_word("aba").unwrap();
    let a = ab.parse_word("a").unwrap();
    println!("aba ~ a: {}", congruence_oracle(&d, &aba, &a));

    let b = monoid_to_biaction(&r);
    let back = biaction_to_monoid(&b).unwrap();
    assert!(back.is_isomorphic(&r));
    for w in ["", "ab", "abab", "ba", "aab"] {
        let word = ab.parse_word(w).unwrap();
        assert_eq!(b.recognizes_word(&word), d.accepts_word(&word));
    }
}
