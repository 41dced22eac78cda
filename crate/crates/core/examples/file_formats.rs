// Parse the text format, print its canonical form and a Graphviz
// rendering.

use automin::formats;

const INPUT: &str = "\
# contains the factor ab
nfa
alphabet a b
states 3
initial 0
final 2
0 a 0
0 b 0
0 a 1
1 b 2
2 a 2
2 b 2
";

fn main() {
    let parsed = formats::parse_with_warnings(INPUT).unwrap();
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    let a = parsed.automaton;
    println!("kind: {}", a.kind());

    let min = a.minimize();
    let text = formats::serialize(&min);
    print!("{text}");
    assert_eq!(formats::serialize(&formats::parse(&text).unwrap()), text);
    print!("{}", formats::to_dot(&min));
}
