//! Minimization of finite automata, weighted automata and subsequential
//! transducers behind one `reach`/`obs`/`minimize` interface, plus
//! syntactic monoids and a plain-text file format.
//!
//! ```
//! use automin::{Alphabet, Dfa};
//!
//! let d = Dfa::new(Alphabet::of("a"), 0, [0, 2], vec![vec![1], vec![2], vec![3], vec![0]]).unwrap();
//! assert_eq!(d.minimize().n_states(), 2);
//! ```

pub mod alphabet;
pub mod cli;
pub mod dfa;
pub mod error;
pub mod formats;
pub mod linalg;
pub mod monoid;
pub mod nfa;
pub mod pipeline;
pub mod transducer;
pub mod wfa;

pub use alphabet::{Alphabet, Word, EPSILON};
pub use dfa::Dfa;
pub use error::{Error, Result};
pub use formats::Automaton;
pub use linalg::Rational;
pub use monoid::{BiactionRecognizer, FiniteMonoid, MonoidRecognizer};
pub use nfa::Nfa;
pub use pipeline::{Minimizable, Morphism, MorphismKind, StateMap};
pub use transducer::{KleisliMap, PartialOutputMap, SubseqTransducer, TransducerMorphism};
pub use wfa::{LinearMap, Wfa};
