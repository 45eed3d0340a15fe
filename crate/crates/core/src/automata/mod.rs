//! Finite automata over the pin alphabet `{1,2,3,4,L,R,U,D}`.
//!
//! [`Nfa`] allows ε-moves and is the working format for unions, products and
//! transducer images; [`Dfa`] is complete and supports complement,
//! minimization and word counting.

mod dfa;
mod nfa;
mod transducer;

pub use dfa::Dfa;
pub use nfa::{Label, Nfa};
pub use transducer::{apply_transducer, Arc, Transducer};

use crate::error::Result;
use crate::pin::PinLetter;

pub type StateId = usize;

pub const ALPHABET_SIZE: usize = 8;

/// `eps` for ε, otherwise the letter.
pub fn label_text(label: Label) -> String {
    match label {
        None => "eps".to_string(),
        Some(l) => l.to_string(),
    }
}

pub fn union(a: &Nfa, b: &Nfa) -> Nfa {
    a.union(b)
}

pub fn intersect(a: &Nfa, b: &Nfa) -> Nfa {
    a.intersect(b)
}

pub fn determinize(a: &Nfa, state_cap: usize) -> Result<Dfa> {
    a.determinize(state_cap)
}

/// The words of `universe` not accepted by `a`, minimized.
pub fn complement_within(a: &Nfa, universe: &Dfa, state_cap: usize) -> Result<Dfa> {
    let det = a.determinize(state_cap)?.minimize();
    Ok(universe.intersect(&det.complement()).minimize())
}

pub fn trim(a: &Nfa) -> Nfa {
    a.trim()
}

pub fn is_empty(a: &Nfa) -> bool {
    a.is_empty()
}

pub fn is_infinite(a: &Nfa) -> bool {
    a.is_infinite()
}

pub fn count_words(a: &Dfa, n: usize) -> u128 {
    a.count_words(n)
}

const START: StateId = 0;
// the next direction must be vertical
const V: StateId = 1;
// the next direction must be horizontal
const H: StateId = 2;

/// Three-state machine for strict pin words: a numeral moves to either
/// `V` or `H`, a horizontal direction moves `H` to `V` and a vertical one
/// moves `V` to `H`. Nondeterministic on the first letter.
pub fn strict_pin_word_nfa() -> Nfa {
    let mut transitions = Vec::new();
    for q in PinLetter::NUMERALS {
        transitions.push((START, Some(q), V));
        transitions.push((START, Some(q), H));
    }
    for d in PinLetter::DIRECTIONS {
        if d.is_horizontal() {
            transitions.push((H, Some(d), V));
        } else {
            transitions.push((V, Some(d), H));
        }
    }
    Nfa::new(3, START, [V, H], transitions)
}

/// The minimal complete machine for strict pin words (five states,
/// including the sink).
pub fn strict_pin_word_automaton() -> Dfa {
    strict_pin_word_nfa()
        .determinize(usize::MAX)
        .expect("no cap")
        .minimize()
}
