//! Decide whether a finitely based permutation class contains infinitely many
//! simple permutations.
//!
//! The decision combines three direct checks (parallel alternations and the
//! two kinds of wedge simple permutations) with a regular-language argument
//! over pin words: the strict pin words whose permutations lie in `Av(B)` form
//! a regular language, built here by applying a fixed transducer to the pin
//! words of each basis element and complementing the union, and the class has
//! arbitrarily long proper pin sequences exactly when that language is
//! infinite.
//!
//! Modules:
//! - [`perm`]: permutations, containment, simplicity, symmetries, classes.
//! - [`pin`]: pin words, their point realizations, and the `⪯` order.
//! - [`automata`]: NFAs, DFAs and transducers over the pin alphabet.
//! - [`decision`]: the decision procedure and its report.
//! - [`oscillation`]: oscillations, alternations and the rank encoding.
//! - [`oracle`]: brute-force ground truth used to validate everything else.

pub mod automata;
pub mod decision;
pub mod error;
pub mod oracle;
pub mod oscillation;
pub mod perm;
pub mod pin;

pub use error::{Error, PinWordError, Result};
pub use perm::{Basis, Permutation, Symmetry};
pub use pin::{PinLetter, PinWord};

/// Size limits shared by the exhaustive routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Longest length accepted by class enumeration.
    pub class_length: usize,
    /// Longest permutation whose pin words are enumerated.
    pub pin_word_length: usize,
    /// Longest permutation searched for oscillations.
    pub oscillation_length: usize,
    /// Longest pin words enumerated by the pin class census.
    pub census_length: usize,
    /// Maximum number of subset states produced by determinization.
    pub state_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            class_length: 10,
            pin_word_length: 10,
            oscillation_length: 14,
            census_length: 8,
            state_cap: 2_000_000,
        }
    }
}
