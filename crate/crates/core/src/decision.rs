//! The decision procedure.
//!
//! `Av(B)` contains infinitely many simple permutations exactly when it
//! contains arbitrarily long parallel alternations, wedge simple permutations
//! of type 1 or 2, or proper pin sequences. The first three reduce to
//! membership checks against fixed classes and their symmetries. The last is
//! decided by building the regular language of strict pin words whose
//! permutations avoid `B` and testing it for infiniteness.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automata::{
    apply_transducer, strict_pin_word_automaton, strict_pin_word_nfa, Arc, Dfa, Nfa, Transducer,
};
use crate::error::{Error, Result};
use crate::perm::{avoids_all, Basis, Permutation, Symmetry};
use crate::pin::{pin_words_of_with, preceq, PinLetter, PinWord};
use crate::Limits;

const PARALLEL: [&str; 3] = ["123", "2413", "3412"];
const WEDGE1: [&str; 10] = [
    "1243", "1324", "1423", "1432", "2431", "3124", "4123", "4132", "4231", "4312",
];
const WEDGE2: [&str; 10] = [
    "2134", "2143", "3124", "3142", "3241", "3412", "4123", "4132", "4231", "4312",
];

/// One symmetric image of a fixed class, with the symmetry producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variant {
    pub symmetry: Symmetry,
    pub basis: Basis,
}

/// The three fixed classes and their distinct symmetric images.
#[derive(Clone, Debug)]
pub struct FixedClassTable {
    pub parallel: Vec<Variant>,
    pub wedge1: Vec<Variant>,
    pub wedge2: Vec<Variant>,
}

fn variants(list: &[&str]) -> Vec<Variant> {
    let base = Basis::new(list.iter().map(|s| s.parse::<Permutation>().unwrap()));
    let mut out: Vec<Variant> = Vec::new();
    for s in Symmetry::ALL {
        let basis = base.apply_symmetry(s);
        if !out.iter().any(|v| v.basis == basis) {
            out.push(Variant { symmetry: s, basis });
        }
    }
    out
}

impl FixedClassTable {
    pub fn new() -> Self {
        FixedClassTable {
            parallel: variants(&PARALLEL),
            wedge1: variants(&WEDGE1),
            wedge2: variants(&WEDGE2),
        }
    }
}

impl Default for FixedClassTable {
    fn default() -> Self {
        FixedClassTable::new()
    }
}

/// `Av(B)` meets each variant in finitely many elements of the relevant
/// family unless it contains the whole variant class, which happens exactly
/// when no element of `B` lies in the variant. Returns that variant if any.
fn first_contained_variant<'a>(basis: &Basis, table: &'a [Variant]) -> Option<&'a Variant> {
    table
        .iter()
        .find(|v| !basis.elements().iter().any(|b| avoids_all(b, &v.basis)))
}

/// Whether `Av(B)` contains only finitely many parallel alternations; if
/// not, the variant of `Av(123, 2413, 3412)` contained in `Av(B)`.
pub fn finitely_many_parallel_alternations(basis: &Basis) -> (bool, Option<Variant>) {
    let table = variants(&PARALLEL);
    let w = first_contained_variant(basis, &table).cloned();
    (w.is_none(), w)
}

pub fn finitely_many_wedge_type1(basis: &Basis) -> (bool, Option<Variant>) {
    let table = variants(&WEDGE1);
    let w = first_contained_variant(basis, &table).cloned();
    (w.is_none(), w)
}

pub fn finitely_many_wedge_type2(basis: &Basis) -> (bool, Option<Variant>) {
    let table = variants(&WEDGE2);
    let w = first_contained_variant(basis, &table).cloned();
    (w.is_none(), w)
}

// Start S, fabrication states F1..F4, copy states C1..C4. Each line is
// `from in/out to`, `e` for no input. Fabrication states write directions
// without reading; copy states copy directions. Moving to a state of
// quadrant k writes a direction that places the new point in quadrant k.
const PIN_TRANSDUCER: &str = "
S 1/1 C1   S 2/2 C2   S 3/3 C3   S 4/4 C4
S e/1 F1   S e/2 F2   S e/3 F3   S e/4 F4

F1 e/R F1  F1 e/U F1  F2 e/L F2  F2 e/U F2
F3 e/L F3  F3 e/D F3  F4 e/R F4  F4 e/D F4
F1 e/L F2  F2 e/D F3  F3 e/R F4  F4 e/U F1
F1 e/D F4  F4 e/L F3  F3 e/U F2  F2 e/R F1

C1 R/R C1  C1 U/U C1  C2 L/L C2  C2 U/U C2
C3 L/L C3  C3 D/D C3  C4 R/R C4  C4 D/D C4
C1 L/L C2  C2 D/D C3  C3 R/R C4  C4 U/U C1
C1 D/D C4  C4 L/L C3  C3 U/U C2  C2 R/R C1

F1 1/R C1  F1 1/U C1  F2 2/L C2  F2 2/U C2
F3 3/L C3  F3 3/D C3  F4 4/R C4  F4 4/D C4
F1 2/L C2  F1 4/D C4  F2 1/R C1  F2 3/D C3
F3 2/U C2  F3 4/R C4  F4 1/U C1  F4 3/L C3

C1 e/R F1  C1 e/U F1  C2 e/L F2  C2 e/U F2
C3 e/L F3  C3 e/D F3  C4 e/R F4  C4 e/D F4
C2 e/R F1  C4 e/U F1  C1 e/L F2  C3 e/U F2
C2 e/D F3  C4 e/L F3  C1 e/D F4  C3 e/R F4
";

/// The transducer producing, from a pin word `u`, strict pin words `w`
/// with `u ⪯ w` (together with some non-words, removed by intersecting with
/// the strict words).
pub fn pin_transducer() -> Transducer {
    let names: Vec<String> = ["S", "F1", "F2", "F3", "F4", "C1", "C2", "C3", "C4"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let state = |n: &str| names.iter().position(|x| x == n).unwrap();
    let label = |t: &str| match t {
        "e" => None,
        _ => Some(PinLetter::from_char(t.chars().next().unwrap()).unwrap()),
    };
    let tokens: Vec<&str> = PIN_TRANSDUCER.split_whitespace().collect();
    let arcs = tokens
        .chunks(3)
        .map(|c| {
            let (input, output) = c[1].split_once('/').unwrap();
            Arc {
                from: state(c[0]),
                input: label(input),
                output: label(output),
                to: state(c[2]),
            }
        })
        .collect();
    let accepting: Vec<usize> = (1..9).collect();
    Transducer::new(names, 0, &accepting, arcs)
}

/// How the pin-word language is assembled.
#[derive(Clone, Debug, Default)]
pub struct DecideOptions {
    pub limits: Limits,
    /// Feed only the `⪯`-minimal pin words of the basis to the transducer.
    pub minimal_pins: bool,
}

/// The pin words of the basis elements, one list per element.
fn basis_pin_words(basis: &Basis, limits: &Limits) -> Result<Vec<Vec<PinWord>>> {
    basis
        .elements()
        .par_iter()
        .map(|b| Ok(pin_words_of_with(b, limits)?.into_iter().collect()))
        .collect()
}

/// Drops every word lying above another word of the list.
fn preceq_minimal(words: Vec<PinWord>) -> Vec<PinWord> {
    words
        .iter()
        .enumerate()
        .filter(|&(i, w)| {
            !words
                .iter()
                .enumerate()
                .any(|(j, u)| j != i && preceq(u, w) && !(preceq(w, u) && j > i))
        })
        .map(|(_, w)| w.clone())
        .collect()
}

fn transducer_inputs(basis: &Basis, opts: &DecideOptions) -> Result<(Vec<usize>, Vec<PinWord>)> {
    let per_element = basis_pin_words(basis, &opts.limits)?;
    let counts = per_element.iter().map(Vec::len).collect();
    let all: Vec<PinWord> = per_element.into_iter().flatten().collect();
    let words = if opts.minimal_pins { preceq_minimal(all) } else { all };
    Ok((counts, words))
}

/// Strict pin words lying above some pin word of some element of `B`.
pub fn bad_pin_language(basis: &Basis) -> Result<Nfa> {
    bad_pin_language_with(basis, &DecideOptions::default())
}

pub fn bad_pin_language_with(basis: &Basis, opts: &DecideOptions) -> Result<Nfa> {
    let (_, words) = transducer_inputs(basis, opts)?;
    let t = pin_transducer();
    let images: Vec<Nfa> = words
        .par_iter()
        .map(|u| apply_transducer(&t, u.letters()))
        .collect();
    Ok(Nfa::union_all(&images).intersect(&strict_pin_word_nfa()).trim())
}

/// Sizes recorded while building the pin-word language.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PinLanguageStats {
    /// Number of pin words of each basis element, in basis order.
    pub pin_words: Vec<(Permutation, usize)>,
    /// Number of words fed to the transducer.
    pub transducer_inputs: usize,
    /// Largest minimized machine for a single transducer image.
    pub largest_image_states: usize,
    /// Minimal machine for the union of the images.
    pub bad_language_states: usize,
    /// Minimal machine for the strict pin words of `Av(B)`.
    pub pin_language_states: usize,
}

/// The minimal machine for the strict pin words of `Av(B)`.
pub fn pin_language(basis: &Basis) -> Result<Dfa> {
    Ok(pin_language_with(basis, &DecideOptions::default())?.0)
}

/// Each transducer image is determinized and minimized on its own, then the
/// images are merged pairwise by product, minimizing after every merge. This
/// accepts the same words as complementing [`bad_pin_language`] directly but
/// keeps the intermediate machines small.
pub fn pin_language_with(basis: &Basis, opts: &DecideOptions) -> Result<(Dfa, PinLanguageStats)> {
    let cap = opts.limits.state_cap;
    let (counts, words) = transducer_inputs(basis, opts)?;
    let strict = strict_pin_word_automaton();
    let t = pin_transducer();
    let images: Vec<Dfa> = words
        .par_iter()
        .map(|u| {
            let nfa = apply_transducer(&t, u.letters());
            Ok(nfa.determinize(cap)?.intersect(&strict).minimize())
        })
        .collect::<Result<_>>()?;
    let largest = images.iter().map(Dfa::num_states).max().unwrap_or(0);
    let bad = images
        .into_par_iter()
        .map(Ok::<Dfa, Error>)
        .try_reduce_with(|a, b| {
            let merged = a.product(&b, |x, y| x || y).minimize();
            if merged.num_states() > cap {
                return Err(Error::CapExceeded {
                    what: "union automaton state",
                    requested: merged.num_states(),
                    cap,
                });
            }
            Ok(merged)
        })
        .transpose()?;
    let (bad_states, language) = match bad {
        Some(bad) => (bad.num_states(), strict.intersect(&bad.complement()).minimize()),
        None => (0, strict.clone()),
    };
    let stats = PinLanguageStats {
        pin_words: basis.elements().iter().cloned().zip(counts).collect(),
        transducer_inputs: words.len(),
        largest_image_states: largest,
        bad_language_states: bad_states,
        pin_language_states: language.num_states(),
    };
    Ok((language, stats))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Finite,
    Infinite,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Finite => "finite",
            Verdict::Infinite => "infinite",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mechanism {
    ParallelAlternations,
    WedgeType1,
    WedgeType2,
    PinSequences,
}

impl Mechanism {
    pub const ALL: [Mechanism; 4] = [
        Mechanism::ParallelAlternations,
        Mechanism::WedgeType1,
        Mechanism::WedgeType2,
        Mechanism::PinSequences,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Mechanism::ParallelAlternations => "parallel alternations",
            Mechanism::WedgeType1 => "wedge simple permutations of type 1",
            Mechanism::WedgeType2 => "wedge simple permutations of type 2",
            Mechanism::PinSequences => "proper pin sequences",
        }
    }
}

/// Outcome of one mechanism. `present` is `None` when the stage was skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MechanismResult {
    pub mechanism: Mechanism,
    /// Whether `Av(B)` has arbitrarily long members of this family.
    pub present: Option<bool>,
    /// Symmetry and basis of the fixed class variant contained in `Av(B)`.
    pub witness: Option<String>,
    /// Why the stage was skipped.
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionStats {
    pub pin_language: Option<PinLanguageStats>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Verdict, per-mechanism outcomes and automaton statistics.
///
/// The verdict is finite exactly when no mechanism is present; it is `None`
/// only in the partial report attached to a failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionReport {
    pub basis: Basis,
    pub verdict: Option<Verdict>,
    pub empty_class: bool,
    pub mechanisms: Vec<MechanismResult>,
    pub stats: DecisionStats,
    /// The pin-word language, when it was built.
    #[serde(skip)]
    pub pin_language: Option<Dfa>,
}

impl DecisionReport {
    /// `finite`, `finite (empty class)`, `infinite (parallel alternations)`...
    pub fn summary(&self) -> String {
        match self.verdict {
            None => "undecided".to_string(),
            Some(Verdict::Finite) if self.empty_class => "finite (empty class)".to_string(),
            Some(Verdict::Finite) => "finite".to_string(),
            Some(Verdict::Infinite) => {
                let m = self
                    .mechanisms
                    .iter()
                    .find(|m| m.present == Some(true))
                    .expect("an infinite verdict names a mechanism");
                format!("infinite ({})", m.mechanism.label())
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The structured text form: `key: value` lines, nested by two spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = self.verdict.map_or("undecided".to_string(), |v| v.to_string());
        out.push_str(&format!("basis: {}\n", self.basis));
        out.push_str(&format!("verdict: {verdict}\n"));
        out.push_str(&format!("summary: {}\n", self.summary()));
        out.push_str(&format!("empty_class: {}\n", self.empty_class));
        out.push_str("mechanisms:\n");
        for m in &self.mechanisms {
            let state = match (m.present, &m.skipped) {
                (Some(true), _) => "present".to_string(),
                (Some(false), _) => "absent".to_string(),
                (None, Some(why)) => format!("skipped ({why})"),
                (None, None) => "skipped".to_string(),
            };
            out.push_str(&format!("  {}: {state}\n", m.mechanism.label()));
            if let Some(w) = &m.witness {
                out.push_str(&format!("    witness: {w}\n"));
            }
        }
        out.push_str("stats:\n");
        match &self.stats.pin_language {
            None => out.push_str("  pin_language: not built\n"),
            Some(s) => {
                for (p, n) in &s.pin_words {
                    out.push_str(&format!("  pin_words[{p}]: {n}\n"));
                }
                out.push_str(&format!("  transducer_inputs: {}\n", s.transducer_inputs));
                out.push_str(&format!("  largest_image_states: {}\n", s.largest_image_states));
                out.push_str(&format!("  bad_language_states: {}\n", s.bad_language_states));
                out.push_str(&format!("  pin_language_states: {}\n", s.pin_language_states));
            }
        }
        out
    }
}

/// A failure together with everything decided before it.
#[derive(Debug, Clone)]
pub struct DecisionError {
    pub error: Error,
    pub partial: DecisionReport,
}

impl fmt::Display for DecisionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.error.fmt(f)
    }
}

impl std::error::Error for DecisionError {}

pub fn decide(basis: &Basis) -> std::result::Result<DecisionReport, Box<DecisionError>> {
    decide_with(basis, &DecideOptions::default())
}

/// Runs the mechanisms in the fixed order parallel, wedge 1, wedge 2, pins.
/// The pin stage is skipped when the class is empty or an earlier mechanism
/// is already present.
pub fn decide_with(
    basis: &Basis,
    opts: &DecideOptions,
) -> std::result::Result<DecisionReport, Box<DecisionError>> {
    let start = Instant::now();
    let table = FixedClassTable::new();
    let mut mechanisms = Vec::new();
    for (mechanism, variants) in [
        (Mechanism::ParallelAlternations, &table.parallel),
        (Mechanism::WedgeType1, &table.wedge1),
        (Mechanism::WedgeType2, &table.wedge2),
    ] {
        let w = first_contained_variant(basis, variants);
        mechanisms.push(MechanismResult {
            mechanism,
            present: Some(w.is_some()),
            witness: w.map(|v| format!("{} of Av{}", v.symmetry, v.basis)),
            skipped: None,
        });
    }
    let empty_class = basis.class_is_empty();
    let easy_present = mechanisms.iter().any(|m| m.present == Some(true));
    let mut report = DecisionReport {
        basis: basis.clone(),
        verdict: None,
        empty_class,
        mechanisms,
        stats: DecisionStats::default(),
        pin_language: None,
    };
    let skip = if empty_class {
        Some("empty class")
    } else if easy_present {
        Some("already infinite")
    } else {
        None
    };
    let pins = match skip {
        Some(why) => MechanismResult {
            mechanism: Mechanism::PinSequences,
            present: None,
            witness: None,
            skipped: Some(why.to_string()),
        },
        None => match pin_language_with(basis, opts) {
            Ok((language, stats)) => {
                let present = language.is_infinite();
                report.stats.pin_language = Some(stats);
                report.pin_language = Some(language);
                MechanismResult {
                    mechanism: Mechanism::PinSequences,
                    present: Some(present),
                    witness: None,
                    skipped: None,
                }
            }
            Err(error) => {
                report.mechanisms.push(MechanismResult {
                    mechanism: Mechanism::PinSequences,
                    present: None,
                    witness: None,
                    skipped: Some(error.to_string()),
                });
                report.stats.elapsed = start.elapsed();
                return Err(Box::new(DecisionError {
                    error,
                    partial: report,
                }));
            }
        },
    };
    report.mechanisms.push(pins);
    let infinite = report.mechanisms.iter().any(|m| m.present == Some(true));
    report.verdict = Some(if infinite { Verdict::Infinite } else { Verdict::Finite });
    report.stats.elapsed = start.elapsed();
    Ok(report)
}
