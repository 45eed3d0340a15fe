use std::fmt::Write as _;

use crate::automata::nfa::{Label, Nfa};
use crate::automata::{label_text, StateId};
use crate::pin::PinLetter;

/// One move: read `input` (or nothing), write `output` (or nothing).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub from: StateId,
    pub input: Label,
    pub output: Label,
    pub to: StateId,
}

/// A finite transducer over the pin alphabet.
#[derive(Clone, Debug)]
pub struct Transducer {
    names: Vec<String>,
    initial: StateId,
    accepting: Vec<bool>,
    arcs: Vec<Arc>,
}

impl Transducer {
    /// Panics if a state index is out of range.
    pub fn new(names: Vec<String>, initial: StateId, accepting: &[StateId], arcs: Vec<Arc>) -> Transducer {
        let n = names.len();
        assert!(initial < n, "initial state out of range");
        assert!(
            arcs.iter().all(|a| a.from < n && a.to < n),
            "arc endpoint out of range"
        );
        let mut acc = vec![false; n];
        for &s in accepting {
            acc[s] = true;
        }
        Transducer {
            names,
            initial,
            accepting: acc,
            arcs,
        }
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_accepting(&self, s: StateId) -> bool {
        self.accepting[s]
    }

    pub fn name(&self, s: StateId) -> &str {
        &self.names[s]
    }

    pub fn state(&self, name: &str) -> Option<StateId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// `from TAB input/output TAB to` per line, states by name.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "initial\t{}", self.names[self.initial]).unwrap();
        let acc: Vec<&str> = (0..self.num_states())
            .filter(|&s| self.accepting[s])
            .map(|s| self.names[s].as_str())
            .collect();
        writeln!(out, "accepting\t{}", acc.join(" ")).unwrap();
        for a in &self.arcs {
            writeln!(
                out,
                "{}\t{}/{}\t{}",
                self.names[a.from],
                label_text(a.input),
                label_text(a.output),
                self.names[a.to]
            )
            .unwrap();
        }
        out
    }
}

/// A machine for the set of outputs of `t` on input `u`.
///
/// States are pairs (position in `u`, state of `t`); an arc reading a letter
/// advances the position when it matches the next letter of `u`, an ε-input
/// arc keeps it. Accepting pairs have consumed all of `u`.
pub fn apply_transducer(t: &Transducer, u: &[PinLetter]) -> Nfa {
    let k = t.num_states();
    let id = |i: usize, s: StateId| i * k + s;
    let mut transitions = Vec::new();
    for i in 0..=u.len() {
        for a in &t.arcs {
            match a.input {
                None => transitions.push((id(i, a.from), a.output, id(i, a.to))),
                Some(l) if i < u.len() && u[i] == l => {
                    transitions.push((id(i, a.from), a.output, id(i + 1, a.to)))
                }
                Some(_) => {}
            }
        }
    }
    let accepting = (0..k).filter(|&s| t.accepting[s]).map(|s| id(u.len(), s));
    Nfa::new((u.len() + 1) * k, id(0, t.initial), accepting, transitions).trim()
}
