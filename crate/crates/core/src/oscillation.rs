//! Oscillations, alternations and the rank encoding.
//!
//! The increasing oscillating sequence is `4,1,6,3,8,5,...,2k+2,2k-1,...`.
//! An increasing oscillation is a simple permutation contained in it, and a
//! decreasing oscillation is the reverse of one.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{contains, is_simple, Basis, Permutation};
use crate::Limits;

/// The first `n` terms of the increasing oscillating sequence.
pub fn inc_osc_prefix(n: usize) -> Vec<u32> {
    (1..=n as u32)
        .map(|i| if i % 2 == 1 { i + 3 } else { i - 1 })
        .collect()
}

/// `d_i` is the number of entries after position `i` that are smaller.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankEncoding {
    pub digits: Vec<u8>,
}

impl RankEncoding {
    pub fn of(p: &Permutation) -> RankEncoding {
        let e = p.entries();
        let digits = (0..e.len())
            .map(|i| e[i + 1..].iter().filter(|&&x| x < e[i]).count() as u8)
            .collect();
        RankEncoding { digits }
    }

    /// The permutation with this encoding, or `None` if some `d_i` exceeds
    /// the number of later positions.
    pub fn to_permutation(&self) -> Option<Permutation> {
        let n = self.digits.len();
        let mut remaining: Vec<u8> = (1..=n as u8).collect();
        let mut entries = Vec::with_capacity(n);
        for &d in &self.digits {
            if d as usize >= remaining.len() {
                return None;
            }
            entries.push(remaining.remove(d as usize));
        }
        Some(Permutation::new(entries).expect("a rearrangement of 1..n"))
    }

    /// Digits in `{0,1,2}`, no final `1`, `2` or `20`, and no factor `21`,
    /// `22`, `111`, `112`, `2011` or `2012`. Every member of
    /// `Av(321, 2341, 3412, 4123)` satisfies these rules.
    pub fn satisfies_oscillation_rules(&self) -> bool {
        let d = &self.digits;
        if d.iter().any(|&x| x > 2) || d.ends_with(&[1]) || d.ends_with(&[2]) || d.ends_with(&[2, 0]) {
            return false;
        }
        const FORBIDDEN: [&[u8]; 6] = [&[2, 1], &[2, 2], &[1, 1, 1], &[1, 1, 2], &[2, 0, 1, 1], &[2, 0, 1, 2]];
        !FORBIDDEN.iter().any(|f| d.windows(f.len()).any(|w| w == *f))
    }
}

impl fmt::Display for RankEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.iter().all(|&d| d < 10) {
            self.digits.iter().try_for_each(|d| write!(f, "{d}"))
        } else {
            let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

pub fn rank_encoding(p: &Permutation) -> RankEncoding {
    RankEncoding::of(p)
}

/// The basis of the permutations contained in the increasing oscillating
/// sequence.
pub fn oscillation_class_basis() -> Basis {
    Basis::parse("321 2341 3412 4123").unwrap()
}

/// Why a permutation could not be embedded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedError {
    /// The permutation contains this element of `{321, 2341, 3412, 4123}`.
    Contains(Permutation),
}

impl fmt::Display for EmbedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbedError::Contains(b) => write!(f, "contains {b}"),
        }
    }
}

impl std::error::Error for EmbedError {}

/// Positions (counting from 1) of entries of the increasing oscillating
/// sequence forming a copy of `p`, or the element of
/// `{321, 2341, 3412, 4123}` that `p` contains.
///
/// Entries are placed left to right. The preferred place for entry `i`
/// follows the rank encoding: the next even value of the sequence when
/// `d_i >= 1`; when `d_i = 0`, the next odd value if the encoding so far ends
/// in `20`, `110` or `2010` and the second next odd value otherwise. That rule
/// alone is not always right (it misplaces the last entry of `312`, encoded
/// `200`), so each step falls back to the next few positions, backtracking
/// whenever the entries placed so far stop being order isomorphic to the
/// corresponding prefix of `p`.
pub fn embed_into_inc_osc(p: &Permutation) -> std::result::Result<Vec<usize>, EmbedError> {
    if let Some(b) = oscillation_class_basis().elements().iter().find(|b| contains(b, p)) {
        return Err(EmbedError::Contains(b.clone()));
    }
    let d = RankEncoding::of(p).digits;
    let seq = inc_osc_prefix(LOOKAHEAD * (d.len() + 1));
    let mut positions = Vec::with_capacity(d.len());
    let found = place(p.entries(), &d, &seq, &mut positions);
    assert!(found, "every member of the class embeds");
    Ok(positions)
}

const LOOKAHEAD: usize = 4;

fn preferred_position(d: &[u8], i: usize, at: usize) -> usize {
    // even values sit at odd positions and odd values at even positions
    if d[i] >= 1 {
        return if at.is_multiple_of(2) { at + 1 } else { at + 2 };
    }
    let prefix = &d[..=i];
    let next_odd = if at.is_multiple_of(2) { at + 2 } else { at + 1 };
    if prefix.ends_with(&[2, 0]) || prefix.ends_with(&[1, 1, 0]) || prefix.ends_with(&[2, 0, 1, 0]) {
        next_odd
    } else {
        next_odd + 2
    }
}

fn place(p: &[u8], d: &[u8], seq: &[u32], positions: &mut Vec<usize>) -> bool {
    let i = positions.len();
    if i == p.len() {
        return true;
    }
    let at = positions.last().copied().unwrap_or(0);
    let preferred = preferred_position(d, i, at);
    let others = (at + 1..=at + LOOKAHEAD).filter(|&c| c != preferred);
    for c in std::iter::once(preferred).chain(others) {
        let v = seq[c - 1];
        let consistent = positions
            .iter()
            .zip(p)
            .all(|(&q, &x)| (seq[q - 1] < v) == (x < p[i]));
        if consistent {
            positions.push(c);
            if place(p, d, seq, positions) {
                return true;
            }
            positions.pop();
        }
    }
    false
}

/// Length of the longest alternation contained in `p`.
///
/// For a vertical cut, reading the entries in value order and labelling each
/// by its side, one entry from each maximal block of equal labels gives an
/// alternation, and no alternation across that cut is longer. Horizontal
/// cuts are the vertical cuts of the inverse.
pub fn longest_alternation(p: &Permutation) -> usize {
    fn best_vertical(p: &Permutation) -> usize {
        let n = p.len();
        let mut pos_of = vec![0usize; n + 1];
        for (i, &v) in p.entries().iter().enumerate() {
            pos_of[v as usize] = i;
        }
        (0..=n)
            .map(|cut| {
                let sides: Vec<bool> = (1..=n).map(|v| pos_of[v] < cut).collect();
                if sides.is_empty() {
                    0
                } else {
                    1 + sides.windows(2).filter(|w| w[0] != w[1]).count()
                }
            })
            .max()
            .unwrap_or(0)
    }
    best_vertical(p).max(best_vertical(&p.inverse()))
}

/// Increasing and decreasing oscillations of every length up to a bound.
#[derive(Clone, Debug)]
pub struct OscillationCatalog {
    increasing: Vec<Vec<Permutation>>,
}

impl OscillationCatalog {
    /// Increasing oscillations of length `k` are found among the patterns
    /// of `k` entries taken from a window of `k + 2` consecutive entries of
    /// the sequence, together with their inverses.
    pub fn new(max_len: usize) -> Self {
        let seq = inc_osc_prefix(max_len + 3);
        let mut increasing = vec![Vec::new(); max_len + 1];
        for (k, slot) in increasing.iter_mut().enumerate().skip(1) {
            let mut found = std::collections::BTreeSet::new();
            for start in 0..2 {
                let window = &seq[start..start + k + 2];
                for a in 0..window.len() {
                    for b in a + 1..window.len() {
                        let values: Vec<u32> = window
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != a && i != b)
                            .map(|(_, &v)| v)
                            .collect();
                        let q = Permutation::pattern_of(&values);
                        found.insert(q.inverse());
                        found.insert(q);
                    }
                }
            }
            *slot = found.into_iter().filter(is_simple).collect();
        }
        OscillationCatalog { increasing }
    }

    pub fn max_len(&self) -> usize {
        self.increasing.len() - 1
    }

    pub fn increasing(&self, k: usize) -> &[Permutation] {
        &self.increasing[k]
    }

    /// Increasing oscillations of length `k` and their reverses.
    pub fn oscillations(&self, k: usize) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = self.increasing[k].clone();
        out.extend(self.increasing[k].iter().map(Permutation::reverse));
        out.sort();
        out.dedup();
        out
    }
}

/// Length of the longest oscillation contained in `p`.
pub fn longest_oscillation(p: &Permutation) -> Result<usize> {
    longest_oscillation_with(p, &Limits::default())
}

pub fn longest_oscillation_with(p: &Permutation, limits: &Limits) -> Result<usize> {
    if p.len() > limits.oscillation_length {
        return Err(Error::CapExceeded {
            what: "oscillation search length",
            requested: p.len(),
            cap: limits.oscillation_length,
        });
    }
    let catalog = OscillationCatalog::new(p.len());
    Ok((1..=p.len())
        .rev()
        .find(|&k| catalog.oscillations(k).iter().any(|o| contains(o, p)))
        .unwrap_or(0))
}
