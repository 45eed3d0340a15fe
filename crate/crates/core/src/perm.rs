//! Permutations, pattern containment, simplicity, the eight symmetries and
//! basis-defined classes.
//!
//! A permutation of length `n` is stored in one-line notation as the values
//! `1..=n`. Containment is decided by backtracking over host positions; a
//! candidate for pattern index `j` only has to be compared against the two
//! earlier pattern entries that are its nearest neighbours in value.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Limits;

/// A permutation in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation {
    entries: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its entries, rejecting anything that is not
    /// a bijection on `1..=n`.
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::ParsePermutation {
                    input: format_entries(&entries),
                    reason: format!("not a rearrangement of 1..{n}"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn empty() -> Self {
        Permutation { entries: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n as u8).collect(),
        }
    }

    /// The permutation order isomorphic to `values`, which must be distinct.
    pub fn pattern_of<T: Ord>(values: &[T]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].cmp(&values[b]));
        let mut entries = vec![0u8; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            entries[i] = rank as u8 + 1;
        }
        Permutation { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Value at 0-based position `i`.
    pub fn get(&self, i: usize) -> u8 {
        self.entries[i]
    }

    pub fn inverse(&self) -> Self {
        let mut entries = vec![0u8; self.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            entries[v as usize - 1] = i as u8 + 1;
        }
        Permutation { entries }
    }

    pub fn reverse(&self) -> Self {
        Permutation {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Self {
        let n = self.len() as u8;
        Permutation {
            entries: self.entries.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// The pattern left after deleting the entry at 0-based position `i`.
    pub fn delete(&self, i: usize) -> Self {
        let removed = self.entries[i];
        let entries = self
            .entries
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Permutation { entries }
    }

    /// The pattern formed by the entries at the given increasing positions.
    pub fn subpattern(&self, positions: &[usize]) -> Self {
        let values: Vec<u8> = positions.iter().map(|&i| self.entries[i]).collect();
        Permutation::pattern_of(&values)
    }

    /// Every pattern obtained by deleting exactly one entry, deduplicated.
    pub fn one_point_deletions(&self) -> BTreeSet<Permutation> {
        (0..self.len()).map(|i| self.delete(i)).collect()
    }

    /// Packs a permutation of length at most 16 into a `u64`, four bits per
    /// entry. Two permutations of the same length collide only if equal.
    pub fn pack(&self) -> u64 {
        debug_assert!(self.len() <= 16);
        self.entries
            .iter()
            .fold(0u64, |acc, &v| (acc << 4) | u64::from(v - 1))
    }

    pub fn unpack(code: u64, len: usize) -> Self {
        let entries = (0..len)
            .rev()
            .map(|i| ((code >> (4 * i)) & 0xf) as u8 + 1)
            .collect();
        Permutation { entries }
    }
}

fn format_entries(entries: &[u8]) -> String {
    if entries.len() <= 9 {
        entries.iter().map(|v| v.to_string()).collect()
    } else {
        entries
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.entries))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digit strings (`"2413"`) for length at most 9, comma-separated ranks
    /// (`"10,2,6,..."`) otherwise. Comma-separated input is accepted at any
    /// length.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::ParsePermutation {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let entries: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|part| part.trim().parse::<u8>().map_err(|_| bad("bad rank")))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| bad("expected digits"))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(entries).map_err(|_| bad("not a bijection on 1..n"))
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> String {
        p.to_string()
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorter permutations first, then lexicographic.
impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

/// Parses a list of permutations separated by whitespace, commas or
/// semicolons.
///
/// A comma-separated token is first read as a list of digit-string
/// permutations; if any part fails to parse, the whole token is read as a
/// single comma-separated permutation (the format used from length 10 on).
pub fn parse_permutation_list(input: &str) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for token in input
        .split(|c: char| c.is_whitespace() || c == ';')
        .filter(|t| !t.is_empty())
    {
        let parts: Vec<&str> = token.split(',').filter(|p| !p.is_empty()).collect();
        let as_list: Option<Vec<Permutation>> = parts.iter().map(|p| p.parse().ok()).collect();
        match as_list {
            Some(list) => out.extend(list),
            None => out.push(token.parse()?),
        }
    }
    Ok(out)
}

// For each pattern index, the earlier indices holding the nearest smaller and
// nearest larger values.
fn neighbour_bounds(pattern: &[u8]) -> Vec<(Option<usize>, Option<usize>)> {
    (0..pattern.len())
        .map(|j| {
            let v = pattern[j];
            let mut below: Option<usize> = None;
            let mut above: Option<usize> = None;
            for (i, &w) in pattern[..j].iter().enumerate() {
                if w < v && below.is_none_or(|b| pattern[b] < w) {
                    below = Some(i);
                }
                if w > v && above.is_none_or(|a| pattern[a] > w) {
                    above = Some(i);
                }
            }
            (below, above)
        })
        .collect()
}

/// Positions in `host` (0-based, increasing) of an occurrence of `pattern`.
pub fn occurrence(pattern: &Permutation, host: &Permutation) -> Option<Vec<usize>> {
    let k = pattern.len();
    let n = host.len();
    if k > n {
        return None;
    }
    let bounds = neighbour_bounds(&pattern.entries);
    let mut chosen = vec![0usize; k];

    fn extend(
        j: usize,
        start: usize,
        host: &[u8],
        bounds: &[(Option<usize>, Option<usize>)],
        chosen: &mut [usize],
    ) -> bool {
        let k = chosen.len();
        if j == k {
            return true;
        }
        let last = host.len() - (k - j);
        for pos in start..=last {
            let v = host[pos];
            let (below, above) = bounds[j];
            if below.is_some_and(|b| v <= host[chosen[b]]) {
                continue;
            }
            if above.is_some_and(|a| v >= host[chosen[a]]) {
                continue;
            }
            chosen[j] = pos;
            if extend(j + 1, pos + 1, host, bounds, chosen) {
                return true;
            }
        }
        false
    }

    extend(0, 0, &host.entries, &bounds, &mut chosen).then_some(chosen)
}

/// Whether `host` has a subsequence order isomorphic to `pattern`.
pub fn contains(pattern: &Permutation, host: &Permutation) -> bool {
    occurrence(pattern, host).is_some()
}

/// Whether `p` lies in `Av(basis)`.
pub fn avoids_all(p: &Permutation, basis: &Basis) -> bool {
    basis.elements.iter().all(|b| !contains(b, p))
}

/// Whether `p` has no interval other than the empty set, singletons and the
/// whole permutation. Scans all `O(n^2)` windows.
pub fn is_simple(p: &Permutation) -> bool {
    let n = p.len();
    for a in 0..n {
        let (mut lo, mut hi) = (p.entries[a], p.entries[a]);
        for b in a + 1..n {
            lo = lo.min(p.entries[b]);
            hi = hi.max(p.entries[b]);
            let width = b - a + 1;
            if width < n && (hi - lo) as usize + 1 == width {
                return false;
            }
        }
    }
    true
}

/// One of the eight symmetries of the square, acting on permutation plots.
///
/// Stored as a signed permutation matrix acting on centred coordinates, so
/// composition is matrix multiplication.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Symmetry {
    m: [[i8; 2]; 2],
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { m: [[1, 0], [0, 1]] };
    /// `(x, y) -> (-x, y)`: read the entries right to left.
    pub const REVERSE: Symmetry = Symmetry { m: [[-1, 0], [0, 1]] };
    /// `(x, y) -> (x, -y)`: replace `v` with `n + 1 - v`.
    pub const COMPLEMENT: Symmetry = Symmetry { m: [[1, 0], [0, -1]] };
    /// `(x, y) -> (y, x)`.
    pub const INVERSE: Symmetry = Symmetry { m: [[0, 1], [1, 0]] };
    pub const REVERSE_COMPLEMENT: Symmetry = Symmetry { m: [[-1, 0], [0, -1]] };
    /// Anti-diagonal reflection `(x, y) -> (-y, -x)`.
    pub const ANTI_INVERSE: Symmetry = Symmetry { m: [[0, -1], [-1, 0]] };
    /// Quarter turn `(x, y) -> (-y, x)`.
    pub const ROTATE_90: Symmetry = Symmetry { m: [[0, -1], [1, 0]] };
    pub const ROTATE_270: Symmetry = Symmetry { m: [[0, 1], [-1, 0]] };

    pub const ALL: [Symmetry; 8] = [
        Symmetry::IDENTITY,
        Symmetry::REVERSE,
        Symmetry::COMPLEMENT,
        Symmetry::INVERSE,
        Symmetry::REVERSE_COMPLEMENT,
        Symmetry::ANTI_INVERSE,
        Symmetry::ROTATE_90,
        Symmetry::ROTATE_270,
    ];

    pub fn name(self) -> &'static str {
        match self {
            s if s == Symmetry::IDENTITY => "identity",
            s if s == Symmetry::REVERSE => "reverse",
            s if s == Symmetry::COMPLEMENT => "complement",
            s if s == Symmetry::INVERSE => "inverse",
            s if s == Symmetry::REVERSE_COMPLEMENT => "reverse-complement",
            s if s == Symmetry::ANTI_INVERSE => "anti-inverse",
            s if s == Symmetry::ROTATE_90 => "rotate-90",
            _ => "rotate-270",
        }
    }

    /// `self.then(other)` applies `self` first.
    pub fn then(self, other: Symmetry) -> Symmetry {
        let (a, b) = (other.m, self.m);
        let mut m = [[0i8; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Symmetry { m }
    }

    pub fn inverse(self) -> Symmetry {
        // Signed permutation matrices are orthogonal.
        let m = self.m;
        Symmetry {
            m: [[m[0][0], m[1][0]], [m[0][1], m[1][1]]],
        }
    }

    pub fn apply(self, p: &Permutation) -> Permutation {
        let n = p.len() as i32;
        let points: Vec<(i32, i32)> = p
            .entries
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let x = 2 * (i as i32 + 1) - (n + 1);
                let y = 2 * i32::from(v) - (n + 1);
                let m = self.m;
                (
                    i32::from(m[0][0]) * x + i32::from(m[0][1]) * y,
                    i32::from(m[1][0]) * x + i32::from(m[1][1]) * y,
                )
            })
            .collect();
        let mut by_x = points;
        by_x.sort_unstable();
        let ys: Vec<i32> = by_x.into_iter().map(|(_, y)| y).collect();
        Permutation::pattern_of(&ys)
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn apply_symmetry(s: Symmetry, p: &Permutation) -> Permutation {
    s.apply(p)
}

/// A finite basis, kept as a sorted antichain.
///
/// Duplicates and elements containing another element are dropped on
/// construction; `Av` of the result is unchanged.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Basis {
    elements: Vec<Permutation>,
}

impl Basis {
    pub fn new<I: IntoIterator<Item = Permutation>>(elements: I) -> Self {
        let sorted: BTreeSet<Permutation> = elements.into_iter().collect();
        let mut kept: Vec<Permutation> = Vec::new();
        // Ascending length, so any element dominating a later one is already kept.
        for p in sorted {
            if !kept.iter().any(|k| contains(k, &p)) {
                kept.push(p);
            }
        }
        Basis { elements: kept }
    }

    /// Parses a whitespace/comma separated list; see [`parse_permutation_list`].
    pub fn parse(input: &str) -> Result<Self> {
        Ok(Basis::new(parse_permutation_list(input)?))
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis of the image of `Av(self)` under `s`.
    pub fn apply_symmetry(&self, s: Symmetry) -> Basis {
        Basis::new(self.elements.iter().map(|p| s.apply(p)))
    }

    /// `Av(self)` is empty exactly when the basis contains the permutation `1`
    /// (or the empty permutation).
    pub fn class_is_empty(&self) -> bool {
        self.elements.iter().any(|p| p.len() <= 1)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Visits each member of `Av(basis)` of length `n`.
///
/// Members of length `n - 1` are materialized and extended by inserting the
/// new maximum in every position; deleting the maximum of a member yields a
/// member, so nothing is missed and nothing is produced twice.
pub(crate) fn for_each_in_class<F: FnMut(Permutation)>(basis: &Basis, n: usize, mut visit: F) {
    let mut level = vec![Permutation::empty()];
    if basis.elements.iter().any(|b| b.is_empty()) {
        return;
    }
    for len in 1..=n {
        let last = len == n;
        let mut next = Vec::new();
        for parent in &level {
            for pos in 0..len {
                let mut entries = Vec::with_capacity(len);
                entries.extend_from_slice(&parent.entries[..pos]);
                entries.push(len as u8);
                entries.extend_from_slice(&parent.entries[pos..]);
                let child = Permutation { entries };
                if avoids_all(&child, basis) {
                    if last {
                        visit(child);
                    } else {
                        next.push(child);
                    }
                }
            }
        }
        if last {
            return;
        }
        level = next;
    }
    // n == 0
    level.into_iter().for_each(visit);
}

/// All members of `Av(basis)` of length `n`, sorted.
pub fn enumerate_class(basis: &Basis, n: usize) -> Result<Vec<Permutation>> {
    enumerate_class_with(basis, n, &Limits::default())
}

pub fn enumerate_class_with(basis: &Basis, n: usize, limits: &Limits) -> Result<Vec<Permutation>> {
    if n > limits.class_length {
        return Err(Error::CapExceeded {
            what: "class enumeration length",
            requested: n,
            cap: limits.class_length,
        });
    }
    let mut out = Vec::new();
    for_each_in_class(basis, n, |p| out.push(p));
    out.sort();
    Ok(out)
}

/// All permutations of length `n`, in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut entries: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Permutation {
            entries: entries.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (1..entries.len()).rev().find(|&i| entries[i - 1] < entries[i]) else {
            return out;
        };
        let j = (i..entries.len()).rev().find(|&j| entries[j] > entries[i - 1]).unwrap();
        entries.swap(i - 1, j);
        entries[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn basis(s: &str) -> Basis {
        Basis::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("2413").entries(), &[2, 4, 1, 3]);
        let long = p("10,2,6,1,3,4,5,7,8,9");
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_string(), "10,2,6,1,3,4,5,7,8,9");
        assert_eq!(p("").len(), 0);
        assert!("2213".parse::<Permutation>().is_err());
        assert!("1240".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
        assert!("1,2,4".parse::<Permutation>().is_err());
    }

    #[test]
    fn permutation_lists() {
        let list = parse_permutation_list("123, 2413 3412").unwrap();
        assert_eq!(list, vec![p("123"), p("2413"), p("3412")]);
        let list = parse_permutation_list("132,2413").unwrap();
        assert_eq!(list, vec![p("132"), p("2413")]);
        let list = parse_permutation_list("10,2,6,1,3,4,5,7,8,9 21").unwrap();
        assert_eq!(list, vec![p("10,2,6,1,3,4,5,7,8,9"), p("21")]);
        assert_eq!(parse_permutation_list("2,1").unwrap(), vec![p("21")]);
        assert!(parse_permutation_list("12,33").is_err());
    }

    #[test]
    fn containment_examples() {
        let host = p("891367452");
        let sigma = p("51342");
        let occ = occurrence(&sigma, &host).unwrap();
        assert_eq!(host.subpattern(&occ), sigma);
        // the subsequence 91672 is one witness
        assert_eq!(host.subpattern(&[1, 2, 4, 5, 8]), sigma);
        assert!(contains(&p("2413"), &p("2413")));
        assert!(!contains(&p("123"), &p("321")));
        assert!(contains(&Permutation::empty(), &p("1")));
        assert!(contains(&Permutation::empty(), &Permutation::empty()));
        assert!(!contains(&p("12"), &p("1")));
    }

    #[test]
    fn avoidance_examples() {
        let b = basis("123,2413,3412");
        assert!(!avoids_all(&p("2413"), &b));
        assert!(avoids_all(&p("21"), &b));
        assert!(avoids_all(&p("3142"), &b));
        assert!(avoids_all(&p("3142"), &Basis::default()));
    }

    #[test]
    fn simplicity_examples() {
        assert!(is_simple(&p("2413")));
        assert!(is_simple(&p("3142")));
        assert!(!is_simple(&p("132")));
        assert!(is_simple(&p("1")));
        assert!(is_simple(&p("12")));
        assert!(is_simple(&p("21")));
        assert!(!is_simple(&p("123")));
        // the length-14 plot of a simple permutation
        assert!(is_simple(&p("9,12,14,3,6,13,2,7,11,1,5,10,4,8")));
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(Symmetry::REVERSE.apply(&p("2413")), p("3142"));
        assert_eq!(Symmetry::COMPLEMENT.apply(&p("123")), p("321"));
        assert_eq!(Symmetry::INVERSE.apply(&p("2413")), p("3142"));
        assert_eq!(Symmetry::INVERSE.apply(&p("2431")), p("4132"));
        let q = p("25314");
        assert_eq!(Symmetry::REVERSE_COMPLEMENT.apply(&q), q.reverse().complement());
        assert_eq!(Symmetry::ROTATE_90.apply(&Symmetry::ROTATE_90.apply(&q)), q.reverse().complement());
    }

    #[test]
    fn symmetries_form_a_group() {
        let q = p("2531764");
        let images: BTreeSet<Permutation> = Symmetry::ALL.iter().map(|s| s.apply(&q)).collect();
        assert_eq!(images.len(), 8);
        for a in Symmetry::ALL {
            assert_eq!(a.then(a.inverse()), Symmetry::IDENTITY);
            assert_eq!(a.inverse().apply(&a.apply(&q)), q);
            for b in Symmetry::ALL {
                assert!(Symmetry::ALL.contains(&a.then(b)));
                assert_eq!(a.then(b).apply(&q), b.apply(&a.apply(&q)));
            }
        }
    }

    #[test]
    fn basis_reduction() {
        let b = basis("123 1234 123 2413 21");
        assert_eq!(b.elements(), &[p("21"), p("123")]);
        assert!(basis("1").class_is_empty());
        assert!(!basis("12").class_is_empty());
    }

    #[test]
    fn class_enumeration_examples() {
        assert_eq!(enumerate_class(&basis("12"), 3).unwrap(), vec![p("321")]);
        assert_eq!(enumerate_class(&Basis::default(), 4).unwrap().len(), 24);
        let members = enumerate_class(&basis("123,2413,3412"), 4).unwrap();
        let filtered: Vec<Permutation> = all_permutations(4)
            .into_iter()
            .filter(|q| avoids_all(q, &basis("123,2413,3412")))
            .collect();
        assert_eq!(members, filtered);
        assert_eq!(members.len(), 12);
        assert_eq!(enumerate_class(&Basis::default(), 0).unwrap(), vec![Permutation::empty()]);
        assert!(enumerate_class(&basis("1"), 3).unwrap().is_empty());
        assert!(matches!(
            enumerate_class(&Basis::default(), 11),
            Err(Error::CapExceeded { cap: 10, .. })
        ));
    }

    #[test]
    fn factorial_counts() {
        for (n, f) in [1usize, 1, 2, 6, 24, 120, 720].into_iter().enumerate() {
            assert_eq!(enumerate_class(&Basis::default(), n).unwrap().len(), f);
            assert_eq!(all_permutations(n).len(), f);
        }
    }

    #[test]
    fn containment_is_a_partial_order() {
        let perms: Vec<Permutation> = (0..=5).flat_map(all_permutations).collect();
        let small: Vec<&Permutation> = perms.iter().filter(|q| q.len() <= 4).collect();
        for a in &perms {
            assert!(contains(a, a));
        }
        for a in &small {
            for b in &perms {
                if contains(a, b) && contains(b, a) {
                    assert_eq!(*a, b);
                }
                if !contains(a, b) {
                    continue;
                }
                for c in perms.iter().filter(|c| c.len() >= b.len()) {
                    if contains(b, c) {
                        assert!(contains(a, c), "{a} <= {b} <= {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn pack_roundtrip() {
        for q in all_permutations(6) {
            assert_eq!(Permutation::unpack(q.pack(), 6), q);
        }
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (0..=max)
            .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle())
            .prop_map(|e| Permutation::new(e).unwrap())
    }

    // brute force: all subsets of positions
    fn contains_naive(pattern: &Permutation, host: &Permutation) -> bool {
        let n = host.len();
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == pattern.len())
            .any(|m| {
                let pos: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
                host.subpattern(&pos) == *pattern
            })
    }

    proptest! {
        #[test]
        fn containment_matches_subset_search(a in arb_perm(5), b in arb_perm(8)) {
            prop_assert_eq!(contains(&a, &b), contains_naive(&a, &b));
        }

        #[test]
        fn symmetries_preserve_containment(a in arb_perm(4), b in arb_perm(7), k in 0usize..8) {
            let s = Symmetry::ALL[k];
            prop_assert_eq!(contains(&a, &b), contains(&s.apply(&a), &s.apply(&b)));
        }

        #[test]
        fn symmetries_preserve_simplicity(a in arb_perm(9), k in 0usize..8) {
            let s = Symmetry::ALL[k];
            prop_assert_eq!(is_simple(&a), is_simple(&s.apply(&a)));
        }

        #[test]
        fn text_format_roundtrip(a in arb_perm(14)) {
            prop_assert_eq!(a.to_string().parse::<Permutation>().unwrap(), a);
        }
    }
}
