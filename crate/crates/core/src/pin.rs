//! Pin words and the point sequences they describe.
//!
//! A pin word is a word over `{1,2,3,4,L,R,U,D}` that starts with a numeral
//! and never puts two horizontal (`L`/`R`) or two vertical (`U`/`D`)
//! directions next to each other. Numerals name quadrants around the origin;
//! directions name the side on which the next pin is placed.
//!
//! The canonical realization places points at exact rational coordinates:
//!
//! * a numeral `q` puts the point beyond the bounding box of the origin and all
//!   earlier points, in both axes, on the sides given by quadrant `q`;
//! * a direction puts the point beyond that bounding box in its own axis and,
//!   in the other axis, at the midpoint of the open gap between the previous
//!   point and the box of everything before the previous point.
//!
//! For a numeral the first rule is forced: any coordinate inside the span
//! would separate some earlier points. Only relative order matters, so any
//! other valid choice of coordinates gives an order isomorphic point set.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, PinWordError, Result};
use crate::perm::{contains, Permutation};
use crate::Limits;

/// Exact coordinate type.
pub type Coord = Ratio<i64>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
#[repr(u8)]
pub enum PinLetter {
    One = 0,
    Two,
    Three,
    Four,
    L,
    R,
    U,
    D,
}

impl PinLetter {
    pub const ALL: [PinLetter; 8] = [
        PinLetter::One,
        PinLetter::Two,
        PinLetter::Three,
        PinLetter::Four,
        PinLetter::L,
        PinLetter::R,
        PinLetter::U,
        PinLetter::D,
    ];
    pub const NUMERALS: [PinLetter; 4] = [
        PinLetter::One,
        PinLetter::Two,
        PinLetter::Three,
        PinLetter::Four,
    ];
    pub const DIRECTIONS: [PinLetter; 4] = [PinLetter::L, PinLetter::R, PinLetter::U, PinLetter::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> PinLetter {
        PinLetter::ALL[i]
    }

    /// The numeral for quadrant `q` in `1..=4`.
    pub fn numeral(q: u8) -> PinLetter {
        assert!((1..=4).contains(&q), "quadrant out of range: {q}");
        PinLetter::NUMERALS[q as usize - 1]
    }

    pub fn is_numeral(self) -> bool {
        (self as u8) < 4
    }

    pub fn is_direction(self) -> bool {
        !self.is_numeral()
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, PinLetter::L | PinLetter::R)
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, PinLetter::U | PinLetter::D)
    }

    /// The quadrant named by a numeral.
    pub fn quadrant(self) -> Option<u8> {
        self.is_numeral().then_some(self as u8 + 1)
    }

    /// Whether `next` may directly follow `self` in a pin word.
    pub fn may_precede(self, next: PinLetter) -> bool {
        if self.is_horizontal() {
            !next.is_horizontal()
        } else if self.is_vertical() {
            !next.is_vertical()
        } else {
            true
        }
    }

    pub fn to_char(self) -> char {
        b"1234LRUD"[self as usize] as char
    }

    pub fn from_char(c: char) -> Option<PinLetter> {
        Some(match c {
            '1' => PinLetter::One,
            '2' => PinLetter::Two,
            '3' => PinLetter::Three,
            '4' => PinLetter::Four,
            'L' => PinLetter::L,
            'R' => PinLetter::R,
            'U' => PinLetter::U,
            'D' => PinLetter::D,
            _ => return None,
        })
    }
}

impl fmt::Display for PinLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A validated pin word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PinWord {
    letters: Vec<PinLetter>,
}

/// Checks the three pin-word rules and returns the word, or the first
/// violation.
pub fn validate(letters: &[PinLetter]) -> Result<PinWord, PinWordError> {
    let Some(&first) = letters.first() else {
        return Err(PinWordError::Empty);
    };
    if !first.is_numeral() {
        return Err(PinWordError::MustStartWithNumeral);
    }
    for (i, pair) in letters.windows(2).enumerate() {
        if !pair[0].may_precede(pair[1]) {
            let position = i + 2;
            return Err(if pair[0].is_horizontal() {
                PinWordError::AfterHorizontal { position }
            } else {
                PinWordError::AfterVertical { position }
            });
        }
    }
    Ok(PinWord {
        letters: letters.to_vec(),
    })
}

impl PinWord {
    pub(crate) fn from_letters_unchecked(letters: Vec<PinLetter>) -> Self {
        debug_assert!(validate(&letters).is_ok());
        PinWord { letters }
    }

    pub fn letters(&self) -> &[PinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exactly one numeral.
    pub fn is_strict(&self) -> bool {
        self.letters.iter().filter(|l| l.is_numeral()).count() == 1
    }
}

impl FromStr for PinWord {
    type Err = PinWordError;

    fn from_str(s: &str) -> Result<Self, PinWordError> {
        let letters = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| {
                PinLetter::from_char(c).ok_or(PinWordError::UnknownLetter {
                    position: i + 1,
                    letter: c,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        validate(&letters)
    }
}

impl TryFrom<String> for PinWord {
    type Error = PinWordError;
    fn try_from(s: String) -> Result<Self, PinWordError> {
        s.parse()
    }
}

impl From<PinWord> for String {
    fn from(w: PinWord) -> String {
        w.to_string()
    }
}

impl fmt::Display for PinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

impl fmt::Debug for PinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PinWord({self})")
    }
}

/// Every pin word of length `n`, in lexicographic letter order.
pub fn all_pin_words(n: usize) -> Vec<PinWord> {
    fn go(prefix: &mut Vec<PinLetter>, n: usize, strict_only: bool, out: &mut Vec<PinWord>) {
        if prefix.len() == n {
            out.push(PinWord::from_letters_unchecked(prefix.clone()));
            return;
        }
        for l in PinLetter::ALL {
            let ok = match prefix.last() {
                None => l.is_numeral(),
                Some(&prev) => prev.may_precede(l) && !(strict_only && l.is_numeral()),
            };
            if ok {
                prefix.push(l);
                go(prefix, n, strict_only, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(&mut Vec::new(), n, false, &mut out);
    }
    out
}

/// Every strict pin word of length `n`.
pub fn strict_pin_words(n: usize) -> Vec<PinWord> {
    all_pin_words(n).into_iter().filter(PinWord::is_strict).collect()
}

/// The strong numeral-led factors of a pin word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub factors: Vec<PinWord>,
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.factors.iter().try_for_each(|w| write!(f, "({w})"))
    }
}

/// Splits a pin word before every numeral.
pub fn factorize(w: &PinWord) -> Factorization {
    let mut factors: Vec<Vec<PinLetter>> = Vec::new();
    for &l in &w.letters {
        if l.is_numeral() {
            factors.push(vec![l]);
        } else {
            factors.last_mut().expect("pin words start with a numeral").push(l);
        }
    }
    Factorization {
        factors: factors
            .into_iter()
            .map(PinWord::from_letters_unchecked)
            .collect(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(Coord::from_integer(0), Coord::from_integer(0))
    }

    /// Quadrant relative to the origin, `1..=4` counter-clockwise from the
    /// upper right. Points on an axis have no quadrant.
    pub fn quadrant(&self) -> Option<u8> {
        let zero = Coord::from_integer(0);
        match (self.x.cmp(&zero), self.y.cmp(&zero)) {
            (std::cmp::Ordering::Greater, std::cmp::Ordering::Greater) => Some(1),
            (std::cmp::Ordering::Less, std::cmp::Ordering::Greater) => Some(2),
            (std::cmp::Ordering::Less, std::cmp::Ordering::Less) => Some(3),
            (std::cmp::Ordering::Greater, std::cmp::Ordering::Less) => Some(4),
            _ => None,
        }
    }
}

/// The points realizing a pin word, not including the implicit origin.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSequence {
    pub points: Vec<Point>,
}

impl PointSequence {
    /// The origin followed by the points.
    pub fn with_origin(&self) -> Vec<Point> {
        std::iter::once(Point::origin())
            .chain(self.points.iter().copied())
            .collect()
    }

    /// The permutation order isomorphic to the points.
    pub fn permutation(&self) -> Permutation {
        points_permutation(&self.points)
    }
}

fn points_permutation(points: &[Point]) -> Permutation {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].x.cmp(&points[b].x));
    let ys: Vec<Coord> = order.iter().map(|&i| points[i].y).collect();
    Permutation::pattern_of(&ys)
}

#[derive(Clone, Copy, Debug)]
struct Rect {
    min_x: Coord,
    max_x: Coord,
    min_y: Coord,
    max_y: Coord,
}

impl Rect {
    fn around(p: Point) -> Rect {
        Rect {
            min_x: p.x,
            max_x: p.x,
            min_y: p.y,
            max_y: p.y,
        }
    }

    fn extend(&mut self, p: Point) {
        self.min_x = self.min_x.min(p.x);
        self.max_x = self.max_x.max(p.x);
        self.min_y = self.min_y.min(p.y);
        self.max_y = self.max_y.max(p.y);
    }
}

/// Coordinate choices made while realizing a pin word.
pub trait Placement {
    /// A value strictly greater than `bound`.
    fn above(&mut self, bound: Coord) -> Coord;
    /// A value strictly less than `bound`.
    fn below(&mut self, bound: Coord) -> Coord;
    /// A value strictly between `lo` and `hi`.
    fn between(&mut self, lo: Coord, hi: Coord) -> Coord;
}

/// Unit steps beyond the span and midpoints of gaps.
#[derive(Clone, Copy, Debug, Default)]
pub struct Canonical;

impl Placement for Canonical {
    fn above(&mut self, bound: Coord) -> Coord {
        bound + 1
    }
    fn below(&mut self, bound: Coord) -> Coord {
        bound - 1
    }
    fn between(&mut self, lo: Coord, hi: Coord) -> Coord {
        (lo + hi) / 2
    }
}

// The open interval strictly between `coord` and the near side of `[lo, hi]`.
fn separation_gap(coord: Coord, lo: Coord, hi: Coord) -> (Coord, Coord) {
    if coord > hi {
        (hi, coord)
    } else if coord < lo {
        (coord, lo)
    } else {
        panic!("empty separation gap: a pin cannot separate a point lying inside the earlier span")
    }
}

/// Incremental realization, supporting `push`/`pop` for depth-first search.
#[derive(Clone, Debug)]
pub(crate) struct Realizer<P: Placement = Canonical> {
    placement: P,
    points: Vec<Point>,
    // box of the origin and all points
    bbox: Rect,
    // box of the origin and all points but the last
    prev: Rect,
    history: Vec<(Rect, Rect)>,
}

impl Realizer<Canonical> {
    pub(crate) fn new() -> Self {
        Realizer::with_placement(Canonical)
    }
}

impl<P: Placement> Realizer<P> {
    pub(crate) fn with_placement(placement: P) -> Self {
        let origin = Rect::around(Point::origin());
        Realizer {
            placement,
            points: Vec::new(),
            bbox: origin,
            prev: origin,
            history: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, letter: PinLetter) {
        let b = self.bbox;
        let pl = &mut self.placement;
        let point = match letter {
            PinLetter::One | PinLetter::Two | PinLetter::Three | PinLetter::Four => {
                let q = letter as u8 + 1;
                let x = if q == 1 || q == 4 {
                    pl.above(b.max_x)
                } else {
                    pl.below(b.min_x)
                };
                let y = if q <= 2 { pl.above(b.max_y) } else { pl.below(b.min_y) };
                Point::new(x, y)
            }
            _ => {
                let last = *self
                    .points
                    .last()
                    .expect("a direction needs a previous point");
                let prev = self.prev;
                if letter.is_vertical() {
                    let (lo, hi) = separation_gap(last.x, prev.min_x, prev.max_x);
                    let x = pl.between(lo, hi);
                    let y = if letter == PinLetter::U {
                        pl.above(b.max_y)
                    } else {
                        pl.below(b.min_y)
                    };
                    Point::new(x, y)
                } else {
                    let (lo, hi) = separation_gap(last.y, prev.min_y, prev.max_y);
                    let y = pl.between(lo, hi);
                    let x = if letter == PinLetter::R {
                        pl.above(b.max_x)
                    } else {
                        pl.below(b.min_x)
                    };
                    Point::new(x, y)
                }
            }
        };
        self.history.push((self.bbox, self.prev));
        self.prev = self.bbox;
        self.bbox.extend(point);
        self.points.push(point);
    }

    pub(crate) fn pop(&mut self) {
        let (bbox, prev) = self.history.pop().expect("pop on empty realizer");
        self.bbox = bbox;
        self.prev = prev;
        self.points.pop();
    }

    pub(crate) fn permutation(&self) -> Permutation {
        points_permutation(&self.points)
    }
}

/// The canonical point sequence of `w`.
pub fn realize(w: &PinWord) -> PointSequence {
    realize_with(w, Canonical)
}

/// Realizes `w` with caller-chosen coordinates.
pub fn realize_with<P: Placement>(w: &PinWord, placement: P) -> PointSequence {
    let mut r = Realizer::with_placement(placement);
    for &l in &w.letters {
        r.push(l);
    }
    PointSequence { points: r.points }
}

/// The permutation corresponding to `w`.
pub fn perm_of(w: &PinWord) -> Permutation {
    realize(w).permutation()
}

fn rect_of(points: &[Point]) -> Option<Rect> {
    let (first, rest) = points.split_first()?;
    let mut r = Rect::around(*first);
    rest.iter().for_each(|&p| r.extend(p));
    Some(r)
}

/// Whether every point lies outside the bounding box of its predecessors
/// (externality) and lies horizontally or vertically between the point
/// before it and the box of all earlier points (separation).
pub fn is_proper_pin_sequence(points: &[Point]) -> bool {
    for i in 1..points.len() {
        let next = points[i];
        let r = rect_of(&points[..i]).unwrap();
        let outside = next.x < r.min_x || next.x > r.max_x || next.y < r.min_y || next.y > r.max_y;
        if !outside {
            return false;
        }
        let Some(earlier) = rect_of(&points[..i - 1]) else {
            continue;
        };
        let last = points[i - 1];
        let strictly_between = |c: Coord, at: Coord, lo: Coord, hi: Coord| {
            (at > hi && hi < c && c < at) || (at < lo && at < c && c < lo)
        };
        let horizontally = strictly_between(next.y, last.y, earlier.min_y, earlier.max_y);
        let vertically = strictly_between(next.x, last.x, earlier.min_x, earlier.max_x);
        if !(horizontally || vertically) {
            return false;
        }
    }
    true
}

/// Quadrant of each point of the canonical realization of `w`.
pub fn quadrants(w: &PinWord) -> Vec<u8> {
    realize(w)
        .points
        .iter()
        .map(|p| p.quadrant().expect("realized points avoid the axes"))
        .collect()
}

/// Whether `u ⪯ w`.
///
/// `w` must split as `v1 w1 v2 w2 ... vj wj v(j+1)` against the factors
/// `u1 ... uj` of `u`, where each `wi` either equals `ui` outright (when it
/// starts with a numeral), or follows a nonempty `vi`, starts with a direction
/// whose point lies in the quadrant named by the numeral of `ui`, and agrees
/// with `ui` on all remaining letters. Quadrants are those of `w`'s canonical
/// realization, relative to the origin.
///
/// Computed by sweeping the factors of `u` left to right while tracking the
/// set of positions of `w` at which the factors matched so far can end.
pub fn preceq(u: &PinWord, w: &PinWord) -> bool {
    if u.len() > w.len() {
        return false;
    }
    let quads = quadrants(w);
    preceq_with_quadrants(u, w, &quads)
}

/// [`preceq`] with the quadrants of `w` supplied, for callers comparing
/// many words against the same `w`. `quads` must equal `quadrants(w)`.
pub fn preceq_with_quadrants(u: &PinWord, w: &PinWord, quads: &[u8]) -> bool {
    let (ul, wl) = (&u.letters[..], &w.letters[..]);
    let m = wl.len();
    if ul.len() > m {
        return false;
    }
    let mut reach = vec![false; m + 1];
    let mut next = vec![false; m + 1];
    reach[0] = true;
    let mut start = 0;
    while start < ul.len() {
        let end = (start + 1..ul.len()).find(|&i| ul[i].is_numeral()).unwrap_or(ul.len());
        let f = &ul[start..end];
        let len = f.len();
        let numeral = f[0].quadrant().unwrap();
        next.iter_mut().for_each(|x| *x = false);
        let mut any_at_or_before = false;
        let mut any_before = false;
        let mut found = false;
        for s in 0..m {
            any_at_or_before |= reach[s];
            if s + len > m {
                break;
            }
            let ok = if wl[s].is_numeral() {
                any_at_or_before && wl[s..s + len] == *f
            } else {
                any_before && quads[s] == numeral && wl[s + 1..s + len] == f[1..]
            };
            if ok {
                next[s + len] = true;
                found = true;
            }
            any_before = any_at_or_before;
        }
        if !found {
            return false;
        }
        std::mem::swap(&mut reach, &mut next);
        start = end;
    }
    true
}

/// The word for the point sequence of `w` with the point at 0-based
/// `index` removed: the following letter becomes the numeral of its point's
/// quadrant. `None` when nothing would remain.
pub fn delete_letter(w: &PinWord, index: usize) -> Option<PinWord> {
    if w.len() <= 1 {
        return None;
    }
    let mut letters = w.letters.clone();
    if index + 1 < letters.len() {
        let q = quadrants(w)[index + 1];
        letters[index + 1] = PinLetter::numeral(q);
    }
    letters.remove(index);
    Some(PinWord::from_letters_unchecked(letters))
}

/// All pin words whose permutation is `p`.
pub fn pin_words_of(p: &Permutation) -> Result<BTreeSet<PinWord>> {
    pin_words_of_with(p, &Limits::default())
}

/// Depth-first over valid words of length `|p|`; a prefix is dropped as soon
/// as the pattern of its points is not contained in `p`.
pub fn pin_words_of_with(p: &Permutation, limits: &Limits) -> Result<BTreeSet<PinWord>> {
    if p.len() > limits.pin_word_length {
        return Err(Error::CapExceeded {
            what: "pin word enumeration length",
            requested: p.len(),
            cap: limits.pin_word_length,
        });
    }
    fn go(
        p: &Permutation,
        realizer: &mut Realizer,
        prefix: &mut Vec<PinLetter>,
        out: &mut BTreeSet<PinWord>,
    ) {
        if prefix.len() == p.len() {
            if realizer.permutation() == *p {
                out.insert(PinWord::from_letters_unchecked(prefix.clone()));
            }
            return;
        }
        for l in PinLetter::ALL {
            if prefix.last().is_some_and(|&prev| !prev.may_precede(l)) || (prefix.is_empty() && !l.is_numeral()) {
                continue;
            }
            realizer.push(l);
            prefix.push(l);
            if contains(&realizer.permutation(), p) {
                go(p, realizer, prefix, out);
            }
            prefix.pop();
            realizer.pop();
        }
    }
    let mut out = BTreeSet::new();
    if !p.is_empty() {
        go(p, &mut Realizer::new(), &mut Vec::new(), &mut out);
    }
    Ok(out)
}

impl<P: Placement + ?Sized> Placement for &mut P {
    fn above(&mut self, bound: Coord) -> Coord {
        (**self).above(bound)
    }
    fn below(&mut self, bound: Coord) -> Coord {
        (**self).below(bound)
    }
    fn between(&mut self, lo: Coord, hi: Coord) -> Coord {
        (**self).between(lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn w(s: &str) -> PinWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(w("3RDRDLULURDLDRD").is_strict());
        assert!(!w("4RDL21DL").is_strict());
        assert_eq!(
            "1LR".parse::<PinWord>(),
            Err(PinWordError::AfterHorizontal { position: 3 })
        );
        assert_eq!("1UD".parse::<PinWord>().unwrap_err().position(), Some(3));
        assert_eq!("".parse::<PinWord>(), Err(PinWordError::Empty));
        assert_eq!("L1".parse::<PinWord>(), Err(PinWordError::MustStartWithNumeral));
        assert_eq!(
            "1X".parse::<PinWord>(),
            Err(PinWordError::UnknownLetter { position: 2, letter: 'X' })
        );
        assert!("1LU2DR".parse::<PinWord>().is_ok());
    }

    #[test]
    fn word_counts() {
        // after a numeral 8 letters may follow, after a direction 6
        let counts: Vec<usize> = (1..=5).map(|n| all_pin_words(n).len()).collect();
        assert_eq!(counts, vec![4, 32, 224, 1600, 11392]);
        let strict: Vec<usize> = (1..=5).map(|n| strict_pin_words(n).len()).collect();
        assert_eq!(strict, vec![4, 16, 32, 64, 128]);
    }

    #[test]
    fn realize_small_words() {
        let pts = realize(&w("1U")).points;
        assert!(pts[1].x < pts[0].x && pts[1].y > pts[0].y);
        assert_eq!(perm_of(&w("1U")), p("21"));
        assert_eq!(perm_of(&w("1L")), p("12"));
        assert_eq!(perm_of(&w("1")), p("1"));
        assert_eq!(realize(&w("1")).points[0].quadrant(), Some(1));
        assert_eq!(perm_of(&w("4RDL21DL")), p("27453618"));
    }

    #[test]
    fn worked_example_quadrants() {
        // the points behind letters 3, 8 and 10 of the long word sit in quadrants 4, 2, 1
        let q = quadrants(&w("3RDRDLULURDLDRD"));
        assert_eq!((q[2], q[7], q[9]), (4, 2, 1));
        assert_eq!(q[0], 3);
    }

    #[test]
    fn proper_pin_sequences() {
        let seq = realize(&w("3RDRDLULURDLDRD"));
        assert!(is_proper_pin_sequence(&seq.with_origin()));
        assert!(is_proper_pin_sequence(&seq.points));
        assert!(is_proper_pin_sequence(&[Point::origin()]));
        let c = |v: i64| Coord::from_integer(v);
        let increasing: Vec<Point> = (1..=3).map(|i| Point::new(c(i), c(i))).collect();
        assert!(!is_proper_pin_sequence(&increasing));
    }

    #[test]
    fn strict_words_realize_proper_sequences() {
        for n in 1..=6 {
            for word in strict_pin_words(n) {
                assert!(is_proper_pin_sequence(&realize(&word).with_origin()), "{word}");
            }
        }
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(&w("4RDL21DL")).to_string(), "(4RDL)(2)(1DL)");
        assert_eq!(factorize(&w("3RDRD")).factors.len(), 1);
        assert_eq!(factorize(&w("12")).to_string(), "(1)(2)");
    }

    #[test]
    fn preceq_examples() {
        assert!(preceq(&w("4RDL21DL"), &w("3RDRDLULURDLDRD")));
        assert!(!preceq(&w("3RDRDLULURDLDRD"), &w("4RDL21DL")));
        for u in ["1", "4RDL21DL", "2UR", "13"] {
            assert!(preceq(&w(u), &w(u)));
        }
        let same = ["11", "13", "1L", "1D", "21", "23", "2L", "2U"];
        for a in same {
            assert_eq!(perm_of(&w(a)), p("12"));
            for b in same {
                assert_eq!(preceq(&w(a), &w(b)), a == b, "{a} vs {b}");
            }
        }
    }

    // All ways of choosing the matched factors, tried recursively.
    fn preceq_naive(u: &PinWord, w: &PinWord) -> bool {
        let factors = factorize(u).factors;
        let quads = quadrants(w);
        fn go(i: usize, from: usize, factors: &[PinWord], w: &[PinLetter], quads: &[u8]) -> bool {
            if i == factors.len() {
                return true;
            }
            let f = factors[i].letters();
            for gap in 0..=w.len() - from {
                let s = from + gap;
                if s + f.len() > w.len() {
                    break;
                }
                let piece = &w[s..s + f.len()];
                let ok = if piece[0].is_numeral() {
                    piece == f
                } else {
                    gap > 0 && quads[s] == f[0].quadrant().unwrap() && piece[1..] == f[1..]
                };
                if ok && go(i + 1, s + f.len(), factors, w, quads) {
                    return true;
                }
            }
            false
        }
        go(0, 0, &factors, w.letters(), &quads)
    }

    #[test]
    fn preceq_agrees_with_naive_search() {
        let small: Vec<PinWord> = (1..=3).flat_map(all_pin_words).collect();
        let large: Vec<PinWord> = (1..=4).flat_map(all_pin_words).collect();
        for u in &small {
            for v in &large {
                assert_eq!(preceq(u, v), preceq_naive(u, v), "{u} vs {v}");
            }
        }
        let mut rng = StdRng::seed_from_u64(7);
        let sixes = all_pin_words(6);
        let all: Vec<PinWord> = (1..=6).flat_map(all_pin_words).collect();
        for _ in 0..20_000 {
            let u = &all[rng.gen_range(0..all.len())];
            let v = &sixes[rng.gen_range(0..sixes.len())];
            assert_eq!(preceq(u, v), preceq_naive(u, v), "{u} vs {v}");
        }
    }

    #[test]
    fn pin_words_of_examples() {
        let ones: Vec<String> = pin_words_of(&p("1")).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(ones, vec!["1", "2", "3", "4"]);
        let of21 = pin_words_of(&p("21")).unwrap();
        let filtered: BTreeSet<PinWord> = all_pin_words(2)
            .into_iter()
            .filter(|u| perm_of(u) == p("21"))
            .collect();
        assert_eq!(of21, filtered);
        for s in ["1U", "1R", "2D", "12"] {
            assert!(of21.contains(&w(s)), "{s}");
        }
        assert!(pin_words_of(&p("27453618")).unwrap().contains(&w("4RDL21DL")));
        assert!(pin_words_of(&Permutation::empty()).unwrap().is_empty());
        assert!(pin_words_of(&Permutation::identity(11)).is_err());
    }

    #[test]
    fn pin_words_of_matches_filtering() {
        let words: Vec<PinWord> = all_pin_words(4);
        for q in all_permutations(4) {
            let expected: BTreeSet<PinWord> = words.iter().filter(|u| perm_of(u) == q).cloned().collect();
            assert_eq!(pin_words_of(&q).unwrap(), expected, "{q}");
        }
    }

    struct Jitter(StdRng);

    impl Placement for Jitter {
        fn above(&mut self, bound: Coord) -> Coord {
            bound + Coord::new(self.0.gen_range(1..50), self.0.gen_range(1..7))
        }
        fn below(&mut self, bound: Coord) -> Coord {
            bound - Coord::new(self.0.gen_range(1..50), self.0.gen_range(1..7))
        }
        fn between(&mut self, lo: Coord, hi: Coord) -> Coord {
            let t = Coord::new(self.0.gen_range(1..16), 16);
            lo + (hi - lo) * t
        }
    }

    #[test]
    fn realization_independent_of_coordinate_choices() {
        let mut jitter = Jitter(StdRng::seed_from_u64(11));
        for n in 1..=6 {
            for word in all_pin_words(n) {
                let seq = realize_with(&word, &mut jitter);
                assert_eq!(seq.permutation(), perm_of(&word), "{word}");
                assert_eq!(
                    seq.points.iter().map(|q| q.quadrant().unwrap()).collect::<Vec<_>>(),
                    quadrants(&word)
                );
            }
        }
    }

    #[test]
    fn deleting_a_point_gives_a_smaller_word() {
        for n in 1..=6 {
            for word in strict_pin_words(n) {
                let pts = realize(&word).points;
                for i in 0..n {
                    let Some(smaller) = delete_letter(&word, i) else { continue };
                    assert!(preceq(&smaller, &word), "{smaller} vs {word}");
                    let mut rest = pts.clone();
                    rest.remove(i);
                    assert_eq!(perm_of(&smaller), points_permutation(&rest), "{word} minus {i}");
                }
            }
        }
    }

    #[test]
    fn realizer_push_pop() {
        let mut r = Realizer::new();
        for l in w("4RDL21DL").letters() {
            r.push(*l);
        }
        r.pop();
        r.pop();
        r.push(PinLetter::D);
        r.push(PinLetter::L);
        assert_eq!(r.permutation(), p("27453618"));
    }
}
