//! Brute-force ground truth: simple permutations of a class, explicit
//! alternations and wedge simple permutations, juxtaposition membership, and
//! the census of the pin class.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{all_permutations, avoids_all, for_each_in_class, is_simple, Basis, Permutation, Symmetry};
use crate::pin::{PinLetter, Realizer};
use crate::Limits;

/// The simple permutations of length `n` in `Av(basis)`, sorted.
pub fn simples_in_class(basis: &Basis, n: usize) -> Result<Vec<Permutation>> {
    simples_in_class_with(basis, n, &Limits::default())
}

pub fn simples_in_class_with(basis: &Basis, n: usize, limits: &Limits) -> Result<Vec<Permutation>> {
    if n > limits.class_length {
        return Err(Error::CapExceeded {
            what: "class enumeration length",
            requested: n,
            cap: limits.class_length,
        });
    }
    let mut out = Vec::new();
    for_each_in_class(basis, n, |p| {
        if is_simple(&p) {
            out.push(p)
        }
    });
    out.sort();
    Ok(out)
}

/// Odd values in decreasing order, then even values in decreasing order,
/// mapped by `orientation`.
pub fn parallel_alternation(k: usize, orientation: Symmetry) -> Permutation {
    let odd = (1..=k).rev().filter(|v| v % 2 == 1);
    let even = (1..=k).rev().filter(|v| v % 2 == 0);
    let entries: Vec<u8> = odd.chain(even).map(|v| v as u8).collect();
    orientation.apply(&Permutation::new(entries).unwrap())
}

/// A wedge of `k - 1` points opening to the right, whose upper arm rises and
/// lower arm falls, entries alternating between the arms and starting with
/// the upper one, followed by a last point between the two arms. Simple for
/// `k >= 4`.
pub fn wedge_type1(k: usize, orientation: Symmetry) -> Permutation {
    if k == 0 {
        return Permutation::empty();
    }
    let m = k - 1;
    let b = m / 2;
    let lower = (1..=b).rev();
    let mut upper = b + 2..=k;
    let mut entries = Vec::with_capacity(k);
    for l in lower {
        entries.push(upper.next().unwrap());
        entries.push(l);
    }
    entries.extend(upper);
    entries.push(b + 1);
    let entries = entries.into_iter().map(|v| v as u8).collect();
    orientation.apply(&Permutation::new(entries).unwrap())
}

/// A wedge opening downwards: even values rising, then odd values falling,
/// with the second largest odd value moved to the end. Built for even
/// lengths; an odd length is the pattern of the next even one with its
/// first entry removed, which need not be simple.
pub fn wedge_type2(k: usize, orientation: Symmetry) -> Permutation {
    if k <= 1 {
        return orientation.apply(&Permutation::identity(k));
    }
    let even_k = k + k % 2;
    let a = even_k / 2;
    let mut entries: Vec<usize> = (1..=a).map(|i| 2 * i).collect();
    entries.extend((1..a).rev().map(|i| 2 * i - 1).filter(|&v| v != 2 * a - 1));
    entries.push(2 * a - 1);
    let base = Permutation::pattern_of(&entries[even_k - k..]);
    orientation.apply(&base)
}

/// How a permutation is cut into two parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Juxtaposition {
    /// Left part in the first class, right part in the second.
    Horizontal,
    /// Bottom part in the first class, top part in the second.
    Vertical,
}

/// Whether `p` splits into two parts, the first order isomorphic to a member
/// of `Av(first)` and the second to a member of `Av(second)`.
pub fn juxtaposition_member(p: &Permutation, first: &Basis, second: &Basis, direction: Juxtaposition) -> bool {
    let q = match direction {
        Juxtaposition::Horizontal => p.clone(),
        Juxtaposition::Vertical => p.inverse(),
    };
    let e = q.entries();
    (0..=e.len()).any(|cut| {
        let (a, b) = (Permutation::pattern_of(&e[..cut]), Permutation::pattern_of(&e[cut..]));
        let (a, b) = match direction {
            Juxtaposition::Horizontal => (a, b),
            Juxtaposition::Vertical => (a.inverse(), b.inverse()),
        };
        avoids_all(&a, first) && avoids_all(&b, second)
    })
}

fn census_cap(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.census_length {
        return Err(Error::CapExceeded {
            what: "pin class census length",
            requested: n,
            cap: limits.census_length,
        });
    }
    Ok(())
}

/// Packed permutations of all pin words of length `n` starting with `prefix`.
fn census_from(prefix: &[PinLetter], n: usize) -> HashSet<u64> {
    fn go(realizer: &mut Realizer, last: PinLetter, depth: usize, n: usize, out: &mut HashSet<u64>) {
        if depth == n {
            out.insert(realizer.permutation().pack());
            return;
        }
        for l in PinLetter::ALL {
            if last.may_precede(l) {
                realizer.push(l);
                go(realizer, l, depth + 1, n, out);
                realizer.pop();
            }
        }
    }
    let mut out = HashSet::new();
    let mut r = Realizer::new();
    prefix.iter().for_each(|&l| r.push(l));
    go(&mut r, *prefix.last().unwrap(), prefix.len(), n, &mut out);
    out
}

/// The permutations of length `n` corresponding to pin words, sorted.
pub fn pin_class_census(n: usize) -> Result<(usize, Vec<Permutation>)> {
    pin_class_census_with(n, &Limits::default())
}

/// Pin words are split by their first two letters and the parts enumerated
/// in parallel.
pub fn pin_class_census_with(n: usize, limits: &Limits) -> Result<(usize, Vec<Permutation>)> {
    census_cap(n, limits)?;
    if n == 0 {
        return Ok((1, vec![Permutation::empty()]));
    }
    let prefixes: Vec<Vec<PinLetter>> = if n == 1 {
        PinLetter::NUMERALS.iter().map(|&l| vec![l]).collect()
    } else {
        PinLetter::NUMERALS
            .iter()
            .flat_map(|&a| PinLetter::ALL.iter().map(move |&b| vec![a, b]))
            .filter(|w| w[0].may_precede(w[1]))
            .collect()
    };
    let codes = prefixes
        .par_iter()
        .map(|prefix| census_from(prefix, n))
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut perms: Vec<Permutation> = codes.into_iter().map(|c| Permutation::unpack(c, n)).collect();
    perms.sort();
    Ok((perms.len(), perms))
}

/// Sizes of the pin class at lengths `1..=max_n`.
pub fn pin_class_series(max_n: usize) -> Result<Vec<usize>> {
    (1..=max_n).map(|n| Ok(pin_class_census(n)?.0)).collect()
}

/// Minimal permutations of length at most `max_n` outside the pin class,
/// sorted.
pub fn pin_class_basis(max_n: usize) -> Result<Vec<Permutation>> {
    pin_class_basis_with(max_n, &Limits::default())
}

pub fn pin_class_basis_with(max_n: usize, limits: &Limits) -> Result<Vec<Permutation>> {
    census_cap(max_n, limits)?;
    let mut basis = Vec::new();
    let mut shorter: HashSet<Permutation> = HashSet::from([Permutation::empty()]);
    for n in 1..=max_n {
        let members: HashSet<Permutation> = pin_class_census_with(n, limits)?.1.into_iter().collect();
        let minimal: Vec<Permutation> = all_permutations(n)
            .into_par_iter()
            .filter(|p| !members.contains(p) && p.one_point_deletions().iter().all(|q| shorter.contains(q)))
            .collect();
        basis.extend(minimal);
        shorter = members;
    }
    basis.sort();
    Ok(basis)
}
