use std::collections::HashMap;
use std::fmt::Write as _;

use crate::automata::nfa::Nfa;
use crate::automata::{StateId, ALPHABET_SIZE};
use crate::pin::PinLetter;

/// A complete deterministic automaton over the pin alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    initial: StateId,
    accepting: Vec<bool>,
    delta: Vec<[u32; ALPHABET_SIZE]>,
}

impl Dfa {
    /// Panics unless every target is a state.
    pub fn from_parts(initial: StateId, accepting: Vec<bool>, delta: Vec<[u32; ALPHABET_SIZE]>) -> Dfa {
        let n = accepting.len();
        assert_eq!(delta.len(), n, "one transition row per state");
        assert!(initial < n, "initial state out of range");
        assert!(
            delta.iter().flatten().all(|&t| (t as usize) < n),
            "transition target out of range"
        );
        Dfa {
            initial,
            accepting,
            delta,
        }
    }

    /// Builds a complete machine from a partial transition list; missing
    /// transitions go to an added non-accepting sink.
    pub fn from_partial<T>(num_states: usize, initial: StateId, accepting: &[StateId], transitions: T) -> Dfa
    where
        T: IntoIterator<Item = (StateId, PinLetter, StateId)>,
    {
        let sink = num_states as u32;
        let mut delta = vec![[sink; ALPHABET_SIZE]; num_states + 1];
        for (s, l, t) in transitions {
            assert_eq!(delta[s][l.index()], sink, "nondeterministic transition from {s} on {l}");
            delta[s][l.index()] = t as u32;
        }
        let mut acc = vec![false; num_states + 1];
        for &s in accepting {
            acc[s] = true;
        }
        Dfa::from_parts(initial, acc, delta)
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_accepting(&self, s: StateId) -> bool {
        self.accepting[s]
    }

    pub fn next(&self, s: StateId, letter: PinLetter) -> StateId {
        self.delta[s][letter.index()] as StateId
    }

    pub fn accepts(&self, word: &[PinLetter]) -> bool {
        let end = word.iter().fold(self.initial, |s, &l| self.next(s, l));
        self.accepting[end]
    }

    /// Same transitions, accepting set flipped.
    pub fn complement(&self) -> Dfa {
        Dfa {
            initial: self.initial,
            accepting: self.accepting.iter().map(|a| !a).collect(),
            delta: self.delta.clone(),
        }
    }

    /// Reachable product; a pair accepts when `accept(a, b)` holds.
    pub fn product(&self, other: &Dfa, accept: impl Fn(bool, bool) -> bool) -> Dfa {
        let mut index: HashMap<(StateId, StateId), u32> = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            let mut row = [0u32; ALPHABET_SIZE];
            for l in PinLetter::ALL {
                let target = (self.next(p, l), other.next(q, l));
                let next_id = pairs.len() as u32;
                let id = *index.entry(target).or_insert_with(|| {
                    pairs.push(target);
                    next_id
                });
                row[l.index()] = id;
            }
            delta.push(row);
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| accept(self.accepting[p], other.accepting[q]))
            .collect();
        Dfa::from_parts(0, accepting, delta)
    }

    pub fn intersect(&self, other: &Dfa) -> Dfa {
        self.product(other, |a, b| a && b)
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(s) = stack.pop() {
            for &t in &self.delta[s] {
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    stack.push(t as usize);
                }
            }
        }
        seen
    }

    /// Hopcroft partition refinement over the reachable states.
    pub fn minimize(&self) -> Dfa {
        let reachable = self.reachable();
        let states: Vec<StateId> = (0..self.num_states()).filter(|&s| reachable[s]).collect();
        let n = self.num_states();

        // inverse transitions of reachable states, flattened: the sources of
        // `(t, c)` are `inv_sources[inv_start[k]..inv_start[k + 1]]`, `k = t * 8 + c`
        let key = |t: usize, c: usize| t * ALPHABET_SIZE + c;
        let mut inv_start = vec![0usize; n * ALPHABET_SIZE + 1];
        for &s in &states {
            for (c, &t) in self.delta[s].iter().enumerate() {
                inv_start[key(t as usize, c) + 1] += 1;
            }
        }
        for k in 1..inv_start.len() {
            inv_start[k] += inv_start[k - 1];
        }
        let mut fill = inv_start.clone();
        let mut inv_sources = vec![0usize; inv_start[n * ALPHABET_SIZE]];
        for &s in &states {
            for (c, &t) in self.delta[s].iter().enumerate() {
                let k = key(t as usize, c);
                inv_sources[fill[k]] = s;
                fill[k] += 1;
            }
        }

        let (acc, rej): (Vec<StateId>, Vec<StateId>) = states.iter().partition(|&&s| self.accepting[s]);
        let mut blocks: Vec<Vec<StateId>> = [acc, rej].into_iter().filter(|b| !b.is_empty()).collect();
        let mut block_of = vec![usize::MAX; n];
        for (b, members) in blocks.iter().enumerate() {
            for &s in members {
                block_of[s] = b;
            }
        }

        let mut pending: Vec<(usize, usize)> = Vec::new();
        if blocks.len() == 2 {
            let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
            pending.extend((0..ALPHABET_SIZE).map(|c| (smaller, c)));
        }

        let mut marked_count: Vec<usize> = vec![0; blocks.len()];
        let mut is_marked = vec![false; n];
        while let Some((splitter, c)) = pending.pop() {
            let mut preimage = Vec::new();
            for &t in &blocks[splitter] {
                let k = key(t, c);
                for &s in &inv_sources[inv_start[k]..inv_start[k + 1]] {
                    if !is_marked[s] {
                        is_marked[s] = true;
                        preimage.push(s);
                    }
                }
            }
            let mut touched = Vec::new();
            for &s in &preimage {
                let b = block_of[s];
                if marked_count[b] == 0 {
                    touched.push(b);
                }
                marked_count[b] += 1;
            }
            for b in touched {
                let count = std::mem::take(&mut marked_count[b]);
                if count == blocks[b].len() {
                    continue;
                }
                let (inside, outside): (Vec<StateId>, Vec<StateId>) =
                    blocks[b].iter().partition(|&&s| is_marked[s]);
                let new_id = blocks.len();
                let (keep, moved) = if inside.len() <= outside.len() {
                    (outside, inside)
                } else {
                    (inside, outside)
                };
                for &s in &moved {
                    block_of[s] = new_id;
                }
                blocks[b] = keep;
                blocks.push(moved);
                marked_count.push(0);
                // `new_id` holds the smaller half, so it is the one to queue
                // whether or not `b` is still pending.
                pending.extend((0..ALPHABET_SIZE).map(|a| (new_id, a)));
            }
            for s in preimage {
                is_marked[s] = false;
            }
        }

        // number blocks in breadth-first order from the initial state
        let mut renumber = vec![u32::MAX; blocks.len()];
        let mut order = vec![block_of[self.initial]];
        renumber[order[0]] = 0;
        let mut i = 0;
        while i < order.len() {
            let rep = blocks[order[i]][0];
            for &t in &self.delta[rep] {
                let b = block_of[t as usize];
                if renumber[b] == u32::MAX {
                    renumber[b] = order.len() as u32;
                    order.push(b);
                }
            }
            i += 1;
        }
        let delta = order
            .iter()
            .map(|&b| {
                let rep = blocks[b][0];
                let mut row = [0u32; ALPHABET_SIZE];
                for (c, &t) in self.delta[rep].iter().enumerate() {
                    row[c] = renumber[block_of[t as usize]];
                }
                row
            })
            .collect();
        let accepting = order.iter().map(|&b| self.accepting[blocks[b][0]]).collect();
        Dfa::from_parts(0, accepting, delta)
    }

    pub fn to_nfa(&self) -> Nfa {
        Nfa::new(
            self.num_states(),
            self.initial,
            (0..self.num_states()).filter(|&s| self.accepting[s]),
            (0..self.num_states()).flat_map(|s| {
                PinLetter::ALL
                    .into_iter()
                    .map(move |l| (s, Some(l), self.delta[s][l.index()] as StateId))
            }),
        )
    }

    pub fn is_empty(&self) -> bool {
        let reachable = self.reachable();
        !(0..self.num_states()).any(|s| reachable[s] && self.accepting[s])
    }

    pub fn is_infinite(&self) -> bool {
        self.to_nfa().is_infinite()
    }

    /// Number of accepted words of length exactly `n`.
    ///
    /// Paths into states that cannot reach acceptance are not tracked, so
    /// only the accepted count itself can overflow, which panics.
    pub fn count_words(&self, n: usize) -> u128 {
        let live = self.to_nfa().live_states();
        let mut counts = vec![0u128; self.num_states()];
        if !live[self.initial] {
            return 0;
        }
        counts[self.initial] = 1;
        for _ in 0..n {
            let mut next = vec![0u128; self.num_states()];
            for (s, &k) in counts.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                for &t in self.delta[s].iter().filter(|&&t| live[t as usize]) {
                    let slot = &mut next[t as usize];
                    *slot = slot.checked_add(k).expect("word count overflows u128");
                }
            }
            counts = next;
        }
        counts
            .iter()
            .enumerate()
            .filter(|&(s, _)| self.accepting[s])
            .map(|(_, &k)| k)
            .sum()
    }

    /// Same layout as [`Nfa::to_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "initial\t{}", self.initial).unwrap();
        let acc: Vec<String> = (0..self.num_states())
            .filter(|&s| self.accepting[s])
            .map(|s| s.to_string())
            .collect();
        writeln!(out, "accepting\t{}", acc.join(" ")).unwrap();
        for (s, row) in self.delta.iter().enumerate() {
            for l in PinLetter::ALL {
                writeln!(out, "{s}\t{l}\t{}", row[l.index()]).unwrap();
            }
        }
        out
    }
}
