use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::automata::dfa::Dfa;
use crate::automata::{label_text, StateId, ALPHABET_SIZE};
use crate::error::{Error, Result};
use crate::pin::PinLetter;

/// A transition label; `None` is ε.
pub type Label = Option<PinLetter>;

/// Nondeterministic automaton with ε-moves over the pin alphabet.
#[derive(Debug)]
pub struct Nfa {
    initial: StateId,
    accepting: Vec<bool>,
    edges: Vec<Vec<(Label, StateId)>>,
    closures: OnceLock<Vec<Vec<StateId>>>,
}

impl Clone for Nfa {
    fn clone(&self) -> Self {
        Nfa {
            initial: self.initial,
            accepting: self.accepting.clone(),
            edges: self.edges.clone(),
            closures: OnceLock::new(),
        }
    }
}

impl Nfa {
    /// Panics if the initial state or a transition endpoint is not below
    /// `num_states`.
    pub fn new<A, T>(num_states: usize, initial: StateId, accepting: A, transitions: T) -> Nfa
    where
        A: IntoIterator<Item = StateId>,
        T: IntoIterator<Item = (StateId, Label, StateId)>,
    {
        assert!(initial < num_states, "initial state {initial} out of range");
        let mut acc = vec![false; num_states];
        for s in accepting {
            assert!(s < num_states, "accepting state {s} out of range");
            acc[s] = true;
        }
        let mut edges = vec![Vec::new(); num_states];
        for (from, label, to) in transitions {
            assert!(from < num_states && to < num_states, "transition {from}->{to} out of range");
            edges[from].push((label, to));
        }
        for e in &mut edges {
            e.sort_unstable();
            e.dedup();
        }
        Nfa {
            initial,
            accepting: acc,
            edges,
            closures: OnceLock::new(),
        }
    }

    /// The machine accepting nothing.
    pub fn empty_language() -> Nfa {
        Nfa::new(1, 0, [], [])
    }

    /// The machine accepting exactly `word`.
    pub fn single_word(word: &[PinLetter]) -> Nfa {
        let n = word.len();
        Nfa::new(
            n + 1,
            0,
            [n],
            word.iter().enumerate().map(|(i, &l)| (i, Some(l), i + 1)),
        )
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

    pub fn num_transitions(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn edges(&self, s: StateId) -> &[(Label, StateId)] {
        &self.edges[s]
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Label, StateId)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(s, es)| es.iter().map(move |&(l, t)| (s, l, t)))
    }

    /// ε-closure of every state, sorted, computed on first use.
    fn closures(&self) -> &[Vec<StateId>] {
        self.closures.get_or_init(|| {
            let n = self.num_states();
            let mut stamp = vec![usize::MAX; n];
            (0..n)
                .map(|s| {
                    let mut out = vec![s];
                    stamp[s] = s;
                    let mut i = 0;
                    while i < out.len() {
                        let cur = out[i];
                        i += 1;
                        for &(l, t) in &self.edges[cur] {
                            if l.is_none() && stamp[t] != s {
                                stamp[t] = s;
                                out.push(t);
                            }
                        }
                    }
                    out.sort_unstable();
                    out
                })
                .collect()
        })
    }

    pub fn epsilon_closure(&self, s: StateId) -> &[StateId] {
        &self.closures()[s]
    }

    // Closure of the letter-successors of a state set; `set` must be closed.
    fn step_set(&self, set: &[StateId], letter: PinLetter, mark: &mut [bool]) -> Vec<StateId> {
        let closures = self.closures();
        let mut out = Vec::new();
        for &s in set {
            for &(l, t) in &self.edges[s] {
                if l == Some(letter) {
                    for &c in &closures[t] {
                        if !mark[c] {
                            mark[c] = true;
                            out.push(c);
                        }
                    }
                }
            }
        }
        for &c in &out {
            mark[c] = false;
        }
        out.sort_unstable();
        out
    }

    /// Direct simulation on a word.
    pub fn accepts(&self, word: &[PinLetter]) -> bool {
        let mut mark = vec![false; self.num_states()];
        let mut current = self.epsilon_closure(self.initial).to_vec();
        for &l in word {
            current = self.step_set(&current, l, &mut mark);
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|&s| self.accepting[s])
    }

    fn forward_reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(s) = stack.pop() {
            for &(_, t) in &self.edges[s] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    fn co_reachable(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut reverse = vec![Vec::new(); n];
        for (s, _, t) in self.transitions() {
            reverse[t].push(s);
        }
        let mut seen = self.accepting.clone();
        let mut stack: Vec<StateId> = (0..n).filter(|&s| seen[s]).collect();
        while let Some(s) = stack.pop() {
            for &p in &reverse[s] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// States both reachable from the initial state and able to reach an
    /// accepting state.
    pub fn live_states(&self) -> Vec<bool> {
        let f = self.forward_reachable();
        let b = self.co_reachable();
        f.iter().zip(&b).map(|(&x, &y)| x && y).collect()
    }

    /// Restriction to live states. An empty language yields the one-state
    /// machine with no accepting state.
    pub fn trim(&self) -> Nfa {
        let live = self.live_states();
        if !live[self.initial] {
            return Nfa::empty_language();
        }
        let mut index = vec![usize::MAX; self.num_states()];
        let mut next = 0;
        for s in 0..self.num_states() {
            if live[s] {
                index[s] = next;
                next += 1;
            }
        }
        Nfa::new(
            next,
            index[self.initial],
            (0..self.num_states()).filter(|&s| live[s] && self.accepting[s]).map(|s| index[s]),
            self.transitions()
                .filter(|&(s, _, t)| live[s] && live[t])
                .map(|(s, l, t)| (index[s], l, index[t])),
        )
    }

    pub fn is_empty(&self) -> bool {
        !self.live_states()[self.initial]
    }

    /// Whether the language is infinite: some cycle among live states reads
    /// at least one letter.
    pub fn is_infinite(&self) -> bool {
        let live = self.live_states();
        let live_ref = &live;
        let scc = strongly_connected_components(self.num_states(), |s| {
            self.edges[s]
                .iter()
                .map(|&(_, t)| t)
                .filter(move |&t| live_ref[s] && live_ref[t])
        });
        self.transitions()
            .any(|(s, l, t)| l.is_some() && live[s] && live[t] && scc[s] == scc[t])
    }

    /// Language union, via a fresh initial state with ε-moves.
    pub fn union(&self, other: &Nfa) -> Nfa {
        Nfa::union_all([self, other])
    }

    pub fn union_all<'a, I: IntoIterator<Item = &'a Nfa>>(machines: I) -> Nfa {
        let mut accepting = Vec::new();
        let mut transitions = Vec::new();
        let mut offset = 1;
        for m in machines {
            transitions.push((0, None, m.initial + offset));
            accepting.extend((0..m.num_states()).filter(|&s| m.accepting[s]).map(|s| s + offset));
            transitions.extend(m.transitions().map(|(s, l, t)| (s + offset, l, t + offset)));
            offset += m.num_states();
        }
        Nfa::new(offset, 0, accepting, transitions)
    }

    /// Language intersection by the reachable product construction; ε-moves
    /// of either side advance that side alone.
    pub fn intersect(&self, other: &Nfa) -> Nfa {
        let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0);
        let mut transitions = Vec::new();
        let mut intern = |pair: (StateId, StateId), pairs: &mut Vec<(StateId, StateId)>| {
            *index.entry(pair).or_insert_with(|| {
                pairs.push(pair);
                pairs.len() - 1
            })
        };
        let mut from = 0;
        while from < pairs.len() {
            let (p, q) = pairs[from];
            for &(l, p2) in &self.edges[p] {
                if l.is_none() {
                    let to = intern((p2, q), &mut pairs);
                    transitions.push((from, None, to));
                }
            }
            for &(l, q2) in &other.edges[q] {
                if l.is_none() {
                    let to = intern((p, q2), &mut pairs);
                    transitions.push((from, None, to));
                }
            }
            for &(l, p2) in &self.edges[p] {
                let Some(letter) = l else { continue };
                for &(m, q2) in &other.edges[q] {
                    if m == Some(letter) {
                        let to = intern((p2, q2), &mut pairs);
                        transitions.push((from, l, to));
                    }
                }
            }
            from += 1;
        }
        let accepting: Vec<StateId> = (0..pairs.len())
            .filter(|&i| self.accepting[pairs[i].0] && other.accepting[pairs[i].1])
            .collect();
        Nfa::new(pairs.len(), 0, accepting, transitions)
    }

    /// Subset construction. Fails when more than `state_cap` subset states
    /// would be created. The result is complete (the empty subset is the
    /// sink) but not minimized.
    pub fn determinize(&self, state_cap: usize) -> Result<Dfa> {
        let mut index: HashMap<Vec<StateId>, u32> = HashMap::new();
        let mut subsets: Vec<Vec<StateId>> = Vec::new();
        let mut delta: Vec<[u32; ALPHABET_SIZE]> = Vec::new();
        let mut mark = vec![false; self.num_states()];
        let start = self.epsilon_closure(self.initial).to_vec();
        index.insert(start.clone(), 0);
        subsets.push(start);
        let mut next = 0;
        while next < subsets.len() {
            let mut row = [0u32; ALPHABET_SIZE];
            for letter in PinLetter::ALL {
                let target = self.step_set(&subsets[next], letter, &mut mark);
                let id = match index.get(&target) {
                    Some(&id) => id,
                    None => {
                        if subsets.len() >= state_cap {
                            return Err(Error::CapExceeded {
                                what: "determinization state",
                                requested: subsets.len() + 1,
                                cap: state_cap,
                            });
                        }
                        let id = subsets.len() as u32;
                        index.insert(target.clone(), id);
                        subsets.push(target);
                        id
                    }
                };
                row[letter.index()] = id;
            }
            delta.push(row);
            next += 1;
        }
        let accepting = subsets
            .iter()
            .map(|set| set.iter().any(|&s| self.accepting[s]))
            .collect();
        Ok(Dfa::from_parts(0, accepting, delta))
    }

    /// One transition per line, `state TAB label TAB state`, after
    /// `initial` and `accepting` header lines. ε is written `eps`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "initial\t{}", self.initial).unwrap();
        let acc: Vec<String> = (0..self.num_states())
            .filter(|&s| self.accepting[s])
            .map(|s| s.to_string())
            .collect();
        writeln!(out, "accepting\t{}", acc.join(" ")).unwrap();
        for (s, l, t) in self.transitions() {
            writeln!(out, "{s}\t{}\t{t}", label_text(l)).unwrap();
        }
        out
    }
}

/// Component id of every state (iterative Tarjan).
pub(crate) fn strongly_connected_components<F, I>(n: usize, successors: F) -> Vec<usize>
where
    F: Fn(StateId) -> I,
    I: Iterator<Item = StateId>,
{
    const UNVISITED: usize = usize::MAX;
    let mut order = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut comp = vec![UNVISITED; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut counter = 0;
    let mut components = 0;
    for root in 0..n {
        if order[root] != UNVISITED {
            continue;
        }
        let mut call: Vec<(StateId, Vec<StateId>, usize)> = Vec::new();
        order[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, successors(root).collect(), 0));
        while let Some((v, succ, i)) = call.last_mut() {
            let v = *v;
            if *i < succ.len() {
                let w = succ[*i];
                *i += 1;
                if order[w] == UNVISITED {
                    order[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, successors(w).collect(), 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                call.pop();
                if let Some((parent, _, _)) = call.last() {
                    low[*parent] = low[*parent].min(low[v]);
                }
                if low[v] == order[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = components;
                        if w == v {
                            break;
                        }
                    }
                    components += 1;
                }
            }
        }
    }
    comp
}
