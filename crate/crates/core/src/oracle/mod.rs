//! Ground-truth membership of ultimately periodic words.
//!
//! A run of an automaton over `u·v^ω` is a path in the product of the
//! automaton with the lasso-shaped position graph of the word. The word is
//! accepted iff some reachable part of that product satisfies the
//! acceptance condition, which is decided per acceptance type on strongly
//! connected components.

mod scc;

pub use scc::{scc_decompose, Scc};

use std::collections::HashMap;

use crate::automaton::{Acceptance, OmegaAutomaton, Pair};
use crate::error::{Error, Result};
use crate::stateset::StateSet;
use crate::word::UltimatelyPeriodicWord;

use scc::sccs_within;

/// The reachable part of automaton × word positions.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    /// `(state, position)` for every node.
    pub nodes: Vec<(usize, usize)>,
    /// Successor lists over node ids.
    pub succ: Vec<Vec<usize>>,
}

impl ProductGraph {
    /// Builds the product restricted to nodes reachable from `(q₀, 0)`.
    pub fn build(a: &OmegaAutomaton, w: &UltimatelyPeriodicWord) -> Result<Self> {
        w.check_alphabet(a.alphabet())?;
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut nodes = Vec::new();
        let mut succ: Vec<Vec<usize>> = Vec::new();
        for q in a.initial().iter() {
            ids.insert((q, 0), nodes.len());
            nodes.push((q, 0));
            succ.push(Vec::new());
        }
        let mut next = 0;
        while next < nodes.len() {
            let (q, p) = nodes[next];
            let np = w.next_position(p);
            for t in a.successors(q, w.letter_at(p)).iter() {
                let id = *ids.entry((t, np)).or_insert_with(|| {
                    nodes.push((t, np));
                    succ.push(Vec::new());
                    nodes.len() - 1
                });
                succ[next].push(id);
            }
            next += 1;
        }
        Ok(Self { nodes, succ })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `{ (q, p) | q ∈ s }` as a node mask.
    pub fn lift(&self, s: &StateSet) -> Vec<bool> {
        self.nodes.iter().map(|&(q, _)| s.contains(q)).collect()
    }

    fn full_mask(&self) -> Vec<bool> {
        vec![true; self.len()]
    }
}

struct LiftedPair {
    g: Vec<bool>,
    b: Vec<bool>,
}

fn lift_pairs(g: &ProductGraph, pairs: &[Pair]) -> Vec<LiftedPair> {
    pairs.iter().map(|p| LiftedPair { g: g.lift(&p.g), b: g.lift(&p.b) }).collect()
}

fn touches(nodes: &[usize], set: &[bool]) -> bool {
    nodes.iter().any(|&v| set[v])
}

/// Some reachable cycle satisfies every Streett pair.
///
/// Recursive SCC restriction: inside each nontrivial component, pairs whose
/// `G` is met but whose `B` is not can only be satisfied by avoiding `G`, so
/// those `G` nodes are deleted and the remainder is decomposed again.
pub fn nonempty_streett(g: &ProductGraph, pairs: &[Pair]) -> bool {
    let lifted = lift_pairs(g, pairs);
    streett_within(g, &lifted, g.full_mask())
}

fn streett_within(g: &ProductGraph, pairs: &[LiftedPair], mask: Vec<bool>) -> bool {
    for comp in sccs_within(&g.succ, &mask).into_iter().filter(|c| c.nontrivial) {
        let bad: Vec<&LiftedPair> =
            pairs.iter().filter(|p| touches(&comp.nodes, &p.g) && !touches(&comp.nodes, &p.b)).collect();
        if bad.is_empty() {
            return true;
        }
        let mut sub = vec![false; g.len()];
        for &v in &comp.nodes {
            sub[v] = !bad.iter().any(|p| p.g[v]);
        }
        if streett_within(g, pairs, sub) {
            return true;
        }
    }
    false
}

/// Some pair has a reachable cycle meeting `G(i)` while avoiding `B(i)`.
pub fn nonempty_rabin(g: &ProductGraph, pairs: &[Pair]) -> bool {
    lift_pairs(g, pairs).iter().any(|p| {
        let mask: Vec<bool> = p.b.iter().map(|&in_b| !in_b).collect();
        sccs_within(&g.succ, &mask).iter().any(|c| c.nontrivial && touches(&c.nodes, &p.g))
    })
}

pub fn nonempty_buchi(g: &ProductGraph, f: &StateSet) -> bool {
    nonempty_gen_buchi(g, std::slice::from_ref(f))
}

/// Some reachable cycle meets every set.
pub fn nonempty_gen_buchi(g: &ProductGraph, sets: &[StateSet]) -> bool {
    let lifted: Vec<Vec<bool>> = sets.iter().map(|s| g.lift(s)).collect();
    scc_decompose(&g.succ).iter().any(|c| c.nontrivial && lifted.iter().all(|s| touches(&c.nodes, s)))
}

/// Parity is the Streett condition on the same pairs.
pub fn nonempty_parity(g: &ProductGraph, pairs: &[Pair]) -> bool {
    nonempty_streett(g, pairs)
}

/// Whether some run of `a` over `w` is accepting.
pub fn member(a: &OmegaAutomaton, w: &UltimatelyPeriodicWord) -> Result<bool> {
    let g = ProductGraph::build(a, w)?;
    Ok(match a.acceptance() {
        Acceptance::Buchi(f) => nonempty_buchi(&g, f),
        Acceptance::GenBuchi(bs) => nonempty_gen_buchi(&g, bs),
        Acceptance::Streett(ps) => nonempty_streett(&g, ps),
        Acceptance::Parity(ps) => nonempty_parity(&g, ps),
        Acceptance::Rabin(ps) => nonempty_rabin(&g, ps),
    })
}

/// The unique run of a deterministic automaton over a lasso word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetLasso {
    /// Transitions taken until a `(state, position)` pair repeated.
    pub steps: usize,
    /// States on the repeated cycle, i.e. `Inf` of the run.
    pub inf: StateSet,
}

/// Simulates the run; `None` if it blocks on a missing transition.
pub fn deterministic_run(a: &OmegaAutomaton, w: &UltimatelyPeriodicWord) -> Result<Option<DetLasso>> {
    w.check_alphabet(a.alphabet())?;
    if !a.is_deterministic() {
        return Err(Error::NotDeterministic);
    }
    let mut q = a.initial().iter().next().expect("deterministic automata have an initial state");
    let mut pos = 0;
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut trace = Vec::new();
    loop {
        if let Some(&start) = seen.get(&(q, pos)) {
            return Ok(Some(DetLasso { steps: trace.len(), inf: trace[start..].iter().collect() }));
        }
        seen.insert((q, pos), trace.len());
        trace.push(q);
        match a.det_successor(q, w.letter_at(pos)) {
            Some(t) => q = t,
            None => return Ok(None),
        }
        pos = w.next_position(pos);
    }
}

/// Membership for deterministic automata by direct simulation; agrees with
/// [`member`].
pub fn member_deterministic(a: &OmegaAutomaton, w: &UltimatelyPeriodicWord) -> Result<bool> {
    Ok(deterministic_run(a, w)?.is_some_and(|run| a.acceptance().accepts_inf(&run.inf)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> StateSet {
        xs.iter().collect()
    }

    fn word(s: &str) -> UltimatelyPeriodicWord {
        s.parse().unwrap()
    }

    /// Büchi automaton for "infinitely many 0": state 1 is entered on 0.
    fn inf_zero() -> OmegaAutomaton {
        OmegaAutomaton::new(2, 2, Acceptance::Buchi(set(&[1]))).with_initial([0]).with_transitions(&[
            (0, 0, 1),
            (0, 1, 0),
            (1, 0, 1),
            (1, 1, 0),
        ])
    }

    fn self_loop(acc: Acceptance) -> OmegaAutomaton {
        OmegaAutomaton::new(1, 1, acc).with_initial([0]).with_transitions(&[(0, 0, 0)])
    }

    #[test]
    fn canonical_buchi_examples() {
        assert!(member(&inf_zero(), &word(";0")).unwrap());
        assert!(!member(&inf_zero(), &word("0;1")).unwrap());
        assert!(member(&inf_zero(), &word("1 1;1 0")).unwrap());
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        assert!(matches!(member(&inf_zero(), &word(";2")), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn streett_without_pairs_accepts_any_cycle() {
        let a = self_loop(Acceptance::Streett(vec![]));
        assert!(member(&a, &word(";0")).unwrap());
    }

    #[test]
    fn unmeetable_streett_obligation() {
        let a = self_loop(Acceptance::Streett(vec![Pair::new(set(&[0]), set(&[]))]));
        assert!(!member(&a, &word(";0")).unwrap());
    }

    #[test]
    fn rabin_without_pairs_rejects() {
        let a = self_loop(Acceptance::Rabin(vec![]));
        assert!(!member(&a, &word(";0")).unwrap());
        let a = self_loop(Acceptance::Rabin(vec![Pair::new(set(&[0]), set(&[]))]));
        assert!(member(&a, &word(";0")).unwrap());
    }

    #[test]
    fn unreachable_final_set() {
        let a = OmegaAutomaton::new(2, 1, Acceptance::Buchi(set(&[1])))
            .with_initial([0])
            .with_transitions(&[(0, 0, 0), (1, 0, 1)]);
        assert!(!member(&a, &word(";0")).unwrap());
    }

    #[test]
    fn gen_buchi_on_one_cycle() {
        let a = OmegaAutomaton::new(2, 1, Acceptance::GenBuchi(vec![set(&[0]), set(&[1])]))
            .with_initial([0])
            .with_transitions(&[(0, 0, 1), (1, 0, 0)]);
        assert!(member(&a, &word(";0")).unwrap());
    }

    #[test]
    fn streett_needs_union_of_cycles() {
        // 0 branches to 1 or 2, both return to 0. Only a run visiting both
        // branches infinitely often meets the two mutual obligations.
        let branch = |pairs| {
            OmegaAutomaton::new(3, 1, Acceptance::Streett(pairs)).with_initial([0]).with_transitions(&[
                (0, 0, 1),
                (0, 0, 2),
                (1, 0, 0),
                (2, 0, 0),
            ])
        };
        let mutual = vec![Pair::new(set(&[1]), set(&[2])), Pair::new(set(&[2]), set(&[1]))];
        assert!(member(&branch(mutual.clone()), &word(";0")).unwrap());
        let mut never_one = mutual;
        never_one.push(Pair::new(set(&[1]), set(&[])));
        assert!(!member(&branch(never_one), &word(";0")).unwrap());
        let one_way = vec![Pair::new(set(&[1]), set(&[])), Pair::new(set(&[0]), set(&[2]))];
        assert!(member(&branch(one_way), &word(";0")).unwrap());
    }

    #[test]
    fn deterministic_fast_path() {
        let a = self_loop(Acceptance::Rabin(vec![Pair::new(set(&[0]), set(&[]))]));
        assert!(member_deterministic(&a, &word(";0")).unwrap());
        assert!(member_deterministic(&a, &word("0 0 0;0 0")).unwrap());
        assert!(member_deterministic(&inf_zero(), &word(";0")).unwrap());
        assert!(!member_deterministic(&inf_zero(), &word("0 0;1")).unwrap());
    }

    #[test]
    fn deterministic_run_step_bound() {
        let a = inf_zero();
        for w in UltimatelyPeriodicWord::enumerate(2, 3) {
            let run = deterministic_run(&a, &w).unwrap().unwrap();
            assert!(run.steps <= a.states() * w.positions() + w.prefix().len());
        }
    }
}
