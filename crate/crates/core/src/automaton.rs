//! The automaton data model: states and letters are dense integer ranges,
//! transitions are stored as successor sets per `(state, letter)`, and the
//! acceptance condition is one of five tagged pair structures.
//!
//! Pair indices are 1-based on every public interface (`I = [1..k]`); the
//! vectors below store pair `i` at position `i - 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::stateset::StateSet;

/// One `⟨G, B⟩` pair of a Streett, parity or Rabin condition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Pair {
    pub g: StateSet,
    pub b: StateSet,
}

impl Pair {
    pub fn new(g: StateSet, b: StateSet) -> Self {
        Self { g, b }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AcceptanceKind {
    Buchi,
    GenBuchi,
    Streett,
    Parity,
    Rabin,
}

impl AcceptanceKind {
    pub fn keyword(self) -> &'static str {
        match self {
            AcceptanceKind::Buchi => "buchi",
            AcceptanceKind::GenBuchi => "genbuchi",
            AcceptanceKind::Streett => "streett",
            AcceptanceKind::Parity => "parity",
            AcceptanceKind::Rabin => "rabin",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Some(match s {
            "buchi" => AcceptanceKind::Buchi,
            "genbuchi" => AcceptanceKind::GenBuchi,
            "streett" => AcceptanceKind::Streett,
            "parity" => AcceptanceKind::Parity,
            "rabin" => AcceptanceKind::Rabin,
            _ => return None,
        })
    }

    /// Whether the condition has `G` sets in addition to `B` sets.
    pub fn has_g(self) -> bool {
        matches!(self, AcceptanceKind::Streett | AcceptanceKind::Parity | AcceptanceKind::Rabin)
    }
}

impl fmt::Display for AcceptanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Acceptance {
    /// Final set `F`: some state of `F` recurs.
    Buchi(StateSet),
    /// Every `B(i)` recurs.
    GenBuchi(Vec<StateSet>),
    /// For every pair, if `G(i)` recurs then `B(i)` recurs.
    Streett(Vec<Pair>),
    /// Streett pairs forming the chain `B(1) ⊂ G(1) ⊂ B(2) ⊂ … ⊂ G(k)`.
    Parity(Vec<Pair>),
    /// Some pair has `G(i)` recurring and `B(i)` finitely visited.
    Rabin(Vec<Pair>),
}

impl Acceptance {
    pub fn kind(&self) -> AcceptanceKind {
        match self {
            Acceptance::Buchi(_) => AcceptanceKind::Buchi,
            Acceptance::GenBuchi(_) => AcceptanceKind::GenBuchi,
            Acceptance::Streett(_) => AcceptanceKind::Streett,
            Acceptance::Parity(_) => AcceptanceKind::Parity,
            Acceptance::Rabin(_) => AcceptanceKind::Rabin,
        }
    }

    /// Index size `k`.
    pub fn index_size(&self) -> usize {
        match self {
            Acceptance::Buchi(_) => 1,
            Acceptance::GenBuchi(bs) => bs.len(),
            Acceptance::Streett(ps) | Acceptance::Parity(ps) | Acceptance::Rabin(ps) => ps.len(),
        }
    }

    pub fn pairs(&self) -> Option<&[Pair]> {
        match self {
            Acceptance::Streett(ps) | Acceptance::Parity(ps) | Acceptance::Rabin(ps) => Some(ps),
            _ => None,
        }
    }

    /// Evaluates the condition on the set of states visited infinitely often.
    pub fn accepts_inf(&self, inf: &StateSet) -> bool {
        match self {
            Acceptance::Buchi(f) => inf.intersects(f),
            Acceptance::GenBuchi(bs) => bs.iter().all(|b| inf.intersects(b)),
            Acceptance::Streett(ps) | Acceptance::Parity(ps) => {
                ps.iter().all(|p| !inf.intersects(&p.g) || inf.intersects(&p.b))
            }
            Acceptance::Rabin(ps) => ps.iter().any(|p| inf.intersects(&p.g) && !inf.intersects(&p.b)),
        }
    }

    fn sets(&self) -> Vec<(&'static str, usize, &StateSet)> {
        match self {
            Acceptance::Buchi(f) => vec![("B", 1, f)],
            Acceptance::GenBuchi(bs) => bs.iter().enumerate().map(|(i, b)| ("B", i + 1, b)).collect(),
            Acceptance::Streett(ps) | Acceptance::Parity(ps) | Acceptance::Rabin(ps) => {
                ps.iter().enumerate().flat_map(|(i, p)| [("G", i + 1, &p.g), ("B", i + 1, &p.b)]).collect()
            }
        }
    }
}

/// A broken well-formedness rule, as reported by [`OmegaAutomaton::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    InitialEmpty,
    InitialOutOfRange(usize),
    TargetOutOfRange {
        from: usize,
        letter: usize,
        to: usize,
    },
    SetOutOfRange {
        set: &'static str,
        index: usize,
        state: usize,
    },
    /// Two Streett pairs share the same `B` set.
    BNotInjective {
        first: usize,
        second: usize,
    },
    /// The parity sets do not form a strict inclusion chain.
    ParityChainBroken {
        position: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InitialEmpty => write!(f, "initial set empty"),
            Violation::InitialOutOfRange(q) => write!(f, "initial state {q} out of range"),
            Violation::TargetOutOfRange { from, letter, to } => {
                write!(f, "transition {from} {letter} {to} targets a state out of range")
            }
            Violation::SetOutOfRange { set, index, state } => {
                write!(f, "{set}({index}) contains state {state} out of range")
            }
            Violation::BNotInjective { first, second } => {
                write!(f, "B not injective: B({first}) = B({second})")
            }
            Violation::ParityChainBroken { position } => {
                write!(f, "parity chain broken at link {position}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaAutomaton {
    alphabet: usize,
    states: usize,
    initial: StateSet,
    /// Successor sets, indexed by `state * alphabet + letter`.
    succ: Vec<StateSet>,
    acceptance: Acceptance,
}

impl OmegaAutomaton {
    /// An automaton with no transitions and no initial states yet.
    pub fn new(states: usize, alphabet: usize, acceptance: Acceptance) -> Self {
        Self { alphabet, states, initial: StateSet::new(), succ: vec![StateSet::new(); states * alphabet], acceptance }
    }

    pub fn with_initial(mut self, initial: impl IntoIterator<Item = usize>) -> Self {
        self.initial = initial.into_iter().collect();
        self
    }

    pub fn set_initial(&mut self, initial: StateSet) {
        self.initial = initial;
    }

    pub fn add_transition(&mut self, from: usize, letter: usize, to: usize) -> Result<()> {
        for q in [from, to] {
            if q >= self.states {
                return Err(Error::StateOutOfRange { state: q, states: self.states });
            }
        }
        if letter >= self.alphabet {
            return Err(Error::LetterOutOfRange { letter, alphabet: self.alphabet });
        }
        self.succ[from * self.alphabet + letter].insert(to);
        Ok(())
    }

    /// Builder form of [`add_transition`](Self::add_transition) for literal automata.
    ///
    /// Panics on out-of-range ids.
    pub fn with_transitions(mut self, edges: &[(usize, usize, usize)]) -> Self {
        for &(p, a, q) in edges {
            self.add_transition(p, a, q).expect("transition in range");
        }
        self
    }

    pub fn set_acceptance(&mut self, acceptance: Acceptance) {
        self.acceptance = acceptance;
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn initial(&self) -> &StateSet {
        &self.initial
    }

    pub fn acceptance(&self) -> &Acceptance {
        &self.acceptance
    }

    pub fn successors(&self, q: usize, letter: usize) -> &StateSet {
        &self.succ[q * self.alphabet + letter]
    }

    /// All transitions `(q, letter, q')` in ascending order.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.succ.iter().enumerate().flat_map(move |(i, s)| {
            let (q, a) = (i / self.alphabet.max(1), i % self.alphabet.max(1));
            s.iter().map(move |t| (q, a, t))
        })
    }

    /// `{ q' | ∃ q ∈ s, (q, letter, q') ∈ Δ }`.
    pub fn subset_step(&self, s: &StateSet, letter: usize) -> StateSet {
        let mut out = StateSet::new();
        for q in s.iter() {
            out.union_with(self.successors(q, letter));
        }
        out
    }

    /// At most one successor per `(state, letter)` and exactly one initial state.
    pub fn is_deterministic(&self) -> bool {
        self.initial.len() == 1 && self.succ.iter().all(|s| s.len() <= 1)
    }

    pub fn is_total(&self) -> bool {
        self.succ.iter().all(|s| !s.is_empty())
    }

    fn missing_transition(&self) -> Option<(usize, usize)> {
        self.succ.iter().position(|s| s.is_empty()).map(|i| (i / self.alphabet, i % self.alphabet))
    }

    /// The unique successor in a deterministic automaton.
    pub fn det_successor(&self, q: usize, letter: usize) -> Option<usize> {
        self.successors(q, letter).iter().next()
    }

    /// Lists every broken well-formedness rule; empty iff the automaton is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.initial.is_empty() {
            out.push(Violation::InitialEmpty);
        }
        out.extend(self.initial.iter().filter(|&q| q >= self.states).map(Violation::InitialOutOfRange));
        for (from, letter, to) in self.transitions() {
            if to >= self.states {
                out.push(Violation::TargetOutOfRange { from, letter, to });
            }
        }
        for (set, index, s) in self.acceptance.sets() {
            if let Some(state) = s.iter().find(|&q| q >= self.states) {
                out.push(Violation::SetOutOfRange { set, index, state });
            }
        }
        match &self.acceptance {
            Acceptance::Streett(ps) => {
                for (i, p) in ps.iter().enumerate() {
                    if let Some(j) = ps[..i].iter().position(|o| o.b == p.b) {
                        out.push(Violation::BNotInjective { first: j + 1, second: i + 1 });
                    }
                }
            }
            Acceptance::Parity(ps) => {
                let chain: Vec<&StateSet> = ps.iter().flat_map(|p| [&p.b, &p.g]).collect();
                for (pos, w) in chain.windows(2).enumerate() {
                    if !(w[0].is_subset(w[1]) && w[0] != w[1]) {
                        out.push(Violation::ParityChainBroken { position: pos + 1 });
                    }
                }
            }
            _ => {}
        }
        out
    }

    /// Merges Streett pairs that share a `B` set, unioning their `G` sets.
    ///
    /// The merged pairs are numbered in ascending order of the smallest
    /// original index they absorb, so the output is reproducible.
    pub fn simplify_streett(&self) -> Result<OmegaAutomaton> {
        let Acceptance::Streett(ps) = &self.acceptance else {
            return Err(Error::WrongAcceptance { expected: "streett", found: self.acceptance.kind() });
        };
        let mut merged: Vec<Pair> = Vec::with_capacity(ps.len());
        for p in ps {
            match merged.iter_mut().find(|m| m.b == p.b) {
                Some(m) => m.g.union_with(&p.g),
                None => merged.push(p.clone()),
            }
        }
        let mut out = self.clone();
        out.acceptance = Acceptance::Streett(merged);
        Ok(out)
    }

    /// Re-expresses a Büchi, generalized Büchi or parity automaton (or a
    /// Streett one) as a simplified Streett automaton over the same language.
    pub fn as_streett(&self) -> Result<OmegaAutomaton> {
        let all = StateSet::full(self.states);
        let pairs = match &self.acceptance {
            Acceptance::Buchi(f) => vec![Pair::new(all, f.clone())],
            Acceptance::GenBuchi(bs) => bs.iter().map(|b| Pair::new(all.clone(), b.clone())).collect(),
            Acceptance::Streett(ps) | Acceptance::Parity(ps) => ps.clone(),
            Acceptance::Rabin(_) => {
                return Err(Error::WrongAcceptance {
                    expected: "buchi, genbuchi, parity or streett",
                    found: AcceptanceKind::Rabin,
                })
            }
        };
        let mut out = self.clone();
        out.acceptance = Acceptance::Streett(pairs);
        out.simplify_streett()
    }

    /// Complements a deterministic, total Rabin or Streett automaton by
    /// reading its pairs under the dual condition.
    pub fn dualize(&self) -> Result<OmegaAutomaton> {
        if !self.is_deterministic() {
            return Err(Error::NotDeterministic);
        }
        if let Some((state, letter)) = self.missing_transition() {
            return Err(Error::NotTotal { state, letter });
        }
        let acceptance = match &self.acceptance {
            Acceptance::Rabin(ps) => Acceptance::Streett(ps.clone()),
            Acceptance::Streett(ps) => Acceptance::Rabin(ps.clone()),
            other => return Err(Error::WrongAcceptance { expected: "rabin or streett", found: other.kind() }),
        };
        let mut out = self.clone();
        out.acceptance = acceptance;
        Ok(out)
    }

    /// Adds a rejecting sink so every `(state, letter)` has a successor.
    ///
    /// The sink lies outside every acceptance set, except for Streett and
    /// parity conditions, where it is placed in the last `G` set (or in a
    /// fresh `⟨{sink}, ∅⟩` pair when `k = 0`) so that runs trapped in it
    /// stay rejecting. Generalized Büchi with `k = 0` gets the single set
    /// `Q` for the same reason.
    pub fn complete(&self) -> Result<OmegaAutomaton> {
        if self.succ.iter().any(|s| s.len() > 1) {
            return Err(Error::NotDeterministic);
        }
        if self.is_total() {
            return Ok(self.clone());
        }
        let sink = self.states;
        let mut out = OmegaAutomaton::new(self.states + 1, self.alphabet, self.acceptance.clone());
        out.initial = self.initial.clone();
        for q in 0..=self.states {
            for a in 0..self.alphabet {
                let t = if q < self.states { self.det_successor(q, a) } else { None };
                out.succ[q * self.alphabet + a] = StateSet::singleton(t.unwrap_or(sink));
            }
        }
        match &mut out.acceptance {
            Acceptance::Streett(ps) | Acceptance::Parity(ps) => match ps.last_mut() {
                Some(p) => {
                    p.g.insert(sink);
                }
                None => ps.push(Pair::new(StateSet::singleton(sink), StateSet::new())),
            },
            Acceptance::GenBuchi(bs) if bs.is_empty() => bs.push(StateSet::full(self.states)),
            _ => {}
        }
        Ok(out)
    }

    /// Graphviz rendering. Each state lists the acceptance sets it belongs
    /// to; parallel transitions are merged into one edge.
    pub fn to_dot(&self, title: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n  rankdir=LR;\n  node [shape=circle];\n", title.replace('"', "'"));
        for q in 0..self.states {
            let mut tags: Vec<String> = Vec::new();
            match &self.acceptance {
                Acceptance::Buchi(f) if f.contains(q) => tags.push("F".into()),
                Acceptance::GenBuchi(bs) => tags
                    .extend(bs.iter().enumerate().filter(|(_, b)| b.contains(q)).map(|(i, _)| format!("B{}", i + 1))),
                Acceptance::Streett(ps) | Acceptance::Parity(ps) | Acceptance::Rabin(ps) => {
                    for (i, p) in ps.iter().enumerate() {
                        if p.g.contains(q) {
                            tags.push(format!("G{}", i + 1));
                        }
                        if p.b.contains(q) {
                            tags.push(format!("B{}", i + 1));
                        }
                    }
                }
                _ => {}
            }
            let label = if tags.is_empty() { q.to_string() } else { format!("{q}\\n{}", tags.join(" ")) };
            out.push_str(&format!("  s{q} [label=\"{label}\"];\n"));
        }
        for q in self.initial.iter() {
            out.push_str(&format!("  init{q} [shape=point];\n  init{q} -> s{q};\n"));
        }
        let mut edges: std::collections::BTreeMap<(usize, usize), Vec<String>> = Default::default();
        for (p, a, q) in self.transitions() {
            edges.entry((p, q)).or_default().push(a.to_string());
        }
        for ((p, q), letters) in edges {
            out.push_str(&format!("  s{p} -> s{q} [label=\"{}\"];\n", letters.join(",")));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> StateSet {
        xs.iter().collect()
    }

    fn loop2(acc: Acceptance) -> OmegaAutomaton {
        OmegaAutomaton::new(1, 2, acc).with_initial([0]).with_transitions(&[(0, 0, 0), (0, 1, 0)])
    }

    #[test]
    fn minimal_buchi_is_valid() {
        assert!(loop2(Acceptance::Buchi(set(&[0]))).validate().is_empty());
    }

    #[test]
    fn duplicate_b_is_reported() {
        let a = loop2(Acceptance::Streett(vec![Pair::new(set(&[]), set(&[0])), Pair::new(set(&[0]), set(&[0]))]));
        let v = a.validate();
        assert_eq!(v, vec![Violation::BNotInjective { first: 1, second: 2 }]);
        assert!(v[0].to_string().contains("B not injective"));
    }

    #[test]
    fn broken_parity_chain_is_reported() {
        // G(1) = {0,1} is not contained in B(2) = {1,2}.
        let a = OmegaAutomaton::new(
            3,
            1,
            Acceptance::Parity(vec![Pair::new(set(&[0, 1]), set(&[0])), Pair::new(set(&[0, 1, 2]), set(&[1, 2]))]),
        )
        .with_initial([0]);
        let v = a.validate();
        assert!(matches!(v[..], [Violation::ParityChainBroken { position: 2 }]));
        assert!(v[0].to_string().contains("parity chain broken"));
    }

    #[test]
    fn empty_initial_and_out_of_range_sets() {
        let a = OmegaAutomaton::new(2, 1, Acceptance::Buchi(set(&[5])));
        let v = a.validate();
        assert!(v.contains(&Violation::InitialEmpty));
        assert!(v.contains(&Violation::SetOutOfRange { set: "B", index: 1, state: 5 }));
    }

    #[test]
    fn add_transition_rejects_out_of_range() {
        let mut a = OmegaAutomaton::new(2, 1, Acceptance::Buchi(set(&[])));
        assert!(matches!(a.add_transition(0, 1, 0), Err(Error::LetterOutOfRange { .. })));
        assert!(matches!(a.add_transition(2, 0, 0), Err(Error::StateOutOfRange { .. })));
    }

    #[test]
    fn simplify_merges_equal_b() {
        let a = OmegaAutomaton::new(
            3,
            1,
            Acceptance::Streett(vec![Pair::new(set(&[0]), set(&[1])), Pair::new(set(&[2]), set(&[1]))]),
        )
        .with_initial([0]);
        let s = a.simplify_streett().unwrap();
        assert_eq!(s.acceptance(), &Acceptance::Streett(vec![Pair::new(set(&[0, 2]), set(&[1]))]));
        assert!(s.validate().is_empty());
    }

    #[test]
    fn simplify_is_noop_on_injective_b() {
        let a = loop2(Acceptance::Streett(vec![Pair::new(set(&[0]), set(&[])), Pair::new(set(&[]), set(&[0]))]));
        assert_eq!(a.simplify_streett().unwrap(), a);
    }

    #[test]
    fn simplify_renumbers_by_smallest_index() {
        let a = OmegaAutomaton::new(
            4,
            1,
            Acceptance::Streett(vec![
                Pair::new(set(&[0]), set(&[3])),
                Pair::new(set(&[1]), set(&[2])),
                Pair::new(set(&[2]), set(&[3])),
                Pair::new(set(&[3]), set(&[2])),
                Pair::new(set(&[]), set(&[3])),
            ]),
        )
        .with_initial([0]);
        let s = a.simplify_streett().unwrap();
        assert_eq!(
            s.acceptance().pairs().unwrap(),
            &[Pair::new(set(&[0, 2]), set(&[3])), Pair::new(set(&[1, 3]), set(&[2])),]
        );
    }

    #[test]
    fn as_streett_embeddings() {
        let b = OmegaAutomaton::new(2, 1, Acceptance::Buchi(set(&[1]))).with_initial([0]);
        assert_eq!(
            b.as_streett().unwrap().acceptance(),
            &Acceptance::Streett(vec![Pair::new(set(&[0, 1]), set(&[1]))])
        );
        let g = OmegaAutomaton::new(2, 1, Acceptance::GenBuchi(vec![set(&[0]), set(&[1])])).with_initial([0]);
        assert_eq!(
            g.as_streett().unwrap().acceptance(),
            &Acceptance::Streett(vec![Pair::new(set(&[0, 1]), set(&[0])), Pair::new(set(&[0, 1]), set(&[1])),])
        );
        let r = OmegaAutomaton::new(1, 1, Acceptance::Rabin(vec![])).with_initial([0]);
        assert!(matches!(r.as_streett(), Err(Error::WrongAcceptance { .. })));
    }

    #[test]
    fn subset_step_cases() {
        let a = OmegaAutomaton::new(3, 1, Acceptance::Buchi(set(&[])))
            .with_initial([0])
            .with_transitions(&[(0, 0, 1), (1, 0, 2)]);
        assert_eq!(a.subset_step(&set(&[]), 0), set(&[]));
        assert_eq!(a.subset_step(&set(&[0, 1]), 0), set(&[1, 2]));
        let total = loop2(Acceptance::Buchi(set(&[])));
        assert_eq!(total.subset_step(&set(&[0]), 1), set(&[0]));
    }

    #[test]
    fn dualize_is_an_involution() {
        let a = loop2(Acceptance::Rabin(vec![Pair::new(set(&[0]), set(&[]))]));
        let d = a.dualize().unwrap();
        assert_eq!(d.acceptance().kind(), AcceptanceKind::Streett);
        assert_eq!(d.dualize().unwrap(), a);
    }

    #[test]
    fn dualize_rejects_bad_inputs() {
        let nd = OmegaAutomaton::new(2, 1, Acceptance::Rabin(vec![])).with_initial([0]).with_transitions(&[
            (0, 0, 0),
            (0, 0, 1),
            (1, 0, 1),
        ]);
        assert!(matches!(nd.dualize(), Err(Error::NotDeterministic)));
        let partial =
            OmegaAutomaton::new(1, 2, Acceptance::Rabin(vec![])).with_initial([0]).with_transitions(&[(0, 0, 0)]);
        assert!(matches!(partial.dualize(), Err(Error::NotTotal { state: 0, letter: 1 })));
        assert!(loop2(Acceptance::Buchi(set(&[0]))).dualize().is_err());
    }

    #[test]
    fn complete_adds_one_sink() {
        let total = loop2(Acceptance::Rabin(vec![Pair::new(set(&[0]), set(&[]))]));
        assert_eq!(total.complete().unwrap(), total);
        let partial = OmegaAutomaton::new(1, 2, Acceptance::Rabin(vec![Pair::new(set(&[0]), set(&[]))]))
            .with_initial([0])
            .with_transitions(&[(0, 0, 0)]);
        let c = partial.complete().unwrap();
        assert_eq!(c.states(), 2);
        assert_eq!(c.det_successor(0, 1), Some(1));
        assert_eq!(c.det_successor(1, 0), Some(1));
        assert!(c.is_total() && c.is_deterministic());
        assert_eq!(c.acceptance(), partial.acceptance());
    }

    #[test]
    fn accepts_inf_literal_quantifiers() {
        let inf = set(&[0]);
        assert!(Acceptance::Streett(vec![]).accepts_inf(&inf));
        assert!(Acceptance::Parity(vec![]).accepts_inf(&inf));
        assert!(!Acceptance::Rabin(vec![]).accepts_inf(&inf));
        assert!(Acceptance::GenBuchi(vec![]).accepts_inf(&inf));
    }
}
