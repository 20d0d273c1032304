//! Determinization of Rabin automata, one pair at a time.
//!
//! Each pair becomes a Büchi automaton that guesses the point after which
//! `B(i)` is avoided. The deterministic versions of these automata run in a
//! synchronous product whose Rabin pairs are the union of theirs.

use std::collections::HashMap;

use crate::automaton::{Acceptance, OmegaAutomaton, Pair};
use crate::determinize::Determinization;
use crate::error::{Error, Result};
use crate::improved::determinize_improved;
use crate::stateset::StateSet;

fn rabin_pairs(a: &OmegaAutomaton) -> Result<&[Pair]> {
    match a.acceptance() {
        Acceptance::Rabin(ps) => Ok(ps),
        other => Err(Error::WrongAcceptance { expected: "rabin", found: other.kind() }),
    }
}

/// Büchi automaton over `2n` states accepting the words with a run that
/// satisfies pair `i` (1-based) alone.
///
/// States `0..n` copy the input. States `n..2n` are a second copy without
/// `B(i)`, entered nondeterministically on any transition; its `G(i)`
/// states are final.
pub fn rabin_pair_to_buchi(a: &OmegaAutomaton, i: usize) -> Result<OmegaAutomaton> {
    let ps = rabin_pairs(a)?;
    if i == 0 || i > ps.len() {
        return Err(Error::PairOutOfRange { index: i, k: ps.len() });
    }
    let pair = &ps[i - 1];
    let n = a.states();
    let final_set: StateSet = pair.g.difference(&pair.b).iter().map(|q| q + n).collect();
    let mut out =
        OmegaAutomaton::new(2 * n, a.alphabet(), Acceptance::Buchi(final_set)).with_initial(a.initial().iter());
    for (p, l, q) in a.transitions() {
        out.add_transition(p, l, q)?;
        if !pair.b.contains(q) {
            out.add_transition(p, l, q + n)?;
            if !pair.b.contains(p) {
                out.add_transition(p + n, l, q + n)?;
            }
        }
    }
    Ok(out)
}

/// A deterministic Rabin automaton for a Rabin input, with the per-pair
/// determinizations it was assembled from.
#[derive(Clone, Debug)]
pub struct RabinDeterminization {
    pub automaton: OmegaAutomaton,
    pub components: Vec<Determinization>,
}

/// Determinizes every pair separately and takes the reachable product.
/// A Rabin automaton without pairs yields a one-state empty automaton.
pub fn determinize_rabin(a: &OmegaAutomaton, cap: usize) -> Result<RabinDeterminization> {
    let k = rabin_pairs(a)?.len();
    let components =
        (1..=k).map(|i| determinize_improved(&rabin_pair_to_buchi(a, i)?, cap)).collect::<Result<Vec<_>>>()?;
    let m = a.alphabet();
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut tuples = vec![vec![0; k]];
    ids.insert(tuples[0].clone(), 0);
    let mut edges = Vec::new();
    let mut next = 0;
    while next < tuples.len() {
        for l in 0..m {
            let succ: Vec<usize> = tuples[next]
                .iter()
                .zip(&components)
                .map(|(&s, c)| c.automaton.det_successor(s, l).expect("determinized automata are total"))
                .collect();
            let id = match ids.get(&succ) {
                Some(&id) => id,
                None => {
                    if tuples.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    tuples.push(succ.clone());
                    ids.insert(succ, tuples.len() - 1);
                    tuples.len() - 1
                }
            };
            edges.push((next, l, id));
        }
        next += 1;
    }
    let mut pairs = Vec::new();
    for (c, comp) in components.iter().enumerate() {
        for p in comp.automaton.acceptance().pairs().unwrap_or_default() {
            let lift = |s: &StateSet| (0..tuples.len()).filter(|&x| s.contains(tuples[x][c])).collect();
            pairs.push(Pair::new(lift(&p.g), lift(&p.b)));
        }
    }
    let automaton =
        OmegaAutomaton::new(tuples.len(), m, Acceptance::Rabin(pairs)).with_initial([0]).with_transitions(&edges);
    Ok(RabinDeterminization { automaton, components })
}
