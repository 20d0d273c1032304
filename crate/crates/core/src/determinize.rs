//! Breadth-first exploration of tree-labelled deterministic automata.

use std::collections::HashMap;

use serde_json::json;

use crate::automaton::{Acceptance, OmegaAutomaton, Pair};
use crate::error::{Error, Result};
use crate::spines::decompose_spines;
use crate::stateset::StateSet;
use crate::tree::{Color, SafraTree};

/// Default bound on the number of explored states.
pub const DEFAULT_CAP: usize = 200_000;

/// A deterministic Rabin automaton together with the tree behind each state.
#[derive(Clone, Debug)]
pub struct Determinization {
    pub automaton: OmegaAutomaton,
    /// `trees[s]` is the tree of output state `s`; state 0 is initial.
    pub trees: Vec<SafraTree>,
    /// Size of the name range, which is also the number of Rabin pairs.
    pub names: usize,
}

impl Determinization {
    pub fn states(&self) -> usize {
        self.trees.len()
    }

    pub fn max_nodes(&self) -> usize {
        self.trees.iter().map(SafraTree::len).max().unwrap_or(0)
    }

    pub fn max_spine(&self) -> usize {
        self.trees
            .iter()
            .filter(|t| !t.is_empty())
            .flat_map(|t| decompose_spines(&t.parents()).spines.into_iter().map(|s| s.len()))
            .max()
            .unwrap_or(0)
    }

    /// One JSON object per line: `{"state": s, "tree": "<tree>"}`.
    pub fn dictionary_jsonl(&self) -> String {
        self.trees
            .iter()
            .enumerate()
            .map(|(s, t)| json!({ "state": s, "tree": t.to_string() }).to_string() + "\n")
            .collect()
    }
}

/// Explores every tree reachable from `initial` under `step`.
///
/// Pair `i` of the result is `G(i)` = states with a green node named `i`
/// and `B(i)` = states with a red node named `i` or none named `i`, so a
/// run is accepted iff some name turns green infinitely often while being
/// red or absent only finitely often.
pub fn explore(
    alphabet: usize,
    initial: SafraTree,
    names: usize,
    cap: usize,
    mut step: impl FnMut(&SafraTree, usize) -> SafraTree,
) -> Result<Determinization> {
    let mut ids: HashMap<SafraTree, usize> = HashMap::new();
    let mut trees = vec![initial.clone()];
    ids.insert(initial, 0);
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut next = 0;
    while next < trees.len() {
        for letter in 0..alphabet {
            let succ = step(&trees[next], letter);
            let id = match ids.get(&succ) {
                Some(&id) => id,
                None => {
                    if trees.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    trees.push(succ.clone());
                    ids.insert(succ, trees.len() - 1);
                    trees.len() - 1
                }
            };
            edges.push((next, letter, id));
        }
        next += 1;
    }
    let pairs = (1..=names)
        .map(|i| {
            let mut g = StateSet::new();
            let mut b = StateSet::new();
            for (s, t) in trees.iter().enumerate() {
                match t.find_name(i).map(|n| n.color) {
                    Some(Color::Green) => {
                        g.insert(s);
                    }
                    Some(Color::Red) | None => {
                        b.insert(s);
                    }
                    Some(Color::Yellow) => {}
                }
            }
            Pair::new(g, b)
        })
        .collect();
    let automaton =
        OmegaAutomaton::new(trees.len(), alphabet, Acceptance::Rabin(pairs)).with_initial([0]).with_transitions(&edges);
    Ok(Determinization { automaton, trees, names })
}
