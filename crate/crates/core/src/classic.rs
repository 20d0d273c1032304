//! The baseline Safra construction for Streett automata.
//!
//! Names come from `1..=n(k+1)`: a tree holds at most `nk` nodes with a
//! nonzero index plus at most `n` with index 0. New nodes take the
//! smallest unused names in preorder.

use crate::automaton::{Acceptance, OmegaAutomaton};
use crate::determinize::{explore, Determinization};
use crate::engine::{transform, Flavor, Obligations};
use crate::error::{Error, Result};
use crate::stateset::StateSet;
use crate::tree::{Color, SafraTree, TreeNode};

/// Streett pairs with index summaries `L^set` (the set of indices on a path).
#[derive(Clone, Debug)]
pub struct ClassicContext {
    states: usize,
    b: Vec<StateSet>,
    g: Vec<StateSet>,
}

impl ClassicContext {
    /// Simplifies `a` to Streett form and captures its pairs.
    pub fn new(a: &OmegaAutomaton) -> Result<(Self, OmegaAutomaton)> {
        let s = a.as_streett()?;
        let Acceptance::Streett(ps) = s.acceptance() else { unreachable!("as_streett yields Streett") };
        let ctx = Self {
            states: s.states(),
            b: ps.iter().map(|p| p.b.clone()).collect(),
            g: ps.iter().map(|p| p.g.clone()).collect(),
        };
        Ok((ctx, s))
    }

    pub fn k(&self) -> usize {
        self.b.len()
    }

    /// `n(k+1)`.
    pub fn names(&self) -> usize {
        self.states * (self.k() + 1)
    }
}

impl Obligations for ClassicContext {
    fn extend(&self, path: &StateSet, index: usize) -> StateSet {
        let mut p = path.clone();
        if index != 0 {
            p.insert(index);
        }
        p
    }

    fn grow_index(&self, path: &StateSet) -> Option<usize> {
        (1..=self.k()).rev().find(|&j| !path.contains(j))
    }

    fn b_hit_index(&self, path: &StateSet, i: usize) -> usize {
        (1..i).rev().find(|&j| !path.contains(j)).unwrap_or(0)
    }

    fn b(&self, i: usize) -> &StateSet {
        &self.b[i - 1]
    }

    fn g(&self, _path: &StateSet, i: usize) -> StateSet {
        self.g[i - 1].clone()
    }
}

/// The single red root named 1 labelled with the initial states.
pub fn initial_classic(a: &OmegaAutomaton) -> SafraTree {
    SafraTree::root_only(1, a.initial().clone(), Color::Red)
}

/// One transition of the classic construction.
///
/// `a` must be the simplified Streett automaton that `ctx` was built from.
pub fn classic_step(ctx: &ClassicContext, a: &OmegaAutomaton, t: &SafraTree, letter: usize) -> SafraTree {
    let Some(draft) = transform(a, ctx, Flavor::Classic, t, letter) else {
        return SafraTree::empty();
    };
    let mut used = vec![false; ctx.names() + 2];
    for d in &draft {
        if let Some(o) = d.origin {
            used[t.node(o).name] = true;
        }
    }
    // New nodes take the smallest free names in preorder.
    let mut free = (1..used.len()).filter(|&x| !used[x]);
    let nodes = draft
        .iter()
        .map(|d| {
            let (name, color) = match d.origin {
                None => (free.next().expect("name range is large enough"), Color::Red),
                Some(o) if d.merged || d.exhausted => (t.node(o).name, Color::Green),
                Some(o) => (t.node(o).name, Color::Yellow),
            };
            TreeNode { name, states: d.states.clone(), color, index: d.index, parent: d.parent }
        })
        .collect();
    SafraTree::from_preorder(nodes).expect("engine output is in preorder")
}

/// Determinizes a Streett (or Büchi, generalized Büchi, parity) automaton
/// into a deterministic Rabin automaton with `n(k+1)` pairs.
pub fn determinize_classic(a: &OmegaAutomaton, cap: usize) -> Result<Determinization> {
    let (ctx, s) = ClassicContext::new(a)?;
    if s.initial().is_empty() {
        return Err(Error::Invalid("the initial set is empty".into()));
    }
    explore(s.alphabet(), initial_classic(&s), ctx.names(), cap, |t, l| classic_step(&ctx, &s, t, l))
}
