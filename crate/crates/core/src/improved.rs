//! Reduced Safra trees: `Mini`-pruned index labels and bucket naming.
//!
//! A node's path summary is `U = ⋃ B(α[i])` over the index labels `α` on
//! its root path. New obligations come from `Mini(U)`, leaves are grown to
//! exhaustion, siblings are ordered by descending index, and names follow
//! left spines through buckets of width `μ+1`.
//!
//! Two details go beyond the bare procedure. A reset check on a child with
//! index `i` looks at the `G` sets of every index that `i` newly covers,
//! since tied indices never get a node of their own. And if one `B` set is
//! empty, it receives a phantom state (number `n`) visible only to `Cover`
//! and `Mini`, so that its `G` set is still watched; `μ` then becomes
//! `min(n+1, k)`.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::automaton::{Acceptance, OmegaAutomaton};
use crate::determinize::{explore, Determinization};
use crate::engine::{grown_root, path_summaries, transform, Draft, Flavor, Obligations};
use crate::error::Result;
use crate::its::{cover_of_union, mini_of_union};
use crate::spines::{bucket_of, decompose_spines, name_in_bucket, rename, PreviousNaming};
use crate::stateset::StateSet;
use crate::tree::{Color, SafraTree, TreeNode};

#[derive(Debug)]
pub struct ImprovedContext {
    states: usize,
    b: Vec<StateSet>,
    b_hat: Vec<StateSet>,
    g: Vec<StateSet>,
    phantom: bool,
    mini: Mutex<HashMap<StateSet, StateSet>>,
}

impl ImprovedContext {
    /// Simplifies `a` to Streett form and captures its pairs.
    pub fn new(a: &OmegaAutomaton) -> Result<(Self, OmegaAutomaton)> {
        let s = a.as_streett()?;
        let Acceptance::Streett(ps) = s.acceptance() else { unreachable!("as_streett yields Streett") };
        let b: Vec<StateSet> = ps.iter().map(|p| p.b.clone()).collect();
        let mut b_hat = b.clone();
        let mut phantom = false;
        // After simplification at most one B set is empty.
        if let Some(e) = b_hat.iter_mut().find(|x| x.is_empty()) {
            e.insert(s.states());
            phantom = true;
        }
        let ctx = Self {
            states: s.states(),
            b,
            b_hat,
            g: ps.iter().map(|p| p.g.clone()).collect(),
            phantom,
            mini: Mutex::new(HashMap::new()),
        };
        Ok((ctx, s))
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn k(&self) -> usize {
        self.b.len()
    }

    /// Whether some `B` set was empty and got the phantom state.
    pub fn has_phantom(&self) -> bool {
        self.phantom
    }

    /// `min(n, k)`.
    pub fn literal_mu(&self) -> usize {
        self.states.min(self.k())
    }

    /// Depth bound of a spine below its head: `min(n, k)`, or
    /// `min(n+1, k)` with a phantom state.
    pub fn mu(&self) -> usize {
        (self.states + usize::from(self.phantom)).min(self.k())
    }

    /// Bucket width `μ+1`.
    pub fn width(&self) -> usize {
        self.mu() + 1
    }

    /// `n(μ+1)`, the size of the name range.
    pub fn names(&self) -> usize {
        self.states * self.width()
    }

    /// The `B` family as seen by `Cover` and `Mini`.
    pub fn b_family(&self) -> &[StateSet] {
        &self.b_hat
    }

    pub fn mini(&self, u: &StateSet) -> StateSet {
        let mut cache = self.mini.lock().unwrap_or_else(|e| e.into_inner());
        cache.entry(u.clone()).or_insert_with(|| mini_of_union(&self.b_hat, u)).clone()
    }
}

impl Obligations for ImprovedContext {
    fn extend(&self, path: &StateSet, index: usize) -> StateSet {
        match index {
            0 => path.clone(),
            i => path.union(&self.b_hat[i - 1]),
        }
    }

    fn grow_index(&self, path: &StateSet) -> Option<usize> {
        self.mini(path).last()
    }

    fn b_hit_index(&self, path: &StateSet, i: usize) -> usize {
        self.mini(path).iter().take_while(|&j| j < i).last().unwrap_or(0)
    }

    fn b(&self, i: usize) -> &StateSet {
        &self.b[i - 1]
    }

    fn g(&self, path: &StateSet, i: usize) -> StateSet {
        let before = cover_of_union(&self.b_hat, path);
        let after = cover_of_union(&self.b_hat, &path.union(&self.b_hat[i - 1]));
        let mut g = StateSet::new();
        for c in after.difference(&before).iter() {
            g.union_with(&self.g[c - 1]);
        }
        g
    }
}

fn named(draft: &[Draft], names: &[usize], color: impl Fn(usize) -> Color) -> SafraTree {
    let nodes = draft
        .iter()
        .enumerate()
        .map(|(v, d)| TreeNode {
            name: names[v],
            states: d.states.clone(),
            color: color(v),
            index: d.index,
            parent: d.parent,
        })
        .collect();
    SafraTree::from_preorder(nodes).expect("engine output is in preorder")
}

/// The left spine grown from a red root labelled with the initial states,
/// named `1, 2, …` from bucket 1.
pub fn initial_improved(ctx: &ImprovedContext, a: &OmegaAutomaton) -> SafraTree {
    let draft = grown_root(ctx, a.initial().clone());
    let names: Vec<usize> = (1..=draft.len()).collect();
    named(&draft, &names, |_| Color::Red)
}

/// One transition of the improved construction.
///
/// `a` must be the simplified Streett automaton that `ctx` was built from.
pub fn improved_step(ctx: &ImprovedContext, a: &OmegaAutomaton, t: &SafraTree, letter: usize) -> SafraTree {
    let Some(draft) = transform(a, ctx, Flavor::Improved, t, letter) else {
        return SafraTree::empty();
    };
    let parents: Vec<Option<usize>> = draft.iter().map(|d| d.parent).collect();
    let origin: Vec<Option<usize>> = draft.iter().map(|d| d.origin).collect();
    let prev_parents = t.parents();
    let prev_names: Vec<usize> = t.nodes().iter().map(|n| n.name).collect();
    let r = rename(ctx.width(), Some(PreviousNaming { parents: &prev_parents, names: &prev_names }), &parents, &origin);
    named(&draft, &r.names, |v| {
        let d = &draft[v];
        if d.origin.is_none() || r.renamed[v] {
            Color::Red
        } else if d.merged || d.exhausted {
            Color::Green
        } else {
            Color::Yellow
        }
    })
}

/// Determinizes a Streett (or Büchi, generalized Büchi, parity) automaton
/// into a deterministic Rabin automaton with `n(μ+1)` pairs.
pub fn determinize_improved(a: &OmegaAutomaton, cap: usize) -> Result<Determinization> {
    let (ctx, s) = ImprovedContext::new(a)?;
    determinize_with(&ctx, &s, cap)
}

/// As [`determinize_improved`] with a prepared context, so callers can
/// inspect the reachable trees against it.
pub fn determinize_with(ctx: &ImprovedContext, s: &OmegaAutomaton, cap: usize) -> Result<Determinization> {
    explore(s.alphabet(), initial_improved(ctx, s), ctx.names(), cap, |t, l| improved_step(ctx, s, t, l))
}

/// Every broken reduced-tree invariant of `t`, as readable messages.
pub fn rsts_violations(ctx: &ImprovedContext, t: &SafraTree) -> Vec<String> {
    if t.is_empty() {
        return Vec::new();
    }
    let n = ctx.states();
    let width = ctx.width();
    let mut out = t.sts_violations(ctx.names(), ctx.k());
    if t.len() > n * width {
        out.push(format!("{} nodes exceed n(μ+1) = {}", t.len(), n * width));
    }
    let zeros = t.nodes().iter().filter(|x| x.index == 0).count();
    if zeros > n {
        out.push(format!("{zeros} nodes with index 0 exceed n = {n}"));
    }
    let dec = decompose_spines(&t.parents());
    let mut buckets = Vec::new();
    for s in &dec.spines {
        if s.len() > width {
            out.push(format!("spine of {} nodes exceeds μ+1 = {width}", s.len()));
        }
        let b = bucket_of(t.node(s[0]).name.max(1), width);
        if b > n {
            out.push(format!("bucket {b} outside 1..={n}"));
        }
        if buckets.contains(&b) {
            out.push(format!("bucket {b} used by two spines"));
        }
        buckets.push(b);
        for (pos, &v) in s.iter().enumerate() {
            if t.node(v).name != name_in_bucket(b, pos + 1, width) {
                out.push(format!("node {v}: name {} breaks the bucket law", t.node(v).name));
            }
            if pos > 0 && t.node(v).index == 0 {
                out.push(format!("node {v}: index 0 below a spine head"));
            }
        }
    }
    let paths = path_summaries(ctx, t);
    for (v, x) in t.nodes().iter().enumerate() {
        if t.is_leaf(v) && !ctx.mini(&paths[v]).is_empty() {
            out.push(format!("node {v}: leaf is not fully grown"));
        }
        if let Some(p) = x.parent {
            if x.index != 0 && !ctx.mini(&paths[p]).contains(x.index) {
                out.push(format!("node {v}: index {} not in Mini of its parent path", x.index));
            }
        }
        let ch: Vec<usize> = t.children(v).collect();
        if ch.windows(2).any(|w| t.node(w[0]).index < t.node(w[1]).index) {
            out.push(format!("node {v}: children not in descending index order"));
        }
    }
    out
}

/// Whether `t` exceeds the node or spine bound computed with `min(n, k)`
/// instead of the effective `μ`. Only possible with a phantom state.
pub fn exceeds_literal_bound(ctx: &ImprovedContext, t: &SafraTree) -> bool {
    let w = ctx.literal_mu() + 1;
    t.len() > ctx.states() * w || decompose_spines(&t.parents()).spines.iter().any(|s| s.len() > w)
}
