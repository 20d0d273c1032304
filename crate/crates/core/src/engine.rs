//! The tree transformation shared by the classic and improved constructions.
//!
//! Both run subset construction, top-down expansion, horizontal merge and
//! vertical merge. They differ in how obligations are chosen (the
//! [`Obligations`] implementation), in whether leaves sprout during
//! expansion or are grown afterwards, and in sibling order. Naming and
//! coloring are left to the callers.

use std::cmp::Reverse;

use crate::automaton::OmegaAutomaton;
use crate::stateset::StateSet;
use crate::tree::SafraTree;

/// How index labels are chosen. A node's `path` summary is whatever the
/// implementation derives from the index labels on its root path.
pub(crate) trait Obligations {
    fn extend(&self, path: &StateSet, index: usize) -> StateSet;
    /// Index of a new child below a leaf, `None` when the leaf is exhausted.
    fn grow_index(&self, path: &StateSet) -> Option<usize>;
    /// Index of the node receiving the `B(i)`-hits of a child of a node with
    /// summary `path`.
    fn b_hit_index(&self, path: &StateSet, i: usize) -> usize;
    fn b(&self, i: usize) -> &StateSet;
    /// States that reset a child with index `i`.
    fn g(&self, path: &StateSet, i: usize) -> StateSet;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Flavor {
    /// Leaves sprout during expansion; siblings stay in age order.
    Classic,
    /// Leaves are grown after the merges; siblings ordered by descending
    /// index, then age.
    Improved,
}

/// A node of the transformed tree before naming.
#[derive(Clone, Debug)]
pub(crate) struct Draft {
    pub states: StateSet,
    pub index: usize,
    pub parent: Option<usize>,
    /// Preorder id in the input tree, `None` for nodes created in the step.
    pub origin: Option<usize>,
    /// Lost all descendants in this step.
    pub merged: bool,
    /// A leaf with no obligation left.
    pub exhausted: bool,
}

struct Work {
    states: StateSet,
    index: usize,
    path: StateSet,
    children: Vec<usize>,
    age: usize,
    origin: Option<usize>,
    merged: bool,
}

struct Arena<'o, O> {
    nodes: Vec<Work>,
    next_age: usize,
    ob: &'o O,
    flavor: Flavor,
}

impl<O: Obligations> Arena<'_, O> {
    fn add_child(&mut self, parent: usize, states: StateSet, index: usize) -> usize {
        let path = self.ob.extend(&self.nodes[parent].path, index);
        self.nodes.push(Work {
            states,
            index,
            path,
            children: Vec::new(),
            age: self.next_age,
            origin: None,
            merged: false,
        });
        self.next_age += 1;
        let id = self.nodes.len() - 1;
        self.nodes[parent].children.push(id);
        id
    }

    fn remove_below(&mut self, v: usize, s: &StateSet) {
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            self.nodes[u].states.difference_with(s);
            stack.extend(self.nodes[u].children.iter().copied());
        }
    }

    fn expand(&mut self, v: usize) {
        if self.nodes[v].states.is_empty() {
            return;
        }
        if self.nodes[v].children.is_empty() {
            if self.flavor == Flavor::Classic {
                if let Some(i) = self.ob.grow_index(&self.nodes[v].path) {
                    let states = self.nodes[v].states.clone();
                    let c = self.add_child(v, states, i);
                    self.expand(c);
                }
            }
            return;
        }
        let original = self.nodes[v].children.clone();
        for c in original {
            let i = self.nodes[c].index;
            if i == 0 || self.nodes[c].states.is_empty() {
                continue;
            }
            let hit = self.nodes[c].states.intersection(self.ob.b(i));
            if !hit.is_empty() {
                let j = self.ob.b_hit_index(&self.nodes[v].path, i);
                self.add_child(v, hit.clone(), j);
                self.remove_below(c, &hit);
            }
            // States that stay behind after a B-hit are still checked for a
            // reset; otherwise a run could hide behind others hitting B(i).
            let reset = self.nodes[c].states.intersection(&self.ob.g(&self.nodes[v].path, i));
            if !reset.is_empty() {
                self.add_child(v, reset.clone(), i);
                self.remove_below(c, &reset);
            }
        }
        for c in self.nodes[v].children.clone() {
            self.expand(c);
        }
    }

    /// Each state stays only in the sibling with the smallest index, ties
    /// to the oldest.
    fn horizontal_merge(&mut self, v: usize) {
        let mut order = self.nodes[v].children.clone();
        order.sort_by_key(|&c| (self.nodes[c].index, self.nodes[c].age));
        let mut taken = StateSet::new();
        for &c in &order {
            let dup = self.nodes[c].states.intersection(&taken);
            if !dup.is_empty() {
                self.remove_below(c, &dup);
            }
            taken.union_with(&self.nodes[c].states);
        }
        for c in order {
            self.horizontal_merge(c);
        }
    }

    fn prune(&mut self, v: usize) {
        let kept: Vec<usize> =
            self.nodes[v].children.iter().copied().filter(|&c| !self.nodes[c].states.is_empty()).collect();
        if !self.nodes[v].children.is_empty() && kept.is_empty() {
            self.nodes[v].merged = true;
        }
        self.nodes[v].children = kept.clone();
        for c in kept {
            self.prune(c);
        }
    }

    fn vertical_merge(&mut self, v: usize) {
        let ch = self.nodes[v].children.clone();
        if ch.is_empty() {
            return;
        }
        if ch.iter().all(|&c| self.nodes[c].index == 0) {
            self.nodes[v].children.clear();
            self.nodes[v].merged = true;
            return;
        }
        for c in ch {
            self.vertical_merge(c);
        }
    }

    fn grow(&mut self, v: usize) {
        if self.nodes[v].children.is_empty() {
            if let Some(i) = self.ob.grow_index(&self.nodes[v].path) {
                let states = self.nodes[v].states.clone();
                let c = self.add_child(v, states, i);
                self.grow(c);
            }
            return;
        }
        for c in self.nodes[v].children.clone() {
            self.grow(c);
        }
    }

    fn order_siblings(&mut self) {
        for v in 0..self.nodes.len() {
            let mut ch = std::mem::take(&mut self.nodes[v].children);
            match self.flavor {
                Flavor::Classic => ch.sort_by_key(|&c| self.nodes[c].age),
                Flavor::Improved => ch.sort_by_key(|&c| (Reverse(self.nodes[c].index), self.nodes[c].age)),
            }
            self.nodes[v].children = ch;
        }
    }

    fn flatten(&self) -> Vec<Draft> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, None)];
        while let Some((v, parent)) = stack.pop() {
            let w = &self.nodes[v];
            out.push(Draft {
                states: w.states.clone(),
                index: w.index,
                parent,
                origin: w.origin,
                merged: w.merged,
                exhausted: w.children.is_empty() && self.ob.grow_index(&w.path).is_none(),
            });
            let me = out.len() - 1;
            stack.extend(w.children.iter().rev().map(|&c| (c, Some(me))));
        }
        out
    }
}

/// Summaries of every node of an existing tree, in preorder.
pub(crate) fn path_summaries<O: Obligations>(ob: &O, t: &SafraTree) -> Vec<StateSet> {
    let mut out: Vec<StateSet> = Vec::with_capacity(t.len());
    for n in t.nodes() {
        let base = n.parent.map(|p| out[p].clone()).unwrap_or_default();
        out.push(ob.extend(&base, n.index));
    }
    out
}

/// Applies one letter to `t`. `None` means the result is the empty tree.
pub(crate) fn transform<O: Obligations>(
    a: &OmegaAutomaton,
    ob: &O,
    flavor: Flavor,
    t: &SafraTree,
    letter: usize,
) -> Option<Vec<Draft>> {
    if t.is_empty() {
        return None;
    }
    let paths = path_summaries(ob, t);
    let mut nodes: Vec<Work> = t
        .nodes()
        .iter()
        .zip(paths)
        .enumerate()
        .map(|(v, (n, path))| Work {
            states: a.subset_step(&n.states, letter),
            index: n.index,
            path,
            children: Vec::new(),
            age: v,
            origin: Some(v),
            merged: false,
        })
        .collect();
    if nodes[0].states.is_empty() {
        return None;
    }
    for (v, n) in t.nodes().iter().enumerate() {
        if let Some(p) = n.parent {
            nodes[p].children.push(v);
        }
    }
    let mut arena = Arena { next_age: nodes.len(), nodes, ob, flavor };
    arena.expand(0);
    arena.horizontal_merge(0);
    arena.prune(0);
    arena.vertical_merge(0);
    if flavor == Flavor::Improved {
        arena.grow(0);
    }
    arena.order_siblings();
    Some(arena.flatten())
}

/// A tree grown from a single root by repeatedly adding the leaf obligation.
pub(crate) fn grown_root<O: Obligations>(ob: &O, states: StateSet) -> Vec<Draft> {
    let mut out = Vec::new();
    let mut path = StateSet::new();
    let mut index = 0;
    loop {
        path = ob.extend(&path, index);
        let next = ob.grow_index(&path);
        out.push(Draft {
            states: states.clone(),
            index,
            parent: out.len().checked_sub(1),
            origin: None,
            merged: false,
            exhausted: next.is_none(),
        });
        match next {
            Some(i) => index = i,
            None => return out,
        }
    }
}
