//! `Cover`, `Mini` and the increasing tree of sets.
//!
//! Indices are 1-based: `b[0]` is `B(1)`. Both functions depend on a
//! sequence `α` only through `U = ⋃ B(α[i])`, so the `_of_union` variants
//! take `U` directly and the determinizer memoizes on it.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::stateset::StateSet;

/// `⋃ B(α[i])`.
pub fn union_along(b: &[StateSet], alpha: &[usize]) -> StateSet {
    let mut u = StateSet::new();
    for &i in alpha {
        u.union_with(&b[i - 1]);
    }
    u
}

/// `{ j | B(j) ⊆ u }`.
pub fn cover_of_union(b: &[StateSet], u: &StateSet) -> StateSet {
    (1..=b.len()).filter(|&j| b[j - 1].is_subset(u)).collect()
}

/// Uncovered indices whose extension of `u` is inclusion-minimal, one
/// representative (the smallest index) per extension set.
pub fn mini_of_union(b: &[StateSet], u: &StateSet) -> StateSet {
    let open: Vec<(usize, StateSet)> =
        (1..=b.len()).filter(|&j| !b[j - 1].is_subset(u)).map(|j| (j, b[j - 1].union(u))).collect();
    open.iter()
        .filter(|(j, ext)| {
            open.iter().all(|(j2, ext2)| {
                let strictly_smaller = ext2.is_subset(ext) && ext2 != ext;
                let earlier_tie = j2 < j && ext2 == ext;
                !strictly_smaller && !earlier_tie
            })
        })
        .map(|&(j, _)| j)
        .collect()
}

pub fn cover(b: &[StateSet], alpha: &[usize]) -> StateSet {
    cover_of_union(b, &union_along(b, alpha))
}

pub fn mini(b: &[StateSet], alpha: &[usize]) -> StateSet {
    mini_of_union(b, &union_along(b, alpha))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItsNode {
    /// Index label; 0 for the root.
    pub label: usize,
    /// Label sequence from the root.
    pub seq: Vec<usize>,
    /// `⋃ B` along `seq`.
    pub cumulative: StateSet,
    /// Children in ascending label order.
    pub children: Vec<usize>,
}

/// The increasing tree of sets for a `B` family. Node 0 is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItsTree {
    b: Vec<StateSet>,
    nodes: Vec<ItsNode>,
}

/// Builds the tree of all sequences `α` with `α[i] ∈ Mini(α[1..i))`.
///
/// `b` must be injective with members below `n`.
pub fn build_its(n: usize, b: &[StateSet]) -> Result<ItsTree> {
    for (i, s) in b.iter().enumerate() {
        if let Some(q) = s.iter().find(|&q| q >= n) {
            return Err(Error::StateOutOfRange { state: q, states: n });
        }
        if let Some(j) = b[..i].iter().position(|o| o == s) {
            return Err(Error::Invalid(format!("B({}) equals B({}); the B family must be injective", i + 1, j + 1)));
        }
    }
    let mut nodes = vec![ItsNode { label: 0, seq: Vec::new(), cumulative: StateSet::new(), children: Vec::new() }];
    let mut next = 0;
    while next < nodes.len() {
        let u = nodes[next].cumulative.clone();
        for j in mini_of_union(b, &u).iter() {
            let mut seq = nodes[next].seq.clone();
            seq.push(j);
            let id = nodes.len();
            nodes.push(ItsNode { label: j, seq, cumulative: u.union(&b[j - 1]), children: Vec::new() });
            nodes[next].children.push(id);
        }
        next += 1;
    }
    Ok(ItsTree { b: b.to_vec(), nodes })
}

fn qset(s: &StateSet) -> String {
    if s.is_empty() {
        return "∅".into();
    }
    let items: Vec<String> = s.iter().map(|q| format!("q{q}")).collect();
    format!("{{{}}}", items.join(","))
}

impl ItsTree {
    pub fn nodes(&self) -> &[ItsNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Number of root-to-leaf paths.
    pub fn count_paths(&self) -> usize {
        self.nodes.iter().filter(|n| n.children.is_empty()).count()
    }

    /// Length of the longest label sequence.
    pub fn depth(&self) -> usize {
        self.nodes.iter().map(|n| n.seq.len()).max().unwrap_or(0)
    }

    /// Every label sequence, in breadth-first order.
    pub fn sequences(&self) -> Vec<Vec<usize>> {
        self.nodes.iter().map(|n| n.seq.clone()).collect()
    }

    fn own_set(&self, id: usize) -> StateSet {
        match self.nodes[id].label {
            0 => StateSet::new(),
            j => self.b[j - 1].clone(),
        }
    }

    /// Canonical one-line form with cumulative sets, e.g.
    /// `0:∅[2:{q0}[1:{q0,q1}]]`. Children appear in ascending label order.
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        self.write_canonical(0, &mut out);
        out
    }

    fn write_canonical(&self, id: usize, out: &mut String) {
        let n = &self.nodes[id];
        let _ = write!(out, "{}:{}", n.label, qset(&n.cumulative));
        if !n.children.is_empty() {
            out.push('[');
            for (i, &c) in n.children.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                self.write_canonical(c, out);
            }
            out.push(']');
        }
    }

    /// Indented rendering, one node per line as `label:B(label)`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut stack = vec![0];
        while let Some(id) = stack.pop() {
            let n = &self.nodes[id];
            let _ = writeln!(out, "{}{}:{}", "  ".repeat(n.seq.len()), n.label, qset(&self.own_set(id)));
            stack.extend(n.children.iter().rev());
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph its {\n  node [shape=box];\n");
        for (id, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{id} [label=\"{}:{}\"];", n.label, qset(&self.own_set(id)));
            for c in &n.children {
                let _ = writeln!(out, "  n{id} -> n{c};");
            }
        }
        out.push_str("}\n");
        out
    }
}
