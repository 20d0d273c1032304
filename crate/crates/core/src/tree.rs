//! Labelled, ordered Safra trees stored in preorder.
//!
//! A tree is a preorder node list where every node records its parent, so
//! two trees are equal iff their lists are equal. The empty tree is the
//! absorbing sink of a determinized automaton.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::stateset::StateSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Green,
    Red,
    Yellow,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Green => 'g',
            Color::Red => 'r',
            Color::Yellow => 'y',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'g' => Some(Color::Green),
            'r' => Some(Color::Red),
            'y' => Some(Color::Yellow),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeNode {
    pub name: usize,
    pub states: StateSet,
    pub color: Color,
    /// Index label, 0 or a pair index in `1..=k`.
    pub index: usize,
    /// Preorder id of the parent; `None` only for the root.
    pub parent: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SafraTree {
    nodes: Vec<TreeNode>,
}

impl SafraTree {
    pub fn empty() -> Self {
        Self::default()
    }

    /// A single root node.
    pub fn root_only(name: usize, states: StateSet, color: Color) -> Self {
        Self { nodes: vec![TreeNode { name, states, color, index: 0, parent: None }] }
    }

    /// Wraps a preorder node list, checking only that it is one.
    pub fn from_preorder(nodes: Vec<TreeNode>) -> Result<Self> {
        let mut open: Vec<usize> = Vec::new();
        for (v, n) in nodes.iter().enumerate() {
            match n.parent {
                None if v == 0 => {}
                None => return Err(Error::Invalid(format!("node {v} has no parent but is not first"))),
                Some(p) => {
                    while open.last().is_some_and(|&top| top != p) {
                        open.pop();
                    }
                    if open.is_empty() {
                        return Err(Error::Invalid(format!("node {v} does not follow its parent {p} in preorder")));
                    }
                }
            }
            open.push(v);
        }
        Ok(Self { nodes })
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node(&self, v: usize) -> &TreeNode {
        &self.nodes[v]
    }

    pub fn parents(&self) -> Vec<Option<usize>> {
        self.nodes.iter().map(|n| n.parent).collect()
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (v + 1..self.nodes.len()).filter(move |&c| self.nodes[c].parent == Some(v))
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.nodes.get(v + 1).is_none_or(|n| n.parent != Some(v))
    }

    /// Root-to-`v` ids, inclusive.
    pub fn ancestry(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        while let Some(p) = self.nodes[*path.last().unwrap()].parent {
            path.push(p);
        }
        path.reverse();
        path
    }

    /// Nonzero index labels from the root to `v`.
    pub fn index_path(&self, v: usize) -> Vec<usize> {
        self.ancestry(v).into_iter().map(|u| self.nodes[u].index).filter(|&i| i != 0).collect()
    }

    pub fn find_name(&self, name: usize) -> Option<&TreeNode> {
        self.nodes.iter().find(|n| n.name == name)
    }

    pub fn with_color(&self, name: usize, color: Color) -> bool {
        self.find_name(name).is_some_and(|n| n.color == color)
    }

    /// Violations of the Safra-tree invariants: names distinct and in
    /// `1..=names`, indices in `0..=k`, nonempty labels, children partition
    /// their parent, and no index repeated along a path.
    pub fn sts_violations(&self, names: usize, k: usize) -> Vec<String> {
        let mut out = Vec::new();
        let mut seen = vec![false; names + 1];
        for (v, n) in self.nodes.iter().enumerate() {
            if n.name == 0 || n.name > names {
                out.push(format!("node {v}: name {} outside 1..={names}", n.name));
            } else if std::mem::replace(&mut seen[n.name], true) {
                out.push(format!("node {v}: duplicate name {}", n.name));
            }
            if n.index > k {
                out.push(format!("node {v}: index {} outside 0..={k}", n.index));
            }
            if n.states.is_empty() {
                out.push(format!("node {v}: empty state label"));
            }
            let mut union = StateSet::new();
            let mut any = false;
            for c in self.children(v) {
                any = true;
                if union.intersects(&self.nodes[c].states) {
                    out.push(format!("node {v}: children overlap"));
                }
                union.union_with(&self.nodes[c].states);
            }
            if any && union != n.states {
                out.push(format!("node {v}: children do not partition the label"));
            }
            let mut path = self.index_path(v);
            let len = path.len();
            path.sort_unstable();
            path.dedup();
            if path.len() != len {
                out.push(format!("node {v}: repeated index on path"));
            }
        }
        out
    }

    pub fn to_dot(&self, title: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n  node [shape=box];\n", title.replace('"', "'"));
        out.push_str(&self.dot_statements("n"));
        out.push_str("}\n");
        out
    }

    /// Node and edge statements with ids `{prefix}{v}`, for embedding
    /// several trees in one graph.
    pub fn dot_statements(&self, prefix: &str) -> String {
        let mut out = String::new();
        for (v, n) in self.nodes.iter().enumerate() {
            let fill = match n.color {
                Color::Green => "palegreen",
                Color::Red => "lightpink",
                Color::Yellow => "lightyellow",
            };
            out.push_str(&format!(
                "  {prefix}{v} [label=\"{}:{}:{}:{}\", style=filled, fillcolor={fill}];\n",
                n.name,
                n.color.letter(),
                n.index,
                n.states
            ));
            if let Some(p) = n.parent {
                out.push_str(&format!("  {prefix}{p} -> {prefix}{v};\n"));
            }
        }
        out
    }
}

/// `name:color:index:{states}` per node, children in brackets, e.g.
/// `1:r:0:{0,1}[2:y:1:{0},3:r:0:{1}]`. The empty tree prints as `-`.
impl fmt::Display for SafraTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nodes.is_empty() {
            return f.write_str("-");
        }
        let mut open: Vec<usize> = Vec::new();
        for (v, n) in self.nodes.iter().enumerate() {
            if let Some(p) = n.parent {
                while *open.last().unwrap() != p {
                    let u = open.pop().unwrap();
                    if !self.is_leaf(u) {
                        f.write_str("]")?;
                    }
                }
                f.write_str(if p + 1 == v { "[" } else { "," })?;
            }
            write!(f, "{}:{}:{}:{}", n.name, n.color.letter(), n.index, n.states)?;
            open.push(v);
        }
        for u in open {
            if !self.is_leaf(u) {
                f.write_str("]")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SafraTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Self::empty());
        }
        let bad = |msg: &str| Error::Invalid(format!("tree `{s}`: {msg}"));
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut nodes = Vec::new();
        let mut open: Vec<usize> = Vec::new();
        loop {
            let start = pos;
            while pos < bytes.len() && bytes[pos] != b'}' {
                pos += 1;
            }
            if pos == bytes.len() {
                return Err(bad("unterminated node"));
            }
            pos += 1;
            let text = &s[start..pos];
            let mut parts = text.splitn(4, ':');
            let (Some(name), Some(color), Some(index), Some(states)) =
                (parts.next(), parts.next(), parts.next(), parts.next())
            else {
                return Err(bad("node must be name:color:index:{states}"));
            };
            let name = name.parse().map_err(|_| bad("bad name"))?;
            let color = color.chars().next().and_then(Color::from_letter).ok_or_else(|| bad("bad color"))?;
            let index = index.parse().map_err(|_| bad("bad index"))?;
            let inner = states.strip_prefix('{').and_then(|x| x.strip_suffix('}')).ok_or_else(|| bad("bad set"))?;
            let states = inner
                .split(',')
                .filter(|t| !t.is_empty())
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad("bad state")))
                .collect::<Result<StateSet>>()?;
            nodes.push(TreeNode { name, states, color, index, parent: open.last().copied() });
            let me = nodes.len() - 1;
            match bytes.get(pos) {
                Some(b'[') => {
                    open.push(me);
                    pos += 1;
                }
                _ => {
                    while bytes.get(pos) == Some(&b']') {
                        open.pop().ok_or_else(|| bad("unbalanced brackets"))?;
                        pos += 1;
                    }
                    match bytes.get(pos) {
                        Some(b',') if !open.is_empty() => pos += 1,
                        None if open.is_empty() => break,
                        _ => return Err(bad("unexpected character")),
                    }
                }
            }
        }
        Self::from_preorder(nodes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> StateSet {
        xs.iter().collect()
    }

    fn sample() -> SafraTree {
        let node =
            |name, states: &[usize], color, index, parent| TreeNode { name, states: set(states), color, index, parent };
        SafraTree::from_preorder(vec![
            node(1, &[0, 1, 2], Color::Yellow, 0, None),
            node(2, &[0, 1], Color::Green, 2, Some(0)),
            node(4, &[0], Color::Red, 1, Some(1)),
            node(5, &[1], Color::Yellow, 0, Some(1)),
            node(3, &[2], Color::Red, 0, Some(0)),
        ])
        .unwrap()
    }

    #[test]
    fn display_round_trips() {
        let t = sample();
        let text = t.to_string();
        assert_eq!(text, "1:y:0:{0,1,2}[2:g:2:{0,1}[4:r:1:{0},5:y:0:{1}],3:r:0:{2}]");
        assert_eq!(text.parse::<SafraTree>().unwrap(), t);
        let root = SafraTree::root_only(1, set(&[0]), Color::Red);
        assert_eq!(root.to_string(), "1:r:0:{0}");
        assert_eq!("1:r:0:{0}".parse::<SafraTree>().unwrap(), root);
        assert_eq!("-".parse::<SafraTree>().unwrap(), SafraTree::empty());
        assert_eq!("1:r:0:{}".parse::<SafraTree>().unwrap().node(0).states, set(&[]));
    }

    #[test]
    fn malformed_text_is_rejected() {
        for bad in ["1:r:0:{0}[", "1:x:0:{0}", "1:r:0:{0}]", "1:r:0:{0},2:r:0:{0}", "1:r:0"] {
            assert!(bad.parse::<SafraTree>().is_err(), "{bad}");
        }
    }

    #[test]
    fn structure_queries() {
        let t = sample();
        assert_eq!(t.children(0).collect::<Vec<_>>(), vec![1, 4]);
        assert!(t.is_leaf(2) && t.is_leaf(3) && t.is_leaf(4) && !t.is_leaf(1));
        assert_eq!(t.index_path(2), vec![2, 1]);
        assert_eq!(t.ancestry(3), vec![0, 1, 3]);
        assert!(t.with_color(2, Color::Green));
        assert!(!t.with_color(9, Color::Green));
    }

    #[test]
    fn invariants_hold_and_breakages_are_reported() {
        let t = sample();
        assert!(t.sts_violations(10, 2).is_empty());
        assert!(!t.sts_violations(4, 2).is_empty(), "name 5 out of range");
        let mut nodes = t.nodes().to_vec();
        nodes[2].index = 2;
        let broken = SafraTree::from_preorder(nodes).unwrap();
        assert!(broken.sts_violations(10, 2).iter().any(|v| v.contains("repeated index")));
        let mut nodes = t.nodes().to_vec();
        nodes[3].states = set(&[0]);
        let broken = SafraTree::from_preorder(nodes).unwrap();
        assert!(!broken.sts_violations(10, 2).is_empty());
    }

    #[test]
    fn preorder_is_checked() {
        let bad = vec![
            TreeNode { name: 1, states: set(&[0]), color: Color::Red, index: 0, parent: None },
            TreeNode { name: 2, states: set(&[0]), color: Color::Red, index: 0, parent: Some(2) },
        ];
        assert!(SafraTree::from_preorder(bad).is_err());
    }
}
