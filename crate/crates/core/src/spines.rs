//! Left spines and bucket naming.
//!
//! Trees are given as preorder parent arrays. In preorder, `v + 1` is the
//! leftmost child of `v` iff its parent is `v`, so a left spine is a maximal
//! run of consecutive ids linked that way, and heads in preorder order are
//! exactly the spines in leaf order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineDecomposition {
    /// Node ids of each spine, head first; spines ordered by their leaf.
    pub spines: Vec<Vec<usize>>,
    /// Spine number of every node.
    pub spine_of: Vec<usize>,
    /// 1-based position of every node within its spine.
    pub position: Vec<usize>,
}

pub fn is_head(parents: &[Option<usize>], v: usize) -> bool {
    v == 0 || parents[v] != Some(v - 1)
}

pub fn decompose_spines(parents: &[Option<usize>]) -> SpineDecomposition {
    let mut spines: Vec<Vec<usize>> = Vec::new();
    let mut spine_of = vec![0; parents.len()];
    let mut position = vec![0; parents.len()];
    for v in 0..parents.len() {
        if is_head(parents, v) {
            spines.push(Vec::new());
        }
        spine_of[v] = spines.len() - 1;
        let s = spines.last_mut().unwrap();
        s.push(v);
        position[v] = s.len();
    }
    SpineDecomposition { spines, spine_of, position }
}

/// Bucket of a name under width `w`: names `(b−1)w+1 ..= bw` form bucket `b`.
pub fn bucket_of(name: usize, width: usize) -> usize {
    (name - 1) / width + 1
}

pub fn name_in_bucket(bucket: usize, position: usize, width: usize) -> usize {
    width * (bucket - 1) + position
}

/// Names of the tree before the step.
#[derive(Clone, Copy, Debug)]
pub struct PreviousNaming<'a> {
    pub parents: &'a [Option<usize>],
    pub names: &'a [usize],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Renaming {
    pub decomposition: SpineDecomposition,
    /// Bucket of every spine.
    pub buckets: Vec<usize>,
    pub names: Vec<usize>,
    /// Nodes that existed before and now carry a different name.
    pub renamed: Vec<bool>,
    /// Buckets in use before and unused now, ascending.
    pub freed: Vec<usize>,
}

/// Assigns names by spine buckets.
///
/// `origin[v]` is the id in the previous tree of a surviving node `v`. A
/// spine keeps the bucket of its head when that head was also a head
/// before; every other spine takes the smallest unclaimed bucket, left to
/// right.
pub fn rename(
    width: usize,
    prev: Option<PreviousNaming<'_>>,
    parents: &[Option<usize>],
    origin: &[Option<usize>],
) -> Renaming {
    let decomposition = decompose_spines(parents);
    let inherited: Vec<Option<usize>> = decomposition
        .spines
        .iter()
        .map(|s| {
            let p = prev?;
            let o = origin[s[0]]?;
            is_head(p.parents, o).then(|| bucket_of(p.names[o], width))
        })
        .collect();
    let mut claimed: BTreeSet<usize> = inherited.iter().flatten().copied().collect();
    let mut next = 1;
    let buckets: Vec<usize> = inherited
        .iter()
        .map(|b| {
            b.unwrap_or_else(|| {
                while claimed.contains(&next) {
                    next += 1;
                }
                claimed.insert(next);
                next
            })
        })
        .collect();
    let names: Vec<usize> = (0..parents.len())
        .map(|v| name_in_bucket(buckets[decomposition.spine_of[v]], decomposition.position[v], width))
        .collect();
    let renamed = (0..parents.len())
        .map(|v| match (prev, origin[v]) {
            (Some(p), Some(o)) => p.names[o] != names[v],
            _ => false,
        })
        .collect();
    let freed = match prev {
        Some(p) => (0..p.parents.len())
            .filter(|&o| is_head(p.parents, o))
            .map(|o| bucket_of(p.names[o], width))
            .filter(|b| !buckets.contains(b))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
        None => Vec::new(),
    };
    Renaming { decomposition, buckets, names, renamed, freed }
}

/// An ordered tree of labelled nodes without Safra data, for replaying
/// naming scenarios by hand. Written as `0(1(2 3) 4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainTree {
    pub labels: Vec<usize>,
    pub parents: Vec<Option<usize>>,
}

impl PlainTree {
    pub fn position(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    fn children_lists(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.labels.len()];
        for (v, p) in self.parents.iter().enumerate() {
            if let Some(p) = p {
                ch[*p].push(v);
            }
        }
        ch
    }

    fn rebuild(&self, ch: &[Vec<usize>], skip: Option<usize>) -> Self {
        let mut out = PlainTree { labels: Vec::new(), parents: Vec::new() };
        let mut stack = vec![(0usize, None)];
        while let Some((v, parent)) = stack.pop() {
            if Some(v) == skip {
                continue;
            }
            out.labels.push(self.labels[v]);
            out.parents.push(parent);
            let me = out.labels.len() - 1;
            stack.extend(ch[v].iter().rev().map(|&c| (c, Some(me))));
        }
        out
    }

    /// The tree without the subtree at `label`.
    pub fn remove_subtree(&self, label: usize) -> Result<Self> {
        let v = self.position(label).ok_or_else(|| Error::Invalid(format!("no node {label}")))?;
        if v == 0 {
            return Err(Error::Invalid("cannot remove the root".into()));
        }
        Ok(self.rebuild(&self.children_lists(), Some(v)))
    }

    /// The tree with a new rightmost child `label` under `parent`.
    pub fn add_child(&self, parent: usize, label: usize) -> Result<Self> {
        let p = self.position(parent).ok_or_else(|| Error::Invalid(format!("no node {parent}")))?;
        if self.position(label).is_some() {
            return Err(Error::Invalid(format!("node {label} already exists")));
        }
        let mut grown = self.clone();
        grown.labels.push(label);
        grown.parents.push(Some(p));
        let ch = grown.children_lists();
        Ok(grown.rebuild(&ch, None))
    }

    /// Ids in `prev` of the nodes of `self`, matched by label.
    pub fn origin_in(&self, prev: &PlainTree) -> Vec<Option<usize>> {
        self.labels.iter().map(|&l| prev.position(l)).collect()
    }

    /// Labels of the spines, in order.
    pub fn spine_labels(&self) -> Vec<Vec<usize>> {
        decompose_spines(&self.parents).spines.iter().map(|s| s.iter().map(|&v| self.labels[v]).collect()).collect()
    }
}

impl FromStr for PlainTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = PlainTree { labels: Vec::new(), parents: Vec::new() };
        let mut open: Vec<usize> = Vec::new();
        let mut chars = s.chars().peekable();
        let bad = |m: &str| Error::Invalid(format!("plain tree `{s}`: {m}"));
        while let Some(&c) = chars.peek() {
            match c {
                '0'..='9' => {
                    let mut label = 0usize;
                    while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                        label = label * 10 + d as usize;
                        chars.next();
                    }
                    if open.is_empty() && !out.labels.is_empty() {
                        return Err(bad("more than one root"));
                    }
                    out.labels.push(label);
                    out.parents.push(open.last().copied());
                }
                '(' => {
                    chars.next();
                    open.push(out.labels.len().checked_sub(1).ok_or_else(|| bad("`(` before a label"))?);
                }
                ')' => {
                    chars.next();
                    open.pop().ok_or_else(|| bad("unbalanced `)`"))?;
                }
                c if c.is_whitespace() => {
                    chars.next();
                }
                _ => return Err(bad("unexpected character")),
            }
        }
        if !open.is_empty() || out.labels.is_empty() {
            return Err(bad("unbalanced or empty"));
        }
        Ok(out)
    }
}

impl fmt::Display for PlainTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ch = self.children_lists();
        fn go(t: &PlainTree, ch: &[Vec<usize>], v: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", t.labels[v])?;
            if !ch[v].is_empty() {
                f.write_str("(")?;
                for (i, &c) in ch[v].iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    go(t, ch, c, f)?;
                }
                f.write_str(")")?;
            }
            Ok(())
        }
        go(self, &ch, 0, f)
    }
}
