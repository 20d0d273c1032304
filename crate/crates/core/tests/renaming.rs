//! Bucket renaming replayed on direct tree edits.

use proptest::prelude::*;
use safra::spines::{bucket_of, is_head, rename, PlainTree, PreviousNaming, Renaming};

const WIDTH: usize = 4;

/// Labels are the `v` subscripts.
fn start() -> (PlainTree, Vec<usize>) {
    let t: PlainTree = "0(1(2(3 4) 5(6 7)) 8(9 10) 11)".parse().unwrap();
    let by_label = [1, 2, 3, 4, 17, 25, 26, 5, 21, 22, 33, 13];
    let names = t.labels.iter().map(|&l| by_label[l]).collect();
    (t, names)
}

fn step(prev: &PlainTree, names: &[usize], next: &PlainTree) -> Renaming {
    rename(WIDTH, Some(PreviousNaming { parents: &prev.parents, names }), &next.parents, &next.origin_in(prev))
}

fn named(t: &PlainTree, r: &Renaming) -> Vec<(usize, usize)> {
    t.labels.iter().copied().zip(r.names.iter().copied()).collect()
}

fn renamed_labels(t: &PlainTree, r: &Renaming) -> Vec<usize> {
    t.labels.iter().zip(&r.renamed).filter(|(_, &x)| x).map(|(&l, _)| l).collect()
}

#[test]
fn starting_tree_has_seven_spines() {
    let (t, names) = start();
    assert_eq!(t.spine_labels(), vec![vec![0, 1, 2, 3], vec![4], vec![5, 6], vec![7], vec![8, 9], vec![10], vec![11]]);
    let heads: Vec<usize> = (0..t.labels.len()).filter(|&v| is_head(&t.parents, v)).collect();
    let buckets: Vec<usize> = heads.iter().map(|&v| bucket_of(names[v], WIDTH)).collect();
    assert_eq!(buckets, vec![1, 5, 7, 2, 6, 9, 4]);
}

#[test]
fn removing_a_leftmost_subtree_grafts_the_next_spine() {
    let (a, names) = start();
    let b = a.remove_subtree(2).unwrap();
    let r = step(&a, &names, &b);
    assert_eq!(b.spine_labels(), vec![vec![0, 1, 5, 6], vec![7], vec![8, 9], vec![10], vec![11]]);
    assert_eq!(renamed_labels(&b, &r), vec![5, 6]);
    assert_eq!(named(&b, &r), vec![(0, 1), (1, 2), (5, 3), (6, 4), (7, 5), (8, 21), (9, 22), (10, 33), (11, 13)]);
    assert_eq!(r.freed, vec![5, 7]);
}

#[test]
fn new_spines_take_fresh_buckets() {
    let (a, names) = start();
    let b = a.remove_subtree(2).unwrap();
    let rb = step(&a, &names, &b);
    let c = b.add_child(1, 12).unwrap().add_child(12, 13).unwrap().add_child(8, 14).unwrap();
    let rc = step(&b, &rb.names, &c);
    assert_eq!(
        c.spine_labels(),
        vec![vec![0, 1, 5, 6], vec![7], vec![12, 13], vec![8, 9], vec![10], vec![14], vec![11]]
    );
    assert!(renamed_labels(&c, &rc).is_empty());
    assert!(rc.freed.is_empty());
    // smallest unused buckets: 3 for v12 v13, then 5 for v14
    let fresh: Vec<(usize, usize)> = named(&c, &rc).into_iter().filter(|(l, _)| [12, 13, 14].contains(l)).collect();
    assert_eq!(fresh, vec![(12, 9), (13, 10), (14, 17)]);
}

#[test]
fn removing_the_first_branch_grafts_its_sibling() {
    let (a, names) = start();
    let b = a.remove_subtree(2).unwrap();
    let rb = step(&a, &names, &b);
    let c = b.add_child(1, 12).unwrap().add_child(12, 13).unwrap().add_child(8, 14).unwrap();
    let rc = step(&b, &rb.names, &c);
    let d = c.remove_subtree(1).unwrap();
    let rd = step(&c, &rc.names, &d);
    assert_eq!(d.spine_labels(), vec![vec![0, 8, 9], vec![10], vec![14], vec![11]]);
    assert_eq!(renamed_labels(&d, &rd), vec![8, 9]);
    assert_eq!(named(&d, &rd), vec![(0, 1), (8, 2), (9, 3), (10, 33), (14, 17), (11, 13)]);
    // v7, v12 v13 and the old spine of v8
    assert_eq!(rd.freed, vec![2, 3, 6]);
}

#[test]
fn removal_from_the_drawn_names_frees_the_drawn_buckets() {
    // Same last step, but starting from the names drawn with buckets 7 and 8.
    let c: PlainTree = "0(1(5(6 7) 12(13)) 8(9 10 14) 11)".parse().unwrap();
    let drawn = [1, 2, 3, 4, 5, 25, 26, 21, 22, 33, 29, 13];
    let d = c.remove_subtree(1).unwrap();
    let r = step(&c, &drawn, &d);
    assert_eq!(named(&d, &r), vec![(0, 1), (8, 2), (9, 3), (10, 33), (14, 29), (11, 13)]);
    assert_eq!(renamed_labels(&d, &r), vec![8, 9]);
    assert_eq!(r.freed, vec![2, 6, 7]);
}

fn apply(t: &PlainTree, edit: (bool, usize), fresh: usize) -> PlainTree {
    let (add, pick) = edit;
    let label = t.labels[pick % t.labels.len()];
    if add || t.labels.len() == 1 || label == t.labels[0] {
        t.add_child(label, fresh).unwrap()
    } else {
        t.remove_subtree(label).unwrap()
    }
}

proptest! {
    #[test]
    fn spines_get_distinct_buckets_and_heads_keep_theirs(edits in prop::collection::vec((any::<bool>(), 0usize..64), 1..30)) {
        let width = 8;
        let mut t: PlainTree = "0".parse().unwrap();
        let mut names = rename(width, None, &t.parents, &[None]).names;
        for (step_no, &e) in edits.iter().enumerate() {
            let next = apply(&t, e, 100 + step_no);
            let r = rename(width, Some(PreviousNaming { parents: &t.parents, names: &names }), &next.parents, &next.origin_in(&t));
            let mut buckets = r.buckets.clone();
            buckets.sort_unstable();
            buckets.dedup();
            prop_assert_eq!(buckets.len(), r.buckets.len());
            for (v, &o) in next.origin_in(&t).iter().enumerate() {
                if let Some(o) = o {
                    let same_spot = is_head(&t.parents, o) && is_head(&next.parents, v);
                    if same_spot {
                        prop_assert_eq!(r.names[v], names[o]);
                    }
                    prop_assert_eq!(r.renamed[v], r.names[v] != names[o]);
                }
            }
            t = next;
            names = r.names;
        }
    }
}
