//! Left spines and bucket naming under a sequence of subtree removals and
//! insertions. Buckets hold 4 names each.

use safra::spines::{rename, PlainTree, PreviousNaming, Renaming};

fn show(title: &str, t: &PlainTree, r: &Renaming) {
    println!("{title}: {t}");
    for (spine, bucket) in r.decomposition.spines.iter().zip(&r.buckets) {
        let members: Vec<String> = spine.iter().map(|&v| format!("v{}:{}", t.labels[v], r.names[v])).collect();
        println!("  bucket {bucket:>2}  {}", members.join(" "));
    }
    let red: Vec<String> = (0..t.labels.len()).filter(|&v| r.renamed[v]).map(|v| format!("v{}", t.labels[v])).collect();
    println!("  renamed (red): {red:?}  freed buckets: {:?}", r.freed);
}

fn main() -> safra::Result<()> {
    let width = 4;
    let a: PlainTree = "0(1(2(3 4) 5(6 7)) 8(9 10) 11)".parse()?;
    let by_label = [1, 2, 3, 4, 17, 25, 26, 5, 21, 22, 33, 13];
    let names: Vec<usize> = a.labels.iter().map(|&l| by_label[l]).collect();
    let start =
        rename(width, Some(PreviousNaming { parents: &a.parents, names: &names }), &a.parents, &a.origin_in(&a));
    show("start", &a, &start);

    let b = a.remove_subtree(2)?;
    let rb = rename(width, Some(PreviousNaming { parents: &a.parents, names: &names }), &b.parents, &b.origin_in(&a));
    show("remove v2", &b, &rb);

    let c = b.add_child(1, 12)?.add_child(12, 13)?.add_child(8, 14)?;
    let rc =
        rename(width, Some(PreviousNaming { parents: &b.parents, names: &rb.names }), &c.parents, &c.origin_in(&b));
    show("add v12 v13 v14", &c, &rc);

    let d = c.remove_subtree(1)?;
    let rd =
        rename(width, Some(PreviousNaming { parents: &c.parents, names: &rc.names }), &d.parents, &d.origin_in(&c));
    show("remove v1", &d, &rd);
    Ok(())
}
