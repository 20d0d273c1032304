//! The increasing tree of sets for four `B` sets over three states, with
//! the `Mini` values it is built from.

use safra::its::{build_its, cover, mini};
use safra::StateSet;

fn main() -> safra::Result<()> {
    let b: Vec<StateSet> =
        [&[0usize, 1][..], &[0], &[1, 2], &[2]].iter().map(|s| s.iter().copied().collect()).collect();

    for alpha in [&[][..], &[2], &[4], &[2, 1], &[4, 3]] {
        println!("Cover({alpha:?}) = {}  Mini({alpha:?}) = {}", cover(&b, alpha), mini(&b, alpha));
    }

    let its = build_its(3, &b)?;
    println!("\n{} nodes, {} paths, depth {}", its.len(), its.count_paths(), its.depth());
    print!("{}", its.render());
    println!("{}", its.canonical());
    Ok(())
}
