use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

/// A maximal strongly connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scc {
    /// Node ids, ascending.
    pub nodes: Vec<usize>,
    /// Whether the component contains at least one internal edge.
    pub nontrivial: bool,
}

/// Strongly connected components of the graph given by successor lists.
pub fn scc_decompose(succ: &[Vec<usize>]) -> Vec<Scc> {
    sccs_within(succ, &vec![true; succ.len()])
}

/// Components of the subgraph induced by the nodes with `mask[v]` set.
pub(crate) fn sccs_within(succ: &[Vec<usize>], mask: &[bool]) -> Vec<Scc> {
    let mut local = vec![usize::MAX; succ.len()];
    let mut g = DiGraph::<usize, ()>::new();
    for v in (0..succ.len()).filter(|&v| mask[v]) {
        local[v] = g.add_node(v).index();
    }
    for v in (0..succ.len()).filter(|&v| mask[v]) {
        for &w in succ[v].iter().filter(|&&w| mask[w]) {
            g.add_edge(NodeIndex::new(local[v]), NodeIndex::new(local[w]), ());
        }
    }
    let mut out: Vec<Scc> = tarjan_scc(&g)
        .into_iter()
        .map(|comp| {
            let mut nodes: Vec<usize> = comp.iter().map(|&i| g[i]).collect();
            nodes.sort_unstable();
            let nontrivial = nodes.len() > 1 || succ[nodes[0]].contains(&nodes[0]);
            Scc { nodes, nontrivial }
        })
        .collect();
    out.sort_by_key(|c| c.nodes[0]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node_without_edges_is_trivial() {
        assert_eq!(scc_decompose(&[vec![]]), vec![Scc { nodes: vec![0], nontrivial: false }]);
    }

    #[test]
    fn self_loop_is_nontrivial() {
        assert_eq!(scc_decompose(&[vec![0]]), vec![Scc { nodes: vec![0], nontrivial: true }]);
    }

    #[test]
    fn two_cycle_with_pendant() {
        // 0 <-> 1, 1 -> 2
        let sccs = scc_decompose(&[vec![1], vec![0, 2], vec![]]);
        assert_eq!(sccs, vec![Scc { nodes: vec![0, 1], nontrivial: true }, Scc { nodes: vec![2], nontrivial: false },]);
    }

    #[test]
    fn mask_cuts_cycles() {
        let succ = [vec![1], vec![0]];
        let sccs = sccs_within(&succ, &[true, false]);
        assert_eq!(sccs, vec![Scc { nodes: vec![0], nontrivial: false }]);
    }
}
