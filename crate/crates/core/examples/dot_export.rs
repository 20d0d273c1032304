//! Graphviz files for an automaton, its determinization and every reachable
//! reduced Safra tree, written to the system temp directory.

use std::fs;

use safra::format::parse;
use safra::its::build_its;
use safra::{determinize_improved, DEFAULT_CAP};

const INF_ZERO: &str = "automaton buchi\nalphabet 2\nstates 2\ninitial 0\n\
    trans 0 0 1\ntrans 0 1 0\ntrans 1 0 1\ntrans 1 1 0\npairs 1\nB 1: 1\nend\n";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("safra-dot");
    fs::create_dir_all(&dir)?;
    let a = parse(INF_ZERO)?;
    let d = determinize_improved(&a, DEFAULT_CAP)?;

    fs::write(dir.join("input.dot"), a.to_dot("input"))?;
    fs::write(dir.join("output.dot"), d.automaton.to_dot("output"))?;
    for (s, t) in d.trees.iter().enumerate() {
        fs::write(dir.join(format!("tree{s}.dot")), t.to_dot(&format!("state {s}")))?;
    }
    let b = a.as_streett()?.acceptance().pairs().unwrap_or_default().iter().map(|p| p.b.clone()).collect::<Vec<_>>();
    fs::write(dir.join("its.dot"), build_its(a.states(), &b)?.to_dot())?;

    println!("wrote {} files to {}", d.trees.len() + 3, dir.display());
    print!("{}", d.trees[0].to_dot("state 0"));
    Ok(())
}
