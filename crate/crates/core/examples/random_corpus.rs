//! State counts of both constructions over a seeded random corpus, as CSV.

use safra::improved::ImprovedContext;
use safra::random::{random_automaton, RandomSpec};
use safra::{determinize_classic, determinize_improved, AcceptanceKind, DEFAULT_CAP};

fn main() -> safra::Result<()> {
    println!("seed,n,k,classic_states,improved_states,improved_names,max_nodes,max_spine");
    for seed in 0..12u64 {
        let spec = RandomSpec {
            kind: AcceptanceKind::Streett,
            states: 2 + (seed as usize) % 3,
            pairs: 1 + (seed as usize) % 4,
            alphabet: 2,
            density: 0.35,
        };
        let a = random_automaton(&spec, seed)?;
        let c = determinize_classic(&a, DEFAULT_CAP)?;
        let i = determinize_improved(&a, DEFAULT_CAP)?;
        let (ctx, _) = ImprovedContext::new(&a)?;
        println!(
            "{seed},{},{},{},{},{},{},{}",
            a.states(),
            ctx.k(),
            c.states(),
            i.states(),
            i.names,
            i.max_nodes(),
            i.max_spine()
        );
    }
    Ok(())
}
