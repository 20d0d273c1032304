//! Compare automata on bounded word sets: the two constructions agree, and
//! a counterexample is found for different languages.

use safra::equiv::{counterexample, WordSet};
use safra::random::{random_automaton, RandomSpec};
use safra::{determinize_classic, determinize_improved, AcceptanceKind, DEFAULT_CAP};

fn main() -> safra::Result<()> {
    for seed in 0..5 {
        let spec = RandomSpec { kind: AcceptanceKind::Streett, states: 3, pairs: 2, alphabet: 2, density: 0.4 };
        let a = random_automaton(&spec, seed)?;
        let c = determinize_classic(&a, DEFAULT_CAP)?;
        let i = determinize_improved(&a, DEFAULT_CAP)?;
        let cex = counterexample(&c.automaton, &i.automaton, WordSet::Exhaustive { max_len: 3 })?;
        println!(
            "seed {seed}: classic {:>3} states, improved {:>3} states, counterexample {cex:?}",
            c.states(),
            i.states()
        );
    }

    let spec = RandomSpec { kind: AcceptanceKind::Buchi, states: 3, pairs: 1, alphabet: 2, density: 0.5 };
    let x = random_automaton(&spec, 1)?;
    let y = random_automaton(&spec, 2)?;
    match counterexample(&x, &y, WordSet::Sampled { samples: 500, max_len: 4, seed: 0 })? {
        Some(c) => println!("random Büchi automata differ on {} (in first: {})", c.word, c.in_first),
        None => println!("no difference found on the sample"),
    }
    Ok(())
}
