//! Determinize a nondeterministic Rabin automaton pair by pair.

use safra::oracle::{member, member_deterministic};
use safra::rabin::rabin_pair_to_buchi;
use safra::random::{random_automaton, RandomSpec};
use safra::{determinize_rabin, AcceptanceKind, UltimatelyPeriodicWord, DEFAULT_CAP};

fn main() -> safra::Result<()> {
    let spec = RandomSpec { kind: AcceptanceKind::Rabin, states: 3, pairs: 2, alphabet: 2, density: 0.4 };
    let a = random_automaton(&spec, 1)?;
    for i in 1..=2 {
        let b = rabin_pair_to_buchi(&a, i)?;
        println!("pair {i}: Büchi automaton with {} states", b.states());
    }

    let d = determinize_rabin(&a, DEFAULT_CAP)?;
    let sizes: Vec<usize> = d.components.iter().map(|c| c.states()).collect();
    println!(
        "components {sizes:?}, product {} states, {} pairs",
        d.automaton.states(),
        d.automaton.acceptance().index_size()
    );

    let mut accepted = 0;
    let mut total = 0;
    for w in UltimatelyPeriodicWord::enumerate(2, 3) {
        let x = member(&a, &w)?;
        assert_eq!(x, member_deterministic(&d.automaton, &w)?);
        accepted += usize::from(x);
        total += 1;
    }
    println!("agrees on all {total} words with |u|,|v| <= 3 ({accepted} accepted)");
    Ok(())
}
