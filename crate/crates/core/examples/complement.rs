//! Complement a Streett automaton: determinize, complete, then dualize the
//! Rabin condition into a Streett one.

use safra::oracle::member;
use safra::random::{random_automaton, random_words, RandomSpec};
use safra::{determinize_improved, AcceptanceKind, DEFAULT_CAP};

fn main() -> safra::Result<()> {
    let spec = RandomSpec { kind: AcceptanceKind::Streett, states: 4, pairs: 2, alphabet: 2, density: 0.35 };
    let a = random_automaton(&spec, 4)?;
    let d = determinize_improved(&a, DEFAULT_CAP)?;
    let complement = d.automaton.complete()?.dualize()?;
    println!(
        "input {} states, deterministic {} states, complement is {} with {} pairs",
        a.states(),
        d.states(),
        complement.acceptance().kind(),
        complement.acceptance().index_size()
    );

    for w in random_words(2, 12, 4, 3) {
        let (x, y) = (member(&a, &w)?, member(&complement, &w)?);
        assert_ne!(x, y);
        println!("{:>14}  input {:<5}  complement {y}", w.to_string(), x);
    }
    Ok(())
}
