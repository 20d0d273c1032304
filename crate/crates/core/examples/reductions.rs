//! Generalized Büchi and parity automata go through their Streett form.

use safra::format::parse;
use safra::oracle::{member, member_deterministic};
use safra::{determinize_improved, UltimatelyPeriodicWord, DEFAULT_CAP};

// Both letters infinitely often.
const BOTH_LETTERS: &str = "\
automaton genbuchi
alphabet 2
states 2
initial 0
trans 0 0 0
trans 0 1 1
trans 1 0 0
trans 1 1 1
pairs 2
B 1: 0
B 2: 1
end
";

// Accepts iff state 1 recurs or state 2 is avoided eventually.
const PARITY: &str = "\
automaton parity
alphabet 2
states 3
initial 0
trans 0 0 1
trans 0 1 2
trans 1 0 0
trans 1 1 2
trans 2 0 0
trans 2 1 1
pairs 1
G 1: 1 2
B 1: 1
end
";

fn main() -> safra::Result<()> {
    for text in [BOTH_LETTERS, PARITY] {
        let a = parse(text)?;
        let s = a.as_streett()?;
        let d = determinize_improved(&a, DEFAULT_CAP)?;
        println!(
            "{} with {} sets -> Streett with {} pairs -> {} deterministic states",
            a.acceptance().kind(),
            a.acceptance().index_size(),
            s.acceptance().index_size(),
            d.states()
        );
        for w in UltimatelyPeriodicWord::enumerate(2, 2) {
            let x = member(&a, &w)?;
            assert_eq!(x, member_deterministic(&d.automaton, &w)?);
            assert_eq!(x, member(&s, &w)?);
        }
    }
    println!("all outputs agree with their inputs on words with |u|,|v| <= 2");
    Ok(())
}
