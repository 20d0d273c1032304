//! Determinize the Büchi automaton for "infinitely many 0" with both
//! constructions and print the trees behind each output state.
//!
//! ```bash
//! cargo run --example determinize_buchi
//! ```

use safra::format::{emit, parse};
use safra::{determinize_classic, determinize_improved, DEFAULT_CAP};

const INF_ZERO: &str = "\
automaton buchi
alphabet 2
states 2
initial 0
trans 0 0 1
trans 0 1 0
trans 1 0 1
trans 1 1 0
pairs 1
B 1: 1
end
";

fn main() -> safra::Result<()> {
    let a = parse(INF_ZERO)?;

    for (label, d) in
        [("classic", determinize_classic(&a, DEFAULT_CAP)?), ("improved", determinize_improved(&a, DEFAULT_CAP)?)]
    {
        println!("== {label}: {} states, {} Rabin pairs", d.states(), d.names);
        for (s, t) in d.trees.iter().enumerate() {
            println!("  state {s}: {t}");
        }
        println!("{}", emit(&d.automaton));
    }
    Ok(())
}
