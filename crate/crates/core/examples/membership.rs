//! Membership of ultimately periodic words `u·v^ω`, for a nondeterministic
//! Streett automaton and for its deterministic equivalent.

use safra::format::parse;
use safra::oracle::{deterministic_run, member, member_deterministic, ProductGraph};
use safra::{determinize_improved, UltimatelyPeriodicWord, DEFAULT_CAP};

// Guesses a point after which letter 1 never occurs again.
const EVENTUALLY_ZEROS: &str = "\
automaton streett
alphabet 2
states 2
initial 0
trans 0 0 0
trans 0 1 0
trans 0 0 1
trans 1 0 1
pairs 1
G 1: 0
B 1:
end
";

fn main() -> safra::Result<()> {
    let a = parse(EVENTUALLY_ZEROS)?;
    let d = determinize_improved(&a, DEFAULT_CAP)?;

    for text in [";0", "1 1;0", ";1", "0;0 1", ";0 0 1"] {
        let w: UltimatelyPeriodicWord = text.parse()?;
        let product = ProductGraph::build(&a, &w)?;
        let verdict = member(&a, &w)?;
        assert_eq!(verdict, member_deterministic(&d.automaton, &w)?);
        let lasso = deterministic_run(&d.automaton, &w)?.expect("output is total");
        println!(
            "{text:>8}  {}  product nodes {:>2}  deterministic lasso {} steps, {} recurring states",
            if verdict { "accept" } else { "reject" },
            product.len(),
            lasso.steps,
            lasso.inf.len()
        );
    }
    Ok(())
}
