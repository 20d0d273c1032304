//! Follow the reduced Safra trees along a word, one letter at a time.
//! Node format is `name:color:index:{states}`.

use safra::format::parse;
use safra::improved::{improved_step, initial_improved, rsts_violations, ImprovedContext};

const STREETT: &str = "\
automaton streett
alphabet 2
states 3
initial 0
trans 0 0 0
trans 0 0 1
trans 0 1 2
trans 1 0 1
trans 1 1 0
trans 2 0 2
trans 2 1 0
trans 2 1 1
pairs 2
G 1: 0 1
B 1: 1
G 2: 2
B 2: 0
end
";

fn main() -> safra::Result<()> {
    let a = parse(STREETT)?;
    let (ctx, s) = ImprovedContext::new(&a)?;
    println!("mu = {}, bucket width = {}, names 1..={}", ctx.mu(), ctx.width(), ctx.names());

    let mut t = initial_improved(&ctx, &s);
    println!("     {t}");
    for letter in [0, 0, 1, 0, 1, 1, 0, 0] {
        t = improved_step(&ctx, &s, &t, letter);
        assert!(rsts_violations(&ctx, &t).is_empty());
        println!("{letter} -> {t}");
    }
    Ok(())
}
