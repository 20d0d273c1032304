//! Line-based text format for automata.
//!
//! ```text
//! automaton streett        # buchi | genbuchi | streett | parity | rabin
//! alphabet 2
//! states 2
//! initial 0
//! trans 0 0 1
//! trans 1 1 0
//! pairs 1
//! G 1: 0 1
//! B 1: 1
//! end
//! ```
//!
//! `#` starts a comment. Parsing is strict: unknown keywords, ids out of
//! range, repeated `pairs`/`G i`/`B i` lines and a missing `end` are errors
//! carrying the offending line number.

use std::fmt::Write as _;

use thiserror::Error;

use crate::automaton::{Acceptance, AcceptanceKind, OmegaAutomaton, Pair};
use crate::stateset::StateSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

#[derive(Default)]
struct Header {
    kind: Option<AcceptanceKind>,
    alphabet: Option<usize>,
    states: Option<usize>,
}

fn number(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>().or_else(|_| err(line, format!("expected {what}, found `{tok}`")))
}

pub fn parse(text: &str) -> Result<OmegaAutomaton, ParseError> {
    let mut header = Header::default();
    let mut initial: Option<StateSet> = None;
    let mut trans: Vec<(usize, usize, usize, usize)> = Vec::new();
    let mut k: Option<usize> = None;
    let mut gs: Vec<Option<StateSet>> = Vec::new();
    let mut bs: Vec<Option<StateSet>> = Vec::new();
    let mut end_line = None;
    let mut last_line = 0;

    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some(&kw) = toks.first() else { continue };
        if end_line.is_some() {
            return err(line, "content after `end`");
        }
        let args = &toks[1..];
        let need_header = |h: &Header| -> Result<(usize, usize), ParseError> {
            match (h.kind, h.states, h.alphabet) {
                (Some(_), Some(n), Some(m)) => Ok((n, m)),
                _ => err(line, format!("`{kw}` before `automaton`, `alphabet` and `states`")),
            }
        };
        match kw {
            "automaton" => {
                if header.kind.is_some() {
                    return err(line, "duplicate `automaton`");
                }
                let [t] = args else { return err(line, "`automaton` takes one type") };
                header.kind = Some(
                    AcceptanceKind::from_keyword(t)
                        .ok_or_else(|| ParseError { line, message: format!("unknown automaton type `{t}`") })?,
                );
            }
            "alphabet" | "states" => {
                let slot = if kw == "alphabet" { &mut header.alphabet } else { &mut header.states };
                if slot.is_some() {
                    return err(line, format!("duplicate `{kw}`"));
                }
                let [v] = args else { return err(line, format!("`{kw}` takes one count")) };
                *slot = Some(number(v, line, "a count")?);
            }
            "initial" => {
                let (n, _) = need_header(&header)?;
                if initial.is_some() {
                    return err(line, "duplicate `initial`");
                }
                if args.is_empty() {
                    return err(line, "`initial` needs at least one state");
                }
                let mut s = StateSet::new();
                for t in args {
                    let q = number(t, line, "a state")?;
                    if q >= n {
                        return err(line, format!("state {q} out of range 0..{n}"));
                    }
                    s.insert(q);
                }
                initial = Some(s);
            }
            "trans" => {
                let (n, m) = need_header(&header)?;
                let [p, a, q] = args else { return err(line, "`trans` takes `<q> <letter> <q'>`") };
                let (p, a, q) =
                    (number(p, line, "a state")?, number(a, line, "a letter")?, number(q, line, "a state")?);
                if p >= n || q >= n {
                    return err(line, format!("state out of range 0..{n}"));
                }
                if a >= m {
                    return err(line, format!("letter {a} out of range 0..{m}"));
                }
                trans.push((line, p, a, q));
            }
            "pairs" => {
                need_header(&header)?;
                if k.is_some() {
                    return err(line, "duplicate `pairs`");
                }
                let [v] = args else { return err(line, "`pairs` takes one count") };
                let count = number(v, line, "a count")?;
                if header.kind == Some(AcceptanceKind::Buchi) && count != 1 {
                    return err(line, "buchi automata require `pairs 1`");
                }
                k = Some(count);
                gs = vec![None; count];
                bs = vec![None; count];
            }
            "G" | "B" => {
                let (n, _) = need_header(&header)?;
                let Some(count) = k else { return err(line, format!("`{kw}` before `pairs`")) };
                if kw == "G" && !header.kind.is_some_and(AcceptanceKind::has_g) {
                    return err(line, "`G` lines are only allowed for streett, parity and rabin");
                }
                let (idx, rest) = match args {
                    [] => return err(line, format!("`{kw}` needs an index")),
                    [first, rest @ ..] => match first.strip_suffix(':') {
                        Some(i) => (i, rest),
                        None => match rest {
                            [":", rest @ ..] => (*first, rest),
                            _ => return err(line, format!("expected `{kw} <i>: ...`")),
                        },
                    },
                };
                let i = number(idx, line, "a pair index")?;
                if i == 0 || i > count {
                    return err(line, format!("pair index {i} out of range 1..={count}"));
                }
                let mut s = StateSet::new();
                for t in rest {
                    let q = number(t, line, "a state")?;
                    if q >= n {
                        return err(line, format!("state {q} out of range 0..{n}"));
                    }
                    s.insert(q);
                }
                let slot = if kw == "G" { &mut gs[i - 1] } else { &mut bs[i - 1] };
                if slot.is_some() {
                    return err(line, format!("duplicate `{kw} {i}`"));
                }
                *slot = Some(s);
            }
            "end" => {
                if !args.is_empty() {
                    return err(line, "`end` takes no arguments");
                }
                end_line = Some(line);
            }
            other => return err(line, format!("unknown keyword `{other}`")),
        }
    }

    let Some(end) = end_line else { return err(last_line.max(1), "missing `end`") };
    let (Some(kind), Some(n), Some(m)) = (header.kind, header.states, header.alphabet) else {
        return err(end, "missing `automaton`, `alphabet` or `states`");
    };
    let Some(initial) = initial else { return err(end, "missing `initial`") };
    let Some(count) = k else { return err(end, "missing `pairs`") };
    let mut b_sets = Vec::with_capacity(count);
    for (i, b) in bs.into_iter().enumerate() {
        match b {
            Some(b) => b_sets.push(b),
            None => return err(end, format!("missing `B {}`", i + 1)),
        }
    }
    let acceptance = if kind.has_g() {
        let mut pairs = Vec::with_capacity(count);
        for (i, (g, b)) in gs.into_iter().zip(b_sets).enumerate() {
            match g {
                Some(g) => pairs.push(Pair::new(g, b)),
                None => return err(end, format!("missing `G {}`", i + 1)),
            }
        }
        match kind {
            AcceptanceKind::Streett => Acceptance::Streett(pairs),
            AcceptanceKind::Parity => Acceptance::Parity(pairs),
            _ => Acceptance::Rabin(pairs),
        }
    } else if kind == AcceptanceKind::Buchi {
        Acceptance::Buchi(b_sets.pop().unwrap_or_default())
    } else {
        Acceptance::GenBuchi(b_sets)
    };

    let mut a = OmegaAutomaton::new(n, m, acceptance);
    a.set_initial(initial);
    for (line, p, l, q) in trans {
        a.add_transition(p, l, q).map_err(|e| ParseError { line, message: e.to_string() })?;
    }
    Ok(a)
}

fn push_set(out: &mut String, s: &StateSet) {
    for q in s.iter() {
        let _ = write!(out, " {q}");
    }
}

/// Serializes in the text format. `parse(&emit(a)) == a` for every automaton
/// with a nonempty initial set.
pub fn emit(a: &OmegaAutomaton) -> String {
    let mut out = String::new();
    let acc = a.acceptance();
    let _ = writeln!(out, "automaton {}", acc.kind());
    let _ = writeln!(out, "alphabet {}", a.alphabet());
    let _ = writeln!(out, "states {}", a.states());
    out.push_str("initial");
    push_set(&mut out, a.initial());
    out.push('\n');
    for (p, l, q) in a.transitions() {
        let _ = writeln!(out, "trans {p} {l} {q}");
    }
    let _ = writeln!(out, "pairs {}", acc.index_size());
    match acc {
        Acceptance::Buchi(f) => {
            out.push_str("B 1:");
            push_set(&mut out, f);
            out.push('\n');
        }
        Acceptance::GenBuchi(bs) => {
            for (i, b) in bs.iter().enumerate() {
                let _ = write!(out, "B {}:", i + 1);
                push_set(&mut out, b);
                out.push('\n');
            }
        }
        Acceptance::Streett(ps) | Acceptance::Parity(ps) | Acceptance::Rabin(ps) => {
            for (i, p) in ps.iter().enumerate() {
                let _ = write!(out, "G {}:", i + 1);
                push_set(&mut out, &p.g);
                out.push('\n');
                let _ = write!(out, "B {}:", i + 1);
                push_set(&mut out, &p.b);
                out.push('\n');
            }
        }
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF_ZERO: &str = "\
# infinitely many 0
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

    #[test]
    fn parses_buchi() {
        let a = parse(INF_ZERO).unwrap();
        assert_eq!(a.states(), 2);
        assert_eq!(a.alphabet(), 2);
        assert_eq!(a.acceptance(), &Acceptance::Buchi(StateSet::singleton(1)));
        assert!(a.validate().is_empty());
        assert_eq!(parse(&emit(&a)).unwrap(), a);
    }

    #[test]
    fn separate_colon_and_empty_sets() {
        let a = parse("automaton rabin\nalphabet 1\nstates 1\ninitial 0\npairs 1\nG 1 : 0\nB 1:\nend").unwrap();
        assert_eq!(a.acceptance(), &Acceptance::Rabin(vec![Pair::new(StateSet::singleton(0), StateSet::new())]));
    }

    fn line_of(text: &str) -> usize {
        parse(text).unwrap_err().line
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of("automaton buchi\nalphabet 1\nstates 1\nfoo 1\nend"), 4);
        assert_eq!(line_of("automaton buchi\nalphabet 1\nstates 1\ntrans 0 0 3\nend"), 4);
        assert_eq!(line_of("automaton buchi\nalphabet 1\nstates 1\ntrans 0 1 0\nend"), 4);
        assert_eq!(line_of("automaton buchi\nalphabet 1\nstates 1\ninitial 0\npairs 1\npairs 1\nB 1: 0\nend"), 6);
        assert_eq!(
            line_of("automaton streett\nalphabet 1\nstates 1\ninitial 0\npairs 1\nG 1: 0\nG 1: 0\nB 1:\nend"),
            7
        );
        assert_eq!(line_of("automaton streett\nalphabet 1\nstates 1\ninitial 0\npairs 1\nG 2: 0\nend"), 6);
        assert_eq!(line_of("automaton buchi\nalphabet 1\nstates 1\ninitial 0\npairs 1\nG 1: 0\nB 1: 0\nend"), 6);
        assert_eq!(line_of("automaton buchi\nalphabet 1\nstates 1\ninitial 0\npairs 2\nend"), 5);
        assert_eq!(line_of("automaton buchi\nalphabet 1\nstates 1\ninitial 0\npairs 1\nB 1: 0\n"), 6);
        assert_eq!(line_of("automaton streett\nalphabet 1\nstates 1\ninitial 0\npairs 1\nB 1: 0\nend\n"), 7);
        assert_eq!(line_of("automaton muller\n"), 1);
        assert_eq!(line_of("automaton buchi\nalphabet 1\nstates 1\ninitial 0\npairs 1\nB 1: 0\nend\ntrans 0 0 0"), 8);
    }

    #[test]
    fn emit_is_stable() {
        let a = parse(INF_ZERO).unwrap();
        let text = emit(&a);
        assert!(text.starts_with("automaton buchi\nalphabet 2\nstates 2\ninitial 0\ntrans 0 0 1\n"));
        assert!(text.ends_with("pairs 1\nB 1: 1\nend\n"));
    }
}
