//! Test-only reference implementations, independent of the library oracle.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use safra::random::{random_automaton, random_words, RandomSpec};
use safra::{Acceptance, AcceptanceKind, OmegaAutomaton, StateSet, UltimatelyPeriodicWord};

/// Evaluates an acceptance condition on `Inf`, straight from the textbook
/// definitions.
pub fn accepts(acc: &Acceptance, inf: &StateSet) -> bool {
    let hits = |s: &StateSet| !s.intersection(inf).is_empty();
    match acc {
        Acceptance::Buchi(f) => hits(f),
        Acceptance::GenBuchi(bs) => bs.iter().all(hits),
        Acceptance::Streett(ps) | Acceptance::Parity(ps) => ps.iter().all(|p| !hits(&p.g) || hits(&p.b)),
        Acceptance::Rabin(ps) => ps.iter().any(|p| hits(&p.g) && !hits(&p.b)),
    }
}

/// Every set of states that some reachable cycle of the lasso product
/// visits exactly, found by walking from each reachable product node and
/// recording the visited states whenever the walk closes.
pub fn achievable_inf_sets(a: &OmegaAutomaton, w: &UltimatelyPeriodicWord) -> HashSet<u64> {
    let len = w.prefix().len() + w.period().len();
    let letter = |p: usize| if p < w.prefix().len() { w.prefix()[p] } else { w.period()[p - w.prefix().len()] };
    let next = |p: usize| if p + 1 < len { p + 1 } else { w.prefix().len() };
    let succ = |(q, p): (usize, usize)| -> Vec<(usize, usize)> {
        a.successors(q, letter(p)).iter().map(|t| (t, next(p))).collect()
    };
    let mut reach: Vec<(usize, usize)> = a.initial().iter().map(|q| (q, 0)).collect();
    let mut seen: HashSet<(usize, usize)> = reach.iter().copied().collect();
    let mut i = 0;
    while i < reach.len() {
        for y in succ(reach[i]) {
            if seen.insert(y) {
                reach.push(y);
            }
        }
        i += 1;
    }
    let mut out = HashSet::new();
    for &x in &reach {
        let mut visited: HashSet<((usize, usize), u64)> = HashSet::new();
        let mut stack: Vec<((usize, usize), u64)> = succ(x).into_iter().map(|y| (y, 1u64 << y.0)).collect();
        while let Some((y, m)) = stack.pop() {
            if !visited.insert((y, m)) {
                continue;
            }
            if y == x {
                out.insert(m);
            }
            for z in succ(y) {
                stack.push((z, m | (1 << z.0)));
            }
        }
    }
    out
}

pub fn naive_member(a: &OmegaAutomaton, w: &UltimatelyPeriodicWord) -> bool {
    achievable_inf_sets(a, w)
        .into_iter()
        .any(|m| accepts(a.acceptance(), &(0..64).filter(|q| m >> q & 1 == 1).collect()))
}

/// Membership in a deterministic automaton by running it for a long,
/// loop-aligned stretch and reading off the states of the final round.
pub fn simulate_deterministic(a: &OmegaAutomaton, w: &UltimatelyPeriodicWord) -> bool {
    let mut q = a.initial().iter().next().unwrap();
    for &l in w.prefix() {
        match a.det_successor(q, l) {
            Some(t) => q = t,
            None => return false,
        }
    }
    let mut first_seen: HashMap<usize, usize> = HashMap::new();
    let mut round = 0;
    loop {
        if let Some(&r) = first_seen.get(&q) {
            // the loop-boundary state repeats: states of rounds r..round recur
            let mut inf = StateSet::new();
            let mut s = q;
            for _ in r..round {
                for &l in w.period() {
                    inf.insert(s);
                    s = a.det_successor(s, l).unwrap();
                }
            }
            return accepts(a.acceptance(), &inf);
        }
        first_seen.insert(q, round);
        for &l in w.period() {
            match a.det_successor(q, l) {
                Some(t) => q = t,
                None => return false,
            }
        }
        round += 1;
    }
}

/// Parameters of the random corpus: `n` uniform in `1..=5`, `k` in
/// `1..=3`, two letters, transition density 0.35.
pub fn corpus_spec(kind: AcceptanceKind, seed: u64) -> RandomSpec {
    let n = 1 + (seed as usize * 7 + 3) % 5;
    let k = 1 + (seed as usize * 5 + 1) % 3;
    RandomSpec { kind, states: n, pairs: k, alphabet: 2, density: 0.35 }
}

pub fn corpus(kind: AcceptanceKind, count: u64, base: u64) -> Vec<OmegaAutomaton> {
    (0..count).map(|i| random_automaton(&corpus_spec(kind, base + i), base + i).unwrap()).collect()
}

pub fn words(count: usize, max_len: usize, seed: u64) -> Vec<UltimatelyPeriodicWord> {
    random_words(2, count, max_len, seed)
}
