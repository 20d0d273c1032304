mod common;

use common::{corpus, naive_member, simulate_deterministic, words};
use safra::improved::{determinize_with, rsts_violations, ImprovedContext};
use safra::oracle::{member, member_deterministic};
use safra::{determinize_classic, determinize_improved, AcceptanceKind, OmegaAutomaton, DEFAULT_CAP};

fn check_against_input(a: &OmegaAutomaton, d: &OmegaAutomaton, seed: u64) {
    assert!(d.is_deterministic() && d.is_total());
    for w in words(30, 5, seed) {
        let expected = naive_member(a, &w);
        assert_eq!(simulate_deterministic(d, &w), expected, "word {w}");
        assert_eq!(member_deterministic(d, &w).unwrap(), expected, "word {w}");
    }
}

#[test]
fn improved_agrees_with_reference_oracle() {
    for (i, a) in corpus(AcceptanceKind::Streett, 60, 1000).iter().enumerate() {
        let d = determinize_improved(a, DEFAULT_CAP).unwrap();
        check_against_input(a, &d.automaton, i as u64);
    }
}

#[test]
fn classic_agrees_with_reference_oracle() {
    for (i, a) in corpus(AcceptanceKind::Streett, 40, 2000).iter().enumerate() {
        let d = determinize_classic(a, DEFAULT_CAP).unwrap();
        check_against_input(a, &d.automaton, i as u64);
        for t in &d.trees {
            let names = a.states() * (a.acceptance().index_size() + 1);
            assert!(t.sts_violations(names, a.acceptance().index_size()).is_empty(), "{t}");
        }
    }
}

#[test]
fn every_reachable_reduced_tree_is_valid() {
    for a in corpus(AcceptanceKind::Streett, 60, 3000) {
        let (ctx, s) = ImprovedContext::new(&a).unwrap();
        let d = determinize_with(&ctx, &s, DEFAULT_CAP).unwrap();
        for t in &d.trees {
            let v = rsts_violations(&ctx, t);
            assert!(v.is_empty(), "{t}: {v:?}");
        }
    }
}

#[test]
fn buchi_infinitely_many_zero() {
    let a = safra::format::parse(
        "automaton buchi\nalphabet 2\nstates 2\ninitial 0\n\
         trans 0 0 1\ntrans 0 1 0\ntrans 1 0 1\ntrans 1 1 0\npairs 1\nB 1: 1\nend\n",
    )
    .unwrap();
    for d in [determinize_classic(&a, DEFAULT_CAP).unwrap(), determinize_improved(&a, DEFAULT_CAP).unwrap()] {
        for w in safra::UltimatelyPeriodicWord::enumerate(2, 5) {
            assert_eq!(member_deterministic(&d.automaton, &w).unwrap(), member(&a, &w).unwrap(), "{w}");
        }
    }
    let d = determinize_improved(&a, DEFAULT_CAP).unwrap();
    assert!(d.names <= 4);
}
