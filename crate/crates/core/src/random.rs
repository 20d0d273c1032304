//! Seeded random automata and words.
//!
//! Every draw comes from a `ChaCha8Rng` seeded with the given `u64`, in a
//! fixed order, so equal parameters give identical automata.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{Acceptance, AcceptanceKind, OmegaAutomaton, Pair};
use crate::error::{Error, Result};
use crate::stateset::StateSet;
use crate::word::UltimatelyPeriodicWord;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomSpec {
    pub kind: AcceptanceKind,
    pub states: usize,
    /// Number of pairs or sets; ignored for Büchi.
    pub pairs: usize,
    pub alphabet: usize,
    /// Probability of each transition `(q, a, q')`.
    pub density: f64,
}

fn random_set(rng: &mut ChaCha8Rng, n: usize) -> StateSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

/// Parity pairs from `2k` raw sets: each link of the chain is the union of
/// its raw set with the previous link, plus one fresh state if that union
/// would not grow. The chain stops early once `Q` is used up.
fn parity_chain(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<Pair> {
    let raw: Vec<StateSet> = (0..2 * k).map(|_| random_set(rng, n)).collect();
    let mut links: Vec<StateSet> = Vec::new();
    for (j, r) in raw.into_iter().enumerate() {
        let prev = links.last().cloned().unwrap_or_default();
        let mut cur = r.union(&prev);
        if j > 0 && cur == prev {
            let outside: Vec<usize> = (0..n).filter(|&q| !prev.contains(q)).collect();
            if outside.is_empty() {
                break;
            }
            cur.insert(outside[rng.gen_range(0..outside.len())]);
        }
        links.push(cur);
    }
    links.chunks_exact(2).map(|c| Pair::new(c[1].clone(), c[0].clone())).collect()
}

/// A random automaton. Streett pairs are merged to make `B` injective and
/// parity sets are repaired into a strict chain, so the result validates.
pub fn random_automaton(spec: &RandomSpec, seed: u64) -> Result<OmegaAutomaton> {
    let RandomSpec { kind, states: n, pairs: k, alphabet: m, density } = *spec;
    if n == 0 || m == 0 {
        return Err(Error::Invalid("states and alphabet must be positive".into()));
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::Invalid(format!("density {density} is not in (0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for p in 0..n {
        for l in 0..m {
            for q in 0..n {
                if rng.gen_bool(density) {
                    edges.push((p, l, q));
                }
            }
        }
    }
    let mut initial = random_set(&mut rng, n);
    if initial.is_empty() {
        initial.insert(rng.gen_range(0..n));
    }
    let acceptance = match kind {
        AcceptanceKind::Buchi => Acceptance::Buchi(random_set(&mut rng, n)),
        AcceptanceKind::GenBuchi => Acceptance::GenBuchi((0..k).map(|_| random_set(&mut rng, n)).collect()),
        AcceptanceKind::Streett | AcceptanceKind::Rabin => {
            let ps: Vec<Pair> = (0..k)
                .map(|_| {
                    let g = random_set(&mut rng, n);
                    Pair::new(g, random_set(&mut rng, n))
                })
                .collect();
            if kind == AcceptanceKind::Rabin {
                Acceptance::Rabin(ps)
            } else {
                Acceptance::Streett(ps)
            }
        }
        AcceptanceKind::Parity => Acceptance::Parity(parity_chain(&mut rng, n, k)),
    };
    let mut a = OmegaAutomaton::new(n, m, acceptance).with_transitions(&edges);
    a.set_initial(initial);
    if kind == AcceptanceKind::Streett {
        a = a.simplify_streett()?;
    }
    Ok(a)
}

/// `count` words with `|u| ≤ max_len` and `1 ≤ |v| ≤ max_len`.
pub fn random_words(alphabet: usize, count: usize, max_len: usize, seed: u64) -> Vec<UltimatelyPeriodicWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| UltimatelyPeriodicWord::random(&mut rng, alphabet, max_len)).collect()
}
