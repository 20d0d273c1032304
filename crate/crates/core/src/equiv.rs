//! Bounded language comparison on ultimately periodic words.

use crate::automaton::OmegaAutomaton;
use crate::error::{Error, Result};
use crate::oracle::member;
use crate::random::random_words;
use crate::word::UltimatelyPeriodicWord;

/// Which words to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordSet {
    /// `samples` seeded random words with `|u|, |v| ≤ max_len`.
    Sampled { samples: usize, max_len: usize, seed: u64 },
    /// Every word with `|u| ≤ max_len` and `1 ≤ |v| ≤ max_len`.
    Exhaustive { max_len: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub word: UltimatelyPeriodicWord,
    pub in_first: bool,
}

/// A word on which `a` and `b` disagree, if any.
///
/// Sampled mode reports the first failing word in draw order, exhaustive
/// mode the least one by `|u|`, `u`, `|v|`, `v`.
pub fn counterexample(a: &OmegaAutomaton, b: &OmegaAutomaton, words: WordSet) -> Result<Option<Counterexample>> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch { automaton: a.alphabet(), found: b.alphabet() });
    }
    let differs = |w: UltimatelyPeriodicWord| -> Result<Option<Counterexample>> {
        let x = member(a, &w)?;
        Ok((x != member(b, &w)?).then_some(Counterexample { word: w, in_first: x }))
    };
    match words {
        WordSet::Sampled { samples, max_len, seed } => {
            for w in random_words(a.alphabet(), samples, max_len, seed) {
                if let Some(c) = differs(w)? {
                    return Ok(Some(c));
                }
            }
            Ok(None)
        }
        WordSet::Exhaustive { max_len } => {
            for w in UltimatelyPeriodicWord::enumerate(a.alphabet(), max_len) {
                if let Some(c) = differs(w)? {
                    return Ok(Some(c));
                }
            }
            Ok(None)
        }
    }
}
