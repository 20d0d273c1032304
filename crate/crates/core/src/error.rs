use thiserror::Error;

use crate::automaton::AcceptanceKind;
use crate::format::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("expected {expected} acceptance, found {found}")]
    WrongAcceptance { expected: &'static str, found: AcceptanceKind },
    #[error("automaton is not deterministic")]
    NotDeterministic,
    #[error("automaton is not total: state {state} has no successor on letter {letter}")]
    NotTotal { state: usize, letter: usize },
    #[error("alphabet mismatch: automaton has {automaton} letters, got {found}")]
    AlphabetMismatch { automaton: usize, found: usize },
    #[error("state {state} out of range (automaton has {states} states)")]
    StateOutOfRange { state: usize, states: usize },
    #[error("letter {letter} out of range (alphabet has {alphabet} letters)")]
    LetterOutOfRange { letter: usize, alphabet: usize },
    #[error("pair index {index} out of range 1..={k}")]
    PairOutOfRange { index: usize, k: usize },
    #[error("exploration cap of {0} states exceeded")]
    CapExceeded(usize),
    #[error("invalid automaton: {0}")]
    Invalid(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
