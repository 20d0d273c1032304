//! Deterministic ω-automata from Streett, Büchi, parity and Rabin automata
//! via Safra trees and their reduced, index-labelled variant.

pub mod automaton;
pub mod classic;
pub mod cli;
pub mod determinize;
mod engine;
pub mod equiv;
pub mod error;
pub mod format;
pub mod improved;
pub mod its;
pub mod oracle;
pub mod rabin;
pub mod random;
pub mod spines;
pub mod stateset;
pub mod tree;
pub mod word;

pub use automaton::{Acceptance, AcceptanceKind, OmegaAutomaton, Pair, Violation};
pub use classic::determinize_classic;
pub use determinize::{Determinization, DEFAULT_CAP};
pub use error::{Error, Result};
pub use improved::determinize_improved;
pub use rabin::determinize_rabin;
pub use stateset::StateSet;
pub use tree::{Color, SafraTree};
pub use word::UltimatelyPeriodicWord;
