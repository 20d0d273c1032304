//! Ultimately periodic words `u·v^ω`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

/// The infinite word `prefix · period^ω`. The period is never empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UltimatelyPeriodicWord {
    prefix: Vec<usize>,
    period: Vec<usize>,
}

impl UltimatelyPeriodicWord {
    pub fn new(prefix: Vec<usize>, period: Vec<usize>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Invalid("the loop of an ultimately periodic word must be nonempty".into()));
        }
        Ok(Self { prefix, period })
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn period(&self) -> &[usize] {
        &self.period
    }

    /// `|u| + |v|`, the number of distinct positions of the lasso.
    pub fn positions(&self) -> usize {
        self.prefix.len() + self.period.len()
    }

    pub fn letter_at(&self, pos: usize) -> usize {
        if pos < self.prefix.len() {
            self.prefix[pos]
        } else {
            self.period[(pos - self.prefix.len()) % self.period.len()]
        }
    }

    /// Successor position: advance through `u`, then cycle through `v`.
    pub fn next_position(&self, pos: usize) -> usize {
        if pos + 1 < self.positions() {
            pos + 1
        } else {
            self.prefix.len()
        }
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.prefix.iter().chain(&self.period).copied().max()
    }

    pub fn check_alphabet(&self, alphabet: usize) -> Result<()> {
        match self.max_letter() {
            Some(l) if l >= alphabet => Err(Error::AlphabetMismatch { automaton: alphabet, found: l + 1 }),
            _ => Ok(()),
        }
    }

    /// The same word with the loop unrolled into the prefix once.
    pub fn unroll_prefix(&self) -> Self {
        let mut prefix = self.prefix.clone();
        prefix.extend_from_slice(&self.period);
        Self { prefix, period: self.period.clone() }
    }

    /// The same word with a doubled loop.
    pub fn double_period(&self) -> Self {
        let mut period = self.period.clone();
        period.extend_from_slice(&self.period);
        Self { prefix: self.prefix.clone(), period }
    }

    /// A uniformly random word with `|u| ≤ max_len` and `1 ≤ |v| ≤ max_len`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, alphabet: usize, max_len: usize) -> Self {
        let ul = rng.gen_range(0..=max_len);
        let vl = rng.gen_range(1..=max_len.max(1));
        Self {
            prefix: (0..ul).map(|_| rng.gen_range(0..alphabet)).collect(),
            period: (0..vl).map(|_| rng.gen_range(0..alphabet)).collect(),
        }
    }

    /// Every word with `|u| ≤ max_len` and `1 ≤ |v| ≤ max_len`, ordered by
    /// prefix length, prefix letters, loop length, then loop letters.
    pub fn enumerate(alphabet: usize, max_len: usize) -> impl Iterator<Item = Self> {
        (0..=max_len).flat_map(move |ul| {
            strings(alphabet, ul).flat_map(move |u| {
                (1..=max_len).flat_map(move |vl| {
                    let u = u.clone();
                    strings(alphabet, vl).map(move |v| Self { prefix: u.clone(), period: v })
                })
            })
        })
    }
}

/// All strings of length `len` over `0..alphabet`, in lexicographic order.
fn strings(alphabet: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if alphabet == 0 && len > 0 { 0 } else { alphabet.pow(len as u32) };
    (0..total).map(move |mut code| {
        let mut s = vec![0; len];
        for slot in s.iter_mut().rev() {
            *slot = code % alphabet;
            code /= alphabet;
        }
        s
    })
}

impl fmt::Display for UltimatelyPeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "{};{}", join(&self.prefix), join(&self.period))
    }
}

impl FromStr for UltimatelyPeriodicWord {
    type Err = Error;

    /// Parses `"u;v"`, letters as whitespace-separated integers.
    fn from_str(s: &str) -> Result<Self> {
        let (u, v) = s.split_once(';').ok_or_else(|| Error::Invalid(format!("word `{s}` must have the form `u;v`")))?;
        let letters = |part: &str| -> Result<Vec<usize>> {
            part.split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Invalid(format!("bad letter `{t}`"))))
                .collect()
        };
        Self::new(letters(u)?, letters(v)?)
    }
}
