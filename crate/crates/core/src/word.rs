//! The word type shared by every family of sequences.
//!
//! A [`Word`] is a nonempty sequence of positive integers. Positions are
//! 1-based at every public interface: `x.at(1)` is the first entry.
//!
//! Words serialize as a bare digit string when every entry is at most 9
//! (`135144312`) and as comma-separated integers otherwise (`10,1,2`).
//! Parsing accepts both forms.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

#[allow(clippy::len_without_is_empty)]
impl Word {
    /// Builds a word, rejecting empty input and zero entries.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::usage("empty word"));
        }
        if let Some(pos) = entries.iter().position(|&v| v == 0) {
            return Err(Error::usage(format!(
                "entry at position {} is 0; entries must be positive",
                pos + 1
            )));
        }
        Ok(Word(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(!entries.is_empty() && entries.iter().all(|&v| v > 0));
        Word(entries)
    }

    /// The constant word `value^len`.
    pub fn constant(value: u32, len: usize) -> Result<Self> {
        Word::new(vec![value; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Entry at the 1-based position `pos`.
    ///
    /// Panics if `pos` is 0 or exceeds the length.
    pub fn at(&self, pos: usize) -> u32 {
        assert!(pos >= 1 && pos <= self.len(), "position {pos} out of range");
        self.0[pos - 1]
    }

    pub fn max_entry(&self) -> u32 {
        *self.0.iter().max().expect("words are nonempty")
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    pub fn last(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    /// The set of values taken by the word.
    pub fn image(&self) -> BTreeSet<u32> {
        self.0.iter().copied().collect()
    }

    /// The prefix of the given length, or `None` for a zero or oversized length.
    pub fn prefix(&self, len: usize) -> Option<Word> {
        (len >= 1 && len <= self.len()).then(|| Word(self.0[..len].to_vec()))
    }

    /// Appends `value`; used when growing a word one entry at a time.
    pub fn pushed(&self, value: u32) -> Result<Word> {
        let mut v = self.0.clone();
        v.push(value);
        Word::new(v)
    }
}

impl AsRef<[u32]> for Word {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Word::new(v)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::usage("empty word"));
        }
        let entries = if s.contains(',') {
            // a trailing comma marks a one-entry word such as "12,"
            s.strip_suffix(',')
                .unwrap_or(s)
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::usage(format!("invalid entry {tok:?} in word {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::usage(format!("invalid digit {c:?} in word {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(entries)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.0)
    }
}

pub(crate) fn write_entries(f: &mut impl fmt::Write, entries: &[u32]) -> fmt::Result {
    if entries.iter().all(|&v| v <= 9) {
        for v in entries {
            write!(f, "{v}")?;
        }
    } else {
        for (i, v) in entries.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{v}")?;
        }
    }
    Ok(())
}

/// Formats a raw entry slice with the shared word serialization.
pub fn format_entries(entries: &[u32]) -> String {
    let mut s = String::new();
    write_entries(&mut s, entries).expect("writing to a String cannot fail");
    s
}

/// Shorthand for parsing word literals in tests and examples.
///
/// Panics on malformed input.
pub fn w(s: &str) -> Word {
    s.parse()
        .unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}
