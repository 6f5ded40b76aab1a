//! Cayley-pattern occurrences and avoidance.
//!
//! An occurrence of a pattern `σ` in a word `x` is a subsequence of `x`
//! order-isomorphic to `σ`, with equalities preserved: `x_{i_s} < x_{i_t}`
//! iff `σ_s < σ_t`, and `x_{i_s} = x_{i_t}` iff `σ_s = σ_t`.

mod forms;
mod wilf;

pub use forms::{structural_form_check, Form};
pub use wilf::{wilf_classes, wilf_classes_capped, WilfClass, WilfReport};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::seqcore::{is_cayley, Enumeration, FamilyTag};
use crate::word::Word;

pub const MAX_PATTERN_LEN: usize = 6;

/// A Cayley permutation of length at most [`MAX_PATTERN_LEN`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Word);

impl Pattern {
    pub fn new(word: Word) -> Result<Self> {
        if word.len() > MAX_PATTERN_LEN {
            return Err(Error::usage(format!(
                "pattern {word} is longer than {MAX_PATTERN_LEN}"
            )));
        }
        if !is_cayley(&word) {
            return Err(Error::usage(format!(
                "pattern {word} is not a Cayley permutation"
            )));
        }
        Ok(Pattern(word))
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn entries(&self) -> &[u32] {
        self.0.entries()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn max_entry(&self) -> u32 {
        self.0.max_entry()
    }

    /// `mσ`: the pattern with a copy of its maximum prepended.
    pub fn with_max_prepended(&self) -> Result<Pattern> {
        let mut v = vec![self.max_entry()];
        v.extend_from_slice(self.entries());
        Pattern::new(Word::new(v)?)
    }

    /// True iff `self` occurs in `other` as a pattern.
    pub fn is_contained_in(&self, other: &Pattern) -> bool {
        contains(other.entries(), self)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::new(s.parse()?)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All Cayley permutations of length `k`, lexicographically.
pub fn all_patterns(k: usize) -> Result<Vec<Pattern>> {
    if k == 0 || k > MAX_PATTERN_LEN {
        return Err(Error::usage(format!(
            "pattern length must lie in 1..={MAX_PATTERN_LEN}"
        )));
    }
    Ok(Enumeration::new(FamilyTag::Cayley, k)
        .cap(MAX_PATTERN_LEN)
        .collect()?
        .into_iter()
        .map(Pattern)
        .collect())
}

/// Number of occurrences of `p` in `x`.
///
/// Every occurrence fixes a strictly increasing binding of the pattern's
/// values `1..=max(p)` to values of `x`. For each binding the occurrences are
/// the embeddings of one fixed target word, counted by the usual
/// subsequence dynamic program.
pub fn count_occurrences(x: &Word, p: &Pattern) -> u64 {
    let image: Vec<u32> = x.image().into_iter().collect();
    let m = p.max_entry() as usize;
    if m > image.len() || p.len() > x.len() {
        return 0;
    }
    let mut total = 0u64;
    let mut binding = Vec::with_capacity(m);
    for_each_binding(&image, m, 0, &mut binding, &mut |binding| {
        total += count_embeddings(x.entries(), p.entries(), binding);
    });
    total
}

fn for_each_binding(
    image: &[u32],
    m: usize,
    from: usize,
    binding: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if binding.len() == m {
        f(binding);
        return;
    }
    let need = m - binding.len();
    for i in from..=image.len() - need {
        binding.push(image[i]);
        for_each_binding(image, m, i + 1, binding, f);
        binding.pop();
    }
}

fn count_embeddings(x: &[u32], p: &[u32], binding: &[u32]) -> u64 {
    let k = p.len();
    // ways[j]: embeddings of the first j pattern letters
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for &v in x {
        for j in (1..=k).rev() {
            if binding[p[j - 1] as usize - 1] == v {
                ways[j] += ways[j - 1];
            }
        }
    }
    ways[k]
}

pub fn avoids(x: &Word, p: &Pattern) -> bool {
    !contains(x.entries(), p)
}

/// True iff `x` has at least one occurrence of `p`.
pub fn contains(x: &[u32], p: &Pattern) -> bool {
    let mut idx = Vec::with_capacity(p.len());
    find(x, p.entries(), None, 0, &mut idx)
}

/// True iff `x` has an occurrence of `p` that uses the last entry of `x`.
///
/// When the shorter prefix is known to avoid `p`, this decides whether
/// the whole word does.
pub fn occurs_ending_at_last(x: &[u32], p: &Pattern) -> bool {
    if x.len() < p.len() {
        return false;
    }
    let mut idx = Vec::with_capacity(p.len());
    find(x, p.entries(), Some(x.len() - 1), 0, &mut idx)
}

// Depth-first search assigning pattern letters to increasing indices, checking
// each new index against all earlier ones.
fn find(x: &[u32], p: &[u32], last: Option<usize>, from: usize, idx: &mut Vec<usize>) -> bool {
    let s = idx.len();
    let k = p.len();
    if s == k {
        return true;
    }
    let left = k - s - 1;
    let (lo, hi) = match last {
        Some(l) if left == 0 => (from.max(l), l as isize),
        Some(l) => (from, l as isize - left as isize),
        None => (from, x.len() as isize - left as isize - 1),
    };
    if hi < lo as isize {
        return false;
    }
    let hi = hi as usize;
    for i in lo..=hi {
        let ok = idx
            .iter()
            .enumerate()
            .all(|(t, &j)| x[j].cmp(&x[i]) == p[t].cmp(&p[s]));
        if ok {
            idx.push(i);
            if find(x, p, last, i + 1, idx) {
                return true;
            }
            idx.pop();
        }
    }
    false
}

/// Members of `family` of length `n` avoiding `p`, with the default cap.
pub fn count_avoiders(n: usize, p: &Pattern, family: FamilyTag) -> Result<u64> {
    Enumeration::new(family, n).avoiding(p).count()
}

pub fn avoiders(n: usize, p: &Pattern, family: FamilyTag) -> Result<Vec<Word>> {
    Enumeration::new(family, n).avoiding(p).collect()
}

/// Checks `B̂_n(σ) = B̂_n(mσ)` as sets for every `n <= n_max`, where the
/// second letter of `σ` is its unique maximum `m`.
pub fn check_lemma_main(p: &Pattern, n_max: usize) -> Result<bool> {
    let e = p.entries();
    let m = p.max_entry();
    if e.len() < 2 || e[1] != m || e.iter().filter(|&&v| v == m).count() != 1 {
        return Err(Error::domain(format!(
            "{p}: the second letter must be the unique maximum"
        )));
    }
    let extended = p.with_max_prepended()?;
    for n in 1..=n_max {
        let a: BTreeSet<Word> = avoiders(n, p, FamilyTag::RevisedB)?.into_iter().collect();
        let b: BTreeSet<Word> = avoiders(n, &extended, FamilyTag::RevisedB)?
            .into_iter()
            .collect();
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}
