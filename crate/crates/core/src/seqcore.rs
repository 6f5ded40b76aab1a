//! Statistic sets, family membership and exhaustive generation.
//!
//! All position sets are 1-based and always contain position 1.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pattern::{self, Pattern};
use crate::word::Word;

/// Enumeration is refused above this length unless the caller raises the cap.
pub const DEFAULT_CAP: usize = 14;

/// Ascent tops, ascent bottoms, descent tops and descent bottoms of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatSets {
    pub asctop: BTreeSet<usize>,
    pub ascbot: BTreeSet<usize>,
    pub destop: BTreeSet<usize>,
    pub desbot: BTreeSet<usize>,
}

pub fn stat_sets(x: &Word) -> StatSets {
    let v = x.entries();
    let n = v.len();
    let mut s = StatSets {
        asctop: BTreeSet::from([1]),
        ascbot: BTreeSet::from([1]),
        destop: BTreeSet::from([1]),
        desbot: BTreeSet::from([1]),
    };
    // pair (i, i+1) in 1-based positions
    for i in 1..n {
        let (a, b) = (v[i - 1], v[i]);
        if a < b {
            s.ascbot.insert(i);
            s.asctop.insert(i + 1);
        } else if a > b {
            s.destop.insert(i);
            s.desbot.insert(i + 1);
        }
    }
    s
}

pub fn asctop_set(x: &Word) -> BTreeSet<usize> {
    stat_sets(x).asctop
}

pub fn ascbot_set(x: &Word) -> BTreeSet<usize> {
    stat_sets(x).ascbot
}

pub fn destop_set(x: &Word) -> BTreeSet<usize> {
    stat_sets(x).destop
}

pub fn desbot_set(x: &Word) -> BTreeSet<usize> {
    stat_sets(x).desbot
}

/// `asctop` as a number: 1 plus the number of strict ascents.
pub fn asctop(x: &[u32]) -> usize {
    1 + x.windows(2).filter(|p| p[0] < p[1]).count()
}

/// Positions of the leftmost copy of each value.
pub fn nub(x: &Word) -> BTreeSet<usize> {
    let mut seen = BTreeSet::new();
    x.entries()
        .iter()
        .enumerate()
        .filter(|(_, &v)| seen.insert(v))
        .map(|(i, _)| i + 1)
        .collect()
}

/// True iff the image of `x` is exactly `{1, ..., max(x)}`.
pub fn is_cayley(x: &Word) -> bool {
    let m = x.max_entry() as usize;
    if m > x.len() {
        return false;
    }
    let mut hit = vec![false; m + 1];
    for &v in x.entries() {
        hit[v as usize] = true;
    }
    hit[1..].iter().all(|&h| h)
}

pub fn is_ascent_sequence(x: &Word) -> bool {
    let v = x.entries();
    if v[0] != 1 {
        return false;
    }
    let mut tops = 1;
    for i in 1..v.len() {
        if v[i] as usize > tops + 1 {
            return false;
        }
        if v[i - 1] < v[i] {
            tops += 1;
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    /// Ascent sequences.
    AscentSeq,
    /// Modified ascent sequences: Cayley permutations with `Asctop = Nub`.
    ModifiedA,
    /// Revised ascent sequences: Cayley permutations with `Ascbot = Nub`.
    RevisedB,
    /// Cayley permutations with `Destop = Nub`.
    RevisedC,
    /// Cayley permutations with `Desbot = Nub`.
    RevisedD,
    Cayley,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 6] = [
        FamilyTag::AscentSeq,
        FamilyTag::ModifiedA,
        FamilyTag::RevisedB,
        FamilyTag::RevisedC,
        FamilyTag::RevisedD,
        FamilyTag::Cayley,
    ];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::AscentSeq => "asc",
            FamilyTag::ModifiedA => "modasc",
            FamilyTag::RevisedB => "rasc",
            FamilyTag::RevisedC => "revc",
            FamilyTag::RevisedD => "revd",
            FamilyTag::Cayley => "cayley",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tag = match s.to_ascii_lowercase().as_str() {
            "asc" | "ascent" => FamilyTag::AscentSeq,
            "modasc" | "modified" | "a" => FamilyTag::ModifiedA,
            "rasc" | "revised" | "b" => FamilyTag::RevisedB,
            "revc" | "c" => FamilyTag::RevisedC,
            "revd" | "d" => FamilyTag::RevisedD,
            "cayley" | "cay" => FamilyTag::Cayley,
            _ => return Err(Error::usage(format!("unknown family {s:?}"))),
        };
        Ok(tag)
    }
}

pub fn is_member(x: &Word, family: FamilyTag) -> bool {
    match family {
        FamilyTag::AscentSeq => is_ascent_sequence(x),
        FamilyTag::Cayley => is_cayley(x),
        _ => {
            if !is_cayley(x) {
                return false;
            }
            let s = stat_sets(x);
            let set = match family {
                FamilyTag::ModifiedA => s.asctop,
                FamilyTag::RevisedB => s.ascbot,
                FamilyTag::RevisedC => s.destop,
                FamilyTag::RevisedD => s.desbot,
                FamilyTag::AscentSeq | FamilyTag::Cayley => unreachable!(),
            };
            set == nub(x)
        }
    }
}

pub fn is_revised(x: &Word) -> bool {
    is_member(x, FamilyTag::RevisedB)
}

/// All members of `family` of length `n` in lexicographic order.
pub fn enumerate_family(n: usize, family: FamilyTag) -> Result<Vec<Word>> {
    Enumeration::new(family, n).collect()
}

/// A configured exhaustive search over one family, optionally restricted to
/// words avoiding a pattern.
///
/// The search extends a prefix only while the family's defining constraints
/// can still be met: Cayley families are cut as soon as the missing values
/// below the running maximum outnumber the remaining positions, the
/// `Nub`-equality families check each position as soon as its membership in
/// both sets is decided, and ascent sequences respect the running `asctop`
/// bound. With a pattern, any prefix that already contains it is dropped.
#[derive(Clone, Debug)]
pub struct Enumeration<'p> {
    family: FamilyTag,
    n: usize,
    cap: usize,
    avoid: Option<&'p Pattern>,
}

impl<'p> Enumeration<'p> {
    pub fn new(family: FamilyTag, n: usize) -> Self {
        Enumeration {
            family,
            n,
            cap: DEFAULT_CAP,
            avoid: None,
        }
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn avoiding(mut self, pattern: &'p Pattern) -> Self {
        self.avoid = Some(pattern);
        self
    }

    fn check(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::usage("length must be at least 1"));
        }
        if self.n > self.cap {
            return Err(Error::CapExceeded {
                n: self.n,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Calls `visit` on every member, in lexicographic order.
    pub fn for_each<F: FnMut(&[u32])>(&self, visit: F) -> Result<()> {
        self.check()?;
        let n = self.n;
        let mut search = Search {
            n,
            family: self.family,
            avoid: self.avoid,
            word: Vec::with_capacity(n),
            fresh: Vec::with_capacity(n),
            counts: vec![0; n + 2],
            distinct: 0,
            max: 0,
            tops: 0,
            visit,
        };
        search.extend();
        Ok(())
    }

    pub fn count(&self) -> Result<u64> {
        let mut c = 0u64;
        self.for_each(|_| c += 1)?;
        Ok(c)
    }

    pub fn collect(&self) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        self.for_each(|x| out.push(Word::from_vec_unchecked(x.to_vec())))?;
        Ok(out)
    }
}

struct Search<'p, F> {
    n: usize,
    family: FamilyTag,
    avoid: Option<&'p Pattern>,
    word: Vec<u32>,
    // fresh[i]: position i+1 holds the leftmost copy of its value
    fresh: Vec<bool>,
    counts: Vec<u32>,
    distinct: usize,
    max: u32,
    // asctop of the current prefix
    tops: usize,
    visit: F,
}

impl<F: FnMut(&[u32])> Search<'_, F> {
    fn extend(&mut self) {
        let len = self.word.len();
        if len == self.n {
            if self.complete() {
                (self.visit)(&self.word);
            }
            return;
        }
        let upper = match self.family {
            FamilyTag::AscentSeq if len == 0 => 1,
            FamilyTag::AscentSeq => (self.tops + 1) as u32,
            _ => self.n as u32,
        };
        for v in 1..=upper {
            if !self.admissible(v) {
                continue;
            }
            self.push(v);
            let pruned = match self.avoid {
                Some(p) => pattern::occurs_ending_at_last(&self.word, p),
                None => false,
            };
            if !pruned {
                self.extend();
            }
            self.pop();
        }
    }

    fn admissible(&self, v: u32) -> bool {
        let len = self.word.len();
        let fresh = self.counts[v as usize] == 0;
        if self.family != FamilyTag::AscentSeq {
            let max = self.max.max(v) as usize;
            let distinct = self.distinct + fresh as usize;
            let remaining = self.n - len - 1;
            if max - distinct > remaining {
                return false;
            }
        }
        if len == 0 {
            return true;
        }
        let prev = self.word[len - 1];
        match self.family {
            FamilyTag::AscentSeq | FamilyTag::Cayley => true,
            FamilyTag::ModifiedA => (prev < v) == fresh,
            FamilyTag::RevisedD => (prev > v) == fresh,
            // position len (1-based) is decided now; position 1 always passes
            FamilyTag::RevisedB => len < 2 || self.fresh[len - 1] == (prev < v),
            FamilyTag::RevisedC => len < 2 || self.fresh[len - 1] == (prev > v),
        }
    }

    fn complete(&self) -> bool {
        let n = self.n;
        match self.family {
            // the last position is neither an ascent bottom nor a descent top
            FamilyTag::RevisedB | FamilyTag::RevisedC => n < 2 || !self.fresh[n - 1],
            _ => true,
        }
    }

    fn push(&mut self, v: u32) {
        let fresh = self.counts[v as usize] == 0;
        if let Some(&prev) = self.word.last() {
            if prev < v {
                self.tops += 1;
            }
        } else {
            self.tops = 1;
        }
        self.counts[v as usize] += 1;
        self.distinct += fresh as usize;
        self.fresh.push(fresh);
        self.word.push(v);
        self.max = self.max.max(v);
    }

    fn pop(&mut self) {
        let v = self.word.pop().expect("pop on empty prefix");
        let fresh = self.fresh.pop().expect("fresh flags track the prefix");
        self.counts[v as usize] -= 1;
        self.distinct -= fresh as usize;
        if let Some(&prev) = self.word.last() {
            if prev < v {
                self.tops -= 1;
            }
        } else {
            self.tops = 0;
        }
        if v == self.max {
            self.max = self.word.iter().copied().max().unwrap_or(0);
        }
    }
}

/// Revised ascent sequences of length `n`, built by closing `11` under
/// [`add`](crate::bijection::add) and sorted lexicographically.
///
/// This is an independent route to the same set that
/// [`enumerate_family`] produces for [`FamilyTag::RevisedB`].
pub fn enumerate_revised_by_add(n: usize) -> Result<Vec<Word>> {
    enumerate_revised_by_add_capped(n, DEFAULT_CAP)
}

pub fn enumerate_revised_by_add_capped(n: usize, cap: usize) -> Result<Vec<Word>> {
    if n == 0 {
        return Err(Error::usage("length must be at least 1"));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if n == 1 {
        return Ok(vec![Word::from_vec_unchecked(vec![1])]);
    }
    let mut level = vec![Word::from_vec_unchecked(vec![1, 1])];
    for _ in 2..n {
        let mut next = Vec::new();
        for x in &level {
            for l in 1..=x.max_entry() + 1 {
                next.push(crate::bijection::add(x, l)?);
            }
        }
        level = next;
    }
    level.sort();
    Ok(level)
}
