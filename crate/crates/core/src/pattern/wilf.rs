use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use super::{all_patterns, Pattern};
use crate::error::{Error, Result};
use crate::seqcore::{Enumeration, FamilyTag, DEFAULT_CAP};

/// Patterns sharing one avoider count sequence over the scanned range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WilfClass {
    pub patterns: Vec<Pattern>,
    pub counts: Vec<u64>,
}

/// Grouping of all patterns of one length by their avoider counts among
/// revised ascent sequences. The classes are conjectural: agreement is only
/// certified on `n_range`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WilfReport {
    pub pattern_length: usize,
    pub n_range: RangeInclusive<usize>,
    /// Sorted by count sequence; patterns within a class are sorted.
    pub classes: Vec<WilfClass>,
}

impl WilfReport {
    pub fn class_of(&self, p: &Pattern) -> Option<&WilfClass> {
        self.classes.iter().find(|c| c.patterns.contains(p))
    }
}

pub fn wilf_classes(k: usize, n_max: usize) -> Result<WilfReport> {
    wilf_classes_capped(k, n_max, DEFAULT_CAP)
}

pub fn wilf_classes_capped(k: usize, n_max: usize, cap: usize) -> Result<WilfReport> {
    if !(1..=4).contains(&k) {
        return Err(Error::usage("pattern length must lie in 1..=4"));
    }
    if n_max == 0 {
        return Err(Error::usage("n_max must be at least 1"));
    }
    let mut groups: BTreeMap<Vec<u64>, Vec<Pattern>> = BTreeMap::new();
    for p in all_patterns(k)? {
        let counts = (1..=n_max)
            .map(|n| {
                Enumeration::new(FamilyTag::RevisedB, n)
                    .cap(cap)
                    .avoiding(&p)
                    .count()
            })
            .collect::<Result<Vec<_>>>()?;
        groups.entry(counts).or_default().push(p);
    }
    Ok(WilfReport {
        pattern_length: k,
        n_range: 1..=n_max,
        classes: groups
            .into_iter()
            .map(|(counts, patterns)| WilfClass { patterns, counts })
            .collect(),
    })
}
