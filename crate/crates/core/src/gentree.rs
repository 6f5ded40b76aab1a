//! Generating trees for revised ascent sequences.
//!
//! The tree for the whole family is rooted at `11` and the children of `x`
//! are `add(x, l)` for `1 <= l <= max(x) + 1`. Labelling a vertex by
//! `(max, last)` yields the succession rule
//!
//! ```text
//! (m, l) -> {(m, i) | 1 <= i <= l} ∪ {(m + 1, i) | l < i <= m + 1}
//! ```
//!
//! Restricting to 123-avoiders and labelling by `(g, last)`, where `g` is
//! the smallest entry that tops a `12` occurrence (or 1 when there is none),
//! yields
//!
//! ```text
//! (g, l) -> {(g, 1)} ∪ {(i, i) | 2 <= i <= g + [l = 1]}
//! ```
//!
//! Level 1 is the root, i.e. words of length 2.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bijection::add;
use crate::error::{Error, Result};
use crate::pattern::{self, Pattern};
use crate::seqcore::{is_revised, DEFAULT_CAP};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub first: u32,
    pub second: u32,
}

impl Label {
    pub const ROOT: Label = Label {
        first: 1,
        second: 1,
    };

    pub fn new(first: u32, second: u32) -> Self {
        Label { first, second }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.first, self.second)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Generic,
    Tree123,
}

pub fn generic_children(lab: Label) -> Vec<Label> {
    let (m, l) = (lab.first, lab.second);
    (1..=l)
        .map(|i| Label::new(m, i))
        .chain((l + 1..=m + 1).map(|i| Label::new(m + 1, i)))
        .collect()
}

pub fn children_123(lab: Label) -> Result<Vec<Label>> {
    let (g, l) = (lab.first, lab.second);
    if g == 0 || l == 0 || (l >= 2 && g != l) {
        return Err(Error::domain(format!(
            "({lab}) is not a label of the 123 tree"
        )));
    }
    let top = g + u32::from(l == 1);
    Ok(std::iter::once(Label::new(g, 1))
        .chain((2..=top).map(|i| Label::new(i, i)))
        .collect())
}

fn children(rule: Rule, lab: Label) -> Result<Vec<Label>> {
    match rule {
        Rule::Generic => {
            if lab.first == 0 || lab.second == 0 || lab.second > lab.first + 1 {
                return Err(Error::consistency(format!(
                    "generic label ({lab}) breaks 1 <= last <= max + 1"
                )));
            }
            Ok(generic_children(lab))
        }
        Rule::Tree123 => children_123(lab).map_err(|_| {
            Error::consistency(format!("123-tree label ({lab}) breaks g = l for l >= 2"))
        }),
    }
}

/// Label multiplicities at one level of a generating tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelCounts {
    pub level: usize,
    pub counts: BTreeMap<Label, BigUint>,
}

impl LabelCounts {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }
}

impl fmt::Display for LabelCounts {
    /// `level first,second:count ...` with labels in sorted order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.level)?;
        for (lab, c) in &self.counts {
            write!(f, " {lab}:{c}")?;
        }
        Ok(())
    }
}

/// Counts vertices level by level by pushing label multiplicities through
/// the succession rule. Any label violating the rule's invariant aborts
/// with a consistency error.
pub fn count_by_labels(rule: Rule, level_max: usize) -> Result<Vec<LabelCounts>> {
    if level_max == 0 {
        return Err(Error::usage("level_max must be at least 1"));
    }
    let mut levels = Vec::with_capacity(level_max);
    let mut cur = LabelCounts {
        level: 1,
        counts: BTreeMap::from([(Label::ROOT, BigUint::from(1u32))]),
    };
    for level in 2..=level_max {
        let mut next: BTreeMap<Label, BigUint> = BTreeMap::new();
        for (&lab, mult) in &cur.counts {
            for child in children(rule, lab)? {
                *next.entry(child).or_insert_with(BigUint::zero) += mult;
            }
        }
        levels.push(cur);
        cur = LabelCounts {
            level,
            counts: next,
        };
    }
    levels.push(cur);
    Ok(levels)
}

/// Label of a revised ascent sequence in the generic tree: `(max, last)`.
pub fn generic_label(x: &Word) -> Label {
    Label::new(x.max_entry(), x.last())
}

/// Label of a 123-avoiding revised ascent sequence: `(g, last)`.
pub fn label_123(x: &Word) -> Result<Label> {
    Ok(Label::new(g_statistic(x)?, x.last()))
}

fn p123() -> Pattern {
    Pattern::parse("123").expect("static pattern")
}

/// The smallest entry that is the larger element of some `12` occurrence,
/// or 1 when the word has no ascent pair at all.
pub fn g_statistic(x: &Word) -> Result<u32> {
    if !is_revised(x) || !pattern::avoids(x, &p123()) {
        return Err(Error::domain(format!(
            "{x} is not a 123-avoiding revised ascent sequence"
        )));
    }
    let v = x.entries();
    let mut prefix_min = v[0];
    let mut g: Option<u32> = None;
    for &e in &v[1..] {
        if prefix_min < e {
            g = Some(g.map_or(e, |cur| cur.min(e)));
        }
        prefix_min = prefix_min.min(e);
    }
    Ok(g.unwrap_or(1))
}

/// All vertices at word length `n`, grown from `11` by `add`. Under
/// [`Rule::Tree123`], children containing 123 are discarded.
pub fn expand_tree(rule: Rule, n: usize) -> Result<Vec<Word>> {
    expand_tree_capped(rule, n, DEFAULT_CAP)
}

pub fn expand_tree_capped(rule: Rule, n: usize, cap: usize) -> Result<Vec<Word>> {
    if n < 2 {
        return Err(Error::usage("tree words have length at least 2"));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let p = p123();
    let mut level = vec![Word::from_vec_unchecked(vec![1, 1])];
    for _ in 2..n {
        let mut next = Vec::new();
        for x in &level {
            for l in 1..=x.max_entry() + 1 {
                let y = add(x, l)?;
                if rule == Rule::Generic || pattern::avoids(&y, &p) {
                    next.push(y);
                }
            }
        }
        level = next;
    }
    Ok(level)
}
