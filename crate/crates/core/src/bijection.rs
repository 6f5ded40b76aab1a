//! The map from ascent sequences onto revised ascent sequences, the one-step
//! `add`/`rom` pair underlying it, and a few smaller word transformations.

use crate::error::{Error, Result};
use crate::pattern::{self, Pattern};
use crate::seqcore::{self, is_ascent_sequence, is_revised};
use crate::word::Word;

/// Intermediate data of [`eta`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaTrace {
    pub input: Word,
    /// The relabeled word before its maximum is prepended.
    pub tilde: Word,
    pub output: Word,
    /// Ascent-bottom positions of `input`, ascending.
    pub ascbot_positions: Vec<usize>,
}

/// The relabeling pass behind [`eta`], applied to an arbitrary word.
///
/// For each ascent-bottom position `i` of the original word, left to right,
/// every entry strictly left of `i` that is weakly larger than the current
/// entry at `i` is incremented. Positions are fixed up front; comparisons use
/// the values as they stand when `i` is processed.
pub fn relabel_by_ascent_bottoms(x: &Word) -> (Word, Vec<usize>) {
    let positions: Vec<usize> = seqcore::ascbot_set(x).into_iter().collect();
    let mut v = x.entries().to_vec();
    for &i in &positions {
        let pivot = v[i - 1];
        for e in &mut v[..i - 1] {
            if *e >= pivot {
                *e += 1;
            }
        }
    }
    (Word::from_vec_unchecked(v), positions)
}

/// Maps an ascent sequence of length `n` to a revised ascent sequence of
/// length `n + 1`.
pub fn eta(x: &Word) -> Result<EtaTrace> {
    if !is_ascent_sequence(x) {
        return Err(Error::domain(format!("{x} is not an ascent sequence")));
    }
    let (tilde, ascbot_positions) = relabel_by_ascent_bottoms(x);
    let mut out = Vec::with_capacity(x.len() + 1);
    out.push(tilde.max_entry());
    out.extend_from_slice(tilde.entries());
    Ok(EtaTrace {
        input: x.clone(),
        tilde,
        output: Word::from_vec_unchecked(out),
        ascbot_positions,
    })
}

/// Inverse of [`eta`]: peels one entry at a time with [`rom`].
///
/// Each step uses `eta(x) = add(eta(x'), last(x))`, so the last entry of
/// `y` is the last entry of the preimage and `rom(y)` is the image of the
/// shorter prefix.
pub fn eta_inverse(y: &Word) -> Result<Word> {
    if y.len() < 2 || !is_revised(y) {
        return Err(Error::domain(format!(
            "{y} is not a revised ascent sequence of length at least 2"
        )));
    }
    let mut tail = Vec::with_capacity(y.len() - 1);
    let mut cur = y.clone();
    while cur.len() > 2 {
        tail.push(cur.last());
        cur = rom(&cur)?;
    }
    // the only revised ascent sequence of length 2 is 11 = eta(1)
    if cur.entries() != [1, 1] {
        return Err(Error::consistency(format!(
            "peeling {y} ended at {cur}, expected 11"
        )));
    }
    tail.push(1);
    tail.reverse();
    let x = Word::from_vec_unchecked(tail);
    debug_assert!(is_ascent_sequence(&x));
    Ok(x)
}

/// Appends `l` to `x`, incrementing earlier entries when `l` exceeds the
/// current last entry.
///
/// Requires `1 <= l <= max(x) + 1`.
pub fn add(x: &Word, l: u32) -> Result<Word> {
    if l == 0 || l > x.max_entry() + 1 {
        return Err(Error::domain(format!(
            "add({x}, {l}): the new entry must lie in 1..={}",
            x.max_entry() + 1
        )));
    }
    let last = x.last();
    let mut v = x.entries().to_vec();
    if last < l {
        let n = v.len();
        for e in &mut v[..n - 1] {
            if *e >= last {
                *e += 1;
            }
        }
    }
    v.push(l);
    Ok(Word::from_vec_unchecked(v))
}

/// Removes the last entry, undoing the increments of [`add`] when the word
/// ends in a strict ascent.
pub fn rom(y: &Word) -> Result<Word> {
    let n1 = y.len();
    if n1 < 2 {
        return Err(Error::domain(format!(
            "rom({y}): length must be at least 2"
        )));
    }
    let mut v = y.entries()[..n1 - 1].to_vec();
    let pivot = v[n1 - 2];
    if pivot < y.last() {
        for e in &mut v[..n1 - 2] {
            if *e > pivot {
                *e -= 1;
            }
        }
    }
    Ok(Word::from_vec_unchecked(v))
}

/// `x_i -> max(x) + 1 - x_i`.
pub fn complement(x: &Word) -> Word {
    let top = x.max_entry() + 1;
    Word::from_vec_unchecked(x.entries().iter().map(|&v| top - v).collect())
}

/// Relabels values by rank: the smallest value becomes 1, the next 2, and so on.
pub fn standardize(x: &Word) -> Word {
    let image: Vec<u32> = x.image().into_iter().collect();
    Word::from_vec_unchecked(
        x.entries()
            .iter()
            .map(|v| image.binary_search(v).expect("value is in the image") as u32 + 1)
            .collect(),
    )
}

/// Sends a 211-avoiding revised ascent sequence of length `n + 1` to a
/// 122-avoiding modified ascent sequence of length `n`: increment every
/// entry, turn the copies of the new maximum into 1, drop the last entry.
pub fn phi(x: &Word) -> Result<Word> {
    let p211 = Pattern::parse("211").expect("static pattern");
    if x.len() < 2 || !is_revised(x) || !pattern::avoids(x, &p211) {
        return Err(Error::domain(format!(
            "{x} is not a 211-avoiding revised ascent sequence of length at least 2"
        )));
    }
    let top = x.max_entry() + 1;
    let mut v: Vec<u32> = x
        .entries()
        .iter()
        .map(|&e| if e + 1 == top { 1 } else { e + 1 })
        .collect();
    v.pop();
    Ok(Word::from_vec_unchecked(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn eta_examples() {
        let t = eta(&w("12132124")).unwrap();
        assert_eq!(t.ascbot_positions, vec![1, 3, 6, 7]);
        assert_eq!(t.tilde, w("45354124"));
        assert_eq!(t.output, w("545354124"));

        let t = eta(&w("1")).unwrap();
        assert_eq!((t.tilde, t.output), (w("1"), w("11")));

        let t = eta(&w("12")).unwrap();
        assert_eq!((t.tilde, t.output.clone()), (w("12"), w("212")));
        assert!(is_revised(&t.output));
    }

    #[test]
    fn eta_rejects_non_ascent_sequences() {
        assert!(matches!(eta(&w("112142")), Err(Error::Domain(_))));
        assert!(matches!(eta(&w("21")), Err(Error::Domain(_))));
    }

    #[test]
    fn eta_inverse_examples() {
        assert_eq!(eta_inverse(&w("545354124")).unwrap(), w("12132124"));
        assert_eq!(eta_inverse(&w("11")).unwrap(), w("1"));
        assert_eq!(eta_inverse(&w("212")).unwrap(), w("12"));
        assert!(matches!(eta_inverse(&w("12")), Err(Error::Domain(_))));
        assert!(matches!(eta_inverse(&w("1")), Err(Error::Domain(_))));
    }

    #[test]
    fn add_examples() {
        assert_eq!(add(&w("11"), 1).unwrap(), w("111"));
        assert_eq!(add(&w("11"), 2).unwrap(), w("212"));
        assert_eq!(add(&w("212"), 3).unwrap(), w("3123"));
        assert!(is_revised(&w("3123")));
        assert!(matches!(add(&w("11"), 3), Err(Error::Domain(_))));
        assert!(matches!(add(&w("11"), 0), Err(Error::Domain(_))));
    }

    #[test]
    fn rom_examples() {
        assert_eq!(rom(&w("212")).unwrap(), w("11"));
        assert_eq!(rom(&w("111")).unwrap(), w("11"));
        assert_eq!(rom(&w("3123")).unwrap(), w("212"));
        assert!(matches!(rom(&w("1")), Err(Error::Domain(_))));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&w("135144312")), w("531522354"));
        assert_eq!(complement(&w("1")), w("1"));
        assert_eq!(complement(&w("212")), w("121"));
        let s = seqcore::stat_sets(&w("212"));
        let c = seqcore::stat_sets(&w("121"));
        assert_eq!(s.ascbot, c.destop);
        assert_eq!(s.asctop, c.desbot);
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&w("7424326")), w("5313214"));
        assert_eq!(standardize(&w("123")), w("123"));
        assert_eq!(standardize(&w("553")), w("221"));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&w("6463612656")).unwrap(), w("151412316"));
        assert_eq!(phi(&w("11")).unwrap(), w("1"));
        assert_eq!(phi(&w("212")).unwrap(), w("12"));
        assert!(matches!(phi(&w("1")), Err(Error::Domain(_))));
        assert!(matches!(phi(&w("12")), Err(Error::Domain(_))));
        // revised, but contains 211 (2,1,1)
        assert!(matches!(phi(&w("2121")), Err(Error::Domain(_))));
    }
}
