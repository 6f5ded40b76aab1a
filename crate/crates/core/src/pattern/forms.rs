//! Shape validators for the avoidance classes with an explicit description.
//!
//! Each validator checks only the shape of a word. Restricted to revised
//! ascent sequences, a word has the shape exactly when it avoids the
//! associated pattern.

use std::fmt;

use super::Pattern;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// `m 1 2 ... (m-1) m^{n-m}`
    F221,
    /// `m^{a_m} (m-1) m^{a_{m-1}} (m-1)^{b_{m-1}} ... 1 m^{a_1} 1^{b_1}`, `a_i >= 1`
    F312,
    /// `m^{a_0+1} 1 m^{a_1} 2 ... (m-2) m^{a_{m-2}} (m-1) m^{a_{m-1}+1} (m-1)^{a_m}`
    F321,
    /// Leading run of `m`, then ascending runs `[a_{j+1}, a_j]` each followed by
    /// copies of `a_{j+1}`, with `m = a_1 > a_2 > ... = 1`.
    F122,
    /// `m B_1 m B_2 ... m B_k m` with each block strictly increasing below `m`.
    F211,
}

impl Form {
    pub const ALL: [Form; 5] = [Form::F221, Form::F312, Form::F321, Form::F122, Form::F211];

    pub fn pattern(self) -> Pattern {
        let s = match self {
            Form::F221 => "221",
            Form::F312 => "312",
            Form::F321 => "321",
            Form::F122 => "122",
            Form::F211 => "211",
        };
        Pattern::parse(s).expect("static pattern")
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.pattern())
    }
}

pub fn structural_form_check(x: &Word, form: Form) -> bool {
    let v = x.entries();
    let m = v[0];
    if v.iter().any(|&e| e > m) {
        return false;
    }
    if m == 1 {
        // 1^n is the degenerate member of every shape
        return true;
    }
    match form {
        Form::F221 => is_f221(v, m),
        Form::F312 => is_f312(v, m),
        Form::F321 => is_f321(v, m),
        Form::F122 => is_f122(v, m),
        Form::F211 => is_f211(v, m),
    }
}

struct Cursor<'a> {
    v: &'a [u32],
    i: usize,
}

impl Cursor<'_> {
    fn run(&mut self, value: u32) -> usize {
        let start = self.i;
        while self.i < self.v.len() && self.v[self.i] == value {
            self.i += 1;
        }
        self.i - start
    }

    fn expect(&mut self, value: u32) -> bool {
        if self.v.get(self.i) == Some(&value) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn peek(&self) -> Option<u32> {
        self.v.get(self.i).copied()
    }

    fn done(&self) -> bool {
        self.i == self.v.len()
    }
}

fn is_f221(v: &[u32], m: u32) -> bool {
    let mut c = Cursor { v, i: 1 };
    (1..m).all(|k| c.expect(k)) && {
        c.run(m);
        c.done()
    }
}

fn is_f312(v: &[u32], m: u32) -> bool {
    let mut c = Cursor { v, i: 0 };
    if c.run(m) == 0 {
        return false;
    }
    for k in (1..m).rev() {
        if !c.expect(k) || c.run(m) == 0 {
            return false;
        }
        c.run(k);
    }
    c.done()
}

fn is_f321(v: &[u32], m: u32) -> bool {
    let mut c = Cursor { v, i: 0 };
    if c.run(m) == 0 {
        return false;
    }
    for k in 1..m - 1 {
        if !c.expect(k) {
            return false;
        }
        c.run(m);
    }
    if !c.expect(m - 1) || c.run(m) == 0 {
        return false;
    }
    c.run(m - 1);
    c.done()
}

fn is_f122(v: &[u32], m: u32) -> bool {
    let mut c = Cursor { v, i: 0 };
    c.run(m);
    let mut top = m;
    while let Some(low) = c.peek() {
        if low >= top {
            return false;
        }
        if !(low..=top).all(|k| c.expect(k)) {
            return false;
        }
        c.run(low);
        top = low;
    }
    top == 1
}

fn is_f211(v: &[u32], m: u32) -> bool {
    if v.len() < 2 || v[v.len() - 1] != m {
        return false;
    }
    v.split(|&e| e == m)
        .all(|block| block.windows(2).all(|p| p[0] < p[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn documented_examples() {
        assert!(structural_form_check(&w("312333"), Form::F221));
        assert!(structural_form_check(&w("212"), Form::F312));
        for f in Form::ALL {
            assert!(structural_form_check(&w("1"), f));
            assert!(structural_form_check(&w("1111"), f));
        }
    }

    #[test]
    fn f221_rejects() {
        assert!(!structural_form_check(&w("3123231"), Form::F221));
        assert!(!structural_form_check(&w("321333"), Form::F221));
    }

    #[test]
    fn f312_shapes() {
        // m=3: 3^1 2 3^1 2^0 1 3^2 1^1
        assert!(structural_form_check(&w("3231331"), Form::F312));
        assert!(!structural_form_check(&w("3132"), Form::F312));
        assert!(!structural_form_check(&w("32"), Form::F312));
    }

    #[test]
    fn f321_shapes() {
        // m=3: 3 1 2 3 3 2
        assert!(structural_form_check(&w("312332"), Form::F321));
        assert!(structural_form_check(&w("2212"), Form::F321));
        assert!(!structural_form_check(&w("3213"), Form::F321));
    }

    #[test]
    fn f122_shapes() {
        // 4 4 [2 3 4] 2 [1 2] 1
        assert!(structural_form_check(&w("442342121"), Form::F122));
        assert!(structural_form_check(&w("212"), Form::F122));
        assert!(!structural_form_check(&w("2122"), Form::F122));
        assert!(!structural_form_check(&w("3233"), Form::F122));
    }

    #[test]
    fn f211_shapes() {
        assert!(structural_form_check(&w("6463612656"), Form::F211));
        assert!(!structural_form_check(&w("2121"), Form::F211));
        assert!(!structural_form_check(&w("3213"), Form::F211));
    }
}
