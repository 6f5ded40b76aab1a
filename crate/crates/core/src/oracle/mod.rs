//! Exact number sequences for every enumerated avoidance class, and the
//! series machinery used to expand the algebraic generating functions.

mod gf;
mod series;

pub use gf::{expand_gf, gf_series, quartic, GfName};
pub use series::PowerSeries;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::pattern::Pattern;

/// Known prefixes of the counting sequences, for offline cross-checks.
pub mod data {
    /// Fishburn numbers `F_1..F_7`.
    pub const FISHBURN: [u64; 7] = [1, 2, 5, 15, 53, 217, 1014];
    /// 123-avoiders for `n = 2..=10` (A105633).
    pub const AVOID_123: [u64; 9] = [1, 2, 4, 9, 22, 57, 154, 429, 1223];
    /// 132-avoiders for `n = 1..=10` (A082582).
    pub const AVOID_132: [u64; 10] = [1, 1, 2, 5, 13, 35, 97, 275, 794, 2327];
    /// 111-avoiders for `n = 2..=8`; no formula is known.
    pub const AVOID_111: [u64; 7] = [1, 1, 2, 4, 10, 29, 97];

    /// Patterns grouped by identical avoider sets, one row per closed form.
    pub const TABLE_ROWS: [&[&str]; 11] = [
        &["11"],
        &["12", "21", "212"],
        &["221"],
        &["312", "122"],
        &["231", "321", "3231"],
        &["213"],
        &["121", "211", "2121"],
        &["112"],
        &["123"],
        &["132", "3132"],
        &["111"],
    ];
}

/// Fishburn numbers `F_1..=F_order` from the product-sum generating
/// function, using integer polynomial arithmetic.
pub fn fishburn(order: usize) -> Vec<BigUint> {
    let trunc = order + 1;
    let mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); trunc];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(trunc - i) {
                out[i + j] += x * y;
            }
        }
        out
    };
    let mut one_minus_t = vec![BigInt::zero(); trunc];
    one_minus_t[0] = BigInt::one();
    if trunc > 1 {
        one_minus_t[1] = -BigInt::one();
    }
    let mut power = vec![BigInt::zero(); trunc];
    power[0] = BigInt::one();
    let mut product = power.clone();
    let mut sum = vec![BigInt::zero(); trunc];
    for _ in 1..=order {
        power = mul(&power, &one_minus_t);
        let mut factor: Vec<BigInt> = power.iter().map(|c| -c).collect();
        factor[0] += BigInt::one();
        product = mul(&product, &factor);
        for (s, p) in sum.iter_mut().zip(&product) {
            *s += p;
        }
    }
    sum.into_iter()
        .skip(1)
        .map(|c| c.to_biguint().expect("Fishburn numbers are positive"))
        .collect()
}

/// `F_k` with the convention `F_0 = 1`.
pub fn fishburn_number(k: usize) -> BigUint {
    if k == 0 {
        BigUint::one()
    } else {
        fishburn(k).pop().expect("nonempty")
    }
}

/// Catalan numbers `C_0..=C_n` by `C_{k+1} = Σ C_i C_{k-i}`.
pub fn catalan_numbers(n: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::one()];
    for k in 0..n {
        let next = (0..=k).map(|i| &c[i] * &c[k - i]).sum();
        c.push(next);
    }
    c
}

pub fn catalan(n: usize) -> BigUint {
    catalan_numbers(n).pop().expect("nonempty")
}

/// Bell numbers `B_0..=B_n` from the Bell triangle.
pub fn bell_numbers(n: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![row.last().expect("nonempty row").clone()];
        for v in &row {
            let x = next.last().expect("nonempty row") + v;
            next.push(x);
        }
        row = next;
        out.push(row[0].clone());
    }
    out
}

pub fn bell(n: usize) -> BigUint {
    bell_numbers(n).pop().expect("nonempty")
}

/// Stirling numbers of the second kind, `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = &row[j] * BigUint::from(j) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

/// `Σ_{k=1}^{n-1} k^{n-k-1}` (A026898 shifted), with `k^0 = 1`.
pub fn power_sum(n: usize) -> BigUint {
    (1..n)
        .map(|k| num_traits::pow(BigUint::from(k), n - k - 1))
        .sum()
}

/// `f_1..=f_n` from `f_1 = f_2 = 1` and
/// `f_n = 1 + Σ_{k=1}^{n-2} f_k Σ_{j=2}^{n-k} f_j`.
pub fn recurrence_213(n: usize) -> Vec<BigUint> {
    // f[0] is unused padding so indices match
    let mut f = vec![BigUint::zero()];
    for m in 1..=n {
        let v = if m <= 2 {
            BigUint::one()
        } else {
            let mut acc = BigUint::one();
            for k in 1..=m - 2 {
                let inner: BigUint = (2..=m - k).map(|j| &f[j]).sum();
                acc += &f[k] * inner;
            }
            acc
        };
        f.push(v);
    }
    f.split_off(1)
}

/// The coupled counts behind the 132-avoiders, indexed from 0.
///
/// `g_n` counts 132-avoiding revised ascent sequences of length `n`, `r_n`
/// those ending with their maximum, and `s_n` those ending in a strict
/// ascent to the maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seq132State {
    pub g: Vec<BigUint>,
    pub r: Vec<BigUint>,
    pub s: Vec<BigUint>,
}

/// Fills `g`, `r`, `s` through index `n` from
/// `s_n = Σ_{j=0}^{n-2} g_j`, `r_n = r_{n-1} + s_n` and
/// `g_n = 1 + Σ_{i=3}^{n} (r_i - 1) g_{n+1-i}`,
/// with `g_0 = r_0 = s_0 = s_1 = 0` and `g_1 = r_1 = 1`.
pub fn system_132(n: usize) -> Seq132State {
    let mut st = Seq132State {
        g: vec![BigUint::zero()],
        r: vec![BigUint::zero()],
        s: vec![BigUint::zero()],
    };
    if n >= 1 {
        st.g.push(BigUint::one());
        st.r.push(BigUint::one());
        st.s.push(BigUint::zero());
    }
    for m in 2..=n {
        let s: BigUint = st.g[..=m - 2].iter().sum();
        let r = &st.r[m - 1] + &s;
        st.s.push(s);
        st.r.push(r);
        let mut g = BigUint::one();
        for i in 3..=m {
            g += (&st.r[i] - 1u32) * &st.g[m + 1 - i];
        }
        st.g.push(g);
    }
    st
}

/// Avoider counts `|B̂_n(σ)|` for `n = 1..=n_max`, for every pattern with a
/// known formula; `None` for 111 and for patterns outside the table.
pub fn closed_form_sequence(p: &Pattern, n_max: usize) -> Option<Vec<BigUint>> {
    let key = p.to_string();
    if key == "1" {
        return Some(vec![BigUint::zero(); n_max]);
    }
    let gf_coeffs = |name| expand_gf(name, n_max.max(1)).expect("closed-form expansion");
    let formula: Box<dyn Fn(usize) -> BigUint> = match key.as_str() {
        "11" => Box::new(|_| BigUint::zero()),
        "12" | "21" | "212" => Box::new(|_| BigUint::one()),
        "221" => Box::new(|n| BigUint::from(n - 1)),
        "312" | "122" => Box::new(|n| BigUint::one() << (n - 2)),
        "231" | "321" | "3231" => Box::new(|n| (BigUint::one() << (n - 1)) - BigUint::from(n - 1)),
        "213" => Box::new(|n| catalan(n - 1)),
        "121" | "211" | "2121" => Box::new(power_sum),
        "112" => Box::new(|n| bell(n - 1)),
        "123" => {
            let c = gf_coeffs(GfName::B123);
            Box::new(move |n| c[n - 1].clone())
        }
        "132" | "3132" => {
            let c = gf_coeffs(GfName::B132);
            Box::new(move |n| c[n - 1].clone())
        }
        _ => return None,
    };
    Some(
        (1..=n_max)
            .map(|n| if n == 1 { BigUint::one() } else { formula(n) })
            .collect(),
    )
}

/// `|B̂_n(σ)|` from its closed form, or `None` when none is known.
pub fn closed_form(p: &Pattern, n: usize) -> Option<BigUint> {
    if n == 0 {
        return None;
    }
    closed_form_sequence(p, n).and_then(|mut v| v.pop())
}
