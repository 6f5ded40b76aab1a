//! Truncated formal power series over the rationals.
//!
//! A series of order `N` stores the coefficients of `t^0..=t^N` exactly.
//! Binary operations on series of different orders truncate to the smaller
//! one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::from_ints(&[0, 1], order)
    }

    /// A polynomial with integer coefficients (lowest degree first),
    /// truncated or zero-padded to `order`.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (c, &v) in s.coeffs.iter_mut().zip(coeffs) {
            *c = BigRational::from_integer(BigInt::from(v));
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::usage("a series needs at least its constant term"));
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `self / other`; the divisor needs a nonzero constant term.
    pub fn div(&self, other: &PowerSeries) -> Result<Self> {
        let b0 = other.coeff(0);
        if b0.is_zero() {
            return Err(Error::domain(
                "division by a series with zero constant term",
            ));
        }
        let order = self.order().min(other.order());
        let inv_b0 = b0.recip();
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let bj = &other.coeffs[j];
                if !bj.is_zero() {
                    acc -= bj * &q[k - j];
                }
            }
            q.push(acc * &inv_b0);
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// Square root with constant term 1, by Newton iteration
    /// `y <- (y + a / y) / 2` carried to the full order.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::domain("sqrt needs constant term 1"));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut y = PowerSeries::one(self.order());
        // precision doubles each step; the extra rounds only confirm the fixed point
        let max_steps = usize::BITS as usize + 2;
        for _ in 0..max_steps {
            let next = (&y + &self.div(&y)?).scale(&half);
            if next == y {
                return Ok(y);
            }
            y = next;
        }
        Err(Error::consistency(
            "Newton iteration for sqrt did not settle",
        ))
    }

    /// Divides by `t^k`. The low `k` coefficients must vanish, and the
    /// result has order reduced by `k`.
    pub fn divide_by_t_power(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::domain("shift exceeds the series order"));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::domain(format!("series is not divisible by t^{k}")));
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Coefficients as integers, failing on any fractional coefficient.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::consistency(format!(
                        "coefficient of t^{k} is {c}, not an integer"
                    )))
                }
            })
            .collect()
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sqrt_binomial() {
        let a = PowerSeries::from_ints(&[1, 2], 2);
        let r = a.sqrt().unwrap();
        assert_eq!(r.coeffs(), &[q(1, 1), q(1, 1), q(-1, 2)]);
        assert_eq!(&r * &r, a);
    }

    #[test]
    fn multiplicative_identity() {
        let s = PowerSeries::from_ints(&[3, -1, 4, 1, -5], 6);
        assert_eq!(&s * &PowerSeries::one(6), s);
    }

    #[test]
    fn sqrt_of_quartic_squares_back() {
        let d = PowerSeries::from_ints(&[1, -4, 2, 0, 1], 30);
        let r = d.sqrt().unwrap();
        assert_eq!(&r * &r, d);
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = PowerSeries::from_ints(&[1, 1, 1, 1], 3);
        let b = PowerSeries::from_ints(&[1, 1], 1);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!(a.div(&b).unwrap().order(), 1);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = PowerSeries::from_ints(&[2, -3, 0, 7], 8);
        let b = PowerSeries::from_ints(&[-1, 5, 1], 8);
        assert_eq!(a.div(&b).unwrap().mul(&b), a);
    }

    #[test]
    fn domain_errors() {
        let t = PowerSeries::variable(4);
        assert!(matches!(PowerSeries::one(4).div(&t), Err(Error::Domain(_))));
        assert!(matches!(
            PowerSeries::from_ints(&[4], 3).sqrt(),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            PowerSeries::one(3).divide_by_t_power(1),
            Err(Error::Domain(_))
        ));
        assert_eq!(t.divide_by_t_power(1).unwrap(), PowerSeries::one(3));
    }

    #[test]
    fn integrality() {
        assert!(PowerSeries::from_ints(&[1, 2], 2).to_integers().is_ok());
        let r = PowerSeries::from_ints(&[1, 2], 2).sqrt().unwrap();
        assert!(matches!(r.to_integers(), Err(Error::Consistency(_))));
    }
}
