use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::series::PowerSeries;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfName {
    /// `Σ_{n≥1} Π_{i=1}^{n} (1 - (1 - t)^i)`
    Fishburn,
    /// `(t² - 1 + √(t⁴ + 2t² - 4t + 1)) / (2(t - 1))`
    B123,
    /// `(t² - 2t + 1 - √(t⁴ + 2t² - 4t + 1)) / (2t)`
    B132,
    /// `(1 - √(1 - 4t)) / 2`
    B213,
}

impl GfName {
    pub const ALL: [GfName; 4] = [GfName::Fishburn, GfName::B123, GfName::B132, GfName::B213];

    pub fn name(self) -> &'static str {
        match self {
            GfName::Fishburn => "fishburn",
            GfName::B123 => "b123",
            GfName::B132 => "b132",
            GfName::B213 => "b213",
        }
    }
}

impl fmt::Display for GfName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GfName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GfName::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown generating function {s:?}")))
    }
}

/// `t⁴ + 2t² - 4t + 1`, the discriminant shared by the 123 and 132 forms.
pub fn quartic(order: usize) -> PowerSeries {
    PowerSeries::from_ints(&[1, -4, 2, 0, 1], order)
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// The named generating function as a series through `t^order`.
pub fn gf_series(name: GfName, order: usize) -> Result<PowerSeries> {
    match name {
        GfName::Fishburn => {
            let one = PowerSeries::one(order);
            let one_minus_t = PowerSeries::from_ints(&[1, -1], order);
            let mut sum = PowerSeries::zero(order);
            let mut product = one.clone();
            let mut power = one.clone();
            // the n-th product starts at t^n, so terms past `order` vanish
            for _ in 1..=order {
                power = &power * &one_minus_t;
                product = &product * &(&one - &power);
                sum = &sum + &product;
            }
            Ok(sum)
        }
        GfName::B123 => {
            let root = quartic(order).sqrt()?;
            let num = &PowerSeries::from_ints(&[-1, 0, 1], order) + &root;
            let den = PowerSeries::from_ints(&[-2, 2], order);
            num.div(&den)
        }
        GfName::B132 => {
            let root = quartic(order + 1).sqrt()?;
            let num = &PowerSeries::from_ints(&[1, -2, 1], order + 1) - &root;
            Ok(num.divide_by_t_power(1)?.scale(&half()))
        }
        GfName::B213 => {
            let root = PowerSeries::from_ints(&[1, -4], order).sqrt()?;
            Ok((&PowerSeries::one(order) - &root).scale(&half()))
        }
    }
}

/// Coefficients of `t^1..=t^order`, checked to be nonnegative integers.
pub fn expand_gf(name: GfName, order: usize) -> Result<Vec<BigUint>> {
    if order == 0 {
        return Err(Error::usage("order must be at least 1"));
    }
    gf_series(name, order)?
        .to_integers()?
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| {
            c.to_biguint().ok_or_else(|| {
                Error::consistency(format!("{name}: coefficient of t^{k} is negative ({c})"))
            })
        })
        .collect()
}
