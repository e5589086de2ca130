//! Exact rationals, Bernoulli numbers and truncated formal power series.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num/den` in lowest terms. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses a literal of the form `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty rational literal".into());
    }
    let parse_int = |part: &str| -> std::result::Result<BigInt, String> {
        BigInt::from_str(part.trim()).map_err(|_| format!("unparseable rational literal '{s}'"))
    };
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(t)?)),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(format!("zero denominator in rational literal '{s}'"));
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `B_0, ..., B_n` from `Σ_{k≤n} C(n+1,k) B_k = 0`, so `B_1 = -1/2`.
pub fn bernoulli_numbers(n: u32) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    out.push(Rational::one());
    for m in 1..=n {
        if m > 1 && m.is_odd() {
            out.push(Rational::zero());
            continue;
        }
        let mut acc = Rational::zero();
        for (k, b) in out.iter().enumerate() {
            acc += Rational::from_integer(binomial(m + 1, k as u32)) * b;
        }
        out.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    out
}

pub fn bernoulli(n: u32) -> Rational {
    bernoulli_numbers(n).pop().unwrap_or_else(Rational::one)
}

/// The two genera this crate knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Genus {
    /// Hirzebruch L-genus, characteristic series `√z / tanh √z`.
    L,
    /// Â-genus, characteristic series `(√z/2) / sinh(√z/2)`.
    Ahat,
}

impl Genus {
    pub fn name(self) -> &'static str {
        match self {
            Genus::L => "L",
            Genus::Ahat => "Ahat",
        }
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Genus {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "L" | "l" => Ok(Genus::L),
            "Ahat" | "ahat" | "A-hat" | "Â" => Ok(Genus::Ahat),
            other => Err(format!("unknown genus kind '{other}' (expected L or Ahat)")),
        }
    }
}

/// Truncated formal power series `Σ_{n ≤ order} a_n z^n` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// The series with the given coefficients; its truncation order is `coeffs.len() - 1`.
    /// An empty vector is treated as the zero series of order 0.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Drops every coefficient above `order`. Truncating to a higher order is a no-op.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        PowerSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Cauchy product, truncated to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Exact quotient `self / other`; fails when `other(0) = 0`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = other.coeffs[0].clone();
        if b0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order().min(other.order());
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for (i, qi) in q.iter().enumerate() {
                acc -= qi * &other.coeffs[n - i];
            }
            q.push(acc / &b0);
        }
        Ok(PowerSeries { coeffs: q })
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &other.coeffs[n])
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `log(self)` for a series with constant term 1, via `(log f)' = f'/f`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let order = self.order();
        if order == 0 {
            return Ok(Self::zero(0));
        }
        let derivative = PowerSeries {
            coeffs: (1..=order)
                .map(|n| &self.coeffs[n] * int(n as i64))
                .collect(),
        };
        let quotient = derivative.div(&self.truncate(order - 1))?;
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(
            quotient
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a / int(n as i64 + 1)),
        );
        Ok(PowerSeries { coeffs })
    }
}

impl fmt::Display for PowerSeries {
    /// Renders as `1 + 1/3·z − 1/45·z^2 + O(z^3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            let sign = if c.is_negative() { "−" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("−")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{magnitude}")?,
                1 => write!(f, "{magnitude}·z")?,
                _ => write!(f, "{magnitude}·z^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

pub fn series_mul(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    a.mul(b)
}

pub fn series_div(a: &PowerSeries, b: &PowerSeries) -> Result<PowerSeries> {
    a.div(b)
}

pub fn series_truncate(a: &PowerSeries, order: usize) -> PowerSeries {
    a.truncate(order)
}

/// The characteristic series of `kind` in the variable `z = x²`, up to `z^order`.
///
/// Coefficients come from the Bernoulli closed forms
/// `L: 2^{2n} B_{2n} / (2n)!` and `Â: -(2^{2n} - 2) B_{2n} / ((2n)! 4^n)`.
pub fn char_series(kind: Genus, order: usize) -> PowerSeries {
    let bern = bernoulli_numbers(2 * order as u32);
    let coeffs = (0..=order)
        .map(|n| {
            let b = &bern[2 * n];
            let fact = Rational::from_integer(factorial(2 * n as u32));
            let four_n = Rational::from_integer(BigInt::from(4).pow(n as u32));
            match kind {
                Genus::L => b * &four_n / fact,
                Genus::Ahat if n == 0 => Rational::one(),
                Genus::Ahat => {
                    let k = &four_n - int(2);
                    -(k * b) / (fact * four_n)
                }
            }
        })
        .collect();
    PowerSeries { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for n in (3..40).step_by(2) {
            assert!(bernoulli(n).is_zero(), "B_{n}");
        }
    }

    #[test]
    fn char_series_examples() {
        assert_eq!(
            char_series(Genus::L, 3).coefficients(),
            &[int(1), rat(1, 3), rat(-1, 45), rat(2, 945)]
        );
        assert_eq!(
            char_series(Genus::Ahat, 2).coefficients(),
            &[int(1), rat(-1, 24), rat(7, 5760)]
        );
        assert_eq!(char_series(Genus::L, 0).coefficients(), &[int(1)]);
    }

    #[test]
    fn series_arithmetic_examples() {
        let a = PowerSeries::new(vec![int(1), int(1), int(0)]);
        let b = PowerSeries::new(vec![int(1), int(-1), int(0)]);
        assert_eq!(a.mul(&b).coefficients(), &[int(1), int(0), int(-1)]);

        let geo = PowerSeries::one(3)
            .div(&PowerSeries::new(vec![int(1), int(-1), int(0), int(0)]))
            .unwrap();
        assert_eq!(geo.coefficients(), &[int(1), int(1), int(1), int(1)]);

        let l = char_series(Genus::L, 3);
        assert_eq!(l.mul(&l.inverse().unwrap()), PowerSeries::one(3));
    }

    #[test]
    fn division_by_non_unit_fails() {
        let z = PowerSeries::new(vec![int(0), int(1)]);
        assert_eq!(PowerSeries::one(1).div(&z), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = PowerSeries::one(5);
        let b = PowerSeries::one(2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.div(&b).unwrap().order(), 2);
        assert_eq!(a.truncate(9).order(), 5);
    }

    #[test]
    fn log_of_exp_like_series() {
        // log(1/(1-z)) = z + z^2/2 + z^3/3
        let geo = PowerSeries::new(vec![int(1); 4]);
        assert_eq!(
            geo.log().unwrap().coefficients(),
            &[int(0), int(1), rat(1, 2), rat(1, 3)]
        );
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-7/14").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(rat(-1, 45).to_string(), "-1/45");
        assert_eq!(int(4).to_string(), "4");
    }
}
