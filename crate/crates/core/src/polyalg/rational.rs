use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::IntPolynomial;

/// A power series given as an unsimplified quotient `num / den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalSeries {
    /// Rejects denominators whose constant term is not `1` or `-1`, since the
    /// expansion would leave the integers or be undefined at `z = 0`.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        let c = den.coeff(0);
        if c.is_zero() {
            return Err(Error::SeriesUndefined);
        }
        if !c.is_one() && !(-&c).is_one() {
            return Err(Error::NonUnitDenominator(c.to_string()));
        }
        Ok(RationalSeries { num, den })
    }

    /// `(1 - z) / (1 - z * m)`, the shape shared by the Hilbert series and
    /// graded trace formulas.
    pub fn one_minus_z_over(m: &IntPolynomial) -> Self {
        let one = IntPolynomial::one();
        let num = &one - &IntPolynomial::z();
        let den = &one - &(&IntPolynomial::z() * m);
        RationalSeries { num, den }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    /// Coefficients `c_0..=c_k`.
    pub fn expand(&self, k: usize) -> Vec<BigInt> {
        let (num, den) = if self.den.coeff(0).is_one() {
            (self.num.clone(), self.den.clone())
        } else {
            (-&self.num, -&self.den)
        };
        let mut c: Vec<BigInt> = Vec::with_capacity(k + 1);
        for m in 0..=k {
            let mut value = num.coeff(m);
            for (j, d) in den.coeffs().iter().enumerate().skip(1).take(m) {
                if !d.is_zero() {
                    value -= d * &c[m - j];
                }
            }
            c.push(value);
        }
        c
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Coefficients `c_0..=c_k` of `num / den`.
pub fn series_expand(num: &IntPolynomial, den: &IntPolynomial, k: usize) -> Result<Vec<BigInt>> {
    Ok(RationalSeries::new(num.clone(), den.clone())?.expand(k))
}
