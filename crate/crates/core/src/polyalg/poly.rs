use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial in `z` with arbitrary-precision integer coefficients.
///
/// Stored dense, lowest degree first, with no trailing zeros; the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::new(vec![c.into()])
    }

    /// `c * z^degree`
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPolynomial { coeffs }
    }

    /// `z`
    pub fn z() -> Self {
        IntPolynomial::monomial(1, 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `Some((c, d))` when the polynomial is the single term `c * z^d`.
    pub fn as_monomial(&self) -> Option<(&BigInt, usize)> {
        let mut terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        match (terms.next(), terms.next()) {
            (Some((d, c)), None) => Some((c, d)),
            _ => None,
        }
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// `p(z^n)`: the coefficient of `z^i` moves to `z^(n*i)`.
    pub fn substitute_power(&self, n: usize) -> Self {
        assert!(n >= 1, "substitution power must be positive");
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n * (self.coeffs.len() - 1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n * i] = c.clone();
        }
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl From<i64> for IntPolynomial {
    fn from(c: i64) -> Self {
        IntPolynomial::constant(c)
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        IntPolynomial::new(coeffs)
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, d) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= d;
        }
        IntPolynomial::new(coeffs)
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<IntPolynomial> for &'a IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, d) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += d;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        *self += &-rhs;
    }
}

impl Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<'a> Sum<&'a IntPolynomial> for IntPolynomial {
    fn sum<I: Iterator<Item = &'a IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}

/// Ascending powers, e.g. `1 - 4*z + 4*z^2 - z^3`; zero prints as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let abs = c.abs();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    f.write_str("z")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    // 1 + s(1 - z)
    fn chain_poly(s: i64) -> IntPolynomial {
        p(&[1 + s, -s])
    }

    #[test]
    fn square_of_two_minus_z() {
        assert_eq!(&p(&[2, -1]) * &p(&[2, -1]), p(&[4, -4, 1]));
    }

    #[test]
    fn additive_identity_and_canonical_form() {
        let a = p(&[3, 0, -2]);
        assert_eq!(&a + &IntPolynomial::zero(), a);
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).degree(), None);
    }

    #[test]
    fn product_of_three_chain_polynomials() {
        let prod: IntPolynomial = [3, 2, 1].into_iter().map(chain_poly).product();
        assert_eq!(prod, p(&[24, -46, 29, -6]));
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(p(&[2, -1]).substitute_power(3), p(&[2, 0, 0, -1]));
        assert_eq!(p(&[4, -3]).substitute_power(2), p(&[4, 0, -3]));
        let q = p(&[5, -7, 2]);
        assert_eq!(q.substitute_power(1), q);
        assert!(IntPolynomial::zero().substitute_power(4).is_zero());
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p(&[1, -4, 4, -1]).to_string(), "1 - 4*z + 4*z^2 - z^3");
        assert_eq!(p(&[2, -1]).to_string(), "2 - z");
        assert_eq!(p(&[6, -7, 2]).to_string(), "6 - 7*z + 2*z^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[0, -1]).to_string(), "-z");
        assert_eq!(p(&[0, 0, 3]).to_string(), "3*z^2");
        assert_eq!(p(&[-2, 1]).to_string(), "-2 + z");
    }

    #[test]
    fn eval_and_monomial() {
        let q = p(&[24, -46, 29, -6]);
        assert_eq!(q.eval(&BigInt::from(0)), BigInt::from(24));
        assert_eq!(q.eval(&BigInt::from(1)), BigInt::from(1));
        assert_eq!(
            IntPolynomial::monomial(-3, 2).as_monomial(),
            Some((&BigInt::from(-3), 2))
        );
        assert_eq!(p(&[1, 1]).as_monomial(), None);
        assert_eq!(p(&[2, -1]).pow(3), p(&[8, -12, 6, -1]));
        assert_eq!(p(&[2, -1]).pow(0), IntPolynomial::one());
    }

    // term-by-term convolution oracle
    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        (0..a.len() + b.len() - 1)
            .map(|k| {
                (0..=k)
                    .filter(|&i| i < a.len() && k - i < b.len())
                    .map(|i| a[i] * b[k - i])
                    .sum()
            })
            .collect()
    }

    fn poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn mul_matches_convolution(a in prop::collection::vec(-50i64..50, 0..6),
                                   b in prop::collection::vec(-50i64..50, 0..6)) {
            prop_assert_eq!(&p(&a) * &p(&b), p(&convolve(&a, &b)));
        }

        #[test]
        fn ring_axioms(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn canonical_form_is_idempotent(c in prop::collection::vec(-3i64..3, 0..8)) {
            let once = p(&c);
            let twice = IntPolynomial::new(once.coeffs().to_vec());
            prop_assert_eq!(&once, &twice);
            prop_assert!(once.coeffs().last().is_none_or(|x| !x.is_zero()));
        }

        #[test]
        fn substitution_is_a_ring_map(a in poly(), b in poly(), n in 1usize..5) {
            prop_assert_eq!((&a * &b).substitute_power(n),
                            &a.substitute_power(n) * &b.substitute_power(n));
            prop_assert_eq!((&a + &b).substitute_power(n),
                            &a.substitute_power(n) + &b.substitute_power(n));
        }
    }
}
