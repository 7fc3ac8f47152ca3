use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::IntPolynomial;

/// Square matrix of integer polynomials whose rows and columns are indexed by
/// a labeled basis (for incidence matrices, a poset's linear extension).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    basis: Vec<String>,
    // row-major
    entries: Vec<IntPolynomial>,
}

impl PolyMatrix {
    pub fn new(basis: Vec<String>, entries: Vec<IntPolynomial>) -> Result<Self> {
        if entries.len() != basis.len() * basis.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                basis.len(),
                basis.len()
            )));
        }
        Ok(PolyMatrix { basis, entries })
    }

    pub fn from_fn(basis: Vec<String>, mut f: impl FnMut(usize, usize) -> IntPolynomial) -> Self {
        let n = basis.len();
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        PolyMatrix { basis, entries }
    }

    pub fn zeros(basis: Vec<String>) -> Self {
        PolyMatrix::from_fn(basis, |_, _| IntPolynomial::zero())
    }

    pub fn identity(basis: Vec<String>) -> Self {
        PolyMatrix::from_fn(basis, |i, j| {
            if i == j {
                IntPolynomial::one()
            } else {
                IntPolynomial::zero()
            }
        })
    }

    /// Basis labelled `0..n`.
    pub fn numbered_basis(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: IntPolynomial) {
        let n = self.dim();
        self.entries[i * n + j] = value;
    }

    pub fn entries(&self) -> impl Iterator<Item = &IntPolynomial> {
        self.entries.iter()
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn is_upper_triangular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    /// `1^T M 1`, the sum of all entries.
    pub fn entry_sum(&self) -> IntPolynomial {
        self.entries.iter().sum()
    }

    /// Entrywise evaluation at an integer point.
    pub fn eval(&self, z: &BigInt) -> Vec<Vec<BigInt>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).eval(z)).collect())
            .collect()
    }

    pub fn matrix_mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.basis != rhs.basis {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{} over different bases",
                self.dim(),
                self.dim(),
                rhs.dim(),
                rhs.dim()
            )));
        }
        let n = self.dim();
        let mut entries = vec![IntPolynomial::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(PolyMatrix {
            basis: self.basis.clone(),
            entries,
        })
    }

    /// Inverse of an upper unitriangular matrix by back substitution:
    /// `X[i][j] = -sum_{i<k<=j} M[i][k] X[k][j]`.
    pub fn invert_unitriangular(&self) -> Result<PolyMatrix> {
        let n = self.dim();
        for i in 0..n {
            if !self.get(i, i).is_one() {
                return Err(Error::NotUnitriangular(format!(
                    "diagonal entry {i} is {}",
                    self.get(i, i)
                )));
            }
            if let Some(j) = (0..i).find(|&j| !self.get(i, j).is_zero()) {
                return Err(Error::NotUnitriangular(format!(
                    "entry ({i},{j}) below the diagonal is {}",
                    self.get(i, j)
                )));
            }
        }
        let mut inv = PolyMatrix::identity(self.basis.clone());
        for j in 0..n {
            for i in (0..j).rev() {
                let mut acc = IntPolynomial::zero();
                for k in i + 1..=j {
                    let (a, x) = (self.get(i, k), inv.get(k, j));
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                inv.set(i, j, -acc);
            }
        }
        Ok(inv)
    }

    /// Kronecker product with basis `(a,b)` in lexicographic order, `self`'s
    /// basis major.
    pub fn kronecker(&self, rhs: &PolyMatrix) -> PolyMatrix {
        let (n, m) = (self.dim(), rhs.dim());
        let basis = self
            .basis
            .iter()
            .flat_map(|a| rhs.basis.iter().map(move |b| format!("({a},{b})")))
            .collect();
        PolyMatrix::from_fn(basis, |r, c| {
            let (i, k) = (r / m, r % m);
            let (j, l) = (c / m, c % m);
            debug_assert!(i < n && j < n);
            let a = self.get(i, j);
            if a.is_zero() {
                IntPolynomial::zero()
            } else {
                a * rhs.get(k, l)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn m2(entries: [&[i64]; 4]) -> PolyMatrix {
        PolyMatrix::new(
            PolyMatrix::numbered_basis(2),
            entries.iter().map(|c| p(c)).collect(),
        )
        .unwrap()
    }

    fn chain_zeta(s: usize) -> PolyMatrix {
        PolyMatrix::from_fn(PolyMatrix::numbered_basis(s + 1), |i, j| {
            if i <= j {
                IntPolynomial::monomial(1, j - i)
            } else {
                IntPolynomial::zero()
            }
        })
    }

    #[test]
    fn identity_is_neutral() {
        let m = m2([&[1], &[0, 3], &[], &[1, 1]]);
        let id = PolyMatrix::identity(PolyMatrix::numbered_basis(2));
        assert_eq!(m.matrix_mul(&id).unwrap(), m);
        assert_eq!(id.matrix_mul(&m).unwrap(), m);
    }

    #[test]
    fn two_chain_zeta_times_inverse() {
        let zeta = m2([&[1], &[0, 1], &[], &[1]]);
        let mobius = m2([&[1], &[0, -1], &[], &[1]]);
        assert!(zeta.matrix_mul(&mobius).unwrap().is_identity());
        assert_eq!(zeta.invert_unitriangular().unwrap(), mobius);
    }

    #[test]
    fn chain_zeta_inverse_is_bidiagonal() {
        for s in 0..6 {
            let zeta = chain_zeta(s);
            let inv = zeta.invert_unitriangular().unwrap();
            for i in 0..=s {
                for j in 0..=s {
                    let expected = if i == j {
                        p(&[1])
                    } else if j == i + 1 {
                        p(&[0, -1])
                    } else {
                        IntPolynomial::zero()
                    };
                    assert_eq!(inv.get(i, j), &expected, "s={s} ({i},{j})");
                }
            }
            assert!(zeta.matrix_mul(&inv).unwrap().is_identity());
            assert!(inv.matrix_mul(&zeta).unwrap().is_identity());
        }
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = PolyMatrix::identity(PolyMatrix::numbered_basis(4));
        assert_eq!(id.invert_unitriangular().unwrap(), id);
    }

    #[test]
    fn rejects_non_unitriangular() {
        let m = m2([&[2], &[0, 1], &[], &[1]]);
        assert!(matches!(
            m.invert_unitriangular(),
            Err(Error::NotUnitriangular(_))
        ));
        let lower = m2([&[1], &[], &[0, 1], &[1]]);
        assert!(matches!(
            lower.invert_unitriangular(),
            Err(Error::NotUnitriangular(_))
        ));
    }

    #[test]
    fn dimension_mismatch() {
        let a = PolyMatrix::identity(PolyMatrix::numbered_basis(2));
        let b = PolyMatrix::identity(PolyMatrix::numbered_basis(3));
        assert!(matches!(a.matrix_mul(&b), Err(Error::DimensionMismatch(_))));
        assert!(PolyMatrix::new(PolyMatrix::numbered_basis(2), vec![]).is_err());
    }

    #[test]
    fn kronecker_of_identities() {
        let i2 = PolyMatrix::identity(PolyMatrix::numbered_basis(2));
        let k = i2.kronecker(&i2);
        assert_eq!(k.dim(), 4);
        assert!(k.is_identity());
        assert_eq!(k.basis(), &["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Vec<IntPolynomial>> {
        prop::collection::vec(prop::collection::vec(-3i64..4, 0..3), n * n)
            .prop_map(|es| es.iter().map(|c| p(c)).collect())
    }

    fn unitriangular(n: usize) -> impl Strategy<Value = PolyMatrix> {
        small_matrix(n).prop_map(move |es| {
            PolyMatrix::from_fn(PolyMatrix::numbered_basis(n), |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Less => es[i * n + j].clone(),
                std::cmp::Ordering::Equal => IntPolynomial::one(),
                std::cmp::Ordering::Greater => IntPolynomial::zero(),
            })
        })
    }

    proptest! {
        #[test]
        fn inverse_multiplies_to_identity(m in (1usize..6).prop_flat_map(unitriangular)) {
            let inv = m.invert_unitriangular().unwrap();
            prop_assert!(m.matrix_mul(&inv).unwrap().is_identity());
            prop_assert!(inv.matrix_mul(&m).unwrap().is_identity());
        }

        #[test]
        fn kronecker_mixed_product(a in small_matrix(2), b in small_matrix(3),
                                   c in small_matrix(2), d in small_matrix(3)) {
            let b2 = PolyMatrix::numbered_basis(2);
            let b3 = PolyMatrix::numbered_basis(3);
            let (a, c) = (PolyMatrix::new(b2.clone(), a).unwrap(), PolyMatrix::new(b2, c).unwrap());
            let (b, d) = (PolyMatrix::new(b3.clone(), b).unwrap(), PolyMatrix::new(b3, d).unwrap());
            let lhs = a.kronecker(&b).matrix_mul(&c.kronecker(&d)).unwrap();
            let rhs = a.matrix_mul(&c).unwrap().kronecker(&b.matrix_mul(&d).unwrap());
            prop_assert_eq!(lhs.dim(), 6);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
