//! The polynomial incidence algebra of a generalized ranked poset, realized
//! as polynomial matrices over the poset's linear extension.
//!
//! An incidence element assigns to every pair `p <= q` a polynomial of the
//! form `c * z^(rank(q) - rank(p))` and zero to incomparable pairs. Row and
//! column `k` of the matrix correspond to the `k`-th element of the linear
//! extension, so every incidence matrix is upper triangular.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyalg::{IntPolynomial, PolyMatrix};
use crate::poset::RankedPoset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceElement<'a> {
    poset: &'a RankedPoset,
    matrix: PolyMatrix,
    // position[i] = row of element i
    position: Vec<usize>,
}

fn positions(poset: &RankedPoset) -> Vec<usize> {
    let mut position = vec![0; poset.len()];
    for (k, &i) in poset.poset().linear_extension().iter().enumerate() {
        position[i] = k;
    }
    position
}

fn basis(poset: &RankedPoset) -> Vec<String> {
    let p = poset.poset();
    p.linear_extension()
        .iter()
        .map(|&i| p.label(i).to_owned())
        .collect()
}

fn gap(poset: &RankedPoset, p: usize, q: usize) -> usize {
    (poset.rank(q) - poset.rank(p)) as usize
}

impl<'a> IncidenceElement<'a> {
    /// The element with value `coeff(p, q) * z^(rank(q) - rank(p))` on each
    /// comparable pair, by element index.
    pub fn from_coefficients(
        poset: &'a RankedPoset,
        mut coeff: impl FnMut(usize, usize) -> BigInt,
    ) -> Self {
        let order = poset.poset().linear_extension();
        let matrix = PolyMatrix::from_fn(basis(poset), |r, c| {
            let (p, q) = (order[r], order[c]);
            if poset.poset().leq(p, q) {
                IntPolynomial::monomial(coeff(p, q), gap(poset, p, q))
            } else {
                IntPolynomial::zero()
            }
        });
        IncidenceElement {
            poset,
            matrix,
            position: positions(poset),
        }
    }

    /// Wraps a matrix over the poset's linear extension, checking that it
    /// vanishes off the order and is a single monomial of the right degree on
    /// it.
    pub fn from_matrix(poset: &'a RankedPoset, matrix: PolyMatrix) -> Result<Self> {
        if matrix.basis() != basis(poset).as_slice() {
            return Err(Error::DimensionMismatch(
                "matrix basis is not the poset's linear extension".into(),
            ));
        }
        let element = IncidenceElement {
            poset,
            matrix,
            position: positions(poset),
        };
        let p = poset.poset();
        for a in 0..p.len() {
            for b in 0..p.len() {
                let v = element.value(a, b);
                let ok = if p.leq(a, b) {
                    v.is_zero() || v.as_monomial().is_some_and(|(_, d)| d == gap(poset, a, b))
                } else {
                    v.is_zero()
                };
                if !ok {
                    return Err(Error::OutOfRange(format!(
                        "value {v} at ({},{}) is not an incidence value",
                        p.label(a),
                        p.label(b)
                    )));
                }
            }
        }
        Ok(element)
    }

    pub fn delta(poset: &'a RankedPoset) -> Self {
        IncidenceElement::from_coefficients(poset, |p, q| BigInt::from(u8::from(p == q)))
    }

    pub fn poset(&self) -> &'a RankedPoset {
        self.poset
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> PolyMatrix {
        self.matrix
    }

    /// Value on the pair `(p, q)` by element index.
    pub fn value(&self, p: usize, q: usize) -> &IntPolynomial {
        self.matrix.get(self.position[p], self.position[q])
    }

    pub fn value_by_label(&self, p: &str, q: &str) -> Result<&IntPolynomial> {
        let poset = self.poset.poset();
        Ok(self.value(poset.require(p)?, poset.require(q)?))
    }

    /// Convolution `(f*g)(p,q) = sum_{p<=r<=q} f(p,r) g(r,q)`, summed
    /// directly over the poset rather than through the matrix product.
    pub fn convolve(&self, other: &IncidenceElement<'a>) -> IncidenceElement<'a> {
        let poset = self.poset.poset();
        let order = poset.linear_extension();
        let matrix = PolyMatrix::from_fn(basis(self.poset), |r, c| {
            let (p, q) = (order[r], order[c]);
            if !poset.leq(p, q) {
                return IntPolynomial::zero();
            }
            poset
                .up_set(p)
                .filter(|&m| poset.leq(m, q))
                .map(|m| self.value(p, m) * other.value(m, q))
                .sum()
        });
        IncidenceElement {
            poset: self.poset,
            matrix,
            position: self.position.clone(),
        }
    }

    /// Value on `1 (x) 1`: the sum over all pairs.
    pub fn total(&self) -> IntPolynomial {
        self.matrix.entry_sum()
    }

    /// Integer coefficients at `z = 1`, by element index; recovers the
    /// classical incidence algebra.
    pub fn at_one(&self) -> Vec<Vec<BigInt>> {
        let n = self.poset.len();
        let one = BigInt::from(1);
        (0..n)
            .map(|p| (0..n).map(|q| self.value(p, q).eval(&one)).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix
            .entries()
            .all(|e| e.coeffs().iter().all(Zero::is_zero))
    }
}

/// `zeta(p, q) = z^(rank(q) - rank(p))` for `p <= q`.
pub fn zeta_matrix(poset: &RankedPoset) -> IncidenceElement<'_> {
    IncidenceElement::from_coefficients(poset, |_, _| BigInt::from(1))
}

/// The inverse of [`zeta_matrix`], computed by unitriangular back
/// substitution.
pub fn mobius_matrix(poset: &RankedPoset) -> IncidenceElement<'_> {
    let zeta = zeta_matrix(poset);
    let inverse = zeta
        .matrix()
        .invert_unitriangular()
        .expect("zeta matrix over a linear extension is unitriangular");
    IncidenceElement {
        poset,
        matrix: inverse,
        position: zeta.position,
    }
}

/// `M_P(z) = sum_{p<=q} mu(p,q) z^(rank(q) - rank(p))`.
pub fn mobius_polynomial(poset: &RankedPoset) -> IntPolynomial {
    mobius_matrix(poset).total()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{closure_from_covers, mobius_row, RankAssignment, RankKind};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn chain(s: usize) -> RankedPoset {
        let labels: Vec<String> = (0..=s).map(|i| i.to_string()).collect();
        let covers: Vec<(String, String)> = (0..s)
            .map(|i| (i.to_string(), (i + 1).to_string()))
            .collect();
        RankedPoset::inferred(closure_from_covers(&labels, &covers).unwrap())
    }

    #[test]
    fn two_chain_matrices() {
        let c = chain(1);
        let zeta = zeta_matrix(&c);
        assert_eq!(zeta.matrix().get(0, 1), &p(&[0, 1]));
        assert_eq!(zeta.matrix().get(1, 0), &p(&[]));
        let mu = mobius_matrix(&c);
        assert_eq!(mu.matrix().get(0, 1), &p(&[0, -1]));
        assert_eq!(mobius_polynomial(&c), p(&[2, -1]));
    }

    #[test]
    fn singleton() {
        let c = chain(0);
        assert!(zeta_matrix(&c).matrix().is_identity());
        assert!(mobius_matrix(&c).matrix().is_identity());
        assert_eq!(mobius_polynomial(&c), p(&[1]));
    }

    #[test]
    fn chains_follow_one_plus_s_one_minus_z() {
        for s in 0..8i64 {
            let c = chain(s as usize);
            let zeta = zeta_matrix(&c);
            for i in 0..=s as usize {
                for j in i..=s as usize {
                    assert_eq!(zeta.value(i, j), &IntPolynomial::monomial(1, j - i));
                }
            }
            assert_eq!(mobius_polynomial(&c), p(&[1 + s, -s]));
        }
    }

    #[test]
    fn boolean_square_matches_recursion() {
        let sq = RankedPoset::inferred(
            closure_from_covers(
                &["0", "a", "b", "1"],
                &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            )
            .unwrap(),
        );
        assert_eq!(mobius_polynomial(&sq), p(&[4, -4, 1]));
        let mu = mobius_matrix(&sq);
        for a in 0..4 {
            let row = mobius_row(sq.poset(), a);
            for (b, &m) in row.iter().enumerate() {
                let expected = if sq.poset().leq(a, b) {
                    IntPolynomial::monomial(m, (sq.rank(b) - sq.rank(a)) as usize)
                } else {
                    IntPolynomial::zero()
                };
                assert_eq!(mu.value(a, b), &expected);
            }
        }
    }

    #[test]
    fn zeta_mobius_delta_on_generalized_poset() {
        let poset = closure_from_covers(
            &["t", "x", "*", "y"],
            &[("*", "x"), ("*", "y"), ("x", "t"), ("y", "t")],
        )
        .unwrap();
        let ranked = RankedPoset::new(
            poset,
            RankAssignment::new(vec![5, 1, 0, 3], RankKind::Generalized),
        )
        .unwrap();
        let zeta = zeta_matrix(&ranked);
        let mu = mobius_matrix(&ranked);
        let delta = IncidenceElement::delta(&ranked);
        assert_eq!(zeta.convolve(&mu), delta);
        assert_eq!(mu.convolve(&zeta), delta);
        assert!(zeta.matrix().is_upper_triangular());
        // M(1,1) = 4 - z - z^3 - z^2 - z^4 + z^5 ... checked against the recursion
        let total = mobius_polynomial(&ranked);
        assert_eq!(total, p(&[4, -1, -1, -1, -1, 1]));
        assert_eq!(
            mu.value_by_label("*", "t").unwrap(),
            &p(&[0, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn from_matrix_checks_support_and_degree() {
        let c = chain(1);
        let basis = vec!["0".to_owned(), "1".to_owned()];
        let ok =
            PolyMatrix::new(basis.clone(), vec![p(&[3]), p(&[0, 2]), p(&[]), p(&[1])]).unwrap();
        assert!(IncidenceElement::from_matrix(&c, ok).is_ok());
        let wrong_degree =
            PolyMatrix::new(basis.clone(), vec![p(&[1]), p(&[2]), p(&[]), p(&[1])]).unwrap();
        assert!(IncidenceElement::from_matrix(&c, wrong_degree).is_err());
        let below = PolyMatrix::new(basis, vec![p(&[1]), p(&[]), p(&[0, 1]), p(&[1])]).unwrap();
        assert!(IncidenceElement::from_matrix(&c, below).is_err());
    }
}
