//! Hilbert series and graded trace generating functions of splitting
//! algebras, assembled from Möbius polynomials as
//! `(1 - z) / (1 - z * M(z))`.

use crate::constructions::{shuffle_fixed_mobius, FactorShuffle};
use crate::error::{Error, Result};
use crate::incidence::mobius_polynomial;
use crate::polyalg::RationalSeries;
use crate::poset::{PosetAutomorphism, RankedPoset};

/// Both closed forms hold for finite ranked posets with a unique minimal
/// element.
pub fn check_hypotheses(poset: &RankedPoset) -> Result<()> {
    let p = poset.poset();
    if let Some(&(a, b)) = p
        .covers()
        .iter()
        .find(|&&(a, b)| poset.rank(b) != poset.rank(a) + 1)
    {
        return Err(Error::NotRanked(format!(
            "cover ({},{}) goes from rank {} to rank {}",
            p.label(a),
            p.label(b),
            poset.rank(a),
            poset.rank(b)
        )));
    }
    let minimal = p.minimal_elements();
    if minimal.len() != 1 {
        return Err(Error::NotUniqueMinimum(
            minimal.iter().map(|&i| p.label(i).to_owned()).collect(),
        ));
    }
    Ok(())
}

/// `H(A(P), z) = (1 - z) / (1 - z * M_P(z))`.
pub fn hilbert_series(poset: &RankedPoset) -> Result<RationalSeries> {
    check_hypotheses(poset)?;
    Ok(RationalSeries::one_minus_z_over(&mobius_polynomial(poset)))
}

/// `Tr_sigma(A(P), z) = (1 - z) / (1 - z * M_{P^sigma}(z))`, with the fixed
/// subposet computed directly.
pub fn graded_trace(aut: &PosetAutomorphism) -> Result<RationalSeries> {
    check_hypotheses(aut.base())?;
    let fixed = aut.fixed_subposet()?;
    Ok(RationalSeries::one_minus_z_over(&mobius_polynomial(&fixed)))
}

/// Graded trace of a factor-shuffling automorphism from the closed form
/// `prod_j M_{Q_j}(z^{i_j})`, without building the product poset.
///
/// The product is ranked with a unique minimum exactly when every factor is.
pub fn shuffle_trace(fs: &FactorShuffle) -> Result<RationalSeries> {
    for factor in fs.factors() {
        check_hypotheses(factor)?;
    }
    Ok(RationalSeries::one_minus_z_over(&shuffle_fixed_mobius(fs)))
}
