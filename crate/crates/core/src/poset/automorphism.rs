use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

use super::{RankAssignment, RankKind, RankedPoset};

/// An order- and rank-preserving permutation of a ranked poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetAutomorphism {
    base: Arc<RankedPoset>,
    image: Vec<usize>,
}

impl PosetAutomorphism {
    /// `image[i]` is the index of the image of element `i`.
    pub fn new(base: Arc<RankedPoset>, image: Vec<usize>) -> Result<Self> {
        let n = base.len();
        if image.len() != n {
            return Err(Error::InvalidAutomorphism(format!(
                "map has {} entries for {} elements",
                image.len(),
                n
            )));
        }
        let mut hit = vec![false; n];
        for &j in &image {
            if j >= n || std::mem::replace(&mut hit[j], true) {
                return Err(Error::InvalidAutomorphism("map is not a bijection".into()));
            }
        }
        let poset = base.poset();
        for i in 0..n {
            let label = poset.label(i);
            if base.rank(i) != base.rank(image[i]) {
                return Err(Error::InvalidAutomorphism(format!(
                    "`{label}` has rank {} but its image `{}` has rank {}",
                    base.rank(i),
                    poset.label(image[i]),
                    base.rank(image[i])
                )));
            }
            let mut mapped = FixedBitSet::with_capacity(n);
            for j in poset.up_set(i) {
                mapped.insert(image[j]);
            }
            if &mapped != poset.up_bits(image[i]) {
                return Err(Error::InvalidAutomorphism(format!(
                    "order above `{label}` is not carried to the order above `{}`",
                    poset.label(image[i])
                )));
            }
        }
        Ok(PosetAutomorphism { base, image })
    }

    pub fn identity(base: Arc<RankedPoset>) -> Self {
        let image = (0..base.len()).collect();
        PosetAutomorphism { base, image }
    }

    /// Builds the map from `(from, to)` label pairs; elements that never
    /// appear as a source are fixed.
    pub fn from_label_map<A, B>(base: Arc<RankedPoset>, pairs: &[(A, B)]) -> Result<Self>
    where
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let poset = base.poset();
        let mut image: Vec<usize> = (0..base.len()).collect();
        let mut sources = HashMap::new();
        let mut targets = HashMap::new();
        for (from, to) in pairs {
            let (from, to) = (from.as_ref(), to.as_ref());
            let i = poset.require(from)?;
            let j = poset.require(to)?;
            if sources.insert(i, j).is_some() {
                return Err(Error::InvalidAutomorphism(format!(
                    "`{from}` is mapped more than once"
                )));
            }
            if targets.insert(j, i).is_some() {
                return Err(Error::InvalidAutomorphism(format!(
                    "`{to}` is the image of more than one element"
                )));
            }
            image[i] = j;
        }
        PosetAutomorphism::new(base, image)
    }

    pub fn base(&self) -> &RankedPoset {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<RankedPoset> {
        &self.base
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.image.len())
            .filter(|&i| self.image[i] == i)
            .collect()
    }

    /// The subposet of fixed elements with ranks inherited unchanged, marked
    /// generalized since covers of the subposet may skip ranks.
    pub fn fixed_subposet(&self) -> Result<RankedPoset> {
        let keep = self.fixed_points();
        if keep.is_empty() {
            return Err(Error::EmptyFixedSubposet);
        }
        let poset = self.base.poset().induced(&keep)?;
        let ranks: Vec<u32> = keep.iter().map(|&i| self.base.rank(i)).collect();
        let ranks = RankAssignment::new(ranks, RankKind::Generalized);
        RankedPoset::new(poset, ranks).map_err(|e| match e {
            Error::Invalid(diags) => Error::FixedSubposetRank(
                diags
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("; "),
            ),
            other => other,
        })
    }
}
