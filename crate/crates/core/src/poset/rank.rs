use std::fmt;

use crate::error::{Error, Result};

use super::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankKind {
    /// Covers raise the rank by exactly one.
    Ranked,
    /// Rank is only required to increase strictly along the order.
    Generalized,
}

/// A (generalized) rank function, stored by element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankAssignment {
    ranks: Vec<u32>,
    kind: RankKind,
}

impl RankAssignment {
    pub fn new(ranks: Vec<u32>, kind: RankKind) -> Self {
        RankAssignment { ranks, kind }
    }

    /// Ranks with the kind chosen from the data: `Ranked` when every cover of
    /// `poset` raises the rank by exactly one.
    pub fn detect(poset: &Poset, ranks: Vec<u32>) -> Self {
        let ranked = ranks.len() == poset.len()
            && poset
                .covers()
                .iter()
                .all(|&(a, b)| ranks[b] == ranks[a] + 1);
        let kind = if ranked {
            RankKind::Ranked
        } else {
            RankKind::Generalized
        };
        RankAssignment { ranks, kind }
    }

    pub fn rank(&self, i: usize) -> u32 {
        self.ranks[i]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn kind(&self) -> RankKind {
        self.kind
    }

    pub fn rank_of(&self, poset: &Poset, label: &str) -> Result<u32> {
        Ok(self.ranks[poset.require(label)?])
    }
}

/// One violated axiom of a (generalized) ranked poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    RankCount {
        expected: usize,
        found: usize,
    },
    LinearExtension {
        lower: String,
        upper: String,
    },
    NotClosed {
        element: String,
    },
    NotCover {
        lower: String,
        upper: String,
    },
    MinimalNonZero {
        element: String,
        rank: u32,
    },
    ZeroNotMinimal {
        element: String,
    },
    NotIncreasing {
        lower: String,
        upper: String,
        lower_rank: u32,
        upper_rank: u32,
    },
    CoverJump {
        lower: String,
        upper: String,
        lower_rank: u32,
        upper_rank: u32,
    },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::RankCount { expected, found } => {
                write!(f, "expected {expected} ranks, found {found}")
            }
            Diagnostic::LinearExtension { lower, upper } => {
                write!(f, "linear extension places `{upper}` before `{lower}`")
            }
            Diagnostic::NotClosed { element } => write!(
                f,
                "order above `{element}` is not the closure of its covers"
            ),
            Diagnostic::NotCover { lower, upper } => {
                write!(f, "({lower},{upper}) is listed as a cover but is not one")
            }
            Diagnostic::MinimalNonZero { element, rank } => write!(
                f,
                "rank(p)=0 iff p is minimal: minimal element `{element}` has rank {rank}"
            ),
            Diagnostic::ZeroNotMinimal { element } => write!(
                f,
                "rank(p)=0 iff p is minimal: `{element}` has rank 0 but is not minimal"
            ),
            Diagnostic::NotIncreasing {
                lower,
                upper,
                lower_rank,
                upper_rank,
            } => write!(
                f,
                "p<q requires rank(p)<rank(q): ({lower},{upper}) has ranks {lower_rank},{upper_rank}"
            ),
            Diagnostic::CoverJump {
                lower,
                upper,
                lower_rank,
                upper_rank,
            } => write!(
                f,
                "ranked cover ({lower},{upper}) requires rank {}, found {upper_rank}",
                lower_rank + 1
            ),
        }
    }
}

/// Checks the poset structure and rank axioms; empty iff all hold.
///
/// Order and rank conditions are checked on covers, which suffices because
/// the order is the transitive closure of its covers.
pub fn validate(poset: &Poset, ranks: &RankAssignment) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let n = poset.len();
    let label = |i: usize| poset.label(i).to_owned();

    let mut position = vec![0usize; n];
    for (pos, &i) in poset.linear_extension().iter().enumerate() {
        position[i] = pos;
    }
    let mut upper_covers = vec![Vec::new(); n];
    for &(a, b) in poset.covers() {
        upper_covers[a].push(b);
        if position[a] >= position[b] {
            out.push(Diagnostic::LinearExtension {
                lower: label(a),
                upper: label(b),
            });
        }
    }
    for (i, ups) in upper_covers.iter().enumerate() {
        let mut closure = fixedbitset::FixedBitSet::with_capacity(n);
        closure.insert(i);
        for &j in ups {
            closure.union_with(poset.up_bits(j));
            if ups.iter().any(|&k| k != j && poset.leq(k, j)) {
                out.push(Diagnostic::NotCover {
                    lower: label(i),
                    upper: label(j),
                });
            }
        }
        if &closure != poset.up_bits(i) {
            out.push(Diagnostic::NotClosed { element: label(i) });
        }
    }

    if ranks.ranks().len() != n {
        out.push(Diagnostic::RankCount {
            expected: n,
            found: ranks.ranks().len(),
        });
        return out;
    }

    let mut minimal = vec![true; n];
    for &(_, b) in poset.covers() {
        minimal[b] = false;
    }
    for (i, &is_min) in minimal.iter().enumerate() {
        let r = ranks.rank(i);
        if is_min && r != 0 {
            out.push(Diagnostic::MinimalNonZero {
                element: label(i),
                rank: r,
            });
        } else if !is_min && r == 0 {
            out.push(Diagnostic::ZeroNotMinimal { element: label(i) });
        }
    }
    for &(a, b) in poset.covers() {
        let (ra, rb) = (ranks.rank(a), ranks.rank(b));
        if ra >= rb {
            out.push(Diagnostic::NotIncreasing {
                lower: label(a),
                upper: label(b),
                lower_rank: ra,
                upper_rank: rb,
            });
        }
        if ranks.kind() == RankKind::Ranked && rb != ra + 1 {
            out.push(Diagnostic::CoverJump {
                lower: label(a),
                upper: label(b),
                lower_rank: ra,
                upper_rank: rb,
            });
        }
    }
    out
}

/// Rank of each element as the length of the longest chain below it.
pub fn infer_ranks(poset: &Poset) -> RankAssignment {
    let mut ranks = vec![0u32; poset.len()];
    let mut lower_covers = vec![Vec::new(); poset.len()];
    for &(a, b) in poset.covers() {
        lower_covers[b].push(a);
    }
    for &i in poset.linear_extension() {
        ranks[i] = lower_covers[i]
            .iter()
            .map(|&a| ranks[a] + 1)
            .max()
            .unwrap_or(0);
    }
    RankAssignment::detect(poset, ranks)
}

/// A poset together with a rank function that passed [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedPoset {
    poset: Poset,
    ranks: RankAssignment,
}

impl RankedPoset {
    pub fn new(poset: Poset, ranks: RankAssignment) -> Result<Self> {
        let diags = validate(&poset, &ranks);
        if diags.is_empty() {
            Ok(RankedPoset { poset, ranks })
        } else {
            Err(Error::Invalid(diags))
        }
    }

    /// The poset with longest-chain ranks.
    pub fn inferred(poset: Poset) -> Self {
        let ranks = infer_ranks(&poset);
        RankedPoset { poset, ranks }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn ranks(&self) -> &RankAssignment {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn rank(&self, i: usize) -> u32 {
        self.ranks.rank(i)
    }

    /// Whether every cover raises the rank by exactly one, whatever the
    /// declared kind.
    pub fn is_ranked(&self) -> bool {
        self.poset
            .covers()
            .iter()
            .all(|&(a, b)| self.rank(b) == self.rank(a) + 1)
    }

    pub fn into_parts(self) -> (Poset, RankAssignment) {
        (self.poset, self.ranks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::closure_from_covers;

    fn chain2() -> Poset {
        closure_from_covers(&["x", "y"], &[("x", "y")]).unwrap()
    }

    fn diamond() -> Poset {
        closure_from_covers(
            &["*", "a", "b", "t"],
            &[("*", "a"), ("*", "b"), ("a", "t"), ("b", "t")],
        )
        .unwrap()
    }

    #[test]
    fn two_chain_is_ranked() {
        let p = chain2();
        let r = RankAssignment::new(vec![0, 1], RankKind::Ranked);
        assert!(validate(&p, &r).is_empty());
    }

    #[test]
    fn flat_ranks_violate_monotonicity() {
        let p = chain2();
        let r = RankAssignment::new(vec![0, 0], RankKind::Generalized);
        let diags = validate(&p, &r);
        assert!(diags.iter().any(|d| matches!(
            d,
            Diagnostic::NotIncreasing { lower, upper, .. } if lower == "x" && upper == "y"
        )));
        assert!(diags
            .iter()
            .any(|d| d.to_string().contains("p<q requires rank(p)<rank(q)")));
    }

    #[test]
    fn diamond_with_jumping_ranks_fails_cover_check() {
        let p = diamond();
        let r = RankAssignment::new(vec![0, 1, 2, 3], RankKind::Ranked);
        let diags = validate(&p, &r);
        assert!(diags.contains(&Diagnostic::CoverJump {
            lower: "a".into(),
            upper: "t".into(),
            lower_rank: 1,
            upper_rank: 3,
        }));
        // same ranks are a fine generalized rank function
        let g = RankAssignment::new(vec![0, 1, 2, 3], RankKind::Generalized);
        assert!(validate(&p, &g).is_empty());
    }

    #[test]
    fn minimal_elements_must_sit_at_zero() {
        let p = chain2();
        let r = RankAssignment::new(vec![1, 2], RankKind::Ranked);
        assert_eq!(
            validate(&p, &r),
            vec![Diagnostic::MinimalNonZero {
                element: "x".into(),
                rank: 1
            }]
        );
        let short = RankAssignment::new(vec![0], RankKind::Ranked);
        assert!(matches!(
            validate(&p, &short)[..],
            [Diagnostic::RankCount {
                expected: 2,
                found: 1
            }]
        ));
    }

    #[test]
    fn infer_boolean_square() {
        let r = infer_ranks(&diamond());
        assert_eq!(r.ranks(), &[0, 1, 1, 2]);
        assert_eq!(r.kind(), RankKind::Ranked);
    }

    #[test]
    fn infer_antichain() {
        let p = closure_from_covers::<_, &str, &str>(&["a", "b"], &[]).unwrap();
        let r = infer_ranks(&p);
        assert_eq!(r.ranks(), &[0, 0]);
        assert_eq!(r.kind(), RankKind::Ranked);
    }

    #[test]
    fn infer_n_shape() {
        let p = closure_from_covers(&["*", "a", "b", "t"], &[("*", "a"), ("*", "b"), ("a", "t")])
            .unwrap();
        let r = infer_ranks(&p);
        assert_eq!(r.ranks(), &[0, 1, 1, 2]);
        assert_eq!(r.kind(), RankKind::Ranked);
    }

    #[test]
    fn infer_unbalanced_is_generalized() {
        // * < a < b < t and * < t: long and short maximal chains
        let p = closure_from_covers(
            &["*", "a", "b", "c", "t"],
            &[("*", "a"), ("a", "b"), ("b", "t"), ("*", "c"), ("c", "t")],
        )
        .unwrap();
        let r = infer_ranks(&p);
        assert_eq!(r.ranks(), &[0, 1, 2, 1, 3]);
        assert_eq!(r.kind(), RankKind::Generalized);
        assert!(validate(&p, &r).is_empty());
    }

    #[test]
    fn ranked_poset_rejects_invalid() {
        let err = RankedPoset::new(chain2(), RankAssignment::new(vec![0, 0], RankKind::Ranked));
        assert!(matches!(err, Err(Error::Invalid(_))));
    }
}
