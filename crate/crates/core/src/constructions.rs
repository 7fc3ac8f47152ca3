//! Poset families and composite structures: chains, Boolean lattices,
//! divisor posets, direct products, rank rescaling and factor-shuffling
//! automorphisms of products.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::incidence::mobius_polynomial;
use crate::polyalg::IntPolynomial;
use crate::poset::{
    is_isomorphic, Poset, PosetAutomorphism, RankAssignment, RankKind, RankedPoset,
};

pub const MAX_BOOLEAN_RANK: u64 = 16;
pub const MAX_DIVISOR_N: u64 = 1_000_000_000;

/// Elements, ranks and covers of a generated poset, before the order
/// closure is computed. Covers are sorted by `(lower, upper)` index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetParts {
    pub labels: Vec<String>,
    pub ranks: Vec<u32>,
    pub covers: Vec<(usize, usize)>,
}

impl PosetParts {
    pub fn build(&self) -> Result<RankedPoset> {
        let poset = Poset::from_index_covers(self.labels.clone(), &self.covers)?;
        let ranks = RankAssignment::detect(&poset, self.ranks.clone());
        RankedPoset::new(poset, ranks)
    }
}

pub fn chain_parts(s: u32) -> PosetParts {
    PosetParts {
        labels: (0..=s).map(|i| i.to_string()).collect(),
        ranks: (0..=s).collect(),
        covers: (0..s as usize).map(|i| (i, i + 1)).collect(),
    }
}

/// Total order `0 < 1 < ... < s` with `s + 1` elements.
pub fn chain(s: u32) -> RankedPoset {
    chain_parts(s).build().expect("chains are ranked posets")
}

fn subset_label(mask: usize, n: u32) -> String {
    let members: Vec<String> = (0..n as usize)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| (b + 1).to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

/// Subsets of `{1..n}` in binary-counter order.
pub fn boolean_parts(n: u64) -> Result<PosetParts> {
    if n > MAX_BOOLEAN_RANK {
        return Err(Error::TooLarge {
            what: "boolean lattice rank",
            max: MAX_BOOLEAN_RANK,
            got: n,
        });
    }
    let n = n as u32;
    let size = 1usize << n;
    let mut covers = Vec::with_capacity(size * n as usize / 2);
    for mask in 0..size {
        for b in 0..n {
            if mask >> b & 1 == 0 {
                covers.push((mask, mask | 1 << b));
            }
        }
    }
    Ok(PosetParts {
        labels: (0..size).map(|m| subset_label(m, n)).collect(),
        ranks: (0..size).map(|m| m.count_ones()).collect(),
        covers,
    })
}

/// The lattice of subsets of `{1..n}`, ranked by cardinality.
pub fn boolean(n: u64) -> Result<RankedPoset> {
    boolean_parts(n)?.build()
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn check_divisor_n(n: u64) -> Result<()> {
    if n < 1 {
        return Err(Error::OutOfRange(format!(
            "divisor poset needs n >= 1, got {n}"
        )));
    }
    if n > MAX_DIVISOR_N {
        return Err(Error::TooLarge {
            what: "divisor poset n",
            max: MAX_DIVISOR_N,
            got: n,
        });
    }
    Ok(())
}

fn divisors(n: u64, factors: &[(u64, u32)]) -> Vec<u64> {
    let mut divs = vec![1u64];
    for &(p, e) in factors {
        let current = divs.clone();
        let mut power = 1;
        for _ in 0..e {
            power *= p;
            divs.extend(current.iter().map(|d| d * power));
        }
    }
    divs.sort_unstable();
    debug_assert!(divs.iter().all(|d| n.is_multiple_of(*d)));
    divs
}

/// Divisors of `n` in increasing order, ranked by number of prime factors
/// with multiplicity.
pub fn divisor_parts(n: u64) -> Result<PosetParts> {
    check_divisor_n(n)?;
    let factors = factorize(n);
    let divs = divisors(n, &factors);
    let index: HashMap<u64, usize> = divs.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut covers = Vec::new();
    let mut ranks = Vec::with_capacity(divs.len());
    for &d in &divs {
        ranks.push(factorize(d).iter().map(|&(_, e)| e).sum());
        for &(p, _) in &factors {
            if (n / d).is_multiple_of(p) {
                covers.push((index[&d], index[&(d * p)]));
            }
        }
    }
    Ok(PosetParts {
        labels: divs.iter().map(u64::to_string).collect(),
        ranks,
        covers,
    })
}

pub fn divisor_poset(n: u64) -> Result<RankedPoset> {
    divisor_parts(n)?.build()
}

/// Componentwise order on pairs labelled `(a,b)` with rank the sum of the
/// ranks. Elements are listed in lexicographic order of the factors' linear
/// extensions, left factor major, which is also the product's own linear
/// extension.
pub fn direct_product(p: &RankedPoset, q: &RankedPoset) -> Result<RankedPoset> {
    let (pp, qp) = (p.poset(), q.poset());
    let (lp, lq) = (pp.linear_extension(), qp.linear_extension());
    let m = qp.len();
    let mut pos_p = vec![0; pp.len()];
    let mut pos_q = vec![0; m];
    for (k, &i) in lp.iter().enumerate() {
        pos_p[i] = k;
    }
    for (k, &i) in lq.iter().enumerate() {
        pos_q[i] = k;
    }

    let mut labels = Vec::with_capacity(pp.len() * m);
    let mut ranks = Vec::with_capacity(pp.len() * m);
    for &a in lp {
        for &b in lq {
            labels.push(format!("({},{})", pp.label(a), qp.label(b)));
            ranks.push(p.rank(a) + q.rank(b));
        }
    }
    let mut covers = Vec::new();
    for &(a, a2) in pp.covers() {
        for b in 0..m {
            covers.push((pos_p[a] * m + b, pos_p[a2] * m + b));
        }
    }
    for &(b, b2) in qp.covers() {
        for a in 0..pp.len() {
            covers.push((a * m + pos_q[b], a * m + pos_q[b2]));
        }
    }
    let poset = Poset::from_index_covers(labels, &covers)?;
    let ranks = RankAssignment::detect(&poset, ranks);
    RankedPoset::new(poset, ranks)
}

/// Left-nested product `((Q_0 x Q_1) x Q_2) x ...`.
pub fn product_of(factors: &[RankedPoset]) -> Result<RankedPoset> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::OutOfRange("product of no factors".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, f| direct_product(&acc, f))
}

/// The same poset with every rank multiplied by `n`.
pub fn rescale(p: &RankedPoset, n: u32) -> Result<RankedPoset> {
    if n == 0 {
        return Err(Error::OutOfRange("rescale factor must be positive".into()));
    }
    let ranks = p.ranks().ranks().iter().map(|r| r * n).collect();
    let kind = if n > 1 && !p.poset().covers().is_empty() {
        RankKind::Generalized
    } else {
        p.ranks().kind()
    };
    RankedPoset::new(p.poset().clone(), RankAssignment::new(ranks, kind))
}

/// One cycle `k_0 -> k_1 -> ... -> k_0` of a factor permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleCycle {
    members: Vec<usize>,
}

impl ShuffleCycle {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Smallest factor index in the cycle.
    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

/// A permutation of the factors of `Q_0 x ... x Q_{n-1}` that only moves a
/// factor onto an isomorphic one, with the isomorphisms used to transport
/// components.
#[derive(Clone, Debug)]
pub struct FactorShuffle {
    factors: Vec<RankedPoset>,
    perm: Vec<usize>,
    cycles: Vec<ShuffleCycle>,
    // witnesses[k] maps factor k onto factor perm[k]
    witnesses: Vec<Vec<usize>>,
}

impl FactorShuffle {
    /// `perm[k]` is the position factor `k` is moved to.
    ///
    /// Witnesses are chosen so that composing them once around each cycle
    /// gives the identity, so the shuffle really permutes copies of a single
    /// poset.
    pub fn new(factors: Vec<RankedPoset>, perm: Vec<usize>) -> Result<Self> {
        let n = factors.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("no factors".into()));
        }
        if perm.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "{} entries for {} factors",
                perm.len(),
                n
            )));
        }
        let mut hit = vec![false; n];
        for &l in &perm {
            if l >= n || std::mem::replace(&mut hit[l], true) {
                return Err(Error::InvalidPermutation(format!("{perm:?}")));
            }
        }

        let mut cycles = Vec::new();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut members = vec![start];
            seen[start] = true;
            let mut k = perm[start];
            while k != start {
                members.push(k);
                seen[k] = true;
                k = perm[k];
            }
            cycles.push(ShuffleCycle { members });
        }

        let mut witnesses: Vec<Vec<usize>> =
            factors.iter().map(|f| (0..f.len()).collect()).collect();
        for cycle in &cycles {
            let rep = cycle.representative();
            // iso[t]: factor rep -> factor members[t]
            let mut iso = vec![(0..factors[rep].len()).collect::<Vec<_>>()];
            for &k in &cycle.members[1..] {
                let w = is_isomorphic(&factors[rep], &factors[k])
                    .ok_or(Error::NonIsomorphicFactors(rep, k))?;
                iso.push(w);
            }
            let len = cycle.len();
            for t in 0..len {
                let from = &iso[t];
                let to = &iso[(t + 1) % len];
                let k = cycle.members[t];
                let mut w = vec![0; factors[k].len()];
                for (x, &y) in from.iter().enumerate() {
                    w[y] = to[x];
                }
                witnesses[k] = w;
            }
        }
        Ok(FactorShuffle {
            factors,
            perm,
            cycles,
            witnesses,
        })
    }

    pub fn factors(&self) -> &[RankedPoset] {
        &self.factors
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn cycles(&self) -> &[ShuffleCycle] {
        &self.cycles
    }

    /// Isomorphism from factor `k` onto factor `perm[k]`.
    pub fn witness(&self, k: usize) -> &[usize] {
        &self.witnesses[k]
    }

    pub fn product(&self) -> Result<RankedPoset> {
        product_of(&self.factors)
    }
}

/// The automorphism of the product induced by a factor shuffle: component
/// `k` of a tuple is carried through its witness to position `perm[k]`.
pub fn shuffle_automorphism(fs: &FactorShuffle) -> Result<PosetAutomorphism> {
    let product = fs.product()?;
    let factors = fs.factors();
    let n = factors.len();

    let mut stride = vec![1usize; n];
    for k in (0..n.saturating_sub(1)).rev() {
        stride[k] = stride[k + 1] * factors[k + 1].len();
    }
    let positions: Vec<Vec<usize>> = factors
        .iter()
        .map(|f| {
            let mut pos = vec![0; f.len()];
            for (t, &i) in f.poset().linear_extension().iter().enumerate() {
                pos[i] = t;
            }
            pos
        })
        .collect();

    let image = (0..product.len())
        .map(|idx| {
            (0..n)
                .map(|k| {
                    let digit = idx / stride[k] % factors[k].len();
                    let x = factors[k].poset().linear_extension()[digit];
                    let target = fs.perm()[k];
                    let y = fs.witness(k)[x];
                    positions[target][y] * stride[target]
                })
                .sum()
        })
        .collect();
    PosetAutomorphism::new(Arc::new(product), image)
}

/// `prod_j M_{Q_j}(z^{i_j})` over the cycles of the shuffle.
pub fn shuffle_fixed_mobius(fs: &FactorShuffle) -> IntPolynomial {
    fs.cycles()
        .iter()
        .map(|c| mobius_polynomial(&fs.factors()[c.representative()]).substitute_power(c.len()))
        .product()
}

/// Automorphism of `boolean(n)` permuting atoms: atom `k + 1` goes to atom
/// `perm[k] + 1`.
pub fn boolean_automorphism(n: u64, perm: &[usize]) -> Result<PosetAutomorphism> {
    let base = boolean(n)?;
    if perm.len() as u64 != n {
        return Err(Error::InvalidPermutation(format!(
            "{} entries for {n} atoms",
            perm.len()
        )));
    }
    let image = (0..base.len())
        .map(|mask| {
            perm.iter()
                .enumerate()
                .filter(|&(b, _)| mask >> b & 1 == 1)
                .map(|(_, &t)| 1usize << t)
                .sum()
        })
        .collect();
    PosetAutomorphism::new(Arc::new(base), image)
}

/// Automorphism of `divisor_poset(n)` permuting its distinct primes
/// (ascending, by index); primes may only be exchanged with primes of equal
/// multiplicity.
pub fn divisor_automorphism(n: u64, perm: &[usize]) -> Result<PosetAutomorphism> {
    let base = divisor_poset(n)?;
    let factors = factorize(n);
    if perm.len() != factors.len() {
        return Err(Error::InvalidPermutation(format!(
            "{} entries for {} distinct primes",
            perm.len(),
            factors.len()
        )));
    }
    let image = base
        .poset()
        .labels()
        .iter()
        .map(|label| {
            let mut d: u64 = label.parse().expect("divisor labels are integers");
            let mut out = 1u64;
            for (k, &(p, _)) in factors.iter().enumerate() {
                let target = factors
                    .get(perm[k])
                    .ok_or_else(|| Error::InvalidPermutation(format!("{perm:?}")))?
                    .0;
                while d.is_multiple_of(p) {
                    d /= p;
                    out *= target;
                }
            }
            base.poset().index_of(&out.to_string()).ok_or_else(|| {
                Error::InvalidAutomorphism(format!(
                    "prime permutation {perm:?} does not preserve multiplicities of {n}"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    PosetAutomorphism::new(Arc::new(base), image)
}
