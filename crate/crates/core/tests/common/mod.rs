#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;
use poset_mobius::poset::{closure_from_covers, infer_ranks, mobius_row};
use poset_mobius::{IntPolynomial, RankAssignment, RankKind, RankedPoset};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

/// A random generalized ranked poset with 1..=max_size elements. About half
/// of them get ranks that jump across some covers.
pub fn random_poset(rng: &mut impl Rng, max_size: usize) -> RankedPoset {
    let n = rng.gen_range(1..=max_size);
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let density = rng.gen_range(0.15..0.6);
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                covers.push((labels[order[i]].clone(), labels[order[j]].clone()));
            }
        }
    }
    let poset = closure_from_covers(&labels, &covers).unwrap();
    let ranks = if rng.gen_bool(0.5) {
        infer_ranks(&poset)
    } else {
        let mut ranks = vec![0u32; n];
        let mut lower = vec![Vec::new(); n];
        for &(a, b) in poset.covers() {
            lower[b].push(a);
        }
        for &i in poset.linear_extension() {
            ranks[i] = lower[i]
                .iter()
                .map(|&a| ranks[a] + rng.gen_range(1..=3))
                .max()
                .unwrap_or(0);
        }
        RankAssignment::new(ranks, RankKind::Generalized)
    };
    RankedPoset::new(poset, ranks).unwrap()
}

/// `sum_{p<=q} mu(p,q) z^(rank q - rank p)` with `mu` from the interval
/// recursion.
pub fn mobius_polynomial_by_recursion(poset: &RankedPoset) -> IntPolynomial {
    let p = poset.poset();
    let mut total = IntPolynomial::zero();
    for a in 0..p.len() {
        let row = mobius_row(p, a);
        for b in p.up_set(a) {
            total += &IntPolynomial::monomial(row[b], (poset.rank(b) - poset.rank(a)) as usize);
        }
    }
    total
}

/// Power-series long division `num / den` for `den(0) = 1`: repeatedly take
/// the leading remainder coefficient and subtract that multiple of the
/// shifted denominator.
pub fn long_division(num: &IntPolynomial, den: &IntPolynomial, terms: usize) -> Vec<BigInt> {
    assert_eq!(den.coeff(0), BigInt::from(1));
    let mut rem: Vec<BigInt> = (0..terms + den.coeffs().len())
        .map(|i| num.coeff(i))
        .collect();
    let mut out = Vec::with_capacity(terms);
    for m in 0..terms {
        let q = rem[m].clone();
        if !q.is_zero() {
            for (j, d) in den.coeffs().iter().enumerate() {
                rem[m + j] -= &q * d;
            }
        }
        out.push(q);
    }
    out
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().copied().map(BigInt::from).collect()
}

/// Number of pairs `p < q` whose ranks differ by exactly one.
pub fn gap_one_pairs(poset: &RankedPoset) -> usize {
    let p = poset.poset();
    (0..p.len())
        .map(|a| {
            p.up_set(a)
                .filter(|&b| b != a && poset.rank(b) == poset.rank(a) + 1)
                .count()
        })
        .sum()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
