//! Finite posets, (generalized) rank functions, automorphisms and the
//! interval recursion for the Möbius function.
//!
//! Elements are identified by label. Internally each element has an index
//! fixed by input order; the linear extension is the topological order of the
//! cover graph with ties broken by that index, so it is fully determined by
//! the input.

mod automorphism;
mod isomorphism;
mod rank;

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use automorphism::PosetAutomorphism;
pub use isomorphism::is_isomorphic;
pub use rank::{infer_ranks, validate, Diagnostic, RankAssignment, RankKind, RankedPoset};

/// A finite partial order on labeled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    // up[i] contains j iff i <= j
    up: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
    linext: Vec<usize>,
}

/// Builds a poset from its labels and a set of generating relations
/// `lower < upper`.
///
/// The relations need not be the exact cover relations; the order is their
/// reflexive-transitive closure and the Hasse covers are recomputed.
pub fn closure_from_covers<L, A, B>(labels: &[L], covers: &[(A, B)]) -> Result<Poset>
where
    L: AsRef<str>,
    A: AsRef<str>,
    B: AsRef<str>,
{
    let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
    let index = index_labels(&labels)?;
    let lookup = |l: &str| {
        index
            .get(l)
            .copied()
            .ok_or_else(|| Error::UnknownElement(l.to_owned()))
    };
    let edges = covers
        .iter()
        .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
        .collect::<Result<Vec<_>>>()?;
    Poset::from_index_covers(labels, &edges)
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    if labels.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateElement(l.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Like [`closure_from_covers`], with relations given by element index.
    pub fn from_index_covers(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Poset> {
        let index = index_labels(&labels)?;
        let n = labels.len();
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::UnknownElement(format!("#{}", a.max(b))));
        }

        let mut succ = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::Cycle(vec![labels[a].clone(), labels[a].clone()]));
            }
            succ[a].push(b);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }

        let linext = match topological_order(&succ) {
            Ok(order) => order,
            Err(remaining) => {
                let witness = find_cycle(&succ, &remaining)
                    .into_iter()
                    .map(|i| labels[i].clone())
                    .collect();
                return Err(Error::Cycle(witness));
            }
        };

        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &i in linext.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(i);
            for &j in &succ[i] {
                set.union_with(&up[j]);
            }
            up[i] = set;
        }

        // An edge i -> j is a cover iff j is not above another successor of i.
        let mut covers = Vec::new();
        for (i, s) in succ.iter().enumerate() {
            for &j in s {
                if !s.iter().any(|&k| k != j && up[k].contains(j)) {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();

        Ok(Poset {
            labels,
            index,
            up,
            covers,
            linext,
        })
    }

    /// Builds a poset from an explicit order relation `leq[i][j]`.
    ///
    /// The relation must be reflexive, antisymmetric and transitive.
    pub fn from_relation(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        let index = index_labels(&labels)?;
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, set) in up.iter_mut().enumerate() {
            for j in 0..n {
                if leq(i, j) {
                    set.insert(j);
                }
            }
            if !set.contains(i) {
                return Err(Error::OutOfRange(format!(
                    "order relation is not reflexive at `{}`",
                    labels[i]
                )));
            }
        }
        for i in 0..n {
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(Error::Cycle(vec![
                        labels[i].clone(),
                        labels[j].clone(),
                        labels[i].clone(),
                    ]));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::OutOfRange(format!(
                        "order relation is not transitive above `{}` <= `{}`",
                        labels[i], labels[j]
                    )));
                }
            }
        }

        let mut covers = Vec::new();
        for i in 0..n {
            for j in up[i].ones() {
                if j == i {
                    continue;
                }
                let between = up[i].ones().any(|k| k != i && k != j && up[k].contains(j));
                if !between {
                    covers.push((i, j));
                }
            }
        }
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in &covers {
            succ[a].push(b);
        }
        let linext = topological_order(&succ).expect("antisymmetric relation has no cycles");

        Ok(Poset {
            labels,
            index,
            up,
            covers,
            linext,
        })
    }

    /// The subposet on `keep` (element indices, in the order given), with the
    /// order restricted from `self`.
    pub fn induced(&self, keep: &[usize]) -> Result<Poset> {
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        Poset::from_relation(labels, |a, b| self.leq(keep[a], keep[b]))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub(crate) fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownElement(label.to_owned()))
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Elements `j` with `i <= j`, in index order.
    pub fn up_set(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[i].ones()
    }

    /// Hasse covers `(lower, upper)` sorted by index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn linear_extension(&self) -> &[usize] {
        &self.linext
    }

    /// Number of pairs `(p, q)` with `p <= q`.
    pub fn comparable_pairs(&self) -> usize {
        self.up.iter().map(|s| s.count_ones(..)).sum()
    }

    pub fn is_minimal(&self, i: usize) -> bool {
        (0..self.len()).all(|j| j == i || !self.leq(j, i))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let mut has_lower = vec![false; self.len()];
        for &(_, b) in &self.covers {
            has_lower[b] = true;
        }
        (0..self.len()).filter(|&i| !has_lower[i]).collect()
    }

    pub(crate) fn up_bits(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }
}

/// Kahn's algorithm, always taking the smallest available index. Returns the
/// indices left over when the graph has a cycle.
fn topological_order(succ: &[Vec<usize>]) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let n = succ.len();
    let mut indegree = vec![0usize; n];
    for s in succ {
        for &j in s {
            indegree[j] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&i| indegree[i] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(i)) = ready.pop() {
        order.push(i);
        for &j in &succ[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.push(Reverse(j));
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err((0..n).filter(|&i| indegree[i] > 0).collect())
    }
}

/// Every node left over by Kahn's algorithm has a predecessor among the
/// leftovers, so walking predecessors from any of them must revisit a node.
fn find_cycle(succ: &[Vec<usize>], remaining: &[usize]) -> Vec<usize> {
    let n = succ.len();
    let mut alive = vec![false; n];
    for &i in remaining {
        alive[i] = true;
    }
    let mut pred: Vec<Option<usize>> = vec![None; n];
    for (i, s) in succ.iter().enumerate() {
        if alive[i] {
            for &j in s {
                if alive[j] && pred[j].is_none() {
                    pred[j] = Some(i);
                }
            }
        }
    }
    let mut seen = vec![usize::MAX; n];
    let mut path = Vec::new();
    let mut cur = remaining[0];
    while seen[cur] == usize::MAX {
        seen[cur] = path.len();
        path.push(cur);
        cur = pred[cur].expect("leftover node has a leftover predecessor");
    }
    let mut cycle: Vec<usize> = path[seen[cur]..].to_vec();
    cycle.reverse();
    cycle.push(cycle[0]);
    cycle
}

/// Möbius function values `mu(p, q)` for a fixed `p` and every `q`, computed
/// by the interval recursion `mu(p,p) = 1`, `mu(p,q) = -sum_{p<=r<q} mu(p,r)`.
pub fn mobius_row(poset: &Poset, p: usize) -> Vec<i64> {
    let mut row = vec![0i64; poset.len()];
    for &q in poset.linear_extension() {
        if !poset.leq(p, q) {
            continue;
        }
        row[q] = if q == p {
            1
        } else {
            -poset
                .up_set(p)
                .filter(|&r| r != q && poset.leq(r, q))
                .map(|r| row[r])
                .sum::<i64>()
        };
    }
    row
}

/// `mu(p, q)` by the interval recursion; zero when `p` is not below `q`.
pub fn mobius_recursive(poset: &Poset, p: &str, q: &str) -> Result<i64> {
    let p = poset.require(p)?;
    let q = poset.require(q)?;
    Ok(mobius_row(poset, p)[q])
}
