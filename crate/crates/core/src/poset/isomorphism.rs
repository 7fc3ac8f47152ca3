use super::RankedPoset;

// rank, lower covers, upper covers, |down-set|, |up-set|
type Profile = (u32, usize, usize, usize, usize);

fn profiles(p: &RankedPoset) -> Vec<Profile> {
    let poset = p.poset();
    let n = poset.len();
    let mut lower = vec![0; n];
    let mut upper = vec![0; n];
    for &(a, b) in poset.covers() {
        upper[a] += 1;
        lower[b] += 1;
    }
    let mut down = vec![0; n];
    for i in 0..n {
        for j in poset.up_set(i) {
            down[j] += 1;
        }
    }
    (0..n)
        .map(|i| {
            let up = poset.up_bits(i).count_ones(..);
            (p.rank(i), lower[i], upper[i], down[i], up)
        })
        .collect()
}

/// Searches for a rank-preserving order isomorphism `a -> b`.
///
/// Returns the witness map by element index. Backtracking over `a` in
/// linear-extension order, with candidates pruned by rank and degree profile.
pub fn is_isomorphic(a: &RankedPoset, b: &RankedPoset) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || a.poset().covers().len() != b.poset().covers().len() {
        return None;
    }
    let pa = profiles(a);
    let pb = profiles(b);
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }

    let order = a.poset().linear_extension().to_vec();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| pa[i] == pb[j]).collect())
        .collect();

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &order, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    a: &RankedPoset,
    b: &RankedPoset,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    let (pa, pb) = (a.poset(), b.poset());
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let v = map[u];
            pa.leq(u, x) == pb.leq(v, y) && pa.leq(x, u) == pb.leq(y, v)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(a, b, order, candidates, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}
