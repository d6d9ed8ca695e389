//! Random generators and brute-force oracles shared by the integration
//! tests and the acceptance harness.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use monideal::digraphs::WeightedDigraph;
use monideal::{MonomialIdeal, PolyContext};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(&PolyContext::new(n).unwrap(), rows).unwrap()
}

/// Proper nonzero ideal with `1..=max_gens` generators and no unit generator.
pub fn random_ideal<R: Rng>(rng: &mut R, n: usize, max_exp: u32, max_gens: usize) -> MonomialIdeal {
    let ctx = PolyContext::new(n).unwrap();
    loop {
        let count = rng.gen_range(1..=max_gens);
        let rows: Vec<Vec<u32>> = (0..count)
            .map(|_| (0..n).map(|_| rng.gen_range(0..=max_exp)).collect())
            .filter(|r: &Vec<u32>| r.iter().any(|&e| e > 0))
            .collect();
        if rows.is_empty() {
            continue;
        }
        let refs: Vec<&[u32]> = rows.iter().map(Vec::as_slice).collect();
        return MonomialIdeal::from_exponents(&ctx, &refs).unwrap();
    }
}

fn weights<R: Rng>(rng: &mut R, n: usize, max_w: u32) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(1..=max_w)).collect()
}

/// Random oriented graph with at least one arc.
pub fn random_digraph<R: Rng>(rng: &mut R, max_n: usize, max_w: u32) -> WeightedDigraph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let mut arcs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                match rng.gen_range(0..3) {
                    0 => arcs.push((i, j)),
                    1 => arcs.push((j, i)),
                    _ => {}
                }
            }
        }
        if arcs.is_empty() {
            continue;
        }
        return WeightedDigraph::with_default_names(weights(rng, n, max_w), arcs).unwrap();
    }
}

/// Random transitive orientation: the transitive closure of a random DAG.
pub fn random_transitive<R: Rng>(rng: &mut R, max_n: usize, max_w: u32) -> WeightedDigraph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut reach = vec![vec![false; n]; n];
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(0.4) {
                    reach[order[a]][order[b]] = true;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        let arcs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| reach[i][j])
            .collect();
        if arcs.is_empty() {
            continue;
        }
        return WeightedDigraph::with_default_names(weights(rng, n, max_w), arcs).unwrap();
    }
}

/// Random oriented forest without isolated vertices.
pub fn random_forest<R: Rng>(rng: &mut R, max_n: usize, max_w: u32) -> WeightedDigraph {
    let n = rng.gen_range(2..=max_n);
    let mut arcs = Vec::new();
    let mut start = 0;
    while start < n {
        // tree sizes of at least 2; a trailing single vertex joins the last tree
        let mut size = rng.gen_range(2..=n - start).min(n - start);
        if n - start - size == 1 {
            size += 1;
        }
        for v in start + 1..start + size {
            let parent = rng.gen_range(start..v);
            arcs.push(if rng.gen_bool(0.5) {
                (parent, v)
            } else {
                (v, parent)
            });
        }
        start += size;
    }
    WeightedDigraph::with_default_names(weights(rng, n, max_w), arcs).unwrap()
}

/// Random pointed full-dimensional cone: every ray has last coordinate >= 1.
pub fn random_pointed_rays<R: Rng>(rng: &mut R, dim: usize, max_entry: i64) -> Vec<Vec<i64>> {
    loop {
        let count = rng.gen_range(dim..=dim + 2);
        let rays: Vec<Vec<i64>> = (0..count)
            .map(|_| {
                let mut r: Vec<i64> = (0..dim - 1)
                    .map(|_| rng.gen_range(-max_entry..=max_entry))
                    .collect();
                r.push(rng.gen_range(1..=max_entry));
                r
            })
            .collect();
        if rank(&rays) == dim {
            return rays;
        }
    }
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - *y * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Membership in the cone spanned by `rays` (full-dimensional), by
/// Carathéodory: some basis of rays expresses `v` with nonnegative
/// coefficients, found with Cramer's rule.
pub fn in_cone_by_rays(rays: &[Vec<i64>], v: &[i64]) -> bool {
    let d = v.len();
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    subsets(rays.len(), d).into_iter().any(|s| {
        // columns are the chosen rays
        let m: Vec<Vec<i128>> = (0..d)
            .map(|i| s.iter().map(|&j| rays[j][i] as i128).collect())
            .collect();
        let full = det(&m);
        if full == 0 {
            return false;
        }
        (0..d).all(|c| {
            let mut mc = m.clone();
            for (i, row) in mc.iter_mut().enumerate() {
                row[c] = v[i] as i128;
            }
            let dc = det(&mc);
            dc == 0 || (dc > 0) == (full > 0)
        })
    })
}

/// Whether `target` is a sum of elements of `gens`, each with positive
/// last coordinate. `memo` is keyed by the remaining vector.
pub fn representable(
    gens: &[Vec<i64>],
    target: &[i64],
    memo: &mut HashMap<Vec<i64>, bool>,
) -> bool {
    if target.iter().all(|&x| x == 0) {
        return true;
    }
    if *target.last().unwrap() <= 0 {
        return false;
    }
    if let Some(&r) = memo.get(target) {
        return r;
    }
    let r = gens.iter().any(|g| {
        let rest: Vec<i64> = target.iter().zip(g).map(|(a, b)| a - b).collect();
        representable(gens, &rest, memo)
    });
    memo.insert(target.to_vec(), r);
    r
}

/// Membership of the monomial `exps` in `ideal`, by divisibility.
pub fn member(ideal: &MonomialIdeal, exps: &[u32]) -> bool {
    ideal
        .generators()
        .iter()
        .any(|g| g.exponents().iter().zip(exps).all(|(a, b)| a <= b))
}

/// Exponent vectors with entries in `0..=bound`.
pub fn box_points(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=bound).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

/// Irreducible decomposition by exhaustion: the inclusion-minimal
/// irreducible ideals `(x_i^{b_i})` with `b_i <= max exponent of x_i` that
/// contain `ideal`, as dense exponent vectors (0 = variable absent).
pub fn brute_irreducibles(ideal: &MonomialIdeal) -> BTreeSet<Vec<u32>> {
    let maxes = ideal.max_exponents();
    let n = maxes.len();
    let mut candidates = vec![vec![]];
    for &m in &maxes {
        candidates = candidates
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=m).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    let contains_ideal = |b: &Vec<u32>| {
        b.iter().any(|&e| e > 0)
            && ideal
                .generators()
                .iter()
                .all(|g| (0..n).any(|i| b[i] > 0 && g.exponent(i) >= b[i]))
    };
    // a ⊆ b iff every pure power of a lies in b
    let sub = |a: &Vec<u32>, b: &Vec<u32>| (0..n).all(|i| a[i] == 0 || (b[i] > 0 && b[i] <= a[i]));
    let containing: Vec<Vec<u32>> = candidates.into_iter().filter(contains_ideal).collect();
    containing
        .iter()
        .filter(|a| !containing.iter().any(|b| b != *a && sub(b, a)))
        .cloned()
        .collect()
}

/// Dense exponent vectors of a decomposition.
pub fn component_set(
    d: &monideal::decomposition::Decomposition<monideal::decomposition::IrreducibleIdeal>,
) -> BTreeSet<Vec<u32>> {
    d.iter().map(|c| c.dense_exponents().to_vec()).collect()
}

/// Vertex covers of the underlying graph that are minimal, by exhaustion.
pub fn brute_minimal_covers(n: usize, edges: &[(usize, usize)]) -> BTreeSet<Vec<usize>> {
    let covers: Vec<u32> = (0u32..1 << n)
        .filter(|m| {
            edges
                .iter()
                .all(|&(i, j)| m >> i & 1 == 1 || m >> j & 1 == 1)
        })
        .collect();
    covers
        .iter()
        .filter(|&&m| !covers.iter().any(|&c| c != m && c & m == c))
        .map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect()
}

pub fn context(n: usize) -> Arc<PolyContext> {
    PolyContext::new(n).unwrap()
}
