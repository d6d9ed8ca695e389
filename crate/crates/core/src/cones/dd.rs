//! Double description: extreme rays of a pointed cone `{y : <a, y> >= 0}`.
//!
//! The same routine converts in both directions. Facet normals of the cone
//! spanned by a set of rays are the extreme rays of its dual cone.

use super::linalg::{
    adjugate, determinant, dot_wide, independent_subset, primitive, to_i64, widen,
};
use crate::error::{Error, Result};

#[derive(Clone)]
struct Ray {
    v: Vec<i128>,
    // indices (into the processed constraint list) on which the ray is tight
    zeros: Vec<u64>,
}

fn bit_set(bits: &mut Vec<u64>, i: usize) {
    let w = i / 64;
    if bits.len() <= w {
        bits.resize(w + 1, 0);
    }
    bits[w] |= 1 << (i % 64);
}

fn intersect(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn is_superset(a: &[u64], b: &[u64]) -> bool {
    b.iter()
        .enumerate()
        .all(|(i, &y)| y & !a.get(i).copied().unwrap_or(0) == 0)
}

fn popcount(a: &[u64]) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

/// Extreme rays of the cone cut out by `constraints`, each primitive, sorted.
///
/// The constraints must have full rank `dim`, i.e. the cone is pointed.
pub(crate) fn extreme_rays(constraints: &[Vec<i64>], dim: usize) -> Result<Vec<Vec<i64>>> {
    if constraints.iter().any(|c| c.len() != dim) {
        return Err(Error::DimensionMismatch(
            dim,
            constraints
                .iter()
                .map(Vec::len)
                .find(|&l| l != dim)
                .unwrap_or(dim),
        ));
    }
    let basis = independent_subset(constraints);
    if basis.len() < dim {
        return Err(Error::NotPointed);
    }

    // Order: the basis first, then the rest in input order.
    let mut order = basis.clone();
    order.extend((0..constraints.len()).filter(|i| !basis.contains(i)));
    let rows: Vec<Vec<i128>> = order.iter().map(|&i| widen(&constraints[i])).collect();

    let b: Vec<Vec<i128>> = rows[..dim].to_vec();
    let det = determinant(&b)?;
    let adj = adjugate(&b)?;
    let sign = det.signum();
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let col: Vec<i128> = (0..dim).map(|i| sign * adj[i][j]).collect();
            let mut zeros = Vec::new();
            for k in 0..dim {
                if k != j {
                    bit_set(&mut zeros, k);
                }
            }
            Ray {
                v: primitive(&col),
                zeros,
            }
        })
        .collect();

    for (k, a) in rows.iter().enumerate().skip(dim) {
        let values: Vec<i128> = rays
            .iter()
            .map(|r| dot_wide(a, &r.v))
            .collect::<Result<_>>()?;
        if values.iter().all(|&s| s >= 0) {
            for (r, &s) in rays.iter_mut().zip(&values) {
                if s == 0 {
                    bit_set(&mut r.zeros, k);
                }
            }
            continue;
        }
        let words = k / 64 + 1;
        for r in rays.iter_mut() {
            r.zeros.resize(words, 0);
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i] < 0).collect();

        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = intersect(&rays[p].zeros, &rays[q].zeros);
                if popcount(&common) + 2 < dim {
                    continue;
                }
                let adjacent = !rays
                    .iter()
                    .enumerate()
                    .any(|(i, r)| i != p && i != q && is_superset(&r.zeros, &common));
                if !adjacent {
                    continue;
                }
                let (sp, sq) = (values[p], -values[q]);
                let combo: Vec<i128> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(&x, &y)| {
                        sp.checked_mul(x)
                            .and_then(|a| sq.checked_mul(y).and_then(|b| a.checked_add(b)))
                            .ok_or(Error::ArithmeticOverflow)
                    })
                    .collect::<Result<_>>()?;
                let mut zeros = common;
                bit_set(&mut zeros, k);
                next.push(Ray {
                    v: primitive(&combo),
                    zeros,
                });
            }
        }
        for (i, r) in rays.into_iter().enumerate() {
            if values[i] >= 0 {
                let mut r = r;
                if values[i] == 0 {
                    bit_set(&mut r.zeros, k);
                }
                next.push(r);
            }
        }
        rays = next;
    }

    let mut out = rays
        .iter()
        .map(|r| to_i64(&r.v))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}
