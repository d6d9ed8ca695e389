//! Minimal Hilbert bases of pointed full-dimensional cones.
//!
//! A placing triangulation over the extreme rays splits the cone into
//! simplicial cones. The lattice points of each half-open fundamental
//! parallelepiped, together with the extreme rays, generate the cone's
//! semigroup; the irreducible ones among them form the Hilbert basis.

use std::collections::{BTreeSet, HashMap};

use super::linalg::{
    adjugate, determinant, dot, dot_wide, hermite_diagonal, independent_subset,
    orthogonal_complement, to_i64, widen,
};
use crate::error::{Error, Result};

/// Placing triangulation of the cone spanned by `rays` (assumed to be its
/// extreme rays, spanning the ambient space). Simplices are index lists.
pub(crate) fn placing_triangulation(rays: &[Vec<i64>]) -> Result<Vec<Vec<usize>>> {
    let dim = rays.first().map_or(0, Vec::len);
    let first = independent_subset(rays);
    if first.len() < dim {
        return Err(Error::NotFullDimensional);
    }
    let mut simplices: Vec<Vec<usize>> = vec![first.clone()];
    for r in (0..rays.len()).filter(|i| !first.contains(i)) {
        // boundary facets: (d-1)-faces used by exactly one simplex
        let mut facet_use: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
        for simplex in &simplices {
            for (skip, &opposite) in simplex.iter().enumerate() {
                let mut facet: Vec<usize> = simplex
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                facet.sort_unstable();
                facet_use
                    .entry(facet)
                    .and_modify(|e| e.0 += 1)
                    .or_insert((1, opposite));
            }
        }
        let mut added = Vec::new();
        let mut boundary: Vec<(Vec<usize>, usize)> = facet_use
            .into_iter()
            .filter(|(_, (count, _))| *count == 1)
            .map(|(f, (_, opp))| (f, opp))
            .collect();
        boundary.sort();
        for (facet, opposite) in boundary {
            let vecs: Vec<Vec<i128>> = facet.iter().map(|&i| widen(&rays[i])).collect();
            let mut normal = orthogonal_complement(&vecs)?;
            if dot_wide(&normal, &widen(&rays[opposite]))? < 0 {
                normal.iter_mut().for_each(|x| *x = -*x);
            }
            if dot_wide(&normal, &widen(&rays[r]))? < 0 {
                let mut s = facet.clone();
                s.push(r);
                added.push(s);
            }
        }
        simplices.extend(added);
    }
    Ok(simplices)
}

/// Nonzero lattice points of `{ sum l_i r_i : 0 <= l_i < 1 }` for a
/// simplicial cone with linearly independent generators `gens`.
pub(crate) fn parallelepiped_points(gens: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let d = gens.len();
    // columns are the generators
    let m: Vec<Vec<i128>> = (0..d)
        .map(|i| (0..d).map(|j| i128::from(gens[j][i])).collect())
        .collect();
    let det = determinant(&m)?;
    if det == 0 {
        return Err(Error::InvalidCone("degenerate simplex".into()));
    }
    let vol = det.abs();
    let adj = adjugate(&m)?;
    let diag = hermite_diagonal(&m)?;
    let mut out = Vec::new();
    let mut c = vec![0i128; d];
    loop {
        if c.iter().any(|&x| x != 0) {
            // coefficients times |det|, reduced into [0, |det|)
            let mut point = vec![0i128; d];
            for (i, adj_row) in adj.iter().enumerate() {
                let lam = dot_wide(adj_row, &c)?
                    .checked_mul(det.signum())
                    .ok_or(Error::ArithmeticOverflow)?;
                let mu = lam.rem_euclid(vol);
                if mu != 0 {
                    for (p, &g) in point.iter_mut().zip(&gens[i]) {
                        *p += mu * i128::from(g);
                    }
                }
            }
            let reduced: Vec<i128> = point.iter().map(|&x| x / vol).collect();
            debug_assert!(point.iter().all(|&x| x % vol == 0));
            out.push(to_i64(&reduced)?);
        }
        // odometer over the box 0 <= c_i < diag_i
        let mut k = 0;
        loop {
            if k == d {
                return Ok(out);
            }
            c[k] += 1;
            if c[k] < diag[k] {
                break;
            }
            c[k] = 0;
            k += 1;
        }
    }
}

/// Minimal Hilbert basis of the pointed full-dimensional cone with the given
/// extreme rays and facet normals. At most `cap` parallelepiped points are
/// enumerated.
pub(crate) fn hilbert_basis(
    rays: &[Vec<i64>],
    facets: &[Vec<i64>],
    cap: u128,
) -> Result<Vec<Vec<i64>>> {
    let simplices = placing_triangulation(rays)?;
    let mut total: u128 = 0;
    let mut simplex_gens = Vec::with_capacity(simplices.len());
    for s in &simplices {
        let gens: Vec<Vec<i64>> = s.iter().map(|&i| rays[i].clone()).collect();
        let cols: Vec<Vec<i128>> = (0..gens.len())
            .map(|i| gens.iter().map(|g| i128::from(g[i])).collect())
            .collect();
        total = total.saturating_add(determinant(&cols)?.unsigned_abs());
        if total > cap {
            return Err(Error::LatticePointCapExceeded { count: total, cap });
        }
        simplex_gens.push(gens);
    }

    let mut candidates: BTreeSet<Vec<i64>> = rays.iter().cloned().collect();
    for gens in &simplex_gens {
        candidates.extend(parallelepiped_points(gens)?);
    }

    // grading positive on the cone minus the origin
    let grading: Vec<i64> = (0..rays[0].len())
        .map(|j| facets.iter().map(|f| f[j]).sum())
        .collect();
    let mut by_degree: Vec<(i128, Vec<i64>)> = candidates
        .into_iter()
        .map(|v| (dot(&grading, &v), v))
        .collect();
    by_degree.sort();

    let in_cone = |v: &[i64]| facets.iter().all(|f| dot(f, v) >= 0);
    let mut basis: Vec<(i128, Vec<i64>)> = Vec::new();
    for (deg, h) in by_degree {
        let reducible = basis.iter().any(|(gdeg, g)| {
            *gdeg < deg && {
                let diff: Vec<i64> = h.iter().zip(g).map(|(a, b)| a - b).collect();
                in_cone(&diff)
            }
        });
        if !reducible {
            basis.push((deg, h));
        }
    }
    Ok(basis.into_iter().map(|(_, v)| v).collect())
}
