//! Small exact integer linear algebra over `i128`.

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Divide by the content; the zero vector is returned unchanged.
pub(crate) fn primitive(v: &[i128]) -> Vec<i128> {
    let g = v.iter().fold(0, |acc, &x| gcd(acc, x));
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|&x| x / g).collect()
    }
}

pub(crate) fn to_i64(v: &[i128]) -> Result<Vec<i64>> {
    v.iter()
        .map(|&x| i64::try_from(x).map_err(|_| Error::ArithmeticOverflow))
        .collect()
}

pub(crate) fn widen(v: &[i64]) -> Vec<i128> {
    v.iter().map(|&x| i128::from(x)).collect()
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| i128::from(x) * i128::from(y))
        .sum()
}

pub(crate) fn dot_wide(a: &[i128], b: &[i128]) -> Result<i128> {
    a.iter().zip(b).try_fold(0i128, |acc, (&x, &y)| {
        x.checked_mul(y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::ArithmeticOverflow)
    })
}

/// Rank of a list of row vectors.
pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| widen(r)).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = *x * pivot[c] - f * y;
                }
                let reduced = primitive(row);
                *row = reduced;
            }
        }
        rank += 1;
    }
    rank
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in order.
pub(crate) fn independent_subset(rows: &[Vec<i64>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut current: Vec<Vec<i64>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        current.push(r.clone());
        if rank(&current) == current.len() {
            chosen.push(i);
        } else {
            current.pop();
        }
    }
    chosen
}

/// Determinant by fraction-free Bareiss elimination.
pub(crate) fn determinant(mat: &[Vec<i128>]) -> Result<i128> {
    let n = mat.len();
    if n == 0 {
        return Ok(1);
    }
    let mut m = mat.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return Ok(0);
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j]
                    .checked_mul(m[k][k])
                    .ok_or(Error::ArithmeticOverflow)?;
                let b = m[i][k]
                    .checked_mul(m[k][j])
                    .ok_or(Error::ArithmeticOverflow)?;
                m[i][j] = (a - b) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

fn minor(mat: &[Vec<i128>], skip_row: usize, skip_col: usize) -> Vec<Vec<i128>> {
    mat.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Adjugate matrix: `mat * adj = det * I`.
pub(crate) fn adjugate(mat: &[Vec<i128>]) -> Result<Vec<Vec<i128>>> {
    let n = mat.len();
    if n == 1 {
        return Ok(vec![vec![1]]);
    }
    // adj[j][i] is the (i, j) cofactor
    (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let c = determinant(&minor(mat, i, j))?;
                    Ok(if (i + j) % 2 == 0 { c } else { -c })
                })
                .collect()
        })
        .collect()
}

/// A nonzero vector orthogonal to `d - 1` linearly independent vectors in
/// dimension `d` (generalized cross product).
pub(crate) fn orthogonal_complement(rows: &[Vec<i128>]) -> Result<Vec<i128>> {
    let d = rows.len() + 1;
    let mut out = Vec::with_capacity(d);
    for j in 0..d {
        let sub: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let c = determinant(&sub)?;
        out.push(if j % 2 == 0 { c } else { -c });
    }
    Ok(primitive(&out))
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.signum() * a, a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        // a = q*b + r with r = a.rem_euclid(b)
        let q = (a - a.rem_euclid(b)) / b;
        (g, y, x - q * y)
    }
}

/// Diagonal of a lower-triangular column Hermite form of a nonsingular
/// square matrix; the diagonal entries are positive and multiply to `|det|`.
pub(crate) fn hermite_diagonal(mat: &[Vec<i128>]) -> Result<Vec<i128>> {
    let n = mat.len();
    let mut m = mat.to_vec();
    let mut diag = Vec::with_capacity(n);
    for i in 0..n {
        for j in i + 1..n {
            if m[i][j] == 0 {
                continue;
            }
            let a = m[i][i];
            let b = m[i][j];
            let (g, x, y) = ext_gcd(a, b);
            let (ca, cb) = (a / g, b / g);
            for row in m.iter_mut() {
                let ci = row[i];
                let cj = row[j];
                let new_i = x
                    .checked_mul(ci)
                    .and_then(|p| y.checked_mul(cj).and_then(|q| p.checked_add(q)))
                    .ok_or(Error::ArithmeticOverflow)?;
                let new_j = cb
                    .checked_mul(ci)
                    .and_then(|p| ca.checked_mul(cj).and_then(|q| q.checked_sub(p)))
                    .ok_or(Error::ArithmeticOverflow)?;
                row[i] = new_i;
                row[j] = new_j;
            }
        }
        if m[i][i] == 0 {
            return Err(Error::InvalidCone("singular simplicial cone".into()));
        }
        diag.push(m[i][i].abs());
    }
    Ok(diag)
}
