//! Exact determinants over the rationals and over the multivariate Laurent
//! ring, Hankel/Toeplitz matrix builders, and a brute-force signed
//! non-intersecting path sum serving as an independent oracle for
//! determinant identities.

use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::multipoly::MultiPoly;
use num::{BigInt, One, Zero};
use std::collections::HashMap;

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquare);
    }
    Ok(n)
}

/// Exact determinant of a rational matrix by fraction-free (Bareiss)
/// elimination.
pub fn det_exact(m: &[Vec<Rat>]) -> Result<Rat> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(Rat::one());
    }
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = Rat::one();
    for p in 0..n - 1 {
        if a[p][p].is_zero() {
            let Some(swap) = (p + 1..n).find(|&i| !a[i][p].is_zero()) else {
                return Ok(Rat::zero());
            };
            a.swap(p, swap);
            sign = -sign;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let v = (&a[p][p] * &a[i][j] - &a[i][p] * &a[p][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[p][p].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign < 0 { -d } else { d })
}

/// Exact determinant of an integer matrix.
pub fn det_int(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let rat_m: Vec<Vec<Rat>> =
        m.iter().map(|row| row.iter().map(|v| Rat::from_integer(v.clone())).collect()).collect();
    let d = det_exact(&rat_m)?;
    debug_assert!(d.is_integer());
    Ok(d.to_integer())
}

/// Exact determinant over the multivariate Laurent ring, by cofactor
/// expansion with memoized minors (no division required).
pub fn det_poly(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    assert!(n <= 16, "cofactor expansion limited to small matrices");
    // minors[mask] = determinant of the submatrix using the rows selected by
    // `mask` and the last popcount(mask) columns... we instead recurse on the
    // leading columns: key = bitmask of remaining rows, column index implied
    // by popcount.
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    fn minor(m: &[Vec<MultiPoly>], n: usize, rows: u32, memo: &mut HashMap<u32, MultiPoly>) -> MultiPoly {
        if rows == 0 {
            return MultiPoly::one();
        }
        if let Some(v) = memo.get(&rows) {
            return v.clone();
        }
        let col = n - rows.count_ones() as usize;
        let mut acc = MultiPoly::zero();
        let mut sign = false;
        for i in 0..n {
            if rows & (1 << i) == 0 {
                continue;
            }
            let entry = &m[i][col];
            if !entry.is_zero() {
                let sub = minor(m, n, rows & !(1 << i), memo);
                let term = entry.mul(&sub);
                acc = if sign { acc.sub(&term) } else { acc.add(&term) };
            }
            sign = !sign;
        }
        memo.insert(rows, acc.clone());
        acc
    }
    Ok(minor(m, n, (1u32 << n) - 1, &mut memo))
}

/// Builds an n×n matrix from an entry function.
pub fn build_matrix<T>(n: usize, f: impl Fn(usize, usize) -> T) -> Vec<Vec<T>> {
    (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect()
}

/// Hankel matrix (f(i + j))_{0 <= i, j < n}.
pub fn hankel<T>(n: usize, f: impl Fn(usize) -> T) -> Vec<Vec<T>> {
    build_matrix(n, |i, j| f(i + j))
}

/// Toeplitz matrix (f(j - i))_{0 <= i, j < n}.
pub fn toeplitz<T>(n: usize, f: impl Fn(i64) -> T) -> Vec<Vec<T>> {
    build_matrix(n, |i, j| f(j as i64 - i as i64))
}

/// All lattice paths from `from` to `to` with unit steps right-up/right-down
/// (plus right-level steps if `level`), heights within [0, k]; each path is
/// returned as its full list of lattice points.
fn lattice_paths(
    from: (i64, i64),
    to: (i64, i64),
    k: i64,
    level: bool,
) -> Vec<Vec<(i64, i64)>> {
    let mut out = Vec::new();
    if from.1 < 0 || from.1 > k {
        return out;
    }
    let mut stack = vec![vec![from]];
    while let Some(points) = stack.pop() {
        let &(x, y) = points.last().unwrap();
        if x == to.0 {
            if y == to.1 {
                out.push(points);
            }
            continue;
        }
        let mut deltas = vec![1i64, -1];
        if level {
            deltas.push(0);
        }
        for dy in deltas {
            let ny = y + dy;
            // Prune: must still be able to reach the endpoint.
            if ny < 0 || ny > k || (ny - to.1).abs() > to.0 - x - 1 {
                continue;
            }
            let mut next = points.clone();
            next.push((x + 1, ny));
            stack.push(next);
        }
    }
    out
}

/// Number of bounded lattice paths between two points (level steps optional).
pub fn lattice_path_count(from: (i64, i64), to: (i64, i64), k: i64, level: bool) -> BigInt {
    BigInt::from(lattice_paths(from, to, k, level).len())
}

/// Signed sum over endpoint permutations of the number of pairwise
/// vertex-disjoint path tuples: Σ_σ sgn(σ) · #{(p_i): p_i from starts[i] to
/// ends[σ(i)], no two sharing a lattice point}. Equals the determinant of
/// single-path counts.
pub fn lgv_signed_sum(
    starts: &[(i64, i64)],
    ends: &[(i64, i64)],
    k: i64,
    level: bool,
) -> Result<BigInt> {
    let n = starts.len();
    if ends.len() != n {
        return Err(Error::NonSquare);
    }
    let mut total = BigInt::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let sign = permutation_sign(&perm);
        let mut count = BigInt::zero();
        count_disjoint_tuples(starts, ends, &perm, k, level, 0, &mut Vec::new(), &mut count);
        total += if sign { -count } else { count };
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(total)
}

fn permutation_sign(perm: &[usize]) -> bool {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

fn count_disjoint_tuples(
    starts: &[(i64, i64)],
    ends: &[(i64, i64)],
    perm: &[usize],
    k: i64,
    level: bool,
    idx: usize,
    used: &mut Vec<Vec<(i64, i64)>>,
    count: &mut BigInt,
) {
    if idx == starts.len() {
        *count += 1;
        return;
    }
    for path in lattice_paths(starts[idx], ends[perm[idx]], k, level) {
        let disjoint = used
            .iter()
            .all(|other| !other.iter().any(|pt| path.contains(pt)));
        if disjoint {
            used.push(path);
            count_disjoint_tuples(starts, ends, perm, k, level, idx + 1, used, count);
            used.pop();
        }
    }
}
