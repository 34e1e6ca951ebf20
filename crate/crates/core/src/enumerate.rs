//! Codeword enumeration and randomized low-weight search for linear codes
//! given by generator rows over GF(q).
//!
//! Binary codes use bit-packed rows; other fields enumerate GF(p)-linear
//! combinations of the rows scaled by a GF(p)-basis of GF(q), walking a
//! modular p-ary Gray code so each step adds a single basis vector.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::field::BaseField;

/// Messages per parallel work unit.
const CHUNK: u64 = 1 << 14;

/// Weight histogram of the span of `rows` (each of length `n`). The caller
/// guarantees that `q^rows.len()` fits the enumeration budget.
pub(crate) fn weight_histogram(field: &BaseField, rows: &[Vec<u64>], n: usize) -> Vec<u64> {
    if rows.is_empty() {
        let mut h = vec![0; n + 1];
        h[0] = 1;
        return h;
    }
    if field.q() == 2 {
        binary_histogram(rows, n)
    } else {
        qary_histogram(field, rows, n)
    }
}

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn pack(row: &[u64], words: usize) -> Vec<u64> {
    let mut out = vec![0u64; words];
    for (i, &c) in row.iter().enumerate() {
        if c != 0 {
            out[i / 64] |= 1 << (i % 64);
        }
    }
    out
}

fn binary_histogram(rows: &[Vec<u64>], n: usize) -> Vec<u64> {
    let words = n.div_ceil(64);
    let packed: Vec<Vec<u64>> = rows.iter().map(|r| pack(r, words)).collect();
    let k = rows.len() as u32;
    let total = 1u64 << k;
    (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut hist = vec![0u64; n + 1];
            let gray = start ^ (start >> 1);
            let mut cw = vec![0u64; words];
            for (j, row) in packed.iter().enumerate() {
                if gray >> j & 1 == 1 {
                    for (w, r) in cw.iter_mut().zip(row) {
                        *w ^= r;
                    }
                }
            }
            hist[popcount(&cw)] += 1;
            for idx in start + 1..end {
                let row = &packed[idx.trailing_zeros() as usize];
                for (w, r) in cw.iter_mut().zip(row) {
                    *w ^= r;
                }
                hist[popcount(&cw)] += 1;
            }
            hist
        })
        .reduce(|| vec![0u64; n + 1], merge)
}

#[inline]
fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Sparse vector: (position, nonzero symbol).
type Sparse = Vec<(usize, u64)>;

fn qary_histogram(field: &BaseField, rows: &[Vec<u64>], n: usize) -> Vec<u64> {
    let p = field.p();
    // GF(p)-basis of the span: u^t · row_j, where u^t has encoding p^t.
    let mut basis: Vec<Sparse> = Vec::new();
    for row in rows {
        for t in 0..field.s() {
            let scalar = p.pow(t);
            basis.push(
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i, field.mul(c, scalar)))
                    .collect(),
            );
        }
    }
    let digits = basis.len() as u32;
    let total = p.pow(digits);
    (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut hist = vec![0u64; n + 1];
            let mut cw = vec![0u64; n];
            // Gray digits g_i = (d_i − d_{i+1}) mod p of the starting index.
            let mut d = Vec::with_capacity(digits as usize + 1);
            let mut rest = start;
            for _ in 0..=digits {
                d.push(rest % p);
                rest /= p;
            }
            for (i, b) in basis.iter().enumerate() {
                let g = (d[i] + p - d[i + 1]) % p;
                if g == 0 {
                    continue;
                }
                for &(pos, sym) in b {
                    cw[pos] = field.add(cw[pos], field.mul(sym, g));
                }
            }
            let mut weight = cw.iter().filter(|&&x| x != 0).count();
            hist[weight] += 1;
            for idx in start..end - 1 {
                // Going from idx to idx + 1 raises the Gray digit at the
                // position of the lowest non-(p−1) digit of idx.
                let mut j = 0;
                let mut x = idx;
                while x % p == p - 1 {
                    x /= p;
                    j += 1;
                }
                for &(pos, sym) in &basis[j] {
                    let old = cw[pos];
                    let new = field.add(old, sym);
                    cw[pos] = new;
                    weight = weight + usize::from(new != 0) - usize::from(old != 0);
                }
                hist[weight] += 1;
            }
            hist
        })
        .reduce(|| vec![0u64; n + 1], merge)
}

/// Outcome of a randomized low-weight search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct SearchOutcome {
    /// Smallest nonzero weight seen, if any codeword was examined.
    pub best: Option<usize>,
    pub examined: u64,
}

/// Iterations run in parallel between early-exit checks.
const BATCH: u64 = 32;

/// Randomized information-set search (Lee–Brickell with two rows) for a
/// nonzero codeword of small weight. Deterministic for a given seed.
/// Stops once `target` is reached or `budget` codewords have been examined.
pub(crate) fn low_weight_search(
    field: &BaseField,
    rows: &[Vec<u64>],
    n: usize,
    budget: u64,
    target: usize,
    seed: u64,
) -> SearchOutcome {
    let k = rows.len() as u64;
    if k == 0 {
        return SearchOutcome {
            best: None,
            examined: 0,
        };
    }
    let q = field.q();
    let per_iter = k + k * (k - 1) / 2 * (q - 1);
    let iterations = (budget / per_iter).max(1);
    let mut best: Option<usize> = None;
    let mut examined = 0u64;
    let mut it = 0u64;
    while it < iterations {
        let batch_end = (it + BATCH).min(iterations);
        let found = (it..batch_end)
            .into_par_iter()
            .map(|i| {
                let mut rng =
                    ChaCha8Rng::seed_from_u64(seed ^ i.wrapping_mul(0x9E37_79B9_7F4A_7C15));
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                if q == 2 {
                    binary_iteration(rows, n, &perm)
                } else {
                    qary_iteration(field, rows, n, &perm)
                }
            })
            .reduce(|| usize::MAX, usize::min);
        examined += (batch_end - it) * per_iter;
        it = batch_end;
        if found != usize::MAX {
            best = Some(best.map_or(found, |b| b.min(found)));
        }
        if best.is_some_and(|b| b <= target) {
            break;
        }
    }
    SearchOutcome { best, examined }
}

/// Row-reduces the column-permuted generator matrix and returns the smallest
/// weight among the reduced rows and their pairwise sums.
fn binary_iteration(rows: &[Vec<u64>], n: usize, perm: &[usize]) -> usize {
    let words = n.div_ceil(64);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let permuted: Vec<u64> = perm.iter().map(|&c| r[c]).collect();
            pack(&permuted, words)
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        if rank == m.len() {
            break;
        }
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][w] & b != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[w] & b != 0 {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    let mut best = usize::MAX;
    for (i, a) in m.iter().enumerate() {
        best = best.min(popcount(a));
        for b in &m[i + 1..] {
            let w: usize = a
                .iter()
                .zip(b)
                .map(|(x, y)| (x ^ y).count_ones() as usize)
                .sum();
            best = best.min(w);
        }
    }
    best
}

fn qary_iteration(field: &BaseField, rows: &[Vec<u64>], n: usize, perm: &[usize]) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| perm.iter().map(|&c| r[c]).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n {
        if rank == m.len() {
            break;
        }
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = field.inv(m[rank][col]).expect("nonzero pivot");
        for x in m[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            let c = row[col];
            if r != rank && c != 0 {
                let nc = field.neg(c);
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.add(*x, field.mul(nc, y));
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    let weight = |v: &[u64]| v.iter().filter(|&&x| x != 0).count();
    let mut best = usize::MAX;
    let scalars: Vec<u64> = (1..field.q()).collect();
    for (i, a) in m.iter().enumerate() {
        best = best.min(weight(a));
        for b in &m[i + 1..] {
            for &c in &scalars {
                let w = a
                    .iter()
                    .zip(b)
                    .filter(|(&x, &y)| field.add(x, field.mul(c, y)) != 0)
                    .count();
                best = best.min(w);
            }
        }
    }
    best
}
