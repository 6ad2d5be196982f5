// Naive GF(p) helpers shared by the integration tests. Nothing here calls
// into the library, so the tests can use it as an independent reference.
#![allow(dead_code)]

use std::collections::HashSet;

pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is tiny in tests.
    let mut r = 1u64;
    for _ in 0..p - 2 {
        r = r * a % p;
    }
    r
}

pub fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    assert!(!b.is_empty());
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        r = trim(r);
    }
    r
}

pub fn divides(a: &[u64], b: &[u64], p: u64) -> bool {
    poly_rem(b, a, p).is_empty()
}

/// Every monic polynomial of exactly degree `d`.
pub fn monics(p: u64, d: usize) -> Vec<Vec<u64>> {
    let count = p.pow(d as u32);
    (0..count)
        .map(|mut idx| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push(idx % p);
                idx /= p;
            }
            c.push(1);
            c
        })
        .collect()
}

/// Irreducible by trial division against every monic of degree `1..=deg/2`.
pub fn irreducible_by_trial(f: &[u64], p: u64) -> bool {
    let deg = trim(f.to_vec()).len() - 1;
    deg >= 1 && (1..=deg / 2).all(|d| monics(p, d).iter().all(|h| !divides(h, f, p)))
}

/// Every vector in the row span of `rows`, by enumerating all coefficient
/// choices.
pub fn span(rows: &[Vec<u64>], p: u64) -> HashSet<Vec<u64>> {
    let width = rows.first().map_or(0, |r| r.len());
    let mut out = HashSet::new();
    let total = p.pow(rows.len() as u32);
    for mut idx in 0..total {
        let mut v = vec![0u64; width];
        for row in rows {
            let c = idx % p;
            idx /= p;
            for (x, &y) in v.iter_mut().zip(row) {
                *x = (*x + c * y) % p;
            }
        }
        out.insert(v);
    }
    out
}

/// `log_p` of the span size.
pub fn rank_by_span(rows: &[Vec<u64>], p: u64) -> usize {
    let size = span(rows, p).len() as u64;
    let mut r = 0;
    while p.pow(r) < size {
        r += 1;
    }
    assert_eq!(p.pow(r), size);
    r as usize
}

/// Number of vectors `v` in GF(p)^cols with `rows * v = 0`.
pub fn kernel_size(rows: &[Vec<u64>], cols: usize, p: u64) -> u64 {
    let total = p.pow(cols as u32);
    (0..total)
        .filter(|&idx| {
            let mut v = Vec::with_capacity(cols);
            let mut rest = idx;
            for _ in 0..cols {
                v.push(rest % p);
                rest /= p;
            }
            rows.iter()
                .all(|r| r.iter().zip(&v).map(|(a, b)| a * b).sum::<u64>() % p == 0)
        })
        .count() as u64
}

/// Row `i` of the `m x n` circulant for `g` is `g` shifted right by `i`.
pub fn naive_circulant(g: &[u64], n: usize, m: usize) -> Vec<Vec<u64>> {
    (0..m)
        .map(|i| {
            (0..n)
                .map(|j| *g.get((j + n - i % n) % n).unwrap_or(&0))
                .collect()
        })
        .collect()
}

pub fn naive_double(g: &[u64], n: usize, gp: &[u64], np: usize, m: usize) -> Vec<Vec<u64>> {
    naive_circulant(g, n, m)
        .into_iter()
        .zip(naive_circulant(gp, np, m))
        .map(|(mut a, b)| {
            a.extend(b);
            a
        })
        .collect()
}

/// All coefficient vectors of length `n` over GF(p).
pub fn all_vectors(p: u64, n: usize) -> Vec<Vec<u64>> {
    let total = p.pow(n as u32);
    (0..total)
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let c = idx % p;
                    idx /= p;
                    c
                })
                .collect()
        })
        .collect()
}
