//! Rank modulo random word-sized primes, used as an independent oracle for
//! the exact rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::matrix::Matrix;

const LOW: u64 = 1 << 30;
const HIGH: u64 = 1 << 31;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the base set is exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Seeded stream of primes in `(2^30, 2^31)`.
pub struct PrimeSource {
    rng: ChaCha8Rng,
}

impl PrimeSource {
    pub fn new(seed: u64) -> Self {
        PrimeSource {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.rng.gen_range(LOW + 1..HIGH) | 1;
            if is_prime(c) {
                return c;
            }
        }
    }
}

/// Outcome of the modular rank oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularRank {
    pub primes: Vec<u64>,
    pub ranks: Vec<usize>,
    /// Maximum over the primes; never exceeds the rank over Q.
    pub rank: usize,
    pub agree: bool,
}

fn residue(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Rank of an integer matrix over `F_p`.
pub fn rank_mod_p(rows: &[Vec<u64>], cols: usize, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        let pivot: Vec<u64> = m[rank].iter().map(|&v| mul_mod(v, inv, p)).collect();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for k in c..cols {
                row[k] = (row[k] + p - mul_mod(f, pivot[k], p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Reduces `m` modulo `count` primes drawn from `source`. A prime dividing
/// some denominator is discarded and redrawn.
pub fn modular_rank(m: &Matrix<BigRational>, count: usize, source: &mut PrimeSource) -> ModularRank {
    let mut primes = Vec::with_capacity(count);
    let mut ranks = Vec::with_capacity(count);
    while primes.len() < count {
        let p = source.next_prime();
        let bp = BigInt::from(p);
        if m.rows().flatten().any(|v| (v.denom() % &bp).is_zero()) {
            continue;
        }
        let rows: Vec<Vec<u64>> = m
            .rows()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        let d = residue(v.denom(), p);
                        mul_mod(residue(v.numer(), p), pow_mod(d, p - 2, p), p)
                    })
                    .collect()
            })
            .collect();
        ranks.push(rank_mod_p(&rows, m.ncols(), p));
        primes.push(p);
    }
    let rank = ranks.iter().copied().max().unwrap_or(0);
    let agree = ranks.iter().all(|&r| r == rank);
    ModularRank {
        primes,
        ranks,
        rank,
        agree,
    }
}
