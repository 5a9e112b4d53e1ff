//! Exact rank over a prime field.
//!
//! The complexes built here have entries in {-1, 0, 1} and at most a few
//! hundred rows, so plain dense elimination is all that is needed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{is_prime, DEFAULT_CHAR};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PrimeField(u32);

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField(DEFAULT_CHAR)
    }
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField(p))
    }

    pub fn characteristic(self) -> u32 {
        self.0
    }

    fn reduce(self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    fn inverse(self, a: u64) -> u64 {
        // Fermat: a^(p-2).
        let p = self.0 as u64;
        let mut base = a % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }

    /// Rank of a signed integer matrix reduced mod p.
    pub fn rank(self, m: &SignMatrix) -> usize {
        if m.rows == 0 || m.cols == 0 {
            return 0;
        }
        let p = self.0 as u64;
        let mut a: Vec<u64> = m.data.iter().map(|&v| self.reduce(v as i64)).collect();
        let cols = m.cols;
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..m.rows).find(|&r| a[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    a.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = self.inverse(a[rank * cols + col]);
            for c in col..cols {
                a[rank * cols + c] = a[rank * cols + c] * inv % p;
            }
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let factor = a[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = factor * a[rank * cols + c] % p;
                    a[r * cols + c] = (a[r * cols + c] + p - sub) % p;
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }
}

/// Dense row-major matrix with small integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i8>,
}

impl SignMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SignMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i8) {
        self.data[r * self.cols + c] = v;
    }

    /// `self * rhs` over the integers.
    pub fn product(&self, rhs: &SignMatrix) -> Vec<i64> {
        assert_eq!(self.cols, rhs.rows);
        let mut out = vec![0i64; self.rows * rhs.cols];
        for r in 0..self.rows {
            for k in 0..self.cols {
                let v = self.get(r, k) as i64;
                if v == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    out[r * rhs.cols + c] += v * rhs.get(k, c) as i64;
                }
            }
        }
        out
    }
}
