//! Elimination kernels shared by [`Matrix`](super::Matrix) and
//! [`Subspace`](super::Subspace).
//!
//! Two code paths: direct field arithmetic (always used for `GF(p)`, and for
//! small rational problems such as canonicalization), and fraction-free
//! integer elimination with per-row gcd normalization for rational rank and
//! kernel computations, which keeps coefficient growth under control on the
//! larger differential matrices.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Field arithmetic context for the generic elimination routines.
pub(crate) trait FieldCtx {
    type E: Clone + PartialEq;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn sub_mul(&self, a: &Self::E, f: &Self::E, b: &Self::E) -> Self::E; // a - f*b
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
}

pub(crate) struct RatCtx;

impl FieldCtx for RatCtx {
    type E = BigRational;
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub_mul(&self, a: &BigRational, f: &BigRational, b: &BigRational) -> BigRational {
        a - f * b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

pub(crate) struct ModCtx {
    pub p: u64,
}

impl FieldCtx for ModCtx {
    type E = u64;
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sub_mul(&self, a: &u64, f: &u64, b: &u64) -> u64 {
        (*a + self.p - f * b % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        let (mut r0, mut r1) = (self.p as i128, (*a % self.p) as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        (((t0 % self.p as i128) + self.p as i128) % self.p as i128) as u64
    }
}

/// In-place row echelon over a field. Pivots are normalized to 1 and only
/// the first `pivot_cols` columns are searched for pivots; rows may be wider
/// (augmented systems). Returns pivot column indices in order.
pub(crate) fn echelon<C: FieldCtx>(ctx: &C, rows: &mut [Vec<C::E>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !ctx.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = ctx.inv(&rows[r][c]);
        for x in rows[r].iter_mut() {
            if !ctx.is_zero(x) {
                *x = ctx.mul(x, &inv);
            }
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if ctx.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, b) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                if !ctx.is_zero(b) {
                    *x = ctx.sub_mul(x, &f, b);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Back-eliminates above the pivots of an echelon form produced by
/// [`echelon`], yielding the reduced row echelon form.
pub(crate) fn back_reduce<C: FieldCtx>(ctx: &C, rows: &mut [Vec<C::E>], pivots: &[usize]) {
    for (r, &c) in pivots.iter().enumerate().rev() {
        let pivot_row = rows[r].clone();
        for row in rows[..r].iter_mut() {
            if ctx.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, b) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                if !ctx.is_zero(b) {
                    *x = ctx.sub_mul(x, &f, b);
                }
            }
        }
    }
}

/// Fraction-free integer row echelon: rank-preserving cross-multiplication
/// updates followed by a gcd division per touched row. Pivot search is
/// restricted to the first `pivot_cols` columns. Returns the pivot columns.
pub(crate) fn echelon_int(rows: &mut [Vec<BigInt>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        // smallest-magnitude pivot limits growth
        let mut best: Option<(usize, BigInt)> = None;
        for i in r..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let mag = rows[i][c].abs();
            if best.as_ref().map_or(true, |(_, m)| mag < *m) {
                best = Some((i, mag));
            }
        }
        let Some((p, _)) = best else { continue };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pv = pivot_row[c].clone();
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            let mut g = BigInt::zero();
            for (x, b) in row.iter_mut().zip(pivot_row.iter()) {
                *x = &pv * &*x - &f * b;
                if !x.is_zero() {
                    g = g.gcd(x);
                }
            }
            if g > BigInt::one() {
                for x in row.iter_mut() {
                    if !x.is_zero() {
                        *x = &*x / &g;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Clears denominators of one rational row, returning an integer row that
/// spans the same line.
pub(crate) fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    row.iter()
        .map(|x| {
            if x.is_zero() {
                BigInt::zero()
            } else {
                x.numer() * (&lcm / x.denom())
            }
        })
        .collect()
}
