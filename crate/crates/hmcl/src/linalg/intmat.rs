use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

/// Dense integer matrix with arbitrary-precision entries. Used for
/// abelianized relator matrices and their Smith normal form.
#[derive(Clone, PartialEq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged integer matrix");
        let entries = rows.iter().flatten().map(|&n| BigInt::from(n)).collect();
        IntMatrix { rows: r, cols: c, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let t = self.get(src, j) * f;
            let idx = dst * self.cols + j;
            self.entries[idx] += t;
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.rows {
            let t = self.get(i, src) * f;
            let idx = i * self.cols + dst;
            self.entries[idx] += t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            let v = -self.entries[idx].clone();
            self.entries[idx] = v;
        }
    }

    /// Determinant by cofactor-free integer elimination (Bareiss).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> =
            (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = &num / &prev; // exact by Bareiss
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Smith normal form: positive invariant factors `d_1 | d_2 | ... | d_k`
/// and the free rank `cols - k` of the cokernel.
pub fn smith_normal_form(m: &IntMatrix) -> (Vec<BigInt>, usize) {
    let mut b = m.clone();
    let (nr, nc) = (b.rows, b.cols);
    let steps = nr.min(nc);
    for k in 0..steps {
        'stage: loop {
            // locate a minimal-magnitude nonzero entry in the trailing block
            let mut min: Option<(usize, usize)> = None;
            for i in k..nr {
                for j in k..nc {
                    if !b.get(i, j).is_zero()
                        && min.map_or(true, |(pi, pj)| b.get(i, j).abs() < b.get(pi, pj).abs())
                    {
                        min = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = min else { break 'stage };
            b.swap_rows(k, pi);
            b.swap_cols(k, pj);
            if b.get(k, k).is_negative() {
                b.negate_row(k);
            }

            // clear column k below and row k to the right
            let mut dirty = false;
            for i in k + 1..nr {
                if !b.get(i, k).is_zero() {
                    let q = -(b.get(i, k) / b.get(k, k));
                    b.add_row_multiple(i, k, &q);
                    if !b.get(i, k).is_zero() {
                        dirty = true; // remainder left, re-pivot
                    }
                }
            }
            for j in k + 1..nc {
                if !b.get(k, j).is_zero() {
                    let q = -(b.get(k, j) / b.get(k, k));
                    b.add_col_multiple(j, k, &q);
                    if !b.get(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'stage;
            }

            // enforce divisibility of the trailing block by the pivot
            let pv = b.get(k, k).clone();
            let mut fixed = true;
            'outer: for i in k + 1..nr {
                for j in k + 1..nc {
                    if !(b.get(i, j) % &pv).is_zero() {
                        let one = BigInt::one();
                        b.add_row_multiple(k, i, &one);
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break 'stage;
            }
        }
        if b.get(k, k).is_zero() {
            break;
        }
    }
    let mut factors = Vec::new();
    for k in 0..steps {
        let d = b.get(k, k);
        if d.is_zero() {
            break;
        }
        factors.push(d.abs());
    }
    let free_rank = nc - factors.len();
    (factors, free_rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors_of(rows: &[Vec<i64>]) -> (Vec<i64>, usize) {
        let (fs, free) = smith_normal_form(&IntMatrix::from_rows(rows));
        let small: Vec<i64> = fs.iter().map(|f| i64::try_from(f).unwrap()).collect();
        (small, free)
    }

    #[test]
    fn single_entry() {
        assert_eq!(factors_of(&[vec![2]]), (vec![2], 0));
    }

    #[test]
    fn zero_row() {
        assert_eq!(factors_of(&[vec![0, 0]]), (vec![], 2));
    }

    #[test]
    fn diag_two_three() {
        assert_eq!(factors_of(&[vec![2, 0], vec![0, 3]]), (vec![1, 6], 0));
    }

    #[test]
    fn divisibility_chain() {
        let (fs, _) = factors_of(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        for w in fs.windows(2) {
            assert_eq!(w[1] % w[0], 0, "chain broken in {fs:?}");
        }
    }

    #[test]
    fn det_bareiss() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(m.det(), BigInt::from(3));
        let s = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(s.det(), BigInt::from(-1));
        let z = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(z.det(), BigInt::zero());
    }

    #[test]
    fn det_preserved_by_snf() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let (fs, free) = smith_normal_form(&m);
        assert_eq!(free, 0);
        let prod: BigInt = fs.iter().product();
        assert_eq!(prod, m.det().abs());
    }
}
