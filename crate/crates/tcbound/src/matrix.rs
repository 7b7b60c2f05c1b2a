//! Small dense integer matrices.
//!
//! Just enough linear algebra for the group-ring computations: products,
//! powers, Kronecker products, and integer kernels. Kernels are computed by
//! Euclidean row reduction of `[Aᵀ | I]`; the rows of the unimodular factor
//! that zero out the left block form a Z-basis of the kernel lattice, which
//! is automatically saturated.

use std::fmt;

/// Row-major dense integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// n x 1 column matrix.
    pub fn column(v: &[i64]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) as i128) + (a as i128) * (other.get(k, j) as i128);
                    out.set(i, j, i64::try_from(v).expect("matrix entry overflow"));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let acc: i128 = (0..self.cols)
                    .map(|j| (self.get(i, j) as i128) * (v[j] as i128))
                    .sum();
                i64::try_from(acc).expect("vector entry overflow")
            })
            .collect()
    }

    pub fn pow(&self, k: usize) -> IntMat {
        assert_eq!(self.rows, self.cols, "pow of non-square matrix");
        let mut acc = IntMat::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn kronecker(&self, other: &IntMat) -> IntMat {
        let mut out = IntMat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(
                            i * other.rows + k,
                            j * other.cols + l,
                            a * other.get(k, l),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn stack_vertical(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        IntMat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == IntMat::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Z-basis of the right kernel `{ x : A x = 0 }`.
    ///
    /// The returned vectors generate the full kernel lattice (not merely a
    /// finite-index sublattice) because the reduction is unimodular.
    pub fn kernel_basis(&self) -> Vec<Vec<i64>> {
        let (m, n) = (self.rows, self.cols);
        // Work on [Aᵀ | I]: row v of the left block is A applied to eᵥ.
        let mut w: Vec<Vec<i128>> = (0..n)
            .map(|i| {
                let mut row = vec![0i128; m + n];
                for j in 0..m {
                    row[j] = self.get(j, i) as i128;
                }
                row[m + i] = 1;
                row
            })
            .collect();

        let mut pivot = 0usize;
        for col in 0..m {
            if pivot == n {
                break;
            }
            loop {
                let mut best: Option<usize> = None;
                for (r, row) in w.iter().enumerate().take(n).skip(pivot) {
                    if row[col] != 0
                        && best.map_or(true, |b| row[col].abs() < w[b][col].abs())
                    {
                        best = Some(r);
                    }
                }
                let Some(b) = best else { break };
                w.swap(pivot, b);
                let mut clean = true;
                for r in pivot + 1..n {
                    if w[r][col] != 0 {
                        let q = div_round(w[r][col], w[pivot][col]);
                        if q != 0 {
                            for c in 0..m + n {
                                w[r][c] -= q * w[pivot][c];
                            }
                        }
                        if w[r][col] != 0 {
                            clean = false;
                        }
                    }
                }
                if clean {
                    pivot += 1;
                    break;
                }
            }
        }

        w[pivot..]
            .iter()
            .map(|row| {
                let mut v: Vec<i64> = row[m..]
                    .iter()
                    .map(|&x| i64::try_from(x).expect("kernel entry overflow"))
                    .collect();
                if let Some(first) = v.iter().find(|&&x| x != 0) {
                    if *first < 0 {
                        for x in &mut v {
                            *x = -*x;
                        }
                    }
                }
                v
            })
            .collect()
    }
}

/// Division rounded to the nearest integer; keeps Euclidean reduction steps
/// shrinking.
fn div_round(a: i128, b: i128) -> i128 {
    let q = a / b;
    let r = a % b;
    if 2 * r.abs() > b.abs() {
        q + (a.signum() * b.signum())
    } else {
        q
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.get(i, j).to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
