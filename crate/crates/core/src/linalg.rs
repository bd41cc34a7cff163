//! Dense integer matrices with exact Smith normal form (including the
//! unimodular transformation matrices and their inverses), determinants,
//! characteristic polynomials and polynomial divisibility.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    /// Builds a `rows × columns.len()` matrix from its columns.
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &v) in c.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<i64> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut m = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    m[(i, j)] += a * o[(k, j)];
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows).map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// The block of rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                m[(i - r0, j - c0)] = self[(i, j)];
            }
        }
        m
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == -self[(j, i)]))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i128 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<i128>> = (0..n).map(|i| self.row(i).into_iter().map(i128::from).collect()).collect();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&i| a[i][k] != 0) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        if n == 0 {
            1
        } else {
            sign * a[n - 1][n - 1]
        }
    }

    /// Coefficients of `det(t·I − self)`, lowest degree first (the last
    /// coefficient is 1), by the Faddeev–LeVerrier recursion.
    pub fn charpoly(&self) -> Vec<i128> {
        assert_eq!(self.rows, self.cols, "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        let a: Vec<Vec<i128>> = (0..n).map(|i| self.row(i).into_iter().map(i128::from).collect()).collect();
        let mut coeffs = vec![0i128; n + 1];
        coeffs[n] = 1;
        let mut m = vec![vec![0i128; n]; n];
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1}·I
            let mut next = vec![vec![0i128; n]; n];
            for i in 0..n {
                for j in 0..n {
                    next[i][j] = (0..n).map(|l| a[i][l] * m[l][j]).sum::<i128>();
                }
                next[i][i] += coeffs[n - k + 1];
            }
            m = next;
            let trace: i128 = (0..n).map(|i| (0..n).map(|l| a[i][l] * m[l][i]).sum::<i128>()).sum();
            coeffs[n - k] = -trace / k as i128;
        }
        coeffs
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = self.row(i);
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

/// Remainder-free test `divisor | dividend` for integer polynomials given
/// lowest degree first; the divisor must be monic.
pub fn poly_divides(divisor: &[i128], dividend: &[i128]) -> bool {
    let dd = divisor.len() - 1;
    assert_eq!(divisor[dd], 1, "divisor must be monic");
    let mut rem = dividend.to_vec();
    while rem.len() > dd {
        let lead = *rem.last().expect("non-empty");
        let shift = rem.len() - 1 - dd;
        for (k, &c) in divisor.iter().enumerate() {
            rem[shift + k] -= lead * c;
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// `u · a · v = diag` with `u`, `v` unimodular; the nonzero diagonal
/// entries are positive and each divides the next.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// The diagonal of the normal form (length `min(rows, cols)`).
    pub diag: Vec<i64>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl Smith {
    /// True iff every nonzero invariant factor is 1.
    pub fn unit_invariants(&self) -> bool {
        self.diag[..self.rank].iter().all(|&x| x == 1)
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.u] {
            for c in 0..m.cols {
                let t = m[(i, c)];
                m[(i, c)] = m[(j, c)];
                m[(j, c)] = t;
            }
        }
        let m = &mut self.u_inv;
        for r in 0..m.rows {
            let t = m[(r, i)];
            m[(r, i)] = m[(r, j)];
            m[(r, j)] = t;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.v] {
            for r in 0..m.rows {
                let t = m[(r, i)];
                m[(r, i)] = m[(r, j)];
                m[(r, j)] = t;
            }
        }
        let m = &mut self.v_inv;
        for c in 0..m.cols {
            let t = m[(i, c)];
            m[(i, c)] = m[(j, c)];
            m[(j, c)] = t;
        }
    }

    /// row_i += k · row_j
    fn add_row(&mut self, i: usize, j: usize, k: i64) {
        if k == 0 {
            return;
        }
        for m in [&mut self.a, &mut self.u] {
            for c in 0..m.cols {
                m[(i, c)] += k * m[(j, c)];
            }
        }
        let m = &mut self.u_inv;
        for r in 0..m.rows {
            m[(r, j)] -= k * m[(r, i)];
        }
    }

    /// col_i += k · col_j
    fn add_col(&mut self, i: usize, j: usize, k: i64) {
        if k == 0 {
            return;
        }
        for m in [&mut self.a, &mut self.v] {
            for r in 0..m.rows {
                m[(r, i)] += k * m[(r, j)];
            }
        }
        let m = &mut self.v_inv;
        for c in 0..m.cols {
            m[(j, c)] -= k * m[(i, c)];
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for c in 0..m.cols {
                m[(i, c)] = -m[(i, c)];
            }
        }
        let m = &mut self.u_inv;
        for r in 0..m.rows {
            m[(r, i)] = -m[(r, i)];
        }
    }
}

/// Smith normal form with transformation matrices.
pub fn smith(a: &IntMatrix) -> Smith {
    let (rows, cols) = (a.rows, a.cols);
    let mut r = Reducer {
        a: a.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let n = rows.min(cols);
    let mut rank = 0;
    'diag: for t in 0..n {
        loop {
            // Pivot: smallest nonzero entry of the remaining block.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = r.a[(i, j)].abs();
                    if x != 0 && pivot.is_none_or(|(pi, pj)| x < r.a[(pi, pj)].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'diag;
            };
            r.swap_rows(t, pi);
            r.swap_cols(t, pj);
            let p = r.a[(t, t)];
            let mut clean = true;
            for i in t + 1..rows {
                let q = r.a[(i, t)] / p;
                r.add_row(i, t, -q);
                clean &= r.a[(i, t)] == 0;
            }
            for j in t + 1..cols {
                let q = r.a[(t, j)] / p;
                r.add_col(j, t, -q);
                clean &= r.a[(t, j)] == 0;
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| r.a[(i, j)] % p != 0));
            match bad_row {
                Some(i) => r.add_row(t, i, 1),
                None => break,
            }
        }
        if r.a[(t, t)] < 0 {
            r.negate_row(t);
        }
        rank = t + 1;
    }
    let diag = (0..n).map(|i| r.a[(i, i)]).collect();
    Smith { u: r.u, u_inv: r.u_inv, v: r.v, v_inv: r.v_inv, diag, rank }
}

/// The inverse of a unimodular square matrix, or `None` if the matrix is
/// not invertible over ℤ.
pub fn inverse_unimodular(p: &IntMatrix) -> Option<IntMatrix> {
    if p.rows != p.cols {
        return None;
    }
    let s = smith(p);
    if s.rank != p.rows || !s.unit_invariants() {
        return None;
    }
    // u·p·v = I  ⇒  p⁻¹ = v·u
    Some(s.v.mul(&s.u))
}

/// An integer matrix `r` with `n · r = I`, when `n` (of full row rank) maps
/// onto ℤ^rows.
pub fn right_inverse(n: &IntMatrix) -> Option<IntMatrix> {
    let s = smith(n);
    if s.rank != n.rows || !s.unit_invariants() {
        return None;
    }
    // u·n·v = [I | 0]  ⇒  n · (v·[I; 0]·u) = I
    let mut d_t = IntMatrix::zeros(n.cols, n.rows);
    for i in 0..n.rows {
        d_t[(i, i)] = 1;
    }
    Some(s.v.mul(&d_t).mul(&s.u))
}

/// Rank over the field with two elements of the given vectors.
pub fn rank_mod2(vectors: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<u8>> = vectors.iter().map(|v| v.iter().map(|x| x.rem_euclid(2) as u8).collect()).collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] == 1 {
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x ^= p;
                }
            }
        }
        rank += 1;
    }
    rank
}
