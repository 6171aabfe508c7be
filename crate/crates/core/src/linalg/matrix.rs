use std::fmt;

use super::field::Fp;
use super::subspace::Subspace;

/// Dense matrix over a prime field, row-major.
///
/// Zero-row and zero-column matrices are ordinary values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{} [", self.rows, self.cols, self.field.p())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    pub fn scalar(field: Fp, n: usize, c: u32) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(field: Fp, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r.iter().map(|&x| x % field.p()));
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn from_vec(field: Fp, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { field, rows, cols, data }
    }

    pub fn from_fn(field: Fp, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % field.p());
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Column matrix built from a vector.
    pub fn column(field: Fp, v: &[u32]) -> Self {
        Matrix { field, rows: v.len(), cols: 1, data: v.to_vec() }
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    pub fn into_data(self) -> Vec<u32> {
        self.data
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = self.field;
        let p = f.p() as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = other.row(k);
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o = (*o + a * b as u64) % p;
                }
            }
        }
        Matrix { field: f, rows: self.rows, cols: other.cols, data: out.into_iter().map(|x| x as u32).collect() }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(0, |acc, (&a, &b)| f.mul_add(acc, a, b)))
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        Matrix { field: f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(a, c)).collect() }
    }

    /// `self + c * other`
    pub fn add_scaled(&mut self, other: &Matrix, c: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.mul_add(*a, b, c);
        }
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                other.get(r, c - self.cols)
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(field: Fp, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.set(r0 + r, c0 + c, b.get(r, c));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Submatrix of the given columns (in the given order).
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field, rows: rows.len(), cols: self.cols, data }
    }

    /// Reduced row-echelon form in place; returns the pivot columns.
    /// Zero rows are dropped, so afterwards `rows() == rank`.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (nr, nc) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(pr) = (r..nr).find(|&i| self.data[i * nc + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..nc {
                    self.data.swap(pr * nc + k, r * nc + k);
                }
            }
            let inv = f.inv(self.data[r * nc + c]);
            if inv != 1 {
                for k in c..nc {
                    self.data[r * nc + k] = f.mul(self.data[r * nc + k], inv);
                }
            }
            let (head, tail) = self.data.split_at_mut(r * nc);
            let (pivot_row, rest) = tail.split_at_mut(nc);
            for (i, row) in head.chunks_mut(nc).chain(rest.chunks_mut(nc)).enumerate() {
                let _ = i;
                let factor = row[c];
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for k in c..nc {
                    row[k] = f.mul_add(row[k], neg, pivot_row[k]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.rows = r;
        self.data.truncate(r * nc);
        pivots
    }

    /// Reduced row-echelon form (zero rows removed) and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place();
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let f = self.field;
        let (r, piv) = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &piv {
            is_pivot[c] = true;
        }
        let mut vecs = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; n];
            v[free] = 1;
            for (i, &pc) in piv.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            vecs.push(v);
        }
        Subspace::from_vectors(f, n, vecs)
    }

    /// Some solution of `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::column(self.field, b));
        let (r, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (i, &pc) in piv.iter().enumerate() {
            x[pc] = r.get(i, self.cols);
        }
        Some(x)
    }

    /// Solves `self * X = rhs` for a matrix `X`, column by column.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(rhs.rows, self.rows);
        let aug = self.hstack(rhs);
        let (r, piv) = aug.rref();
        if piv.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (i, &pc) in piv.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(i, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        self.solve_matrix(&Matrix::identity(self.field, self.rows))
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.rows == 0 || self.pow(self.rows).is_zero()
    }

    /// Characteristic polynomial `det(xI - self)`, coefficients from the constant term up.
    ///
    /// Reduces to upper Hessenberg form by similarity, then runs the usual
    /// three-term recurrence; valid in every characteristic.
    pub fn char_poly(&self) -> Vec<u32> {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else {
                continue;
            };
            if i != m {
                for k in 0..n {
                    let (a, b) = (h.get(i, k), h.get(m, k));
                    h.set(i, k, b);
                    h.set(m, k, a);
                }
                for k in 0..n {
                    let (a, b) = (h.get(k, i), h.get(k, m));
                    h.set(k, i, b);
                    h.set(k, m, a);
                }
            }
            let inv = f.inv(h.get(m, m - 1));
            for i in (m + 1)..n {
                let u = f.mul(h.get(i, m - 1), inv);
                if u == 0 {
                    continue;
                }
                for k in 0..n {
                    let v = f.sub(h.get(i, k), f.mul(u, h.get(m, k)));
                    h.set(i, k, v);
                }
                for k in 0..n {
                    let v = f.add(h.get(k, m), f.mul(u, h.get(k, i)));
                    h.set(k, m, v);
                }
            }
        }
        // p_k = char poly of leading k x k block
        let mut polys: Vec<Vec<u32>> = vec![vec![1]];
        for k in 0..n {
            // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_{i,k} * prod_{j=i+1..k} h_{j,j-1} * p_i
            let pk = &polys[k];
            let mut next = vec![0u32; k + 2];
            for (d, &c) in pk.iter().enumerate() {
                next[d + 1] = f.add(next[d + 1], c);
                next[d] = f.sub(next[d], f.mul(c, h.get(k, k)));
            }
            let mut prod = 1u32;
            for i in (0..k).rev() {
                prod = f.mul(prod, h.get(i + 1, i));
                let coef = f.mul(prod, h.get(i, k));
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = f.sub(next[d], f.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

/// Evaluates a polynomial (constant term first) at `x`.
pub fn poly_eval(field: Fp, poly: &[u32], x: u32) -> u32 {
    poly.iter().rev().fold(0, |acc, &c| field.mul_add(c, acc, x))
}

/// Roots of a polynomial in `F_p`, found by exhaustive evaluation.
pub fn poly_roots(field: Fp, poly: &[u32]) -> Vec<u32> {
    if poly.len() <= 1 {
        return Vec::new();
    }
    field.elements().filter(|&x| poly_eval(field, poly, x) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let k = f(1009);
        let (r, piv) = Matrix::identity(k, 2).rref();
        assert_eq!(r, Matrix::identity(k, 2));
        assert_eq!(piv, vec![0, 1]);
        let (r, piv) = Matrix::zeros(k, 3, 2).rref();
        assert_eq!(r.rows(), 0);
        assert!(piv.is_empty());
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let k = f(7);
        assert_eq!(Matrix::identity(k, 4).kernel_basis().dim(), 0);
        assert_eq!(Matrix::zeros(k, 3, 3).kernel_basis().dim(), 3);
        assert_eq!(Matrix::zeros(k, 0, 3).kernel_basis().dim(), 3);
    }

    #[test]
    fn solve_trivial_cases() {
        let k = f(11);
        let b = vec![3, 4, 5];
        assert_eq!(Matrix::identity(k, 3).solve(&b), Some(b.clone()));
        assert_eq!(Matrix::zeros(k, 3, 3).solve(&b), None);
    }

    #[test]
    fn char_poly_small() {
        let k = f(1009);
        // [[1,2],[3,4]] -> x^2 - 5x - 2
        let m = Matrix::from_rows(k, 2, &[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.char_poly(), vec![k.from_i64(-2), k.from_i64(-5), 1]);
        // nilpotent Jordan block
        let n = Matrix::from_rows(k, 3, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(n.char_poly(), vec![0, 0, 0, 1]);
        assert!(n.is_nilpotent());
        assert_eq!(Matrix::zeros(k, 0, 0).char_poly(), vec![1]);
    }

    #[test]
    fn char_poly_needs_pivoting() {
        let k = f(5);
        // zero subdiagonal entry forces a row swap during the reduction
        let m = Matrix::from_rows(k, 3, &[vec![1, 2, 3], vec![0, 1, 4], vec![2, 0, 1]]);
        let cp = m.char_poly();
        for x in 0..5 {
            let shifted = Matrix::scalar(k, 3, x).sub(&m);
            let singular = shifted.rank() < 3;
            assert_eq!(poly_eval(k, &cp, x) == 0, singular, "x = {x}");
        }
    }

    #[test]
    fn inverse_round_trip() {
        let k = f(13);
        let m = Matrix::from_rows(k, 2, &[vec![2, 3], vec![1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(k, 2));
        let sing = Matrix::from_rows(k, 2, &[vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse().is_none());
    }
}
