//! Dense exact matrices, row reduction and subspaces of `k^n`.

use std::fmt;

use crate::field::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            a.add_mul(c, x);
        }
    }
}

pub fn scale_vec(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

/// Reduce `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (c..ncols).filter(|&j| !rows[r][j].is_zero()).collect();
        let pivot_row = rows[r].clone();
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for &j in &support {
                let t = &f * &pivot_row[j];
                rows[i][j] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<Vector>) -> Self {
        assert_eq!(data.len(), rows);
        let mut flat = Vec::with_capacity(rows * cols);
        for r in data {
            assert_eq!(r.len(), cols);
            flat.extend(r);
        }
        Mat { rows, cols, data: flat }
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vector]) -> Self {
        let mut m = Mat::zeros(rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), rows);
            for i in 0..rows {
                m[(i, j)] = v[i].clone();
            }
        }
        m
    }

    pub fn from_ints(rows: usize, cols: usize, vals: &[i64]) -> Self {
        Mat::from_flat(rows, cols, vals.iter().map(|&v| Scalar::from_int(v)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.rows)
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out.data[i * o.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    s.add_mul(a, b);
                }
                s
            })
            .collect()
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        self.map(|x| x * c)
    }

    /// `self += c * o`
    pub fn add_scaled(&mut self, c: &Scalar, o: &Mat) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        axpy(&mut self.data, c, &o.data);
    }

    pub fn pow(&self, mut e: usize) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
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

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vecs();
        rref(&mut rows, self.cols).len()
    }

    /// Basis of the null space. Each basis vector has a 1 at one free column
    /// and 0 at every other free column; the free columns are returned too.
    pub fn kernel(&self) -> (Vec<Vector>, Vec<usize>) {
        let mut rows = self.row_vecs();
        let pivots = rref(&mut rows, self.cols);
        kernel_from_rref(&rows, &pivots, self.cols)
    }

    pub fn kernel_basis(&self) -> Vec<Vector> {
        self.kernel().0
    }

    /// Column space as a subspace of `k^rows`.
    pub fn column_space(&self) -> Subspace {
        let cols: Vec<Vector> = (0..self.cols).map(|c| self.col(c)).collect();
        Subspace::new(self.rows, cols)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
                r
            })
            .collect();
        let pivots = rref(&mut rows, 2 * n);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Mat::from_rows(n, n, rows.into_iter().map(|r| r[n..].to_vec()).collect()))
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[&Mat]) -> Mat {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Mat::zeros(r, c);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            m.set_block(ro, co, b);
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut m = Mat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = self[(r0 + r, c0 + c)].clone();
            }
        }
        m
    }

    pub fn hstack(a: &Mat, b: &Mat) -> Mat {
        assert_eq!(a.rows, b.rows);
        let mut m = Mat::zeros(a.rows, a.cols + b.cols);
        m.set_block(0, 0, a);
        m.set_block(0, a.cols, b);
        m
    }

    pub fn vstack(a: &Mat, b: &Mat) -> Mat {
        assert_eq!(a.cols, b.cols);
        let mut m = Mat::zeros(a.rows + b.rows, a.cols);
        m.set_block(0, 0, a);
        m.set_block(a.rows, 0, b);
        m
    }
}

pub fn kernel_from_rref(rows: &[Vector], pivots: &[usize], ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ncols).filter(|&c| !is_pivot[c]).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = zero_vec(ncols);
            v[f] = Scalar::one();
            for (row, &p) in rows.iter().zip(pivots) {
                if !row[f].is_zero() {
                    v[p] = -&row[f];
                }
            }
            v
        })
        .collect();
    (basis, free)
}

/// A subspace of `k^n`, held as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    n: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(n: usize, mut vectors: Vec<Vector>) -> Self {
        vectors.retain(|v| !is_zero_vec(v));
        let pivots = rref(&mut vectors, n);
        Subspace { n, rows: vectors, pivots }
    }

    pub fn zero(n: usize) -> Self {
        Subspace { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut v = zero_vec(n);
                v[i] = Scalar::one();
                v
            })
            .collect();
        Subspace { n, rows, pivots: (0..n).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = r[p].clone();
                for (x, y) in r.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &(&c * y);
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Positions not used as pivots; the standard vectors there span a
    /// complement.
    pub fn complement_positions(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.n).filter(|&i| !is_pivot[i]).collect()
    }

    /// Coordinates of the class of `v` in `k^n / self`, relative to the
    /// standard complement.
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vector {
        let r = self.reduce(v);
        self.complement_positions().into_iter().map(|i| r[i].clone()).collect()
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.n, o.n);
        let mut v = self.rows.clone();
        v.extend(o.rows.iter().cloned());
        Subspace::new(self.n, v)
    }

    pub fn extend(&self, vectors: impl IntoIterator<Item = Vector>) -> Subspace {
        let mut v = self.rows.clone();
        v.extend(vectors);
        Subspace::new(self.n, v)
    }

    pub fn is_subspace_of(&self, o: &Subspace) -> bool {
        self.dim() <= o.dim() && self.rows.iter().all(|r| o.contains(r))
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.n, o.n);
        if self.is_zero() || o.is_zero() {
            return Subspace::zero(self.n);
        }
        if self.is_full() {
            return o.clone();
        }
        if o.is_full() {
            return self.clone();
        }
        // a.U = b.V  <=>  (a, -b) in the kernel of [U^T | -V^T]
        let du = self.dim();
        let mut cols: Vec<Vector> = self.rows.clone();
        cols.extend(o.rows.iter().map(|r| r.iter().map(|x| -x).collect()));
        let m = Mat::from_cols(self.n, &cols);
        let (ker, _) = m.kernel();
        let vecs = ker
            .into_iter()
            .map(|k| {
                let mut v = zero_vec(self.n);
                for (i, c) in k[..du].iter().enumerate() {
                    axpy(&mut v, c, &self.rows[i]);
                }
                v
            })
            .collect();
        Subspace::new(self.n, vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn kernel_has_free_identity() {
        let m = Mat::from_ints(2, 4, &[1, 2, 0, 1, 0, 0, 1, 3]);
        let (ker, free) = m.kernel();
        assert_eq!(free, vec![1, 3]);
        for k in &ker {
            assert!(is_zero_vec(&m.mul_vec(k)));
        }
        assert_eq!(ker[0][1], Scalar::one());
        assert!(ker[0][3].is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat::from_ints(3, 3, &[2, 1, 0, 0, 1, 4, 1, 0, 1]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Mat::from_ints(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn subspace_ops() {
        let a = Subspace::new(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::new(3, vec![v(&[0, 1, 1]), v(&[0, 1, 0])]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[0, 5, 0])));
        assert!(a.sum(&b).is_full());
        assert_eq!(a.quotient_coords(&v(&[3, 4, 7])), v(&[7]));
        assert_eq!(a.coords(&v(&[3, 4, 0])).unwrap(), v(&[3, 4]));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let m = Mat::from_ints(2, 2, &[1, 1, 0, 1]);
        assert_eq!(m.pow(5), Mat::from_ints(2, 2, &[1, 5, 0, 1]));
        assert!(m.pow(0).is_identity());
    }
}

/// Coefficients `c` with `Σ c_i v_i = target`, if any exist.
pub fn solve_combination(n: usize, vectors: &[Vector], target: &[Scalar]) -> Option<Vector> {
    let mut cols = vectors.to_vec();
    cols.push(target.to_vec());
    let k = vectors.len();
    let ker = Mat::from_cols(n, &cols).kernel_basis();
    let v = ker.into_iter().find(|v| !v[k].is_zero())?;
    let s = -(v[k].inv());
    Some(v[..k].iter().map(|x| x * &s).collect())
}
