//! Exact linear algebra: dense matrices, reduced row echelon spans,
//! solving, kernels and direct-sum certificates.

use crate::error::Error;
use crate::scalar::Scalar;
use crate::space::{SuperSpace, Vector};

/// Dense row-major matrix of scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let prod = a * b;
                        *out.at_mut(r, c) += &prod;
                    }
                }
            }
        }
        out
    }

    /// Fraction-free-ish Gaussian elimination in place; returns pivot
    /// columns. Row echelon, normalized pivots, full reduction upward.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.data.swap(row * self.cols + col, pr * self.cols + col);
            for c in (col + 1)..self.cols {
                self.data.swap(row * self.cols + c, pr * self.cols + c);
            }
            let inv = self.at(row, col).inverse().expect("pivot is nonzero");
            for c in col..self.cols {
                let v = self.at(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let delta = self.at(row, c) * &factor;
                        *self.at_mut(r, c) -= &delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref_in_place().len()
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.at(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// One exact solution of `A x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert!(b.fits(self.rows), "rhs does not fit the row count");
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, b.coeff(r));
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None; // inconsistent: pivot in the constant column
        }
        let mut x = Vector::zero();
        for (row, &col) in pivots.iter().enumerate() {
            x.add_term(col, aug.at(row, self.cols));
        }
        Some(x)
    }

    /// Basis of the null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut work = self.clone();
        let pivots = work.rref_in_place();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = Vector::unit(free);
            for (row, &col) in pivots.iter().enumerate() {
                let c = work.at(row, free);
                if !c.is_zero() {
                    v.add_term(col, &-c);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// A subspace held as a reduced row echelon basis of sparse vectors:
/// rows nonzero, pivot columns strictly increasing, pivot entries 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    ambient_dim: usize,
}

impl Subspace {
    pub fn empty(ambient_dim: usize) -> Subspace {
        Subspace {
            rows: Vec::new(),
            pivots: Vec::new(),
            ambient_dim,
        }
    }

    /// Reduced span of arbitrary vectors.
    pub fn span(vectors: &[Vector], ambient_dim: usize) -> Result<Subspace, Error> {
        let mut s = Subspace::empty(ambient_dim);
        for v in vectors {
            if !v.fits(ambient_dim) {
                return Err(Error::DimensionMismatch(format!(
                    "vector has support beyond ambient dimension {ambient_dim}"
                )));
            }
            s.insert(v.clone());
        }
        Ok(s)
    }

    /// Inserts one vector, keeping the basis reduced. Returns true when the
    /// dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut v = self.reduce(&v);
        let Some(lead) = v.leading_index() else {
            return false;
        };
        let inv = v
            .get(lead)
            .expect("leading coefficient present")
            .inverse()
            .expect("leading coefficient nonzero");
        v = v.scaled(&inv);
        // Eliminate the new pivot from existing rows, then insert sorted.
        for row in &mut self.rows {
            let c = row.coeff(lead);
            if !c.is_zero() {
                row.add_scaled(&v, &-&c);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, v);
        true
    }

    /// Remainder of `v` after eliminating all pivot coordinates.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut out = v.clone();
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            let c = out.coeff(pivot);
            if !c.is_zero() {
                out.add_scaled(row, &-&c);
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in this basis, or `None` if outside the span.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        let mut rem = v.clone();
        let mut coords = Vector::zero();
        for (idx, (row, &pivot)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = rem.coeff(pivot);
            if !c.is_zero() {
                rem.add_scaled(row, &-&c);
                coords.add_term(idx, &c);
            }
        }
        rem.is_zero().then_some(coords)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Homogeneous basis of a graded subspace. Errors when some row mixes
    /// parities yet its parity parts leave the span.
    pub fn graded_basis(&self, space: &SuperSpace) -> Result<Vec<Vector>, Error> {
        let mut parts = Vec::new();
        for row in &self.rows {
            let (even, odd) = row.parity_split(space);
            for part in [even, odd] {
                if part.is_zero() {
                    continue;
                }
                if !self.contains(&part) {
                    return Err(Error::NotGraded);
                }
                parts.push(part);
            }
        }
        let graded = Subspace::span(&parts, self.ambient_dim)?;
        debug_assert_eq!(graded.dim(), self.dim());
        Ok(graded.rows)
    }

    /// Basis of the intersection with `other`, via kernel of the stacked
    /// coefficient matrix.
    pub fn intersection(&self, other: &Subspace) -> Vec<Vector> {
        // x = sum a_i u_i = sum b_j w_j; kernel of [U^T | -W^T].
        let nu = self.dim();
        let nw = other.dim();
        if nu == 0 || nw == 0 {
            return Vec::new();
        }
        let mut m = Mat::zeros(self.ambient_dim, nu + nw);
        for (i, u) in self.rows.iter().enumerate() {
            for (r, c) in u.iter() {
                m.set(r, i, c.clone());
            }
        }
        for (j, w) in other.rows.iter().enumerate() {
            for (r, c) in w.iter() {
                m.set(r, nu + j, -c);
            }
        }
        let mut out = Vec::new();
        for k in m.kernel() {
            let mut v = Vector::zero();
            for (idx, c) in k.iter() {
                if idx < nu {
                    v.add_scaled(&self.rows[idx], c);
                }
            }
            if !v.is_zero() {
                out.push(v);
            }
        }
        out
    }

    /// Dimension of `self + other`.
    pub fn sum_dim(&self, other: &Subspace) -> usize {
        let mut s = self.clone();
        for row in other.basis() {
            s.insert(row.clone());
        }
        s.dim()
    }
}

/// Outcome of a direct-sum certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectSum {
    Holds,
    /// A nonzero vector in the intersection.
    Overlap(Vector),
    /// dim U + dim W differs from the ambient dimension by this much.
    DimensionDeficit(i64),
}

impl DirectSum {
    pub fn holds(&self) -> bool {
        matches!(self, DirectSum::Holds)
    }
}

/// Certifies `ambient = U ⊕ W`, producing a witness on failure.
pub fn direct_sum_check(u: &Subspace, w: &Subspace, ambient_dim: usize) -> DirectSum {
    if let Some(overlap) = u.intersection(w).into_iter().next() {
        return DirectSum::Overlap(overlap);
    }
    let total = u.dim() as i64 + w.dim() as i64 - ambient_dim as i64;
    if total != 0 {
        return DirectSum::DimensionDeficit(total);
    }
    DirectSum::Holds
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(terms: &[(usize, i64)]) -> Vector {
        Vector::from_terms(terms.iter().map(|&(i, c)| (i, Scalar::from_int(c))))
    }

    #[test]
    fn span_collinear() {
        let s = Subspace::span(&[v(&[(0, 1)]), v(&[(0, 2)])], 2).unwrap();
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn span_empty() {
        let s = Subspace::span(&[], 3).unwrap();
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn span_independent_over_qi() {
        let a = Vector::from_terms([(0, Scalar::one()), (1, Scalar::one())]);
        let b = Vector::from_terms([(0, Scalar::one()), (1, Scalar::from_int(-1))]);
        let s = Subspace::span(&[a, b], 2).unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn span_idempotent() {
        let vs = [
            v(&[(0, 1), (2, 3)]),
            v(&[(1, 2), (2, -1)]),
            v(&[(0, 2), (1, 2), (2, 5)]),
        ];
        let s = Subspace::span(&vs, 4).unwrap();
        let again = Subspace::span(s.basis(), 4).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn direct_sum_holds_and_fails() {
        let u = Subspace::span(&[v(&[(0, 1)])], 2).unwrap();
        let w = Subspace::span(&[v(&[(1, 1)])], 2).unwrap();
        assert!(direct_sum_check(&u, &w, 2).holds());
        // U = W: overlap witness e1.
        let check = direct_sum_check(&u, &u, 2);
        match check {
            DirectSum::Overlap(x) => assert_eq!(x, v(&[(0, 1)])),
            other => panic!("expected overlap, got {other:?}"),
        }
        // symmetric
        assert_eq!(
            direct_sum_check(&u, &w, 2).holds(),
            direct_sum_check(&w, &u, 2).holds()
        );
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = Mat::identity(3);
        let b = v(&[(0, 5), (2, -1)]);
        assert_eq!(id.solve(&b).unwrap(), b);

        let zero = Mat::zeros(2, 2);
        assert!(zero.solve(&v(&[(0, 1)])).is_none());
    }

    #[test]
    fn solve_gaussian_2x2() {
        // [[1, i], [i, 1]] has determinant 2; solve with b = (1, i) -> (1, 0).
        let m = Mat::from_rows(vec![
            vec![Scalar::one(), Scalar::i()],
            vec![Scalar::i(), Scalar::one()],
        ]);
        assert_eq!(m.kernel().len(), 0);
        let sol = m.solve(&Vector::from_terms([(0, Scalar::one()), (1, Scalar::i())]));
        assert_eq!(sol.unwrap(), Vector::unit(0));
    }

    #[test]
    fn kernel_dimension() {
        // x + y + z = 0 has a 2-dimensional kernel.
        let m = Mat::from_rows(vec![vec![Scalar::one(), Scalar::one(), Scalar::one()]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for x in &k {
            let mut sum = Scalar::zero();
            for (_, c) in x.iter() {
                sum += c;
            }
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat::from_rows(vec![
            vec![Scalar::from_int(2), Scalar::i()],
            vec![Scalar::zero(), Scalar::rational(1, 3)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        assert_eq!(inv.mul(&m), Mat::identity(2));
    }

    #[test]
    fn intersection_witness() {
        let u = Subspace::span(&[v(&[(0, 1), (1, 1)]), v(&[(2, 1)])], 3).unwrap();
        let w = Subspace::span(&[v(&[(0, 1), (1, 1), (2, 2)])], 3).unwrap();
        let inter = u.intersection(&w);
        assert_eq!(inter.len(), 1);
        assert!(u.contains(&inter[0]) && w.contains(&inter[0]));
    }
}
