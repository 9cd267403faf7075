//! Exact dense linear algebra over a [`Scalar`] field.
//!
//! Matrices here are the degreewise realizations of graded maps; they are
//! small (a handful of rows and columns), so a dense layout with exact
//! Gauss-Jordan elimination is the right tool.

use crate::field::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>, // row major
}

impl<F: Scalar> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
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

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn hstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(
            self.cols, other.rows,
            "matrix product dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out: Matrix<F> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    if !self.get(i, j).is_zero() && !v[j].is_zero() {
                        acc = acc + self.get(i, j).clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Select a subset of columns.
    pub fn select_cols(&self, idx: &[usize]) -> Matrix<F> {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for pc in 0..a.cols {
            if pr >= a.rows {
                break;
            }
            let found = (pr..a.rows).find(|&r| !a.get(r, pc).is_zero());
            let row = match found {
                Some(r) => r,
                None => continue,
            };
            if row != pr {
                for j in 0..a.cols {
                    let x = a.get(row, j).clone();
                    let y = a.get(pr, j).clone();
                    a.set(row, j, y);
                    a.set(pr, j, x);
                }
            }
            let inv = a.get(pr, pc).inv();
            for j in 0..a.cols {
                let v = a.get(pr, j).clone() * inv.clone();
                a.set(pr, j, v);
            }
            for r in 0..a.rows {
                if r == pr || a.get(r, pc).is_zero() {
                    continue;
                }
                let f = a.get(r, pc).clone();
                for j in 0..a.cols {
                    let v = a.get(r, j).clone() - f.clone() * a.get(pr, j).clone();
                    a.set(r, j, v);
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the null space; column count equals
    /// `cols - rank`.
    pub fn kernel_basis(&self) -> Matrix<F> {
        let (rref, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut basis = Matrix::zero(self.cols, free.len());
        for (bcol, &fc) in free.iter().enumerate() {
            basis.set(fc, bcol, F::one());
            for (prow, &pc) in pivots.iter().enumerate() {
                let v = rref.get(prow, fc).clone();
                if !v.is_zero() {
                    basis.set(pc, bcol, -v);
                }
            }
        }
        basis
    }

    /// Columns form a basis of the column space (a subset of the original
    /// columns, in order).
    pub fn image_basis(&self) -> Matrix<F> {
        let (_, pivots) = self.rref();
        self.select_cols(&pivots)
    }

    /// Solve `self * x = rhs` for every column of `rhs` at once.  Returns
    /// `None` if any column is inconsistent.
    pub fn solve(&self, rhs: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(self.rows, rhs.rows, "solve dimension mismatch");
        let aug = self.hstack(rhs);
        let (rref, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(self.cols, rhs.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, rref.get(prow, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Does the column space of `self` contain every column of `other`?
    pub fn contains_columns(&self, other: &Matrix<F>) -> bool {
        if other.cols == 0 {
            return true;
        }
        self.rank() == self.hstack(other).rank()
    }
}

/// Equality of column spaces.
pub fn subspace_eq<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> bool {
    assert_eq!(a.rows(), b.rows(), "subspaces of different ambient spaces");
    let ra = a.rank();
    let rb = b.rank();
    ra == rb && a.hstack(b).rank() == ra
}

/// Indices of standard basis vectors completing the column space of `sub`
/// to the ambient space, chosen greedily from the smallest index.
pub fn complement_indices<F: Scalar>(ambient: usize, sub: &Matrix<F>) -> Vec<usize> {
    assert_eq!(sub.rows(), ambient);
    let mut kept = Vec::new();
    let mut span = sub.clone();
    let mut rank = span.rank();
    for i in 0..ambient {
        if rank == ambient {
            break;
        }
        let mut e = Matrix::zero(ambient, 1);
        e.set(i, 0, F::one());
        let cand = span.hstack(&e);
        let r = cand.rank();
        if r > rank {
            kept.push(i);
            span = cand;
            rank = r;
        }
    }
    kept
}

/// Data describing the quotient of k^ambient by the column space of `sub`:
/// a choice of complementary standard basis vectors and the projection that
/// rewrites an ambient vector in that basis modulo the subspace.
pub struct QuotientMap<F> {
    pub kept: Vec<usize>,
    pub proj: Matrix<F>, // (ambient - rank) x ambient
}

pub fn quotient_map<F: Scalar>(ambient: usize, sub: &Matrix<F>) -> QuotientMap<F> {
    let kept = complement_indices(ambient, sub);
    let q = kept.len();
    // Solve [sub | E_kept] * (u, v) = e_i for each i; the v-part is the image
    // of e_i in the quotient basis.
    let mut ekept = Matrix::zero(ambient, q);
    for (j, &i) in kept.iter().enumerate() {
        ekept.set(i, j, F::one());
    }
    let basis = sub.hstack(&ekept);
    let rhs = Matrix::identity(ambient);
    let sol = basis
        .solve(&rhs)
        .expect("subspace plus complement must span the ambient space");
    let proj = Matrix::from_fn(q, ambient, |i, j| sol.get(sub.cols() + i, j).clone());
    QuotientMap { kept, proj }
}

/// Certificate produced by [`stable_image`].
#[derive(Clone, Debug, PartialEq)]
pub enum StableImage<F> {
    /// The image chain in V_0 became constant at `stage` and stayed constant
    /// for the requested plateau length.
    Stable {
        basis: Matrix<F>,
        stage: usize,
        plateau: usize,
    },
    /// The chain was still moving when the tower ran out.
    Unstabilized { last_dims: Vec<usize> },
}

/// Images in V_0 of the composites of an inverse tower `maps[t]: V_{t+1} -> V_t`.
///
/// `dims[0]` is dim V_0.  The descending chain im(V_t -> V_0) is tracked until
/// it is constant for `plateau` consecutive stages; the certificate records
/// the first stage at which the stable value was attained.
pub fn stable_image<F: Scalar>(
    dim0: usize,
    maps: &[Matrix<F>],
    plateau: usize,
) -> StableImage<F> {
    assert!(plateau >= 1);
    // composite: V_t -> V_0
    let mut composite = Matrix::identity(dim0);
    let mut chain: Vec<Matrix<F>> = vec![composite.image_basis()];
    for m in maps {
        assert_eq!(
            composite.cols(),
            m.rows(),
            "tower maps are not composable"
        );
        composite = composite.mul(m);
        chain.push(composite.image_basis());
    }
    // The chain is descending, so its intersection is the last value.  The
    // claim of stabilization needs the tail to be constant for `plateau`
    // consecutive steps.
    let mut trailing = 0usize;
    while trailing + 1 < chain.len()
        && subspace_eq(&chain[chain.len() - 1 - trailing], &chain[chain.len() - 2 - trailing])
    {
        trailing += 1;
    }
    if trailing >= plateau {
        let stage = chain.len() - 1 - trailing;
        StableImage::Stable {
            basis: chain.last().unwrap().clone(),
            stage,
            plateau,
        }
    } else {
        StableImage::Unstabilized {
            last_dims: chain.iter().map(|c| c.cols()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;
    use num_traits::Zero;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        BigRational::from_integer(n.into())
    }

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Q> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(q).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(Matrix::<Q>::identity(2).rank(), 2);
        assert_eq!(Matrix::<Q>::zero(3, 4).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        // [[1,2],[2,4]] has rank 1 (second row is twice the first)
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(Matrix::<Q>::identity(2).kernel_basis().cols(), 0);
        assert_eq!(Matrix::<Q>::zero(2, 3).kernel_basis().cols(), 3);
    }

    #[test]
    fn kernel_of_row_vector() {
        // ker [1 1] is spanned by (1,-1)
        let k = m(vec![vec![1, 1]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert_eq!(v[0].clone() + v[1].clone(), q(0));
        assert!(!v[0].is_zero());
    }

    #[test]
    fn image_of_column() {
        // im [[1],[2]] is one column proportional to (1,2)
        let im = m(vec![vec![1], vec![2]]).image_basis();
        assert_eq!(im.cols(), 1);
        let v = im.column(0);
        assert_eq!(v[1].clone() * q(1), v[0].clone() * q(2));
        assert_eq!(Matrix::<Q>::identity(2).image_basis().cols(), 2);
        assert_eq!(Matrix::<Q>::zero(2, 2).image_basis().cols(), 0);
    }

    #[test]
    fn rank_nullity() {
        let a = m(vec![vec![1, 2, 3], vec![0, 1, 1], vec![1, 3, 4]]);
        assert_eq!(a.rank() + a.kernel_basis().cols(), a.cols());
        // kernel columns really are killed
        let k = a.kernel_basis();
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(vec![vec![1, 0], vec![0, 0]]);
        let b_ok = m(vec![vec![5], vec![0]]);
        let b_bad = m(vec![vec![0], vec![1]]);
        let x = a.solve(&b_ok).unwrap();
        assert_eq!(a.mul(&x), b_ok);
        assert!(a.solve(&b_bad).is_none());
    }

    #[test]
    fn quotient_map_kills_subspace() {
        let sub = m(vec![vec![1], vec![1], vec![0]]);
        let qm = quotient_map(3, &sub);
        assert_eq!(qm.kept.len(), 2);
        assert!(qm.proj.mul(&sub).is_zero());
        // proj restricted to kept columns is the identity
        for (j, &i) in qm.kept.iter().enumerate() {
            let mut e = Matrix::zero(3, 1);
            e.set(i, 0, q(1));
            let p = qm.proj.mul(&e);
            for r in 0..2 {
                assert_eq!(*p.get(r, 0), if r == j { q(1) } else { q(0) });
            }
        }
    }

    #[test]
    fn stable_image_identity_tower() {
        let id = Matrix::<Q>::identity(2);
        let maps = vec![id.clone(), id.clone(), id.clone(), id];
        match stable_image(2, &maps, 3) {
            StableImage::Stable { basis, stage, .. } => {
                assert_eq!(basis.cols(), 2);
                assert_eq!(stage, 0);
            }
            other => panic!("expected stable, got {other:?}"),
        }
    }

    #[test]
    fn stable_image_zero_tower() {
        let z = Matrix::<Q>::zero(1, 1);
        let maps = vec![z.clone(), z.clone(), z.clone(), z];
        match stable_image(1, &maps, 3) {
            StableImage::Stable { basis, stage, .. } => {
                assert_eq!(basis.cols(), 0);
                assert_eq!(stage, 1);
            }
            other => panic!("expected stable, got {other:?}"),
        }
    }

    #[test]
    fn stable_image_eventually_zero() {
        // identity maps for t < 5, then zero: chain dims 1,1,1,1,1,0,0,0,0
        let id = Matrix::<Q>::identity(1);
        let z = Matrix::<Q>::zero(1, 1);
        let mut maps = vec![id.clone(), id.clone(), id.clone(), id];
        maps.extend(std::iter::repeat(z).take(4));
        match stable_image(1, &maps, 3) {
            StableImage::Stable { basis, stage, .. } => {
                assert_eq!(basis.cols(), 0);
                assert_eq!(stage, 5);
            }
            other => panic!("expected stable, got {other:?}"),
        }
    }

    #[test]
    fn stable_image_unstabilized() {
        let id = Matrix::<Q>::identity(1);
        let z = Matrix::<Q>::zero(1, 1);
        // too short to exhibit a plateau after the drop
        let maps = vec![id, z];
        assert!(matches!(
            stable_image(1, &maps, 3),
            StableImage::Unstabilized { .. }
        ));
    }
}
