//! Finitely presented graded modules: cokernels of scalar-monomial matrices
//! between shifted free modules, realized degree by degree.
//!
//! In the fine Z^n grading every shifted free module contributes at most one
//! basis vector per degree, so the degree-w piece of a cokernel is cut out by
//! a small exact matrix whose entries are the scalar coefficients of the
//! relation matrix.  Localization at a set of variables only relaxes which
//! generators and relations are present.

use std::fmt;
use std::sync::Arc;

use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{quotient_map, Matrix};
use crate::monomial::{MonomialIdeal, RingSpec};

/// A matrix of terms c * x^v between shifted free modules.  The exponent of
/// the entry in row k, column j is forced by the grading to be
/// `col_shifts[j] - row_shifts[k]`, so only the scalar is stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MonoMatrix<F> {
    pub row_shifts: Vec<Multidegree>,
    pub col_shifts: Vec<Multidegree>,
    /// cols[j] is the sparse column: (row index, scalar) pairs.
    pub cols: Vec<Vec<(usize, F)>>,
}

impl<F: Scalar> MonoMatrix<F> {
    pub fn new(
        row_shifts: Vec<Multidegree>,
        col_shifts: Vec<Multidegree>,
        cols: Vec<Vec<(usize, F)>>,
    ) -> Result<Self> {
        if cols.len() != col_shifts.len() {
            return Err(Error::DimensionMismatch(
                "column count differs from column shift count".into(),
            ));
        }
        let m = MonoMatrix {
            row_shifts,
            col_shifts,
            cols,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn empty(row_shifts: Vec<Multidegree>) -> Self {
        MonoMatrix {
            row_shifts,
            col_shifts: vec![],
            cols: vec![],
        }
    }

    fn validate(&self) -> Result<()> {
        for (j, col) in self.cols.iter().enumerate() {
            for (k, c) in col {
                if *k >= self.row_shifts.len() {
                    return Err(Error::DimensionMismatch(format!(
                        "entry ({k},{j}) outside the matrix"
                    )));
                }
                if c.is_zero() {
                    continue;
                }
                let expo = &self.col_shifts[j] - &self.row_shifts[*k];
                if !expo.is_nonnegative() {
                    return Err(Error::Invalid(format!(
                        "entry ({k},{j}) would need monomial of degree {expo}, which is not a monomial"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.row_shifts.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_shifts.len()
    }

    /// The exponent vector of the entry at (k, j).
    pub fn exponent(&self, k: usize, j: usize) -> Multidegree {
        &self.col_shifts[j] - &self.row_shifts[k]
    }

    /// Realize the map at internal degree `w` over the localization that
    /// inverts the variables of `inverted`: rows/columns are present when
    /// their shifted free module is nonzero at `w`, and each present entry
    /// contributes its scalar.
    pub fn realize(&self, inverted: u32, w: &Multidegree) -> RealizedMap<F> {
        let rows_present: Vec<usize> = (0..self.rows())
            .filter(|&k| w.geq_off(&self.row_shifts[k], inverted))
            .collect();
        let cols_present: Vec<usize> = (0..self.ncols())
            .filter(|&j| w.geq_off(&self.col_shifts[j], inverted))
            .collect();
        let row_pos: Vec<Option<usize>> = {
            let mut v = vec![None; self.rows()];
            for (p, &k) in rows_present.iter().enumerate() {
                v[k] = Some(p);
            }
            v
        };
        let mut matrix = Matrix::zero(rows_present.len(), cols_present.len());
        for (cp, &j) in cols_present.iter().enumerate() {
            for (k, c) in &self.cols[j] {
                if let Some(rp) = row_pos[*k] {
                    matrix.set(rp, cp, c.clone());
                }
            }
        }
        RealizedMap {
            rows_present,
            cols_present,
            matrix,
        }
    }
}

/// A degreewise realization of a [`MonoMatrix`].
pub struct RealizedMap<F> {
    pub rows_present: Vec<usize>,
    pub cols_present: Vec<usize>,
    pub matrix: Matrix<F>,
}

/// A finitely presented graded module: the cokernel of `relations`, whose row
/// shifts are the degrees of the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation<F> {
    pub ring: Arc<RingSpec>,
    pub relations: MonoMatrix<F>,
}

impl<F: Scalar> Presentation<F> {
    pub fn new(ring: Arc<RingSpec>, relations: MonoMatrix<F>) -> Self {
        Presentation { ring, relations }
    }

    /// Free module with the given generator degrees.
    pub fn free(ring: Arc<RingSpec>, gen_shifts: Vec<Multidegree>) -> Self {
        Presentation {
            ring,
            relations: MonoMatrix::empty(gen_shifts),
        }
    }

    /// Rank-one free module generated in degree 0.
    pub fn unit(ring: Arc<RingSpec>) -> Self {
        let z = Multidegree::zero(ring.num_vars);
        Self::free(ring, vec![z])
    }

    /// S/a for a monomial ideal a.
    pub fn cyclic_quotient(ideal: &MonomialIdeal) -> Self {
        let ring = ideal.ring.clone();
        let z = Multidegree::zero(ring.num_vars);
        let col_shifts: Vec<Multidegree> = ideal.generators().to_vec();
        let cols = ideal.generators().iter().map(|_| vec![(0, F::one())]).collect();
        Presentation {
            ring,
            relations: MonoMatrix {
                row_shifts: vec![z],
                col_shifts,
                cols,
            },
        }
    }

    pub fn gens(&self) -> &[Multidegree] {
        &self.relations.row_shifts
    }

    pub fn is_free(&self) -> bool {
        self.relations.ncols() == 0
    }

    pub fn shifted(&self, s: &Multidegree) -> Presentation<F> {
        let rel = MonoMatrix {
            row_shifts: self.relations.row_shifts.iter().map(|r| r + s).collect(),
            col_shifts: self.relations.col_shifts.iter().map(|c| c + s).collect(),
            cols: self.relations.cols.clone(),
        };
        Presentation {
            ring: self.ring.clone(),
            relations: rel,
        }
    }

    /// M / a M: append the columns g * e_k for every generator g of `a`.
    pub fn quotient_by(&self, a: &MonomialIdeal) -> Presentation<F> {
        let mut rel = self.relations.clone();
        for g in a.generators() {
            for (k, rs) in self.relations.row_shifts.iter().enumerate() {
                rel.col_shifts.push(rs + g);
                rel.cols.push(vec![(k, F::one())]);
            }
        }
        Presentation {
            ring: self.ring.clone(),
            relations: rel,
        }
    }

    pub fn direct_sum(&self, other: &Presentation<F>) -> Presentation<F> {
        assert!(Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring);
        let off = self.relations.rows();
        let mut row_shifts = self.relations.row_shifts.clone();
        row_shifts.extend(other.relations.row_shifts.iter().cloned());
        let mut col_shifts = self.relations.col_shifts.clone();
        col_shifts.extend(other.relations.col_shifts.iter().cloned());
        let mut cols = self.relations.cols.clone();
        cols.extend(
            other
                .relations
                .cols
                .iter()
                .map(|col| col.iter().map(|(k, c)| (k + off, c.clone())).collect()),
        );
        Presentation {
            ring: self.ring.clone(),
            relations: MonoMatrix {
                row_shifts,
                col_shifts,
                cols,
            },
        }
    }

    /// Basis data of the degree-w piece of the (localized) cokernel: which
    /// generators are present, which of them survive as a basis of the
    /// quotient, and the projection writing any present-generator vector in
    /// that basis.
    pub fn realize_coker(&self, inverted: u32, w: &Multidegree) -> RealizedCoker<F> {
        let r = self.relations.realize(inverted, w);
        let image = r.matrix.image_basis();
        let qm = quotient_map(r.rows_present.len(), &image);
        RealizedCoker {
            gens_present: r.rows_present,
            kept: qm.kept,
            proj: qm.proj,
        }
    }

    pub fn dim_at(&self, inverted: u32, w: &Multidegree) -> usize {
        self.realize_coker(inverted, w).dim()
    }

    /// Matrix of multiplication by x^v from the degree-w piece to the
    /// degree-(w+v) piece, in the chosen cokernel bases.
    pub fn mult_map(
        &self,
        w: &Multidegree,
        v: &Multidegree,
        src: &RealizedCoker<F>,
        dst: &RealizedCoker<F>,
    ) -> Matrix<F> {
        debug_assert!(v.is_nonnegative());
        let dst_pos: Vec<Option<usize>> = {
            let mut m = vec![None; self.relations.rows()];
            for (p, &k) in dst.gens_present.iter().enumerate() {
                m[k] = Some(p);
            }
            m
        };
        let mut ambient = Matrix::zero(dst.gens_present.len(), src.dim());
        for (bcol, &pos) in src.kept.iter().enumerate() {
            let gen = src.gens_present[pos];
            let dp = dst_pos[gen].unwrap_or_else(|| {
                panic!(
                    "generator {gen} present at {w} must stay present at {}",
                    &(w + v) as &Multidegree
                )
            });
            ambient.set(dp, bcol, F::one());
        }
        dst.proj.mul(&ambient)
    }

    /// Is the localized module zero?  A cokernel vanishes exactly when every
    /// generator lies in the image of the relations at its own degree.
    pub fn is_zero_localized(&self, inverted: u32) -> bool {
        for (k, rs) in self.relations.row_shifts.iter().enumerate() {
            let r = self.relations.realize(inverted, rs);
            let pos = r
                .rows_present
                .iter()
                .position(|&g| g == k)
                .expect("generator present at its own degree");
            let mut e = Matrix::zero(r.rows_present.len(), 1);
            e.set(pos, 0, F::one());
            if r.matrix.solve(&e).is_none() {
                return false;
            }
        }
        true
    }

    pub fn is_zero_module(&self) -> bool {
        self.is_zero_localized(0)
    }

    /// Monomial support primes, as variable bitmasks: P_sigma is in the
    /// support iff localizing at the complementary variables leaves a nonzero
    /// module.  Returns the minimal ones.
    pub fn support_primes(&self) -> Vec<u32> {
        let n = self.ring.num_vars;
        let all = (1u32 << n) - 1;
        let mut supp: Vec<u32> = Vec::new();
        for sigma in 0..=all {
            let inverted = all & !sigma;
            if !self.is_zero_localized(inverted) {
                supp.push(sigma);
            }
        }
        // keep only minimal masks
        let mut minimal: Vec<u32> = Vec::new();
        let mut sorted = supp;
        sorted.sort_by_key(|m| m.count_ones());
        for m in sorted {
            if minimal.iter().any(|&p| p & m == p) {
                continue;
            }
            minimal.push(m);
        }
        minimal.sort();
        minimal
    }

    /// Krull dimension: None encodes dim(0) = -infinity.
    pub fn krull_dim(&self) -> Option<i64> {
        if self.is_zero_module() {
            return None;
        }
        let n = self.ring.num_vars as i64;
        self.support_primes()
            .iter()
            .map(|m| n - m.count_ones() as i64)
            .max()
    }

    /// Largest total degree among generator and relation shifts; feeds the
    /// box-margin policy.
    pub fn max_shift_total(&self) -> i64 {
        self.relations
            .row_shifts
            .iter()
            .chain(self.relations.col_shifts.iter())
            .map(|s| s.total().abs())
            .max()
            .unwrap_or(0)
    }
}

/// Basis data of one degreewise piece of a localized cokernel.
#[derive(Clone, Debug)]
pub struct RealizedCoker<F> {
    pub gens_present: Vec<usize>,
    /// positions into `gens_present` whose classes form the chosen basis
    pub kept: Vec<usize>,
    /// projection (dim x gens_present.len()) onto that basis modulo the image
    pub proj: Matrix<F>,
}

impl<F: Scalar> RealizedCoker<F> {
    pub fn dim(&self) -> usize {
        self.kept.len()
    }

    /// Inclusion of the chosen basis back into present-generator coordinates.
    pub fn include(&self) -> Matrix<F> {
        let mut m = Matrix::zero(self.gens_present.len(), self.kept.len());
        for (j, &pos) in self.kept.iter().enumerate() {
            m.set(pos, j, F::one());
        }
        m
    }
}

impl<F: Scalar> fmt::Display for Presentation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coker({} relations on {} generators)",
            self.relations.ncols(),
            self.relations.rows()
        )
    }
}
