//! Dense exact matrices over Q(√d) and the few linear-algebra primitives the
//! rest of the crate needs: rank, nullspace, determinant, characteristic
//! polynomial.

use crate::poly::IntPolynomial;
use crate::scalar::QScalar;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<QScalar>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![QScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, QScalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<QScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &QScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QScalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// All entries must live in one quadratic field (rationals are neutral).
    pub fn check_field(&self) -> Result<u32> {
        let mut d = 0u32;
        for e in &self.entries {
            let ed = e.field();
            if ed != 0 {
                if d == 0 {
                    d = ed;
                } else if d != ed {
                    return Err(Error::MixedField(d, ed));
                }
            }
        }
        Ok(d)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn neg(&self) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &QScalar) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.clone() * s).collect(),
        }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = QScalar::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(i, k).clone() * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[QScalar]) -> Vec<QScalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = QScalar::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(i, k).clone() * &v[k];
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> QScalar {
        assert!(self.is_square());
        let mut acc = QScalar::zero();
        for i in 0..self.rows {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    /// Column-vector outer product v · wᵀ.
    pub fn outer(v: &[QScalar], w: &[QScalar]) -> QMatrix {
        let mut m = QMatrix::zeros(v.len(), w.len());
        for i in 0..v.len() {
            for j in 0..w.len() {
                m.set(i, j, v[i].clone() * &w[j]);
            }
        }
        m
    }

    /// Row echelon form in place; returns the pivot columns.
    fn echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for j in 0..self.cols {
                    let a = self.get(row, j).clone();
                    let b = self.get(pr, j).clone();
                    self.set(row, j, b);
                    self.set(pr, j, a);
                }
            }
            let inv = self.get(row, col).inv();
            for j in col..self.cols {
                let v = self.get(row, j).clone() * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j).clone() - f.clone() * self.get(row, j);
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Rank over Q(√d) by exact Gaussian elimination.
    pub fn rank(&self) -> Result<usize> {
        self.check_field()?;
        let mut m = self.clone();
        Ok(m.echelon().len())
    }

    /// Basis of the right nullspace {x : Mx = 0}.
    pub fn nullspace(&self) -> Result<Vec<Vec<QScalar>>> {
        self.check_field()?;
        let mut m = self.clone();
        let pivots = m.echelon();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut x = vec![QScalar::zero(); self.cols];
            x[free] = QScalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -m.get(r, free).clone();
            }
            basis.push(x);
        }
        Ok(basis)
    }

    /// Exact determinant via fraction-controlled elimination.
    pub fn det(&self) -> Result<QScalar> {
        assert!(self.is_square());
        self.check_field()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = QScalar::one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(QScalar::zero());
            };
            if pr != col {
                det = -det;
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(col, j, b);
                    m.set(pr, j, a);
                }
            }
            let p = m.get(col, col).clone();
            det = det * &p;
            let inv = p.inv();
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone() * &inv;
                for j in col..n {
                    let v = m.get(r, j).clone() - f.clone() * m.get(col, j);
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Coefficients of det(t·I + M), constant term first, as exact scalars.
    ///
    /// Faddeev–LeVerrier on -M: only divisions by integers occur, so the
    /// result is exact over the field.
    pub fn charpoly_scalars(&self) -> Result<Vec<QScalar>> {
        assert!(self.is_square(), "charpoly of non-square matrix");
        self.check_field()?;
        let n = self.rows;
        let a = self.neg();
        // p(t) = det(tI - (-M)) = t^n + c[1] t^(n-1) + ... + c[n]
        let mut coeffs = vec![QScalar::one()];
        let mut mk = QMatrix::identity(n);
        for k in 1..=n {
            mk = a.mul(&mk);
            let ck = -(mk.trace() * QScalar::from_ratio(1, k as i64));
            for i in 0..n {
                let v = mk.get(i, i).clone() + ck.clone();
                mk.set(i, i, v);
            }
            coeffs.push(ck);
        }
        // Reverse to constant-first ordering.
        coeffs.reverse();
        Ok(coeffs)
    }

    /// det(t·I + M) with integer coefficients, erroring if any coefficient is
    /// not a rational integer.
    pub fn charpoly(&self) -> Result<IntPolynomial> {
        let coeffs = self.charpoly_scalars()?;
        let mut ints = Vec::with_capacity(coeffs.len());
        for (deg, c) in coeffs.iter().enumerate() {
            match c.to_bigint() {
                Some(v) => ints.push(v),
                None => return Err(Error::NonIntegerCoefficient(deg)),
            }
        }
        Ok(IntPolynomial::new(ints))
    }

    /// Cofactor-expansion determinant, kept as an independent cross-check for
    /// small matrices.
    pub fn det_cofactor(&self) -> QScalar {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return QScalar::one();
        }
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut acc = QScalar::zero();
        for j in 0..n {
            if self.get(0, j).is_zero() {
                continue;
            }
            let mut minor = QMatrix::zeros(n - 1, n - 1);
            for r in 1..n {
                let mut cc = 0;
                for c in 0..n {
                    if c == j {
                        continue;
                    }
                    minor.set(r - 1, cc, self.get(r, c).clone());
                    cc += 1;
                }
            }
            let term = self.get(0, j).clone() * minor.det_cofactor();
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }
}

impl std::fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}  ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Exact dot product uᵀ·G·v for a symmetric Gram matrix G.
pub fn gram_dot(gram: &QMatrix, u: &[QScalar], v: &[QScalar]) -> QScalar {
    let gv = gram.mul_vec(v);
    let mut acc = QScalar::zero();
    for (ui, gvi) in u.iter().zip(&gv) {
        acc = acc + ui.clone() * gvi;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> QMatrix {
        QMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(QScalar::from_int).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_identity() {
        assert_eq!(QMatrix::identity(3).rank().unwrap(), 3);
    }

    #[test]
    fn rank_of_rank_one() {
        let a = m(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(a.rank().unwrap(), 1);
        let ns = a.nullspace().unwrap();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(QScalar::is_zero));
    }

    #[test]
    fn charpoly_zero_matrix() {
        // det(tI + 0) = t²
        let p = QMatrix::zeros(2, 2).charpoly().unwrap();
        assert_eq!(p.coeffs(), &[BigInt::from(0), BigInt::from(0), BigInt::from(1)]);
    }

    #[test]
    fn charpoly_scalar_matrix() {
        // det(tI + 3I) = (t+3)² over rank 2
        let p = QMatrix::identity(2).scale(&QScalar::from_int(3)).charpoly().unwrap();
        assert_eq!(p.coeffs(), &[BigInt::from(9), BigInt::from(6), BigInt::from(1)]);
    }

    #[test]
    fn mixed_field_detected() {
        let mut a = QMatrix::identity(2);
        a.set(0, 1, QScalar::sqrt_of(2));
        a.set(1, 0, QScalar::sqrt_of(5));
        assert!(matches!(a.rank(), Err(Error::MixedField(_, _))));
    }

    fn arb_mat(n: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec(-6i64..7, n * n).prop_map(move |vals| {
            let rows = vals
                .chunks(n)
                .map(|ch| ch.iter().map(|&v| QScalar::from_int(v)).collect())
                .collect();
            QMatrix::from_rows(rows)
        })
    }

    proptest! {
        #[test]
        fn rank_equals_transpose_rank(a in arb_mat(3)) {
            prop_assert_eq!(a.rank().unwrap(), a.transpose().rank().unwrap());
        }

        #[test]
        fn charpoly_at_zero_is_det(a in arb_mat(3)) {
            // det(tI + A) at t=0 is det(A); cofactor expansion is the oracle.
            let p = a.charpoly_scalars().unwrap();
            prop_assert_eq!(p[0].clone(), a.det_cofactor());
            prop_assert_eq!(a.det().unwrap(), a.det_cofactor());
        }
    }
}
