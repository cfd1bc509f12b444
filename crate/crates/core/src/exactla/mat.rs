use std::fmt;

use super::scalar::Scalar;

/// Dense matrix over exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of row reduction: the reduced matrix and the pivot column of each
/// pivot row, in ascending order.
#[derive(Clone)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Quotient data for `k^rows / im(m)`: `proj * m == 0`, `proj * section` is
/// the identity on the quotient, and the section's columns are unit vectors,
/// so chosen coset representatives are coordinate vectors.
#[derive(Clone)]
pub struct Cokernel {
    pub dim: usize,
    pub proj: Mat,
    pub section: Mat,
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
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer literal helper, mostly for tests.
    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Scalar::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(self.rows)
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.at(i, j).clone());
            }
        }
        m
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let mut m = self.clone();
        for x in &mut m.data {
            *x = &*x * s;
        }
        m
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch");
        let mut m = self.clone();
        for (x, y) in m.data.iter_mut().zip(&other.data) {
            *x = &*x + y;
        }
        m
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch");
        let mut m = self.clone();
        for (x, y) in m.data.iter_mut().zip(&other.data) {
            *x = &*x - y;
        }
        m
    }

    pub fn neg(&self) -> Mat {
        let mut m = self.clone();
        for x in &mut m.data {
            *x = -&*x;
        }
        m
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert!(self.cols == other.rows, "shape mismatch in mul");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j);
                    let v = &(a * b) + cur;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product where the vector is a single-column matrix.
    pub fn mul_vec(&self, v: &Mat) -> Mat {
        assert_eq!(v.cols(), 1);
        self.mul(v)
    }

    pub fn col(&self, j: usize) -> Mat {
        let mut m = Mat::zeros(self.rows, 1);
        for i in 0..self.rows {
            m.set(i, 0, self.at(i, j).clone());
        }
        m
    }

    pub fn cols_subset(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.rows, idx.len());
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                m.set(i, jj, self.at(i, j).clone());
            }
        }
        m
    }

    pub fn rows_subset(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(idx.len(), self.cols);
        for (ii, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m.set(ii, j, self.at(i, j).clone());
            }
        }
        m
    }

    pub fn hstack(parts: &[&Mat]) -> Mat {
        assert!(!parts.is_empty());
        let rows = parts[0].rows;
        assert!(parts.iter().all(|p| p.rows == rows), "hstack row mismatch");
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Mat::zeros(rows, cols);
        let mut off = 0;
        for p in parts {
            for i in 0..rows {
                for j in 0..p.cols {
                    m.set(i, off + j, p.at(i, j).clone());
                }
            }
            off += p.cols;
        }
        m
    }

    pub fn vstack(parts: &[&Mat]) -> Mat {
        assert!(!parts.is_empty());
        let cols = parts[0].cols;
        assert!(parts.iter().all(|p| p.cols == cols), "vstack col mismatch");
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut m = Mat::zeros(rows, cols);
        let mut off = 0;
        for p in parts {
            for i in 0..p.rows {
                for j in 0..cols {
                    m.set(off + i, j, p.at(i, j).clone());
                }
            }
            off += p.rows;
        }
        m
    }

    /// Block matrix from a grid; row heights and column widths are inferred
    /// and must be consistent.
    pub fn from_blocks(blocks: &[Vec<&Mat>]) -> Mat {
        let rows: Vec<Mat> = blocks
            .iter()
            .map(|row| {
                let refs: Vec<&Mat> = row.to_vec();
                Mat::hstack(&refs)
            })
            .collect();
        let refs: Vec<&Mat> = rows.iter().collect();
        Mat::vstack(&refs)
    }

    /// Direct sum: blocks on the diagonal, zeros elsewhere.
    pub fn block_diag(parts: &[&Mat]) -> Mat {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Mat::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for p in parts {
            for i in 0..p.rows {
                for j in 0..p.cols {
                    m.set(ro + i, co + j, p.at(i, j).clone());
                }
            }
            ro += p.rows;
            co += p.cols;
        }
        m
    }

    /// Reduced row echelon form with deterministic first-nonzero pivoting:
    /// columns are scanned left to right and the first row with a nonzero
    /// entry below the current pivot row is chosen, with no magnitude
    /// heuristics.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow >= m.rows {
                break;
            }
            let mut sel = None;
            for r in prow..m.rows {
                if !m.at(r, col).is_zero() {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != prow {
                for j in 0..m.cols {
                    let a = m.at(sel, j).clone();
                    let b = m.at(prow, j).clone();
                    m.set(sel, j, b);
                    m.set(prow, j, a);
                }
            }
            let inv = m.at(prow, col).inv();
            for j in col..m.cols {
                let v = m.at(prow, j) * &inv;
                m.set(prow, j, v);
            }
            for r in 0..m.rows {
                if r == prow || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in col..m.cols {
                    let v = m.at(r, j) - &(&factor * m.at(prow, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of the null space, one column per free variable in ascending
    /// column order. Returns a `cols x nullity` matrix.
    pub fn kernel_basis(&self) -> Mat {
        let rr = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in rr.pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|j| pivot_set[*j].is_none()).collect();
        let mut out = Mat::zeros(self.cols, free.len());
        for (k, &fj) in free.iter().enumerate() {
            out.set(fj, k, Scalar::one());
            for (row, &pcol) in rr.pivots.iter().enumerate() {
                let v = rr.mat.at(row, fj);
                if !v.is_zero() {
                    out.set(pcol, k, -v);
                }
            }
        }
        out
    }

    /// A particular solution of `self * x = rhs` (multi-column rhs allowed),
    /// with free variables set to zero. `None` if inconsistent.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows, "solve shape mismatch");
        let aug = Mat::hstack(&[self, rhs]);
        let rr = aug.rref();
        // A pivot in the rhs block means an inconsistent row.
        if rr.pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.cols, rhs.cols);
        for (row, &pcol) in rr.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pcol, j, rr.mat.at(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Columns of `self` that form a basis of the column space (the pivot
    /// columns, in order).
    pub fn image_basis(&self) -> Mat {
        let rr = self.rref();
        self.cols_subset(&rr.pivots)
    }

    /// Quotient of the target space by the column space: a projection onto
    /// chosen unit-vector coset representatives and the matching section.
    pub fn cokernel_data(&self) -> Cokernel {
        // Echelonize the row space of the transpose to find the leading
        // coordinates of the image; the complementary unit vectors represent
        // the quotient.
        let rt = self.transpose().rref();
        let lead: Vec<usize> = rt.pivots.clone();
        let is_lead = {
            let mut v = vec![false; self.rows];
            for &c in &lead {
                v[c] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.rows).filter(|i| !is_lead[*i]).collect();
        let dim = free.len();
        let image = rt.mat.rows_subset(&(0..rt.rank()).collect::<Vec<_>>()).transpose();
        let mut section = Mat::zeros(self.rows, dim);
        for (k, &i) in free.iter().enumerate() {
            section.set(i, k, Scalar::one());
        }
        // v = image * x + section * y; recover y as the bottom rows of the
        // inverse change of basis.
        let basis = Mat::hstack(&[&image, &section]);
        let inv = basis
            .solve(&Mat::identity(self.rows))
            .expect("cokernel basis must be invertible");
        let proj = inv.rows_subset(&(image.cols()..self.rows).collect::<Vec<_>>());
        Cokernel { dim, proj, section }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let m = Mat::from_ints(&[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(*k.at(0, 0), Scalar::from_int(-2));
        assert_eq!(*k.at(1, 0), Scalar::from_int(1));
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Mat::from_ints(&[&[2, 4, 1], &[0, 3, 7], &[2, 7, 8]]);
        let rr = m.rref();
        let again = rr.mat.rref();
        assert_eq!(rr.mat, again.mat);
        assert_eq!(rr.pivots, again.pivots);
    }

    #[test]
    fn solve_exact_fractions() {
        let a = Mat::from_rows(vec![
            vec![Scalar::ratio(1, 3), Scalar::from_int(1)],
            vec![Scalar::from_int(0), Scalar::ratio(2, 5)],
        ]);
        let b = Mat::from_rows(vec![vec![Scalar::from_int(1)], vec![Scalar::from_int(1)]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        assert_eq!(*x.at(1, 0), Scalar::ratio(5, 2));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = Mat::from_ints(&[&[1, 2], &[2, 4]]);
        let b = Mat::from_ints(&[&[1], &[3]]);
        assert!(a.solve(&b).is_none());
    }

    #[test]
    fn cokernel_contract() {
        let m = Mat::from_ints(&[&[1, 0], &[2, 0], &[0, 0]]);
        let ck = m.cokernel_data();
        assert_eq!(ck.dim, 2);
        assert!(ck.proj.mul(&m).is_zero());
        assert!(ck.proj.mul(&ck.section).is_identity());
    }

    #[test]
    fn image_basis_spans_columns() {
        let m = Mat::from_ints(&[&[1, 2, 3], &[0, 0, 1]]);
        let im = m.image_basis();
        assert_eq!(im.cols(), 2);
        // Every original column solves against the basis.
        assert!(im.solve(&m).is_some());
    }
}
