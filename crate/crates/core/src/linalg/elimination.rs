//! Exact elimination: fraction-free kernels and ranks, Gram-Schmidt, inverses,
//! and coordinate extraction relative to a basis.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::matrix::ExactMatrix;
use crate::linalg::vector::ExactVector;
use crate::scalar::GaussRat;

/// Gaussian integer used inside Bareiss elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn one() -> Self {
        GaussInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Division known to be exact in `Z[i]`.
    fn div_exact(&self, o: &GaussInt) -> GaussInt {
        let n = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        debug_assert!((&re % &n).is_zero() && (&im % &n).is_zero(), "inexact Bareiss step");
        GaussInt {
            re: re / &n,
            im: im / n,
        }
    }

    fn to_rat(&self) -> GaussRat {
        GaussRat::from_parts(self.re.clone(), self.im.clone(), &BigInt::one())
    }
}

/// Row echelon form of the numerator grid via Bareiss elimination over `Z[i]`.
/// Returns the echelon rows (first `pivots.len()` rows are the pivot rows) and
/// the pivot columns in increasing order.
fn bareiss_echelon(b: &ExactMatrix) -> (Vec<Vec<GaussInt>>, Vec<usize>) {
    let (rows, cols) = b.shape();
    let mut m: Vec<Vec<GaussInt>> = (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    let (re, im) = b.numerator(r, c);
                    GaussInt { re, im }
                })
                .collect()
        })
        .collect();
    let mut prev = GaussInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let v = pivot_row[c].mul(&row[j]).sub(&factor.mul(&pivot_row[j]));
                row[j] = v.div_exact(&prev);
            }
            row[c] = GaussInt {
                re: BigInt::zero(),
                im: BigInt::zero(),
            };
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Basis of the null space of `b`, one vector per non-pivot column in
/// increasing column order; each vector has a one in its free column.
pub fn kernel_basis(b: &ExactMatrix) -> Vec<ExactVector> {
    let cols = b.cols();
    let (m, pivots) = bareiss_echelon(b);
    let pivot_rows: Vec<Vec<GaussRat>> = m[..pivots.len()]
        .iter()
        .map(|row| row.iter().map(GaussInt::to_rat).collect())
        .collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![GaussRat::zero(); cols];
            x[f] = GaussRat::one();
            for (k, &p) in pivots.iter().enumerate().rev() {
                let mut s = GaussRat::zero();
                for j in p + 1..cols {
                    if !x[j].is_zero() && !pivot_rows[k][j].is_zero() {
                        s += &(&pivot_rows[k][j] * &x[j]);
                    }
                }
                x[p] = (-s).checked_div(&pivot_rows[k][p]).expect("pivot is nonzero");
            }
            ExactVector::new(x)
        })
        .collect()
}

/// Exact rank via fraction-free elimination.
pub fn rank(b: &ExactMatrix) -> usize {
    bareiss_echelon(b).1.len()
}

/// Pairwise-orthogonal vectors spanning the same space as `vs`, without
/// normalization.
pub fn gram_schmidt(vs: &[ExactVector]) -> Result<Vec<ExactVector>> {
    let mut out: Vec<(ExactVector, GaussRat)> = Vec::with_capacity(vs.len());
    for (index, v) in vs.iter().enumerate() {
        let mut w = v.clone();
        for (q, qq) in &out {
            let c = v.inner(q)?.checked_div(qq)?;
            if !c.is_zero() {
                w = w.sub(&q.scale(&c))?;
            }
        }
        if w.is_zero() {
            return Err(Error::DependentVectors { index });
        }
        let ww = w.norm_sq();
        out.push((w, ww));
    }
    Ok(out.into_iter().map(|(w, _)| w).collect())
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<GaussRat>], ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..nrows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            let (src, dst) = if i < r {
                let (a, b) = m.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = m.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for j in 0..dst.len() {
                if !src[j].is_zero() {
                    dst[j] -= &(&f * &src[j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn inverse(b: &ExactMatrix) -> Result<ExactMatrix> {
    if !b.is_square() {
        return Err(Error::DimensionMismatch {
            op: "inverse",
            left: b.shape(),
            right: b.shape(),
        });
    }
    let n = b.rows();
    let mut m: Vec<Vec<GaussRat>> = (0..n)
        .map(|r| {
            let mut row: Vec<GaussRat> = (0..n).map(|c| b.get(r, c)).collect();
            row.extend((0..n).map(|c| if c == r { GaussRat::one() } else { GaussRat::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut m, n);
    if pivots.len() < n {
        return Err(Error::Singular);
    }
    Ok(ExactMatrix::from_fn(n, n, |r, c| m[r][n + c].clone()))
}

/// Unique solution of `b x = y` for square invertible `b`.
pub fn solve(b: &ExactMatrix, y: &ExactVector) -> Result<ExactVector> {
    inverse(b)?.matvec(y)
}

/// Coordinates relative to a fixed linearly independent family of vectors.
///
/// Picks a set of coordinates on which the family is invertible, solves the
/// square system there, and confirms the full reconstruction exactly.
#[derive(Clone, Debug)]
pub struct BasisFrame {
    vectors: Vec<ExactVector>,
    rows: Vec<usize>,
    inv: ExactMatrix,
}

impl BasisFrame {
    pub fn new(vectors: &[ExactVector]) -> Result<Self> {
        let k = vectors.len();
        let n = vectors.first().map_or(0, |v| v.len());
        let mut m: Vec<Vec<GaussRat>> = vectors.iter().map(|v| v.entries().to_vec()).collect();
        let rows = rref(&mut m, n);
        if rows.len() < k {
            return Err(Error::DependentVectors { index: rows.len() });
        }
        let square = ExactMatrix::from_fn(k, k, |i, j| vectors[j].get(rows[i]).clone());
        Ok(BasisFrame {
            vectors: vectors.to_vec(),
            rows,
            inv: inverse(&square)?,
        })
    }

    pub fn vectors(&self) -> &[ExactVector] {
        &self.vectors
    }

    /// Coefficients `c` with `y = sum c_k v_k`, or `NotInSpan`.
    pub fn coordinates(&self, y: &ExactVector) -> Result<Vec<GaussRat>> {
        let restricted = ExactVector::new(self.rows.iter().map(|&r| y.get(r).clone()).collect());
        let c = self.inv.matvec(&restricted)?;
        let back = ExactVector::combination(c.entries(), &self.vectors)?;
        if &back != y {
            return Err(Error::NotInSpan);
        }
        Ok(c.entries().to_vec())
    }

    /// Matrix whose column `j` holds the coordinates of `ys[j]`.
    pub fn coordinate_matrix(&self, ys: &[ExactVector]) -> Result<ExactMatrix> {
        let cols = ys
            .iter()
            .map(|y| self.coordinates(y).map(ExactVector::new))
            .collect::<Result<Vec<_>>>()?;
        ExactMatrix::from_columns(&cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_identity_and_zero() {
        assert!(kernel_basis(&ExactMatrix::identity(3)).is_empty());
        let k = kernel_basis(&ExactMatrix::zeros(2, 2));
        assert_eq!(k, vec![ExactVector::unit(2, 0), ExactVector::unit(2, 1)]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let b = ExactMatrix::from_int_rows(&[
            vec![(1, 1), (2, 0), (3, -1), (0, 2)],
            vec![(2, 2), (4, 0), (6, -2), (0, 4)],
            vec![(0, 1), (1, 0), (0, 0), (5, 0)],
        ]);
        let k = kernel_basis(&b);
        assert_eq!(k.len() + rank(&b), 4);
        assert_eq!(rank(&b), 2);
        for v in &k {
            assert!(b.matvec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn gram_schmidt_examples() {
        let out = gram_schmidt(&[
            ExactVector::from_ints(&[(1, 0), (0, 0)]),
            ExactVector::from_ints(&[(1, 0), (1, 0)]),
        ])
        .unwrap();
        assert_eq!(out[0], ExactVector::from_ints(&[(1, 0), (0, 0)]));
        assert_eq!(out[1], ExactVector::from_ints(&[(0, 0), (1, 0)]));
        let dep = gram_schmidt(&[
            ExactVector::from_ints(&[(1, 0), (0, 1)]),
            ExactVector::from_ints(&[(0, 1), (-1, 0)]),
        ]);
        assert_eq!(dep, Err(Error::DependentVectors { index: 1 }));
    }

    #[test]
    fn inverse_round_trip_and_singular() {
        let b = ExactMatrix::from_int_rows(&[vec![(1, 0), (1, 0)], vec![(0, -1), (0, 1)]]);
        let inv = inverse(&b).unwrap();
        assert_eq!(b.matmul(&inv).unwrap(), ExactMatrix::identity(2));
        assert_eq!(inverse(&ExactMatrix::zeros(2, 2)), Err(Error::Singular));
    }

    #[test]
    fn basis_frame_coordinates() {
        let vs = vec![
            ExactVector::from_ints(&[(1, 0), (1, 0), (0, 0)]),
            ExactVector::from_ints(&[(0, 0), (1, 1), (2, 0)]),
        ];
        let frame = BasisFrame::new(&vs).unwrap();
        let c = vec![GaussRat::from_gauss_int(3, -1), GaussRat::from_frac(1, 2).unwrap()];
        let y = ExactVector::combination(&c, &vs).unwrap();
        assert_eq!(frame.coordinates(&y).unwrap(), c);
        assert_eq!(frame.coordinates(&ExactVector::unit(3, 2)), Err(Error::NotInSpan));
    }
}
