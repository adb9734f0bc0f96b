use serde::{Deserialize, Serialize};

use super::bases::{BasisKind, SixBases};
use crate::cube::{CubeContext, Operator};
use crate::error::Result;
use crate::linalg::{BasisFrame, ExactMatrix, ExactVector};
use crate::report::IdentityCheck;
use crate::scalar::GaussRat;

/// Closed forms a represented operator can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixForm {
    /// `diag(d, d-2, ..., -d)`
    #[serde(rename = "diag")]
    Diagonal,
    /// Subdiagonal `1, 2, ..., d`, superdiagonal `d, d-1, ..., 1`.
    #[serde(rename = "matrika1")]
    Tridiagonal,
    /// `i` times the tridiagonal form with its subdiagonal negated.
    #[serde(rename = "matrika2")]
    NegatedSub,
    /// `i` times the tridiagonal form with its superdiagonal negated.
    #[serde(rename = "matrika3")]
    NegatedSuper,
}

impl MatrixForm {
    pub fn name(self) -> &'static str {
        match self {
            MatrixForm::Diagonal => "diag",
            MatrixForm::Tridiagonal => "matrika1",
            MatrixForm::NegatedSub => "matrika2",
            MatrixForm::NegatedSuper => "matrika3",
        }
    }

    pub fn matrix(self, d: usize) -> ExactMatrix {
        let n = d + 1;
        let di = d as i64;
        ExactMatrix::from_int_fn(n, n, |r, c| {
            let r64 = r as i64;
            match self {
                MatrixForm::Diagonal => ((r == c) as i64 * (di - 2 * r64), 0),
                _ => {
                    let sub = if r == c + 1 { r64 } else { 0 };
                    let sup = if c == r + 1 { di - r64 } else { 0 };
                    match self {
                        MatrixForm::Tridiagonal => (sub + sup, 0),
                        MatrixForm::NegatedSub => (0, sup - sub),
                        _ => (0, sub - sup),
                    }
                }
            }
        })
    }
}

/// The form each operator takes in each basis.
pub fn expected_form(basis: BasisKind, op: Operator) -> MatrixForm {
    use BasisKind::*;
    use MatrixForm::*;
    use Operator::*;
    match (basis, op) {
        (AsA, A) => Tridiagonal,
        (AsA, AStar) => Diagonal,
        (AsA, AEps) => NegatedSub,
        (AeA, A) => Tridiagonal,
        (AeA, AStar) => NegatedSuper,
        (AeA, AEps) => Diagonal,
        (AeAs, A) => NegatedSub,
        (AeAs, AStar) => Tridiagonal,
        (AeAs, AEps) => Diagonal,
        (AAs, A) => Diagonal,
        (AAs, AStar) => Tridiagonal,
        (AAs, AEps) => NegatedSuper,
        (AAe, A) => Diagonal,
        (AAe, AStar) => NegatedSub,
        (AAe, AEps) => Tridiagonal,
        (AsAe, A) => NegatedSuper,
        (AsAe, AStar) => Diagonal,
        (AsAe, AEps) => Tridiagonal,
    }
}

/// Matrix `B` with `Y v_j = sum_i B_ij v_i` over the given basis.
pub fn representation_matrix(op: &ExactMatrix, basis: &[ExactVector]) -> Result<ExactMatrix> {
    BasisFrame::new(basis)?.coordinate_matrix(&op.apply_all(basis)?)
}

/// Represented operators for all six bases, indexed `[basis][operator]`.
#[derive(Clone, Debug)]
pub struct RepMatrices {
    d: usize,
    grid: Vec<[ExactMatrix; 3]>,
}

impl RepMatrices {
    pub fn compute(ctx: &CubeContext, bases: &SixBases) -> Result<Self> {
        let mut grid = Vec::with_capacity(6);
        for kind in BasisKind::ALL {
            let frame = BasisFrame::new(bases.basis(kind))?;
            let mut row = Vec::with_capacity(3);
            for op in Operator::ALL {
                row.push(frame.coordinate_matrix(&ctx.operator(op).apply_all(bases.basis(kind))?)?);
            }
            grid.push(row.try_into().expect("three operators"));
        }
        Ok(RepMatrices { d: bases.d(), grid })
    }

    pub fn get(&self, basis: BasisKind, op: Operator) -> &ExactMatrix {
        &self.grid[basis.position()][op_position(op)]
    }

    /// `(basis, operator, expected form, matches)` for all 18 cells.
    pub fn check_forms(&self) -> Vec<(BasisKind, Operator, MatrixForm, bool)> {
        let mut out = Vec::new();
        for kind in BasisKind::ALL {
            for op in Operator::ALL {
                let form = expected_form(kind, op);
                out.push((kind, op, form, self.get(kind, op) == &form.matrix(self.d)));
            }
        }
        out
    }

    /// The commutator relations among the three represented operators, in every basis.
    pub fn verify_commutators(&self) -> Vec<IdentityCheck> {
        let two_i = GaussRat::from_gauss_int(0, 2);
        let comm = |x: &ExactMatrix, y: &ExactMatrix| x.matmul(y).and_then(|p| p.sub(&y.matmul(x)?)).expect("square");
        let mut out = Vec::new();
        for kind in BasisKind::ALL {
            let (b, s, e) = (
                self.get(kind, Operator::A),
                self.get(kind, Operator::AStar),
                self.get(kind, Operator::AEps),
            );
            let t = kind.tag();
            out.push(IdentityCheck::compare(
                format!("[{t}] BB*-B*B=2iBeps"),
                &comm(b, s),
                &e.scale(&two_i),
            ));
            out.push(IdentityCheck::compare(
                format!("[{t}] B*Beps-BepsB*=2iB"),
                &comm(s, e),
                &b.scale(&two_i),
            ));
            out.push(IdentityCheck::compare(
                format!("[{t}] BepsB-BBeps=2iB*"),
                &comm(e, b),
                &s.scale(&two_i),
            ));
        }
        out
    }
}

pub(crate) fn op_position(op: Operator) -> usize {
    Operator::ALL.iter().position(|&o| o == op).expect("listed")
}
