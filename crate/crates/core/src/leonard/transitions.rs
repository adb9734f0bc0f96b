use serde::Serialize;

use super::bases::{BasisKind, SixBases};
use super::hypergeometric::PhiMatrix;
use crate::error::Result;
use crate::linalg::{BasisFrame, ExactMatrix};
use crate::report::IdentityCheck;
use crate::scalar::GaussRat;

#[derive(Clone, Copy, Debug)]
enum Shape {
    Identity,
    /// `diag(i^0, i^1, ..., i^d)`
    D1,
    /// `diag(i^0, i^-1, ..., i^-d)`
    D2,
    /// `[i^{a i + b j} Φ_ij]`
    Phi(i64, i64),
}

/// Prefactor `(1+i)^{p d} (1-i)^{m d}`, optionally times
/// `<seed(to), seed(from)> / ||seed(from)||^2`.
#[derive(Clone, Copy, Debug)]
struct Cell {
    p: i64,
    m: i64,
    ratio: bool,
    shape: Shape,
}

const fn cell(p: i64, m: i64, ratio: bool, shape: Shape) -> Cell {
    Cell { p, m, ratio, shape }
}

const I: Cell = cell(0, 0, false, Shape::Identity);

/// Rows: from-basis, columns: to-basis, both in `BasisKind::ALL` order.
const TABLE: [[Cell; 6]; 6] = {
    use Shape::*;
    [
        [
            I,
            cell(0, -1, false, Phi(-1, -1)),
            cell(0, 0, true, Phi(-1, 0)),
            cell(0, 0, true, Phi(0, 0)),
            cell(0, 0, true, Phi(0, 1)),
            cell(1, 0, true, D2),
        ],
        [
            cell(-1, 0, false, Phi(1, 1)),
            I,
            cell(0, 1, true, D1),
            cell(0, 0, true, Phi(0, -1)),
            cell(0, 0, true, Phi(0, 0)),
            cell(0, 0, true, Phi(1, 0)),
        ],
        [
            cell(0, 0, true, Phi(0, 1)),
            cell(1, 0, true, D2),
            I,
            cell(0, -1, false, Phi(-1, -1)),
            cell(0, 0, true, Phi(-1, 0)),
            cell(0, 0, true, Phi(0, 0)),
        ],
        [
            cell(0, 0, true, Phi(0, 0)),
            cell(0, 0, true, Phi(1, 0)),
            cell(-1, 0, false, Phi(1, 1)),
            I,
            cell(0, 1, true, D1),
            cell(0, 0, true, Phi(0, -1)),
        ],
        [
            cell(0, 0, true, Phi(-1, 0)),
            cell(0, 0, true, Phi(0, 0)),
            cell(0, 0, true, Phi(0, 1)),
            cell(1, 0, true, D2),
            I,
            cell(0, -1, false, Phi(-1, -1)),
        ],
        [
            cell(0, 1, true, D1),
            cell(0, 0, true, Phi(0, -1)),
            cell(0, 0, true, Phi(0, 0)),
            cell(0, 0, true, Phi(1, 0)),
            cell(-1, 0, false, Phi(1, 1)),
            I,
        ],
    ]
};

/// Transition matrix from `from` to `to` given by the closed-form table.
pub fn formula_matrix(bases: &SixBases, phi: &PhiMatrix, from: BasisKind, to: BasisKind) -> Result<ExactMatrix> {
    let d = bases.d();
    let di = d as i64;
    let c = TABLE[from.position()][to.position()];
    let mut pre = &GaussRat::one_plus_i_pow(c.p * di) * &GaussRat::one_minus_i_pow(c.m * di);
    if c.ratio {
        let s = bases.seed_of(from);
        pre = &(&pre * &bases.seed_of(to).inner(s)?) * &s.norm_sq().inv()?;
    }
    let n = d + 1;
    let m = match c.shape {
        Shape::Identity => ExactMatrix::identity(n),
        Shape::D1 => ExactMatrix::diag(&(0..n).map(|k| GaussRat::i_pow(k as i64)).collect::<Vec<_>>()),
        Shape::D2 => ExactMatrix::diag(&(0..n).map(|k| GaussRat::i_pow(-(k as i64))).collect::<Vec<_>>()),
        Shape::Phi(a, b) => ExactMatrix::from_fn(n, n, |i, j| {
            GaussRat::i_pow(a * i as i64 + b * j as i64).scale(phi.get(i, j))
        }),
    };
    Ok(m.scale(&pre))
}

/// Coefficients `C` with `v_j = sum_i C_ij u_i` for `u = from`, `v = to`.
pub fn computed_matrix(bases: &SixBases, from: BasisKind, to: BasisKind) -> Result<ExactMatrix> {
    BasisFrame::new(bases.basis(from))?.coordinate_matrix(bases.basis(to))
}

#[derive(Clone, Debug, Serialize)]
pub struct TransitionCell {
    pub from: BasisKind,
    pub to: BasisKind,
    #[serde(skip)]
    pub formula: ExactMatrix,
    #[serde(skip)]
    pub computed: ExactMatrix,
    pub passed: bool,
    pub first_discrepancy: Option<[usize; 2]>,
}

#[derive(Clone, Debug)]
pub struct TransitionReport {
    pub cells: Vec<TransitionCell>,
    pub coherence: Vec<IdentityCheck>,
}

impl TransitionReport {
    pub fn cell(&self, from: BasisKind, to: BasisKind) -> &TransitionCell {
        &self.cells[from.position() * 6 + to.position()]
    }

    pub fn failures(&self) -> Vec<(BasisKind, BasisKind)> {
        self.cells
            .iter()
            .filter(|c| !c.passed)
            .map(|c| (c.from, c.to))
            .collect()
    }

    pub fn all_passed(&self) -> bool {
        self.failures().is_empty() && crate::report::all_passed(&self.coherence)
    }
}

/// All 36 cells computed by change of basis and by the table, plus inverse
/// and composition coherence of the computed matrices.
pub fn transition_matrices_with_phi(bases: &SixBases, phi: &PhiMatrix) -> Result<TransitionReport> {
    let frames: Vec<BasisFrame> = BasisKind::ALL
        .iter()
        .map(|&k| BasisFrame::new(bases.basis(k)))
        .collect::<Result<_>>()?;
    let mut cells = Vec::with_capacity(36);
    for from in BasisKind::ALL {
        for to in BasisKind::ALL {
            let computed = frames[from.position()].coordinate_matrix(bases.basis(to))?;
            let formula = formula_matrix(bases, phi, from, to)?;
            let first = computed.first_discrepancy(&formula);
            cells.push(TransitionCell {
                from,
                to,
                formula,
                computed,
                passed: first.is_none(),
                first_discrepancy: first.map(|(r, c)| [r, c]),
            });
        }
    }
    let at = |a: BasisKind, b: BasisKind| &cells[a.position() * 6 + b.position()].computed;
    let id = ExactMatrix::identity(bases.d() + 1);
    let mut coherence = Vec::new();
    for a in BasisKind::ALL {
        for b in BasisKind::ALL {
            coherence.push(IdentityCheck::compare(
                format!("C({}->{})C({}->{})=I", a.tag(), b.tag(), b.tag(), a.tag()),
                &at(a, b).matmul(at(b, a))?,
                &id,
            ));
            for c in BasisKind::ALL {
                coherence.push(IdentityCheck::compare(
                    format!(
                        "C({}->{})C({}->{})=C({}->{})",
                        a.tag(),
                        b.tag(),
                        b.tag(),
                        c.tag(),
                        a.tag(),
                        c.tag()
                    ),
                    &at(a, b).matmul(at(b, c))?,
                    at(a, c),
                ));
            }
        }
    }
    Ok(TransitionReport { cells, coherence })
}

pub fn transition_matrices(bases: &SixBases) -> Result<TransitionReport> {
    transition_matrices_with_phi(bases, &super::hypergeometric::phi_matrix(bases.d()))
}
