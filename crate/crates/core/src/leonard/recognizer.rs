use serde::{Deserialize, Serialize};

use crate::linalg::{inverse, kernel_basis, ExactMatrix, ExactVector};
use crate::scalar::GaussRat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    /// Some eigenvalue lies outside `{d, d-2, ..., -d}` or the operator is
    /// not diagonalizable over that set.
    Unverifiable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Unverifiable => "unverifiable",
        }
    }
}

/// Evidence gathered for one operator of the triple.
#[derive(Debug, Clone)]
pub struct Certificate {
    /// Eigenvalues in the order the basis vectors were used.
    pub eigenvalues: Vec<i64>,
    /// Whether that order is descending.
    pub descending: bool,
    /// Eigenvectors as columns.
    pub basis: ExactMatrix,
    /// The other two operators represented in this basis, in triple order.
    pub represented: [ExactMatrix; 2],
    pub irreducible_tridiagonal: [bool; 2],
}

#[derive(Debug, Clone)]
pub struct LeonardVerdict {
    pub verdict: Verdict,
    pub reason: String,
    pub certificates: Vec<Certificate>,
}

/// Zero outside the three central diagonals, nonzero on the sub- and
/// superdiagonal.
pub fn is_irreducible_tridiagonal(m: &ExactMatrix) -> bool {
    let n = m.rows();
    for r in 0..n {
        for c in 0..n {
            let zero = m.is_zero_at(r, c);
            if r.abs_diff(c) > 1 && !zero {
                return false;
            }
            if r.abs_diff(c) == 1 && zero {
                return false;
            }
        }
    }
    true
}

/// `S^-1 M S`.
fn represent(m: &ExactMatrix, s: &ExactMatrix, s_inv: &ExactMatrix) -> ExactMatrix {
    s_inv.matmul(m).and_then(|x| x.matmul(s)).expect("square")
}

/// Order of basis positions along the path formed by the off-diagonal
/// support of `m`, if that support is a path.
fn path_order(m: &ExactMatrix, eigenvalues: &[i64]) -> Option<Vec<usize>> {
    let n = m.rows();
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|r| {
            (0..n)
                .filter(|&c| c != r && (!m.is_zero_at(r, c) || !m.is_zero_at(c, r)))
                .collect()
        })
        .collect();
    let ends: Vec<usize> = (0..n).filter(|&v| nbrs[v].len() == 1).collect();
    if nbrs.iter().any(|v| v.len() > 2) || ends.len() != 2 {
        return None;
    }
    let start = if eigenvalues[ends[0]] >= eigenvalues[ends[1]] {
        ends[0]
    } else {
        ends[1]
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = nbrs[cur].iter().find(|&&x| x != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == n).then_some(order)
}

fn permute_columns(vs: &[ExactVector], order: &[usize]) -> Vec<ExactVector> {
    order.iter().map(|&k| vs[k].clone()).collect()
}

/// Decides whether `(b, bstar, beps)` is a Leonard triple, with eigenvalues
/// searched among `{d, d-2, ..., -d}` where `d + 1` is the matrix size.
pub fn is_leonard_triple(b: &ExactMatrix, bstar: &ExactMatrix, beps: &ExactMatrix) -> LeonardVerdict {
    let ops = [b, bstar, beps];
    let n = b.rows();
    if ops.iter().any(|m| m.shape() != (n, n)) || n == 0 {
        return LeonardVerdict {
            verdict: Verdict::Unverifiable,
            reason: "operators must be square of equal positive size".into(),
            certificates: Vec::new(),
        };
    }
    let d = n as i64 - 1;
    let mut certificates = Vec::new();
    for (k, op) in ops.iter().enumerate() {
        let mut vectors = Vec::new();
        let mut eigenvalues = Vec::new();
        for t in 0..=d {
            let theta = d - 2 * t;
            let space = kernel_basis(&op.shift(&GaussRat::from_int(theta)).expect("square"));
            if space.len() > 1 {
                return LeonardVerdict {
                    verdict: Verdict::False,
                    reason: format!("operator {k} has eigenvalue {theta} of multiplicity {}", space.len()),
                    certificates,
                };
            }
            for v in space {
                vectors.push(v);
                eigenvalues.push(theta);
            }
        }
        if vectors.len() < n {
            return LeonardVerdict {
                verdict: Verdict::Unverifiable,
                reason: format!("operator {k} has eigenvalues outside the candidate set or is not diagonalizable"),
                certificates,
            };
        }
        let others = [ops[(k + 1) % 3], ops[(k + 2) % 3]];
        let mut order: Vec<usize> = (0..n).collect();
        let mut reps = represent_pair(&vectors, &order, &others);
        if !(is_irreducible_tridiagonal(&reps[0]) && is_irreducible_tridiagonal(&reps[1])) {
            if let Some(path) = path_order(&reps[0], &eigenvalues) {
                order = path;
                reps = represent_pair(&vectors, &order, &others);
            }
        }
        let flags = [
            is_irreducible_tridiagonal(&reps[0]),
            is_irreducible_tridiagonal(&reps[1]),
        ];
        let ordered: Vec<i64> = order.iter().map(|&i| eigenvalues[i]).collect();
        let cert = Certificate {
            descending: ordered.windows(2).all(|w| w[0] > w[1]),
            eigenvalues: ordered,
            basis: ExactMatrix::from_columns(&permute_columns(&vectors, &order)).expect("equal lengths"),
            represented: reps,
            irreducible_tridiagonal: flags,
        };
        certificates.push(cert);
        if !(flags[0] && flags[1]) {
            return LeonardVerdict {
                verdict: Verdict::False,
                reason: format!("in the eigenbasis of operator {k} the other two are not both irreducible tridiagonal"),
                certificates,
            };
        }
    }
    LeonardVerdict {
        verdict: Verdict::True,
        reason: "each operator is diagonal in a basis where the other two are irreducible tridiagonal".into(),
        certificates,
    }
}

fn represent_pair(vectors: &[ExactVector], order: &[usize], others: &[&ExactMatrix; 2]) -> [ExactMatrix; 2] {
    let s = ExactMatrix::from_columns(&permute_columns(vectors, order)).expect("equal lengths");
    let s_inv = inverse(&s).expect("eigenvectors for distinct eigenvalues are independent");
    [represent(others[0], &s, &s_inv), represent(others[1], &s, &s_inv)]
}
