use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cube::binomial;
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::report::IdentityCheck;
use crate::scalar::GaussRat;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Terminating series `2F1(-i, -j; -d; 2) = sum_n (-i)_n (-j)_n / ((-d)_n n!) 2^n`,
/// summed up to `n = min(i, j)`.
pub fn hypergeometric_2f1(i: usize, j: usize, d: usize) -> Result<BigRational> {
    if i > d || j > d {
        return Err(Error::ArgumentOutOfRange(format!(
            "2F1 needs 0 <= i, j <= d, got i={i}, j={j}, d={d}"
        )));
    }
    let (i, j, d) = (i as i64, j as i64, d as i64);
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for n in 0..i.min(j) {
        term = term * rat((n - i) * (n - j) * 2) / rat((n - d) * (n + 1));
        sum += &term;
    }
    Ok(sum)
}

/// `Φ_ij = C(d,j) 2F1(-i,-j;-d;2)` for `0 <= i, j <= d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMatrix {
    d: usize,
    grid: Vec<Vec<BigRational>>,
}

pub fn phi_matrix(d: usize) -> PhiMatrix {
    let grid = (0..=d)
        .map(|i| {
            (0..=d)
                .map(|j| rat(binomial(d, j) as i64) * hypergeometric_2f1(i, j, d).expect("indices in range"))
                .collect()
        })
        .collect();
    let phi = PhiMatrix { d, grid };
    debug_assert!(crate::report::all_passed(&phi.verify_recurrence()));
    phi
}

impl PhiMatrix {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.grid[i][j]
    }

    /// Copy with entry `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: BigRational) -> Self {
        let mut out = self.clone();
        out.grid[i][j] = value;
        out
    }

    /// `2F1(-i,-j;-d;2)` recovered as `Φ_ij / C(d,j)`.
    pub fn series(&self, i: usize, j: usize) -> BigRational {
        &self.grid[i][j] / rat(binomial(self.d, j) as i64)
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.d + 1, self.d + 1, |i, j| GaussRat::real(self.grid[i][j].clone()))
    }

    /// The three-term recurrence in `i` for `2 <= i <= d`, every `j`:
    /// `F(i) = (d-2j)/(d-i+1) F(i-1) - (i-1)/(d-i+1) F(i-2)`.
    pub fn verify_recurrence(&self) -> Vec<IdentityCheck> {
        let d = self.d as i64;
        let mut out = Vec::new();
        for i in 2..=self.d {
            for j in 0..=self.d {
                let denom = rat(d - i as i64 + 1);
                let rhs = rat(d - 2 * j as i64) / &denom * self.series(i - 1, j)
                    - rat(i as i64 - 1) / &denom * self.series(i - 2, j);
                out.push(IdentityCheck::holds(
                    format!("recurrence i={i} j={j}"),
                    self.series(i, j) == rhs,
                ));
            }
        }
        out
    }

    /// `Φ Φ = 2^d I`.
    pub fn verify_square(&self) -> IdentityCheck {
        let m = self.to_matrix();
        let target = ExactMatrix::identity(self.d + 1)
            .scale(&GaussRat::real(BigRational::from_integer(BigInt::from(1u64) << self.d)));
        IdentityCheck::compare("Phi^2=2^d I", &m.matmul(&m).expect("square"), &target)
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        self.grid[i][j].is_zero()
    }
}
