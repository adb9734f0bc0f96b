use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::bases::{BasisKind, SixBases};
use super::hypergeometric::PhiMatrix;
use crate::cube::binomial;
use crate::error::Result;
use crate::linalg::ExactMatrix;
use crate::scalar::GaussRat;

/// `G_ij = <x_i, y_j>`.
pub fn gram(x: &ExactMatrix, y: &ExactMatrix) -> Result<ExactMatrix> {
    x.transpose().matmul(&y.conj())
}

#[derive(Clone, Copy, Debug)]
enum Shape {
    /// `δ_ij C(d,i)`
    Delta,
    /// `C(d,i) C(d,j) 2F1(-i,-j;-d;2) = C(d,i) Φ_ij`
    Krawtchouk,
}

#[derive(Clone, Copy, Debug)]
enum Scalar {
    TwoPow,
    OnePlusI,
    TwoMinusTwoI,
}

impl Scalar {
    /// The factor raised to the power `-d`.
    fn value(self, d: usize) -> GaussRat {
        let d = d as i64;
        let base = match self {
            Scalar::TwoPow => GaussRat::from_int(2),
            Scalar::OnePlusI => GaussRat::from_gauss_int(1, 1),
            Scalar::TwoMinusTwoI => GaussRat::from_gauss_int(2, -2),
        };
        base.pow(-d).expect("nonzero base")
    }
}

struct PairFormula {
    id: &'static str,
    x: BasisKind,
    y: BasisKind,
    shape: Shape,
    scalar: Scalar,
    twist: (i64, i64),
}

const fn pair(
    id: &'static str,
    x: BasisKind,
    y: BasisKind,
    shape: Shape,
    scalar: Scalar,
    twist: (i64, i64),
) -> PairFormula {
    PairFormula {
        id,
        x,
        y,
        shape,
        scalar,
        twist,
    }
}

use BasisKind::*;
use Scalar::*;
use Shape::*;

/// `<x_i, y_j> = scalar^{-d} i^{a i + b j} shape(i,j) <seed(x), seed(y)>`.
const PAIRINGS: [PairFormula; 21] = [
    pair("orthogonal_bases", AsA, AsA, Delta, TwoPow, (0, 0)),
    pair("orthogonal_bases", AeA, AeA, Delta, TwoPow, (0, 0)),
    pair("orthogonal_bases", AeAs, AeAs, Delta, TwoPow, (0, 0)),
    pair("orthogonal_bases", AAs, AAs, Delta, TwoPow, (0, 0)),
    pair("orthogonal_bases", AAe, AAe, Delta, TwoPow, (0, 0)),
    pair("orthogonal_bases", AsAe, AsAe, Delta, TwoPow, (0, 0)),
    pair("paired_diagonal", AAe, AAs, Delta, OnePlusI, (1, 0)),
    pair("paired_diagonal", AsA, AsAe, Delta, OnePlusI, (1, 0)),
    pair("paired_diagonal", AeAs, AeA, Delta, OnePlusI, (1, 0)),
    pair("krawtchouk", AAs, AsA, Krawtchouk, TwoPow, (0, 0)),
    pair("krawtchouk", AsAe, AeAs, Krawtchouk, TwoPow, (0, 0)),
    pair("krawtchouk", AeA, AAe, Krawtchouk, TwoPow, (0, 0)),
    pair("krawtchouk_twist_j", AAs, AsAe, Krawtchouk, TwoPow, (0, 1)),
    pair("krawtchouk_twist_j", AsAe, AeA, Krawtchouk, TwoPow, (0, 1)),
    pair("krawtchouk_twist_j", AeA, AAs, Krawtchouk, TwoPow, (0, 1)),
    pair("krawtchouk_shared_seed", AAs, AeAs, Krawtchouk, TwoMinusTwoI, (-1, -1)),
    pair("krawtchouk_shared_seed", AsAe, AAe, Krawtchouk, TwoMinusTwoI, (-1, -1)),
    pair("krawtchouk_shared_seed", AeA, AsA, Krawtchouk, TwoMinusTwoI, (-1, -1)),
    pair("krawtchouk_twist_i", AAe, AsA, Krawtchouk, TwoPow, (1, 0)),
    pair("krawtchouk_twist_i", AsA, AeAs, Krawtchouk, TwoPow, (1, 0)),
    pair("krawtchouk_twist_i", AeAs, AAe, Krawtchouk, TwoPow, (1, 0)),
];

/// `x_i = i^i (1-i)^d <seed(x), seed(y)> ||seed(y)||^-2 y_i`.
const PROPORTIONAL: [(BasisKind, BasisKind); 3] = [(AAe, AAs), (AsA, AsAe), (AeAs, AeA)];

/// One compared entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnerProductCheck {
    pub theorem: &'static str,
    pub x: BasisKind,
    pub y: BasisKind,
    pub i: usize,
    pub j: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct InnerProductReport {
    pub checks: Vec<InnerProductCheck>,
}

impl InnerProductReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Pass/fail per theorem id.
    pub fn by_theorem(&self) -> BTreeMap<&'static str, bool> {
        let mut out = BTreeMap::new();
        for c in &self.checks {
            *out.entry(c.theorem).or_insert(true) &= c.passed;
        }
        out
    }

    pub fn failures(&self) -> impl Iterator<Item = &InnerProductCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Every pairing between the six bases compared with its closed form, plus
/// the three vector proportionalities. `phi` supplies the hypergeometric
/// values so that a corrupted table can be injected.
pub fn verify_inner_products_with_phi(bases: &SixBases, phi: &PhiMatrix) -> Result<InnerProductReport> {
    let d = bases.d();
    let mut checks = Vec::new();
    for f in &PAIRINGS {
        let g = gram(&bases.matrix(f.x), &bases.matrix(f.y))?;
        let base = &f.scalar.value(d) * &bases.seed_of(f.x).inner(bases.seed_of(f.y))?;
        for i in 0..=d {
            for j in 0..=d {
                let shape = match f.shape {
                    Delta if i == j => rat(binomial(d, i)),
                    Delta => BigRational::from_integer(0.into()),
                    Krawtchouk => rat(binomial(d, i)) * phi.get(i, j),
                };
                let twist = GaussRat::i_pow(f.twist.0 * i as i64 + f.twist.1 * j as i64);
                let expected = (&base * &twist).scale(&shape);
                checks.push(InnerProductCheck {
                    theorem: f.id,
                    x: f.x,
                    y: f.y,
                    i,
                    j,
                    passed: g.get(i, j) == expected,
                });
            }
        }
    }
    let one_minus_i = GaussRat::one_minus_i_pow(d as i64);
    for (x, y) in PROPORTIONAL {
        let sy = bases.seed_of(y);
        let c = &(&one_minus_i * &bases.seed_of(x).inner(sy)?) * &sy.norm_sq().inv()?;
        for i in 0..=d {
            let k = &GaussRat::i_pow(i as i64) * &c;
            checks.push(InnerProductCheck {
                theorem: "proportional_bases",
                x,
                y,
                i,
                j: i,
                passed: bases.basis(x)[i] == bases.basis(y)[i].scale(&k),
            });
        }
    }
    Ok(InnerProductReport { checks })
}

pub fn verify_inner_products(bases: &SixBases) -> Result<InnerProductReport> {
    verify_inner_products_with_phi(bases, &super::hypergeometric::phi_matrix(bases.d()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::CubeContext;
    use crate::decomp::decompose;
    use crate::leonard::bases::build_six_bases;
    use crate::leonard::hypergeometric::phi_matrix;

    #[test]
    fn d2_examples() {
        let ctx = CubeContext::build(2).unwrap();
        let dec = decompose(&ctx).unwrap();
        let m = &dec.modules()[0];
        let b = build_six_bases(&ctx, m).unwrap();
        let asa = b.basis(AsA);
        let quarter = GaussRat::real(BigRational::new(1.into(), 4.into()));
        assert_eq!(asa[0].norm_sq(), &m.u().norm_sq() * &quarter);
        assert!(asa[0].inner(&asa[1]).unwrap().is_zero());
        let aas = b.basis(AAs);
        assert!(aas[1].inner(&asa[1]).unwrap().is_zero());
        let report = verify_inner_products(&b).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn corrupted_phi_is_detected() {
        let ctx = CubeContext::build(3).unwrap();
        let dec = decompose(&ctx).unwrap();
        let m = &dec.modules()[0];
        let b = build_six_bases(&ctx, m).unwrap();
        let phi = phi_matrix(3);
        let bad = phi.with_entry(2, 1, phi.get(2, 1) + BigRational::from_integer(1.into()));
        assert!(!verify_inner_products_with_phi(&b, &bad).unwrap().all_passed());
    }
}
