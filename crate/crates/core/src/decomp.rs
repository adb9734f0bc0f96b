//! Orthogonal decomposition of the standard module into irreducible modules.
//!
//! Each module is seeded by a vector `u*` in the kernel of the lowering map on
//! the distance-`r` slice; raising it `d = D - 2r` times fills out the module.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cube::{binomial, weight, CubeContext};
use crate::error::{Error, Result};
use crate::linalg::{gram_schmidt, kernel_basis, rank, BasisFrame, ExactMatrix, ExactVector, VectorDump};
use crate::report::IdentityCheck;
use crate::scalar::GaussRat;

/// `L = sum_{i=1..D} E*_{i-1} A E*_i`.
pub fn lowering_operator(ctx: &CubeContext) -> ExactMatrix {
    let n = ctx.size();
    let es = ctx.estar();
    (1..=ctx.dim()).fold(ExactMatrix::zeros(n, n), |acc, i| {
        let term = es[i - 1]
            .matmul(ctx.a())
            .and_then(|m| m.matmul(&es[i]))
            .expect("square");
        acc.add(&term).expect("square")
    })
}

/// `R = sum_{i=0..D-1} E*_{i+1} A E*_i`.
pub fn raising_operator(ctx: &CubeContext) -> ExactMatrix {
    let n = ctx.size();
    let es = ctx.estar();
    (0..ctx.dim()).fold(ExactMatrix::zeros(n, n), |acc, i| {
        let term = es[i + 1]
            .matmul(ctx.a())
            .and_then(|m| m.matmul(&es[i]))
            .expect("square");
        acc.add(&term).expect("square")
    })
}

/// Number of irreducible modules with endpoint `r`: `C(D,r) - C(D,r-1)`.
pub fn multiplicity(dim: usize, r: usize) -> Result<usize> {
    if 2 * r > dim {
        return Err(Error::ArgumentOutOfRange(format!(
            "endpoint r={r} exceeds D/2 for D={dim}"
        )));
    }
    let below = if r == 0 { 0 } else { binomial(dim, r - 1) };
    Ok((binomial(dim, r) - below) as usize)
}

/// One irreducible module `W` with its seed vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleModule {
    dim: usize,
    r: usize,
    index: usize,
    u: ExactVector,
    u_star: ExactVector,
    u_eps: ExactVector,
    slice_basis: Vec<ExactVector>,
}

impl IrreducibleModule {
    /// The cube dimension `D`.
    pub fn cube_dim(&self) -> usize {
        self.dim
    }

    /// Endpoint `r`.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Diameter `d = D - 2r`.
    pub fn d(&self) -> usize {
        self.dim - 2 * self.r
    }

    /// Position among the modules sharing this endpoint.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn dimension(&self) -> usize {
        self.d() + 1
    }

    /// Seed in `E_r W`.
    pub fn u(&self) -> &ExactVector {
        &self.u
    }

    /// Seed in `E*_r W`.
    pub fn u_star(&self) -> &ExactVector {
        &self.u_star
    }

    /// Seed in `Eε_r W`.
    pub fn u_eps(&self) -> &ExactVector {
        &self.u_eps
    }

    /// `slice_basis()[i]` spans `E*_{r+i} W`.
    pub fn slice_basis(&self) -> &[ExactVector] {
        &self.slice_basis
    }

    fn violation(&self, invariant: impl Into<String>) -> Error {
        Error::InvariantViolated {
            r: self.r,
            index: self.index,
            invariant: invariant.into(),
        }
    }

    /// Rescales the seeds so that `<u,u*> = a`, `<u*,uε> = b` and `<uε,u> = c`.
    ///
    /// Requires `a b c (1+i)^d` to be a positive real number and the factor
    /// `δ = a b c (1+i)^d / ||c u*||^2` to be the square of a rational.
    pub fn normalize_seeds(&self, a: &GaussRat, b: &GaussRat, c: &GaussRat) -> Result<Self> {
        let d = self.d() as i64;
        let product = &(&(a * b) * c) * &GaussRat::one_plus_i_pow(d);
        if !product.is_positive_real() {
            return Err(Error::InfeasibleTargets);
        }
        let delta = product.re() / (c.norm_sq() * self.u_star.norm_sq().re());
        let root = GaussRat::real(rational_sqrt(&delta).ok_or(Error::FieldExtensionRequired)?);
        let root_inv = root.inv()?;
        let lambda = &(a * &root_inv) * &self.u.inner(&self.u_star)?.inv()?;
        let lambda_eps = &(&b.conj() * &root_inv) * &self.u_eps.inner(&self.u_star)?.inv()?;
        let out = IrreducibleModule {
            u: self.u.scale(&lambda),
            u_star: self.u_star.scale(&root),
            u_eps: self.u_eps.scale(&lambda_eps),
            slice_basis: self.slice_basis.iter().map(|v| v.scale(&root)).collect(),
            ..self.clone()
        };
        let (ma, mb, mc) = out.seed_inner_products()?;
        if (&ma, &mb, &mc) != (a, b, c) {
            return Err(out.violation("rescaled seeds reproduce the requested inner products"));
        }
        Ok(out)
    }

    /// Same module with the seeds replaced by `k u`, `k u*`, `k uε`.
    pub fn scale_seeds(&self, k: &GaussRat) -> Self {
        IrreducibleModule {
            u: self.u.scale(k),
            u_star: self.u_star.scale(k),
            u_eps: self.u_eps.scale(k),
            slice_basis: self.slice_basis.iter().map(|v| v.scale(k)).collect(),
            ..self.clone()
        }
    }

    /// `(<u,u*>, <u*,uε>, <uε,u>)`.
    pub fn seed_inner_products(&self) -> Result<(GaussRat, GaussRat, GaussRat)> {
        Ok((
            self.u.inner(&self.u_star)?,
            self.u_star.inner(&self.u_eps)?,
            self.u_eps.inner(&self.u)?,
        ))
    }

    /// The three seed norm relations and the positivity of
    /// `<u,u*><u*,uε><uε,u>(1+i)^d`.
    pub fn verify_seed_relations(&self) -> Result<Vec<IdentityCheck>> {
        let (u, s, e) = (&self.u, &self.u_star, &self.u_eps);
        let f = GaussRat::one_plus_i_pow(self.d() as i64);
        let rel = |x: &ExactVector, y: &ExactVector, z: &ExactVector| -> Result<bool> {
            let rhs = &(&(&f * &x.inner(y)?) * &z.inner(x)?) * &z.inner(y)?.inv()?;
            Ok(x.norm_sq() == rhs)
        };
        let (a, b, c) = self.seed_inner_products()?;
        Ok(vec![
            IdentityCheck::holds("||u||^2=(1+i)^d<u,u*><ue,u>/<ue,u*>", rel(u, s, e)?),
            IdentityCheck::holds("||u*||^2=(1+i)^d<u*,ue><u,u*>/<u,ue>", rel(s, e, u)?),
            IdentityCheck::holds("||ue||^2=(1+i)^d<ue,u><u*,ue>/<u*,u>", rel(e, u, s)?),
            IdentityCheck::holds(
                "<u,u*><u*,ue><ue,u>(1+i)^d>0",
                (&(&(&a * &b) * &c) * &f).is_positive_real(),
            ),
        ])
    }

    /// Tridiagonal action of `A` on the slice basis and the cyclic action of
    /// `P` on the idempotent slices of the module.
    pub fn verify_structure(&self, ctx: &CubeContext) -> Result<Vec<IdentityCheck>> {
        let d = self.d();
        let r = self.r;
        let mut out = Vec::new();
        let a_slices = ctx.a().apply_all(&self.slice_basis)?;
        for (i, y) in a_slices.iter().enumerate() {
            let mut nbrs = Vec::new();
            if i > 0 {
                nbrs.push(self.slice_basis[i - 1].clone());
            }
            if i < d {
                nbrs.push(self.slice_basis[i + 1].clone());
            }
            let inside = if nbrs.is_empty() {
                y.is_zero()
            } else {
                BasisFrame::new(&nbrs)?.coordinates(y).is_ok()
            };
            out.push(IdentityCheck::holds(
                format!("A s_{i} in span(s_{{i-1}}, s_{{i+1}})"),
                inside,
            ));
        }
        let e_slices: Vec<ExactVector> = (0..=d)
            .map(|i| ctx.e()[r + i].matvec(&self.u_star))
            .collect::<Result<_>>()?;
        let eps_slices: Vec<ExactVector> = (0..=d)
            .map(|i| ctx.eeps()[r + i].matvec(&self.u_star))
            .collect::<Result<_>>()?;
        let p_e = ctx.p().apply_all(&e_slices)?;
        let p_s = ctx.p().apply_all(&self.slice_basis)?;
        let p_eps = ctx.p().apply_all(&eps_slices)?;
        for i in 0..=d {
            let parallel = |x: &ExactVector, y: &ExactVector| matches!(x.ratio_to(y), Some(c) if !c.is_zero());
            out.push(IdentityCheck::holds(
                format!("P E_{}W = E*_{}W", r + i, r + i),
                parallel(&self.slice_basis[i], &p_e[i]),
            ));
            out.push(IdentityCheck::holds(
                format!("P E*_{}W = Eeps_{}W", r + i, r + i),
                parallel(&eps_slices[i], &p_s[i]),
            ));
            out.push(IdentityCheck::holds(
                format!("P Eeps_{}W = E_{}W", r + i, r + i),
                parallel(&e_slices[i], &p_eps[i]),
            ));
        }
        Ok(out)
    }

    fn basis_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_columns(&self.slice_basis).expect("equal lengths")
    }

    fn validate(&self, ctx: &CubeContext) -> Result<()> {
        let dim = ctx.dim();
        let d = self.d();
        if 2 * self.r > dim || self.slice_basis.len() != d + 1 {
            return Err(self.violation("d = D - 2r with 0 <= r <= D/2"));
        }
        for (name, v) in [("u", &self.u), ("u*", &self.u_star), ("ueps", &self.u_eps)] {
            if v.is_zero() {
                return Err(self.violation(format!("{name} is nonzero")));
            }
        }
        let w = self.basis_matrix();
        for (tag, family) in [("E", ctx.e()), ("E*", ctx.estar()), ("Eeps", ctx.eeps())] {
            for (i, f) in family.iter().enumerate() {
                let k = rank(&f.matmul(&w)?.transpose());
                let expected = usize::from(self.r <= i && i <= self.r + d);
                if k != expected {
                    return Err(self.violation(format!(
                        "dim({tag}_{i}W) = {expected} (thin, nonzero exactly for r <= i <= r+d), found {k}"
                    )));
                }
            }
        }
        let frame = BasisFrame::new(&self.slice_basis)?;
        for (name, op) in [("A", ctx.a()), ("A*", ctx.astar())] {
            for y in op.apply_all(&self.slice_basis)? {
                if frame.coordinates(&y).is_err() {
                    return Err(self.violation(format!("{name} W is contained in W")));
                }
            }
        }
        let (a, b, c) = self.seed_inner_products()?;
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(self.violation("<u*,u>, <u,ueps>, <ueps,u*> are nonzero"));
        }
        Ok(())
    }
}

/// Square root in the rationals, if one exists.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(BigRational::new(root(q.numer())?, root(q.denom())?))
}

/// The standard module split into irreducible modules.
#[derive(Clone, Debug)]
pub struct Decomposition {
    dim: usize,
    modules: Vec<IrreducibleModule>,
    multiplicities: BTreeMap<usize, usize>,
}

impl Decomposition {
    pub fn cube_dim(&self) -> usize {
        self.dim
    }

    /// Modules ordered by endpoint, then by index.
    pub fn modules(&self) -> &[IrreducibleModule] {
        &self.modules
    }

    /// Number of modules per endpoint.
    pub fn multiplicities(&self) -> &BTreeMap<usize, usize> {
        &self.multiplicities
    }

    pub fn module(&self, r: usize, index: usize) -> Option<&IrreducibleModule> {
        self.modules.iter().find(|m| m.r == r && m.index == index)
    }

    pub fn total_dimension(&self) -> usize {
        self.modules.iter().map(IrreducibleModule::dimension).sum()
    }

    /// Total dimension, per-endpoint counts, and mutual orthogonality of all
    /// module bases.
    pub fn verify(&self) -> Result<Vec<IdentityCheck>> {
        let mut out = vec![IdentityCheck::holds(
            "sum of module dimensions = 2^D",
            self.total_dimension() == 1 << self.dim,
        )];
        for (&r, &count) in &self.multiplicities {
            out.push(IdentityCheck::holds(
                format!("modules with endpoint {r} = C(D,{r})-C(D,{})", r as i64 - 1),
                multiplicity(self.dim, r)? == count,
            ));
        }
        let all: Vec<ExactVector> = self
            .modules
            .iter()
            .flat_map(|m| m.slice_basis.iter().cloned())
            .collect();
        let w = ExactMatrix::from_columns(&all)?;
        let gram = w.transpose().matmul(&w.conj())?;
        let off = (0..gram.rows())
            .flat_map(|i| (0..gram.cols()).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && !gram.is_zero_at(i, j));
        out.push(IdentityCheck::at("module bases pairwise orthogonal", off));
        Ok(out)
    }

    pub fn report(&self) -> DecompositionReport {
        DecompositionReport {
            dim: self.dim,
            modules: self
                .modules
                .iter()
                .map(|m| ModuleSummary {
                    r: m.r,
                    d: m.d(),
                    index: m.index,
                    dim: m.dimension(),
                })
                .collect(),
            multiplicities: self.multiplicities.clone(),
        }
    }

    /// One seed record per module.
    pub fn seed_exports(&self) -> Vec<SeedExport> {
        self.modules
            .iter()
            .map(|m| SeedExport {
                dim: self.dim,
                r: m.r,
                index: m.index,
                u: m.u.to_dump(),
                u_star: m.u_star.to_dump(),
                u_eps: m.u_eps.to_dump(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSummary {
    pub r: usize,
    pub d: usize,
    pub index: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    #[serde(rename = "D")]
    pub dim: usize,
    pub modules: Vec<ModuleSummary>,
    pub multiplicities: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedExport {
    #[serde(rename = "D")]
    pub dim: usize,
    pub r: usize,
    pub index: usize,
    pub u: VectorDump,
    pub u_star: VectorDump,
    pub u_eps: VectorDump,
}

impl SeedExport {
    pub fn file_name(&self) -> String {
        format!("seeds_D{}_r{}_k{}.json", self.dim, self.r, self.index)
    }
}

fn embed(slice: &[usize], n: usize, v: &ExactVector) -> ExactVector {
    let mut out = vec![GaussRat::zero(); n];
    for (k, &y) in slice.iter().enumerate() {
        out[y] = v.get(k).clone();
    }
    ExactVector::new(out)
}

/// Orthogonal decomposition into irreducible modules, with every module
/// invariant checked.
pub fn decompose(ctx: &CubeContext) -> Result<Decomposition> {
    let dim = ctx.dim();
    let n = ctx.size();
    let raising = raising_operator(ctx);
    let slices: Vec<Vec<usize>> = (0..=dim)
        .map(|k| (0..n).filter(|&y| weight(y) == k).collect())
        .collect();

    let seeds_per_r: Vec<(usize, Vec<ExactVector>)> = (0..=dim / 2)
        .into_par_iter()
        .map(|r| {
            let kernel = if r == 0 {
                vec![ExactVector::unit(1, 0)]
            } else {
                kernel_basis(&ctx.a().submatrix(&slices[r - 1], &slices[r]))
            };
            let embedded: Vec<ExactVector> = kernel.iter().map(|v| embed(&slices[r], n, v)).collect();
            gram_schmidt(&embedded).map(|g| (r, g))
        })
        .collect::<Result<_>>()?;

    let mut jobs = Vec::new();
    let mut multiplicities = BTreeMap::new();
    for (r, seeds) in seeds_per_r {
        multiplicities.insert(r, seeds.len());
        jobs.extend(seeds.into_iter().enumerate().map(|(index, s)| (r, index, s)));
    }

    let modules: Vec<IrreducibleModule> = jobs
        .into_par_iter()
        .map(|(r, index, u_star)| {
            let d = dim - 2 * r;
            let mut slice_basis = vec![u_star.clone()];
            for _ in 0..d {
                let next = raising.matvec(slice_basis.last().expect("nonempty"))?;
                slice_basis.push(next);
            }
            if let Some(i) = slice_basis.iter().position(ExactVector::is_zero) {
                return Err(Error::InvariantViolated {
                    r,
                    index,
                    invariant: format!("R^{i} u* is nonzero"),
                });
            }
            let m = IrreducibleModule {
                dim,
                r,
                index,
                u: ctx.e()[r].matvec(&u_star)?,
                u_eps: ctx.eeps()[r].matvec(&u_star)?,
                u_star,
                slice_basis,
            };
            m.validate(ctx)?;
            Ok(m)
        })
        .collect::<Result<_>>()?;

    Ok(Decomposition {
        dim,
        modules,
        multiplicities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_passed;

    #[test]
    fn lowering_and_raising_split_a() {
        let ctx = CubeContext::build(4).unwrap();
        let l = lowering_operator(&ctx);
        let r = raising_operator(&ctx);
        assert_eq!(l.add(&r).unwrap(), *ctx.a());
        assert_eq!(l.adjoint(), r);
        assert!(l.matvec(&ExactVector::unit(16, 0)).unwrap().is_zero());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(4, 2).unwrap(), 2);
        assert_eq!(multiplicity(5, 0).unwrap(), 1);
        assert!(multiplicity(4, 3).is_err());
        for dim in 1..=8 {
            let total: usize = (0..=dim / 2)
                .map(|r| multiplicity(dim, r).unwrap() * (dim - 2 * r + 1))
                .sum();
            assert_eq!(total, 1 << dim);
        }
    }

    #[test]
    fn small_decompositions() {
        let ctx = CubeContext::build(1).unwrap();
        let dec = decompose(&ctx).unwrap();
        assert_eq!(dec.modules().len(), 1);
        assert_eq!((dec.modules()[0].r(), dec.modules()[0].d()), (0, 1));

        let ctx = CubeContext::build(2).unwrap();
        let dims: Vec<(usize, usize)> = decompose(&ctx)
            .unwrap()
            .modules()
            .iter()
            .map(|m| (m.r(), m.dimension()))
            .collect();
        assert_eq!(dims, vec![(0, 3), (1, 1)]);

        let ctx = CubeContext::build(3).unwrap();
        let dec = decompose(&ctx).unwrap();
        let dims: Vec<(usize, usize)> = dec.modules().iter().map(|m| (m.r(), m.dimension())).collect();
        assert_eq!(dims, vec![(0, 4), (1, 2), (1, 2)]);
        assert!(all_passed(&dec.verify().unwrap()));
    }

    #[test]
    fn module_checks_pass_for_d4() {
        let ctx = CubeContext::build(4).unwrap();
        let dec = decompose(&ctx).unwrap();
        for m in dec.modules() {
            assert!(all_passed(&m.verify_seed_relations().unwrap()));
            let checks = m.verify_structure(&ctx).unwrap();
            assert!(all_passed(&checks), "{:?}", crate::report::failures(&checks));
        }
    }

    #[test]
    fn normalization_targets() {
        let ctx = CubeContext::build(3).unwrap();
        let dec = decompose(&ctx).unwrap();
        for m in dec.modules() {
            let (a0, b0, c0) = m.seed_inner_products().unwrap();
            let a = a0.scale(&BigRational::from_integer(4.into()));
            let n = m.normalize_seeds(&a, &b0, &c0).unwrap();
            assert_eq!(n.seed_inner_products().unwrap(), (a.clone(), b0.clone(), c0.clone()));
            assert!(all_passed(&n.verify_seed_relations().unwrap()));

            let doubled = a0.scale(&BigRational::from_integer(2.into()));
            assert_eq!(
                m.normalize_seeds(&doubled, &b0, &c0).unwrap_err(),
                Error::FieldExtensionRequired
            );
            assert_eq!(
                m.normalize_seeds(&-a0.clone(), &b0, &c0).unwrap_err(),
                Error::InfeasibleTargets
            );
            assert_eq!(
                m.normalize_seeds(&GaussRat::zero(), &b0, &c0).unwrap_err(),
                Error::InfeasibleTargets
            );
        }
    }

    #[test]
    fn unit_rescaling_keeps_seed_inner_products() {
        let ctx = CubeContext::build(2).unwrap();
        let m = decompose(&ctx).unwrap().modules()[0].clone();
        assert_eq!(
            m.scale_seeds(&GaussRat::i()).seed_inner_products().unwrap(),
            m.seed_inner_products().unwrap()
        );
    }

    #[test]
    fn rational_square_roots() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(rational_sqrt(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(rational_sqrt(&q(2, 1)), None);
        assert_eq!(rational_sqrt(&q(-1, 1)), None);
    }
}
