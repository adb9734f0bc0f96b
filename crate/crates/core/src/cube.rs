//! Operators of the hypercube `Q_D` relative to the base vertex `x = (0,...,0)`.
//!
//! Vertices are indexed by `(t_1,...,t_D) -> sum t_k 2^(D-k)`, so `t_1` is the
//! most significant bit and the Kronecker sums over copies of `Q_1` hold with
//! their factors in written order. Every operator that admits two independent
//! constructions is built both ways and the results must agree exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::report::IdentityCheck;
use crate::scalar::GaussRat;

/// Largest dimension accepted by [`CubeContext::build`].
pub const DEFAULT_D_LIMIT: usize = 10;

/// The three operators of the triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Operator {
    /// Adjacency matrix `A`.
    A,
    /// Dual adjacency matrix `A*`.
    AStar,
    /// Imaginary adjacency matrix `Aε`.
    AEps,
}

impl Operator {
    pub const ALL: [Operator; 3] = [Operator::A, Operator::AStar, Operator::AEps];

    pub fn name(self) -> &'static str {
        match self {
            Operator::A => "A",
            Operator::AStar => "Astar",
            Operator::AEps => "Aeps",
        }
    }
}

/// Eigenvalues `D - 2i` with multiplicities, in order `i = 0..=D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumTable {
    pub entries: Vec<(i64, usize)>,
}

impl SpectrumTable {
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }
}

pub fn hamming_distance(y: usize, z: usize) -> usize {
    (y ^ z).count_ones() as usize
}

/// `∂(x, y)` for the base vertex `x = 0`.
pub fn weight(y: usize) -> usize {
    y.count_ones() as usize
}

pub fn vertex_index(t: &[u8]) -> usize {
    t.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b != 0))
}

pub fn vertex_tuple(index: usize, dim: usize) -> Vec<u8> {
    (0..dim).map(|k| ((index >> (dim - 1 - k)) & 1) as u8).collect()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, j| acc * (n - j) as u64 / (j + 1) as u64)
}

fn q1_adjacency() -> ExactMatrix {
    ExactMatrix::from_int_rows(&[vec![(0, 0), (1, 0)], vec![(1, 0), (0, 0)]])
}

fn q1_dual() -> ExactMatrix {
    ExactMatrix::from_int_rows(&[vec![(1, 0), (0, 0)], vec![(0, 0), (-1, 0)]])
}

fn q1_imaginary() -> ExactMatrix {
    ExactMatrix::from_int_rows(&[vec![(0, 0), (0, 1)], vec![(0, -1), (0, 0)]])
}

/// `P_1` with rows `(1, 1)` and `(-i, i)`.
pub fn p1() -> ExactMatrix {
    ExactMatrix::from_int_rows(&[vec![(1, 0), (1, 0)], vec![(0, -1), (0, 1)]])
}

/// `sum_i I^{⊗i} ⊗ factor ⊗ I^{⊗(D-1-i)}`.
pub fn kron_sum(factor: &ExactMatrix, dim: usize) -> ExactMatrix {
    let n = 1usize << dim;
    let id = ExactMatrix::identity(2);
    (0..dim).fold(ExactMatrix::zeros(n, n), |acc, i| {
        let term = id.kron_power(i).kron(factor).kron(&id.kron_power(dim - 1 - i));
        acc.add(&term).expect("same shape")
    })
}

pub fn adjacency_by_definition(dim: usize) -> ExactMatrix {
    let n = 1usize << dim;
    ExactMatrix::from_int_fn(n, n, |y, z| (i64::from(hamming_distance(y, z) == 1), 0))
}

pub fn dual_by_definition(dim: usize) -> ExactMatrix {
    let n = 1usize << dim;
    ExactMatrix::from_int_fn(n, n, |y, z| {
        if y == z {
            (dim as i64 - 2 * weight(y) as i64, 0)
        } else {
            (0, 0)
        }
    })
}

/// Entry formula `Aε_yz = i (∂(x,z) - ∂(x,y)) A_yz`.
pub fn imaginary_by_entry_formula(dim: usize) -> ExactMatrix {
    let n = 1usize << dim;
    ExactMatrix::from_int_fn(n, n, |y, z| {
        if hamming_distance(y, z) == 1 {
            (0, weight(z) as i64 - weight(y) as i64)
        } else {
            (0, 0)
        }
    })
}

/// `P_yz = prod_k (P_1)_{y_k z_k}`.
pub fn p_by_entry_formula(dim: usize) -> ExactMatrix {
    let n = 1usize << dim;
    let one = GaussRat::one();
    let minus_i = -GaussRat::i();
    let i = GaussRat::i();
    ExactMatrix::from_fn(n, n, |y, z| {
        let mut acc = GaussRat::one();
        for k in 0..dim {
            let (yk, zk) = ((y >> k) & 1, (z >> k) & 1);
            let f = match (yk, zk) {
                (0, _) => &one,
                (1, 0) => &minus_i,
                _ => &i,
            };
            acc = &acc * f;
        }
        acc
    })
}

/// The distance matrices `A_0, ..., A_D`.
pub fn distance_matrices(dim: usize) -> Vec<ExactMatrix> {
    let n = 1usize << dim;
    (0..=dim)
        .map(|h| ExactMatrix::from_int_fn(n, n, |y, z| (i64::from(hamming_distance(y, z) == h), 0)))
        .collect()
}

/// `prod_{j != i} (op - θ_j I) / (θ_i - θ_j)`.
pub fn interpolation_idempotent(op: &ExactMatrix, thetas: &[i64], i: usize) -> ExactMatrix {
    let n = op.rows();
    let mut acc = ExactMatrix::identity(n);
    let mut denom = 1i64;
    for (j, &tj) in thetas.iter().enumerate() {
        if j == i {
            continue;
        }
        let factor = op.shift(&GaussRat::from_int(tj)).expect("square");
        acc = factor.matmul(&acc).expect("square");
        denom *= thetas[i] - tj;
    }
    acc.scale(&GaussRat::real(BigRational::new(1.into(), denom.into())))
}

/// Permutation matrix of the coordinate transposition `(i j)` (0-based
/// coordinates): entry `(y, z)` is one when `y^σ = z`.
pub fn transposition_matrix(dim: usize, i: usize, j: usize) -> ExactMatrix {
    let n = 1usize << dim;
    let swap = |y: usize| {
        let mut t = vertex_tuple(y, dim);
        t.swap(i, j);
        vertex_index(&t)
    };
    ExactMatrix::from_int_fn(n, n, |y, z| (i64::from(swap(y) == z), 0))
}

/// Everything constructed for one dimension `D`.
#[derive(Clone, Debug)]
pub struct CubeContext {
    dim: usize,
    a: ExactMatrix,
    astar: ExactMatrix,
    aeps: ExactMatrix,
    p: ExactMatrix,
    p_inv: ExactMatrix,
    dist: Vec<ExactMatrix>,
    e: Vec<ExactMatrix>,
    estar: Vec<ExactMatrix>,
    eeps: Vec<ExactMatrix>,
}

fn agree(what: &'static str, x: &ExactMatrix, y: &ExactMatrix) -> Result<()> {
    match x.first_discrepancy(y) {
        None => Ok(()),
        Some(at) => Err(Error::ConstructionMismatch { what, at }),
    }
}

impl CubeContext {
    pub fn build(dim: usize) -> Result<Self> {
        Self::build_with_limit(dim, DEFAULT_D_LIMIT)
    }

    pub fn build_with_limit(dim: usize, limit: usize) -> Result<Self> {
        if dim == 0 || dim > limit {
            return Err(Error::DimensionOutOfRange { dim, limit });
        }
        let n = 1usize << dim;

        let a = adjacency_by_definition(dim);
        agree("A (definition vs Kronecker sum)", &a, &kron_sum(&q1_adjacency(), dim))?;
        let astar = dual_by_definition(dim);
        agree("A* (definition vs Kronecker sum)", &astar, &kron_sum(&q1_dual(), dim))?;

        let aeps = imaginary_from_commutator(&a, &astar);
        agree(
            "Aε (commutator vs entry formula)",
            &aeps,
            &imaginary_by_entry_formula(dim),
        )?;
        agree(
            "Aε (commutator vs Kronecker sum)",
            &aeps,
            &kron_sum(&q1_imaginary(), dim),
        )?;

        let p = p1().kron_power(dim);
        agree("P (Kronecker power vs entry formula)", &p, &p_by_entry_formula(dim))?;
        let two_pow = GaussRat::real(BigRational::from_integer(BigInt::from(1u64) << dim));
        let p_inv = p.adjoint().scale(&two_pow.inv()?);

        let thetas: Vec<i64> = (0..=dim).map(|i| dim as i64 - 2 * i as i64).collect();
        let e: Vec<ExactMatrix> = (0..=dim)
            .into_par_iter()
            .map(|i| interpolation_idempotent(&a, &thetas, i))
            .collect();
        let estar: Vec<ExactMatrix> = (0..=dim)
            .map(|i| ExactMatrix::from_int_fn(n, n, |y, z| (i64::from(y == z && weight(y) == i), 0)))
            .collect();
        let eeps: Vec<ExactMatrix> = e
            .par_iter()
            .map(|ei| p_inv.matmul(ei).and_then(|m| m.matmul(&p)))
            .collect::<Result<_>>()?;

        Ok(CubeContext {
            dim,
            a,
            astar,
            aeps,
            p,
            p_inv,
            dist: distance_matrices(dim),
            e,
            estar,
            eeps,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vertices, `2^D`.
    pub fn size(&self) -> usize {
        1 << self.dim
    }

    pub fn theta(&self, i: usize) -> i64 {
        self.dim as i64 - 2 * i as i64
    }

    pub fn thetas(&self) -> Vec<i64> {
        (0..=self.dim).map(|i| self.theta(i)).collect()
    }

    pub fn a(&self) -> &ExactMatrix {
        &self.a
    }

    pub fn astar(&self) -> &ExactMatrix {
        &self.astar
    }

    pub fn aeps(&self) -> &ExactMatrix {
        &self.aeps
    }

    pub fn operator(&self, op: Operator) -> &ExactMatrix {
        match op {
            Operator::A => &self.a,
            Operator::AStar => &self.astar,
            Operator::AEps => &self.aeps,
        }
    }

    pub fn p(&self) -> &ExactMatrix {
        &self.p
    }

    pub fn p_inv(&self) -> &ExactMatrix {
        &self.p_inv
    }

    pub fn distance_matrices(&self) -> &[ExactMatrix] {
        &self.dist
    }

    /// Primitive idempotents `E_0..E_D` of `A`.
    pub fn e(&self) -> &[ExactMatrix] {
        &self.e
    }

    /// Dual idempotents `E*_0..E*_D`.
    pub fn estar(&self) -> &[ExactMatrix] {
        &self.estar
    }

    /// Imaginary idempotents `Eε_0..Eε_D`.
    pub fn eeps(&self) -> &[ExactMatrix] {
        &self.eeps
    }

    /// Idempotent family belonging to `op`.
    pub fn idempotents(&self, op: Operator) -> &[ExactMatrix] {
        match op {
            Operator::A => &self.e,
            Operator::AStar => &self.estar,
            Operator::AEps => &self.eeps,
        }
    }

    /// Copy whose `Aε` has entry `(r, c)` negated. Used to confirm that the
    /// verification suites are not vacuous.
    pub fn with_corrupted_aeps(&self, r: usize, c: usize) -> Self {
        let mut out = self.clone();
        out.aeps = self.aeps.with_entry(r, c, -self.aeps.get(r, c));
        out
    }

    /// Intersection number `p^h_{ij}` counted directly on the graph.
    pub fn intersection_number(&self, h: usize, i: usize, j: usize) -> usize {
        let n = self.size();
        let Some(y) = (0..n).find(|&y| weight(y) == h) else {
            return 0;
        };
        (0..n)
            .filter(|&z| weight(z) == i && hamming_distance(y, z) == j)
            .count()
    }

    /// The five fundamental identities linking `A`, `A*` and `Aε`.
    pub fn verify_commutators(&self) -> Vec<IdentityCheck> {
        let (a, s, e) = (&self.a, &self.astar, &self.aeps);
        let mul = |x: &ExactMatrix, y: &ExactMatrix| x.matmul(y).expect("square");
        let comm = |x: &ExactMatrix, y: &ExactMatrix| mul(x, y).sub(&mul(y, x)).expect("square");
        let two_i = GaussRat::from_gauss_int(0, 2);
        let ss = mul(s, s);
        let aa = mul(a, a);
        let quad_a = mul(&ss, a)
            .sub(&mul(&mul(s, a), s).scale_int(2))
            .and_then(|m| m.add(&mul(a, &ss)))
            .expect("square");
        let quad_s = mul(&aa, s)
            .sub(&mul(&mul(a, s), a).scale_int(2))
            .and_then(|m| m.add(&mul(s, &aa)))
            .expect("square");
        vec![
            IdentityCheck::compare("AA*-A*A=2iAeps", &comm(a, s), &e.scale(&two_i)),
            IdentityCheck::compare("A*Aeps-AepsA*=2iA", &comm(s, e), &a.scale(&two_i)),
            IdentityCheck::compare("AepsA-AAeps=2iA*", &comm(e, a), &s.scale(&two_i)),
            IdentityCheck::compare("A*^2A-2A*AA*+AA*^2=4A", &quad_a, &a.scale_int(4)),
            IdentityCheck::compare("A^2A*-2AA*A+A*A^2=4A*", &quad_s, &s.scale_int(4)),
        ]
    }

    /// Unitarity up to scale, the cube of `P`, its inverse, and the
    /// conjugation cycle `A -> A* -> Aε -> A`.
    pub fn verify_p_structure(&self) -> Vec<IdentityCheck> {
        let n = self.size();
        let dim = self.dim as i64;
        let id = ExactMatrix::identity(n);
        let two_d = id.scale(&GaussRat::real(BigRational::from_integer(
            BigInt::from(1u64) << self.dim,
        )));
        let padj = self.p.adjoint();
        let cube_scalar = &GaussRat::real(BigRational::from_integer(BigInt::from(1u64) << self.dim))
            * &GaussRat::one_minus_i_pow(dim);
        let p3 = self.p.pow(3).expect("square");
        let conj = |m: &ExactMatrix| self.p.matmul(m).and_then(|x| x.matmul(&self.p_inv)).expect("square");
        vec![
            IdentityCheck::compare("P*adj(P)=2^D I", &self.p.matmul(&padj).expect("square"), &two_d),
            IdentityCheck::compare("adj(P)*P=2^D I", &padj.matmul(&self.p).expect("square"), &two_d),
            IdentityCheck::compare("P^3=2^D(1-i)^D I", &p3, &id.scale(&cube_scalar)),
            IdentityCheck::compare("P*Pinv=I", &self.p.matmul(&self.p_inv).expect("square"), &id),
            IdentityCheck::compare("PAP^-1=A*", &conj(&self.a), &self.astar),
            IdentityCheck::compare("PA*P^-1=Aeps", &conj(&self.astar), &self.aeps),
            IdentityCheck::compare("PAepsP^-1=A", &conj(&self.aeps), &self.a),
        ]
    }

    /// `P` commutes with every coordinate transposition matrix.
    pub fn verify_centralizer(&self) -> Vec<IdentityCheck> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let m = transposition_matrix(self.dim, i, j);
                out.push(IdentityCheck::compare(
                    format!("P*M({},{})=M({},{})*P", i + 1, j + 1, i + 1, j + 1),
                    &self.p.matmul(&m).expect("square"),
                    &m.matmul(&self.p).expect("square"),
                ));
            }
        }
        out
    }

    /// The defining relations of the three idempotent families, their ranks,
    /// and their conjugacy under `P`.
    pub fn verify_idempotents(&self) -> Vec<IdentityCheck> {
        let n = self.size();
        let dim = self.dim;
        let id = ExactMatrix::identity(n);
        let mut out = Vec::new();

        let j_scaled = ExactMatrix::from_int_fn(n, n, |_, _| (1, 0))
            .scale(&GaussRat::real(BigRational::new(1.into(), BigInt::from(n))));
        out.push(IdentityCheck::compare("E0=|X|^-1 J", &self.e[0], &j_scaled));

        for (tag, family, op) in [
            ("E", &self.e, &self.a),
            ("E*", &self.estar, &self.astar),
            ("Eeps", &self.eeps, &self.aeps),
        ] {
            let sum = family
                .iter()
                .fold(ExactMatrix::zeros(n, n), |acc, m| acc.add(m).expect("square"));
            out.push(IdentityCheck::compare(format!("sum {tag}_i=I"), &sum, &id));
            let weighted = family.iter().enumerate().fold(ExactMatrix::zeros(n, n), |acc, (i, m)| {
                acc.add(&m.scale_int(self.theta(i))).expect("square")
            });
            out.push(IdentityCheck::compare(
                format!("sum (D-2i){tag}_i={}", op_name(tag)),
                &weighted,
                op,
            ));
            for (i, ei) in family.iter().enumerate() {
                if tag == "Eeps" {
                    out.push(IdentityCheck::compare(
                        format!("adj({tag}_{i})={tag}_{i}"),
                        &ei.adjoint(),
                        ei,
                    ));
                } else {
                    out.push(IdentityCheck::compare(
                        format!("{tag}_{i}^t={tag}_{i}"),
                        &ei.transpose(),
                        ei,
                    ));
                    out.push(IdentityCheck::compare(
                        format!("conj({tag}_{i})={tag}_{i}"),
                        &ei.conj(),
                        ei,
                    ));
                }
                let theta_e = ei.scale_int(self.theta(i));
                out.push(IdentityCheck::compare(
                    format!("{}*{tag}_{i}=(D-2i){tag}_{i}", op_name(tag)),
                    &op.matmul(ei).expect("square"),
                    &theta_e,
                ));
                out.push(IdentityCheck::compare(
                    format!("{tag}_{i}*{}=(D-2i){tag}_{i}", op_name(tag)),
                    &ei.matmul(op).expect("square"),
                    &theta_e,
                ));
                let rank = idempotent_rank(ei);
                out.push(IdentityCheck::holds(
                    format!("rank({tag}_{i})=C(D,{i})"),
                    rank == Some(binomial(dim, i) as usize),
                ));
            }
            let products: Vec<IdentityCheck> = (0..=dim)
                .into_par_iter()
                .flat_map_iter(|i| {
                    (0..=dim).map(move |j| {
                        let prod = family[i].matmul(&family[j]).expect("square");
                        let expect = if i == j {
                            family[i].clone()
                        } else {
                            ExactMatrix::zeros(n, n)
                        };
                        IdentityCheck::compare(format!("{tag}_{i}{tag}_{j}=delta {tag}_{i}"), &prod, &expect)
                    })
                })
                .collect();
            out.extend(products);
        }

        let thetas = self.thetas();
        for i in 0..=dim {
            out.push(IdentityCheck::compare(
                format!("E*_{i} by interpolation in A*"),
                &interpolation_idempotent(&self.astar, &thetas, i),
                &self.estar[i],
            ));
            out.push(IdentityCheck::compare(
                format!("Eeps_{i} by interpolation in Aeps"),
                &interpolation_idempotent(&self.aeps, &thetas, i),
                &self.eeps[i],
            ));
        }

        let conj = |m: &ExactMatrix| self.p.matmul(m).and_then(|x| x.matmul(&self.p_inv)).expect("square");
        let conjugations: Vec<IdentityCheck> = (0..=dim)
            .into_par_iter()
            .flat_map_iter(|i| {
                [
                    IdentityCheck::compare(format!("E*_{i}=PE_{i}P^-1"), &conj(&self.e[i]), &self.estar[i]),
                    IdentityCheck::compare(format!("Eeps_{i}=PE*_{i}P^-1"), &conj(&self.estar[i]), &self.eeps[i]),
                    IdentityCheck::compare(format!("E_{i}=PEeps_{i}P^-1"), &conj(&self.eeps[i]), &self.e[i]),
                ]
            })
            .collect();
        out.extend(conjugations);
        out
    }

    /// For all `h, j`: `E*_h A E*_j` (and the four products of the five-way
    /// equivalence) vanish exactly when `p^h_{1j} = 0`.
    pub fn verify_vanishing_pattern(&self) -> Vec<IdentityCheck> {
        let dim = self.dim;
        let mul = |x: &ExactMatrix, y: &ExactMatrix| x.matmul(y).expect("square");
        let aeps_e: Vec<ExactMatrix> = self.e.iter().map(|m| mul(&self.aeps, m)).collect();
        let a_eeps: Vec<ExactMatrix> = self.eeps.iter().map(|m| mul(&self.a, m)).collect();
        let s_eeps: Vec<ExactMatrix> = self.eeps.iter().map(|m| mul(&self.astar, m)).collect();
        let pairs: Vec<(usize, usize)> = (0..=dim).flat_map(|h| (0..=dim).map(move |j| (h, j))).collect();
        pairs
            .into_par_iter()
            .flat_map_iter(|(h, j)| {
                let expect_zero = self.intersection_number(h, 1, j) == 0;
                let cases = [
                    ("E*_hAE*_j", mul(&mul(&self.estar[h], &self.a), &self.estar[j])),
                    ("E_hAepsE_j", mul(&self.e[h], &aeps_e[j])),
                    ("E*_hAepsE*_j", mul(&mul(&self.estar[h], &self.aeps), &self.estar[j])),
                    ("Eeps_hAEeps_j", mul(&self.eeps[h], &a_eeps[j])),
                    ("Eeps_hA*Eeps_j", mul(&self.eeps[h], &s_eeps[j])),
                ];
                cases.into_iter().map(move |(name, m)| {
                    IdentityCheck::holds(
                        format!("{name}=0 iff p^{h}_1{j}=0 (h={h},j={j})"),
                        m.is_zero() == expect_zero,
                    )
                })
            })
            .collect()
    }

    /// Eigenvalues with multiplicities read off the ranks of the idempotents of `op`.
    pub fn spectrum(&self, op: Operator) -> SpectrumTable {
        SpectrumTable {
            entries: self
                .idempotents(op)
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    (
                        self.theta(i),
                        idempotent_rank(m).expect("idempotent trace is a natural number"),
                    )
                })
                .collect(),
        }
    }
}

fn op_name(tag: &str) -> &'static str {
    match tag {
        "E" => "A",
        "E*" => "A*",
        _ => "Aeps",
    }
}

/// `Aε = -i (A A* - A* A) / 2`.
pub fn imaginary_from_commutator(a: &ExactMatrix, astar: &ExactMatrix) -> ExactMatrix {
    let comm = a
        .matmul(astar)
        .and_then(|x| x.sub(&astar.matmul(a)?))
        .expect("square operators of equal size");
    comm.scale(&GaussRat::new(
        BigRational::zero(),
        BigRational::new((-1).into(), 2.into()),
    ))
}

/// Rank of an idempotent matrix, which equals its trace. Returns `None` when
/// the trace is not a nonnegative integer (so the input cannot be idempotent).
pub fn idempotent_rank(m: &ExactMatrix) -> Option<usize> {
    let t = m.trace();
    if !t.is_real() || !t.re().is_integer() {
        return None;
    }
    t.re().to_integer().to_usize()
}

/// Builds every operator for `Q_D` with the default dimension limit.
pub fn build_context(dim: usize) -> Result<CubeContext> {
    CubeContext::build(dim)
}

pub fn imaginary_adjacency(ctx: &CubeContext) -> &ExactMatrix {
    ctx.aeps()
}

pub fn build_p(ctx: &CubeContext) -> &ExactMatrix {
    ctx.p()
}

pub fn primitive_idempotents(ctx: &CubeContext) -> &[ExactMatrix] {
    ctx.e()
}

pub fn dual_idempotents(ctx: &CubeContext) -> &[ExactMatrix] {
    ctx.estar()
}

pub fn imaginary_idempotents(ctx: &CubeContext) -> &[ExactMatrix] {
    ctx.eeps()
}

pub fn spectrum(ctx: &CubeContext, which: Operator) -> SpectrumTable {
    ctx.spectrum(which)
}
