//! Acceptance run: every criterion on the full dimension range, exact
//! equality throughout. Prints one `criterion N: PASS|FAIL` line each and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use terwilliger::cube::{CubeContext, Operator};
use terwilliger::decomp::{decompose, Decomposition, IrreducibleModule};
use terwilliger::leonard::{
    build_six_bases, is_leonard_triple, phi_matrix, transition_matrices, transition_matrices_with_phi,
    verify_inner_products, verify_inner_products_with_phi, BasisKind, PhiMatrix, RepMatrices, SixBases, Verdict,
};
use terwilliger::linalg::rank;
use terwilliger::{ExactMatrix, GaussRat, IdentityCheck};

const MAX_D: usize = 8;
const MAX_TRANSITION_D: usize = 6;

fn g(re: i64, im: i64) -> GaussRat {
    GaussRat::from_gauss_int(re, im)
}

fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, t| acc * (n - t) as i64 / (t + 1) as i64)
}

fn passed(cs: &[IdentityCheck]) -> bool {
    cs.iter().all(|c| c.passed)
}

/// Failure messages accumulated by one criterion.
#[derive(Default)]
struct Findings(Vec<String>);

impl Findings {
    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn checks(&mut self, label: &str, cs: &[IdentityCheck]) {
        for c in cs.iter().filter(|c| !c.passed) {
            self.0.push(format!(
                "{label}: {} (first discrepancy {:?})",
                c.identity, c.first_discrepancy
            ));
        }
    }

    fn merge(&mut self, other: Findings) {
        self.0.extend(other.0);
    }
}

mod oracle {
    use super::*;

    pub fn adjacency(dim: usize) -> ExactMatrix {
        let n = 1 << dim;
        ExactMatrix::from_int_fn(n, n, |y, z| (((y ^ z).count_ones() == 1) as i64, 0))
    }

    pub fn dual(dim: usize) -> ExactMatrix {
        let n = 1 << dim;
        ExactMatrix::from_int_fn(n, n, |y, z| {
            ((y == z) as i64 * (dim as i64 - 2 * y.count_ones() as i64), 0)
        })
    }

    pub fn imaginary(dim: usize) -> ExactMatrix {
        let (a, s) = (adjacency(dim), dual(dim));
        let comm = a.matmul(&s).unwrap().sub(&s.matmul(&a).unwrap()).unwrap();
        comm.scale(&g(0, -1)).scale(&GaussRat::from_frac(1, 2).unwrap())
    }

    /// Entry `(y, z)` is the product over coordinates of `P_1[y_k][z_k]`
    /// with `P_1 = [[1, 1], [-i, i]]`.
    pub fn p(dim: usize) -> ExactMatrix {
        let n = 1 << dim;
        ExactMatrix::from_int_fn(n, n, |y, z| {
            let (mut re, mut im) = (1i64, 0i64);
            for k in 0..dim {
                let (a, b) = ((y >> k) & 1, (z >> k) & 1);
                let (fr, fi) = match (a, b) {
                    (0, _) => (1, 0),
                    (1, 0) => (0, -1),
                    _ => (0, 1),
                };
                (re, im) = (re * fr - im * fi, re * fi + im * fr);
            }
            (re, im)
        })
    }

    /// `(E_i)_{yz} = 2^-D sum_k (-1)^k C(h,k) C(D-h,i-k)` with `h = dist(y,z)`.
    pub fn primitive_idempotent(dim: usize, i: usize) -> ExactMatrix {
        let n = 1 << dim;
        let kraw: Vec<i64> = (0..=dim)
            .map(|h| {
                (0..=i)
                    .map(|k| if k % 2 == 1 { -1 } else { 1 } * binom(h, k) * binom(dim - h, i - k))
                    .sum()
            })
            .collect();
        ExactMatrix::from_int_fn(n, n, |y, z| (kraw[(y ^ z).count_ones() as usize], 0))
            .scale(&GaussRat::from_frac(1, n as i64).unwrap())
    }

    pub fn dual_idempotent(dim: usize, i: usize) -> ExactMatrix {
        let n = 1 << dim;
        ExactMatrix::from_int_fn(n, n, |y, z| ((y == z && y.count_ones() as usize == i) as i64, 0))
    }

    fn tridiagonal(d: usize, sub_sign: i64, sup_sign: i64, unit: (i64, i64)) -> ExactMatrix {
        let n = d + 1;
        ExactMatrix::from_int_fn(n, n, |r, c| {
            let v = if r == c + 1 {
                sub_sign * r as i64
            } else if c == r + 1 {
                sup_sign * (d - r) as i64
            } else {
                0
            };
            (v * unit.0, v * unit.1)
        })
    }

    /// Closed form expected for operator `op` (0 = A, 1 = A*, 2 = Aε) in
    /// basis `kind`.
    pub fn form(kind: BasisKind, op: usize, d: usize) -> ExactMatrix {
        let diag = || ExactMatrix::diag(&(0..=d).map(|k| g(d as i64 - 2 * k as i64, 0)).collect::<Vec<_>>());
        let m1 = || tridiagonal(d, 1, 1, (1, 0));
        let m2 = || tridiagonal(d, -1, 1, (0, 1));
        let m3 = || tridiagonal(d, 1, -1, (0, 1));
        let row: [&dyn Fn() -> ExactMatrix; 3] = match kind {
            BasisKind::AsA => [&m1, &diag, &m2],
            BasisKind::AeA => [&m1, &m3, &diag],
            BasisKind::AeAs => [&m2, &m1, &diag],
            BasisKind::AAs => [&diag, &m1, &m3],
            BasisKind::AAe => [&diag, &m2, &m1],
            BasisKind::AsAe => [&m3, &diag, &m1],
        };
        row[op]()
    }

    fn binom_big(n: usize, k: usize) -> BigInt {
        BigInt::from(binom(n, k))
    }

    pub fn phi(i: usize, j: usize, d: usize) -> BigRational {
        let s: BigInt = (0..=i)
            .map(|k| {
                let t = binom_big(j, k) * binom_big(d - j, i - k);
                if k % 2 == 1 {
                    -t
                } else {
                    t
                }
            })
            .sum();
        BigRational::new(s * binom_big(d, j), binom_big(d, i))
    }
}

struct Cube {
    ctx: CubeContext,
    dec: Decomposition,
}

struct ModuleData<'a> {
    dim: usize,
    module: &'a IrreducibleModule,
    bases: SixBases,
    reps: RepMatrices,
}

impl ModuleData<'_> {
    fn label(&self) -> String {
        format!("D={} r={} k={}", self.dim, self.module.r(), self.module.index())
    }
}

fn criterion_1(cubes: &[Cube]) -> Findings {
    let mut f = Findings::default();
    for (dim, c) in (1..).zip(cubes) {
        let (a, s, e) = (oracle::adjacency(dim), oracle::dual(dim), oracle::imaginary(dim));
        f.require(c.ctx.a() == &a, || {
            format!("D={dim}: A differs from the Hamming-distance oracle")
        });
        f.require(c.ctx.astar() == &s, || {
            format!("D={dim}: A* differs from the weight oracle")
        });
        f.require(c.ctx.aeps() == &e, || format!("D={dim}: Aeps differs from -i[A,A*]/2"));
        let mm = |x: &ExactMatrix, y: &ExactMatrix| x.matmul(y).unwrap();
        let comm = |x: &ExactMatrix, y: &ExactMatrix| mm(x, y).sub(&mm(y, x)).unwrap();
        let two_i = g(0, 2);
        let identities = [
            ("AA*-A*A=2iAeps", comm(&a, &s), e.scale(&two_i)),
            ("A*Aeps-AepsA*=2iA", comm(&s, &e), a.scale(&two_i)),
            ("AepsA-AAeps=2iA*", comm(&e, &a), s.scale(&two_i)),
            (
                "A*^2A-2A*AA*+AA*^2=4A",
                mm(&mm(&s, &s), &a)
                    .sub(&mm(&mm(&s, &a), &s).scale_int(2))
                    .unwrap()
                    .add(&mm(&a, &mm(&s, &s)))
                    .unwrap(),
                a.scale_int(4),
            ),
            (
                "A^2A*-2AA*A+A*A^2=4A*",
                mm(&mm(&a, &a), &s)
                    .sub(&mm(&mm(&a, &s), &a).scale_int(2))
                    .unwrap()
                    .add(&mm(&s, &mm(&a, &a)))
                    .unwrap(),
                s.scale_int(4),
            ),
        ];
        for (name, lhs, rhs) in identities {
            f.require(lhs == rhs, || format!("D={dim}: {name}"));
        }
        let lib = c.ctx.verify_commutators();
        f.require(lib.len() == 5, || {
            format!("D={dim}: commutator suite lists {} identities", lib.len())
        });
        f.checks(&format!("D={dim}"), &lib);
    }
    f
}

fn criterion_2(cubes: &[Cube]) -> Findings {
    let mut f = Findings::default();
    for (dim, c) in (1..).zip(cubes) {
        let n = 1usize << dim;
        let p = oracle::p(dim);
        f.require(c.ctx.p() == &p, || {
            format!("D={dim}: P differs from the coordinate-product oracle")
        });
        let id = ExactMatrix::identity(n);
        let scale = g(n as i64, 0);
        f.require(p.matmul(&p.adjoint()).unwrap() == id.scale(&scale), || {
            format!("D={dim}: P adj(P) = 2^D I")
        });
        f.require(p.adjoint().matmul(&p).unwrap() == id.scale(&scale), || {
            format!("D={dim}: adj(P) P = 2^D I")
        });
        let cube = p.matmul(&p).unwrap().matmul(&p).unwrap();
        let want = id.scale(&(&scale * &GaussRat::one_minus_i_pow(dim as i64)));
        f.require(cube == want, || format!("D={dim}: P^3 = 2^D (1-i)^D I"));
        let p_inv = p.adjoint().scale(&scale.inv().unwrap());
        f.require(c.ctx.p_inv() == &p_inv, || format!("D={dim}: P^-1 = adj(P)/2^D"));
        let conj = |x: &ExactMatrix| p.matmul(x).unwrap().matmul(&p_inv).unwrap();
        f.require(&conj(c.ctx.a()) == c.ctx.astar(), || format!("D={dim}: PAP^-1 = A*"));
        f.require(&conj(c.ctx.astar()) == c.ctx.aeps(), || {
            format!("D={dim}: PA*P^-1 = Aeps")
        });
        f.require(&conj(c.ctx.aeps()) == c.ctx.a(), || format!("D={dim}: PAepsP^-1 = A"));
        f.checks(&format!("D={dim}"), &c.ctx.verify_p_structure());
        if dim <= 6 {
            f.checks(&format!("D={dim}"), &c.ctx.verify_centralizer());
        }
    }
    f
}

fn criterion_3(cubes: &[Cube]) -> Findings {
    let per_dim: Vec<Findings> = (1..)
        .zip(cubes)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(dim, c): (usize, &Cube)| {
            let mut f = Findings::default();
            let label = format!("D={dim}");
            f.checks(&label, &c.ctx.verify_idempotents());
            f.checks(&label, &c.ctx.verify_vanishing_pattern());
            let p_inv = c.ctx.p_inv();
            for i in 0..=dim {
                let e = oracle::primitive_idempotent(dim, i);
                let es = oracle::dual_idempotent(dim, i);
                f.require(c.ctx.e()[i] == e, || {
                    format!("{label}: E_{i} differs from the Krawtchouk oracle")
                });
                f.require(c.ctx.estar()[i] == es, || {
                    format!("{label}: E*_{i} differs from the weight oracle")
                });
                let eeps = p_inv.matmul(&e).unwrap().matmul(c.ctx.p()).unwrap();
                f.require(c.ctx.eeps()[i] == eeps, || format!("{label}: Eeps_{i} = P^-1 E_{i} P"));
                let want = binom(dim, i);
                for (tag, m) in [("E", &e), ("E*", &es), ("Eeps", &eeps)] {
                    f.require(m.trace() == g(want, 0), || {
                        format!("{label}: trace {tag}_{i} = C(D,{i})")
                    });
                    if dim <= 5 {
                        f.require(rank(m) as i64 == want, || format!("{label}: rank {tag}_{i} = C(D,{i})"));
                    }
                }
            }
            f
        })
        .collect();
    let mut f = Findings::default();
    per_dim.into_iter().for_each(|x| f.merge(x));
    f
}

fn criterion_4(cubes: &[Cube]) -> Findings {
    let mut f = Findings::default();
    for (dim, c) in (1..).zip(cubes) {
        let label = format!("D={dim}");
        f.require(c.dec.total_dimension() == 1 << dim, || {
            format!("{label}: module dimensions sum to 2^D")
        });
        let a = oracle::adjacency(dim);
        let slice = |r: usize| -> Vec<usize> { (0..1usize << dim).filter(|y| y.count_ones() as usize == r).collect() };
        for r in 0..=dim / 2 {
            let want = (binom(dim, r) - if r > 0 { binom(dim, r - 1) } else { 0 }) as usize;
            let kernel_dim = if r == 0 {
                1
            } else {
                let cols = slice(r);
                cols.len() - rank(&a.submatrix(&slice(r - 1), &cols))
            };
            let count = c.dec.modules().iter().filter(|m| m.r() == r).count();
            f.require(kernel_dim == want, || {
                format!("{label} r={r}: lowering kernel has dimension {kernel_dim}, expected {want}")
            });
            f.require(count == want, || {
                format!("{label} r={r}: {count} modules, expected {want}")
            });
            f.require(c.dec.multiplicities().get(&r) == Some(&want), || {
                format!("{label} r={r}: reported multiplicity")
            });
        }
        f.checks(&label, &c.dec.verify().unwrap());
        let module_findings: Vec<Findings> = c
            .dec
            .modules()
            .par_iter()
            .map(|m| {
                let mut f = Findings::default();
                let label = format!("D={dim} r={} k={}", m.r(), m.index());
                let d = m.d();
                f.require(d == dim - 2 * m.r() && m.dimension() == d + 1, || {
                    format!("{label}: d = D - 2r")
                });
                let w = ExactMatrix::from_columns(m.slice_basis()).unwrap();
                for (tag, family) in [("E", c.ctx.e()), ("E*", c.ctx.estar()), ("Eeps", c.ctx.eeps())] {
                    for (i, fam) in family.iter().enumerate() {
                        let k = rank(&fam.matmul(&w).unwrap());
                        let want = usize::from(m.r() <= i && i <= m.r() + d);
                        f.require(k == want, || format!("{label}: dim {tag}_{i}W = {k}, expected {want}"));
                    }
                }
                for (name, v) in [("u", m.u()), ("u*", m.u_star()), ("ueps", m.u_eps())] {
                    f.require(!v.is_zero(), || format!("{label}: {name} is zero"));
                }
                let (x, y, z) = m.seed_inner_products().unwrap();
                f.require(!x.is_zero() && !y.is_zero() && !z.is_zero(), || {
                    format!("{label}: seed inner products vanish")
                });
                f.checks(&label, &m.verify_structure(&c.ctx).unwrap());
                f
            })
            .collect();
        module_findings.into_iter().for_each(|x| f.merge(x));
    }
    f
}

fn per_module(modules: &[ModuleData], check: impl Fn(&ModuleData) -> Findings + Sync + Send) -> Findings {
    let mut f = Findings::default();
    modules
        .par_iter()
        .map(check)
        .collect::<Vec<_>>()
        .into_iter()
        .for_each(|x| f.merge(x));
    f
}

fn criterion_5(modules: &[ModuleData]) -> Findings {
    per_module(modules, |m| {
        let mut f = Findings::default();
        let d = m.module.d();
        for kind in BasisKind::ALL {
            for (k, op) in Operator::ALL.into_iter().enumerate() {
                let got = m.reps.get(kind, op);
                let want = oracle::form(kind, k, d);
                f.require(got == &want, || {
                    format!(
                        "{}: {} in {} at {:?}",
                        m.label(),
                        op.name(),
                        kind.tag(),
                        got.first_discrepancy(&want)
                    )
                });
            }
        }
        f.require(m.reps.check_forms().iter().all(|c| c.3), || {
            format!("{}: library form check", m.label())
        });
        f.checks(&m.label(), &m.reps.verify_commutators());
        f
    })
}

fn criterion_6(modules: &[ModuleData]) -> Findings {
    let mut f = Findings::default();
    for d in 0..=12 {
        let phi = phi_matrix(d);
        f.checks(&format!("phi d={d}"), &phi.verify_recurrence());
        f.checks(&format!("phi d={d}"), &[phi.verify_square()]);
        for i in 0..=d {
            for j in 0..=d {
                f.require(phi.get(i, j) == &oracle::phi(i, j, d), || {
                    format!("phi d={d}: entry ({i},{j})")
                });
            }
        }
    }
    f.merge(per_module(modules, |m| {
        let mut f = Findings::default();
        let report = verify_inner_products(&m.bases).unwrap();
        let d = m.module.d();
        f.require(report.checks.len() >= 21 * (d + 1) * (d + 1), || {
            format!("{}: too few pairings", m.label())
        });
        for c in report.checks.iter().filter(|c| !c.passed) {
            f.0.push(format!(
                "{}: {} <{},{}> at ({},{})",
                m.label(),
                c.theorem,
                c.x.tag(),
                c.y.tag(),
                c.i,
                c.j
            ));
        }
        f.checks(&m.label(), &m.bases.verify());
        f
    }));
    f
}

fn criterion_7(modules: &[ModuleData]) -> Findings {
    let small: Vec<&ModuleData> = modules.iter().filter(|m| m.dim <= MAX_TRANSITION_D).collect();
    let mut f = Findings::default();
    let results: Vec<Findings> = small
        .par_iter()
        .map(|m| {
            let mut f = Findings::default();
            let t = transition_matrices(&m.bases).unwrap();
            f.require(t.cells.len() == 36, || {
                format!("{}: {} cells", m.label(), t.cells.len())
            });
            for (from, to) in t.failures() {
                f.0.push(format!("{}: transition {} -> {}", m.label(), from.tag(), to.tag()));
            }
            for kind in BasisKind::ALL {
                f.require(
                    t.cell(kind, kind).computed == ExactMatrix::identity(m.module.d() + 1),
                    || format!("{}: diagonal cell {}", m.label(), kind.tag()),
                );
            }
            f.checks(&m.label(), &t.coherence);
            f
        })
        .collect();
    results.into_iter().for_each(|x| f.merge(x));
    f
}

fn criterion_8(modules: &[ModuleData]) -> Findings {
    let mut f = per_module(modules, |m| {
        let mut f = Findings::default();
        let [b, s, e] = Operator::ALL.map(|op| m.reps.get(BasisKind::AsA, op));
        let v = is_leonard_triple(b, s, e);
        f.require(v.verdict == Verdict::True, || {
            format!("{}: verdict {} ({})", m.label(), v.verdict.as_str(), v.reason)
        });
        f.require(
            v.certificates.len() == 3 && v.certificates.iter().all(|c| c.descending),
            || format!("{}: certificates are not all in descending order", m.label()),
        );
        f
    });
    for d in 1..=6 {
        let diag = ExactMatrix::diag(&(0..=d).map(|k| g(d as i64 - 2 * k as i64, 0)).collect::<Vec<_>>());
        let v = is_leonard_triple(&diag, &diag, &diag);
        f.require(v.verdict == Verdict::False, || {
            format!("commuting diagonal triple d={d}: {}", v.verdict.as_str())
        });
    }
    f
}

fn criterion_9(modules: &[ModuleData]) -> Findings {
    per_module(modules, |m| {
        let mut f = Findings::default();
        let rel = m.module.verify_seed_relations().unwrap();
        f.require(rel.len() == 4, || {
            format!("{}: {} seed relations", m.label(), rel.len())
        });
        f.checks(&m.label(), &rel);
        let (a, b, c) = m.module.seed_inner_products().unwrap();
        let prod = &(&(&a * &b) * &c) * &GaussRat::one_plus_i_pow(m.module.d() as i64);
        f.require(prod.is_real() && prod.re() > &BigRational::zero(), || {
            format!("{}: positivity", m.label())
        });
        f
    })
}

/// Negated if nonzero, one otherwise.
fn mutate(phi: &PhiMatrix, i: usize, j: usize) -> PhiMatrix {
    let v = if phi.is_zero_at(i, j) {
        BigRational::one()
    } else {
        -phi.get(i, j).clone()
    };
    phi.with_entry(i, j, v)
}

fn criterion_10(cubes: &[Cube], modules: &[ModuleData]) -> Findings {
    let mut f = Findings::default();
    for (dim, c) in (1..).zip(cubes).take(4) {
        let n = 1 << dim;
        let entries: Vec<(usize, usize)> = (0..n)
            .flat_map(|r| (0..n).map(move |col| (r, col)))
            .filter(|&(r, col)| !c.ctx.aeps().is_zero_at(r, col))
            .collect();
        let undetected: Vec<(usize, usize)> = entries
            .par_iter()
            .copied()
            .filter(|&(r, col)| passed(&c.ctx.with_corrupted_aeps(r, col).verify_commutators()))
            .collect();
        for (r, col) in undetected {
            f.0.push(format!("D={dim}: sign flip of Aeps[{r},{col}] went undetected"));
        }
    }
    let sample: Vec<&ModuleData> = modules.iter().filter(|m| m.dim == 4 || m.dim == 5).collect();
    let results: Vec<Findings> = sample
        .par_iter()
        .map(|m| {
            let mut f = Findings::default();
            let d = m.module.d();
            let phi = phi_matrix(d);
            for i in 0..=d {
                for j in 0..=d {
                    let bad = mutate(&phi, i, j);
                    let inner_ok = verify_inner_products_with_phi(&m.bases, &bad).unwrap().all_passed();
                    let trans_ok = transition_matrices_with_phi(&m.bases, &bad).unwrap().all_passed();
                    f.require(!(inner_ok && trans_ok), || {
                        format!(
                            "{}: mutation of phi({i},{j}) missed (inner {inner_ok}, transitions {trans_ok})",
                            m.label()
                        )
                    });
                }
            }
            f
        })
        .collect();
    results.into_iter().for_each(|x| f.merge(x));
    f
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cubes: Vec<Cube> = (1..=MAX_D)
        .into_par_iter()
        .map(|dim| {
            let ctx = CubeContext::build(dim).expect("construction");
            let dec = decompose(&ctx).expect("decomposition");
            Cube { ctx, dec }
        })
        .collect();
    let modules: Vec<ModuleData> = (1..)
        .zip(&cubes)
        .flat_map(|(dim, c)| c.dec.modules().iter().map(move |m| (dim, &c.ctx, m)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(dim, ctx, module)| {
            let bases = build_six_bases(ctx, module).expect("six bases");
            let reps = RepMatrices::compute(ctx, &bases).expect("representation");
            ModuleData {
                dim,
                module,
                bases,
                reps,
            }
        })
        .collect();
    println!(
        "setup: D = 1..={MAX_D}, {} modules, {:.1}s",
        modules.len(),
        start.elapsed().as_secs_f64()
    );

    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Findings + 'a>);
    let criteria: [Criterion; 10] = [
        ("operator identities", Box::new(|| criterion_1(&cubes))),
        ("P structure and conjugation cycle", Box::new(|| criterion_2(&cubes))),
        ("idempotent families and ranks", Box::new(|| criterion_3(&cubes))),
        ("decomposition", Box::new(|| criterion_4(&cubes))),
        ("representation matrices", Box::new(|| criterion_5(&modules))),
        ("inner products", Box::new(|| criterion_6(&modules))),
        ("transition matrices", Box::new(|| criterion_7(&modules))),
        ("Leonard verdict", Box::new(|| criterion_8(&modules))),
        ("seed norm relations", Box::new(|| criterion_9(&modules))),
        ("mutation sensitivity", Box::new(|| criterion_10(&cubes, &modules))),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let findings = run();
        let ok = findings.0.is_empty();
        all &= ok;
        println!(
            "criterion {}: {} ({name}, {:.1}s)",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64()
        );
        for msg in findings.0.iter().take(20) {
            println!("    {msg}");
        }
        if findings.0.len() > 20 {
            println!("    ... {} more", findings.0.len() - 20);
        }
    }
    println!("total {:.1}s", start.elapsed().as_secs_f64());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
