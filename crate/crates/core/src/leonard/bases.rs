use serde::{Deserialize, Serialize};

use crate::cube::{CubeContext, Operator};
use crate::decomp::IrreducibleModule;
use crate::error::{Error, Result};
use crate::linalg::{BasisFrame, ExactMatrix, ExactVector};
use crate::report::IdentityCheck;

/// Which seed a basis is generated from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Seed {
    U,
    UStar,
    UEps,
}

impl Seed {
    pub fn name(self) -> &'static str {
        match self {
            Seed::U => "u",
            Seed::UStar => "u*",
            Seed::UEps => "ueps",
        }
    }
}

/// The six bases of a module, named after the idempotent family applied and
/// the seed it is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisKind {
    /// `E*_{r+i} u`
    AsA,
    /// `Eε_{r+i} u`
    AeA,
    /// `Eε_{r+i} u*`
    AeAs,
    /// `E_{r+i} u*`
    AAs,
    /// `E_{r+i} uε`
    AAe,
    /// `E*_{r+i} uε`
    AsAe,
}

impl BasisKind {
    pub const ALL: [BasisKind; 6] = [
        BasisKind::AsA,
        BasisKind::AeA,
        BasisKind::AeAs,
        BasisKind::AAs,
        BasisKind::AAe,
        BasisKind::AsAe,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            BasisKind::AsA => "AsA",
            BasisKind::AeA => "AeA",
            BasisKind::AeAs => "AeAs",
            BasisKind::AAs => "AAs",
            BasisKind::AAe => "AAe",
            BasisKind::AsAe => "AsAe",
        }
    }

    pub fn position(self) -> usize {
        Self::ALL.iter().position(|&k| k == self).expect("listed")
    }

    pub fn seed(self) -> Seed {
        match self {
            BasisKind::AsA | BasisKind::AeA => Seed::U,
            BasisKind::AeAs | BasisKind::AAs => Seed::UStar,
            BasisKind::AAe | BasisKind::AsAe => Seed::UEps,
        }
    }

    /// Operator whose idempotents build the basis.
    pub fn family(self) -> Operator {
        match self {
            BasisKind::AsA | BasisKind::AsAe => Operator::AStar,
            BasisKind::AeA | BasisKind::AeAs => Operator::AEps,
            BasisKind::AAs | BasisKind::AAe => Operator::A,
        }
    }
}

/// All six bases of one module together with the seeds they came from.
#[derive(Clone, Debug)]
pub struct SixBases {
    d: usize,
    seeds: [ExactVector; 3],
    bases: [Vec<ExactVector>; 6],
}

impl SixBases {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn basis(&self, kind: BasisKind) -> &[ExactVector] {
        &self.bases[kind.position()]
    }

    pub fn seed(&self, seed: Seed) -> &ExactVector {
        match seed {
            Seed::U => &self.seeds[0],
            Seed::UStar => &self.seeds[1],
            Seed::UEps => &self.seeds[2],
        }
    }

    pub fn seed_of(&self, kind: BasisKind) -> &ExactVector {
        self.seed(kind.seed())
    }

    /// Basis vectors as the columns of an `n x (d+1)` matrix.
    pub fn matrix(&self, kind: BasisKind) -> ExactMatrix {
        ExactMatrix::from_columns(self.basis(kind)).expect("equal lengths")
    }

    /// Each list is linearly independent, spans a space of dimension `d+1`,
    /// and sums back to its seed.
    pub fn verify(&self) -> Vec<IdentityCheck> {
        let mut out = Vec::new();
        for kind in BasisKind::ALL {
            let vs = self.basis(kind);
            out.push(IdentityCheck::holds(
                format!("{} is linearly independent", kind.tag()),
                BasisFrame::new(vs).is_ok(),
            ));
            let sum = vs
                .iter()
                .skip(1)
                .try_fold(vs[0].clone(), |acc, v| acc.add(v))
                .expect("equal lengths");
            out.push(IdentityCheck::holds(
                format!("{} = sum of {}", kind.seed().name(), kind.tag()),
                &sum == self.seed_of(kind),
            ));
        }
        out
    }
}

fn apply_family(
    ctx: &CubeContext,
    family: Operator,
    r: usize,
    d: usize,
    seeds: &[ExactVector],
) -> Result<Vec<Vec<ExactVector>>> {
    (0..=d)
        .map(|i| ctx.idempotents(family)[r + i].apply_all(seeds))
        .collect()
}

fn build_from_seeds(
    ctx: &CubeContext,
    r: usize,
    d: usize,
    u: &ExactVector,
    us: &ExactVector,
    ue: &ExactVector,
) -> Result<SixBases> {
    let seeds = [u.clone(), us.clone(), ue.clone()];
    let mut by_family = Vec::new();
    for family in Operator::ALL {
        by_family.push(apply_family(ctx, family, r, d, &seeds)?);
    }
    let pick = |kind: BasisKind| -> Vec<ExactVector> {
        let f = Operator::ALL.iter().position(|&o| o == kind.family()).expect("listed");
        let s = match kind.seed() {
            Seed::U => 0,
            Seed::UStar => 1,
            Seed::UEps => 2,
        };
        by_family[f].iter().map(|col| col[s].clone()).collect()
    };
    let bases = BasisKind::ALL.map(pick);
    for (kind, vs) in BasisKind::ALL.iter().zip(&bases) {
        if let Some(position) = vs.iter().position(ExactVector::is_zero) {
            return Err(Error::ZeroBasisVector {
                basis: kind.tag(),
                position,
            });
        }
    }
    Ok(SixBases { d, seeds, bases })
}

/// Applies the idempotents `E*_{r+i}`, `Eε_{r+i}`, `E_{r+i}` to the seeds of
/// `module`.
pub fn build_six_bases(ctx: &CubeContext, module: &IrreducibleModule) -> Result<SixBases> {
    build_from_seeds(ctx, module.r(), module.d(), module.u(), module.u_star(), module.u_eps())
}

/// `P` carries each basis onto another one once the seed of the source basis
/// is chosen as the preimage (or image) under `P` of the target seed.
pub fn verify_p_shifts(ctx: &CubeContext, module: &IrreducibleModule) -> Result<Vec<IdentityCheck>> {
    let (r, d) = (module.r(), module.d());
    let p = ctx.p();
    let pinv = ctx.p_inv();
    let (u, us, ue) = (module.u(), module.u_star(), module.u_eps());
    let pulled = pinv.matvec(us)?;
    let pushed_star = p.matvec(us)?;
    let pushed_eps = p.matvec(ue)?;

    let base = build_from_seeds(ctx, r, d, u, us, ue)?;
    let from_pulled = build_from_seeds(ctx, r, d, &pulled, us, ue)?;
    let from_pushed = build_from_seeds(ctx, r, d, &pushed_eps, us, &pushed_star)?;

    let cases = [
        (
            "P AsA(P^-1 u*) = AeAs(u*)",
            from_pulled.basis(BasisKind::AsA),
            base.basis(BasisKind::AeAs),
        ),
        (
            "P AeAs(u*) = AAe(P u*)",
            base.basis(BasisKind::AeAs),
            from_pushed.basis(BasisKind::AAe),
        ),
        (
            "P AAe(ueps) = AsA(P ueps)",
            base.basis(BasisKind::AAe),
            from_pushed.basis(BasisKind::AsA),
        ),
        (
            "P AeA(P^-1 u*) = AAs(u*)",
            from_pulled.basis(BasisKind::AeA),
            base.basis(BasisKind::AAs),
        ),
        (
            "P AAs(u*) = AsAe(P u*)",
            base.basis(BasisKind::AAs),
            from_pushed.basis(BasisKind::AsAe),
        ),
        (
            "P AsAe(ueps) = AeA(P ueps)",
            base.basis(BasisKind::AsAe),
            from_pushed.basis(BasisKind::AeA),
        ),
    ];
    cases
        .into_iter()
        .map(|(name, src, dst)| Ok(IdentityCheck::holds(name, p.apply_all(src)? == dst)))
        .collect()
}
