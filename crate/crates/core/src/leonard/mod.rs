//! The six bases of an irreducible module, the operators represented in them,
//! their inner products and transition matrices, and a recognizer for Leonard
//! triples.

pub mod bases;
pub mod hypergeometric;
pub mod inner;
pub mod recognizer;
pub mod representation;
pub mod transitions;

use std::collections::BTreeMap;

use serde::Serialize;

pub use bases::{build_six_bases, verify_p_shifts, BasisKind, Seed, SixBases};
pub use hypergeometric::{hypergeometric_2f1, phi_matrix, PhiMatrix};
pub use inner::{verify_inner_products, verify_inner_products_with_phi, InnerProductCheck, InnerProductReport};
pub use recognizer::{is_irreducible_tridiagonal, is_leonard_triple, LeonardVerdict, Verdict};
pub use representation::{expected_form, representation_matrix, MatrixForm, RepMatrices};
pub use transitions::{transition_matrices, transition_matrices_with_phi, TransitionReport};

use crate::cube::{CubeContext, Operator};
use crate::decomp::IrreducibleModule;
use crate::error::Result;
use crate::report::IdentityCheck;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormCheck {
    pub form: MatrixForm,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitionSummary {
    pub cells_checked: usize,
    pub failures: Vec<[BasisKind; 2]>,
    pub coherence_passed: bool,
}

/// Everything verified for a single module.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleReport {
    #[serde(rename = "D")]
    pub dim: usize,
    pub r: usize,
    pub module_index: usize,
    pub rep_matrices: BTreeMap<&'static str, BTreeMap<&'static str, FormCheck>>,
    pub inner_products: BTreeMap<&'static str, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transitions: Option<TransitionSummary>,
    pub leonard_triple: Verdict,
    #[serde(skip)]
    pub inner_product_checks: Vec<InnerProductCheck>,
    #[serde(skip)]
    pub extra_checks: Vec<IdentityCheck>,
}

impl ModuleReport {
    pub fn rep_matrices_passed(&self) -> bool {
        self.rep_matrices.values().flat_map(|m| m.values()).all(|c| c.passed)
    }

    pub fn inner_products_passed(&self) -> bool {
        self.inner_products.values().all(|&p| p)
    }

    pub fn transitions_passed(&self) -> bool {
        self.transitions
            .as_ref()
            .is_none_or(|t| t.failures.is_empty() && t.coherence_passed)
    }

    pub fn all_passed(&self) -> bool {
        self.rep_matrices_passed()
            && self.inner_products_passed()
            && self.transitions_passed()
            && self.leonard_triple == Verdict::True
            && crate::report::all_passed(&self.extra_checks)
    }
}

/// Which parts of the module verification to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleChecks {
    pub transitions: bool,
}

impl Default for ModuleChecks {
    fn default() -> Self {
        ModuleChecks { transitions: true }
    }
}

/// Builds the six bases of `module` and verifies representation matrices,
/// inner products, transitions and the Leonard-triple property, with `phi`
/// used wherever hypergeometric values enter a closed form.
pub fn module_report_with_phi(
    ctx: &CubeContext,
    module: &IrreducibleModule,
    phi: &PhiMatrix,
    checks: ModuleChecks,
) -> Result<ModuleReport> {
    let bases = build_six_bases(ctx, module)?;
    let reps = RepMatrices::compute(ctx, &bases)?;
    let mut rep_matrices: BTreeMap<&'static str, BTreeMap<&'static str, FormCheck>> = BTreeMap::new();
    for (kind, op, form, passed) in reps.check_forms() {
        rep_matrices
            .entry(kind.tag())
            .or_default()
            .insert(op.name(), FormCheck { form, passed });
    }
    let inner = verify_inner_products_with_phi(&bases, phi)?;
    let transitions = if checks.transitions {
        let t = transition_matrices_with_phi(&bases, phi)?;
        Some(TransitionSummary {
            cells_checked: t.cells.len(),
            failures: t.failures().into_iter().map(|(a, b)| [a, b]).collect(),
            coherence_passed: crate::report::all_passed(&t.coherence),
        })
    } else {
        None
    };
    let leonard = is_leonard_triple(
        reps.get(BasisKind::AsA, Operator::A),
        reps.get(BasisKind::AsA, Operator::AStar),
        reps.get(BasisKind::AsA, Operator::AEps),
    );
    let mut extra = bases.verify();
    extra.extend(reps.verify_commutators());
    Ok(ModuleReport {
        dim: module.cube_dim(),
        r: module.r(),
        module_index: module.index(),
        rep_matrices,
        inner_products: inner.by_theorem().into_iter().collect(),
        transitions,
        leonard_triple: leonard.verdict,
        inner_product_checks: inner.checks,
        extra_checks: extra,
    })
}

pub fn module_report(ctx: &CubeContext, module: &IrreducibleModule) -> Result<ModuleReport> {
    module_report_with_phi(ctx, module, &phi_matrix(module.d()), ModuleChecks::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::decompose;

    #[test]
    fn d4_reports_pass() {
        let ctx = CubeContext::build(4).unwrap();
        for m in decompose(&ctx).unwrap().modules() {
            let rep = module_report(&ctx, m).unwrap();
            assert!(rep.all_passed(), "{}", serde_json::to_string(&rep).unwrap());
            assert_eq!(rep.transitions.as_ref().unwrap().cells_checked, 36);
        }
    }
}
