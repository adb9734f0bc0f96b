use std::path::Path;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use terwilliger::cube::{CubeContext, Operator};
use terwilliger::decomp::{decompose as run_decompose, Decomposition, IrreducibleModule};
use terwilliger::leonard::{
    build_six_bases, is_leonard_triple, module_report_with_phi, phi_matrix, transition_matrices_with_phi,
    verify_inner_products_with_phi, verify_p_shifts, BasisKind, LeonardVerdict, ModuleChecks, ModuleReport, PhiMatrix,
    RepMatrices, Verdict,
};
use terwilliger::linalg::{ExactMatrix, MatrixDump};

use crate::output::{emit, progress, render_matrix, render_records, to_json, Record};
use crate::{Common, Failure, Format, OpArg, Suite};

/// `Φ` with entry `(i, j)` negated, or set to one when it is zero.
fn corrupt_entry(phi: &PhiMatrix, i: usize, j: usize) -> PhiMatrix {
    let replacement = if phi.is_zero_at(i, j) {
        BigRational::one()
    } else {
        -phi.get(i, j).clone()
    };
    phi.with_entry(i, j, replacement)
}

fn context(common: &Common) -> Result<CubeContext, Failure> {
    progress(format!("building operators for D={}", common.d));
    Ok(CubeContext::build_with_limit(common.d, common.d_limit)?)
}

fn module_label(m: &IrreducibleModule) -> String {
    format!("module r={} k={}: ", m.r(), m.index())
}

pub fn build(common: &Common, op: OpArg, index: Option<usize>) -> Result<(), Failure> {
    let ctx = context(common)?;
    let family = |list: &[ExactMatrix]| -> Result<ExactMatrix, Failure> {
        let i = index.ok_or_else(|| Failure::Usage(format!("--op {op:?} needs --index")))?;
        list.get(i)
            .cloned()
            .ok_or_else(|| Failure::Usage(format!("--index {i} exceeds D={}", common.d)))
    };
    let m = match op {
        OpArg::Adjacency => ctx.a().clone(),
        OpArg::Dual => ctx.astar().clone(),
        OpArg::Imaginary => ctx.aeps().clone(),
        OpArg::P => ctx.p().clone(),
        OpArg::PInv => ctx.p_inv().clone(),
        OpArg::Distance => family(ctx.distance_matrices())?,
        OpArg::E => family(ctx.e())?,
        OpArg::Estar => family(ctx.estar())?,
        OpArg::Eeps => family(ctx.eeps())?,
    };
    emit(common, &render_matrix(common.format, &m)?)
}

fn checks(prefix: &str, cs: Vec<terwilliger::IdentityCheck>) -> impl Iterator<Item = Record> + '_ {
    cs.into_iter().map(move |c| Record::from_check(prefix, c))
}

fn phi_for(d: usize, corrupt: Option<(usize, usize)>) -> PhiMatrix {
    let phi = phi_matrix(d);
    match corrupt {
        Some((i, j)) if i <= d && j <= d => corrupt_entry(&phi, i, j),
        _ => phi,
    }
}

fn module_records(
    ctx: &CubeContext,
    m: &IrreducibleModule,
    suite: Suite,
    corrupt_phi: Option<(usize, usize)>,
) -> Result<Vec<Record>, Failure> {
    let want = |s: Suite| suite == Suite::All || suite == s;
    let label = module_label(m);
    let phi = phi_for(m.d(), corrupt_phi);
    let bases = build_six_bases(ctx, m)?;
    let mut out = Vec::new();
    if want(Suite::RepMatrices) {
        let reps = RepMatrices::compute(ctx, &bases)?;
        for (kind, op, form, passed) in reps.check_forms() {
            out.push(Record::new(
                format!("{label}{} in {} = {}", op.name(), kind.tag(), form.name()),
                passed,
            ));
        }
        out.extend(checks(&label, reps.verify_commutators()));
        let v = is_leonard_triple(
            reps.get(BasisKind::AsA, Operator::A),
            reps.get(BasisKind::AsA, Operator::AStar),
            reps.get(BasisKind::AsA, Operator::AEps),
        );
        out.push(Record::new(
            format!("{label}Leonard triple"),
            v.verdict == Verdict::True,
        ));
    }
    if want(Suite::InnerProducts) {
        out.extend(checks(&label, bases.verify()));
        out.extend(checks(&label, verify_p_shifts(ctx, m)?));
        out.extend(checks(&label, m.verify_seed_relations()?));
        for c in verify_inner_products_with_phi(&bases, &phi)?.checks {
            out.push(Record {
                identity: format!("{label}{} <{},{}>", c.theorem, c.x.tag(), c.y.tag()),
                passed: c.passed,
                first_discrepancy: None,
                i: Some(c.i),
                j: Some(c.j),
            });
        }
    }
    if want(Suite::Transitions) {
        let t = transition_matrices_with_phi(&bases, &phi)?;
        for c in &t.cells {
            out.push(Record {
                identity: format!("{label}transition {} -> {}", c.from.tag(), c.to.tag()),
                passed: c.passed,
                first_discrepancy: c.first_discrepancy,
                i: None,
                j: None,
            });
        }
        out.extend(checks(&label, t.coherence));
    }
    Ok(out)
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Commutators => "commutators",
        Suite::Idempotents => "idempotents",
        Suite::Conjugation => "conjugation",
        Suite::RepMatrices => "rep-matrices",
        Suite::InnerProducts => "inner-products",
        Suite::Transitions => "transitions",
        Suite::All => "all",
    }
}

pub fn verify(
    common: &Common,
    suite: Suite,
    corrupt_aeps: Option<(usize, usize)>,
    corrupt_phi: Option<(usize, usize)>,
) -> Result<(), Failure> {
    let mut ctx = context(common)?;
    if let Some((r, c)) = corrupt_aeps {
        if r >= ctx.size() || c >= ctx.size() {
            return Err(Failure::Usage(format!("entry ({r},{c}) outside Aeps")));
        }
        ctx = ctx.with_corrupted_aeps(r, c);
    }
    let want = |s: Suite| suite == Suite::All || suite == s;
    let mut records = Vec::new();
    if want(Suite::Commutators) {
        progress("checking commutator identities");
        records.extend(checks("", ctx.verify_commutators()));
    }
    if want(Suite::Conjugation) {
        progress("checking P and the conjugation cycle");
        records.extend(checks("", ctx.verify_p_structure()));
        if ctx.dim() <= 6 {
            records.extend(checks("", ctx.verify_centralizer()));
        }
    }
    if want(Suite::Idempotents) {
        progress("checking idempotent families");
        records.extend(checks("", ctx.verify_idempotents()));
        records.extend(checks("", ctx.verify_vanishing_pattern()));
    }
    if want(Suite::RepMatrices) || want(Suite::InnerProducts) || want(Suite::Transitions) {
        progress("decomposing the standard module");
        let dec = run_decompose(&ctx)?;
        records.extend(checks("", dec.verify()?));
        for m in dec.modules() {
            progress(format!("verifying module r={} k={} (d={})", m.r(), m.index(), m.d()));
            records.extend(module_records(&ctx, m, suite, corrupt_phi)?);
        }
    }
    emit(
        common,
        &render_records(common.format, ctx.dim(), suite_name(suite), &records)?,
    )?;
    if records.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

pub fn decompose(common: &Common, emit_seeds: Option<&Path>) -> Result<(), Failure> {
    let ctx = context(common)?;
    progress("decomposing the standard module");
    let dec = run_decompose(&ctx)?;
    let verified = dec.verify()?.iter().all(|c| c.passed);
    if let Some(dir) = emit_seeds {
        write_seeds(&dec, dir)?;
    }
    let report = dec.report();
    let text = match common.format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut s = String::from("r,d,index,dim\n");
            for m in &report.modules {
                s.push_str(&format!("{},{},{},{}\n", m.r, m.d, m.index, m.dim));
            }
            s
        }
        Format::Pretty => {
            let mut s = format!("D={}: {} modules\n", report.dim, report.modules.len());
            for (r, count) in &report.multiplicities {
                s.push_str(&format!(
                    "  endpoint r={r}: {count} module(s) of dimension {}\n",
                    report.dim - 2 * r + 1
                ));
            }
            s
        }
    };
    emit(common, &text)?;
    if verified {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn write_seeds(dec: &Decomposition, dir: &Path) -> Result<(), Failure> {
    std::fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
    for seed in dec.seed_exports() {
        let path = dir.join(seed.file_name());
        std::fs::write(&path, to_json(&seed)?).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

pub fn module_report(common: &Common, r: Option<usize>, index: Option<usize>) -> Result<(), Failure> {
    let ctx = context(common)?;
    let dec = run_decompose(&ctx)?;
    let selected: Vec<&IrreducibleModule> = dec
        .modules()
        .iter()
        .filter(|m| r.is_none_or(|r| m.r() == r) && index.is_none_or(|k| m.index() == k))
        .collect();
    if selected.is_empty() {
        return Err(Failure::Usage("no module matches --r/--index".into()));
    }
    let mut reports: Vec<ModuleReport> = Vec::new();
    for m in selected {
        progress(format!("verifying module r={} k={} (d={})", m.r(), m.index(), m.d()));
        reports.push(module_report_with_phi(
            &ctx,
            m,
            &phi_matrix(m.d()),
            ModuleChecks::default(),
        )?);
    }
    let text = match common.format {
        Format::Json if reports.len() == 1 => to_json(&reports[0])?,
        Format::Json => to_json(&reports)?,
        Format::Csv => {
            let mut s = String::from("r,index,section,item,passed\n");
            for rep in &reports {
                let mut row = |section: &str, item: &str, passed: bool| {
                    s.push_str(&format!("{},{},{section},{item},{passed}\n", rep.r, rep.module_index));
                };
                for (basis, ops) in &rep.rep_matrices {
                    for (op, c) in ops {
                        row("rep_matrices", &format!("{basis}/{op}={}", c.form.name()), c.passed);
                    }
                }
                for (id, passed) in &rep.inner_products {
                    row("inner_products", id, *passed);
                }
                row("transitions", "all", rep.transitions_passed());
                row(
                    "leonard_triple",
                    rep.leonard_triple.as_str(),
                    rep.leonard_triple == Verdict::True,
                );
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for rep in &reports {
                let mark = |b: bool| if b { "pass" } else { "FAIL" };
                s.push_str(&format!(
                    "r={} k={}: rep-matrices {}, inner-products {}, transitions {}, leonard triple {}\n",
                    rep.r,
                    rep.module_index,
                    mark(rep.rep_matrices_passed()),
                    mark(rep.inner_products_passed()),
                    mark(rep.transitions_passed()),
                    rep.leonard_triple.as_str()
                ));
            }
            s
        }
    };
    emit(common, &text)?;
    if reports.iter().all(ModuleReport::all_passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct CertificateSummary {
    eigenvalues: Vec<i64>,
    descending: bool,
    irreducible_tridiagonal: [bool; 2],
}

#[derive(Serialize)]
struct VerdictSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<usize>,
    verdict: Verdict,
    reason: String,
    certificates: Vec<CertificateSummary>,
}

impl VerdictSummary {
    fn new(v: LeonardVerdict, module: Option<&IrreducibleModule>) -> Self {
        VerdictSummary {
            r: module.map(IrreducibleModule::r),
            index: module.map(IrreducibleModule::index),
            verdict: v.verdict,
            reason: v.reason,
            certificates: v
                .certificates
                .into_iter()
                .map(|c| CertificateSummary {
                    eigenvalues: c.eigenvalues,
                    descending: c.descending,
                    irreducible_tridiagonal: c.irreducible_tridiagonal,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct LeonardCheckReport<'a> {
    #[serde(rename = "D")]
    dim: usize,
    modules: &'a [VerdictSummary],
}

fn render_verdicts(format: Format, verdicts: &[VerdictSummary], dim: Option<usize>) -> Result<String, Failure> {
    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
    match (format, dim) {
        (Format::Json, Some(dim)) => to_json(&LeonardCheckReport { dim, modules: verdicts }),
        (Format::Json, None) => to_json(&verdicts[0]),
        (Format::Csv, _) => {
            let mut s = String::from("r,index,verdict\n");
            for v in verdicts {
                s.push_str(&format!("{},{},{}\n", opt(v.r), opt(v.index), v.verdict.as_str()));
            }
            Ok(s)
        }
        (Format::Pretty, _) => Ok(verdicts
            .iter()
            .map(|v| {
                format!(
                    "r={} k={}: {} ({})\n",
                    opt(v.r),
                    opt(v.index),
                    v.verdict.as_str(),
                    v.reason
                )
            })
            .collect()),
    }
}

pub fn leonard_check(common: &Common, input: Option<&Path>) -> Result<(), Failure> {
    let (verdicts, dim) = match input {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            let dumps: Vec<MatrixDump> =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            if dumps.len() != 3 {
                return Err(Failure::Usage("expected a JSON array of three matrix dumps".into()));
            }
            let ms = dumps
                .iter()
                .map(ExactMatrix::from_dump)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            (
                vec![VerdictSummary::new(is_leonard_triple(&ms[0], &ms[1], &ms[2]), None)],
                None,
            )
        }
        None => {
            let ctx = context(common)?;
            let dec = run_decompose(&ctx)?;
            let mut out = Vec::new();
            for m in dec.modules() {
                progress(format!("recognizing module r={} k={}", m.r(), m.index()));
                let reps = RepMatrices::compute(&ctx, &build_six_bases(&ctx, m)?)?;
                let v = is_leonard_triple(
                    reps.get(BasisKind::AsA, Operator::A),
                    reps.get(BasisKind::AsA, Operator::AStar),
                    reps.get(BasisKind::AsA, Operator::AEps),
                );
                out.push(VerdictSummary::new(v, Some(m)));
            }
            (out, Some(ctx.dim()))
        }
    };
    emit(common, &render_verdicts(common.format, &verdicts, dim)?)?;
    if verdicts.iter().all(|v| v.verdict == Verdict::True) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
