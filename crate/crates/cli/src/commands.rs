//! One function per subcommand. Each returns the exit code with the text
//! for stdout, so the binary stays thin and tests can call them directly.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use repherd_core::algebra::BoundQuiverAlgebra;
use repherd_core::catalog::{ar_quiver as build_ar_quiver, enumerate_or_partial, Catalog, CatalogError};
use repherd_core::checks::{
    check_module_conditions, check_no_inj_to_proj_suite, check_representation_hereditary, check_tilted_sufficient,
    format_sum, run_suite, CheckError, CheckReport, Suite, TiltingContext,
};
use repherd_core::{Analysis, Budget, Exec, Verdict};
use serde::Serialize;
use thiserror::Error;

use crate::cache::Cache;
use crate::files::{AlgebraFile, FileError, ModuleFile, TiltingFile};
use crate::report::{digest, CatalogSummary, ReportFile, Skipped, REPORT_VERSION};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub const EXIT_ERROR: i32 = 4;

pub fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Holds => 0,
        Verdict::Fails => 1,
        Verdict::Degenerate => 2,
        Verdict::Inconclusive => 3,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteChoice {
    Main,
    All,
    /// the main check plus the statements for algebras with no nonzero
    /// maps from injectives to projectives
    Tilted,
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub report: Option<ReportFile>,
}

/// Write-then-rename so readers never see half a file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

struct Loaded {
    file: AlgebraFile,
    alg: BoundQuiverAlgebra,
    digest: String,
}

fn load(path: &Path) -> Result<Loaded, CliError> {
    let file = AlgebraFile::load(path)?;
    let alg = file.build()?;
    let digest = digest(&file)?;
    Ok(Loaded { file, alg, digest })
}

/// Catalog from the cache when enabled, else enumerated (and stored).
fn catalog(l: &Loaded, budget: Budget, exec: Exec) -> Result<Catalog, CliError> {
    let cache = Cache::from_env();
    if let Some(c) = cache.as_ref().and_then(|c| c.load(&l.alg, &l.digest, budget)) {
        return Ok(c);
    }
    let cat = enumerate_or_partial(&l.alg, budget, exec)?;
    if let Some(c) = cache {
        // a failed cache write only costs time on the next run
        let _ = c.store(&l.alg, &l.digest, budget, &cat);
    }
    Ok(cat)
}

fn render_reports(out: &mut String, reports: &[CheckReport]) {
    for r in reports {
        writeln!(out, "{}: {:?}", r.check, r.verdict).expect("string write");
        for w in &r.witnesses {
            if w.summands.is_empty() {
                writeln!(out, "  {}: {}", w.module, w.detail).expect("string write");
            } else {
                writeln!(out, "  {}: {} [{}]", w.module, w.detail, format_sum(&w.summands)).expect("string write");
            }
        }
        for n in &r.notes {
            writeln!(out, "  note: {n}").expect("string write");
        }
        for v in &r.violations {
            writeln!(out, "  VIOLATION: {v}").expect("string write");
        }
    }
}

#[derive(Serialize)]
struct Info {
    version: u32,
    tool: String,
    algebra_digest: String,
    field: String,
    vertices: usize,
    arrows: usize,
    relations: usize,
    dim: usize,
    path_basis_size: usize,
    path_basis: Vec<String>,
}

pub fn info(path: &Path) -> Result<Outcome, CliError> {
    let l = load(path)?;
    let q = l.alg.quiver();
    let info = Info {
        version: REPORT_VERSION,
        tool: crate::report::tool(),
        algebra_digest: l.digest.clone(),
        field: match l.alg.field() {
            repherd_core::Field::Rationals => "Q".into(),
            repherd_core::Field::Prime(p) => format!("GF({p})"),
        },
        vertices: q.vertices().len(),
        arrows: q.arrows().len(),
        relations: l.file.relations.len(),
        dim: l.alg.dim(),
        path_basis_size: l.alg.basis().len(),
        path_basis: l.alg.basis().iter().map(|p| q.display_path(p)).collect(),
    };
    let mut stdout = serde_json::to_string_pretty(&info).expect("plain data serializes");
    stdout.push('\n');
    Ok(Outcome { code: 0, stdout, report: None })
}

pub fn check(path: &Path, budget: Budget, suite: SuiteChoice, exec: Exec) -> Result<Outcome, CliError> {
    let l = load(path)?;
    let cat = catalog(&l, budget, exec)?;
    let a = Analysis::from_catalog(&l.alg, cat, exec)?;
    let mut report = ReportFile::new("check", l.digest.clone());
    report.catalog = Some(CatalogSummary::of(&a.catalog));
    let main = match suite {
        SuiteChoice::Main | SuiteChoice::All => {
            let out = run_suite(&a, if suite == SuiteChoice::All { Suite::All } else { Suite::Main })?;
            let v = out.main().verdict;
            report.reports = out.reports;
            report.skipped = out.skipped.into_iter().map(|(check, reason)| Skipped { check, reason }).collect();
            v
        }
        SuiteChoice::Tilted => {
            let main = check_representation_hereditary(&a)?;
            let v = main.verdict;
            report.reports.push(main);
            if a.catalog.complete {
                match check_no_inj_to_proj_suite(&a, v) {
                    Ok(r) => report.reports.push(r),
                    Err(CheckError::GateFailed(why)) => {
                        report.skipped.push(Skipped { check: "no-injective-to-projective".into(), reason: why.join(", ") })
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            v
        }
    };
    let mut stdout = format!("{} indecomposables{}\n", a.catalog.len(), if a.catalog.complete { "" } else { " (budget reached)" });
    render_reports(&mut stdout, &report.reports);
    for s in &report.skipped {
        writeln!(stdout, "{}: skipped ({})", s.check, s.reason).expect("string write");
    }
    Ok(Outcome { code: exit_code(main), stdout, report: Some(report) })
}

/// DOT text, or exit 3 when the catalog is incomplete. With `export`,
/// every node is also written there as a module file.
pub fn ar_quiver(path: &Path, budget: Budget, exec: Exec, export: Option<&Path>) -> Result<Outcome, CliError> {
    let l = load(path)?;
    let cat = catalog(&l, budget, exec)?;
    if !cat.complete {
        return Ok(Outcome {
            code: exit_code(Verdict::Inconclusive),
            stdout: format!("catalog incomplete after {} indecomposables\n", cat.len()),
            report: None,
        });
    }
    let q = build_ar_quiver(&cat, exec)?;
    if let Some(dir) = export {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
        for (i, e) in cat.entries.iter().enumerate() {
            let text = serde_json::to_string_pretty(&ModuleFile::of(&l.alg, &e.module)).expect("plain data serializes");
            write_atomic(&dir.join(format!("{i:03}.json")), &(text + "\n"))?;
        }
    }
    Ok(Outcome { code: 0, stdout: crate::dot::render(&cat, &q), report: None })
}

pub fn check_module(alg_path: &Path, module_path: &Path) -> Result<Outcome, CliError> {
    let l = load(alg_path)?;
    let m = ModuleFile::load(module_path)?.build(&l.alg)?;
    let r = check_module_conditions(&l.alg, &m)?;
    let mut report = ReportFile::new("check-module", l.digest);
    let code = exit_code(r.verdict);
    report.reports.push(r);
    let mut stdout = String::new();
    render_reports(&mut stdout, &report.reports);
    Ok(Outcome { code, stdout, report: Some(report) })
}

pub fn check_tilted(h_path: &Path, tilting_path: &Path, budget: Budget, exec: Exec) -> Result<Outcome, CliError> {
    let l = load(h_path)?;
    let t = TiltingFile::load(tilting_path)?;
    let cat = if t.needs_catalog() { Some(catalog(&l, budget, exec)?) } else { None };
    let summands = t.build(&l.alg, cat.as_ref())?;
    let ctx = TiltingContext::new(&l.alg, summands)?;
    let r = check_tilted_sufficient(&ctx, budget, exec)?;
    let mut report = ReportFile::new("check-tilted", l.digest);
    let code = exit_code(r.verdict);
    report.reports.push(r);
    let mut stdout = String::new();
    render_reports(&mut stdout, &report.reports);
    Ok(Outcome { code, stdout, report: Some(report) })
}
