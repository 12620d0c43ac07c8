//! One pass/fail line per acceptance criterion, driven by the shipped
//! fixture files. Time limits are pinned below.
//!
//! A criterion listed in `KNOWN_RED` is expected to fail; the test asserts
//! that it still does, so a stale entry is caught as well.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use repherd::files::{AlgebraFile, ModuleFile, TiltingFile};
use repherd_core::algebra::BoundQuiverAlgebra;
use repherd_core::catalog::{ar_quiver, enumerate_indecomposables, enumerate_or_partial};
use repherd_core::checks::{
    check_module_conditions, check_representation_hereditary, check_tilted_sufficient, run_suite, Suite,
    SuiteOutcome, TiltingContext, MAIN,
};
use repherd_core::endo::{gen_cogen_summands, gldim_end_gen_cogen};
use repherd_core::homological::{
    default_horizon, is_injective, is_projective, minimal_left_approx, minimal_right_approx, proj_dim, AddCategory,
};
use repherd_core::rep::{cokernel_of, kernel_of};
use repherd_core::{Analysis, Budget, DimValue, Exec, Field, Verdict};

const LIMIT_GLDIM: Duration = Duration::from_secs(5);
const LIMIT_LOOP2: Duration = Duration::from_secs(10);
const LIMIT_TILTED: Duration = Duration::from_secs(30);
const LIMIT_SUITE: Duration = Duration::from_secs(120);

/// Criterion 4 expects the main check to fail on the five-vertex algebra
/// with witness τ⁻⁴P(1). Here τ⁻⁴P(1) is the simple injective I(5), so it
/// lies in add(A ⊕ DA) and is never tested; every other non-projective,
/// non-injective indecomposable has a projective kernel and an injective
/// cokernel, and gl.dim End(A ⊕ DA) computes to 3 independently of the
/// approximation code. The computed answer is therefore Holds.
const KNOWN_RED: &[(u32, &str)] = &[(
    4,
    "τ⁻⁴P(1) = I(5) = S(5) is injective; main check Holds and gl.dim End(A ⊕ DA) = 3 (independent oracle)",
)];

const FIXTURES: [&str; 6] = ["a2", "a3", "loop2", "tilted4", "tilted5", "d5"];

fn path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn algebra_over(name: &str, field: Option<Field>) -> BoundQuiverAlgebra {
    let file = AlgebraFile::load(&path(&format!("{name}.json"))).unwrap();
    match field {
        Some(f) => file.build_over(f).unwrap(),
        None => file.build().unwrap(),
    }
}

fn algebra(name: &str) -> BoundQuiverAlgebra {
    algebra_over(name, None)
}

fn analysis(alg: &BoundQuiverAlgebra) -> Analysis<'_> {
    Analysis::new(alg, Budget::default(), Exec::Parallel).unwrap()
}

fn suite(alg: &BoundQuiverAlgebra) -> SuiteOutcome {
    run_suite(&analysis(alg), Suite::All).unwrap()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> (Outcome, Duration, bool) {
    let t = Instant::now();
    let o = f();
    let e = t.elapsed();
    (o, e, e <= limit)
}

fn criterion_1() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for (name, want) in [("a2", 2), ("a3", 3)] {
        let alg = algebra(name);
        let (g, e, in_time) = timed(LIMIT_GLDIM, || {
            let g = gldim_end_gen_cogen(&alg, None, Exec::Parallel).unwrap();
            Outcome { pass: g == DimValue::Finite(want), detail: g.to_string() }
        });
        pass &= g.pass && in_time;
        details.push(format!("{name}: {} in {e:.2?}", g.detail));
    }
    Outcome { pass, detail: details.join("; ") }
}

fn criterion_2() -> Outcome {
    let alg = algebra("loop2");
    let (o, e, in_time) = timed(LIMIT_LOOP2, || {
        let a = analysis(&alg);
        let s1 = a.catalog.find("S(1)").unwrap();
        let pd = proj_dim(&alg, &a.catalog.entries[s1].module, default_horizon(&alg)).unwrap();
        let main = check_representation_hereditary(&a).unwrap().verdict;
        let q = ar_quiver(&a.catalog, Exec::Parallel).unwrap();
        let mut got: Vec<(String, String, usize)> = q
            .arrows
            .iter()
            .map(|&(x, y, m)| (a.catalog.entries[x].name.clone(), a.catalog.entries[y].name.clone(), m))
            .collect();
        got.sort();
        let mut want: Vec<(String, String, usize)> =
            [("P(2)", "P(1)"), ("S(1)", "P(1)"), ("P(1)", "I(1)"), ("P(1)", "I(2)"), ("I(1)", "S(1)"), ("I(2)", "S(1)")]
                .iter()
                .map(|(x, y)| (x.to_string(), y.to_string(), 1))
                .collect();
        want.sort();
        Outcome {
            pass: a.catalog.len() == 5 && pd == DimValue::Infinite && main == Verdict::Holds && got == want,
            detail: format!("{} indecomposables, pd S(1) = {pd}, main {main:?}, {} arrows match: {}", a.catalog.len(), got.len(), got == want),
        }
    });
    Outcome { pass: o.pass && in_time, detail: format!("{} in {e:.2?}", o.detail) }
}

fn criterion_3() -> Outcome {
    let alg = algebra("tilted4");
    let (o, e, in_time) = timed(LIMIT_TILTED, || {
        let a = analysis(&alg);
        let main = check_representation_hereditary(&a).unwrap().verdict;
        let g = gldim_end_gen_cogen(&alg, None, Exec::Parallel).unwrap();
        Outcome {
            pass: a.catalog.len() == 10 && main == Verdict::Holds && g == DimValue::Finite(3),
            detail: format!("{} indecomposables, main {main:?}, gl.dim {g}", a.catalog.len()),
        }
    });
    Outcome { pass: o.pass && in_time, detail: format!("{} in {e:.2?}", o.detail) }
}

fn criterion_4() -> Outcome {
    let alg = algebra("tilted5");
    let (o, e, in_time) = timed(LIMIT_TILTED, || {
        let a = analysis(&alg);
        let r = check_representation_hereditary(&a).unwrap();
        let target = a.catalog.find("tau^-4 P(1)");
        let witnessed = target.is_some_and(|t| {
            let name = &a.catalog.entries[t].name;
            r.witnesses.iter().any(|w| &w.module == name && w.detail.contains("is not projective"))
        });
        let located = target.map_or("absent".to_string(), |t| {
            let e = &a.catalog.entries[t];
            format!("{} (projective {}, injective {})", e.name, e.is_projective(), e.is_injective())
        });
        Outcome {
            pass: a.catalog.len() == 14 && r.verdict == Verdict::Fails && witnessed,
            detail: format!("{} indecomposables, main {:?}, τ⁻⁴P(1) = {located}", a.catalog.len(), r.verdict),
        }
    });
    Outcome { pass: o.pass && in_time, detail: format!("{} in {e:.2?}", o.detail) }
}

/// Kernel and cokernel conditions recomputed here, apart from the report.
fn conditions(alg: &BoundQuiverAlgebra, a: &Analysis) -> (bool, bool) {
    let cat = AddCategory::new(gen_cogen_summands(alg)).unwrap();
    let mut c3 = true;
    let mut c5 = true;
    for e in a.catalog.entries.iter().filter(|e| !e.is_projective() && !e.is_injective()) {
        let r = minimal_right_approx(&cat, &e.module);
        c3 &= is_projective(alg, &kernel_of(&r.object, &r.map).0);
        let l = minimal_left_approx(&cat, &e.module);
        c5 &= is_injective(alg, &cokernel_of(&l.object, &l.map).0);
    }
    (c3, c5)
}

fn criterion_5() -> Outcome {
    let (o, e, in_time) = timed(LIMIT_SUITE, || {
        let mut pass = true;
        let mut details = Vec::new();
        for name in FIXTURES {
            let alg = algebra(name);
            let a = analysis(&alg);
            let main = check_representation_hereditary(&a).unwrap().verdict;
            let g = gldim_end_gen_cogen(&alg, None, Exec::Parallel).unwrap();
            let (c3, c5) = conditions(&alg, &a);
            let agrees = (main == Verdict::Holds) == (g == DimValue::Finite(3));
            pass &= a.catalog.complete && agrees && c3 == c5;
            details.push(format!("{name}: {main:?}/gl.dim {g}/(3)={c3},(5)={c5}"));
        }
        Outcome { pass, detail: details.join("; ") }
    });
    Outcome { pass: o.pass && in_time, detail: format!("{} in {e:.2?}", o.detail) }
}

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for name in FIXTURES {
        let alg = algebra(name);
        let a = analysis(&alg);
        let out = run_suite(&a, Suite::All).unwrap();
        if out.main().verdict != Verdict::Holds {
            continue;
        }
        let r = out.report("torsionless-structure").unwrap();
        let parts = a.parts.as_ref().unwrap();
        let expected = parts.gen_da.iter().filter(|&&x| !a.catalog.entries[x].is_injective()).count()
            + parts.cogen_a.iter().filter(|&&x| !a.catalog.entries[x].is_projective()).count();
        let witnessed = r.witnesses.iter().filter(|w| w.detail.starts_with("isomorphic to")).count();
        pass &= r.verdict == Verdict::Holds && witnessed == expected;
        details.push(format!("{name}: {} vertex witnesses", witnessed));
    }
    Outcome { pass, detail: details.join("; ") }
}

fn criterion_7() -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for name in FIXTURES {
        let out = suite(&algebra(name));
        let nec = out.report("necessary-conditions").unwrap().verdict;
        let violations = out.violations();
        pass &= violations.is_empty() && (out.main().verdict != Verdict::Holds || nec == Verdict::Holds);
        details.push(format!("{name}: necessary {nec:?}, {} violations", violations.len()));
    }
    Outcome { pass, detail: details.join("; ") }
}

fn criterion_8() -> Outcome {
    let alg = algebra("kron");
    let verdicts: Vec<Verdict> = ["kron_regular.json", "kron_preprojective.json"]
        .iter()
        .map(|m| check_module_conditions(&alg, &ModuleFile::load(&path(m)).unwrap().build(&alg).unwrap()).unwrap().verdict)
        .collect();
    let main = check_representation_hereditary(&analysis(&alg)).unwrap().verdict;
    Outcome {
        pass: verdicts.iter().all(|&v| v == Verdict::Holds) && main == Verdict::Inconclusive,
        detail: format!("modules {verdicts:?}, catalog {main:?}"),
    }
}

fn criterion_9() -> Outcome {
    let gf = Field::prime(101).unwrap();
    let mut pass = true;
    let mut details = Vec::new();
    for name in FIXTURES {
        let (q, p) = (algebra_over(name, Some(Field::Rationals)), algebra_over(name, Some(gf)));
        let (aq, ap) = (analysis(&q), analysis(&p));
        let verdicts = |o: SuiteOutcome| o.reports.into_iter().map(|r| (r.check, r.verdict)).collect::<Vec<_>>();
        let same_verdicts = verdicts(run_suite(&aq, Suite::All).unwrap()) == verdicts(run_suite(&ap, Suite::All).unwrap());
        let same = aq.catalog.len() == ap.catalog.len() && aq.catalog.hom == ap.catalog.hom && same_verdicts;
        pass &= same;
        details.push(format!("{name}: {}", if same { "same" } else { "differs" }));
    }
    Outcome { pass, detail: details.join("; ") }
}

fn criterion_10() -> Outcome {
    let h = algebra("d5");
    let cat = enumerate_or_partial(&h, Budget::default(), Exec::Parallel).unwrap();
    let t = TiltingFile::load(&path("d5_tilting.json")).unwrap().build(&h, Some(&cat)).unwrap();
    let r = check_tilted_sufficient(&TiltingContext::new(&h, t).unwrap(), Budget::default(), Exec::Parallel).unwrap();
    let failing: Vec<&str> = ["(1)", "(2)", "(3)"]
        .into_iter()
        .filter(|c| r.notes.iter().any(|n| n.starts_with(c) && n.ends_with("false")))
        .collect();
    let a3 = algebra("a3");
    let a3cat = enumerate_indecomposables(&a3, Budget::default(), Exec::Parallel).unwrap();
    let trivial = TiltingFile::load(&path("a3_tilting.json")).unwrap().build(&a3, Some(&a3cat)).unwrap();
    let rt = check_tilted_sufficient(&TiltingContext::new(&a3, trivial).unwrap(), Budget::default(), Exec::Parallel).unwrap();
    let main = check_representation_hereditary(&analysis(&a3)).unwrap().verdict;
    Outcome {
        pass: r.verdict == Verdict::Fails && !failing.is_empty() && rt.verdict == Verdict::Holds && main == Verdict::Holds,
        detail: format!("D5 tilt fails {failing:?}; A3 trivial tilt {:?} with main {main:?}", rt.verdict),
    }
}

#[test]
fn acceptance() {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    // straight to the handle so the lines survive libtest's capture
    let mut out = std::io::stdout().lock();
    let mut unexpected = Vec::new();
    for (n, f) in criteria {
        let o = f();
        let red = KNOWN_RED.iter().find(|(k, _)| *k == n);
        writeln!(out, "criterion {n:>2}: {} | {}", if o.pass { "PASS" } else { "FAIL" }, o.detail).unwrap();
        if let Some((_, why)) = red {
            writeln!(out, "              known red: {why}").unwrap();
        }
        if o.pass == red.is_some() {
            unexpected.push(n);
        }
    }
    assert_eq!(MAIN, "representation-hereditary");
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}
