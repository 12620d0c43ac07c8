use proptest::prelude::*;
use repherd_core::algebra::{BoundQuiverAlgebra, Quiver, RelationSpec};
use repherd_core::checks::{check_representation_hereditary, run_suite, Suite};
use repherd_core::decompose::is_isomorphic;
use repherd_core::endo::gldim_end_gen_cogen;
use repherd_core::homological::{is_projective, minimal_right_approx, AddCategory};
use repherd_core::rep::kernel_of;
use repherd_core::{fixtures, Analysis, Budget, DimValue, Exec, Field, Verdict};

fn analysis(alg: &BoundQuiverAlgebra) -> Analysis<'_> {
    Analysis::new(alg, Budget::default(), Exec::Parallel).unwrap()
}

#[test]
fn verdicts_agree_over_q_and_gf101() {
    let gf = Field::prime(101).unwrap();
    for (a, b) in fixtures::all(Field::Rationals).iter().zip(fixtures::all(gf).iter()) {
        let (x, y) = (analysis(a), analysis(b));
        assert_eq!(x.catalog.len(), y.catalog.len());
        assert_eq!(x.catalog.hom, y.catalog.hom);
        let (rx, ry) = (run_suite(&x, Suite::All).unwrap(), run_suite(&y, Suite::All).unwrap());
        let verdicts = |o: &repherd_core::checks::SuiteOutcome| o.reports.iter().map(|r| (r.check.clone(), r.verdict)).collect::<Vec<_>>();
        assert_eq!(verdicts(&rx), verdicts(&ry));
    }
}

/// Every kernel witness is recomputed from scratch.
#[test]
fn kernel_witnesses_reverify() {
    for alg in fixtures::all(Field::Rationals) {
        let a = analysis(&alg);
        let report = check_representation_hereditary(&a).unwrap();
        let cat = AddCategory::new(repherd_core::endo::gen_cogen_summands(&alg)).unwrap();
        for w in report.witnesses.iter().filter(|w| w.detail.starts_with("kernel")) {
            let x = &a.catalog.entries[a.catalog.find(&w.module).unwrap()].module;
            let approx = minimal_right_approx(&cat, x);
            let (k, _) = kernel_of(&approx.object, &approx.map);
            assert_eq!(is_projective(&alg, &k), w.detail.ends_with(" is projective"));
            let named: Vec<_> = w.summands.iter().map(|n| a.catalog.entries[a.catalog.find(n).unwrap()].module.clone()).collect();
            let refs: Vec<_> = named.iter().collect();
            let sum = repherd_core::rep::direct_sum(alg.shape(), alg.field(), &refs).unwrap();
            assert!(is_isomorphic(&sum, &k).unwrap(), "{}", w.module);
        }
    }
}

#[test]
fn no_implication_is_violated() {
    for alg in fixtures::all(Field::Rationals) {
        let out = run_suite(&analysis(&alg), Suite::All).unwrap();
        assert!(out.violations().is_empty(), "{:?}", out.violations());
    }
}

/// Random acyclic quiver with at most one arrow per ordered pair and some
/// length-two zero relations.
fn random_algebra() -> impl Strategy<Value = BoundQuiverAlgebra> {
    (2usize..=4, prop::collection::vec(any::<bool>(), 6), prop::collection::vec(any::<bool>(), 12)).prop_map(
        |(n, arrows_on, rels_on)| {
            let names: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let arrows: Vec<(String, usize, usize)> = pairs
                .iter()
                .zip(&arrows_on)
                .filter(|(_, &on)| on)
                .enumerate()
                .map(|(k, (&(i, j), _))| (format!("x{k}"), i, j))
                .collect();
            let spec: Vec<(&str, &str, &str)> =
                arrows.iter().map(|(a, i, j)| (a.as_str(), names[*i].as_str(), names[*j].as_str())).collect();
            let vs: Vec<&str> = names.iter().map(String::as_str).collect();
            let q = Quiver::new(&vs, &spec).unwrap();
            let composable: Vec<(usize, usize)> = (0..arrows.len())
                .flat_map(|a| (0..arrows.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| arrows[a].2 == arrows[b].1)
                .collect();
            let rels = composable
                .iter()
                .zip(&rels_on)
                .filter(|(_, &on)| on)
                .map(|(&(a, b), _)| {
                    let p = q.path(&names[arrows[a].1], &[arrows[a].0.as_str(), arrows[b].0.as_str()]).unwrap();
                    RelationSpec::monomial(p)
                })
                .collect();
            BoundQuiverAlgebra::build(q, rels, Field::Rationals, n.max(2)).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn main_verdict_matches_gldim(alg in random_algebra()) {
        let a = Analysis::new(&alg, Budget { max_modules: 60, max_total_dim: 600, max_module_dim: 40 }, Exec::Parallel).unwrap();
        let r = check_representation_hereditary(&a).unwrap();
        prop_assume!(r.verdict != Verdict::Inconclusive);
        prop_assert!(r.violations.is_empty(), "{:?}", r.violations);
        let g = gldim_end_gen_cogen(&alg, None, Exec::Parallel).unwrap();
        match r.verdict {
            Verdict::Holds => prop_assert_eq!(g, DimValue::Finite(3)),
            Verdict::Fails => prop_assert_ne!(g, DimValue::Finite(3)),
            _ => prop_assert!(g.at_most(2).unwrap_or(false)),
        }
    }
}
