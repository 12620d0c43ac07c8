use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn repherd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repherd")).args(args).env_remove("REPHERD_CACHE_DIR").output().unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let o = repherd(args);
    (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap(), String::from_utf8(o.stderr).unwrap())
}

fn f(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn info_reports_dimension() {
    let (code, out, _) = run(&["info", &f("loop2.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 4);
    assert_eq!(v["version"], 1);
    let (_, out, _) = run(&["info", &f("a2.json")]);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&out).unwrap()["dim"], 3);
}

#[test]
fn malformed_relation_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(
        &p,
        r#"{"field": "Q", "vertices": ["1", "2"], "arrows": [{"name": "a", "from": "1", "to": "2"}],
            "relations": [[{"coeff": 1, "path": ["a"]}]], "length_bound": 2}"#,
    )
    .unwrap();
    let (code, _, err) = run(&["info", p.to_str().unwrap()]);
    assert_eq!(code, 4);
    assert!(err.contains("malformed relation"), "{err}");
}

#[test]
fn exit_codes_follow_verdicts() {
    assert_eq!(run(&["check", &f("loop2.json")]).0, 0);
    assert_eq!(run(&["check", &f("tilted4.json")]).0, 0);
    assert_eq!(run(&["check", &f("a2.json")]).0, 2);
    assert_eq!(run(&["check", &f("kron.json"), "--budget-modules", "12"]).0, 3);
    assert_eq!(run(&["check", "--no-such-flag", &f("a2.json")]).0, 4);
    assert_eq!(run(&["check", &f("missing.json")]).0, 4);
}

#[test]
fn loop2_report_names_the_witness() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let (code, text, _) = run(&["check", &f("loop2.json"), "--suite", "all", "--json", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.contains("S(1): kernel of minimal right approximation"), "{text}");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["catalog"]["nodes"], 5);
    assert_eq!(v["reports"][0]["verdict"], "Holds");
    assert!(v["skipped"].as_array().unwrap().iter().any(|s| s["check"] == "no-injective-to-projective"));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    run(&["check", &f("tilted5.json"), "--suite", "all", "--json", a.to_str().unwrap()]);
    run(&["check", &f("tilted5.json"), "--suite", "all", "--sequential", "--json", b.to_str().unwrap()]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn ar_quiver_shapes() {
    let count = |dot: &str| {
        let nodes = dot.lines().filter(|l| l.contains("[label=\"") && !l.contains("->")).count();
        let solid = dot.lines().filter(|l| l.contains("->") && !l.contains("dashed")).count();
        (nodes, solid)
    };
    let (code, dot, _) = run(&["ar-quiver", &f("loop2.json")]);
    assert_eq!(code, 0);
    assert_eq!(count(&dot), (5, 6));
    assert_eq!(count(&run(&["ar-quiver", &f("tilted4.json")]).1).0, 10);
    assert_eq!(count(&run(&["ar-quiver", &f("a2.json")]).1), (3, 2));
    assert_eq!(run(&["ar-quiver", &f("kron.json")]).0, 3);
}

#[test]
fn ar_quiver_writes_dot_and_modules() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("q.dot");
    let export = dir.path().join("mods");
    let (code, _, _) =
        run(&["ar-quiver", &f("a3.json"), "--dot", dot.to_str().unwrap(), "--export", export.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph"));
    for entry in std::fs::read_dir(&export).unwrap() {
        let path = entry.unwrap().path();
        assert_eq!(run(&["check-module", &f("a3.json"), path.to_str().unwrap()]).0 % 2, 0);
    }
}

#[test]
fn module_checks() {
    assert_eq!(run(&["check-module", &f("kron.json"), &f("kron_regular.json")]).0, 0);
    assert_eq!(run(&["check-module", &f("kron.json"), &f("kron_preprojective.json")]).0, 0);
    let (code, out, _) = run(&["check-module", &f("tilted5.json"), &f("tilted5_tau4_p1.json")]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("I(5)"));
}

#[test]
fn tilted_checks() {
    let (code, out, _) = run(&["check-tilted", &f("a2.json"), &f("a2_tilting.json")]);
    assert_eq!(code, 0);
    for c in ["(1)", "(2)", "(3)"] {
        assert!(out.contains(&format!("note: {c}")), "{out}");
    }
    let (code, out, _) = run(&["check-tilted", &f("d5.json"), &f("d5_tilting.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("P(1): (1) projective at a sink is not a summand of T"), "{out}");
    let (code, _, err) = run(&["check-tilted", &f("a2.json"), &f("a2_not_tilting.json")]);
    assert_eq!(code, 4);
    assert!(err.contains("Ext^1"), "{err}");
    let (code, _, err) = run(&["check-tilted", &f("loop2.json"), &f("a2_tilting.json")]);
    assert_eq!(code, 4);
    assert!(err.contains("path algebra"), "{err}");
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let go = || {
        Command::new(env!("CARGO_BIN_EXE_repherd"))
            .args(["check", &f("tilted4.json"), "--suite", "all"])
            .env("REPHERD_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = go();
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = go();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(second.status.code(), Some(0));
}
