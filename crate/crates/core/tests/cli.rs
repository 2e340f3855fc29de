use hookforest::cli::run;
use hookforest::{BiPoly, CheckReport, Counterexample};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hookforest").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn check_single_vertex() {
    let (code, out, _) = call(&["check", "--forest", "()", "--theorem", "thm-inv-b"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS thm-inv-b on ()"), "{out}");
    assert!(out.contains("lhs: 1 + q"));
    assert!(out.contains("rhs: 1 + q"));
}

#[test]
fn dist_nmaj_on_chain() {
    let (code, out, _) = call(&["dist", "--forest", "(())", "--stat", "nmaj-f", "--mode", "signed"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 + 2*q + 2*q^2 + 2*q^3 + q^4");
}

#[test]
fn dist_with_aux() {
    let (code, out, _) = call(&[
        "dist", "--forest", "()", "--stat", "inv-b", "--mode", "signed", "--aux", "n1-f",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 + t*q");
}

#[test]
fn rhs_prints_closed_form() {
    let (code, out, _) = call(&["rhs", "--forest", "(()())", "--theorem", "thm-bw"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "2 + 2*q + 2*q^2");
    let (code, _, err) = call(&["rhs", "--forest", "()", "--theorem", "thm-le1"]);
    assert_eq!(code, 2);
    assert!(err.contains("closed form"));
}

#[test]
fn records_round_trip() {
    let (code, out, _) = call(&["--format", "records", "dist", "--forest", "(()())", "--stat", "inv-b"]);
    assert_eq!(code, 0);
    let p: BiPoly = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(p, hookforest::formulas::rhs_inv_b(&"(()())".parse().unwrap()));
    assert_eq!(serde_json::to_string(&p).unwrap(), out.trim());

    let (code, out, _) = call(&["check", "--forest", "(())", "--theorem", "thm-fmaj", "--format", "records"]);
    assert_eq!(code, 0);
    let r: CheckReport = serde_json::from_str(out.trim()).unwrap();
    assert!(r.pass);
    assert_eq!(r.lhs, r.rhs);
    assert_eq!(serde_json::to_string(&r).unwrap(), out.trim());
}

#[test]
fn negative_labelings_parse() {
    let (code, out, _) = call(&["linext", "--forest", "()()", "--labeling=-1,2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("(-1,2)  maj_B = 2"), "{out}");
    assert!(out.contains("(2,-1)  maj_B = 1"), "{out}");
    assert!(out.contains("PASS thm-le1"));

    let (code, out, _) = call(&["partitions", "--forest", "(())", "--labeling=2,-1", "--degree", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS lem-dec1"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["check", "--forest", "(()", "--theorem", "thm-bw"][..],
        &["check", "--forest", "()", "--theorem", "no-such"],
        &["dist", "--forest", "()", "--stat", "inv", "--mode", "signed"],
        &["dist", "--forest", "()()", "--stat", "inv-d", "--mode", "signed"],
        &["linext", "--forest", "()", "--labeling=1,2"],
        &["linext", "--forest", "()()", "--labeling=1,1"],
        &["frobnicate"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn help_exits_0() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("counterexample"));
}

#[test]
fn sweep_output_is_independent_of_jobs() {
    let (c1, one, _) = call(&["sweep", "--max-n", "4", "--theorem", "thm-rmaj", "--jobs", "1"]);
    let (c4, four, _) = call(&["sweep", "--max-n", "4", "--theorem", "thm-rmaj", "--jobs", "4"]);
    assert_eq!((c1, c4), (0, 0));
    assert_eq!(one, four);
    assert!(one.ends_with("23 forests, 0 failed\n"), "{one}");
}

#[test]
fn bijections_pass() {
    let (code, out, _) = call(&["bijections", "--max-n", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS bij-psi"));
    assert!(out.contains("PASS bij-mirror on (()())"));
}

#[test]
fn counterexample_found_and_absent() {
    let (code, out, _) = call(&[
        "counterexample", "--stat", "nmaj-f", "--vs", "inv-b", "--mode", "signed", "--max-n", "5",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("forest: ((()()))"), "{out}");

    let (code, out, _) = call(&[
        "counterexample", "--stat", "fmaj-f", "--vs", "inv-b", "--mode", "signed", "--max-n", "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "none");

    let (_, out, _) = call(&[
        "--format", "records", "counterexample", "--stat", "dmaj-f", "--vs", "inv-d", "--mode", "even-signed",
        "--max-n", "4",
    ]);
    let c: Option<Counterexample> = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(c.unwrap().forest, "((()()))");
}

#[test]
fn binary_runs() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_hookforest"))
        .args(["check", "--forest", "(())", "--theorem", "thm-inv-d"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS thm-inv-d"));

    let out = std::process::Command::new(env!("CARGO_BIN_EXE_hookforest"))
        .args(["check", "--forest", "((", "--theorem", "thm-inv-d"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
