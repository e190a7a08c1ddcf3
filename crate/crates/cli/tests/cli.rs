use std::path::PathBuf;

use gsb_cli::run;
use gsb_core::format;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn gsb(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gsb").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn chinese_rank_two_check_succeeds() {
    let (code, out, err) = gsb(&["catalog", "chinese", "--rank", "2", "--check"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("format: 1\n"));
    assert!(out.contains("holds: true\n"));
}

#[test]
fn tensor_normal_form() {
    let (code, out, _) = gsb(&["nf", &fixture("tensor.gsb"), "--elem", "y*x*y"]);
    assert_eq!((code, out.as_str()), (0, "x*y*y\n"));
    let (code, out, _) = gsb(&[
        "catalog", "tensor", "--nx", "1", "--ny", "1", "--nf", "y1*x1*y1",
    ]);
    assert_eq!((code, out.as_str()), (0, "x1*y1*y1\n"));
}

#[test]
fn chinese_irr_counts() {
    let (code, out, _) = gsb(&[
        "catalog",
        "chinese",
        "--rank",
        "2",
        "--irr",
        "3",
        "--count-only",
    ]);
    assert_eq!((code, out.as_str()), (0, "1 2 4 6\n"));
}

#[test]
fn irr_of_a_file_matches_the_preset() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chinese.gsb");
    let (_, text, _) = gsb(&["catalog", "chinese", "--rank", "2"]);
    std::fs::write(&path, text).unwrap();
    let (code, out, _) = gsb(&[
        "irr",
        path.to_str().unwrap(),
        "--max-len",
        "3",
        "--count-only",
    ]);
    assert_eq!((code, out.as_str()), (0, "1 2 4 6\n"));
}

#[test]
fn check_exit_codes() {
    assert_eq!(gsb(&["check", &fixture("tensor.gsb")]).0, 0);
    let (code, out, _) = gsb(&["check", &fixture("square.gsb")]);
    assert_eq!(code, 1);
    assert!(out.contains("failing: 1\n"));
    assert!(out.contains("result=x*y*x - y*y*x"));
    assert_eq!(gsb(&["check", &fixture("leibniz.gsb")]).0, 0);
    assert_eq!(gsb(&["check", &fixture("module.gsb")]).0, 0);
    assert_eq!(gsb(&["check", &fixture("hall.gsb")]).0, 0);
}

#[test]
fn parse_errors_exit_two_with_position() {
    let (code, out, err) = gsb(&["check", &fixture("bad.gsb")]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("bad.gsb:2:7:"), "{err}");
    assert_eq!(gsb(&["nf", &fixture("tensor.gsb"), "--elem", "y*z"]).0, 2);
    assert_eq!(gsb(&["frobnicate"]).0, 2);
    assert_eq!(gsb(&["check", "/nonexistent/file.gsb"]).0, 2);
}

#[test]
fn completion_statuses() {
    let (code, out, _) = gsb(&[
        "complete",
        &fixture("idempotent.gsb"),
        "--max-deg",
        "6",
        "--max-elems",
        "10",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("status: completed\nadded: 0\n"));
    let (code, out, _) = gsb(&[
        "complete",
        &fixture("square.gsb"),
        "--max-deg",
        "6",
        "--max-elems",
        "10",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("status: degree-capped\n"));
    let (code, out, _) = gsb(&[
        "complete",
        &fixture("square.gsb"),
        "--max-deg",
        "20",
        "--max-elems",
        "3",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("status: element-capped\n"));
    assert_eq!(
        gsb(&["complete", &fixture("square.gsb"), "--max-deg", "6"]).0,
        2
    );
}

#[test]
fn exhausted_budget_exits_three() {
    let (code, out, err) = gsb(&[
        "complete",
        &fixture("square.gsb"),
        "--max-deg",
        "30",
        "--max-elems",
        "100",
        "--timeout",
        "0",
    ]);
    assert_eq!(code, 3, "{err}");
    assert!(out.is_empty());
}

#[test]
fn completion_output_is_a_closed_presentation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("done.gsb");
    let (code, _, _) = gsb(&[
        "complete",
        &fixture("idempotent.gsb"),
        "--max-deg",
        "6",
        "--max-elems",
        "10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(gsb(&["check", path.to_str().unwrap()]).0, 0);
}

#[test]
fn cdcheck_reports_all_three_conditions() {
    let (code, out, _) = gsb(&["cdcheck", &fixture("square.gsb"), "--max-deg", "4"]);
    assert_eq!(code, 1);
    assert!(out.contains("compositions-trivial: fails\n"));
    assert!(out.contains("agree: true\n"));
    for f in ["tensor.gsb", "leibniz.gsb", "module.gsb", "hall.gsb"] {
        let (code, out, err) = gsb(&["cdcheck", &fixture(f), "--max-deg", "4"]);
        assert_eq!(code, 0, "{f}: {out}{err}");
        assert!(out.contains("irr-matches-quotient: holds\n"), "{f}");
    }
}

#[test]
fn normal_forms_for_every_kind() {
    let (_, out, _) = gsb(&["nf", &fixture("module.gsb"), "--elem", "x*x*x*[y1]"]);
    assert_eq!(out, "x*[y1]\n");
    let (_, out, _) = gsb(&["nf", &fixture("hall.gsb"), "--elem", "((x2 x1) x2)"]);
    assert_eq!(out, "((x2 x1) x1)\n");
    let (_, out, _) = gsb(&["nf", &fixture("leibniz.gsb"), "--elem", "e1"]);
    assert_eq!(out, "e1\n");
}

#[test]
fn reports_are_deterministic() {
    let commands: Vec<Vec<String>> = vec![
        vec![
            "catalog".into(),
            "chinese".into(),
            "--rank".into(),
            "3".into(),
            "--check".into(),
        ],
        vec![
            "complete".into(),
            fixture("square.gsb"),
            "--max-deg".into(),
            "6".into(),
            "--max-elems".into(),
            "10".into(),
        ],
        vec![
            "cdcheck".into(),
            fixture("leibniz.gsb"),
            "--max-deg".into(),
            "4".into(),
        ],
        vec![
            "irr".into(),
            fixture("hall.gsb"),
            "--max-len".into(),
            "5".into(),
        ],
    ];
    for c in commands {
        let args: Vec<&str> = c.iter().map(String::as_str).collect();
        assert_eq!(gsb(&args), gsb(&args));
    }
}

#[test]
fn fixtures_round_trip_through_the_printer() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let Ok(p) = format::parse(&text) else {
            continue;
        };
        assert_eq!(
            format::parse(&format::print(&p)).unwrap(),
            p,
            "{}",
            path.display()
        );
        seen += 1;
    }
    assert!(seen >= 6);
}
