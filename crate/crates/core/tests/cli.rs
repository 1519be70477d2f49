//! End-to-end runs of the `pbw` binary against golden output files.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files after an intended change.

mod common;

use common::*;

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mismatches = golden_mismatches(update);
    assert!(mismatches.is_empty(), "golden mismatch: {mismatches:?}");
}

#[test]
fn cba_chain_is_printed() {
    let out = run(&expand(&["normalize", "@f32.lie", "-e", "c b a"])
        .iter()
        .map(String::as_str)
        .collect::<Vec<_>>());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "- 1 a w - 1 b v - 1 c u + 1 a b c\n"
    );
}

#[test]
fn cells_output() {
    let out = run(&["cells", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "tricky 8\neasy 6\n");
}

#[test]
fn check_bad_lists_abc() {
    let out = run(&["check", &fixture("bad.lie")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("(a, b, c): 1 a"));
}

#[test]
fn usage_errors_exit_2() {
    let f32 = fixture("f32.lie");
    let cases: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["cells"],
        &["cells", "--n", "four"],
        &["normalize", &f32],
        &["normalize", &f32, "-e", "c b a", "--strategy", "middle"],
        &["normalize", &f32, "-e", "q"],
        &["normalize", &f32, "-e", "1/0 a"],
        &["normalize", &f32, "-e", "a +"],
        &["holonomy", &f32, "--word", "c b a", "--loop", "1 2"],
        &["holonomy", &f32, "--word", "c b a", "--loop", "1 x"],
        &["holonomy", &f32, "--word", "c b a", "--n", "4"],
        &["hexagon", &f32, "--triple", "a b"],
        &["contract", "--n", "3", "--loop", "1 5"],
        &["confluence", &f32, "--max-results", "0"],
        &["render", "--size", "-3"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn engine_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.lie");
    std::fs::write(&broken, "basis a b\nbracket a a = b\n").unwrap();
    let missing = dir.path().join("missing.lie");
    let cases: Vec<Vec<String>> = vec![
        vec!["check".into(), broken.to_string_lossy().into()],
        vec!["check".into(), missing.to_string_lossy().into()],
        vec!["cells".into(), "--n".into(), "2".into()],
        vec![
            "contract".into(),
            "--n".into(),
            "3".into(),
            "--loop".into(),
            "1 2".into(),
        ],
    ];
    for args in &cases {
        let out = run(&args.iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.starts_with("error: "), "{err}");
    }
    let broken_out = run(&["check", &broken.to_string_lossy()]);
    assert!(String::from_utf8(broken_out.stderr)
        .unwrap()
        .contains("line 2"));
}

#[test]
fn help_exits_0() {
    for args in [&["--help"][..], &["render", "--help"]] {
        assert_eq!(run(args).status.code(), Some(0));
    }
}

#[test]
fn render_to_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("map.svg");
    let out = run(&["render", "--labels", "--out", &path.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(0));
    let file = std::fs::read_to_string(&path).unwrap();
    let stdout = String::from_utf8(run(&["render", "--labels"]).stdout).unwrap();
    assert_eq!(file, stdout);
    assert_eq!(file.matches("<path class=\"region\"").count(), 24);
}

#[test]
fn output_is_deterministic() {
    let args = expand(&["holonomy", "@bad.lie", "--samples", "50", "--seed", "3"]);
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
