//! Shared helpers for driving the `pbw` binary.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn manifest() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> String {
    manifest()
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbw"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Arguments with `@name` replaced by the fixture path.
pub fn expand(args: &[&str]) -> Vec<String> {
    args.iter()
        .map(|a| match a.strip_prefix('@') {
            Some(f) => fixture(f),
            None => a.to_string(),
        })
        .collect()
}

pub const CASES: &[(&str, &[&str], i32)] = &[
    ("check_abelian3", &["check", "@abelian3.lie"], 0),
    ("check_heisenberg", &["check", "@heisenberg.lie"], 0),
    ("check_sl2", &["check", "@sl2.lie"], 0),
    ("check_f32", &["check", "@f32.lie"], 0),
    ("check_f42", &["check", "@f42.lie"], 0),
    ("check_bad", &["check", "@bad.lie"], 1),
    ("check_bad_json", &["check", "@bad.lie", "--json"], 1),
    (
        "normalize_f32_cba",
        &["normalize", "@f32.lie", "-e", "c b a"],
        0,
    ),
    (
        "normalize_f32_cba_trace",
        &["normalize", "@f32.lie", "-e", "c b a", "--trace"],
        0,
    ),
    (
        "normalize_f32_cba_rightmost_trace",
        &[
            "normalize",
            "@f32.lie",
            "-e",
            "c b a",
            "--strategy",
            "rightmost",
            "--trace",
        ],
        0,
    ),
    (
        "normalize_f32_json",
        &["--json", "normalize", "@f32.lie", "-e", "c b a"],
        0,
    ),
    (
        "normalize_sl2_fe",
        &["normalize", "@sl2.lie", "-e", "f e"],
        0,
    ),
    (
        "normalize_sl2_mixed",
        &["normalize", "@sl2.lie", "-e", "2/3 h f e - 1 e f + 1/2"],
        0,
    ),
    (
        "normalize_heisenberg_yx",
        &["normalize", "@heisenberg.lie", "-e", "y x"],
        0,
    ),
    (
        "normalize_abelian_zero",
        &["normalize", "@abelian3.lie", "-e", "b a - 1 a b"],
        0,
    ),
    (
        "confluence_sl2",
        &["confluence", "@sl2.lie", "--max-len", "3"],
        0,
    ),
    (
        "confluence_f32",
        &["confluence", "@f32.lie", "--max-len", "3"],
        0,
    ),
    (
        "confluence_bad",
        &["confluence", "@bad.lie", "--max-len", "3"],
        1,
    ),
    (
        "confluence_bad_json",
        &["confluence", "@bad.lie", "--max-len", "3", "--json"],
        1,
    ),
    (
        "holonomy_bad_cba",
        &[
            "holonomy",
            "@bad.lie",
            "--word",
            "c b a",
            "--loop",
            "1 2 1 2 1 2",
        ],
        1,
    ),
    (
        "holonomy_f32_cba",
        &[
            "holonomy",
            "@f32.lie",
            "--word",
            "c b a",
            "--loop",
            "1 2 1 2 1 2",
        ],
        0,
    ),
    (
        "holonomy_f42_sampled",
        &["holonomy", "@f42.lie", "--n", "4", "--seed", "7"],
        0,
    ),
    (
        "holonomy_bad_sampled",
        &["holonomy", "@bad.lie", "--samples", "200"],
        1,
    ),
    (
        "holonomy_bad_json",
        &[
            "holonomy",
            "@bad.lie",
            "--word",
            "c b a",
            "--loop",
            "2 1 2 1 2 1",
            "--json",
        ],
        1,
    ),
    ("hexagon_bad", &["hexagon", "@bad.lie"], 1),
    (
        "hexagon_bad_triple",
        &["hexagon", "@bad.lie", "--triple", "a b c"],
        1,
    ),
    ("hexagon_f42", &["hexagon", "@f42.lie"], 0),
    ("hexagon_sl2_json", &["hexagon", "@sl2.lie", "--json"], 0),
    (
        "contract_hexagon",
        &["contract", "--n", "3", "--loop", "1 2 1 2 1 2"],
        0,
    ),
    (
        "contract_square",
        &["contract", "--n", "4", "--loop", "1 3 1 3"],
        0,
    ),
    (
        "contract_json",
        &["contract", "--n", "4", "--loop", "2 3 2 3 2 3", "--json"],
        0,
    ),
    ("cells_3", &["cells", "--n", "3"], 0),
    ("cells_4", &["cells", "--n", "4"], 0),
    ("cells_5", &["cells", "--n", "5"], 0),
    ("cells_4_json", &["cells", "--n", "4", "--json"], 0),
    ("render_default", &["render"], 0),
    ("render_labels", &["render", "--labels", "--size", "400"], 0),
];

/// Runs every golden case; returns the names whose exit code or output
/// differs. With `update` set, rewrites the files instead.
pub fn golden_mismatches(update: bool) -> Vec<String> {
    let mut mismatches = Vec::new();
    for (name, args, code) in CASES {
        let out = run(&expand(args).iter().map(String::as_str).collect::<Vec<_>>());
        let path: PathBuf = manifest().join("tests/golden").join(format!("{name}.out"));
        let stdout = String::from_utf8(out.stdout).unwrap();
        if update {
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_default();
        if out.status.code() != Some(*code) || stdout != expected {
            mismatches.push(name.to_string());
        }
    }
    mismatches
}
