//! Runs the `grassmann` binary on fixed scenes and compares exit status,
//! stdout and stderr with the files in `tests/golden`. Set `UPDATE_GOLDEN=1`
//! to rewrite them.
//!
//! Arguments may contain `{out}`, replaced by a scratch file whose contents
//! are summarized in the golden file by element counts.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    ("fit9_sample", &["fit9", "--in", "tests/scenes/sample.toml"]),
    (
        "fit9_random_verbose",
        &["fit9", "--in", "tests/scenes/random3.toml", "--verbose"],
    ),
    (
        "fit9_malformed",
        &["fit9", "--in", "tests/scenes/malformed.toml"],
    ),
    (
        "check10_on",
        &[
            "check10",
            "--in",
            "tests/scenes/random3.toml",
            "--point",
            "p_2",
        ],
    ),
    (
        "check10_off",
        &[
            "check10",
            "--in",
            "tests/scenes/sample.toml",
            "--point",
            "j",
        ],
    ),
    (
        "check10_collinear",
        &[
            "check10",
            "--in",
            "tests/scenes/collinear.toml",
            "--point",
            "j",
        ],
    ),
    (
        "eval_numeric",
        &[
            "eval",
            "--in",
            "tests/scenes/sample.toml",
            "--expr",
            "(ab.cd)ef",
        ],
    ),
    (
        "eval_symbolic_conic",
        &[
            "eval",
            "--in",
            "tests/scenes/sample.toml",
            "--expr",
            "xaAbBcx=0",
        ],
    ),
    (
        "eval_syntax_error",
        &[
            "eval",
            "--in",
            "tests/scenes/sample.toml",
            "--expr",
            "ab.(cd",
        ],
    ),
    (
        "third_point_ab",
        &["third-point", "--in", "tests/scenes/sample.toml"],
    ),
    (
        "third_point_ce",
        &[
            "third-point",
            "--in",
            "tests/scenes/random3.toml",
            "--point",
            "c,p_1",
        ],
    ),
    (
        "third_point_unknown",
        &[
            "third-point",
            "--in",
            "tests/scenes/sample.toml",
            "--point",
            "a,z",
        ],
    ),
    (
        "tangent_a",
        &["tangent", "--in", "tests/scenes/sample.toml"],
    ),
    (
        "tangent_d_verbose",
        &[
            "tangent",
            "--in",
            "tests/scenes/random3.toml",
            "--point",
            "d",
            "--verbose",
        ],
    ),
    (
        "tangent_off_curve",
        &[
            "tangent",
            "--in",
            "tests/scenes/sample.toml",
            "--point",
            "j",
        ],
    ),
    (
        "tangent_third_random",
        &["tangent-third", "--in", "tests/scenes/random3.toml"],
    ),
    (
        "tangent_third_flex",
        &["tangent-third", "--in", "tests/scenes/fermat.toml"],
    ),
    ("tangent_third_no_scene", &["tangent-third"]),
    (
        "is_flex_true",
        &["is-flex", "--in", "tests/scenes/fermat.toml"],
    ),
    (
        "is_flex_false",
        &[
            "is-flex",
            "--in",
            "tests/scenes/fermat.toml",
            "--point",
            "b",
        ],
    ),
    (
        "is_flex_eight_points",
        &["is-flex", "--in", "tests/scenes/eight.toml"],
    ),
    (
        "conic_sixth_sample",
        &["conic-sixth", "--in", "tests/scenes/sample.toml"],
    ),
    (
        "conic_sixth_random",
        &["conic-sixth", "--in", "tests/scenes/random3.toml"],
    ),
    (
        "conic_sixth_collinear",
        &["conic-sixth", "--in", "tests/scenes/collinear.toml"],
    ),
    (
        "group_add_pq",
        &[
            "group-add",
            "--in",
            "tests/scenes/weierstrass.toml",
            "--point",
            "o,p,q",
        ],
    ),
    (
        "group_add_double",
        &[
            "group-add",
            "--in",
            "tests/scenes/weierstrass.toml",
            "--point",
            "o,p,p",
        ],
    ),
    (
        "group_add_missing_point",
        &[
            "group-add",
            "--in",
            "tests/scenes/weierstrass.toml",
            "--point",
            "o,p",
        ],
    ),
    (
        "pascal_on_conic",
        &["pascal", "--in", "tests/scenes/conic6.toml"],
    ),
    (
        "pascal_generic",
        &["pascal", "--in", "tests/scenes/generic6.toml"],
    ),
    (
        "pascal_repeated",
        &["pascal", "--in", "tests/scenes/repeated6.toml"],
    ),
    ("random_seed1", &["random", "--seed", "1"]),
    (
        "random_seed7_count3",
        &["random", "--seed", "7", "--count", "3", "--out", "{out}"],
    ),
    (
        "random_count_too_large",
        &["random", "--seed", "7", "--count", "40"],
    ),
    (
        "plot_sample",
        &["plot", "--in", "tests/scenes/sample.toml", "--out", "{out}"],
    ),
    (
        "plot_weierstrass",
        &[
            "plot",
            "--in",
            "tests/scenes/weierstrass.toml",
            "--out",
            "{out}",
        ],
    ),
    (
        "plot_missing_file",
        &["plot", "--in", "tests/scenes/absent.toml"],
    ),
];

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn summarize(path: &Path) -> String {
    let Ok(text) = fs::read_to_string(path) else {
        return "(not written)\n".into();
    };
    if text.starts_with("<svg") {
        let mut s = String::new();
        for tag in ["<circle", "<line", "<path", "<text"] {
            s.push_str(&format!("{tag}> {}\n", text.matches(tag).count()));
        }
        s
    } else {
        text
    }
}

fn render(name: &str, args: &[&str]) -> String {
    let scratch =
        std::env::temp_dir().join(format!("grassmann-golden-{}-{name}", std::process::id()));
    let _ = fs::remove_file(&scratch);
    let args: Vec<String> = args
        .iter()
        .map(|a| a.replace("{out}", &scratch.display().to_string()))
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_grassmann"))
        .args(&args)
        .current_dir(manifest_dir())
        .output()
        .expect("binary runs");
    let shown: Vec<String> = args
        .iter()
        .map(|a| {
            if a.contains("grassmann-golden-") {
                "{out}".into()
            } else {
                a.clone()
            }
        })
        .collect();
    let mut s = format!(
        "$ grassmann {}\nexit: {}\n",
        shown.join(" "),
        out.status.code().unwrap_or(-1)
    );
    s.push_str("--- stdout\n");
    s.push_str(&String::from_utf8_lossy(&out.stdout));
    s.push_str("--- stderr\n");
    s.push_str(&String::from_utf8_lossy(&out.stderr));
    if args.iter().any(|a| a.contains("grassmann-golden-")) {
        s.push_str("--- out\n");
        s.push_str(&summarize(&scratch));
        let _ = fs::remove_file(&scratch);
    }
    s
}

#[test]
fn golden_files() {
    let dir = manifest_dir().join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    if update {
        fs::create_dir_all(&dir).unwrap();
    }
    let mut failed = Vec::new();
    for (name, args) in CASES {
        let got = render(name, args);
        let path = dir.join(format!("{name}.txt"));
        if update {
            fs::write(&path, &got).unwrap();
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            Ok(want) => {
                eprintln!("{name}: output differs\n--- want\n{want}\n--- got\n{got}");
                failed.push(*name);
            }
            Err(_) => {
                eprintln!("{name}: missing {}", path.display());
                failed.push(*name);
            }
        }
    }
    assert!(failed.is_empty(), "golden mismatches: {failed:?}");
}

#[test]
fn every_command_has_three_cases() {
    let names = [
        "fit9",
        "check10",
        "eval",
        "third-point",
        "tangent",
        "tangent-third",
        "is-flex",
        "conic-sixth",
        "group-add",
        "pascal",
        "random",
        "plot",
    ];
    for n in names {
        let k = CASES.iter().filter(|(_, a)| a[0] == n).count();
        assert!(k >= 3, "{n} has {k} golden cases");
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["fit9", "--in", "tests/scenes/random3.toml", "--verbose"];
    assert_eq!(render("repeat_a", &args), render("repeat_b", &args));
}
