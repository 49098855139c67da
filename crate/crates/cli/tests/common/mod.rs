//! Golden CLI cases shared by the golden and acceptance test targets.
//!
//! Run with `MONOPOLE_BLESS=1` to rewrite the stored outputs.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
    /// Whether stderr is ours (stable) rather than generated by clap.
    pub check_stderr: bool,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case {
        name,
        args,
        exit,
        check_stderr: true,
    }
}

const fn clap_case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case {
        name,
        args,
        exit: 2,
        check_stderr: false,
    }
}

pub const CASES: &[Case] = &[
    case("ring_pin_square", &["ring", "--pin", "(1-λ)^2"], 0),
    case("ring_pin_annihilator", &["ring", "--pin", "h*(1-λ)"], 0),
    case("ring_t_cube", &["ring", "--t", "(1-z)^3"], 0),
    case("ring_t_inverse", &["ring", "--t", "z^-2 (1 + z)^2"], 0),
    case(
        "ring_restrict",
        &["ring", "--pin", "h^2 - λ", "--restrict-to-t"],
        0,
    ),
    case(
        "ring_eval_j",
        &["ring", "--pin", "(2-h)^3 (1-λ)", "--eval-j"],
        0,
    ),
    case("ring_json", &["ring", "--pin", "(1-λ)^2", "--json"], 0),
    case(
        "ring_t_json",
        &["ring", "--json", "--t", "-z^-1 + 2 - z"],
        0,
    ),
    case("ring_parse_error", &["ring", "--t", "(1-z"], 2),
    case("ring_wrong_generator", &["ring", "--t", "1 + h"], 2),
    case(
        "ring_restrict_on_t",
        &["ring", "--t", "z", "--restrict-to-t"],
        2,
    ),
    case("furuta_k3", &["furuta", "--sign", "-16"], 0),
    case("furuta_k3_json", &["furuta", "--sign", "-16", "--json"], 0),
    case("furuta_64", &["furuta", "--sign", "-64"], 0),
    case(
        "furuta_b_plus",
        &["furuta", "--sign", "-32", "--b-plus", "7"],
        0,
    ),
    case("furuta_not_spin", &["furuta", "--sign", "-10"], 1),
    case("furuta_positive", &["furuta", "--sign", "16"], 1),
    case(
        "furuta_no_solution",
        &["furuta", "--sign", "-16", "--b-plus", "2"],
        1,
    ),
    case("group_k0", &["group", "--k", "0", "--d", "7"], 0),
    case("group_k3", &["group", "--k", "3", "--d", "6"], 0),
    case("group_k6", &["group", "--k", "6", "--d", "2"], 0),
    case("group_b_plus", &["group", "--b-plus", "3", "--d", "4"], 0),
    case(
        "group_json",
        &["group", "--k", "3", "--d", "8", "--json"],
        0,
    ),
    case("james_1_5", &["james", "--m", "1", "--n", "5"], 0),
    case("james_0_9", &["james", "--m", "0", "--n", "9"], 0),
    case("james_1_3", &["james", "--m", "1", "--n", "3"], 0),
    case(
        "james_json",
        &["james", "--m", "2", "--n", "6", "--json"],
        0,
    ),
    case("james_zero_order", &["james", "--m", "1", "--n", "0"], 2),
    case("stem_3", &["stem", "--n", "3"], 0),
    case("stem_json", &["stem", "--n", "1", "--json"], 0),
    case("stem_out_of_range", &["stem", "--n", "6"], 2),
    case(
        "classify_e2_sum_e2",
        &["classify", "--file", "@e2_sum_e2.json", "--expr", "E2#E2"],
        0,
    ),
    case(
        "classify_e2_sum_e2_json",
        &[
            "classify",
            "--file",
            "@e2_sum_e2.json",
            "--expr",
            "E2#E2",
            "--json",
        ],
        0,
    ),
    case(
        "classify_five",
        &[
            "classify",
            "--file",
            "@five_symplectic.json",
            "--expr",
            "five",
        ],
        0,
    ),
    case(
        "classify_negative_definite",
        &["classify", "--file", "@nonzero_with_negative_definite.json"],
        0,
    ),
    case(
        "classify_four_e2",
        &["classify", "--file", "@four_e2.json"],
        0,
    ),
    case(
        "classify_one_mod_four",
        &["classify", "--file", "@one_mod_four.json"],
        0,
    ),
    case(
        "classify_underdetermined",
        &["classify", "--file", "@underdetermined.json"],
        0,
    ),
    case(
        "classify_corpus",
        &["classify", "--file", "@corpus.json"],
        0,
    ),
    case(
        "classify_corpus_json",
        &["classify", "--file", "@corpus.json", "--json"],
        0,
    ),
    case(
        "classify_inconsistent",
        &["classify", "--file", "@inconsistent.json"],
        1,
    ),
    case(
        "classify_inconsistent_json",
        &[
            "classify",
            "--file",
            "@inconsistent.json",
            "--expr",
            "Q",
            "--json",
        ],
        1,
    ),
    case(
        "classify_fake_k3",
        &["classify", "--file", "@fake_k3.json"],
        1,
    ),
    case(
        "classify_bad_spin",
        &["classify", "--file", "@bad_spin.json"],
        1,
    ),
    case(
        "classify_bad_version",
        &["classify", "--file", "@bad_version.json"],
        2,
    ),
    case(
        "classify_unknown_name",
        &["classify", "--file", "@unknown_name.json"],
        2,
    ),
    case(
        "classify_no_sphere",
        &["classify", "--file", "@no_sphere.json"],
        2,
    ),
    case(
        "classify_malformed",
        &["classify", "--file", "@malformed.json"],
        2,
    ),
    case(
        "classify_missing_expr",
        &["classify", "--file", "@corpus.json", "--expr", "nope"],
        2,
    ),
    case("sum_corpus", &["sum", "--file", "@corpus.json"], 0),
    case(
        "sum_json",
        &[
            "sum",
            "--file",
            "@e2_sum_e2.json",
            "--expr",
            "E2#E2",
            "--json",
        ],
        0,
    ),
    case("sum_bad_spin", &["sum", "--file", "@bad_spin.json"], 1),
    clap_case("usage_no_command", &[]),
    clap_case("usage_ring_without_element", &["ring"]),
    clap_case("usage_unknown_flag", &["stem", "--n", "1", "--bogus"]),
    clap_case(
        "usage_group_both",
        &["group", "--k", "1", "--b-plus", "2", "--d", "1"],
    ),
    clap_case("usage_negative_k", &["group", "--k", "-1", "--d", "1"]),
];

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub struct Outcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the binary; `@name` arguments resolve to fixture files.
pub fn run(args: &[&str]) -> Outcome {
    let dir = fixtures();
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(f) => dir.join(f).display().to_string(),
            None => a.to_string(),
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_monopole"))
        .args(&args)
        .env_remove("MONOPOLE_LIBRARY_DIR")
        .output()
        .expect("binary runs");
    Outcome {
        exit: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Golden text for a case: exit code, stdout and (if stable) stderr.
/// Fixture paths in messages are made relative so the text is portable.
pub fn render(c: &Case, o: &Outcome) -> String {
    let prefix = format!("{}/", fixtures().display());
    let mut s = format!("exit: {}\n--- stdout\n{}", o.exit, o.stdout);
    if c.check_stderr {
        s.push_str("--- stderr\n");
        s.push_str(&o.stderr.replace(&prefix, ""));
    }
    s
}

/// Checks every case; returns the list of mismatches.
pub fn check_all() -> Vec<String> {
    let golden = fixtures().join("golden");
    let bless = std::env::var_os("MONOPOLE_BLESS").is_some();
    let mut failures = Vec::new();
    for c in CASES {
        let o = run(c.args);
        let path = golden.join(format!("{}.txt", c.name));
        let got = render(c, &o);
        if bless {
            std::fs::create_dir_all(&golden).unwrap();
            std::fs::write(&path, &got).unwrap();
        }
        if o.exit != c.exit {
            failures.push(format!("{}: exit {} (expected {})", c.name, o.exit, c.exit));
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            Ok(_) => failures.push(format!(
                "{}: output differs from {}",
                c.name,
                path.display()
            )),
            Err(e) => failures.push(format!("{}: {e}", c.name)),
        }
    }
    failures
}
