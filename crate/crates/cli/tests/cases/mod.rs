//! The CLI case table and runner shared by the golden and acceptance tests.

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
    pub emits_json: bool,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case { name, args, exit, emits_json: false }
}

const fn json(name: &'static str, args: &'static [&'static str]) -> Case {
    Case { name, args, exit: 0, emits_json: true }
}

pub const CASES: &[Case] = &[
    case("check_p2", &["check", "p2.json"], 0),
    case("check_p2_broken", &["check", "p2_broken.json"], 1),
    case("check_index_out_of_range", &["check", "index_out_of_range.json"], 2),
    case("check_duplicate_entry", &["check", "duplicate_entry.json"], 2),
    case("check_not_json", &["check", "not_json.json"], 2),
    case("check_missing_file", &["check", "no_such_file.json"], 2),
    case("check_cochain_kind", &["check", "cochain_pi_p2.json"], 2),
    case("check_empty_algebra", &["check", "empty_algebra.json"], 0),
    case("check_leib2", &["check", "leib2.json"], 0),
    case("check_rep_adjoint", &["check", "p2.json", "--rep", "adjoint"], 0),
    case("check_rep_file", &["check", "p2.json", "--rep", "p2_adjoint_rep.json"], 0),
    case("check_rep_zero", &["check", "p2.json", "--rep", "p2_zero_rep.json"], 0),
    case("check_rep_bad", &["check", "p2.json", "--rep", "p2_bad_rep.json"], 1),
    case("check_leib2_rep_adjoint", &["check", "leib2.json", "--rep", "adjoint"], 0),
    case("check_deformation", &["check", "scaling_def.json"], 0),
    case("check_deformation_obstructed", &["check", "obstructed_def.json"], 0),
    case("check_deformation_bad", &["check", "bad_def.json"], 1),
    case("check_deformation_order_mismatch", &["check", "def_order_mismatch.json"], 2),
    case("check_crossed", &["check", "crossed_identity_p2.json"], 0),
    case("check_crossed_bad", &["check", "crossed_no_right_action.json"], 1),
    case("check_skeletal", &["check", "skeletal_p2.json"], 0),
    case("check_two_term_leibniz", &["check", "leib2_two_term.json"], 0),
    case("check_triple", &["check", "skeletal_triple_p2.json"], 0),
    json("total_p2", &["total", "p2.json"]),
    case("total_p2_broken", &["total", "p2_broken.json"], 1),
    case("total_not_json", &["total", "not_json.json"], 2),
    json("semidirect_p2_adjoint", &["semidirect", "p2.json", "adjoint"]),
    json("semidirect_p2_zero", &["semidirect", "p2.json", "p2_zero_rep.json"]),
    case("semidirect_bad_rep", &["semidirect", "p2.json", "p2_bad_rep.json"], 1),
    case("semidirect_p2_broken", &["semidirect", "p2_broken.json", "adjoint"], 1),
    case("semidirect_out_of_range", &["semidirect", "index_out_of_range.json", "adjoint"], 2),
    json("bracket_pi_pi", &["bracket", "cochain_pi_p2.json", "cochain_pi_p2.json"]),
    json("bracket_pi_e11", &["bracket", "cochain_pi_p2.json", "cochain_e11.json"]),
    case("bracket_dim_mismatch", &["bracket", "cochain_pi_p2.json", "cochain_other_dim.json"], 2),
    case("cohomology_p2", &["cohomology", "p2.json", "--rep", "adjoint", "--max", "3"], 0),
    case("cohomology_p2_zero_rep", &["cohomology", "p2.json", "--rep", "p2_zero_rep.json", "--max", "2"], 0),
    case("cohomology_p2_broken", &["cohomology", "p2_broken.json", "--rep", "adjoint", "--max", "2"], 1),
    case("cohomology_max_zero", &["cohomology", "p2.json", "--rep", "adjoint", "--max", "0"], 2),
    case("obstruction_scaling", &["obstruction", "scaling_def.json"], 0),
    case("obstruction_nontrivial", &["obstruction", "obstructed_def.json"], 0),
    case("obstruction_bad", &["obstruction", "bad_def.json"], 1),
    case("obstruction_order_mismatch", &["obstruction", "def_order_mismatch.json"], 2),
    json("extend_scaling", &["extend", "scaling_def.json"]),
    case("extend_obstructed", &["extend", "obstructed_def.json"], 1),
    case("extend_order_mismatch", &["extend", "def_order_mismatch.json"], 2),
    json("convert_skeletal_to_triple", &["convert", "skeletal-to-triple", "skeletal_p2.json"]),
    json("convert_triple_to_skeletal", &["convert", "triple-to-skeletal", "skeletal_triple_p2.json"]),
    json(
        "convert_triple_parts_to_skeletal",
        &["convert", "triple-to-skeletal", "p2.json", "p2_adjoint_rep.json", "theta_p2.json"],
    ),
    json("convert_strict_to_crossed", &["convert", "strict-to-crossed", "skeletal_p2.json"]),
    json("convert_crossed_to_strict", &["convert", "crossed-to-strict", "crossed_identity_p2.json"]),
    case("convert_crossed_bad", &["convert", "crossed-to-strict", "crossed_no_right_action.json"], 1),
    case("convert_wrong_kind", &["convert", "skeletal-to-triple", "p2.json"], 2),
    json("rb_induce_nontrivial", &["rb-induce", "rb_two_term.json", "rb_nontrivial.json"]),
    json("rb_induce_lower", &["rb-induce", "leib2_two_term.json", "rb_lower.json"]),
    case("rb_induce_identity", &["rb-induce", "leib2_two_term.json", "rb_identity.json"], 1),
    case("rb_induce_wrong_shape", &["rb-induce", "leib2_two_term.json", "rb_wrong_shape.json"], 2),
    case("usage_no_verb", &[], 2),
    case("usage_unknown_verb", &["frobnicate"], 2),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(case: &Case) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{}.txt", case.name))
}

/// Runs the binary from the fixtures directory so error paths stay relative.
pub fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_preleib"))
        .args(args)
        .current_dir(crate_dir().join("tests/fixtures"))
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exited normally");
    let text = format!(
        "$ preleib {}\nexit: {code}\n--- stdout\n{}--- stderr\n{}",
        args.join(" "),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    );
    (code, text)
}

/// Runs every case twice and parses emitted JSON back; returns one message per broken expectation.
pub fn verify_all(update: bool) -> Vec<String> {
    let mut bad = Vec::new();
    for case in CASES {
        let (code, text) = run(case.args);
        let (code2, text2) = run(case.args);
        if (code, &text) != (code2, &text2) {
            bad.push(format!("{}: nondeterministic output", case.name));
        }
        if code != case.exit {
            bad.push(format!("{}: exit {code}, expected {}", case.name, case.exit));
        }
        let path = golden_path(case);
        if update {
            std::fs::write(&path, &text).expect("golden writable");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == text => {}
            Ok(want) => bad.push(format!("{}: output differs\n--- want\n{want}--- got\n{text}", case.name)),
            Err(_) => bad.push(format!("{}: missing golden {}", case.name, path.display())),
        }
        if case.emits_json && code == 0 {
            let body = text.split("--- stdout\n").nth(1).and_then(|t| t.split("--- stderr\n").next());
            if let Err(e) = preleib_core::format::parse_document(body.unwrap_or_default()) {
                bad.push(format!("{}: output does not parse back: {e}", case.name));
            }
        }
    }
    bad
}

/// Verbs with an exit-`code` case missing from the table.
pub fn uncovered_verbs() -> Vec<String> {
    let mut missing = Vec::new();
    for verb in
        ["check", "total", "semidirect", "bracket", "cohomology", "obstruction", "extend", "convert", "rb-induce"]
    {
        // a bracket of two well-formed cochains always succeeds
        let codes: &[i32] = if verb == "bracket" { &[0, 2] } else { &[0, 1, 2] };
        for &code in codes {
            if !CASES.iter().any(|c| c.args.first() == Some(&verb) && c.exit == code) {
                missing.push(format!("{verb} lacks an exit-{code} case"));
            }
        }
    }
    missing
}
