use std::io::Write;
use std::process::{Command, Output, Stdio};

fn einfty(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_einfty")).args(args).output().unwrap()
}

fn einfty_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_einfty"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn output_is_sorted_by_basis() {
    let out = stdout(&einfty(&["psi", "--operad", "surjection", "-r", "3", "-i", "2"]));
    assert_eq!(out, "(1,2,3,1,2) + (1,2,3,2,3) + (1,3,1,2,3)");
}

#[test]
fn reads_the_element_from_stdin() {
    let out = stdout(&einfty_stdin(&["--kind", "surjection", "boundary"], "(1,2,1,3)\n"));
    assert_eq!(out, "- (1,2,3) + (2,1,3)");
    let out = stdout(&einfty_stdin(&["--kind", "surjection", "boundary", "-"], "(1,2,1,3)"));
    assert_eq!(out, "- (1,2,3) + (2,1,3)");
}

#[test]
fn torsion_reduces_input() {
    let out = stdout(&einfty(&["--kind", "perm-ring", "--torsion", "3", "render", "5(2,1) - (1,2)"]));
    assert_eq!(out, "2(1,2) + 2(2,1)");
    assert_eq!(stdout(&einfty(&["--kind", "surjection", "--torsion", "2", "render", "2(1,2,1)"])), "0");
    assert_eq!(stdout(&einfty(&["--kind", "surjection", "render", "(1,3) + (1,1,2)"])), "0");
}

#[test]
fn conventions_convert_both_ways() {
    let ms = stdout(&einfty(&["--kind", "surjection", "convert", "--to", "mcclure-smith", "(1,2,1,3,1)"]));
    let back = stdout(&einfty(&[
        "--kind",
        "surjection",
        "--convention",
        "mcclure-smith",
        "convert",
        "--to",
        "berger-fresse",
        &ms,
    ]));
    assert_eq!(back, "(1,2,1,3,1)");
}

#[test]
fn permute_and_reduce() {
    let out = stdout(&einfty(&["--kind", "surjection", "permute", "--by", "(2,3,1)", "(1,2,3)"]));
    assert_eq!(out, "(2,3,1)");
    let out = stdout(&einfty(&["--kind", "barratt-eccles", "reduce", "((1,2,3),(2,3,1),(3,1,2))"]));
    assert_eq!(out, "(1,2,3,1,2)");
}

#[test]
fn complexity_in_json() {
    let out = stdout(&einfty(&["--kind", "barratt-eccles", "--format", "json", "complexity", "((1,2),(2,1),(1,2))"]));
    assert_eq!(out, r#"{"complexity":2}"#);
}

#[test]
fn json_input_carries_its_own_kind() {
    let doc = stdout(&einfty(&["--kind", "cubical", "--torsion", "5", "--format", "json", "render", "3((2,),(0,))"]));
    assert_eq!(doc, r#"{"kind":"cubical","torsion":5,"convention":"none","terms":[{"basis":[[2],[0]],"coeff":3}]}"#);
    let out = stdout(&einfty(&["boundary", &doc]));
    assert_eq!(out, "2((0,),(0,)) + 3((1,),(0,))");
}

#[test]
fn latex_for_chains() {
    let out = stdout(&einfty(&["--format", "latex", "steenrod", "--prime", "3", "-s", "-2", "-q", "-4"]));
    assert_eq!(out, r"[0,1,2,3,4] \otimes [4,5,6,7,8] \otimes [8,9,10,11,12]");
}

#[test]
fn cubical_steenrod_chain() {
    let out = stdout(&einfty(&["steenrod", "--prime", "2", "-s", "-1", "-q", "-2", "--context", "cubical"]));
    assert_ne!(out, "0");
    assert!(out.split(" + ").all(|t| t.starts_with("((")));
}

#[test]
fn parse_errors_exit_with_two() {
    for bad in ["(1,2", "(1,2) * (1,2)", "", "(1,,2)", "x"] {
        let out = einfty(&["--kind", "surjection", "boundary", bad]);
        assert_eq!(code(&out), 2, "{bad:?}");
    }
    let out = einfty(&["boundary", "(1,2)"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--kind"));
    let out = einfty(&["boundary", "{\"kind\": 3}"]);
    assert_eq!(code(&out), 2);
    let out = einfty(&["--kind", "surjection", "boundary", "(0,1)"]);
    assert_eq!(code(&out), 2);
    let out = einfty(&["--kind", "cubical", "boundary", "((3,),)"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn domain_errors_exit_with_three() {
    let cases: [&[&str]; 5] = [
        &["steenrod", "--prime", "2", "-s", "0", "-q", "-1", "--bockstein"],
        &["steenrod", "--prime", "4", "-s", "0", "-q", "-1"],
        &["--kind", "perm-ring", "boundary", "(1,2)"],
        &["--kind", "surjection", "compose", "--position", "3", "(1,2)", "(1,2)"],
        &["psi", "--operad", "surjection", "-r", "0", "-i", "1"],
    ];
    for args in cases {
        assert_eq!(code(&einfty(args)), 3, "{args:?}");
    }
}

#[test]
fn mismatched_operands_are_shape_errors() {
    let doc = stdout(&einfty(&["--kind", "barratt-eccles", "--format", "json", "render", "((1,2),)"]));
    let out = einfty(&["--kind", "surjection", "compose", "--position", "1", "(1,2)", &doc]);
    assert_eq!(code(&out), 2);
}
