use std::process::Command;

fn qham(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qham")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn tmp(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("qham-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn verify_perfect_reports_counts() {
    let (code, out, _) = qham(&["verify-perfect", "--algebra", "f2", "--m", "3", "--mode", "exhaustive"]);
    assert_eq!(code, 0);
    assert!(out.contains("covering_product: 16*8=128"), "{out}");
    assert!(out.contains("verdict: confirmed"));
}

#[test]
fn decode_writes_out_file() {
    let input = tmp("y.txt", "(1, 0, 0) := 1\n(0, 1, 0) := 1\n(1, 1, 0) := 1\n(0, 0, 1) := 1\n");
    let outp = std::env::temp_dir().join(format!("qham-cli-{}/decoded.txt", std::process::id()));
    let (code, _, _) = qham(&["decode", "--algebra", "f2", "--m", "3", "--in", &input, "--out", outp.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(outp).unwrap();
    assert!(text.ends_with("---\n(0, 1, 0) := 1\n(1, 0, 0) := 1\n(1, 1, 0) := 1\n"), "{text}");
}

#[test]
fn parse_errors_have_line_numbers() {
    let input = tmp("bad.txt", "(1, 0) := 1\n(1, 0 := 1\n");
    let (code, _, err) = qham(&["syndrome", "--algebra", "f3", "--in", &input]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(qham(&["nonsense"]).0, 2);
    assert_eq!(qham(&["audit", "--algebra", "f6"]).0, 2);
    assert_eq!(qham(&["verify-perfect", "--m", "1"]).0, 2);
    assert_eq!(qham(&["--help"]).0, 0);
}

#[test]
fn basis_ops_from_file() {
    let ops = tmp("ops.txt", "# a shear\nswap 0 1\nadd 1 0 2\nscale 0 2\n");
    let (code, out, _) = qham(&["basis-iso", "--algebra", "f3", "--in", &ops]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("image_equals_code: true"));
}

#[test]
fn choice_iso_from_file() {
    let e = tmp("choice.txt", "e1 (1, 1) := 2\ne2 (0, 1) := 2\ne2 (1, 2) := 2\n");
    let (code, out, _) = qham(&["choice-iso", "--algebra", "f3", "--in", &e]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("codewords: 9"));
}

#[test]
fn support_witness_and_membership() {
    let cols = tmp("cols.txt", "(1, 0)\n(0, 1)\n(1, 1)\n");
    let (code, out, _) = qham(&["support-witness", "--algebra", "f3", "--in", &cols]);
    assert_eq!(code, 0);
    assert!(out.contains("outcome: dependent"), "{out}");
    let v = tmp("v.txt", "(1, 0) := 1\n(0, 1) := 1\n(1, 1) := 1\n");
    let (code, out, _) = qham(&["membership-reduce", "--algebra", "f3", "--in", &v]);
    assert_eq!(code, 0);
    assert!(out.contains("agree: true"));
}

#[test]
fn witness_commands() {
    let (code, out, _) = qham(&["nonassoc-witness", "--algebra", "octonions"]);
    assert_eq!(code, 0);
    assert!(out.contains("outcome: witness"));
    let (code, out, _) = qham(&["right-linearity", "--algebra", "quaternions"]);
    assert_eq!(code, 0);
    assert!(out.contains("witnesses: 1"), "{out}");
    let (code, _, _) = qham(&["conjugate-check", "--algebra", "quaternions", "--trials", "100"]);
    assert_eq!(code, 0);
}

#[test]
fn violated_claim_exits_1() {
    // Left scaling escapes the octonion code, so a basis change with a
    // non-real scale cannot preserve it.
    let ops = tmp("oct.txt", "scale 0 e1\n");
    let (code, out, err) = qham(&["basis-iso", "--algebra", "octonions", "--in", &ops, "--trials", "50"]);
    assert!(code == 1 || code == 2, "{out}{err}");
}

#[test]
fn same_seed_same_bytes() {
    let args = ["distinguish", "--algebra", "quaternions", "--seed", "9", "--trials", "10"];
    assert_eq!(qham(&args).1, qham(&args).1);
}
