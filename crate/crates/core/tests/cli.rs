use std::path::Path;
use std::process::{Command, Output};

fn hypercount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypercount"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generate(dir: &Path, file: &str, args: &[&str]) -> String {
    let path = dir.join(file).to_string_lossy().into_owned();
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--output", &path]);
    let o = hypercount(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn count_unit_pairs_in_mult_construction() {
    let dir = tempfile::tempdir().unwrap();
    let file = generate(
        dir.path(),
        "mult.txt",
        &["mult_construction", "--param", "2", "--param", "3"],
    );
    let o = hypercount(&["count", "--at", "1/1,0/1", &file]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "9");
    let o = hypercount(&["count", &file]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = hypercount(&["count", "--include-zero", "false", &file]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = hypercount(&["count", "--histogram", &file]);
    assert_eq!(stdout(&o), "d1,d2,count\n0,0,6\n1,0,9\n");
}

#[test]
fn analyze_single_point() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("one.txt");
    std::fs::write(&file, "dual\n1 2 3 4\n").unwrap();
    let o = hypercount(&["analyze", file.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("multiplicity=1\n"), "{text}");
    assert!(text.contains("secondary_multiplicity=1"), "{text}");
}

#[test]
fn classify_and_transform() {
    let dir = tempfile::tempdir().unwrap();
    let file = generate(
        dir.path(),
        "mult.txt",
        &["mult_construction", "--param", "2", "--param", "3"],
    );
    let o = hypercount(&["classify", &file]);
    assert_eq!(stdout(&o), "alpha,beta,gamma,delta,count\n1,1,1,1,18\n");
    let sheared = dir.path().join("sheared.txt");
    let o = hypercount(&[
        "transform",
        "shear_dual",
        &file,
        "--param",
        "-1/2",
        "--output",
        sheared.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = hypercount(&["count", "--at", "1,1", sheared.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "9");
}

#[test]
fn rich_lines_of_grid() {
    let dir = tempfile::tempdir().unwrap();
    let file = generate(dir.path(), "grid.txt", &["integer_grid", "--param", "3"]);
    let o = hypercount(&["richlines", &file, "--r", "3"]);
    assert_eq!(stdout(&o).lines().count(), 8);
    let o = hypercount(&["richlines", &file, "--r", "3", "--diagnostic"]);
    assert!(stdout(&o).contains("incidences=24"));
}

#[test]
fn generate_from_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let a = generate(dir.path(), "a.txt", &["integer_grid", "--param", "2"]);
    let b = generate(
        dir.path(),
        "b.txt",
        &["rational_circle_points", "--param", "3"],
    );
    let prod = generate(
        dir.path(),
        "p.txt",
        &["typeB_product", "--input", &a, "--input", &b],
    );
    let o = hypercount(&["analyze", &prod]);
    assert!(stdout(&o).contains("real_multiplicity=3"));
    let o = hypercount(&["count", &a, "--against", &b]);
    assert!(o.status.success());
}

#[test]
fn errors_exit_nonzero() {
    assert!(!hypercount(&["nonsense"]).status.success());
    assert!(!hypercount(&["count", "--bogus", "x"]).status.success());
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "dual\n1 2\n").unwrap();
    let o = hypercount(&["analyze", file.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let good = generate(
        dir.path(),
        "m.txt",
        &["mult_construction", "--param", "2", "--param", "2"],
    );
    let o = hypercount(&["count", "--at", "0,1", &good]);
    assert!(!o.status.success());
    let o = hypercount(&["transform", "double_scale_real", &good, "--param", "2"]);
    assert!(!o.status.success());
}
