use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_aplattice")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn table_rows() {
    let (code, p, _) = run(&["table", "p", "--n-max", "11"]);
    assert_eq!(code, 0);
    assert_eq!(p.lines().last().unwrap(), "11\t1\t11\t55\t25\t15\t10\t7\t5\t4\t3\t2\t1");
    let (_, b, _) = run(&["table", "b", "--n-max", "10"]);
    assert_eq!(b.lines().last().unwrap(), "10\t1\t109\t1232\t5860\t15368\t24524\t24516\t15040\t5184\t768");
    let (_, size, _) = run(&["table", "size", "--n-max", "4"]);
    assert_eq!(size.lines().last().unwrap(), "4\t14");
}

#[test]
fn mobius_and_checks_exit_codes() {
    let (code, out, _) = run(&["mobius", "13", "--method", "coatom"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("M_13=0"));
    for check in [["theorem1", "2..20"], ["folkman", "4..8"], ["comodernistic", "0..6"], ["complemented", "2..12"], ["euler", "2..8"], ["coatoms", "4..12"]] {
        let (code, out, err) = run(&["check", check[0], check[1]]);
        assert_eq!(code, 0, "{check:?}: {out}{err}");
    }
}

#[test]
fn bounds_and_usage_errors_exit_two() {
    let (code, _, err) = run(&["check", "comodernistic", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("--allow-large"));
    assert_eq!(run(&["check", "folkman", "3"]).0, 2);
    assert_eq!(run(&["table", "p", "--n-max", "31"]).0, 2);
    assert_eq!(run(&["check", "theorem1", "5..2"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["mobius", "4", "--method", "guess"]).0, 2);
}

#[test]
fn allow_large_warns() {
    let (code, _, err) = run(&["check", "euler", "11", "--allow-large"]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"));
}

#[test]
fn json_report_shape() {
    let (code, out, _) = run(&["check", "theorem1", "--n", "2", "--n-max", "6", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "check");
    assert_eq!(v["parameters"]["name"], "theorem1");
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 5);
    assert!(v["verdicts"].as_array().unwrap().iter().all(|x| x["pass"] == true));
}

#[test]
fn exports() {
    let (_, dot, _) = run(&["export", "hasse-dot", "--n", "3"]);
    assert_eq!(dot.matches(" -> ").count(), 12);
    let (_, complex, _) = run(&["export", "complex-json", "--n", "4"]);
    let v: serde_json::Value = serde_json::from_str(&complex).unwrap();
    let counts: Vec<usize> = (0..3).map(|d| v["faces_by_dim"][d.to_string()].as_array().unwrap().len()).collect();
    assert_eq!(counts, vec![12, 24, 12]);
    let (_, homology, _) = run(&["export", "homology-json", "--n", "7"]);
    let v: serde_json::Value = serde_json::from_str(&homology).unwrap();
    assert_eq!(v["reduced_homology"]["2"]["free_rank"], 1);
    let (_, crosscut, _) = run(&["export", "homology-json", "--n", "7", "--complex", "crosscut"]);
    let w: serde_json::Value = serde_json::from_str(&crosscut).unwrap();
    assert_eq!(w["reduced_homology"]["2"]["free_rank"], 1);
}

#[test]
fn exports_are_deterministic_and_write_files() {
    let dir = std::env::temp_dir().join(format!("aplattice-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for path in [&a, &b] {
        assert_eq!(run(&["export", "lattice-json", "--n", "6", "--out", path.to_str().unwrap()]).0, 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let (code, _, err) = run(&["export", "lattice-json", "--n", "3", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent-dir/x.json"));
    std::fs::remove_dir_all(&dir).unwrap();
}
