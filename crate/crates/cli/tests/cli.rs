use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_faddeeva"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn eval_prints_value_branch_and_bound() {
    let (code, out, _) = run(&["eval", "--re", "1", "--im", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("3.04744205256912"), "{out}");
    assert!(out.contains("branch  MM"), "{out}");
    assert!(out.contains("abs 6.568e-16"), "{out}");
    let (code, out, _) = run(&["eval", "--re", "-2", "--im", "-0.5", "--method", "trap"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn eval_other_methods() {
    for m in ["weideman", "cf", "zaghloul"] {
        let (code, out, err) = run(&["eval", "--re", "9", "--im", "1", "--method", m]);
        assert_eq!(code, 0, "{m}: {err}");
        assert!(out.contains("w(z)"));
    }
}

#[test]
fn parameter_errors_exit_2() {
    assert_eq!(run(&["eval", "--re", "1", "--im", "1", "--n", "40"]).0, 2);
    assert_eq!(
        run(&["eval", "--re", "1", "--im", "-1", "--method", "weideman"]).0,
        2
    );
    assert_eq!(
        run(&[
            "sweep",
            "--n-min",
            "12",
            "--n-max",
            "12",
            "--stride",
            "1000",
            "--out",
            "/dev/null"
        ])
        .0,
        2
    );
    assert_eq!(
        run(&["table", "--methods", "simpson(2)", "--out", "/dev/null"]).0,
        2
    );
    assert_eq!(
        run(&[
            "bench",
            "--reps",
            "1",
            "--stride",
            "1000",
            "--out",
            "/dev/null"
        ])
        .0,
        2
    );
    assert_eq!(run(&["eval", "--re", "x", "--im", "1"]).0, 2);
}

#[test]
fn sweep_writes_deterministic_csv_and_checks() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let (code, _, err) = run(&[
            "sweep",
            "--n-min",
            "9",
            "--n-max",
            "11",
            "--stride",
            "997",
            "--check",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{err}");
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,max_abs_err,max_rel_err,bound_abs,bound_rel,argmax_abs_re,argmax_abs_im,argmax_rel_re,argmax_rel_im"
    );
    assert_eq!(lines.count(), 3);
    let j = dir.path().join("x.json");
    let (code, _, err) = run(&[
        "sweep",
        "--n-min",
        "12",
        "--n-max",
        "13",
        "--precision",
        "x",
        "--stride",
        "4001",
        "--out",
        j.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(std::fs::read_to_string(&j)
        .unwrap()
        .contains("\"max_abs_err\""));
}

#[test]
fn table_and_bench() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.csv");
    let (code, _, err) = run(&[
        "table",
        "--methods",
        "trap(11),cf(9)",
        "--stride",
        "101",
        "--out",
        t.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&t).unwrap();
    assert!(
        text.starts_with("method,max_abs,max_rel,points\ntrap(11),"),
        "{text}"
    );
    let b = dir.path().join("b.json");
    let (code, _, err) = run(&[
        "bench",
        "--reps",
        "3",
        "--methods",
        "trap(11)",
        "--stride",
        "4001",
        "--out",
        b.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(std::fs::read_to_string(&b)
        .unwrap()
        .contains("mean_seconds"));
}

#[test]
fn bounds_prints_constants() {
    let (code, out, _) = run(&["bounds", "--n", "20"]);
    assert_eq!(code, 0);
    assert!(out.contains("C1  = 0.669"));
    assert!(out.contains(" 20   3.4516e-28"), "{out}");
}
