use std::path::PathBuf;
use std::process::{Command, Output};

fn model(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("models").join(name)
}

fn dlacheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dlacheck"))
        .args(args)
        .output()
        .unwrap()
}

fn run(args: &[&str], files: &[&str]) -> (i32, String, String) {
    let paths: Vec<String> = files.iter().map(|f| model(f).display().to_string()).collect();
    let mut all: Vec<&str> = args.to_vec();
    all.extend(paths.iter().map(String::as_str));
    let out = dlacheck(&all);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn failing_algebroid_reports_witness() {
    let (code, out, _) = run(&["check", "algebroid", "Broken"], &["algebroids.dlm"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("FAIL algebroid"));
    assert!(out.contains("  J(1,2,3)[l=3]: e3\n"));
}

#[test]
fn passing_checks_exit_zero() {
    for (args, file) in [
        (["check", "matched-pair", "MP6"], "matched_pairs.dlm"),
        (["check", "vacant", "MP4"], "matched_pairs.dlm"),
        (["check", "bialgebroid", "SD3"], "matched_pairs.dlm"),
        (["check", "bialgebroid", "StdSl2"], "poisson.dlm"),
        (["check", "manin", "Aff"], "manin.dlm"),
        (["dvb", "vue", "Tangent"], "dvb.dlm"),
        (["dvb", "zmaps", "Flipped"], "dvb.dlm"),
        (["dvb", "pair", "Wide"], "dvb.dlm"),
    ] {
        let (code, out, err) = run(&args, &[file]);
        assert_eq!(code, 0, "{args:?}: {out}{err}");
        assert!(out.starts_with("PASS"));
    }
}

#[test]
fn json_is_deterministic() {
    let args = ["--json", "--seed", "9", "check", "matched-pair", "MP5"];
    let (c1, a, _) = run(&args, &["matched_pairs.dlm"]);
    let (c2, b, _) = run(&args, &["matched_pairs.dlm"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["check"], "matched-pair");
    assert_eq!(v["seed"], 9);
    assert_eq!(v["elapsed_ms"], 0);
}

#[test]
fn usage_and_model_errors_exit_two() {
    let (code, _, err) = run(&["check", "algebroid", "Nope"], &["algebroids.dlm"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let (code, _, _) = run(&["check", "poisson", "Broken"], &["algebroids.dlm"]);
    assert_eq!(code, 2);
    assert_eq!(dlacheck(&["check", "nonsense"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.dlm");
    std::fs::write(&bad, "algebroid A {\n  rank 2;\n  bracket [1,2] = 1/0*e1;\n}\n").unwrap();
    let out = dlacheck(&["check", "algebroid", "A", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("zero denominator"));
}

#[test]
fn build_writes_checkable_models() {
    let dir = tempfile::tempdir().unwrap();
    let pairs = model("matched_pairs.dlm");
    for (what, check, name) in [
        ("double", "algebroid", "MP5_double"),
        ("vacant", "algebroid", "MP5_horizontal"),
        ("semidirect", "bialgebroid", "MP5_semidirect"),
    ] {
        let out = dir.path().join(format!("{what}.dlm"));
        let o = dlacheck(&[
            "build",
            what,
            "MP5",
            pairs.to_str().unwrap(),
            "-o",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let c = dlacheck(&["check", check, name, out.to_str().unwrap()]);
        assert_eq!(c.status.code(), Some(0), "{}", String::from_utf8_lossy(&c.stdout));
    }
}

#[test]
fn build_refuses_unverified_pair() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.dlm");
    std::fs::write(
        &broken,
        "algebroid A { base x; rank 1; anchor [1] = d_x; }\n\
         algebroid B { base x; rank 1; labels f; }\n\
         matchedpair M { a A; b B; rho [1,1] = f; sigma [1,1] = x*e1; }\n",
    )
    .unwrap();
    let check = dlacheck(&["check", "matched-pair", "M", broken.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(1));
    let out = dir.path().join("out.dlm");
    let b = dlacheck(&[
        "build",
        "double",
        "M",
        broken.to_str().unwrap(),
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(b.status.code(), Some(1));
    assert!(!out.exists());
}

#[test]
fn fmt_is_idempotent() {
    let (code, once, _) = run(&["fmt"], &["manin.dlm", "dvb.dlm"]);
    assert_eq!(code, 0);
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("canon.dlm");
    std::fs::write(&f, &once).unwrap();
    let twice = dlacheck(&["fmt", f.to_str().unwrap()]);
    assert_eq!(String::from_utf8(twice.stdout).unwrap(), once);
}
