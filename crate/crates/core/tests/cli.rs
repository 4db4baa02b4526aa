use std::io::Write;
use std::process::{Command, Output};

fn hrhlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hrhlab")).args(args).output().expect("binary runs")
}

fn hrhlab_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hrhlab"))
        .args(args)
        .env(key, val)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn quadric_headline() {
    let o = hrhlab(&["hrh", "bp(2,2,2,2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "HRH = 0 (Cor: HRH = Sp_min,Z - 2)"));
}

#[test]
fn exponent_error() {
    let o = hrhlab(&["hrh", "bp(1,2)"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o).trim(), "error[E_EXPONENT]: exponent must be ≥ 2 at position 7");
    assert!(stdout(&o).is_empty());
}

#[test]
fn domain_failures_exit_2() {
    for args in [
        &["det", "generic", "m=3", "n=4", "p=1"][..],
        &["spectrum", "tuple(bp(2,2),bp(2,2))"],
        &["cone", "n=2", "h=[[0,0,1],[2,2,3]]"],
        &["toric", "rays=[[1,0],[-1,0]]"],
        &["frobnicate"],
    ] {
        assert_eq!(hrhlab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn mu_cap_from_env() {
    let o = hrhlab_env(&["hrh", "bp(5,5,5)"], "HRHLAB_MAX_MU", "10");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds the enumeration cap 10"));
    assert_eq!(hrhlab_env(&["hrh", "bp(5,5,5)"], "HRHLAB_MAX_MU", "64").status.code(), Some(0));
    assert_eq!(hrhlab_env(&["hrh", "bp(2,2)"], "HRHLAB_MAX_MU", "lots").status.code(), Some(2));
}

#[test]
fn det_json_report() {
    let o = hrhlab(&["det", "generic", "m=4", "n=3", "p=2", "--format=json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariants"]["HRH"], serde_json::json!({"kind": "exact", "lo": 0, "hi": 0}));
    assert_eq!(v["invariants"]["lcdef_gen"], 1);
    assert_eq!(v["invariants"]["lcd"], 4);
    assert_eq!(v["invariants"]["codim"], 2);
}

#[test]
fn json_is_byte_stable() {
    let args = ["bsato", "tuple(bp(2,2,2),bp(3,3))", "--format=json"];
    let a = hrhlab(&args);
    let b = hrhlab(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v["invariants"]["roots"].as_array().unwrap().iter().all(|r| r.is_string()));
}

#[test]
fn batch_matches_single_runs() {
    let lines = [
        "hrh bp(2,2,2,2)",
        "# comment",
        "spectrum ts(bp(2,3),bp(3))",
        "",
        "det skew-even m=2 p=1",
        "hrh bp(1,2)",
        "toric rays=[[1,0],[0,1]]",
        "cone n=2 h=[[0,0,1],[1,1,9]]",
        "bsato bp(2,3,7)",
    ];
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "{}", lines.join("\n")).unwrap();
    let path = f.path().to_str().unwrap();
    let batch = hrhlab(&[&format!("--batch={path}"), "--format=json"]);
    assert_eq!(batch.status.code(), Some(2));
    let out = stdout(&batch);
    let got: Vec<&str> = out.lines().collect();
    let cmds: Vec<&str> = lines.iter().copied().filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    assert_eq!(got.len(), cmds.len());
    for (line, cmd) in got.iter().zip(&cmds) {
        let single = hrhlab(&[cmd, "--format=json"]);
        let expect = if single.stdout.is_empty() { stderr(&single) } else { stdout(&single) };
        let a: serde_json::Value = serde_json::from_str(line).unwrap();
        let b: serde_json::Value = serde_json::from_str(expect.trim()).unwrap();
        // the single run echoes its own --format flag in "input"
        assert_eq!(a["invariants"], b["invariants"], "{cmd}");
        assert_eq!(a["error"]["code"], b["error"]["code"], "{cmd}");
    }
}

#[test]
fn cone_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"n": 2, "h": [[0, 0, 1], [2, 0, 1], [1, 1, 20]]}}"#).unwrap();
    let o = hrhlab(&["cone", &format!("file={}", f.path().display()), "--format=json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariants"]["lcdef"], 0);
    assert_eq!(v["invariants"]["HRH"]["lo"], -1);
}

#[test]
fn verify_exit_zero() {
    let o = hrhlab(&["verify", "--suite=det"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: 2/2 criteria pass"));
}

#[test]
fn help() {
    assert_eq!(hrhlab(&["--help"]).status.code(), Some(0));
    assert_eq!(hrhlab(&[]).status.code(), Some(2));
}
