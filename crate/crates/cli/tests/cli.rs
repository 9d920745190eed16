use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nilorb"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn count_symplectic_rank_five() {
    let o = run(&["count", "--group", "sp", "--rank", "5"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2043 (recurrence)\n");
}

#[test]
fn count_reports_enumeration_for_parabolics() {
    let o = run(
        &[
            "count", "--group", "sp", "--blocks", "2,1", "--format", "json",
        ],
        "",
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["method"], "enumeration");
    assert_eq!(v["b"], serde_json::json!([2, 1]));
}

#[test]
fn empty_pattern_gives_zero_matrix() {
    let o = run(
        &["repr", "--group", "o", "--n", "4", "--format", "json"],
        "{}",
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"rows":4,"cols":4,"entries":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}"#
    );
}

#[test]
fn identifies_an_orthogonal_table_matrix() {
    let m = r#"{"rows":4,"cols":4,"entries":[[0,1,0,0],[0,0,0,0],[0,0,0,-1],[0,0,0,0]]}"#;
    let o = run(&["identify", "--group", "o"], m);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().next(), Some("{2->1}"));
    let o = run(&["identify", "--group", "o", "--format", "json"], m);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pattern"]["arcs"][0]["from"], 2);
    assert_eq!(v["pattern"]["arcs"][0]["to"], 1);
    assert_eq!(v["orbit_dim"], 1);
}

#[test]
fn non_members_exit_with_two() {
    let m = r#"{"rows":4,"cols":4,"entries":[[0,0,0,0],[1,0,0,0],[0,0,0,0],[0,0,1,0]]}"#;
    let o = run(&["identify", "--group", "sp"], m);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o), "error: matrix not in sp_4: ᵀaF+Fa ≠ 0\n");
}

#[test]
fn malformed_input_exits_with_two() {
    for (args, input) in [
        (vec!["identify", "--group", "sp"], "{\"rows\": 2"),
        (vec!["repr", "--group", "sp", "--rank", "2"], "{7->1}"),
        (vec!["repr", "--group", "o", "--rank", "1"], "{1^}"),
        (vec!["verify", "--rank", "1", "--families", "nonsense"], ""),
        (vec!["count", "--rank", "2"], ""),
    ] {
        let o = run(&args, input);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = stderr(&o);
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.starts_with("error: "), "{err}");
    }
}

#[test]
fn repr_and_identify_are_inverse() {
    let groups: [(&str, &[&str]); 3] = [
        ("sp", &["2", "4", "6"]),
        ("o", &["2", "4", "6"]),
        ("o", &["3", "5", "7"]),
    ];
    let mut checked = 0;
    for (group, sizes) in groups {
        for n in sizes.iter() {
            let l = (n.parse::<usize>().unwrap() / 2).to_string();
            let list = run(
                &[
                    "enumerate",
                    "--group",
                    group,
                    "--rank",
                    &l,
                    "--format",
                    "json",
                ],
                "",
            );
            assert!(list.status.success());
            for line in stdout(&list).lines() {
                let m = run(
                    &["repr", "--group", group, "--n", n, "--format", "json"],
                    line,
                );
                assert!(m.status.success(), "{}", stderr(&m));
                let back = run(
                    &["identify", "--group", group, "--format", "json"],
                    &stdout(&m),
                );
                assert!(back.status.success(), "{}", stderr(&back));
                let v: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
                let want: serde_json::Value = serde_json::from_str(line).unwrap();
                assert_eq!(v["pattern"], want, "{group} n={n}");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, (3 + 13 + 63) + (1 + 5 + 13) + (1 + 5 + 13));
}

#[test]
fn parabolic_round_trip() {
    let list = run(
        &[
            "enumerate",
            "--group",
            "sp",
            "--blocks",
            "2,1",
            "--format",
            "json",
        ],
        "",
    );
    for line in stdout(&list).lines() {
        let m = run(&["repr", "--group", "sp", "--format", "json"], line);
        let back = run(
            &[
                "identify", "--group", "sp", "--blocks", "2,1", "--format", "json",
            ],
            &stdout(&m),
        );
        assert!(back.status.success(), "{}", stderr(&back));
        let v: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
        assert_eq!(
            v["pattern"],
            serde_json::from_str::<serde_json::Value>(line).unwrap()
        );
    }
}

#[test]
fn summands_and_ar() {
    let o = run(&["summands", "--group", "sp", "--rank", "2"], "{1^}");
    assert_eq!(stdout(&o), "Z+_{1,1} ⊕ (M_{2,ω}⊕M*_{2,ω})\n");
    let o = run(&["ar", "--rank", "2", "--format", "dot"], "");
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("\"M_{1,ω}\" -> \"Z+_{1,1}\";"));
}

#[test]
fn tex_table_for_sp4() {
    let o = run(
        &[
            "enumerate",
            "--group",
            "sp",
            "--rank",
            "2",
            "--format",
            "tex",
        ],
        "",
    );
    let tex = stdout(&o);
    assert!(tex.contains("\\begin{tabular}{|c|c|c|c|c|}"));
    assert_eq!(tex.matches("\\xymatrix").count(), 13);
}

#[test]
fn verify_writes_a_deterministic_report() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let o = run(
            &[
                "verify",
                "--rank",
                "2",
                "--trials",
                "2",
                "--seed",
                "9",
                "--format",
                "json",
                "--out",
                path.to_str().unwrap(),
            ],
            "",
        );
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stdout(&o).contains("0 failed"));
    }
    let ra = std::fs::read_to_string(&a).unwrap();
    assert_eq!(ra, std::fs::read_to_string(&b).unwrap());
    let v: serde_json::Value = serde_json::from_str(&ra).unwrap();
    let entries = v.as_array().unwrap();
    assert!(entries.iter().all(|e| e["status"] == "pass"));
    assert!(entries
        .iter()
        .any(|e| e["test_id"] == "conjugation/sp_4/dims=[1, 2]"));
}
