use std::process::{Command, Output};

fn phisum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phisum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn phi_of_cyclic_16() {
    let out = phisum(&["phi", "--group", "cyclic:16"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "86\n");
    assert_eq!(stdout(&phisum(&["phi", "--n", "16"])), "86\n");
}

#[test]
fn phi_of_products() {
    assert_eq!(stdout(&phisum(&["phi", "--group", "abelian:4x4"])), "28\n");
    assert_eq!(
        stdout(&phisum(&["phi", "--group", "prod:cyclic:2,dicyclic:2"])),
        "28\n"
    );
}

#[test]
fn q_prints_reduced_fraction() {
    assert_eq!(stdout(&phisum(&["q", "--n", "2310"])), "72/5\n");
    assert_eq!(stdout(&phisum(&["q", "--n", "12"])), "6\n");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&phisum(&["q", "--n", "2310", "--format", "json"]))).unwrap();
    assert_eq!(json["q"], "72/5");
}

#[test]
fn criterion_on_a4() {
    let out = phisum(&["criterion", "--group", "alt:4"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "no witness; n = Qφ(o(g)) = 12; Sylow-3 count = 4\n"
    );
}

#[test]
fn tables_reproduce_both() {
    let out = phisum(&["tables"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("6 = Q reproduced"));
    let row9 = text.lines().find(|l| l.trim_start().starts_with("9 ")).unwrap();
    assert!(row9.contains("252/11"));
    let row4 = text.lines().find(|l| l.trim_start().starts_with("4 ")).unwrap();
    assert!(row4.contains("54/5"));
    assert!(!text.contains("NOT reproduced"));
}

#[test]
fn verify_main_csv() {
    let out = phisum(&["verify-main", "--n", "6", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,group,phi_G,is_cyclic,undirected_edges,max_phi_order,witnesses,verdict"
    );
    assert!(text.contains("6,S3,8,false,"));
    assert!(lines.all(|l| l.ends_with(",pass")));
}

#[test]
fn verify_main_range_is_deterministic() {
    let a = phisum(&["verify-main", "--range", "1..20", "--format", "json", "--jobs", "4"]);
    let b = phisum(&["verify-main", "--range", "1..20", "--format", "json", "--jobs", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 20);
}

#[test]
fn graph_exports() {
    let dot = stdout(&phisum(&["graph", "--group", "cyclic:2", "--format", "dot"]));
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 1);
    let json = stdout(&phisum(&["graph", "--group", "cyclic:6", "--format", "json"]));
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["undirected"].as_array().unwrap().len(), 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("phisum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.dot");
    let out = phisum(&["graph", "--group", "sym:3", "--format", "dot", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("digraph \"S3\" {"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sweep_small() {
    let out = phisum(&["sweep", "--n", "2000", "--range", "1..16"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["phi", "--group", "blob:3"],
        vec!["graph", "--group", "cyclic:4", "--format", "csv"],
        vec!["phi", "--group", "cyclic:50", "--cap", "10"],
        vec!["verify-main", "--range", "9..3"],
        vec!["frobnicate"],
        vec!["criterion", "--group", "sdp:5:3:2"],
    ] {
        let out = phisum(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}
