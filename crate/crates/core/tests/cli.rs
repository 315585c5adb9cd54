use std::process::{Command, Output};

fn embdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_embdist")).args(args).env_remove("EMBDIST_FORMAT").env_remove("EMBDIST_MODE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn graph_file(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("embdist-it-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn genus_and_euler_of_a_file() {
    let path = graph_file("c22.txt", "v 2\ne 0 1\ne 0 1\ne 1 0\ne 1 0\n");
    let p = path.to_str().unwrap();
    let o = embdist(&["genus", p]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "6 + 30*x\n");
    assert_eq!(stdout(&embdist(&["euler", p])), "6 + 36*x + 126*x^2 + 120*x^3\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&embdist(&["--format", "json", "genus", p]))).unwrap();
    assert_eq!(json["terms"][1][1], "30");
}

#[test]
fn json_graph_input() {
    let path = graph_file("theta.json", r#"{"vertices": 2, "edges": [[0, 1], [0, 1], [0, 1]]}"#);
    assert_eq!(stdout(&embdist(&["genus", path.to_str().unwrap()])), "2 + 2*x\n");
}

#[test]
fn exit_codes() {
    let disconnected = graph_file("two.txt", "v 2\n");
    assert_eq!(embdist(&["genus", disconnected.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(embdist(&["genus", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(embdist(&["--format", "xml", "family", "doubled-cycle", "--gf"]).status.code(), Some(2));
    let big = graph_file("b6.txt", "v 1\ne 0 0\ne 0 0\ne 0 0\ne 0 0\ne 0 0\ne 0 0\n");
    let o = embdist(&["--budget", "1000", "genus", big.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("rerun with --budget"));
}

#[test]
fn family_gf_and_asymptotics() {
    let o = embdist(&["family", "doubled-cycle", "--series", "3", "--format", "tsv"]);
    assert!(stdout(&o).lines().any(|l| l == "3\t2\t72"));
    let gf = stdout(&embdist(&["family", "doubled-cycle", "--gf"]));
    let rep = stdout(&embdist(&["asympt", gf.trim(), "--at", "1"]));
    assert!(rep.contains("r = 1/6") && rep.contains("mu = 1/4") && rep.contains("sigma2 = 3/32"), "{rep}");
}

#[test]
fn environment_overrides_flags() {
    let o = Command::new(env!("CARGO_BIN_EXE_embdist"))
        .args(["family", "doubled-cycle", "--series", "1"])
        .env("EMBDIST_MODE", "euler")
        .env("EMBDIST_FORMAT", "json")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_array());
    assert_eq!(v[0]["terms"][0][1], "4");
}

#[test]
fn verify_subset_reports_rows() {
    let o = embdist(&["verify", "--only", "1,9", "--format", "tsv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().skip(1).all(|l| l.split('\t').nth(1) == Some("true")));
}
