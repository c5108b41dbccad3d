use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn qlab(args: &[&str]) -> (u8, String) {
    let mut out = Vec::new();
    let code = qlab::run(std::iter::once("qlab").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn json(args: &[&str]) -> (u8, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out) = qlab(&full);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn table_one_has_150_rows_and_matches() {
    let (code, out) = qlab(&["quandle", "--family", "octahedral", "table1", "--compare", &fixture("base_point_table.txt")]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| !l.starts_with('#')).count(), 150);
    assert!(out.contains("match"));
}

#[test]
fn weight_of_the_trefoil_fixture() {
    let (code, out) = qlab(&["weight", "--cocycle", "eta", "--modulus", "3", &fixture("twistspun_trefoil_4.tp")]);
    assert_eq!((code, out.trim()), (0, "1"));
    let (code, out) = qlab(&["weight", "--cocycle", "eta", "--expect", "2", &fixture("twistspun_trefoil_4.tp")]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn mochizuki_verifies() {
    let (code, out) = qlab(&["cocycle", "verify", "--name", "mochizuki", "--n", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("1512") && out.contains("pass"));
    let (code, v) = json(&["cocycle", "verify", "--name", "eta"]);
    assert_eq!(code, 0);
    assert_eq!(v["checked"], 750);
    assert_eq!(v["passed"], true);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(qlab(&["frobnicate"]).0, 2);
    assert_eq!(qlab(&["quandle", "check"]).0, 2);
    assert_eq!(qlab(&["quandle", "--family", "dihedral", "check"]).0, 2);
    assert_eq!(qlab(&["cocycle", "verify", "--name", "mochizuki", "--n", "9"]).0, 2);
    assert_eq!(qlab(&["weight", "--cocycle", "eta", "--modulus", "7", &fixture("twistspun_trefoil_4.tp")]).0, 2);
    assert_eq!(qlab(&["weight", "--cocycle", "eta", "/nonexistent.tp"]).0, 2);
    assert_eq!(qlab(&["cocycle", "eval", "--name", "eta", &fixture("base_point_table.txt")]).0, 2);
    assert_eq!(qlab(&["search", "--name", "eta", "--max-length", "9"]).0, 2);
    assert_eq!(qlab(&["search", "--name", "eta", "--max-length", "5", "--profile", "D"]).0, 2);
    assert_eq!(qlab(&["--help"]).0, 0);
}

#[test]
fn malformed_table_file_exits_two() {
    let dir = std::env::temp_dir().join(format!("qlab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "2\n0 1\n1 1\n").unwrap();
    assert_eq!(qlab(&["quandle", "--table", bad.to_str().unwrap(), "check"]).0, 2);
    let good = dir.join("r3.txt");
    std::fs::write(&good, "3\n0 2 1\n2 1 0\n1 0 2\n").unwrap();
    assert_eq!(qlab(&["quandle", "--table", good.to_str().unwrap(), "check"]).0, 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dual_map_checks() {
    assert_eq!(qlab(&["quandle", "--family", "octahedral", "dual"]).0, 0);
    let (code, v) = json(&["quandle", "--family", "octahedral", "dual", "--map", "0,1,2,3,4,5"]);
    assert_eq!(code, 1);
    assert_eq!(v["isomorphism"], false);
}

#[test]
fn verify_commands() {
    let (code, v) = json(&["verify", "cycles"]);
    assert_eq!(code, 0);
    assert_eq!(v["cycles"].as_array().unwrap().len(), 2);
    let (code, v) = json(&["verify", "boundary"]);
    assert_eq!(code, 0);
    assert_eq!(v["identities"].as_array().unwrap().len(), 10);
    let (code, _) = qlab(&[
        "verify", "cycles", "--chain", &fixture("eta8.chain"), "--name", "eta", "--length", "8", "--value", "2",
    ]);
    assert_eq!(code, 1);
    assert_eq!(qlab(&["verify", "cycles", "omega9"]).0, 2);
}

#[test]
fn enumerate_and_tables() {
    let (code, v) = json(&["enumerate", "families", "--k", "5"]);
    assert_eq!((code, v["count"].as_u64()), (0, Some(10)));
    let (code, out) = qlab(&["enumerate", "index-tables", "--k", "4", "--compare", &fixture("index_patterns_k4.txt")]);
    assert_eq!(code, 0, "{out}");
    let (code, _) = qlab(&["enumerate", "index-tables", "--k", "4", "--compare", &fixture("index_patterns_k5.txt")]);
    assert_eq!(code, 1);
}

#[test]
fn kernel_ranks() {
    let (code, v) = json(&["kernel", "--family", "octahedral", "--index", "0", "--terminal", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["rank"], 6);
    for b in v["basis"].as_array().unwrap() {
        assert_eq!(b["x_set"], "graded");
    }
    let (_, v) = json(&["kernel", "--family", "dihedral", "--n", "7", "--terminal", "3", "--basis", "rational"]);
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);
}

#[test]
fn search_reports_and_refusals() {
    let (code, v) = json(&["search", "--name", "zeta", "--n", "7", "--max-length", "6", "--profile", "B"]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "exhausted");
    assert_eq!(v["certificate"]["profile"], "B");
    let (code, v) = json(&["search", "--name", "eta", "--max-length", "7", "--budget", "100"]);
    assert_eq!(code, 1);
    assert_eq!(v["outcome"], "refused");
    let (code, v) = json(&["--threads", "2", "search", "--name", "eta", "--max-length", "8", "--stop-at-first"]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "found");
    assert_eq!(v["cycles"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_deterministic() {
    let args = ["search", "--name", "eta", "--max-length", "7", "--profile", "C"];
    assert_eq!(qlab(&args), qlab(&args));
    let args = ["--format", "json", "kernel", "--family", "octahedral", "--index", "all", "--terminal", "1"];
    assert_eq!(qlab(&args), qlab(&args));
}
