use serde_json::Value;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn cobond(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cobond"));
    cmd.args(args)
        .env_remove("COBOND_LIMIT_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn error(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).unwrap()
}

fn generate(args: &[&str]) -> String {
    let o = cobond(args, None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn validate(dir: &Path, graph: &str, cert: &str) -> Output {
    let g = dir.join("g.txt");
    let c = dir.join("c.json");
    std::fs::write(&g, graph).unwrap();
    std::fs::write(&c, cert).unwrap();
    cobond(&["validate", g.to_str().unwrap(), c.to_str().unwrap()], None)
}

#[test]
fn analyze_g2() {
    let g = generate(&["gen", "gk", "--k", "2"]);
    let o = cobond(&["analyze"], Some(&g));
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["n"], 10);
    assert_eq!(v["m"], 13);
    assert_eq!(v["two_connected"], true);
    assert_eq!(v["cocircumference"], 4);
    assert_eq!(v["cutvertices"].as_array().unwrap().len(), 0);
}

#[test]
fn analyze_path_has_cutvertices() {
    let g = generate(&["gen", "path", "--n", "4"]);
    let v = json(&cobond(&["analyze", "-"], Some(&g)));
    assert_eq!(v["cutvertices"], serde_json::json!([1, 2]));
    assert_eq!(v["blocks"].as_array().unwrap().len(), 3);
    assert_eq!(v["two_connected"], false);
    assert_eq!(v["cocircumference"], 1);
}

#[test]
fn cocircumference_of_c5() {
    let g = generate(&["gen", "cycle", "--n", "5"]);
    let o = cobond(&["oracle", "--what", "cocirc"], Some(&g));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["value"], 2);
}

#[test]
fn oracles_on_small_graphs() {
    let k5 = generate(&["gen", "complete", "--n", "5"]);
    assert_eq!(json(&cobond(&["oracle", "--what", "tw"], Some(&k5)))["value"], 4);
    assert_eq!(json(&cobond(&["oracle", "--what", "pw"], Some(&k5)))["value"], 4);
    assert_eq!(json(&cobond(&["oracle", "--what", "circ"], Some(&k5)))["value"], 5);
    let c6 = generate(&["gen", "cycle", "--n", "6"]);
    let rooted = |extra: &[&str]| {
        let mut args = vec!["oracle", "--what", "pw-rooted"];
        args.extend_from_slice(extra);
        json(&cobond(&args, Some(&c6)))["value"].as_u64().unwrap()
    };
    assert_eq!(rooted(&["--x", "0"]), 2);
    assert_eq!(rooted(&["--x", "0", "--y", "3"]), 2);
    let o = cobond(&["oracle", "--what", "pw-rooted"], Some(&c6));
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error(&o)["error"], "BadParams");
}

#[test]
fn tree_decomposition_of_k4() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(&["gen", "complete", "--n", "4"]);
    let o = cobond(&["tree-decomp"], Some(&g));
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["type"], "tree-decomposition");
    assert_eq!(v["width"], 3);
    assert_eq!(v["bound"]["kind"], "cc");
    assert_eq!(v["bound"]["value"], 4);
    assert_eq!(v["valid"], true);
    let back = validate(dir.path(), &g, &stdout(&o));
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(json(&back)["valid"], true);
}

#[test]
fn tree_decomposition_with_root_and_components() {
    let dir = tempfile::tempdir().unwrap();
    let g = "7 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n";
    let o = cobond(&["tree-decomp"], Some(g));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&validate(dir.path(), g, &stdout(&o)))["valid"], true);

    let c5 = generate(&["gen", "cycle", "--n", "5"]);
    let o = cobond(&["tree-decomp", "--root", "3"], Some(&c5));
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["bags"][0], serde_json::json!([3]));
    assert_eq!(json(&validate(dir.path(), &c5, &stdout(&o)))["valid"], true);
}

#[test]
fn path_decomposition_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for g in [
        generate(&["gen", "gk", "--k", "2"]),
        generate(&["gen", "complete", "--n", "5"]),
        generate(&["gen", "theta", "--lengths", "2,3,4"]),
        generate(&["gen", "cubic", "--n", "10", "--seed", "7"]),
    ] {
        let o = cobond(&["path-decomp", "--edge", "0,1"], Some(&g));
        if o.status.code() == Some(2) {
            assert_eq!(error(&o)["error"], "EdgeNotInGraph");
            continue;
        }
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let v = json(&o);
        assert_eq!(v["type"], "path-decomposition");
        let f = v["bond_size"].as_u64().unwrap();
        assert_eq!(v["bound"]["value"].as_u64().unwrap(), 3 * f - 2);
        assert!(v["width"].as_u64().unwrap() <= 3 * f - 2);
        assert_eq!(json(&validate(dir.path(), &g, &stdout(&o)))["valid"], true);
    }
}

#[test]
fn path_decomposition_preconditions() {
    let c4 = generate(&["gen", "cycle", "--n", "4"]);
    let o = cobond(&["path-decomp", "--edge", "0,2"], Some(&c4));
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error(&o)["error"], "EdgeNotInGraph");
    let p = generate(&["gen", "path", "--n", "4"]);
    let o = cobond(&["path-decomp", "--edge", "0,1"], Some(&p));
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error(&o)["error"], "NotTwoConnected");
}

#[test]
fn tampered_certificate_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(&["gen", "complete", "--n", "4"]);
    let mut v = json(&cobond(&["tree-decomp"], Some(&g)));
    v["bags"][1] = serde_json::json!([0, 1]);
    let o = validate(dir.path(), &g, &v.to_string());
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_eq!(r["valid"], false);
    assert!(!r["problems"].as_array().unwrap().is_empty());

    let o = validate(dir.path(), &g, "{ not json");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error(&o)["error"], "Parse");
}

#[test]
fn limits_from_env_and_flag() {
    let c5 = generate(&["gen", "cycle", "--n", "5"]);
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cobond"));
    let o = cmd
        .args(["oracle", "--what", "tw"])
        .env("COBOND_LIMIT_N", "3")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = o.spawn().unwrap();
    child.stdin.take().unwrap().write_all(c5.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error(&out)["error"], "SizeLimitExceeded");

    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cobond"));
    let mut child = cmd
        .args(["--limit-n", "10", "oracle", "--what", "tw"])
        .env("COBOND_LIMIT_N", "3")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(c5.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"], 2);
}

#[test]
fn bad_input_is_reported_as_json() {
    let o = cobond(&["analyze"], Some("3 1\n0 7\n"));
    assert_eq!(o.status.code(), Some(2));
    let e = error(&o);
    assert!(e["error"].is_string() && e["message"].is_string());
    let o = cobond(&["no-such-command"], None);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error(&o)["error"], "Usage");
    let o = cobond(&["analyze", "/definitely/missing"], None);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error(&o)["error"], "Io");
    let o = cobond(&["gen", "gk", "--k", "99"], None);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error(&o)["error"], "SizeLimitExceeded");
}

#[test]
fn generators_and_graph6() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.txt");
    let o = cobond(&["gen", "ternary", "--h", "2", "-o", out.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&cobond(&["analyze", out.to_str().unwrap()], None));
    assert_eq!(v["n"], 13);
    assert_eq!(v["m"], 12);

    let g6 = generate(&["gen", "complete", "--n", "4", "--g6"]);
    assert_eq!(g6.trim(), "C~");
    let v = json(&cobond(&["--format", "g6", "analyze"], Some(&g6)));
    assert_eq!(v["m"], 6);

    let dual = generate(&["gen", "gk-dual", "--k", "2"]);
    let v = json(&cobond(&["analyze"], Some(&dual)));
    assert_eq!(v["multigraph"], true);
    assert_eq!(json(&cobond(&["oracle", "--what", "circ"], Some(&dual)))["value"], 4);
    assert_eq!(json(&cobond(&["oracle", "--what", "pw"], Some(&dual)))["value"], 2);
    let o = cobond(&["gen", "gk-dual", "--k", "1", "--g6"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let g = generate(&["gen", "cubic", "--n", "12", "--seed", "3"]);
    assert_eq!(g, generate(&["gen", "cubic", "--n", "12", "--seed", "3"]));
    let a = stdout(&cobond(&["tree-decomp"], Some(&g)));
    let b = stdout(&cobond(&["tree-decomp"], Some(&g)));
    assert_eq!(a, b);
}

#[test]
fn verify_paper_small() {
    let o = cobond(&["verify-paper", "--max-n", "5"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| l.starts_with("[PASS]")).count(), 10);
    assert!(s.ends_with("10 of 10 criteria passed\n"));
    let o = cobond(&["verify-paper", "--max-n", "12"], None);
    assert_eq!(o.status.code(), Some(2));
}
