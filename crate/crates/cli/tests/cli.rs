use std::process::{Command, Output};

fn bscale(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bscale"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--output", "json"];
    full.extend_from_slice(args);
    let out = bscale(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(stdout(&out).trim()).unwrap()
}

#[test]
fn documented_examples() {
    let out = bscale(&["--group", "2,3", "scale", "t"]);
    assert_eq!(stdout(&out), "2\n");
    assert_eq!(
        json(&["--group", "2,3", "scale", "t"]),
        serde_json::json!({ "base": 2, "exponent": 1, "value": "2" })
    );
    assert_eq!(stdout(&bscale(&["--group", "2,3", "rho", "taTTat"])), "0\n");
    assert_eq!(
        stdout(&bscale(&["--group", "2,3", "moller", "--kmax", "5", "t"])),
        "2 4 8 16 32 | ratio 2 | scale 2 OK\n"
    );
}

#[test]
fn negative_parameters_and_notices() {
    let out = bscale(&["--group", "-2,3", "modular", "t"]);
    assert_eq!(stdout(&out), "2/3\n");
    assert!(out.stderr.is_empty());
    let out = bscale(&["--group", "2,4", "trace", "--start", "2", "--h", "2", "t^4 a t^-2 a"]);
    assert_eq!(stdout(&out), "8\n");
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("note:"));
    let out = bscale(&["--group", "3,-3", "--output", "json", "flat-rank"]);
    assert!(out.stderr.is_empty(), "no notices in json mode");
}

#[test]
fn exit_codes() {
    assert_eq!(bscale(&["--group", "2,3", "nosuch"]).status.code(), Some(1));
    assert_eq!(bscale(&["scale", "t"]).status.code(), Some(1));
    let out = bscale(&["--group", "2,3", "scale", "t a^"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 4"));
    assert!(out.stdout.is_empty());
    assert_eq!(bscale(&["--group", "0,3", "scale", "t"]).status.code(), Some(3));
    assert_eq!(bscale(&["--group", "2,3", "matrix", "t"]).status.code(), Some(3));
    assert_eq!(bscale(&["--group", "2,3", "--budget", "5", "ball", "--radius", "3"]).status.code(), Some(3));
    assert_eq!(bscale(&["--group", "2,3", "trace", "t a^2 T"]).status.code(), Some(3));
    assert_eq!(bscale(&["--group", "2,3", "--help"]).status.code(), Some(0));
}

#[test]
fn json_outputs_parse() {
    let v = json(&["--group", "4,6", "structure", "T"]);
    assert_eq!(v["primes_vplus"], serde_json::json!([3]));
    assert_eq!(v["swap_applied"], serde_json::json!(true));
    assert_eq!(v["quotient_order_bound"], serde_json::json!(2));
    let v = json(&["--group", "2,3", "ball", "--radius", "2"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 1 + 5 + 20);
    assert_eq!(v["edges"].as_array().unwrap().len(), 25);
    let v = json(&["--group", "2,3", "census", "--radius", "2"]);
    let total: u64 = v["histogram"].as_array().unwrap().iter().map(|h| h["count"].as_u64().unwrap()).sum();
    assert_eq!(total, 26);
    let v = json(&["--group", "2,3", "omega-edges", "--levels", "3"]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 1 + 2 + 3 + 4);
    let v = json(&["--group", "1,2", "matrix", "t a"]);
    assert_eq!(v["entries"], serde_json::json!([["2", "2"], ["0", "1"]]));
    let v = json(&["--group", "2,3", "nf", "a^5 t"]);
    assert_eq!(v["tail"], "2");
}

#[test]
fn text_commands() {
    let run = |args: &[&str]| stdout(&bscale(args));
    assert_eq!(run(&["--group", "2,3", "reduce", "t a^2 T"]), "a^3\n");
    assert_eq!(run(&["--group", "2,3", "reduce", "t T"]), "e\n");
    assert_eq!(run(&["--group", "2,3", "equal", "t a^2 T", "a^3"]), "true\n");
    assert_eq!(run(&["--group", "2,3", "nf", "a^5 t"]), "a^2 t a^2\n");
    assert_eq!(run(&["--group", "2,3", "omega-dist", "2", "3"]), "1\n");
    assert_eq!(run(&["--group", "2,3", "orbit", "t"]), "3\n");
    assert_eq!(run(&["--group", "2,3", "orbit-brute", "t"]), "3\n");
    assert_eq!(run(&["--group", "2,3", "kernel"]), "0\n");
    assert_eq!(run(&["--group", "2,3", "scale-set", "--rho-max", "2"]), "1 2 3 4 9\n");
}

#[test]
fn ball_writes_dot_file() {
    let dir = std::env::temp_dir().join(format!("bscale-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ball.dot");
    let out = bscale(&["--group", "2,3", "ball", "--radius", "1", "--dot", path.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 5);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn selfcheck_is_deterministic() {
    let a = bscale(&["--group", "2,3", "selfcheck", "--seed", "7"]);
    let b = bscale(&["--group", "2,3", "selfcheck", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().all(|l| l.starts_with("PASS")));
}
