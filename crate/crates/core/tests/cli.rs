use std::path::Path;
use std::process::{Command, Output};

const HEADER: &str =
    "n,m,k,W,mode,algorithm,seed,T_C,M,B,Dprime,km_rounds,max_link_bits,max_machine_bits,success";

fn kmachine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmachine"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn run_emits_one_row_per_k_and_seed() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "mst.json",
        r#"{"algorithm": "mst", "model": "cycle", "n": 64, "k": [2, 4], "seeds": [0, 1]}"#,
    );
    let out = kmachine(&["run", "--config", &cfg]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], HEADER);
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
    assert!(lines[1].starts_with("64,64,2,6,BCAST,mst,0,"));
}

#[test]
fn flags_override_config_keys() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "bfs.json",
        r#"{"algorithm": "bfs", "model": "path", "n": 32, "k": [2]}"#,
    );
    let csv = dir.path().join("out.csv");
    let out = kmachine(&[
        "run",
        "--config",
        &cfg,
        "--k",
        "3,5",
        "--W",
        "9",
        "--output",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let ks: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(ks, vec!["3", "5"]);
    assert!(text.lines().skip(1).all(|l| l.split(',').nth(3) == Some("9")));
}

#[test]
fn zero_gamma_is_rejected_before_running() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "pr.json",
        r#"{"algorithm": "pagerank", "model": "cycle", "n": 8, "k": [2], "gamma": 0}"#,
    );
    let out = kmachine(&["run", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn sweep_reports_a_fit() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "sweep.json",
        r#"{"algorithm": "conn", "model": "gnp:0.05", "n": 512, "k": [2, 4, 8, 16], "seeds": [1, 2, 3]}"#,
    );
    let out = kmachine(&["sweep", "--config", &cfg, "--sweep", "k"]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    let slope: f64 = err
        .split_whitespace()
        .find_map(|t| t.strip_prefix("slope="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(slope < -0.5, "{err}");
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 13);
}

#[test]
fn sweep_over_n() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "sweep_n.json",
        r#"{"algorithm": "mst", "model": "gadget:st_lower", "ns": [64, 128, 256], "k": [4], "seeds": [0, 1]}"#,
    );
    let out = kmachine(&["sweep", "--config", &cfg, "--sweep", "n"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8(out.stderr).unwrap().contains("sweep=n"));
}

#[test]
fn gen_round_trips_through_run() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let out = kmachine(&[
        "gen",
        "--model",
        "random_weighted:0.2:50",
        "--n",
        "40",
        "--seed",
        "4",
        "--out",
        graph.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let original = kmachine::graph::generate(
        &kmachine::graph::Model::RandomWeighted { p: 0.2, wmax: 50 },
        40,
        4,
    )
    .unwrap();
    let text = std::fs::read_to_string(&graph).unwrap();
    assert_eq!(kmachine::graph::load_edge_list(&text).unwrap(), original);

    let cfg = write(
        dir.path(),
        "file.json",
        &format!(
            r#"{{"algorithm": "bf_sssp", "graph_file": {:?}, "k": [2, 3], "source": 5}}"#,
            graph.to_str().unwrap()
        ),
    );
    let out = kmachine(&["run", "--config", &cfg]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn unknown_model_is_an_error() {
    let out = kmachine(&["gen", "--model", "hypercube", "--n", "8", "--out", "/dev/null"]);
    assert!(!out.status.success());
}
