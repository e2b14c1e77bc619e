use std::io::Write;
use std::path::PathBuf;
use std::process::{Command as Process, Output, Stdio};

use proptest::prelude::*;
use seifert_fill::embedding::SearchCertificate;
use seifert_fill_cli::{parse_args, Cli, Command, FareyCommand, EXIT_INVALID_INPUT, EXIT_OK, EXIT_TIMEOUT};
use serde_json::Value;

fn bin() -> Process {
    let mut p = Process::new(env!("CARGO_BIN_EXE_seifert-fill"));
    p.env_remove(seifert_fill_cli::MAX_SECONDS_ENV);
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("seifert-fill-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn round_trips(cli: Cli) {
    let args = cli.render();
    assert_eq!(parse_args(&args).unwrap(), cli, "{args:?}");
}

#[test]
fn render_parse_round_trip() {
    let m = "-1;1/2,1/3,1/5".to_string();
    for json in [false, true] {
        for command in [
            Command::Classify {
                manifold: m.clone(),
                embedding: true,
                max_seconds: Some(2.5),
            },
            Command::Classify {
                manifold: m.clone(),
                embedding: false,
                max_seconds: None,
            },
            Command::Realizable { manifold: m.clone() },
            Command::Witness { manifold: m.clone() },
            Command::Plumbing { manifold: m.clone() },
            Command::Embed {
                graph: "g.json".into(),
                max_seconds: Some(0.1),
                max_rank: Some(12),
            },
            Command::Cf { value: "-7/5".into() },
            Command::Dual { cf: "-2,-2,-3".into() },
            Command::Farey(FareyCommand::Config1 {
                s: "-4".into(),
                r2p: "-3/2".into(),
            }),
            Command::Farey(FareyCommand::Config3 {
                s: "-4".into(),
                r2p: "-3/2".into(),
            }),
            Command::Crosscheck {
                manifold: m.clone(),
                max_seconds: Some(60.0),
            },
            Command::Batch {
                embedding: true,
                max_seconds: None,
            },
        ] {
            round_trips(Cli { json, command });
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn manifold_commands_round_trip(e0 in -5i64..5, rs in prop::collection::vec((1i64..9, 2i64..10), 0..5), secs in prop::option::of(0.0f64..100.0)) {
        let manifold = format!(
            "{e0};{}",
            rs.iter().map(|(p, q)| format!("{p}/{q}")).collect::<Vec<_>>().join(",")
        );
        round_trips(Cli { json: false, command: Command::Crosscheck { manifold: manifold.clone(), max_seconds: secs } });
        round_trips(Cli { json: true, command: Command::Classify { manifold, embedding: false, max_seconds: secs } });
    }
}

#[test]
fn classify_json_schema() {
    let o = run(&["classify", "-1;1/2,1/3,1/5", "--json"]);
    assert_eq!(o.status.code(), Some(EXIT_OK as i32));
    let text = stdout(&o);
    assert!(text.starts_with(r#"{"manifold":"-1;1/2,1/3,1/5","fillable":false,"reason":"special_type","#), "{text}");
    let v = json(&o);
    assert_eq!(v["evidence"]["report"]["realizability"]["kind"], "exhausted");
}

#[test]
fn json_is_stable() {
    for args in [
        vec!["classify", "-1;3/4,2/3,1/2", "--json"],
        vec!["witness", "-1;1/2,1/3,1/7", "--json"],
        vec!["crosscheck", "-1;1/2,1/3,1/5", "--json"],
        vec!["plumbing", "-2;1/2,2/3,4/5", "--json"],
    ] {
        assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
    }
}

#[test]
fn text_commands() {
    assert_eq!(stdout(&run(&["cf", "-7/5"])), "-2,-2,-3\n");
    assert_eq!(stdout(&run(&["cf", "-7/2"])), "-4,-2\n");
    assert_eq!(stdout(&run(&["dual", "-2,-2,-3"])), "-4,-2\n");
    assert_eq!(
        stdout(&run(&["farey", "config3", "-4", "-3/2", "--json"])),
        "{\"alpha\":\"-1/0\",\"beta\":\"-3\",\"gamma\":\"-2\",\"delta\":\"-1\",\"extra_arc\":\"alpha_gamma\"}\n"
    );
    let w = json(&run(&["witness", "-1;1/2,1/3,1/7", "--json"]));
    assert_eq!(w["map"], serde_json::json!({"a": 3, "b": 1, "c": 2, "d": 1}));
    for key in ["s", "t", "m", "M", "n_a"] {
        assert!(w.get(key).is_some(), "{key}");
    }
}

#[test]
fn plumbing_json() {
    let v = json(&run(&["plumbing", "-2;1/2,2/3,4/5", "--json"]));
    assert_eq!(v["graph"], serde_json::json!({"central": -2, "legs": [[-2], [-2, -2], [-2, -2, -2, -2]]}));
    assert_eq!(v["determinant"], 1);
    assert_eq!(v["negative_definite"], true);
    assert_eq!(v["form"][0], serde_json::json!([-2, 1, 1, 0, 1, 0, 0, 0]));
}

#[test]
fn embed_files() {
    let g = temp_file("e8.json", r#"{"central":-2,"legs":[[-2],[-2,-2],[-2,-2,-2,-2]]}"#);
    let o = run(&["embed", g.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"outcome\":\"no_embedding\",\"searched_rank\":16}\n");
    let cert: SearchCertificate = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(cert, SearchCertificate::ExhaustedNoEmbedding { searched_rank: 16 });

    let chain = temp_file("chain.json", r#"{"form":[[-2,1],[1,-2]]}"#);
    let v = json(&run(&["embed", chain.to_str().unwrap(), "--json"]));
    assert_eq!(v["outcome"], "found");
    assert_eq!(v["rank"], 3);

    let o = run_stdin(&["embed", "-", "--json", "--max-rank", "2"], r#"{"form":[[-2,1],[1,-2]]}"#);
    assert_eq!(stdout(&o), "{\"outcome\":\"no_embedding\",\"searched_rank\":2}\n");

    let asym = temp_file("asym.json", r#"{"form":[[-2,1],[0,-2]]}"#);
    assert_eq!(run(&["embed", asym.to_str().unwrap()]).status.code(), Some(EXIT_INVALID_INPUT as i32));
    let pos = temp_file("pos.json", r#"{"form":[[1]]}"#);
    assert_eq!(run(&["embed", pos.to_str().unwrap()]).status.code(), Some(EXIT_INVALID_INPUT as i32));
}

/// A 30-vertex tree the search cannot settle quickly.
fn hard_form() -> String {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let n = 30;
    let mut q = vec![vec![0i64; n]; n];
    for (i, row) in q.iter_mut().enumerate() {
        row[i] = -rng.gen_range(2..=6);
    }
    for i in 1..n {
        let p = rng.gen_range(0..i);
        q[i][p] = 1;
        q[p][i] = 1;
    }
    serde_json::json!({ "form": q }).to_string()
}

#[test]
fn timeouts_exit_two() {
    let g = temp_file("hard.json", &hard_form());
    let o = run(&["embed", g.to_str().unwrap(), "--json", "--max-seconds", "0.2"]);
    assert_eq!(o.status.code(), Some(EXIT_TIMEOUT as i32));
    assert_eq!(json(&o)["outcome"], "timeout");

    let o = bin()
        .env(seifert_fill_cli::MAX_SECONDS_ENV, "0.2")
        .args(["embed", g.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(EXIT_TIMEOUT as i32));
}

#[test]
fn invalid_input_exits_one() {
    for args in [
        vec!["classify", "-1;2/2"],
        vec!["classify", "-1;1/2,,1/3"],
        vec!["classify", "x;1/2"],
        vec!["cf", "-1/2"],
        vec!["dual", "-2,-1"],
        vec!["farey", "config3", "-1/2", "-3"],
        vec!["realizable", "-1;1/2"],
        vec!["witness", "-1;1/2,1/3,1/5"],
        vec!["embed", "/nonexistent/graph.json"],
        vec!["nonsense"],
        vec![],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(EXIT_INVALID_INPUT as i32), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&["classify", "-1;1/2,1/x"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 9"), "{err}");
    assert!(err.contains("\n           ^"), "{err}");
}

#[test]
fn parse_examples() {
    let v = json(&run(&["classify", "-1; 1/3 ,1/2", "--json"]));
    assert_eq!(v["manifold"], "-1;1/2,1/3");
}

#[test]
fn crosscheck_special_type() {
    let o = run(&["crosscheck", "-1;1/2,1/3,1/5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"]["reason"], "special_type");
    assert_eq!(v["embedding"]["outcome"], "no_embedding");
    assert_eq!(v["embedding"]["searched_rank"], 16);
    assert_eq!(v["agreement"], true);
    let v = json(&run(&["crosscheck", "-1;1/2,1/3,1/7", "--json"]));
    assert_eq!(v["verdict"]["fillable"], true);
    assert_eq!(v["embedding"], Value::Null);
}

#[test]
fn batch_preserves_order() {
    let lines = ["-1;1/2,1/3,1/5", "-1;1/2,1/3,1/7", "0;1/2", "-1;3/4,2/3,1/2", "-1;2/3,1/3,1/3"];
    let input: String = lines.iter().map(|l| format!("{l}\n")).collect();
    let o = run_stdin(&["batch"], &input);
    assert_eq!(o.status.code(), Some(0));
    let out: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let reasons: Vec<&str> = out.iter().map(|v| v["reason"].as_str().unwrap()).collect();
    assert_eq!(
        reasons,
        ["special_type", "realizable", "gompf_unconditional", "farey_witness", "pair_sum_automatic"]
    );
    let o = run_stdin(&["batch"], "-1;1/2,1/3,1/5\nbogus\n");
    assert_eq!(o.status.code(), Some(EXIT_INVALID_INPUT as i32));
    let out: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(out.len(), 2);
    assert_eq!(out[1]["input"], "bogus");
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
