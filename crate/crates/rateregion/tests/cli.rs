use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rateregion::{parse_channel, write_channel};
use rateregion_core::oracle::random_channel;
use rateregion_core::ChannelInstance;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rateregion"))
}

fn channel_file(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const CASE_II: &str = r#"{"n": 2, "gains": [[10, 1], [4, 10]], "noise_var": 1, "p_max": 1}"#;

#[test]
fn classify_writes_convexity_json() {
    let tmp = TempDir::new().unwrap();
    let input = channel_file(tmp.path(), "ch.json", CASE_II);
    let out = tmp.path().join("out");
    let res = run(&["classify", "--input", s(&input), "--out", s(&out)]);
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("convexity.json")).unwrap()).unwrap();
    assert_eq!(v["class_phi2"], "Inflection");
    assert_eq!(v["class_phi1"], "Concave");
    assert_eq!(v["tdm_optimal"], false);
    assert!(v["inflection_d"]["r1"].is_number());
}

#[test]
fn rates_out_of_range_exits_one_without_artifacts() {
    let tmp = TempDir::new().unwrap();
    let input = channel_file(tmp.path(), "ch.json", CASE_II);
    let out = tmp.path().join("out");
    let res = run(&[
        "rates",
        "--input",
        s(&input),
        "--out",
        s(&out),
        "--powers",
        "1.5,0.5",
    ]);
    assert_eq!(res.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&res.stderr).contains("outside"));
    assert!(!out.exists());
}

#[test]
fn rates_writes_csv() {
    let tmp = TempDir::new().unwrap();
    let input = channel_file(tmp.path(), "ch.json", CASE_II);
    let out = tmp.path().join("out");
    let res = run(&[
        "rates",
        "--input",
        s(&input),
        "--out",
        s(&out),
        "--powers",
        "1,1",
    ]);
    assert!(res.status.success());
    let text = fs::read_to_string(out.join("rates.csv")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "user,p,sinr,rate");
    // receiver 1: 10 / (1 + 1), receiver 2: 10 / (1 + 4)
    let sinr1: f64 = lines[1].split(',').nth(2).unwrap().parse().unwrap();
    let sinr2: f64 = lines[2].split(',').nth(2).unwrap().parse().unwrap();
    assert_eq!((sinr1, sinr2), (5.0, 2.0));
}

#[test]
fn malformed_file_exits_two_with_position() {
    let tmp = TempDir::new().unwrap();
    let input = channel_file(
        tmp.path(),
        "ch.json",
        "{\n  \"n\": 2,\n  \"gains\": [[1, 2], [3]],\n  \"noise_var\": 1,\n  \"p_max\": 1\n}\n",
    );
    let res = run(&["classify", "--input", s(&input), "--out", s(tmp.path())]);
    assert_eq!(res.status.code(), Some(2));
    let err = String::from_utf8_lossy(&res.stderr);
    assert!(err.contains("line 3") && err.contains("gains"), "{err}");

    let missing = tmp.path().join("nope.json");
    let res = run(&["classify", "--input", s(&missing)]);
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn three_user_file_is_a_domain_error_for_classify() {
    let tmp = TempDir::new().unwrap();
    let input = channel_file(
        tmp.path(),
        "ch.json",
        r#"{"n":3,"gains":[[1,0.1,0.1],[0.1,1,0.1],[0.1,0.1,1]],"noise_var":1,"p_max":1}"#,
    );
    let out = tmp.path().join("out");
    let res = run(&["classify", "--input", s(&input), "--out", s(&out)]);
    assert_eq!(res.status.code(), Some(1));
    assert!(!out.exists());
}

#[test]
fn sweep_reports_small_gap() {
    let tmp = TempDir::new().unwrap();
    let res = run(&[
        "sweep",
        "--a",
        "1",
        "--pmax",
        "1",
        "--b-db",
        "-20:0:0.5",
        "--out",
        s(tmp.path()),
    ]);
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let text = fs::read_to_string(tmp.path().join("gap_report.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("b_db,area_pc,area_crystal,max_gap_pct,gap_argmax_r1")
    );
    let gaps: Vec<f64> = lines
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(gaps.len(), 41);
    assert!(gaps.iter().cloned().fold(0.0, f64::max) <= 1.5);
}

#[test]
fn crystallize_svg_for_tdm_channel_is_a_single_segment() {
    let tmp = TempDir::new().unwrap();
    let input = channel_file(
        tmp.path(),
        "ch.json",
        r#"{"n":2,"gains":[[1,3],[3,1]],"noise_var":1,"p_max":1}"#,
    );
    let res = run(&[
        "crystallize",
        "--input",
        s(&input),
        "--out",
        s(tmp.path()),
        "--format",
        "svg",
    ]);
    assert!(res.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("hull.json")).unwrap()).unwrap();
    let verts = v["boundary"]["vertices"].as_array().unwrap();
    let corners: Vec<_> = verts.iter().map(|x| x["corner"].clone()).collect();
    assert_eq!(corners, vec![serde_json::json!(2), serde_json::json!(1)]);
    let svg = fs::read_to_string(tmp.path().join("region.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("crystallized"));
}

#[test]
fn decompose_and_surface_artifacts() {
    let tmp = TempDir::new().unwrap();
    let input = channel_file(
        tmp.path(),
        "ch.json",
        r#"{"n":3,"gains":[[1,0.2,0.2],[0.2,1,0.2],[0.2,0.2,1]],"noise_var":1,"p_max":1}"#,
    );
    let res = run(&[
        "decompose",
        "--input",
        s(&input),
        "--out",
        s(tmp.path()),
        "--target",
        "0.3,0.3,0.3",
    ]);
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let theta = fs::read_to_string(tmp.path().join("theta.csv")).unwrap();
    assert_eq!(theta.lines().count(), 8);
    let total: f64 = theta
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap().parse::<f64>().unwrap())
        .sum();
    assert!((total - 1.0).abs() < 1e-12);

    let res = run(&[
        "surface",
        "--input",
        s(&input),
        "--out",
        s(tmp.path()),
        "--index",
        "2",
        "--grid",
        "5",
    ]);
    assert!(res.status.success());
    let surf = fs::read_to_string(tmp.path().join("surface.csv")).unwrap();
    assert_eq!(surf.lines().next(), Some("p1,p2,p3,r1,r2,r3"));
    assert_eq!(surf.lines().count(), 26);
    let geo: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("geometry.json")).unwrap())
            .unwrap();
    assert_eq!(geo["n"], 3);
    assert!(geo["ob"].as_f64().unwrap() > geo["obprime"].as_f64().unwrap());

    let res = run(&[
        "decompose",
        "--input",
        s(&input),
        "--out",
        s(tmp.path()),
        "--target",
        "5,5,5",
    ]);
    assert_eq!(res.status.code(), Some(1));
}

#[test]
fn channel_files_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(1..=5);
        let ch = random_channel(&mut rng, n).unwrap();
        let scaled =
            ChannelInstance::new(ch.gain_rows(), rng.gen_range(0.01..10.0), ch.p_max()).unwrap();
        assert_eq!(parse_channel(&write_channel(&scaled)).unwrap(), scaled);
    }
}

#[test]
fn db_units_match_linear_file() {
    let tmp = TempDir::new().unwrap();
    let lin = channel_file(
        tmp.path(),
        "lin.json",
        r#"{"n":2,"gains":[[10,1],[1,10]],"noise_var":1,"p_max":1}"#,
    );
    let db = channel_file(
        tmp.path(),
        "db.json",
        r#"{"n":2,"gains":[[10,0],[0,10]],"units":"dB","noise_var":1,"p_max":1}"#,
    );
    let a = tmp.path().join("a");
    let b = tmp.path().join("b");
    assert!(run(&[
        "rates",
        "--input",
        s(&lin),
        "--out",
        s(&a),
        "--powers",
        "1,1"
    ])
    .status
    .success());
    assert!(run(&[
        "rates",
        "--input",
        s(&db),
        "--out",
        s(&b),
        "--powers",
        "1,1"
    ])
    .status
    .success());
    assert_eq!(
        fs::read_to_string(a.join("rates.csv")).unwrap(),
        fs::read_to_string(b.join("rates.csv")).unwrap()
    );
}
