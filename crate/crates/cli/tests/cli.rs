use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

const TABLE: [[f64; 2]; 5] = [
    [2.4, 5.30978783787819],
    [4.8, 10.63618822212100],
    [7.2, 16.02129849868130],
    [9.6, 21.46863534179760],
    [12.0, 26.96464966481510],
];
const TRUTH: [f64; 2] = [2.383936, 2.21235876];

fn base() -> Value {
    json!({
        "schema_version": 1,
        "seed": 5,
        "geometry": { "radii": [1.0] },
        "truth": { "layers": [TRUTH[0]], "cladding": TRUTH[1] },
        "measurements": { "source": "inline", "pairs_squared": TABLE },
        "forward": { "k_squared": [2.4, 4.8, 7.2, 9.6, 12.0] },
        "tikhonov": { "alpha": 0.01, "starts": 8 }
    })
}

fn run(cmd: &str, cfg: &Value, dir: &Path, tag: &str) -> (i32, PathBuf) {
    let path = dir.join(format!("{tag}.json"));
    fs::write(&path, serde_json::to_string_pretty(cfg).unwrap()).unwrap();
    let out = dir.join(tag);
    let code = fiberspec::run([
        "fiberspec",
        cmd,
        "--config",
        path.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--quiet",
    ]);
    (code, out)
}

fn rows(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let body = lines.map(|l| l.split(',').map(|f| f.parse().unwrap()).collect()).collect();
    (header, body)
}

fn summary(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn forward_reproduces_the_table() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = run("forward", &base(), dir.path(), "fwd");
    assert_eq!(code, 0);
    let (header, body) = rows(&out.join("dispersion.csv"));
    assert_eq!(header, ["i", "k_squared", "beta_squared", "residual"]);
    assert_eq!(body.len(), 5);
    for (row, want) in body.iter().zip(TABLE) {
        assert!((row[2] - want[1]).abs() / want[1] < 1e-6, "{row:?}");
    }
    // the CSV carries the exact doubles reported in the summary
    let s = summary(&out.join("forward.json"));
    for (row, j) in body.iter().zip(s["results"]["rows"].as_array().unwrap()) {
        assert_eq!(row[2], j["beta_squared"].as_f64().unwrap());
        assert_eq!(row[1], j["k_squared"].as_f64().unwrap());
    }
    assert_eq!(s["command"], "forward");
    assert_eq!(s["config"]["schema_version"], 1);
    assert!(!s["version"].as_str().unwrap().is_empty());
}

#[test]
fn forward_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = base();
    cfg["forward"]["k_squared"] = json!([]);
    let (code, out) = run("forward", &cfg, dir.path(), "empty");
    assert_eq!(code, 0);
    assert_eq!(fs::read_to_string(out.join("dispersion.csv")).unwrap(), "i,k_squared,beta_squared,residual\n");

    let mut cfg = base();
    cfg["truth"] = json!({ "layers": [2.0], "cladding": 2.2 });
    assert_eq!(run("forward", &cfg, dir.path(), "inverted").0, 2);
}

#[test]
fn config_validation() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = base();
    cfg["schema_version"] = json!(2);
    assert_eq!(run("forward", &cfg, dir.path(), "schema").0, 2);

    let mut cfg = base();
    cfg["bogus"] = json!(1);
    assert_eq!(run("forward", &cfg, dir.path(), "unknown").0, 2);

    let mut cfg = base();
    cfg.as_object_mut().unwrap().remove("seed");
    cfg["noise"] = json!({ "level": 0.05 });
    assert_eq!(run("reconstruct", &cfg, dir.path(), "seedless").0, 2);

    let mut cfg = base();
    cfg["noise"] = json!({ "level": 1.5 });
    assert_eq!(run("reconstruct", &cfg, dir.path(), "level").0, 2);

    let missing = fiberspec::run(["fiberspec", "forward", "--config", "/nonexistent.json", "--out", "/tmp/x"]);
    assert_eq!(missing, 2);
    assert_eq!(fiberspec::run(["fiberspec", "frobnicate"]), 2);
}

#[test]
fn noise_free_reconstruction() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = run("reconstruct", &base(), dir.path(), "clean");
    assert_eq!(code, 0);
    let (header, body) = rows(&out.join("reconstruct.csv"));
    assert_eq!(header, ["eps0_guess", "eps_alpha_core", "eps_alpha_cladding", "e"]);
    assert_eq!(body.len(), 1);
    assert!(body[0][3] <= 1e-3, "{body:?}");
    assert!((body[0][0] - 2.21241159911591).abs() < 1e-12);
}

#[test]
fn forward_output_round_trips_into_reconstruction() {
    let dir = tempfile::tempdir().unwrap();
    let (code, fwd) = run("forward", &base(), dir.path(), "fwd");
    assert_eq!(code, 0);
    let mut cfg = base();
    cfg["measurements"] = json!({ "source": "csv", "path": fwd.join("dispersion.csv") });
    let (code, out) = run("reconstruct", &cfg, dir.path(), "rt");
    assert_eq!(code, 0);
    let (_, body) = rows(&out.join("reconstruct.csv"));
    assert!(body[0][3] <= 1e-3);

    let mut cfg = base();
    cfg["measurements"] = json!({ "source": "forward", "k_squared": [2.4, 4.8, 7.2, 9.6, 12.0] });
    let (code, out) = run("reconstruct", &cfg, dir.path(), "gen");
    assert_eq!(code, 0);
    assert!(rows(&out.join("reconstruct.csv")).1[0][3] <= 1e-3);
}

#[test]
fn five_percent_trials() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = base();
    cfg["noise"] = json!({ "level": 0.05, "trials": 10, "target": "beta_squared", "sharing": "common" });
    cfg["tikhonov"]["starts"] = json!(32);
    let (code, out) = run("reconstruct", &cfg, dir.path(), "p5");
    assert_eq!(code, 0);
    let (_, body) = rows(&out.join("reconstruct.csv"));
    assert_eq!(body.len(), 10);
    for r in &body {
        assert!(r[3] <= 0.05, "{r:?}");
    }
    let s = summary(&out.join("reconstruct.json"));
    let max = s["results"]["aggregate"]["max_e"].as_f64().unwrap();
    assert_eq!(max, body.iter().map(|r| r[3]).fold(0.0, f64::max));
}

#[test]
fn exhausted_budget_exits_with_numerical_failure() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = base();
    cfg["tikhonov"]["max_evals"] = json!(5);
    cfg["tikhonov"]["max_restarts"] = json!(0);
    let (code, out) = run("reconstruct", &cfg, dir.path(), "budget");
    assert_eq!(code, 3);
    assert_eq!(rows(&out.join("reconstruct.csv")).1.len(), 1);
    assert_eq!(summary(&out.join("reconstruct.json"))["results"]["aggregate"]["unconverged"], 1);
}

#[test]
fn landscape_grid() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = base();
    cfg["landscape"] = json!({ "eps1": [2.3, 2.45], "eps_e": [2.15, 2.27], "resolution": [31, 25] });
    let (code, out) = run("landscape", &cfg, dir.path(), "grid");
    assert_eq!(code, 0);
    let (header, body) = rows(&out.join("landscape.csv"));
    assert_eq!(header, ["eps1", "eps_e", "value"]);
    assert_eq!(body.len(), 31 * 25);
    let best = body.iter().filter(|r| r[2].is_finite()).min_by(|a, b| a[2].total_cmp(&b[2])).unwrap();
    // the best cell neighbours the cell nearest to the exact point
    assert!((best[0] - TRUTH[0]).abs() <= 1.5 * 0.005 && (best[1] - TRUTH[1]).abs() <= 1.5 * 0.005, "{best:?}");
    let svg = fs::read_to_string(out.join("landscape.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<title>exact</title>"));

    cfg["landscape"] = json!({ "eps1": [2.0, 2.1], "eps_e": [2.2, 2.4], "resolution": [2, 2] });
    let (code, out) = run("landscape", &cfg, dir.path(), "masked");
    assert_eq!(code, 0);
    let (_, body) = rows(&out.join("landscape.csv"));
    assert_eq!(body.len(), 4);
    assert!(body.iter().all(|r| r[2].is_nan()));
    assert_eq!(summary(&out.join("landscape.json"))["results"]["masked"], 4);
}

#[test]
fn landscape_refuses_several_layers() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = base();
    cfg["geometry"] = json!({ "radii": [0.5, 1.0] });
    cfg["truth"] = json!({ "layers": [2.4, 2.3], "cladding": 2.2 });
    assert_eq!(run("landscape", &cfg, dir.path(), "two").0, 2);
}

#[test]
fn sweep_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = base();
    cfg["noise"] = json!({ "levels": [0.0], "trials": 3 });
    let (code, out) = run("noise-sweep", &cfg, dir.path(), "clean");
    assert_eq!(code, 0);
    let (header, body) = rows(&out.join("sweep.csv"));
    assert_eq!(header[..2], ["p", "trial"]);
    assert_eq!(body.len(), 3);
    assert!(body.iter().all(|r| r[2..] == body[0][2..]));
    let (_, stats) = rows(&out.join("sweep_stats.csv"));
    assert_eq!(stats.len(), 1);

    cfg["noise"]["trials"] = json!(0);
    let (code, out) = run("noise-sweep", &cfg, dir.path(), "none");
    assert_eq!(code, 0);
    assert_eq!(rows(&out.join("sweep.csv")).1.len(), 0);
}

#[test]
fn calibration_recovers_unit_radius() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = base();
    cfg["calibration"] = json!({ "row": TABLE[0] });
    let (code, out) = run("calibrate-radius", &cfg, dir.path(), "cal");
    assert_eq!(code, 0);
    let s = summary(&out.join("calibration.json"));
    let r = &s["results"];
    assert!((r["radius"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    assert!(r["misfit"].as_f64().unwrap().abs() <= 1e-10);
    assert!(r["max_relative_error"].as_f64().unwrap() <= 1e-6);

    cfg["calibration"]["radius_range"] = json!([1.5, 2.0]);
    assert_eq!(run("calibrate-radius", &cfg, dir.path(), "nosign").0, 3);
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = base();
    cfg["noise"] = json!({ "level": 0.05, "levels": [0.05], "trials": 2 });
    cfg["landscape"] = json!({ "resolution": [12, 10] });
    for cmd in ["forward", "reconstruct", "landscape", "noise-sweep"] {
        let (a, out_a) = run(cmd, &cfg, dir.path(), &format!("{cmd}-a"));
        let (b, out_b) = run(cmd, &cfg, dir.path(), &format!("{cmd}-b"));
        assert_eq!((a, b), (0, 0));
        for entry in fs::read_dir(&out_a).unwrap() {
            let name = entry.unwrap().file_name();
            let x = fs::read(out_a.join(&name)).unwrap();
            let y = fs::read(out_b.join(&name)).unwrap();
            assert!(x == y, "{cmd}: {name:?}");
        }
    }
}

#[test]
fn seed_flag_overrides_config() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = base();
    cfg["noise"] = json!({ "level": 0.05 });
    let path = dir.path().join("cfg.json");
    fs::write(&path, cfg.to_string()).unwrap();
    let go = |seed: &str, tag: &str| {
        let out = dir.path().join(tag);
        let code = fiberspec::run(["fiberspec", "reconstruct", "--config", path.to_str().unwrap(), "--out", out.to_str().unwrap(), "--seed", seed, "--quiet"]);
        assert_eq!(code, 0);
        (fs::read(out.join("reconstruct.csv")).unwrap(), summary(&out.join("reconstruct.json")))
    };
    let (a, sa) = go("5", "a");
    let (b, _) = go("6", "b");
    assert_ne!(a, b);
    assert_eq!(sa["results"]["seed"], 5);
    assert_eq!(go("6", "c").0, b);
}
