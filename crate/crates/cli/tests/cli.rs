use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn polyloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyloc")).args(args).output().expect("binary runs")
}

fn input(json: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

const DETACHED: &str = r#"{"coeffs": [[1,0],[0,-2],[3,4],[3,1],[-2,-1],[0,2],[2,1]]}"#;

#[test]
fn bounds_all_methods_dominate_the_oracle() {
    let f = input(DETACHED);
    let v = json(&polyloc(&["bounds", "--method", "all", "--input", path(&f)]));
    let bounds = v["bounds"].as_array().unwrap();
    assert_eq!(bounds.len(), 4);
    let maxmod = v["oracle"]["max_modulus"].as_f64().unwrap();
    for b in bounds {
        assert!(b["bound"].as_f64().unwrap() >= maxmod * (1.0 - 1e-9));
    }
}

#[test]
fn cauchy_bound_of_a_quadratic() {
    // z^2 - 1: Cauchy polynomial x^2 - 1, root 1
    let f = input(r#"{"coeffs": [[1,0],[0,0],[-1,0]]}"#);
    let v = json(&polyloc(&["bounds", "--method", "cauchy", "--input", path(&f)]));
    assert_eq!(v["bounds"][0]["method"], "cauchy");
    assert!((v["bounds"][0]["bound"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn lower_bounds_stay_below_the_smallest_zero() {
    let f = input(DETACHED);
    let v = json(&polyloc(&["bounds", "--input", path(&f), "--lower"]));
    let minmod = v["oracle"]["min_modulus"].as_f64().unwrap();
    for b in v["bounds"].as_array().unwrap() {
        assert_eq!(b["lower"], true);
        assert!(b["bound"].as_f64().unwrap() <= minmod * (1.0 + 1e-9));
    }
}

#[test]
fn isolate_tgp_detaches_one_square() {
    let f = input(DETACHED);
    let v = json(&polyloc(&["isolate", "--method", "tgp", "--input", path(&f), "--enhance"]));
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries[0]["report"]["case"], "a2_second");
    assert_eq!(entries[1]["method"], "tgp-enhanced");
    let iv = &entries[1]["report"]["intervals"];
    let u_star = iv["u_star"].as_f64().unwrap();
    assert!(iv["i2"]["x1"].as_f64().unwrap() < u_star && u_star <= iv["i2"]["x2"].as_f64().unwrap());
}

#[test]
fn isolate_closed_form_example() {
    let f = input(r#"{"coeffs": [[1,0],[0,0],[10,0],[0,0],[0.5,0]]}"#);
    let v = json(&polyloc(&["isolate", "--method", "matrix-pellet", "--input", path(&f), "--k", "1"]));
    let e = &v["entries"][0];
    assert_eq!(e["k"], 1);
    let counts: Vec<u64> = e["counts_for_original"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).collect();
    assert_eq!(counts, [2, 2]);
    let x1 = e["report"]["intervals"]["k1"]["x1"].as_f64().unwrap();
    assert!((x1 - (10.0 - 98f64.sqrt()) / 2.0).abs() < 1e-12);
}

#[test]
fn odd_degree_counts_exclude_the_padding_zero() {
    let f = input(r#"{"coeffs": [[1,0],[2,0],[8,0],[2,0],[1,-1],[0.5,0],[0,1]]}"#);
    let v = json(&polyloc(&["isolate", "--method", "all", "--input", path(&f)]));
    assert_eq!(v["degree"], 6);
    for e in v["entries"].as_array().unwrap() {
        if let Some(counts) = e["counts_for_original"].as_array() {
            let total: u64 = counts.iter().map(|c| c.as_u64().unwrap()).sum();
            assert_eq!(total, 6, "{e}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let f = input(DETACHED);
    let a = polyloc(&["isolate", "--input", path(&f)]);
    let b = polyloc(&["isolate", "--input", path(&f)]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let a = polyloc(&["bench", "--set", "4", "--count", "20", "--seed", "7", "--table", "2"]);
    let b = polyloc(&["bench", "--set", "4", "--count", "20", "--seed", "7", "--table", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bench_table2_shape() {
    let v = json(&polyloc(&["bench", "--set", "4", "--count", "30", "--seed", "7", "--table", "2"]));
    assert_eq!(v["set_id"], 4);
    assert_eq!(v["count"], 30);
    assert_eq!(v["seed"], 7);
    let t = &v["tmgp"];
    let total = ["two_separate", "two_joint", "one"].iter().map(|k| t[k].as_u64().unwrap()).sum::<u64>();
    assert!(total <= 30);
}

#[test]
fn bench_both_tables_by_default() {
    let v = json(&polyloc(&["bench", "--set", "1", "--count", "5"]));
    assert_eq!(v["table1"]["methods"].as_array().unwrap().len(), 4);
    assert_eq!(v["table2"]["seed"], 0);
}

#[test]
fn usage_and_input_errors_exit_with_2() {
    assert_eq!(polyloc(&["bench", "--set", "5"]).status.code(), Some(2));
    assert_eq!(polyloc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(polyloc(&["bounds", "--input", "/nonexistent/p.json"]).status.code(), Some(2));
    let bad = input(r#"{"coeffs": [[0,0],[1,0]]}"#);
    let out = polyloc(&["bounds", "--input", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let garbage = input("not json");
    assert_eq!(polyloc(&["isolate", "--input", path(&garbage)]).status.code(), Some(2));
    let f = input(DETACHED);
    assert_eq!(polyloc(&["isolate", "--method", "pellet", "--k", "9", "--input", path(&f)]).status.code(), Some(2));
    assert_eq!(polyloc(&["bounds", "--tol", "0", "--input", path(&f)]).status.code(), Some(2));
}

fn plot(args: &[&str]) -> String {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig.svg");
    let mut all: Vec<&str> = vec!["plot", "--out", out.to_str().unwrap()];
    all.extend(args);
    let res = polyloc(&all);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    read(&out)
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn plot_has_one_detached_disc() {
    let f = input(DETACHED);
    let svg = plot(&["--input", path(&f)]);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert!(svg.contains(r#"viewBox="0 0 800 800""#));
    assert_eq!(svg.matches(r#"class="region isolated""#).count(), 1);
    assert_eq!(svg.matches(r#"class="root""#).count(), 6);
}

#[test]
fn plot_z_plane_draws_cassini_loops() {
    let f = input(DETACHED);
    let svg = plot(&["--input", path(&f), "--plane", "z"]);
    // a disc away from the origin pulls back to two mirrored loops
    assert_eq!(svg.matches(r#"class="region isolated""#).count(), 2);
    let f = input(r#"{"coeffs": [[1,0],[0,0],[10,0],[0,0],[0.5,0]]}"#);
    let svg = plot(&["--input", path(&f), "--method", "tmgp", "--plane", "z"]);
    assert_eq!(svg.matches(r#"class="root""#).count(), 4);
    assert_eq!(svg.matches(r#"class="gap""#).count(), 2);
}
