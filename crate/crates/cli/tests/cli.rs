use std::process::{Command, Output};

use serde_json::Value;

const CUBIC: [&str; 6] = ["--minpoly", "-2,-4,-3,1", "--iso", "4,5", "--l", "-1/2"];
const TWO: [&str; 6] = ["--minpoly", "-2,1", "--iso", "1,3", "--l", "-1/2"];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negbase"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with(base: &[&str], args: &[&str]) -> Vec<String> {
    args.iter().chain(base).map(|s| s.to_string()).collect()
}

fn stdout(args: &[String]) -> String {
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let out = run(&args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn error(args: &[String]) -> (i32, Value) {
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let out = run(&args);
    assert!(!out.status.success());
    let record = serde_json::from_slice(&out.stderr).expect("JSON error record");
    (out.status.code().unwrap(), record)
}

#[test]
fn expand_and_refstrings() {
    assert_eq!(stdout(&with(&CUBIC, &["expand", "--x", "-1/2"])), "2,0|1");
    assert_eq!(stdout(&with(&CUBIC, &["expand", "--x", "0"])), "|0");
    assert_eq!(stdout(&with(&CUBIC, &["refstrings"])), "d(l) = 2,0|1\nd*(l+1) = -2,0|-1");
    let v: Value = serde_json::from_str(&stdout(&with(&CUBIC, &["refstrings", "--format", "json"]))).unwrap();
    assert_eq!(v["right"]["string"], "-2,0|-1");
    assert_eq!(v["right"]["kind"], "Periodic");
    assert_eq!(stdout(&with(&CUBIC, &["--overline", "expand", "--x", "-1/2"])), "20(1)^w");
}

#[test]
fn alphabet_and_windows() {
    assert_eq!(stdout(&with(&CUBIC, &["alphabet"])), "-2,-1,0,1,2");
    assert_eq!(stdout(&with(&TWO, &["alphabet"])), "-1,0,1");
    let v: Value = serde_json::from_str(&stdout(&with(&CUBIC, &["window-check", "--format", "json"]))).unwrap();
    assert_eq!(v["unique_expansions"], true);
    assert_eq!(v["renyi_alphabet"], false);
}

#[test]
fn admissibility_reports_the_failing_shift() {
    assert_eq!(stdout(&with(&CUBIC, &["admissible", "|0"])), "|0: admissible");
    let v: Value = serde_json::from_str(&stdout(&with(&CUBIC, &["admissible", "1,2,-1|0", "--format", "json"]))).unwrap();
    assert_eq!(v["admissible"], false);
    assert_eq!(v["violation"]["bound"], "left");
    assert_eq!(v["violation"]["shift"], 2);
}

#[test]
fn example_one_representations() {
    let base = ["--minpoly", "-1,-2,1", "--iso", "2,3", "--l", "-b^9/(b^9+1)"];
    let out = stdout(&with(&base, &["representations", "--x", "1", "--max-k", "9"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "1.|0",
            "1,2,0.|0",
            "1,3,2,1,0.|0",
            "1,3,2,2,2,1,0.|0",
            "1,3,2,2,2,2,2,1,0.|0",
            "x/(-beta)^k in [l, l+1) for k in {1,3,5,7,9}"
        ]
    );
}

#[test]
fn integer_base_window() {
    let out = stdout(&with(&TWO, &["zbeta", "--bound", "4"]));
    let values: Vec<&str> = out.lines().map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(values, ["-4", "-3", "-2", "-1", "0", "1", "2", "3", "4"]);
    let json = stdout(&with(&TWO, &["zbeta", "--bound", "4", "--format", "json"]));
    let records: Vec<Value> = json.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 9);
    assert_eq!(records[0]["gap_to_next_exact"], serde_json::json!(["1"]));
    assert!(records[8]["gap_to_next_exact"].is_null());
}

#[test]
fn distances_and_minmax() {
    let out = stdout(&with(&CUBIC, &["distances", "--k", "0..3"]));
    assert!(out.starts_with("Delta_0 = 1 ~ 1.000000000000\nDelta_1 = -4 + b ~ 0.0958"), "{out}");
    let v: Value = serde_json::from_str(&stdout(&with(&CUBIC, &["minmax", "--k", "4", "--format", "json"]))).unwrap();
    assert_eq!(v[0]["min"], serde_json::json!([2, 0, 1, 1]));
    assert_eq!(v[0]["max"], serde_json::json!([-2, 0, -1, -1]));
}

#[test]
fn morphism_with_projection() {
    let out = stdout(&with(&CUBIC, &["morphism", "--letter-budget", "5", "--project", "--format", "json"]));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["table"]["3"], serde_json::json!([0, 0, 1, 0, 4, 0, 1, 0, 0]));
    assert_eq!(v["table"]["antimorphism"], true);
    let p = &v["projection"];
    assert_eq!(p["found"], true);
    assert_eq!(p["projection"]["alphabet"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(p["projection"]["phi"]["3"], serde_json::json!([0, 0, 1, 0, 2, 0, 1, 0, 0]));
}

#[test]
fn word_fixed_point_and_plot_data() {
    let out = stdout(&with(&CUBIC, &["word", "--bound", "30", "--horizon", "20"]));
    assert!(out.ends_with("fixed point on horizon 20: true"), "{out}");
    let plot = stdout(&with(&CUBIC, &["word", "--bound", "5", "--plot-data"]));
    let mut lines = plot.lines();
    assert_eq!(lines.next(), Some("# n\tz_n\tgap\tlabel"));
    assert!(lines.all(|l| l.split('\t').count() == 4));
}

#[test]
fn base_file() {
    let path = std::env::temp_dir().join(format!("negbase-base-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"minpoly":["-2","-4","-3","1"],"iso":["4","5"],"l":["-1/2","0","0"]}"#).unwrap();
    let args = vec!["expand".to_string(), "--x".into(), "-1/2".into(), "--base".into(), path.display().to_string()];
    assert_eq!(stdout(&args), "2,0|1");
    std::fs::remove_file(path).ok();
}

#[test]
fn errors_have_distinct_codes() {
    let (code, rec) = error(&with(&CUBIC, &["expand", "--x", "1"]));
    assert_eq!((code, rec["error"].as_str().unwrap()), (11, "OutOfDomain"));
    let (code, rec) = error(&with(&CUBIC, &["expand", "--x", "b +"]));
    assert_eq!((code, rec["error"].as_str().unwrap()), (2, "Parse"));
    let (code, _) = error(&["expand".into(), "--x".into(), "0".into()]);
    assert_eq!(code, 21);
    let (code, _) = error(&with(&["--minpoly", "-1,0,1", "--iso", "0,2", "--l", "-1/2"], &["alphabet"]));
    assert_eq!(code, 4);
    let non_pisot = ["--minpoly", "-3,-1,1", "--iso", "2,3", "--l", "-1/2"];
    // a prefix is reported, never a guessed period
    assert!(stdout(&with(&non_pisot, &["refstrings", "--max-iter", "30"])).contains(",..."));
    let (code, rec) = error(&with(&non_pisot, &["zbeta", "--max-iter", "30"]));
    assert_eq!((code, rec["error"].as_str().unwrap()), (12, "RefsNotPeriodic"));
    let ex1 = ["--minpoly", "-1,-2,1", "--iso", "2,3", "--l", "-b^9/(b^9+1)"];
    let (code, _) = error(&with(&ex1, &["zbeta", "--max-iter", "500"]));
    assert_eq!(code, 13);
}

#[test]
fn output_is_deterministic() {
    let args = with(&CUBIC, &["zbeta", "--bound", "12", "--format", "json"]);
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn help_lists_exit_codes() {
    let out = run(&["--help"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Exit codes:") && text.contains("12  reference strings not periodic"));
}
