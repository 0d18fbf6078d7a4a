use std::path::Path;
use std::process::{Command, Output};

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_likeiper"))
        .args(args)
        .arg("--cache")
        .arg(cache)
        .env_remove("LIKEIPER_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

/// Significant digits of a rendered number: mantissa digits after leading zeros.
fn significant(s: &str) -> usize {
    let mantissa = s.trim_start_matches('-').split('e').next().unwrap();
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let trimmed = digits.trim_start_matches('0');
    if trimmed.is_empty() {
        digits.len()
    } else {
        trimmed.len()
    }
}

#[test]
fn default_verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&dir.path().join("c.txt"), &["verify", "--format", "csv"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = csv_rows(&stdout(&out));
    assert!(rows.len() > 10);
    assert!(rows.iter().all(|r| r[1] == "pass"));
}

#[test]
fn low_precision_is_a_precision_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&dir.path().join("c.txt"), &["--digits", "30", "--order", "40", "verify"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ceil(order * log10 2)"));
}

#[test]
fn tampered_cache_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.txt");
    assert!(run(&cache, &["xi", "--order", "5"]).status.success());
    let text = std::fs::read_to_string(&cache).unwrap();
    let line = text.lines().nth(2).unwrap();
    let pos = text.find(line).unwrap() + line.len() - 3;
    let mut bytes = text.into_bytes();
    bytes[pos] = if bytes[pos] == b'1' { b'2' } else { b'1' };
    std::fs::write(&cache, bytes).unwrap();
    let out = run(&cache, &["xi", "--order", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("checksum"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.txt");
    assert_eq!(run(&cache, &["constant", "--route", "nope"]).status.code(), Some(2));
    assert_eq!(run(&cache, &["--order", "10", "--max-n", "11", "table"]).status.code(), Some(2));
    assert_eq!(run(&cache, &["partitions", "--n", "41"]).status.code(), Some(2));
}

#[test]
fn table_rows_for_eight_and_nine() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&dir.path().join("c.txt"), &["--max-n", "10", "--format", "csv", "table"]);
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 10);
    let nine = &rows[8];
    assert_eq!(nine[0], "9");
    assert!(nine[2].starts_with("1.85091604838"), "{}", nine[2]);
    let (lower, lambda, upper): (f64, f64, f64) =
        (nine[3].parse().unwrap(), nine[2].parse().unwrap(), nine[4].parse().unwrap());
    assert!(lower < lambda && lambda < upper);
    assert!(nine[3].starts_with("1.8334010001"));
    assert!(rows[7][1].starts_with("0.20603491"), "{}", rows[7][1]);
}

#[test]
fn csv_and_json_carry_identical_strings() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.txt");
    let csv_out = stdout(&run(&cache, &["--format", "csv", "--max-n", "6", "table", "--curves"]));
    let json_out = stdout(&run(&cache, &["--format", "json", "--max-n", "6", "table", "--curves"]));
    let doc: serde_json::Value = serde_json::from_str(&json_out).unwrap();
    assert_eq!(doc["config"]["digits"], 60);
    let mut reader = csv::Reader::from_reader(csv_out.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(str::to_string).collect();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.unwrap();
        for (col, value) in header.iter().zip(rec.iter()) {
            assert_eq!(doc["rows"][i][col], value, "row {i} column {col}");
        }
    }
}

#[test]
fn output_is_deterministic_and_uses_fixed_significance() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.txt");
    let args = ["--format", "csv", "--max-n", "12", "table"];
    let cold = run(&cache, &args);
    let warm = run(&cache, &args);
    assert_eq!(cold.stdout, warm.stdout);
    let other = tempfile::tempdir().unwrap();
    let no_cache = Command::new(env!("CARGO_BIN_EXE_likeiper"))
        .args(args)
        .arg("--no-cache")
        .env("LIKEIPER_CACHE", other.path().join("unused.txt"))
        .output()
        .unwrap();
    assert_eq!(cold.stdout, no_cache.stdout);
    assert!(!other.path().join("unused.txt").exists());

    for row in csv_rows(&stdout(&cold)) {
        for value in &row[1..9] {
            assert_eq!(significant(value), 30, "{value}");
        }
    }
    let out = run(&cache, &["--digits", "35", "--order", "10", "--format", "csv", "xi"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    for row in csv_rows(&stdout(&out)) {
        assert_eq!(significant(&row[1]), 25, "{}", row[1]);
    }
}

#[test]
fn constant_routes() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.txt");
    let field = |args: &[&str], name: &str| -> String {
        let out = run(&cache, args);
        assert!(out.status.success());
        csv_rows(&stdout(&out)).into_iter().find(|r| r[0] == name).unwrap()[1].clone()
    };
    assert!(field(&["--format", "csv", "constant"], "value").starts_with("0.072325988"));
    let lambda15 = field(&["--format", "csv", "constant", "--route", "lambda", "--terms", "15"], "value");
    assert!(lambda15.starts_with("0.07222273"), "{lambda15}");
    let split = ["--format", "csv", "constant", "--route", "split"];
    let part = |name: &str| field(&split, name).parse::<f64>().unwrap();
    assert!((part("archimedean_part") + 0.3780098064).abs() < 1e-10);
    assert!((part("zeta_part") - 0.4503357950).abs() < 1e-10);
    let gap: f64 = field(&["--format", "csv", "constant", "--route", "binary"], "gap_to_exact")
        .parse()
        .unwrap();
    assert!(gap.abs() < 3e-4);
}

#[test]
fn partitions_of_six() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&dir.path().join("c.txt"), &["--format", "csv", "partitions", "--n", "6"]);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 11);
    let weight = |p: &str| rows.iter().find(|r| r[0] == p).unwrap()[2].clone();
    assert_eq!(weight("(4, 2)"), "6");
    assert_eq!(weight("(3, 3)"), "3");
    assert_eq!(weight("(3, 2, 1)"), "12");
    assert_eq!(weight("(2, 2, 1, 1)"), "9");
}

#[test]
fn cache_path_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let env_path = dir.path().join("env.txt");
    let flag_path = dir.path().join("flag.txt");
    let base = || {
        let mut c = Command::new(env!("CARGO_BIN_EXE_likeiper"));
        c.args(["xi", "--order", "3"]).env("LIKEIPER_CACHE", &env_path);
        c
    };
    assert!(base().output().unwrap().status.success());
    assert!(env_path.exists());
    std::fs::remove_file(&env_path).unwrap();
    assert!(base().arg("--cache").arg(&flag_path).output().unwrap().status.success());
    assert!(flag_path.exists());
    assert!(!env_path.exists());
}
