mod common;

use common::*;
use cylindre::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;

fn json_lines(s: &str) -> Vec<serde_json::Value> {
    s.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn documented_examples() {
    let out = cli(&["components", "--vars", "x,y", "--formula", "x*y - 1 = 0"]);
    let v = json_lines(&out.stdout);
    assert_eq!(v[0]["components"], 2);
    assert_eq!(v.len(), 3);
    assert!(v[1]["formula"].as_str().unwrap().contains("x*y - 1 = 0"));

    let v = json_lines(&cli(&["divide", "--vars", "x1,xn", "--poly", "xn^2", "--degree", "1"]).stdout);
    assert_eq!(v[0]["quotient"], "xn - t1");
    assert_eq!(v[0]["remainder"][0], "t1^2");

    let v = json_lines(&cli(&["root-bound", "--coeffs", "-3,2"]).stdout);
    assert_eq!(v[0]["bound"], "6");
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["components", "--vars", "x,y", "--formula", "x + * y = 0"]).code, 1);
    assert_eq!(cli(&["components", "--vars", "x,y", "--formula", "z = 0"]).code, 1);
    assert_eq!(cli(&["components", "--vars", "x,y"]).code, 1);
    assert_eq!(cli(&["divide", "--vars", "x", "--poly", "x", "--degree", "0"]).code, 1);
    assert_eq!(cli(&["prepare", "--vars", "x,y", "--poly", "x + 1"]).code, 1);
    assert_eq!(cli(&["oracle", "--vars", "x", "--formula", "x = 0", "--box", "1,1", "--resolution", "1"]).code, 1);
    assert_eq!(cli(&["frobnicate"]).code, 1);
    assert_eq!(cli(&["components", "--vars", "a,b,c,d", "--formula", "a + b + c + d = 0"]).code, 2);
    let out = cli(&["components", "--vars", "x,y", "--formula", "x + * y = 0"]);
    assert!(out.stderr.contains("column 5"), "{}", out.stderr);
    assert!(out.stdout.is_empty());
}

#[test]
fn cell_limit() {
    let args = ["cylindre", "decompose", "--vars", "x,y", "--poly", "x^2 + y^2 - 1"];
    assert_eq!(cylindre_cli::run(args, Some("17")).code, 3);
    assert_eq!(cylindre_cli::run(args, Some("18")).code, 0);
    assert_eq!(cylindre_cli::run(args, Some("lots")).code, 1);
}

#[test]
fn binary_honours_environment() {
    let bin = env!("CARGO_BIN_EXE_cylindre");
    let out = Command::new(bin)
        .args(["decompose", "--vars", "x,y", "--poly", "x^2 + y^2 - 1"])
        .env("CYLINDRE_MAX_CELLS", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(bin)
        .args(["root-bound", "--coeffs", "0,-1"])
        .env_remove("CYLINDRE_MAX_CELLS")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"bound\":\"2\""));
}

#[test]
fn problem_file_and_output_flag() {
    let dir = std::env::temp_dir().join(format!("cylindre-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let problem = dir.join("hyperbola.toml");
    std::fs::write(&problem, "vars = [\"x\", \"y\"]\nformula = \"x*y - 1 = 0\"\n").unwrap();
    let from_file = cli(&["components", problem.to_str().unwrap()]);
    let inline = cli(&["components", "--vars", "x,y", "--formula", "x*y - 1 = 0"]);
    assert_eq!(from_file, inline);

    let target = dir.join("out.jsonl");
    let written = cli(&["components", problem.to_str().unwrap(), "--output", target.to_str().unwrap()]);
    assert_eq!(written.code, 0);
    assert!(written.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap(), inline.stdout);

    std::fs::write(&problem, "vars = [\"x\"]\nmystery = 1\n").unwrap();
    assert_eq!(cli(&["components", problem.to_str().unwrap()]).code, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

fn random_poly_text(rng: &mut ChaCha8Rng, vars: &[&str]) -> String {
    let terms = rng.gen_range(1..=3);
    let mut parts = Vec::new();
    for _ in 0..terms {
        let c: i64 = rng.gen_range(-5..=5);
        let mut t = format!("{c}");
        for v in vars {
            let e = rng.gen_range(0..=2);
            if e > 0 {
                t.push_str(&format!("*{v}^{e}"));
            }
        }
        parts.push(t);
    }
    parts.join(" + ")
}

fn random_formula_text(rng: &mut ChaCha8Rng, vars: &[&str], depth: u32) -> String {
    if depth == 0 || rng.gen_bool(0.4) {
        let rel = ["=", "!=", "<", "<=", ">", ">="][rng.gen_range(0..6)];
        return format!("{} {rel} {}", random_poly_text(rng, vars), random_poly_text(rng, vars));
    }
    let a = random_formula_text(rng, vars, depth - 1);
    let b = random_formula_text(rng, vars, depth - 1);
    match rng.gen_range(0..3) {
        0 => format!("({a}) and ({b})"),
        1 => format!("({a}) or ({b})"),
        _ => format!("not ({a})"),
    }
}

#[test]
fn formula_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let names = ["x", "y", "z"];
    let vars = vars_from(&names);
    for _ in 0..300 {
        let text = random_formula_text(&mut rng, &names, 3);
        let f = parse_formula(&text, &vars).unwrap();
        let once = f.to_string();
        let again = parse_formula(&once, &vars).unwrap();
        assert_eq!(again.to_string(), once, "{text}");
        assert_eq!(again, f);
    }
}

#[test]
fn outputs_are_deterministic() {
    for (name, args) in EXAMPLES {
        assert_eq!(cli(args), cli(args), "{name}");
    }
}

#[test]
fn exact_serialization() {
    let out = cli(&["decompose", "--vars", "x", "--poly", "3*x^2 - 1"]);
    for v in json_lines(&out.stdout).iter().skip(1) {
        for c in v["sample"].as_array().unwrap() {
            match c {
                serde_json::Value::String(s) => {
                    let r = cylindre::rational::parse_rational(s).unwrap();
                    assert_eq!(&cylindre::rational::format_rational(&r), s);
                }
                serde_json::Value::Object(o) => {
                    assert!(o.contains_key("poly") && o.contains_key("interval"));
                }
                other => panic!("unexpected coordinate {other}"),
            }
        }
        assert!(v.get("approx").is_none());
    }
}
