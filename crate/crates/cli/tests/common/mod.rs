#![allow(dead_code)]

use std::path::PathBuf;

use cylindre_cli::{run, Outcome};

/// Example invocations with golden outputs, keyed by file stem.
pub const EXAMPLES: &[(&str, &[&str])] = &[
    ("components_hyperbola", &["components", "--vars", "x,y", "--formula", "x*y - 1 = 0"]),
    ("components_circle", &["components", "--vars", "x,y", "--formula", "x^2 + y^2 - 1 = 0"]),
    ("components_disks", &["components", "--vars", "x,y", "--formula", "x^2 + y^2 < 1 or (x - 3)^2 + y^2 < 1"]),
    ("components_cubic_approx", &["components", "--vars", "x,y", "--formula", "y^2 = x^2*(x + 1)", "--approx"]),
    ("components_auto_shear", &["components", "--vars", "x,y", "--formula", "x*y = 0", "--auto-shear"]),
    ("decompose_circle", &["decompose", "--vars", "x,y", "--formula", "x^2 + y^2 - 1 < 0"]),
    ("decompose_sqrt2", &["decompose", "--vars", "x", "--poly", "x^2 - 2", "--approx"]),
    ("divide_square", &["divide", "--vars", "x1,xn", "--poly", "xn^2", "--degree", "1"]),
    ("divide_linear_by_quadratic", &["divide", "--vars", "x1,xn", "--poly", "xn", "--degree", "2"]),
    ("divide_cube", &["divide", "--vars", "x1,xn", "--poly", "xn^3", "--by", "xn - x1"]),
    ("divide_guarded", &["divide", "--vars", "x1,xn", "--poly", "xn^3 + x1", "--by", "x1*xn^2 + 1"]),
    ("prepare_guard", &["prepare", "--vars", "x1,xn", "--poly", "x1*xn + 1"]),
    ("prepare_constant", &["prepare", "--vars", "x1,xn", "--poly", "2*xn^2 + x1*xn"]),
    ("shear_product", &["shear", "--vars", "x1,x2", "--poly", "x1*x2"]),
    ("shear_pair", &["shear", "--vars", "x1,x2,x3", "--poly", "x1*x3 + x2^2", "--poly", "x1^2 - x3^2"]),
    ("root_bound", &["root-bound", "--coeffs", "-3,2"]),
    ("root_bound_approx", &["root-bound", "--coeffs", "0,-1,1/3", "--approx"]),
    ("oracle_disk", &["oracle", "--vars", "x,y", "--formula", "x^2 + y^2 - 1 < 0", "--box", "-2,2,-2,2", "--resolution", "1/20"]),
];

pub fn cli(args: &[&str]) -> Outcome {
    let mut full = vec!["cylindre"];
    full.extend_from_slice(args);
    run(full, None)
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn golden_path(name: &str) -> PathBuf {
    golden_dir().join(format!("{name}.jsonl"))
}
