//! Shared inputs for the criterion benchmarks in `benches/`.

use cylindre::{parse_formula, parse_polynomial, vars_from, Formula, Polynomial, Vars};

/// Plane sets of increasing difficulty, by name.
pub const PLANE_SETS: &[(&str, &str)] = &[
    ("circle", "x^2 + y^2 - 1 = 0"),
    ("hyperbola", "x*y - 1 = 0"),
    ("two_disks", "x^2 + y^2 < 1 or (x - 3)^2 + y^2 < 1"),
    ("nodal_cubic", "y^2 = x^2*(x + 1)"),
    ("lemniscate", "(x^2 + y^2)^2 - 2*(x^2 - y^2) <= 0"),
];

pub fn plane() -> Vars {
    vars_from(&["x", "y"])
}

pub fn plane_formula(text: &str) -> Formula {
    parse_formula(text, &plane()).expect("valid benchmark formula")
}

/// `(x1 + ... + xn)^deg` plus a small perturbation, a dense dividend.
pub fn dense_dividend(n: usize, deg: u32) -> Polynomial {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let v = vars_from(&names);
    let sum = names.join(" + ");
    parse_polynomial(&format!("({sum})^{deg} + x1 - 3"), &v).expect("valid benchmark polynomial")
}
