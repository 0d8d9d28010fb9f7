//! Command dispatch for the `cylindre` binary. Every result is one JSON
//! object per line, tagged with a `schema` field.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use cylindre::cad::DEFAULT_MAX_CELLS;
use cylindre::rational::{format_rational, parse_rational, to_f64};
use cylindre::*;

pub const SCHEMA: &str = "cylindre/1";
pub const MAX_CELLS_VAR: &str = "CYLINDRE_MAX_CELLS";

#[derive(Parser, Debug)]
#[command(name = "cylindre", version, about = "Cylindrical decomposition and connected components of semi-algebraic sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Connected components of the set defined by a formula.
    Components(Common),
    /// Cylindrical decomposition adapted to a formula's polynomials.
    Decompose(Common),
    /// Generic division (`--degree`) or division by a polynomial (`--by`).
    Divide(Common),
    /// Leading-coefficient preparation in the last variable.
    Prepare(Common),
    /// Shear making every `--poly` regular in the last variable.
    Shear(Common),
    /// Root modulus bound for `x^p + c_1 x^(p-1) + ... + c_p`.
    RootBound(Common),
    /// Rasterized component count.
    Oracle(Common),
}

#[derive(Args, Debug, Default, Clone)]
pub struct Common {
    /// TOML problem file; flags given on the command line take precedence.
    pub problem: Option<PathBuf>,
    /// Comma-separated variable order (also the projection order).
    #[arg(long)]
    pub vars: Option<String>,
    #[arg(long)]
    pub formula: Option<String>,
    /// Polynomial; repeat for several.
    #[arg(long)]
    pub poly: Vec<String>,
    /// Divisor for `divide`.
    #[arg(long)]
    pub by: Option<String>,
    #[arg(long)]
    pub degree: Option<usize>,
    /// Comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// `lo1,hi1,lo2,hi2,...`
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bbox: Option<String>,
    #[arg(long)]
    pub resolution: Option<String>,
    #[arg(long)]
    pub auto_shear: bool,
    /// Adds floating-point approximations next to exact values.
    #[arg(long)]
    pub approx: bool,
    /// Write results here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Problem file contents.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct Problem {
    vars: Option<Vec<String>>,
    formula: Option<String>,
    poly: Option<PolyList>,
    by: Option<String>,
    degree: Option<usize>,
    coeffs: Option<Vec<String>>,
    #[serde(rename = "box")]
    bbox: Option<Vec<String>>,
    resolution: Option<String>,
    auto_shear: Option<bool>,
}

#[derive(Deserialize, Debug)]
#[serde(untagged)]
enum PolyList {
    One(String),
    Many(Vec<String>),
}

/// Exit status, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedDimension(_) | Error::Degenerate(_) => 2,
            Error::TooManyCells(_) => 3,
            Error::Internal(_) => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Runs the command line `args` (including the program name). `max_cells`
/// is the raw value of the cell limit variable, if set.
pub fn run<I, S>(args: I, max_cells: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let output = match &cli.command {
        Command::Components(c)
        | Command::Decompose(c)
        | Command::Divide(c)
        | Command::Prepare(c)
        | Command::Shear(c)
        | Command::RootBound(c)
        | Command::Oracle(c) => c.output.clone(),
    };
    match dispatch(&cli.command, max_cells) {
        Ok(lines) => {
            let mut text = String::new();
            for l in lines {
                text.push_str(&l);
                text.push('\n');
            }
            if let Some(path) = output {
                if let Err(e) = fs::write(&path, &text) {
                    return Outcome {
                        code: 1,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    };
                }
                text.clear();
            }
            Outcome { code: 0, stdout: text, stderr: String::new() }
        }
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(cmd: &Command, max_cells: Option<&str>) -> Res<Vec<String>> {
    let max_cells = match max_cells {
        None => DEFAULT_MAX_CELLS,
        Some(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| input_error(format!("{MAX_CELLS_VAR} must be a positive integer, got {s:?}")))?,
    };
    match cmd {
        Command::Components(c) => components(&Input::load(c)?, max_cells),
        Command::Decompose(c) => decompose_cmd(&Input::load(c)?, max_cells),
        Command::Divide(c) => divide(&Input::load(c)?),
        Command::Prepare(c) => prepare_cmd(&Input::load(c)?),
        Command::Shear(c) => shear(&Input::load(c)?),
        Command::RootBound(c) => root_bound_cmd(&Input::load(c)?),
        Command::Oracle(c) => oracle(&Input::load(c)?),
    }
}

/// Flags merged with the problem file.
struct Input {
    vars: Option<Vars>,
    formula: Option<String>,
    polys: Vec<String>,
    by: Option<String>,
    degree: Option<usize>,
    coeffs: Option<Vec<String>>,
    bbox: Option<Vec<String>>,
    resolution: Option<String>,
    auto_shear: bool,
    approx: bool,
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(|p| p.trim().to_string()).filter(|p| !p.is_empty()).collect()
}

impl Input {
    fn load(c: &Common) -> Res<Input> {
        let file: Problem = match &c.problem {
            None => Problem::default(),
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
                toml::from_str(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))?
            }
        };
        let vars = match (&c.vars, file.vars) {
            (Some(v), _) => Some(split_list(v)),
            (None, v) => v,
        };
        let vars = match vars {
            None => None,
            Some(v) => {
                let v = vars_from(&v);
                cylindre::poly::validate_vars(&v)?;
                Some(v)
            }
        };
        let polys = if !c.poly.is_empty() {
            c.poly.clone()
        } else {
            match file.poly {
                None => Vec::new(),
                Some(PolyList::One(p)) => vec![p],
                Some(PolyList::Many(ps)) => ps,
            }
        };
        Ok(Input {
            vars,
            formula: c.formula.clone().or(file.formula),
            polys,
            by: c.by.clone().or(file.by),
            degree: c.degree.or(file.degree),
            coeffs: c.coeffs.as_deref().map(split_list).or(file.coeffs),
            bbox: c.bbox.as_deref().map(split_list).or(file.bbox),
            resolution: c.resolution.clone().or(file.resolution),
            auto_shear: c.auto_shear || file.auto_shear.unwrap_or(false),
            approx: c.approx,
        })
    }

    fn vars(&self) -> Res<&Vars> {
        self.vars.as_ref().ok_or_else(|| input_error("missing --vars"))
    }

    fn formula(&self) -> Res<Formula> {
        let text = self.formula.as_ref().ok_or_else(|| input_error("missing --formula"))?;
        Ok(parse_formula(text, self.vars()?)?)
    }

    fn poly(&self) -> Res<Polynomial> {
        match self.polys.as_slice() {
            [p] => Ok(parse_polynomial(p, self.vars()?)?),
            [] => Err(input_error("missing --poly")),
            _ => Err(input_error("expected exactly one --poly")),
        }
    }

    fn all_polys(&self) -> Res<Vec<Polynomial>> {
        if self.polys.is_empty() {
            return Err(input_error("missing --poly"));
        }
        let v = self.vars()?;
        Ok(self
            .polys
            .iter()
            .map(|p| parse_polynomial(p, v))
            .collect::<Result<Vec<_>>>()?)
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

#[derive(Serialize)]
#[serde(untagged)]
enum CoordOut {
    Rational(String),
    Algebraic {
        poly: String,
        interval: [String; 2],
    },
}

fn coord_out(c: &Coord, var: &str) -> CoordOut {
    match c {
        Coord::Rational(r) => CoordOut::Rational(format_rational(r)),
        Coord::Algebraic(a) => CoordOut::Algebraic {
            poly: a.defining_polynomial(var).to_string(),
            interval: [format_rational(a.lo()), format_rational(a.hi())],
        },
    }
}

fn sample_out(s: &SamplePoint, vars: &Vars, approx: bool) -> (Vec<CoordOut>, Option<Vec<f64>>) {
    let coords = s
        .coords
        .iter()
        .zip(vars.iter())
        .map(|(c, v)| coord_out(c, v))
        .collect();
    (coords, approx.then(|| s.to_f64()))
}

fn signs_out(signs: &[Vec<Sign>]) -> Vec<Vec<i8>> {
    signs.iter().map(|l| l.iter().map(|s| s.as_i8()).collect()).collect()
}

fn cad_options(max_cells: usize) -> CadOptions {
    CadOptions {
        max_cells,
        ..CadOptions::default()
    }
}

#[derive(Serialize)]
struct ComponentsHeader<'a> {
    schema: &'a str,
    command: &'a str,
    vars: Vec<String>,
    formula: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    shear: Option<Vec<i64>>,
    cells: usize,
    satisfying: usize,
    components: usize,
    certified: bool,
    nullified: bool,
    derivative_closure: bool,
}

#[derive(Serialize)]
struct ComponentOut<'a> {
    schema: &'a str,
    component: usize,
    cells: Vec<String>,
    tree: Vec<[String; 2]>,
    formula: String,
    faithful: bool,
    sample: Vec<CoordOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<Vec<f64>>,
}

fn components(input: &Input, max_cells: usize) -> Res<Vec<String>> {
    let vars = input.vars()?;
    let mut f = input.formula()?;
    let mut shear_nu = None;
    if input.auto_shear {
        let polys: Vec<Polynomial> = f.atoms().into_iter().map(|(p, _)| p.clone()).collect();
        let s = find_shear(&polys)?;
        f = f.map_polys(&mut |p| apply_shear(p, &s))?;
        shear_nu = Some(s.nu);
    }
    let a = analyze(&f, vars, &cad_options(max_cells))?;
    let d = &a.decomposition;
    let path = |i: usize| d.leaves()[i].path_string();
    let mut lines = vec![json(&ComponentsHeader {
        schema: SCHEMA,
        command: "components",
        vars: vars.to_vec(),
        formula: f.to_string(),
        shear: shear_nu,
        cells: d.leaves().len(),
        satisfying: a.components.iter().map(|c| c.cells.len()).sum(),
        components: a.components.len(),
        certified: a.graph.certified,
        nullified: d.has_nullification(),
        derivative_closure: a.refined,
    })];
    for (k, c) in a.components.iter().enumerate() {
        let (sample, approx) = sample_out(&d.leaves()[c.cells[0]].sample, vars, input.approx);
        lines.push(json(&ComponentOut {
            schema: SCHEMA,
            component: k,
            cells: c.cells.iter().map(|&i| path(i)).collect(),
            tree: c.tree.iter().map(|&(p, q)| [path(p), path(q)]).collect(),
            formula: c.formula.to_string(),
            faithful: c.faithful,
            sample,
            approx,
        }));
    }
    Ok(lines)
}

#[derive(Serialize)]
struct DecomposeHeader<'a> {
    schema: &'a str,
    command: &'a str,
    vars: Vec<String>,
    families: Vec<Vec<String>>,
    cells: usize,
    nullified: bool,
}

#[derive(Serialize)]
struct CellOut<'a> {
    schema: &'a str,
    cell: String,
    dimension: usize,
    sample: Vec<CoordOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<Vec<f64>>,
    signs: Vec<Vec<i8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    satisfies: Option<bool>,
}

fn decompose_cmd(input: &Input, max_cells: usize) -> Res<Vec<String>> {
    let vars = input.vars()?;
    let (polys, formula) = if input.formula.is_some() {
        let f = input.formula()?;
        (connectivity::formula_polynomials(&f), Some(f))
    } else {
        (input.all_polys()?, None)
    };
    let d = decompose_with(&polys, vars, &cad_options(max_cells))?;
    let mut lines = vec![json(&DecomposeHeader {
        schema: SCHEMA,
        command: "decompose",
        vars: vars.to_vec(),
        families: d
            .families()
            .iter()
            .map(|f| f.iter().map(|p| p.to_string()).collect())
            .collect(),
        cells: d.leaves().len(),
        nullified: d.has_nullification(),
    })];
    for (i, c) in d.leaves().iter().enumerate() {
        let (sample, approx) = sample_out(&c.sample, vars, input.approx);
        let satisfies = match &formula {
            Some(f) => Some(d.satisfies(i, f)?),
            None => None,
        };
        lines.push(json(&CellOut {
            schema: SCHEMA,
            cell: c.path_string(),
            dimension: c.dimension(),
            sample,
            approx,
            signs: signs_out(&d.signature(i)),
            satisfies,
        }));
    }
    Ok(lines)
}

#[derive(Serialize)]
struct GenericOut<'a> {
    schema: &'a str,
    command: &'a str,
    vars: Vec<String>,
    divisor: String,
    quotient: String,
    remainder: Vec<String>,
    identity: bool,
    via_roots: bool,
}

#[derive(Serialize)]
struct FractionOut {
    numerator: String,
    guard: String,
    power: u32,
}

fn fraction(r: &RationalFunction, guard: &Polynomial) -> FractionOut {
    FractionOut {
        numerator: r.numerator.to_string(),
        guard: guard.to_string(),
        power: r.power,
    }
}

#[derive(Serialize)]
struct DivisionOut<'a> {
    schema: &'a str,
    command: &'a str,
    vars: Vec<String>,
    main: String,
    divisor: String,
    quotient: FractionOut,
    remainder: Vec<FractionOut>,
    identity: bool,
}

fn divide(input: &Input) -> Res<Vec<String>> {
    let vars = input.vars()?;
    let g = input.poly()?;
    match (&input.by, input.degree) {
        (Some(_), Some(_)) => Err(input_error("use either --by or --degree, not both")),
        (None, None) => Err(input_error("missing --degree or --by")),
        (None, Some(p)) => {
            let d = generic_divide(&g, p)?;
            let via = generic_divide_via_roots(&g, p)?;
            Ok(vec![json(&GenericOut {
                schema: SCHEMA,
                command: "divide",
                vars: d.vars.to_vec(),
                divisor: d.generic_polynomial().to_string(),
                quotient: d.quotient.to_string(),
                remainder: d.remainder.iter().map(|h| h.to_string()).collect(),
                identity: d.reassemble() == g.with_vars(&d.vars)?,
                via_roots: via == d,
            })])
        }
        (Some(by), None) => {
            let divisor = parse_polynomial(by, vars)?;
            let main = vars.last().expect("nonempty").clone();
            let w = prepare(&divisor, &main)?;
            let d = weierstrass_divide(&g, &w)?;
            Ok(vec![json(&DivisionOut {
                schema: SCHEMA,
                command: "divide",
                vars: vars.to_vec(),
                main,
                divisor: divisor.to_string(),
                quotient: fraction(&d.quotient, &w.guard),
                remainder: d.remainder.iter().map(|r| fraction(r, &w.guard)).collect(),
                identity: d.identity_holds(&g, &w),
            })])
        }
    }
}

#[derive(Serialize)]
struct PrepareOut<'a> {
    schema: &'a str,
    command: &'a str,
    vars: Vec<String>,
    main: String,
    degree: usize,
    guard: String,
    unit: String,
    monic: Vec<FractionOut>,
    cleared: String,
    cleared_power: u32,
}

fn prepare_cmd(input: &Input) -> Res<Vec<String>> {
    let vars = input.vars()?;
    let g = input.poly()?;
    let main = vars.last().expect("nonempty").clone();
    let w = prepare(&g, &main)?;
    let (k, cleared) = w.cleared_monic();
    Ok(vec![json(&PrepareOut {
        schema: SCHEMA,
        command: "prepare",
        vars: vars.to_vec(),
        main,
        degree: w.degree,
        guard: w.guard.to_string(),
        unit: w.unit.numerator.to_string(),
        monic: w.monic.iter().map(|r| fraction(r, &w.guard)).collect(),
        cleared: cleared.to_string(),
        cleared_power: k,
    })])
}

#[derive(Serialize)]
struct ShearOut<'a> {
    schema: &'a str,
    command: &'a str,
    vars: Vec<String>,
    nu: Vec<i64>,
    sheared: Vec<String>,
    orders: Vec<u32>,
}

fn shear(input: &Input) -> Res<Vec<String>> {
    let vars = input.vars()?;
    let polys = input.all_polys()?;
    let s = find_shear(&polys)?;
    let sheared = polys
        .iter()
        .map(|p| apply_shear(p, &s))
        .collect::<Result<Vec<_>>>()?;
    let orders = polys
        .iter()
        .map(|p| initial_form(p).map(|(o, _)| o))
        .collect::<Result<Vec<_>>>()?;
    Ok(vec![json(&ShearOut {
        schema: SCHEMA,
        command: "shear",
        vars: vars.to_vec(),
        nu: s.nu,
        sheared: sheared.iter().map(|p| p.to_string()).collect(),
        orders,
    })])
}

#[derive(Serialize)]
struct BoundOut<'a> {
    schema: &'a str,
    command: &'a str,
    coeffs: Vec<String>,
    bound: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<f64>,
}

fn parse_rationals(items: &[String]) -> Res<Vec<Rational>> {
    Ok(items
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()?)
}

fn root_bound_cmd(input: &Input) -> Res<Vec<String>> {
    let coeffs = input.coeffs.as_ref().ok_or_else(|| input_error("missing --coeffs"))?;
    let v = parse_rationals(coeffs)?;
    let b = root_bound(&v);
    Ok(vec![json(&BoundOut {
        schema: SCHEMA,
        command: "root-bound",
        coeffs: v.iter().map(format_rational).collect(),
        bound: format_rational(&b),
        approx: input.approx.then(|| to_f64(&b)),
    })])
}

#[derive(Serialize)]
struct OracleOut<'a> {
    schema: &'a str,
    command: &'a str,
    vars: Vec<String>,
    formula: String,
    #[serde(rename = "box")]
    bbox: Vec<[String; 2]>,
    resolution: String,
    shape: Vec<usize>,
    marked: usize,
    components: usize,
}

fn oracle(input: &Input) -> Res<Vec<String>> {
    let vars = input.vars()?;
    let f = input.formula()?;
    let raw = input.bbox.as_ref().ok_or_else(|| input_error("missing --box"))?;
    let values = parse_rationals(raw)?;
    if values.len() != 2 * vars.len() {
        return Err(input_error(format!(
            "--box needs {} numbers (lo,hi per variable), got {}",
            2 * vars.len(),
            values.len()
        )));
    }
    let bx: GridBox = values.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect();
    let res = match &input.resolution {
        Some(r) => parse_rational(r)?,
        None => return Err(input_error("missing --resolution")),
    };
    let grid = marked_grid(&f, &bx, &res)?;
    Ok(vec![json(&OracleOut {
        schema: SCHEMA,
        command: "oracle",
        vars: vars.to_vec(),
        formula: f.to_string(),
        bbox: bx.iter().map(|(a, b)| [format_rational(a), format_rational(b)]).collect(),
        resolution: format_rational(&res),
        shape: grid.shape.clone(),
        marked: grid.count_marked(),
        components: grid.components(),
    })])
}
