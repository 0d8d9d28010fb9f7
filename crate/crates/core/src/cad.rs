//! Cylindrical algebraic decomposition: Collins-Hong projection, lifting of
//! sign-invariant stacks over sample points, and point location.

use std::collections::{BTreeMap, HashMap};
use std::ops::Range;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::dense::DensePoly;
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::poly::{validate_vars, Exponents, Polynomial, Vars};
use crate::rational::{ceil, floor, simplest_between, Rational, Sign};
use crate::resultant::{norm_over, principal_subresultant_coefficients};
use crate::roots::{isolate_dense, sign_at, Coord, SamplePoint};

pub const DEFAULT_MAX_CELLS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CadOptions {
    /// Abort with [`Error::TooManyCells`] beyond this many cells in total.
    pub max_cells: usize,
    /// Close every level's family under differentiation in its main
    /// variable, which makes every cell's sign vector unique.
    pub derivative_closure: bool,
}

impl Default for CadOptions {
    fn default() -> Self {
        CadOptions {
            max_cells: DEFAULT_MAX_CELLS,
            derivative_closure: false,
        }
    }
}

/// Sign condition on a family: `None` entries are wildcards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignCondition {
    pub signs: Vec<Option<Sign>>,
}

impl SignCondition {
    pub fn exact(signs: &[Sign]) -> Self {
        SignCondition {
            signs: signs.iter().copied().map(Some).collect(),
        }
    }

    pub fn matches(&self, signs: &[Sign]) -> bool {
        self.signs.len() == signs.len()
            && self
                .signs
                .iter()
                .zip(signs)
                .all(|(c, s)| c.is_none_or(|c| c == *s))
    }
}

#[derive(Clone, Debug)]
pub struct Cell {
    pub level: usize,
    /// Stack index at each level: even = sector, odd = section.
    pub path: Vec<usize>,
    /// Index of the base cell in the previous level.
    pub parent: Option<usize>,
    /// Indices of the stack above this cell in the next level.
    pub children: Range<usize>,
    pub sample: SamplePoint,
    /// Signs of this level's family at the cell.
    pub signs: Vec<Sign>,
}

impl Cell {
    pub fn stack_index(&self) -> usize {
        *self.path.last().expect("nonempty path")
    }

    pub fn is_section(&self) -> bool {
        self.stack_index() % 2 == 1
    }

    /// Topological dimension: the number of sector levels.
    pub fn dimension(&self) -> usize {
        self.path.iter().filter(|i| *i % 2 == 0).count()
    }

    pub fn path_string(&self) -> String {
        self.path
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// One stack: roots in ascending order and `2m + 1` cells.
#[derive(Clone, Debug)]
pub struct Stack {
    pub roots: Vec<Coord>,
    pub cells: Vec<(SamplePoint, Vec<Sign>)>,
    /// Family members vanishing identically over the base sample.
    pub nullified: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    vars: Vars,
    families: Vec<Vec<Polynomial>>,
    levels: Vec<Vec<Cell>>,
    lookup: HashMap<Polynomial, (usize, usize)>,
    nullified: bool,
    options: CadOptions,
}

/// Normalizes (primitive, positive leading coefficient), drops constants and
/// duplicates, keeping the first occurrence.
fn normalize_family(polys: impl IntoIterator<Item = Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for p in polys {
        if p.is_zero() || p.is_constant() {
            continue;
        }
        let n = p.normalized();
        if !out.contains(&n) {
            out.push(n);
        }
    }
    out
}

fn leading_coefficient(g: &Polynomial, main: usize) -> Polynomial {
    g.coefficients_in_place(main).pop().expect("nonzero")
}

/// Reducta `f, red f, ...`, stopping after the first one whose leading
/// coefficient is a nonzero constant.
fn reducta(f: &Polynomial, main: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut g = f.clone();
    while !g.is_zero() {
        let d = g.degree_in(main);
        let lc = leading_coefficient(&g, main);
        out.push(g.clone());
        if lc.is_constant() || d == 0 {
            break;
        }
        g = &g - &lc.shift(main, d);
    }
    out
}

fn closure_under_derivative(family: &[Polynomial], main: usize) -> Vec<Polynomial> {
    let mut all = family.to_vec();
    for f in family {
        let mut g = f.derivative_at(main);
        while !g.is_zero() && !g.is_constant() {
            all.push(g.clone());
            if !g.depends_on(main) {
                break;
            }
            g = g.derivative_at(main);
        }
    }
    normalize_family(all)
}

/// Projection of a family in `x_1..x_k` to `x_1..x_(k-1)`.
pub fn project(polys: &[Polynomial], vars: &Vars) -> Result<Vec<Polynomial>> {
    let k = vars.len();
    if k < 2 {
        return Err(Error::InvalidArgument(
            "projection needs at least two variables".into(),
        ));
    }
    let main = k - 1;
    let polys = polys
        .iter()
        .map(|p| p.with_vars(vars))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let reds: Vec<Vec<Polynomial>> = polys.iter().map(|f| reducta(f, main)).collect();
    for rs in &reds {
        for g in rs {
            out.push(leading_coefficient(g, main));
            if g.degree_in(main) >= 2 {
                out.extend(principal_subresultant_coefficients(
                    g,
                    &g.derivative_at(main),
                    main,
                ));
            }
        }
    }
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            if polys[j].degree_in(main) == 0 {
                continue;
            }
            for g in &reds[i] {
                if g.degree_in(main) > 0 {
                    out.extend(principal_subresultant_coefficients(g, &polys[j], main));
                }
            }
        }
    }
    Ok(normalize_family(out.into_iter().map(|p| p.truncate_vars(k - 1))))
}

/// Decomposition with default options.
pub fn decompose(polys: &[Polynomial], vars: &Vars) -> Result<Decomposition> {
    decompose_with(polys, vars, &CadOptions::default())
}

pub fn decompose_with(polys: &[Polynomial], vars: &Vars, options: &CadOptions) -> Result<Decomposition> {
    if vars.is_empty() {
        return Err(Error::EmptyInput);
    }
    validate_vars(vars)?;
    let n = vars.len();
    let input = polys
        .iter()
        .map(|p| p.with_vars(vars))
        .collect::<Result<Vec<_>>>()?;
    let mut families: Vec<Vec<Polynomial>> = vec![Vec::new(); n];
    families[n - 1] = normalize_family(input);
    for k in (1..=n).rev() {
        let level_vars: Vars = vars[..k].to_vec().into();
        if options.derivative_closure {
            families[k - 1] = closure_under_derivative(&families[k - 1], k - 1);
        }
        if k >= 2 {
            families[k - 2] = project(&families[k - 1], &level_vars)?;
        }
    }

    let mut levels: Vec<Vec<Cell>> = Vec::with_capacity(n);
    let mut nullified = false;
    let mut total = 0usize;
    for k in 1..=n {
        let family = &families[k - 1];
        let stacks: Vec<Result<Stack>> = if k == 1 {
            vec![lift_stack(&SamplePoint::default(), family)]
        } else {
            levels[k - 2]
                .par_iter()
                .map(|c| lift_stack(&c.sample, family))
                .collect()
        };
        let mut cells = Vec::new();
        for (parent, stack) in stacks.into_iter().enumerate() {
            let stack = stack?;
            nullified |= !stack.nullified.is_empty();
            let start = cells.len();
            for (i, (sample, signs)) in stack.cells.into_iter().enumerate() {
                let mut path = if k == 1 {
                    Vec::new()
                } else {
                    levels[k - 2][parent].path.clone()
                };
                path.push(i);
                cells.push(Cell {
                    level: k,
                    path,
                    parent: (k > 1).then_some(parent),
                    children: 0..0,
                    sample,
                    signs,
                });
            }
            if k > 1 {
                levels[k - 2][parent].children = start..cells.len();
            }
        }
        total += cells.len();
        if total > options.max_cells {
            return Err(Error::TooManyCells(options.max_cells));
        }
        levels.push(cells);
    }

    let mut lookup = HashMap::new();
    for (k, fam) in families.iter().enumerate() {
        for (i, p) in fam.iter().enumerate() {
            let full = p.with_vars(vars).expect("prefix of vars");
            lookup.entry(full).or_insert((k, i));
        }
    }
    Ok(Decomposition {
        vars: vars.clone(),
        families,
        levels,
        lookup,
        nullified,
        options: options.clone(),
    })
}

enum Behaviour {
    Constant(Sign),
    Nullified,
    Roots { norm: DensePoly, exact: bool },
}

/// Sign-invariant stack over a base sample point for a family in
/// `x_1..x_k` (with `k = base.dim() + 1`).
pub fn lift_stack(base: &SamplePoint, family: &[Polynomial]) -> Result<Stack> {
    let k = base.dim() + 1;
    let main = k - 1;
    let mut behaviours = Vec::with_capacity(family.len());
    let mut nullified = Vec::new();
    for (idx, f) in family.iter().enumerate() {
        if f.nvars() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: f.nvars(),
            });
        }
        let mut fp = f.clone();
        for (i, c) in base.coords.iter().enumerate() {
            if let Some(r) = c.as_rational() {
                if fp.depends_on(i) {
                    fp = fp.substitute_value(i, r);
                }
            }
        }
        let coeffs = fp.coefficients_in(main);
        let mut top = None;
        for j in (0..coeffs.len()).rev() {
            if sign_at(&coeffs[j], base)? != Sign::Zero {
                top = Some(j);
                break;
            }
        }
        match top {
            None => {
                nullified.push(idx);
                behaviours.push(Behaviour::Nullified);
            }
            Some(0) => {
                behaviours.push(Behaviour::Constant(sign_at(&coeffs[0], base)?));
            }
            Some(d) => {
                let truncated = Polynomial::from_coefficients(f.vars(), main, &coeffs[..=d]);
                let norm = eliminate(&truncated, base, main)?.square_free();
                let exact = truncated.used_vars() == vec![main];
                behaviours.push(Behaviour::Roots { norm, exact });
            }
        }
    }

    // candidate roots: all real roots of the lcm of the norms
    let mut m = DensePoly::constant(Rational::one());
    for b in &behaviours {
        if let Behaviour::Roots { norm, .. } = b {
            let g = m.gcd(norm);
            m = m.mul(norm).div_exact(&g).expect("gcd divides").primitive();
        }
    }
    let candidates = if m.deg() == 0 { Vec::new() } else { isolate_dense(&m) };

    let mut roots: Vec<Coord> = Vec::new();
    let mut zero_sets: Vec<Vec<usize>> = Vec::new();
    for gamma in candidates {
        let mut zeros = Vec::new();
        for (idx, b) in behaviours.iter().enumerate() {
            let Behaviour::Roots { norm, exact } = b else {
                continue;
            };
            let root_of_norm = match &gamma {
                Coord::Rational(r) => norm.sign_at(r) == Sign::Zero,
                Coord::Algebraic(a) => a.is_root_of_divisor(&norm.gcd(a.defining())),
            };
            if !root_of_norm {
                continue;
            }
            if *exact || sign_at(&family[idx], &base.push(gamma.clone()))? == Sign::Zero {
                zeros.push(idx);
            }
        }
        if zeros.is_empty() {
            continue;
        }
        let gamma = match gamma {
            Coord::Algebraic(a) => {
                // smallest known factor of the defining polynomial with this root
                let mut best = a.defining().clone();
                for &idx in &zeros {
                    if let Behaviour::Roots { norm, .. } = &behaviours[idx] {
                        let g = norm.gcd(a.defining());
                        if g.deg() < best.deg() {
                            best = g;
                        }
                    }
                }
                let reduced =
                    crate::roots::AlgebraicNumber::from_parts(best.primitive(), a.lo().clone(), a.hi().clone());
                Coord::Algebraic(reduced.refine(&Rational::new(1.into(), 1024.into())))
            }
            c => c,
        };
        roots.push(gamma);
        zero_sets.push(zeros);
    }

    let m_roots = roots.len();
    let mut sector_values: Vec<Rational> = Vec::with_capacity(m_roots + 1);
    if m_roots == 0 {
        sector_values.push(Rational::zero());
    } else {
        let lo = |c: &Coord| c.interval().lo;
        let hi = |c: &Coord| c.interval().hi;
        sector_values.push(Rational::from_integer(floor(&lo(&roots[0])) - 1));
        for j in 0..m_roots - 1 {
            let a = hi(&roots[j]);
            let b = lo(&roots[j + 1]);
            sector_values.push(if a < b { simplest_between(&a, &b) } else { a });
        }
        sector_values.push(Rational::from_integer(ceil(&hi(&roots[m_roots - 1])) + 1));
    }

    let signs_at = |sample: &SamplePoint, zeros: Option<&Vec<usize>>| -> Result<Vec<Sign>> {
        behaviours
            .iter()
            .enumerate()
            .map(|(idx, b)| match b {
                Behaviour::Constant(s) => Ok(*s),
                Behaviour::Nullified => Ok(Sign::Zero),
                Behaviour::Roots { .. } => {
                    if zeros.is_some_and(|z| z.contains(&idx)) {
                        Ok(Sign::Zero)
                    } else {
                        sign_at(&family[idx], sample)
                    }
                }
            })
            .collect()
    };

    let mut cells = Vec::with_capacity(2 * m_roots + 1);
    for j in 0..=m_roots {
        let sample = base.push(Coord::Rational(sector_values[j].clone()));
        let signs = signs_at(&sample, None)?;
        cells.push((sample, signs));
        if j < m_roots {
            let sample = base.push(roots[j].clone());
            let signs = signs_at(&sample, Some(&zero_sets[j]))?;
            cells.push((sample, signs));
        }
    }
    Ok(Stack {
        roots,
        cells,
        nullified,
    })
}

/// A univariate polynomial in `x_main` whose real roots include every root
/// of `f(base, x_main)`, obtained by taking norms over the algebraic
/// coordinates. Rational coordinates must already be substituted.
fn eliminate(f: &Polynomial, base: &SamplePoint, main: usize) -> Result<DensePoly> {
    let used: Vec<usize> = f.used_vars().into_iter().filter(|&i| i != main).collect();
    let mut t = f.clone();
    for &i in used.iter().rev() {
        let Coord::Algebraic(a) = &base.coords[i] else {
            return Err(Error::Internal("rational coordinate left in place".into()));
        };
        // conjugates where t vanishes identically would make the norm zero
        let mut groups: BTreeMap<Exponents, Vec<(usize, Rational)>> = BTreeMap::new();
        for (e, c) in t.terms() {
            let mut key = e.clone();
            key[i] = 0;
            groups.entry(key).or_default().push((e[i] as usize, c.clone()));
        }
        let mut g = a.defining().clone();
        for entries in groups.values() {
            let deg = entries.iter().map(|(d, _)| *d).max().unwrap_or(0);
            let mut coeffs = vec![Rational::zero(); deg + 1];
            for (d, c) in entries {
                coeffs[*d] = c.clone();
            }
            g = g.gcd(&DensePoly::new(coeffs));
            if g.deg() == 0 {
                break;
            }
        }
        let mut d = a.defining().clone();
        if g.deg() > 0 {
            if a.is_root_of_divisor(&g) {
                return Err(Error::Degenerate(format!(
                    "norm vanishes at the sample point for {f}"
                )));
            }
            d = d.div_exact(&g).expect("gcd divides");
        }
        t = norm_over(&d, &t, i);
        if t.is_zero() {
            return Err(Error::Degenerate(format!("zero norm for {f}")));
        }
    }
    t.to_dense(main)
        .ok_or_else(|| Error::Internal("elimination left extra variables".into()))
}

impl Decomposition {
    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn options(&self) -> &CadOptions {
        &self.options
    }

    /// Family of level `k` (1-based), polynomials in `x_1..x_k`.
    pub fn family(&self, k: usize) -> &[Polynomial] {
        &self.families[k - 1]
    }

    pub fn families(&self) -> &[Vec<Polynomial>] {
        &self.families
    }

    /// Cells of level `k` (1-based).
    pub fn cells(&self, k: usize) -> &[Cell] {
        &self.levels[k - 1]
    }

    pub fn leaves(&self) -> &[Cell] {
        &self.levels[self.dim() - 1]
    }

    pub fn num_cells(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Whether some family member vanished identically over a base sample.
    pub fn has_nullification(&self) -> bool {
        self.nullified
    }

    /// Index at level `target` of the ancestor of cell `idx` at `level`.
    pub fn ancestor(&self, level: usize, idx: usize, target: usize) -> usize {
        let mut l = level;
        let mut i = idx;
        while l > target {
            i = self.levels[l - 1][i].parent.expect("has parent");
            l -= 1;
        }
        i
    }

    /// Signs of every level's family at a leaf, level by level.
    pub fn signature(&self, leaf: usize) -> Vec<Vec<Sign>> {
        let n = self.dim();
        (1..=n)
            .map(|k| self.levels[k - 1][self.ancestor(n, leaf, k)].signs.clone())
            .collect()
    }

    /// Level and index of a (normalized) family member.
    pub fn find_polynomial(&self, p: &Polynomial) -> Option<(usize, usize, Sign)> {
        let (content, pp) = p.with_vars(&self.vars).ok()?.primitive_part();
        self.lookup
            .get(&pp)
            .map(|&(k, i)| (k + 1, i, Sign::of(&content)))
    }

    /// Sign of an arbitrary family member (up to a constant factor) or a
    /// constant at a leaf.
    pub fn sign_of(&self, leaf: usize, p: &Polynomial) -> Result<Sign> {
        if let Some(c) = p.as_constant() {
            return Ok(Sign::of(&c));
        }
        let (k, i, s) = self
            .find_polynomial(p)
            .ok_or_else(|| Error::Internal(format!("{p} is not in the decomposition's family")))?;
        let cell = self.ancestor(self.dim(), leaf, k);
        Ok(self.levels[k - 1][cell].signs[i].mul(s))
    }

    /// Whether a leaf satisfies a formula whose atoms are family members.
    pub fn satisfies(&self, leaf: usize, f: &Formula) -> Result<bool> {
        let mut err = None;
        let v = f.holds(&mut |p: &Polynomial| match self.sign_of(leaf, p) {
            Ok(s) => s,
            Err(e) => {
                err = Some(e);
                Sign::Zero
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(v),
        }
    }

    /// Leaves whose sign vectors satisfy the formula.
    pub fn satisfying_cells(&self, f: &Formula) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for i in 0..self.leaves().len() {
            if self.satisfies(i, f)? {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// Distinct real roots of the level-`k` family over a rational point of
    /// `R^(k-1)`, ascending. Identically vanishing members are skipped.
    pub fn roots_over(&self, k: usize, prefix: &[Rational]) -> Result<Vec<Coord>> {
        if prefix.len() + 1 != k {
            return Err(Error::DimensionMismatch {
                expected: k - 1,
                got: prefix.len(),
            });
        }
        let mut m = DensePoly::constant(Rational::one());
        for f in &self.families[k - 1] {
            let mut g = f.clone();
            for (i, r) in prefix.iter().enumerate() {
                g = g.substitute_value(i, r);
            }
            let d = g.to_dense(k - 1).expect("univariate after substitution");
            if d.is_zero() || d.deg() == 0 {
                continue;
            }
            let d = d.square_free();
            let gg = m.gcd(&d);
            m = m.mul(&d).div_exact(&gg).expect("gcd divides").primitive();
        }
        Ok(if m.deg() == 0 { Vec::new() } else { isolate_dense(&m) })
    }

    /// The leaf containing a rational point.
    pub fn locate(&self, point: &[Rational]) -> Result<usize> {
        if point.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: point.len(),
            });
        }
        self.locate_prefix(point)
    }

    /// The level-`k` cell containing a rational point of `R^k`.
    pub fn locate_prefix(&self, point: &[Rational]) -> Result<usize> {
        let n = point.len();
        if n == 0 || n > self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: point.len(),
            });
        }
        let mut idx = 0usize;
        let mut range = 0..self.levels[0].len();
        for k in 1..=n {
            let roots = self.roots_over(k, &point[..k - 1])?;
            if 2 * roots.len() + 1 != range.len() {
                return Err(Error::Internal(format!(
                    "stack at level {k} has {} cells but {} roots at the point",
                    range.len(),
                    roots.len()
                )));
            }
            let y = &point[k - 1];
            let mut pos = 2 * roots.len();
            for (j, r) in roots.iter().enumerate() {
                match r.cmp_rational(y) {
                    std::cmp::Ordering::Greater => {
                        pos = 2 * j;
                        break;
                    }
                    std::cmp::Ordering::Equal => {
                        pos = 2 * j + 1;
                        break;
                    }
                    std::cmp::Ordering::Less => {}
                }
            }
            idx = range.start + pos;
            if k < n {
                range = self.levels[k - 1][idx].children.clone();
            }
        }
        Ok(idx)
    }

    /// Leaf with the given path.
    pub fn leaf_by_path(&self, path: &[usize]) -> Option<usize> {
        let n = self.dim();
        if path.len() != n {
            return None;
        }
        let mut range = 0..self.levels[0].len();
        let mut idx = 0;
        for (k, &p) in path.iter().enumerate() {
            if p >= range.len() {
                return None;
            }
            idx = range.start + p;
            if k + 1 < n {
                range = self.levels[k][idx].children.clone();
            }
        }
        Some(idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::poly::vars_from;
    use crate::rational::int;

    fn circle() -> (Vars, Polynomial) {
        let v = vars_from(&["x", "y"]);
        let f = crate::formula::parse_polynomial("x^2 + y^2 - 1", &v).unwrap();
        (v, f)
    }

    #[test]
    fn projection_examples() {
        let (v, f) = circle();
        let p = project(&[f], &v).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].to_string(), "x^2 - 1");
        let l = crate::formula::parse_polynomial("y - x", &v).unwrap();
        assert!(project(&[l.clone()], &v).unwrap().is_empty());
        let m = crate::formula::parse_polynomial("y + x", &v).unwrap();
        let p = project(&[l, m], &v).unwrap();
        assert_eq!(p.iter().map(|p| p.to_string()).collect::<Vec<_>>(), vec!["x"]);
        assert!(project(&[], &vars_from(&["x"])).is_err());
    }

    #[test]
    fn one_dimensional() {
        let v = vars_from(&["x"]);
        let f = crate::formula::parse_polynomial("x^2 - 2", &v).unwrap();
        let d = decompose(&[f], &v).unwrap();
        assert_eq!(d.leaves().len(), 5);
        let d = decompose(&[], &v).unwrap();
        assert_eq!(d.leaves().len(), 1);
        assert!(matches!(decompose(&[], &vars_from::<&str>(&[])), Err(Error::EmptyInput)));
    }

    #[test]
    fn circle_cells() {
        let (v, f) = circle();
        let d = decompose(&[f], &v).unwrap();
        assert_eq!(d.leaves().len(), 13);
        let sizes: Vec<usize> = d.cells(1).iter().map(|c| c.children.len()).collect();
        assert_eq!(sizes, vec![1, 3, 5, 3, 1]);
        let middle = &d.cells(1)[2];
        let ys: Vec<String> = d.cells(2)[middle.children.clone()]
            .iter()
            .map(|c| format!("{:?}", c.sample.coords[1]))
            .collect();
        assert_eq!(ys, vec!["-2", "-1", "0", "1", "2"]);
        let inside = parse_formula("x^2 + y^2 - 1 < 0", &v).unwrap();
        assert_eq!(d.satisfying_cells(&inside).unwrap().len(), 1);
        let on = parse_formula("x^2 + y^2 - 1 = 0", &v).unwrap();
        assert_eq!(d.satisfying_cells(&on).unwrap().len(), 4);
        let all = parse_formula("0 = 0", &v).unwrap();
        assert_eq!(d.satisfying_cells(&all).unwrap().len(), 13);
        let leaf = d.locate(&[int(0), int(0)]).unwrap();
        assert_eq!(d.leaves()[leaf].path, vec![2, 2]);
        let leaf = d.locate(&[int(1), int(0)]).unwrap();
        assert_eq!(d.leaves()[leaf].path, vec![3, 1]);
    }

    #[test]
    fn stack_over_origin() {
        let (_, f) = circle();
        let s = lift_stack(&SamplePoint::rational(&[int(0)]), &[f.clone()]).unwrap();
        assert_eq!(s.cells.len(), 5);
        let s = lift_stack(&SamplePoint::rational(&[int(1)]), &[f.clone()]).unwrap();
        assert_eq!(s.cells.len(), 3);
        let s = lift_stack(&SamplePoint::rational(&[int(5)]), &[f]).unwrap();
        assert_eq!(s.cells.len(), 1);
        assert_eq!(s.cells[0].0.coords[1], Coord::Rational(int(0)));
    }

    #[test]
    fn algebraic_base() {
        // y^2 = 2 - x^2 and y = x: base roots at +-1 and +-sqrt2
        let v = vars_from(&["x", "y"]);
        let f = crate::formula::parse_polynomial("x^2 + y^2 - 2", &v).unwrap();
        let g = crate::formula::parse_polynomial("y - x", &v).unwrap();
        let d = decompose(&[f, g], &v).unwrap();
        for (i, leaf) in d.leaves().iter().enumerate() {
            let sig = d.signature(i);
            assert_eq!(sig[1], leaf.signs);
        }
        let leaf = d.locate(&[int(1), int(1)]).unwrap();
        assert_eq!(d.leaves()[leaf].signs, vec![Sign::Zero, Sign::Zero]);
    }

    #[test]
    fn cell_limit() {
        let (v, f) = circle();
        let opts = CadOptions {
            max_cells: 10,
            derivative_closure: false,
        };
        assert_eq!(decompose_with(&[f], &v, &opts).unwrap_err(), Error::TooManyCells(10));
    }
}
