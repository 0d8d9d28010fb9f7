//! Adjacency between leaf cells and connected components of semi-algebraic
//! sets, each returned with a defining formula.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Zero};

use crate::cad::{decompose_with, CadOptions, Decomposition};
use crate::dense::DensePoly;
use crate::error::{Error, Result};
use crate::formula::{Formula, Relation};
use crate::poly::{Polynomial, Vars};
use crate::rational::{ceil, floor, simplest_between, Rational, Sign};
use crate::roots::{isolate_dense, sign_at, Coord};

/// Undirected graph on the leaf cells of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyGraph {
    pub vertices: usize,
    pub edges: BTreeSet<(usize, usize)>,
    /// False when some edges come from the sampling heuristic.
    pub certified: bool,
}

impl AdjacencyGraph {
    fn new(vertices: usize) -> Self {
        AdjacencyGraph {
            vertices,
            edges: BTreeSet::new(),
            certified: true,
        }
    }

    fn add(&mut self, a: usize, b: usize) {
        if a != b {
            self.edges.insert((a.min(b), a.max(b)));
        }
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertices];
        for &(a, b) in &self.edges {
            out[a].push(b);
            out[b].push(a);
        }
        out
    }
}

/// Where a root function over a base sector tends at a boundary point,
/// relative to the roots `eta_1 < ... < eta_m` over that point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Limit {
    NegInf,
    /// The `l`-th root (1-based).
    Root(usize),
    PosInf,
    /// Somewhere between separators `l - 1` and `l` (0 = below all,
    /// `m + 1` = above all); used when the limit cannot be certified.
    Between(usize),
}

/// Adjacency of the leaf cells. Exact for dimension at most 2; dimension 3
/// uses boundary sampling and marks the graph as not certified.
pub fn adjacency(d: &Decomposition) -> Result<AdjacencyGraph> {
    match d.dim() {
        1 => {
            let mut g = AdjacencyGraph::new(d.leaves().len());
            for i in 1..d.leaves().len() {
                g.add(i - 1, i);
            }
            Ok(g)
        }
        2 => adjacency_2d(d),
        3 => adjacency_3d(d),
        k => Err(Error::UnsupportedDimension(k)),
    }
}

/// Rational strictly between two values (`None` is -inf below, +inf above).
fn rational_between(lower: Option<&Coord>, upper: Option<&Coord>) -> Rational {
    match (lower, upper) {
        (None, None) => Rational::zero(),
        (None, Some(u)) => Rational::from_integer(floor(&u.interval().lo) - 1),
        (Some(l), None) => Rational::from_integer(ceil(&l.interval().hi) + 1),
        (Some(l), Some(u)) => {
            let mut l = l.clone();
            let mut u = u.clone();
            loop {
                let a = l.interval().hi;
                let b = u.interval().lo;
                if a < b {
                    return simplest_between(&a, &b);
                }
                if a == b && l.cmp_rational(&a) == Ordering::Less && u.cmp_rational(&b) == Ordering::Greater {
                    return a;
                }
                l = bisect(&l);
                u = bisect(&u);
            }
        }
    }
}

fn bisect(c: &Coord) -> Coord {
    match c {
        Coord::Rational(_) => c.clone(),
        Coord::Algebraic(a) => {
            let b = a.bisect();
            match b.exact() {
                Some(v) => Coord::Rational(v.clone()),
                None => Coord::Algebraic(b),
            }
        }
    }
}

fn lcm_into(m: &mut DensePoly, p: &DensePoly) {
    if p.is_zero() || p.deg() == 0 {
        return;
    }
    let p = p.square_free();
    let g = m.gcd(&p);
    *m = m.mul(&p).div_exact(&g).expect("gcd divides").primitive();
}

/// Limits of the root functions over base sector `si` at base section `bi`
/// (both level-1 cells).
fn branch_limits(d: &Decomposition, bi: usize, si: usize) -> Result<(Vec<Limit>, bool)> {
    let base = d.cells(1);
    let leaves = d.cells(2);
    let b = base[bi].sample.coords[0].clone();
    let over_b = base[bi].children.clone();
    let mb = (over_b.len() - 1) / 2;
    let separators: Vec<Rational> = (0..=mb)
        .map(|l| {
            leaves[over_b.start + 2 * l].sample.coords[1]
                .as_rational()
                .cloned()
                .expect("sector samples are rational")
        })
        .collect();

    let family = d.family(2);
    let mut nullified = false;
    let mut h = DensePoly::constant(Rational::one());
    for f in family {
        if f.degree_in(1) == 0 {
            continue;
        }
        let mut all_zero = true;
        for c in f.coefficients_in(1) {
            if sign_at(&c, &base[bi].sample)? != Sign::Zero {
                all_zero = false;
                break;
            }
        }
        nullified |= all_zero;
        for s in &separators {
            let hx = f.substitute_value(1, s).to_dense(0).expect("univariate in x");
            lcm_into(&mut h, &hx);
        }
    }

    // nearest obstruction on the sector's side: a root of h or the far end
    let left = si < bi;
    let far: Option<Coord> = if left {
        si.checked_sub(1).map(|i| base[i].sample.coords[0].clone())
    } else {
        base.get(si + 1).map(|c| c.sample.coords[0].clone())
    };
    let mut bound = far;
    if h.deg() > 0 {
        for r in isolate_dense(&h) {
            let on_side = if left {
                r.cmp_exact(&b) == Ordering::Less
            } else {
                r.cmp_exact(&b) == Ordering::Greater
            };
            if !on_side {
                continue;
            }
            let closer = match &bound {
                None => true,
                Some(c) => {
                    if left {
                        r.cmp_exact(c) == Ordering::Greater
                    } else {
                        r.cmp_exact(c) == Ordering::Less
                    }
                }
            };
            if closer {
                bound = Some(r);
            }
        }
    }
    let x0 = if left {
        rational_between(bound.as_ref(), Some(&b))
    } else {
        rational_between(Some(&b), bound.as_ref())
    };
    let roots = d.roots_over(2, &[x0])?;
    let over_s = base[si].children.len();
    if 2 * roots.len() + 1 != over_s {
        return Err(Error::Internal("root count changed inside a sector".into()));
    }
    let limits = roots
        .iter()
        .map(|r| {
            let q = separators
                .iter()
                .filter(|s| r.cmp_rational(s) == Ordering::Greater)
                .count();
            if nullified {
                Limit::Between(q)
            } else if q == 0 {
                Limit::NegInf
            } else if q == mb + 1 {
                Limit::PosInf
            } else {
                Limit::Root(q)
            }
        })
        .collect();
    Ok((limits, !nullified))
}

/// Stack indices over the boundary cell touched by the closure of a branch
/// or of the band between two branches.
fn touched(lower: Limit, upper: Limit, mb: usize) -> Option<(usize, usize)> {
    let lo = match lower {
        Limit::NegInf => 0,
        Limit::Root(l) => 2 * l - 1,
        Limit::PosInf => return None,
        Limit::Between(q) => (2 * q).saturating_sub(2),
    };
    let hi = match upper {
        Limit::PosInf => 2 * mb,
        Limit::Root(l) => 2 * l - 1,
        Limit::NegInf => return None,
        Limit::Between(q) => (2 * q).min(2 * mb),
    };
    (lo <= hi).then_some((lo, hi))
}

/// Adds edges between the stack over a higher-dimensional cell and the stack
/// over a boundary cell, given the branch limits.
fn connect_stacks(
    g: &mut AdjacencyGraph,
    upper_stack: std::ops::Range<usize>,
    boundary_stack: std::ops::Range<usize>,
    limits: &[Limit],
) {
    let m = limits.len();
    let mb = (boundary_stack.len() - 1) / 2;
    for (i, lim) in limits.iter().enumerate() {
        let sec = upper_stack.start + 2 * i + 1;
        if let Some((lo, hi)) = touched(*lim, *lim, mb) {
            for k in lo..=hi {
                g.add(sec, boundary_stack.start + k);
            }
        }
    }
    for i in 0..=m {
        let lower = if i == 0 { Limit::NegInf } else { limits[i - 1] };
        let upper = if i == m { Limit::PosInf } else { limits[i] };
        let sec = upper_stack.start + 2 * i;
        if let Some((lo, hi)) = touched(lower, upper, mb) {
            for k in lo..=hi {
                g.add(sec, boundary_stack.start + k);
            }
        }
    }
}

fn adjacency_2d(d: &Decomposition) -> Result<AdjacencyGraph> {
    let mut g = AdjacencyGraph::new(d.leaves().len());
    add_2d_edges(d, &mut g)?;
    Ok(g)
}

/// Adjacency among level-2 cells (the leaves when the dimension is 2).
fn add_2d_edges(d: &Decomposition, g: &mut AdjacencyGraph) -> Result<()> {
    let base = d.cells(1);
    for c in base {
        for i in c.children.start + 1..c.children.end {
            g.add(i - 1, i);
        }
    }
    for bi in (1..base.len()).step_by(2) {
        for si in [bi - 1, bi + 1] {
            let (limits, certified) = branch_limits(d, bi, si)?;
            g.certified &= certified;
            connect_stacks(g, base[si].children.clone(), base[bi].children.clone(), &limits);
        }
    }
    Ok(())
}

fn approx(c: &Coord) -> Rational {
    match c {
        Coord::Rational(r) => r.clone(),
        Coord::Algebraic(a) => {
            let t = a.refine(&Rational::new(1.into(), (1u64 << 40).into()));
            (t.lo() + t.hi()) / Rational::from_integer(2.into())
        }
    }
}

fn adjacency_3d(d: &Decomposition) -> Result<AdjacencyGraph> {
    let mut base_graph = AdjacencyGraph::new(d.cells(2).len());
    add_2d_edges(d, &mut base_graph)?;
    let mut g = AdjacencyGraph::new(d.leaves().len());
    g.certified = false;
    let level2 = d.cells(2);
    for c in level2 {
        for i in c.children.start + 1..c.children.end {
            g.add(i - 1, i);
        }
    }
    for &(p, q) in &base_graph.edges {
        let (hi, lo) = if level2[p].dimension() >= level2[q].dimension() {
            (p, q)
        } else {
            (q, p)
        };
        let upper = level2[hi].children.clone();
        let boundary = level2[lo].children.clone();
        let mb = (boundary.len() - 1) / 2;
        let separators: Vec<Rational> = (0..=mb)
            .map(|l| approx(&d.leaves()[boundary.start + 2 * l].sample.coords[2]))
            .collect();
        let b: Vec<Rational> = level2[lo].sample.coords.iter().map(approx).collect();
        let a: Vec<Rational> = level2[hi].sample.coords.iter().map(approx).collect();
        // walk from the boundary sample towards the cell sample; keep the
        // closest point that still lies in the higher-dimensional cell
        let mut found = None;
        let mut t = Rational::one();
        for _ in 0..48 {
            t /= Rational::from_integer(2.into());
            let pt: Vec<Rational> = b.iter().zip(&a).map(|(bv, av)| bv + &t * (av - bv)).collect();
            if d.locate_prefix(&pt)? == hi {
                found = Some(pt);
            } else if found.is_some() {
                break;
            }
        }
        let limits: Option<Vec<Limit>> = match found {
            Some(pt) => {
                let roots = d.roots_over(3, &pt)?;
                (2 * roots.len() + 1 == upper.len()).then(|| {
                    roots
                        .iter()
                        .map(|r| {
                            let q = separators
                                .iter()
                                .filter(|s| r.cmp_rational(s) == Ordering::Greater)
                                .count();
                            if q == 0 {
                                Limit::NegInf
                            } else if q == mb + 1 {
                                Limit::PosInf
                            } else {
                                Limit::Root(q)
                            }
                        })
                        .collect()
                })
            }
            None => None,
        };
        match limits {
            Some(l) => connect_stacks(&mut g, upper, boundary, &l),
            None => {
                for i in upper.clone() {
                    for k in boundary.clone() {
                        g.add(i, k);
                    }
                }
            }
        }
    }
    Ok(g)
}

/// One connected component of a semi-algebraic set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDescription {
    /// Leaf indices, ascending by path.
    pub cells: Vec<usize>,
    /// Spanning tree edges linking every member cell.
    pub tree: Vec<(usize, usize)>,
    /// Disjunction over member sign vectors of the conjunction of the
    /// corresponding sign conditions on all families.
    pub formula: Formula,
    /// Whether the formula defines exactly this component.
    pub faithful: bool,
}

impl ComponentDescription {
    /// Cells on the tree path from `a` to `b`, both inclusive.
    pub fn path_between(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(x, y) in &self.tree {
            adj.entry(x).or_default().push(y);
            adj.entry(y).or_default().push(x);
        }
        let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = VecDeque::from([a]);
        prev.insert(a, a);
        while let Some(x) = queue.pop_front() {
            if x == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &y in adj.get(&x).into_iter().flatten() {
                if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(y) {
                    e.insert(x);
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Conjunction of the sign conditions of a signature.
pub fn signature_formula(d: &Decomposition, signature: &[Vec<Sign>]) -> Formula {
    let mut atoms = Vec::new();
    for (k, signs) in signature.iter().enumerate() {
        for (p, s) in d.family(k + 1).iter().zip(signs) {
            let full = p.with_vars(d.vars()).expect("prefix of vars");
            atoms.push(Formula::Atom(full, Relation::of_sign(*s)));
        }
    }
    if atoms.is_empty() {
        crate::formula::tautology(d.vars())
    } else {
        Formula::and(atoms)
    }
}

/// Connected components of the set defined by `f`, ordered by their first
/// cell path.
pub fn components(f: &Formula, d: &Decomposition, g: &AdjacencyGraph) -> Result<Vec<ComponentDescription>> {
    let n_leaves = d.leaves().len();
    if g.vertices != n_leaves {
        return Err(Error::InvalidArgument(format!(
            "graph has {} vertices but the decomposition has {n_leaves} leaves",
            g.vertices
        )));
    }
    let sat = d.satisfying_cells(f)?;
    let mut in_set = vec![false; n_leaves];
    for &c in &sat {
        in_set[c] = true;
    }
    let mut uf = UnionFind::new(n_leaves);
    let mut inner_edges = Vec::new();
    for &(a, b) in &g.edges {
        if in_set[a] && in_set[b] {
            uf.union(a, b);
            inner_edges.push((a, b));
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &c in &sat {
        groups.entry(uf.find(c)).or_default().push(c);
    }
    let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
    for c in &mut comps {
        c.sort_by(|a, b| d.leaves()[*a].path.cmp(&d.leaves()[*b].path));
    }
    comps.sort_by(|a, b| d.leaves()[a[0]].path.cmp(&d.leaves()[b[0]].path));

    let signatures: Vec<Vec<Vec<Sign>>> = (0..n_leaves).map(|i| d.signature(i)).collect();
    let mut owner = vec![usize::MAX; n_leaves];
    for (k, c) in comps.iter().enumerate() {
        for &i in c {
            owner[i] = k;
        }
    }
    let adj = {
        let mut m: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in &inner_edges {
            m.entry(a).or_default().push(b);
            m.entry(b).or_default().push(a);
        }
        m
    };
    let mut out = Vec::with_capacity(comps.len());
    for (k, cells) in comps.into_iter().enumerate() {
        // breadth-first spanning tree from the first cell
        let mut tree = Vec::new();
        let mut seen = BTreeSet::from([cells[0]]);
        let mut queue = VecDeque::from([cells[0]]);
        while let Some(x) = queue.pop_front() {
            for &y in adj.get(&x).into_iter().flatten() {
                if seen.insert(y) {
                    tree.push((x, y));
                    queue.push_back(y);
                }
            }
        }
        let mut sigs: Vec<&Vec<Vec<Sign>>> = Vec::new();
        for &c in &cells {
            if !sigs.contains(&&signatures[c]) {
                sigs.push(&signatures[c]);
            }
        }
        let faithful = (0..n_leaves)
            .filter(|&i| owner[i] != k)
            .all(|i| !sigs.contains(&&signatures[i]));
        let formula = Formula::or(sigs.iter().map(|s| signature_formula(d, s)).collect());
        out.push(ComponentDescription {
            cells,
            tree,
            formula,
            faithful,
        });
    }
    Ok(out)
}

/// Everything computed for one set.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub decomposition: Decomposition,
    pub graph: AdjacencyGraph,
    pub components: Vec<ComponentDescription>,
    /// Whether the derivative-closed family was needed for exact descriptions.
    pub refined: bool,
}

/// Nonconstant atom polynomials of a formula.
pub fn formula_polynomials(f: &Formula) -> Vec<Polynomial> {
    f.atoms()
        .into_iter()
        .filter(|(p, _)| !p.is_constant())
        .map(|(p, _)| p.clone())
        .collect()
}

/// Decomposes, builds the adjacency graph and extracts components. When two
/// components cannot be told apart by sign conditions, the decomposition is
/// redone with a family closed under derivatives.
pub fn analyze(f: &Formula, vars: &Vars, options: &CadOptions) -> Result<Analysis> {
    if vars.len() > 3 {
        return Err(Error::UnsupportedDimension(vars.len()));
    }
    let polys = formula_polynomials(f);
    let run = |opts: &CadOptions| -> Result<Analysis> {
        let d = decompose_with(&polys, vars, opts)?;
        let g = adjacency(&d)?;
        let comps = components(f, &d, &g)?;
        Ok(Analysis {
            decomposition: d,
            graph: g,
            components: comps,
            refined: opts.derivative_closure,
        })
    };
    let first = run(options)?;
    if first.components.iter().all(|c| c.faithful) || options.derivative_closure {
        return Ok(first);
    }
    let mut closed = options.clone();
    closed.derivative_closure = true;
    run(&closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::poly::vars_from;

    fn count(text: &str) -> usize {
        let v = vars_from(&["x", "y"]);
        let f = parse_formula(text, &v).unwrap();
        analyze(&f, &v, &CadOptions::default()).unwrap().components.len()
    }

    #[test]
    fn one_dimensional_adjacency() {
        let v = vars_from(&["x"]);
        let f = parse_formula("x^2 - 2 < 0", &v).unwrap();
        let a = analyze(&f, &v, &CadOptions::default()).unwrap();
        assert!(a.graph.contains(1, 2) && a.graph.contains(2, 3));
        assert_eq!(a.components.len(), 1);
    }

    #[test]
    fn circle_adjacency() {
        let v = vars_from(&["x", "y"]);
        let f = parse_formula("x^2 + y^2 - 1 < 0", &v).unwrap();
        let a = analyze(&f, &v, &CadOptions::default()).unwrap();
        let d = &a.decomposition;
        let disk = d.leaf_by_path(&[2, 2]).unwrap();
        for p in [[2, 1], [2, 3], [1, 1], [3, 1]] {
            assert!(a.graph.contains(disk, d.leaf_by_path(&p).unwrap()), "{p:?}");
        }
        assert!(a.graph.certified);
    }

    #[test]
    fn component_counts() {
        assert_eq!(count("x^2 + y^2 - 1 = 0"), 1);
        assert_eq!(count("x*y - 1 = 0"), 2);
        assert_eq!(count("x^2 + y^2 < 1 or (x - 3)^2 + y^2 < 1"), 2);
        assert_eq!(count("x^2 + y^2 + 1 = 0"), 0);
        assert_eq!(count("y^2 = x^2*(x + 1)"), 1);
        assert_eq!(count("x^2 + y^2 > 1"), 1);
    }
}
