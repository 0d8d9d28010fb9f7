//! Rasterizing component counter used to cross-check the exact pipeline.
//!
//! A grid cell is marked when interval evaluation cannot rule the formula
//! out on it, so thin sets (curves, points) are always caught. The count is
//! an approximation: features thinner than the resolution may merge.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::formula::{Formula, Relation};
use crate::interval::{FInterval, FloatPoly};
use crate::rational::{ceil, Rational};

/// Closed axis-aligned box, one `(lo, hi)` pair per variable.
pub type GridBox = Vec<(Rational, Rational)>;

enum Compiled {
    Atom(FloatPoly, Relation),
    And(Vec<Compiled>),
    Or(Vec<Compiled>),
}

impl Compiled {
    fn new(f: &Formula) -> Compiled {
        match f {
            Formula::Atom(p, r) => Compiled::Atom(FloatPoly::new(p), *r),
            Formula::And(fs) => Compiled::And(fs.iter().map(Compiled::new).collect()),
            Formula::Or(fs) => Compiled::Or(fs.iter().map(Compiled::new).collect()),
        }
    }

    fn possible(&self, bx: &[FInterval]) -> bool {
        match self {
            Compiled::Atom(p, r) => {
                let v = p.eval(bx);
                match r {
                    Relation::Eq => v.contains_zero(),
                    Relation::Ne => !(p.is_zero() || (v.lo == 0.0 && v.hi == 0.0)),
                    Relation::Lt => v.lo < 0.0,
                    Relation::Le => v.lo <= 0.0,
                    Relation::Gt => v.hi > 0.0,
                    Relation::Ge => v.hi >= 0.0,
                }
            }
            Compiled::And(fs) => fs.iter().all(|f| f.possible(bx)),
            Compiled::Or(fs) => fs.iter().any(|f| f.possible(bx)),
        }
    }
}

/// Marked raster over a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedGrid {
    /// Cells per axis.
    pub shape: Vec<usize>,
    /// Row-major, first axis slowest.
    pub marked: Vec<bool>,
}

impl MarkedGrid {
    fn index(&self, at: &[usize]) -> usize {
        at.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| acc * n + i)
    }

    fn coords(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.shape.len()];
        for k in (0..self.shape.len()).rev() {
            out[k] = idx % self.shape[k];
            idx /= self.shape[k];
        }
        out
    }

    pub fn count_marked(&self) -> usize {
        self.marked.iter().filter(|m| **m).count()
    }

    /// Number of face-connected marked regions.
    pub fn components(&self) -> usize {
        let n = self.marked.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for idx in 0..n {
            if !self.marked[idx] {
                continue;
            }
            let at = self.coords(idx);
            for k in 0..at.len() {
                if at[k] + 1 < self.shape[k] {
                    let mut nb = at.clone();
                    nb[k] += 1;
                    let j = self.index(&nb);
                    if self.marked[j] {
                        let (a, b) = (find(&mut parent, idx), find(&mut parent, j));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                }
            }
        }
        (0..n)
            .filter(|&i| self.marked[i] && find(&mut parent, i) == i)
            .count()
    }

    /// Plain PGM dump of a 2-D grid, first axis horizontal, for debugging.
    pub fn to_pgm(&self) -> Option<String> {
        if self.shape.len() != 2 {
            return None;
        }
        let (w, h) = (self.shape[0], self.shape[1]);
        let mut s = format!("P2\n{w} {h}\n1\n");
        for row in (0..h).rev() {
            let line: Vec<&str> = (0..w)
                .map(|col| if self.marked[self.index(&[col, row])] { "0" } else { "1" })
                .collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        Some(s)
    }
}

/// Rasterizes `f` over `bx` with square cells of side `resolution`.
pub fn marked_grid(f: &Formula, bx: &[(Rational, Rational)], resolution: &Rational) -> Result<MarkedGrid> {
    if !resolution.is_positive() {
        return Err(Error::InvalidArgument("resolution must be positive".into()));
    }
    if bx.is_empty() || bx.len() > 3 {
        return Err(Error::InvalidArgument(format!(
            "box must have 1 to 3 axes, got {}",
            bx.len()
        )));
    }
    if let Some(vars) = f.vars() {
        if vars.len() != bx.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                got: bx.len(),
            });
        }
    }
    let mut edges: Vec<Vec<FInterval>> = Vec::new();
    let mut shape = Vec::new();
    for (lo, hi) in bx {
        if lo >= hi {
            return Err(Error::InvalidArgument("degenerate box".into()));
        }
        let steps = ceil(&((hi - lo) / resolution));
        let n: usize = steps
            .try_into()
            .map_err(|_| Error::InvalidArgument("grid too large".into()))?;
        if n > 4096 {
            return Err(Error::InvalidArgument("grid too large".into()));
        }
        let axis: Vec<FInterval> = (0..n)
            .map(|i| {
                let a = lo + resolution * Rational::from_integer(i.into());
                let mut b = &a + resolution;
                if &b > hi {
                    b = hi.clone();
                }
                FInterval::new(FInterval::from_rational(&a).lo, FInterval::from_rational(&b).hi)
            })
            .collect();
        shape.push(n);
        edges.push(axis);
    }
    let compiled = Compiled::new(f);
    let total: usize = shape.iter().product();
    let mut grid = MarkedGrid {
        shape,
        marked: vec![false; total],
    };
    for idx in 0..total {
        let at = grid.coords(idx);
        let cell: Vec<FInterval> = at.iter().enumerate().map(|(k, &i)| edges[k][i]).collect();
        grid.marked[idx] = compiled.possible(&cell);
    }
    Ok(grid)
}

/// Number of connected marked regions of the raster of `f`.
pub fn grid_oracle(f: &Formula, bx: &[(Rational, Rational)], resolution: &Rational) -> Result<usize> {
    Ok(marked_grid(f, bx, resolution)?.components())
}
