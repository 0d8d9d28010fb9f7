//! Exact cylindrical algebraic decomposition of semi-algebraic sets, their
//! connected components, and division by generic monic polynomials.

pub mod algebra;
pub mod cad;
pub mod connectivity;
pub mod dense;
pub mod division;
pub mod error;
pub mod formula;
pub mod interval;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod roots;

pub use algebra::{
    apply_shear, find_shear, initial_form, newton_symmetrize, sigma_embed, single_equation, Shear,
};
pub use dense::DensePoly;
pub use division::{
    generic_divide, generic_divide_via_roots, prepare, root_bound, weierstrass_divide,
    GenericDivision, Prepared, RationalFunction, WeierstrassDivision,
};
pub use error::{Error, Result};
pub use poly::{vars_from, Polynomial, UnivariateView, Vars};
pub use rational::{Rational, Sign};
pub use roots::{isolate_real_roots, sign_at, square_free, AlgebraicNumber, Coord, SamplePoint};
pub use formula::{parse_formula, parse_polynomial, Formula, Relation};
pub use cad::{decompose, decompose_with, lift_stack, project, CadOptions, Cell, Decomposition, SignCondition, Stack};
pub use connectivity::{adjacency, analyze, components, AdjacencyGraph, Analysis, ComponentDescription};
pub use oracle::{grid_oracle, marked_grid, GridBox, MarkedGrid};
