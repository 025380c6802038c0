//! Exact arithmetic: rationals, bivariate polynomials over Q, the curve
//! context with its linear forms `z1..z4`, and small rational matrices.

mod context;
mod poly;
mod qmat;
mod rational;

pub use context::{ctx_new, z_monomial_decompose, Context, DetProfile, ZMonomial};
pub use poly::{poly_add, poly_exact_div, poly_mul, poly_sub, BiPoly, Monomial};
pub use qmat::QMat;
pub use rational::{format_rational, parse_rational, q, q_frac, Q};
