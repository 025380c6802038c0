//! Oracles written independently of the library algorithms.
#![allow(dead_code)]

use num_traits::{One, Zero};
use t44::arith::{BiPoly, Context, Q};
use t44::matrix::PolyMatrix;

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &PolyMatrix) -> BiPoly {
    let n = m.rows();
    if n == 0 {
        return BiPoly::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = BiPoly::zero();
    for c in 0..n {
        if m.get(0, c).is_zero() {
            continue;
        }
        let minor = cofactor_det(&m.without(0, c));
        let term = m.get(0, c) * &minor;
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Gauss-Jordan inverse of a rational matrix given as rows.
pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        let inv = Q::one() / &m[col][col];
        for v in m[col].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v = &*v - &(&f * pv);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn eval_rows(m: &PolyMatrix, x: &Q, y: &Q) -> Vec<Vec<Q>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).eval(x, y)).collect())
        .collect()
}

/// `F(p) * Phi(p)^-1`, which any partner `Psi` must equal at `p`.
pub fn partner_at(ctx: &Context, phi: &PolyMatrix, x: &Q, y: &Q) -> Option<Vec<Vec<Q>>> {
    let f = ctx.f().eval(x, y);
    inverse(&eval_rows(phi, x, y)).map(|inv| {
        inv.into_iter()
            .map(|r| r.into_iter().map(|v| &v * &f).collect())
            .collect()
    })
}

/// Parses a grid of z-form strings.
pub fn zgrid(ctx: &Context, rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| ctx.parse_zform(s).unwrap()).collect())
            .collect(),
    )
    .unwrap()
}

pub fn render_grid(ctx: &Context, m: &PolyMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|p| ctx.render(p)).collect())
        .collect()
}

/// Multiplicity of each `z_i` in `p` by repeated exact division, plus the
/// cofactor left over.
pub fn z_exponents(ctx: &Context, p: &BiPoly) -> ([u32; 4], BiPoly) {
    assert!(!p.is_zero());
    let mut rest = p.clone();
    let mut e = [0u32; 4];
    for (i, slot) in e.iter_mut().enumerate() {
        while let Ok(d) = rest.exact_div(ctx.z(i + 1)) {
            rest = d;
            *slot += 1;
        }
    }
    (e, rest)
}

/// Size and `z` exponents of `det`, asserting the determinant is a unit
/// times a z-monomial.
pub fn det_shape(ctx: &Context, m: &PolyMatrix) -> (usize, [u32; 4]) {
    let (e, rest) = z_exponents(ctx, &cofactor_det(m));
    assert!(rest.is_constant() && !rest.is_zero(), "det is not a z-monomial");
    (m.rows(), e)
}
