use crate::arith::BiPoly;
use crate::error::{Error, Result};

use super::PolyMatrix;

/// Exact determinant.
///
/// Rows and columns holding a single nonzero entry are expanded away first;
/// the remaining core goes through fraction-free Bareiss elimination.
pub fn mat_det(a: &PolyMatrix) -> Result<BiPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let mut rows: Vec<usize> = (0..a.rows()).collect();
    let mut cols: Vec<usize> = (0..a.cols()).collect();
    let mut factor = BiPoly::one();
    let mut negate = false;

    loop {
        let mut peeled = false;
        for (pr, &r) in rows.iter().enumerate() {
            let nz: Vec<usize> = (0..cols.len())
                .filter(|&pc| !a.get(r, cols[pc]).is_zero())
                .collect();
            match nz.len() {
                0 => return Ok(BiPoly::zero()),
                1 => {
                    let pc = nz[0];
                    factor = &factor * a.get(r, cols[pc]);
                    negate ^= (pr + pc) % 2 == 1;
                    rows.remove(pr);
                    cols.remove(pc);
                    peeled = true;
                    break;
                }
                _ => {}
            }
        }
        if peeled {
            continue;
        }
        for (pc, &c) in cols.iter().enumerate() {
            let nz: Vec<usize> = (0..rows.len())
                .filter(|&pr| !a.get(rows[pr], c).is_zero())
                .collect();
            match nz.len() {
                0 => return Ok(BiPoly::zero()),
                1 => {
                    let pr = nz[0];
                    factor = &factor * a.get(rows[pr], c);
                    negate ^= (pr + pc) % 2 == 1;
                    rows.remove(pr);
                    cols.remove(pc);
                    peeled = true;
                    break;
                }
                _ => {}
            }
        }
        if !peeled {
            break;
        }
    }

    let core: Vec<Vec<BiPoly>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| a.get(r, c).clone()).collect())
        .collect();
    let d = bareiss(core)?;
    let d = &factor * &d;
    Ok(if negate { -d } else { d })
}

fn bareiss(mut m: Vec<Vec<BiPoly>>) -> Result<BiPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(BiPoly::one());
    }
    let mut negate = false;
    let mut prev = BiPoly::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(BiPoly::zero());
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = &m[k][k] * &m[i][j];
                let v = if m[i][k].is_zero() || m[k][j].is_zero() {
                    lhs
                } else {
                    &lhs - &(&m[i][k] * &m[k][j])
                };
                m[i][j] = if v.is_zero() { v } else { v.exact_div(&prev)? };
            }
            m[i][k] = BiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}
