//! Matrices over Q[x,y]: products, determinants, the polynomial partner
//! solve, factorization checks and permutation matching.

mod det;
mod permute;
mod solve;
mod verify;

use std::fmt;

use crate::arith::{BiPoly, Context, Q};
use crate::error::{Error, Result};

pub use det::mat_det;
pub use permute::match_up_to_permutation;
pub use solve::solve_psi;
pub use verify::{verify_factorization, VerificationReport};

/// Dense matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BiPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![BiPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::scalar(n, &BiPoly::one())
    }

    /// `p` times the identity.
    pub fn scalar(n: usize, p: &BiPoly) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BiPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BiPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BiPoly) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BiPoly] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &BiPoly> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<BiPoly>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&BiPoly) -> BiPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != o.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = PolyMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> PolyMatrix {
        self.map(|p| p.scale(c))
    }

    pub fn scale_row(&mut self, r: usize, p: &BiPoly) {
        for c in 0..self.cols {
            let v = self.get(r, c) * p;
            self.set(r, c, v);
        }
    }

    pub fn scale_col(&mut self, c: usize, p: &BiPoly) {
        for r in 0..self.rows {
            let v = self.get(r, c) * p;
            self.set(r, c, v);
        }
    }

    /// `out[i][j] = self[rows[i]][cols[j]]`.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn without(&self, row: usize, col: usize) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != col).collect();
        self.select(&rows, &cols)
    }

    /// Every entry vanishes at the origin.
    pub fn is_reduced(&self) -> bool {
        self.data.iter().all(BiPoly::in_max_ideal)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|p| !p.is_zero()).count()
    }

    pub fn eval(&self, x: &Q, y: &Q) -> crate::arith::QMat {
        let mut m = crate::arith::QMat::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).eval(x, y));
            }
        }
        m
    }

    /// Grid of entries, z-form where possible unless `expanded`.
    pub fn render(&self, ctx: &Context, expanded: bool) -> String {
        let cells: Vec<String> = self
            .data
            .iter()
            .map(|p| if expanded { p.to_string() } else { ctx.render(p) })
            .collect();
        grid(self.rows, self.cols, &cells)
    }
}

pub(crate) fn grid(rows: usize, cols: usize, cells: &[String]) -> String {
    let mut widths = vec![1; cols];
    for (i, cell) in cells.iter().enumerate() {
        widths[i % cols.max(1)] = widths[i % cols.max(1)].max(cell.len());
    }
    let mut out = String::new();
    for r in 0..rows {
        let row: Vec<String> = (0..cols)
            .map(|c| format!("{:>w$}", cells[r * cols + c], w = widths[c]))
            .collect();
        out.push_str(&format!("[ {} ]\n", row.join("  ")));
    }
    out
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(BiPoly::to_string).collect();
        f.write_str(&grid(self.rows, self.cols, &cells))
    }
}

pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    a.mul(b)
}
