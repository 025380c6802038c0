//! Ext block matrices of the first-level modules, one constructor per word
//! kind, together with the admissible row and column transformations.
//!
//! Row stripes are indexed by the component rings `R3, R4, R34`, column
//! stripes by `R1, R2, R12`. `E_1^T` blocks that lose all their rows (n, k = 0)
//! place their 1 in the next row of the same stripe; this keeps the
//! representation indecomposable.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{q, Context, QMat, Q};
use crate::error::{Error, Result};
use crate::words::{Marks, Sign, WordKind, WordSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtBlockMatrix {
    row_stripes: [usize; 3],
    col_stripes: [usize; 3],
    entries: QMat,
}

impl ExtBlockMatrix {
    pub fn new(row_stripes: [usize; 3], col_stripes: [usize; 3], entries: QMat) -> Result<Self> {
        let (r, c): (usize, usize) = (row_stripes.iter().sum(), col_stripes.iter().sum());
        if entries.rows() != r || entries.cols() != c {
            return Err(Error::ShapeMismatch(format!(
                "stripes give {r}x{c}, entries are {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        Ok(ExtBlockMatrix {
            row_stripes,
            col_stripes,
            entries,
        })
    }

    pub fn zeros(row_stripes: [usize; 3], col_stripes: [usize; 3]) -> Self {
        let entries = QMat::zeros(row_stripes.iter().sum(), col_stripes.iter().sum());
        ExtBlockMatrix {
            row_stripes,
            col_stripes,
            entries,
        }
    }

    /// `(m3, m4, m34)`.
    pub fn row_stripes(&self) -> [usize; 3] {
        self.row_stripes
    }

    /// `(n1, n2, n12)`.
    pub fn col_stripes(&self) -> [usize; 3] {
        self.col_stripes
    }

    pub fn entries(&self) -> &QMat {
        &self.entries
    }

    pub fn rows(&self) -> usize {
        self.entries.rows()
    }

    pub fn cols(&self) -> usize {
        self.entries.cols()
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        self.entries.get(r, c)
    }

    pub fn rank(&self) -> usize {
        self.entries.rank()
    }

    /// Stripe number (0, 1, 2) and index within it.
    pub fn row_position(&self, r: usize) -> (usize, usize) {
        position(&self.row_stripes, r)
    }

    pub fn col_position(&self, c: usize) -> (usize, usize) {
        position(&self.col_stripes, c)
    }

    /// Interchanges the first two horizontal stripes.
    pub fn swap_row_stripes(&self) -> ExtBlockMatrix {
        let [a, b, c] = self.row_stripes;
        let order: Vec<usize> = (a..a + b).chain(0..a).chain(a + b..a + b + c).collect();
        ExtBlockMatrix {
            row_stripes: [b, a, c],
            col_stripes: self.col_stripes,
            entries: self.entries.select_rows(&order),
        }
    }

    /// Interchanges the first two vertical stripes.
    pub fn swap_col_stripes(&self) -> ExtBlockMatrix {
        let [a, b, c] = self.col_stripes;
        let order: Vec<usize> = (a..a + b).chain(0..a).chain(a + b..a + b + c).collect();
        ExtBlockMatrix {
            row_stripes: self.row_stripes,
            col_stripes: [b, a, c],
            entries: self.entries.select_cols(&order),
        }
    }

    /// Matrix transpose; row stripes `(3, 4, 34)` take the roles of `(1, 2, 12)`.
    pub fn transpose(&self) -> ExtBlockMatrix {
        ExtBlockMatrix {
            row_stripes: self.col_stripes,
            col_stripes: self.row_stripes,
            entries: self.entries.transpose(),
        }
    }
}

fn position(stripes: &[usize; 3], i: usize) -> (usize, usize) {
    let mut start = 0;
    for (s, &len) in stripes.iter().enumerate() {
        if i < start + len {
            return (s, i - start);
        }
        start += len;
    }
    panic!("index {i} outside stripes {stripes:?}");
}

impl fmt::Display for ExtBlockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row_cuts = cuts(&self.row_stripes);
        let col_cuts = cuts(&self.col_stripes);
        let cells: Vec<Vec<String>> = (0..self.rows())
            .map(|r| {
                (0..self.cols())
                    .map(|c| crate::arith::format_rational(self.get(r, c)))
                    .collect()
            })
            .collect();
        let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        writeln!(
            f,
            "rows (3,4,34) = {:?}, cols (1,2,12) = {:?}",
            self.row_stripes, self.col_stripes
        )?;
        for (r, row) in cells.iter().enumerate() {
            if r > 0 && row_cuts.contains(&r) {
                writeln!(f, "{}", "-".repeat((w + 1) * self.cols() + 2 * col_cuts.len()))?;
            }
            let mut line = String::new();
            for (c, cell) in row.iter().enumerate() {
                if c > 0 && col_cuts.contains(&c) {
                    line.push_str(" |");
                }
                line.push_str(&format!(" {cell:>w$}"));
            }
            writeln!(f, "{}", line.trim_start())?;
        }
        Ok(())
    }
}

fn cuts(stripes: &[usize; 3]) -> Vec<usize> {
    vec![stripes[0], stripes[0] + stripes[1]]
}

/// Fills a matrix block by block with coordinates relative to the whole.
struct Canvas {
    m: QMat,
}

impl Canvas {
    fn new(rows: usize, cols: usize) -> Self {
        Canvas {
            m: QMat::zeros(rows, cols),
        }
    }

    fn one(&mut self, r: usize, c: usize) {
        self.m.set(r, c, Q::one());
    }

    fn identity(&mut self, r0: usize, c0: usize, n: usize) {
        for i in 0..n {
            self.one(r0 + i, c0 + i);
        }
    }

    /// Lower Jordan block: `mu` on the diagonal, 1 below it.
    fn jordan(&mut self, r0: usize, c0: usize, n: usize, mu: &Q) {
        for i in 0..n {
            self.m.set(r0 + i, c0 + i, mu.clone());
            if i > 0 {
                self.one(r0 + i, c0 + i - 1);
            }
        }
    }

    fn finish(self, rows: [usize; 3], cols: [usize; 3]) -> ExtBlockMatrix {
        ExtBlockMatrix::new(rows, cols, self.m).expect("constructor stripes match its canvas")
    }
}

fn x0(n: usize, mu: &Q) -> ExtBlockMatrix {
    let mut k = Canvas::new(2 * n, 2 * n);
    k.identity(0, 0, n);
    k.jordan(0, n, n, mu);
    k.identity(n, 0, n);
    k.identity(n, n, n);
    k.finish([n, n, 0], [n, n, 0])
}

fn x1(n: usize) -> ExtBlockMatrix {
    let m = n / 2;
    if n.is_multiple_of(2) {
        let mut k = Canvas::new(2 * m, 2 * m);
        k.identity(0, 0, m);
        k.jordan(0, m, m, &Q::zero());
        k.identity(m, 0, m);
        k.identity(m, m, m);
        return k.finish([m, m, 0], [m, m, 0]);
    }
    let mut k = Canvas::new(2 * m + 1, 2 * m + 1);
    k.identity(0, 0, m);
    k.jordan(0, m + 1, m, &Q::zero());
    k.one(m, m);
    if m > 0 {
        k.one(m, 2 * m);
    }
    k.identity(m + 1, 0, m);
    k.identity(m + 1, m + 1, m);
    k.finish([m + 1, m, 0], [m + 1, m, 0])
}

fn x2(n: usize) -> ExtBlockMatrix {
    let mut k = Canvas::new(2 * n + 1, 2 * n);
    k.identity(0, 0, n);
    k.jordan(0, n, n, &Q::one());
    if n > 0 {
        k.one(n, 2 * n - 1);
    }
    k.identity(n + 1, 0, n);
    k.identity(n + 1, n, n);
    k.finish([n + 1, n, 0], [n, n, 0])
}

fn x3(n: usize) -> ExtBlockMatrix {
    let mut k = Canvas::new(2 * n + 3, 2 * n + 3);
    k.identity(0, 0, n);
    k.identity(0, n + 1, n);
    k.one(n, n);
    k.one(n, 2 * n + 1);
    k.one(n + 1, 2 * n + 2);
    let r4 = n + 2;
    k.jordan(r4, 0, n, &Q::one());
    k.identity(r4, n + 1, n);
    // E_1^T link from stripe 4 to the extra stripe-1 column.
    k.one(r4, n);
    if n > 0 {
        k.one(r4 + n, n - 1);
    }
    k.one(r4 + n, 2 * n + 2);
    k.finish([n + 2, n + 1, 0], [n + 1, n + 1, 1])
}

fn x4(n: usize) -> ExtBlockMatrix {
    let mut k = Canvas::new(2 * n + 2, 2 * n + 1);
    k.identity(0, 0, n);
    k.jordan(0, n + 1, n, &Q::one());
    k.one(n, n);
    if n > 0 {
        k.one(n, 2 * n);
    }
    k.identity(n + 1, 0, n);
    k.identity(n + 1, n + 1, n);
    k.one(2 * n + 1, n);
    k.finish([n + 1, n + 1, 0], [n + 1, n, 0])
}

fn x5(n: usize) -> ExtBlockMatrix {
    let mut k = Canvas::new(2 * n + 2, 2 * n + 2);
    k.identity(0, 0, n);
    k.jordan(0, n + 1, n, &Q::one());
    // E_1^T link into the extra stripe-1 column; row n when the block is empty.
    k.one(0, n);
    if n > 0 {
        k.one(n, 2 * n);
    }
    k.one(n, 2 * n + 1);
    k.identity(n + 1, 0, n);
    k.identity(n + 1, n + 1, n);
    k.one(2 * n + 1, 2 * n + 1);
    k.finish([n + 1, n + 1, 0], [n + 1, n, 1])
}

fn x6(n: usize) -> ExtBlockMatrix {
    let mut k = Canvas::new(2 * n, 2 * n);
    k.identity(0, 0, n);
    k.jordan(0, n, n, &Q::one());
    k.identity(n, 0, n);
    k.identity(n, n, n);
    k.finish([n, n, 0], [n, n, 0])
}

fn x7(n: usize) -> ExtBlockMatrix {
    if n == 0 {
        // The word e2 alone: one stripe-34 row and no columns.
        return Canvas::new(1, 0).finish([0, 0, 1], [0, 0, 0]);
    }
    let m = n / 2;
    let kk = n - m - 1;
    let odd = n % 2 == 1;
    let mut k = Canvas::new(2 * n + 1, 2 * n);
    // Stripe 3.
    k.identity(0, 0, m);
    k.jordan(0, n, m, &Q::one());
    k.identity(m, m, kk);
    k.identity(m, n + m, kk);
    if !odd && kk > 0 {
        k.one(m + kk, m + kk - 1);
    }
    if m > 0 {
        k.one(m + kk, n + m - 1);
    }
    // Stripe 4.
    let r4 = n;
    k.identity(r4, 0, m);
    k.identity(r4, n, m);
    k.jordan(r4 + m, m, kk, &Q::one());
    k.identity(r4 + m, n + m, kk);
    // E_1^T link; falls to the last stripe-4 row when k = 0.
    k.one(r4 + m, m + kk);
    if kk > 0 {
        k.one(r4 + m + kk, m + kk - 1);
    }
    if odd && m > 0 {
        k.one(r4 + m + kk, n + m - 1);
    }
    // Stripe 34.
    k.one(2 * n, m + kk);
    k.one(2 * n, n + m + kk);
    k.finish([n, n, 1], [n, n, 0])
}

fn x8(n: usize) -> ExtBlockMatrix {
    let mut k = Canvas::new(2 * n + 2, 2 * n + 1);
    k.identity(0, 0, n);
    k.jordan(0, n, n, &Q::one());
    if n > 0 {
        k.one(n, 2 * n - 1);
    }
    k.one(n, 2 * n);
    k.identity(n + 1, 0, n);
    k.identity(n + 1, n, n);
    k.one(2 * n + 1, 2 * n);
    k.finish([n + 1, n + 1, 0], [n, n, 1])
}

fn x9(n: usize) -> ExtBlockMatrix {
    let mut k = Canvas::new(2 * n + 3, 2 * n + 3);
    k.identity(0, 0, n);
    k.identity(0, n + 1, n);
    k.one(n, 2 * n + 2);
    let r4 = n + 1;
    k.jordan(r4, 0, n, &Q::one());
    k.one(r4, n);
    k.identity(r4, n + 1, n);
    if n > 0 {
        k.one(r4 + n, n - 1);
    }
    k.one(r4 + n, 2 * n + 2);
    k.one(2 * n + 2, n);
    k.one(2 * n + 2, 2 * n + 1);
    k.finish([n + 1, n + 1, 1], [n + 1, n + 1, 1])
}

fn x10() -> ExtBlockMatrix {
    let mut k = Canvas::new(1, 1);
    k.one(0, 0);
    k.finish([0, 0, 1], [0, 0, 1])
}

/// Eigenvalue of a `W0` spec, falling back to the context.
pub(crate) fn resolve_mu(w: &WordSpec, ctx: &Context) -> Result<Q> {
    w.mu()
        .or(ctx.mu())
        .cloned()
        .ok_or_else(|| Error::InvalidEigenvalue("W0 needs an eigenvalue mu".into()))
}

/// The Ext block matrix of the module attached to `w`.
pub fn build_x(w: &WordSpec, ctx: &Context) -> Result<ExtBlockMatrix> {
    let n = w.size() as usize;
    let base = match w.kind() {
        WordKind::W0 => {
            let mu = resolve_mu(w, ctx)?;
            crate::words::check_eigenvalue(&mu)?;
            x0(n, &mu)
        }
        WordKind::W1 => x1(n),
        WordKind::W2 => x2(n),
        WordKind::W3 => x3(n),
        WordKind::W4 => x4(n),
        WordKind::W5 => x5(n),
        WordKind::W6 => x6(n),
        WordKind::W7 => x7(n),
        WordKind::W8 => x8(n),
        WordKind::W9 => x9(n),
        WordKind::W10 => x10(),
    };
    let marked = apply_marks(base, w.kind(), w.marks());
    Ok(if w.transposed() {
        marked.transpose()
    } else {
        marked
    })
}

/// A `-` on an `e1` end interchanges the first two horizontal stripes, on an
/// `f1` end the first two vertical stripes.
fn apply_marks(x: ExtBlockMatrix, kind: WordKind, marks: Marks) -> ExtBlockMatrix {
    let minus = |s: Sign| s == Sign::Minus;
    match (kind, marks) {
        (WordKind::W1, Marks::Two(d1, d2)) => {
            let x = if minus(d1) { x.swap_row_stripes() } else { x };
            if minus(d2) {
                x.swap_col_stripes()
            } else {
                x
            }
        }
        (WordKind::W2 | WordKind::W3, Marks::One(s)) if minus(s) => x.swap_row_stripes(),
        (WordKind::W4 | WordKind::W5, Marks::One(s)) if minus(s) => x.swap_col_stripes(),
        _ => x,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Row,
    Column,
}

/// Scalar admissible transformation of one side.
///
/// Rows: `S = [[A3, 0, B3], [0, A4, B4], [0, 0, A34]]` acting as `S X`, so
/// stripe-34 rows may be added to stripes 3 and 4. Columns:
/// `T = [[C1, 0, 0], [0, C2, 0], [D1, D2, C12]]` acting as `X T`, so stripe-12
/// columns may be added to stripes 1 and 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleTransform {
    pub side: Side,
    pub within: [QMat; 3],
    pub third_into: [QMat; 2],
}

impl AdmissibleTransform {
    pub fn identity(side: Side, stripes: [usize; 3]) -> Self {
        let [a, b, c] = stripes;
        let third_into = match side {
            Side::Row => [QMat::zeros(a, c), QMat::zeros(b, c)],
            Side::Column => [QMat::zeros(c, a), QMat::zeros(c, b)],
        };
        AdmissibleTransform {
            side,
            within: [QMat::identity(a), QMat::identity(b), QMat::identity(c)],
            third_into,
        }
    }

    pub fn stripes(&self) -> [usize; 3] {
        [
            self.within[0].rows(),
            self.within[1].rows(),
            self.within[2].rows(),
        ]
    }

    fn check(&self, side: Side, stripes: [usize; 3]) -> Result<()> {
        if self.side != side {
            return Err(Error::NotAdmissible(format!(
                "expected a {side:?} transform, got {:?}",
                self.side
            )));
        }
        for (blk, &s) in self.within.iter().zip(&stripes) {
            if blk.rows() != s || blk.cols() != s {
                return Err(Error::ShapeMismatch(format!(
                    "within-stripe block {}x{} for a stripe of size {s}",
                    blk.rows(),
                    blk.cols()
                )));
            }
            if !blk.is_invertible() {
                return Err(Error::NotAdmissible("within-stripe block is singular".into()));
            }
        }
        let [a, b, c] = stripes;
        let want = match side {
            Side::Row => [(a, c), (b, c)],
            Side::Column => [(c, a), (c, b)],
        };
        for (blk, (r, cc)) in self.third_into.iter().zip(want) {
            if blk.rows() != r || blk.cols() != cc {
                return Err(Error::ShapeMismatch(format!(
                    "third-stripe block {}x{}, expected {r}x{cc}",
                    blk.rows(),
                    blk.cols()
                )));
            }
        }
        Ok(())
    }

    /// The full square matrix `S` or `T`.
    pub fn matrix(&self) -> QMat {
        let [a, b, c] = self.stripes();
        let mut m = QMat::zeros(a + b + c, a + b + c);
        m.paste(0, 0, &self.within[0]);
        m.paste(a, a, &self.within[1]);
        m.paste(a + b, a + b, &self.within[2]);
        match self.side {
            Side::Row => {
                m.paste(0, a + b, &self.third_into[0]);
                m.paste(a, a + b, &self.third_into[1]);
            }
            Side::Column => {
                m.paste(a + b, 0, &self.third_into[0]);
                m.paste(a + b, a, &self.third_into[1]);
            }
        }
        m
    }
}

/// `S X T` for a row transform `S` and a column transform `T`.
pub fn apply_transform(
    x: &ExtBlockMatrix,
    s: &AdmissibleTransform,
    t: &AdmissibleTransform,
) -> Result<ExtBlockMatrix> {
    s.check(Side::Row, x.row_stripes)?;
    t.check(Side::Column, x.col_stripes)?;
    let entries = s.matrix().mul(&x.entries)?.mul(&t.matrix())?;
    ExtBlockMatrix::new(x.row_stripes, x.col_stripes, entries)
}

/// Deterministic transform from `seed`. Within-stripe entries lie in
/// `-3..=3` and are redrawn until invertible; coupling entries lie in `-2..=2`.
pub fn random_admissible(stripes: [usize; 3], side: Side, seed: u64) -> AdmissibleTransform {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |r: usize, c: usize, bound: i64, rng: &mut ChaCha8Rng| {
        let mut m = QMat::zeros(r, c);
        for i in 0..r {
            for j in 0..c {
                m.set(i, j, q(rng.gen_range(-bound..=bound)));
            }
        }
        m
    };
    let mut within = Vec::with_capacity(3);
    for &s in &stripes {
        loop {
            let m = draw(s, s, 3, &mut rng);
            if m.is_invertible() {
                within.push(m);
                break;
            }
        }
    }
    let [a, b, c] = stripes;
    let third_into = match side {
        Side::Row => [draw(a, c, 2, &mut rng), draw(b, c, 2, &mut rng)],
        Side::Column => [draw(c, a, 2, &mut rng), draw(c, b, 2, &mut rng)],
    };
    let within: [QMat; 3] = within.try_into().expect("three stripes");
    AdmissibleTransform {
        side,
        within,
        third_into,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::WordSpec;

    fn ints(x: &ExtBlockMatrix) -> Vec<Vec<i64>> {
        (0..x.rows())
            .map(|r| {
                (0..x.cols())
                    .map(|c| i64::try_from(x.get(r, c).to_integer()).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn worked_example_matrix() {
        let ctx = Context::standard();
        let w = WordSpec::plain(WordKind::W2, 2, Marks::One(Sign::Plus)).unwrap();
        let x = build_x(&w, &ctx).unwrap();
        assert_eq!(x.row_stripes(), [3, 2, 0]);
        assert_eq!(x.col_stripes(), [2, 2, 0]);
        assert_eq!(
            ints(&x),
            vec![
                vec![1, 0, 1, 0],
                vec![0, 1, 1, 1],
                vec![0, 0, 0, 1],
                vec![1, 0, 1, 0],
                vec![0, 1, 0, 1],
            ]
        );
        let t = build_x(&crate::words::word_transpose(&w).unwrap(), &ctx).unwrap();
        assert_eq!(t.row_stripes(), [2, 2, 0]);
        assert_eq!(t.col_stripes(), [3, 2, 0]);
        assert_eq!(t.entries(), &x.entries().transpose());
    }

    #[test]
    fn regular_module_block() {
        let w = WordSpec::plain(WordKind::W10, 0, Marks::None).unwrap();
        let x = build_x(&w, &Context::standard()).unwrap();
        assert_eq!((x.row_stripes(), x.col_stripes()), ([0, 0, 1], [0, 0, 1]));
        assert_eq!(ints(&x), vec![vec![1]]);
    }

    #[test]
    fn stripe_sizes() {
        let ctx = Context::standard();
        let cases = [
            (WordKind::W1, 3, "++", [2, 1, 0], [2, 1, 0]),
            (WordKind::W3, 2, "+", [4, 3, 0], [3, 3, 1]),
            (WordKind::W4, 2, "+", [3, 3, 0], [3, 2, 0]),
            (WordKind::W5, 2, "+", [3, 3, 0], [3, 2, 1]),
            (WordKind::W6, 2, "", [2, 2, 0], [2, 2, 0]),
            (WordKind::W7, 3, "", [3, 3, 1], [3, 3, 0]),
            (WordKind::W8, 2, "", [3, 3, 0], [2, 2, 1]),
            (WordKind::W9, 2, "", [3, 3, 1], [3, 3, 1]),
            (WordKind::W4, 1, "-", [2, 2, 0], [1, 2, 0]),
        ];
        for (kind, n, marks, rows, cols) in cases {
            let w = WordSpec::plain(kind, n, marks.parse().unwrap()).unwrap();
            let x = build_x(&w, &ctx).unwrap();
            assert_eq!((x.row_stripes(), x.col_stripes()), (rows, cols), "{w}");
        }
    }

    #[test]
    fn cycle_uses_context_eigenvalue() {
        let w = WordSpec::plain(WordKind::W0, 1, Marks::None).unwrap();
        let x = build_x(&w, &Context::standard()).unwrap();
        assert_eq!(ints(&x), vec![vec![1, 3], vec![1, 1]]);
        let bare = Context::new(q(2), None).unwrap();
        assert!(matches!(build_x(&w, &bare), Err(Error::InvalidEigenvalue(_))));
    }

    #[test]
    fn mark_flip_is_involution() {
        let w = WordSpec::plain(WordKind::W3, 2, Marks::One(Sign::Plus)).unwrap();
        let x = build_x(&w, &Context::standard()).unwrap();
        assert_eq!(x.swap_row_stripes().swap_row_stripes(), x);
        assert_eq!(x.swap_col_stripes().swap_col_stripes(), x);
    }

    #[test]
    fn transforms() {
        let w = WordSpec::plain(WordKind::W2, 2, Marks::One(Sign::Plus)).unwrap();
        let x = build_x(&w, &Context::standard()).unwrap();
        let s = AdmissibleTransform::identity(Side::Row, x.row_stripes());
        let t = AdmissibleTransform::identity(Side::Column, x.col_stripes());
        assert_eq!(apply_transform(&x, &s, &t).unwrap(), x);

        let s1 = random_admissible(x.row_stripes(), Side::Row, 7);
        assert_eq!(s1, random_admissible(x.row_stripes(), Side::Row, 7));
        assert_ne!(s1, random_admissible(x.row_stripes(), Side::Row, 8));
        let t1 = random_admissible(x.col_stripes(), Side::Column, 7);
        let y = apply_transform(&x, &s1, &t1).unwrap();
        assert_eq!(y.rank(), x.rank());

        let lone = random_admissible([0, 0, 1], Side::Row, 3);
        assert_eq!(lone.matrix().rows(), 1);
        assert!(!lone.matrix().get(0, 0).is_zero());

        let mut bad = s1.clone();
        bad.within[0] = QMat::zeros(3, 3);
        assert!(matches!(apply_transform(&x, &bad, &t1), Err(Error::NotAdmissible(_))));
        assert!(matches!(apply_transform(&x, &t1, &t1), Err(Error::NotAdmissible(_))));
    }
}
