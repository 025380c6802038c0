//! Closed-form relation matrices `Phi_k(n)` and `Phi*_k(n)` for every word
//! kind, matrix factorizations `(Phi, Psi)`, determinant profiles and the
//! Auslander-Reiten translation `tau (Phi, Psi) = (Psi, Phi)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{format_rational, q, Context, DetProfile, Q};
use crate::error::{Error, Result};
use crate::families::resolve_mu;
use crate::matrix::{mat_det, solve_psi, verify_factorization, PolyMatrix, VerificationReport};
use crate::words::{Letter, Marks, Sign, WordKind, WordSpec};

/// Families are indexed by the same data as words.
pub type FamilyPhiSpec = WordSpec;

/// Degree bound for the partner solve; every family needs at most 3.
pub const DEFAULT_DEGREE_BOUND: u32 = 4;

/// How a `-` mark acts on a closed-form matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MarkConvention {
    /// `e1` end swaps `z3, z4`; `f1` end swaps `z1, z2`. Marks act on the
    /// stripes attached to their letter.
    #[default]
    Stripe,
    /// `e1` end swaps `z1, z2`; `f1` end swaps `z3, z4`.
    Literal,
}

impl MarkConvention {
    fn swap_for(self, end: Letter) -> (usize, usize) {
        match (self, end) {
            (MarkConvention::Stripe, Letter::E1) | (MarkConvention::Literal, Letter::F1) => (2, 3),
            _ => (0, 1),
        }
    }
}

impl fmt::Display for MarkConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkConvention::Stripe => f.write_str("stripe (e1: z3<->z4, f1: z1<->z2)"),
            MarkConvention::Literal => f.write_str("literal (e1: z1<->z2, f1: z3<->z4)"),
        }
    }
}

/// Matrix whose entries are zero or `c * z1^a1 z2^a2 z3^a3 z4^a4`.
#[derive(Clone, Debug, PartialEq)]
struct ZMat {
    rows: usize,
    cols: usize,
    e: Vec<Option<(Q, [u32; 4])>>,
}

/// `z` exponents from a list of 1-based indices, e.g. `zs(&[1, 4])` for `z1 z4`.
fn zs(idx: &[usize]) -> [u32; 4] {
    let mut a = [0; 4];
    for &i in idx {
        a[i - 1] += 1;
    }
    a
}

impl ZMat {
    fn new(rows: usize, cols: usize) -> Self {
        ZMat {
            rows,
            cols,
            e: vec![None; rows * cols],
        }
    }

    fn put(&mut self, r: usize, c: usize, coeff: i64, idx: &[usize]) {
        self.put_q(r, c, q(coeff), zs(idx));
    }

    fn put_q(&mut self, r: usize, c: usize, coeff: Q, z: [u32; 4]) {
        self.e[r * self.cols + c] = (!coeff.is_zero()).then_some((coeff, z));
    }

    fn get(&self, r: usize, c: usize) -> &Option<(Q, [u32; 4])> {
        &self.e[r * self.cols + c]
    }

    fn select(&self, rows: &[usize], cols: &[usize]) -> ZMat {
        let mut out = ZMat::new(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.e[i * out.cols + j] = self.get(r, c).clone();
            }
        }
        out
    }

    fn drop_first(&self) -> ZMat {
        let rows: Vec<usize> = (1..self.rows).collect();
        let cols: Vec<usize> = (1..self.cols).collect();
        self.select(&rows, &cols)
    }

    fn drop_last(&self) -> ZMat {
        let rows: Vec<usize> = (0..self.rows - 1).collect();
        let cols: Vec<usize> = (0..self.cols - 1).collect();
        self.select(&rows, &cols)
    }

    fn drop_first_and_last(&self) -> ZMat {
        self.drop_first().drop_last()
    }

    fn mul_row(mut self, r: usize, zi: usize) -> ZMat {
        for c in 0..self.cols {
            if let Some((_, z)) = &mut self.e[r * self.cols + c] {
                z[zi - 1] += 1;
            }
        }
        self
    }

    fn mul_col(mut self, c: usize, zi: usize) -> ZMat {
        for r in 0..self.rows {
            if let Some((_, z)) = &mut self.e[r * self.cols + c] {
                z[zi - 1] += 1;
            }
        }
        self
    }

    fn div_row(mut self, r: usize, zi: usize) -> Result<ZMat> {
        for c in 0..self.cols {
            if let Some((_, z)) = &mut self.e[r * self.cols + c] {
                if z[zi - 1] == 0 {
                    return Err(Error::NotDivisible(format!("row {r} by z{zi}")));
                }
                z[zi - 1] -= 1;
            }
        }
        Ok(self)
    }

    fn swap_z(mut self, (a, b): (usize, usize)) -> ZMat {
        for (_, z) in self.e.iter_mut().flatten() {
            z.swap(a, b);
        }
        self
    }

    fn place(&mut self, r0: usize, c0: usize, b: &ZMat) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.e[(r0 + r) * self.cols + c0 + c] = b.get(r, c).clone();
            }
        }
    }

    /// `[[a, 0], [link, b]]`.
    fn lower_blocks(a: &ZMat, link: &ZMat, b: &ZMat) -> ZMat {
        let mut m = ZMat::new(a.rows + b.rows, a.cols + b.cols);
        m.place(0, 0, a);
        m.place(a.rows, 0, link);
        m.place(a.rows, a.cols, b);
        m
    }

    fn to_poly(&self, ctx: &Context) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if let Some((coeff, z)) = self.get(r, c) {
                    m.set(r, c, ctx.z_monomial(coeff, *z));
                }
            }
        }
        m
    }
}

/// `Phi_2(n)+`, size `2n+1`, lower banded.
fn phi2(n: usize) -> ZMat {
    let mut m = ZMat::new(2 * n + 1, 2 * n + 1);
    m.put(0, 0, 1, &[3]);
    if n >= 1 {
        m.put(1, 0, -1, &[4]);
        m.put(1, 1, 1, &[1, 4]);
    }
    for k in 1..=n {
        m.put(2 * k, 2 * k - 1, -1, &[1, 3]);
        m.put(2 * k, 2 * k, 1, &[2, 3]);
        if k < n {
            m.put(2 * k + 1, 2 * k - 1, 1, &[1, 4]);
            m.put(2 * k + 1, 2 * k, -1, &[2, 4]);
            m.put(2 * k + 1, 2 * k + 1, 1, &[1, 4]);
        }
    }
    m
}

/// `Phi*_2(n)+`, size `2n+1`; `(z1)` for `n = 0`.
fn phi2_star(n: usize) -> ZMat {
    let mut m = ZMat::new(2 * n + 1, 2 * n + 1);
    if n == 0 {
        m.put(0, 0, 1, &[1]);
        return m;
    }
    m.put(0, 0, 1, &[1, 4]);
    m.put(1, 0, -1, &[1, 3]);
    m.put(1, 1, 1, &[2, 3]);
    for k in 1..n {
        m.put(2 * k, 2 * k - 1, -1, &[2, 4]);
        m.put(2 * k, 2 * k, 1, &[1, 4]);
        m.put(2 * k + 1, 2 * k - 1, 1, &[2, 3]);
        m.put(2 * k + 1, 2 * k, -1, &[1, 3]);
        m.put(2 * k + 1, 2 * k + 1, 1, &[2, 3]);
    }
    m.put(2 * n, 2 * n - 1, -1, &[2]);
    m.put(2 * n, 2 * n, 1, &[1]);
    m
}

fn phi3(n: usize) -> ZMat {
    let m = phi2_star(n + 2).drop_first_and_last();
    let last = m.cols - 1;
    m.mul_col(last, 1)
}

fn phi3_star(n: usize) -> ZMat {
    phi2(n + 2).drop_first_and_last().mul_row(0, 3)
}

fn phi4(n: usize) -> ZMat {
    phi2(n + 1).drop_last()
}

fn phi4_star(n: usize) -> ZMat {
    phi2_star(n + 1).drop_first()
}

fn phi5(n: usize) -> ZMat {
    let m = phi4(n).mul_col(0, 1);
    let last = m.cols - 1;
    m.mul_col(last, 2)
}

/// The recipe "first and last rows times z4" applied to `Phi*_4(n)+` gives
/// the module of `X_5(n)-^T`; the `+` module differs by `z3 <-> z4`.
fn phi5_star(n: usize) -> ZMat {
    let m = phi4_star(n).mul_row(0, 4);
    let last = m.rows - 1;
    m.mul_row(last, 4).swap_z((2, 3))
}

fn phi6(n: usize) -> Result<ZMat> {
    let m = phi2(n);
    let last = m.rows - 1;
    m.div_row(last, 3)
}

fn phi7_prime(k: usize) -> ZMat {
    let m = phi4_star(k).mul_row(0, 4);
    let last = m.rows - 1;
    m.mul_row(last, 4)
}

fn phi7_star_prime(k: usize) -> ZMat {
    let m = phi4(k).mul_col(0, 2);
    let last = m.cols - 1;
    m.mul_col(last, 2)
}

fn seven_split(n: usize) -> (usize, usize) {
    let m = n / 2;
    (m, n - m - 1)
}

fn phi7(n: usize) -> ZMat {
    if n == 0 {
        let mut m = ZMat::new(1, 1);
        m.put(0, 0, 1, &[3, 4]);
        return m;
    }
    let (m, k) = seven_split(n);
    let (top, bottom, link_z): (ZMat, ZMat, &[usize]) = if n.is_multiple_of(2) {
        (phi2(m), phi7_prime(k), &[2, 4])
    } else {
        (phi7_prime(k), phi2(m), &[1, 3])
    };
    let mut link = ZMat::new(bottom.rows, top.cols);
    link.put(bottom.rows - 1, top.cols - 1, 1, link_z);
    ZMat::lower_blocks(&top, &link, &bottom)
}

fn phi7_star(n: usize) -> ZMat {
    if n == 0 {
        let mut m = ZMat::new(1, 1);
        m.put(0, 0, 1, &[1, 2]);
        return m;
    }
    let (m, k) = seven_split(n);
    let (top, bottom, link_z): (ZMat, ZMat, &[usize]) = if n % 2 == 1 {
        (phi2_star(m), phi7_star_prime(k), &[1, 3])
    } else {
        (phi7_star_prime(k), phi2_star(m), &[2, 4])
    };
    let mut link = ZMat::new(bottom.rows, top.cols);
    link.put(0, 0, -1, link_z);
    ZMat::lower_blocks(&top, &link, &bottom)
}

fn phi8(n: usize) -> ZMat {
    let m = phi4(n);
    let last = m.cols - 1;
    m.mul_col(last, 2)
}

fn phi8_star(n: usize) -> ZMat {
    phi4_star(n).mul_row(0, 4)
}

fn phi9(n: usize) -> ZMat {
    let m = phi8_star(n + 1).drop_last();
    let last = m.cols - 1;
    m.mul_col(last, 1)
}

/// Block lower bidiagonal with `phi(mu)` on the diagonal and `phi'(mu)` below.
fn phi0(n: usize, mu: &Q) -> ZMat {
    let mut m = ZMat::new(2 * n, 2 * n);
    let inv = Q::one() / (mu - Q::one());
    for b in 0..n {
        let (r, c) = (2 * b, 2 * b);
        m.put(r, c, 1, &[1, 3]);
        m.put(r, c + 1, -1, &[2, 3]);
        m.put_q(r + 1, c, -mu.clone(), zs(&[1, 4]));
        m.put(r + 1, c + 1, 1, &[2, 4]);
        if b + 1 < n {
            let r = r + 2;
            m.put_q(r, c, inv.clone(), zs(&[1, 3]));
            m.put_q(r, c + 1, -inv.clone(), zs(&[2, 3]));
            m.put_q(r + 1, c, -inv.clone(), zs(&[1, 3]));
            m.put_q(r + 1, c + 1, inv.clone(), zs(&[2, 3]));
        }
    }
    m
}

/// `Phi_1(n)++`: lower triangular with a 2-periodic pattern; odd sizes drop
/// the first row and column of the next even size.
fn phi1(n: usize) -> ZMat {
    let size = n + n % 2;
    let mut m = ZMat::new(size, size);
    for i in 0..size {
        for j in 0..=i {
            match (i % 2, j % 2) {
                (0, 0) => m.put(i, j, 1, &[2, 4]),
                (0, _) => m.put(i, j, -1, &[1, 4]),
                (_, 0) => m.put(i, j, -1, &[2, 3]),
                _ => m.put(i, j, 1, &[1, 3]),
            }
        }
    }
    if n % 2 == 1 {
        m.drop_first()
    } else {
        m
    }
}

fn phi10() -> ZMat {
    let mut m = ZMat::new(1, 1);
    m.put(0, 0, 1, &[1, 2, 3, 4]);
    m
}

/// The closed-form `Phi` for `spec` under the default mark convention.
pub fn table2_phi(spec: &FamilyPhiSpec, ctx: &Context) -> Result<PolyMatrix> {
    table2_phi_with(spec, ctx, MarkConvention::Stripe)
}

pub fn table2_phi_with(
    spec: &FamilyPhiSpec,
    ctx: &Context,
    convention: MarkConvention,
) -> Result<PolyMatrix> {
    let n = spec.size() as usize;
    let t = spec.transposed();
    let base = match spec.kind() {
        WordKind::W0 => {
            let mu = resolve_mu(spec, ctx)?;
            crate::words::check_eigenvalue(&mu)?;
            phi0(n, &mu)
        }
        WordKind::W1 => phi1(n),
        WordKind::W2 if t => phi2_star(n),
        WordKind::W2 => phi2(n),
        WordKind::W3 if t => phi3_star(n),
        WordKind::W3 => phi3(n),
        WordKind::W4 if t => phi4_star(n),
        WordKind::W4 => phi4(n),
        WordKind::W5 if t => phi5_star(n),
        WordKind::W5 => phi5(n),
        WordKind::W6 => phi6(n)?,
        WordKind::W7 if t => phi7_star(n),
        WordKind::W7 => phi7(n),
        WordKind::W8 if t => phi8_star(n),
        WordKind::W8 => phi8(n),
        WordKind::W9 => phi9(n),
        WordKind::W10 => phi10(),
    };
    let marked = match spec.marks() {
        Marks::None => base,
        Marks::One(s) => {
            let end = spec.special_end().expect("marked words have a special end");
            if s == Sign::Minus {
                base.swap_z(convention.swap_for(end))
            } else {
                base
            }
        }
        Marks::Two(d1, d2) => {
            let m = if d1 == Sign::Minus {
                base.swap_z(convention.swap_for(Letter::E1))
            } else {
                base
            };
            if d2 == Sign::Minus {
                m.swap_z(convention.swap_for(Letter::F1))
            } else {
                m
            }
        }
    };
    Ok(marked.to_poly(ctx))
}

/// A verified pair with `Phi Psi = Psi Phi = F I` and `det Phi det Psi = F^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    spec: Option<WordSpec>,
    lambda: Q,
    mu: Option<Q>,
    phi: PolyMatrix,
    psi: PolyMatrix,
    report: VerificationReport,
}

impl Factorization {
    /// Fails with `Verification` unless the pair is a matrix factorization
    /// of the context's `F`.
    pub fn new(ctx: &Context, phi: PolyMatrix, psi: PolyMatrix) -> Result<Self> {
        let report = verify_factorization(ctx, &phi, &psi)?;
        if !report.ok {
            return Err(Error::Verification(failure_summary(&report)));
        }
        Ok(Factorization {
            spec: None,
            lambda: ctx.lambda().clone(),
            mu: ctx.mu().cloned(),
            phi,
            psi,
            report,
        })
    }

    pub fn with_spec(mut self, spec: WordSpec) -> Self {
        self.spec = Some(spec);
        self
    }

    pub fn spec(&self) -> Option<&WordSpec> {
        self.spec.as_ref()
    }

    pub fn lambda(&self) -> &Q {
        &self.lambda
    }

    pub fn mu(&self) -> Option<&Q> {
        self.mu.as_ref()
    }

    pub fn phi(&self) -> &PolyMatrix {
        &self.phi
    }

    pub fn psi(&self) -> &PolyMatrix {
        &self.psi
    }

    pub fn d(&self) -> usize {
        self.phi.rows()
    }

    pub fn report(&self) -> &VerificationReport {
        &self.report
    }

    pub fn det_phi(&self) -> Option<&DetProfile> {
        self.report.det_phi.as_ref()
    }

    pub fn det_psi(&self) -> Option<&DetProfile> {
        self.report.det_psi.as_ref()
    }

    pub fn context(&self) -> Result<Context> {
        Context::new(self.lambda.clone(), self.mu.clone())
    }
}

pub(crate) fn failure_summary(r: &VerificationReport) -> String {
    let mut parts = Vec::new();
    if !r.phi_psi_is_f {
        parts.push("Phi*Psi != F*I");
    }
    if !r.psi_phi_is_f {
        parts.push("Psi*Phi != F*I");
    }
    if !r.det_product_is_f_power {
        parts.push("det Phi * det Psi != F^d");
    }
    parts.join(", ")
}

pub fn make_factorization(spec: &FamilyPhiSpec, ctx: &Context) -> Result<Factorization> {
    make_factorization_with(spec, ctx, MarkConvention::Stripe)
}

pub fn make_factorization_with(
    spec: &FamilyPhiSpec,
    ctx: &Context,
    convention: MarkConvention,
) -> Result<Factorization> {
    // A cycle records its own eigenvalue as the context eigenvalue.
    let (spec, ctx) = if spec.kind() == WordKind::W0 {
        let mu = resolve_mu(spec, ctx)?;
        (spec.with_mu(Some(mu.clone()))?, ctx.with_mu(Some(mu))?)
    } else {
        (spec.clone(), ctx.clone())
    };
    let phi = table2_phi_with(&spec, &ctx, convention)?;
    let label = spec.label();
    let psi = solve_psi(&ctx, &phi, DEFAULT_DEGREE_BOUND)
        .map_err(|e| Error::Verification(format!("{label}: {e}")))?;
    let f = Factorization::new(&ctx, phi, psi)
        .map_err(|e| Error::Verification(format!("{label}: {e}")))?;
    Ok(f.with_spec(spec))
}

/// Unit and z-exponents of `det a`.
pub fn det_profile(ctx: &Context, a: &PolyMatrix) -> Result<DetProfile> {
    let d = mat_det(a)?;
    if d.is_zero() {
        return Err(Error::Singular);
    }
    ctx.decompose(&d)?.ok_or(Error::NotZMonomial)
}

/// `(Phi, Psi) -> (Psi, Phi)`.
pub fn ar_translate(f: &Factorization) -> Factorization {
    let r = &f.report;
    // Every check is symmetric in the pair, so the swapped report is the
    // report of the swapped pair.
    let report = VerificationReport {
        phi_psi_is_f: r.psi_phi_is_f,
        psi_phi_is_f: r.phi_psi_is_f,
        det_product_is_f_power: r.det_product_is_f_power,
        phi_reduced: r.psi_reduced,
        psi_reduced: r.phi_reduced,
        det_phi: r.det_psi.clone(),
        det_psi: r.det_phi.clone(),
        ok: r.ok,
    };
    Factorization {
        spec: None,
        lambda: f.lambda.clone(),
        mu: f.mu.clone(),
        phi: f.psi.clone(),
        psi: f.phi.clone(),
        report,
    }
}

/// The lines of the Auslander-Reiten pairing list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArPairingRule {
    /// `tau M = M` for `M0(n, mu)`, `M8(n)`, `M8*(n)`.
    SelfPaired,
    /// `tau M1(n)++ = M1(n)--`.
    M1PlusPlus,
    /// `tau M1(n)+- = M1(n)-+`.
    M1PlusMinus,
    /// `tau M2(n)+- = M3(n-1)-+`.
    M2ToM3,
    /// `tau M2*(n)+- = M3*(n-1)-+`.
    M2StarToM3Star,
    /// `tau M4(n)+- = M5(n)-+`.
    M4ToM5,
    /// `tau M6(n) = M9(n-1)`.
    M6ToM9,
    /// `tau M7(n) = M7*(n)`.
    M7ToM7Star,
}

impl ArPairingRule {
    pub const ALL: [ArPairingRule; 8] = [
        ArPairingRule::SelfPaired,
        ArPairingRule::M1PlusPlus,
        ArPairingRule::M1PlusMinus,
        ArPairingRule::M2ToM3,
        ArPairingRule::M2StarToM3Star,
        ArPairingRule::M4ToM5,
        ArPairingRule::M6ToM9,
        ArPairingRule::M7ToM7Star,
    ];

    pub fn describe(self) -> &'static str {
        match self {
            ArPairingRule::SelfPaired => "tau M = M for M0(n,mu), M8(n), M8*(n)",
            ArPairingRule::M1PlusPlus => "tau M1(n)++ = M1(n)--",
            ArPairingRule::M1PlusMinus => "tau M1(n)+- = M1(n)-+",
            ArPairingRule::M2ToM3 => "tau M2(n)+/- = M3(n-1)-/+",
            ArPairingRule::M2StarToM3Star => "tau M2*(n)+/- = M3*(n-1)-/+",
            ArPairingRule::M4ToM5 => "tau M4(n)+/- = M5(n)-/+",
            ArPairingRule::M6ToM9 => "tau M6(n) = M9(n-1)",
            ArPairingRule::M7ToM7Star => "tau M7(n) = M7*(n)",
        }
    }

    /// `(source, target)` pairs predicted for size `n`.
    pub fn instances(self, n: u32, mu: &Q) -> Vec<(WordSpec, WordSpec)> {
        use Sign::{Minus, Plus};
        let plain = |k: WordKind, n: u32, m: Marks| WordSpec::plain(k, n, m).ok();
        let star = |k: WordKind, n: u32, m: Marks| {
            WordSpec::new(k, Some(n), true, m, None).ok()
        };
        let signs = [(Plus, Minus), (Minus, Plus)];
        let mut out: Vec<(Option<WordSpec>, Option<WordSpec>)> = Vec::new();
        match self {
            ArPairingRule::SelfPaired => {
                let m0 = WordSpec::new(WordKind::W0, Some(n), false, Marks::None, Some(mu.clone())).ok();
                out.push((m0.clone(), m0));
                let m8 = plain(WordKind::W8, n, Marks::None);
                out.push((m8.clone(), m8));
                let m8s = star(WordKind::W8, n, Marks::None);
                out.push((m8s.clone(), m8s));
            }
            ArPairingRule::M1PlusPlus => {
                out.push((
                    plain(WordKind::W1, n, Marks::Two(Plus, Plus)),
                    plain(WordKind::W1, n, Marks::Two(Minus, Minus)),
                ));
            }
            ArPairingRule::M1PlusMinus => {
                out.push((
                    plain(WordKind::W1, n, Marks::Two(Plus, Minus)),
                    plain(WordKind::W1, n, Marks::Two(Minus, Plus)),
                ));
            }
            ArPairingRule::M2ToM3 | ArPairingRule::M2StarToM3Star if n >= 1 => {
                let mk = if self == ArPairingRule::M2ToM3 { plain } else { star };
                for (a, b) in signs {
                    out.push((
                        mk(WordKind::W2, n, Marks::One(a)),
                        mk(WordKind::W3, n - 1, Marks::One(b)),
                    ));
                }
            }
            ArPairingRule::M4ToM5 => {
                for (a, b) in signs {
                    out.push((
                        plain(WordKind::W4, n, Marks::One(a)),
                        plain(WordKind::W5, n, Marks::One(b)),
                    ));
                }
            }
            ArPairingRule::M6ToM9 if n >= 2 => {
                out.push((
                    plain(WordKind::W6, n, Marks::None),
                    plain(WordKind::W9, n - 1, Marks::None),
                ));
            }
            ArPairingRule::M7ToM7Star => {
                out.push((
                    plain(WordKind::W7, n, Marks::None),
                    star(WordKind::W7, n, Marks::None),
                ));
            }
            _ => {}
        }
        out.into_iter()
            .filter_map(|(a, b)| Some((a?, b?)))
            .collect()
    }
}

/// The module a rule predicts as `tau M(spec)`, with that rule. Rules are
/// read in both directions since `tau` is an involution on factorizations.
pub fn ar_partner(spec: &WordSpec, mu: &Q) -> Option<(ArPairingRule, WordSpec)> {
    let n = spec.size();
    for rule in ArPairingRule::ALL {
        for m in [n, n + 1] {
            for (a, b) in rule.instances(m, mu) {
                if a == *spec {
                    return Some((rule, b));
                }
                if b == *spec {
                    return Some((rule, a));
                }
            }
        }
    }
    None
}

/// One `(source, target)` comparison under both conventions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArComparison {
    pub rule: ArPairingRule,
    pub n: u32,
    pub source: WordSpec,
    pub target: WordSpec,
    /// `det Psi(source)` and `det Phi(target)`, stripe convention.
    pub stripe: (DetProfile, DetProfile),
    /// Same under the literal convention.
    pub literal: (DetProfile, DetProfile),
}

impl ArComparison {
    pub fn stripe_match(&self) -> bool {
        self.stripe.0.z == self.stripe.1.z
    }

    pub fn literal_match(&self) -> bool {
        self.literal.0.z == self.literal.1.z
    }

    pub fn convention_neutral(&self) -> bool {
        self.stripe.0.z == self.literal.0.z && self.stripe.1.z == self.literal.1.z
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArRuleOutcome {
    pub rule: ArPairingRule,
    pub comparisons: Vec<ArComparison>,
}

impl ArRuleOutcome {
    pub fn holds_under(&self, convention: MarkConvention) -> bool {
        self.comparisons.iter().all(|c| match convention {
            MarkConvention::Stripe => c.stripe_match(),
            MarkConvention::Literal => c.literal_match(),
        })
    }

    pub fn convention_neutral(&self) -> bool {
        self.comparisons.iter().all(ArComparison::convention_neutral)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArReport {
    pub lambda: Q,
    pub mu: Q,
    pub max_n: u32,
    pub rules: Vec<ArRuleOutcome>,
    /// `tau tau f == f` for every factorization built.
    pub involution: bool,
    /// Self-paired modules: `det Psi` and `det Phi` have equal exponents.
    pub self_pairing: bool,
}

impl ArReport {
    /// Conventions under which every rule holds.
    pub fn conventions(&self) -> Vec<MarkConvention> {
        [MarkConvention::Stripe, MarkConvention::Literal]
            .into_iter()
            .filter(|&c| self.rules.iter().all(|r| r.holds_under(c)))
            .collect()
    }

    /// The single convention under which every rule holds, if there is one.
    pub fn convention(&self) -> Option<MarkConvention> {
        match self.conventions()[..] {
            [c] => Some(c),
            _ => None,
        }
    }

    pub fn passed(&self) -> bool {
        self.involution && self.self_pairing && self.convention().is_some()
    }

    /// One line per comparison, then one per rule.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let p = |z: &DetProfile| format!("{:?}", z.z);
        for rule in &self.rules {
            for c in &rule.comparisons {
                out.push_str(&format!(
                    "{:<28} n={} lambda={} mu={}  {} -> {}  stripe {} vs {} [{}]  literal {} vs {} [{}]\n",
                    rule.rule.describe(),
                    c.n,
                    format_rational(&self.lambda),
                    format_rational(&self.mu),
                    c.source,
                    c.target,
                    p(&c.stripe.0),
                    p(&c.stripe.1),
                    if c.stripe_match() { "match" } else { "differ" },
                    p(&c.literal.0),
                    p(&c.literal.1),
                    if c.literal_match() { "match" } else { "differ" },
                ));
            }
        }
        for rule in &self.rules {
            let holds: Vec<&str> = [MarkConvention::Stripe, MarkConvention::Literal]
                .into_iter()
                .filter(|&c| rule.holds_under(c))
                .map(|c| match c {
                    MarkConvention::Stripe => "stripe",
                    MarkConvention::Literal => "literal",
                })
                .collect();
            let v = if holds.is_empty() {
                "FAIL under both conventions".to_string()
            } else {
                format!("holds under: {}", holds.join(", "))
            };
            out.push_str(&format!("{:<28} {v}\n", rule.rule.describe()));
        }
        match self.convention() {
            Some(c) => out.push_str(&format!("every rule holds under exactly one convention: {c}\n")),
            None => out.push_str(&format!(
                "no unique convention: every rule holds under {} convention(s)\n",
                self.conventions().len()
            )),
        }
        out.push_str(&format!(
            "tau^2 = id: {}\nself-pairing exact: {}\n",
            if self.involution { "PASS" } else { "FAIL" },
            if self.self_pairing { "PASS" } else { "FAIL" },
        ));
        out
    }
}

/// Compares `det Psi` of each predicted source with `det Phi` of its target
/// under both mark conventions, for every `n <= max_n`. `M0` uses the
/// context eigenvalue, or 3 when the context has none.
pub fn check_ar_pairings(ctx: &Context, max_n: u32) -> Result<ArReport> {
    let mu = ctx.mu().cloned().unwrap_or_else(|| q(3));
    let ctx = ctx.with_mu(Some(mu.clone()))?;
    let mut involution = true;
    let mut self_pairing = true;
    let mut rules = Vec::new();
    for rule in ArPairingRule::ALL {
        let mut comparisons = Vec::new();
        for n in 0..=max_n {
            for (source, target) in rule.instances(n, &mu) {
                let mut profiles = Vec::new();
                for conv in [MarkConvention::Stripe, MarkConvention::Literal] {
                    let f = make_factorization_with(&source, &ctx, conv)?;
                    let back = ar_translate(&ar_translate(&f));
                    involution &= back.phi == f.phi && back.psi == f.psi;
                    let src = f.det_psi().cloned().ok_or(Error::NotZMonomial)?;
                    let tgt = det_profile(&ctx, &table2_phi_with(&target, &ctx, conv)?)?;
                    if rule == ArPairingRule::SelfPaired {
                        let own = f.det_phi().ok_or(Error::NotZMonomial)?;
                        self_pairing &= own.z == src.z;
                    }
                    profiles.push((src, tgt));
                }
                let literal = profiles.pop().expect("two conventions");
                let stripe = profiles.pop().expect("two conventions");
                comparisons.push(ArComparison {
                    rule,
                    n,
                    source,
                    target,
                    stripe,
                    literal,
                });
            }
        }
        rules.push(ArRuleOutcome { rule, comparisons });
    }
    Ok(ArReport {
        lambda: ctx.lambda().clone(),
        mu,
        max_n,
        rules,
        involution,
        self_pairing,
    })
}
