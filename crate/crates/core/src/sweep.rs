//! The end-to-end checks: golden matrices, the family sweep, size and
//! determinant laws, cross-pipeline agreement, Auslander-Reiten pairings,
//! transformation invariance and randomized property suites.

use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::arith::{format_rational, parse_rational, q, q_frac, BiPoly, Context, Monomial, QMat, Q};
use crate::error::{Error, Result};
use crate::factorizations::{
    check_ar_pairings, det_profile, make_factorization, table2_phi, Factorization,
};
use crate::families::{apply_transform, build_x, random_admissible, Side};
use crate::matrix::{mat_det, match_up_to_permutation, solve_psi, PolyMatrix};
use crate::relations::derive_phi;
use crate::serial::{
    factorization_from_json, factorization_to_json, matrix_from_json, matrix_to_json, WordSpecDoc,
};
use crate::words::{enumerate_words, Marks, Sign, WordKind, WordSpec};

const EMBEDDED_GOLDEN: &str = include_str!("../data/golden.json");

/// Printed matrices in z-form, e.g. `"-z1*z3"`.
#[derive(Deserialize, Clone, Debug)]
pub struct GoldenExample {
    pub name: String,
    pub word: WordSpecDoc,
    pub lambdas: Vec<String>,
    pub phi: Vec<Vec<String>>,
    pub psi: Vec<Vec<String>>,
}

#[derive(Deserialize, Clone, Debug)]
pub struct Golden {
    pub examples: Vec<GoldenExample>,
}

impl Golden {
    pub fn embedded() -> Self {
        Golden::from_json(EMBEDDED_GOLDEN).expect("embedded golden data parses")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn parse_grid(ctx: &Context, g: &[Vec<String>]) -> Result<PolyMatrix> {
    let rows = g
        .iter()
        .map(|r| r.iter().map(|s| ctx.parse_zform(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::from_rows(rows)
}

fn first_difference(ctx: &Context, got: &PolyMatrix, want: &PolyMatrix) -> Option<String> {
    if (got.rows(), got.cols()) != (want.rows(), want.cols()) {
        return Some(format!(
            "size {}x{} vs {}x{}",
            got.rows(),
            got.cols(),
            want.rows(),
            want.cols()
        ));
    }
    for r in 0..got.rows() {
        for c in 0..got.cols() {
            if got.get(r, c) != want.get(r, c) {
                return Some(format!(
                    "entry ({r}, {c}) is {} but the golden file has {}",
                    ctx.render(got.get(r, c)),
                    ctx.render(want.get(r, c))
                ));
            }
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionOutcome {
    /// The report line without the elapsed time, for deterministic output.
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}] {}: {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail
        )
    }
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} [{}] {}: {} ({:.2} s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

fn timed(
    id: u8,
    title: &'static str,
    budget: Option<Duration>,
    run: impl FnOnce() -> Result<(bool, String)>,
) -> CriterionOutcome {
    let start = Instant::now();
    let (mut passed, mut detail) = match run() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail.push_str(&format!("; over the {:.0} s budget", b.as_secs_f64()));
        }
    }
    CriterionOutcome {
        id,
        title,
        passed,
        detail,
        elapsed,
    }
}

/// Pipeline `Phi` and solved `Psi` against one printed example, at every
/// listed `lambda`.
pub fn check_golden(id: u8, example: &GoldenExample) -> CriterionOutcome {
    let title = if id == 1 {
        "golden worked example"
    } else {
        "golden transposed example"
    };
    timed(id, title, Some(Duration::from_secs(1)), || {
        let spec = example.word.to_spec()?;
        let mut bad = Vec::new();
        for l in &example.lambdas {
            let ctx = Context::new(parse_rational(l)?, None)?;
            let phi = derive_phi(&build_x(&spec, &ctx)?, &ctx)?;
            let psi = solve_psi(&ctx, &phi, 4)?;
            for (name, got, want) in [("Phi", &phi, &example.phi), ("Psi", &psi, &example.psi)] {
                if let Some(diff) = first_difference(&ctx, got, &parse_grid(&ctx, want)?) {
                    bad.push(format!("{name} differs from the golden matrix at lambda={l}: {diff}"));
                }
            }
        }
        Ok(if bad.is_empty() {
            (
                true,
                format!(
                    "{}: Phi and Psi equal the printed matrices at lambda in {{{}}}",
                    example.name,
                    example.lambdas.join(", ")
                ),
            )
        } else {
            (false, format!("{}: {}", example.name, bad.join("; ")))
        })
    })
}

pub const SWEEP_LAMBDAS: [i64; 3] = [2, 5, -1];
pub const SWEEP_MUS: [i64; 2] = [3, -2];

fn list(v: &[Q]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

/// Every word with `n <= max_n` at every listed `lambda`, `mu`.
pub fn family_sweep(max_n: u32, lambdas: &[Q], mus: &[Q]) -> CriterionOutcome {
    timed(3, "family sweep", Some(Duration::from_secs(60)), || {
        let words = enumerate_words(max_n);
        let mut count = 0;
        let mut failures = Vec::new();
        for l in lambdas {
            let l = &format_rational(l);
            for m in mus {
                let m = &format_rational(m);
                let ctx = Context::new(parse_rational(l)?, Some(parse_rational(m)?))?;
                for w in &words {
                    count += 1;
                    match make_factorization(w, &ctx) {
                        Ok(f) => {
                            let r = f.report();
                            let psi_ok = r.psi_reduced || w.kind() == WordKind::W10;
                            if !(r.ok && r.phi_reduced && psi_ok) {
                                failures.push(format!("{w} at lambda={l}, mu={m}: not reduced"));
                            }
                        }
                        Err(e) => failures.push(format!("{w} at lambda={l}, mu={m}: {e}")),
                    }
                }
            }
        }
        Ok(if failures.is_empty() {
            (
                true,
                format!(
                    "{count} factorizations ({} words, n <= {max_n}, lambda in {{{}}}, mu in {{{}}}): \
                     Phi Psi = Psi Phi = F I, det Phi det Psi = F^d, entries in (x, y)",
                    words.len(),
                    list(lambdas),
                    list(mus)
                ),
            )
        } else {
            (
                false,
                format!("{} of {count} failed, first: {}", failures.len(), failures[0]),
            )
        })
    })
}

/// Sizes of `Phi_2`, `Phi_3` and the determinant exponents of `Phi_4` and
/// its translate.
pub fn size_and_det_laws(max_n: u32, lambdas: &[Q]) -> CriterionOutcome {
    timed(4, "size and determinant laws", None, || {
        let mut bad = Vec::new();
        let plus = Marks::One(Sign::Plus);
        for l in lambdas {
            let ctx = Context::new(l.clone(), None)?;
            for n in 0..=max_n {
                let nu = n as usize;
                let p2 = table2_phi(&WordSpec::plain(WordKind::W2, n, plus)?, &ctx)?;
                if p2.rows() != 2 * nu + 1 {
                    bad.push(format!("Phi2({n})+ has size {}", p2.rows()));
                }
                let p3 = table2_phi(&WordSpec::plain(WordKind::W3, n, plus)?, &ctx)?;
                if p3.rows() != 2 * nu + 3 {
                    bad.push(format!("Phi3({n})+ has size {}", p3.rows()));
                }
                let f4 = make_factorization(&WordSpec::plain(WordKind::W4, n, plus)?, &ctx)?;
                let want_phi = [n + 1, n, n + 1, n + 1];
                let want_psi = [n + 1, n + 2, n + 1, n + 1];
                if f4.d() != 2 * nu + 2 {
                    bad.push(format!("Phi4({n})+ has size {}", f4.d()));
                }
                if f4.det_phi().map(|p| p.z) != Some(want_phi) {
                    bad.push(format!("det Phi4({n})+ = {:?}", f4.det_phi()));
                }
                let tau = crate::factorizations::ar_translate(&f4);
                if tau.det_phi().map(|p| p.z) != Some(want_psi) {
                    bad.push(format!("det tau Phi4({n})+ = {:?}", tau.det_phi()));
                }
            }
        }
        Ok(if bad.is_empty() {
            (
                true,
                format!(
                    "n <= {max_n}, lambda in {{{}}}: |Phi2| = 2n+1, |Phi3| = 2n+3, |Phi4| = 2n+2, \
                     det Phi4 ~ (n+1, n, n+1, n+1), det Psi4 ~ (n+1, n+2, n+1, n+1)",
                    list(lambdas)
                ),
            )
        } else {
            (false, bad.join("; "))
        })
    })
}

/// How the relations pipeline compares with the closed form for one word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineAgreement {
    /// Equal after permuting rows and columns.
    Permutation { rows: Vec<usize>, cols: Vec<usize> },
    /// Same size and determinant exponents.
    Profile,
    Differs(String),
}

pub fn compare_pipelines(w: &WordSpec, ctx: &Context) -> Result<PipelineAgreement> {
    let derived = derive_phi(&build_x(w, ctx)?, ctx)?;
    let closed = table2_phi(w, ctx)?;
    if derived.rows() != closed.rows() {
        return Ok(PipelineAgreement::Differs(format!(
            "sizes {} and {}",
            derived.rows(),
            closed.rows()
        )));
    }
    if let Some((rows, cols)) = match_up_to_permutation(&derived, &closed)? {
        return Ok(PipelineAgreement::Permutation { rows, cols });
    }
    let a = det_profile(ctx, &derived)?;
    let b = det_profile(ctx, &closed)?;
    Ok(if a.z == b.z {
        PipelineAgreement::Profile
    } else {
        PipelineAgreement::Differs(format!("det exponents {:?} and {:?}", a.z, b.z))
    })
}

/// Permutation matches for `W2` (`n <= min(max_n, 4)`) and `W10`; size and
/// det profile for the rest (`n <= min(max_n, 3)`).
pub fn cross_pipeline(max_n: u32, lambda: &Q) -> CriterionOutcome {
    timed(5, "cross-pipeline agreement", None, || {
        let ctx = Context::new(lambda.clone(), Some(q(3)))?;
        let mut bad = Vec::new();
        let (mut perm, mut profile) = (0, 0);
        for w in enumerate_words(max_n.min(4)) {
            let strict = matches!(w.kind(), WordKind::W2 | WordKind::W10);
            if !strict && w.size() > 3 {
                continue;
            }
            match compare_pipelines(&w, &ctx)? {
                PipelineAgreement::Permutation { .. } => perm += 1,
                PipelineAgreement::Profile if !strict => profile += 1,
                PipelineAgreement::Profile => bad.push(format!("{w}: no permutation match")),
                PipelineAgreement::Differs(why) => bad.push(format!("{w}: {why}")),
            }
        }
        Ok(if bad.is_empty() {
            (
                true,
                format!(
                    "lambda={}: {perm} words equal up to permutation (every W2 and W10 among them), \
                     {profile} more agree in size and det profile",
                    format_rational(lambda)
                ),
            )
        } else {
            (false, bad.join("; "))
        })
    })
}

pub fn ar_sweep(max_n: u32, lambda: &Q) -> CriterionOutcome {
    timed(6, "Auslander-Reiten pairings", None, || {
        let r = check_ar_pairings(&Context::new(lambda.clone(), Some(q(3)))?, max_n)?;
        let conv = r.convention();
        let detail = match conv {
            Some(c) => format!(
                "{} rules, n <= {max_n}, lambda={}: all hold under exactly one convention, {c}; \
                 self-pairing {}, tau^2 = id {}",
                r.rules.len(),
                format_rational(lambda),
                ok_word(r.self_pairing),
                ok_word(r.involution)
            ),
            None => format!(
                "rules hold under {} conventions (need exactly one)",
                r.conventions().len()
            ),
        };
        Ok((r.passed(), detail))
    })
}

fn ok_word(b: bool) -> &'static str {
    if b {
        "exact"
    } else {
        "FAILED"
    }
}

/// Random admissible `(S, T)` on one word; the derived `Phi` keeps its size
/// and determinant exponents.
pub fn transform_invariance_for(w: &WordSpec, pairs: u64, seed: u64) -> Result<Vec<String>> {
    let ctx = Context::standard();
    let x = build_x(w, &ctx)?;
    let base = derive_phi(&x, &ctx)?;
    let base_profile = det_profile(&ctx, &base)?.z;
    let mut bad = Vec::new();
    for i in 0..pairs {
        let s = random_admissible(x.row_stripes(), Side::Row, seed.wrapping_add(2 * i));
        let t = random_admissible(x.col_stripes(), Side::Column, seed.wrapping_add(2 * i + 1));
        let phi = derive_phi(&apply_transform(&x, &s, &t)?, &ctx)?;
        let p = det_profile(&ctx, &phi)?.z;
        if phi.rows() != base.rows() || p != base_profile {
            bad.push(format!("{w} pair {i}: size {} det {:?}", phi.rows(), p));
        }
    }
    Ok(bad)
}

pub fn transform_invariance(pairs: u64, seed: u64) -> CriterionOutcome {
    timed(7, "transformation invariance", Some(Duration::from_secs(30)), || {
        let words = [
            WordSpec::plain(WordKind::W2, 3, Marks::One(Sign::Plus))?,
            WordSpec::plain(WordKind::W4, 2, Marks::One(Sign::Plus))?,
        ];
        let mut bad = Vec::new();
        for w in &words {
            bad.extend(transform_invariance_for(w, pairs, seed)?);
        }
        Ok(if bad.is_empty() {
            (
                true,
                format!("{pairs} seeded (S, T) pairs on each of W2(3)+ and W4(2)+: size and det profile unchanged"),
            )
        } else {
            (false, bad.join("; "))
        })
    })
}

/// A named randomized identity check.
#[derive(Clone, Debug)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

fn rand_q(rng: &mut ChaCha8Rng) -> Q {
    let n = rng.gen_range(-9..=9);
    let d = [1, 1, 1, 2, 3, 5][rng.gen_range(0..6)];
    q_frac(n, d)
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_terms: usize, max_deg: u32) -> BiPoly {
    let k = rng.gen_range(0..=max_terms);
    BiPoly::from_terms((0..k).map(|_| {
        let dx = rng.gen_range(0..=max_deg);
        let dy = rng.gen_range(0..=max_deg - dx);
        (Monomial::new(dx, dy), rand_q(rng))
    }))
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize, max_terms: usize, max_deg: u32) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            m.set(r, c, random_poly(rng, max_terms, max_deg));
        }
    }
    m
}

/// Permutation times diagonal times two elementary additions: invertible,
/// and sparse enough that the partner solve stays cheap.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> QMat {
    let mut m = QMat::zeros(n, n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    for (r, &c) in perm.iter().enumerate() {
        let d = [q(1), q(-1), q(2), q(-3), q_frac(1, 2)][rng.gen_range(0..5)].clone();
        m.set(r, c, d);
    }
    for _ in 0..2 {
        if n < 2 {
            break;
        }
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let c = q(rng.gen_range(-2..=2));
        for k in 0..n {
            let v = m.get(i, k) + &c * m.get(j, k);
            m.set(i, k, v);
        }
    }
    debug_assert!(m.is_invertible());
    m
}

fn constant_matrix(m: &QMat) -> PolyMatrix {
    let mut out = PolyMatrix::zeros(m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.set(r, c, BiPoly::constant(m.get(r, c).clone()));
        }
    }
    out
}

/// Five randomized suites with `cases` cases each: ring axioms, exact
/// division, det multiplicativity, uniqueness of `Psi` under scalar
/// equivalence, and JSON round-trips.
pub fn property_suite(cases: usize, seed: u64) -> Result<Vec<PropertyOutcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    let mut failures = Vec::new();
    for i in 0..cases {
        let a = random_poly(&mut rng, 5, 4);
        let b = random_poly(&mut rng, 5, 4);
        let c = random_poly(&mut rng, 5, 4);
        let ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a + &b) + &c == &a + &(&b + &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &(&a + &b) - &b == a
            && &a * &BiPoly::one() == a;
        if !ok {
            failures.push(format!("case {i}: a={a}, b={b}, c={c}"));
        }
    }
    out.push(PropertyOutcome {
        name: "ring axioms",
        cases,
        failures,
    });

    let mut failures = Vec::new();
    for i in 0..cases {
        let a = random_poly(&mut rng, 5, 4);
        let mut b = random_poly(&mut rng, 4, 3);
        if b.is_zero() {
            b = BiPoly::one();
        }
        match (&a * &b).exact_div(&b) {
            Ok(qt) if qt == a => {}
            other => failures.push(format!("case {i}: ({a})*({b}) / ({b}) gave {other:?}")),
        }
    }
    out.push(PropertyOutcome {
        name: "exact division round-trips",
        cases,
        failures,
    });

    let mut failures = Vec::new();
    for i in 0..cases {
        let n = rng.gen_range(1..=3);
        let a = random_matrix(&mut rng, n, 2, 2);
        let b = random_matrix(&mut rng, n, 2, 2);
        let lhs = mat_det(&a.mul(&b)?)?;
        let rhs = &mat_det(&a)? * &mat_det(&b)?;
        if lhs != rhs {
            failures.push(format!("case {i}: det(AB) != det(A) det(B) for n={n}"));
        }
    }
    out.push(PropertyOutcome {
        name: "det multiplicativity",
        cases,
        failures,
    });

    let lambdas = [q(2), q(5), q(-1), q_frac(1, 3)];
    let pool = enumerate_words(1);
    let mut factorizations: Vec<Factorization> = Vec::new();
    for l in &lambdas {
        let ctx = Context::new(l.clone(), Some(q(3)))?;
        for w in &pool {
            let f = make_factorization(w, &ctx)?;
            if f.d() <= 4 {
                factorizations.push(f);
            }
        }
    }

    let mut failures = Vec::new();
    for i in 0..cases {
        let f = &factorizations[rng.gen_range(0..factorizations.len())];
        let ctx = f.context()?;
        let d = f.d();
        let p = random_invertible(&mut rng, d);
        let t = random_invertible(&mut rng, d);
        let (pm, tm) = (constant_matrix(&p), constant_matrix(&t));
        let phi = pm.mul(f.phi())?.mul(&tm)?;
        match solve_psi(&ctx, &phi, 4) {
            // Psi' = T^-1 Psi P^-1 exactly when T Psi' P = Psi.
            Ok(psi) if tm.mul(&psi)?.mul(&pm)? == *f.psi() => {}
            other => failures.push(format!(
                "case {i}: {} at lambda={}: {:?}",
                f.spec().map(|w| w.label()).unwrap_or_default(),
                format_rational(f.lambda()),
                other.map(|_| "different partner")
            )),
        }
    }
    out.push(PropertyOutcome {
        name: "solve_psi uniqueness",
        cases,
        failures,
    });

    let mut failures = Vec::new();
    for i in 0..cases {
        let n = rng.gen_range(1..=3);
        let m = random_matrix(&mut rng, n, 4, 4);
        let s = matrix_to_json(&m);
        match matrix_from_json(&s) {
            Ok(back) if back == m && matrix_to_json(&back) == s => {}
            _ => failures.push(format!("case {i}: matrix round-trip")),
        }
        if i % 4 == 0 {
            let f = &factorizations[rng.gen_range(0..factorizations.len())];
            let s = factorization_to_json(f);
            match factorization_from_json(&s) {
                Ok(back) if back == *f && factorization_to_json(&back) == s => {}
                _ => failures.push(format!("case {i}: factorization round-trip")),
            }
        }
    }
    out.push(PropertyOutcome {
        name: "serialization round-trips",
        cases,
        failures,
    });
    Ok(out)
}

pub fn property_suites(cases: usize, seed: u64) -> CriterionOutcome {
    timed(8, "property suites", None, || {
        let outcomes = property_suite(cases, seed)?;
        let failed: Vec<String> = outcomes
            .iter()
            .filter(|o| !o.failures.is_empty())
            .map(|o| format!("{}: {} failures, first {}", o.name, o.failures.len(), o.failures[0]))
            .collect();
        let names: Vec<&str> = outcomes.iter().map(|o| o.name).collect();
        Ok(if failed.is_empty() {
            (
                true,
                format!("{cases} cases each, zero failures: {}", names.join(", ")),
            )
        } else {
            (false, failed.join("; "))
        })
    })
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub golden: Golden,
    pub max_n: u32,
    pub lambdas: Vec<Q>,
    pub mus: Vec<Q>,
    pub transform_pairs: u64,
    pub property_cases: usize,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            golden: Golden::embedded(),
            max_n: 6,
            lambdas: SWEEP_LAMBDAS.iter().map(|&l| q(l)).collect(),
            mus: SWEEP_MUS.iter().map(|&m| q(m)).collect(),
            transform_pairs: 100,
            property_cases: 1000,
            seed: 44,
        }
    }
}

/// Runs criteria 1 through 8 in order. The pairing sweep stops at
/// `min(max_n, 4)`; the pipeline comparisons use the first `lambda`.
pub fn check_all(opts: &CheckOptions) -> Vec<CriterionOutcome> {
    let lambda = opts.lambdas.first().cloned().unwrap_or_else(|| q(2));
    let mut out = Vec::new();
    for (i, ex) in opts.golden.examples.iter().take(2).enumerate() {
        out.push(check_golden(i as u8 + 1, ex));
    }
    out.push(family_sweep(opts.max_n, &opts.lambdas, &opts.mus));
    out.push(size_and_det_laws(opts.max_n, &opts.lambdas));
    out.push(cross_pipeline(opts.max_n, &lambda));
    out.push(ar_sweep(opts.max_n.min(4), &lambda));
    out.push(transform_invariance(opts.transform_pairs, opts.seed));
    out.push(property_suites(opts.property_cases, opts.seed));
    out
}
