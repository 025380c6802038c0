//! JSON documents for polynomials, matrices, words and factorizations.
//!
//! Polynomials are `{"terms": [{"ex": 3, "ey": 1, "c": "-2/3"}, ...]}` with
//! terms in descending monomial order; matrices are row-major nested arrays.
//! Writing a parsed document reproduces the input byte for byte.

use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, BiPoly, Context, Monomial, ZMonomial};
use crate::error::{Error, Result};
use crate::factorizations::{failure_summary, Factorization};
use crate::matrix::PolyMatrix;
use crate::words::WordSpec;

pub use crate::words::WordSpecDoc;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TermDoc {
    pub ex: u32,
    pub ey: u32,
    pub c: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PolyDoc {
    pub terms: Vec<TermDoc>,
}

pub type MatrixDoc = Vec<Vec<PolyDoc>>;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ProfileDoc {
    pub unit: String,
    pub z: [u32; 4],
}

/// `family`, `n`, `marks` and `transposed` describe the word, when there is
/// one; `mu` is the context eigenvalue.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct MetaDoc {
    pub family: Option<String>,
    pub n: Option<u32>,
    pub marks: String,
    pub transposed: bool,
    pub lambda: String,
    pub mu: Option<String>,
    pub d: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct VerificationDoc {
    pub phi_psi_is_f: bool,
    pub psi_phi_is_f: bool,
    pub det_product_is_f_power: bool,
    pub phi_reduced: bool,
    pub psi_reduced: bool,
    pub ok: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FactorizationDoc {
    pub meta: MetaDoc,
    pub phi: MatrixDoc,
    pub psi: MatrixDoc,
    pub det_phi: Option<ProfileDoc>,
    pub det_psi: Option<ProfileDoc>,
    pub verification: VerificationDoc,
}

pub fn poly_to_doc(p: &BiPoly) -> PolyDoc {
    PolyDoc {
        terms: p
            .terms()
            .map(|(m, c)| TermDoc {
                ex: m.x,
                ey: m.y,
                c: format_rational(c),
            })
            .collect(),
    }
}

/// Rejects zero and repeated terms, so every polynomial has one document.
pub fn poly_from_doc(d: &PolyDoc) -> Result<BiPoly> {
    let mut seen = std::collections::BTreeSet::new();
    let mut terms = Vec::with_capacity(d.terms.len());
    for t in &d.terms {
        let m = Monomial::new(t.ex, t.ey);
        if !seen.insert(m) {
            return Err(Error::Parse(format!("repeated term x^{}*y^{}", t.ex, t.ey)));
        }
        let c = parse_rational(&t.c)?;
        if num_traits::Zero::is_zero(&c) {
            return Err(Error::Parse(format!("zero coefficient on x^{}*y^{}", t.ex, t.ey)));
        }
        terms.push((m, c));
    }
    let p = BiPoly::from_terms(terms);
    if poly_to_doc(&p) != *d {
        return Err(Error::Parse("terms are not in descending monomial order".into()));
    }
    Ok(p)
}

pub fn matrix_to_doc(m: &PolyMatrix) -> MatrixDoc {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(poly_to_doc).collect())
        .collect()
}

pub fn matrix_from_doc(d: &MatrixDoc) -> Result<PolyMatrix> {
    let rows = d
        .iter()
        .map(|row| row.iter().map(poly_from_doc).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::from_rows(rows)
}

pub fn profile_to_doc(p: &ZMonomial) -> ProfileDoc {
    ProfileDoc {
        unit: format_rational(&p.unit),
        z: p.z,
    }
}

pub fn factorization_to_doc(f: &Factorization) -> FactorizationDoc {
    let r = f.report();
    let (family, n, marks, transposed) = match f.spec() {
        Some(w) => (
            Some(format!("w{}", w.kind().index())),
            w.n(),
            w.marks().to_string(),
            w.transposed(),
        ),
        None => (None, None, String::new(), false),
    };
    FactorizationDoc {
        meta: MetaDoc {
            family,
            n,
            marks,
            transposed,
            lambda: format_rational(f.lambda()),
            mu: f.mu().map(format_rational),
            d: f.d(),
        },
        phi: matrix_to_doc(f.phi()),
        psi: matrix_to_doc(f.psi()),
        det_phi: r.det_phi.as_ref().map(profile_to_doc),
        det_psi: r.det_psi.as_ref().map(profile_to_doc),
        verification: VerificationDoc {
            phi_psi_is_f: r.phi_psi_is_f,
            psi_phi_is_f: r.psi_phi_is_f,
            det_product_is_f_power: r.det_product_is_f_power,
            phi_reduced: r.phi_reduced,
            psi_reduced: r.psi_reduced,
            ok: r.ok,
        },
    }
}

/// Rebuilds and re-verifies the pair. Fails with `Verification` when the
/// pair is not a factorization or the stored report disagrees with the
/// recomputed one.
pub fn factorization_from_doc(d: &FactorizationDoc) -> Result<Factorization> {
    let lambda = parse_rational(&d.meta.lambda)?;
    let mu = d.meta.mu.as_deref().map(parse_rational).transpose()?;
    let ctx = Context::new(lambda, mu.clone())?;
    let phi = matrix_from_doc(&d.phi)?;
    let psi = matrix_from_doc(&d.psi)?;
    if phi.rows() != d.meta.d {
        return Err(Error::Verification(format!(
            "meta.d is {} but phi has {} rows",
            d.meta.d,
            phi.rows()
        )));
    }
    let report = crate::matrix::verify_factorization(&ctx, &phi, &psi)?;
    if !report.ok {
        return Err(Error::Verification(failure_summary(&report)));
    }
    let mut f = Factorization::new(&ctx, phi, psi)?;
    if let Some(family) = &d.meta.family {
        let word_mu = if family == "w0" { mu } else { None };
        let spec = WordSpecDoc {
            family: family.clone(),
            n: d.meta.n,
            marks: d.meta.marks.clone(),
            transposed: d.meta.transposed,
            mu: word_mu.as_ref().map(format_rational),
        }
        .to_spec()?;
        f = f.with_spec(spec);
    }
    let recomputed = factorization_to_doc(&f);
    if recomputed.det_phi != d.det_phi
        || recomputed.det_psi != d.det_psi
        || recomputed.verification != d.verification
    {
        return Err(Error::Verification(
            "stored determinant profiles or verification flags disagree with the matrices".into(),
        ));
    }
    Ok(f)
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn factorization_to_json(f: &Factorization) -> String {
    to_json(&factorization_to_doc(f))
}

pub fn factorization_from_json(s: &str) -> Result<Factorization> {
    let doc: FactorizationDoc =
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    factorization_from_doc(&doc)
}

/// Accepts a single factorization object or an array of them.
pub fn factorizations_from_json(s: &str) -> Result<Vec<Factorization>> {
    let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let docs: Vec<FactorizationDoc> = match v {
        serde_json::Value::Array(_) => serde_json::from_value(v),
        _ => serde_json::from_value(v).map(|d| vec![d]),
    }
    .map_err(|e| Error::Parse(e.to_string()))?;
    docs.iter().map(factorization_from_doc).collect()
}

pub fn matrix_to_json(m: &PolyMatrix) -> String {
    to_json(&matrix_to_doc(m))
}

pub fn matrix_from_json(s: &str) -> Result<PolyMatrix> {
    let doc: MatrixDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    matrix_from_doc(&doc)
}

pub fn word_to_json(w: &WordSpec) -> String {
    to_json(&WordSpecDoc::from(w))
}

pub fn word_from_json(s: &str) -> Result<WordSpec> {
    let doc: WordSpecDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_spec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;
    use crate::factorizations::make_factorization;
    use crate::words::{Marks, Sign, WordKind};

    #[test]
    fn factorization_round_trip_is_byte_identical() {
        let ctx = Context::new(q(5), Some(q(-2))).unwrap();
        for w in [
            WordSpec::plain(WordKind::W2, 2, Marks::One(Sign::Minus)).unwrap(),
            WordSpec::new(WordKind::W0, Some(2), false, Marks::None, None).unwrap(),
        ] {
            let f = make_factorization(&w, &ctx).unwrap();
            let s = factorization_to_json(&f);
            let g = factorization_from_json(&s).unwrap();
            assert_eq!(g, f);
            assert_eq!(factorization_to_json(&g), s);
        }
    }

    #[test]
    fn tampered_document_is_rejected() {
        let ctx = Context::standard();
        let w = WordSpec::plain(WordKind::W4, 1, Marks::One(Sign::Plus)).unwrap();
        let mut doc = factorization_to_doc(&make_factorization(&w, &ctx).unwrap());
        doc.psi[0][0].terms[0].c = "7".into();
        assert!(matches!(factorization_from_doc(&doc), Err(Error::Verification(_))));
    }

    #[test]
    fn non_canonical_polynomials_are_rejected() {
        let doc = PolyDoc {
            terms: vec![
                TermDoc { ex: 0, ey: 1, c: "1".into() },
                TermDoc { ex: 1, ey: 0, c: "1".into() },
            ],
        };
        assert!(matches!(poly_from_doc(&doc), Err(Error::Parse(_))));
    }
}
