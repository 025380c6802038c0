mod common;

use common::{det_shape, eval_rows, partner_at, zgrid};
use t44::arith::{q, q_frac, Context, Q};
use t44::factorizations::*;
use t44::matrix::PolyMatrix;
use t44::words::{enumerate_words, word_transpose, Marks, Sign, WordKind, WordSpec};
use t44::Error;

fn ctx(lambda: i64) -> Context {
    Context::new(q(lambda), Some(q(3))).unwrap()
}

fn one(kind: WordKind, n: u32, s: Sign) -> WordSpec {
    WordSpec::plain(kind, n, Marks::One(s)).unwrap()
}

fn points() -> [(Q, Q); 3] {
    [(q(3), q_frac(-1, 2)), (q_frac(7, 3), q(4)), (q(-5), q_frac(2, 9))]
}

#[test]
fn every_word_gives_a_reduced_factorization() {
    for c in [ctx(2), ctx(-1)] {
        for w in enumerate_words(3) {
            let f = make_factorization(&w, &c).unwrap();
            let (phi, psi) = (f.phi(), f.psi());
            assert_eq!(phi.rows(), f.d());
            for (x, y) in points() {
                // Psi(p) is forced to be F(p) Phi(p)^-1.
                let want = partner_at(&c, phi, &x, &y).expect("Phi(p) invertible");
                assert_eq!(eval_rows(psi, &x, &y), want, "{w} at ({x}, {y})");
            }
            let no_units = |m: &PolyMatrix| m.entries().all(|p| p.constant_term() == q(0));
            assert!(no_units(phi), "{w} not reduced");
            // The regular module pairs with the trivial factorization (1).
            let psi_reduced = w.kind() != WordKind::W10;
            assert_eq!(no_units(psi), psi_reduced, "{w}");
            assert!(f.report().ok && f.report().phi_reduced);
            assert_eq!(f.report().psi_reduced, psi_reduced);
        }
    }
}

#[test]
fn det_profiles_agree_with_cofactor_expansion() {
    let c = ctx(5);
    for w in enumerate_words(2) {
        let f = make_factorization(&w, &c).unwrap();
        let (d, e) = det_shape(&c, f.phi());
        assert_eq!(d, f.d());
        assert_eq!(f.det_phi().unwrap().z, e, "{w}");
        let (_, e2) = det_shape(&c, f.psi());
        assert_eq!(f.det_psi().unwrap().z, e2, "{w}");
        // det Phi * det Psi = F^d, and F = z1 z2 z3 z4.
        for i in 0..4 {
            assert_eq!(e[i] + e2[i], d as u32, "{w}");
        }
    }
}

#[test]
fn size_and_determinant_laws() {
    let c = ctx(2);
    for n in 0..=6u32 {
        let k = n as usize;
        let f2 = make_factorization(&one(WordKind::W2, n, Sign::Plus), &c).unwrap();
        assert_eq!(f2.d(), 2 * k + 1);
        let f3 = make_factorization(&one(WordKind::W3, n, Sign::Plus), &c).unwrap();
        assert_eq!(f3.d(), 2 * k + 3);
        let f4 = make_factorization(&one(WordKind::W4, n, Sign::Plus), &c).unwrap();
        assert_eq!(f4.d(), 2 * k + 2);
        let (_, e) = det_shape(&c, f4.phi());
        assert_eq!(e, [n + 1, n, n + 1, n + 1]);
        let t = ar_translate(&f4);
        let (_, e) = det_shape(&c, t.phi());
        assert_eq!(e, [n + 1, n + 2, n + 1, n + 1]);
        // The translate has the profile of the minus-marked M5(n).
        let f5 = make_factorization(&one(WordKind::W5, n, Sign::Minus), &c).unwrap();
        assert_eq!(f5.det_phi().unwrap().z, [n + 1, n + 2, n + 1, n + 1]);
    }
}

#[test]
fn printed_closed_forms() {
    let c = Context::standard();
    let f = make_factorization(&one(WordKind::W2, 2, Sign::Plus), &c).unwrap();
    let phi = zgrid(
        &c,
        &[
            &["z3", "0", "0", "0", "0"],
            &["-z4", "z1*z4", "0", "0", "0"],
            &["0", "-z1*z3", "z2*z3", "0", "0"],
            &["0", "z1*z4", "-z2*z4", "z1*z4", "0"],
            &["0", "0", "0", "-z1*z3", "z2*z3"],
        ],
    );
    assert_eq!(f.phi(), &phi);
    assert_eq!(f.det_phi().unwrap().z, [2, 2, 3, 2]);
    assert_eq!(f.det_psi().unwrap().z, [3, 3, 2, 3]);

    let reg = make_factorization(&WordSpec::plain(WordKind::W10, 0, Marks::None).unwrap(), &c).unwrap();
    assert_eq!(reg.phi(), &zgrid(&c, &[&["z1*z2*z3*z4"]]));
    assert_eq!(reg.psi(), &zgrid(&c, &[&["1"]]));
    assert!(!reg.report().psi_reduced);

    let w7 = make_factorization(&WordSpec::plain(WordKind::W7, 0, Marks::None).unwrap(), &c).unwrap();
    assert_eq!(w7.phi(), &zgrid(&c, &[&["z3*z4"]]));
    let w7s = WordSpec::new(WordKind::W7, Some(0), true, Marks::None, None).unwrap();
    assert_eq!(make_factorization(&w7s, &c).unwrap().phi(), &zgrid(&c, &[&["z1*z2"]]));
}

#[test]
fn mark_conventions_swap_different_pairs() {
    let c = ctx(2);
    let plus = table2_phi(&one(WordKind::W2, 2, Sign::Plus), &c).unwrap();
    let stripe = table2_phi_with(&one(WordKind::W2, 2, Sign::Minus), &c, MarkConvention::Stripe).unwrap();
    let literal = table2_phi_with(&one(WordKind::W2, 2, Sign::Minus), &c, MarkConvention::Literal).unwrap();
    let e = |m| det_profile(&c, m).unwrap().z;
    let [a, b, cc, d] = e(&plus);
    assert_eq!(e(&stripe), [a, b, d, cc]);
    assert_eq!(e(&literal), [b, a, cc, d]);
    // Unmarked words ignore the convention.
    let w8 = WordSpec::plain(WordKind::W8, 2, Marks::None).unwrap();
    assert_eq!(
        table2_phi_with(&w8, &c, MarkConvention::Stripe).unwrap(),
        table2_phi_with(&w8, &c, MarkConvention::Literal).unwrap()
    );
}

#[test]
fn translation_is_an_involution() {
    let c = ctx(-1);
    for w in enumerate_words(2) {
        let f = make_factorization(&w, &c).unwrap();
        let t = ar_translate(&f);
        assert_eq!(t.phi(), f.psi());
        assert_eq!(t.det_phi(), f.det_psi());
        let back = ar_translate(&t);
        assert_eq!((back.phi(), back.psi()), (f.phi(), f.psi()));
    }
}

#[test]
fn pairing_rules_hold_under_the_stripe_convention() {
    for lambda in [2, 5] {
        let r = check_ar_pairings(&ctx(lambda), 3).unwrap();
        assert!(r.passed(), "{}", r.render());
        assert_eq!(r.convention(), Some(MarkConvention::Stripe));
        let failing: Vec<ArPairingRule> = r
            .rules
            .iter()
            .filter(|o| !o.holds_under(MarkConvention::Literal))
            .map(|o| o.rule)
            .collect();
        assert!(failing.contains(&ArPairingRule::M2ToM3));
        assert!(failing.contains(&ArPairingRule::M4ToM5));
        for o in &r.rules {
            if matches!(
                o.rule,
                ArPairingRule::SelfPaired | ArPairingRule::M1PlusPlus | ArPairingRule::M6ToM9 | ArPairingRule::M7ToM7Star
            ) {
                assert!(o.convention_neutral(), "{:?}", o.rule);
            }
        }
        assert!(r.render().contains("exactly one convention: stripe"));
    }
}

#[test]
fn pairing_partners() {
    let mu = q(3);
    let p = |w: &WordSpec| ar_partner(w, &mu).map(|(r, t)| (r, t.label()));
    assert_eq!(
        p(&one(WordKind::W2, 3, Sign::Plus)),
        Some((ArPairingRule::M2ToM3, "W3(2)-".into()))
    );
    assert_eq!(
        p(&one(WordKind::W3, 2, Sign::Minus)),
        Some((ArPairingRule::M2ToM3, "W2(3)+".into()))
    );
    let w2t = word_transpose(&one(WordKind::W2, 1, Sign::Minus)).unwrap();
    assert_eq!(p(&w2t), Some((ArPairingRule::M2StarToM3Star, "W3^T(0)+".into())));
    assert_eq!(
        p(&one(WordKind::W4, 0, Sign::Minus)),
        Some((ArPairingRule::M4ToM5, "W5(0)+".into()))
    );
    let w6 = WordSpec::plain(WordKind::W6, 3, Marks::None).unwrap();
    assert_eq!(p(&w6), Some((ArPairingRule::M6ToM9, "W9(2)".into())));
    let w8 = WordSpec::plain(WordKind::W8, 1, Marks::None).unwrap();
    assert_eq!(p(&w8), Some((ArPairingRule::SelfPaired, "W8(1)".into())));
    assert_eq!(p(&WordSpec::plain(WordKind::W10, 0, Marks::None).unwrap()), None);
}

#[test]
fn factorization_rejects_bad_pairs() {
    let c = Context::standard();
    let phi = zgrid(&c, &[&["z1", "0"], &["0", "z2"]]);
    let psi = zgrid(&c, &[&["z2*z3*z4", "0"], &["0", "z1*z3"]]);
    assert!(matches!(Factorization::new(&c, phi.clone(), psi), Err(Error::Verification(_))));
    let psi = zgrid(&c, &[&["z2*z3*z4", "0"], &["0", "z1*z3*z4"]]);
    let f = Factorization::new(&c, phi, psi).unwrap();
    assert_eq!(f.d(), 2);
    assert!(f.spec().is_none());
    let cycle = WordSpec::plain(WordKind::W0, 1, Marks::None).unwrap();
    let bare = Context::new(q(2), None).unwrap();
    assert!(matches!(make_factorization(&cycle, &bare), Err(Error::InvalidEigenvalue(_))));
    let f0 = make_factorization(&cycle, &c).unwrap();
    assert_eq!(f0.mu(), Some(&q(3)));
}
