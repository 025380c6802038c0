use t44::arith::*;
use t44::Error;

fn p(terms: &[(i64, u32, u32)]) -> BiPoly {
    BiPoly::from_terms(terms.iter().map(|&(c, x, y)| (Monomial::new(x, y), q(c))))
}

#[test]
fn rationals_parse_exactly() {
    assert_eq!(parse_rational("3").unwrap(), q(3));
    assert_eq!(parse_rational("-6/4").unwrap(), q_frac(-3, 2));
    assert_eq!(format_rational(&q_frac(6, -4)), "-3/2");
    assert_eq!(format_rational(&q(7)), "7");
    assert!(matches!(parse_rational("0.5"), Err(Error::Parse(_))));
    assert!(matches!(parse_rational("1e3"), Err(Error::Parse(_))));
    assert!(matches!(parse_rational("abc"), Err(Error::Parse(_))));
    assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
}

#[test]
fn curve_equation_renders_in_graded_lex_order() {
    let ctx = Context::standard();
    assert_eq!(ctx.f().to_string(), "x^3*y - 3*x^2*y^2 + 2*x*y^3");
    assert_eq!(ctx.render(ctx.f()), "z1*z2*z3*z4");
    let c5 = Context::new(q(5), None).unwrap();
    assert_eq!(c5.f().to_string(), "x^3*y - 6*x^2*y^2 + 5*x*y^3");
}

#[test]
fn z_forms_are_the_four_lines() {
    let ctx = Context::new(q_frac(1, 3), None).unwrap();
    assert_eq!(ctx.z(1), &BiPoly::y());
    assert_eq!(ctx.z(2), &BiPoly::x());
    assert_eq!(ctx.z(3), &(&BiPoly::x() - &BiPoly::y()));
    assert_eq!(ctx.z(4).to_string(), "x - 1/3*y");
    let prod = ctx.z(1) * &(ctx.z(2) * &(ctx.z(3) * ctx.z(4)));
    assert_eq!(&prod, ctx.f());
}

#[test]
fn context_rejects_degenerate_parameters() {
    assert!(matches!(Context::new(q(0), None), Err(Error::InvalidParameter(_))));
    assert!(matches!(Context::new(q(1), None), Err(Error::InvalidParameter(_))));
    assert!(matches!(Context::new(q(2), Some(q(1))), Err(Error::InvalidEigenvalue(_))));
    assert!(matches!(Context::new(q(2), Some(q(0))), Err(Error::InvalidEigenvalue(_))));
    assert!(Context::new(q(-1), Some(q(-2))).is_ok());
}

#[test]
fn decomposition_recovers_unit_and_exponents() {
    let ctx = Context::new(q(5), None).unwrap();
    let m = ctx.z_monomial(&q(-2), [2, 0, 1, 1]);
    let d = ctx.decompose(&m).unwrap().unwrap();
    assert_eq!((d.unit.clone(), d.z), (q(-2), [2, 0, 1, 1]));
    assert_eq!(ctx.render(&m), "-2*z1^2*z3*z4");
    assert_eq!(ctx.decompose(&BiPoly::zero()), Err(Error::ZeroInput));
    // x^2 + y^2 has no real linear factors.
    assert_eq!(ctx.decompose(&p(&[(1, 2, 0), (1, 0, 2)])).unwrap(), None);
    // Not homogeneous.
    assert_eq!(ctx.decompose(&p(&[(1, 1, 0), (1, 0, 0)])).unwrap(), None);
    let unit = ctx.decompose(&BiPoly::constant(q(3))).unwrap().unwrap();
    assert_eq!((unit.unit, unit.z), (q(3), [0, 0, 0, 0]));
}

#[test]
fn zform_parser_round_trips_rendering() {
    let ctx = Context::standard();
    for s in ["z1*z3", "-z4", "2*z1^2*z4", "-1/2*z2*z3^3", "7", "-1"] {
        let poly = ctx.parse_zform(s).unwrap();
        assert_eq!(ctx.render(&poly), s);
    }
    assert!(ctx.parse_zform("0").unwrap().is_zero());
    assert!(matches!(ctx.parse_zform("z5"), Err(Error::Parse(_))));
    assert!(matches!(ctx.parse_zform("x*y"), Err(Error::Parse(_))));
}

#[test]
fn exact_division() {
    let a = p(&[(1, 2, 0), (-1, 0, 2)]);
    let b = p(&[(1, 1, 0), (1, 0, 1)]);
    assert_eq!(a.exact_div(&b).unwrap(), p(&[(1, 1, 0), (-1, 0, 1)]));
    assert_eq!(a.exact_div(&BiPoly::zero()), Err(Error::DivisionByZero));
    assert!(matches!(
        p(&[(1, 1, 0), (1, 0, 0)]).exact_div(&BiPoly::x()),
        Err(Error::NotDivisible(_))
    ));
    assert!(BiPoly::zero().exact_div(&b).unwrap().is_zero());
}

#[test]
fn maximal_ideal_membership() {
    assert!(BiPoly::zero().in_max_ideal());
    assert!(BiPoly::x().in_max_ideal());
    assert!(!BiPoly::one().in_max_ideal());
    assert!(!(&BiPoly::x() + &BiPoly::one()).in_max_ideal());
}

#[test]
fn evaluation_is_a_ring_homomorphism_on_examples() {
    let a = p(&[(3, 2, 1), (-1, 0, 0), (2, 0, 3)]);
    let b = p(&[(1, 1, 0), (-5, 0, 1)]);
    let (x, y) = (q_frac(2, 3), q(-4));
    assert_eq!((&a * &b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
    assert_eq!((&a - &b).eval(&x, &y), a.eval(&x, &y) - b.eval(&x, &y));
    assert_eq!(a.pow(3).eval(&x, &y), a.eval(&x, &y) * a.eval(&x, &y) * a.eval(&x, &y));
}

#[test]
fn rational_matrices() {
    let m = QMat::from_ints(3, 3, &[2, 0, 1, 1, 3, 0, 0, 1, 1]);
    assert_eq!(m.det().unwrap(), q(7));
    assert_eq!(m.rank(), 3);
    assert!(QMat::from_ints(2, 2, &[1, 2, 2, 4]).det().unwrap() == q(0));
    assert!(matches!(QMat::zeros(2, 3).det(), Err(Error::NotSquare { .. })));
    assert!(matches!(m.mul(&QMat::zeros(2, 2)), Err(Error::ShapeMismatch(_))));
}
