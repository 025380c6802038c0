mod common;

use common::{cofactor_det, partner_at, zgrid};
use t44::arith::{q, q_frac, BiPoly, Context};
use t44::matrix::*;
use t44::Error;

fn worked_phi(ctx: &Context) -> PolyMatrix {
    zgrid(
        ctx,
        &[
            &["z3", "0", "0", "0", "0"],
            &["-z4", "z1*z4", "0", "0", "0"],
            &["0", "-z1*z3", "z2*z3", "0", "0"],
            &["0", "z1*z4", "-z2*z4", "z1*z4", "0"],
            &["0", "0", "0", "-z1*z3", "z2*z3"],
        ],
    )
}

#[test]
fn det_agrees_with_cofactor_expansion() {
    let ctx = Context::new(q(5), None).unwrap();
    let phi = worked_phi(&ctx);
    assert_eq!(mat_det(&phi).unwrap(), cofactor_det(&phi));
    // A dense matrix with no single-entry rows or columns.
    let dense = zgrid(
        &ctx,
        &[
            &["z1", "z2", "z3"],
            &["z4", "z1*z2", "-z3"],
            &["2*z2", "z4", "z1^2"],
        ],
    );
    assert_eq!(mat_det(&dense).unwrap(), cofactor_det(&dense));
    assert!(matches!(mat_det(&PolyMatrix::zeros(2, 3)), Err(Error::NotSquare { .. })));
    assert_eq!(mat_det(&PolyMatrix::zeros(0, 0)).unwrap(), BiPoly::one());
}

#[test]
fn worked_example_partner_is_unique_and_printed() {
    let ctx = Context::standard();
    let phi = worked_phi(&ctx);
    let psi = solve_psi(&ctx, &phi, 4).unwrap();
    let printed = zgrid(
        &ctx,
        &[
            &["z1*z2*z4", "0", "0", "0", "0"],
            &["z2*z4", "z2*z3", "0", "0", "0"],
            &["z1*z4", "z1*z3", "z1*z4", "0", "0"],
            &["0", "0", "z2*z4", "z2*z3", "0"],
            &["0", "0", "z1*z4", "z1*z3", "z1*z4"],
        ],
    );
    assert_eq!(psi, printed);
    // Independent check: Psi(p) = F(p) Phi(p)^-1 at a rational point.
    let (x, y) = (q_frac(3, 7), q(-2));
    let want = partner_at(&ctx, &phi, &x, &y).unwrap();
    assert_eq!(common::eval_rows(&psi, &x, &y), want);
}

#[test]
fn solver_errors() {
    let ctx = Context::standard();
    assert!(matches!(
        solve_psi(&ctx, &PolyMatrix::zeros(2, 3), 4),
        Err(Error::NotSquare { .. })
    ));
    assert_eq!(solve_psi(&ctx, &PolyMatrix::zeros(2, 2), 4), Err(Error::Singular));
    // (x + y) does not divide F.
    let bad = PolyMatrix::from_rows(vec![vec![&BiPoly::x() + &BiPoly::y()]]).unwrap();
    assert_eq!(solve_psi(&ctx, &bad, 4), Err(Error::NoPolynomialSolution(4)));
    // (z1) needs a cubic partner.
    let z1 = PolyMatrix::from_rows(vec![vec![ctx.z(1).clone()]]).unwrap();
    assert_eq!(solve_psi(&ctx, &z1, 2), Err(Error::NoPolynomialSolution(2)));
    assert_eq!(
        ctx.render(solve_psi(&ctx, &z1, 3).unwrap().get(0, 0)),
        "z2*z3*z4"
    );
}

#[test]
fn verification_report() {
    let ctx = Context::standard();
    let phi = worked_phi(&ctx);
    let psi = solve_psi(&ctx, &phi, 4).unwrap();
    let r = verify_factorization(&ctx, &phi, &psi).unwrap();
    assert!(r.ok && r.phi_reduced && r.psi_reduced);
    assert_eq!(r.det_phi.unwrap().z, [2, 2, 3, 2]);
    assert_eq!(r.det_psi.unwrap().z, [3, 3, 2, 3]);
    let wrong = psi.scale(&q(2));
    let r = verify_factorization(&ctx, &phi, &wrong).unwrap();
    assert!(!r.ok && !r.phi_psi_is_f && !r.psi_phi_is_f);
    assert!(matches!(
        verify_factorization(&ctx, &phi, &PolyMatrix::identity(3)),
        Err(Error::ShapeMismatch(_))
    ));
}

#[test]
fn permutation_matching() {
    let ctx = Context::standard();
    let a = worked_phi(&ctx);
    let rows = [3, 0, 4, 1, 2];
    let cols = [1, 4, 0, 2, 3];
    let b = a.select(&rows, &cols);
    let (p, q) = match_up_to_permutation(&a, &b).unwrap().unwrap();
    assert_eq!(a.select(&p, &q), b);
    let (p, q) = match_up_to_permutation(&a, &a).unwrap().unwrap();
    assert_eq!((p, q), ((0..5).collect(), (0..5).collect()));
    let mut c = b.clone();
    c.set(0, 0, ctx.z(2).clone());
    assert_eq!(match_up_to_permutation(&a, &c).unwrap(), None);
    assert!(matches!(
        match_up_to_permutation(&a, &PolyMatrix::identity(4)),
        Err(Error::ShapeMismatch(_))
    ));
}

#[test]
fn products_and_shapes() {
    let ctx = Context::standard();
    let a = zgrid(&ctx, &[&["z1", "z2"], &["0", "z3"]]);
    let b = zgrid(&ctx, &[&["z4"], &["1"]]);
    let ab = mat_mul(&a, &b).unwrap();
    assert_eq!(ab.rows(), 2);
    assert_eq!(ab.get(0, 0), &(&(ctx.z(1) * ctx.z(4)) + ctx.z(2)));
    assert!(matches!(mat_mul(&b, &b), Err(Error::ShapeMismatch(_))));
    assert!(matches!(
        PolyMatrix::from_rows(vec![vec![BiPoly::one()], vec![]]),
        Err(Error::ShapeMismatch(_))
    ));
    assert!(!a.is_reduced() || a.entries().all(BiPoly::in_max_ideal));
    assert!(!b.is_reduced());
}
