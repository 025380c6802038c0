//! Auslander-Reiten translation `(Phi, Psi) -> (Psi, Phi)` and the pairing
//! rules it is predicted to satisfy.

use t44::arith::{q, Context};
use t44::factorizations::{ar_partner, ar_translate, check_ar_pairings, make_factorization};
use t44::words::{Marks, Sign, WordKind, WordSpec};

fn main() -> t44::Result<()> {
    let ctx = Context::standard();
    let w = WordSpec::plain(WordKind::W4, 1, Marks::One(Sign::Plus))?;
    let f = make_factorization(&w, &ctx)?;
    let t = ar_translate(&f);
    let (rule, partner) = ar_partner(&w, &q(3)).expect("W4 is paired with W5");
    let g = make_factorization(&partner, &ctx)?;
    println!("{}: {}", rule.describe(), w.label());
    println!("  det of translated Phi: {}", t.det_phi().expect("verified"));
    println!("  det Phi of {}:        {}", partner.label(), g.det_phi().expect("verified"));

    println!();
    print!("{}", check_ar_pairings(&ctx, 3)?.render());
    Ok(())
}
