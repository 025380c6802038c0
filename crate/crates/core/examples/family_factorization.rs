//! Closed-form factorization of one word at several values of lambda.
//!
//!     cargo run --example family_factorization -- w5 2 -

use t44::arith::{q, q_frac, Context};
use t44::factorizations::make_factorization;
use t44::words::{Marks, WordKind, WordSpec};

fn main() -> t44::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind: WordKind = args.first().map_or("w3", String::as_str).parse()?;
    let n: u32 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let marks: Marks = args.get(2).map_or("+", String::as_str).parse()?;
    let w = WordSpec::new(kind, kind.has_size().then_some(n), false, marks, None)?;

    for lambda in [q(2), q(-1), q_frac(7, 2)] {
        let ctx = Context::new(lambda, Some(q(3)))?;
        let f = make_factorization(&w, &ctx)?;
        println!("{}  lambda = {}  d = {}", w.label(), ctx.lambda(), f.d());
        print!("{}", f.phi().render(&ctx, false));
        let r = f.report();
        println!(
            "Phi*Psi = F*I: {}, det Phi = {}, det Psi = {}\n",
            r.phi_psi_is_f && r.psi_phi_is_f,
            f.det_phi().expect("verified"),
            f.det_psi().expect("verified"),
        );
    }
    Ok(())
}
