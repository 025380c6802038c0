//! Determinant profiles of Phi and Psi for every family up to a size,
//! printed as z-exponent vectors.

use t44::arith::Context;
use t44::factorizations::make_factorization;
use t44::words::enumerate_words;

fn main() -> t44::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let ctx = Context::standard();
    println!("{:<14} {:>3}  {:<14} {:<14}", "word", "d", "det Phi", "det Psi");
    for w in enumerate_words(max_n) {
        let f = make_factorization(&w, &ctx)?;
        let z = |p: Option<&t44::arith::DetProfile>| format!("{:?}", p.expect("verified").z);
        println!("{:<14} {:>3}  {:<14} {:<14}", w.label(), f.d(), z(f.det_phi()), z(f.det_psi()));
    }
    Ok(())
}
