//! Exports a factorization as JSON, parses it back and checks the text is
//! reproduced byte for byte.

use t44::arith::{q_frac, Context};
use t44::factorizations::make_factorization;
use t44::serial::{factorization_from_json, factorization_to_json};
use t44::words::{Marks, Sign, WordKind, WordSpec};

fn main() -> t44::Result<()> {
    let ctx = Context::new(q_frac(-3, 2), None)?;
    let w = WordSpec::plain(WordKind::W4, 1, Marks::One(Sign::Minus))?;
    let json = factorization_to_json(&make_factorization(&w, &ctx)?);
    print!("{json}");
    let back = factorization_from_json(&json)?;
    assert_eq!(factorization_to_json(&back), json);
    eprintln!("round trip: identical ({} bytes)", json.len());
    Ok(())
}
