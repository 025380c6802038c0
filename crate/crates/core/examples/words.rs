//! Every admissible word up to a size, with its string and Ext stripe sizes.
//!
//!     cargo run --example words -- 1

use t44::arith::Context;
use t44::families::build_x;
use t44::words::{enumerate_words, word_string};

fn main() -> t44::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let ctx = Context::standard();
    let words = enumerate_words(max_n);
    for w in &words {
        let x = build_x(w, &ctx)?;
        println!(
            "{:<14} rows {:?} cols {:?}  {}",
            w.label(),
            x.row_stripes(),
            x.col_stripes(),
            word_string(w)
        );
    }
    println!("{} words", words.len());
    Ok(())
}
