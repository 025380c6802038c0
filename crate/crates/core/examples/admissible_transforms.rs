//! Random admissible row and column transformations change the Ext matrix
//! but not the module: the derived Phi keeps its size and det profile.

use t44::arith::Context;
use t44::factorizations::det_profile;
use t44::families::{apply_transform, build_x, random_admissible, Side};
use t44::relations::derive_phi;
use t44::words::{Marks, Sign, WordKind, WordSpec};

fn main() -> t44::Result<()> {
    let ctx = Context::standard();
    let w = WordSpec::plain(WordKind::W2, 3, Marks::One(Sign::Plus))?;
    let x = build_x(&w, &ctx)?;
    let base = derive_phi(&x, &ctx)?;
    println!("{}: Phi {}x{}, det {}", w.label(), base.rows(), base.cols(), det_profile(&ctx, &base)?);

    for seed in 0..5 {
        let s = random_admissible(x.row_stripes(), Side::Row, seed);
        let t = random_admissible(x.col_stripes(), Side::Column, seed + 1000);
        let y = apply_transform(&x, &s, &t)?;
        let phi = derive_phi(&y, &ctx)?;
        println!(
            "seed {seed}: rank X' = {}, Phi {}x{}, det {}",
            y.rank(),
            phi.rows(),
            phi.cols(),
            det_profile(&ctx, &phi)?
        );
    }
    Ok(())
}
