//! Derives Phi for W2(2)+ from its Ext matrix step by step, then solves for
//! the partner Psi.

use t44::arith::Context;
use t44::families::build_x;
use t44::matrix::solve_psi;
use t44::relations::{eliminate_traced, presentation_from_ext, relation_matrix};
use t44::words::{word_string, Marks, Sign, WordKind, WordSpec};

fn main() -> t44::Result<()> {
    let ctx = Context::standard();
    let w = WordSpec::plain(WordKind::W2, 2, Marks::One(Sign::Plus))?;
    println!("{}: {}", w.label(), word_string(&w));

    let x = build_x(&w, &ctx)?;
    println!("X =\n{x}");

    let p = presentation_from_ext(&x, &ctx);
    print!("presentation:\n{}", p.dump(&ctx));

    let (reduced, steps) = eliminate_traced(&p)?;
    for s in &steps {
        println!("  {s}");
    }
    print!("minimal presentation:\n{}", reduced.dump(&ctx));

    let phi = relation_matrix(&reduced, None)?;
    print!("Phi =\n{}", phi.render(&ctx, false));
    let psi = solve_psi(&ctx, &phi, 4)?;
    print!("Psi =\n{}", psi.render(&ctx, false));
    Ok(())
}
