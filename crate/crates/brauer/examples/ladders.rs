//! Checking an explicit ladder of inclusions and surjections, finite or
//! given by a repeating block.
//!
//! `cargo run --example ladders`

use brauer::strmod::{parse_word, StringModule};
use brauer::udr::{self, Ladder};
use brauer::verify::star;

fn main() -> brauer::Result<()> {
    let q = star(2, &[2, 3]);
    let ss = q.star_strings()?;
    let s0 = StringModule::simple(&q, 0);
    let finite = Ladder::Finite(vec![s0.word().clone(), ss.delta_pow(0, 1, true)?, ss.delta_pow(0, 2, true)?]);
    let v = udr::verify_ladder(&q, &s0, &finite, None)?;
    println!("finite ladder over S(0): {} (complete: {})", v.class, v.complete);

    let p = star(2, &[2, 2, 2]);
    let ss = p.star_strings()?;
    let (n, i) = (ss.n(), ss.i());
    let prefix = ss.concat(&[ss.y(0)?, ss.x(i, n)?])?;
    let block = ss.concat(&[ss.x(i, 0)?, ss.y(0)?, ss.x(i, n)?])?;
    let m = StringModule::new(&p, &prefix);
    let v = udr::verify_ladder(&p, &m, &Ladder::Template { prefix, block }, Some(4))?;
    println!("template ladder over {}: {} up to depth {}", m.display(&p), v.class, v.depth);
    for note in &v.notes {
        println!("    {note}");
    }

    let broken = Ladder::Finite(vec![s0.word().clone(), parse_word("a2", &q)?]);
    match udr::verify_ladder(&q, &s0, &broken, None) {
        Ok(v) => println!("unexpected: {}", v.class),
        Err(e) => println!("broken ladder rejected: {e}"),
    }
    Ok(())
}
