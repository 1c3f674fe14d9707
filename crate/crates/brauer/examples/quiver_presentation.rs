//! Quiver and relations of a star algebra, with projective dimensions.
//!
//! `cargo run --example quiver_presentation`

use brauer::presentation::{make_star, present};

fn main() -> brauer::Result<()> {
    let p = present(&make_star(2, &[2, 3])?);
    println!("{} vertices, total dimension {}", p.n_q(), p.dim());
    for a in p.arrows() {
        println!("  {:>3}: {} -> {}", a.id, p.q_name(a.source), p.q_name(a.target));
    }
    let name = |a: &usize| p.arrow(*a).id.clone();
    let rel = p.relations();
    for (lhs, rhs) in &rel.type1 {
        let l: Vec<_> = lhs.iter().map(name).collect();
        let r: Vec<_> = rhs.iter().map(name).collect();
        println!("  {} = {}", l.join(" "), r.join(" "));
    }
    for (a, b) in &rel.type3 {
        println!("  {} {} = 0", name(a), name(b));
    }
    for q in 0..p.n_q() {
        println!("dim P({q}) = {}", p.projective(q).dim());
    }
    Ok(())
}
