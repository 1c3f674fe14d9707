//! Universal deformation rings of string modules, with the evidence
//! trail, and the same question asked on a tree via its star reduction.
//!
//! `cargo run --example deformation_rings`

use brauer::ribbon;
use brauer::strmod::StringModule;
use brauer::udr::{self, TreeModule};
use brauer::verify::star;

fn main() -> brauer::Result<()> {
    let p = star(2, &[2, 3]);
    for w in ["e0", "e1", "e2", "a1 a2"] {
        let c = udr::classify(&p, &StringModule::parse(w, &p)?)?;
        println!("R({w}) = {}", c.class);
        for e in &c.evidence {
            println!("    [{}] {}", e.rule, e.detail);
        }
    }
    let tree = ribbon::line_graph(&[2, 1, 4]);
    let r = udr::classify_tree(&tree, &TreeModule::Diagonal { t: 0, j: 1 })?;
    println!("tree {:?} -> {}: {} = {}", tree.multiplicities(), r.star, r.word, r.classification.class);
    println!("  {}", r.transport);
    Ok(())
}
