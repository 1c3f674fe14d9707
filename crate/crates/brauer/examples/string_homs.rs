//! Canonical homomorphisms between string modules, cross-checked
//! against brute-force linear algebra over the rationals.
//!
//! `cargo run --example string_homs`

use brauer::strmod::{self, MatrixRep, StringModule};
use brauer::verify::star;

fn main() -> brauer::Result<()> {
    let p = star(2, &[2, 2, 2]);
    let m = StringModule::parse("-d0 a0 -d1 a1", &p)?;
    let n = StringModule::parse("-d1 a1", &p)?;
    println!("M = {}, dim {}, top {:?}, socle {:?}", m.display(&p), m.dim(), m.top(&p), m.socle(&p));
    let homs = strmod::canonical_homs(&p, &n, &m);
    println!("Hom(N, M) has {} canonical basis maps", homs.len());
    for h in &homs {
        let f = strmod::hom_matrix(h, n.dim(), m.dim());
        println!("  rank {}: {:?}", h.rank(), f);
    }
    let (rn, rm) = (MatrixRep::from_word(&p, n.word()), MatrixRep::from_word(&p, m.word()));
    println!("oracle dimension {}", strmod::oracle_hom_dim(&p, &rn, &rm));

    let words = strmod::enumerate_words(&p, 4);
    let reps: Vec<_> = words.iter().map(|w| MatrixRep::from_word(&p, w)).collect();
    let mut pairs = 0;
    for (a, wa) in words.iter().enumerate() {
        for (b, wb) in words.iter().enumerate() {
            assert_eq!(strmod::canonical_homs_words(&p, wa, wb).len(), strmod::oracle_hom_dim(&p, &reps[a], &reps[b]));
            pairs += 1;
        }
    }
    println!("{} words up to length 4, {pairs} ordered pairs agree with the oracle", words.len());
    Ok(())
}
