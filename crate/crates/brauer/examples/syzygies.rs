//! Syzygies, cosyzygies, periodicity and stable endomorphisms.
//!
//! `cargo run --example syzygies`

use brauer::homology;
use brauer::strmod::StringModule;
use brauer::verify::star;

fn main() -> brauer::Result<()> {
    let p = star(2, &[2, 2, 2]);
    for w in ["e0", "e2", "-d0 a0 -d1 a1"] {
        let m = StringModule::parse(w, &p)?;
        println!("M = {w}");
        let mut x = m.clone();
        for k in 1..=3 {
            x = homology::omega(&p, &x)?;
            println!("  Omega^{k} = {} (dim {})", x.display(&p), x.dim());
        }
        println!("  Omega^-1 = {}", homology::omega_inv(&p, &m)?.display(&p));
        match homology::is_periodic(&p, &m, None)? {
            Some(k) => println!("  Omega-periodic with period {k}"),
            None => println!("  not Omega-periodic"),
        }
        println!("  stable End dim {}, Ext^1 dim {}", homology::stable_end_dim(&p, &m), homology::ext1_dim(&p, &m)?);
    }
    Ok(())
}
