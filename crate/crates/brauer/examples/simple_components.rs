//! Diagonals through the simple modules in their Z A_infinity^infinity
//! components, for both shapes of star.
//!
//! `cargo run --example simple_components`

use brauer::homology;
use brauer::strmod::StringModule;
use brauer::verify::star;

fn main() -> brauer::Result<()> {
    for p in [star(2, &[2, 2, 2]), star(2, &[2, 3])] {
        println!("{}", homology::family_name(&p));
        for d in homology::simple_diagonals(&p) {
            println!("  diagonal through S({}) (case {})", d.t, d.case);
            for (j, w) in d.positions(&p, 4).iter().enumerate() {
                println!("    C_{j} = {}", w.display(&p));
            }
            let stable = homology::omega_stable_simple_component(&p, d.t)?;
            println!("    component Omega-stable: {stable}");
        }
        let s0 = StringModule::simple(&p, 0);
        println!("  S(0) located at {:?}", homology::locate(&p, &s0)?);
    }
    Ok(())
}
