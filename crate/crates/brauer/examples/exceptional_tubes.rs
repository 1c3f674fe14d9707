//! Boundary modules of the exceptional tubes, their ranks, and the
//! diagonal that climbs from the mouth.
//!
//! `cargo run --example exceptional_tubes`

use brauer::homology::{self, HookOp};
use brauer::strmod::StringModule;
use brauer::verify::star;

fn main() -> brauer::Result<()> {
    let p = star(2, &[2, 2, 2]);
    println!("{}", homology::family_name(&p));
    for b in homology::boundary_modules(&p) {
        let a = homology::locate_in_tube(&p, &b).expect("boundary modules lie on a tube");
        println!("  boundary {:<22} tube {:?}", b.display(&p), a.tube_id());
    }
    let (ok, rows) = homology::omega_swaps_tubes(&p)?;
    println!("Omega swaps the two tubes: {ok} ({} witnesses)", rows.len());

    let ss = p.star_strings()?;
    let mouth = ss.x(ss.i(), ss.n())?;
    for (d, w) in homology::diagonal(&p, &mouth, 4, HookOp::LeftPlus).iter().enumerate() {
        let m = StringModule::new(&p, w);
        println!("  d = {d}: {:<28} stable End dim {}", w.display(&p), homology::stable_end_dim(&p, &m));
    }
    Ok(())
}
