//! Render a window of a stable AR component as Graphviz DOT.
//!
//! `cargo run --example component_dot > window.dot`

use brauer::homology;
use brauer::strmod::StringModule;
use brauer::verify::star;

fn main() {
    let p = star(2, &[2, 2, 2]);
    let s2 = StringModule::simple(&p, 2);
    let w = homology::component_window(&p, &s2, 2);
    eprintln!("{} modules, {} irreducible maps", w.nodes.len(), w.arrows.len());
    print!("{}", w.to_dot());
}
