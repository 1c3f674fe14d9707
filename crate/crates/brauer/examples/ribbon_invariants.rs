//! Combinatorial invariants of a Brauer graph: walks, faces, growth and
//! the derived-equivalence test against its star reduction.
//!
//! `cargo run --example ribbon_invariants`

use brauer::ribbon::{self, BrauerGraph};

fn main() -> brauer::Result<()> {
    let text = r#"{"tree": {"edges": [["a","b"],["b","c"],["c","d"]],
                            "multiplicities": {"a": 2, "b": 2, "c": 2}}}"#;
    let g = BrauerGraph::from_json(text)?;
    println!("vertices {}, edges {}", g.n_vertices(), g.n_edges());
    println!("multiplicities {:?}", g.multiplicities());
    println!("face perimeters {:?}", g.perimeters());
    for (k, w) in g.green_walks().iter().enumerate() {
        println!("green walk {k}: length {}", w.len());
    }
    println!("bipartite {}", g.is_bipartite());
    println!("growth {}", ribbon::growth_class(&g));

    let star = ribbon::star_reduce(&g)?;
    let shape = ribbon::recognize_star(&star).expect("star reduction is a star");
    println!("star reduction: n = {}, mbar = {:?}", shape.n, shape.mbar);
    let report = ribbon::derived_equivalent(&g, &star);
    for c in &report.criteria {
        println!("  {:<16} {}", c.name, if c.ok { "agree" } else { "differ" });
    }
    println!("derived equivalent: {}", report.equivalent);
    Ok(())
}
