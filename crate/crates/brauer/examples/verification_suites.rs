//! Run every built-in verification suite and summarise the results.
//!
//! `cargo run --release --example verification_suites`

use brauer::verify::{self, Config};

fn main() -> brauer::Result<()> {
    let cfg = Config { max_len: 8, ..Config::default() };
    for suite in verify::SUITES {
        let checks = verify::run_suite(suite, &cfg)?;
        let ok = checks.iter().filter(|c| c.ok).count();
        println!("{suite:<12} {ok}/{}", checks.len());
        for c in checks.iter().filter(|c| !c.ok) {
            println!("    {}", c.line());
        }
    }
    Ok(())
}
