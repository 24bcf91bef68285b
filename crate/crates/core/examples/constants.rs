//! Sampled efficiency and logarithmicity constants for standard alphabets.
//!
//! cargo run --release --example constants

use tlog::constants::{estimate_constants, ConstantsParams};
use tlog::twords::{Alphabet, Window};
use tlog::GroupSpec;

fn main() -> tlog::Result<()> {
    let cases = [
        (GroupSpec::lamplighter(2)?, Window::new(-5, 5)?),
        (GroupSpec::lamplighter(3)?, Window::new(-4, 4)?),
        (GroupSpec::baumslag_solitar(3)?, Window::new(-4, 6)?),
    ];
    for (spec, window) in cases {
        let est = estimate_constants(&Alphabet::standard(&spec), &ConstantsParams::new(window, 8))?;
        println!("{spec:?}: C_eff = {}, C_log = {}", est.c_eff, est.c_log);
        for s in &est.strong {
            println!("  m = {}, n = {}: B = {}, C = {}", s.m, s.n, s.b, s.c);
        }
        println!("  {}", est.sample_description);
    }
    Ok(())
}
