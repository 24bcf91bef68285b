//! Strongly t-logarithmic box alphabets and greedy digit expansions.
//!
//! cargo run --release --example digit_system

use tlog::gensets::{build_strongly_tlog, DigitSystem, DEFAULT_EXPANSION_BUDGET};
use tlog::{GroupSpec, IntMatrix};

fn main() -> tlog::Result<()> {
    let specs = [
        GroupSpec::baumslag_solitar(3)?,
        GroupSpec::baumslag_solitar(4)?,
        GroupSpec::matrix_module(IntMatrix::new(2, vec![2, 1, 1, 1]).expect("2x2"))?,
    ];
    for spec in specs {
        let (alphabet, n, checks) = build_strongly_tlog(&spec, 6, DEFAULT_EXPANSION_BUDGET)?;
        println!("{spec:?}: bound n = {n}, {} letters", alphabet.len());
        for c in &checks {
            println!(
                "  n = {}: pass = {}, tested {}, witness {:?}",
                c.n, c.pass, c.tested, c.witness
            );
        }
        let sys = DigitSystem::new(&spec, n)?;
        let sample = match spec {
            GroupSpec::BaumslagSolitar { .. } => "40@2",
            _ => "(5,-3)@1",
        };
        let k = spec.parse_element(sample)?;
        if let Some(e) = sys.expand(&k, DEFAULT_EXPANSION_BUDGET)? {
            println!("  {k} = {}", e.as_tword(sys.alphabet()));
        }
    }
    Ok(())
}
