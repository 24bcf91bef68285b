//! Exhaustive check of the layer inequality for `kₙ = Σ mⁱ` in BS(1, m).
//!
//! cargo run --release --example kn_condition

use tlog::twords::{element_extent, Alphabet, Window};
use tlog::witnesses::{bs_kn, check_kn_condition, KnParams};
use tlog::GroupSpec;

fn main() -> tlog::Result<()> {
    for m in [3, 5] {
        let spec = GroupSpec::baumslag_solitar(m)?;
        let alphabet = Alphabet::standard(&spec);
        for n in 2..=5u32 {
            let k = bs_kn(&spec, n)?;
            let window = Window::new(-2, n as i64 + 2)?;
            let extent = element_extent(&k, &alphabet, window, n + 3)?;
            let params = KnParams {
                n,
                i: 1,
                j: 1,
                length_cap: n + 3,
                window,
                node_budget: None,
            };
            let report = check_kn_condition(&alphabet, &k, params)?;
            let worst = report.worst.as_ref().map(|w| w.excess);
            println!(
                "m = {m}, n = {n}: k = {k}, I in [{}, {}], pass = {}, {} words, worst excess {worst:?}",
                extent.imin, extent.imax, report.pass, report.words
            );
        }
    }
    Ok(())
}
