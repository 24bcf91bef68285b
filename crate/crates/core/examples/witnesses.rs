//! Word lengths and depths of `tⁿ a t⁻²ⁿ a tⁿ` under the unbound generating set.
//!
//! cargo run --release --example witnesses -- [max_n]

use tlog::cayley::{BallIndex, BallLimits};
use tlog::gensets::build_unbound_gens;
use tlog::twords::Alphabet;
use tlog::witnesses::measure_deep;
use tlog::GroupSpec;

fn main() -> tlog::Result<()> {
    let max_n: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let spec = GroupSpec::lamplighter(2)?;
    let alphabet = Alphabet::standard(&spec);
    let gens = build_unbound_gens(&alphabet)?;
    let radius = 4 * max_n + 6;
    let ball = BallIndex::build(
        spec.clone(),
        gens.labelled_elements(),
        radius,
        &BallLimits::default(),
    )?;
    println!("ball of radius {radius}: {} elements", ball.len());
    let a = spec.parse_element("{0:1}")?;
    for n in 1..=max_n {
        let r = measure_deep(&ball, n, &a, 4 * n + 4)?;
        println!(
            "n = {n}: {} length {} depth {}{}",
            r.elements[0].1,
            r.measured["word_length"],
            r.measured["depth"],
            if r.censored["depth"] {
                " (censored)"
            } else {
                ""
            }
        );
    }
    Ok(())
}
