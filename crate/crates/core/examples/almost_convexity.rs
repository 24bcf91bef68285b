//! Interior distances between nearby points of a sphere, and the explicit
//! pairs `h⁺, h⁻` whose interior distance grows with `n`.
//!
//! cargo run --release --example almost_convexity

use tlog::cayley::{BallIndex, BallLimits};
use tlog::gensets::build_unbound_gens;
use tlog::twords::Alphabet;
use tlog::witnesses::measure_acx;
use tlog::GroupSpec;

fn main() -> tlog::Result<()> {
    let spec = GroupSpec::lamplighter(2)?;
    let alphabet = Alphabet::standard(&spec);
    let gens = build_unbound_gens(&alphabet)?;
    let ball = BallIndex::build(
        spec.clone(),
        gens.labelled_elements(),
        12,
        &BallLimits::default(),
    )?;
    for r in 2..=10 {
        let level = ball.acx_check(r, 2)?;
        let ell = level.max_interior.map_or("-".into(), |d| d.to_string());
        println!("r = {r:2}: l(r) = {ell:>3} over {} pairs", level.pair_count);
    }
    let s = gens.max_shift_generator().element.clone();
    let a = spec.parse_element("{0:1}")?;
    for n in 1..=2 {
        let report = measure_acx(&ball, n, 1, &s, &a)?;
        println!("n = {n}, J = 1: {:?}", report.measured);
    }
    Ok(())
}
