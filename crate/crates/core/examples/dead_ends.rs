//! Dead ends and their depths, for the unbound and bound generating sets.
//!
//! cargo run --release --example dead_ends

use std::collections::BTreeMap;

use tlog::cayley::{BallIndex, BallLimits, DEFAULT_DEPTH_CAP};
use tlog::gensets::{build_bound_gens, build_unbound_gens};
use tlog::twords::Alphabet;
use tlog::GroupSpec;

fn main() -> tlog::Result<()> {
    let spec = GroupSpec::lamplighter(2)?;
    let alphabet = Alphabet::standard(&spec);
    for (name, gens, radius) in [
        ("unbound", build_unbound_gens(&alphabet)?, 12),
        ("bound", build_bound_gens(&alphabet)?, 6),
    ] {
        let ball = BallIndex::build(
            spec.clone(),
            gens.labelled_elements(),
            radius,
            &BallLimits::default(),
        )?;
        let dead = ball.dead_ends(DEFAULT_DEPTH_CAP);
        let mut histogram = BTreeMap::new();
        for d in &dead {
            *histogram.entry(d.depth).or_insert(0u64) += 1;
        }
        println!("{name}, radius {radius}: {} dead ends", dead.len());
        for (depth, count) in histogram {
            println!("  depth {depth}: {count}");
        }
        if let Some(deepest) = dead.iter().max_by_key(|d| d.depth) {
            let labels = ball.geodesic_labels(&deepest.element).unwrap_or_default();
            println!("  deepest: {} = {}", deepest.element, labels.join(" "));
        }
    }
    Ok(())
}
