//! Sphere sizes of the lamplighter group for the three built-in generating sets.
//!
//! cargo run --release --example lamplighter_ball -- [radius]

use tlog::cayley::{BallIndex, BallLimits};
use tlog::gensets::{build_bound_gens, build_standard_gens, build_unbound_gens};
use tlog::twords::Alphabet;
use tlog::GroupSpec;

fn main() -> tlog::Result<()> {
    let radius: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    let spec = GroupSpec::lamplighter(2)?;
    let alphabet = Alphabet::standard(&spec);
    let sets = [
        ("standard", build_standard_gens(&alphabet)?),
        ("unbound", build_unbound_gens(&alphabet)?),
        ("bound", build_bound_gens(&alphabet)?),
    ];
    for (name, gens) in sets {
        let labels: Vec<_> = gens.generators().iter().map(|g| g.label.as_str()).collect();
        println!("{name}: {} generators {labels:?}", gens.len());
        // the bound set grows fastest
        let r = if name == "bound" {
            radius.min(6)
        } else {
            radius
        };
        let ball = BallIndex::build(
            spec.clone(),
            gens.labelled_elements(),
            r,
            &BallLimits::default(),
        )?;
        println!(
            "  radius {r}: {} elements, spheres {:?}",
            ball.len(),
            ball.sphere_sizes()
        );
    }
    Ok(())
}
