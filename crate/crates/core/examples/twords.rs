//! t-word calculus: evaluation, projection of spelled words, minimal words.
//!
//! cargo run --example twords

use tlog::gensets::build_unbound_gens;
use tlog::twords::{minimal_twords, Alphabet, Window};
use tlog::GroupSpec;

fn main() -> tlog::Result<()> {
    let spec = GroupSpec::baumslag_solitar(3)?;
    let alphabet = Alphabet::standard(&spec);
    let gens = build_unbound_gens(&alphabet)?;
    let word: Vec<usize> = ["t a2", "t", "a2", "t^-1"]
        .iter()
        .map(|l| {
            gens.generators()
                .iter()
                .position(|g| g.label == *l)
                .expect("label")
        })
        .collect();
    let (shift, phi) = gens.phi_project(&word)?;
    println!(
        "shift {shift}, projection {phi} = {}",
        phi.evaluate(&alphabet)
    );
    let k = spec.parse_element("8")?;
    for w in minimal_twords(&k, &alphabet, Window::new(-2, 4)?, 4)? {
        println!("minimal: {w}  (I_min {}, I_max {})", w.imin(), w.imax());
    }
    Ok(())
}
