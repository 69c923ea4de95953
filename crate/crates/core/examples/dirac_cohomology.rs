//! Closed-form Dirac cohomology of Speh products, Speh modules and spherical
//! modules.
//!
//! `cargo run --example dirac_cohomology -- "a(3,1)*a(1,2)"`

use hecke_dirac::cohomology::{cohomology_json, dirac_cohomology_general, dirac_cohomology_speh, dirac_cohomology_spherical_derived, SpinChoice};
use hecke_dirac::partition::distinct_partitions;
use hecke_dirac::unitary::{SpehFactor, UnitaryModule};

fn main() -> hecke_dirac::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "a(3,1)*a(1,2)".into());
    let x: UnitaryModule = spec.parse()?;
    let r = dirac_cohomology_general(&x, SpinChoice::default_for(x.n()))?;
    println!("{}", cohomology_json(&x, &r));

    println!("\nSpeh modules with md ≤ 6:");
    for m in 1..=6 {
        for d in 1..=6 / m {
            let f = SpehFactor::new(m, d);
            let r = dirac_cohomology_speh(&f, SpinChoice::default_for(m * d))?;
            println!("  {:<8} {r}", f.to_string());
        }
    }
    println!("\nspherical modules for n = 6:");
    for l in distinct_partitions(6) {
        let r = dirac_cohomology_spherical_derived(&l, SpinChoice::Unique)?;
        println!("  {:<10} {r}", l.to_string());
    }
    Ok(())
}
