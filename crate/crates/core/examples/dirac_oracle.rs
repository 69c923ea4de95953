//! Builds the explicit matrices for one module, checks the D² identity and
//! computes ker D with its pairings against σ_μ ⊗ S.
//!
//! `cargo run --release --example dirac_oracle -- "a(2,1)*a(1,1)" +`

use hecke_dirac::cohomology::{dirac_cohomology_general, SpinChoice};
use hecke_dirac::oracle::dirac::{dirac_operator, sign_commutation_with, verify_d_squared_with};
use hecke_dirac::oracle::kernel::{kernel_structure_with, predicted_pairings};
use hecke_dirac::oracle::{build_gamma, module_matrices};
use hecke_dirac::unitary::UnitaryModule;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let x: UnitaryModule = args.next().unwrap_or_else(|| "a(2,1)*a(1,1)".into()).parse()?;
    let spin = SpinChoice::resolve(x.n(), args.next().map(|s| s.parse()).transpose()?);
    let m = module_matrices(&x)?;
    let s = build_gamma(x.n(), spin);
    println!("{x}: dim X = {}, dim S = {}, central character {}", m.dim(), s.dim(), m.central_character());
    let d = dirac_operator(&m, &s);
    println!("D has {} nonzero entries", d.nnz());
    verify_d_squared_with(&m, &s, &d)?;
    println!("D² = -⟨ν,ν⟩ + ¼Ω exactly");
    sign_commutation_with(&m, &s, &d)?;
    println!("D anticommutes with every simple lift");
    let k = kernel_structure_with(&m, &s, &d)?;
    let h = dirac_cohomology_general(&x, spin)?;
    println!("dim ker D = {} (predicted {})", k.dim, h.total_dimension());
    let predicted = predicted_pairings(x.n(), &h.decomposition)?;
    for (mu, v) in &k.pairings {
        println!("  ⟨ker D, σ_{mu} ⊗ S⟩ = {v} (predicted {})", predicted[mu]);
    }
    Ok(())
}
