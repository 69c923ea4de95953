//! Genuine irreducible types of the pin cover of S_n, and σ_μ ⊗ S.
//!
//! `cargo run --example spin_types -- 5`

use hecke_dirac::partition::enumerate_partitions;
use hecke_dirac::spin::{classify_spin_types, spin_module_restriction, tensor_with_spin};

fn main() -> hecke_dirac::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let types = classify_spin_types(n);
    let total: u64 = types.iter().map(|t| t.dimension().pow(2)).sum();
    for t in &types {
        println!("{:<12} dim {}", t.to_string(), t.dimension());
    }
    println!("Σ dim² = {total}");
    println!("S restricts to {}", spin_module_restriction(n)?);
    for mu in enumerate_partitions(n) {
        println!("σ_{mu} ⊗ S = {}", tensor_with_spin(&mu)?);
    }
    Ok(())
}
