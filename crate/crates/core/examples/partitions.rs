//! Partitions of n, hooks, dominance and the allowed central characters.
//!
//! `cargo run --example partitions -- 6`

use hecke_dirac::cohomology::allowed_central_characters;
use hecke_dirac::partition::{
    casimir_scalar, distinct_partitions, dominance_leq, enumerate_partitions, hook_partition, transpose,
};

fn main() -> hecke_dirac::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    println!("partitions of {n} (dim σ_λ, transpose, hook):");
    for p in enumerate_partitions(n) {
        println!("  {:<16} dim {:<5} transpose {:<16} hook {}", p.to_string(), p.dimension(), transpose(&p).to_string(), hook_partition(&p));
    }
    println!("\nstrict partitions and their central characters:");
    for (l, chi) in distinct_partitions(n).iter().zip(allowed_central_characters(n)) {
        println!("  {:<12} χ = {chi}  ⟨χ,χ⟩ = {}", l.to_string(), casimir_scalar(l));
    }
    let ps = enumerate_partitions(n);
    let comparable = ps
        .iter()
        .flat_map(|a| ps.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a != b && dominance_leq(a, b).unwrap_or(false))
        .count();
    println!("\n{comparable} strictly comparable pairs under dominance");
    Ok(())
}
