//! Kostka–Foulkes polynomials by charge, and the integer matrix g = K(-1)^{-1}.
//!
//! `cargo run --example kostka_foulkes -- 4`

use hecke_dirac::partition::enumerate_partitions;
use hecke_dirac::symfunc::{g_matrix, kostka_foulkes};

fn main() -> hecke_dirac::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let ps = enumerate_partitions(n);
    for l in &ps {
        for m in &ps {
            let k = kostka_foulkes(l, m)?;
            if !k.is_zero() {
                println!("K_{{{l},{m}}}(t) = {k}");
            }
        }
    }
    println!("\ng = K(-1)^(-1):");
    print!("{}", g_matrix(n)?.to_tsv());
    Ok(())
}
