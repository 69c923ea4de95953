//! Parsing module specifications, central characters, unitarity checks and
//! W-restrictions.
//!
//! `cargo run --example unitary_dual -- "a(2,1)*cs(a(1,1),1/4)"`

use hecke_dirac::unitary::{central_character, concatenated_hooks, enumerate_speh_modules, restriction_to_w, validate_unitary, UnitaryModule};

fn main() -> hecke_dirac::Result<()> {
    let specs: Vec<String> = std::env::args().skip(1).collect();
    let specs = if specs.is_empty() { vec!["a(2,2)".into(), "a(2,1)*cs(a(1,1),1/4)".into(), "cs(a(1,1),3/4)".into()] } else { specs };
    for spec in specs {
        let x: UnitaryModule = match spec.parse() {
            Ok(x) => x,
            Err(e) => {
                println!("{spec}: {e}");
                continue;
            }
        };
        println!("{x}: n = {}, central character {}", x.n(), central_character(&x));
        println!("  unitarity: {}", validate_unitary(&x));
        if let Ok(r) = restriction_to_w(&x) {
            let parts: Vec<String> = r.iter().map(|(p, m)| format!("{m}·{p}")).collect();
            println!("  restriction to S_n: {}", parts.join(" + "));
        }
    }
    println!("\nSpeh products of size 4 and their hook strings:");
    for x in enumerate_speh_modules(4) {
        match concatenated_hooks(&x) {
            Some(l) => println!("  {:<28} distinct, sorts to {l}", x.to_string()),
            None => println!("  {:<28} repeated entries", x.to_string()),
        }
    }
    Ok(())
}
