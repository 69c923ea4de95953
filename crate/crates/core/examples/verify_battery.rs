//! Runs the oracle battery and prints one JSON line per task.
//!
//! `cargo run --release --example verify_battery -- 4`

use hecke_dirac::oracle::battery::{run_battery, BatteryOptions};

fn main() -> hecke_dirac::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let records = run_battery(&BatteryOptions { max_n, ..Default::default() })?;
    for r in &records {
        println!("{}", serde_json::to_string(r).expect("serializable"));
    }
    let failed = records.iter().filter(|r| !r.passed()).count();
    eprintln!("{} tasks, {failed} failed", records.len());
    if failed > 0 {
        std::process::exit(2);
    }
    Ok(())
}
