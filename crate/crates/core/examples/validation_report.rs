//! The full self-consistency report used by `kgh validate`, run in-process,
//! then again with the energies deliberately perturbed.
//!
//! cargo run --release --example validation_report

use kgh::cli::{run_validation, ConfigFile, RunConfig};

fn main() {
    let file: ConfigFile = serde_json::from_str(
        r#"{"mass": 1, "alpha": 0.2, "q": 1, "v0": 0.05, "s0": 0.1, "l_max": 1, "n_max": 4}"#,
    )
    .unwrap();
    let cfg = RunConfig::from_file(file).unwrap();

    for shift in [0.0, 1e-6] {
        let report = run_validation(&cfg, shift).unwrap();
        println!("energy shift {shift:e}: overall {}", if report.overall { "PASS" } else { "FAIL" });
        for c in &report.checks {
            let m = c.measured.map_or("n/a".to_string(), |m| format!("{m:.2e}"));
            println!("  {:<5} {:<38} {m:>9} <= {:.0e}", if c.pass { "ok" } else { "FAIL" }, c.name, c.threshold);
        }
    }
}
