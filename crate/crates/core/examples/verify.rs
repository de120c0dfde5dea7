//! Runs every suite on the standard battery and prints the report.
//!
//! Pass `--json` for the machine-readable form.

use ultraorder::harness::{run_suite, RunConfig};

fn main() -> ultraorder::Result<()> {
    let json = std::env::args().any(|a| a == "--json");
    let config = RunConfig {
        record_timing: true,
        ..RunConfig::default()
    };
    let report = run_suite(&config)?;
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
    Ok(())
}
