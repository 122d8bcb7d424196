//! Run the verification battery on a custom grid from library code.
//!
//! The same sweeps back the `rskq verify` subcommand and the acceptance
//! test suite; here they run on a small window so the example finishes in
//! well under a second.
//!
//! ```bash
//! cargo run --release -p rskq --example grid_verification
//! ```

use rskq::verify::{run_all, GridSpec};

fn main() {
    let spec = GridSpec {
        lo: 0,
        hi: 2,
        max_distinct: 3,
        max_mult: 2,
    };
    println!(
        "grid: window {}..{}, up to {} distinct segments, multiplicity <= {}\n",
        spec.lo, spec.hi, spec.max_distinct, spec.max_mult
    );
    let reports = run_all(spec, 5);
    for report in &reports {
        println!("{}", report.line());
    }
    assert!(reports.iter().all(|r| r.passed()));
}
