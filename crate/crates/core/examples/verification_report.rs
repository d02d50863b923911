//! Runs every verification suite for one group and prints the report lines
//! the `parasym verify` command writes.
//!
//!     cargo run --release --example verification_report -- builtin:d4 3

use parasym::cli::{exit_code, parse_group_spec, run_suite, Suite};
use parasym::enumeration::DEFAULT_MAX_COSETS;

fn main() -> parasym::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "builtin:klein".into());
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let g = parse_group_spec(&spec)?;
    let mut all = Vec::new();
    for suite in Suite::ALL {
        let records = run_suite(suite, &spec, n, &g, DEFAULT_MAX_COSETS)?;
        for r in &records {
            println!("{r}");
        }
        all.extend(records);
    }
    println!("exit code would be {}", exit_code(&all));
    Ok(())
}
