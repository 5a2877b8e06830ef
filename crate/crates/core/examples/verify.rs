//! Runs every reproduction check and prints one line per check, then a
//! per-criterion summary. Pass a group name or criterion number to restrict.

use cherednik::chars::TableProvider;
use cherednik::verify::{verify_all, GROUPS};

fn main() -> cherednik::Result<()> {
    let only = std::env::args().nth(1);
    let report = verify_all(&TableProvider::default(), only.as_deref())?;
    print!("{report}");
    for &(name, n, what) in GROUPS {
        if let Some(s) = report.criterion_status(n) {
            println!("criterion {n:>2} {name:<18} {s}  {what}");
        }
    }
    Ok(())
}
