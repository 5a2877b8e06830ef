//! Character tables from each source: Murnaghan-Nakayama for B3, the
//! class-sum method for G2, and the bundled E7 file. Prints degrees, fake
//! degrees and the N-invariant of every irrep.

use cherednik::chars::{degrees, fake_degrees, n_invariant, TableProvider};
use cherednik::cli::render_table;
use cherednik::rootsys::CartanType;

fn main() -> cherednik::Result<()> {
    let provider = TableProvider::default();
    for ty in [CartanType::B(3), CartanType::G2, CartanType::E7] {
        if !provider.available(ty) {
            println!("{ty}: no data file");
            continue;
        }
        let t = provider.table(ty)?;
        t.validate()?;
        println!("{ty}: degrees {:?}", degrees(t.group()));
        if t.num_classes() <= 12 {
            print!("{}", render_table(&t));
        }
        let fd = fake_degrees(&t)?;
        for (i, f) in fd.iter().enumerate().take(12) {
            println!(
                "  {:<12} dim {:>4}  N = {:<14} fake degree {}",
                t.label(i).to_string(),
                t.irrep(i).dim(),
                n_invariant(&t, i).to_string(),
                f
            );
        }
        if fd.len() > 12 {
            println!("  ... {} irreps in all", fd.len());
        }
    }
    Ok(())
}
