//! Squared commutators grouped by conjugacy class, and the resulting
//! classification, for every exceptional type.

use cherednik::chars::TableProvider;
use cherednik::onewtype::{classify_table, square_and_group, test_commutators};
use cherednik::rootsys::CartanType;

fn main() -> cherednik::Result<()> {
    let provider = TableProvider::default();
    for ty in [CartanType::G2, CartanType::F4, CartanType::E6, CartanType::E7, CartanType::E8] {
        if !provider.available(ty) {
            println!("{ty}: table unavailable");
            continue;
        }
        let table = provider.table(ty)?;
        let cs = test_commutators(table.group().root_system());
        for (i, c) in cs.iter().enumerate() {
            let gs = square_and_group(&table, c)?;
            println!("{ty} [y,x{}]: {} terms; square = {}", i + 1, c.len(), gs);
        }
        print!("{}", classify_table(&table)?);
    }
    Ok(())
}
