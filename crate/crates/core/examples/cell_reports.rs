//! Bounds on the cuspidal Calogero-Moser cell at equal parameters, compared
//! with Lusztig's cuspidal family, for every type that has one.

use cherednik::algebra::{int, ProjPoint};
use cherednik::cells::cm_cell_report;
use cherednik::chars::TableProvider;
use cherednik::rootsys::CartanType;

fn main() -> cherednik::Result<()> {
    let provider = TableProvider::default();
    let equal = ProjPoint::ratio(int(1));
    let types = [
        CartanType::B(2),
        CartanType::B(6),
        CartanType::D(4),
        CartanType::D(9),
        CartanType::G2,
        CartanType::F4,
        CartanType::E6,
        CartanType::E7,
        CartanType::E8,
    ];
    for ty in types {
        if !provider.available(ty) {
            println!("{ty}: table unavailable, skipped");
            continue;
        }
        print!("{}", cm_cell_report(ty, &provider, &equal)?);
    }
    Ok(())
}
