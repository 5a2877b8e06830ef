//! Classification of irreps affording one-W-type modules, for every type,
//! plus the irreps at a few named parameter points.

use cherednik::algebra::{int, ProjPoint, Surd};
use cherednik::chars::TableProvider;
use cherednik::onewtype::{classify, classify_at};
use cherednik::rootsys::CartanType;

fn main() -> cherednik::Result<()> {
    let provider = TableProvider::default();
    let mut types = vec![
        CartanType::A(5),
        CartanType::B(2),
        CartanType::B(6),
        CartanType::B(9),
        CartanType::D(4),
        CartanType::D(9),
    ];
    types.extend([CartanType::G2, CartanType::F4, CartanType::E6, CartanType::E7, CartanType::E8]);
    for ty in types {
        if !provider.available(ty) {
            println!("{ty}: no data file");
            continue;
        }
        print!("{}", classify(ty, &provider)?);
    }
    for p in [
        ProjPoint::ratio(int(1)),
        ProjPoint::ratio(int(-1)),
        ProjPoint::ClZero,
        ProjPoint::Ratio(Surd::imaginary_unit(1)),
    ] {
        let at: Vec<String> = classify_at(CartanType::F4, &provider, &p)?.iter().map(|l| l.to_string()).collect();
        println!("F4 at {p}: {}", at.join(", "));
    }
    Ok(())
}
