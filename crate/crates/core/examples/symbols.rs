//! Littlewood-Richardson decompositions, Lusztig symbols and the cuspidal
//! families of types B and D.

use cherednik::algebra::Partition;
use cherednik::cells::{bn_symbol, cuspidal_d, cuspidal_family, dn_symbol, is_cuspidal_symbol, rectangle_constituents};
use cherednik::chars::IrrepLabel;
use cherednik::rootsys::CartanType;

fn main() -> cherednik::Result<()> {
    for (rows, cols) in [(1, 1), (2, 2), (3, 3)] {
        let lam = Partition::rectangle(rows, cols);
        let terms: Vec<String> = rectangle_constituents(&lam)?.iter().map(|(b, m)| format!("{m}*{b}")).collect();
        println!("{lam}x(0) (x) wedge(h) = {}", terms.join(" + "));
    }
    for ty in [CartanType::B(2), CartanType::B(6), CartanType::D(4), CartanType::D(9), CartanType::B(5)] {
        let Some(fam) = cuspidal_family(ty)? else {
            println!("{ty}: no cuspidal family");
            continue;
        };
        let d = cuspidal_d(ty).unwrap_or(0);
        println!("{ty}: {} members, special {}", fam.members.len(), fam.special);
        for m in &fam.members {
            if let IrrepLabel::Bipartition(b) = m {
                let s = if matches!(ty, CartanType::B(_)) { bn_symbol(b, d)? } else { dn_symbol(b, d)? };
                println!("  {:<24} {s}  cuspidal: {}", m.to_string(), is_cuspidal_symbol(&s));
            } else {
                println!("  {m}");
            }
        }
    }
    Ok(())
}
