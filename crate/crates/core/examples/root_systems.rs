//! Root data, rank-2 pair labels and the reduction hypotheses for every
//! irreducible type up to rank 8.

use std::collections::BTreeMap;

use cherednik::algebra::format_rat;
use cherednik::rootsys::{CartanType, RootSystem};
use cherednik::weyl::WeylGroup;

fn main() -> cherednik::Result<()> {
    let types = [
        CartanType::A(3),
        CartanType::B(4),
        CartanType::D(5),
        CartanType::G2,
        CartanType::F4,
        CartanType::E6,
        CartanType::E7,
        CartanType::E8,
    ];
    for ty in types {
        let rs = RootSystem::new(ty)?;
        let mut pairs: BTreeMap<String, usize> = BTreeMap::new();
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if let Ok(l) = rs.rank2_label(a, b) {
                    *pairs.entry(l.to_string()).or_default() += 1;
                }
            }
        }
        let g = WeylGroup::of_type(ty)?;
        let tv = rs.test_vectors();
        let y: Vec<String> = tv.y.iter().map(format_rat).collect();
        println!("{ty}: |W| = {}, {} positive roots, y = ({})", g.order(), rs.num_positive(), y.join(","));
        println!("  ordered pairs by rank-2 type: {pairs:?}");
        println!("  reduction: {}", g.reduction_hypotheses(&tv));
    }
    Ok(())
}
