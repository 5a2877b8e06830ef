//! Decomposes sigma (x) wedge(h) and each exterior power for a few irreps,
//! with the dimension identity.

use cherednik::chars::{decompose_with_wedge, tensor_decompose, wedge_class_function, TableProvider};
use cherednik::rootsys::CartanType;

fn main() -> cherednik::Result<()> {
    let provider = TableProvider::default();
    for (ty, rep) in
        [(CartanType::G2, "φ{2,2}"), (CartanType::F4, "4_1"), (CartanType::E6, "10_s"), (CartanType::B(3), "(2,1)x(0)")]
    {
        let t = provider.table(ty)?;
        let i = t.find(rep)?;
        let d = decompose_with_wedge(&t, i)?;
        let terms: Vec<String> = d
            .iter()
            .map(|&(j, m)| if m == 1 { t.label(j).to_string() } else { format!("{m}*{}", t.label(j)) })
            .collect();
        let total: i64 = d.iter().map(|&(j, m)| m as i64 * t.irrep(j).dim()).sum();
        println!("{ty}: {rep} (x) wedge(h) = {}", terms.join(" + "));
        println!("  {total} = {} * 2^{}", t.irrep(i).dim(), t.group().rank());
        for l in 0..=t.group().rank() {
            let w = tensor_decompose(&t, &wedge_class_function(&t, l)?)?;
            let names: Vec<String> = w.iter().map(|&(j, _)| t.label(j).to_string()).collect();
            print!("{}wedge^{l} = {}", if l == 0 { "  " } else { ", " }, names.join("+"));
        }
        println!();
    }
    Ok(())
}
