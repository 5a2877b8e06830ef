//! Names of irreducible characters of exceptional Weyl groups.
//!
//! Every irrep gets a name `φ{d,b}` from its degree `d` and `b`-invariant.
//! Pairs sharing `(d, b)` are primed: in `G2` and `F4` the member with the
//! larger value on the long reflections gets `''` (ties: the second exterior
//! power of the reflection representation gets `''`); in simply-laced types
//! the member with the larger value at the first class where they differ
//! gets `''`. `F4` uses Kondo's names and `E6`, `E7`, `E8` use Frame's names
//! where they are determined by degree, `b` and the sign twist; the `φ`
//! names remain as aliases.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootsys::CartanType;

use super::invariants::{b_invariants, wedge_class_function};
use super::table::{CharacterTable, ClassFunction, Irrep, IrrepLabel};

const F4_KONDO: &[(&str, &str)] = &[
    ("φ{1,0}", "1_1"),
    ("φ{1,12}''", "1_2"),
    ("φ{1,12}'", "1_3"),
    ("φ{1,24}", "1_4"),
    ("φ{2,4}''", "2_1"),
    ("φ{2,16}'", "2_2"),
    ("φ{2,4}'", "2_3"),
    ("φ{2,16}''", "2_4"),
    ("φ{4,8}", "4_1"),
    ("φ{4,1}", "4_2"),
    ("φ{4,7}''", "4_3"),
    ("φ{4,7}'", "4_4"),
    ("φ{4,13}", "4_5"),
    ("φ{6,6}'", "6_1"),
    ("φ{6,6}''", "6_2"),
    ("φ{8,3}''", "8_1"),
    ("φ{8,9}'", "8_2"),
    ("φ{8,3}'", "8_3"),
    ("φ{8,9}''", "8_4"),
    ("φ{9,2}", "9_1"),
    ("φ{9,6}''", "9_2"),
    ("φ{9,6}'", "9_3"),
    ("φ{9,10}", "9_4"),
    ("φ{12,4}", "12_1"),
    ("φ{16,5}", "16_1"),
];

const E6_FRAME: &[(&str, &str)] = &[
    ("φ{1,0}", "1_p"),
    ("φ{1,36}", "1_p'"),
    ("φ{6,1}", "6_p"),
    ("φ{6,25}", "6_p'"),
    ("φ{10,9}", "10_s"),
    ("φ{15,4}", "15_q"),
    ("φ{15,16}", "15_q'"),
    ("φ{15,5}", "15_p"),
    ("φ{15,17}", "15_p'"),
    ("φ{20,2}", "20_p"),
    ("φ{20,20}", "20_p'"),
    ("φ{20,10}", "20_s"),
    ("φ{24,6}", "24_p"),
    ("φ{24,12}", "24_p'"),
    ("φ{30,3}", "30_p"),
    ("φ{30,15}", "30_p'"),
    ("φ{60,5}", "60_p"),
    ("φ{60,11}", "60_p'"),
    ("φ{60,8}", "60_s"),
    ("φ{64,4}", "64_p"),
    ("φ{64,13}", "64_p'"),
    ("φ{80,7}", "80_s"),
    ("φ{81,6}", "81_p"),
    ("φ{81,10}", "81_p'"),
    ("φ{90,8}", "90_s"),
];

fn is_provisional(s: &str) -> bool {
    s.strip_prefix('X').is_some_and(|r| !r.is_empty() && r.chars().all(|c| c.is_ascii_digit()))
}

/// `φ{d,b}` names with primes on pairs, in table order.
pub fn phi_names(table: &CharacterTable, b: &[usize]) -> Result<Vec<String>> {
    let mut groups: BTreeMap<(i64, usize), Vec<usize>> = BTreeMap::new();
    for (i, ir) in table.irreps().iter().enumerate() {
        groups.entry((ir.dim(), b[i])).or_default().push(i);
    }
    let mut names = vec![String::new(); table.irreps().len()];
    let wedge2 = if table.group().rank() >= 2 { Some(wedge_class_function(table, 2)?) } else { None };
    for ((d, bb), members) in groups {
        let base = format!("φ{{{d},{bb}}}");
        match members.as_slice() {
            [i] => names[*i] = base,
            [i, j] => {
                let double = double_primed(table, *i, *j, wedge2.as_ref())?;
                let single = if double == *i { *j } else { *i };
                names[double] = format!("{base}''");
                names[single] = format!("{base}'");
            }
            _ => {
                return Err(Error::TableComputation(format!("{} irreps share degree {d} and b = {bb}", members.len())))
            }
        }
    }
    Ok(names)
}

/// Member of a `(d, b)` pair that receives `''`.
fn double_primed(table: &CharacterTable, i: usize, j: usize, wedge2: Option<&ClassFunction>) -> Result<usize> {
    let (vi, vj) = (&table.irrep(i).values, &table.irrep(j).values);
    if !table.cartan_type().is_simply_laced() {
        let a1 = table.class_index("A1").ok_or_else(|| Error::MissingData("class A1".into()))?;
        if vi[a1] != vj[a1] {
            return Ok(if vi[a1] > vj[a1] { i } else { j });
        }
        if let Some(w) = wedge2 {
            let is_w = |v: &[i64]| w.values.iter().zip(v).all(|(x, &y)| x == &crate::algebra::int(y));
            if is_w(vi) {
                return Ok(i);
            }
            if is_w(vj) {
                return Ok(j);
            }
        }
        return Err(Error::TableComputation(format!("cannot order the pair {} / {}", table.label(i), table.label(j))));
    }
    let c = (0..vi.len()).find(|&c| vi[c] != vj[c]).expect("distinct irreducible characters");
    Ok(if vi[c] > vj[c] { i } else { j })
}

/// Frame-style names `d_<letter>` with a prime, where unambiguous.
fn frame_names(table: &CharacterTable, b: &[usize], phi: &[String]) -> Vec<String> {
    let n = table.irreps().len();
    let twist: Vec<usize> = (0..n).map(|i| table.sgn_twist(i)).collect();
    let mut names = phi.to_vec();
    match table.cartan_type() {
        CartanType::E7 => {
            // one sign pair per degree: the odd-b member is primed
            let mut by_dim: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
            for (i, ir) in table.irreps().iter().enumerate() {
                by_dim.entry(ir.dim()).or_default().push(i);
            }
            for (d, members) in by_dim {
                if let [i, j] = members.as_slice() {
                    if twist[*i] == *j && b[*i] % 2 != b[*j] % 2 {
                        let (even, odd) = if b[*i].is_multiple_of(2) { (*i, *j) } else { (*j, *i) };
                        names[even] = format!("{d}_a");
                        names[odd] = format!("{d}_a'");
                    }
                }
            }
        }
        CartanType::E8 => {
            // self-dual: y (b even) or w (b odd); pairs: x (b even) or z (b odd),
            // primed on the member with larger b
            let mut proposals: BTreeMap<String, Vec<(usize, String)>> = BTreeMap::new();
            for i in 0..n {
                let d = table.irrep(i).dim();
                let j = twist[i];
                if j == i {
                    let l = if b[i].is_multiple_of(2) { "y" } else { "w" };
                    let base = format!("{d}_{l}");
                    proposals.entry(base.clone()).or_default().push((i, base));
                } else {
                    let low = if b[i] <= b[j] { i } else { j };
                    let l = if b[low].is_multiple_of(2) { "x" } else { "z" };
                    let base = format!("{d}_{l}");
                    let name = if i == low { base.clone() } else { format!("{base}'") };
                    proposals.entry(base).or_default().push((i, name));
                }
            }
            for (_, members) in proposals {
                let pair_ok = members.len() == 2 && members[0].1 != members[1].1;
                if members.len() == 1 || pair_ok {
                    for (i, name) in members {
                        names[i] = name;
                    }
                }
            }
        }
        _ => {}
    }
    names
}

/// Assigns primary names and `φ` aliases to an exceptional table.
///
/// Provisional labels `X<k>` are replaced; any other existing primary label
/// is kept and only aliases are added.
pub fn assign_labels(table: &mut CharacterTable) -> Result<()> {
    let ty = table.cartan_type();
    if !ty.is_exceptional() {
        return Ok(());
    }
    let b = b_invariants(table)?;
    let phi = phi_names(table, &b)?;
    let lookup = |map: &[(&str, &str)], s: &str| {
        map.iter()
            .find(|(p, _)| *p == s)
            .map(|(_, k)| k.to_string())
            .ok_or_else(|| Error::TableComputation(format!("{s} has no {ty} name")))
    };
    let primary: Vec<String> = match ty {
        CartanType::G2 => phi.clone(),
        CartanType::F4 => phi.iter().map(|s| lookup(F4_KONDO, s)).collect::<Result<_>>()?,
        CartanType::E6 => phi.iter().map(|s| lookup(E6_FRAME, s)).collect::<Result<_>>()?,
        _ => frame_names(table, &b, &phi),
    };
    let irreps: Vec<Irrep> = table
        .irreps()
        .iter()
        .enumerate()
        .map(|(i, ir)| {
            let current = ir.label.to_string();
            let label = if is_provisional(&current) { IrrepLabel::Named(primary[i].clone()) } else { ir.label.clone() };
            let mut aliases = Vec::new();
            for a in [&primary[i], &phi[i]] {
                if *a != label.to_string() && !aliases.contains(a) {
                    aliases.push(a.clone());
                }
            }
            Irrep { label, aliases, values: ir.values.clone() }
        })
        .collect();
    table.set_irreps(irreps);
    Ok(())
}

/// Orders irreps by degree, `b`-invariant and label.
pub fn sort_irreps(table: &mut CharacterTable) -> Result<()> {
    let b = b_invariants(table)?;
    let mut order: Vec<usize> = (0..table.irreps().len()).collect();
    order.sort_by_key(|&i| (table.irrep(i).dim(), b[i], table.label(i).to_string()));
    let irreps = order.into_iter().map(|i| table.irrep(i).clone()).collect();
    table.set_irreps(irreps);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::compute_table;
    use crate::weyl::{WeylGroup, DEFAULT_ENUMERATION_CAP};

    fn named(ty: CartanType) -> CharacterTable {
        let mut t = compute_table(&WeylGroup::of_type(ty).unwrap(), DEFAULT_ENUMERATION_CAP).unwrap();
        assign_labels(&mut t).unwrap();
        t
    }

    #[test]
    fn g2_names() {
        let t = named(CartanType::G2);
        for s in ["φ{1,0}", "φ{1,6}", "φ{1,3}'", "φ{1,3}''", "φ{2,1}", "φ{2,2}"] {
            t.find(s).unwrap();
        }
        let a1 = t.class_index("A1").unwrap();
        assert_eq!(t.irrep(t.find("phi1,3''").unwrap()).values[a1], 1);
    }

    #[test]
    fn f4_names_and_aliases() {
        let t = named(CartanType::F4);
        assert_eq!(t.find("4_2").unwrap(), t.find("φ{4,1}").unwrap());
        assert_eq!(t.irrep(t.find("16_1").unwrap()).dim(), 16);
        // the second exterior power is 6_2
        let w2 = wedge_class_function(&t, 2).unwrap();
        let d = crate::chars::tensor_decompose(&t, &w2).unwrap();
        assert_eq!(d, vec![(t.find("6_2").unwrap(), 1)]);
    }
}
