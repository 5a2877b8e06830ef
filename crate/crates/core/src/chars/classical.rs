//! Combinatorial character tables of types A, B and D.

use crate::algebra::{Bipartition, Partition};
use crate::error::{Error, Result};
use crate::rootsys::CartanType;
use crate::weyl::{classical_class_name, d_class_sign, ClassInfo, WeylGroup};

use super::bn::{BnCharacters, SignedCycleType};
use super::sn::{sn_class_size, SnCharacters};
use super::table::{canonical_d, CharacterTable, Irrep, IrrepLabel};

/// One class of a classical table before ordering.
struct RawClass {
    sct: SignedCycleType,
    sign: i64,
    info: ClassInfo,
    order: usize,
}

fn lcm(a: usize, b: usize) -> usize {
    a / num::integer::gcd(a, b) * b
}

/// Order of an element with the given signed cycle type.
fn signed_order(sct: &SignedCycleType) -> usize {
    let mut o = 1;
    for &k in sct.pos.parts() {
        o = lcm(o, k);
    }
    for &k in sct.neg.parts() {
        o = lcm(o, 2 * k);
    }
    o
}

fn a_label(p: &Partition) -> String {
    let j: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    format!("[{}]", j.join(","))
}

fn raw_classes(g: &WeylGroup) -> Result<Vec<RawClass>> {
    let ty = g.cartan_type();
    let n = match ty {
        CartanType::A(r) => r + 1,
        CartanType::B(n) | CartanType::D(n) => n,
        _ => return Err(Error::UnsupportedType(format!("{ty} has no combinatorial table"))),
    };
    let mut out = Vec::new();
    let types: Vec<SignedCycleType> = match ty {
        CartanType::A(_) => {
            Partition::all(n).into_iter().map(|p| SignedCycleType::new(p, Partition::empty())).collect()
        }
        CartanType::B(_) => SignedCycleType::all(n),
        _ => SignedCycleType::all(n).into_iter().filter(|c| c.in_d()).collect(),
    };
    for sct in types {
        let rep = sct.representative();
        let split = matches!(ty, CartanType::D(_)) && sct.splits_in_d();
        let variants: Vec<(Vec<i64>, i64)> = if split {
            // conjugate by the sign change of the first coordinate
            let mut other: Vec<i64> = rep.clone();
            for v in other.iter_mut() {
                if v.unsigned_abs() == 1 {
                    *v = -*v;
                }
            }
            other[0] = -other[0];
            vec![(rep, 1), (other, -1)]
        } else {
            vec![(rep, 1)]
        };
        for (sp, sign) in variants {
            debug_assert!(!split || d_class_sign(&sp) == sign);
            let e = g.from_signed_perm(&sp).ok_or_else(|| Error::TableComputation(format!("no element for {sp:?}")))?;
            let base = match ty {
                CartanType::A(_) => a_label(&sct.pos),
                _ => classical_class_name(sct.pos.parts(), sct.neg.parts()),
            };
            let name = if split { format!("{base}{}", if sign == 1 { "+" } else { "-" }) } else { base };
            let size = match ty {
                CartanType::A(_) => sn_class_size(&sct.pos),
                _ if split => sct.class_size() / 2,
                _ => sct.class_size(),
            };
            out.push(RawClass {
                order: signed_order(&sct),
                sct: sct.clone(),
                sign,
                info: ClassInfo { name, size, word: g.word(&e) },
            });
        }
    }
    out.sort_by(|a, b| (a.order, a.info.size, &a.info.name).cmp(&(b.order, b.info.size, &b.info.name)));
    Ok(out)
}

/// Character table of `W(A_r)`, `W(B_n)` or `W(D_n)` from the Murnaghan-Nakayama rules.
pub fn classical_table(ty: CartanType) -> Result<CharacterTable> {
    let g = WeylGroup::of_type(ty)?;
    let classes = raw_classes(&g)?;
    let mut irreps = Vec::new();
    match ty {
        CartanType::A(r) => {
            let mut sn = SnCharacters::new();
            for lam in Partition::all(r + 1) {
                let values = classes.iter().map(|c| sn.value(&lam, &c.sct.pos)).collect::<Result<Vec<_>>>()?;
                irreps.push(Irrep::new(IrrepLabel::Partition(lam), values));
            }
        }
        CartanType::B(n) => {
            let mut bn = BnCharacters::new();
            for bip in Bipartition::all(n) {
                let values = classes.iter().map(|c| bn.value(&bip, &c.sct)).collect::<Result<Vec<_>>>()?;
                irreps.push(Irrep::new(IrrepLabel::Bipartition(bip), values));
            }
        }
        CartanType::D(n) => {
            let mut bn = BnCharacters::new();
            for bip in Bipartition::all(n) {
                if bip.left == bip.right {
                    for first in [true, false] {
                        let values = classes
                            .iter()
                            .map(|c| bn.d_value(&bip, Some(first), &c.sct, c.sign))
                            .collect::<Result<Vec<_>>>()?;
                        irreps.push(Irrep::new(IrrepLabel::Split(bip.left.clone(), first), values));
                    }
                } else if canonical_d(&bip) == bip {
                    let values =
                        classes.iter().map(|c| bn.d_value(&bip, None, &c.sct, c.sign)).collect::<Result<Vec<_>>>()?;
                    irreps.push(Irrep::new(IrrepLabel::Bipartition(bip), values));
                }
            }
        }
        _ => unreachable!("checked in raw_classes"),
    }
    CharacterTable::new(g, classes.into_iter().map(|c| c.info).collect(), irreps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables_validate() {
        for ty in [
            CartanType::A(1),
            CartanType::A(4),
            CartanType::B(2),
            CartanType::B(4),
            CartanType::D(2),
            CartanType::D(4),
            CartanType::D(5),
            CartanType::D(6),
        ] {
            let t = classical_table(ty).unwrap();
            t.validate().unwrap_or_else(|e| panic!("{ty}: {e}"));
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(classical_table(CartanType::B(2)).unwrap().num_classes(), 5);
        assert_eq!(classical_table(CartanType::D(4)).unwrap().num_classes(), 13);
        assert_eq!(classical_table(CartanType::A(5)).unwrap().num_classes(), 11);
    }

    #[test]
    fn locator_matches_words() {
        let t = classical_table(CartanType::D(4)).unwrap();
        for (c, info) in t.classes().iter().enumerate() {
            let e = t.group().from_word(&info.word).unwrap();
            assert_eq!(t.class_of(&e).unwrap(), c);
        }
    }
}
