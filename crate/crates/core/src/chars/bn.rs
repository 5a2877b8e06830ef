//! Hyperoctahedral and type D characters by the signed Murnaghan-Nakayama rule.

use std::collections::HashMap;

use crate::algebra::{Bipartition, Partition};
use crate::error::{Error, Result};

use super::sn::{remove_rim_hooks, SnCharacters};
pub use crate::weyl::d_class_sign;

/// Conjugacy class of `W(B_n)`: cycle lengths of positive and negative cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCycleType {
    pub pos: Partition,
    pub neg: Partition,
}

impl SignedCycleType {
    pub fn new(pos: Partition, neg: Partition) -> Self {
        SignedCycleType { pos, neg }
    }

    pub fn size(&self) -> usize {
        self.pos.size() + self.neg.size()
    }

    /// All classes of `W(B_n)`.
    pub fn all(n: usize) -> Vec<SignedCycleType> {
        Bipartition::all(n).into_iter().map(|b| SignedCycleType::new(b.left, b.right)).collect()
    }

    /// Number of elements: `2^n n! / prod (2k)^{a_k} a_k! (2k)^{b_k} b_k!`.
    pub fn class_size(&self) -> u64 {
        let n = self.size() as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        let mut z = 1u64;
        for part in [&self.pos, &self.neg] {
            let mut counts = std::collections::BTreeMap::new();
            for &p in part.parts() {
                *counts.entry(p as u64).or_insert(0u64) += 1;
            }
            for (p, m) in counts {
                z *= (2 * p).pow(m as u32) * fact(m);
            }
        }
        (fact(n) << n) / z
    }

    /// Lies in `W(D_n)`: an even number of negative cycles.
    pub fn in_d(&self) -> bool {
        self.neg.len().is_multiple_of(2)
    }

    /// Splits into two `W(D_n)` classes: no negative cycles and all cycles even.
    pub fn splits_in_d(&self) -> bool {
        self.neg.is_empty() && self.pos.parts().iter().all(|p| p % 2 == 0)
    }

    /// Standard representative as a signed permutation (1-based images).
    pub fn representative(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.size());
        let mut start = 0usize;
        for (part, negative) in [(&self.pos, false), (&self.neg, true)] {
            for &k in part.parts() {
                for j in 0..k {
                    let target = if j + 1 == k { start } else { start + j + 1 } as i64 + 1;
                    out.push(if negative && j + 1 == k { -target } else { target });
                }
                start += k;
            }
        }
        out
    }

    /// Characteristic polynomial coefficients on the reflection representation:
    /// product of `t^k - 1` over positive and `t^k + 1` over negative cycles.
    pub fn char_poly(&self) -> crate::algebra::Poly {
        use crate::algebra::Poly;
        let mut p = Poly::one();
        for (part, sign) in [(&self.pos, -1i64), (&self.neg, 1i64)] {
            for &k in part.parts() {
                let mut c = vec![0i64; k + 1];
                c[0] = sign;
                c[k] = 1;
                p = &p * &Poly::from_ints(&c);
            }
        }
        p
    }
}

/// Memoised evaluator for `W(B_n)` characters.
#[derive(Default)]
pub struct BnCharacters {
    memo: HashMap<(Partition, Partition, Vec<usize>, Vec<usize>), i64>,
    sn: SnCharacters,
}

impl BnCharacters {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi_{(l) x (r)}` at a signed cycle type.
    pub fn value(&mut self, bip: &Bipartition, class: &SignedCycleType) -> Result<i64> {
        if bip.size() != class.size() {
            return Err(Error::SizeMismatch(format!("{bip} vs class of size {}", class.size())));
        }
        Ok(self.eval(&bip.left, &bip.right, class.pos.parts(), class.neg.parts()))
    }

    fn eval(&mut self, l: &Partition, r: &Partition, pos: &[usize], neg: &[usize]) -> i64 {
        if pos.is_empty() && neg.is_empty() {
            return 1;
        }
        let key = (l.clone(), r.clone(), pos.to_vec(), neg.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        // strip the longest cycle
        let take_pos = match (pos.first(), neg.first()) {
            (Some(a), Some(b)) => a >= b,
            (Some(_), None) => true,
            _ => false,
        };
        let (k, eps, pos_rest, neg_rest) =
            if take_pos { (pos[0], 1, &pos[1..], neg) } else { (neg[0], -1, pos, &neg[1..]) };
        let mut total = 0;
        for (rest, leg) in remove_rim_hooks(l, k) {
            let v = self.eval(&rest, r, pos_rest, neg_rest);
            total += if leg % 2 == 0 { v } else { -v };
        }
        for (rest, leg) in remove_rim_hooks(r, k) {
            let v = eps * self.eval(l, &rest, pos_rest, neg_rest);
            total += if leg % 2 == 0 { v } else { -v };
        }
        self.memo.insert(key, total);
        total
    }

    /// Value of a `W(D_n)` irreducible character.
    ///
    /// `split` selects `I` (`Some(true)`) or `II` (`Some(false)`) for labels
    /// `(l) x (l)`; `class_sign` is `+1`/`-1` on split classes, ignored elsewhere.
    pub fn d_value(
        &mut self,
        bip: &Bipartition,
        split: Option<bool>,
        class: &SignedCycleType,
        class_sign: i64,
    ) -> Result<i64> {
        if !class.in_d() {
            return Err(Error::UnknownClass(format!("{class:?} is not in W(D_n)")));
        }
        let b = self.value(bip, class)?;
        match (bip.left == bip.right, split) {
            (false, None) => Ok(b),
            (true, Some(first)) => {
                let delta = if class.splits_in_d() {
                    let half: Vec<usize> = class.pos.parts().iter().map(|p| p / 2).collect();
                    let gamma = Partition::new(half);
                    let chi = self.sn.value(&bip.left, &gamma)?;
                    let v = chi << gamma.len();
                    let s = if first { 1 } else { -1 };
                    v * s * class_sign
                } else {
                    0
                };
                let twice = b + delta;
                if twice % 2 != 0 {
                    return Err(Error::TableComputation(format!("odd split value for {bip}")));
                }
                Ok(twice / 2)
            }
            _ => Err(Error::InvalidLabel(format!(
                "{bip}: split tag {}",
                if split.is_some() { "given for a non-split label" } else { "missing" }
            ))),
        }
    }
}

/// One-shot `W(B_n)` character value.
pub fn bn_character(bip: &Bipartition, class: &SignedCycleType) -> Result<i64> {
    BnCharacters::new().value(bip, class)
}

/// One-shot `W(D_n)` character value.
pub fn dn_character(bip: &Bipartition, split: Option<bool>, class: &SignedCycleType, class_sign: i64) -> Result<i64> {
    BnCharacters::new().d_value(bip, split, class, class_sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn bp(l: &[usize], r: &[usize]) -> Bipartition {
        Bipartition::new(p(l), p(r))
    }

    #[test]
    fn examples() {
        for c in SignedCycleType::all(3) {
            assert_eq!(bn_character(&bp(&[3], &[]), &c).unwrap(), 1);
        }
        // sign: -1 on the class of s_{e1} (one negative 1-cycle)
        let refl = SignedCycleType::new(p(&[1, 1]), p(&[1]));
        assert_eq!(bn_character(&bp(&[], &[1, 1, 1]), &refl).unwrap(), -1);
        let id2 = SignedCycleType::new(p(&[1, 1]), p(&[]));
        assert_eq!(bn_character(&bp(&[1], &[1]), &id2).unwrap(), 2);
    }

    #[test]
    fn orthogonality_and_dimensions() {
        for n in 1..=5 {
            let classes = SignedCycleType::all(n);
            let order = 2u64.pow(n as u32) * (1..=n as u64).product::<u64>();
            assert_eq!(classes.iter().map(|c| c.class_size()).sum::<u64>(), order);
            let mut bn = BnCharacters::new();
            let irreps = Bipartition::all(n);
            let id = SignedCycleType::new(p(&vec![1; n]), p(&[]));
            for a in &irreps {
                assert_eq!(num::BigInt::from(bn.value(a, &id).unwrap()), a.dimension());
                for b in &irreps {
                    let s: i64 = classes
                        .iter()
                        .map(|c| c.class_size() as i64 * bn.value(a, c).unwrap() * bn.value(b, c).unwrap())
                        .sum();
                    assert_eq!(s, if a == b { order as i64 } else { 0 }, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn wedge_powers_are_hooks() {
        // (n-l) x (1^l) has the character of the l-th exterior power of the reflection representation
        let n = 4;
        let mut bn = BnCharacters::new();
        for c in SignedCycleType::all(n) {
            let cp = c.char_poly();
            // det(1 + t w) = (-1)^n cp(-t) up to sign; coefficient of t^l
            let rev = cp.negate_variable();
            for l in 0..=n {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let coeff = rev.coeff(n - l) * crate::algebra::int(sign);
                let want = bn.value(&bp(&[n - l], &vec![1; l]), &c).unwrap();
                assert_eq!(coeff, crate::algebra::int(want), "{c:?} l={l}");
            }
        }
    }

    #[test]
    fn d_split_small() {
        // D_2: (1) x (1) splits into two linear characters
        let id = SignedCycleType::new(p(&[1, 1]), p(&[]));
        assert_eq!(dn_character(&bp(&[1], &[1]), Some(true), &id, 1).unwrap(), 1);
        assert_eq!(dn_character(&bp(&[1], &[1]), Some(false), &id, 1).unwrap(), 1);
        let id4 = SignedCycleType::new(p(&[1, 1, 1, 1]), p(&[]));
        assert_eq!(dn_character(&bp(&[2, 2], &[]), None, &id4, 1).unwrap(), 2);
        assert!(dn_character(&bp(&[1], &[1]), None, &id, 1).is_err());
    }
}
