//! Symmetric group characters by the Murnaghan-Nakayama rule.

use std::collections::HashMap;

use crate::algebra::Partition;
use crate::error::{Error, Result};

/// Beta-set of a partition with `len` entries (`len >= parts`).
pub(crate) fn beta_set(lam: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| lam.part(i) + len - 1 - i).collect()
}

pub(crate) fn from_beta(beta: &[usize]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len();
    Partition::new((0..len).map(|i| b[i] - (len - 1 - i)).collect())
}

/// All ways of removing a rim hook of length `k`: `(remaining partition, leg length)`.
pub fn remove_rim_hooks(lam: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let len = lam.len();
    let beta = beta_set(lam, len);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let leg = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut nb = beta.clone();
        nb[i] = b - k;
        out.push((from_beta(&nb), leg));
    }
    out
}

/// Memoised Murnaghan-Nakayama evaluator.
#[derive(Default)]
pub struct SnCharacters {
    memo: HashMap<(Partition, Vec<usize>), i64>,
}

impl SnCharacters {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi_lambda` at the class of cycle type `mu`.
    pub fn value(&mut self, lam: &Partition, mu: &Partition) -> Result<i64> {
        if lam.size() != mu.size() {
            return Err(Error::SizeMismatch(format!("{lam} vs class {mu}")));
        }
        Ok(self.eval(lam, mu.parts()))
    }

    fn eval(&mut self, lam: &Partition, cycles: &[usize]) -> i64 {
        if cycles.is_empty() {
            return 1;
        }
        let key = (lam.clone(), cycles.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let k = cycles[0];
        let mut total = 0;
        for (rest, leg) in remove_rim_hooks(lam, k) {
            let v = self.eval(&rest, &cycles[1..]);
            total += if leg % 2 == 0 { v } else { -v };
        }
        self.memo.insert(key, total);
        total
    }
}

/// `chi_lambda(mu)` without memoisation across calls.
pub fn sn_character(lam: &Partition, mu: &Partition) -> Result<i64> {
    SnCharacters::new().value(lam, mu)
}

/// Size of the class of cycle type `mu` in `S_n`: `n! / z_mu`.
pub fn sn_class_size(mu: &Partition) -> u64 {
    let n = mu.size() as u64;
    let fact = |k: u64| (1..=k).product::<u64>();
    let mut z = 1u64;
    let mut counts = std::collections::BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p as u64).or_insert(0u64) += 1;
    }
    for (p, m) in counts {
        z *= p.pow(m as u32) * fact(m);
    }
    fact(n) / z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn examples() {
        for mu in Partition::all(5) {
            assert_eq!(sn_character(&p(&[5]), &mu).unwrap(), 1);
            let sign = if (5 - mu.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sn_character(&p(&[1, 1, 1, 1, 1]), &mu).unwrap(), sign);
        }
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert!(sn_character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn dimensions_and_orthogonality() {
        for n in 1..=7 {
            let parts = Partition::all(n);
            let mut mn = SnCharacters::new();
            let id = p(&vec![1; n]);
            let order: u64 = (1..=n as u64).product();
            for lam in &parts {
                assert_eq!(num::BigInt::from(mn.value(lam, &id).unwrap()), lam.dimension());
                for nu in &parts {
                    let s: i64 = parts
                        .iter()
                        .map(|mu| sn_class_size(mu) as i64 * mn.value(lam, mu).unwrap() * mn.value(nu, mu).unwrap())
                        .sum();
                    assert_eq!(s, if lam == nu { order as i64 } else { 0 });
                }
            }
        }
    }
}
