//! Integer partitions and bipartitions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition::new(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (zero beyond the length).
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        Partition { parts: (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect() }
    }

    /// `(rows, cols)` when the diagram is a nonempty rectangle.
    pub fn is_rectangle(&self) -> Option<(usize, usize)> {
        let first = *self.parts.first()?;
        self.parts.iter().all(|&p| p == first).then_some((self.parts.len(), first))
    }

    /// Diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().enumerate().all(|(i, &p)| p <= self.parts[i])
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Complement of `self` in the `rows x cols` rectangle, rotated by 180 degrees.
    pub fn rect_complement(&self, rows: usize, cols: usize) -> Result<Partition> {
        if !self.fits_in(rows, cols) {
            return Err(Error::NotInRectangle { mu: self.to_string(), rows, cols });
        }
        Ok(Partition::new((0..rows).rev().map(|i| cols - self.part(i)).collect()))
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn dimension(&self) -> num::BigInt {
        let n = self.size();
        let mut num = num::BigInt::from(1);
        for k in 2..=n {
            num *= k;
        }
        let t = self.transpose();
        let mut den = num::BigInt::from(1);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                den *= (p - j - 1) + (t.part(j) - i - 1) + 1;
            }
        }
        num / den
    }

    /// Contents `col - row` in reading order (row by row).
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                out.push(j as i64 - i as i64);
            }
        }
        out
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions whose diagram lies inside `self`.
    pub fn subdiagrams(&self) -> Vec<Partition> {
        fn rec(outer: &Partition, i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()));
                return;
            }
            for p in (0..=max.min(outer.parts[i])).rev() {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 0, self.part(0), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1)`, `3,1`, `31` (single digits), `(0)` and `()`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        let bad = || Error::InvalidLabel(s.to_string());
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = if inner.contains(',') || inner.contains(' ') {
            inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            inner.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad());
        }
        Ok(Partition::new(parts))
    }
}

/// Ordered pair of partitions `(left) x (right)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub left: Partition,
    pub right: Partition,
}

impl Bipartition {
    pub fn new(left: Partition, right: Partition) -> Self {
        Bipartition { left, right }
    }

    pub fn size(&self) -> usize {
        self.left.size() + self.right.size()
    }

    /// `(l) x (r)` tensored with the sign character: `(r^t) x (l^t)`.
    pub fn sgn_twist(&self) -> Bipartition {
        Bipartition::new(self.right.transpose(), self.left.transpose())
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition::new(self.right.clone(), self.left.clone())
    }

    /// All bipartitions of `n`, ordered by the size of the left part descending.
    pub fn all(n: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            for l in Partition::all(k) {
                for r in Partition::all(n - k) {
                    out.push(Bipartition::new(l.clone(), r));
                }
            }
        }
        out
    }

    /// Dimension `binom(n, |l|) * dim(l) * dim(r)`.
    pub fn dimension(&self) -> num::BigInt {
        let n = self.size();
        let k = self.left.size();
        let mut binom = num::BigInt::from(1);
        for i in 0..k {
            binom = binom * (n - i) / (i + 1);
        }
        binom * self.left.dimension() * self.right.dimension()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.left, self.right)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// Accepts `(2,1)x(1)`, `(2,1)×(1)` and `21.1`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let split = t
            .split_once('×')
            .or_else(|| t.split_once(")x("))
            .or_else(|| t.split_once('x'))
            .or_else(|| t.split_once('.'));
        match split {
            Some((a, b)) if t.contains(")x(") => {
                Ok(Bipartition::new(format!("{a})").parse()?, format!("({b}").parse()?))
            }
            Some((a, b)) => Ok(Bipartition::new(a.parse()?, b.parse()?)),
            None => Err(Error::InvalidLabel(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn transpose_example() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
    }

    #[test]
    fn rectangle_example() {
        assert_eq!(p(&[2, 2, 2]).is_rectangle(), Some((3, 2)));
        assert_eq!(p(&[2, 1]).is_rectangle(), None);
        assert_eq!(Partition::empty().is_rectangle(), None);
    }

    #[test]
    fn complement_example() {
        assert_eq!(p(&[2]).rect_complement(2, 2).unwrap(), p(&[2]));
        assert_eq!(p(&[2, 1]).rect_complement(2, 3).unwrap(), p(&[2, 1]));
        assert!(p(&[3]).rect_complement(2, 2).is_err());
    }

    #[test]
    fn counts_and_dimensions() {
        assert_eq!(Partition::all(6).len(), 11);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
        assert_eq!(p(&[2, 2]).dimension(), 2.into());
        assert_eq!(p(&[3, 2, 1]).dimension(), 16.into());
        assert_eq!(Bipartition::all(3).len(), 10);
        let total: num::BigInt = Bipartition::all(3).iter().map(|b| b.dimension().pow(2)).sum();
        assert_eq!(total, 48.into());
    }

    #[test]
    fn parsing() {
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("(0)".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("211".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        let b: Bipartition = "(2,1)x(1)".parse().unwrap();
        assert_eq!(b, Bipartition::new(p(&[2, 1]), p(&[1])));
        assert_eq!(b.to_string().parse::<Bipartition>().unwrap(), b);
        assert_eq!("(1,1)×(0)".parse::<Bipartition>().unwrap().left, p(&[1, 1]));
    }

    proptest! {
        #[test]
        fn transpose_is_involution(n in 0usize..=12, idx in 0usize..1000) {
            let all = Partition::all(n);
            let lam = &all[idx % all.len()];
            prop_assert_eq!(&lam.transpose().transpose(), lam);
            prop_assert_eq!(lam.transpose().size(), n);
        }

        #[test]
        fn complement_is_involution(rows in 1usize..=4, cols in 1usize..=4, idx in 0usize..1000) {
            let subs = Partition::rectangle(rows, cols).subdiagrams();
            let mu = &subs[idx % subs.len()];
            let nu = mu.rect_complement(rows, cols).unwrap();
            prop_assert_eq!(mu.size() + nu.size(), rows * cols);
            prop_assert_eq!(&nu.rect_complement(rows, cols).unwrap(), mu);
        }
    }
}
