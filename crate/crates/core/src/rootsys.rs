//! Root systems in explicit coordinates, reflections and rank-2 subsystems.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num::{Signed, Zero};

use crate::algebra::{dot, int, rat, QMatrix, Rat};
use crate::error::{Error, Result};

/// A simple root system type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    /// `A_r`, realised in the `r + 1` dimensional `gl(r+1)` space.
    A(usize),
    B(usize),
    D(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl CartanType {
    /// Builds a type from a letter or full label and an optional rank.
    pub fn parse(label: &str, rank: Option<usize>) -> Result<CartanType> {
        let l = label.trim().to_ascii_uppercase();
        let bad = || Error::UnsupportedType(format!("{label}{}", rank.map_or(String::new(), |r| r.to_string())));
        let (letter, digits) = l.split_at(l.find(|c: char| c.is_ascii_digit()).unwrap_or(l.len()));
        let r = match (digits.is_empty(), rank) {
            (false, Some(r)) if digits.parse::<usize>().ok() != Some(r) => return Err(bad()),
            (false, _) => digits.parse::<usize>().map_err(|_| bad())?,
            (true, Some(r)) => r,
            (true, None) => return Err(bad()),
        };
        let t = match (letter, r) {
            ("A", r) => CartanType::A(r),
            ("B" | "C", r) => CartanType::B(r),
            ("D", r) => CartanType::D(r),
            ("G", 2) => CartanType::G2,
            ("F", 4) => CartanType::F4,
            ("E", 6) => CartanType::E6,
            ("E", 7) => CartanType::E7,
            ("E", 8) => CartanType::E8,
            _ => return Err(bad()),
        };
        t.validate()?;
        Ok(t)
    }

    fn validate(self) -> Result<()> {
        let ok = match self {
            CartanType::A(r) => r >= 1,
            CartanType::B(n) => n >= 2,
            CartanType::D(n) => n >= 2,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedType(self.to_string()))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CartanType::A(r) | CartanType::B(r) | CartanType::D(r) => r,
            CartanType::G2 => 2,
            CartanType::F4 => 4,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
            CartanType::E8 => 8,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, CartanType::A(_) | CartanType::D(_) | CartanType::E6 | CartanType::E7 | CartanType::E8)
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self, CartanType::G2 | CartanType::F4 | CartanType::E6 | CartanType::E7 | CartanType::E8)
    }

    /// Number of positive roots.
    pub fn num_positive_roots(self) -> usize {
        match self {
            CartanType::A(r) => r * (r + 1) / 2,
            CartanType::B(n) => n * n,
            CartanType::D(n) => n * (n - 1),
            CartanType::G2 => 6,
            CartanType::F4 => 24,
            CartanType::E6 => 36,
            CartanType::E7 => 63,
            CartanType::E8 => 120,
        }
    }

    /// Order of the Weyl group.
    pub fn group_order(self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            CartanType::A(r) => fact(r + 1),
            CartanType::B(n) => fact(n) << n,
            CartanType::D(n) => fact(n) << (n - 1),
            CartanType::G2 => 12,
            CartanType::F4 => 1152,
            CartanType::E6 => 51840,
            CartanType::E7 => 2903040,
            CartanType::E8 => 696729600,
        }
    }

    /// Letter part of the label, e.g. `B` or `E`.
    pub fn letter(self) -> &'static str {
        match self {
            CartanType::A(_) => "A",
            CartanType::B(_) => "B",
            CartanType::D(_) => "D",
            CartanType::G2 => "G",
            CartanType::F4 => "F",
            CartanType::E6 | CartanType::E7 | CartanType::E8 => "E",
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CartanType::parse(s, None)
    }
}

/// Rank-2 configuration formed by two non-proportional roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank2Label {
    /// `alpha = beta`.
    Id,
    A1,
    A1A1,
    A1tA1,
    A2,
    TA2,
    B2,
    G2Sub,
}

impl Rank2Label {
    pub fn name(self) -> &'static str {
        match self {
            Rank2Label::Id => "1",
            Rank2Label::A1 => "A1",
            Rank2Label::A1A1 => "2A1",
            Rank2Label::A1tA1 => "A1+~A1",
            Rank2Label::A2 => "A2",
            Rank2Label::TA2 => "~A2",
            Rank2Label::B2 => "B2",
            Rank2Label::G2Sub => "G2",
        }
    }
}

impl fmt::Display for Rank2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The vectors `y`, `x1`, `x2` used by the reduction criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestVectors {
    pub y: Vec<Rat>,
    pub x1: Vec<Rat>,
    pub x2: Vec<Rat>,
}

/// Roots and coroots in ambient coordinates.
///
/// Roots `0..N` are positive, ordered by height; roots `N..2N` are their
/// negatives in the same order. The simple roots are `0..rank`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    ambient: usize,
    roots: Vec<Vec<Rat>>,
    coroots: Vec<Vec<Rat>>,
    coords: Vec<Vec<i64>>,
    long: Vec<bool>,
    index: HashMap<Vec<Rat>, usize>,
}

fn unit(n: usize, i: usize, c: Rat) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = c;
    v
}

fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vec_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

fn e_minus(n: usize, i: usize, j: usize) -> Vec<Rat> {
    vec_add(&unit(n, i, int(1)), &unit(n, j, int(-1)))
}

/// Simple roots of each type in ambient coordinates.
fn simple_roots(ty: CartanType) -> (usize, Vec<Vec<Rat>>) {
    match ty {
        CartanType::A(r) => (r + 1, (0..r).map(|i| e_minus(r + 1, i, i + 1)).collect()),
        CartanType::B(n) => {
            let mut s: Vec<_> = (0..n - 1).map(|i| e_minus(n, i, i + 1)).collect();
            s.push(unit(n, n - 1, int(1)));
            (n, s)
        }
        CartanType::D(n) => {
            let mut s: Vec<_> = (0..n - 1).map(|i| e_minus(n, i, i + 1)).collect();
            s.push(vec_add(&unit(n, n - 2, int(1)), &unit(n, n - 1, int(1))));
            (n, s)
        }
        CartanType::G2 => (3, vec![vec![rat(2, 3), rat(-1, 3), rat(-1, 3)], vec![int(-1), int(1), int(0)]]),
        CartanType::F4 => {
            (4, vec![vec![int(1), int(-1), int(-1), int(-1)], unit(4, 3, int(2)), e_minus(4, 2, 3), e_minus(4, 1, 2)])
        }
        CartanType::E6 | CartanType::E7 | CartanType::E8 => {
            let r = ty.rank();
            let h = rat(1, 2);
            let mut s = vec![
                vec![h.clone(), -&h, -&h, -&h, -&h, -&h, -&h, h.clone()],
                vec_add(&unit(8, 0, int(1)), &unit(8, 1, int(1))),
                e_minus(8, 1, 0),
            ];
            for k in 4..=r {
                s.push(e_minus(8, k - 2, k - 3));
            }
            (8, s)
        }
    }
}

impl RootSystem {
    pub fn new(ty: CartanType) -> Result<RootSystem> {
        ty.validate()?;
        let (ambient, simple) = simple_roots(ty);
        let r = simple.len();
        let simple_co: Vec<Vec<Rat>> = simple.iter().map(|a| vec_scale(a, &(int(2) / dot(a, a)))).collect();

        // Closure under simple reflections, tracking simple-root coordinates.
        let mut roots: Vec<Vec<Rat>> = simple.clone();
        let mut coords: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as i64).collect()).collect();
        let mut seen: HashMap<Vec<Rat>, usize> = roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut k = 0;
        while k < roots.len() {
            for i in 0..r {
                let c = dot(&roots[k], &simple_co[i]);
                if c.is_zero() {
                    continue;
                }
                let img: Vec<Rat> = roots[k].iter().zip(&simple[i]).map(|(x, a)| x - &c * a).collect();
                if !seen.contains_key(&img) {
                    let ci = c.to_integer();
                    let ci = i64::try_from(ci).expect("Cartan integer");
                    let mut co = coords[k].clone();
                    co[i] -= ci;
                    seen.insert(img.clone(), roots.len());
                    roots.push(img);
                    coords.push(co);
                }
            }
            k += 1;
        }

        let mut pos: Vec<(Vec<i64>, Vec<Rat>)> =
            roots.into_iter().zip(coords).filter(|(_, c)| c.iter().all(|&x| x >= 0)).map(|(v, c)| (c, v)).collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        let n = pos.len();
        if n != ty.num_positive_roots() {
            return Err(Error::UnsupportedType(format!("{ty}: found {n} positive roots")));
        }
        let mut all_roots = Vec::with_capacity(2 * n);
        let mut all_coords = Vec::with_capacity(2 * n);
        for (c, v) in &pos {
            all_roots.push(v.clone());
            all_coords.push(c.clone());
        }
        for (c, v) in &pos {
            all_roots.push(v.iter().map(|x| -x).collect());
            all_coords.push(c.iter().map(|x| -x).collect());
        }
        let norms: Vec<Rat> = all_roots.iter().map(|a| dot(a, a)).collect();
        let max = norms.iter().max().unwrap().clone();
        let long = norms.iter().map(|x| *x == max).collect();
        let coroots = all_roots.iter().zip(&norms).map(|(a, nn)| vec_scale(a, &(int(2) / nn))).collect();
        let index = all_roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(RootSystem { ty, ambient, roots: all_roots, coroots, coords: all_coords, long, index })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, i: usize) -> &[Rat] {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[Vec<Rat>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<Rat>] {
        &self.roots[..self.num_positive()]
    }

    pub fn simple_roots(&self) -> &[Vec<Rat>] {
        &self.roots[..self.rank()]
    }

    pub fn coroot(&self, i: usize) -> &[Rat] {
        &self.coroots[i]
    }

    /// Coordinates of root `i` in the basis of simple roots.
    pub fn simple_coords(&self, i: usize) -> &[i64] {
        &self.coords[i]
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.long[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    /// Index of `-root(i)`.
    pub fn negative(&self, i: usize) -> usize {
        let n = self.num_positive();
        if i < n {
            i + n
        } else {
            i - n
        }
    }

    /// Index of the positive root among `{root(i), -root(i)}`.
    pub fn positive_of(&self, i: usize) -> usize {
        i % self.num_positive()
    }

    pub fn find_root(&self, v: &[Rat]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// `s_alpha(v) = v - <v, alpha^vee> alpha` for root index `i`.
    pub fn reflect(&self, i: usize, v: &[Rat]) -> Vec<Rat> {
        let c = dot(v, &self.coroots[i]);
        v.iter().zip(&self.roots[i]).map(|(x, a)| x - &c * a).collect()
    }

    /// Matrix of the reflection in a root given by its coordinates.
    pub fn reflection_matrix(&self, alpha: &[Rat]) -> Result<QMatrix> {
        let i = self.find_root(alpha).ok_or_else(|| Error::NotARoot(self.ty.to_string()))?;
        Ok(self.reflection_matrix_of(i))
    }

    pub fn reflection_matrix_of(&self, i: usize) -> QMatrix {
        let n = self.ambient;
        let cols: Vec<Vec<Rat>> = (0..n).map(|j| self.reflect(i, &unit(n, j, int(1)))).collect();
        QMatrix::from_columns(&cols)
    }

    /// Permutation of root indices induced by the reflection in root `i`.
    pub fn reflection_perm(&self, i: usize) -> Vec<u8> {
        (0..self.num_roots())
            .map(|k| self.find_root(&self.reflect(i, &self.roots[k])).expect("reflection permutes roots") as u8)
            .collect()
    }

    /// Classification of the pair by root lengths and the order of `s_alpha s_beta`.
    pub fn rank2_label(&self, a: usize, b: usize) -> Result<Rank2Label> {
        if self.positive_of(a) == self.positive_of(b) {
            return Err(Error::ProportionalRoots);
        }
        let n = dot(&self.roots[a], &self.coroots[b]) * dot(&self.roots[b], &self.coroots[a]);
        let n = n.to_integer();
        let (la, lb) = (self.long[a], self.long[b]);
        Ok(match i64::try_from(n).unwrap_or(-1) {
            0 if la == lb || self.ty.is_simply_laced() => Rank2Label::A1A1,
            0 => Rank2Label::A1tA1,
            1 if la => Rank2Label::A2,
            1 => Rank2Label::TA2,
            2 => Rank2Label::B2,
            3 => Rank2Label::G2Sub,
            _ => return Err(Error::ProportionalRoots),
        })
    }

    /// Projection onto the span of the roots, as an ambient matrix.
    pub fn root_span_projection(&self) -> QMatrix {
        let s = QMatrix::from_columns(self.simple_roots());
        let gram = &s.transpose() * &s;
        let inv = gram.inverse().expect("simple roots independent");
        &(&s * &inv) * &s.transpose()
    }

    /// Fundamental weights: `<omega_i, alpha_j^vee> = delta_ij`, inside the root span.
    pub fn fundamental_weights(&self) -> Vec<Vec<Rat>> {
        self.dual_basis(|j| self.coroots[j].clone())
    }

    /// Fundamental coweights: `<omega_i^vee, alpha_j> = delta_ij`, inside the root span.
    pub fn fundamental_coweights(&self) -> Vec<Vec<Rat>> {
        self.dual_basis(|j| self.roots[j].clone())
    }

    fn dual_basis(&self, pair: impl Fn(usize) -> Vec<Rat>) -> Vec<Vec<Rat>> {
        let r = self.rank();
        // omega_i = sum_k m_ik alpha_k with sum_k m_ik <alpha_k, pair_j> = delta_ij
        let g = QMatrix::from_rows((0..r).map(|k| (0..r).map(|j| dot(&self.roots[k], &pair(j))).collect()).collect());
        let m = g.inverse().expect("nondegenerate pairing");
        (0..r)
            .map(|i| {
                (0..r).fold(vec![Rat::zero(); self.ambient], |acc, k| {
                    vec_add(&acc, &vec_scale(&self.roots[k], &m[(i, k)]))
                })
            })
            .collect()
    }

    /// The test vectors of the reduction criterion for this type.
    pub fn test_vectors(&self) -> TestVectors {
        let n = self.ambient;
        let e = |i: usize| unit(n, i, int(1));
        match self.ty {
            CartanType::A(_) | CartanType::B(_) | CartanType::D(_) => TestVectors { y: e(0), x1: e(0), x2: e(1) },
            CartanType::G2 => TestVectors {
                y: vec![int(1), int(1), int(-2)],
                x1: vec![rat(1, 3), rat(1, 3), rat(-2, 3)],
                x2: vec![int(0), int(1), int(-1)],
            },
            CartanType::F4 => TestVectors { y: e(0), x1: e(0), x2: vec![int(1); 4] },
            CartanType::E6 | CartanType::E7 | CartanType::E8 => {
                let i = match self.ty {
                    CartanType::E6 => 1,
                    CartanType::E7 => 0,
                    _ => 7,
                };
                let y = self.fundamental_coweights()[i].clone();
                let x1 = self.fundamental_weights()[i].clone();
                let x2 = self.reflect(i, &x1);
                TestVectors { y, x1, x2 }
            }
        }
    }

    /// Simple-root coordinates of an arbitrary vector of the root span, if it lies there.
    pub fn to_simple_coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let r = self.rank();
        let s = QMatrix::from_columns(self.simple_roots());
        let gram = &s.transpose() * &s;
        let rhs = s.transpose().apply(v);
        let c = gram.inverse()?.apply(&rhs);
        let back = s.apply(&c);
        (back == v && c.len() == r).then_some(c)
    }

    /// Whether every positive root has nonnegative integer simple coordinates.
    pub fn check_positive_integrality(&self) -> bool {
        (0..self.num_positive()).all(|i| {
            let c = self.to_simple_coords(&self.roots[i]).unwrap_or_default();
            c.iter().all(|x| x.is_integer() && !x.is_negative())
                && c.iter().map(|x| x.to_integer()).collect::<Vec<_>>()
                    == self.coords[i].iter().map(|&x| x.into()).collect::<Vec<num::BigInt>>()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::span_rank;

    fn all_types() -> Vec<CartanType> {
        use CartanType::*;
        vec![A(1), A(3), A(5), B(2), B(3), B(5), D(2), D(4), D(5), G2, F4, E6, E7, E8]
    }

    #[test]
    fn root_counts_and_normalisation() {
        for t in all_types() {
            let rs = RootSystem::new(t).unwrap();
            assert_eq!(rs.num_positive(), t.num_positive_roots(), "{t}");
            for i in 0..rs.num_roots() {
                assert_eq!(dot(rs.root(i), rs.coroot(i)), int(2));
            }
            assert_eq!(span_rank(rs.simple_roots()), t.rank());
            assert!(rs.check_positive_integrality(), "{t}");
        }
    }

    #[test]
    fn g2_coordinates() {
        let rs = RootSystem::new(CartanType::G2).unwrap();
        assert_eq!(rs.num_positive(), 6);
        assert_eq!(rs.root(0), &[rat(2, 3), rat(-1, 3), rat(-1, 3)]);
        assert_eq!(rs.root(1), &[int(-1), int(1), int(0)]);
        assert!(!rs.is_long(0) && rs.is_long(1));
        let s = rs.reflection_matrix(rs.root(0)).unwrap();
        assert_eq!(s.apply(rs.root(0)), rs.root(rs.negative(0)));
    }

    #[test]
    fn b2_roots_and_reflections() {
        let rs = RootSystem::new(CartanType::B(2)).unwrap();
        let mut pos: Vec<Vec<Rat>> = rs.positive_roots().to_vec();
        pos.sort();
        let mut want = vec![vec![int(1), int(-1)], vec![int(1), int(1)], vec![int(1), int(0)], vec![int(0), int(1)]];
        want.sort();
        assert_eq!(pos, want);
        let swap = rs.reflection_matrix(&[int(1), int(-1)]).unwrap();
        assert_eq!(swap, QMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]]));
        let sign = rs.reflection_matrix(&[int(1), int(0)]).unwrap();
        assert_eq!(sign, QMatrix::from_int_rows(&[vec![-1, 0], vec![0, 1]]));
        assert!(rs.reflection_matrix(&[int(2), int(0)]).is_err());
    }

    #[test]
    fn rank2_examples() {
        let rs = RootSystem::new(CartanType::F4).unwrap();
        let f = |v: [i64; 4]| rs.find_root(&v.map(int)).unwrap();
        // the standard short roots e_i - e_j of this realisation
        assert_eq!(rs.rank2_label(f([1, -1, 0, 0]), f([0, 0, 1, -1])).unwrap(), Rank2Label::A1A1);
        assert_eq!(rs.rank2_label(f([1, -1, 0, 0]), f([0, 1, -1, 0])).unwrap(), Rank2Label::TA2);
        assert_eq!(rs.rank2_label(f([2, 0, 0, 0]), f([0, 2, 0, 0])).unwrap(), Rank2Label::A1A1);
        assert_eq!(rs.rank2_label(f([1, -1, -1, -1]), f([0, 0, 0, 2])).unwrap(), Rank2Label::A2);
        let g = RootSystem::new(CartanType::G2).unwrap();
        assert_eq!(g.rank2_label(0, 1).unwrap(), Rank2Label::G2Sub);
        assert!(g.rank2_label(0, g.negative(0)).is_err());
    }

    #[test]
    fn rank2_symmetric_and_simply_laced() {
        for t in [CartanType::D(4), CartanType::E6, CartanType::F4, CartanType::B(3)] {
            let rs = RootSystem::new(t).unwrap();
            let n = rs.num_positive();
            for a in 0..n {
                for b in 0..n {
                    if a == b {
                        continue;
                    }
                    let l = rs.rank2_label(a, b).unwrap();
                    assert_eq!(l, rs.rank2_label(b, a).unwrap());
                    if t.is_simply_laced() {
                        assert!(matches!(l, Rank2Label::A1A1 | Rank2Label::A2));
                    }
                }
            }
        }
    }

    #[test]
    fn reflections_preserve_roots_lengths_and_pairing() {
        for t in all_types() {
            let rs = RootSystem::new(t).unwrap();
            for i in 0..rs.num_positive() {
                let p = rs.reflection_perm(i);
                for (k, &img) in p.iter().enumerate() {
                    assert_eq!(rs.is_long(k), rs.is_long(img as usize));
                }
                let m = rs.reflection_matrix_of(i);
                assert_eq!(&m * &m, QMatrix::identity(rs.ambient_dim()));
                assert_eq!(&m.transpose() * &m, QMatrix::identity(rs.ambient_dim()));
            }
        }
    }

    #[test]
    fn test_vector_examples() {
        let b = RootSystem::new(CartanType::B(4)).unwrap().test_vectors();
        assert_eq!(b.y, vec![int(1), int(0), int(0), int(0)]);
        assert_eq!(b.x2, vec![int(0), int(1), int(0), int(0)]);
        let g = RootSystem::new(CartanType::G2).unwrap().test_vectors();
        assert_eq!(g.x1, vec![rat(1, 3), rat(1, 3), rat(-2, 3)]);
        let rs = RootSystem::new(CartanType::E8).unwrap();
        let tv = rs.test_vectors();
        for j in 0..8 {
            let want = if j == 7 { int(1) } else { int(0) };
            assert_eq!(dot(&tv.y, rs.root(j)), want);
            assert_eq!(dot(&tv.x1, rs.coroot(j)), want);
        }
        assert_eq!(tv.x2, rs.reflect(7, &tv.x1));
    }

    #[test]
    fn parse_types() {
        assert_eq!(CartanType::parse("B", Some(6)).unwrap(), CartanType::B(6));
        assert_eq!("E8".parse::<CartanType>().unwrap(), CartanType::E8);
        assert_eq!(CartanType::parse("F4", Some(4)).unwrap(), CartanType::F4);
        assert!(CartanType::parse("F", Some(5)).is_err());
        assert!(CartanType::parse("B", None).is_err());
    }
}
