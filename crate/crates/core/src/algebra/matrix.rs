use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::{BigInt, Integer, One, Zero};

use super::{format_rat, int, Poly, Rat};
use crate::error::{Error, Result};

/// Dense rectangular matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rat>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |v| v.len());
        let mut m = QMatrix::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).fold(Rat::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn scale(&self, c: &Rat) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b)).collect()
    }

    /// Exact rank, computed by fraction-free (Bareiss) elimination on the
    /// integer matrix obtained by clearing denominators row by row.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|i| integer_row(self.row(i))).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in rank + 1..rows {
                for c in col + 1..cols {
                    let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                    m[r][c] = v / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = Rat::one() / &m[(r, c)];
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(r, j)] * &f;
                        m[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// Basis of the right null space `{v : M v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = QMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// `det(t I - M)` by the Faddeev-LeVerrier recursion.
    pub fn char_poly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut acc = QMatrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &acc;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            let tr = (self * &next).trace();
            coeffs[n - k] = -tr / int(k as i64);
            acc = next;
        }
        Ok(Poly::new(coeffs))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Row scaled to a primitive integer vector with the same span.
fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Exact rank of a list of vectors.
pub fn span_rank(vectors: &[Vec<Rat>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::from_rows(vectors.to_vec()).rank()
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "incompatible shapes");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = a * &rhs[(k, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rat).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn rank_examples() {
        assert_eq!(QMatrix::identity(3).rank(), 3);
        assert_eq!(QMatrix::zeros(2, 5).rank(), 0);
        let m = QMatrix::from_int_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_with_fractions() {
        let m = QMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(3, 2), int(1)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(QMatrix::identity(2).char_poly().unwrap(), Poly::from_ints(&[1, -2, 1]));
        let refl = QMatrix::from_int_rows(&[vec![-1, 0], vec![0, 1]]);
        assert_eq!(refl.char_poly().unwrap(), Poly::from_ints(&[-1, 0, 1]));
        // rotation by 120 degrees in the basis of a rank-2 lattice
        let rot = QMatrix::from_int_rows(&[vec![0, -1], vec![1, -1]]);
        assert_eq!(rot.char_poly().unwrap(), Poly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn char_poly_rejects_rectangular() {
        assert!(matches!(QMatrix::zeros(2, 3).char_poly(), Err(Error::NotSquare { rows: 2, cols: 3 })));
    }

    #[test]
    fn inverse_and_nullspace() {
        let m = QMatrix::from_int_rows(&[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, QMatrix::identity(2));
        let s = QMatrix::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let ns = s.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(s.apply(&v).iter().all(|x| x.is_zero()));
        }
    }

    fn rank_mod_p(rows: &[Vec<i64>], p: i64) -> usize {
        let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
            m.swap(rank, piv);
            let (mut inv, mut base, mut e) = (1i64, m[rank][c], p - 2);
            while e > 0 {
                if e & 1 == 1 {
                    inv = inv * base % p;
                }
                base = base * base % p;
                e >>= 1;
            }
            for r in 0..m.len() {
                if r != rank && m[r][c] != 0 {
                    let f = m[r][c] * inv % p;
                    for k in 0..cols {
                        m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest::proptest! {
        #[test]
        fn rank_agrees_with_large_prime(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 1..5)) {
            let q = QMatrix::from_int_rows(&rows);
            proptest::prop_assert_eq!(q.rank(), rank_mod_p(&rows, 1_000_003));
        }
    }
}
