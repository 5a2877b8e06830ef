//! Character tables from class-sum eigenvectors over the rationals.
//!
//! For a class `C_j` the matrix `T_j[s][r] = #{x in C_j : x g_s in C_r}`
//! satisfies `T_j chi = omega_j(chi) chi` for every irreducible character
//! `chi`, with an integer eigenvalue `omega_j(chi) = |C_j| chi(g_j) / chi(1)`.
//! Common eigenspaces are split class by class until all are lines.

use num::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{QMatrix, Rat};
use crate::error::{Error, Result};
use crate::weyl::{ConjugacyClasses, EnumeratedGroup, WeylGroup};

use super::table::{CharacterTable, Irrep, IrrepLabel};

/// Class multiplication matrix of class `j`.
fn class_matrix(eg: &EnumeratedGroup, cc: &ConjugacyClasses, members: &[Vec<usize>], j: usize) -> QMatrix {
    let k = cc.len();
    let mut counts = vec![vec![0u64; k]; k];
    for &x in &members[j] {
        let xe = &eg.elements()[x];
        for (s, rep) in cc.reps.iter().enumerate() {
            let y = xe.compose(rep);
            let r = cc.class_of[eg.index_of(&y).expect("closed under products")] as usize;
            counts[s][r] += 1;
        }
    }
    QMatrix::from_rows(
        counts.into_iter().map(|row| row.into_iter().map(|c| Rat::from_integer(c.into())).collect()).collect(),
    )
}

/// Integer eigenvalues of `m`, each once, within `[-bound, bound]`.
fn integer_eigenvalues(m: &QMatrix, bound: u64) -> Result<Vec<i64>> {
    let p = m.char_poly()?;
    let v = p.valuation().unwrap_or(0);
    let mut out = Vec::new();
    if v > 0 {
        out.push(0);
    }
    let c0 = p.coeff(v);
    if !c0.is_integer() {
        return Err(Error::TableComputation("non-integral characteristic polynomial".into()));
    }
    let c0 = c0.to_integer();
    for a in 1..=bound as i64 {
        if !(&c0 % num::BigInt::from(a)).is_zero() {
            continue;
        }
        for lam in [a, -a] {
            if p.eval(&Rat::from_integer(lam.into())).is_zero() {
                out.push(lam);
            }
        }
    }
    Ok(out)
}

/// RREF basis of a subspace, as row vectors with pivot columns.
struct Space {
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Space {
    fn from_vectors(vs: Vec<Vec<Rat>>) -> Space {
        let (r, pivots) = QMatrix::from_rows(vs).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Space { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Splits `space` into eigenspaces of `t`.
fn split(space: &Space, t: &QMatrix, bound: u64) -> Result<Vec<Space>> {
    let m = space.dim();
    let images: Vec<Vec<Rat>> = space.basis.iter().map(|b| t.apply(b)).collect();
    // restriction: T b_i = sum_k M[i][k] b_k
    let restricted =
        QMatrix::from_rows(images.iter().map(|img| space.pivots.iter().map(|&p| img[p].clone()).collect()).collect())
            .transpose();
    let mut parts = Vec::new();
    let mut total = 0;
    for lam in integer_eigenvalues(&restricted, bound)? {
        let shifted = &restricted - &QMatrix::identity(m).scale(&Rat::from_integer(lam.into()));
        let coeffs = shifted.nullspace();
        total += coeffs.len();
        let vecs = coeffs
            .iter()
            .map(|c| {
                let mut v = vec![Rat::zero(); space.basis[0].len()];
                for (ci, b) in c.iter().zip(&space.basis) {
                    if ci.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += ci * y;
                    }
                }
                v
            })
            .collect();
        parts.push(Space::from_vectors(vecs));
    }
    if total != m {
        return Err(Error::TableComputation(format!(
            "class matrix is not diagonalisable over the integers ({total} of {m})"
        )));
    }
    Ok(parts)
}

/// Character values from an eigenvector.
fn normalise(v: &[Rat], sizes: &[u64], order: u64) -> Result<Vec<i64>> {
    let v0 = &v[0];
    let scaled: Vec<Rat> = v.iter().map(|x| x / v0).collect();
    let norm: Rat = scaled.iter().zip(sizes).map(|(x, &s)| x * x * Rat::from_integer(s.into())).sum();
    let d2 = Rat::from_integer(order.into()) / norm;
    let bad = || Error::TableComputation("eigenvector is not a character".into());
    if !d2.is_integer() || d2.is_negative() {
        return Err(bad());
    }
    let d2 = d2.to_integer();
    let d = d2.sqrt();
    if &d * &d != d2 {
        return Err(bad());
    }
    let dr = Rat::from_integer(d);
    scaled
        .iter()
        .map(|x| {
            let y = x * &dr;
            if y.is_integer() {
                y.to_integer().to_i64().ok_or_else(bad)
            } else {
                Err(bad())
            }
        })
        .collect()
}

/// Character table of an enumerable Weyl group with provisional labels `X<k>`.
pub fn compute_table(group: &WeylGroup, cap: u64) -> Result<CharacterTable> {
    let eg = group.enumerate(cap)?;
    let cc = eg.conjugacy_classes();
    let k = cc.len();
    let mut members = vec![Vec::new(); k];
    for (i, &c) in cc.class_of.iter().enumerate() {
        members[c as usize].push(i);
    }
    let sizes: Vec<u64> = cc.classes.iter().map(|c| c.size).collect();
    let mut by_size: Vec<usize> = (1..k).collect();
    by_size.sort_by_key(|&j| (sizes[j], j));
    let identity: Vec<Vec<Rat>> =
        (0..k).map(|i| (0..k).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()).collect();
    let mut spaces = vec![Space::from_vectors(identity)];
    for &j in &by_size {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let t = class_matrix(&eg, &cc, &members, j);
        let mut next = Vec::new();
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
            } else {
                next.extend(split(&s, &t, sizes[j])?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::TableComputation("eigenspaces did not separate".into()));
    }
    let order = eg.len() as u64;
    let mut rows = spaces.iter().map(|s| normalise(&s.basis[0], &sizes, order)).collect::<Result<Vec<_>>>()?;
    rows.sort();
    let irreps =
        rows.into_iter().enumerate().map(|(i, v)| Irrep::new(IrrepLabel::Named(format!("X{}", i + 1)), v)).collect();
    let table = CharacterTable::new(group.clone(), cc.classes.clone(), irreps)?;
    table.validate()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;
    use crate::weyl::DEFAULT_ENUMERATION_CAP;

    fn dims(ty: CartanType) -> Vec<i64> {
        let g = WeylGroup::of_type(ty).unwrap();
        let t = compute_table(&g, DEFAULT_ENUMERATION_CAP).unwrap();
        let mut d: Vec<i64> = t.irreps().iter().map(|i| i.dim()).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn dihedral_and_b2() {
        assert_eq!(dims(CartanType::G2), vec![1, 1, 1, 1, 2, 2]);
        assert_eq!(dims(CartanType::B(2)), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn f4_dimensions() {
        let d = dims(CartanType::F4);
        assert_eq!(d.len(), 25);
        assert_eq!(d.iter().map(|x| x * x).sum::<i64>(), 1152);
        assert_eq!(d.iter().filter(|&&x| x == 4).count(), 5);
    }
}
