//! Degrees, fake degrees, exterior powers, tensor decompositions and the
//! scalar by which the sum of reflections acts.

use std::fmt;

use num::{BigInt, Integer, Signed, ToPrimitive, Zero};

use crate::algebra::{format_rat, int, Poly, Rat};
use crate::error::{Error, Result};
use crate::weyl::WeylGroup;

use super::table::{CharacterTable, ClassFunction};

fn gcd(a: usize, b: usize) -> usize {
    num::integer::gcd(a, b)
}

/// Degrees of the basic invariants, read off the eigenvalues of a Coxeter element.
pub fn degrees(g: &WeylGroup) -> Vec<usize> {
    let word: Vec<usize> = (1..=g.rank()).collect();
    let c = g.from_word(&word).expect("valid word");
    let h = c.order();
    let mut p = g.char_poly(&c);
    let mut exps = Vec::new();
    for k in 1..=h {
        if !h.is_multiple_of(k) {
            continue;
        }
        let phi = crate::algebra::poly::cyclotomic(k);
        loop {
            let (q, r) = p.div_rem(&phi);
            if !r.is_zero() {
                break;
            }
            p = q;
            exps.extend((1..=k).filter(|&j| gcd(j, k) == 1).map(|j| (h / k) * j % h.max(1)));
        }
    }
    debug_assert_eq!(p.degree(), Some(0));
    let mut d: Vec<usize> = exps.into_iter().map(|m| m + 1).collect();
    d.sort_unstable();
    d
}

/// `1 / q(t)` as a power series to degree `n`, for integral `q` with `q(0) = 1`.
fn inverse_series(q: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); n + 1];
    s[0] = BigInt::from(1);
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for j in 1..q.len().min(k + 1) {
            acc -= &q[j] * &s[k - j];
        }
        s[k] = acc;
    }
    s
}

/// Fake degrees of every irrep of the table: the graded multiplicities in
/// the coinvariant algebra.
pub fn fake_degrees(table: &CharacterTable) -> Result<Vec<Poly>> {
    let g = table.group();
    let r = g.rank();
    let d = degrees(g);
    let top: usize = d.iter().sum();
    let nplus = top - r;
    let series: Vec<Vec<BigInt>> = (0..table.num_classes())
        .map(|c| {
            // det(1 - t w) = t^r p(1/t)
            let rev = table.class_poly(c).reversed(r);
            let q: Vec<BigInt> = rev.coeffs().iter().map(|x| x.to_integer()).collect();
            inverse_series(&q, top)
        })
        .collect();
    let mut invariants = vec![BigInt::zero(); top + 1];
    invariants[0] = BigInt::from(1);
    for &di in &d {
        for k in (di..=top).rev() {
            let v = invariants[k - di].clone();
            invariants[k] -= v;
        }
    }
    let order = BigInt::from(table.order());
    let mut out = Vec::with_capacity(table.irreps().len());
    for ir in table.irreps() {
        let mut molien = vec![BigInt::zero(); top + 1];
        for (c, info) in table.classes().iter().enumerate() {
            let w = BigInt::from(info.size) * BigInt::from(ir.values[c]);
            if w.is_zero() {
                continue;
            }
            for (m, s) in molien.iter_mut().zip(&series[c]) {
                *m += &w * s;
            }
        }
        let mut coeffs = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let mut acc = BigInt::zero();
            for j in 0..=k {
                if !invariants[j].is_zero() {
                    acc += &invariants[j] * &molien[k - j];
                }
            }
            let (q, rem) = acc.div_rem(&order);
            if !rem.is_zero() || q.is_negative() || (k > nplus && !q.is_zero()) {
                return Err(Error::NotPolynomial(format!("fake degree of {} at degree {k}", ir.label)));
            }
            coeffs.push(Rat::from_integer(q));
        }
        out.push(Poly::new(coeffs));
    }
    Ok(out)
}

/// `b`-invariants: the lowest degree in which each irrep occurs among the harmonics.
pub fn b_invariants(table: &CharacterTable) -> Result<Vec<usize>> {
    fake_degrees(table)?
        .iter()
        .zip(table.irreps())
        .map(|(p, ir)| p.valuation().ok_or_else(|| Error::NotPolynomial(format!("zero fake degree for {}", ir.label))))
        .collect()
}

/// Character of the `l`-th exterior power of the reflection representation.
pub fn wedge_class_function(table: &CharacterTable, l: usize) -> Result<ClassFunction> {
    let r = table.group().rank();
    if l > r {
        return Err(Error::WedgeOutOfRange { ell: l, rank: r });
    }
    // det(1 + t w) has coefficient (-1)^l c_{r-l} at t^l
    let sign = if l.is_multiple_of(2) { int(1) } else { int(-1) };
    Ok(ClassFunction { values: (0..table.num_classes()).map(|c| table.class_poly(c).coeff(r - l) * &sign).collect() })
}

/// Character of the full exterior algebra of the reflection representation.
pub fn wedge_total(table: &CharacterTable) -> ClassFunction {
    let mut f = wedge_class_function(table, 0).expect("l = 0");
    for l in 1..=table.group().rank() {
        f = f.sum(&wedge_class_function(table, l).expect("l <= rank"));
    }
    f
}

/// Multiplicities `(irrep index, multiplicity)` of a character, nonzero only.
pub fn tensor_decompose(table: &CharacterTable, f: &ClassFunction) -> Result<Vec<(usize, u64)>> {
    if f.values.len() != table.num_classes() {
        return Err(Error::SizeMismatch(format!(
            "class function of length {} for {} classes",
            f.values.len(),
            table.num_classes()
        )));
    }
    let mut out = Vec::new();
    for i in 0..table.irreps().len() {
        let m = table.inner_product(f, &table.class_function(i));
        if !m.is_integer() || m.is_negative() {
            return Err(Error::NotACharacter(format!("multiplicity {} of {}", format_rat(&m), table.label(i))));
        }
        let m = m.to_integer().to_u64().expect("multiplicity fits");
        if m > 0 {
            out.push((i, m));
        }
    }
    Ok(out)
}

/// Decomposition of `sigma (x) wedge(h)`.
pub fn decompose_with_wedge(table: &CharacterTable, i: usize) -> Result<Vec<(usize, u64)>> {
    tensor_decompose(table, &table.class_function(i).product(&wedge_total(table)))
}

/// Linear form `long * c_l + short * c_s`; simply-laced types use `long` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NForm {
    pub long: Rat,
    pub short: Rat,
}

impl NForm {
    pub fn eval(&self, cl: &Rat, cs: &Rat) -> Rat {
        &self.long * cl + &self.short * cs
    }

    /// Value at equal parameters `c_l = c_s = 1`.
    pub fn equal(&self) -> Rat {
        &self.long + &self.short
    }

    pub fn is_zero(&self) -> bool {
        self.long.is_zero() && self.short.is_zero()
    }
}

impl fmt::Display for NForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.short.is_zero() {
            return write!(f, "{}*c", format_rat(&self.long));
        }
        let sign = if self.short.is_negative() { '-' } else { '+' };
        write!(f, "{}*cl {sign} {}*cs", format_rat(&self.long), format_rat(&self.short.abs()))
    }
}

/// Scalar by which `sum_s c_s s` acts on the irrep `i`.
pub fn n_invariant(table: &CharacterTable, i: usize) -> NForm {
    let ir = table.irrep(i);
    let dim = Rat::from_integer(ir.dim().into());
    let mut nf = NForm { long: Rat::zero(), short: Rat::zero() };
    for (c, info) in table.classes().iter().enumerate() {
        if let Some(long) = table.reflection_class(c) {
            let v = Rat::from_integer((info.size as i64 * ir.values[c]).into()) / &dim;
            if long {
                nf.long += v;
            } else {
                nf.short += v;
            }
        }
    }
    nf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::classical_table;
    use crate::rootsys::CartanType;

    #[test]
    fn degrees_of_small_types() {
        let d = |t| degrees(&WeylGroup::of_type(t).unwrap());
        assert_eq!(d(CartanType::G2), vec![2, 6]);
        assert_eq!(d(CartanType::F4), vec![2, 6, 8, 12]);
        assert_eq!(d(CartanType::B(3)), vec![2, 4, 6]);
        assert_eq!(d(CartanType::D(4)), vec![2, 4, 4, 6]);
        assert_eq!(d(CartanType::A(3)), vec![2, 3, 4]);
        assert_eq!(d(CartanType::E6), vec![2, 5, 6, 8, 9, 12]);
        assert_eq!(d(CartanType::E8), vec![2, 8, 12, 14, 18, 20, 24, 30]);
    }

    #[test]
    fn fake_degrees_type_a() {
        // S_3: (3) -> 1, (2,1) -> t + t^2, (1,1,1) -> t^3
        let t = classical_table(CartanType::A(2)).unwrap();
        let fd = fake_degrees(&t).unwrap();
        let find = |s: &str| t.find(s).unwrap();
        assert_eq!(fd[find("(3)")], Poly::from_ints(&[1]));
        assert_eq!(fd[find("(2,1)")], Poly::from_ints(&[0, 1, 1]));
        assert_eq!(fd[find("(1,1,1)")], Poly::from_ints(&[0, 0, 0, 1]));
    }

    #[test]
    fn wedge_and_n_for_b3() {
        let t = classical_table(CartanType::B(3)).unwrap();
        let w0 = wedge_class_function(&t, 0).unwrap();
        assert!(w0.values.iter().all(|v| v == &int(1)));
        for l in 0..=3 {
            let d = tensor_decompose(&t, &wedge_class_function(&t, l).unwrap()).unwrap();
            let want = format!("({})x({})", 3 - l, vec!["1"; l].join(","));
            let want = if l == 0 {
                "(3)x(0)".to_string()
            } else if l == 3 {
                "(0)x(1,1,1)".into()
            } else {
                want
            };
            assert_eq!(d.len(), 1);
            assert_eq!(t.label(d[0].0).to_string(), want);
        }
        assert!(wedge_class_function(&t, 4).is_err());
        let triv = t.trivial_index().unwrap();
        assert_eq!(n_invariant(&t, triv).equal(), int(9));
        assert_eq!(n_invariant(&t, t.sign_index().unwrap()).equal(), int(-9));
    }

    #[test]
    fn non_character_rejected() {
        let t = classical_table(CartanType::A(2)).unwrap();
        let half = ClassFunction { values: vec![crate::algebra::rat(1, 2); t.num_classes()] };
        assert!(tensor_decompose(&t, &half).is_err());
    }
}
