//! Exact scalar, polynomial, matrix and partition arithmetic.

pub mod matrix;
pub mod partition;
pub mod poly;
pub mod quad;

pub use matrix::{span_rank, QMatrix};
pub use partition::{Bipartition, Partition};
pub use poly::Poly;
pub use quad::{quad_solve, ConstraintKind, ConstraintSet, ParamQuad, ProjPoint, Surd};

use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Converts an integral rational to `i64`, if it is one and fits.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    i64::try_from(r.numer().clone()).ok()
}

/// Dot product of two rational vectors.
pub fn dot(u: &[Rat], v: &[Rat]) -> Rat {
    u.iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b)
}

pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    use num::Integer;
    a.gcd(b)
}

/// Squarefree decomposition `n = f^2 * d` with `d` squarefree (sign kept in `d`).
pub fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut rest = n.abs();
    let mut f = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let pp = &p * &p;
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            f *= &p;
        }
        p += 1;
    }
    (f, sign * rest)
}

pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_vec(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(format_rat).collect();
    format!("({})", parts.join(","))
}
