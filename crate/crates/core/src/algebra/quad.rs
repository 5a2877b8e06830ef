//! Homogeneous quadratics in the parameter pair `(c_l, c_s)` and their exact
//! zero loci on the projective parameter line.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use super::{format_rat, squarefree_split, Rat};

/// `a*c_l^2 + b*c_l*c_s + d*c_s^2` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamQuad {
    pub a: BigInt,
    pub b: BigInt,
    pub d: BigInt,
}

impl ParamQuad {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        ParamQuad { a: a.into(), b: b.into(), d: d.into() }
    }

    pub fn zero() -> Self {
        ParamQuad::new(0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.d.is_zero()
    }

    pub fn content(&self) -> BigInt {
        self.a.gcd(&self.b).gcd(&self.d)
    }

    /// Primitive representative with positive leading coefficient; zero stays zero.
    pub fn canonical(&self) -> ParamQuad {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        let lead = [&self.a, &self.b, &self.d].into_iter().find(|x| !x.is_zero()).unwrap();
        if lead.is_negative() {
            g = -g;
        }
        ParamQuad::new(&self.a / &g, &self.b / &g, &self.d / &g)
    }

    pub fn scaled(&self, k: &BigInt) -> ParamQuad {
        ParamQuad::new(&self.a * k, &self.b * k, &self.d * k)
    }

    pub fn add(&self, other: &ParamQuad) -> ParamQuad {
        ParamQuad::new(&self.a + &other.a, &self.b + &other.b, &self.d + &other.d)
    }

    /// Value at a rational parameter point.
    pub fn eval(&self, cl: &Rat, cs: &Rat) -> Rat {
        Rat::from_integer(self.a.clone()) * cl * cl
            + Rat::from_integer(self.b.clone()) * cl * cs
            + Rat::from_integer(self.d.clone()) * cs * cs
    }

    /// Zero locus on the projective line; `None` when the quadratic vanishes identically.
    pub fn zero_locus(&self) -> Option<Vec<ProjPoint>> {
        if self.is_zero() {
            return None;
        }
        let mut pts = Vec::new();
        if self.d.is_zero() {
            // c_l divides the form
            pts.push(ProjPoint::ClZero);
            if !self.b.is_zero() {
                // a*c_l + b*c_s = 0  =>  c_s/c_l = -a/b
                pts.push(ProjPoint::Ratio(Surd::rational(Rat::new(-self.a.clone(), self.b.clone()))));
            }
        } else {
            // d r^2 + b r + a = 0 with r = c_s/c_l
            let disc = &self.b * &self.b - BigInt::from(4) * &self.a * &self.d;
            let two_d = BigInt::from(2) * &self.d;
            let center = Rat::new(-self.b.clone(), two_d.clone());
            if disc.is_zero() {
                pts.push(ProjPoint::Ratio(Surd::rational(center)));
            } else {
                let (f, sq) = squarefree_split(&disc);
                let half = Rat::new(f, two_d);
                if sq.is_one() {
                    pts.push(ProjPoint::Ratio(Surd::rational(&center + &half)));
                    pts.push(ProjPoint::Ratio(Surd::rational(&center - &half)));
                } else {
                    pts.push(ProjPoint::Ratio(Surd::new(center.clone(), half.clone(), sq.clone())));
                    pts.push(ProjPoint::Ratio(Surd::new(center, -half, sq)));
                }
            }
        }
        pts.sort();
        pts.dedup();
        Some(pts)
    }
}

impl fmt::Display for ParamQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(&self.a, "cl^2"), (&self.b, "cl*cs"), (&self.d, "cs^2")];
        let mut first = true;
        for (c, m) in terms {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `rational + coeff * sqrt(radicand)` with a squarefree radicand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    rational: Rat,
    coeff: Rat,
    radicand: BigInt,
}

impl Surd {
    pub fn new(rational: Rat, coeff: Rat, radicand: BigInt) -> Self {
        if coeff.is_zero() || radicand.is_zero() {
            return Surd::rational(rational);
        }
        let (f, d) = squarefree_split(&radicand);
        if d.is_one() {
            return Surd::rational(rational + coeff * Rat::from_integer(f));
        }
        Surd { rational, coeff: coeff * Rat::from_integer(f), radicand: d }
    }

    pub fn rational(r: Rat) -> Self {
        Surd { rational: r, coeff: Rat::zero(), radicand: BigInt::one() }
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.is_rational() || self.radicand.is_positive()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.rational)
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn rational_part(&self) -> &Rat {
        &self.rational
    }

    pub fn surd_coeff(&self) -> &Rat {
        &self.coeff
    }

    /// `sqrt(-1)` times `sign`.
    pub fn imaginary_unit(sign: i64) -> Self {
        Surd::new(Rat::zero(), Rat::from_integer(BigInt::from(sign)), BigInt::from(-1))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.radicand
            .cmp(&other.radicand)
            .then_with(|| self.rational.cmp(&other.rational))
            .then_with(|| self.coeff.cmp(&other.coeff))
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", format_rat(&self.rational));
        }
        let root = format!("sqrt({})", self.radicand);
        let mag = self.coeff.abs();
        let surd = if mag.is_one() { root } else { format!("{}*{}", format_rat(&mag), root) };
        if self.rational.is_zero() {
            if self.coeff.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{surd}")
        } else {
            let sign = if self.coeff.is_negative() { "-" } else { "+" };
            write!(f, "{} {} {}", format_rat(&self.rational), sign, surd)
        }
    }
}

/// A point of the projective parameter line `(c_l : c_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjPoint {
    /// `c_s / c_l` equals the given number.
    Ratio(Surd),
    /// `c_l = 0`.
    ClZero,
}

impl ProjPoint {
    pub fn ratio(r: Rat) -> Self {
        ProjPoint::Ratio(Surd::rational(r))
    }

    pub fn is_real(&self) -> bool {
        match self {
            ProjPoint::Ratio(s) => s.is_real(),
            ProjPoint::ClZero => true,
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::ClZero => write!(f, "cl=0"),
            ProjPoint::Ratio(s) if s.as_rational().is_some_and(|r| r.is_zero()) => write!(f, "cs=0"),
            ProjPoint::Ratio(s) => write!(f, "cs/cl={s}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    All,
    None,
    RatioSet,
    ClZero,
    CsZero,
}

/// Exact solution set of a system of parameter conditions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConstraintSet {
    All,
    /// Sorted, deduplicated; empty means no solutions.
    Points(Vec<ProjPoint>),
}

impl ConstraintSet {
    pub fn none() -> Self {
        ConstraintSet::Points(Vec::new())
    }

    pub fn points(mut pts: Vec<ProjPoint>) -> Self {
        pts.sort();
        pts.dedup();
        ConstraintSet::Points(pts)
    }

    pub fn kind(&self) -> ConstraintKind {
        match self {
            ConstraintSet::All => ConstraintKind::All,
            ConstraintSet::Points(p) if p.is_empty() => ConstraintKind::None,
            ConstraintSet::Points(p) if p == &[ProjPoint::ClZero] => ConstraintKind::ClZero,
            ConstraintSet::Points(p) if p == &[ProjPoint::ratio(Rat::zero())] => ConstraintKind::CsZero,
            ConstraintSet::Points(_) => ConstraintKind::RatioSet,
        }
    }

    pub fn is_none(&self) -> bool {
        self.kind() == ConstraintKind::None
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        match self {
            ConstraintSet::All => true,
            ConstraintSet::Points(pts) => pts.contains(p),
        }
    }

    pub fn intersect(&self, other: &ConstraintSet) -> ConstraintSet {
        match (self, other) {
            (ConstraintSet::All, x) | (x, ConstraintSet::All) => x.clone(),
            (ConstraintSet::Points(a), ConstraintSet::Points(b)) => {
                ConstraintSet::points(a.iter().filter(|p| b.contains(p)).cloned().collect())
            }
        }
    }

    /// Drops non-real points.
    pub fn real_part(&self) -> ConstraintSet {
        match self {
            ConstraintSet::All => ConstraintSet::All,
            ConstraintSet::Points(p) => ConstraintSet::points(p.iter().filter(|x| x.is_real()).cloned().collect()),
        }
    }
}

impl fmt::Display for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintSet::All => write!(f, "all parameters"),
            ConstraintSet::Points(p) if p.is_empty() => write!(f, "none"),
            ConstraintSet::Points(p) => {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(" | "))
            }
        }
    }
}

/// Common zero set of two quadratics on the projective `(c_l : c_s)` line.
pub fn quad_solve(q1: &ParamQuad, q2: &ParamQuad) -> ConstraintSet {
    match (q1.zero_locus(), q2.zero_locus()) {
        (None, None) => ConstraintSet::All,
        (Some(p), None) | (None, Some(p)) => ConstraintSet::points(p),
        (Some(a), Some(b)) => ConstraintSet::points(a.into_iter().filter(|p| b.contains(p)).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use proptest::prelude::*;

    #[test]
    fn sum_of_squares_gives_imaginary_ratios() {
        let q = ParamQuad::new(1, 0, 1);
        let s = quad_solve(&q, &q);
        assert_eq!(s.kind(), ConstraintKind::RatioSet);
        assert_eq!(
            s,
            ConstraintSet::points(vec![
                ProjPoint::Ratio(Surd::imaginary_unit(1)),
                ProjPoint::Ratio(Surd::imaginary_unit(-1)),
            ])
        );
        assert_eq!(s.to_string(), "cs/cl=-sqrt(-1) | cs/cl=sqrt(-1)");
    }

    #[test]
    fn zero_quads_give_all() {
        assert_eq!(quad_solve(&ParamQuad::zero(), &ParamQuad::zero()), ConstraintSet::All);
    }

    #[test]
    fn common_factor_cl() {
        let s = quad_solve(&ParamQuad::new(0, 1, 0), &ParamQuad::new(1, 0, 0));
        assert_eq!(s.kind(), ConstraintKind::ClZero);
        let s = quad_solve(&ParamQuad::new(0, 1, 0), &ParamQuad::new(0, 0, 1));
        assert_eq!(s.kind(), ConstraintKind::CsZero);
    }

    #[test]
    fn double_root_reported_once() {
        // (c_s - c_l)^2
        let q = ParamQuad::new(1, -2, 1);
        assert_eq!(q.zero_locus().unwrap(), vec![ProjPoint::ratio(int(1))]);
    }

    #[test]
    fn real_surds() {
        // c_s^2 - 2 c_l^2
        let q = ParamQuad::new(-2, 0, 1);
        let pts = q.zero_locus().unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().all(|p| p.is_real()));
        let shown: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["cs/cl=-sqrt(2)", "cs/cl=sqrt(2)"]);
    }

    #[test]
    fn canonical_form() {
        assert_eq!(ParamQuad::new(-4, 2, 0).canonical(), ParamQuad::new(2, -1, 0));
    }

    proptest! {
        #[test]
        fn solve_symmetric_and_scale_invariant(
            a in -6i64..6, b in -6i64..6, d in -6i64..6,
            e in -6i64..6, f in -6i64..6, g in -6i64..6,
            k in prop_oneof![-5i64..-1, 1i64..5],
        ) {
            let q1 = ParamQuad::new(a, b, d);
            let q2 = ParamQuad::new(e, f, g);
            let s = quad_solve(&q1, &q2);
            prop_assert_eq!(&s, &quad_solve(&q2, &q1));
            prop_assert_eq!(&s, &quad_solve(&q1.scaled(&BigInt::from(k)), &q2));
            prop_assert_eq!(&s, &quad_solve(&q1, &q2.scaled(&BigInt::from(k))));
        }

        #[test]
        fn rational_roots_vanish(a in -6i64..6, b in -6i64..6, d in -6i64..6) {
            let q = ParamQuad::new(a, b, d);
            if let Some(pts) = q.zero_locus() {
                for p in pts {
                    match p {
                        ProjPoint::ClZero => prop_assert!(q.eval(&int(0), &int(1)).is_zero()),
                        ProjPoint::Ratio(s) => {
                            if let Some(r) = s.as_rational() {
                                prop_assert!(q.eval(&int(1), r).is_zero());
                            }
                        }
                    }
                }
            }
        }
    }
}
