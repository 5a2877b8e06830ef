//! Irreducible Weyl group representations that extend to modules of the
//! rational Cherednik algebra at `t = 0` on which `h` and `h*` act by zero.
//!
//! Such an extension of `sigma` exists exactly when `sigma([y, x]) = 0` for
//! all `y`, `x`, where `[y, x] = -sum_{a > 0} c_a <y, a> <a^v, x> s_a`. For the
//! test vectors of each type this reduces to two commutators, and for real
//! parameters `sigma([y, x]) = 0` iff `chi_sigma([y, x]^2) = 0`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::algebra::{
    dot, format_rat, int, quad_solve, rat, Bipartition, ConstraintSet, ParamQuad, Partition, ProjPoint, QMatrix, Rat,
    Surd,
};
use crate::chars::{n_invariant, CharacterTable, IrrepLabel, NForm, TableProvider};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Rank2Label, RootSystem};
use crate::weyl::{EnumeratedGroup, WeylGroup, DEFAULT_ENUMERATION_CAP};

/// Which parameter multiplies a term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    Long,
    Short,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Param::Long => "cl",
            Param::Short => "cs",
        })
    }
}

/// One term `coeff * c_param * s_root` of a commutator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorTerm {
    /// Index of a positive root.
    pub root: usize,
    pub coeff: Rat,
    pub param: Param,
}

/// `[y, x]` as a formal combination of reflections; zero terms are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorSum {
    pub terms: Vec<CommutatorTerm>,
}

impl CommutatorSum {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn param_of(rs: &RootSystem, a: usize) -> Param {
    if rs.is_long(a) || rs.cartan_type().is_simply_laced() {
        Param::Long
    } else {
        Param::Short
    }
}

/// `[y, x] = -sum_{a > 0} c_a <y, a> <a^v, x> s_a`.
pub fn commutator_sum(rs: &RootSystem, y: &[Rat], x: &[Rat]) -> CommutatorSum {
    let terms = (0..rs.num_positive())
        .filter_map(|a| {
            let c = -(dot(y, rs.root(a)) * dot(rs.coroot(a), x));
            (!c.is_zero()).then(|| CommutatorTerm { root: a, coeff: c, param: param_of(rs, a) })
        })
        .collect();
    CommutatorSum { terms }
}

/// Both commutators `[y, x1]`, `[y, x2]` for the type's test vectors.
pub fn test_commutators(rs: &RootSystem) -> [CommutatorSum; 2] {
    let tv = rs.test_vectors();
    [commutator_sum(rs, &tv.y, &tv.x1), commutator_sum(rs, &tv.y, &tv.x2)]
}

/// One class term of a grouped square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupedTerm {
    pub class: usize,
    pub name: String,
    pub coeff: ParamQuad,
}

/// `[y, x]^2 = scale * sum coeff * w_class`, with primitive integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupedSquare {
    pub scale: Rat,
    pub terms: Vec<GroupedTerm>,
    pub simply_laced: bool,
}

impl GroupedSquare {
    pub fn coeff(&self, class_name: &str) -> Option<&ParamQuad> {
        self.terms.iter().find(|t| t.name == class_name).map(|t| &t.coeff)
    }
}

impl fmt::Display for GroupedSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let w = if t.name == "1" { "1".to_string() } else { format!("w_{{{}}}", t.name) };
                if self.simply_laced {
                    match (t.coeff.a.is_one(), t.name == "1") {
                        (true, _) => w,
                        (false, true) => t.coeff.a.to_string(),
                        (false, false) => format!("{} {w}", t.coeff.a),
                    }
                } else {
                    format!("({}) {w}", t.coeff)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn quad_of(p: Param, q: Param, c: Rat) -> [Rat; 3] {
    let z = Rat::zero();
    match (p, q) {
        (Param::Long, Param::Long) => [c, z.clone(), z],
        (Param::Short, Param::Short) => [z.clone(), z, c],
        _ => [z.clone(), c, z],
    }
}

/// Squares a commutator and groups the products `s_a s_b` by conjugacy class.
///
/// Pairs are grouped by their rank-2 subsystem and root lengths; each group is
/// located in the table once through a representative product.
pub fn square_and_group(table: &CharacterTable, cs: &CommutatorSum) -> Result<GroupedSquare> {
    let g = table.group();
    let rs = g.root_system();
    let mut by_shape: HashMap<(Rank2Label, bool, bool), usize> = HashMap::new();
    let mut acc: BTreeMap<usize, [Rat; 3]> = BTreeMap::new();
    let mut refl: HashMap<usize, crate::weyl::Element> = HashMap::new();
    for t in &cs.terms {
        refl.entry(t.root).or_insert_with(|| g.reflection(t.root));
    }
    for s in &cs.terms {
        for t in &cs.terms {
            let class = if s.root == t.root {
                0
            } else {
                let shape = (rs.rank2_label(s.root, t.root)?, rs.is_long(s.root), rs.is_long(t.root));
                match by_shape.get(&shape) {
                    Some(&c) => c,
                    None => {
                        let c = table.class_of(&refl[&s.root].compose(&refl[&t.root]))?;
                        by_shape.insert(shape, c);
                        c
                    }
                }
            };
            let q = quad_of(s.param, t.param, &s.coeff * &t.coeff);
            let e = acc.entry(class).or_insert_with(|| [Rat::zero(), Rat::zero(), Rat::zero()]);
            for k in 0..3 {
                e[k] += &q[k];
            }
        }
    }
    acc.retain(|_, q| q.iter().any(|x| !x.is_zero()));
    // common denominator, then common content
    let mut den = BigInt::one();
    for q in acc.values() {
        for x in q {
            den = den.lcm(x.denom());
        }
    }
    let mut ints: Vec<(usize, [BigInt; 3])> =
        acc.iter().map(|(&c, q)| (c, q.clone().map(|x| (x * Rat::from_integer(den.clone())).to_integer()))).collect();
    let mut content = BigInt::zero();
    for (_, q) in &ints {
        for x in q {
            content = content.gcd(x);
        }
    }
    if content.is_zero() {
        content = BigInt::one();
    }
    // positive identity coefficient
    let sign = match ints.first() {
        Some((_, q)) if q.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) => -BigInt::one(),
        _ => BigInt::one(),
    };
    content *= &sign;
    for (_, q) in ints.iter_mut() {
        for x in q.iter_mut() {
            *x = &*x / &content;
        }
    }
    let terms = ints
        .into_iter()
        .map(|(c, [a, b, d])| GroupedTerm {
            class: c,
            name: table.classes()[c].name.clone(),
            coeff: ParamQuad::new(a, b, d),
        })
        .collect();
    Ok(GroupedSquare { scale: Rat::new(content, den), terms, simply_laced: table.cartan_type().is_simply_laced() })
}

/// `chi_sigma` of a grouped square, as a quadratic in the parameters.
pub fn evaluate_square(table: &CharacterTable, sigma: usize, gs: &GroupedSquare) -> ParamQuad {
    let vals = &table.irrep(sigma).values;
    gs.terms.iter().fold(ParamQuad::zero(), |acc, t| acc.add(&t.coeff.scaled(&BigInt::from(vals[t.class]))))
}

/// In simply-laced types the single parameter is `c_l`; `c_l = 0` is the
/// degenerate algebra and is dropped.
fn drop_degenerate(ty: CartanType, s: ConstraintSet) -> ConstraintSet {
    match s {
        ConstraintSet::Points(p) if ty.is_simply_laced() => {
            ConstraintSet::points(p.into_iter().filter(|x| *x != ProjPoint::ClZero).collect())
        }
        other => other,
    }
}

/// Parameters at which `chi_sigma([y, x_i]^2) = 0` for both commutators.
pub fn vanishing_constraints(
    table: &CharacterTable,
    sigma: usize,
    gs1: &GroupedSquare,
    gs2: &GroupedSquare,
) -> ConstraintSet {
    let q1 = evaluate_square(table, sigma, gs1);
    let q2 = evaluate_square(table, sigma, gs2);
    drop_degenerate(table.cartan_type(), quad_solve(&q1, &q2))
}

/// Irreps with a nonempty parameter locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub cartan_type: CartanType,
    pub entries: Vec<(IrrepLabel, ConstraintSet)>,
}

impl ClassificationResult {
    /// Labels admissible at the given parameter point.
    pub fn at(&self, p: &ProjPoint) -> Vec<IrrepLabel> {
        self.entries.iter().filter(|(_, s)| s.contains(p)).map(|(l, _)| l.clone()).collect()
    }

    pub fn labels(&self) -> Vec<IrrepLabel> {
        self.entries.iter().map(|(l, _)| l.clone()).collect()
    }

    /// Entries grouped by constraint set, in order of first appearance.
    pub fn grouped(&self) -> Vec<(ConstraintSet, Vec<IrrepLabel>)> {
        let mut out: Vec<(ConstraintSet, Vec<IrrepLabel>)> = Vec::new();
        for (l, s) in &self.entries {
            match out.iter_mut().find(|(t, _)| t == s) {
                Some((_, v)) => v.push(l.clone()),
                None => out.push((s.clone(), vec![l.clone()])),
            }
        }
        out
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "{}: none", self.cartan_type);
        }
        for (s, labels) in self.grouped() {
            let l: Vec<String> = labels.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}: {}  [{}]", self.cartan_type, l.join(", "), s)?;
        }
        Ok(())
    }
}

/// Fails unless the reduction hypotheses hold for the type's test vectors.
pub fn assert_reduction(g: &WeylGroup) -> Result<()> {
    let rep = g.reduction_hypotheses(&g.root_system().test_vectors());
    if rep.holds() {
        Ok(())
    } else {
        Err(Error::ReductionFailed(format!("{}: {rep}", g.cartan_type())))
    }
}

/// The character criterion applied to every irrep of a table.
pub fn classify_table(table: &CharacterTable) -> Result<ClassificationResult> {
    assert_reduction(table.group())?;
    let [c1, c2] = test_commutators(table.group().root_system());
    let gs1 = square_and_group(table, &c1)?;
    let gs2 = square_and_group(table, &c2)?;
    let entries = (0..table.irreps().len())
        .map(|i| (table.label(i).clone(), vanishing_constraints(table, i, &gs1, &gs2)))
        .filter(|(_, s)| !s.is_none())
        .collect();
    Ok(ClassificationResult { cartan_type: table.cartan_type(), entries })
}

/// `B_n`: `(d^k) x (0)` and `(0) x (k^d)` at `c_s / c_l = k - d`;
/// `D_n`: `(d^d) x (0)` for `n = d^2`, all parameters; type `A`: none.
pub fn rectangle_rule(ty: CartanType) -> Result<ClassificationResult> {
    let mut entries = Vec::new();
    match ty {
        CartanType::A(_) => {}
        CartanType::B(n) => {
            for d in 1..=n {
                if n % d != 0 {
                    continue;
                }
                let k = n / d;
                let lam = Partition::rectangle(k, d);
                let p = ProjPoint::ratio(int(k as i64 - d as i64));
                let set = ConstraintSet::points(vec![p]);
                entries.push((IrrepLabel::Bipartition(Bipartition::new(lam.clone(), Partition::empty())), set.clone()));
                entries.push((IrrepLabel::Bipartition(Bipartition::new(Partition::empty(), lam.transpose())), set));
            }
        }
        CartanType::D(n) => {
            let d = (1..=n).find(|d| d * d >= n).unwrap_or(1);
            if d * d == n {
                let lam = Partition::rectangle(d, d);
                entries.push((IrrepLabel::Bipartition(Bipartition::new(lam, Partition::empty())), ConstraintSet::All));
            }
        }
        _ => return Err(Error::UnsupportedType(format!("{ty} has no rectangle rule"))),
    }
    Ok(ClassificationResult { cartan_type: ty, entries })
}

/// Classification for a type: the character criterion for exceptional types,
/// the rectangle rule for classical ones.
pub fn classify(ty: CartanType, provider: &TableProvider) -> Result<ClassificationResult> {
    if ty.is_exceptional() {
        classify_table(&provider.table(ty)?)
    } else {
        assert_reduction(&WeylGroup::of_type(ty)?)?;
        rectangle_rule(ty)
    }
}

/// Labels admissible at `(c_l : c_s)`.
pub fn classify_at(ty: CartanType, provider: &TableProvider, p: &ProjPoint) -> Result<Vec<IrrepLabel>> {
    Ok(classify(ty, provider)?.at(p))
}

/// Whether `N_c(sigma)` vanishes at a parameter point.
pub fn n_vanishes_at(nf: &NForm, p: &ProjPoint) -> bool {
    match p {
        ProjPoint::ClZero => nf.short.is_zero(),
        ProjPoint::Ratio(s) => {
            // long + short * (r + q sqrt(D))
            let r = s.rational_part();
            let q = s.surd_coeff();
            (&nf.long + &nf.short * r).is_zero() && (&nf.short * q).is_zero()
        }
    }
}

/// `N_c(sigma) = 0` on every point (or identically, for `All`) of the locus.
pub fn n_vanishes_on(table: &CharacterTable, sigma: usize, set: &ConstraintSet) -> bool {
    let nf = n_invariant(table, sigma);
    match set {
        ConstraintSet::All => nf.is_zero(),
        ConstraintSet::Points(p) => p.iter().all(|x| n_vanishes_at(&nf, x)),
    }
}

/// The direct criterion `sigma([y, x]) = 0`, decided in the group algebra.
///
/// `sigma(z) = 0` iff `e_sigma z = 0` for the central idempotent
/// `e_sigma = chi(1)/|W| sum_g chi(g^-1) g`, i.e. iff
/// `sum_a coeff_a c_a chi(s_a h) = 0` for every `h`. Each `h` gives a linear
/// form in `(c_l, c_s)`, so the locus is all, one rational point, or empty.
pub struct MatrixCriterion {
    eg: EnumeratedGroup,
    /// Table class of each enumerated element.
    class_of: Vec<usize>,
}

impl MatrixCriterion {
    pub fn new(table: &CharacterTable) -> Result<Self> {
        let eg = table.group().enumerate(DEFAULT_ENUMERATION_CAP.min(10_000))?;
        let cc = eg.conjugacy_classes();
        let by_name: HashMap<&str, usize> =
            table.classes().iter().enumerate().map(|(i, c)| (c.name.as_str(), i)).collect();
        let map: Vec<usize> = cc
            .classes
            .iter()
            .map(|c| by_name.get(c.name.as_str()).copied().ok_or_else(|| Error::UnknownClass(c.name.clone())))
            .collect::<Result<_>>()?;
        let class_of = cc.class_of.iter().map(|&c| map[c as usize]).collect();
        Ok(MatrixCriterion { eg, class_of })
    }

    /// Common zero locus of the linear forms of one commutator.
    pub fn locus(&self, table: &CharacterTable, sigma: usize, cs: &CommutatorSum) -> ConstraintSet {
        let g = self.eg.group();
        let vals = &table.irrep(sigma).values;
        let refl: Vec<_> = cs.terms.iter().map(|t| g.reflection(t.root)).collect();
        let mut forms: Vec<(Rat, Rat)> = Vec::new();
        for h in self.eg.elements() {
            let (mut a, mut b) = (Rat::zero(), Rat::zero());
            for (t, s) in cs.terms.iter().zip(&refl) {
                let k = self.class_of[self.eg.index_of(&s.compose(h)).expect("group element")];
                let v = &t.coeff * Rat::from_integer(vals[k].into());
                match t.param {
                    Param::Long => a += v,
                    Param::Short => b += v,
                }
            }
            if !(a.is_zero() && b.is_zero()) {
                forms.push((a, b));
            }
        }
        let Some((a0, b0)) = forms.first().cloned() else {
            return ConstraintSet::All;
        };
        // a0 cl + b0 cs = 0 must be the only condition
        if forms.iter().any(|(a, b)| a * &b0 - b * &a0 != Rat::zero()) {
            return ConstraintSet::none();
        }
        let p = if b0.is_zero() { ProjPoint::ClZero } else { ProjPoint::ratio(-a0 / b0) };
        drop_degenerate(table.cartan_type(), ConstraintSet::points(vec![p]))
    }

    /// Locus where both test commutators act by zero.
    pub fn constraints(&self, table: &CharacterTable, sigma: usize) -> ConstraintSet {
        let [c1, c2] = test_commutators(self.eg.group().root_system());
        self.locus(table, sigma, &c1).intersect(&self.locus(table, sigma, &c2))
    }
}

/// Standard Young tableaux of shape `lam`, as row index of each entry.
fn standard_tableaux(lam: &Partition) -> Vec<Vec<usize>> {
    fn rec(lam: &Partition, fill: &mut Vec<usize>, rows: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if fill.len() == n {
            out.push(fill.clone());
            return;
        }
        for r in 0..lam.len() {
            let ok = rows[r] < lam.part(r) && (r == 0 || rows[r - 1] > rows[r]);
            if ok {
                rows[r] += 1;
                fill.push(r);
                rec(lam, fill, rows, n, out);
                fill.pop();
                rows[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(lam, &mut Vec::new(), &mut vec![0; lam.len()], lam.size(), &mut out);
    out
}

/// Matrices of the adjacent transpositions `s_1, ..., s_{n-1}` in Young's
/// seminormal form of the irrep `lam` of `S_n`.
pub fn seminormal_generators(lam: &Partition) -> Vec<QMatrix> {
    let tabs = standard_tableaux(lam);
    let index: HashMap<Vec<usize>, usize> = tabs.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let n = lam.size();
    let dim = tabs.len();
    // content (column - row) of each entry
    let contents: Vec<Vec<i64>> = tabs
        .iter()
        .map(|t| {
            let mut rows = vec![0i64; lam.len()];
            t.iter()
                .map(|&r| {
                    let c = rows[r] - r as i64;
                    rows[r] += 1;
                    c
                })
                .collect()
        })
        .collect();
    (0..n.saturating_sub(1))
        .map(|k| {
            let mut m = QMatrix::zeros(dim, dim);
            for (i, t) in tabs.iter().enumerate() {
                let r = contents[i][k + 1] - contents[i][k];
                let inv = rat(1, r);
                m[(i, i)] = inv.clone();
                if r.abs() == 1 {
                    continue;
                }
                let mut u = t.clone();
                u.swap(k, k + 1);
                let j = index[&u];
                // the tableau with k in the higher row carries the unit entry
                m[(j, i)] = if t[k] < t[k + 1] { int(1) } else { int(1) - &inv * &inv };
            }
            m
        })
        .collect()
}

/// `sum_{i=2}^n rho_lam(s_{1 i})` in the seminormal basis.
fn seminormal_transposition_sum(lam: &Partition) -> QMatrix {
    let n = lam.size();
    let gens = seminormal_generators(lam);
    let dim = standard_tableaux(lam).len();
    let mut total = QMatrix::zeros(dim, dim);
    if n < 2 {
        return total;
    }
    // s_{1,i+1} = s_i s_{1,i} s_i
    let mut t = gens[0].clone();
    total = &total + &t;
    for i in 1..n - 1 {
        t = &(&gens[i] * &t) * &gens[i];
        total = &total + &t;
    }
    total
}

/// Whether `sum_{i=2}^n rho_lam(s_{1 i}) + c Id` is the zero matrix.
pub fn seminormal_oracle(lam: &Partition, c: &Rat) -> bool {
    if lam.size() < 2 {
        return false;
    }
    let s = seminormal_transposition_sum(lam);
    (&s + &QMatrix::identity(s.rows()).scale(c)).is_zero()
}

/// The unique `c` with `sum_{i=2}^n rho_lam(s_{1 i}) + c Id = 0`, if any.
pub fn seminormal_scalar(lam: &Partition) -> Option<Rat> {
    if lam.size() < 2 {
        return None;
    }
    let s = seminormal_transposition_sum(lam);
    let c = -s[(0, 0)].clone();
    (&s + &QMatrix::identity(s.rows()).scale(&c)).is_zero().then_some(c)
}

/// Formats a constraint point list for reports.
pub fn describe_point(p: &ProjPoint) -> String {
    match p {
        ProjPoint::Ratio(s) => match s.as_rational() {
            Some(r) => format!("cs/cl={}", format_rat(r)),
            None => p.to_string(),
        },
        ProjPoint::ClZero => p.to_string(),
    }
}

/// `c_s / c_l = +-sqrt(-1)`.
pub fn imaginary_points() -> ConstraintSet {
    ConstraintSet::points(vec![ProjPoint::Ratio(Surd::imaginary_unit(1)), ProjPoint::Ratio(Surd::imaginary_unit(-1))])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{classical_table, computed_table, sn_character};

    #[test]
    fn term_counts_small() {
        for (ty, want) in [(CartanType::G2, [5, 4]), (CartanType::F4, [15, 9]), (CartanType::E6, [21, 12])] {
            let rs = RootSystem::new(ty).unwrap();
            let [a, b] = test_commutators(&rs);
            assert_eq!([a.len(), b.len()], want, "{ty}");
        }
    }

    #[test]
    fn g2_squares() {
        let t = computed_table(CartanType::G2).unwrap();
        let [c1, c2] = test_commutators(t.group().root_system());
        let s1 = square_and_group(&t, &c1).unwrap();
        assert_eq!(s1.coeff("1"), Some(&ParamQuad::new(3, 0, 3)));
        assert_eq!(s1.coeff("A1+~A1"), Some(&ParamQuad::new(0, 2, 0)));
        assert_eq!(s1.coeff("A2"), Some(&ParamQuad::new(3, 0, 3)));
        assert_eq!(s1.coeff("G2"), Some(&ParamQuad::new(0, 10, 0)));
        assert_eq!(s1.terms.len(), 4);
        let s2 = square_and_group(&t, &c2).unwrap();
        assert_eq!(s2.coeff("1"), Some(&ParamQuad::new(5, 0, 5)));
        assert_eq!(s2.coeff("G2"), Some(&ParamQuad::new(0, 16, 0)));
    }

    #[test]
    fn seminormal_form_is_a_representation() {
        for lam in Partition::all(5) {
            let gens = seminormal_generators(&lam);
            let dim = standard_tableaux(&lam).len();
            let id = QMatrix::identity(dim);
            for (i, s) in gens.iter().enumerate() {
                assert_eq!(&(s * s), &id);
                if i + 1 < gens.len() {
                    let a = &(&(s * &gens[i + 1]) * s);
                    let b = &(&(&gens[i + 1] * s) * &gens[i + 1]);
                    assert_eq!(a, b, "{lam} braid {i}");
                }
            }
            // trace of s_1 is the character at a transposition
            let mu = Partition::new(std::iter::once(2).chain(std::iter::repeat_n(1, 3)).collect());
            assert_eq!(gens[0].trace(), int(sn_character(&lam, &mu).unwrap()));
        }
    }

    #[test]
    fn seminormal_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec());
        assert!(seminormal_oracle(&p(&[2, 2]), &int(0)));
        for c in -4..=4 {
            assert!(!seminormal_oracle(&p(&[2, 1]), &int(c)));
        }
        assert!(seminormal_oracle(&p(&[4]), &int(-3)));
    }

    #[test]
    fn criteria_agree_on_real_parameters() {
        for ty in [CartanType::G2, CartanType::B(3), CartanType::D(4), CartanType::A(3)] {
            let t = if ty.is_exceptional() { computed_table(ty).unwrap() } else { classical_table(ty).unwrap() };
            let m = MatrixCriterion::new(&t).unwrap();
            let [c1, c2] = test_commutators(t.group().root_system());
            let (g1, g2) = (square_and_group(&t, &c1).unwrap(), square_and_group(&t, &c2).unwrap());
            for i in 0..t.irreps().len() {
                let by_char = vanishing_constraints(&t, i, &g1, &g2).real_part();
                assert_eq!(by_char, m.constraints(&t, i), "{ty} {}", t.label(i));
            }
        }
    }

    /// Non-real points of the character criterion are not part of the rule.
    #[test]
    fn classical_rule_matches_character_criterion() {
        let types = [2, 3, 4, 5].map(CartanType::B).into_iter().chain([CartanType::D(4)]);
        for ty in types {
            let t = classical_table(ty).unwrap();
            let mut a: Vec<_> = classify_table(&t)
                .unwrap()
                .entries
                .into_iter()
                .map(|(l, s)| (l.to_string(), s.real_part()))
                .filter(|(_, s)| !s.is_none())
                .collect();
            let mut b: Vec<_> =
                rectangle_rule(ty).unwrap().entries.into_iter().map(|(l, s)| (l.to_string(), s)).collect();
            a.sort_by(|x, y| x.0.cmp(&y.0));
            b.sort_by(|x, y| x.0.cmp(&y.0));
            assert_eq!(a, b, "{ty}");
        }
    }
}
