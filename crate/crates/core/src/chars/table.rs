//! Character tables with exact integer values and their validation.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num::Zero;

use crate::algebra::{Bipartition, Partition, Poly, Rat};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Rank2Label};
use crate::weyl::{to_signed_perm, ClassInfo, ClassKey, Element, WeylGroup};

use super::bn::{d_class_sign, SignedCycleType};

/// Label of an irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrepLabel {
    /// Type A: a partition of `n`.
    Partition(Partition),
    /// Types B and D (non-split).
    Bipartition(Bipartition),
    /// Type D: `(l) x (l)` with tag `I` (`true`) or `II` (`false`).
    Split(Partition, bool),
    /// Exceptional types.
    Named(String),
}

impl IrrepLabel {
    pub fn named(s: &str) -> IrrepLabel {
        IrrepLabel::Named(s.to_string())
    }

    /// The bipartition underlying a classical B/D label.
    pub fn bipartition(&self) -> Option<Bipartition> {
        match self {
            IrrepLabel::Bipartition(b) => Some(b.clone()),
            IrrepLabel::Split(l, _) => Some(Bipartition::new(l.clone(), l.clone())),
            _ => None,
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Partition(p) => write!(f, "{p}"),
            IrrepLabel::Bipartition(b) => write!(f, "{b}"),
            IrrepLabel::Split(l, first) => write!(f, "{l}x{l}_{}", if *first { "I" } else { "II" }),
            IrrepLabel::Named(s) => write!(f, "{s}"),
        }
    }
}

/// Canonical form for comparing user-supplied labels.
pub fn normalize_label(s: &str) -> String {
    let mut t: String = s
        .replace('φ', "phi")
        .replace('′', "'")
        .replace('″', "''")
        .replace('×', "x")
        .replace('ι', "I")
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    if t.to_ascii_lowercase().starts_with("phi") {
        let rest: String = t[3..].chars().filter(|c| !matches!(c, '{' | '}' | '_')).collect();
        t = format!("phi{rest}");
    }
    t
}

/// An irreducible character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    pub label: IrrepLabel,
    /// Alternative names accepted on lookup (for example Carter's `phi{d,b}`).
    pub aliases: Vec<String>,
    pub values: Vec<i64>,
}

impl Irrep {
    pub fn new(label: IrrepLabel, values: Vec<i64>) -> Self {
        Irrep { label, aliases: Vec::new(), values }
    }

    pub fn dim(&self) -> i64 {
        self.values[0]
    }
}

/// Exact class function on the classes of a fixed table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Rat>,
}

impl ClassFunction {
    pub fn from_ints(v: &[i64]) -> Self {
        ClassFunction { values: v.iter().map(|&x| Rat::from_integer(x.into())).collect() }
    }

    pub fn product(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() }
    }

    pub fn sum(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }
}

/// How arbitrary group elements are assigned to classes.
#[derive(Clone, Debug)]
enum Locator {
    /// Signed cycle type, plus the `W(D_n)` class sign on split classes.
    Classical(HashMap<(SignedCycleType, i64), usize>),
    /// Class fingerprints; keys shared by several classes are ambiguous.
    Keyed(HashMap<ClassKey, Vec<usize>>),
}

/// Character table of a Weyl group.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: WeylGroup,
    classes: Vec<ClassInfo>,
    polys: Vec<Poly>,
    reflections: Vec<Option<bool>>,
    irreps: Vec<Irrep>,
    locator: Locator,
}

/// Signed cycle type of a classical element together with its D class sign.
pub(crate) fn classical_key(g: &WeylGroup, e: &Element) -> (SignedCycleType, i64) {
    let sp = to_signed_perm(g, e).expect("classical element");
    let (pos, neg) = crate::weyl::signed_cycle_type(&sp);
    let sct = SignedCycleType::new(Partition::new(pos), Partition::new(neg));
    let sign = if matches!(g.cartan_type(), CartanType::D(_)) && sct.splits_in_d() { d_class_sign(&sp) } else { 1 };
    (sct, sign)
}

impl CharacterTable {
    /// Assembles a table; derived class data is computed from the words.
    pub fn new(group: WeylGroup, classes: Vec<ClassInfo>, irreps: Vec<Irrep>) -> Result<CharacterTable> {
        let mut polys = Vec::with_capacity(classes.len());
        let mut reflections = Vec::with_capacity(classes.len());
        let rs = group.root_system();
        let refl_poly = {
            let mut p = Poly::from_ints(&[1, 1]);
            for _ in 1..group.rank() {
                p = &p * &Poly::from_ints(&[-1, 1]);
            }
            p
        };
        let classical = !group.cartan_type().is_exceptional();
        let mut classical_map = HashMap::new();
        let mut keyed: HashMap<ClassKey, Vec<usize>> = HashMap::new();
        for (c, info) in classes.iter().enumerate() {
            let e = group.from_word(&info.word)?;
            let p = group.char_poly(&e);
            let refl = if p == refl_poly {
                let a = (0..rs.num_positive())
                    .find(|&a| e.image(a) == rs.negative(a))
                    .ok_or_else(|| Error::Validation(format!("class {} has no negated root", info.name)))?;
                Some(rs.is_long(a) || group.cartan_type().is_simply_laced())
            } else {
                None
            };
            polys.push(p);
            reflections.push(refl);
            if classical {
                classical_map.insert(classical_key(&group, &e), c);
            } else {
                keyed.entry(group.class_key(&e)).or_default().push(c);
            }
        }
        let locator = if classical { Locator::Classical(classical_map) } else { Locator::Keyed(keyed) };
        Ok(CharacterTable { group, classes, polys, reflections, irreps, locator })
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn cartan_type(&self) -> CartanType {
        self.group.cartan_type()
    }

    pub fn order(&self) -> u64 {
        self.group.order() as u64
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn irrep(&self, i: usize) -> &Irrep {
        &self.irreps[i]
    }

    /// Characteristic polynomial of class `c` on the reflection representation.
    pub fn class_poly(&self, c: usize) -> &Poly {
        &self.polys[c]
    }

    /// `Some(is_long)` for classes of reflections.
    pub fn reflection_class(&self, c: usize) -> Option<bool> {
        self.reflections[c]
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub(crate) fn set_irreps(&mut self, irreps: Vec<Irrep>) {
        self.irreps = irreps;
    }

    /// Index of the irrep with the given label or alias.
    pub fn find(&self, label: &str) -> Result<usize> {
        let want = normalize_label(label);
        let lower = want.to_ascii_lowercase();
        for (i, ir) in self.irreps.iter().enumerate() {
            if normalize_label(&ir.label.to_string()) == want || ir.aliases.iter().any(|a| normalize_label(a) == want) {
                return Ok(i);
            }
        }
        if lower == "trivial" || lower == "triv" {
            return self.trivial_index().ok_or_else(|| Error::UnknownIrrep(label.into()));
        }
        if lower == "sgn" || lower == "sign" {
            return self.sign_index().ok_or_else(|| Error::UnknownIrrep(label.into()));
        }
        // structural comparison for partition-like labels
        let parsed = match self.cartan_type() {
            CartanType::A(_) => want.parse::<Partition>().ok().map(IrrepLabel::Partition),
            CartanType::B(_) => want.parse::<Bipartition>().ok().map(IrrepLabel::Bipartition),
            CartanType::D(_) => parse_d_label(&want),
            _ => None,
        };
        if let Some(p) = parsed {
            if let Some(i) = self.irreps.iter().position(|ir| ir.label == p) {
                return Ok(i);
            }
        }
        Err(Error::UnknownIrrep(label.into()))
    }

    pub fn label(&self, i: usize) -> &IrrepLabel {
        &self.irreps[i].label
    }

    pub fn trivial_index(&self) -> Option<usize> {
        self.irreps.iter().position(|ir| ir.values.iter().all(|&v| v == 1))
    }

    /// The sign character: `(-1)^length`, read off `det` on each class.
    pub fn sign_values(&self) -> Vec<i64> {
        self.polys
            .iter()
            .map(|p| {
                let r = self.group.rank();
                // det(w) = (-1)^r p(0)
                let d = p.coeff(0) * Rat::from_integer(if r.is_multiple_of(2) { 1 } else { -1 }.into());
                crate::algebra::to_i64(&d).expect("det is +-1")
            })
            .collect()
    }

    pub fn sign_index(&self) -> Option<usize> {
        let s = self.sign_values();
        self.irreps.iter().position(|ir| ir.values == s)
    }

    /// Index of `sigma (x) sgn`.
    pub fn sgn_twist(&self, i: usize) -> usize {
        let s = self.sign_values();
        let v: Vec<i64> = self.irreps[i].values.iter().zip(&s).map(|(a, b)| a * b).collect();
        self.irreps.iter().position(|ir| ir.values == v).expect("tensor with sign is irreducible")
    }

    /// Class containing an arbitrary element.
    pub fn class_of(&self, e: &Element) -> Result<usize> {
        match &self.locator {
            Locator::Classical(m) => {
                let k = classical_key(&self.group, e);
                m.get(&k).copied().ok_or_else(|| Error::UnknownClass(format!("{:?}", k.0)))
            }
            Locator::Keyed(m) => {
                let k = self.group.class_key(e);
                match m.get(&k).map(|v| v.as_slice()) {
                    Some([c]) => Ok(*c),
                    Some(cs) => Err(Error::UnknownClass(format!(
                        "element fingerprint shared by classes {}",
                        cs.iter().map(|&c| self.classes[c].name.clone()).collect::<Vec<_>>().join(", ")
                    ))),
                    None => Err(Error::UnknownClass("no class with this fingerprint".into())),
                }
            }
        }
    }

    pub fn class_function(&self, i: usize) -> ClassFunction {
        ClassFunction::from_ints(&self.irreps[i].values)
    }

    /// `(1/|W|) sum |C| f(C) g(C)` for real-valued class functions.
    pub fn inner_product(&self, f: &ClassFunction, g: &ClassFunction) -> Rat {
        let mut s = Rat::zero();
        for (c, info) in self.classes.iter().enumerate() {
            s += Rat::from_integer(info.size.into()) * &f.values[c] * &g.values[c];
        }
        s / Rat::from_integer(self.order().into())
    }

    /// Checks every structural invariant; never repairs.
    pub fn validate(&self) -> Result<()> {
        let k = self.classes.len();
        let order = self.order() as i128;
        let fail = |m: String| Err(Error::Validation(format!("{}: {m}", self.cartan_type())));
        if self.irreps.len() != k {
            return fail(format!("{} irreps for {k} classes", self.irreps.len()));
        }
        let total: u128 = self.classes.iter().map(|c| c.size as u128).sum();
        if total != order as u128 {
            return fail(format!("class sizes sum to {total}, expected {order}"));
        }
        if self.classes.first().map(|c| (c.size, c.word.is_empty())) != Some((1, true)) {
            return fail("first class is not the identity".into());
        }
        let mut names = HashSet::new();
        for c in &self.classes {
            if !names.insert(c.name.as_str()) {
                return fail(format!("duplicate class name {}", c.name));
            }
        }
        let mut labels = HashSet::new();
        for ir in &self.irreps {
            if ir.values.len() != k {
                return fail(format!("{} has {} values", ir.label, ir.values.len()));
            }
            if ir.values[0] <= 0 {
                return fail(format!("{} has non-positive degree", ir.label));
            }
            if !labels.insert(normalize_label(&ir.label.to_string())) {
                return fail(format!("duplicate label {}", ir.label));
            }
        }
        let sizes: Vec<i128> = self.classes.iter().map(|c| c.size as i128).collect();
        for (a, x) in self.irreps.iter().enumerate() {
            for (b, y) in self.irreps.iter().enumerate().skip(a) {
                let s: i128 = (0..k).map(|c| sizes[c] * x.values[c] as i128 * y.values[c] as i128).sum();
                let want = if a == b { order } else { 0 };
                if s != want {
                    return fail(format!("row orthogonality fails for {} and {}", x.label, y.label));
                }
            }
        }
        for c in 0..k {
            for d in c..k {
                let s: i128 = self.irreps.iter().map(|ir| ir.values[c] as i128 * ir.values[d] as i128).sum();
                let want = if c == d { order / sizes[c] } else { 0 };
                if s != want || (c == d && order % sizes[c] != 0) {
                    return fail(format!(
                        "column orthogonality fails for classes {} and {}",
                        self.classes[c].name, self.classes[d].name
                    ));
                }
            }
        }
        self.validate_named_classes()
    }

    /// Named classes `1`, `A1`, `2A1`, `A2` must hold a model element, have a
    /// unique fingerprint and the combinatorially counted size.
    fn validate_named_classes(&self) -> Result<()> {
        if !self.cartan_type().is_exceptional() {
            return Ok(());
        }
        let g = &self.group;
        let rs = g.root_system();
        let n = rs.num_positive();
        let Locator::Keyed(keys) = &self.locator else {
            return Ok(());
        };
        let fail = |m: String| Err(Error::Validation(format!("{}: {m}", self.cartan_type())));
        let refl: Vec<Element> = (0..n).map(|a| g.reflection(a)).collect();
        for (name, label) in [("A1", Rank2Label::A1), ("2A1", Rank2Label::A1A1), ("A2", Rank2Label::A2)] {
            let Some(c) = self.class_index(name) else {
                continue;
            };
            let mut products: HashSet<Element> = HashSet::new();
            let mut model = None;
            for a in 0..n {
                if !rs.is_long(a) {
                    continue;
                }
                if label == Rank2Label::A1 {
                    products.insert(refl[a].clone());
                    model.get_or_insert_with(|| refl[a].clone());
                    continue;
                }
                for b in a + 1..n {
                    if rs.is_long(b) && rs.rank2_label(a, b)? == label {
                        let e = refl[a].compose(&refl[b]);
                        model.get_or_insert_with(|| e.clone());
                        products.insert(e.clone());
                        products.insert(e.inverse());
                    }
                }
            }
            let Some(model) = model else {
                return fail(format!("no model element for {name}"));
            };
            let key = g.class_key(&model);
            let rep_key = g.class_key(&g.from_word(&self.classes[c].word)?);
            if rep_key != key {
                return fail(format!("representative of {name} is not conjugate to the model element"));
            }
            if keys.get(&key).map(|v| v.len()) != Some(1) {
                return fail(format!("fingerprint of {name} is not unique"));
            }
            if products.len() as u64 != self.classes[c].size {
                return fail(format!(
                    "class {name} has size {} but {} products were counted",
                    self.classes[c].size,
                    products.len()
                ));
            }
        }
        Ok(())
    }
}

/// Parses `(l)x(r)` or `(l)x(l)_I` / `_II` for type D.
fn parse_d_label(s: &str) -> Option<IrrepLabel> {
    let (body, tag) = match s.rsplit_once('_') {
        Some((b, "I")) => (b, Some(true)),
        Some((b, "II")) => (b, Some(false)),
        _ => (s, None),
    };
    let b: Bipartition = body.parse().ok()?;
    match tag {
        Some(t) if b.left == b.right => Some(IrrepLabel::Split(b.left, t)),
        None if b.left != b.right => Some(IrrepLabel::Bipartition(canonical_d(&b))),
        _ => None,
    }
}

/// Orders an unordered D pair: larger part first by size, then lexicographically.
pub fn canonical_d(b: &Bipartition) -> Bipartition {
    let key = |p: &Partition| (p.size(), p.parts().to_vec());
    if key(&b.left) >= key(&b.right) {
        b.clone()
    } else {
        b.swapped()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_normalisation() {
        assert_eq!(normalize_label("φ{2,2}"), normalize_label("phi2,2"));
        assert_eq!(normalize_label("φ_{1,3}″"), "phi1,3''");
        assert_eq!(normalize_label("512_a′"), "512_a'");
        assert_eq!(normalize_label("(2,1) × (1)"), "(2,1)x(1)");
    }

    #[test]
    fn d_labels() {
        let l = parse_d_label("(1)x(2)").unwrap();
        assert_eq!(l.to_string(), "(2)x(1)");
        assert_eq!(parse_d_label("(1)x(1)_II").unwrap(), IrrepLabel::Split(Partition::new(vec![1]), false));
        assert!(parse_d_label("(1)x(1)").is_none());
    }
}
