//! Weyl group elements as permutations of roots, enumeration, conjugacy
//! classes, centralizer orbits and the reduction-hypothesis checks.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use num::{Signed, Zero};

use crate::algebra::{dot, int, span_rank, Poly, QMatrix, Rat};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Rank2Label, RootSystem, TestVectors};

/// Default bound on the order of groups that may be enumerated.
pub const DEFAULT_ENUMERATION_CAP: u64 = 100_000;

/// A group element, stored as the permutation it induces on the root list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub Vec<u8>);

impl Element {
    pub fn identity(num_roots: usize) -> Element {
        Element((0..num_roots as u8).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &Element) -> Element {
        Element(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Element {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Element(inv)
    }

    /// Image of root index `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut ord = 1usize;
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = self.0[k] as usize;
                len += 1;
            }
            ord = num::integer::lcm(ord, len);
        }
        ord
    }
}

/// The Weyl group of a root system with its simple reflections.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    gens: Vec<Element>,
    projection: QMatrix,
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> WeylGroup {
        let gens = (0..rs.rank()).map(|i| Element(rs.reflection_perm(i))).collect();
        let projection = rs.root_span_projection();
        WeylGroup { rs, gens, projection }
    }

    pub fn of_type(ty: CartanType) -> Result<WeylGroup> {
        Ok(WeylGroup::new(RootSystem::new(ty)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn cartan_type(&self) -> CartanType {
        self.rs.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn generators(&self) -> &[Element] {
        &self.gens
    }

    pub fn identity(&self) -> Element {
        Element::identity(self.rs.num_roots())
    }

    pub fn order(&self) -> u128 {
        self.cartan_type().group_order()
    }

    /// `s_{i1} s_{i2} ... s_{ik}` for the 1-based word `i1 ... ik`.
    pub fn from_word(&self, word: &[usize]) -> Result<Element> {
        let mut e = self.identity();
        for &i in word {
            if i == 0 || i > self.rank() {
                return Err(Error::InvalidLabel(format!("simple reflection index {i}")));
            }
            e = e.compose(&self.gens[i - 1]);
        }
        Ok(e)
    }

    /// Reflection in the root with index `i`.
    pub fn reflection(&self, i: usize) -> Element {
        Element(self.rs.reflection_perm(i))
    }

    /// Reduced word (1-based) found by stripping right descents.
    pub fn word(&self, e: &Element) -> Vec<usize> {
        let mut w = e.clone();
        let mut out = Vec::new();
        loop {
            let d = (0..self.rank()).find(|&i| !self.rs.is_positive(w.image(i)));
            match d {
                Some(i) => {
                    w = w.compose(&self.gens[i]);
                    out.push(i + 1);
                }
                None => break,
            }
        }
        out.reverse();
        out
    }

    /// Length: number of positive roots sent to negative roots.
    pub fn length(&self, e: &Element) -> usize {
        (0..self.rs.num_positive()).filter(|&i| !self.rs.is_positive(e.image(i))).count()
    }

    /// Integer matrix of the element on the root span in the simple-root basis.
    pub fn simple_matrix(&self, e: &Element) -> QMatrix {
        let r = self.rank();
        let cols: Vec<Vec<Rat>> =
            (0..r).map(|i| self.rs.simple_coords(e.image(i)).iter().map(|&c| int(c)).collect()).collect();
        QMatrix::from_columns(&cols)
    }

    /// Characteristic polynomial of the element on the reflection representation.
    pub fn char_poly(&self, e: &Element) -> Poly {
        self.simple_matrix(e).char_poly().expect("square")
    }

    /// Conjugation-invariant fingerprint: characteristic polynomial and the
    /// cycle types of the element on long and on short roots.
    pub fn class_key(&self, e: &Element) -> ClassKey {
        let poly: Vec<i64> = self
            .char_poly(e)
            .coeffs()
            .iter()
            .map(|c| crate::algebra::to_i64(c).expect("integral characteristic polynomial"))
            .collect();
        let mut seen = vec![false; e.0.len()];
        let (mut long, mut short) = (Vec::new(), Vec::new());
        for s in 0..e.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = e.image(k);
                len += 1;
            }
            if self.rs.is_long(s) {
                long.push(len);
            } else {
                short.push(len);
            }
        }
        long.sort_unstable();
        short.sort_unstable();
        ClassKey { poly, long, short }
    }

    /// Action on an ambient vector; the complement of the root span is fixed.
    pub fn apply(&self, e: &Element, v: &[Rat]) -> Vec<Rat> {
        let p = self.projection.apply(v);
        let c = self.rs.to_simple_coords(&p).expect("projection lies in the root span");
        let mut out: Vec<Rat> = v.iter().zip(&p).map(|(a, b)| a - b).collect();
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.rs.root(e.image(i))) {
                *o += ci * x;
            }
        }
        out
    }

    /// Ambient matrix of the element.
    pub fn ambient_matrix(&self, e: &Element) -> QMatrix {
        let n = self.rs.ambient_dim();
        let cols: Vec<Vec<Rat>> = (0..n)
            .map(|j| {
                let mut u = vec![Rat::zero(); n];
                u[j] = int(1);
                self.apply(e, &u)
            })
            .collect();
        QMatrix::from_columns(&cols)
    }

    /// Element acting on the ambient space by the given linear map, if it preserves the roots.
    pub fn element_from_map(&self, f: impl Fn(&[Rat]) -> Vec<Rat>) -> Option<Element> {
        let perm: Option<Vec<u8>> =
            (0..self.rs.num_roots()).map(|k| self.rs.find_root(&f(self.rs.root(k))).map(|j| j as u8)).collect();
        perm.map(Element)
    }

    /// Element of a classical group from a signed permutation: `e_i -> sign * e_{|p_i|-1}`.
    pub fn from_signed_perm(&self, p: &[i64]) -> Option<Element> {
        self.element_from_map(|v| {
            let mut out = vec![Rat::zero(); v.len()];
            for (i, &pi) in p.iter().enumerate() {
                let j = (pi.unsigned_abs() - 1) as usize;
                out[j] = if pi < 0 { -&v[i] } else { v[i].clone() };
            }
            out
        })
    }

    /// Enumerates all elements by closure under right multiplication by generators.
    pub fn enumerate(&self, cap: u64) -> Result<EnumeratedGroup> {
        let order = self.order();
        if order > cap as u128 {
            return Err(Error::CapExceeded { order: order.min(u64::MAX as u128) as u64, cap });
        }
        let mut elements = vec![self.identity()];
        let mut index: HashMap<Element, u32> = HashMap::new();
        index.insert(self.identity(), 0);
        let mut k = 0;
        while k < elements.len() {
            for g in &self.gens {
                let h = elements[k].compose(g);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len() as u32);
                    elements.push(h);
                }
            }
            k += 1;
        }
        if elements.len() as u128 != order {
            return Err(Error::TableComputation(format!("enumerated {} elements, expected {order}", elements.len())));
        }
        Ok(EnumeratedGroup { group: self.clone(), elements, index })
    }

    /// Orbit of an ambient vector under the subgroup generated by the given simple reflections.
    fn parabolic_orbit(&self, simple: &[usize], x: &[Rat]) -> Vec<Vec<Rat>> {
        let mut seen: HashSet<Vec<Rat>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(x.to_vec());
        queue.push_back(x.to_vec());
        let mut out = vec![x.to_vec()];
        while let Some(v) = queue.pop_front() {
            for &i in simple {
                let w = self.rs.reflect(i, &v);
                if seen.insert(w.clone()) {
                    out.push(w.clone());
                    queue.push_back(w);
                }
            }
        }
        out
    }

    /// Full orbit `W . x`.
    pub fn orbit(&self, x: &[Rat]) -> Vec<Vec<Rat>> {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.parabolic_orbit(&all, x)
    }

    /// Moves `y` into the closed dominant chamber; returns the image and the
    /// simple reflections applied, in order.
    pub fn to_dominant(&self, y: &[Rat]) -> (Vec<Rat>, Vec<usize>) {
        let mut v = y.to_vec();
        let mut path = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| dot(&v, self.rs.root(i)).is_negative()) {
            v = self.rs.reflect(i, &v);
            path.push(i);
        }
        (v, path)
    }

    /// Simple reflections generating the stabilizer of a dominant vector.
    pub fn dominant_stabilizer(&self, y_dom: &[Rat]) -> Vec<usize> {
        (0..self.rank()).filter(|&i| dot(y_dom, self.rs.root(i)).is_zero()).collect()
    }

    /// Orbit of `x` under the stabilizer `Z_W(y)`.
    pub fn centralizer_orbit(&self, y: &[Rat], x: &[Rat]) -> Vec<Vec<Rat>> {
        let (y_dom, path) = self.to_dominant(y);
        let stab = self.dominant_stabilizer(&y_dom);
        // w = s_{path_k} ... s_{path_1} sends y to y_dom; Z(y) = w^{-1} Z(y_dom) w
        let mut wx = x.to_vec();
        for &i in &path {
            wx = self.rs.reflect(i, &wx);
        }
        let mut orbit = self.parabolic_orbit(&stab, &wx);
        for v in orbit.iter_mut() {
            for &i in path.iter().rev() {
                *v = self.rs.reflect(i, v);
            }
        }
        orbit.sort();
        orbit
    }

    /// Rank of a set of vectors after projecting away the W-invariants.
    pub fn span_rank_mod_invariants(&self, vs: &[Vec<Rat>]) -> usize {
        let projected: Vec<Vec<Rat>> = vs.iter().map(|v| self.projection.apply(v)).collect();
        span_rank(&projected)
    }

    /// Checks both spanning conditions of the reduction criterion.
    pub fn reduction_hypotheses(&self, tv: &TestVectors) -> ReductionReport {
        let wy = self.orbit(&tv.y);
        let rank_a = self.span_rank_mod_invariants(&wy);
        let mut zx = self.centralizer_orbit(&tv.y, &tv.x1);
        let n1 = zx.len();
        let z2 = self.centralizer_orbit(&tv.y, &tv.x2);
        let n2 = z2.len();
        zx.extend(z2);
        let rank_b = self.span_rank_mod_invariants(&zx);
        let r = self.rank();
        ReductionReport {
            cond_a: rank_a == r,
            cond_b: rank_b == r,
            orbit_y: wy.len(),
            orbit_x1: n1,
            orbit_x2: n2,
            rank_a,
            rank_b,
            rank: r,
        }
    }
}

/// See [`WeylGroup::class_key`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey {
    pub poly: Vec<i64>,
    pub long: Vec<usize>,
    pub short: Vec<usize>,
}

/// Outcome of the spanning checks for a choice of test vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub cond_a: bool,
    pub cond_b: bool,
    pub orbit_y: usize,
    pub orbit_x1: usize,
    pub orbit_x2: usize,
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank: usize,
}

impl ReductionReport {
    pub fn holds(&self) -> bool {
        self.cond_a && self.cond_b
    }
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a) |W.y|={} span rank {}/{} {}; (b) |Z.x1|={} |Z.x2|={} span rank {}/{} {}",
            self.orbit_y,
            self.rank_a,
            self.rank,
            if self.cond_a { "ok" } else { "fails" },
            self.orbit_x1,
            self.orbit_x2,
            self.rank_b,
            self.rank,
            if self.cond_b { "ok" } else { "fails" }
        )
    }
}

/// A conjugacy class with the data every table carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub name: String,
    pub size: u64,
    /// Representative as a 1-based word in the simple reflections.
    pub word: Vec<usize>,
}

/// All elements of a (small) Weyl group.
#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    group: WeylGroup,
    elements: Vec<Element>,
    index: HashMap<Element, u32>,
}

impl EnumeratedGroup {
    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.index.get(e).map(|&i| i as usize)
    }

    /// Partitions the group into conjugacy classes in canonical order.
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.elements.len();
        let mut raw = vec![u32::MAX; n];
        let mut members: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if raw[start] != u32::MAX {
                continue;
            }
            let c = members.len() as u32;
            raw[start] = c;
            let mut list = vec![start as u32];
            let mut k = 0;
            while k < list.len() {
                let x = &self.elements[list[k] as usize];
                for g in self.group.generators() {
                    let y = g.compose(x).compose(g);
                    let j = self.index[&y];
                    if raw[j as usize] == u32::MAX {
                        raw[j as usize] = c;
                        list.push(j);
                    }
                }
                k += 1;
            }
            members.push(list);
        }
        // canonical order: element order, size, lexicographically least member
        let mut keys: Vec<(usize, usize, Element, usize)> = members
            .iter()
            .enumerate()
            .map(|(c, m)| {
                let least = m.iter().map(|&i| &self.elements[i as usize]).min().unwrap().clone();
                (least.order(), m.len(), least, c)
            })
            .collect();
        keys.sort();
        let mut renumber = vec![0u32; members.len()];
        for (new, k) in keys.iter().enumerate() {
            renumber[k.3] = new as u32;
        }
        let class_of: Vec<u32> = raw.iter().map(|&c| renumber[c as usize]).collect();
        let reps: Vec<Element> = keys.iter().map(|k| k.2.clone()).collect();
        let sizes: Vec<u64> = keys.iter().map(|k| k.1 as u64).collect();
        let names = name_classes(&self.group, &reps, &|e: &Element| class_of[self.index[e] as usize] as usize);
        let classes = reps
            .iter()
            .zip(&sizes)
            .zip(names)
            .map(|((r, &size), name)| ClassInfo { name, size, word: self.group.word(r) })
            .collect();
        ConjugacyClasses { classes, reps, class_of }
    }
}

/// Conjugacy classes of an enumerated group.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub classes: Vec<ClassInfo>,
    pub reps: Vec<Element>,
    /// Class index of each element, in enumeration order.
    pub class_of: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Signed cycle type of a signed permutation: cycle lengths with the product
/// of signs along each cycle.
pub fn signed_cycle_type(p: &[i64]) -> (Vec<usize>, Vec<usize>) {
    let n = p.len();
    let mut seen = vec![false; n];
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut sign = 1i64;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            sign *= p[k].signum();
            k = (p[k].unsigned_abs() - 1) as usize;
            len += 1;
        }
        if sign > 0 {
            pos.push(len);
        } else {
            neg.push(len);
        }
    }
    pos.sort_unstable_by(|a, b| b.cmp(a));
    neg.sort_unstable_by(|a, b| b.cmp(a));
    (pos, neg)
}

/// Which of the two `W(D_n)` classes of a split signed cycle type contains the
/// signed permutation: `+1` for the class of the standard representative (consecutive cycles).
///
/// A conjugator onto the standard representative is built cycle by cycle; its
/// number of sign changes has a well-defined parity because all cycles are even.
pub fn d_class_sign(sp: &[i64]) -> i64 {
    let n = sp.len();
    let mut seen = vec![false; n];
    let mut flips = 0usize;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut delta = 1i64;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            if delta < 0 {
                flips += 1;
            }
            delta *= sp[k].signum();
            k = (sp[k].unsigned_abs() - 1) as usize;
        }
    }
    if flips.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Signed permutation of an element of a classical group (types A, B, D).
pub fn to_signed_perm(g: &WeylGroup, e: &Element) -> Option<Vec<i64>> {
    let n = g.root_system().ambient_dim();
    let m = g.ambient_matrix(e);
    (0..n)
        .map(|i| {
            (0..n).find_map(|j| {
                let v = &m[(j, i)];
                if v == &int(1) {
                    Some(j as i64 + 1)
                } else if v == &int(-1) {
                    Some(-(j as i64) - 1)
                } else {
                    None
                }
            })
        })
        .collect()
}

/// Display name of a classical class with the given signed cycle type.
pub fn classical_class_name(pos: &[usize], neg: &[usize]) -> String {
    let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    format!("[{}|{}]", j(pos), j(neg))
}

/// Names classes: `1`, reflection classes, rank-2 names for exceptional types
/// and signed cycle types for classical types; remaining classes by order.
fn name_classes(g: &WeylGroup, reps: &[Element], class_of: &dyn Fn(&Element) -> usize) -> Vec<String> {
    let rs = g.root_system();
    let ty = g.cartan_type();
    if !ty.is_exceptional() {
        return reps
            .iter()
            .map(|e| {
                let sp = to_signed_perm(g, e).expect("classical element");
                let (pos, neg) = signed_cycle_type(&sp);
                let base = match ty {
                    CartanType::A(_) => {
                        let j: Vec<String> = pos.iter().map(|x| x.to_string()).collect();
                        format!("[{}]", j.join(","))
                    }
                    _ => classical_class_name(&pos, &neg),
                };
                // split D classes share a signed cycle type
                let twins: Vec<usize> = reps
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| {
                        let sq = to_signed_perm(g, f).unwrap();
                        signed_cycle_type(&sq) == (pos.clone(), neg.clone())
                    })
                    .map(|(k, _)| k)
                    .collect();
                if twins.len() > 1 {
                    let tag = if d_class_sign(&sp) == 1 { "+" } else { "-" };
                    format!("{base}{tag}")
                } else {
                    base
                }
            })
            .collect();
    }
    let mut names: Vec<Option<String>> = vec![None; reps.len()];
    names[0] = Some("1".into());
    let n = rs.num_positive();
    // reflections
    for a in 0..n {
        let c = class_of(&g.reflection(a));
        if names[c].is_none() {
            names[c] = Some(if rs.is_long(a) || ty.is_simply_laced() { "A1" } else { "~A1" }.into());
        }
    }
    // products of two reflections; priority by label
    let mut found: BTreeMap<(u8, usize), usize> = BTreeMap::new();
    for a in 0..n {
        for b in a + 1..n {
            let lab = rs.rank2_label(a, b).expect("distinct positive roots");
            let prio = match lab {
                Rank2Label::A1A1 if !rs.is_long(a) && !ty.is_simply_laced() => 7,
                Rank2Label::A1A1 => 0,
                Rank2Label::A1tA1 => 1,
                Rank2Label::A2 => 2,
                Rank2Label::TA2 => 3,
                Rank2Label::B2 => 4,
                Rank2Label::G2Sub => 5,
                _ => 9,
            };
            let c = class_of(&g.reflection(a).compose(&g.reflection(b)));
            found.entry((prio, c)).or_insert(c);
        }
    }
    for &(prio, c) in found.keys() {
        if names[c].is_some() {
            continue;
        }
        let label = match prio {
            0 => "2A1",
            1 => "A1+~A1",
            2 => "A2",
            3 => "~A2",
            4 => "B2",
            5 => "G2",
            _ => "2~A1",
        };
        if !names.iter().any(|x| x.as_deref() == Some(label)) {
            names[c] = Some(label.into());
        }
    }
    fill_order_names(&mut names, &reps.iter().map(|e| e.order()).collect::<Vec<_>>());
    names.into_iter().map(|x| x.unwrap()).collect()
}

/// Gives unnamed classes names `<order><letter>` in class order.
pub fn fill_order_names(names: &mut [Option<String>], orders: &[usize]) {
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, nm) in names.iter_mut().enumerate() {
        if nm.is_some() {
            continue;
        }
        let k = count.entry(orders[i]).or_insert(0);
        let mut suffix = String::new();
        let mut x = *k;
        loop {
            suffix.insert(0, (b'a' + (x % 26) as u8) as char);
            if x < 26 {
                break;
            }
            x = x / 26 - 1;
        }
        *nm = Some(format!("{}{}", orders[i], suffix));
        *k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn grp(t: CartanType) -> WeylGroup {
        WeylGroup::of_type(t).unwrap()
    }

    #[test]
    fn enumeration_orders() {
        assert_eq!(grp(CartanType::G2).enumerate(DEFAULT_ENUMERATION_CAP).unwrap().len(), 12);
        assert_eq!(grp(CartanType::F4).enumerate(DEFAULT_ENUMERATION_CAP).unwrap().len(), 1152);
        assert_eq!(grp(CartanType::B(3)).enumerate(DEFAULT_ENUMERATION_CAP).unwrap().len(), 48);
        assert!(matches!(grp(CartanType::E7).enumerate(DEFAULT_ENUMERATION_CAP), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn class_counts_and_names() {
        let g2 = grp(CartanType::G2).enumerate(1000).unwrap().conjugacy_classes();
        assert_eq!(g2.len(), 6);
        let names: Vec<&str> = g2.classes.iter().map(|c| c.name.as_str()).collect();
        for want in ["1", "A1", "~A1", "A1+~A1", "A2", "G2"] {
            assert!(names.contains(&want), "{names:?}");
        }
        let f4 = grp(CartanType::F4).enumerate(2000).unwrap().conjugacy_classes();
        assert_eq!(f4.len(), 25);
        assert_eq!(f4.classes.iter().map(|c| c.size).sum::<u64>(), 1152);
        let b2 = grp(CartanType::B(2)).enumerate(100).unwrap().conjugacy_classes();
        assert_eq!(b2.len(), 5);
        let d4 = grp(CartanType::D(4)).enumerate(1000).unwrap().conjugacy_classes();
        assert_eq!(d4.len(), 13);
    }

    #[test]
    fn words_reproduce_representatives() {
        let g = grp(CartanType::F4);
        let cc = g.enumerate(2000).unwrap().conjugacy_classes();
        for (info, rep) in cc.classes.iter().zip(&cc.reps) {
            assert_eq!(&g.from_word(&info.word).unwrap(), rep);
            assert_eq!(info.word.len(), g.length(rep));
        }
    }

    #[test]
    fn class_of_pair_product_is_conjugation_invariant() {
        let g = grp(CartanType::F4);
        let eg = g.enumerate(2000).unwrap();
        let cc = eg.conjugacy_classes();
        let rs = g.root_system();
        let cls = |e: &Element| cc.class_of[eg.index_of(e).unwrap()];
        for a in 0..rs.num_positive() {
            for b in a + 1..rs.num_positive() {
                let p = g.reflection(a).compose(&g.reflection(b));
                for s in g.generators() {
                    let (a2, b2) = (s.image(a), s.image(b));
                    let q = g.reflection(a2).compose(&g.reflection(b2));
                    assert_eq!(cls(&p), cls(&q));
                    assert_eq!(rs.rank2_label(a, b).unwrap(), rs.rank2_label(a2, b2).unwrap());
                }
            }
        }
    }

    #[test]
    fn centralizer_orbit_examples() {
        let g = grp(CartanType::B(3));
        let e = |i: usize| {
            let mut v = vec![int(0); 3];
            v[i] = int(1);
            v
        };
        let orb = g.centralizer_orbit(&e(0), &e(1));
        let mut want = vec![e(1), e(2), e(1).iter().map(|x| -x).collect(), e(2).iter().map(|x| -x).collect()];
        want.sort();
        assert_eq!(orb, want);
        assert_eq!(g.centralizer_orbit(&e(0), &e(0)), vec![e(0)]);
        let zero = vec![int(0); 3];
        assert_eq!(g.centralizer_orbit(&zero, &e(0)).len(), 6);
    }

    #[test]
    fn stabilizer_generators_fix_y() {
        for t in [CartanType::B(4), CartanType::G2, CartanType::F4, CartanType::E6, CartanType::E8] {
            let g = grp(t);
            let tv = g.root_system().test_vectors();
            let (yd, path) = g.to_dominant(&tv.y);
            for i in g.dominant_stabilizer(&yd) {
                assert_eq!(g.root_system().reflect(i, &yd), yd);
            }
            let mut back = yd.clone();
            for &i in path.iter().rev() {
                back = g.root_system().reflect(i, &back);
            }
            assert_eq!(back, tv.y);
        }
    }

    #[test]
    fn reduction_hypotheses_examples() {
        for n in 2..=8 {
            let g = grp(CartanType::B(n));
            assert!(g.reduction_hypotheses(&g.root_system().test_vectors()).holds(), "B{n}");
        }
        let g = grp(CartanType::G2);
        assert!(g.reduction_hypotheses(&g.root_system().test_vectors()).holds());
        let tv = TestVectors {
            y: vec![int(0); 3],
            x1: vec![rat(1, 3), rat(1, 3), rat(-2, 3)],
            x2: vec![int(0), int(1), int(-1)],
        };
        assert!(!g.reduction_hypotheses(&tv).cond_a);
    }

    #[test]
    fn literal_condition_b_fails_for_b3() {
        // Z(y).x1 together with the single vector x2 does not span in B3.
        let g = grp(CartanType::B(3));
        let tv = g.root_system().test_vectors();
        let mut v = g.centralizer_orbit(&tv.y, &tv.x1);
        v.push(tv.x2.clone());
        assert!(g.span_rank_mod_invariants(&v) < 3);
    }

    #[test]
    fn signed_perms_roundtrip() {
        let g = grp(CartanType::B(3));
        let e = g.from_signed_perm(&[2, -1, 3]).unwrap();
        assert_eq!(to_signed_perm(&g, &e).unwrap(), vec![2, -1, 3]);
        assert_eq!(signed_cycle_type(&[2, -1, 3]), (vec![1], vec![2]));
        assert_eq!(e.order(), 4);
    }
}
