//! Reproduction checks, grouped by acceptance criterion. Each check
//! records the expected and computed values verbatim.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::Zero;

use crate::algebra::{int, ParamQuad, Partition, ProjPoint, Rat};
use crate::cells::{classical_n_form, cm_cell_report, CellVerdict};
use crate::chars::{
    b_invariants, classical_table, compute_table, decompose_with_wedge, n_invariant, parse_table, tensor_decompose,
    wedge_class_function, write_table, BnCharacters, CharacterTable, NForm, TableProvider,
};
use crate::error::Result;
use crate::onewtype::{
    classify, classify_table, n_vanishes_at, seminormal_scalar, square_and_group, test_commutators,
    vanishing_constraints, MatrixCriterion,
};
use crate::rootsys::CartanType;
use crate::weyl::{WeylGroup, DEFAULT_ENUMERATION_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Skip,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Skip => "SKIP",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub criterion: u8,
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

impl Check {
    fn compare(criterion: u8, id: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Check {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Check { criterion, id: id.into(), expected, computed, status }
    }

    fn holds(
        criterion: u8,
        id: impl Into<String>,
        expected: impl ToString,
        ok: bool,
        computed: impl ToString,
    ) -> Check {
        Check {
            criterion,
            id: id.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    fn skip(criterion: u8, id: impl Into<String>, why: &str) -> Check {
        Check { criterion, id: id.into(), expected: String::new(), computed: why.to_string(), status: Status::Skip }
    }

    fn error(criterion: u8, id: impl Into<String>, e: &crate::Error) -> Check {
        Check {
            criterion,
            id: id.into(),
            expected: "no error".into(),
            computed: format!("error: {e}"),
            status: Status::Fail,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Pass => write!(f, "PASS [{}] {}: {}", self.criterion, self.id, self.computed),
            Status::Skip => write!(f, "SKIP [{}] {}: {}", self.criterion, self.id, self.computed),
            Status::Fail => write!(
                f,
                "FAIL [{}] {}: expected {} computed {}",
                self.criterion, self.id, self.expected, self.computed
            ),
        }
    }
}

/// Check groups, in criterion order.
pub const GROUPS: &[(&str, u8, &str)] = &[
    ("commutator-counts", 1, "commutator term counts"),
    ("grouped-squares", 2, "class-grouped squared commutators"),
    ("classification", 3, "one-W-type classification"),
    ("decompositions", 4, "sigma (x) wedge(h) decompositions"),
    ("cells", 5, "cuspidal cell verdicts"),
    ("table-integrity", 6, "character table integrity"),
    ("oracles", 7, "oracle equivalences"),
    ("invariants", 8, "N-invariant suites"),
    ("fake-degrees", 9, "fake degrees and b-invariants"),
    ("reduction", 10, "reduction hypotheses"),
];

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// Worst status among a criterion's checks; `None` if it has none.
    pub fn criterion_status(&self, n: u8) -> Option<Status> {
        self.checks.iter().filter(|c| c.criterion == n).map(|c| c.status).max()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        writeln!(
            f,
            "{} checks: {} passed, {} failed, {} skipped",
            self.checks.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skip)
        )
    }
}

/// Runs all check groups, or the one named by `only` (group name or
/// criterion number).
pub fn verify_all(provider: &TableProvider, only: Option<&str>) -> Result<VerificationReport> {
    let selected: Vec<u8> = match only {
        None => GROUPS.iter().map(|g| g.1).collect(),
        Some(s) => {
            let hit = GROUPS.iter().find(|g| g.0 == s || g.1.to_string() == s);
            match hit {
                Some(g) => vec![g.1],
                None => {
                    let names: Vec<&str> = GROUPS.iter().map(|g| g.0).collect();
                    return Err(crate::Error::InvalidLabel(format!(
                        "unknown check group {s}; expected one of {}",
                        names.join(", ")
                    )));
                }
            }
        }
    };
    let mut report = VerificationReport::default();
    for n in selected {
        report.checks.extend(run_criterion(provider, n));
    }
    Ok(report)
}

/// Checks of one criterion.
pub fn run_criterion(provider: &TableProvider, n: u8) -> Vec<Check> {
    let mut v = Vec::new();
    match n {
        1 => commutator_counts(&mut v),
        2 => grouped_squares(provider, &mut v),
        3 => classification(provider, &mut v),
        4 => decompositions(provider, &mut v),
        5 => cells(provider, &mut v),
        6 => table_integrity(provider, &mut v),
        7 => oracles(provider, &mut v),
        8 => invariants(provider, &mut v),
        9 => fake_degrees(provider, &mut v),
        10 => reduction(&mut v),
        _ => {}
    }
    v
}

const EXCEPTIONAL: [CartanType; 5] = [CartanType::G2, CartanType::F4, CartanType::E6, CartanType::E7, CartanType::E8];

/// The table, or a SKIP/FAIL check explaining its absence.
fn table_or(
    provider: &TableProvider,
    ty: CartanType,
    crit: u8,
    id: &str,
    out: &mut Vec<Check>,
) -> Option<CharacterTable> {
    if !provider.available(ty) {
        out.push(Check::skip(crit, id, &format!("no data file for {ty}")));
        return None;
    }
    match provider.table(ty) {
        Ok(t) => Some(t),
        Err(e) => {
            out.push(Check::error(crit, id, &e));
            None
        }
    }
}

fn commutator_counts(out: &mut Vec<Check>) {
    let want = [(5, 4), (15, 9), (21, 12), (33, 18), (57, 30)];
    for (ty, (a, b)) in EXCEPTIONAL.into_iter().zip(want) {
        let id = |k: usize| format!("commutator-counts/{ty}/x{k}");
        match crate::rootsys::RootSystem::new(ty) {
            Ok(rs) => {
                let [c1, c2] = test_commutators(&rs);
                out.push(Check::compare(1, id(1), a, c1.len()));
                out.push(Check::compare(1, id(2), b, c2.len()));
            }
            Err(e) => out.push(Check::error(1, id(1), &e)),
        }
    }
}

type QuadTerms = &'static [(&'static str, i64, i64, i64)];
type QuadRows = Vec<(&'static str, i64, i64, i64)>;
type Multiset = BTreeMap<String, u64>;

fn render_quads(m: &BTreeMap<String, ParamQuad>) -> String {
    let parts: Vec<String> = m.iter().map(|(k, q)| format!("{k}:({q})")).collect();
    parts.join("; ")
}

fn grouped_squares(provider: &TableProvider, out: &mut Vec<Check>) {
    let sl = |a| (a, 0, 0);
    let e = |x: [i64; 3]| -> QuadRows {
        ["1", "2A1", "A2"].into_iter().zip(x).map(|(c, a)| (c, sl(a).0, sl(a).1, sl(a).2)).collect()
    };
    let g2_1: QuadTerms = &[("1", 3, 0, 3), ("A1+~A1", 0, 2, 0), ("A2", 3, 0, 3), ("G2", 0, 10, 0)];
    let g2_2: QuadTerms = &[("1", 5, 0, 5), ("A1+~A1", 0, 2, 0), ("A2", 4, 0, 4), ("G2", 0, 16, 0)];
    let f4_1: QuadTerms =
        &[("1", 1, 0, 1), ("2A1", 1, 0, 1), ("A1+~A1", 0, 4, 0), ("A2", 4, 0, 0), ("~A2", 0, 0, 4), ("B2", 0, 8, 0)];
    let f4_2: QuadTerms = &[("1", 1, 0, 1), ("A2", 2, 0, 0), ("~A2", 0, 0, 2), ("B2", 0, 6, 0)];
    let expected: Vec<(CartanType, [QuadRows; 2])> = vec![
        (CartanType::G2, [g2_1.to_vec(), g2_2.to_vec()]),
        (CartanType::F4, [f4_1.to_vec(), f4_2.to_vec()]),
        (CartanType::E6, [e([1, 5, 10]), e([1, 1, 6])]),
        (CartanType::E7, [e([1, 10, 16]), e([2, 5, 20])]),
        (CartanType::E8, [e([1, 21, 28]), e([1, 6, 18])]),
    ];
    for (ty, pair) in expected {
        let Some(t) = table_or(provider, ty, 2, &format!("grouped-squares/{ty}"), out) else {
            continue;
        };
        let cs = test_commutators(t.group().root_system());
        for (k, (c, want)) in cs.iter().zip(pair).enumerate() {
            let id = format!("grouped-squares/{ty}/x{}", k + 1);
            let want: BTreeMap<String, ParamQuad> =
                want.iter().map(|&(n, a, b, d)| (n.to_string(), ParamQuad::new(a, b, d))).collect();
            match square_and_group(&t, c) {
                Ok(gs) => {
                    let got: BTreeMap<String, ParamQuad> =
                        gs.terms.iter().map(|x| (x.name.clone(), x.coeff.clone())).collect();
                    out.push(Check::compare(2, id, render_quads(&want), render_quads(&got)));
                }
                Err(e) => out.push(Check::error(2, id, &e)),
            }
        }
    }
}

fn set_string(s: &BTreeSet<String>) -> String {
    format!("{{{}}}", s.iter().cloned().collect::<Vec<_>>().join(", "))
}

/// Primary labels of the named irreps.
fn primary(t: &CharacterTable, names: &[&str]) -> Result<BTreeSet<String>> {
    names.iter().map(|n| Ok(t.label(t.find(n)?).to_string())).collect()
}

/// Rectangles `d^k` of `n` with `k - d = r`, as the two expected labels each.
fn expected_b(n: usize, r: i64) -> BTreeSet<String> {
    let mut s = BTreeSet::new();
    for lam in Partition::all(n) {
        if let Some((k, d)) = lam.is_rectangle() {
            if k as i64 - d as i64 == r {
                s.insert(format!("{lam}x(0)"));
                s.insert(format!("(0)x{}", lam.transpose()));
            }
        }
    }
    s
}

fn classification(provider: &TableProvider, out: &mut Vec<Check>) {
    // B_n at every integer ratio, by the rule and (n <= 5) by characters
    for n in 2..=8 {
        let ty = CartanType::B(n);
        let res = match classify(ty, provider) {
            Ok(r) => r,
            Err(e) => {
                out.push(Check::error(3, format!("classification/{ty}"), &e));
                continue;
            }
        };
        let mut mismatches = Vec::new();
        for r in -(n as i64)..=(n as i64) {
            let got: BTreeSet<String> = res.at(&ProjPoint::ratio(int(r))).iter().map(|l| l.to_string()).collect();
            let want = expected_b(n, r);
            if got != want {
                mismatches.push(format!("ratio {r}: {} vs {}", set_string(&want), set_string(&got)));
            }
        }
        let ok = mismatches.is_empty();
        let computed =
            if ok { format!("{} irreps over ratios -{n}..{n}", res.entries.len()) } else { mismatches.join("; ") };
        out.push(Check::holds(3, format!("classification/{ty}/ratios"), "rectangles d^k at k-d", ok, computed));
        if n <= 5 {
            let crit = classical_table(ty).and_then(|t| classify_table(&t));
            match crit {
                Ok(c) => {
                    let real: BTreeSet<String> = c
                        .entries
                        .iter()
                        .filter(|(_, s)| !s.real_part().is_none())
                        .map(|(l, s)| format!("{l}@{}", s.real_part()))
                        .collect();
                    let rule: BTreeSet<String> = res.entries.iter().map(|(l, s)| format!("{l}@{s}")).collect();
                    out.push(Check::compare(
                        3,
                        format!("classification/{ty}/character-criterion"),
                        set_string(&rule),
                        set_string(&real),
                    ));
                }
                Err(e) => out.push(Check::error(3, format!("classification/{ty}/character-criterion"), &e)),
            }
        }
    }
    // D_4 by the character criterion, D_9 by the rule
    match classical_table(CartanType::D(4)).and_then(|t| classify_table(&t)) {
        Ok(c) => {
            let got: BTreeSet<String> = c
                .entries
                .iter()
                .filter(|(_, s)| !s.real_part().is_none())
                .map(|(l, s)| format!("{l}@{}", s.real_part()))
                .collect();
            out.push(Check::compare(3, "classification/D4", "{(2,2)x(0)@all parameters}", set_string(&got)));
        }
        Err(e) => out.push(Check::error(3, "classification/D4", &e)),
    }
    match classify(CartanType::D(9), provider) {
        Ok(c) => {
            let got: BTreeSet<String> = c.entries.iter().map(|(l, s)| format!("{l}@{s}")).collect();
            out.push(Check::compare(3, "classification/D9", "{(3,3,3)x(0)@all parameters}", set_string(&got)));
        }
        Err(e) => out.push(Check::error(3, "classification/D9", &e)),
    }
    let i = ProjPoint::Ratio(crate::algebra::Surd::imaginary_unit(1));
    let mi = ProjPoint::Ratio(crate::algebra::Surd::imaginary_unit(-1));
    let one = ProjPoint::ratio(int(1));
    let m1 = ProjPoint::ratio(int(-1));
    let cs0 = ProjPoint::ratio(Rat::zero());
    let regimes: Vec<(CartanType, &str, ProjPoint, Vec<&str>)> = vec![
        (CartanType::G2, "a", one.clone(), vec!["φ{1,3}'", "φ{1,3}''", "φ{2,2}"]),
        (CartanType::G2, "b", m1.clone(), vec!["φ{1,0}", "φ{1,6}", "φ{2,1}"]),
        (CartanType::F4, "b", one.clone(), vec!["4_1", "1_2", "1_3", "6_1", "4_3", "4_4"]),
        (CartanType::F4, "c", m1.clone(), vec!["4_1", "1_1", "1_4", "6_2", "4_2", "4_5"]),
        (CartanType::F4, "d", ProjPoint::ClZero, vec!["4_1", "2_1", "2_2"]),
        (CartanType::F4, "e", cs0, vec!["4_1", "2_3", "2_4"]),
        (CartanType::F4, "f+", i, vec!["4_1", "12_1", "16_1"]),
        (CartanType::F4, "f-", mi, vec!["4_1", "12_1", "16_1"]),
        (CartanType::F4, "generic", ProjPoint::ratio(int(2)), vec!["4_1"]),
        (CartanType::E6, "equal", one.clone(), vec!["10_s"]),
        (CartanType::E7, "equal", one.clone(), vec![]),
        (CartanType::E8, "equal", one.clone(), vec!["168_y", "420_y"]),
    ];
    for (ty, tag, p, want) in regimes {
        let id = format!("classification/{ty}/{tag}");
        let Some(t) = table_or(provider, ty, 3, &id, out) else {
            continue;
        };
        let res = primary(&t, &want).and_then(|w| Ok((w, classify(ty, provider)?)));
        match res {
            Ok((w, c)) => {
                let got: BTreeSet<String> = c.at(&p).iter().map(|l| l.to_string()).collect();
                out.push(Check::compare(3, format!("{id} at {p}"), set_string(&w), set_string(&got)));
            }
            Err(e) => out.push(Check::error(3, id, &e)),
        }
    }
    // F4 4_1 for every parameter
    if let Some(t) = table_or(provider, CartanType::F4, 3, "classification/F4/a", out) {
        match classify(CartanType::F4, provider).and_then(|c| Ok((c, t.find("4_1")?))) {
            Ok((c, i)) => {
                let s = c.entries.iter().find(|(l, _)| l == t.label(i)).map(|(_, s)| s.to_string());
                out.push(Check::compare(
                    3,
                    "classification/F4/a",
                    "all parameters",
                    s.unwrap_or_else(|| "none".into()),
                ));
            }
            Err(e) => out.push(Check::error(3, "classification/F4/a", &e)),
        }
    }
}

/// Parses `2*4_1 + 6_2 + ...` into primary label -> multiplicity.
fn parse_decomposition(t: &CharacterTable, s: &str) -> Result<BTreeMap<String, u64>> {
    let mut m = BTreeMap::new();
    for term in s.split('+') {
        let term = term.trim();
        let (k, l) = match term.split_once('*') {
            Some((k, l)) => (k.trim().parse::<u64>().map_err(|_| crate::Error::InvalidLabel(term.into()))?, l.trim()),
            None => (1, term),
        };
        *m.entry(t.label(t.find(l)?).to_string()).or_default() += k;
    }
    Ok(m)
}

fn render_decomposition(m: &BTreeMap<String, u64>) -> String {
    let parts: Vec<String> = m.iter().map(|(l, k)| format!("{k}*{l}")).collect();
    parts.join(" + ")
}

const F4_61_REFERENCE: &str = "3*6_1 + 2*4_3 + 2*4_4 + 2*16_1 + 1_2 + 1_3 + 4_1 + 9_2 + 9_3";
const F4_61_CORRECTED: &str = "3*6_1 + 2*4_3 + 2*4_4 + 2*16_1 + 1_2 + 1_3 + 4_1 + 9_2 + 9_3 + 6_2";

fn decompositions(provider: &TableProvider, out: &mut Vec<Check>) {
    let f4_43 = "2*4_3 + 2*4_4 + 1_2 + 9_2 + 2*6_1 + 16_1 + 1_3 + 9_3";
    let f4_12 = "1_2 + 4_3 + 6_1 + 4_4 + 1_3";
    let g2_13 = "φ{1,3}' + φ{1,3}'' + φ{2,2}";
    let cases: Vec<(CartanType, &str, &str)> = vec![
        (CartanType::G2, "φ{1,3}'", g2_13),
        (CartanType::G2, "φ{1,3}''", g2_13),
        (CartanType::G2, "φ{2,2}", "2*φ{2,2} + φ{2,1} + φ{1,3}' + φ{1,3}''"),
        (CartanType::F4, "1_2", f4_12),
        (CartanType::F4, "1_3", f4_12),
        (CartanType::F4, "4_1", "2*4_1 + 6_2 + 2*16_1 + 12_1 + 6_1"),
        // the reference line omits one 6_2; with it the dimensions sum to 6 * 2^4
        (CartanType::F4, "6_1", F4_61_CORRECTED),
        (CartanType::F4, "4_3", f4_43),
        (CartanType::F4, "4_4", f4_43),
        (CartanType::E6, "10_s", "3*10_s + 4*60_s + 3*90_s + 20_s + 80_s"),
        (
            CartanType::E8,
            "168_y",
            "3*168_y + 4*1344_w + 3*420_y + 3*1134_y + 2*3150_y + 2*448_w + 2*2016_w + 2*5600_w + 70_y + 1400_y + 1680_y + 2688_y + 4200_y",
        ),
        (
            CartanType::E8,
            "420_y",
            "5*420_y + 6*1344_w + 4*2016_w + 3*168_y + 4*1134_y + 3*2688_y + 4*3150_y + 3*4200_y + 2*448_w + 4*5600_w + 2*7168_w + 70_y + 1400_y + 1680_y + 4536_y + 5670_y",
        ),
    ];
    for (ty, sigma, want) in cases {
        let id = format!("decompositions/{ty}/{sigma}");
        let Some(t) = table_or(provider, ty, 4, &id, out) else {
            continue;
        };
        let res = (|| -> Result<(Multiset, Multiset, i64, u64)> {
            let i = t.find(sigma)?;
            let want = parse_decomposition(&t, want)?;
            let d = decompose_with_wedge(&t, i)?;
            let total: u64 = d.iter().map(|&(j, m)| m * t.irrep(j).dim() as u64).sum();
            let got = d.into_iter().map(|(j, m)| (t.label(j).to_string(), m)).collect();
            Ok((want, got, t.irrep(i).dim(), total))
        })();
        match res {
            Ok((want, got, dim, total)) => {
                out.push(Check::compare(4, &id, render_decomposition(&want), render_decomposition(&got)));
                let expect = dim as u64 * (1u64 << t.group().rank());
                out.push(Check::compare(
                    4,
                    format!("{id}/dimension"),
                    format!("{dim}*2^{} = {expect}", t.group().rank()),
                    format!("{dim}*2^{} = {total}", t.group().rank()),
                ));
            }
            Err(e) => out.push(Check::error(4, id, &e)),
        }
    }
    // the reference F4 6_1 line differs from the computed one by exactly 6_2
    if let Some(t) = table_or(provider, CartanType::F4, 4, "decompositions/F4/6_1/reference", out) {
        let res = (|| -> Result<(String, i64)> {
            let reference = parse_decomposition(&t, F4_61_REFERENCE)?;
            let got = decompose_with_wedge(&t, t.find("6_1")?)?;
            let mut diff = BTreeMap::new();
            for (j, m) in got {
                let p = reference.get(t.label(j).to_string().as_str()).copied().unwrap_or(0);
                if m != p {
                    diff.insert(t.label(j).to_string(), m.saturating_sub(p));
                }
            }
            let reference_dim: i64 =
                reference.iter().map(|(l, m)| *m as i64 * t.irrep(t.find(l).unwrap_or(0)).dim()).sum();
            Ok((render_decomposition(&diff), reference_dim))
        })();
        match res {
            Ok((diff, dim)) => out.push(Check::compare(
                4,
                "decompositions/F4/6_1/reference",
                "reference sum 90 = 96 - 6, missing 1*6_2",
                format!("reference sum {dim} = 96 - {}, missing {diff}", 96 - dim),
            )),
            Err(e) => out.push(Check::error(4, "decompositions/F4/6_1/reference", &e)),
        }
    }
}

fn cells(provider: &TableProvider, out: &mut Vec<Check>) {
    let equal = ProjPoint::ratio(int(1));
    for ty in [CartanType::G2, CartanType::F4, CartanType::E6] {
        let id = format!("cells/{ty}");
        if table_or(provider, ty, 5, &id, out).is_none() {
            continue;
        }
        match cm_cell_report(ty, provider, &equal) {
            Ok(r) => out.push(Check::compare(5, id, CellVerdict::Equal, r.verdict)),
            Err(e) => out.push(Check::error(5, id, &e)),
        }
    }
    let strs =
        |s: &BTreeSet<crate::chars::IrrepLabel>| -> BTreeSet<String> { s.iter().map(|l| l.to_string()).collect() };
    if table_or(provider, CartanType::E8, 5, "cells/E8", out).is_some() {
        match cm_cell_report(CartanType::E8, provider, &equal) {
            Ok(r) => {
                let fam = strs(&r.family);
                let mut lower_want = fam.clone();
                lower_want.remove("4480_y");
                let mut upper_want = fam.clone();
                upper_want.insert("2100_y".into());
                out.push(Check::compare(5, "cells/E8/lower", set_string(&lower_want), set_string(&strs(&r.lower))));
                out.push(Check::compare(5, "cells/E8/upper", set_string(&upper_want), set_string(&strs(&r.upper))));
                out.push(Check::compare(5, "cells/E8/verdict", CellVerdict::Sandwich, r.verdict));
                out.push(Check::compare(5, "cells/E8/family-size", 17, fam.len()));
            }
            Err(e) => out.push(Check::error(5, "cells/E8", &e)),
        }
    }
    if table_or(provider, CartanType::E7, 5, "cells/E7", out).is_some() {
        match cm_cell_report(CartanType::E7, provider, &equal) {
            Ok(r) => {
                out.push(Check::compare(5, "cells/E7/zero-N", "{512_a, 512_a'}", set_string(&strs(&r.upper))));
                out.push(Check::compare(5, "cells/E7/one-W-types", "{}", set_string(&strs(&r.lower))));
            }
            Err(e) => out.push(Check::error(5, "cells/E7", &e)),
        }
    }
    for ty in [CartanType::B(2), CartanType::B(6), CartanType::D(4), CartanType::D(9)] {
        let id = format!("cells/{ty}");
        match cm_cell_report(ty, provider, &equal) {
            Ok(r) => {
                let ok = r.family.is_subset(&r.lower) && r.lower.is_subset(&r.upper) && !r.family.is_empty();
                out.push(Check::holds(
                    5,
                    id,
                    "cuspidal family within the lower bound, lower within upper",
                    ok,
                    format!("family {} lower {} upper {}: {}", r.family.len(), r.lower.len(), r.upper.len(), r.verdict),
                ));
            }
            Err(e) => out.push(Check::error(5, id, &e)),
        }
    }
    match cm_cell_report(CartanType::A(4), provider, &equal) {
        Ok(r) => out.push(Check::compare(
            5,
            "cells/A4",
            "no cuspidal family",
            if r.family.is_empty() { "no cuspidal family" } else { "family present" },
        )),
        Err(e) => out.push(Check::error(5, "cells/A4", &e)),
    }
    // F4 at generic unequal parameters: the cell contains these
    match cm_cell_report(CartanType::F4, provider, &ProjPoint::ratio(int(2))) {
        Ok(r) => {
            let want: BTreeSet<String> = ["4_1", "6_1", "6_2", "16_1", "12_1"].iter().map(|s| s.to_string()).collect();
            out.push(Check::compare(5, "cells/F4/generic", set_string(&want), set_string(&strs(&r.lower))));
        }
        Err(e) => out.push(Check::error(5, "cells/F4/generic", &e)),
    }
}

/// Flips the lowest bit of the last value in the last row.
fn corrupt(text: &str) -> String {
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let last = lines.iter().rposition(|l| l.starts_with("irrep")).unwrap_or(0);
    let mut parts: Vec<String> = lines[last].split(' ').map(String::from).collect();
    let k = parts.len() - 1;
    let v: i64 = parts[k].parse().unwrap_or(0);
    parts[k] = (v ^ 1).to_string();
    lines[last] = parts.join(" ");
    lines.join("\n")
}

fn table_integrity(provider: &TableProvider, out: &mut Vec<Check>) {
    let mut computed: Vec<(CartanType, Result<CharacterTable>)> = Vec::new();
    for n in 2..=5 {
        computed.push((CartanType::B(n), classical_table(CartanType::B(n))));
    }
    computed.push((CartanType::D(4), classical_table(CartanType::D(4))));
    for n in 1..=5 {
        computed.push((CartanType::A(n), classical_table(CartanType::A(n))));
    }
    for ty in [CartanType::G2, CartanType::F4, CartanType::E6, CartanType::E7, CartanType::E8] {
        if provider.available(ty) {
            computed.push((ty, provider.table(ty)));
        } else {
            out.push(Check::skip(6, format!("table-integrity/{ty}"), &format!("no data file for {ty}")));
        }
    }
    for (ty, t) in computed {
        let id = format!("table-integrity/{ty}");
        match t.and_then(|t| t.validate().map(|_| t)) {
            Ok(t) => out.push(Check::holds(
                6,
                id,
                "both orthogonality relations",
                true,
                format!("{} classes, orthogonal", t.num_classes()),
            )),
            Err(e) => out.push(Check::error(6, id, &e)),
        }
    }
    for (ty, classes) in [(CartanType::E7, 60), (CartanType::E8, 112)] {
        let id = format!("table-integrity/{ty}/classes");
        if let Some(t) = table_or(provider, ty, 6, &id, out) {
            out.push(Check::compare(6, id, classes, t.num_classes()));
        }
    }
    // a single flipped bit is rejected
    let victim = if provider.available(CartanType::E7) {
        provider.table(CartanType::E7)
    } else {
        classical_table(CartanType::B(4))
    };
    match victim {
        Ok(t) => {
            let bad = corrupt(&write_table(&t));
            let rejected = parse_table(&bad).is_err();
            out.push(Check::holds(
                6,
                format!("table-integrity/{}/corruption", t.cartan_type()),
                "rejected",
                rejected,
                if rejected { "rejected" } else { "accepted" },
            ));
        }
        Err(e) => out.push(Check::error(6, "table-integrity/corruption", &e)),
    }
}

/// Rows of a table keyed by class name, as a sorted multiset.
fn row_multiset(t: &CharacterTable) -> Vec<Vec<(String, i64)>> {
    let mut rows: Vec<Vec<(String, i64)>> = t
        .irreps()
        .iter()
        .map(|ir| {
            let mut r: Vec<(String, i64)> =
                t.classes().iter().map(|c| c.name.clone()).zip(ir.values.iter().copied()).collect();
            r.sort();
            r
        })
        .collect();
    rows.sort();
    rows
}

fn oracles(provider: &TableProvider, out: &mut Vec<Check>) {
    // (i) combinatorial characters against the class-sum method
    let mut types: Vec<CartanType> = (2..=4).map(CartanType::B).collect();
    types.extend((1..=5).map(CartanType::A));
    for ty in types {
        let id = format!("oracles/i/{ty}");
        let res = (|| -> Result<bool> {
            let comb = classical_table(ty)?;
            let dixon = compute_table(&WeylGroup::of_type(ty)?, DEFAULT_ENUMERATION_CAP)?;
            Ok(row_multiset(&comb) == row_multiset(&dixon))
        })();
        match res {
            Ok(ok) => out.push(Check::holds(
                7,
                id,
                "identical tables",
                ok,
                if ok { "identical tables" } else { "tables differ" },
            )),
            Err(e) => out.push(Check::error(7, id, &e)),
        }
    }
    // (ii) character criterion against the group-algebra criterion
    let mut small: Vec<CartanType> = vec![CartanType::G2, CartanType::F4, CartanType::D(4), CartanType::D(5)];
    small.extend((2..=5).map(CartanType::B));
    small.extend((1..=6).map(CartanType::A));
    for ty in small {
        let id = format!("oracles/ii/{ty}");
        let res = (|| -> Result<(Vec<String>, Vec<String>, usize)> {
            let t = provider.table(ty)?;
            let m = MatrixCriterion::new(&t)?;
            let [c1, c2] = test_commutators(t.group().root_system());
            let (g1, g2) = (square_and_group(&t, &c1)?, square_and_group(&t, &c2)?);
            let mut full = Vec::new();
            let mut real = Vec::new();
            for i in 0..t.irreps().len() {
                let a = vanishing_constraints(&t, i, &g1, &g2);
                let b = m.constraints(&t, i);
                if a != b {
                    full.push(format!("{}: character {a} / matrix {b}", t.label(i)));
                }
                if a.real_part() != b {
                    real.push(format!("{}: character {} / matrix {b}", t.label(i), a.real_part()));
                }
            }
            Ok((full, real, t.irreps().len()))
        })();
        match res {
            Ok((full, real, n)) => {
                let agree = format!("{n} irreps agree");
                let render = |v: &[String]| if v.is_empty() { agree.clone() } else { v.join("; ") };
                out.push(Check::compare(7, &id, &agree, render(&full)));
                out.push(Check::compare(7, format!("{id}/real-parameters"), &agree, render(&real)));
            }
            Err(e) => out.push(Check::error(7, id, &e)),
        }
    }
    // (iii) the seminormal model is scalar exactly on rectangles
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 2..=8 {
        for lam in Partition::all(n) {
            count += 1;
            let want = lam.is_rectangle().map(|(k, d)| int(k as i64 - d as i64));
            let got = seminormal_scalar(&lam);
            let literal = want.as_ref().map(|c| crate::onewtype::seminormal_oracle(&lam, c));
            if got != want || literal == Some(false) {
                bad.push(format!("{lam}"));
            }
        }
    }
    out.push(Check::holds(
        7,
        "oracles/iii",
        "true iff rectangular, at k-d",
        bad.is_empty(),
        if bad.is_empty() { format!("{count} partitions of 2..8") } else { format!("wrong on {}", bad.join(", ")) },
    ));
}

fn nform_neg(n: &NForm) -> NForm {
    NForm { long: -n.long.clone(), short: -n.short.clone() }
}

/// `N_c = 0` everywhere on a constraint set.
fn n_vanishes_on(nf: &NForm, s: &crate::algebra::ConstraintSet) -> bool {
    match s {
        crate::algebra::ConstraintSet::All => nf.is_zero(),
        crate::algebra::ConstraintSet::Points(p) => p.iter().all(|x| n_vanishes_at(nf, x)),
    }
}

fn invariants(provider: &TableProvider, out: &mut Vec<Check>) {
    let mut types: Vec<CartanType> = EXCEPTIONAL.to_vec();
    types.extend((2..=5).map(CartanType::B));
    types.extend([CartanType::D(4), CartanType::D(5)]);
    types.extend((1..=5).map(CartanType::A));
    for ty in types {
        let id = format!("invariants/{ty}");
        let Some(t) = table_or(provider, ty, 8, &id, out) else {
            continue;
        };
        let forms: Vec<NForm> = (0..t.irreps().len()).map(|i| n_invariant(&t, i)).collect();
        let twist_bad: Vec<String> = (0..forms.len())
            .filter(|&i| forms[t.sgn_twist(i)] != nform_neg(&forms[i]))
            .map(|i| t.label(i).to_string())
            .collect();
        out.push(Check::holds(
            8,
            format!("{id}/sgn-twist"),
            "N(sigma (x) sgn) = -N(sigma)",
            twist_bad.is_empty(),
            if twist_bad.is_empty() { format!("{} irreps", forms.len()) } else { twist_bad.join(", ") },
        ));
        let non_int: Vec<String> =
            (0..forms.len()).filter(|&i| !forms[i].equal().is_integer()).map(|i| t.label(i).to_string()).collect();
        out.push(Check::holds(
            8,
            format!("{id}/integral"),
            "N integral at equal parameters",
            non_int.is_empty(),
            if non_int.is_empty() { "all integral".to_string() } else { non_int.join(", ") },
        ));
        if let Some(triv) = t.trivial_index() {
            out.push(Check::compare(8, format!("{id}/trivial"), ty.num_positive_roots(), forms[triv].equal()));
        }
        // classified irreps and their wedge constituents have N = 0 where a
        // one-W-type module exists; the exact matrix model decides existence
        // for |W| <= 10^4
        let res = (|| -> Result<(Vec<String>, Vec<String>)> {
            let c = if ty.is_exceptional() { classify(ty, provider)? } else { classify_table(&t)? };
            let matrix = if t.order() <= 10_000 { Some(MatrixCriterion::new(&t)?) } else { None };
            let mut bad = Vec::new();
            let mut spurious = Vec::new();
            for (l, s) in &c.entries {
                let i = t.find(&l.to_string())?;
                let admissible = match &matrix {
                    Some(m) => s.intersect(&m.constraints(&t, i)),
                    None => s.clone(),
                };
                let rejected = match (s, &admissible) {
                    (crate::algebra::ConstraintSet::Points(p), crate::algebra::ConstraintSet::Points(q)) => {
                        p.iter().filter(|x| !q.contains(x)).cloned().collect()
                    }
                    _ => Vec::new(),
                };
                let constituents = decompose_with_wedge(&t, i)?;
                if !n_vanishes_on(&forms[i], &admissible) {
                    bad.push(format!("{l} at {admissible}"));
                }
                for &(j, _) in &constituents {
                    if !n_vanishes_on(&forms[j], &admissible) {
                        bad.push(format!("{} in {l} (x) wedge at {admissible}", t.label(j)));
                    }
                }
                // a point the matrix model rejects must also break the N test
                for p in rejected {
                    if constituents.iter().all(|&(j, _)| n_vanishes_at(&forms[j], &p)) {
                        bad.push(format!("{l} at rejected point {p} passes the N test"));
                    } else {
                        spurious.push(format!("{l}@{p}"));
                    }
                }
            }
            Ok((bad, spurious))
        })();
        match res {
            Ok((bad, spurious)) => {
                let mut computed = if bad.is_empty() { "holds".to_string() } else { bad.join("; ") };
                if !spurious.is_empty() && bad.is_empty() {
                    computed = format!("holds; character-only points {} fail the N test", spurious.join(", "));
                }
                out.push(Check::holds(
                    8,
                    format!("{id}/admissible"),
                    "N_c = 0 on the locus, with all wedge constituents",
                    bad.is_empty(),
                    computed,
                ))
            }
            Err(e) => out.push(Check::error(8, format!("{id}/admissible"), &e)),
        }
    }
    // large classical types without a full table
    for ty in [CartanType::B(6), CartanType::B(8), CartanType::D(9)] {
        let id = format!("invariants/{ty}/admissible");
        let res = (|| -> Result<Vec<String>> {
            let mut chars = BnCharacters::new();
            let mut bad = Vec::new();
            for (l, s) in classify(ty, provider)?.entries {
                let pts = match &s {
                    crate::algebra::ConstraintSet::All => vec![ProjPoint::ratio(int(1)), ProjPoint::ratio(int(3))],
                    crate::algebra::ConstraintSet::Points(p) => p.clone(),
                };
                for p in pts {
                    for (c, _) in crate::cells::classical_decomposition(ty, &l)?.into_iter().chain([(l.clone(), 1)]) {
                        if !n_vanishes_at(&classical_n_form(ty, &c, &mut chars)?, &p) {
                            bad.push(format!("{c} for {l} at {p}"));
                        }
                    }
                }
            }
            Ok(bad)
        })();
        match res {
            Ok(bad) => out.push(Check::holds(
                8,
                id,
                "N_c = 0 on the locus, with all wedge constituents",
                bad.is_empty(),
                if bad.is_empty() { "holds".to_string() } else { bad.join("; ") },
            )),
            Err(e) => out.push(Check::error(8, id, &e)),
        }
    }
}

fn fake_degrees(provider: &TableProvider, out: &mut Vec<Check>) {
    for (ty, want) in
        [(CartanType::E6, vec![0, 1, 5, 10, 17, 25, 36]), (CartanType::E8, vec![0, 1, 8, 19, 32, 49, 68, 91, 120])]
    {
        let id = format!("fake-degrees/{ty}/wedge");
        let Some(t) = table_or(provider, ty, 9, &id, out) else {
            continue;
        };
        let res = (|| -> Result<Vec<usize>> {
            let b = b_invariants(&t)?;
            (0..=t.group().rank())
                .map(|l| {
                    let d = tensor_decompose(&t, &wedge_class_function(&t, l)?)?;
                    Ok(b[d[0].0])
                })
                .collect()
        })();
        match res {
            Ok(got) => out.push(Check::compare(9, id, format!("{want:?}"), format!("{got:?}"))),
            Err(e) => out.push(Check::error(9, id, &e)),
        }
    }
    let mut types: Vec<CartanType> = EXCEPTIONAL.to_vec();
    types.extend([CartanType::B(3), CartanType::D(4), CartanType::A(4)]);
    for ty in types {
        let id = format!("fake-degrees/{ty}/trivial-sign");
        let Some(t) = table_or(provider, ty, 9, &id, out) else {
            continue;
        };
        match b_invariants(&t) {
            Ok(b) => {
                let got = (t.trivial_index().map(|i| b[i]), t.sign_index().map(|i| b[i]));
                out.push(Check::compare(
                    9,
                    id,
                    format!("b(trivial)=0 b(sgn)={}", ty.num_positive_roots()),
                    format!("b(trivial)={} b(sgn)={}", got.0.unwrap_or(usize::MAX), got.1.unwrap_or(usize::MAX)),
                ));
            }
            Err(e) => out.push(Check::error(9, id, &e)),
        }
    }
}

fn reduction(out: &mut Vec<Check>) {
    let mut types: Vec<CartanType> = (1..=8).map(CartanType::A).collect();
    types.extend((2..=8).map(CartanType::B));
    types.extend((4..=9).map(CartanType::D));
    types.extend(EXCEPTIONAL);
    for ty in types {
        let id = format!("reduction/{ty}");
        match WeylGroup::of_type(ty) {
            Ok(g) => {
                let r = g.reduction_hypotheses(&g.root_system().test_vectors());
                out.push(Check::holds(10, id, "both spanning conditions", r.holds(), r));
            }
            Err(e) => out.push(Check::error(10, id, &e)),
        }
    }
}
