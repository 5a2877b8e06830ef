//! Cuspidal families and the Calogero-Moser cell of the point where `h` and
//! `h*` act by zero.
//!
//! Every constituent of `sigma (x) wedge(h)` for a one-W-type `sigma` lies in
//! that cell (lower bound), and every member `tau` satisfies `N_c(tau) = 0`
//! (upper bound). Reports compare both bounds with the cuspidal family.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{ToPrimitive, Zero};

use crate::algebra::{Bipartition, Partition, ProjPoint, Rat};
use crate::chars::{
    canonical_d, decompose_with_wedge, n_invariant, BnCharacters, CharacterTable, IrrepLabel, NForm, SignedCycleType,
    TableProvider,
};
use crate::error::{Error, Result};
use crate::onewtype::{classify, n_vanishes_at};
use crate::rootsys::CartanType;

/// Littlewood-Richardson coefficient `c^lam_{mu, nu}`, by enumerating
/// LR tableaux of shape `lam / mu` and content `nu`.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lam: &Partition) -> Result<u64> {
    if mu.size() + nu.size() != lam.size() {
        return Err(Error::SizeMismatch(format!("|{mu}| + |{nu}| != |{lam}|")));
    }
    if !lam.contains(mu) || !lam.contains(nu) {
        return Ok(0);
    }
    let rows = lam.len();
    // cells in row order; each row filled left to right
    let cells: Vec<(usize, usize)> = (0..rows).flat_map(|r| (mu.part(r)..lam.part(r)).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; lam.part(r)]).collect();
    let mut remaining: Vec<usize> = nu.parts().to_vec();

    fn lattice_ok(grid: &[Vec<usize>], mu: &Partition, upto_row: usize, k: usize) -> bool {
        // reverse reading word: rows top to bottom, each right to left
        let mut count = vec![0usize; k];
        for (r, row) in grid.iter().enumerate().take(upto_row + 1) {
            for c in (mu.part(r)..row.len()).rev() {
                let v = row[c];
                count[v] += 1;
                if v > 0 && count[v] > count[v - 1] {
                    return false;
                }
            }
        }
        true
    }

    fn rec(
        i: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        mu: &Partition,
        k: usize,
    ) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let mut total = 0;
        for v in 0..k {
            if remaining[v] == 0 {
                continue;
            }
            // weakly increasing along rows
            if c > mu.part(r) && grid[r][c - 1] > v {
                continue;
            }
            // strictly increasing down columns
            if r > 0 && c < grid[r - 1].len() && c >= mu.part(r - 1) && grid[r - 1][c] >= v {
                continue;
            }
            // entries in row r are at most r
            if v > r {
                continue;
            }
            grid[r][c] = v;
            remaining[v] -= 1;
            let row_end = i + 1 == cells.len() || cells[i + 1].0 != r;
            if !row_end || lattice_ok(grid, mu, r, k) {
                total += rec(i + 1, cells, grid, remaining, mu, k);
            }
            remaining[v] += 1;
        }
        total
    }

    let k = nu.len();
    if k == 0 {
        return Ok(u64::from(mu == lam));
    }
    Ok(rec(0, &cells, &mut grid, &mut remaining, mu, k))
}

/// Constituents of `(lam) x (0) (x) wedge(h)` in `B_n`:
/// `sum_{mu, nu} c^lam_{mu, nu} (mu) x (nu^t)`.
pub fn wedge_constituents(lam: &Partition) -> Result<Vec<(Bipartition, u64)>> {
    let mut out = Vec::new();
    for mu in lam.subdiagrams() {
        let rest = lam.size() - mu.size();
        for nu in Partition::all(rest) {
            let c = lr_coefficient(&mu, &nu, lam)?;
            if c > 0 {
                out.push((Bipartition::new(mu.clone(), nu.transpose()), c));
            }
        }
    }
    Ok(out)
}

/// [`wedge_constituents`] for a rectangle; every multiplicity is one and
/// the constituents are `(mu) x ((lam \ mu)^t)` for `mu` inside `lam`.
pub fn rectangle_constituents(lam: &Partition) -> Result<Vec<(Bipartition, u64)>> {
    if lam.is_rectangle().is_none() {
        return Err(Error::NotRectangular(lam.to_string()));
    }
    wedge_constituents(lam)
}

/// A symbol: two strictly increasing rows of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "[{} / {}]", row(&self.top), row(&self.bottom))
    }
}

/// Parts in increasing order, padded with zeros to `len`, plus `0, 1, ...`.
fn symbol_row(p: &Partition, len: usize) -> Result<Vec<usize>> {
    if p.len() > len {
        return Err(Error::SymbolPadding(format!("{p} has more than {len} parts")));
    }
    Ok((0..len).map(|i| p.part(len - 1 - i) + i).collect())
}

/// `B_n` symbol with rows of lengths `d + 1` and `d`.
pub fn bn_symbol(bip: &Bipartition, d: usize) -> Result<Symbol> {
    Ok(Symbol { top: symbol_row(&bip.left, d + 1)?, bottom: symbol_row(&bip.right, d)? })
}

/// `D_n` symbol with two rows of length `d`.
pub fn dn_symbol(bip: &Bipartition, d: usize) -> Result<Symbol> {
    Ok(Symbol { top: symbol_row(&bip.left, d)?, bottom: symbol_row(&bip.right, d)? })
}

/// Rows disjoint with union `{0, 1, ..., m}`.
pub fn is_cuspidal_symbol(s: &Symbol) -> bool {
    let all: BTreeSet<usize> = s.top.iter().chain(&s.bottom).copied().collect();
    let m = s.top.len() + s.bottom.len();
    all.len() == m && all.iter().copied().eq(0..m)
}

fn row_partition(row: &[usize]) -> Partition {
    Partition::new(row.iter().enumerate().map(|(i, &x)| x - i).rev().collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `d` with `n = d^2 + d` (type B) or `n = d^2` (type D).
pub fn cuspidal_d(ty: CartanType) -> Option<usize> {
    match ty {
        CartanType::B(n) => (1..=n).find(|d| d * d + d == n),
        CartanType::D(n) => (2..=n).find(|d| d * d == n),
        _ => None,
    }
}

/// Labels of the irreps whose symbol is cuspidal.
pub fn cuspidal_bipartitions(ty: CartanType) -> Vec<IrrepLabel> {
    let Some(d) = cuspidal_d(ty) else {
        return Vec::new();
    };
    let mut out = BTreeSet::new();
    match ty {
        CartanType::B(_) => {
            for bottom in subsets(2 * d + 1, d) {
                let top: Vec<usize> = (0..=2 * d).filter(|x| !bottom.contains(x)).collect();
                out.insert(IrrepLabel::Bipartition(Bipartition::new(row_partition(&top), row_partition(&bottom))));
            }
        }
        _ => {
            for bottom in subsets(2 * d, d) {
                let top: Vec<usize> = (0..2 * d).filter(|x| !bottom.contains(x)).collect();
                let b = Bipartition::new(row_partition(&top), row_partition(&bottom));
                out.insert(IrrepLabel::Bipartition(canonical_d(&b)));
            }
        }
    }
    out.into_iter().collect()
}

/// Sign twist of a classical label.
fn classical_sgn(ty: CartanType, l: &IrrepLabel) -> IrrepLabel {
    match (ty, l) {
        (CartanType::D(_), IrrepLabel::Bipartition(b)) => IrrepLabel::Bipartition(canonical_d(&b.sgn_twist())),
        (_, IrrepLabel::Bipartition(b)) => IrrepLabel::Bipartition(b.sgn_twist()),
        _ => l.clone(),
    }
}

/// A cuspidal family with its special member and sign-twist pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyData {
    pub cartan_type: CartanType,
    pub special: IrrepLabel,
    pub members: Vec<IrrepLabel>,
    /// Members exchanged by the sign twist; other members are fixed.
    pub sgn_pairs: Vec<(IrrepLabel, IrrepLabel)>,
}

impl FamilyData {
    /// Image of a member under the sign twist.
    pub fn sgn(&self, l: &IrrepLabel) -> IrrepLabel {
        for (a, b) in &self.sgn_pairs {
            if a == l {
                return b.clone();
            }
            if b == l {
                return a.clone();
            }
        }
        l.clone()
    }
}

const BUNDLED_FAMILIES: &str = include_str!("../data/families.txt");

/// Splits on commas outside braces, so `φ{2,1}` stays whole.
fn split_labels(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Parses `family <group> special <label> members <l,...> sgn_pairs <a:b,...>`.
pub fn parse_families(text: &str) -> Result<Vec<FamilyData>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse { line: n + 1, msg: msg.to_string() };
        let tok: Vec<&str> = line.split_whitespace().collect();
        let field = |key: &str| -> Result<Option<&str>> {
            let i = tok.iter().position(|t| *t == key).ok_or_else(|| err(&format!("missing '{key}'")))?;
            Ok(tok.get(i + 1).copied().filter(|t| !matches!(*t, "special" | "members" | "sgn_pairs")))
        };
        if tok.first() != Some(&"family") || tok.len() < 2 {
            return Err(err("expected 'family <group>'"));
        }
        let ty = CartanType::parse(tok[1], None).map_err(|e| err(&e.to_string()))?;
        let special = IrrepLabel::named(field("special")?.ok_or_else(|| err("missing special label"))?);
        let members: Vec<IrrepLabel> =
            split_labels(field("members")?.unwrap_or("")).iter().map(|s| IrrepLabel::named(s)).collect();
        let sgn_pairs = split_labels(field("sgn_pairs")?.unwrap_or(""))
            .iter()
            .map(|p| {
                let (a, b) = p.split_once(':').ok_or_else(|| err(&format!("bad sign pair {p}")))?;
                Ok((IrrepLabel::named(a), IrrepLabel::named(b)))
            })
            .collect::<Result<Vec<_>>>()?;
        if !members.contains(&special) {
            return Err(err("special label is not a member"));
        }
        if sgn_pairs.iter().any(|(a, b)| !members.contains(a) || !members.contains(b)) {
            return Err(err("sign pair outside the family"));
        }
        out.push(FamilyData { cartan_type: ty, special, members, sgn_pairs });
    }
    Ok(out)
}

fn staircase(d: usize) -> Partition {
    Partition::new((1..=d).rev().collect())
}

/// The cuspidal family of a type, or `None` when there is none.
pub fn cuspidal_family(ty: CartanType) -> Result<Option<FamilyData>> {
    if ty.is_exceptional() {
        return Ok(parse_families(BUNDLED_FAMILIES)?.into_iter().find(|f| f.cartan_type == ty));
    }
    let Some(d) = cuspidal_d(ty) else {
        return Ok(None);
    };
    let members = cuspidal_bipartitions(ty);
    let special = match ty {
        CartanType::B(_) => Bipartition::new(staircase(d), staircase(d)),
        _ => canonical_d(&Bipartition::new(staircase(d), staircase(d - 1))),
    };
    let mut sgn_pairs = Vec::new();
    for m in &members {
        let t = classical_sgn(ty, m);
        if t != *m && !sgn_pairs.iter().any(|(_, b)| b == m) {
            sgn_pairs.push((m.clone(), t));
        }
    }
    Ok(Some(FamilyData { cartan_type: ty, special: IrrepLabel::Bipartition(special), members, sgn_pairs }))
}

/// `N_c` of a classical irrep from its values on the reflection classes.
pub fn classical_n_form(ty: CartanType, label: &IrrepLabel, chars: &mut BnCharacters) -> Result<NForm> {
    let n = ty.rank();
    let bip = label.bipartition().ok_or_else(|| Error::InvalidLabel(format!("{label} is not a bipartition")))?;
    let ones = |k: usize| Partition::new(vec![1; k]);
    let long = SignedCycleType::new(Partition::new([vec![2], vec![1; n - 2]].concat()), Partition::empty());
    let short = SignedCycleType::new(ones(n - 1), ones(1));
    let id = SignedCycleType::new(ones(n), Partition::empty());
    let dim = Rat::from_integer(chars.value(&bip, &id)?.into());
    let term = |c: &SignedCycleType, chars: &mut BnCharacters| -> Result<Rat> {
        Ok(Rat::from_integer((c.class_size() as i64 * chars.value(&bip, c)?).into()) / &dim)
    };
    // split irreps of D_n take half of each value, so the ratio is unchanged
    Ok(match ty {
        CartanType::B(_) => NForm { long: term(&long, chars)?, short: term(&short, chars)? },
        CartanType::D(_) => NForm { long: term(&long, chars)?, short: Rat::zero() },
        _ => return Err(Error::UnsupportedType(format!("{ty} is not of type B or D"))),
    })
}

/// Irreps of a table with `N_c = 0` at the given point.
pub fn zero_n_set(table: &CharacterTable, p: &ProjPoint) -> Vec<IrrepLabel> {
    (0..table.irreps().len())
        .filter(|&i| n_vanishes_at(&n_invariant(table, i), p))
        .map(|i| table.label(i).clone())
        .collect()
}

/// All labels of a classical type (non-split D pairs in canonical order).
fn classical_labels(ty: CartanType) -> Vec<IrrepLabel> {
    let n = ty.rank();
    let mut out = BTreeSet::new();
    for b in Bipartition::all(n) {
        match ty {
            CartanType::D(_) if b.left == b.right => {
                out.insert(IrrepLabel::Split(b.left.clone(), true));
                out.insert(IrrepLabel::Split(b.left, false));
            }
            CartanType::D(_) => {
                out.insert(IrrepLabel::Bipartition(canonical_d(&b)));
            }
            _ => {
                out.insert(IrrepLabel::Bipartition(b));
            }
        }
    }
    out.into_iter().collect()
}

/// Outcome of comparing the bounds with the cuspidal family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellVerdict {
    /// Lower bound = family = upper bound.
    Equal,
    /// Lower bound within family within upper bound, with a gap.
    Sandwich,
    /// Family within the lower bound; no matching upper bound.
    ContainsFamily,
    /// None of the above.
    Other,
    /// No one-W-type module, hence no lower bound.
    NoLowerBound,
}

impl fmt::Display for CellVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellVerdict::Equal => "cell equals the cuspidal family",
            CellVerdict::Sandwich => "cuspidal family lies between the bounds",
            CellVerdict::ContainsFamily => "cell contains the cuspidal family",
            CellVerdict::Other => "bounds and family are not nested",
            CellVerdict::NoLowerBound => "no one-W-type module; only the upper bound applies",
        })
    }
}

/// Bounds on the cell of the zero point, and how they compare with the
/// cuspidal family.
#[derive(Clone, Debug)]
pub struct CuspidalCellReport {
    pub cartan_type: CartanType,
    pub point: ProjPoint,
    pub classified: Vec<IrrepLabel>,
    /// `sigma (x) wedge(h)` for each classified `sigma`.
    pub decompositions: Vec<(IrrepLabel, Vec<(IrrepLabel, u64)>)>,
    /// Union of the constituents: a lower bound for the cell.
    pub lower: BTreeSet<IrrepLabel>,
    /// Irreps with `N_c = 0`: an upper bound for the cell.
    pub upper: BTreeSet<IrrepLabel>,
    pub family: BTreeSet<IrrepLabel>,
    pub verdict: CellVerdict,
}

impl CuspidalCellReport {
    /// Family members missing from the lower bound.
    pub fn family_minus_lower(&self) -> Vec<IrrepLabel> {
        self.family.difference(&self.lower).cloned().collect()
    }

    /// Upper bound members outside the family.
    pub fn upper_minus_family(&self) -> Vec<IrrepLabel> {
        self.upper.difference(&self.family).cloned().collect()
    }

    pub fn lower_within_upper(&self) -> bool {
        self.lower.is_subset(&self.upper)
    }
}

fn join(ls: impl IntoIterator<Item = IrrepLabel>) -> String {
    let v: Vec<String> = ls.into_iter().map(|l| l.to_string()).collect();
    if v.is_empty() {
        "{}".into()
    } else {
        format!("{{{}}}", v.join(", "))
    }
}

impl fmt::Display for CuspidalCellReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} at {}", self.cartan_type, self.point)?;
        writeln!(f, "  one-W-types: {}", join(self.classified.iter().cloned()))?;
        for (s, d) in &self.decompositions {
            let terms: Vec<String> =
                d.iter().map(|(l, m)| if *m == 1 { l.to_string() } else { format!("{m}*{l}") }).collect();
            writeln!(f, "  {s} (x) wedge(h) = {}", terms.join(" + "))?;
        }
        writeln!(f, "  lower bound ({}): {}", self.lower.len(), join(self.lower.iter().cloned()))?;
        writeln!(f, "  upper bound ({}): {}", self.upper.len(), join(self.upper.iter().cloned()))?;
        writeln!(f, "  cuspidal family ({}): {}", self.family.len(), join(self.family.iter().cloned()))?;
        writeln!(f, "  family minus lower: {}", join(self.family_minus_lower()))?;
        writeln!(f, "  upper minus family: {}", join(self.upper_minus_family()))?;
        writeln!(f, "  verdict: {}", self.verdict)
    }
}

fn verdict(lower: &BTreeSet<IrrepLabel>, upper: &BTreeSet<IrrepLabel>, family: &BTreeSet<IrrepLabel>) -> CellVerdict {
    if lower.is_empty() {
        CellVerdict::NoLowerBound
    } else if lower == family && family == upper {
        CellVerdict::Equal
    } else if lower.is_subset(family) && family.is_subset(upper) {
        CellVerdict::Sandwich
    } else if family.is_subset(lower) {
        CellVerdict::ContainsFamily
    } else {
        CellVerdict::Other
    }
}

/// Lower and upper bounds for the cell of the zero point at `p`.
///
/// Exceptional types use their character tables. Types B and D use the
/// Littlewood-Richardson description of `(lam) x (0) (x) wedge(h)` and the
/// values on reflection classes, so no full table is built.
pub fn cm_cell_report(ty: CartanType, provider: &TableProvider, p: &ProjPoint) -> Result<CuspidalCellReport> {
    let classified = classify(ty, provider)?.at(p);
    let family: BTreeSet<IrrepLabel> =
        cuspidal_family(ty)?.map(|f| f.members).unwrap_or_default().into_iter().collect();
    let mut decompositions = Vec::new();
    let upper: BTreeSet<IrrepLabel> = if ty.is_exceptional() {
        let table = provider.table(ty)?;
        for s in &classified {
            let i = table.find(&s.to_string())?;
            let d = decompose_with_wedge(&table, i)?;
            decompositions.push((s.clone(), d.into_iter().map(|(j, m)| (table.label(j).clone(), m)).collect()));
        }
        zero_n_set(&table, p).into_iter().collect()
    } else {
        for s in &classified {
            decompositions.push((s.clone(), classical_decomposition(ty, s)?));
        }
        let mut chars = BnCharacters::new();
        let mut set = BTreeSet::new();
        if !matches!(ty, CartanType::A(_)) {
            for l in classical_labels(ty) {
                if n_vanishes_at(&classical_n_form(ty, &l, &mut chars)?, p) {
                    set.insert(l);
                }
            }
        }
        set
    };
    let lower: BTreeSet<IrrepLabel> = decompositions.iter().flat_map(|(_, d)| d.iter().map(|x| x.0.clone())).collect();
    let verdict = verdict(&lower, &upper, &family);
    Ok(CuspidalCellReport {
        cartan_type: ty,
        point: p.clone(),
        classified,
        decompositions,
        lower,
        upper,
        family,
        verdict,
    })
}

/// `sigma (x) wedge(h)` for a classical one-W-type `sigma`.
///
/// `(0) x (lam^t)` is the sign twist of `(lam) x (0)`, and `wedge(h)` is
/// self-dual up to the sign twist, so its constituents are the twists of
/// those of `(lam) x (0)`. In type D the B-side result is restricted.
pub fn classical_decomposition(ty: CartanType, sigma: &IrrepLabel) -> Result<Vec<(IrrepLabel, u64)>> {
    let bip = sigma.bipartition().ok_or_else(|| Error::InvalidLabel(format!("{sigma} is not a bipartition")))?;
    let (lam, twisted) = if bip.right.is_empty() {
        (bip.left.clone(), false)
    } else if bip.left.is_empty() {
        (bip.right.transpose(), true)
    } else {
        return Err(Error::InvalidLabel(format!("{sigma} has no single-partition form")));
    };
    let mut acc: BTreeMap<IrrepLabel, u64> = BTreeMap::new();
    for (b, m) in wedge_constituents(&lam)? {
        let b = if twisted { b.sgn_twist() } else { b };
        match ty {
            CartanType::D(_) if b.left == b.right => {
                *acc.entry(IrrepLabel::Split(b.left.clone(), true)).or_default() += m;
                *acc.entry(IrrepLabel::Split(b.left, false)).or_default() += m;
            }
            CartanType::D(_) => *acc.entry(IrrepLabel::Bipartition(canonical_d(&b))).or_default() += m,
            _ => *acc.entry(IrrepLabel::Bipartition(b)).or_default() += m,
        }
    }
    // in D_n, (lam) x (0) restricted from B_n is irreducible, and the B-side
    // tensor product restricts term by term
    Ok(acc.into_iter().collect())
}

/// `sum mult * dim`, for checking a decomposition against `dim(sigma) 2^rank`.
pub fn total_dimension(table: &CharacterTable, d: &[(IrrepLabel, u64)]) -> Result<u64> {
    d.iter().try_fold(0u64, |acc, (l, m)| {
        let i = table.find(&l.to_string())?;
        Ok(acc + m * table.irrep(i).dim().to_u64().unwrap_or(0))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{classical_table, tensor_decompose, wedge_total};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[2]), &p(&[2, 2])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])).unwrap(), 1);
        assert!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])).is_err());
    }

    /// `sum_nu c^lam_{mu nu} dim(nu)` equals the number of skew tableaux.
    #[test]
    fn lr_sums_to_skew_dimension() {
        let lam = p(&[3, 2, 1]);
        for mu in lam.subdiagrams() {
            let total: u64 = Partition::all(lam.size() - mu.size())
                .iter()
                .map(|nu| lr_coefficient(&mu, nu, &lam).unwrap() * nu.dimension().to_u64().unwrap())
                .sum();
            // f^{lam/mu} by counting standard fillings
            let f = count_skew(&lam, &mu);
            assert_eq!(total, f, "{mu}");
        }
    }

    fn count_skew(lam: &Partition, mu: &Partition) -> u64 {
        if lam == mu {
            return 1;
        }
        // remove a corner of lam outside mu
        (0..lam.len())
            .filter(|&r| lam.part(r) > mu.part(r) && lam.part(r) > lam.part(r + 1))
            .map(|r| {
                let mut parts = lam.parts().to_vec();
                parts[r] -= 1;
                count_skew(&Partition::new(parts), mu)
            })
            .sum()
    }

    #[test]
    fn b2_column() {
        let got: Vec<String> =
            rectangle_constituents(&p(&[1, 1])).unwrap().into_iter().map(|(b, m)| format!("{m}{b}")).collect();
        let mut got = got;
        got.sort();
        assert_eq!(got, vec!["1(0)x(2)", "1(1)x(1)", "1(1,1)x(0)"]);
        assert!(rectangle_constituents(&p(&[2, 1])).is_err());
    }

    #[test]
    fn symbols() {
        let s = bn_symbol(&Bipartition::new(p(&[2, 1]), p(&[2, 1])), 2).unwrap();
        assert_eq!(s.top, vec![0, 2, 4]);
        assert_eq!(s.bottom, vec![1, 3]);
        assert!(is_cuspidal_symbol(&s));
        let s = bn_symbol(&Bipartition::new(p(&[1, 1]), p(&[])), 1).unwrap();
        assert!(is_cuspidal_symbol(&s));
        assert!(!is_cuspidal_symbol(&bn_symbol(&Bipartition::new(p(&[2]), p(&[])), 1).unwrap()));
        assert!(bn_symbol(&Bipartition::new(p(&[1, 1, 1]), p(&[])), 1).is_err());
        let s = dn_symbol(&Bipartition::new(p(&[2, 1]), p(&[1])), 2).unwrap();
        assert_eq!((s.top, s.bottom), (vec![1, 3], vec![0, 2]));
    }

    #[test]
    fn classical_families() {
        assert_eq!(cuspidal_bipartitions(CartanType::B(2)).len(), 3);
        assert_eq!(cuspidal_bipartitions(CartanType::B(6)).len(), 10);
        assert_eq!(cuspidal_bipartitions(CartanType::D(4)).len(), 3);
        assert!(cuspidal_family(CartanType::B(3)).unwrap().is_none());
        assert!(cuspidal_family(CartanType::A(5)).unwrap().is_none());
        for ty in [CartanType::B(2), CartanType::B(6), CartanType::D(4), CartanType::D(9)] {
            let f = cuspidal_family(ty).unwrap().unwrap();
            assert!(f.members.contains(&f.special), "{ty}");
            for m in &f.members {
                assert!(f.members.contains(&f.sgn(m)));
            }
        }
    }

    /// The rectangle constituents are exactly the cuspidal family.
    #[test]
    fn rectangle_constituents_are_the_family() {
        for d in 1..=3 {
            let lam = Partition::rectangle(d + 1, d);
            let got: BTreeSet<IrrepLabel> = rectangle_constituents(&lam)
                .unwrap()
                .into_iter()
                .map(|(b, m)| {
                    assert_eq!(m, 1);
                    IrrepLabel::Bipartition(b)
                })
                .collect();
            let fam: BTreeSet<IrrepLabel> = cuspidal_bipartitions(CartanType::B(d * d + d)).into_iter().collect();
            assert_eq!(got, fam, "d = {d}");
        }
    }

    #[test]
    fn classical_decomposition_matches_tables() {
        for (ty, sigma) in [
            (CartanType::B(2), "(1,1)x(0)"),
            (CartanType::B(2), "(0)x(2)"),
            (CartanType::B(4), "(2,2)x(0)"),
            (CartanType::D(4), "(2,2)x(0)"),
        ] {
            let t = classical_table(ty).unwrap();
            let i = t.find(sigma).unwrap();
            let by_table = tensor_decompose(&t, &t.class_function(i).product(&wedge_total(&t))).unwrap();
            let mut a: Vec<(String, u64)> = by_table.into_iter().map(|(j, m)| (t.label(j).to_string(), m)).collect();
            let mut b: Vec<(String, u64)> =
                classical_decomposition(ty, t.label(i)).unwrap().into_iter().map(|(l, m)| (l.to_string(), m)).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{ty} {sigma}");
        }
    }

    #[test]
    fn classical_n_matches_table() {
        for ty in [CartanType::B(3), CartanType::D(4), CartanType::D(5)] {
            let t = classical_table(ty).unwrap();
            let mut chars = BnCharacters::new();
            for i in 0..t.irreps().len() {
                let nf = classical_n_form(ty, t.label(i), &mut chars).unwrap();
                assert_eq!(nf, n_invariant(&t, i), "{ty} {}", t.label(i));
            }
        }
    }

    #[test]
    fn families_file_parses() {
        let fams = parse_families(BUNDLED_FAMILIES).unwrap();
        assert_eq!(fams.len(), 5);
        let g2 = &fams[0];
        assert_eq!(g2.members.len(), 4);
        assert_eq!(g2.sgn(&IrrepLabel::named("φ{1,3}'")), IrrepLabel::named("φ{1,3}''"));
        assert!(parse_families("family F4 special 1_1 members 2_1 sgn_pairs\n").is_err());
    }
}
